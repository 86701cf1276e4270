from afgr.cli import main

main()
