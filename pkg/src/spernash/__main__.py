from spernash.cli import main

main()
