from rexlab.main import main

main()
