from pymycielski.cli import main

main()
