from fusionring.cli import main

main()
