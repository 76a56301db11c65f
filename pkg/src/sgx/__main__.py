from sgx.cli import main

main()
