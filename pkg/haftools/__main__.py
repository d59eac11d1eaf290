from haftools.main import main

main()
