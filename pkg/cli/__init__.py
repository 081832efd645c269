"""Package containing implementation of the application's CLI (command line interface)."""
