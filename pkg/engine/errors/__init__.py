"""Package containing all custom exceptions used by the application."""
