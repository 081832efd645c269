"""Package containing various utilities used by the engine."""
