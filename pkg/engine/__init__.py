"""Package containing the entire semi-streaming parameterized solving engine."""
