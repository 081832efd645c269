"""Package containing vertex deletion to hereditary classes that have a multi-pass reconstruction."""
