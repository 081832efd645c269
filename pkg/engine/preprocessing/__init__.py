"""Package containing stream file parsing, dumping and graph materialization."""
