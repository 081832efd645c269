"""Package containing deterministic splitter and separating family constructions."""
