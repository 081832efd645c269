"""Package containing the turnstile stream model, its space ledger and the pass runner."""

INSERT = "+"
DELETE = "-"

INSERTION_ONLY = "ins"
TURNSTILE = "turn"
