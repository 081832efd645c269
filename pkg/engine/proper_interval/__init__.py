"""Package containing the multi-pass reconstruction of proper interval graphs and the static deletion solver."""

# Tokens of interval endpoints.
BEGIN = "b"
END = "e"
