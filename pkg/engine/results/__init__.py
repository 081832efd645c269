"""Package containing classes for storing solver results and run reports."""

YES = "YES"
NO = "NO"
# A solution was found but failed verification on the real input.
NO_CONFIDENCE = "NO_CONFIDENCE"
