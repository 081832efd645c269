"""Package containing static solvers, class membership checks and brute-force oracles."""
