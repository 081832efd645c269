"""Package containing the sampling primitive and the one-pass cut pipelines (OCT, Subset FVS, Multiway Cut)."""
