"""Package containing the linear sketches: sparse recovery, connectivity and the bipartite double cover."""
