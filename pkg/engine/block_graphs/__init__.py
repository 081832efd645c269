"""Package containing one-pass reconstruction of t-flow and t-block graphs and the Block Vertex Deletion solver."""
