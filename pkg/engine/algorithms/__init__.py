"""Package containing the problem tags, the pipeline runner, instance generators and solution verification."""

FVST = "fvst"
CVD = "cvd"
SVD = "svd"
TVD = "tvd"
BVD = "bvd"
PIVD = "pivd"
OCT = "oct"
SFVS = "sfvs"
MWC = "mwc"

PROBLEMS = [FVST, CVD, SVD, TVD, BVD, PIVD, OCT, SFVS, MWC]

# Problems solved by the finite-obstruction (hitting set) engine.
HITTING_PROBLEMS = [FVST, CVD, SVD, TVD]

DIRECTED_PROBLEMS = frozenset([FVST])
TERMINAL_PROBLEMS = frozenset([SFVS, MWC])
