"""
Module containing the `EnginePlan` class and its construction.

A plan fixes three splitter families and the subgraph index X, the
vertex subsets whose induced subgraphs get a recognizer:

    G[f1^-1(J)] for f1 in F1 and |J| <= d,
    G[f1^-1(J)] - f2^-1(i) for f2 in F2 and every color i,
    G[f3^-1(J)] for f3 in F3 and |J| <= d.

Subsets are vertex bitmasks and every distinct mask gets exactly one
recognizer, whatever the number of descriptors resolving to it.
"""

from itertools import combinations
from math import comb
from fastlog import log
from engine.derand.splitter import build_splitter
from engine.errors.analysis import BudgetPlanExceedsMemoryCap
from engine.errors.user_input import InvalidParams


def popcount(mask):
    """Number of vertices in a bitmask."""
    return bin(mask).count("1")


def mask_vertices(mask):
    """Sorted vertex ids of a bitmask."""
    vertices = []
    v = 0

    while mask:
        if mask & 1:
            vertices.append(v)

        mask >>= 1
        v += 1

    return vertices


def color_sets(range_size, d):
    """Every set of at most d colors out of range_size."""
    for size in range(min(d, range_size) + 1):
        yield from combinations(range(range_size), size)


def candidate_bound(d, range_size, functions):
    """
    Bound on |Z*|: every (f1, J) contributes at most d vertices.

    Arguments:
        d {int} -- Largest obstruction size.
        range_size {int} -- Number of colors of F1.
        functions {int} -- Number of functions of F1.

    """
    return d * sum(comb(range_size, j) for j in range(d + 1)) * functions


class EnginePlan:
    """
    Splitter families and the distinct subsets needing a recognizer.

    Attributes:
        n {int} -- Number of vertices.
        k {int} -- Budget.
        spec {ObstructionSpec} -- Forbidden induced subgraphs.
        alpha {int} -- max(dk, k + d).
        beta {int} -- Size of the sets F3 must split.
        f1 {SplitterFamily} -- (n, alpha)-splitter.
        f2 {SplitterFamily} -- (n, d + 1)-splitter.
        f3 {SplitterFamily} -- (n, beta)-splitter.
        masks {list[int]} -- Distinct subsets that get a recognizer.
        descriptors {int} -- Number of members of X before deduplication.
        smallest {int} -- Vertex count of the smallest obstruction.

    """

    def __init__(self, n, k, spec, alpha, beta, f1, f2, f3):
        """
        Initialize a plan from its families.

        See class docstring for details on constructor arguments.
        """
        self.n = n
        self.k = k
        self.spec = spec
        self.alpha = alpha
        self.beta = beta
        self.f1 = f1
        self.f2 = f2
        self.f3 = f3
        self.masks = []
        self.descriptors = 0
        self.smallest = min(g.number_of_nodes() for g in spec.graphs)

    @property
    def d(self):
        return self.spec.d

    def first_level(self):
        """Pairs (f1 index, mask of G_{f1,J}) over every J with |J| <= d."""
        for a in range(self.f1.t):
            for colors in color_sets(self.f1.range_size, self.d):
                yield a, self.f1.preimage(a, colors)

    def third_level(self):
        """Masks of G_{f3,J} over every f3 and |J| <= d."""
        for c in range(self.f3.t):
            for colors in color_sets(self.f3.range_size, self.d):
                yield self.f3.preimage(c, colors)

    def removal_mask(self, mask, b, v):
        """Mask of G_{f1,J} - f2_b^-1(f2_b(v))."""
        color = self.f2.colorings()[b][v]
        return mask & ~self.f2.color_classes(b)[color]

    def needs_recognizer(self, mask):
        """Subsets smaller than every obstruction are in the class."""
        return popcount(mask) >= self.smallest

    def words(self):
        """Words held by the families and the mask table."""
        return self.f1.words() + self.f2.words() + self.f3.words() + \
            len(self.masks)

    def dict(self):
        return {"n": self.n, "k": self.k, "d": self.d,
                "alpha": self.alpha, "beta": self.beta,
                "f1": self.f1.t, "f2": self.f2.t, "f3": self.f3.t,
                "descriptors": self.descriptors,
                "recognizers": len(self.masks)}


def plan(n, k, spec, plan_cap=None):
    """
    Build the families and enumerate the subgraph index.

    Arguments:
        n {int} -- Number of vertices.
        k {int} -- Budget (at least 1, with d * k <= n).
        spec {ObstructionSpec} -- Forbidden induced subgraphs.
        plan_cap {int} -- Maximum number of recognizers (None: no cap).

    Raises:
        InvalidParams -- If k < 1 or d * k > n.
        BudgetPlanExceedsMemoryCap -- If more than plan_cap recognizers
                                      would be allocated.

    Returns:
        EnginePlan -- The plan.

    """
    d = spec.d

    if k < 1 or d * k > n:
        raise InvalidParams(
            f"Engine plan needs 1 <= k and d * k <= n (n={n}, k={k}, d={d})")

    alpha = max(d * k, k + d)
    f1 = build_splitter(n, min(n, alpha))
    f2 = build_splitter(n, min(n, d + 1))
    beta = min(n, candidate_bound(d, f1.range_size, f1.t) + d)
    f3 = build_splitter(n, beta)

    result = EnginePlan(n, k, spec, alpha, beta, f1, f2, f3)
    distinct = set()
    first = 0

    for _, mask in result.first_level():
        first += 1
        distinct.add(mask)

        for b in range(f2.t):
            for color in range(f2.range_size):
                distinct.add(mask & ~f2.color_classes(b)[color])

        if plan_cap is not None and len(distinct) > plan_cap:
            raise BudgetPlanExceedsMemoryCap(
                f"plan exceeds {plan_cap} recognizers "
                f"(alpha={alpha}, |F1|={f1.t}, |F2|={f2.t})")

    third = 0

    for mask in result.third_level():
        third += 1
        distinct.add(mask)

    result.masks = sorted(m for m in distinct if result.needs_recognizer(m))
    result.descriptors = first * (1 + f2.t * f2.range_size) + third

    if plan_cap is not None and len(result.masks) > plan_cap:
        raise BudgetPlanExceedsMemoryCap(
            f"plan needs {len(result.masks)} recognizers, cap is {plan_cap}")

    log.debug(f"Engine plan: alpha={alpha}, beta={beta}, |F1|={f1.t}, "
              f"|F2|={f2.t}, |F3|={f3.t}, |X|={result.descriptors}, "
              f"{len(result.masks)} recognizers")

    return result
