"""
Module containing the vertex subset sampling primitive of the cut pipelines.

ell = ceil(64 * q * k^3 * ln n) subsets are drawn, each by keeping every
vertex independently with probability 1 / (2k). For every set S of at
most k vertices, the subsets avoiding S still cover, with high
probability, some witness of every witness family S misses.
"""

import math
import numpy as np
from fastlog import log
from engine.errors.user_input import InvalidParams
from engine.utils.randomness import rng_for


def sample_count(n, k, q=2):
    """
    Number of subsets drawn by the sampling primitive.

    Arguments:
        n {int} -- Number of vertices.
        k {int} -- Budget the samples must withstand.
        q {int} -- Exponent bounding the number of witness families by n^q.

    Returns:
        int -- ceil(64 * q * k^3 * ln n), at least 1.

    """
    return max(1, math.ceil(64 * q * k ** 3 * math.log(n)))


class SampleSpec:
    """
    Sampled vertex subsets V_1..V_ell.

    Attributes:
        n {int} -- Number of vertices.
        k {int} -- Budget the samples were drawn for.
        q {int} -- Sampling exponent.
        seed {int} -- Seed of the draw.
        count {int} -- Number of subsets drawn (ell, after capping).
        probability {float} -- Inclusion probability 1 / (2k).
        capped {bool} -- Whether ell_max cut the count down.
        subsets {list[frozenset[int]]} -- The subsets, in draw order.

    """

    def __init__(self, n, k, q, seed, subsets, capped=False):
        """
        Initialize a sample from its subsets.

        See class docstring for details on constructor arguments.
        """
        self.n = n
        self.k = k
        self.q = q
        self.seed = seed
        self.subsets = [frozenset(s) for s in subsets]
        self.count = len(self.subsets)
        self.probability = 1 / (2 * k)
        self.capped = capped

    def membership(self):
        """
        Boolean membership matrix.

        Returns:
            numpy.ndarray -- Array of shape (count, n), True where v is in V_i.

        """
        matrix = np.zeros((self.count, self.n), dtype=bool)

        for i, subset in enumerate(self.subsets):
            matrix[i, list(subset)] = True

        return matrix

    def distinct(self, min_size=2):
        """
        Distinct subsets with at least `min_size` vertices.

        Equal subsets induce equal subgraphs, so one sketch serves all
        of them.

        Returns:
            dict[frozenset[int]: int] -- Subset to the index of its first draw.

        """
        first = {}

        for i, subset in enumerate(self.subsets):
            if len(subset) >= min_size and subset not in first:
                first[subset] = i

        return first

    def avoiding(self, removed):
        """Indices of the subsets disjoint from `removed`."""
        removed = set(removed)
        return [i for i, s in enumerate(self.subsets) if not s & removed]

    def words(self):
        """Words needed to store every subset explicitly."""
        return sum(len(s) for s in self.subsets)

    def dict(self):
        return {"n": self.n,
                "k": self.k,
                "q": self.q,
                "seed": self.seed,
                "count": self.count,
                "probability": self.probability,
                "capped": self.capped}


def sample_subsets(n, k, q=2, seed=0, l_max=None):
    """
    Run the sampling primitive.

    Arguments:
        n {int} -- Number of vertices.
        k {int} -- Budget, sets the inclusion probability 1 / (2k).
        q {int} -- Sampling exponent.
        seed {int} -- Seed of the draw.
        l_max {int} -- Optional cap on the number of subsets.

    Raises:
        InvalidParams -- If n, k or q is below 1, or l_max is below 1.

    Returns:
        SampleSpec -- The drawn subsets.

    """
    if n < 1 or k < 1 or q < 1:
        raise InvalidParams(
            f"Sampling needs n, k, q >= 1 (n={n}, k={k}, q={q})")

    if l_max is not None and l_max < 1:
        raise InvalidParams(f"Subset cap must be >= 1, got {l_max}")

    count = sample_count(n, k, q)
    capped = l_max is not None and count > l_max

    if capped:
        log.warning(f"Sampling {l_max} of {count} subsets "
                        f"(n={n}, k={k}, q={q})")
        count = l_max

    rng = rng_for(seed, "sampling", k)
    probability = 1 / (2 * k)
    subsets = [np.flatnonzero(rng.random(n) < probability).tolist()
               for _ in range(count)]

    log.debug(f"Sampled {count} subsets of expected size "
                  f"{n * probability:.1f}")
    return SampleSpec(n, k, q, seed, subsets, capped)
