"""
Module containing (n, k, l)-separating families.

A separating family is a list of vertex subsets such that for all
disjoint A, B with |A| <= k and |B| <= l some member F contains B
and misses A. Members are preimages h^-1(Y) of l-sets of colors Y
under the functions h of an (n, k + l)-splitter.
"""

from itertools import combinations
from math import comb
import numpy as np
from fastlog import log
from engine.errors.user_input import InvalidParams, CapExceeded
from .splitter import build_splitter, VERIFY_CAP


class SeparatingFamily:
    """
    An (n, k, ell)-separating family.

    Attributes:
        n {int} -- Universe size.
        k {int} -- Size bound of the excluded set A.
        ell {int} -- Size bound of the included set B.
        members {list[frozenset[int]]} -- Distinct member subsets.

    """

    def __init__(self, n, k, ell, members):
        """
        Initialize a family from its members.

        See class docstring for details on constructor arguments.
        """
        self.n = n
        self.k = k
        self.ell = ell
        self.members = [frozenset(m) for m in members]

    @property
    def t(self):
        """Number of members."""
        return len(self.members)

    def membership(self):
        """
        Boolean membership matrix.

        Returns:
            numpy.ndarray -- Array of shape (t, n), True where v is in F_i.

        """
        matrix = np.zeros((self.t, self.n), dtype=bool)

        for i, member in enumerate(self.members):
            matrix[i, list(member)] = True

        return matrix

    def containing(self, vertices):
        """Indices of the members containing every given vertex."""
        vertices = set(vertices)
        return [i for i, m in enumerate(self.members) if vertices <= m]

    def words(self):
        """Words needed to store every member explicitly."""
        return sum(len(m) for m in self.members)

    def serialize(self):
        """Text snapshot: a header line then `index v1 v2 ...` per member."""
        lines = [f"separating {self.n} {self.k} {self.ell}"]
        lines.extend(f"{i} " + " ".join(str(v) for v in sorted(m))
                     for i, m in enumerate(self.members))
        return "\n".join(lines) + "\n"


def build_separating(n, k, ell):
    """
    Build an (n, k, ell)-separating family.

    Arguments:
        n {int} -- Universe size.
        k {int} -- Size bound of the excluded sets.
        ell {int} -- Size bound of the included sets.

    Raises:
        InvalidParams -- If k < 0, ell < 0, k + ell < 1 or n < k + ell.

    Returns:
        SeparatingFamily -- The family.

    """
    if k < 0 or ell < 0 or k + ell < 1 or n < k + ell:
        raise InvalidParams(
            f"Separating family needs n >= k + l >= 1 (n={n}, k={k}, l={ell})")

    if ell == 0:
        return SeparatingFamily(n, k, ell, [frozenset()])

    splitter = build_splitter(n, k + ell)
    seen = {}

    for i in range(splitter.t):
        classes = splitter.color_classes(i)

        for colors in combinations(range(splitter.range_size), ell):
            mask = 0

            for c in colors:
                mask |= classes[c]

            if mask and mask not in seen:
                seen[mask] = frozenset(v for v in range(n) if mask >> v & 1)

    family = SeparatingFamily(n, k, ell, seen.values())
    log.debug(f"Separating ({n}, {k}, {ell}): {family.t} members "
              f"from {splitter.t} splitter functions")

    return family


def graph_separating(n, k):
    """
    Build the family used to cover vertex pairs while avoiding k-sets.

    For every pair u, v and every set X of at most k other vertices
    some member contains u and v and misses X.

    Raises:
        InvalidParams -- If n < k + 2.

    """
    if n < k + 2:
        raise InvalidParams(f"Pair separation needs n >= k + 2 (n={n}, k={k})")

    return build_separating(n, k, 2)


def verify_separating(family, n, k, ell, cap=VERIFY_CAP):
    """
    Check the separating property exhaustively.

    Only maximal witnesses (|A| = k, |B| = ell) are enumerated,
    smaller ones are implied when n >= k + ell.

    Arguments:
        family {SeparatingFamily} -- Family to check.
        n {int} -- Universe size.
        k {int} -- Size of the excluded sets.
        ell {int} -- Size of the included sets.
        cap {int} -- Maximum number of (A, B) pairs to enumerate.

    Raises:
        CapExceeded -- If the number of pairs exceeds the cap.

    Returns:
        bool -- True iff every disjoint (A, B) is separated by some member.

    """
    if n < k + ell:
        raise InvalidParams(f"No witnesses with n < k + l (n={n})")

    required = comb(n, k) * comb(n - k, ell)

    if required > cap:
        raise CapExceeded(f"Separation check needs {required} pairs",
                          cap, required)

    matrix = family.membership()

    if len(matrix) == 0:
        return False

    for a in combinations(range(n), k):
        avoiding = matrix[~matrix[:, list(a)].any(axis=1)]

        if len(avoiding) == 0:
            return False

        if ell == 0:
            continue

        rest = [v for v in range(n) if v not in set(a)]
        pairs = np.array(list(combinations(rest, ell)), dtype=np.int64)

        if not avoiding[:, pairs].all(axis=2).any(axis=0).all():
            return False

    return True
