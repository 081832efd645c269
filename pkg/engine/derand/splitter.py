"""
Module containing the construction of (n, k, k^2)-splitter families.

A splitter family is a list of functions [n] -> [k^2] such that every
k-subset of [n] is colored injectively by at least one of them.
Candidate functions are drawn from ((a * x + b) mod p) mod k^2 with
primes p in (n, 2n] and kept greedily while they cover some subset
that no earlier function colors injectively.
"""

from functools import lru_cache
from itertools import combinations
from math import comb, log2
import numpy as np
from fastlog import log
from engine.errors.user_input import InvalidParams, CapExceeded
from engine.utils.arithmetic import primes_between
from engine.utils.randomness import rng_for

# Default cap on exhaustive coverage checks (number of k-subsets).
VERIFY_CAP = 250_000

# Number of random k-subsets checked when exhaustive checks are too big.
SAMPLED_CHECKS = 100_000

# Number of hash candidates tried before falling back to table functions.
_MAX_CANDIDATES = 20_000


class SplitterFunction:
    """Base class of the members of a splitter family."""

    def colors(self, n):
        """
        Color of every vertex of [n].

        Returns:
            numpy.ndarray -- Integer array of length n.

        """
        raise NotImplementedError

    def definition(self):
        """Text definition used in family snapshots."""
        raise NotImplementedError

    def __call__(self, x):
        """Color of a single vertex."""
        return int(self.colors(x + 1)[x])

    @staticmethod
    def parse(definition):
        """
        Rebuild a function from its text definition.

        Raises:
            ValueError -- If the definition is not recognized.

        """
        tokens = definition.split()

        if tokens == ["const"]:
            return ConstantFunction()
        elif tokens == ["identity"]:
            return IdentityFunction()
        elif tokens and tokens[0] == "h" and len(tokens) == 5:
            return HashFunction(*(int(t) for t in tokens[1:]))
        elif tokens and tokens[0] == "table":
            return TableFunction([int(t) for t in tokens[1:]])

        raise ValueError(f"Unknown splitter function: \"{definition}\"")


class ConstantFunction(SplitterFunction):
    """Maps everything to color 0 (injective on every singleton)."""

    def colors(self, n):
        return np.zeros(n, dtype=np.int64)

    def __call__(self, x):
        return 0

    def definition(self):
        return "const"


class IdentityFunction(SplitterFunction):
    """Maps every vertex to its own color."""

    def colors(self, n):
        return np.arange(n, dtype=np.int64)

    def __call__(self, x):
        return x

    def definition(self):
        return "identity"


class HashFunction(SplitterFunction):
    """
    The function x -> ((a * x + b) mod p) mod m.

    Attributes:
        a {int} -- Multiplier, 1 <= a < p.
        b {int} -- Offset, 0 <= b < p.
        p {int} -- Prime modulus.
        m {int} -- Number of colors.

    """

    def __init__(self, a, b, p, m):
        self.a = a
        self.b = b
        self.p = p
        self.m = m

    def colors(self, n):
        x = np.arange(n, dtype=np.int64)
        return ((self.a * x + self.b) % self.p) % self.m

    def __call__(self, x):
        return ((self.a * x + self.b) % self.p) % self.m

    def definition(self):
        return f"h {self.a} {self.b} {self.p} {self.m}"


class TableFunction(SplitterFunction):
    """Explicit color table, used for subsets no hash candidate covered."""

    def __init__(self, table):
        self.table = list(table)

    def colors(self, n):
        return np.array(self.table[:n], dtype=np.int64)

    def __call__(self, x):
        return self.table[x]

    def definition(self):
        return "table " + " ".join(str(c) for c in self.table)


class SplitterFamily:
    """
    An (n, k, ell)-splitter family with ell = k^2.

    Attributes:
        n {int} -- Universe size.
        k {int} -- Size of the subsets that must be split.
        ell {int} -- Declared range size (k^2).
        functions {list[SplitterFunction]} -- Members of the family.
        range_size {int} -- Number of colors actually used
                            (n for the identity, 1 for the constant).

    """

    def __init__(self, n, k, functions, range_size=None):
        """
        Initialize a family from its members.

        See class docstring for details on constructor arguments.
        """
        self.n = n
        self.k = k
        self.ell = k * k
        self.functions = list(functions)
        self.range_size = self.ell if range_size is None else range_size
        self._classes = {}
        self._colorings = None

    @property
    def t(self):
        """Number of functions in the family."""
        return len(self.functions)

    @property
    def size_constant(self):
        """
        Measured constant C of the size bound C * k^6 * log k * log n.

        Logarithms below 1 are rounded up to 1.
        """
        return self.t / (max(1.0, self.k ** 6 * log2(max(self.k, 1))) *
                         max(1.0, log2(max(self.n, 1))))

    def colorings(self):
        """
        Colors of every vertex under every function.

        Returns:
            numpy.ndarray -- Array of shape (t, n).

        """
        if self._colorings is None:
            self._colorings = np.stack([f.colors(self.n)
                                        for f in self.functions]) \
                if self.functions else np.zeros((0, self.n), dtype=np.int64)

        return self._colorings

    def color_classes(self, i):
        """
        Vertex bitmask of every color class of function i.

        Returns:
            list[int] -- Entry c has bit v set iff f_i(v) = c.

        """
        if i not in self._classes:
            classes = [0] * self.range_size

            for v, c in enumerate(self.colorings()[i].tolist()):
                classes[c] |= 1 << v

            self._classes[i] = classes

        return self._classes[i]

    def preimage(self, i, colors):
        """Vertex bitmask of f_i^-1(colors)."""
        classes = self.color_classes(i)
        mask = 0

        for c in colors:
            mask |= classes[c]

        return mask

    def words(self):
        """Words needed to store the family's definitions."""
        return sum(len(f.definition().split()) for f in self.functions)

    def serialize(self):
        """
        Text snapshot of the family.

        The first line is `splitter n k range_size`, every other line is
        `index definition`.
        """
        lines = [f"splitter {self.n} {self.k} {self.range_size}"]
        lines.extend(f"{i} {f.definition()}"
                     for i, f in enumerate(self.functions))
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text):
        """
        Rebuild a family from its `serialize()` snapshot.

        Raises:
            ValueError -- If the snapshot is malformed.

        """
        lines = [line for line in text.splitlines() if line.strip()]
        head = lines[0].split()

        if len(head) != 4 or head[0] != "splitter":
            raise ValueError("Missing splitter header line")

        n, k, range_size = (int(v) for v in head[1:])
        functions = []

        for expected, line in enumerate(lines[1:]):
            index, definition = line.split(maxsplit=1)

            if int(index) != expected:
                raise ValueError(f"Unexpected function index {index}")

            functions.append(SplitterFunction.parse(definition))

        return SplitterFamily(n, k, functions, range_size)


def _random_subsets(n, k, count, rng):
    """Draw `count` random k-subsets of [n] as sorted rows."""
    rows = []
    have = 0

    while have < count:
        draw = np.sort(rng.integers(0, n, size=(2 * count, k)), axis=1)
        distinct = draw[(np.diff(draw, axis=1) != 0).all(axis=1)]
        rows.append(distinct)
        have += len(distinct)

    return np.concatenate(rows)[:count]


def witness_subsets(n, k, verify_cap=VERIFY_CAP,
                    sampled_checks=SAMPLED_CHECKS, rng=None):
    """
    The k-subsets against which coverage is checked.

    Every k-subset if there are at most `verify_cap` of them,
    otherwise `sampled_checks` random ones.

    Returns:
        tuple[numpy.ndarray, bool] -- Subsets as rows and whether
                                      the list is exhaustive.

    """
    if comb(n, k) <= verify_cap:
        return np.array(list(combinations(range(n), k)),
                        dtype=np.int64).reshape(-1, k), True

    rng = rng if rng is not None else rng_for(0, n, k)
    return _random_subsets(n, k, sampled_checks, rng), False


def injective_rows(colors, subsets):
    """
    Which subsets a coloring colors injectively.

    Arguments:
        colors {numpy.ndarray} -- Color of every vertex.
        subsets {numpy.ndarray} -- Subsets as rows of vertex ids.

    Returns:
        numpy.ndarray -- Boolean array, one entry per subset.

    """
    if subsets.shape[1] < 2:
        return np.ones(len(subsets), dtype=bool)

    picked = np.sort(colors[subsets], axis=1)
    return (np.diff(picked, axis=1) != 0).all(axis=1)


def _table_for(n, subset):
    """Table function coloring one subset with distinct colors."""
    table = [0] * n

    for color, v in enumerate(subset):
        table[v] = color

    return TableFunction(table)


@lru_cache(maxsize=256)
def build_splitter(n, k, verify_cap=VERIFY_CAP, sampled_checks=SAMPLED_CHECKS):
    """
    Build an (n, k, k^2)-splitter family.

    The construction is deterministic given (n, k). Coverage is certified
    on every k-subset when there are at most `verify_cap` of them,
    otherwise on `sampled_checks` random k-subsets.

    Arguments:
        n {int} -- Universe size.
        k {int} -- Size of the subsets to split.

    Raises:
        InvalidParams -- If k < 1 or k > n.

    Returns:
        SplitterFamily -- The family.

    """
    if k < 1 or k > n:
        raise InvalidParams(f"Splitter needs 1 <= k <= n (n={n}, k={k})")

    if k == 1:
        return SplitterFamily(n, k, [ConstantFunction()], 1)

    if k * k >= n:
        return SplitterFamily(n, k, [IdentityFunction()], n)

    m = k * k
    rng = rng_for(0, n, k)
    subsets, exhaustive = witness_subsets(n, k, verify_cap,
                                          sampled_checks, rng)
    uncovered = np.ones(len(subsets), dtype=bool)
    primes = primes_between(n, 2 * n)
    functions = []
    candidates = 0

    while uncovered.any() and candidates < _MAX_CANDIDATES:
        p = int(primes[rng.integers(len(primes))])
        f = HashFunction(int(rng.integers(1, p)), int(rng.integers(0, p)),
                         p, m)
        candidates += 1
        injective = injective_rows(f.colors(n), subsets)

        if (injective & uncovered).any():
            functions.append(f)
            uncovered &= ~injective

    while uncovered.any():
        row = subsets[np.flatnonzero(uncovered)[0]].tolist()
        f = _table_for(n, row)
        functions.append(f)
        uncovered &= ~injective_rows(f.colors(n), subsets)

    family = SplitterFamily(n, k, functions, m)
    log.debug(f"Splitter ({n}, {k}, {m}): {family.t} functions from "
              f"{candidates} candidates ({'exhaustive' if exhaustive else 'sampled'}"
              f" coverage, C = {family.size_constant:.3f})")

    return family


def verify_splitter(family, n, k, cap=VERIFY_CAP):
    """
    Check the splitter property over every k-subset of [n].

    Arguments:
        family {SplitterFamily} -- Family to check.
        n {int} -- Universe size.
        k {int} -- Subset size.
        cap {int} -- Maximum number of subsets to enumerate.

    Raises:
        CapExceeded -- If C(n, k) exceeds the cap.

    Returns:
        bool -- True iff every k-subset is colored injectively by some member.

    """
    required = comb(n, k)

    if required > cap:
        raise CapExceeded(f"Splitter check needs {required} subsets",
                          cap, required)

    if k == 0 or required == 0:
        return True

    subsets = np.array(list(combinations(range(n), k)),
                       dtype=np.int64).reshape(-1, k)
    covered = np.zeros(len(subsets), dtype=bool)

    for f in family.functions:
        covered |= injective_rows(f.colors(n), subsets)

        if covered.all():
            return True

    return bool(covered.all())
