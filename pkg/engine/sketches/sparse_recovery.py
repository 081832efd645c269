"""
Module containing the deterministic s-sparse recovery structure.

The state keeps the power sums S_j = sum(w_z * z^j), j = 1..2s, over a
prime field, where z = item + 1 and w_z is the net multiplicity of the
item, plus the exact sum of multiplicities. While at most s items are
live, the syndromes determine them: Berlekamp-Massey yields the
polynomial whose roots are the live items, the roots are found by
evaluation over the universe and every candidate answer is re-encoded
and compared before it is returned.
"""

import numpy as np
from engine.errors.user_input import InvalidParams
from engine.utils.arithmetic import next_prime

_MAX_PRIME = 2 ** 31 - 1
_ROOT_CHUNK = 1 << 20


def _berlekamp_massey(sequence, p):
    """
    Shortest linear recurrence generating a sequence over GF(p).

    Returns:
        list[int] -- Connection polynomial [1, c1, ..., cL].

    """
    current, previous = [1], [1]
    length, shift, last = 0, 1, 1

    for i, s in enumerate(sequence):
        discrepancy = s

        for j in range(1, length + 1):
            discrepancy = (discrepancy + current[j] * sequence[i - j]) % p

        if discrepancy == 0:
            shift += 1
            continue

        factor = discrepancy * pow(last, p - 2, p) % p
        saved = current[:]

        if len(current) < len(previous) + shift:
            current += [0] * (len(previous) + shift - len(current))

        for j, b in enumerate(previous):
            current[j + shift] = (current[j + shift] - factor * b) % p

        if 2 * length <= i:
            length = i + 1 - length
            previous, last, shift = saved, discrepancy, 1
        else:
            shift += 1

    return (current + [0] * (length + 1))[:length + 1]


def _roots_in_universe(coefficients, universe, p):
    """
    Encoded items z in [1, universe] that are roots of a polynomial.

    Arguments:
        coefficients {list[int]} -- Coefficients, highest degree first.

    """
    roots = []

    for start in range(1, universe + 1, _ROOT_CHUNK):
        x = np.arange(start, min(start + _ROOT_CHUNK, universe + 1),
                      dtype=np.int64)
        value = np.zeros_like(x)

        for c in coefficients:
            value = (value * x + c) % p

        roots.extend(x[value == 0].tolist())

    return roots


def _solve_mod(matrix, rhs, p):
    """Solve a nonsingular linear system over GF(p) (None if singular)."""
    size = len(rhs)
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]

    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] % p), None)

        if pivot is None:
            return None

        rows[col], rows[pivot] = rows[pivot], rows[col]
        inverse = pow(rows[col][col], p - 2, p)
        rows[col] = [v * inverse % p for v in rows[col]]

        for r in range(size):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [(a - factor * b) % p
                           for a, b in zip(rows[r], rows[col])]

    return [row[-1] for row in rows]


class SparseRecoveryState:
    """
    Linear sketch recovering up to `capacity` live items exactly.

    Attributes:
        capacity {int} -- Maximum number s of live items recovered.
        universe {int} -- Items are integers in [0, universe).
        p {int} -- Prime field modulus, p > universe.
        syndromes {list[int]} -- Power sums S_1..S_2s modulo p.
        count {int} -- Exact sum of multiplicities.

    """

    def __init__(self, capacity, universe, p=None):
        """
        Initialize an empty state.

        Raises:
            InvalidParams -- If the universe does not fit below 2^31.

        """
        if capacity < 0 or universe < 1:
            raise InvalidParams("Sparse recovery needs capacity >= 0 "
                                "and a nonempty universe")

        self.capacity = capacity
        self.universe = universe
        self.p = p if p is not None else next_prime(universe + 2)

        if self.p > _MAX_PRIME or self.p <= universe:
            raise InvalidParams(f"No usable prime field for universe {universe}")

        self.syndromes = [0] * (2 * capacity)
        self.count = 0

    def update(self, item, sign=1):
        """
        Add `sign` copies of an item.

        Arguments:
            item {int} -- Item in [0, universe).
            sign {int} -- Net multiplicity change (usually +1 or -1).

        Returns:
            SparseRecoveryState -- The updated state (self).

        """
        z = item + 1
        power = 1

        for j in range(len(self.syndromes)):
            power = power * z % self.p
            self.syndromes[j] = (self.syndromes[j] + sign * power) % self.p

        self.count += sign
        return self

    def __add__(self, other):
        """Component-wise sum of two states over the same field."""
        if (self.capacity, self.universe, self.p) != \
                (other.capacity, other.universe, other.p):
            raise InvalidParams("Cannot merge incompatible sparse recovery states")

        merged = SparseRecoveryState(self.capacity, self.universe, self.p)
        merged.syndromes = [(a + b) % self.p
                            for a, b in zip(self.syndromes, other.syndromes)]
        merged.count = self.count + other.count
        return merged

    def __eq__(self, other):
        """States are equal when their parameters and contents are."""
        return isinstance(other, SparseRecoveryState) and \
            self.serialize() == other.serialize()

    def _encode(self, multiplicities):
        """Syndromes of a {z: weight} dictionary."""
        syndromes = [0] * len(self.syndromes)

        for z, weight in multiplicities.items():
            power = 1

            for j in range(len(syndromes)):
                power = power * z % self.p
                syndromes[j] = (syndromes[j] + weight * power) % self.p

        return syndromes

    def _locate(self):
        """Encoded live items found from the syndromes (None on failure)."""
        connection = _berlekamp_massey(self.syndromes, self.p)
        length = len(connection) - 1

        if length > self.capacity:
            return None

        roots = _roots_in_universe(connection, self.universe, self.p)
        return roots if len(roots) == length else None

    def recover_counts(self):
        """
        Recover the live items with their net multiplicities.

        Returns:
            dict[int: int] -- Item to multiplicity, or None when more than
                              `capacity` items are live or decoding fails.

        """
        if not any(self.syndromes):
            return {} if self.count == 0 else None

        roots = self._locate()

        if roots is None:
            return None

        length = len(roots)
        vandermonde = [[pow(z, j + 1, self.p) for z in roots]
                       for j in range(length)]
        weights = _solve_mod(vandermonde, self.syndromes[:length], self.p)

        if weights is None:
            return None

        half = self.p // 2
        signed = {z: (w - self.p if w > half else w)
                  for z, w in zip(roots, weights)}

        if 0 in signed.values() or sum(signed.values()) != self.count or \
                self._encode(signed) != self.syndromes:
            return None

        return {z - 1: w for z, w in signed.items()}

    def recover(self):
        """
        Recover the set of live items.

        Returns:
            set[int] -- The live items, or None (FAIL) when more than
                        `capacity` items are live or the state does not
                        describe a set.

        """
        if self.count < 0 or self.count > self.capacity:
            return None

        if not any(self.syndromes):
            return set() if self.count == 0 else None

        roots = self._locate()

        if roots is None or len(roots) != self.count or \
                self._encode({z: 1 for z in roots}) != self.syndromes:
            return None

        return {z - 1 for z in roots}

    def words(self):
        """Words held: the syndromes, the count and the parameters."""
        return len(self.syndromes) + 4

    def serialize(self):
        """Text snapshot `sr p capacity universe count S_1 ... S_2s`."""
        return " ".join(str(v) for v in
                        ["sr", self.p, self.capacity, self.universe,
                         self.count, *self.syndromes])

    @staticmethod
    def parse(text):
        """Rebuild a state from its `serialize()` snapshot."""
        tokens = text.split()

        if not tokens or tokens[0] != "sr":
            raise ValueError("Not a sparse recovery snapshot")

        p, capacity, universe, count = (int(t) for t in tokens[1:5])
        state = SparseRecoveryState(capacity, universe, p)
        state.count = count
        state.syndromes = [int(t) for t in tokens[5:]]

        if len(state.syndromes) != 2 * capacity:
            raise ValueError("Wrong number of syndromes")

        return state
