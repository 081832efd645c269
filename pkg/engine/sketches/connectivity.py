"""
Module containing the linear connectivity sketch.

Every vertex keeps, for each Boruvka round and each repetition, a stack
of l0-sampling cells over nested subsampling levels. A cell holds the
signed edge count, the signed sum of edge ids and a fingerprint sum, so
that the sum of the cells of a vertex set only retains the edges leaving
the set. A cell whose boundary holds exactly one edge decodes that edge.
"""

from math import ceil, log2
import numpy as np
from fastlog import log
from engine.errors.analysis import SketchFailure
from engine.errors.user_input import InvalidParams
from engine.stream.replay import Consumer
from engine.utils.randomness import rng_for

# Prime modulus of hashes and fingerprints.
P = 2 ** 31 - 1


class _DisjointSets:
    """Union-find over 0..size-1 with path halving."""

    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        parent = self.parent

        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]

        return x

    def union(self, x, y):
        """Merge the sets of x and y, False if they were already merged."""
        x, y = self.find(x), self.find(y)

        if x == y:
            return False

        self.parent[max(x, y)] = min(x, y)
        return True


def forest_components(vertices, forest):
    """
    Connected components spanned by a forest.

    Arguments:
        vertices {iterable[int]} -- All vertices (isolated ones included).
        forest {iterable[tuple[int, int]]} -- Forest edges.

    Returns:
        list[set[int]] -- Components ordered by their smallest vertex.

    """
    vertices = sorted(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    sets = _DisjointSets(len(vertices))

    for u, v in forest:
        sets.union(index[u], index[v])

    groups = {}

    for v in vertices:
        groups.setdefault(sets.find(index[v]), set()).add(v)

    return sorted(groups.values(), key=min)


class ConnectivitySketch(Consumer):
    """
    Turnstile spanning forest sketch of the subgraph induced by a vertex set.

    Attributes:
        vertices {frozenset[int]} -- Vertices whose induced edges are sketched.
        ids {list[int]} -- Sketch rows (the vertices, sorted).
        seed {int} -- Seed of the hash functions.
        c {int} -- Failure parameter (repetitions per round, extra rounds).
        strict {bool} -- Raise SketchFailure instead of returning a
                         partial forest.
        rounds {int} -- Number of Boruvka rounds.
        reps {int} -- Independent samplers per round.
        levels {int} -- Subsampling levels per sampler.

    """

    def __init__(self, vertices, seed, c=3, strict=True, ids=None):
        """
        Allocate an empty sketch.

        Arguments:
            vertices {iterable[int]} -- Vertex subset to sketch.
            seed {int} -- Seed of the hash functions.
            c {int} -- Failure parameter.
            strict {bool} -- Fail instead of returning partial forests.
            ids {iterable[int]} -- Row ids (defaults to the vertices).

        """
        super().__init__()

        if c < 1:
            raise InvalidParams(f"Sketch failure parameter must be >= 1, got {c}")

        self.vertices = frozenset(vertices)
        self.ids = sorted(self.vertices if ids is None else ids)
        self.local = {v: i for i, v in enumerate(self.ids)}
        self.rows = len(self.ids)
        self.seed = seed
        self.c = c
        self.strict = strict

        self.rounds = ceil(log2(max(self.rows, 2))) + c + 1
        self.reps = c
        self.levels = ceil(log2(max(self.rows * self.rows, 2))) + 1

        rng = rng_for(seed)
        shape = (self.rounds, self.reps)
        self._a = rng.integers(1, P, size=shape, dtype=np.int64)
        self._b = rng.integers(0, P, size=shape, dtype=np.int64)
        self._f = rng.integers(0, P, size=(3,) + shape, dtype=np.int64)

        cells = (self.rows, self.rounds, self.reps, self.levels)
        self.cnt = np.zeros(cells, dtype=np.int64)
        self.idsum = np.zeros(cells, dtype=np.int64)
        self.fp = np.zeros(cells, dtype=np.int64)

    def _fingerprint(self, e, f2, f1, f0):
        """Fingerprint c2 * e^2 + c1 * e + c0 modulo P (broadcasting)."""
        e = e % P
        return (f2 * (e * e % P) % P + f1 * e % P + f0) % P

    def update(self, u, v, sign=1):
        """
        Insert (sign = 1) or delete (sign = -1) the edge {u, v}.

        Both endpoints must be sketch rows.
        """
        i, j = self.local[u], self.local[v]

        if i > j:
            i, j = j, i

        e = i * self.rows + j
        h = (self._a * (e % P) + self._b) % P
        lowest = h & -h
        depth = np.where(h == 0, self.levels - 1,
                         np.log2(np.maximum(lowest, 1)).astype(np.int64))
        mask = (np.arange(self.levels) <=
                np.minimum(depth, self.levels - 1)[..., None]).astype(np.int64)

        fp = self._fingerprint(e, *self._f)[..., None] * mask

        self.cnt[i] += sign * mask
        self.cnt[j] -= sign * mask
        self.idsum[i] += sign * e * mask
        self.idsum[j] -= sign * e * mask
        self.fp[i] = (self.fp[i] + sign * fp) % P
        self.fp[j] = (self.fp[j] - sign * fp) % P

    def on_event(self, event):
        """Apply a stream event if both endpoints are sketched."""
        if event.u in self.local and event.v in self.local:
            self.update(event.u, event.v, event.sign)

    def _aggregate(self, r, inverse, count):
        """Sum the round-r cells of every current component."""
        cnt = np.zeros((count, self.reps, self.levels), dtype=np.int64)
        idsum = np.zeros_like(cnt)
        fp = np.zeros_like(cnt)

        np.add.at(cnt, inverse, self.cnt[:, r])
        np.add.at(idsum, inverse, self.idsum[:, r])
        np.add.at(fp, inverse, self.fp[:, r])

        return cnt, idsum, fp % P

    @staticmethod
    def _is_open(cnt, idsum, fp):
        """Components whose level-0 cells still hold boundary edges."""
        return (cnt[:, :, 0] != 0).any(axis=1) | \
            (idsum[:, :, 0] != 0).any(axis=1) | (fp[:, :, 0] != 0).any(axis=1)

    def _labels(self, sets):
        """Component index of every row under the current merges."""
        roots = np.array([sets.find(i) for i in range(self.rows)],
                         dtype=np.int64)
        labels, inverse = np.unique(roots, return_inverse=True)
        return roots, labels, inverse.reshape(-1)

    def spanning_forest(self):
        """
        Extract a spanning forest of the sketched graph.

        Raises:
            SketchFailure -- If some component still has boundary edges
                             after the last round and the sketch is strict.

        Returns:
            list[tuple[int, int]] -- Forest edges as (smaller, larger) row ids.

        """
        sets = _DisjointSets(self.rows)
        forest = []

        if self.rows < 2:
            return forest

        for r in range(self.rounds):
            roots, labels, inverse = self._labels(sets)
            cnt, idsum, fp = self._aggregate(r, inverse, len(labels))
            open_ = self._is_open(cnt, idsum, fp)

            if not open_.any():
                return forest

            e = idsum * cnt
            valid = (np.abs(cnt) == 1) & (e >= 0) & \
                (e < self.rows * self.rows) & open_[:, None, None]
            e = np.where(valid, e, 0)
            first, second = e // self.rows, e % self.rows
            valid &= first < second

            f2, f1, f0 = (self._f[x, r][None, :, None] for x in range(3))
            valid &= (self._fingerprint(e, f2, f1, f0) * cnt) % P == fp

            for comp in np.flatnonzero(valid.any(axis=(1, 2))):
                reps, levels = np.nonzero(valid[comp])
                best = np.argmax(levels)
                i = int(first[comp, reps[best], levels[best]])
                j = int(second[comp, reps[best], levels[best]])

                # A decoded edge must leave the component.
                if (roots[i] == labels[comp]) == (roots[j] == labels[comp]):
                    continue

                if sets.union(i, j):
                    forest.append((self.ids[i], self.ids[j]))

        roots, labels, inverse = self._labels(sets)
        still_open = int(self._is_open(*self._aggregate(0, inverse,
                                                        len(labels))).sum())

        if still_open:
            message = f"{still_open} component(s) still open after " \
                      f"{self.rounds} rounds"

            if self.strict:
                raise SketchFailure(message)

            log.warning(f"Partial spanning forest: {message}")

        return forest

    def components(self):
        """Connected components (as sets of row ids) of the sketched graph."""
        return forest_components(self.ids, self.spanning_forest())

    def component_count(self):
        """Number of connected components (rows minus forest edges)."""
        return self.rows - len(self.spanning_forest())

    def _compatible(self, other):
        return isinstance(other, ConnectivitySketch) and \
            self.ids == other.ids and self.seed == other.seed and \
            self.c == other.c

    def __add__(self, other):
        """Sketch of the union of both sketched event sequences."""
        if not self._compatible(other):
            raise InvalidParams("Cannot merge incompatible connectivity sketches")

        merged = self.copy()
        merged.cnt = self.cnt + other.cnt
        merged.idsum = self.idsum + other.idsum
        merged.fp = (self.fp + other.fp) % P
        return merged

    def __eq__(self, other):
        """Sketches are equal when built alike and holding the same cells."""
        return self._compatible(other) and \
            (self.cnt == other.cnt).all() and \
            (self.idsum == other.idsum).all() and (self.fp == other.fp).all()

    def copy(self):
        """Independent copy of the sketch."""
        duplicate = object.__new__(type(self))
        duplicate.__dict__.update(self.__dict__)
        duplicate.cnt = self.cnt.copy()
        duplicate.idsum = self.idsum.copy()
        duplicate.fp = self.fp.copy()
        return duplicate

    def words(self):
        """Cells, hash parameters and row ids held by the sketch."""
        return 3 * self.cnt.size + 5 * self.rounds * self.reps + self.rows

    def serialize(self):
        """
        Text snapshot of the sketch state.

        Line 1 holds the modulus, the level count and the remaining
        parameters, line 2 the row ids, lines 3-5 the raw cell words.
        """
        lines = [f"conn {P} {self.levels} {self.rounds} {self.reps} "
                 f"{self.seed} {self.c}",
                 " ".join(str(v) for v in self.ids)]
        lines.extend(" ".join(str(int(x)) for x in array.ravel())
                     for array in (self.cnt, self.idsum, self.fp))
        return "\n".join(lines) + "\n"

    def load(self, text):
        """
        Restore cell words from a snapshot of a sketch built alike.

        Raises:
            ValueError -- If the snapshot does not match this sketch.

        """
        lines = text.splitlines()
        head = lines[0].split()

        if head[0] != "conn" or [int(x) for x in head[1:]] != \
                [P, self.levels, self.rounds, self.reps, self.seed, self.c] \
                or [int(v) for v in lines[1].split()] != self.ids:
            raise ValueError("Snapshot does not match the sketch parameters")

        for name, line in zip(("cnt", "idsum", "fp"), lines[2:5]):
            values = np.array([int(x) for x in line.split()], dtype=np.int64)
            setattr(self, name, values.reshape(self.cnt.shape))

        return self
