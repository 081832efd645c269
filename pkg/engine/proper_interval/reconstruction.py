"""
Module containing the multi-pass reconstruction of proper interval graphs.

Every connected component is reconstructed recursively. A call on a
connected vertex set V with a partial order < draws a middle vertex v*,
splits V into L (left of N[v*]), M = N[v*] and R (right of N[v*]),
orders the begin points of M from degree counts, recurses on L and R in
shared passes and merges the three models. Every merged model is checked
against the stream before it is returned, so an accepted model is exact.
"""

from collections import defaultdict
from itertools import permutations
import math
from fastlog import log
from engine.errors.analysis import NoInstance, ReconstructionFailure, \
    SketchFailure
from engine.errors.user_input import InvalidParams
from engine.sketches.connectivity import ConnectivitySketch
from engine.stream.replay import run_parallel
from engine.utils.config import Settings
from engine.utils.randomness import rng_for, seed_for
from . import BEGIN, END
from .consumers import DegreeSplit, NeighborhoodCollector, verify_model
from .interval_order import IntervalOrder, PartialOrder
from .middle import inspect_middle

LEFT, MIDDLE, RIGHT = 0, 1, 2


def piv_pass_bound(n, attempts):
    """Pass allowance 5 * s * log_{10/9}(n), plus the outer component and check passes."""
    if n <= 1:
        return 2

    return math.ceil(5 * attempts * max(1.0, math.log(n, 10 / 9))) + 2


def _closed_neighborhood(v, pool):
    """One-pass procedure returning N[v] inside `pool`."""
    collector = NeighborhoodCollector(v, pool)
    yield [collector]
    return (collector.neighborhood() & pool) | {v}


def _choose(pool, score, extremes, d_m):
    """
    Vertex of `extremes` with the best score over `pool`, fewest M-neighbors first.

    Raises:
        NoInstance -- If no extreme vertex reaches the best score.

    """
    best = max(score[u] for u in pool)
    candidates = [u for u in extremes if score[u] == best]

    if not candidates:
        raise NoInstance("No end vertex of N[v*] complies with the order")

    return min(candidates, key=lambda u: (d_m[u], u))


def _name_sides(components, middle, order):
    """
    Decide which component of G - N[v*] lies left of N[v*].

    A naming is valid if for every u < w either u is left, w is right,
    or both are in the middle.

    Raises:
        NoInstance -- If neither naming is valid.

    """
    first, second = (list(components) + [set(), set()])[:2]
    pairs = order.pairs(first | second | middle)

    for left, right in ((first, second), (second, first)):
        if all(u in left or w in right or (u in middle and w in middle)
               for u, w in pairs):
            return left, right

    raise NoInstance("No side assignment of G - N[v*] complies with the order")


def _anchor(middle, order, d_l, d_m, d_r, has_left, has_right):
    """
    Procedure returning N[a] inside M for the leftmost vertex a of M.

    With an empty L the rightmost vertex b is found first and a is taken
    among the vertices of M outside N[b]. Otherwise b is taken among the
    vertices outside N[a].

    Raises:
        NoInstance -- If no extreme vertex of the order can play a or b.

    """
    if has_right and not has_left:
        b = _choose(middle, d_r, order.maximal(middle), d_m)
        near_b = yield from _closed_neighborhood(b, middle)
        pool = (middle - near_b) or middle
        a = _choose(pool, d_l, order.minimal(pool), d_m)
        return (yield from _closed_neighborhood(a, middle))

    a = _choose(middle, d_l, order.minimal(middle), d_m)
    near = yield from _closed_neighborhood(a, middle)
    pool = (middle - near) or middle
    b = _choose(pool, d_r, order.maximal(pool), d_m)
    log.debug(f"M runs from {a} to {b}")

    return near


def _middle_order(middle, order, near, d_l, d_m, d_r):
    """
    Begin order of the vertices of M.

    Inside N[a] begin points follow increasing d_M, outside N[a]
    decreasing d_M, and N[a] comes first. More L-neighbors or fewer
    R-neighbors mean an earlier begin point.
    """
    po = order.restricted(middle)

    for u, w in permutations(sorted(middle), 2):
        if d_l[u] > d_l[w] or d_r[u] < d_r[w] or \
                (u in near and w not in near) or \
                (u in near and w in near and d_m[u] < d_m[w]) or \
                (u not in near and w not in near and d_m[u] > d_m[w]):
            po.add(u, w)

    return po.linear_extension(middle)


def _assemble(sides, center, m_order, perm_l, perm_r, d_m, d_r):
    """
    Merge the models of L, M and R into one endpoint order.

    The end point of every vertex is assigned a gap: the number of
    begin points placed before it. Ends sharing a gap follow the order
    of their begin points.

    Raises:
        NoInstance -- If some interval would end before it begins.

    """
    left, middle, right = sides
    starts = perm_l.begin_order() + m_order + perm_r.begin_order()
    rank = {v: i for i, v in enumerate(starts, 1)}
    n_l, n_m = len(left), len(middle)
    gaps = {}

    for u in left:
        gaps[u] = n_l + d_m[u] if d_m[u] else perm_l.begins_before_end(u)

    for u in right:
        gaps[u] = n_l + n_m + perm_r.begins_before_end(u)

    for u in middle:
        if d_r[u]:
            gaps[u] = n_l + n_m + d_r[u]
        elif rank[u] > rank[center]:
            gaps[u] = n_l + n_m
        else:
            gaps[u] = n_l + min(d_m[u] + 1, n_m)

    ends = defaultdict(list)

    for u, gap in gaps.items():
        if gap < rank[u]:
            raise NoInstance(f"Interval of {u} would end before it begins")

        ends[gap].append(u)

    tokens = []

    for i, v in enumerate(starts, 1):
        tokens.append((BEGIN, v))
        tokens.extend((END, u) for u in sorted(ends[i], key=rank.get))

    return IntervalOrder(tokens)


def _annotated(vertices, order, seed, path, attempts, c, strict):
    """
    Procedure reconstructing a connected G[vertices] complying with `order`.

    Raises:
        NoInstance -- If no such proper interval model exists.
        ReconstructionFailure -- If no middle vertex was drawn.

    Returns:
        generator -- Procedure returning an IntervalOrder.

    """
    vertices = sorted(vertices)
    n = len(vertices)

    if n == 0:
        return IntervalOrder([])

    if n == 1:
        return IntervalOrder([(BEGIN, vertices[0]), (END, vertices[0])])

    rng = rng_for(seed, "middle", *path)

    for attempt in range(attempts):
        center = vertices[int(rng.integers(n))]
        report = yield from inspect_middle(
            vertices, center, seed_for(seed, "inspect", attempt, *path),
            c, strict)

        if report is not None and report.is_middle:
            break
    else:
        raise ReconstructionFailure(
            f"No middle vertex among {attempts} draws over {n} vertices")

    middle = report.neighborhood
    left, right = _name_sides(report.components, middle, order)

    parts = dict.fromkeys(left, LEFT)
    parts.update(dict.fromkeys(middle, MIDDLE))
    parts.update(dict.fromkeys(right, RIGHT))
    split = DegreeSplit(parts)
    yield [split]

    d_l, d_m, d_r = (split.degrees(part) for part in (LEFT, MIDDLE, RIGHT))
    near = yield from _anchor(middle, order, d_l, d_m, d_r,
                              bool(left), bool(right))
    m_order = _middle_order(middle, order, near, d_l, d_m, d_r)

    perm_l, perm_r = yield from run_parallel(
        _annotated(left, order.refined(left, d_m.get), seed,
                   path + (LEFT,), attempts, c, strict),
        _annotated(right, order.refined(right, lambda u: -d_m[u]), seed,
                   path + (RIGHT,), attempts, c, strict))

    model = _assemble((left, middle, right), report.center, m_order,
                      perm_l, perm_r, d_m, d_r)

    if not model.is_proper():
        raise NoInstance(f"Merged model of {n} vertices has nested intervals")

    if not (yield from verify_model(model)):
        raise NoInstance(f"Merged model of {n} vertices disagrees with "
                         "the stream")

    return model


def _components(vertices, seed, attempts, c, strict):
    """
    Procedure returning the connected components of G[vertices].

    Unfinished sketches are retried with fresh seeds, up to `attempts` passes.

    Raises:
        ReconstructionFailure -- If no sketch finished.

    """
    if len(vertices) < 2:
        return [set(vertices)]

    for attempt in range(attempts):
        sketch = ConnectivitySketch(vertices, seed_for(seed, "components",
                                                       attempt), c, True)
        yield [sketch]

        try:
            return sorted(sketch.components(), key=min)
        except SketchFailure as ex:
            if strict:
                raise

            log.warning(f"Retrying component sketch: {ex.message}")

    raise ReconstructionFailure(
        f"No component sketch finished in {attempts} passes")


def reconstruct_piv(vertices, seed=0, attempts=None, c=3, strict=False):
    """
    Pass procedure reconstructing G[vertices] as a proper interval graph.

    Arguments:
        vertices {iterable[int]} -- Vertex subset to reconstruct.
        seed {int} -- Seed of every random draw and sketch.
        attempts {int} -- Middle-vertex draws s per recursive call
                          (None: ceil(log_5(n^2))).
        c {int} -- Sketch failure parameter.
        strict {bool} -- Raise SketchFailure on an unfinished forest.

    Raises:
        InvalidParams -- If attempts < 1.
        NoInstance -- If G[vertices] is not a proper interval graph.
        ReconstructionFailure -- If some call drew no middle vertex.

    Returns:
        generator -- Procedure returning an IntervalOrder of G[vertices].

    """
    vertices = sorted(vertices)

    if attempts is None:
        attempts = Settings().attempts_for(len(vertices))

    if attempts < 1:
        raise InvalidParams(f"Middle-vertex attempts must be >= 1, got {attempts}")

    if not vertices:
        return IntervalOrder([])

    components = yield from _components(vertices, seed, attempts, c, strict)

    orders = yield from run_parallel(
        *(_annotated(component, PartialOrder(), seed, (i,), attempts, c,
                     strict)
          for i, component in enumerate(components)))
    model = IntervalOrder.concat(orders)

    if not (yield from verify_model(model)):
        raise NoInstance("Concatenated component models disagree with the "
                         "stream")

    log.debug(f"Proper interval model of {len(vertices)} vertices, "
              f"{len(components)} component(s)")

    return model
