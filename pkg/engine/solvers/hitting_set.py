"""Module containing the branching d-Hitting Set solver."""

from engine.errors.user_input import InvalidParams
from engine.results.solve_result import SolveResult


def _branch(sets, budget, chosen, stats):
    """Hit the first unhit set by each of its elements in turn."""
    stats["branches"] += 1
    unhit = next((s for s in sets if not s & chosen), None)

    if unhit is None:
        return chosen

    if budget == 0:
        return None

    for element in sorted(unhit):
        found = _branch(sets, budget - 1, chosen | {element}, stats)

        if found is not None:
            return found

    return None


def solve_hitting_set(universe, sets, k):
    """
    Decide whether at most k elements hit every set.

    Budgets are tried in increasing order, so a YES solution is minimum.
    Each round branches at most d ways to depth at most k.

    Arguments:
        universe {iterable} -- Allowed elements.
        sets {iterable[iterable]} -- Sets to hit.
        k {int} -- Budget.

    Raises:
        InvalidParams -- If a set is empty or leaves the universe.

    Returns:
        SolveResult -- YES with a minimum hitting set, or NO.

    """
    universe = frozenset(universe)
    family = sorted({frozenset(s) for s in sets},
                    key=lambda s: (len(s), sorted(s)))

    for s in family:
        if not s:
            raise InvalidParams("Cannot hit an empty set")

        if not s <= universe:
            raise InvalidParams(f"Set {sorted(s)} leaves the universe")

    stats = {"branches": 0, "sets": len(family)}

    for budget in range(k + 1):
        found = _branch(family, budget, frozenset(), stats)

        if found is not None:
            return SolveResult.yes(found, **stats)

    return SolveResult.no(**stats)
