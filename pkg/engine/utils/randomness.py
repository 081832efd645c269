"""Module containing the seeding scheme shared by every randomized component."""

from numpy.random import SeedSequence, default_rng


def _entropy(key):
    """Non-negative integer entropy of an int or string key."""
    if isinstance(key, str):
        return int.from_bytes(key.encode(), "big")

    return int(key) & 0xFFFFFFFFFFFFFFFF


def rng_for(seed, *keys):
    """
    Derive an independent random generator from the run seed.

    The same `(seed, keys)` always produces the same stream of numbers,
    and different keys produce statistically independent streams.

    Arguments:
        seed {int} -- Run seed (usually the value of `--seed`).
        keys {int|string} -- Keys naming the component (sketch index, round...).

    Returns:
        numpy.random.Generator -- Generator for the component.

    """
    return default_rng(SeedSequence([_entropy(seed),
                                     *(_entropy(k) for k in keys)]))


def seed_for(seed, *keys):
    """Derive an integer child seed (63 bits) from the run seed."""
    return int(rng_for(seed, *keys).integers(0, 2 ** 63 - 1))
