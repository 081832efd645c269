"""Module containing small prime-field helpers shared by the splitters and sketches."""


def is_prime(p):
    """Trial division primality test, meant for numbers below 2^31."""
    if p < 2:
        return False

    if p % 2 == 0:
        return p == 2

    i = 3

    while i * i <= p:
        if p % i == 0:
            return False

        i += 2

    return True


def next_prime(m):
    """Smallest prime that is at least m."""
    p = max(m, 2)

    while not is_prime(p):
        p += 1

    return p


def primes_between(low, high):
    """All primes in (low, high]."""
    return [p for p in range(low + 1, high + 1) if is_prime(p)]
