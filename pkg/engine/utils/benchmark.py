"""Module containing helper functions used for benchmarking pipeline phases."""

from time import time
from fastlog import log

_start_time = time()
_last_time = _start_time


def time_snap(text=None):
    """
    Log the time since the last call to this function in seconds.

    It is possible to supply a message to print along with the time.

    Arguments:
        text {str} (optional) -- Message to print with the time.

    Returns:
        float -- Seconds elapsed since the previous snapshot.

    """
    global _last_time
    current_time = time()
    elapsed = current_time - _last_time
    log.debug(f"{elapsed:.4f} seconds - {text}")
    _last_time = current_time
    return elapsed


def wall_time():
    """Seconds since the module was first imported."""
    return time() - _start_time
