"""Module containing the `SpaceLedger` class used for space accounting."""

from engine.errors.stream import SpaceCapExceeded


class SpaceLedger:
    """
    Word-count accounting of every consumer that takes part in a run.

    A word is a machine word of O(log n) bits. The event buffer used
    for replaying passes belongs to the harness and is never charged.
    Consumers are recorded pass by pass, while long-lived structures
    such as splitter families are pinned with `charge` until released.

    Attributes:
        current {dict[str: int]} -- Words held per label right now.
        pinned {dict[str: int]} -- Words charged outside of passes.
        peaks {dict[str: int]} -- Largest value ever seen per label.
        peak_total {int} -- Largest total ever held at once.
        cap {int} -- Optional cap on the total (None: no cap).

    """

    def __init__(self, cap=None):
        """
        Initialize an empty ledger.

        Arguments:
            cap {int} -- Optional cap on the total number of words.

        """
        self.current = {}
        self.pinned = {}
        self.peaks = {}
        self.peak_total = 0
        self.cap = cap

    def _update(self, current):
        self.current = current

        for label, words in current.items():
            if words > self.peaks.get(label, 0):
                self.peaks[label] = words

        total = self.total()
        self.peak_total = max(self.peak_total, total)

        if self.cap is not None and total > self.cap:
            raise SpaceCapExceeded(
                f"space cap of {self.cap} words exceeded ({total} words)")

    def record(self, usage):
        """
        Record the words held by the consumers of one pass.

        Consumer labels missing from `usage` are considered released,
        pinned charges stay.

        Arguments:
            usage {dict[str: int]} -- Words held per consumer label.

        Raises:
            SpaceCapExceeded -- If the total goes over the cap.

        """
        current = dict(usage)

        for label, words in self.pinned.items():
            current[label] = current.get(label, 0) + words

        self._update(current)

    def charge(self, label, words):
        """
        Pin words to a label until `release` is called.

        Raises:
            SpaceCapExceeded -- If the total goes over the cap.

        """
        self.pinned[label] = self.pinned.get(label, 0) + words
        current = dict(self.current)
        current[label] = current.get(label, 0) + words
        self._update(current)

    def release(self, label):
        """Release everything held by a label."""
        self.pinned.pop(label, None)
        current = dict(self.current)
        current.pop(label, None)
        self.current = current

    def total(self):
        """Total number of words held right now."""
        return sum(self.current.values())

    def dict(self):
        """Dictionary snapshot used in run reports."""
        return {"peak_total": self.peak_total,
                "peaks": dict(sorted(self.peaks.items()))}
