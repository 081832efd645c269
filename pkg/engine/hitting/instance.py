"""Module containing the `HittingSetInstance` class and its text dump."""


class HittingSetInstance:
    """
    A d-Hitting Set instance equivalent to a vertex deletion instance.

    Attributes:
        universe {list[int]} -- Sorted candidate vertices Z*.
        sets {list[frozenset[int]]} -- Vertex sets to hit.
        k {int} -- Budget.

    """

    def __init__(self, universe, sets, k):
        """
        Initialize a new instance.

        See class docstring for details on constructor arguments.
        """
        self.universe = sorted(universe)
        self.sets = sorted((frozenset(s) for s in sets),
                           key=lambda s: (len(s), sorted(s)))
        self.k = k

    @property
    def trivially_no(self):
        """An empty set cannot be hit."""
        return any(not s for s in self.sets)

    def words(self):
        return len(self.universe) + sum(len(s) for s in self.sets) + 1

    def serialize(self):
        """
        Text dump for external solvers.

        The first lines are `u <|Z*|>`, `k <k>` and `ids <vertex ids>`,
        then every set is a line of indices into the ids.
        """
        index = {v: i for i, v in enumerate(self.universe)}
        lines = [f"u {len(self.universe)}", f"k {self.k}",
                 " ".join(["ids"] + [str(v) for v in self.universe])]
        lines.extend(" ".join(str(index[v]) for v in sorted(s))
                     for s in self.sets)
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse(text):
        """
        Rebuild an instance from its dump.

        Raises:
            ValueError -- If the dump is malformed.

        """
        lines = text.splitlines()

        if len(lines) < 3 or not lines[0].startswith("u ") or \
                not lines[1].startswith("k ") or \
                not lines[2].startswith("ids"):
            raise ValueError("Missing hitting instance header")

        ids = [int(v) for v in lines[2].split()[1:]]

        if len(ids) != int(lines[0].split()[1]):
            raise ValueError("Universe size does not match the ids line")

        sets = [frozenset(ids[int(i)] for i in line.split())
                for line in lines[3:]]
        return HittingSetInstance(ids, sets, int(lines[1].split()[1]))

    def dict(self):
        return {"universe": self.universe, "k": self.k,
                "sets": [sorted(s) for s in self.sets]}


def compressed_size_bits(instance):
    """Size of the serialized instance in bits."""
    return 8 * len(instance.serialize().encode())


def dump_hitting_instance(instance, path):
    """Write the instance dump to a file."""
    with open(path, "w") as f:
        f.write(instance.serialize())
