"""Disjoint-set forest used by both 0-dimensional persistence computations."""


class UnionFind:
    """Union-find with path compression.

    Each root carries a birth key; ``merge`` keeps the root with the smaller
    key (the elder component) and returns the absorbed root.
    """

    def __init__(self, length: int):
        self.parents = list(range(length))
        self.births: list[tuple[float, int]] = [(0.0, i) for i in range(length)]

    def set_birth(self, i: int, value: float) -> None:
        self.births[i] = (value, i)

    def find(self, i: int) -> int:
        root = i
        while self.parents[root] != root:
            root = self.parents[root]
        while i != root:
            parent = self.parents[i]
            self.parents[i] = root
            i = parent
        return root

    def merge(self, i: int, j: int) -> int | None:
        """Merge the components of ``i`` and ``j``.

        Returns:
            The root of the younger component, or None if already joined
        """
        i = self.find(i)
        j = self.find(j)
        if i == j:
            return None
        if self.births[j] < self.births[i]:
            i, j = j, i
        self.parents[j] = i
        return j
