"""Immutable simple graphs with bitmask adjacency rows.

Every other module works on these graphs.  Rows are plain Python ints,
one per vertex, so set operations (intersection with a window, closed
neighborhoods, cross-edge checks) are single big-int operations.
Thresholds like eps*n are always compared in exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def as_fraction(value) -> Fraction:
    """Convert int / Fraction / 'a/b' string to an exact Fraction.

    Floats are rejected: thresholds must stay exact.
    """
    if isinstance(value, float):
        raise TypeError("eps must be exact (int, Fraction or 'a/b' string), not float")
    return Fraction(value)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Immutable after construction; adjacency is a tuple of bitmask rows.
    """

    __slots__ = ("n", "adj", "name")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), name: str = ""):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.adj = tuple(rows)
        self.name = name

    @classmethod
    def from_rows(cls, n: int, rows: Iterable[int], name: str = "") -> "Graph":
        """Trusted constructor from prebuilt rows (caller guarantees symmetry)."""
        g = cls.__new__(cls)
        g.n = n
        g.adj = tuple(rows)
        g.name = name
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def closed_row(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edge_count_within(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"Graph(n={self.n}, m={self.edge_count()}{label})"


def complement(g: Graph) -> Graph:
    """Complement graph: edge (u,v), u != v, iff g has none."""
    full = g.full_mask()
    rows = [(~g.adj[v]) & full & ~(1 << v) for v in range(g.n)]
    return Graph.from_rows(g.n, rows, name=f"co-{g.name}" if g.name else "")


def check_vertex_set(g: Graph, vertices: Iterable[int]) -> set[int]:
    vs = set(vertices)
    for v in vs:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return vs


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int], list[int]]:
    """Induced subgraph on `vertices`, relabeled 0..|s|-1.

    Returns (subgraph, host->sub map, sub->host list) so certificates can be
    translated back to original ids.
    """
    vs = sorted(check_vertex_set(g, vertices))
    to_sub = {v: i for i, v in enumerate(vs)}
    rows = []
    for v in vs:
        row = 0
        for i, u in enumerate(vs):
            row |= (g.adj[v] >> u & 1) << i
        rows.append(row)
    return Graph.from_rows(len(vs), rows), to_sub, vs


def neighborhood(g: Graph, vertices: Iterable[int], closed: bool = False) -> set[int]:
    """N(X), vertices at distance exactly one from X; N(X) | X when closed."""
    xmask = mask_of(check_vertex_set(g, vertices))
    nmask = 0
    for v in bits(xmask):
        nmask |= g.adj[v]
    if closed:
        return set(bits(nmask | xmask))
    return set(bits(nmask & ~xmask))


def connected_components(g: Graph) -> list[set[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            grown = 0
            for v in bits(frontier):
                grown |= g.adj[v]
            frontier = grown & ~comp
            comp |= grown
        seen |= comp
        out.append(set(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def degree_stats(g: Graph) -> tuple[int, list[int]]:
    degrees = [row.bit_count() for row in g.adj]
    return (max(degrees) if degrees else 0), degrees


def is_sparse(g: Graph, eps) -> bool:
    """Max degree at most eps*n, compared exactly: deg*den <= num*n."""
    eps = as_fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError("eps must satisfy 0 < eps <= 1")
    max_deg, _ = degree_stats(g)
    return max_deg * eps.denominator <= eps.numerator * g.n
