"""Bitset-backed simple undirected graphs.

Vertices are dense integers 0..n-1.  Each adjacency row is a Python int
used as a bitset, so neighborhood intersection is a single ``&`` and
cardinality is ``int.bit_count()``.  Graphs are immutable: queries are
pure and transforms return new graphs.
"""

from __future__ import annotations

from collections.abc import Iterable

from .errors import CapacityError, InputError

#: Vertex capacity.  Keeps every row within one or two machine words and
#: bounds the exhaustive algorithms downstream; raise only deliberately.
MAX_VERTICES = 64


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits_of(mask: int) -> list[int]:
    """Unpack a bitmask into a sorted list of vertex ids."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Immutable simple graph with symmetric bit-matrix adjacency."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(f"n={n} exceeds capacity MAX_VERTICES={MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u} is not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        self.n = n
        self.rows = tuple(rows)

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Graph":
        """Build from adjacency bitset rows, validating symmetry and loops."""
        rows = tuple(rows)
        n = len(rows)
        if n > MAX_VERTICES:
            raise CapacityError(f"n={n} exceeds capacity MAX_VERTICES={MAX_VERTICES}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InputError(f"row {v} has bits beyond vertex {n - 1}")
            if row >> v & 1:
                raise InputError(f"self-loop at vertex {v} is not allowed")
        for u in range(n):
            for v in bits_of(rows[u]):
                if not rows[v] >> u & 1:
                    raise InputError(f"adjacency not symmetric at ({u},{v})")
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        return g

    @classmethod
    def _from_rows_unchecked(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # internal fast path: caller guarantees symmetry / no loops / capacity
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        return g

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def neighbors(self, v: int) -> frozenset[int]:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")
        return frozenset(bits_of(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InputError(f"pair ({u},{v}) out of range for n={self.n}")
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1) << (u + 1)  # keep v > u only
            for v in bits_of(row):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def non_edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if not self.rows[u] >> v & 1:
                    out.append((u, v))
        return out

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        # labeled equality; use canonical_form for isomorphism
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count()})"


def degree(g: Graph, v: int) -> int:
    """|N(v)|."""
    return g.degree(v)


def common_neighborhood_mask(g: Graph, mask: int) -> int:
    """Bitmask of vertices adjacent to every vertex in ``mask`` (nonempty)."""
    if mask == 0:
        raise InputError("common neighborhood of the empty set is undefined")
    acc = g.vertex_mask
    m = mask
    while m:
        low = m & -m
        acc &= g.rows[low.bit_length() - 1]
        if not acc:
            return 0
        m ^= low
    return acc


def common_neighborhood(g: Graph, xs: Iterable[int]) -> frozenset[int]:
    """Vertices adjacent to all of ``xs``; for a pair this is the codegree set."""
    mask = mask_of(xs)
    if mask & ~g.vertex_mask:
        raise InputError("vertex set not contained in the graph")
    return frozenset(bits_of(common_neighborhood_mask(g, mask)))


def codegree(g: Graph, u: int, v: int) -> int:
    """|N(u) ∩ N(v)|."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise InputError(f"pair ({u},{v}) out of range for n={g.n}")
    return (g.rows[u] & g.rows[v]).bit_count()


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges."""
    full = g.vertex_mask
    rows = tuple((~r & full) & ~(1 << v) for v, r in enumerate(g.rows))
    return Graph._from_rows_unchecked(g.n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all edges between the two parts."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(
            f"join would have n={n} vertices, beyond MAX_VERTICES={MAX_VERTICES}"
        )
    top = ((1 << g2.n) - 1) << g1.n
    low = (1 << g1.n) - 1
    rows = [r | top for r in g1.rows]
    rows += [(r << g1.n) | low for r in g2.rows]
    return Graph._from_rows_unchecked(n, tuple(rows))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union with g2's vertices shifted past g1's."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise CapacityError(
            f"union would have n={n} vertices, beyond MAX_VERTICES={MAX_VERTICES}"
        )
    rows = list(g1.rows) + [r << g1.n for r in g2.rows]
    return Graph._from_rows_unchecked(n, tuple(rows))


def duplicate_vertex(g: Graph, v: int, k: int = 1) -> Graph:
    """Add ``k`` new vertices, each adjacent to exactly N(v).

    The copies are adjacent neither to ``v`` nor to each other, so
    triangle-freeness is preserved.
    """
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n={g.n}")
    if k < 1:
        raise InputError(f"duplication count must be >= 1, got {k}")
    n = g.n + k
    if n > MAX_VERTICES:
        raise CapacityError(
            f"duplication would have n={n} vertices, beyond MAX_VERTICES={MAX_VERTICES}"
        )
    nv = g.rows[v]
    clones = mask_of(range(g.n, n))
    rows = [r | (clones if nv >> u & 1 else 0) for u, r in enumerate(g.rows)]
    rows += [nv] * k
    return Graph._from_rows_unchecked(n, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabeled to 0..k-1 in sorted order."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.n):
        raise InputError("vertex set not contained in the graph")
    pos = {v: i for i, v in enumerate(vs)}
    rows = [0] * len(vs)
    for v in vs:
        for u in bits_of(g.rows[v]):
            if u in pos:
                rows[pos[v]] |= 1 << pos[u]
    return Graph._from_rows_unchecked(len(vs), tuple(rows))
