"""Saturation verdicts with witnesses.

A graph is F-saturated when it is F-free and adding any missing edge
creates a copy of F.  For F = K_s the per-edge test reduces to finding
an (s-2)-clique in the common neighborhood of the endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .counting import MAX_PATTERN_VERTICES, contains_subgraph, find_subgraph
from .errors import InputError, PreconditionError
from .graphs import Graph, bits_of


@dataclass(frozen=True)
class SaturationReport:
    """Verdict of F-freeness and F-saturation with concrete witnesses."""

    is_free: bool
    is_saturated: bool
    free_violation: frozenset[int] | None = None
    saturation_violation: tuple[int, int] | None = None

    def __post_init__(self):
        assert self.is_free == (self.free_violation is None)
        if self.is_saturated:
            assert self.is_free and self.saturation_violation is None


@dataclass(frozen=True)
class CliqueWitness:
    """An (s-2)-clique inside N(u,v) certifying that adding uv makes K_s."""

    u: int
    v: int
    s_set: frozenset[int]


def _find_clique(rows: tuple[int, ...], candidates: int, size: int) -> int:
    """Bitmask of one ``size``-clique within ``candidates``, or -1."""
    if size == 0:
        return 0
    if candidates.bit_count() < size:
        return -1
    m = candidates
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        sub = _find_clique(rows, rows[v] & m, size - 1)
        if sub >= 0:
            return sub | low
    return -1


def is_ks_free(g: Graph, s: int) -> tuple[bool, frozenset[int] | None]:
    """True iff g has no s-clique; otherwise also return one s-clique."""
    if s < 1:
        raise InputError(f"clique order must be >= 1, got s={s}")
    found = _find_clique(g.rows, g.vertex_mask, s)
    if found < 0:
        return True, None
    return False, frozenset(bits_of(found))


def creates_ks(g: Graph, u: int, v: int, s: int) -> bool:
    """True iff adding the non-edge uv would create a K_s."""
    if s < 2:
        raise InputError(f"clique order must be >= 2, got s={s}")
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise InputError(f"({u},{v}) is not a vertex pair of the graph")
    if g.rows[u] >> v & 1:
        raise InputError(f"({u},{v}) is already an edge")
    return _find_clique(g.rows, g.rows[u] & g.rows[v], s - 2) >= 0


def is_ks_saturated(g: Graph, s: int) -> SaturationReport:
    """Full K_s-saturation report; deterministic lowest-witness choices."""
    free, clique = is_ks_free(g, s)
    if not free:
        return SaturationReport(False, False, free_violation=clique)
    rows = g.rows
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if rows[u] >> v & 1:
                continue
            if _find_clique(rows, rows[u] & rows[v], s - 2) < 0:
                return SaturationReport(True, False, saturation_violation=(u, v))
    return SaturationReport(True, True)


def is_h_saturated(g: Graph, h: Graph) -> SaturationReport:
    """Saturation report for an arbitrary pattern (h.n <= 8, >= 1 edge).

    Re-runs the embedding oracle per candidate edge; fine at small n.
    """
    if h.n > MAX_PATTERN_VERTICES:
        raise InputError(
            f"pattern has {h.n} vertices, beyond the {MAX_PATTERN_VERTICES} cap"
        )
    if h.edge_count() == 0:
        raise InputError("saturation pattern needs at least one edge")
    if contains_subgraph(g, h):
        return SaturationReport(False, False, free_violation=find_subgraph(g, h))
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.rows[u] >> v & 1:
                continue
            added = list(g.rows)
            added[u] |= 1 << v
            added[v] |= 1 << u
            if not contains_subgraph(Graph._from_rows_unchecked(g.n, tuple(added)), h):
                return SaturationReport(True, False, saturation_violation=(u, v))
    return SaturationReport(True, True)


def clique_witness(g: Graph, u: int, v: int, s: int) -> CliqueWitness:
    """First (s-2)-clique in N(u,v) in lexicographic subset order.

    Requires uv to be a non-edge of a K_s-saturated graph; raises
    PreconditionError when no witness exists.
    """
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise InputError(f"({u},{v}) is not a vertex pair of the graph")
    if g.rows[u] >> v & 1:
        raise InputError(f"({u},{v}) is already an edge")
    common = bits_of(g.rows[u] & g.rows[v])
    k = s - 2
    if k == 0:
        return CliqueWitness(u, v, frozenset())
    rows = g.rows
    for subset in combinations(common, k):
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                if not rows[subset[i]] >> subset[j] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return CliqueWitness(u, v, frozenset(subset))
    raise PreconditionError(
        f"no K_{s - 2} in N({u},{v}): the graph is not K_{s}-saturated"
    )


@dataclass(frozen=True)
class WitnessHypergraph:
    """The (s-1)-uniform witness hypergraph of a vertex v.

    One edge {u} ∪ S_u per vertex u outside N[v], where S_u is the
    clique witness for the non-edge uv; S_u ⊆ N(v) because a common
    neighborhood of u and v lies inside N(v).
    """

    center: int
    s: int
    n: int
    ground: frozenset[int]
    edges: tuple[frozenset[int], ...]
    outside: tuple[int, ...] = field(default=())

    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, xs) -> int:
        """Number of hypergraph edges containing every vertex of ``xs``."""
        xset = frozenset(xs)
        return sum(1 for e in self.edges if xset <= e)

    def degree_with(self, y: int, xs) -> int:
        """Number of hypergraph edges containing {y} ∪ xs."""
        return self.degree(frozenset(xs) | {y})


def build_witness_hypergraph(g: Graph, v: int, s: int) -> WitnessHypergraph:
    """Construct the witness hypergraph at ``v`` for a K_s-saturated graph."""
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n={g.n}")
    closed = g.rows[v] | (1 << v)
    edges = []
    outside = []
    for u in range(g.n):
        if closed >> u & 1:
            continue
        witness = clique_witness(g, u, v, s)
        edges.append(frozenset({u}) | witness.s_set)
        outside.append(u)
    return WitnessHypergraph(
        center=v,
        s=s,
        n=g.n,
        ground=frozenset(range(g.n)) - {v},
        edges=tuple(edges),
        outside=tuple(outside),
    )
