"""Exact sat(n, H, F) at small n by exhaustive isomorph-free enumeration.

Graphs are generated one representative per isomorphism class by vertex
augmentation with per-level canonical-form deduplication.  A hereditary
"stay F-free" filter prunes the tree when minimizing over F-saturated
graphs (an induced subgraph of an F-free graph is F-free, so pruning is
exact).  A labeled brute-force oracle over all 2^C(n,2) graphs provides
an independent cross-check at n <= 7.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .canon import canonical_form, canonical_rows
from .counting import (
    contains_subgraph,
    count_cliques,
    count_cycles,
    count_embeddings,
    count_kab,
)
from .errors import EmptyDomainError, InputError
from .graph6 import from_graph6, to_graph6
from .graphs import Graph
from .patterns import PatternSpec, format_pattern, parse_pattern, pattern_graph
from .saturation import _find_clique, is_h_saturated, is_ks_saturated

MAX_ENUM_VERTICES = 10
MAX_PATTERN_F_VERTICES = 8
DEFAULT_EXTREMAL_CAP = 100


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All simple graphs on n vertices, one per isomorphism class.

    Yields canonically labeled representatives in sorted canonical-form
    order; n <= 10.
    """
    if n > MAX_ENUM_VERTICES:
        raise InputError(f"enumeration supports n <= {MAX_ENUM_VERTICES}, got n={n}")
    if n < 0:
        raise InputError(f"need n >= 0, got n={n}")
    yield from _enumerate(n, None)


def _enumerate(n: int, child_keep: Callable[[tuple[int, ...], int, int], bool] | None
               ) -> Iterator[Graph]:
    """Isomorph-free stream; ``child_keep(parent_rows, parent_n, subset)``
    must be hereditary (true for a graph => true for the parent it came
    from) for the stream to cover every class satisfying it."""
    if n == 0:
        yield Graph(0)
        return
    level: list[tuple[int, ...]] = [(0,)]  # K_1
    for k in range(1, n):
        seen: dict[str, tuple[int, ...]] = {}
        for prows in level:
            for subset in range(1 << k):
                if child_keep is not None and not child_keep(prows, k, subset):
                    continue
                child = tuple(
                    r | ((subset >> i & 1) << k) for i, r in enumerate(prows)
                ) + (subset,)
                crows = canonical_rows(child, k + 1)
                key = to_graph6(Graph._from_rows_unchecked(k + 1, crows))
                if key not in seen:
                    seen[key] = crows
        level = [seen[key] for key in sorted(seen)]  # canonical graph6 order
    for rows in level:
        yield Graph._from_rows_unchecked(n, rows)


def _keep_ks_free(s: int) -> Callable[[tuple[int, ...], int, int], bool]:
    """Child filter: new vertex's neighborhood may not contain K_{s-1}."""

    def keep(prows: tuple[int, ...], k: int, subset: int) -> bool:
        return _find_clique(prows, subset, s - 1) < 0

    return keep


def _keep_pattern_free(f: Graph) -> Callable[[tuple[int, ...], int, int], bool]:
    def keep(prows: tuple[int, ...], k: int, subset: int) -> bool:
        child = tuple(
            r | ((subset >> i & 1) << k) for i, r in enumerate(prows)
        ) + (subset,)
        return not contains_subgraph(Graph._from_rows_unchecked(k + 1, child), f)

    return keep


@dataclass(frozen=True)
class SatRecord:
    """Exact sat(n, H, F) with the minimizers in canonical graph6 form."""

    n: int
    h: str
    f: str
    min_count: int
    extremal: tuple[str, ...]
    searched: int
    truncated: bool = False

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "h": self.h,
                "f": self.f,
                "min_count": self.min_count,
                "extremal": list(self.extremal),
                "searched": self.searched,
                "truncated": self.truncated,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> "SatRecord":
        d = json.loads(text)
        return cls(
            n=d["n"],
            h=d["h"],
            f=d["f"],
            min_count=d["min_count"],
            extremal=tuple(d["extremal"]),
            searched=d["searched"],
            truncated=d["truncated"],
        )


def count_pattern(g: Graph, h: PatternSpec) -> int:
    """Number of copies of the pattern ``h`` in ``g``."""
    kind, value = h
    if kind == "clique":
        return count_cliques(g, value)
    if kind == "kab":
        return count_kab(g, value)
    if kind == "cycle":
        return count_cycles(g, value)
    return count_embeddings(g, value)


def _shard_key(g6: str) -> int:
    return int.from_bytes(g6[:8].encode("ascii"), "big")


@lru_cache(maxsize=None)
def saturated_classes(n: int, f: PatternSpec) -> tuple[tuple[Graph, str], ...]:
    """Cached (graph, canonical form) pairs of all F-saturated classes.

    Enumerations are expensive and shared by every criterion sweep, so
    they are memoized per (n, F); all values are immutable.
    """
    return tuple(saturated_stream(n, f))


def saturated_stream(
    n: int,
    f: PatternSpec,
    source: Iterable[Graph] | None = None,
) -> Iterator[tuple[Graph, str]]:
    """F-saturated graphs on n vertices as (graph, canonical form) pairs.

    Uses the pruned enumeration unless an explicit ``source`` of graphs
    (e.g. parsed from graph6 lines) is supplied.
    """
    kind, value = f
    if kind == "clique":
        if value < 2:
            raise InputError(f"saturation needs clique order >= 2, got {value}")
        if source is None and n > MAX_ENUM_VERTICES:
            raise InputError(
                f"search supports n <= {MAX_ENUM_VERTICES} for clique F, got n={n}"
            )
        stream = source if source is not None else _enumerate(n, _keep_ks_free(value))
        for g in stream:
            if g.n != n:
                raise InputError(f"source graph has n={g.n}, expected {n}")
            if is_ks_saturated(g, value).is_saturated:
                yield g, canonical_form(g)
    else:
        fgraph = pattern_graph(f)
        if fgraph.edge_count() == 0:
            raise InputError("saturation pattern needs at least one edge")
        if source is None and n > MAX_PATTERN_F_VERTICES:
            raise InputError(
                f"search supports n <= {MAX_PATTERN_F_VERTICES} for pattern F, got n={n}"
            )
        stream = source if source is not None else _enumerate(n, _keep_pattern_free(fgraph))
        for g in stream:
            if g.n != n:
                raise InputError(f"source graph has n={g.n}, expected {n}")
            if is_h_saturated(g, fgraph).is_saturated:
                yield g, canonical_form(g)


def min_count_over_saturated(
    n: int,
    h: PatternSpec | str,
    f: PatternSpec | str,
    *,
    max_extremal: int = DEFAULT_EXTREMAL_CAP,
    shard: tuple[int, int] | None = None,
    source: Iterable[Graph] | None = None,
) -> SatRecord:
    """Minimum H-count over all F-saturated graphs on n vertices.

    ``shard=(i, k)`` keeps only graphs whose canonical form hashes to
    residue i mod k; shard records merge back with ``merge_records``.
    """
    h = parse_pattern(h) if isinstance(h, str) else h
    f = parse_pattern(f) if isinstance(f, str) else f
    if shard is not None:
        idx, total = shard
        if not (total >= 1 and 0 <= idx < total):
            raise InputError(f"bad shard {shard}: need 0 <= index < total")
    best: int | None = None
    minimizers: list[str] = []
    searched = 0
    pairs = saturated_classes(n, f) if source is None else saturated_stream(n, f, source=source)
    for g, form in pairs:
        if shard is not None and _shard_key(form) % shard[1] != shard[0]:
            continue
        searched += 1
        c = count_pattern(g, h)
        if best is None or c < best:
            best = c
            minimizers = [form]
        elif c == best and form not in minimizers:
            minimizers.append(form)
    if best is None:
        raise EmptyDomainError(
            f"no {format_pattern(f)}-saturated graph on {n} vertices"
            + (" in this shard" if shard else "")
        )
    minimizers.sort()
    truncated = len(minimizers) > max_extremal
    return SatRecord(
        n=n,
        h=format_pattern(h),
        f=format_pattern(f),
        min_count=best,
        extremal=tuple(minimizers[:max_extremal]),
        searched=searched,
        truncated=truncated,
    )


def merge_records(records: Iterable[SatRecord], *,
                  max_extremal: int = DEFAULT_EXTREMAL_CAP) -> SatRecord:
    """Combine shard records: min of minima, union of minimizer lists."""
    records = list(records)
    if not records:
        raise EmptyDomainError("no records to merge")
    first = records[0]
    for r in records[1:]:
        if (r.n, r.h, r.f) != (first.n, first.h, first.f):
            raise InputError("records describe different problems")
    best = min(r.min_count for r in records)
    extremal: set[str] = set()
    truncated = False
    for r in records:
        if r.min_count == best:
            extremal.update(r.extremal)
            truncated = truncated or r.truncated
    ordered = sorted(extremal)
    truncated = truncated or len(ordered) > max_extremal
    return SatRecord(
        n=first.n,
        h=first.h,
        f=first.f,
        min_count=best,
        extremal=tuple(ordered[:max_extremal]),
        searched=sum(r.searched for r in records),
        truncated=truncated,
    )


def graphs_from_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)


def brute_force_labeled(
    n: int,
    h: PatternSpec | str,
    f: PatternSpec | str,
    *,
    max_extremal: int = DEFAULT_EXTREMAL_CAP,
    use_cache: bool = True,
) -> SatRecord:
    """Independent oracle: scan all 2^C(n,2) labeled graphs (n <= 7).

    No isomorphism machinery is used while searching; ``use_cache`` only
    memoizes the (isomorphism-invariant) verdicts on degree-sorted rows,
    which does not change any result.  ``searched`` counts saturated
    labeled graphs, not classes.
    """
    if n > 7:
        raise InputError(f"labeled brute force supports n <= 7, got n={n}")
    if n < 0:
        raise InputError(f"need n >= 0, got n={n}")
    h = parse_pattern(h) if isinstance(h, str) else h
    f = parse_pattern(f) if isinstance(f, str) else f
    kind, value = f
    fgraph = None if kind == "clique" else pattern_graph(f)
    if fgraph is not None and fgraph.edge_count() == 0:
        raise InputError("saturation pattern needs at least one edge")

    pairs = list(combinations(range(n), 2))
    best: int | None = None
    minimizer_rows: list[tuple[int, ...]] = []
    searched = 0
    cache: dict[tuple[int, ...], tuple[bool, int]] = {}

    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        idx = 0
        while m:
            if m & 1:
                u, v = pairs[idx]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            idx += 1
        rows = tuple(rows)
        if use_cache:
            order = sorted(range(n), key=lambda x: (-rows[x].bit_count(), x))
            pos = [0] * n
            for i, x in enumerate(order):
                pos[x] = i
            key = tuple(
                sum(1 << pos[b] for b in range(n) if rows[x] >> b & 1) for x in order
            )
            hit = cache.get(key)
            if hit is None:
                hit = _evaluate_labeled(key, n, h, f, fgraph)
                cache[key] = hit
            sat, c = hit
        else:
            sat, c = _evaluate_labeled(rows, n, h, f, fgraph)
        if not sat:
            continue
        searched += 1
        if best is None or c < best:
            best = c
            minimizer_rows = [rows]
        elif c == best:
            minimizer_rows.append(rows)
    if best is None:
        raise EmptyDomainError(
            f"no {format_pattern(f)}-saturated graph on {n} vertices"
        )
    forms = sorted(
        {canonical_form(Graph._from_rows_unchecked(n, r)) for r in minimizer_rows}
    )
    truncated = len(forms) > max_extremal
    return SatRecord(
        n=n,
        h=format_pattern(h),
        f=format_pattern(f),
        min_count=best,
        extremal=tuple(forms[:max_extremal]),
        searched=searched,
        truncated=truncated,
    )


def _evaluate_labeled(
    rows: tuple[int, ...], n: int, h: PatternSpec, f: PatternSpec, fgraph: Graph | None
) -> tuple[bool, int]:
    g = Graph._from_rows_unchecked(n, rows)
    if fgraph is None:
        report = is_ks_saturated(g, f[1])
    else:
        report = is_h_saturated(g, fgraph)
    if not report.is_saturated:
        return False, 0
    return True, count_pattern(g, h)


def count_classes(n: int) -> int:
    """Number of isomorphism classes via the augmentation stream."""
    return sum(1 for _ in enumerate_graphs(n))


def count_classes_labeled(n: int) -> int:
    """Independent class count: canonical forms over all labeled graphs.

    Iterates every 2^C(n,2) edge mask and counts distinct canonical
    forms (n <= 7); memoizes on degree-sorted rows, which leaves the
    result unchanged.
    """
    if n > 7:
        raise InputError(f"labeled scan supports n <= 7, got n={n}")
    if n < 0:
        raise InputError(f"need n >= 0, got n={n}")
    pairs = list(combinations(range(n), 2))
    forms: set[str] = set()
    cache: dict[tuple[int, ...], str] = {}
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        m = mask
        idx = 0
        while m:
            if m & 1:
                u, v = pairs[idx]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            m >>= 1
            idx += 1
        order = sorted(range(n), key=lambda x: (-rows[x].bit_count(), x))
        pos = [0] * n
        for i, x in enumerate(order):
            pos[x] = i
        key = tuple(
            sum(1 << pos[b] for b in range(n) if rows[x] >> b & 1) for x in order
        )
        form = cache.get(key)
        if form is None:
            form = to_graph6(
                Graph._from_rows_unchecked(n, canonical_rows(key, n))
            )
            cache[key] = form
        forms.add(form)
    return len(forms)
