"""Exhaustive census of each class at a given size.

The master enumeration runs over XY incidence matrices: Y-columns (as
bitmasks over the X-rows) are appended one at a time in non-decreasing
order, and a partial matrix survives only while it is canonical, meaning no
permutation of the X-rows yields a smaller sorted column sequence.  Every
canonical sequence has a canonical prefix chain, so the search visits each
unlabeled XY-graph exactly once.  The other three censuses are transported
through the bijections; a naive oracle (generate every labeled object,
canonicalize, deduplicate) provides the independent cross-check and shares
nothing with the master path except the canonical forms.

The search tree shards by the content of the first column; shards are
merged in a fixed order, so the census is identical for any worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from . import biject
from .canon import canon_key, canonical_object
from .classify import balance_of, xy_isolates_universals
from .core import (
    BipartitePoset,
    CanonicalKey,
    Graph,
    SetCover,
    SizeLimitError,
    UsageError,
    XYGraph,
)

MAX_N = 8
ORACLE_MAX_N = {"split": 5, "cover": 5, "xy": 6, "poset": 6}


@dataclass(frozen=True)
class Census:
    """Sorted canonical keys of one class at one size, with balance counts.

    For unfiltered XY censuses the objects whose balance is undefined
    (isolates in Y) are tallied as ``out_of_domain``.
    """

    class_tag: str
    n: int
    keys: tuple[CanonicalKey, ...]
    balanced: int
    unbalanced: int
    out_of_domain: int = 0

    @property
    def count(self) -> int:
        return len(self.keys)


def _check_bound(n: int):
    if not 0 <= n <= MAX_N:
        raise SizeLimitError(f"enumeration supports 0 <= n <= {MAX_N}, got n={n}")


# ---------------------------------------------------------------------------
# orderly generation of canonical column sequences


@lru_cache(maxsize=None)
def _row_perm_tables(width: int) -> tuple[tuple[int, ...], ...]:
    """Bit-permutation tables for every permutation of ``width`` rows."""
    tables = []
    for perm in itertools.permutations(range(width)):
        table = [0] * (1 << width)
        for value in range(1 << width):
            out = 0
            for i in range(width):
                if value >> i & 1:
                    out |= 1 << perm[i]
            table[value] = out
        tables.append(tuple(table))
    return tuple(tables)


def _is_canonical_colseq(nx: int, cols: tuple[int, ...]) -> bool:
    """No row permutation may produce a smaller sorted column sequence."""
    if len(cols) <= 1:
        if not cols:
            return True
        # A single column is canonical iff its bits sit at the low rows.
        return cols[0] == (1 << bin(cols[0]).count("1")) - 1
    ref = list(cols)
    for table in _row_perm_tables(nx):
        if sorted(table[c] for c in cols) < ref:
            return False
    return True


def _gen_colseqs(nx: int, ny: int, min_col: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if len(prefix) == ny:
        yield prefix
        return
    start = prefix[-1] if prefix else min_col
    for col in range(start, 1 << nx):
        cand = prefix + (col,)
        if _is_canonical_colseq(nx, cand):
            yield from _gen_colseqs(nx, ny, min_col, cand)


def _shard_tasks(n: int, require_no_y_isolates: bool) -> list[tuple[int, int, Optional[int]]]:
    """(nx, ny, first column) shards in a fixed deterministic order."""
    tasks: list[tuple[int, int, Optional[int]]] = []
    for nx in range(n, -1, -1):
        ny = n - nx
        if ny == 0:
            tasks.append((nx, 0, None))
            continue
        min_col = 1 if require_no_y_isolates else 0
        for first in range(min_col, 1 << nx):
            tasks.append((nx, ny, first))
    return tasks


def _run_shard(task: tuple[int, int, Optional[int]]) -> list[XYGraph]:
    nx, ny, first = task
    if first is None:
        return [XYGraph(nx, 0, frozenset())]
    if not _is_canonical_colseq(nx, (first,)):
        return []
    out = []
    for cols in _gen_colseqs(nx, ny, first, (first,)):
        edges = frozenset(
            (x, j) for j, col in enumerate(cols) for x in range(nx) if col >> x & 1
        )
        out.append(XYGraph(nx, ny, edges))
    return out


def iter_xy(
    n: int, require_no_y_isolates: bool = False, workers: int = 1
) -> Iterator[XYGraph]:
    """Canonically labeled XY-graphs on n vertices, one per unlabeled object."""
    _check_bound(n)
    tasks = _shard_tasks(n, require_no_y_isolates)
    if workers <= 1:
        batches = map(_run_shard, tasks)
        for batch in batches:
            for h in batch:
                yield canonical_object(h)[0]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for batch in pool.map(_run_shard, tasks):
                for h in batch:
                    yield canonical_object(h)[0]


def iter_split(n: int, workers: int = 1) -> Iterator[Graph]:
    """Canonically labeled split graphs on n vertices via XY transport."""
    seen: set[CanonicalKey] = set()
    for h in iter_xy(n, require_no_y_isolates=True, workers=workers):
        g, key = canonical_object(biject.xy_to_split(h))
        if key in seen:
            raise RuntimeError(f"transport merged two XY keys onto split key {key.hex}")
        seen.add(key)
        yield g


def iter_cover(n: int, workers: int = 1) -> Iterator[SetCover]:
    seen: set[CanonicalKey] = set()
    for g in iter_split(n, workers=workers):
        c, key = canonical_object(biject.split_to_cover(g))
        if key in seen:
            raise RuntimeError(f"transport merged two split keys onto cover key {key.hex}")
        seen.add(key)
        yield c


def iter_poset(n: int, workers: int = 1) -> Iterator[BipartitePoset]:
    seen: set[CanonicalKey] = set()
    for g in iter_split(n, workers=workers):
        p, key = canonical_object(biject.split_to_poset(g))
        if key in seen:
            raise RuntimeError(f"transport merged two split keys onto poset key {key.hex}")
        seen.add(key)
        yield p


def iter_objects(
    class_tag: str, n: int, require_no_y_isolates: bool = False, workers: int = 1
):
    if class_tag == "split":
        return iter_split(n, workers)
    if class_tag == "cover":
        return iter_cover(n, workers)
    if class_tag == "poset":
        return iter_poset(n, workers)
    if class_tag == "xy":
        return iter_xy(n, require_no_y_isolates, workers)
    raise UsageError(f"unknown class {class_tag!r}")


# ---------------------------------------------------------------------------
# censuses


_census_cache: dict[tuple[str, int, bool], Census] = {}


def _build_census(class_tag: str, n: int, require_no_y_isolates: bool, workers: int) -> Census:
    keys = []
    balanced = unbalanced = out_of_domain = 0
    for obj in iter_objects(class_tag, n, require_no_y_isolates, workers):
        keys.append(canon_key(obj))
        if class_tag == "xy" and not require_no_y_isolates:
            isolates, universals = xy_isolates_universals(obj)
            if isolates:
                out_of_domain += 1
                continue
            if universals:
                unbalanced += 1
            else:
                balanced += 1
            continue
        if balance_of(obj).is_balanced:
            balanced += 1
        else:
            unbalanced += 1
    if len(set(keys)) != len(keys):
        raise RuntimeError(f"duplicate keys in {class_tag} census at n={n}")
    return Census(class_tag, n, tuple(sorted(keys)), balanced, unbalanced, out_of_domain)


def _census(class_tag: str, n: int, require_no_y_isolates: bool, workers: int) -> Census:
    _check_bound(n)
    cache_key = (class_tag, n, require_no_y_isolates)
    if cache_key not in _census_cache:
        _census_cache[cache_key] = _build_census(class_tag, n, require_no_y_isolates, workers)
    return _census_cache[cache_key]


def enumerate_xy(n: int, require_no_y_isolates: bool = False, workers: int = 1) -> Census:
    return _census("xy", n, require_no_y_isolates, workers)


def enumerate_split(n: int, workers: int = 1) -> Census:
    return _census("split", n, False, workers)


def enumerate_cover(n: int, workers: int = 1) -> Census:
    return _census("cover", n, False, workers)


def enumerate_poset(n: int, workers: int = 1) -> Census:
    return _census("poset", n, False, workers)


def enumerate_class(class_tag: str, n: int, require_no_y_isolates: bool = False, workers: int = 1) -> Census:
    if class_tag not in ("split", "cover", "xy", "poset"):
        raise UsageError(f"unknown class {class_tag!r}")
    return _census(class_tag, n, require_no_y_isolates if class_tag == "xy" else False, workers)


# ---------------------------------------------------------------------------
# naive oracle


def naive_oracle(class_tag: str, n: int) -> Census:
    """Census built without bijection transport: generate all labeled
    objects, canonicalize, deduplicate, classify natively."""
    bound = ORACLE_MAX_N.get(class_tag)
    if bound is None:
        raise UsageError(f"unknown class {class_tag!r}")
    if not 0 <= n <= bound:
        raise SizeLimitError(f"naive oracle supports n <= {bound} for {class_tag}, got n={n}")
    if class_tag == "split":
        return _oracle_split(n)
    if class_tag == "cover":
        return _oracle_cover(n)
    if class_tag == "xy":
        return _oracle_xy(n)
    return _oracle_poset(n)


def _oracle_split(n: int) -> Census:
    pair_bits = [(i, j) for j in range(n) for i in range(j)]
    results: dict[CanonicalKey, bool] = {}
    for code in range(1 << len(pair_bits)):
        edges = [pair_bits[k] for k in range(len(pair_bits)) if code >> k & 1]
        g = Graph.from_edges(n, edges)
        partitions = _split_partitions(g)
        if not partitions:
            continue
        key = canon_key(g)
        if key in results:
            continue
        omega = max(
            (len(ks) for ks in _all_cliques(g)), default=0
        )
        alpha = max(
            (len(ss) for ss in _all_stables(g)), default=0
        )
        balanced = any(len(k) == omega and n - len(k) == alpha for k in partitions)
        results[key] = balanced
    return _oracle_census("split", n, results)


def _all_cliques(g: Graph):
    for code in range(1 << g.n):
        members = [v for v in range(g.n) if code >> v & 1]
        if all(g.has_edge(u, v) for i, u in enumerate(members) for v in members[i + 1 :]):
            yield members


def _all_stables(g: Graph):
    for code in range(1 << g.n):
        members = [v for v in range(g.n) if code >> v & 1]
        if not any(g.has_edge(u, v) for i, u in enumerate(members) for v in members[i + 1 :]):
            yield members


def _split_partitions(g: Graph) -> list[frozenset[int]]:
    """All K-sides of valid clique/stable bipartitions, by brute force."""
    out = []
    for code in range(1 << g.n):
        k = [v for v in range(g.n) if code >> v & 1]
        s = [v for v in range(g.n) if not code >> v & 1]
        if all(g.has_edge(u, v) for i, u in enumerate(k) for v in k[i + 1 :]) and not any(
            g.has_edge(u, v) for i, u in enumerate(s) for v in s[i + 1 :]
        ):
            out.append(frozenset(k))
    return out


def _oracle_cover(n: int) -> Census:
    # A minimal cover has at most n sets (each owns a distinct loyal
    # element), so families larger than n never pass the filter.
    results: dict[CanonicalKey, bool] = {}
    full = (1 << n) - 1
    masks = list(range(1, 1 << n))
    for k in range(0, n + 1):
        for family in itertools.combinations(masks, k):
            union = 0
            for m in family:
                union |= m
            if union != full:
                continue
            minimal = True
            for i, m in enumerate(family):
                rest = 0
                for j, other in enumerate(family):
                    if j != i:
                        rest |= other
                if not m & ~rest:
                    minimal = False
                    break
            if not minimal:
                continue
            sets = tuple(tuple(v for v in range(n) if m >> v & 1) for m in family)
            cover = SetCover(n, sets)
            key = canon_key(cover)
            if key not in results:
                threshold = n - k + 1
                results[key] = not any(len(s) == threshold for s in cover.sets)
    return _oracle_census("cover", n, results)


def _oracle_xy(n: int) -> Census:
    results: dict[CanonicalKey, Optional[bool]] = {}
    for nx in range(n + 1):
        ny = n - nx
        cells = [(x, y) for x in range(nx) for y in range(ny)]
        for code in range(1 << len(cells)):
            edges = frozenset(cells[k] for k in range(len(cells)) if code >> k & 1)
            h = XYGraph(nx, ny, edges)
            key = canon_key(h)
            if key in results:
                continue
            isolates, universals = xy_isolates_universals(h)
            results[key] = None if isolates else not universals
    balanced = sum(1 for v in results.values() if v is True)
    unbalanced = sum(1 for v in results.values() if v is False)
    ood = sum(1 for v in results.values() if v is None)
    return Census("xy", n, tuple(sorted(results)), balanced, unbalanced, ood)


def _oracle_poset(n: int) -> Census:
    results: dict[CanonicalKey, bool] = {}
    for n0 in range(n + 1):
        n1 = n - n0
        cells = [(a, b) for a in range(n0) for b in range(n1)]
        for code in range(1 << len(cells)):
            below = frozenset(cells[k] for k in range(len(cells)) if code >> k & 1)
            covered = {b for _, b in below}
            if len(covered) != n1:
                continue  # some height-1 point would have an empty down-set
            p = BipartitePoset(n0, n1, below)
            key = canon_key(p)
            if key not in results:
                up_counts = [0] * n0
                for a, _ in below:
                    up_counts[a] += 1
                results[key] = not any(u == n1 for u in up_counts)
    return _oracle_census("poset", n, results)


def _oracle_census(tag: str, n: int, results: dict) -> Census:
    balanced = sum(1 for v in results.values() if v)
    unbalanced = sum(1 for v in results.values() if not v)
    return Census(tag, n, tuple(sorted(results)), balanced, unbalanced)


# ---------------------------------------------------------------------------
# count table


def count_table(max_n: int, workers: int = 1) -> list[dict]:
    """Per-size totals and balance counts for every class, plus the
    cumulative column sum(split totals below n)."""
    _check_bound(max_n)
    rows = []
    cumulative = 0
    for n in range(max_n + 1):
        split = enumerate_split(n, workers)
        cover = enumerate_cover(n, workers)
        poset = enumerate_poset(n, workers)
        xy = enumerate_xy(n, True, workers)
        xy_all = enumerate_xy(n, False, workers)
        rows.append(
            {
                "n": n,
                "split_total": split.count,
                "split_balanced": split.balanced,
                "split_unbalanced": split.unbalanced,
                "cover_total": cover.count,
                "cover_balanced": cover.balanced,
                "cover_unbalanced": cover.unbalanced,
                "poset_total": poset.count,
                "poset_balanced": poset.balanced,
                "poset_unbalanced": poset.unbalanced,
                "xy_total": xy.count,
                "xy_balanced": xy.balanced,
                "xy_unbalanced": xy.unbalanced,
                "xy_all_total": xy_all.count,
                "cumulative_below": cumulative,
            }
        )
        cumulative += split.count
    return rows
