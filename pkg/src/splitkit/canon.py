"""Canonical forms reducing "unlabeled" equality to byte equality.

Two kernels cover all four classes:

* graphs -- the vertex ordering minimizing the adjacency bits read in
  growing order (row k against vertices 0..k-1), found by a tie-branching
  search that only ever extends minimal prefixes, with twin pruning;
* 0/1 matrices under independent row and column permutations -- the
  lexicographically least row-major matrix, found by enumerating
  permutations of the smaller side while the other side is sorted greedily
  (for a fixed column order the best row order sorts the rows; for a fixed
  row order the best column order sorts the columns top-down).

Covers, XY-graphs and posets all reduce to the matrix kernel applied to
their incidence matrix; the row and column groups act independently, which
is exactly what keeps X distinguished and keeps a cover's elements and sets
apart.  Keys embed the class tag and dimensions before the bits so objects
of different shapes can never collide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import (
    BipartitePoset,
    CanonicalKey,
    Graph,
    SetCover,
    UsageError,
    XYGraph,
    class_tag_of,
)

_TAG_BYTES = {"split": b"s", "cover": b"c", "xy": b"x", "poset": b"p"}


def _pack_bits(bits: Sequence[int]) -> bytes:
    out = bytearray()
    acc = 0
    fill = 0
    for b in bits:
        acc = acc << 1 | (1 if b else 0)
        fill += 1
        if fill == 8:
            out.append(acc)
            acc = fill = 0
    if fill:
        out.append(acc << (8 - fill))
    return bytes(out)


def _make_key(tag: str, dims: Sequence[int], bits: Sequence[int]) -> CanonicalKey:
    data = _TAG_BYTES[tag] + b"".join(d.to_bytes(2, "big") for d in dims) + _pack_bits(bits)
    return CanonicalKey(tag, data)


# ---------------------------------------------------------------------------
# matrix kernel


@dataclass(frozen=True)
class MatrixCanonForm:
    """Lex-least row-major matrix over independent row/column permutations.

    ``canonical[i][j] == original[row_perm[i]][col_perm[j]]`` and ``bits``
    is the canonical matrix flattened row-major.
    """

    row_count: int
    col_count: int
    bits: tuple[int, ...]
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]

    def rows(self) -> list[tuple[int, ...]]:
        c = self.col_count
        return [tuple(self.bits[i * c : (i + 1) * c]) for i in range(self.row_count)]


@lru_cache(maxsize=None)
def _perm_tables(width: int):
    """For each permutation of ``width`` bit positions, a remap table.

    ``table[value]`` applies the permutation to a ``width``-bit integer whose
    bit (width-1-j) holds position j.  Only built for small widths.
    """
    tables = []
    for perm in itertools.permutations(range(width)):
        table = []
        for value in range(1 << width):
            out = 0
            for pos, src in enumerate(perm):
                out |= ((value >> (width - 1 - src)) & 1) << (width - 1 - pos)
            table.append(out)
        tables.append((perm, table))
    return tables


def _row_ints(matrix: Sequence[Sequence[int]], c: int) -> list[int]:
    return [sum((1 if row[j] else 0) << (c - 1 - j) for j in range(c)) for row in matrix]


def canon_matrix(matrix: Sequence[Sequence[int]]) -> MatrixCanonForm:
    """Canonicalize a 0/1 matrix under independent row/column permutations."""
    r = len(matrix)
    c = len(matrix[0]) if r else 0
    if r == 0 or c == 0:
        return MatrixCanonForm(r, c, (), tuple(range(r)), tuple(range(c)))
    if c <= r:
        bits, row_perm, col_perm = _canon_enum_cols(matrix, r, c)
    else:
        bits, row_perm, col_perm = _canon_enum_rows(matrix, r, c)
    return MatrixCanonForm(r, c, bits, row_perm, col_perm)


def _apply_bit_perm(value: int, perm: Sequence[int], width: int) -> int:
    out = 0
    for pos, src in enumerate(perm):
        out |= ((value >> (width - 1 - src)) & 1) << (width - 1 - pos)
    return out


def _canon_enum_cols(matrix, r, c):
    # Enumerate column orders; rows sort greedily.  Row values are compared
    # as c-bit integers (column 0 at the most significant bit), so comparing
    # the sorted integer sequences equals comparing row-major bit strings.
    rows = _row_ints(matrix, c)
    best = None
    best_perm = None
    best_permuted = None
    if c <= 6:
        for perm, table in _perm_tables(c):
            permuted = [table[v] for v in rows]
            cand = sorted(permuted)
            if best is None or cand < best:
                best, best_perm, best_permuted = cand, perm, permuted
    else:
        for perm in itertools.permutations(range(c)):
            permuted = [_apply_bit_perm(v, perm, c) for v in rows]
            cand = sorted(permuted)
            if best is None or cand < best:
                best, best_perm, best_permuted = cand, perm, permuted
    row_order = sorted(range(r), key=lambda i: (best_permuted[i], i))
    bits = tuple((best_permuted[i] >> (c - 1 - j)) & 1 for i in row_order for j in range(c))
    return bits, tuple(row_order), tuple(best_perm)


def _canon_enum_rows(matrix, r, c):
    # Enumerate row orders; columns sort greedily by their top-down reading,
    # then candidates are compared by the actual row-major bits (column
    # tuples and row-major strings order differently).
    cols = [sum((1 if matrix[i][j] else 0) << (r - 1 - i) for i in range(r)) for j in range(c)]
    best = None
    best_perm = None
    best_col_order = None
    perm_iter = _perm_tables(r) if r <= 6 else None
    for entry in perm_iter or itertools.permutations(range(r)):
        if perm_iter:
            perm, table = entry
            permuted = [table[v] for v in cols]
        else:
            perm = entry
            permuted = [_apply_bit_perm(v, perm, r) for v in cols]
        col_order = sorted(range(c), key=lambda j: (permuted[j], j))
        cand = tuple(
            sum(((permuted[col_order[j]] >> (r - 1 - i)) & 1) << (c - 1 - j) for j in range(c))
            for i in range(r)
        )
        if best is None or cand < best:
            best, best_perm, best_col_order = cand, perm, col_order
    bits = tuple((best[i] >> (c - 1 - j)) & 1 for i in range(r) for j in range(c))
    return bits, tuple(best_perm), tuple(best_col_order)


# ---------------------------------------------------------------------------
# graph kernel


@dataclass(frozen=True)
class GraphCanon:
    """Canonical key plus the witnessing vertex order.

    ``order[i]`` is the input vertex placed at canonical position i, so the
    canonical adjacency is ``adj[order[i]] & (1 << order[j])``.
    """

    key: CanonicalKey
    order: tuple[int, ...]


def _twin_leaders(g: Graph) -> list[list[int]]:
    """Group vertices whose swap is always an automorphism (open or closed twins)."""
    n = g.n
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    seen: dict[int, int] = {}
    for v in range(n):
        for key in (g.adj[v], g.adj[v] | (1 << v)):
            if key in seen:
                union(seen[key], v)
            else:
                seen[key] = v
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(find(v), []).append(v)
    return [sorted(members) for members in classes.values()]


def canon_graph(g: Graph) -> GraphCanon:
    """Canonical key of a graph with a witnessing vertex order.

    Keys of two graphs are equal iff the graphs are isomorphic.  The search
    keeps every prefix that attains the minimal emitted bits (ties only),
    so the first full order found in id order is the least witnessing
    permutation; on an already-canonical graph that is the identity.

    Exact for every n.  Milliseconds through n = 12; sparse vertex-
    transitive-ish graphs (paths, cycles) can take seconds beyond that
    because long all-zero prefixes keep many tied branches alive.
    """
    n = g.n
    if n == 0:
        return GraphCanon(_make_key("split", (0,), ()), ())
    adj = g.adj
    twin_classes = _twin_leaders(g)

    def candidates(used_mask: int) -> list[int]:
        out = []
        for members in twin_classes:
            for v in members:
                if not used_mask >> v & 1:
                    out.append(v)
                    break
        return out

    frontier: list[tuple[tuple[int, ...], int]] = [((v,), 1 << v) for v in candidates(0)]
    bits: list[int] = []
    for _ in range(1, n):
        best_block = None
        extensions: list[tuple[tuple[int, ...], int]] = []
        for order, used in frontier:
            for v in candidates(used):
                row = adj[v]
                block = 0
                for u in order:
                    block = block << 1 | (row >> u & 1)
                if best_block is None or block < best_block:
                    best_block = block
                    extensions = [(order + (v,), used | 1 << v)]
                elif block == best_block:
                    extensions.append((order + (v,), used | 1 << v))
        k = len(frontier[0][0])
        bits.extend((best_block >> (k - 1 - i)) & 1 for i in range(k))
        frontier = extensions
    order = min(o for o, _ in frontier)
    return GraphCanon(_make_key("split", (n,), bits), order)


def relabel_graph(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose position-i vertex is input vertex ``order[i]``."""
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for i in range(g.n):
        row = 0
        src = g.adj[order[i]]
        for v in range(g.n):
            if src >> v & 1:
                row |= 1 << pos[v]
        rows.append(row)
    return Graph(g.n, tuple(rows))


# ---------------------------------------------------------------------------
# per-class keys and canonical representatives


def xy_matrix(g: XYGraph) -> list[list[int]]:
    m = [[0] * g.ny for _ in range(g.nx)]
    for x, y in g.edges:
        m[x][y] = 1
    return m


def cover_matrix(c: SetCover) -> list[list[int]]:
    m = [[0] * len(c.sets) for _ in range(c.n)]
    for j, s in enumerate(c.sets):
        for e in s:
            m[e][j] = 1
    return m


def poset_matrix(p: BipartitePoset) -> list[list[int]]:
    m = [[0] * p.n1 for _ in range(p.n0)]
    for a, b in p.below:
        m[a][b] = 1
    return m


def canon_xy(g: XYGraph) -> CanonicalKey:
    mcf = canon_matrix(xy_matrix(g))
    return _make_key("xy", (g.nx, g.ny), mcf.bits)


def canon_cover(c: SetCover) -> CanonicalKey:
    mcf = canon_matrix(cover_matrix(c))
    return _make_key("cover", (c.n, len(c.sets)), mcf.bits)


def canon_poset(p: BipartitePoset) -> CanonicalKey:
    mcf = canon_matrix(poset_matrix(p))
    return _make_key("poset", (p.n0, p.n1), mcf.bits)


def canon_key(obj) -> CanonicalKey:
    if isinstance(obj, Graph):
        return canon_graph(obj).key
    if isinstance(obj, SetCover):
        return canon_cover(obj)
    if isinstance(obj, XYGraph):
        return canon_xy(obj)
    if isinstance(obj, BipartitePoset):
        return canon_poset(obj)
    raise UsageError(f"cannot canonicalize {type(obj).__name__}")


def canonical_object(obj):
    """Relabel an object to its canonical form; returns (object, key)."""
    if isinstance(obj, Graph):
        gc = canon_graph(obj)
        return relabel_graph(obj, gc.order), gc.key
    if isinstance(obj, XYGraph):
        mcf = canon_matrix(xy_matrix(obj))
        rows = mcf.rows()
        edges = frozenset(
            (i, j) for i in range(obj.nx) for j in range(obj.ny) if rows[i][j]
        )
        return XYGraph(obj.nx, obj.ny, edges), _make_key("xy", (obj.nx, obj.ny), mcf.bits)
    if isinstance(obj, SetCover):
        mcf = canon_matrix(cover_matrix(obj))
        rows = mcf.rows()
        sets = tuple(
            tuple(e for e in range(obj.n) if rows[e][j]) for j in range(len(obj.sets))
        )
        return SetCover(obj.n, sets), _make_key("cover", (obj.n, len(obj.sets)), mcf.bits)
    if isinstance(obj, BipartitePoset):
        mcf = canon_matrix(poset_matrix(obj))
        rows = mcf.rows()
        below = frozenset(
            (a, b) for a in range(obj.n0) for b in range(obj.n1) if rows[a][b]
        )
        return BipartitePoset(obj.n0, obj.n1, below), _make_key("poset", (obj.n0, obj.n1), mcf.bits)
    raise UsageError(f"cannot canonicalize {type(obj).__name__}")


def is_isomorphic(a, b) -> bool:
    if class_tag_of(a) != class_tag_of(b):
        raise UsageError(
            f"cannot compare a {class_tag_of(a)} object with a {class_tag_of(b)} object"
        )
    return canon_key(a) == canon_key(b)
