"""Domain types and serialization for four families of combinatorial objects.

The four families are split graphs, minimal set covers, XY-graphs (bipartite
graphs with a distinguished block X), and bipartite posets (height at most
one).  All values are immutable after construction and safe to share between
workers.  Labeled objects live on dense integer ids, so field identity is
meaningful and every serializer emits a sorted normal form whose byte
equality coincides with field identity.

Text formats:

* graph6 -- one graph per ASCII line, n <= 62, upper triangle packed
  column-major into 6-bit groups biased by 63.
* JSON lines -- one object per line for covers, XY-graphs and posets, see
  the ``parse_object`` / ``serialize_object`` pair.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union


class ParseError(ValueError):
    """Malformed textual input (graph6 or JSON line)."""


class ValidationError(ValueError):
    """Structurally invalid object; carries the list of violated invariants."""

    def __init__(self, violations: Sequence[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class DomainError(ValueError):
    """Operation applied to an object outside its stated domain."""


class UsageError(ValueError):
    """Caller misuse, e.g. mixing object classes."""


class SizeLimitError(ValueError):
    """Requested size exceeds a supported bound."""


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of vertex v; symmetry and absence of
    loops are guaranteed when built through :meth:`from_edges`.
    """

    n: int
    adj: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValidationError(["vertex count must be non-negative"])
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError([f"edge ({u},{v}) out of range 0..{n - 1}"])
            if u == v:
                raise ValidationError([f"self-loop at {u}"])
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class KSPartition:
    """Clique / stable-set bipartition of a split graph's vertex set."""

    graph: Graph
    K: frozenset[int]
    S: frozenset[int]


@dataclass(frozen=True)
class SplitAnalysis:
    """Clique number, stability number and the partition's trichotomy case.

    ``case`` is one of ``balanced``, ``unbalanced_S_max``,
    ``unbalanced_K_max`` when derived from a partition, else None.  ``swing``
    is the promised swing vertex in the two unbalanced cases.
    """

    omega: int
    alpha: int
    case: Optional[str] = None
    swing: Optional[int] = None


# ---------------------------------------------------------------------------
# set covers, XY-graphs, posets


@dataclass(frozen=True)
class SetCover:
    """Family of subsets of 0..n-1.

    Stored in normal form: each set sorted ascending, the family sorted
    lexicographically.  Duplicates and non-covering families are
    representable so that ``validate`` can report them.
    """

    n: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        norm = tuple(sorted(tuple(sorted(set(s))) for s in self.sets))
        object.__setattr__(self, "sets", norm)


@dataclass(frozen=True)
class XYGraph:
    """Bipartite graph with ordered blocks; X is the distinguished block.

    ``(nx, ny, edges)`` and its transpose are different objects: the blocks
    are never exchanged.
    """

    nx: int
    ny: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))

    def x_neighbors(self, x: int) -> list[int]:
        return sorted(y for (a, y) in self.edges if a == x)

    def y_neighbors(self, y: int) -> list[int]:
        return sorted(x for (x, b) in self.edges if b == y)


@dataclass(frozen=True)
class BipartitePoset:
    """Order of height <= 1, stored as its (height-0 x height-1) relation.

    ``below`` holds pairs (a, b) meaning height-0 point a lies below
    height-1 point b.
    """

    n0: int
    n1: int
    below: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "below", frozenset(self.below))

    def down_set(self, b: int) -> frozenset[int]:
        return frozenset(a for (a, bb) in self.below if bb == b)

    def up_set(self, a: int) -> frozenset[int]:
        return frozenset(b for (aa, b) in self.below if aa == a)


@dataclass(frozen=True)
class Balance:
    """Balanced/unbalanced verdict plus the witnessing structure id.

    The witness is a swing vertex, extremal set index, universal X-vertex or
    full-support point depending on the class; it is present exactly when
    the object is unbalanced.
    """

    value: str
    witness: Optional[int] = None

    @property
    def is_balanced(self) -> bool:
        return self.value == "balanced"


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Stable identity of an unlabeled object: tag, dimensions and bits.

    Two objects of the same class are isomorphic iff their keys are
    byte-equal.  ``hex`` is the public rendering.
    """

    class_tag: str
    data: bytes

    @property
    def hex(self) -> str:
        return self.data.hex()


ObjectType = Union[Graph, SetCover, XYGraph, BipartitePoset]

CLASS_TAGS = ("split", "cover", "xy", "poset")


def class_tag_of(obj) -> str:
    if isinstance(obj, Graph):
        return "split"
    if isinstance(obj, SetCover):
        return "cover"
    if isinstance(obj, XYGraph):
        return "xy"
    if isinstance(obj, BipartitePoset):
        return "poset"
    raise UsageError(f"not a domain object: {type(obj).__name__}")


def size_of(obj) -> int:
    """Number of ground points of an object (vertices / elements)."""
    if isinstance(obj, Graph):
        return obj.n
    if isinstance(obj, SetCover):
        return obj.n
    if isinstance(obj, XYGraph):
        return obj.nx + obj.ny
    if isinstance(obj, BipartitePoset):
        return obj.n0 + obj.n1
    raise UsageError(f"not a domain object: {type(obj).__name__}")


# ---------------------------------------------------------------------------
# graph6


def serialize_graph6(g: Graph) -> str:
    """Encode a graph as a standard graph6 line (n <= 62)."""
    if g.n > 62:
        raise SizeLimitError(f"graph6 output supports n <= 62, got n={g.n}")
    chars = [chr(63 + g.n)]
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k : k + 6]:
            group = group << 1 | b
        chars.append(chr(63 + group))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one standard graph6 line; inverse of :func:`serialize_graph6`."""
    line = text.rstrip("\n")
    if not line:
        raise ParseError("empty graph6 string (offset 0)")
    header = ord(line[0])
    if header == 126:
        raise SizeLimitError("graph6 input supports n <= 62 (long-form header at offset 0)")
    if not 63 <= header <= 125:
        raise ParseError(f"header byte {line[0]!r} out of range at offset 0")
    n = header - 63
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    data = line[1:]
    if len(data) < need_bytes:
        raise ParseError(
            f"truncated bit field: need {need_bytes} data bytes, got {len(data)} (offset {len(line)})"
        )
    if len(data) > need_bytes:
        raise ParseError(f"trailing data at offset {1 + need_bytes}")
    bits = []
    for off, ch in enumerate(data):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ParseError(f"data byte {ch!r} out of range at offset {off + 1}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    for extra in bits[need_bits:]:
        if extra:
            raise ParseError(f"nonzero padding bit (offset {len(line) - 1})")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# JSON lines


def serialize_object(obj) -> str:
    """Serialize a cover / XY-graph / poset to its JSON normal form."""
    if isinstance(obj, SetCover):
        doc = {"class": "cover", "n": obj.n, "sets": [list(s) for s in obj.sets]}
    elif isinstance(obj, XYGraph):
        doc = {
            "class": "xy",
            "nx": obj.nx,
            "ny": obj.ny,
            "edges": [list(e) for e in sorted(obj.edges)],
        }
    elif isinstance(obj, BipartitePoset):
        doc = {
            "class": "poset",
            "n0": obj.n0,
            "n1": obj.n1,
            "below": [list(p) for p in sorted(obj.below)],
        }
    else:
        raise UsageError(f"no JSON form for {type(obj).__name__}; use graph6 for graphs")
    return json.dumps(doc, separators=(",", ":"))


def parse_object(text: str):
    """Parse one JSON line into a cover / XY-graph / poset, validating it."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "class" not in doc:
        raise ParseError('missing "class" field')
    tag = doc["class"]
    try:
        if tag == "cover":
            obj = SetCover(int(doc["n"]), tuple(tuple(int(e) for e in s) for s in doc["sets"]))
        elif tag == "xy":
            obj = XYGraph(
                int(doc["nx"]),
                int(doc["ny"]),
                frozenset((int(x), int(y)) for x, y in doc["edges"]),
            )
        elif tag == "poset":
            obj = BipartitePoset(
                int(doc["n0"]),
                int(doc["n1"]),
                frozenset((int(a), int(b)) for a, b in doc["below"]),
            )
        else:
            raise ParseError(f"unknown class {tag!r}")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"schema violation for class {tag!r}: {exc}") from None
    problems = validate(obj)
    if problems:
        raise ValidationError(problems)
    return obj


# ---------------------------------------------------------------------------
# validation


def validate(obj) -> list[str]:
    """Return the list of violated invariants; empty means the object is valid.

    Violations are data, not errors: any well-typed field combination is
    accepted and described.
    """
    if isinstance(obj, Graph):
        return _validate_graph(obj)
    if isinstance(obj, KSPartition):
        return _validate_partition(obj)
    if isinstance(obj, SetCover):
        return _validate_cover(obj)
    if isinstance(obj, XYGraph):
        return _validate_xy(obj)
    if isinstance(obj, BipartitePoset):
        return _validate_poset(obj)
    raise UsageError(f"cannot validate {type(obj).__name__}")


def _validate_graph(g: Graph) -> list[str]:
    out = []
    if g.n < 0:
        return [f"vertex count {g.n} negative"]
    if len(g.adj) != g.n:
        return [f"adjacency has {len(g.adj)} rows for n={g.n}"]
    full = (1 << g.n) - 1
    for v in range(g.n):
        if g.adj[v] >> v & 1:
            out.append(f"self-loop at {v}")
        if g.adj[v] & ~full:
            out.append(f"row {v} has bits beyond vertex {g.n - 1}")
        for u in _bits(g.adj[v] & full):
            if u < g.n and not (g.adj[u] >> v & 1):
                out.append(f"adjacency not symmetric: ({v},{u})")
    return out


def _validate_partition(p: KSPartition) -> list[str]:
    g = p.graph
    out = []
    all_v = frozenset(range(g.n))
    if p.K | p.S != all_v:
        missing = sorted(all_v - (p.K | p.S))
        out.append(f"K ∪ S misses vertices {missing}")
    extra = sorted((p.K | p.S) - all_v)
    if extra:
        out.append(f"partition uses unknown vertices {extra}")
    overlap = sorted(p.K & p.S)
    if overlap:
        out.append(f"K ∩ S nonempty: {overlap}")
    ks = sorted(p.K & all_v)
    for i, u in enumerate(ks):
        for v in ks[i + 1 :]:
            if not g.has_edge(u, v):
                out.append(f"K not a clique: ({u},{v})")
    ss = sorted(p.S & all_v)
    for i, u in enumerate(ss):
        for v in ss[i + 1 :]:
            if g.has_edge(u, v):
                out.append(f"S not stable: ({u},{v})")
    return out


def _validate_cover(c: SetCover) -> list[str]:
    out = []
    if c.n < 0:
        return [f"ground size {c.n} negative"]
    covered = set()
    for i, s in enumerate(c.sets):
        for e in s:
            if not 0 <= e < c.n:
                out.append(f"set {i} contains out-of-range element {e}")
            else:
                covered.add(e)
    for i in range(len(c.sets) - 1):
        if c.sets[i] == c.sets[i + 1]:
            out.append(f"duplicate set at indices {i},{i + 1}")
    for e in range(c.n):
        if e not in covered:
            out.append(f"union ≠ ground set: element {e} uncovered")
    return out


def _validate_xy(g: XYGraph) -> list[str]:
    out = []
    if g.nx < 0 or g.ny < 0:
        return [f"block sizes ({g.nx},{g.ny}) negative"]
    for x, y in sorted(g.edges):
        if not (0 <= x < g.nx and 0 <= y < g.ny):
            out.append(f"edge ({x},{y}) outside X×Y")
    return out


def _validate_poset(p: BipartitePoset) -> list[str]:
    out = []
    if p.n0 < 0 or p.n1 < 0:
        return [f"point counts ({p.n0},{p.n1}) negative"]
    for a, b in sorted(p.below):
        if not (0 <= a < p.n0 and 0 <= b < p.n1):
            out.append(f"relation ({a},{b}) outside height-0×height-1")
    for b in range(p.n1):
        if not any(bb == b for (_, bb) in p.below):
            out.append(f"height-1 point {b} has empty down-set")
    return out
