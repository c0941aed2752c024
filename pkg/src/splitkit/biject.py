"""Bijections between the four classes and the four compilation maps.

Every map follows the explicit construction used to prove it is a
bijection; each inverse is implemented separately and the pair is checked
over full censuses by the verification suites.  Maps that involve picking a
structure (a representative loyal element, a swing vertex, a universal
vertex, an extremal set, a demotable or promotable point) accept the choice
as an argument; the default is always the least admissible index, and any
admissible choice yields the same canonical key (checked exhaustively at
small sizes).

The compilation maps connect unbalanced objects on n points with all
objects of the class on at most n-1 points:

* split graphs -- drop a swing S-vertex and the K-vertices left without an
  S-neighbor; inversely add a fresh swing vertex plus padding K-vertices;
* covers -- drop an extremal set and the elements only it covered;
  inversely add a set of fresh elements plus all non-representatives;
* XY-graphs -- drop a universal X-vertex and the Y-vertices it alone
  covered; inversely pad Y with isolate candidates and attach a fresh
  universal vertex;
* posets -- remove the full support points, demoting a height-1 point
  whose down-set was exactly the full support set when one exists;
  inversely add fresh full-support points, promoting one old full-support
  point when one exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .canon import canonical_object
from .core import (
    BipartitePoset,
    CanonicalKey,
    DomainError,
    Graph,
    SetCover,
    UsageError,
    XYGraph,
    _mask,
    class_tag_of,
)
from .classify import (
    extremal_sets,
    is_minimal,
    is_split,
    k_max_partition,
    loyal_elements,
    poset_support,
    s_max_partition,
    xy_isolates_universals,
)


# ---------------------------------------------------------------------------
# choice plumbing


def default_reps(c: SetCover) -> tuple[int, ...]:
    """Least loyal element of each set; the default representative choice."""
    return _check_reps(c, None)


def _check_reps(c: SetCover, reps: Optional[Sequence[int]]) -> tuple[int, ...]:
    if not is_minimal(c):  # also rejects families that fail to cover
        raise DomainError("cover is not minimal: some set has no loyal element")
    loyal = loyal_elements(c)
    if reps is None:
        return tuple(min(l) for l in loyal)
    if len(reps) != len(c.sets):
        raise UsageError(f"need one representative per set ({len(c.sets)}), got {len(reps)}")
    for i, r in enumerate(reps):
        if r not in loyal[i]:
            raise UsageError(f"element {r} is not loyal to set {i}")
    return tuple(reps)


# ---------------------------------------------------------------------------
# split graphs <-> minimal set covers


def split_to_cover(g: Graph) -> SetCover:
    """One set per S-vertex of the S-max partition: the vertex plus its neighbors."""
    if not is_split(g):
        raise DomainError("not a split graph")
    p = s_max_partition(g)
    sets = tuple(tuple(sorted({s} | set(g.neighbors(s)))) for s in sorted(p.S))
    return SetCover(g.n, sets)


def cover_to_split(c: SetCover, reps: Optional[Sequence[int]] = None) -> Graph:
    """Representatives become the stable set; co-membership and K-pairs become edges."""
    reps = _check_reps(c, reps)
    s_side = frozenset(reps)
    k_side = frozenset(range(c.n)) - s_side
    edges = set()
    for s in c.sets:
        for i, u in enumerate(s):
            for v in s[i + 1 :]:
                edges.add((u, v))
    ks = sorted(k_side)
    for i, u in enumerate(ks):
        for v in ks[i + 1 :]:
            edges.add((u, v))
    return Graph.from_edges(c.n, edges)


# ---------------------------------------------------------------------------
# split graphs <-> XY-graphs (same n)


def split_to_xy(g: Graph) -> XYGraph:
    """X = S and Y = K of the S-max partition, keeping only cross edges."""
    if not is_split(g):
        raise DomainError("not a split graph")
    p = s_max_partition(g)
    xs = sorted(p.S)
    ys = sorted(p.K)
    y_index = {v: j for j, v in enumerate(ys)}
    edges = frozenset(
        (i, y_index[v]) for i, u in enumerate(xs) for v in g.neighbors(u) if v in y_index
    )
    return XYGraph(len(xs), len(ys), edges)


def xy_to_split(h: XYGraph) -> Graph:
    """Complete Y into a clique; X becomes the stable side."""
    isolates, _ = xy_isolates_universals(h)
    if isolates:
        raise DomainError(f"Y-vertices {sorted(isolates)} are isolates")
    edges = [(x, h.nx + y) for x, y in h.edges]
    for a in range(h.ny):
        for b in range(a + 1, h.ny):
            edges.append((h.nx + a, h.nx + b))
    return Graph.from_edges(h.nx + h.ny, edges)


# ---------------------------------------------------------------------------
# split graphs <-> bipartite posets


def split_to_poset(g: Graph) -> BipartitePoset:
    """Height-1 points are the K-side of the S-max partition."""
    if not is_split(g):
        raise DomainError("not a split graph")
    p = s_max_partition(g)
    xs = sorted(p.S)
    ys = sorted(p.K)
    y_index = {v: j for j, v in enumerate(ys)}
    below = frozenset(
        (i, y_index[v]) for i, u in enumerate(xs) for v in g.neighbors(u) if v in y_index
    )
    return BipartitePoset(len(xs), len(ys), below)


def poset_to_split(p: BipartitePoset) -> Graph:
    """Height-1 points become a clique; comparabilities become edges."""
    edges = [(a, p.n0 + b) for a, b in p.below]
    for a in range(p.n1):
        for b in range(a + 1, p.n1):
            edges.append((p.n0 + a, p.n0 + b))
    return Graph.from_edges(p.n0 + p.n1, edges)


# ---------------------------------------------------------------------------
# XY-graphs on n <-> unbalanced split graphs on n+1


def xy_to_unbalanced_split(h: XYGraph) -> Graph:
    """Add a fresh vertex to Y and complete Y into a clique (output has n+1 vertices)."""
    v = h.nx + h.ny
    edges = [(x, h.nx + y) for x, y in h.edges]
    k_side = list(range(h.nx, h.nx + h.ny)) + [v]
    for i, a in enumerate(k_side):
        for b in k_side[i + 1 :]:
            edges.append((a, b))
    return Graph.from_edges(v + 1, edges)


def unbalanced_split_to_xy(g: Graph, swing: Optional[int] = None) -> XYGraph:
    """Remove a swing vertex of the K-max partition (output has n-1 vertices)."""
    if not is_split(g):
        raise DomainError("not a split graph")
    p = k_max_partition(g)
    smask = _mask(p.S)
    swings = sorted(k for k in p.K if not g.adj[k] & smask)
    if not swings:
        raise DomainError("balanced split graph: no swing vertex to remove")
    if swing is None:
        swing = swings[0]
    elif swing not in swings:
        raise UsageError(f"vertex {swing} is not a swing vertex of the K-max partition")
    xs = sorted(p.S)
    ys = sorted(p.K - {swing})
    y_index = {v: j for j, v in enumerate(ys)}
    edges = frozenset(
        (i, y_index[v]) for i, u in enumerate(xs) for v in g.neighbors(u) if v in y_index
    )
    return XYGraph(len(xs), len(ys), edges)


# ---------------------------------------------------------------------------
# minimal set covers <-> bipartite posets


def cover_to_poset(c: SetCover, reps: Optional[Sequence[int]] = None) -> BipartitePoset:
    """Representatives sit at height 0, below their co-members."""
    reps = _check_reps(c, reps)
    h0 = sorted(reps)
    h1 = sorted(set(range(c.n)) - set(reps))
    a_index = {v: i for i, v in enumerate(h0)}
    b_index = {v: j for j, v in enumerate(h1)}
    below = set()
    for i, s in enumerate(c.sets):
        r = reps[i]
        for e in s:
            if e != r:
                below.add((a_index[r], b_index[e]))
    return BipartitePoset(len(h0), len(h1), frozenset(below))


def poset_to_cover(p: BipartitePoset) -> SetCover:
    """One set per height-0 point: the point together with its up-set."""
    sets = tuple(
        tuple([a] + sorted(p.n0 + b for b in p.up_set(a))) for a in range(p.n0)
    )
    return SetCover(p.n0 + p.n1, sets)


# ---------------------------------------------------------------------------
# XY-graphs <-> minimal set covers


def xy_to_cover(h: XYGraph) -> SetCover:
    """One set per X-vertex: the vertex plus its Y-neighbors."""
    isolates, _ = xy_isolates_universals(h)
    if isolates:
        raise DomainError(f"Y-vertices {sorted(isolates)} are isolates")
    sets = tuple(
        tuple([x] + sorted(h.nx + y for y in h.x_neighbors(x))) for x in range(h.nx)
    )
    return SetCover(h.nx + h.ny, sets)


def cover_to_xy(c: SetCover, reps: Optional[Sequence[int]] = None) -> XYGraph:
    """Representatives form X; co-membership becomes the bipartite edge set."""
    reps = _check_reps(c, reps)
    xs = sorted(reps)
    ys = sorted(set(range(c.n)) - set(reps))
    x_index = {v: i for i, v in enumerate(xs)}
    y_index = {v: j for j, v in enumerate(ys)}
    edges = set()
    for i, s in enumerate(c.sets):
        r = reps[i]
        for e in s:
            if e != r:
                edges.add((x_index[r], y_index[e]))
    return XYGraph(len(xs), len(ys), frozenset(edges))


# ---------------------------------------------------------------------------
# XY-graphs <-> bipartite posets (shared encoding)


def xy_to_poset(h: XYGraph) -> BipartitePoset:
    """X becomes height 0, Y height 1; edges become the order relation."""
    isolates, _ = xy_isolates_universals(h)
    if isolates:
        raise DomainError(f"Y-vertices {sorted(isolates)} are isolates")
    return BipartitePoset(h.nx, h.ny, frozenset(h.edges))


def poset_to_xy(p: BipartitePoset) -> XYGraph:
    return XYGraph(p.n0, p.n1, frozenset(p.below))


# ---------------------------------------------------------------------------
# compilation: split graphs


def compile_split_down(g: Graph, swing: Optional[int] = None) -> Graph:
    """Unbalanced split graph on n -> split graph on at most n-1 vertices."""
    if not is_split(g):
        raise DomainError("not a split graph")
    p = s_max_partition(g)
    kmask = _mask(p.K)
    swings = sorted(s for s in p.S if g.adj[s] & kmask == kmask)
    if not swings:
        raise DomainError("balanced split graph: no swing vertex (no balance witness)")
    if swing is None:
        swing = swings[0]
    elif swing not in swings:
        raise UsageError(f"vertex {swing} is not a swing vertex of the S-max partition")
    s_rest = p.S - {swing}
    smask = _mask(s_rest)
    keep = sorted(s_rest | {k for k in p.K if g.adj[k] & smask})
    index = {v: i for i, v in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u in keep for v in g.neighbors(u) if v in index and u < v
    ]
    return Graph.from_edges(len(keep), edges)


def compile_split_up(h: Graph, n: int) -> Graph:
    """Split graph on t <= n-1 vertices -> unbalanced split graph on n vertices.

    New vertex n-1 is the swing vertex; vertices t..n-2 pad the clique side.
    """
    if not is_split(h):
        raise DomainError("not a split graph")
    if h.n > n - 1:
        raise DomainError(f"input has {h.n} vertices; need at most {n - 1}")
    p = s_max_partition(h)
    swing = n - 1
    k_side = sorted(p.K) + list(range(h.n, n - 1))
    edges = h.edges()
    for i, a in enumerate(k_side):
        for b in k_side[i + 1 :]:
            edges.append((a, b))
    for a in k_side:
        edges.append((swing, a))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# compilation: minimal set covers


def compile_cover_down(c: SetCover, extremal: Optional[int] = None) -> SetCover:
    """Drop an extremal set together with the elements only it covered."""
    if not is_minimal(c):
        raise DomainError("cover is not minimal")
    candidates = extremal_sets(c)
    if not candidates:
        raise DomainError("balanced cover: no set of size |V|-|C|+1 (no balance witness)")
    if extremal is None:
        extremal = candidates[0]
    elif extremal not in candidates:
        raise UsageError(f"set {extremal} does not have the extremal size")
    membership = [0] * c.n
    for s in c.sets:
        for e in s:
            membership[e] += 1
    dropped = {e for e in c.sets[extremal] if membership[e] == 1}
    keep = sorted(set(range(c.n)) - dropped)
    index = {e: i for i, e in enumerate(keep)}
    sets = tuple(
        tuple(index[e] for e in s) for j, s in enumerate(c.sets) if j != extremal
    )
    return SetCover(len(keep), sets)


def compile_cover_up(c: SetCover, n: int, reps: Optional[Sequence[int]] = None) -> SetCover:
    """Add a set holding n-t fresh elements plus every non-representative."""
    reps = _check_reps(c, reps)
    if c.n > n - 1:
        raise DomainError(f"input has {c.n} elements; need at most {n - 1}")
    fresh = range(c.n, n)
    extremal = tuple(sorted(set(fresh) | (set(range(c.n)) - set(reps))))
    return SetCover(n, c.sets + (extremal,))


# ---------------------------------------------------------------------------
# compilation: XY-graphs


def compile_xy_down(h: XYGraph, universal: Optional[int] = None) -> XYGraph:
    """Drop a universal X-vertex and the Y-vertices left without a neighbor."""
    isolates, universals = xy_isolates_universals(h)
    if isolates:
        raise DomainError(f"Y-vertices {sorted(isolates)} are isolates")
    if not universals:
        raise DomainError("balanced XY-graph: no universal X-vertex (no balance witness)")
    if universal is None:
        universal = min(universals)
    elif universal not in universals:
        raise UsageError(f"X-vertex {universal} is not universal")
    xs = [x for x in range(h.nx) if x != universal]
    covered = {y for x, y in h.edges if x != universal}
    ys = sorted(covered)
    x_index = {v: i for i, v in enumerate(xs)}
    y_index = {v: j for j, v in enumerate(ys)}
    edges = frozenset(
        (x_index[x], y_index[y]) for x, y in h.edges if x != universal
    )
    return XYGraph(len(xs), len(ys), edges)


def compile_xy_up(h: XYGraph, n: int) -> XYGraph:
    """Pad Y with fresh vertices, then attach a universal X-vertex."""
    isolates, _ = xy_isolates_universals(h)
    if isolates:
        raise DomainError(f"Y-vertices {sorted(isolates)} are isolates")
    t = h.nx + h.ny
    if t > n - 1:
        raise DomainError(f"input has {t} vertices; need at most {n - 1}")
    ny = h.ny + (n - 1 - t)
    u = h.nx
    edges = set(h.edges) | {(u, y) for y in range(ny)}
    return XYGraph(h.nx + 1, ny, frozenset(edges))


# ---------------------------------------------------------------------------
# compilation: bipartite posets


def compile_poset_down(p: BipartitePoset, demote: Optional[int] = None) -> BipartitePoset:
    """Remove the full support points, demoting a suitable height-1 point if needed.

    If every height-1 point lies above some partial support point the full
    support points simply disappear; otherwise a height-1 point whose
    down-set is exactly the full support set is demoted to height 0 and put
    below every other height-1 point.
    """
    full, partial = poset_support(p)
    if not full:
        raise DomainError("balanced poset: no full support point (no balance witness)")
    downsets = {b: p.down_set(b) for b in range(p.n1)}
    if all(downsets[b] & partial for b in range(p.n1)):
        if demote is not None:
            raise UsageError("no height-1 point needs demoting for this poset")
        h0 = sorted(partial)
        a_index = {v: i for i, v in enumerate(h0)}
        below = frozenset((a_index[a], b) for a, b in p.below if a in partial)
        return BipartitePoset(len(h0), p.n1, below)
    candidates = sorted(b for b in range(p.n1) if not downsets[b] & partial)
    if demote is None:
        demote = candidates[0]
    elif demote not in candidates:
        raise UsageError(f"height-1 point {demote} is not comparable to exactly the full support points")
    h0 = sorted(partial)
    a_index = {v: i for i, v in enumerate(h0)}
    u_new = len(h0)
    h1 = [b for b in range(p.n1) if b != demote]
    b_index = {v: j for j, v in enumerate(h1)}
    below = {(a_index[a], b_index[b]) for a, b in p.below if a in partial and b != demote}
    below |= {(u_new, j) for j in range(len(h1))}
    return BipartitePoset(len(h0) + 1, len(h1), frozenset(below))


def compile_poset_up(q: BipartitePoset, n: int, promote: Optional[int] = None) -> BipartitePoset:
    """Add n-t fresh full-support points, promoting an old one if any exists."""
    t = q.n0 + q.n1
    if t > n - 1:
        raise DomainError(f"input has {t} points; need at most {n - 1}")
    full, _ = poset_support(q)
    fresh = n - t
    if not full:
        if promote is not None:
            raise UsageError("no full support point to promote in this poset")
        below = set(q.below)
        below |= {(q.n0 + i, b) for i in range(fresh) for b in range(q.n1)}
        return BipartitePoset(q.n0 + fresh, q.n1, frozenset(below))
    if promote is None:
        promote = min(full)
    elif promote not in full:
        raise UsageError(f"height-0 point {promote} is not a full support point")
    # The promoted point joins height 1 with the last id (q.n1) and keeps
    # only its comparabilities to the fresh points.
    h0 = [a for a in range(q.n0) if a != promote]
    a_index = {v: i for i, v in enumerate(h0)}
    below = {(a_index[a], b) for a, b in q.below if a != promote}
    below |= {(len(h0) + i, b) for i in range(fresh) for b in range(q.n1 + 1)}
    return BipartitePoset(len(h0) + fresh, q.n1 + 1, frozenset(below))


# ---------------------------------------------------------------------------
# named maps with reports


@dataclass(frozen=True)
class MapReport:
    """Audit record of one map application on canonically labeled objects."""

    input_key: CanonicalKey
    output_key: CanonicalKey
    choices: tuple[tuple[str, int], ...]


def _rep_choices(c: SetCover) -> tuple[tuple[str, int], ...]:
    return tuple((f"rep[{i}]", r) for i, r in enumerate(default_reps(c)))


def _swing_s_choice(g: Graph) -> tuple[tuple[str, int], ...]:
    p = s_max_partition(g)
    kmask = _mask(p.K)
    swings = sorted(s for s in p.S if g.adj[s] & kmask == kmask)
    return (("swing", swings[0]),) if swings else ()


def _swing_k_choice(g: Graph) -> tuple[tuple[str, int], ...]:
    p = k_max_partition(g)
    smask = _mask(p.S)
    swings = sorted(k for k in p.K if not g.adj[k] & smask)
    return (("swing", swings[0]),) if swings else ()


def _extremal_choice(c: SetCover) -> tuple[tuple[str, int], ...]:
    candidates = extremal_sets(c)
    return (("extremal_set", candidates[0]),) if candidates else ()


def _universal_choice(h: XYGraph) -> tuple[tuple[str, int], ...]:
    _, universals = xy_isolates_universals(h)
    return (("universal", min(universals)),) if universals else ()


def _demote_choice(p: BipartitePoset) -> tuple[tuple[str, int], ...]:
    full, partial = poset_support(p)
    if not full:
        return ()
    candidates = sorted(
        b for b in range(p.n1) if not p.down_set(b) & partial
    )
    return (("demote", candidates[0]),) if candidates else ()


def _promote_choice(q: BipartitePoset) -> tuple[tuple[str, int], ...]:
    full, _ = poset_support(q)
    return (("promote", min(full)),) if full else ()


def _no_choices(_obj) -> tuple[tuple[str, int], ...]:
    return ()


@dataclass(frozen=True)
class MapSpec:
    fn: Callable
    domain: str
    codomain: str
    needs_n: bool
    choices_of: Callable


MAPS: dict[str, MapSpec] = {
    "split_to_cover": MapSpec(split_to_cover, "split", "cover", False, _no_choices),
    "cover_to_split": MapSpec(cover_to_split, "cover", "split", False, _rep_choices),
    "split_to_xy": MapSpec(split_to_xy, "split", "xy", False, _no_choices),
    "xy_to_split": MapSpec(xy_to_split, "xy", "split", False, _no_choices),
    "split_to_poset": MapSpec(split_to_poset, "split", "poset", False, _no_choices),
    "poset_to_split": MapSpec(poset_to_split, "poset", "split", False, _no_choices),
    "xy_to_unbalanced_split": MapSpec(
        xy_to_unbalanced_split, "xy", "split", False, _no_choices
    ),
    "unbalanced_split_to_xy": MapSpec(
        unbalanced_split_to_xy, "split", "xy", False, _swing_k_choice
    ),
    "cover_to_poset": MapSpec(cover_to_poset, "cover", "poset", False, _rep_choices),
    "poset_to_cover": MapSpec(poset_to_cover, "poset", "cover", False, _no_choices),
    "xy_to_cover": MapSpec(xy_to_cover, "xy", "cover", False, _no_choices),
    "cover_to_xy": MapSpec(cover_to_xy, "cover", "xy", False, _rep_choices),
    "xy_to_poset": MapSpec(xy_to_poset, "xy", "poset", False, _no_choices),
    "poset_to_xy": MapSpec(poset_to_xy, "poset", "xy", False, _no_choices),
    "compile_split_down": MapSpec(
        compile_split_down, "split", "split", False, _swing_s_choice
    ),
    "compile_split_up": MapSpec(compile_split_up, "split", "split", True, _no_choices),
    "compile_cover_down": MapSpec(
        compile_cover_down, "cover", "cover", False, _extremal_choice
    ),
    "compile_cover_up": MapSpec(compile_cover_up, "cover", "cover", True, _rep_choices),
    "compile_xy_down": MapSpec(compile_xy_down, "xy", "xy", False, _universal_choice),
    "compile_xy_up": MapSpec(compile_xy_up, "xy", "xy", True, _no_choices),
    "compile_poset_down": MapSpec(
        compile_poset_down, "poset", "poset", False, _demote_choice
    ),
    "compile_poset_up": MapSpec(compile_poset_up, "poset", "poset", True, _promote_choice),
}


def apply_named_map(name: str, obj, n: Optional[int] = None):
    """Run a named map on the canonical form of ``obj``.

    Returns (canonical output object, MapReport).  Batch callers sort their
    outputs by input key, so identical batches serialize identically.
    """
    if name not in MAPS:
        raise UsageError(f"unknown map {name!r}; known: {', '.join(sorted(MAPS))}")
    spec = MAPS[name]
    tag = class_tag_of(obj)
    if tag != spec.domain:
        raise UsageError(f"map {name} expects a {spec.domain} object, got {tag}")
    canon_in, key_in = canonical_object(obj)
    if spec.needs_n:
        if n is None:
            raise UsageError(f"map {name} needs a target size n")
        out = spec.fn(canon_in, n)
    else:
        out = spec.fn(canon_in)
    choices = spec.choices_of(canon_in)
    canon_out, key_out = canonical_object(out)
    return canon_out, MapReport(key_in, key_out, choices)
