"""Structural analysis: split recognition, partitions, and balance.

Each of the four classes has an "unbalanced" subclass characterized by the
existence of a structure: a swing vertex (split graphs), a set of size
|V| - |C| + 1 (minimal covers), a universal vertex in X (XY-graphs with no
isolates in Y), a full support point (bipartite posets).  Vacuous cases
resolve uniformly toward "structure exists": K = {} makes every S-vertex a
swing, Y = {} makes every X-vertex universal, and a poset with no height-1
points makes every height-0 point full support.
"""

from __future__ import annotations

from .core import (
    Balance,
    BipartitePoset,
    DomainError,
    Graph,
    KSPartition,
    SetCover,
    SplitAnalysis,
    XYGraph,
    _mask,
    validate,
)


# ---------------------------------------------------------------------------
# split graphs


def _degree_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _degree_split_data(g: Graph):
    """(is_split, m) for the descending-degree criterion.

    With degrees d_1 >= ... >= d_n and m = max{i : d_i >= i-1}, the graph is
    split iff sum(d_i, i<=m) = m(m-1) + sum(d_i, i>m); then omega = m and
    the m highest-degree vertices form a maximum clique.
    """
    order = _degree_order(g)
    degs = [g.degree(v) for v in order]
    m = 0
    for i in range(1, g.n + 1):
        if degs[i - 1] >= i - 1:
            m = i
    head = sum(degs[:m])
    tail = sum(degs[m:])
    return head == m * (m - 1) + tail, m, order


def is_split(g: Graph) -> bool:
    ok, _, _ = _degree_split_data(g)
    return ok


def _require_split(g: Graph):
    ok, m, order = _degree_split_data(g)
    if not ok:
        raise DomainError(f"not a split graph (n={g.n})")
    return m, order


def k_max_partition(g: Graph) -> KSPartition:
    """Partition with |K| = omega(G): the m highest-degree vertices."""
    m, order = _require_split(g)
    p = KSPartition(g, frozenset(order[:m]), frozenset(order[m:]))
    if validate(p):
        raise AssertionError(f"degree criterion produced an invalid partition: {validate(p)}")
    return p


def s_max_partition(g: Graph) -> KSPartition:
    """Partition with |S| = alpha(G).

    Obtained from the K-max partition by moving one swing vertex (a
    K-vertex with no S-neighbor) into S when one exists.  Unique up to
    automorphism of the graph.
    """
    p = k_max_partition(g)
    smask = _mask(p.S)
    swings = sorted(k for k in p.K if not g.adj[k] & smask)
    if swings:
        k = swings[0]
        return KSPartition(g, p.K - {k}, p.S | {k})
    return p


def omega_alpha(g: Graph) -> SplitAnalysis:
    """Exact clique and stability numbers of a split graph."""
    p = k_max_partition(g)
    smask = _mask(p.S)
    has_swing = any(not g.adj[k] & smask for k in p.K)
    return SplitAnalysis(omega=len(p.K), alpha=len(p.S) + (1 if has_swing else 0))


def swing_vertices(g: Graph, p: KSPartition) -> frozenset[int]:
    """S-vertices adjacent to all of K plus K-vertices with no S-neighbor.

    For a balanced partition both sides are automatically empty.
    """
    problems = validate(p)
    if problems:
        raise DomainError("invalid partition: " + "; ".join(problems))
    kmask = _mask(p.K)
    smask = _mask(p.S)
    from_s = {s for s in p.S if g.adj[s] & kmask == kmask}
    from_k = {k for k in p.K if not g.adj[k] & smask}
    return frozenset(from_s | from_k)


def trichotomy(g: Graph, p: KSPartition) -> SplitAnalysis:
    """Classify a partition as case (i)/(ii)/(iii) of the split trichotomy.

    Exactly one case holds: (i) K-max and S-max, (ii) |K| = omega-1 with a
    swing vertex in S, (iii) |S| = alpha-1 with a swing vertex in K.
    """
    problems = validate(p)
    if problems:
        raise DomainError("invalid partition: " + "; ".join(problems))
    oa = omega_alpha(g)
    k_full = len(p.K) == oa.omega
    s_full = len(p.S) == oa.alpha
    if k_full and s_full:
        return SplitAnalysis(oa.omega, oa.alpha, "balanced", None)
    kmask = _mask(p.K)
    smask = _mask(p.S)
    if s_full and len(p.K) == oa.omega - 1:
        swings = sorted(s for s in p.S if g.adj[s] & kmask == kmask)
        if not swings:
            raise AssertionError("case (ii) partition without a swing vertex")
        return SplitAnalysis(oa.omega, oa.alpha, "unbalanced_S_max", swings[0])
    if k_full and len(p.S) == oa.alpha - 1:
        swings = sorted(k for k in p.K if not g.adj[k] & smask)
        if not swings:
            raise AssertionError("case (iii) partition without a swing vertex")
        return SplitAnalysis(oa.omega, oa.alpha, "unbalanced_K_max", swings[0])
    raise AssertionError(
        f"partition sizes ({len(p.K)},{len(p.S)}) fit no trichotomy case for "
        f"omega={oa.omega} alpha={oa.alpha}"
    )


def balance_split(g: Graph) -> Balance:
    """Balanced iff some partition is simultaneously K-max and S-max.

    Equivalently, unbalanced iff the S-max partition has a swing vertex;
    the least such vertex is the witness.
    """
    p = s_max_partition(g)
    kmask = _mask(p.K)
    swings = sorted(s for s in p.S if g.adj[s] & kmask == kmask)
    if swings:
        return Balance("unbalanced", swings[0])
    return Balance("balanced")


def maximal_cliques_split(g: Graph) -> list[frozenset[int]]:
    """All maximal cliques of a split graph.

    Every maximal clique is either {s} plus its neighborhood for some
    S-vertex, or the clique side K itself when nothing extends it.
    """
    p = k_max_partition(g)
    kmask = _mask(p.K)
    cliques = [frozenset({s} | set(g.neighbors(s))) for s in sorted(p.S)]
    if p.K and not any(g.adj[s] & kmask == kmask for s in p.S):
        cliques.append(frozenset(p.K))
    return cliques


def loyal_vertices_split(g: Graph) -> frozenset[int]:
    """Vertices lying in exactly one maximal clique."""
    cliques = maximal_cliques_split(g)
    counts = [0] * g.n
    for c in cliques:
        for v in c:
            counts[v] += 1
    return frozenset(v for v in range(g.n) if counts[v] == 1)


# ---------------------------------------------------------------------------
# set covers


def loyal_elements(c: SetCover) -> tuple[tuple[int, ...], ...]:
    """Per-set tuples of loyal elements (elements lying in that set only)."""
    membership = [0] * c.n
    for s in c.sets:
        for e in s:
            membership[e] += 1
    return tuple(tuple(e for e in s if membership[e] == 1) for s in c.sets)


def _require_cover(c: SetCover):
    problems = validate(c)
    if problems:
        raise DomainError("not a set cover: " + "; ".join(problems))


def is_minimal(c: SetCover) -> bool:
    """True iff every set contains a loyal element.

    Equivalent to no set being contained in the union of the others.
    """
    _require_cover(c)
    return all(loyal for loyal in loyal_elements(c)) if c.sets else True


def _require_minimal(c: SetCover):
    _require_cover(c)
    if not is_minimal(c):
        raise DomainError("cover is not minimal: some set has no loyal element")


def extremal_sets(c: SetCover) -> list[int]:
    """Indices of sets of size |V| - |C| + 1, the unbalanced witnesses."""
    threshold = c.n - len(c.sets) + 1
    return [i for i, s in enumerate(c.sets) if len(s) == threshold]


def balance_cover(c: SetCover) -> Balance:
    """Unbalanced iff some set has size |V| - |C| + 1 (witness: its index)."""
    _require_minimal(c)
    extremal = extremal_sets(c)
    if extremal:
        return Balance("unbalanced", extremal[0])
    return Balance("balanced")


# ---------------------------------------------------------------------------
# XY-graphs


def xy_isolates_universals(g: XYGraph) -> tuple[frozenset[int], frozenset[int]]:
    """(isolates in Y, universals in X).

    A Y-vertex is an isolate if it has no X-neighbor; an X-vertex is
    universal if adjacent to every Y-vertex (vacuously all of X when Y is
    empty).
    """
    x_deg = [0] * g.nx
    y_deg = [0] * g.ny
    for x, y in g.edges:
        x_deg[x] += 1
        y_deg[y] += 1
    isolates = frozenset(y for y in range(g.ny) if y_deg[y] == 0)
    universals = frozenset(x for x in range(g.nx) if x_deg[x] == g.ny)
    return isolates, universals


def balance_xy(g: XYGraph) -> Balance:
    """Unbalanced iff a universal X-vertex exists; needs no isolates in Y."""
    isolates, universals = xy_isolates_universals(g)
    if isolates:
        raise DomainError(
            f"balance undefined: Y-vertices {sorted(isolates)} are isolates"
        )
    if universals:
        return Balance("unbalanced", min(universals))
    return Balance("balanced")


# ---------------------------------------------------------------------------
# bipartite posets


def poset_support(p: BipartitePoset) -> tuple[frozenset[int], frozenset[int]]:
    """(full support points, partial support points) among height-0 points.

    A full support point is comparable to every height-1 point; with no
    height-1 points every height-0 point is vacuously full support.
    """
    up_counts = [0] * p.n0
    for a, _ in p.below:
        up_counts[a] += 1
    full = frozenset(a for a in range(p.n0) if up_counts[a] == p.n1)
    partial = frozenset(range(p.n0)) - full
    return full, partial


def balance_poset(p: BipartitePoset) -> Balance:
    """Unbalanced iff the poset contains a full support point."""
    full, _ = poset_support(p)
    if full:
        return Balance("unbalanced", min(full))
    return Balance("balanced")


# ---------------------------------------------------------------------------
# dispatch


def balance_of(obj) -> Balance:
    if isinstance(obj, Graph):
        if not is_split(obj):
            raise DomainError("not a split graph")
        return balance_split(obj)
    if isinstance(obj, SetCover):
        return balance_cover(obj)
    if isinstance(obj, XYGraph):
        return balance_xy(obj)
    if isinstance(obj, BipartitePoset):
        return balance_poset(obj)
    raise DomainError(f"no balance notion for {type(obj).__name__}")
