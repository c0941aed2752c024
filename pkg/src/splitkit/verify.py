"""Executable suites binding the counting and bijection claims to the code.

Each suite consumes full censuses from :mod:`splitkit.census`, never
generating objects itself, and reports the exact failing keys so a failure
can be replayed through the CLI.  All suites are deterministic.  The
triangle suite is informational only: commutativity of composed bijections
is measured, not asserted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import biject, census
from .canon import canon_key
from .classify import (
    balance_of,
    loyal_elements,
    extremal_sets,
    k_max_partition,
    poset_support,
    s_max_partition,
    xy_isolates_universals,
)
from .core import SetCover, UsageError, _mask, size_of

# Reference counts.  Split-graph totals are OEIS A048194 (prepended with the
# single empty object at n=0); the unbalanced totals are forced from them by
# the compilation identity unbalanced(n) = sum of totals below n.
SPLIT_TOTALS = (1, 1, 2, 4, 9, 21, 56, 164, 557)
UNBALANCED_SPLIT = (0, 1, 2, 4, 8, 17, 38, 94, 258)


@dataclass
class SuiteResult:
    """Outcome of one verification suite; empty failures means it passed."""

    suite: str
    params: dict
    checked: int
    failures: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_doc(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "failures": [
                {"input": k, "expected": e, "observed": o} for k, e, o in self.failures
            ],
        }


_PAIRS = {
    "split-cover": ("split", biject.split_to_cover, "cover", biject.cover_to_split),
    "split-xy": ("split", biject.split_to_xy, "xy", biject.xy_to_split),
    "split-poset": ("split", biject.split_to_poset, "poset", biject.poset_to_split),
    "cover-xy": ("cover", biject.cover_to_xy, "xy", biject.xy_to_cover),
    "cover-poset": ("cover", biject.cover_to_poset, "poset", biject.poset_to_cover),
    "xy-poset": ("xy", biject.xy_to_poset, "poset", biject.poset_to_xy),
}

PAIR_NAMES = tuple(_PAIRS) + ("xy-shift",)
BALANCE_PAIR_NAMES = tuple(_PAIRS)


def _iter(tag: str, n: int, workers: int = 1):
    return census.iter_objects(tag, n, require_no_y_isolates=(tag == "xy"), workers=workers)


def verify_roundtrip(pair: str, max_n: int, workers: int = 1) -> SuiteResult:
    """inverse(forward(o)) and forward(inverse(o)) are identities on keys."""
    result = SuiteResult("roundtrip", {"pair": pair, "max_n": max_n}, 0)
    if pair == "xy-shift":
        for n in range(max_n + 1):
            for h in census.iter_xy(n, require_no_y_isolates=False, workers=workers):
                result.checked += 1
                back = biject.unbalanced_split_to_xy(biject.xy_to_unbalanced_split(h))
                if canon_key(back) != canon_key(h):
                    result.failures.append((canon_key(h).hex, canon_key(h).hex, canon_key(back).hex))
            for g in _iter("split", n + 1):
                if balance_of(g).is_balanced:
                    continue
                result.checked += 1
                back = biject.xy_to_unbalanced_split(biject.unbalanced_split_to_xy(g))
                if canon_key(back) != canon_key(g):
                    result.failures.append((canon_key(g).hex, canon_key(g).hex, canon_key(back).hex))
        return result
    if pair not in _PAIRS:
        raise UsageError(f"unknown pair {pair!r}; known: {', '.join(PAIR_NAMES)}")
    dom, fwd, cod, inv = _PAIRS[pair]
    for n in range(max_n + 1):
        for obj in _iter(dom, n, workers):
            result.checked += 1
            back = inv(fwd(obj))
            if canon_key(back) != canon_key(obj):
                result.failures.append((canon_key(obj).hex, canon_key(obj).hex, canon_key(back).hex))
        for obj in _iter(cod, n, workers):
            result.checked += 1
            back = fwd(inv(obj))
            if canon_key(back) != canon_key(obj):
                result.failures.append((canon_key(obj).hex, canon_key(obj).hex, canon_key(back).hex))
    return result


def verify_balance(pair: str, max_n: int, workers: int = 1) -> SuiteResult:
    """Balance(o) equals Balance(map(o)) in both directions of a pair."""
    if pair not in _PAIRS:
        raise UsageError(f"unknown pair {pair!r}; known: {', '.join(BALANCE_PAIR_NAMES)}")
    dom, fwd, cod, inv = _PAIRS[pair]
    result = SuiteResult("balance", {"pair": pair, "max_n": max_n}, 0)
    for n in range(max_n + 1):
        for obj in _iter(dom, n, workers):
            result.checked += 1
            want = balance_of(obj).value
            got = balance_of(fwd(obj)).value
            if want != got:
                result.failures.append((canon_key(obj).hex, want, got))
        for obj in _iter(cod, n, workers):
            result.checked += 1
            want = balance_of(obj).value
            got = balance_of(inv(obj)).value
            if want != got:
                result.failures.append((canon_key(obj).hex, want, got))
    return result


_COMPILE = {
    "split": (biject.compile_split_down, biject.compile_split_up),
    "cover": (biject.compile_cover_down, biject.compile_cover_up),
    "xy": (biject.compile_xy_down, biject.compile_xy_up),
    "poset": (biject.compile_poset_down, biject.compile_poset_up),
}


def verify_compilation(class_tag: str, n: int, workers: int = 1) -> SuiteResult:
    """compile_down is a key-level bijection from the unbalanced census at n
    onto the union of the censuses at 0..n-1, with compile_up its two-sided
    inverse."""
    if class_tag not in _COMPILE:
        raise UsageError(f"unknown class {class_tag!r}")
    down, up = _COMPILE[class_tag]
    result = SuiteResult("compilation", {"class": class_tag, "n": n}, 0)
    union_keys = set()
    for t in range(n):
        union_keys.update(census.enumerate_class(class_tag, t, True, workers).keys)
    image = {}
    for obj in _iter(class_tag, n, workers):
        if balance_of(obj).is_balanced:
            continue
        result.checked += 1
        key = canon_key(obj)
        small = down(obj)
        small_key = canon_key(small)
        if small_key in image:
            result.failures.append((key.hex, "injective image", f"collides with {image[small_key].hex}"))
        image[small_key] = key
        if small_key not in union_keys:
            result.failures.append((key.hex, "image inside union of smaller censuses", small_key.hex))
        back = up(small, n)
        if canon_key(back) != key:
            result.failures.append((key.hex, key.hex, canon_key(back).hex))
    missing = union_keys - set(image)
    for key in sorted(missing):
        result.failures.append((key.hex, "hit by compile_down", "missed"))
    # The other inverse direction: up then down returns every small object.
    for t in range(n):
        for obj in _iter(class_tag, t, workers):
            result.checked += 1
            key = canon_key(obj)
            big = up(obj, n)
            if balance_of(big).is_balanced:
                result.failures.append((key.hex, "compile_up output unbalanced", "balanced"))
                continue
            if size_of(big) != n:
                result.failures.append((key.hex, f"size {n}", str(size_of(big))))
                continue
            back = down(big)
            if canon_key(back) != key:
                result.failures.append((key.hex, key.hex, canon_key(back).hex))
    return result


# ---------------------------------------------------------------------------
# choice independence


def _rep_spaces(c: SetCover):
    return [dict(reps=reps) for reps in itertools.product(*loyal_elements(c))]


def _choice_space(map_name: str, obj) -> list[dict]:
    if map_name in ("cover_to_split", "cover_to_xy", "cover_to_poset"):
        return _rep_spaces(obj)
    if map_name == "unbalanced_split_to_xy":
        p = k_max_partition(obj)
        smask = _mask(p.S)
        return [dict(swing=k) for k in sorted(p.K) if not obj.adj[k] & smask]
    if map_name == "compile_split_down":
        p = s_max_partition(obj)
        kmask = _mask(p.K)
        return [dict(swing=s) for s in sorted(p.S) if obj.adj[s] & kmask == kmask]
    if map_name == "compile_cover_down":
        return [dict(extremal=i) for i in extremal_sets(obj)]
    if map_name == "compile_cover_up":
        return _rep_spaces(obj)
    if map_name == "compile_xy_down":
        _, universals = xy_isolates_universals(obj)
        return [dict(universal=u) for u in sorted(universals)]
    if map_name == "compile_poset_down":
        full, partial = poset_support(obj)
        if not full:
            return []
        cands = [b for b in range(obj.n1) if not obj.down_set(b) & partial]
        return [dict(demote=b) for b in cands] or [dict()]
    if map_name == "compile_poset_up":
        full, _ = poset_support(obj)
        return [dict(promote=v) for v in sorted(full)] or [dict()]
    return []  # the map has no choice points


CHOICE_MAPS = (
    "cover_to_split",
    "cover_to_xy",
    "cover_to_poset",
    "unbalanced_split_to_xy",
    "compile_split_down",
    "compile_cover_down",
    "compile_cover_up",
    "compile_xy_down",
    "compile_poset_down",
    "compile_poset_up",
)


def verify_choice_independence(map_name: str, max_n: int, workers: int = 1) -> SuiteResult:
    """Every admissible choice at every choice point yields the same key."""
    if map_name not in biject.MAPS:
        raise UsageError(f"unknown map {map_name!r}")
    spec = biject.MAPS[map_name]
    result = SuiteResult("choice", {"map": map_name, "max_n": max_n}, 0)
    unbalanced_only = map_name in (
        "unbalanced_split_to_xy",
        "compile_split_down",
        "compile_cover_down",
        "compile_xy_down",
        "compile_poset_down",
    )
    for n in range(max_n + 1):
        for obj in _iter(spec.domain, n, workers):
            if unbalanced_only and balance_of(obj).is_balanced:
                continue
            space = _choice_space(map_name, obj)
            if not space:
                continue
            targets = [n + 1, n + 2] if spec.needs_n else [None]
            for target in targets:
                reference = None
                for kwargs in space:
                    result.checked += 1
                    out = (
                        spec.fn(obj, target, **kwargs) if target is not None else spec.fn(obj, **kwargs)
                    )
                    key = canon_key(out)
                    if reference is None:
                        reference = key
                    elif key != reference:
                        result.failures.append((canon_key(obj).hex, reference.hex, key.hex))
    return result


# ---------------------------------------------------------------------------
# counts and the triangle report


def verify_counts(max_n: int, workers: int = 1) -> SuiteResult:
    """Census counts match the reference sequences and agree across classes."""
    table = census.count_table(max_n, workers)
    result = SuiteResult("counts", {"max_n": max_n, "table": table}, 0)
    for row in table:
        n = row["n"]

        def expect(name, want, got):
            result.checked += 1
            if want != got:
                result.failures.append((f"n={n}:{name}", str(want), str(got)))

        if n < len(SPLIT_TOTALS):
            expect("split_total", SPLIT_TOTALS[n], row["split_total"])
        if n < len(UNBALANCED_SPLIT):
            expect("split_unbalanced", UNBALANCED_SPLIT[n], row["split_unbalanced"])
        for other in ("cover", "poset", "xy"):
            expect(f"{other}_total", row["split_total"], row[f"{other}_total"])
            expect(f"{other}_balanced", row["split_balanced"], row[f"{other}_balanced"])
            expect(f"{other}_unbalanced", row["split_unbalanced"], row[f"{other}_unbalanced"])
        expect("cumulative", row["cumulative_below"], row["split_unbalanced"])
        if n + 1 < len(UNBALANCED_SPLIT):
            expect("xy_all_total", UNBALANCED_SPLIT[n + 1], row["xy_all_total"])
    return result


def verify_triangle(max_n: int, workers: int = 1) -> SuiteResult:
    """Measure (do not assert) whether split->cover->poset matches split->poset."""
    agree = 0
    total = 0
    for n in range(max_n + 1):
        for g in _iter("split", n, workers):
            total += 1
            direct = canon_key(biject.split_to_poset(g))
            composed = canon_key(biject.cover_to_poset(biject.split_to_cover(g)))
            if direct == composed:
                agree += 1
    params = {
        "max_n": max_n,
        "agree": agree,
        "total": total,
        "agreement": 1.0 if total == 0 else agree / total,
    }
    return SuiteResult("triangle", params, total)


# ---------------------------------------------------------------------------
# whole battery


def run_suite(name: str, max_n: int, workers: int = 1) -> list[SuiteResult]:
    if name == "roundtrip":
        # The shift pair compares censuses at n and n+1, so cap it one lower.
        out = [verify_roundtrip(p, max_n, workers) for p in _PAIRS]
        out.append(verify_roundtrip("xy-shift", max(max_n - 1, 0), workers))
        return out
    if name == "balance":
        return [verify_balance(p, max_n, workers) for p in BALANCE_PAIR_NAMES]
    if name == "compilation":
        return [
            verify_compilation(tag, n, workers)
            for tag in _COMPILE
            for n in range(1, max_n + 1)
        ]
    if name == "choice":
        return [verify_choice_independence(m, max_n, workers) for m in CHOICE_MAPS]
    if name == "counts":
        return [verify_counts(max_n, workers)]
    if name == "triangle":
        return [verify_triangle(max_n, workers)]
    raise UsageError(f"unknown suite {name!r}")


ASSERTING_SUITES = ("roundtrip", "balance", "compilation", "choice", "counts")


def run_all(max_n: int, workers: int = 1, include_triangle: bool = True) -> list[SuiteResult]:
    results = []
    for name in ASSERTING_SUITES:
        results.extend(run_suite(name, max_n, workers))
    if include_triangle:
        results.extend(run_suite("triangle", max_n, workers))
    return results
