"""Partial compositions of finite posets.

Given an outer poset A, a vertex a of A and a nonempty inner poset B, all four
composition families live on the common ground set (A minus a) plus B and keep
the internal relations of both arguments.  They differ only in which cross
pairs are added:

  bullet   every x with x <= a in A sits below all of B, and all of B sits
           below every y with a <= y (full saturation both ways);
  down     like bullet below, but upward only the minimal elements of B are
           attached (the inner poset "hangs" by its minima);
  up       like bullet above, but downward only the maximal elements of B
           receive the attachment;
  circ     the formal sum of *all* partial orders on the same ground set that
           restrict to B exactly, keep B convex, and collapse back onto A when
           B is shrunk to a point.  Every term refines the bullet composition.

Candidates for circ are enumerated as subsets of the "free" pairs (the strict
bullet pairs not internal to B), walked in order of interval size so that a
pair is decided only after everything that could force it; branches that
already violate transitivity are cut.  At the supported sizes this is cheap.

When inner labels clash with remaining outer labels, the inner ones get primes
appended ("x" becomes "x'"), deterministically; the applied renaming is kept
on the insertion site.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .core import (
    GroundSetMismatch,
    Poset,
    PosetError,
    extrema,
    opposite,
    relabel,
)
from .report import VerificationReport, timed


class VertexNotFound(PosetError):
    pass


class EmptyInner(PosetError):
    pass


class FormalSum:
    """Integer combination of labeled posets on one common ground set.

    Terms are keyed by their order relation; coefficients of zero are dropped.
    Equality is coefficient-wise, i.e. multiset equality for sums of posets.
    """

    __slots__ = ("ground", "terms")

    def __init__(self, ground: tuple[str, ...], terms: dict[tuple[int, ...], int]):
        self.ground = ground
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def zero(cls, ground: Iterable[str]) -> "FormalSum":
        return cls(tuple(sorted(ground)), {})

    @classmethod
    def of(cls, *posets: Poset) -> "FormalSum":
        if not posets:
            raise PosetError("FormalSum.of needs at least one poset")
        ground = posets[0].elements
        terms: dict[tuple[int, ...], int] = {}
        for p in posets:
            if p.elements != ground:
                raise GroundSetMismatch("sum terms must share one ground set")
            terms[p._up] = terms.get(p._up, 0) + 1
        return cls(ground, terms)

    def posets(self) -> list[tuple[Poset, int]]:
        out = [(Poset(self.ground, rows), c) for rows, c in self.terms.items()]
        out.sort(key=lambda pc: pc[0]._up)
        return out

    def map_terms(self, fn: Callable[[Poset], "FormalSum"]) -> "FormalSum":
        acc: "FormalSum | None" = None
        for p, c in self.posets():
            contrib = c * fn(p)
            acc = contrib if acc is None else acc + contrib
        if acc is None:
            raise PosetError("cannot map over an empty sum")
        return acc

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if self.ground != other.ground:
            raise GroundSetMismatch("sum terms must share one ground set")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return FormalSum(self.ground, terms)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "FormalSum":
        return FormalSum(self.ground, {k: scalar * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FormalSum)
            and self.ground == other.ground
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ground, tuple(sorted(self.terms.items()))))

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        bits = []
        for p, c in self.posets():
            coeff = "" if c == 1 else f"{c}*"
            bits.append(coeff + repr(p))
        return " + ".join(bits) if bits else "0"


def _primed(label: str, taken: set[str]) -> str:
    fresh = label
    while fresh in taken:
        fresh += "'"
    return fresh


@dataclass
class InsertionSite:
    """An outer poset, a vertex of it, and the inner poset replacing it."""

    outer: Poset
    vertex: str
    inner: Poset
    resolved_inner: Poset = field(init=False)
    renaming: dict[str, str] = field(init=False)

    def __post_init__(self):
        if self.vertex not in self.outer._idx:
            raise VertexNotFound(f"vertex {self.vertex!r} is not in the outer poset")
        if len(self.inner) == 0:
            raise EmptyInner("inner poset must be nonempty")
        keep = set(self.outer.elements) - {self.vertex}
        mapping = {}
        taken = set(keep)
        for e in self.inner.elements:
            fresh = _primed(e, taken)
            taken.add(fresh)
            if fresh != e:
                mapping[e] = fresh
        self.renaming = mapping
        self.resolved_inner = relabel(self.inner, mapping) if mapping else self.inner


def _compose_rows(site: InsertionSite, family: str) -> tuple[tuple[str, ...], list[int]]:
    outer, inner = site.outer, site.resolved_inner
    a = outer.index(site.vertex)
    keep = [e for e in outer.elements if e != site.vertex]
    ground = tuple(sorted(keep + list(inner.elements)))
    idx = {e: i for i, e in enumerate(ground)}
    rows = [1 << i for i in range(len(ground))]

    for u, v in outer.strict_pairs():
        if u != site.vertex and v != site.vertex:
            rows[idx[u]] |= 1 << idx[v]
    for u, v in inner.strict_pairs():
        rows[idx[u]] |= 1 << idx[v]

    mins, maxs = extrema(inner)
    below_targets = {
        "bullet": inner.elements,
        "down": inner.elements,
        "up": maxs,
    }[family]
    above_sources = {
        "bullet": inner.elements,
        "down": mins,
        "up": inner.elements,
    }[family]

    for x in keep:
        i = outer.index(x)
        if outer._up[i] >> a & 1:
            for b in below_targets:
                rows[idx[x]] |= 1 << idx[b]
        if outer._up[a] >> i & 1:
            for b in above_sources:
                rows[idx[b]] |= 1 << idx[x]
    return ground, rows


def _closed_poset(ground: tuple[str, ...], rows: list[int]) -> Poset:
    from .core import _closed

    n = len(ground)
    rows = _closed(list(rows))
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i] >> j & 1 and rows[j] >> i & 1:
                raise PosetError("composition produced a cycle")
    return Poset(ground, tuple(rows))


def compose_bullet(site: InsertionSite) -> Poset:
    return _closed_poset(*_compose_rows(site, "bullet"))


def compose_down(site: InsertionSite) -> Poset:
    return _closed_poset(*_compose_rows(site, "down"))


def compose_up(site: InsertionSite) -> Poset:
    return _closed_poset(*_compose_rows(site, "up"))


def transitive_subsets(
    n: int,
    base_rows: tuple[int, ...],
    free_pairs: list[tuple[int, int]],
    interval: Callable[[int, int], int],
):
    """Yield closure rows for every transitive relation base + S, S a subset
    of the free pairs.

    Pairs are decided in order of the size of their interval in the ambient
    order, so both factors of any forced composition are decided first.  A
    pair is forced in when including two already chosen pairs would compose
    through it; choosing to leave it out then cuts the branch.
    """
    order = sorted(free_pairs, key=lambda uv: (bin(interval(*uv)).count("1"), uv))
    rows = list(base_rows)

    def walk(k: int):
        if k == len(order):
            yield tuple(rows)
            return
        u, v = order[k]
        forced = False
        mid = interval(u, v) & ~(1 << u) & ~(1 << v)
        m = mid
        while m:
            z = (m & -m).bit_length() - 1
            m &= m - 1
            if rows[u] >> z & 1 and rows[z] >> v & 1:
                forced = True
                break
        if not forced:
            yield from walk(k + 1)
        rows[u] |= 1 << v
        yield from walk(k + 1)
        rows[u] &= ~(1 << v)

    yield from walk(0)


def compose_circ(site: InsertionSite) -> FormalSum:
    """All orders collapsing onto the outer poset with the inner one inside.

    Each admissible order restricts to the inner poset exactly, keeps its
    ground convex, and yields the outer poset back under the quotient that
    shrinks the inner ground to the insertion vertex.
    """
    ground, bullet_rows = _compose_rows(site, "bullet")
    bullet = _closed_poset(ground, bullet_rows)
    outer, inner = site.outer, site.resolved_inner
    a = outer.index(site.vertex)
    idx = {e: i for i, e in enumerate(ground)}

    inner_mask = 0
    for e in inner.elements:
        inner_mask |= 1 << idx[e]

    base = [1 << i for i in range(len(ground))]
    for u, v in inner.strict_pairs():
        base[idx[u]] |= 1 << idx[v]

    free = []
    for u, v in bullet.strict_pairs():
        iu, iv = idx[u], idx[v]
        if not (inner_mask >> iu & 1 and inner_mask >> iv & 1):
            free.append((iu, iv))

    bdown = bullet.down_masks()

    def interval(u: int, v: int) -> int:
        return bullet._up[u] & bdown[v]

    # quotient-exactness data: which outer comparabilities must be realized
    keep = [e for e in outer.elements if e != site.vertex]
    below_a = [idx[x] for x in keep if outer.leq(x, site.vertex)]
    above_a = [idx[y] for y in keep if outer.leq(site.vertex, y)]
    outer_pairs = [
        (idx[u], idx[v])
        for u, v in outer.strict_pairs()
        if u != site.vertex and v != site.vertex
    ]

    inner_indices = [i for i in range(len(ground)) if inner_mask >> i & 1]

    terms: dict[tuple[int, ...], int] = {}
    for rows in transitive_subsets(len(ground), tuple(base), free, interval):
        ok = True
        for i in below_a:
            if not rows[i] & inner_mask:
                ok = False
                break
        if ok:
            for j in above_a:
                if not any(rows[bi] >> j & 1 for bi in inner_indices):
                    ok = False
                    break
        if ok:
            for i, j in outer_pairs:
                if rows[i] >> j & 1:
                    continue
                if rows[i] & inner_mask and any(
                    rows[bi] >> j & 1 for bi in inner_indices
                ):
                    continue
                ok = False
                break
        if ok:
            terms[rows] = terms.get(rows, 0) + 1
    return FormalSum(ground, terms)


_FAMILIES: dict[str, Callable[[InsertionSite], object]] = {
    "bullet": compose_bullet,
    "down": compose_down,
    "up": compose_up,
    "circ": compose_circ,
}


def compose(family: str, outer: Poset, vertex: str, inner: Poset):
    if family not in _FAMILIES:
        raise PosetError(f"unknown family {family!r}")
    return _FAMILIES[family](InsertionSite(outer, vertex, inner))


def _lift(value) -> FormalSum:
    return value if isinstance(value, FormalSum) else FormalSum.of(value)


def _compose_into_sum(family: str, value, vertex: str, inner: Poset):
    """Compose at a vertex inside every term of a poset-or-sum."""
    if isinstance(value, Poset):
        return compose(family, value, vertex, inner)
    return value.map_terms(lambda p: _lift(compose(family, p, vertex, inner)))


def verify_nested(family: str, a_poset: Poset, b_poset: Poset, c_poset: Poset,
                  a: str, b: str) -> bool:
    """(A o_a B) o_b C == A o_a (B o_b C) for a vertex b of B."""
    left = _compose_into_sum(family, compose(family, a_poset, a, b_poset), b, c_poset)
    inner = compose(family, b_poset, b, c_poset)
    if isinstance(inner, FormalSum):
        right = inner.map_terms(lambda q: _lift(compose(family, a_poset, a, q)))
    else:
        right = compose(family, a_poset, a, inner)
    return _lift(left) == _lift(right)


def verify_parallel(family: str, a_poset: Poset, b_poset: Poset, c_poset: Poset,
                    a: str, a2: str) -> bool:
    """Composing at two distinct vertices of A commutes."""
    if a == a2:
        raise PosetError("parallel axiom needs two distinct vertices")
    left = _compose_into_sum(family, compose(family, a_poset, a, b_poset), a2, c_poset)
    right = _compose_into_sum(family, compose(family, a_poset, a2, c_poset), a, b_poset)
    return _lift(left) == _lift(right)


def verify_unit(family: str, a_poset: Poset, a: str, unit_label: str = "u") -> bool:
    """Inserting a singleton changes nothing but the vertex name, and
    inserting into a singleton returns the inner poset."""
    single = Poset((unit_label,), (1,))
    left = compose(family, a_poset, a, single)
    expected = relabel(a_poset, {a: _primed(unit_label, set(a_poset.elements) - {a})})
    if isinstance(left, FormalSum):
        if left != _lift(expected):
            return False
    elif left != expected:
        return False
    wrap = Poset((a,), (1,))
    back = compose(family, wrap, a, a_poset)
    return _lift(back) == _lift(a_poset)


def verify_mixed_compat(a_poset: Poset, b_poset: Poset, c_poset: Poset,
                        a: str, b: str) -> tuple[bool, bool, bool]:
    """Compatibilities between the families at distinct outer vertices:

      (A up_a B) bullet_b C == (A bullet_b C) up_a B
      (A down_a B) bullet_b C == (A bullet_b C) down_a B
      (A down_a B) up_b C == (A up_b C) down_a B
    """
    if a == b:
        raise PosetError("mixed compatibility needs distinct outer vertices")

    def both(f1: str, f2: str) -> bool:
        left = compose(f2, compose(f1, a_poset, a, b_poset), b, c_poset)
        right = compose(f1, compose(f2, a_poset, b, c_poset), a, b_poset)
        return left == right

    return (both("up", "bullet"), both("down", "bullet"), both("down", "up"))


def involution_exchange(a_poset: Poset, b_poset: Poset, a: str) -> bool:
    """Order reversal preserves bullet and swaps the down and up families."""
    oa, ob = opposite(a_poset), opposite(b_poset)
    ok = opposite(compose_bullet(InsertionSite(a_poset, a, b_poset))) == compose_bullet(
        InsertionSite(oa, a, ob)
    )
    ok = ok and opposite(compose_down(InsertionSite(a_poset, a, b_poset))) == compose_up(
        InsertionSite(oa, a, ob)
    )
    ok = ok and opposite(compose_up(InsertionSite(a_poset, a, b_poset))) == compose_down(
        InsertionSite(oa, a, ob)
    )
    return ok


def compose_pair(outer2: Poset, family: str, left: Poset, right: Poset):
    """Two-vertex outer shape applied to (left, right); the two insertion
    orders must agree, and the common value is returned."""
    if len(outer2) != 2:
        raise PosetError("outer shape must have exactly two vertices")
    v1, v2 = outer2.elements
    first = _compose_into_sum(family, compose(family, outer2, v1, left), v2, right)
    second = _compose_into_sum(family, compose(family, outer2, v2, right), v1, left)
    if _lift(first) != _lift(second):
        raise PosetError("insertion orders disagree")
    return first


def labeled_grid(n_max: int, prefix: str) -> list[Poset]:
    """Every labeled poset with 1..n_max elements on a prefixed ground set.

    Distinct prefixes give pairwise disjoint ground sets, so grid operands
    can be composed without any renaming kicking in.
    """
    from .enumeration import all_posets

    out = []
    for n in range(1, n_max + 1):
        target = [f"{prefix}{i}" for i in range(1, n + 1)]
        for p in all_posets(n):
            out.append(relabel(p, dict(zip(p.elements, target))))
    return out


def class_grid(n_max: int, prefix: str) -> list[Poset]:
    """One representative per isomorphism class with 1..n_max elements, on a
    prefixed ground set."""
    from .enumeration import all_isoclasses

    out = []
    for n in range(1, n_max + 1):
        target = [f"{prefix}{i}" for i in range(1, n + 1)]
        for ic in all_isoclasses(n):
            rep = ic.representative
            out.append(relabel(rep, dict(zip(rep.elements, target))))
    return out


def verify_axioms(family: str, n_max: int = 3, scope: str = "auto") -> VerificationReport:
    """Nested/parallel/unit axiom run for one family.

    Operands live on three disjoint ground sets and every insertion vertex is
    tried.  With scope "labeled" they range over all labeled posets with at
    most n_max elements; with scope "classes" over one representative per
    isomorphism class.  The default picks "classes" for the summed family and
    "labeled" for the set-level ones: compositions commute with relabeling
    (see verify_equivariance), so the class grid covers every labeled
    instance, and the summed family is far too slow to run per labeling.
    """
    if family not in _FAMILIES:
        raise PosetError(f"unknown family {family!r}")
    if scope == "auto":
        scope = "classes" if family == "circ" else "labeled"
    if scope not in ("labeled", "classes"):
        raise PosetError(f"unknown scope {scope!r}")
    grid = class_grid if scope == "classes" else labeled_grid
    report = VerificationReport(f"operad-axioms[{family}, n<={n_max}, {scope}]")
    with timed(report):
        a_list = grid(n_max, "a")
        b_list = grid(n_max, "b")
        c_list = grid(n_max, "c")
        for a_poset in a_list:
            for a in a_poset.elements:
                ok = verify_unit(family, a_poset, a)
                if ok:
                    report.check(True)
                else:
                    report.check(False, law="unit", outer=a_poset.to_doc(), vertex=a)
        for a_poset in a_list:
            for a in a_poset.elements:
                for b_poset in b_list:
                    for b in b_poset.elements:
                        for c_poset in c_list:
                            ok = verify_nested(family, a_poset, b_poset, c_poset, a, b)
                            if ok:
                                report.check(True)
                            else:
                                report.check(
                                    False, law="nested",
                                    outer=a_poset.to_doc(), vertex=a,
                                    middle=b_poset.to_doc(), middle_vertex=b,
                                    inner=c_poset.to_doc(),
                                )
        for a_poset in a_list:
            for a in a_poset.elements:
                for a2 in a_poset.elements:
                    if a2 <= a:
                        continue
                    for b_poset in b_list:
                        for c_poset in c_list:
                            ok = verify_parallel(family, a_poset, b_poset, c_poset, a, a2)
                            if ok:
                                report.check(True)
                            else:
                                report.check(
                                    False, law="parallel",
                                    outer=a_poset.to_doc(), vertices=[a, a2],
                                    left=b_poset.to_doc(), right=c_poset.to_doc(),
                                )
    return report


def verify_equivariance(n_max: int = 3, seed: int = 0) -> VerificationReport:
    """Compositions commute with relabeling, for all four families.

    For every outer/vertex/inner triple on disjoint grounds, a pseudo-random
    bijection is applied to both operands and the composition is repeated;
    the result must be the image of the original one.  Together with the
    class-level axiom grid this covers the axioms for every labeling.
    """
    import random

    rng = random.Random(seed)
    report = VerificationReport(f"equivariance[n<={n_max}]")

    def shuffled(labels: list[str]) -> dict[str, str]:
        pool = [f"s{i}" for i in range(1, len(labels) + 1)]
        rng.shuffle(pool)
        return dict(zip(labels, pool))

    with timed(report):
        b_list = labeled_grid(n_max, "b")
        for a_poset in labeled_grid(n_max, "a"):
            for a in a_poset.elements:
                for b_poset in b_list:
                    mapping = shuffled(list(a_poset.elements + b_poset.elements))
                    sa, sb = relabel(a_poset, mapping), relabel(b_poset, mapping)
                    for family in _FAMILIES:
                        plain = compose(family, a_poset, a, b_poset)
                        moved = compose(family, sa, mapping[a], sb)
                        if isinstance(plain, FormalSum):
                            image = plain.map_terms(
                                lambda p: FormalSum.of(relabel(p, mapping))
                            )
                        else:
                            image = relabel(plain, mapping)
                        ok = moved == image
                        if ok:
                            report.check(True)
                        else:
                            report.check(
                                False, family=family,
                                outer=a_poset.to_doc(), vertex=a,
                                inner=b_poset.to_doc(), mapping=mapping,
                            )
    return report


def verify_mixed(a_max: int = 3, bc_max: int = 2) -> VerificationReport:
    """Exhaustive run of the three cross-family exchange identities at
    distinct outer vertices."""
    report = VerificationReport(f"mixed-compatibility[|A|<={a_max}, |B|,|C|<={bc_max}]")
    with timed(report):
        b_list = labeled_grid(bc_max, "b")
        c_list = labeled_grid(bc_max, "c")
        for a_poset in labeled_grid(a_max, "a"):
            for a in a_poset.elements:
                for a2 in a_poset.elements:
                    if a2 == a:
                        continue
                    for b_poset in b_list:
                        for c_poset in c_list:
                            up_b, down_b, down_up = verify_mixed_compat(
                                a_poset, b_poset, c_poset, a, a2
                            )
                            ctx = dict(
                                outer=a_poset.to_doc(), vertices=[a, a2],
                                left=b_poset.to_doc(), right=c_poset.to_doc(),
                            )
                            report.check(up_b, law="up-bullet", **ctx)
                            report.check(down_b, law="down-bullet", **ctx)
                            report.check(down_up, law="down-up", **ctx)
    return report


def verify_involution(n_max: int = 3) -> VerificationReport:
    """Order reversal preserves bullet and swaps down with up, exhaustively."""
    report = VerificationReport(f"involution[n<={n_max}]")
    with timed(report):
        b_list = labeled_grid(n_max, "b")
        for a_poset in labeled_grid(n_max, "a"):
            for a in a_poset.elements:
                for b_poset in b_list:
                    report.check(
                        involution_exchange(a_poset, b_poset, a),
                        outer=a_poset.to_doc(), vertex=a, inner=b_poset.to_doc(),
                    )
    return report
