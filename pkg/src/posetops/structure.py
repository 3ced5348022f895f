"""Two special families of posets and the bijection between them.

A poset is WN when no four elements induce the single forbidden shape
N = ({x, y, z, t} with x < z, y < z, y < t).  Every connected WN poset is an
ordinal sum in a unique maximal way: peeling off the set of elements lying
below *all* maxima leaves the last factor, which is a singleton or
non-connected, and the rest factors recursively.

On the other side, a poset C is grafting-compatible when it is built from
singletons by disjoint unions and the grafting product

    X grafted on Y  =  X disjoint Y  plus  min(Y) x X

(X sits above the minima of Y).  The split of a connected C recovers the two
factors: b(C) = elements above every minimum, r(C) = the rest.

theta maps one family onto the other, ground set by ground set: it fixes
singletons, acts componentwise, and turns the top ordinal factor into a
grafted factor:

    theta(A1 down A2) = theta(A1) grafted on theta(A2).

Both factorizations are unique, so theta is a bijection with the obvious
inverse.  It preserves nothing like isomorphism classes in general, but it
does preserve ground sets and cardinalities, which is what the counting
results need.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import IsoClass, canonicalize, contains_induced
from .core import (
    Poset,
    PosetError,
    build,
    connected_components,
    disjoint_union,
    extrema,
    relabel,
    restrict,
)
from .hopf import down_triangle, ordinal_sum
from .operad import InsertionSite, compose_bullet, compose_down, compose_up
from .report import VerificationReport, timed


class NotWN(PosetError):
    pass


class EmptyPoset(PosetError):
    pass


class NotNablaCompatible(PosetError):
    pass


N_POSET = build(["a", "b", "c", "d"], [("a", "c"), ("b", "c"), ("b", "d")])


@dataclass(frozen=True)
class Factorization:
    kind: str  # "ordinal" or "graft"
    factors: tuple[Poset, ...]


def is_wn(p: Poset) -> bool:
    """No four elements induce the forbidden N shape."""
    return not contains_induced(p, N_POSET)


def wn_factorize(p: Poset) -> Factorization:
    """Unique maximal ordinal factorization of a WN poset.

    Each factor is a singleton or non-connected; consecutive factors sit
    fully one below the next.  Non-connected input is its own single factor.
    """
    if len(p) == 0:
        raise EmptyPoset("nothing to factorize")
    if not is_wn(p):
        raise NotWN("poset contains the forbidden induced shape")
    return Factorization(kind="ordinal", factors=tuple(_wn_factors(p)))


def _wn_factors(p: Poset) -> list[Poset]:
    if len(p) == 1 or len(connected_components(p)) > 1:
        return [p]
    _, maxs = extrema(p)
    below_all = [
        x for x in p.elements
        if x not in maxs and all(p.leq(x, m) for m in maxs)
    ]
    # for a connected WN poset with more than one element this is nonempty
    last = [e for e in p.elements if e not in set(below_all)]
    if not below_all:
        raise NotWN("connected poset does not split under any maximal element")
    return _wn_factors(restrict(p, below_all)) + [restrict(p, last)]


def br_split(p: Poset) -> tuple[Poset, Poset]:
    """(b, r): elements above every minimum, and the rest.

    b may be empty; r always contains all the minima.
    """
    if len(p) == 0:
        raise EmptyPoset("nothing to split")
    mins, _ = extrema(p)
    top = [
        y for y in p.elements
        if y not in mins and all(p.leq(m, y) for m in mins)
    ]
    rest = [e for e in p.elements if e not in set(top)]
    return restrict(p, top), restrict(p, rest)


def is_nabla_compatible(p: Poset) -> bool:
    """Is p built from singletons by disjoint union and grafting?"""
    return _nabla_ok(p)


@lru_cache(maxsize=100000)
def _nabla_ok_key(elements: tuple, up: tuple) -> bool:
    p = Poset(elements, up)
    if len(p) <= 1:
        return True
    comps = connected_components(p)
    if len(comps) > 1:
        return all(_nabla_ok(restrict(p, c)) for c in comps)
    b, r = br_split(p)
    if len(b) == 0:
        return False
    if not (_nabla_ok(b) and _nabla_ok(r)):
        return False
    return down_triangle(b, r) == p


def _nabla_ok(p: Poset) -> bool:
    return _nabla_ok_key(p.elements, p._up)


def _assemble(p: Poset, parts: list[Poset]) -> Poset:
    pairs = [pair for part in parts for pair in part.strict_pairs()]
    return build(p.elements, pairs)


def theta(p: Poset) -> Poset:
    """The ordinal-to-grafted bijection, preserving the ground set."""
    if len(p) == 0:
        raise EmptyPoset("theta is defined on nonempty posets")
    if not is_wn(p):
        raise NotWN("theta is only defined on WN posets")
    return _theta(p)


def _theta(p: Poset) -> Poset:
    if len(p) == 1:
        return p
    comps = connected_components(p)
    if len(comps) > 1:
        return _assemble(p, [_theta(restrict(p, c)) for c in comps])
    factors = _wn_factors(p)
    if len(factors) == 1:
        # connected with one maximal factor only happens for singletons
        return p
    front = [e for f in factors[:-1] for e in f.elements]
    a1 = restrict(p, front)
    a2 = factors[-1]
    return down_triangle(_theta(a1), _theta(a2))


def theta_inverse(c: Poset) -> Poset:
    if len(c) == 0:
        raise EmptyPoset("theta_inverse is defined on nonempty posets")
    if not is_nabla_compatible(c):
        raise NotNablaCompatible("input is not built from grafts and unions")
    return _theta_inv(c)


def _theta_inv(c: Poset) -> Poset:
    if len(c) == 1:
        return c
    comps = connected_components(c)
    if len(comps) > 1:
        return _assemble(c, [_theta_inv(restrict(c, comp)) for comp in comps])
    b, r = br_split(c)
    return ordinal_sum(_theta_inv(b), _theta_inv(r))


# -- generated families -------------------------------------------------------


def _std(n: int, pairs: list[tuple[str, str]]) -> Poset:
    return build([str(i) for i in range(1, n + 1)], pairs)


def _std_compose(x: Poset, position: int, y: Poset, family: str) -> Poset:
    """Operadic composition with the usual positional relabeling: the inner
    poset lands on positions position..position+|y|-1 and later positions of
    the outer poset shift up."""
    m, n = len(x), len(y)
    fresh = relabel(y, {e: f"y{e}" for e in y.elements})
    fn = {"bullet": compose_bullet, "down": compose_down, "up": compose_up}[family]
    raw = fn(InsertionSite(x, str(position), fresh))
    mapping: dict[str, str] = {}
    for e in raw.elements:
        if e.startswith("y"):
            mapping[e] = str(position - 1 + int(e[1:]))
        else:
            old = int(e)
            mapping[e] = str(old if old < position else old + n - 1)
    return relabel(raw, mapping)


def verify_suboperad_relations() -> VerificationReport:
    """The defining relations of the two generated families, as equalities of
    labeled three-element structures.

    Saturated family, generators m = ("1" "2" incomparable) and the two-chain:
        m o1 m == m o2 m                       (both the three-antichain)
        chain o1 chain == chain o2 chain       (both the three-chain)
    Grafting family under the min-attaching composition, generators m and the
    edge with "2" below "1":
        m o1 m == m o2 m
        e o1 m == e o2 e                       (both the up-claw from "3")
    """
    rep = VerificationReport(suite="generated-family relations")
    with timed(rep):
        m2 = _std(2, [])
        chain2 = _std(2, [("1", "2")])
        graft2 = _std(2, [("2", "1")])

        swapped = relabel(m2, {"1": "2", "2": "1"})
        rep.check(swapped == m2, law="m symmetric under the transposition")

        anti3 = _std(3, [])
        rep.check(_std_compose(m2, 1, m2, "bullet") == anti3, law="m o1 m")
        rep.check(_std_compose(m2, 2, m2, "bullet") == anti3, law="m o2 m")
        rep.check(_std_compose(m2, 1, m2, "down") == anti3, law="m o1 m (graft family)")
        rep.check(_std_compose(m2, 2, m2, "down") == anti3, law="m o2 m (graft family)")

        chain3 = _std(3, [("1", "2"), ("2", "3")])
        rep.check(_std_compose(chain2, 1, chain2, "bullet") == chain3,
                  law="chain o1 chain")
        rep.check(_std_compose(chain2, 2, chain2, "bullet") == chain3,
                  law="chain o2 chain")

        upclaw = _std(3, [("3", "1"), ("3", "2")])
        rep.check(_std_compose(graft2, 1, m2, "down") == upclaw, law="e o1 m")
        rep.check(_std_compose(graft2, 2, graft2, "down") == upclaw, law="e o2 e")

        # the graft generator really computes the grafting product
        for pairs_b, pairs_c in (
            ([], []),
            ([("1", "2")], []),
            ([], [("1", "2")]),
            ([("1", "2")], [("2", "1")]),
        ):
            b = build(["b1", "b2"], [(f"b{u}", f"b{v}") for u, v in pairs_b])
            c = build(["c1", "c2"], [(f"c{u}", f"c{v}") for u, v in pairs_c])
            via_edge = compose_down(
                InsertionSite(compose_down(InsertionSite(graft2, "1", b)), "2", c)
            )
            rep.check(via_edge == down_triangle(b, c),
                      law="edge('2'<'1') realizes grafting",
                      b=repr(b), c=repr(c))
    return rep


def _closure(seeds: list[Poset], families: list[str], n_max: int) -> list[IsoClass]:
    """Isomorphism classes generated from the seeds under the given
    compositions, up to ground size n_max.  The singleton (the composition
    unit) is always included.

    Classes are closed under relabeling, so composing canonical
    representatives at every vertex reaches every class the generated family
    contains.
    """
    single = _std(1, [])
    found: dict[str, IsoClass] = {}
    worklist: list[IsoClass] = []
    for p in [single] + seeds:
        if len(p) <= n_max:
            ic = canonicalize(p)
            if ic.key not in found:
                found[ic.key] = ic
                worklist.append(ic)

    def combine(outer: IsoClass, inner: IsoClass) -> list[IsoClass]:
        x, y = outer.representative, inner.representative
        if len(x) < 2 or len(y) < 2 or len(x) + len(y) - 1 > n_max:
            return []
        out = []
        for vertex in x.elements:
            for family in families:
                ic = canonicalize(_std_compose(x, int(vertex), y, family))
                if ic.key not in found:
                    found[ic.key] = ic
                    out.append(ic)
        return out

    while worklist:
        current = worklist.pop()
        partners = list(found.values())
        for other in partners:
            worklist.extend(combine(current, other))
            if other.key != current.key:
                worklist.extend(combine(other, current))
    return sorted(found.values(), key=lambda ic: ic.key)


def closure_wn(n_max: int) -> list[IsoClass]:
    """Classes generated by the antichain pair and the two-chain under the
    saturated composition."""
    return _closure([_std(2, []), _std(2, [("1", "2")])], ["bullet"], n_max)


def closure_nabla(n_max: int) -> list[IsoClass]:
    """Classes generated by the antichain pair and the edge under the
    min-attaching composition."""
    return _closure([_std(2, []), _std(2, [("2", "1")])], ["down"], n_max)


def closure_triple(n_max: int) -> list[IsoClass]:
    """Classes generated by the two-chain alone under all three set-level
    compositions."""
    return _closure([_std(2, [("1", "2")])], ["bullet", "down", "up"], n_max)


def verify_graft_split(n_max: int = 3) -> VerificationReport:
    """Splitting a grafted poset recovers the operands, exhaustively.

    For all labeled A and B on disjoint grounds: grafting A onto B keeps the
    minima of B as the minima, puts A disjoint-union b(B) strictly above all
    of them, and leaves r(B) as the rest.
    """
    from .operad import labeled_grid

    report = VerificationReport(f"graft-split[|A|,|B|<={n_max}]")
    with timed(report):
        b_list = labeled_grid(n_max, "b")
        for a_poset in labeled_grid(n_max, "a"):
            for b_poset in b_list:
                grafted = down_triangle(a_poset, b_poset)
                top, rest = br_split(grafted)
                top_b, rest_b = br_split(b_poset)
                ok = (
                    top == disjoint_union(a_poset, top_b)
                    and rest == rest_b
                    and extrema(grafted)[0] == extrema(b_poset)[0]
                )
                if ok:
                    report.check(True)
                else:
                    report.check(
                        False,
                        above=a_poset.to_doc(), below=b_poset.to_doc(),
                        split_top=top.to_doc(), split_rest=rest.to_doc(),
                    )
    return report
