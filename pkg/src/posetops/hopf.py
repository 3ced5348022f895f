"""Products, coproducts and the pairing on isomorphism classes.

The free vector space over all poset isomorphism classes carries several
graded products (grading = number of elements; the empty poset is the unit,
written 1):

  m       disjoint union;
  down    ordinal sum: everything in the first factor below everything in
          the second;
  star    sum over all orders on the union whose restrictions are the two
          factors and whose cross relations only put the first factor below
          the second;
  up_tri  first factor attached below the maxima of the second;
  down_tri first factor attached above the minima of the second.

and two coproducts:

  delta       splits into groups of connected components (dual to m);
  delta_star  sum over up-closed subsets I: (rest) tensor (I)  (dual to star).

The pairing of two classes is zero unless they are equal, and then it is the
order of the automorphism group; extended bilinearly it makes (star, delta)
and (m, delta_star) dual pairs:

  <x y, z> = <x tensor y, delta(z)>        <x*y, z> = <x tensor y, delta_star(z)>

and (down, delta_star) is an infinitesimal pair:

  delta_star(x down y)
      = delta_star(x) down (1 tensor y) + (x tensor 1) down delta_star(y)
        - x tensor y.

All computations happen on freshly labeled representatives and are pushed
back through canonicalization, keeping multiplicities.
"""

from __future__ import annotations

from itertools import combinations

from .canon import IsoClass, canonicalize
from .core import (
    LabelClash,
    Poset,
    PosetError,
    build,
    connected_components,
    extrema,
    relabel,
    restrict,
)
from .report import VerificationReport, timed

# -- labeled binary constructions -------------------------------------------


def _merged(p: Poset, q: Poset, cross: list[tuple[str, str]]) -> Poset:
    if set(p.elements) & set(q.elements):
        raise LabelClash("arguments must have disjoint ground sets")
    pairs = p.strict_pairs() + q.strict_pairs() + cross
    return build(p.elements + q.elements, pairs)


def ordinal_sum(p: Poset, q: Poset) -> Poset:
    """p below q: every element of p under every element of q."""
    return _merged(p, q, [(x, y) for x in p.elements for y in q.elements])


def up_triangle(p: Poset, q: Poset) -> Poset:
    """p attached under the maximal elements of q."""
    _, maxs = extrema(q)
    return _merged(p, q, [(x, y) for x in p.elements for y in maxs])


def down_triangle(p: Poset, q: Poset) -> Poset:
    """p attached over the minimal elements of q."""
    mins, _ = extrema(q)
    return _merged(p, q, [(y, x) for y in mins for x in p.elements])


def star_terms(p: Poset, q: Poset) -> list[Poset]:
    """All orders on the disjoint union restricting to p and q exactly, with
    cross comparabilities only from p into q."""
    if set(p.elements) & set(q.elements):
        raise LabelClash("arguments must have disjoint ground sets")
    cross = [(x, y) for x in p.elements for y in q.elements]
    implied: list[int] = []
    for x, y in cross:
        need = 0
        for k, (u, v) in enumerate(cross):
            if p.leq(u, x) and q.leq(y, v):
                need |= 1 << k
        implied.append(need)
    base = p.strict_pairs() + q.strict_pairs()
    out = []
    for mask in range(1 << len(cross)):
        if all(implied[k] & ~mask == 0 for k in range(len(cross)) if mask >> k & 1):
            chosen = [cross[k] for k in range(len(cross)) if mask >> k & 1]
            out.append(build(p.elements + q.elements, base + chosen))
    return out


# -- class sums and tensor sums ----------------------------------------------

_CLASSES: dict[str, IsoClass] = {}

EMPTY = Poset((), ())


def cls_of(p: Poset) -> str:
    ic = canonicalize(p)
    _CLASSES.setdefault(ic.key, ic)
    return ic.key


def class_info(key: str) -> IsoClass:
    return _CLASSES[key]


UNIT_KEY = cls_of(EMPTY)


class ClassSum:
    """Integer combination of isomorphism classes, keyed by canonical key."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[str, int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def of(cls, p: Poset, coeff: int = 1) -> "ClassSum":
        return cls({cls_of(p): coeff})

    @classmethod
    def unit(cls) -> "ClassSum":
        return cls({UNIT_KEY: 1})

    def items(self) -> list[tuple[str, int]]:
        return sorted(self.terms.items())

    def __add__(self, other: "ClassSum") -> "ClassSum":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return ClassSum(terms)

    def __sub__(self, other: "ClassSum") -> "ClassSum":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "ClassSum":
        return ClassSum({k: scalar * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassSum) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self) -> str:
        return " + ".join(f"{v}*[{k}]" for k, v in self.items()) or "0"

    def degrees(self) -> set[int]:
        return {class_info(k).size for k in self.terms}


class TensorSum:
    """Integer combination of ordered pairs of classes."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[str, str], int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def of(cls, left: Poset, right: Poset, coeff: int = 1) -> "TensorSum":
        return cls({(cls_of(left), cls_of(right)): coeff})

    def items(self) -> list[tuple[tuple[str, str], int]]:
        return sorted(self.terms.items())

    def __add__(self, other: "TensorSum") -> "TensorSum":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return TensorSum(terms)

    def __sub__(self, other: "TensorSum") -> "TensorSum":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "TensorSum":
        return TensorSum({k: scalar * v for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorSum) and self.terms == other.terms

    def __repr__(self) -> str:
        return " + ".join(f"{v}*[{a}|{b}]" for (a, b), v in self.items()) or "0"

    def flip(self) -> "TensorSum":
        return TensorSum({(b, a): v for (a, b), v in self.terms.items()})


def _fresh_pair(key1: str, key2: str) -> tuple[Poset, Poset]:
    p = class_info(key1).representative
    q = class_info(key2).representative
    n = len(p)
    q = relabel(q, {e: str(n + int(e)) for e in q.elements})
    return p, q


def _bilinear(x: ClassSum, y: ClassSum, op) -> ClassSum:
    acc: dict[str, int] = {}
    for k1, c1 in x.terms.items():
        for k2, c2 in y.terms.items():
            for p, coeff in op(*_fresh_pair(k1, k2)):
                key = cls_of(p)
                acc[key] = acc.get(key, 0) + c1 * c2 * coeff
    return ClassSum(acc)


def prod_m(x: ClassSum, y: ClassSum) -> ClassSum:
    from .core import disjoint_union

    return _bilinear(x, y, lambda p, q: [(disjoint_union(p, q), 1)])


def prod_ordinal(x: ClassSum, y: ClassSum) -> ClassSum:
    return _bilinear(x, y, lambda p, q: [(ordinal_sum(p, q), 1)])


def prod_star(x: ClassSum, y: ClassSum) -> ClassSum:
    return _bilinear(x, y, lambda p, q: [(t, 1) for t in star_terms(p, q)])


def prod_up_tri(x: ClassSum, y: ClassSum) -> ClassSum:
    return _bilinear(x, y, lambda p, q: [(up_triangle(p, q), 1)])


def prod_down_tri(x: ClassSum, y: ClassSum) -> ClassSum:
    return _bilinear(x, y, lambda p, q: [(down_triangle(p, q), 1)])


_PRODUCTS = {
    "m": prod_m,
    "down": prod_ordinal,
    "star": prod_star,
    "uptri": prod_up_tri,
    "downtri": prod_down_tri,
}


def product(op: str, x: ClassSum, y: ClassSum) -> ClassSum:
    if op not in _PRODUCTS:
        raise PosetError(f"unknown product {op!r}")
    return _PRODUCTS[op](x, y)


# NAP caveat: the triangle products are unital only on the left leg; the
# formulas below never need a unit on the right.


def coproduct_delta(x: ClassSum) -> TensorSum:
    """Split into sub-multisets of connected components (dual of m)."""
    acc: dict[tuple[str, str], int] = {}
    for key, c in x.terms.items():
        p = class_info(key).representative
        comps = connected_components(p)
        for r in range(len(comps) + 1):
            for chosen in combinations(range(len(comps)), r):
                inside = [e for i in chosen for e in comps[i]]
                outside = [e for i in range(len(comps)) if i not in chosen
                           for e in comps[i]]
                pair = (cls_of(restrict(p, inside)), cls_of(restrict(p, outside)))
                acc[pair] = acc.get(pair, 0) + c
    return TensorSum(acc)


def coproduct_delta_star(x: ClassSum) -> TensorSum:
    """Sum over up-closed subsets I: (complement) tensor (I)  (dual of star)."""
    acc: dict[tuple[str, str], int] = {}
    for key, c in x.terms.items():
        p = class_info(key).representative
        n = len(p)
        for mask in range(1 << n):
            if any(mask >> i & 1 and p.up_mask(i) & ~mask for i in range(n)):
                continue
            inside = [p.elements[i] for i in range(n) if mask >> i & 1]
            outside = [p.elements[i] for i in range(n) if not mask >> i & 1]
            pair = (cls_of(restrict(p, outside)), cls_of(restrict(p, inside)))
            acc[pair] = acc.get(pair, 0) + c
    return TensorSum(acc)


def counit(x: ClassSum) -> int:
    return x.terms.get(UNIT_KEY, 0)


def pairing(x: ClassSum, y: ClassSum) -> int:
    """<x, y> = sum over common classes of coeff * coeff * |Aut|."""
    total = 0
    for k, c in x.terms.items():
        c2 = y.terms.get(k)
        if c2:
            total += c * c2 * class_info(k).aut_count
    return total


def tensor_pairing(x: TensorSum, y: TensorSum) -> int:
    total = 0
    for (a, b), c in x.terms.items():
        c2 = y.terms.get((a, b))
        if c2:
            total += c * c2 * class_info(a).aut_count * class_info(b).aut_count
    return total


def tensor_product(op: str, x: TensorSum, y: TensorSum) -> TensorSum:
    """Leg-wise product of tensor sums."""
    fn = _PRODUCTS[op]
    acc: dict[tuple[str, str], int] = {}
    for (a, b), c in x.terms.items():
        for (d, e), c2 in y.terms.items():
            left = fn(ClassSum({a: 1}), ClassSum({d: 1}))
            right = fn(ClassSum({b: 1}), ClassSum({e: 1}))
            for kl, cl in left.terms.items():
                for kr, cr in right.terms.items():
                    pair = (kl, kr)
                    acc[pair] = acc.get(pair, 0) + c * c2 * cl * cr
    return TensorSum(acc)


def _tensor_coproduct_left(cop, x: TensorSum) -> dict[tuple[str, str, str], int]:
    """Apply a coproduct to the left leg to compare (cop x id) with (id x cop)."""
    acc: dict[tuple[str, str, str], int] = {}
    for (a, b), c in x.terms.items():
        inner = cop(ClassSum({a: 1}))
        for (u, v), c2 in inner.terms.items():
            key = (u, v, b)
            acc[key] = acc.get(key, 0) + c * c2
    return acc


def _tensor_coproduct_right(cop, x: TensorSum) -> dict[tuple[str, str, str], int]:
    acc: dict[tuple[str, str, str], int] = {}
    for (a, b), c in x.terms.items():
        inner = cop(ClassSum({b: 1}))
        for (u, v), c2 in inner.terms.items():
            key = (a, u, v)
            acc[key] = acc.get(key, 0) + c * c2
    return acc


def _classes_up_to(n_max: int) -> list[list[ClassSum]]:
    """Classes grouped by size 0..n_max, as singleton sums."""
    from .enumeration import all_isoclasses

    by_size: list[list[ClassSum]] = [[ClassSum.unit()]]
    for n in range(1, n_max + 1):
        row = []
        for ic in all_isoclasses(n):
            _CLASSES.setdefault(ic.key, ic)
            row.append(ClassSum({ic.key: 1}))
        by_size.append(row)
    return by_size


def _pairs_by_total(by_size, total_max, sizes_from=0):
    for s1 in range(sizes_from, total_max + 1):
        for s2 in range(sizes_from, total_max + 1 - s1):
            for x in by_size[s1]:
                for y in by_size[s2]:
                    yield x, y


def verify_bialgebra(n_max: int) -> VerificationReport:
    """Product, coproduct, compatibility, duality and grading checks over all
    class pairs and triples with at most n_max elements in total."""
    rep = VerificationReport(suite=f"bialgebra(total size <= {n_max})")
    with timed(rep):
        by_size = _classes_up_to(n_max)

        unit = ClassSum.unit()
        for n in range(n_max + 1):
            for x in by_size[n]:
                for op in ("m", "down", "star"):
                    fn = _PRODUCTS[op]
                    rep.check(fn(unit, x) == x and fn(x, unit) == x,
                              law=f"{op} unital", x=repr(x))
        for x, y in _pairs_by_total(by_size, n_max):
            rep.check(prod_m(x, y) == prod_m(y, x), law="m commutative",
                      x=repr(x), y=repr(y))
        for s1 in range(n_max + 1):
            for s2 in range(n_max + 1 - s1):
                for s3 in range(n_max + 1 - s1 - s2):
                    for x in by_size[s1]:
                        for y in by_size[s2]:
                            for z in by_size[s3]:
                                for op in ("m", "down", "star"):
                                    fn = _PRODUCTS[op]
                                    rep.check(
                                        fn(fn(x, y), z) == fn(x, fn(y, z)),
                                        law=f"{op} associative",
                                        x=repr(x), y=repr(y), z=repr(z),
                                    )

        for n in range(n_max + 1):
            for x in by_size[n]:
                for name, cop in (("delta", coproduct_delta),
                                  ("delta_star", coproduct_delta_star)):
                    t = cop(x)
                    left = _tensor_coproduct_left(cop, t)
                    right = _tensor_coproduct_right(cop, t)
                    rep.check(left == right, law=f"{name} coassociative", x=repr(x))
                    lhalf = TensorSum(
                        {k: v for k, v in t.terms.items() if k[0] == UNIT_KEY}
                    )
                    rhalf = TensorSum(
                        {k: v for k, v in t.terms.items() if k[1] == UNIT_KEY}
                    )
                    rep.check(
                        lhalf == TensorSum({(UNIT_KEY, k): v
                                            for k, v in x.terms.items()})
                        and rhalf == TensorSum({(k, UNIT_KEY): v
                                                for k, v in x.terms.items()}),
                        law=f"{name} counital", x=repr(x),
                    )
                rep.check(coproduct_delta(x) == coproduct_delta(x).flip(),
                          law="delta cocommutative", x=repr(x))

        for x, y in _pairs_by_total(by_size, n_max):
            lhs = coproduct_delta(prod_star(x, y))
            rhs = tensor_product("star", coproduct_delta(x), coproduct_delta(y))
            rep.check(lhs == rhs, law="delta multiplicative over star",
                      x=repr(x), y=repr(y))
            lhs = coproduct_delta_star(prod_m(x, y))
            rhs = tensor_product("m", coproduct_delta_star(x),
                                 coproduct_delta_star(y))
            rep.check(lhs == rhs, law="delta_star multiplicative over m",
                      x=repr(x), y=repr(y))

        # grading: products add sizes
        for x, y in _pairs_by_total(by_size, n_max, sizes_from=1):
            sx = next(iter(x.degrees()))
            sy = next(iter(y.degrees()))
            for op in _PRODUCTS:
                degs = _PRODUCTS[op](x, y).degrees()
                rep.check(degs == {sx + sy}, law=f"{op} graded",
                          x=repr(x), y=repr(y))

        # duality against the coproducts
        for s1 in range(n_max + 1):
            for s2 in range(n_max + 1 - s1):
                for z in by_size[s1 + s2]:
                    for x in by_size[s1]:
                        for y in by_size[s2]:
                            xy = TensorSum(
                                {(a, b): c1 * c2
                                 for a, c1 in x.terms.items()
                                 for b, c2 in y.terms.items()}
                            )
                            rep.check(
                                pairing(prod_m(x, y), z)
                                == tensor_pairing(xy, coproduct_delta(z)),
                                law="<xy,z> = <x(x)y, delta z>",
                                x=repr(x), y=repr(y), z=repr(z),
                            )
                            rep.check(
                                pairing(prod_star(x, y), z)
                                == tensor_pairing(xy, coproduct_delta_star(z)),
                                law="<x*y,z> = <x(x)y, delta_star z>",
                                x=repr(x), y=repr(y), z=repr(z),
                            )
    return rep


def verify_infinitesimal(n_max: int) -> VerificationReport:
    """delta_star(x down y) = delta_star(x) down (1 (x) y)
    + (x (x) 1) down delta_star(y) - x (x) y, totals up to n_max."""
    rep = VerificationReport(suite=f"infinitesimal(total size <= {n_max})")
    with timed(rep):
        by_size = _classes_up_to(n_max)
        for s1 in range(1, n_max + 1):
            for s2 in range(1, n_max + 1 - s1):
                for x in by_size[s1]:
                    for y in by_size[s2]:
                        lhs = coproduct_delta_star(prod_ordinal(x, y))
                        ykey = next(iter(y.terms))
                        xkey = next(iter(x.terms))
                        t1 = tensor_product(
                            "down", coproduct_delta_star(x),
                            TensorSum({(UNIT_KEY, ykey): 1}),
                        )
                        t2 = tensor_product(
                            "down", TensorSum({(xkey, UNIT_KEY): 1}),
                            coproduct_delta_star(y),
                        )
                        rhs = t1 + t2 - TensorSum({(xkey, ykey): 1})
                        rep.check(lhs == rhs, law="infinitesimal compatibility",
                                  x=repr(x), y=repr(y))
    return rep


def verify_nap(n_max: int) -> VerificationReport:
    """Both triangle products satisfy the permutative identities
    x tri (y tri z) == (x y) tri z == y tri (x tri z), totals up to n_max."""
    rep = VerificationReport(suite=f"nap(total size <= {n_max})")
    with timed(rep):
        by_size = _classes_up_to(n_max)
        for s1 in range(1, n_max + 1):
            for s2 in range(1, n_max + 1 - s1):
                for s3 in range(1, n_max + 1 - s1 - s2):
                    for x in by_size[s1]:
                        for y in by_size[s2]:
                            for z in by_size[s3]:
                                for op in ("uptri", "downtri"):
                                    fn = _PRODUCTS[op]
                                    a = fn(x, fn(y, z))
                                    b = fn(prod_m(x, y), z)
                                    c = fn(y, fn(x, z))
                                    rep.check(a == b == c,
                                              law=f"{op} permutative",
                                              x=repr(x), y=repr(y), z=repr(z))
    return rep
