"""Refinements and the change of basis between the set-level and linear
insertion structures.

A poset A' refines A (written A' before A here) when both share a ground set
and every comparability of A' also holds in A.  The map

    phi(A) = sum of all refinements of A  (A itself included)

is invertible because refinement is a partial order on each ground set and
phi is unitriangular with respect to it; the inverse is computed by the usual
recursion  phi_inverse(A) = A - sum over proper refinements Q of phi_inverse(Q).

The point of phi is that it intertwines the saturated set-level composition
with the summed one:  phi(A bullet_a B) = phi(A) circ_a phi(B).
"""

from __future__ import annotations

from .core import Poset, is_finer
from .operad import FormalSum, InsertionSite, compose_circ, transitive_subsets
from .report import VerificationReport, timed

__all__ = [
    "FormalSum",
    "refinements",
    "phi",
    "phi_inverse",
    "circ_bilinear",
    "verify_phi_morphism",
    "verify_phi",
]


def refinements(p: Poset) -> list[Poset]:
    """All posets on the same ground set whose relation is contained in p's.

    These are exactly the transitive subsets of p's strict pairs; they are
    walked with the same pruned search used for composition candidates.
    """
    n = len(p)
    base = tuple(1 << i for i in range(n))
    free = []
    for i in range(n):
        row = p.up_mask(i) & ~(1 << i)
        while row:
            j = (row & -row).bit_length() - 1
            free.append((i, j))
            row &= row - 1
    down = p.down_masks()

    def interval(u: int, v: int) -> int:
        return p.up_mask(u) & down[v]

    out = [Poset(p.elements, rows) for rows in transitive_subsets(n, base, free, interval)]
    out.sort(key=lambda q: q._up)
    return out


def phi(x: Poset | FormalSum) -> FormalSum:
    if isinstance(x, Poset):
        return FormalSum.of(*refinements(x))
    return x.map_terms(lambda p: FormalSum.of(*refinements(p)))


_INV_CACHE: dict[tuple, FormalSum] = {}


def _phi_inverse_basis(p: Poset) -> FormalSum:
    key = p.relation_key()
    hit = _INV_CACHE.get(key)
    if hit is not None:
        return hit
    acc = FormalSum.of(p)
    for q in refinements(p):
        if q != p:
            acc = acc - _phi_inverse_basis(q)
    _INV_CACHE[key] = acc
    return acc


def phi_inverse(x: Poset | FormalSum) -> FormalSum:
    """Inverse of phi, by unitriangular recursion over refinements."""
    if isinstance(x, Poset):
        return _phi_inverse_basis(x)
    return x.map_terms(_phi_inverse_basis)


def circ_bilinear(x: Poset | FormalSum, vertex: str, y: Poset | FormalSum) -> FormalSum:
    """Bilinear extension of the summed composition to formal sums."""
    xs = FormalSum.of(x) if isinstance(x, Poset) else x
    ys = FormalSum.of(y) if isinstance(y, Poset) else y
    acc: FormalSum | None = None
    for p, cp in xs.posets():
        for q, cq in ys.posets():
            contrib = (cp * cq) * compose_circ(InsertionSite(p, vertex, q))
            acc = contrib if acc is None else acc + contrib
    assert acc is not None
    return acc


def verify_phi_morphism(a_poset: Poset, vertex: str, b_poset: Poset) -> bool:
    """phi(A bullet_a B) == phi(A) circ_a phi(B) as formal sums."""
    from .operad import compose_bullet

    left = phi(compose_bullet(InsertionSite(a_poset, vertex, b_poset)))
    right = circ_bilinear(phi(a_poset), vertex, phi(b_poset))
    return left == right


def is_refinement(p: Poset, q: Poset) -> bool:
    """Convenience alias: p refines q."""
    return is_finer(p, q)


def verify_phi(n_max: int = 3, inverse_n: int = 4) -> VerificationReport:
    """Exhaustive run of the change-of-basis properties.

    The morphism identity ranges over all labeled outer posets with at most
    n_max elements, every vertex, and all inner posets with at most n_max
    elements on a disjoint ground set; inversion is checked on every labeled
    poset with at most inverse_n elements.
    """
    from .enumeration import all_posets
    from .operad import labeled_grid

    report = VerificationReport(f"phi[morphism n<={n_max}, inverse n<={inverse_n}]")
    with timed(report):
        b_list = labeled_grid(n_max, "b")
        for a_poset in labeled_grid(n_max, "a"):
            for a in a_poset.elements:
                for b_poset in b_list:
                    report.check(
                        verify_phi_morphism(a_poset, a, b_poset),
                        law="morphism",
                        outer=a_poset.to_doc(), vertex=a, inner=b_poset.to_doc(),
                    )
        for n in range(1, inverse_n + 1):
            for p in all_posets(n):
                report.check(
                    phi_inverse(phi(p)) == FormalSum.of(p),
                    law="inverse", poset=p.to_doc(),
                )
                report.check(
                    phi(phi_inverse(p)) == FormalSum.of(p),
                    law="inverse-flip", poset=p.to_doc(),
                )
    return report
