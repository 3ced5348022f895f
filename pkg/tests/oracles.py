"""Slow reference implementations used to cross-check the package.

Everything here is deliberately naive and independent of the library's
algorithms: posets are (elements, set-of-strict-pairs), enumeration filters
all binary relations, isomorphism tries every bijection, and compositions
follow their definitions literally.  Oracles accept library posets only
through the `view` adapter.
"""

from __future__ import annotations

import itertools


def view(p) -> tuple[tuple[str, ...], frozenset]:
    """Adapt a library poset to the (elements, strict pairs) shape used here."""
    return tuple(p.elements), frozenset((u, v) for u, v in p.strict_pairs())


def transitive(pairs: frozenset) -> bool:
    return all(
        (a, d) in pairs
        for a, b in pairs
        for c, d in pairs
        if b == c
    )


def antisymmetric(pairs: frozenset) -> bool:
    return all((b, a) not in pairs for a, b in pairs)


def closure(pairs: set) -> frozenset:
    out = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(out):
            for c, d in list(out):
                if b == c and (a, d) not in out:
                    out.add((a, d))
                    changed = True
    return frozenset(out)


def all_strict_orders(elements) -> list[frozenset]:
    """Every strict partial order on the given labels, by filtering all
    subsets of ordered pairs.  Exponential in n^2; fine for n <= 4."""
    elements = list(elements)
    slots = [(a, b) for a in elements for b in elements if a != b]
    out = []
    for bits in range(1 << len(slots)):
        pairs = frozenset(slots[i] for i in range(len(slots)) if bits >> i & 1)
        if transitive(pairs) and antisymmetric(pairs):
            out.append(pairs)
    return out


def degree_profile(elements, rel):
    return sorted(
        (
            sum(1 for u, v in rel if u == e),
            sum(1 for u, v in rel if v == e),
        )
        for e in elements
    )


def isomorphic(els_a, rel_a, els_b, rel_b) -> bool:
    els_a, els_b = list(els_a), list(els_b)
    if len(els_a) != len(els_b) or len(rel_a) != len(rel_b):
        return False
    if degree_profile(els_a, rel_a) != degree_profile(els_b, rel_b):
        return False
    for perm in itertools.permutations(els_b):
        f = dict(zip(els_a, perm))
        if all((f[u], f[v]) in rel_b for u, v in rel_a):
            return True
    return False


def automorphism_count(elements, rel) -> int:
    elements = list(elements)
    count = 0
    for perm in itertools.permutations(elements):
        f = dict(zip(elements, perm))
        if all(((f[u], f[v]) in rel) == ((u, v) in rel)
               for u in elements for v in elements if u != v):
            count += 1
    return count


def count_isoclasses(orders, elements) -> int:
    reps: list[frozenset] = []
    for rel in orders:
        if not any(isomorphic(elements, rel, elements, seen) for seen in reps):
            reps.append(rel)
    return len(reps)


def compose_set_family(family, els_a, rel_a, vertex, els_b, rel_b):
    """The three set-level compositions, written out from their definitions."""
    ground = [e for e in els_a if e != vertex] + list(els_b)
    below = {x for x in els_a if (x, vertex) in rel_a}
    above = {y for y in els_a if (vertex, y) in rel_a}
    mins_b = {b for b in els_b if not any((c, b) in rel_b for c in els_b)}
    maxs_b = {b for b in els_b if not any((b, c) in rel_b for c in els_b)}
    pairs = {(u, v) for u, v in rel_a if u != vertex and v != vertex}
    pairs |= set(rel_b)
    if family == "bullet":
        pairs |= {(x, b) for x in below for b in els_b}
        pairs |= {(b, y) for b in els_b for y in above}
    elif family == "down":
        pairs |= {(x, b) for x in below for b in els_b}
        pairs |= {(b, y) for b in mins_b for y in above}
    elif family == "up":
        pairs |= {(x, b) for x in below for b in maxs_b}
        pairs |= {(b, y) for b in els_b for y in above}
    else:
        raise ValueError(family)
    return tuple(sorted(ground)), closure(pairs)


def omega_terms(els_a, rel_a, vertex, els_b, rel_b):
    """All orders on the composite ground set that restrict to the inner
    poset exactly, keep it convex, and collapse back onto the outer poset."""
    ground = sorted([e for e in els_a if e != vertex] + list(els_b))
    inner = set(els_b)
    out = []
    for rel in all_strict_orders(ground):
        if {(u, v) for u, v in rel if u in inner and v in inner} != set(rel_b):
            continue
        convex = all(
            w in inner
            for u, v in rel if u in inner and v in inner
            for w in ground if (u, w) in rel and (w, v) in rel
        )
        if not convex:
            continue
        if quotient_onto(ground, rel, inner, vertex) != set(rel_a):
            continue
        out.append(rel)
    return out


def quotient_onto(ground, rel, block, new_label):
    """Relation after collapsing the block to one point, saturating paths
    through the block."""
    outside = [x for x in ground if x not in block]
    pairs = set()
    for x in outside:
        for y in outside:
            if (x, y) in rel or (
                any((x, b) in rel for b in block)
                and any((b, y) in rel for b in block)
            ):
                if x != y:
                    pairs.add((x, y))
    for x in outside:
        if any((x, b) in rel for b in block):
            pairs.add((x, new_label))
        if any((b, x) in rel for b in block):
            pairs.add((new_label, x))
    return closure(pairs)


def refinements_of(elements, rel) -> list[frozenset]:
    sub = []
    rel = list(rel)
    for bits in range(1 << len(rel)):
        pairs = frozenset(rel[i] for i in range(len(rel)) if bits >> i & 1)
        if transitive(pairs):
            sub.append(pairs)
    return sub


def up_sets(elements, rel) -> list[frozenset]:
    """Subsets with nothing of the complement above them."""
    out = []
    elements = list(elements)
    for r in range(len(elements) + 1):
        for combo in itertools.combinations(elements, r):
            chosen = set(combo)
            if all(v in chosen for u in chosen for v in elements if (u, v) in rel):
                out.append(frozenset(chosen))
    return out


def convex_subsets(elements, rel) -> list[frozenset]:
    out = []
    elements = list(elements)
    for r in range(1, len(elements) + 1):
        for combo in itertools.combinations(elements, r):
            chosen = set(combo)
            if all(
                w in chosen
                for u in chosen for v in chosen
                for w in elements
                if (u, w) in rel and (w, v) in rel
            ):
                out.append(frozenset(chosen))
    return out


N_RELATION = frozenset([("a", "c"), ("b", "c"), ("b", "d")])


def contains_n(elements, rel) -> bool:
    for sub in itertools.combinations(elements, 4):
        induced = frozenset((u, v) for u, v in rel if u in sub and v in sub)
        if isomorphic(sub, induced, ("a", "b", "c", "d"), N_RELATION):
            return True
    return False


def ordinal_cuts(elements, rel) -> list[frozenset]:
    """Proper nonempty down-parts X with X x complement fully related; they
    are linearly ordered by inclusion."""
    cuts = []
    elements = list(elements)
    for r in range(1, len(elements)):
        for combo in itertools.combinations(elements, r):
            low = set(combo)
            rest = [e for e in elements if e not in low]
            if all((x, y) in rel for x in low for y in rest):
                cuts.append(frozenset(low))
    return sorted(cuts, key=len)


def ordinal_factors(elements, rel) -> list[tuple]:
    """Maximal ordinal factorization via the cut chain."""
    cuts = ordinal_cuts(elements, rel)
    blocks = []
    done: set = set()
    for cut in cuts + [frozenset(elements)]:
        fresh = sorted(cut - done)
        if fresh:
            blocks.append(tuple(fresh))
            done |= cut
    return blocks


def graft_or_union(els_a, rel_a, els_b, rel_b, graft: bool):
    """Disjoint union, or the first poset placed over the minima of the
    second; grounds are assumed disjoint."""
    els = tuple(sorted(els_a + els_b))
    pairs = set(rel_a) | set(rel_b)
    if graft:
        mins_b = {b for b in els_b if not any((c, b) in rel_b for c in els_b)}
        pairs |= {(m, x) for m in mins_b for x in els_a}
    return els, closure(pairs)


def binary_closure(n_max) -> list[tuple]:
    """Classes generated from the one-point poset by disjoint union and
    grafting, one representative each, up to the size bound."""
    found = [(("1",), frozenset())]
    changed = True
    while changed:
        changed = False
        for (els_a, rel_a), (els_b, rel_b) in itertools.product(list(found), repeat=2):
            if len(els_a) + len(els_b) > n_max:
                continue
            ren_a = {e: f"a{i}" for i, e in enumerate(els_a)}
            ren_b = {e: f"b{i}" for i, e in enumerate(els_b)}
            ea = tuple(ren_a[e] for e in els_a)
            ra = frozenset((ren_a[u], ren_a[v]) for u, v in rel_a)
            eb = tuple(ren_b[e] for e in els_b)
            rb = frozenset((ren_b[u], ren_b[v]) for u, v in rel_b)
            for graft in (False, True):
                els, rel = graft_or_union(ea, ra, eb, rb, graft)
                if not any(isomorphic(els, rel, e2, r2) for e2, r2 in found):
                    found.append((els, rel))
                    changed = True
    return found


def closure_of_seeds(seed_rels, compose_fns, n_max) -> list[frozenset]:
    """Naive generated-class computation: keep one representative per
    isomorphism class, composing until nothing new appears."""
    singleton = (("1",), frozenset())
    found = [singleton]
    for els, rel in seed_rels:
        if not any(isomorphic(els, rel, e2, r2) for e2, r2 in found):
            found.append((els, rel))
    changed = True
    while changed:
        changed = False
        for (els_a, rel_a), (els_b, rel_b) in itertools.product(list(found), repeat=2):
            if len(els_a) + len(els_b) - 1 > n_max:
                continue
            ren_a = {e: f"a{i}" for i, e in enumerate(els_a)}
            ren_b = {e: f"b{i}" for i, e in enumerate(els_b)}
            els_a2 = tuple(ren_a[e] for e in els_a)
            rel_a2 = frozenset((ren_a[u], ren_a[v]) for u, v in rel_a)
            els_b2 = tuple(ren_b[e] for e in els_b)
            rel_b2 = frozenset((ren_b[u], ren_b[v]) for u, v in rel_b)
            for vertex in els_a2:
                for fn in compose_fns:
                    els, rel = fn(els_a2, rel_a2, vertex, els_b2, rel_b2)
                    if not any(isomorphic(els, rel, e2, r2) for e2, r2 in found):
                        found.append((els, rel))
                        changed = True
    return found
