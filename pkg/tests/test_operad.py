"""Insertion compositions: definitions vs brute force, laws, equivariance."""

import itertools
import random

import pytest

from posetops import (
    EmptyInner,
    FormalSum,
    GroundSetMismatch,
    VertexNotFound,
    all_posets,
    build,
    circ_bilinear,
    compose,
    is_finer,
    labeled_grid,
    quotient,
    relabel,
    restrict,
    verify_axioms,
    verify_equivariance,
    verify_nested,
    verify_parallel,
    verify_unit,
)

import oracles


SET_FAMILIES = ("bullet", "down", "up")


def rel_of(p):
    return frozenset((u, v) for u, v in p.strict_pairs())


def sum_rels(s):
    return {rel_of(p): c for p, c in s.posets()}


def grid(n_max, prefix):
    return list(labeled_grid(n_max, prefix))


def test_set_families_match_naive_definitions_exhaustively():
    outers, inners = grid(3, "a"), grid(3, "b")
    for a_poset in outers:
        va, ra = oracles.view(a_poset)
        for vertex in a_poset.elements:
            for b_poset in inners:
                vb, rb = oracles.view(b_poset)
                for family in SET_FAMILIES:
                    want_els, want_rel = oracles.compose_set_family(
                        family, va, ra, vertex, vb, rb
                    )
                    got = compose(family, a_poset, vertex, b_poset)
                    assert got.elements == want_els
                    assert rel_of(got) == want_rel


def test_circ_matches_order_filter_on_small_grounds():
    # every operand pair whose composite ground has at most four elements
    outers, inners = grid(3, "a"), grid(3, "b")
    for a_poset, b_poset in itertools.product(outers, inners):
        if len(a_poset) + len(b_poset) - 1 > 4:
            continue
        va, ra = oracles.view(a_poset)
        vb, rb = oracles.view(b_poset)
        for vertex in a_poset.elements:
            want = oracles.omega_terms(va, ra, vertex, vb, rb)
            got = compose("circ", a_poset, vertex, b_poset)
            assert sum_rels(got) == {rel: 1 for rel in want}


def test_circ_terms_are_sandwiched_between_up_down_and_bullet():
    outers, inners = grid(3, "a"), grid(3, "b")
    for a_poset, b_poset in itertools.product(outers, inners):
        for vertex in a_poset.elements:
            terms = sum_rels(compose("circ", a_poset, vertex, b_poset))
            bullet = compose("bullet", a_poset, vertex, b_poset)
            down = compose("down", a_poset, vertex, b_poset)
            up = compose("up", a_poset, vertex, b_poset)
            assert rel_of(bullet) in terms
            assert rel_of(down) in terms
            assert rel_of(up) in terms
            assert all(c == 1 for c in terms.values())
            for rel in terms:
                # the saturated composition is the unique coarsest term
                term = build(bullet.elements, rel)
                assert is_finer(term, bullet)


def test_circ_terms_satisfy_the_admissibility_predicates():
    # a size (3,3) spot check beyond the exhaustive small-ground sweep
    a_poset = build(["a1", "a2", "a3"], [("a1", "a2")])
    b_poset = build(["b1", "b2", "b3"], [("b1", "b3"), ("b2", "b3")])
    va, ra = oracles.view(a_poset)
    got = compose("circ", a_poset, "a2", b_poset)
    assert all(c == 1 for _, c in got.posets())
    for term, _ in got.posets():
        assert restrict(term, b_poset.elements) == b_poset
        assert oracles.view(quotient(term, b_poset.elements, "a2"))[1] == ra
        els, rel = oracles.view(term)
        inner = set(b_poset.elements)
        assert all(
            w in inner
            for u in inner for v in inner
            for w in els
            if (u, w) in rel and (w, v) in rel
        )


def test_unit_laws_on_every_small_poset():
    for family in SET_FAMILIES + ("circ",):
        for p in grid(3, "a"):
            for vertex in p.elements:
                assert verify_unit(family, p, vertex)


def test_nested_and_parallel_laws_on_sample_triples():
    rng = random.Random(11)
    outers = grid(3, "a")
    mids = grid(2, "b")
    inners = grid(2, "c")
    for family in SET_FAMILIES + ("circ",):
        for _ in range(40):
            a_poset = rng.choice(outers)
            b_poset = rng.choice(mids)
            c_poset = rng.choice(inners)
            a = rng.choice(a_poset.elements)
            b = rng.choice(b_poset.elements)
            assert verify_nested(family, a_poset, b_poset, c_poset, a, b)
            if len(a_poset) >= 2:
                a2 = rng.choice([e for e in a_poset.elements if e != a])
                assert verify_parallel(family, a_poset, b_poset, c_poset, a, a2)


def test_axiom_suites_pass_at_size_two():
    for family in SET_FAMILIES + ("circ",):
        report = verify_axioms(family, n_max=2)
        assert report.ok, report.to_doc()
        assert report.cases > 0


def test_equivariance_suite_passes():
    report = verify_equivariance(n_max=2, seed=3)
    assert report.ok, report.to_doc()


def test_equivariance_directly_against_oracle():
    a_poset = build(["a1", "a2", "a3"], [("a1", "a3"), ("a2", "a3")])
    b_poset = build(["b1", "b2"], [("b1", "b2")])
    sigma = {"a1": "p", "a2": "q", "a3": "r", "b1": "s", "b2": "t"}
    for family in SET_FAMILIES:
        plain = compose(family, a_poset, "a2", b_poset)
        moved = compose(
            family,
            relabel(a_poset, sigma),
            "q",
            relabel(b_poset, sigma),
        )
        assert relabel(plain, sigma) == moved


def test_compose_rejects_bad_inputs():
    p = build(["a", "b"], [("a", "b")])
    q = build(["1"], [])
    with pytest.raises(VertexNotFound):
        compose("bullet", p, "zz", q)
    with pytest.raises(EmptyInner):
        compose("bullet", p, "a", build([], []))
    with pytest.raises(VertexNotFound):
        compose("circ", build([], []), "a", q)
    with pytest.raises(Exception):
        compose("nosuch", p, "a", q)


def test_compose_freshens_colliding_inner_labels():
    p = build(["a", "b"], [("a", "b")])
    got = compose("bullet", p, "a", build(["b"], []))
    assert got == build(["b", "b'"], [("b'", "b")])
    got2 = compose("bullet", p, "b", build(["a", "b"], [("a", "b")]))
    assert got2 == build(["a", "a'", "b"], [("a", "a'"), ("a'", "b")])


def test_formal_sum_arithmetic():
    p = build(["1", "2"], [("1", "2")])
    q = build(["1", "2"], [])
    s = FormalSum.of(p) + FormalSum.of(q)
    assert sum_rels(s) == {rel_of(p): 1, rel_of(q): 1}
    assert sum_rels(2 * FormalSum.of(p) - FormalSum.of(p)) == {rel_of(p): 1}
    assert FormalSum.of(p) - FormalSum.of(p) == FormalSum.zero(["1", "2"])
    with pytest.raises(GroundSetMismatch):
        FormalSum.of(p) + FormalSum.of(build(["3"], []))


def test_circ_bilinear_distributes_over_sums():
    edge = build(["a", "b"], [("a", "b")])
    anti = build(["a", "b"], [])
    inner = build(["1", "2"], [("1", "2")])
    s = FormalSum.of(edge) + FormalSum.of(anti)
    combined = circ_bilinear(s, "a", inner)
    split = circ_bilinear(edge, "a", inner) + circ_bilinear(anti, "a", inner)
    assert combined == split
