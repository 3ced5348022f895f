"""Top-level acceptance gate: ten numbered criteria, one line each.

Run with `pytest tests/test_acceptance.py -v` to see one pass/fail line per
criterion; with `-s` the printed summary lines appear inline.  The slow
criteria (full axiom grids, the size-6 closure sweep) keep this module's
runtime around three to four minutes.
"""

import itertools
import time

import pytest

from posetops import (
    NotConvex,
    all_isoclasses,
    all_posets,
    build,
    closure_nabla,
    closure_triple,
    closure_wn,
    connected_components,
    is_convex,
    is_nabla_compatible,
    is_wn,
    labeled_count,
    pinned_sequences,
    quotient,
    run_worked_examples,
    theta,
    theta_inverse,
    verify_axioms,
    verify_bialgebra,
    verify_equivariance,
    verify_graft_split,
    verify_infinitesimal,
    verify_involution,
    verify_mixed,
    verify_nap,
    verify_phi,
    verify_suboperad_relations,
)
from posetops.canon import class_key

import oracles


def emit(num, label, ok, detail):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {num:2d} {status} — {label} ({detail})")
    assert ok, f"criterion {num} FAIL — {label} ({detail})"


def test_criterion_01_worked_examples():
    report = run_worked_examples()
    emit(
        1,
        "bundled worked examples reproduce exactly, labels included",
        report.ok and report.seconds < 60,
        f"{report.cases} cases in {report.seconds:.2f}s",
    )


def test_criterion_02_operad_axioms():
    t0 = time.time()
    reports = [verify_axioms(f, n_max=3) for f in ("bullet", "down", "up", "circ")]
    reports.append(verify_equivariance(n_max=3))
    elapsed = time.time() - t0
    ok = all(r.ok for r in reports) and elapsed < 300
    cases = sum(r.cases for r in reports)
    emit(
        2,
        "parallel/nested associativity for all four families, sizes <= 3",
        ok,
        f"{cases} checks in {elapsed:.0f}s",
    )


def test_criterion_03_quotient_iff_convex():
    checked = 0
    ok = True
    for n in range(1, 5):
        for p in all_posets(n):
            for r in range(1, n + 1):
                for subset in itertools.combinations(p.elements, r):
                    checked += 1
                    convex = is_convex(p, subset)
                    try:
                        q = quotient(p, subset, "q")
                        succeeded = True
                    except NotConvex:
                        succeeded = False
                    if succeeded != convex:
                        ok = False
                    elif succeeded:
                        els, rel = oracles.view(p)
                        want = oracles.quotient_onto(els, rel, set(subset), "q")
                        if frozenset(q.strict_pairs()) != want:
                            ok = False
    emit(3, "quotient succeeds exactly on convex subsets, n <= 4", ok,
         f"{checked} subset cases")


def test_criterion_04_phi_isomorphism():
    report = verify_phi(n_max=3, inverse_n=4)
    emit(4, "refinement transform is an operad morphism with two-sided inverse",
         report.ok, f"{report.cases} cases in {report.seconds:.2f}s")


def test_criterion_05_mixed_identities():
    report = verify_mixed(a_max=3, bc_max=2)
    emit(5, "mixed-family compatibility identities at distinct vertices",
         report.ok, f"{report.cases} cases in {report.seconds:.2f}s")


def test_criterion_06_hopf_suites():
    reports = [verify_bialgebra(4), verify_infinitesimal(4), verify_nap(4)]
    ok = all(r.ok for r in reports)
    cases = sum(r.cases for r in reports)
    emit(6, "product/coproduct algebra suites over small classes", ok,
         f"{cases} checks")


def test_criterion_07_counting():
    ok = True
    connected = [len(all_isoclasses(n, "connected")) for n in range(1, 5)]
    ok &= connected == [1, 1, 3, 10]
    wn_iso = [len(all_isoclasses(n, "wn")) for n in range(1, 5)]
    nabla_iso = [len(all_isoclasses(n, "nabla")) for n in range(1, 5)]
    ok &= wn_iso == [1, 2, 5, 15] and nabla_iso == [1, 2, 5, 15]
    labeled = []
    for n in range(1, 5):
        els = tuple(str(i) for i in range(1, n + 1))
        labeled.append(len(oracles.all_strict_orders(els)))
    ok &= labeled == [1, 3, 19, 219]
    ok &= labeled == [labeled_count(n) for n in range(1, 5)]
    ok &= all(
        labeled_count(n, "wn") == labeled_count(n, "nabla") for n in range(1, 6)
    )
    seq = pinned_sequences()
    ok &= seq["A048172"]["values"][:5] == [
        labeled_count(n, "wn") for n in range(1, 6)
    ]
    ok &= seq["A003430"]["values"][:5] == [
        len(all_isoclasses(n, "wn")) for n in range(1, 6)
    ]
    emit(7, "connected/class/labeled counts and pinned sequence prefixes", ok,
         f"labeled prefix {labeled}")


def test_criterion_08_suboperad_structure():
    t0 = time.time()
    ok = True
    wn_keys = {c.key for n in range(1, 6) for c in all_isoclasses(n, "wn")}
    ok &= {c.key for c in closure_wn(5)} == wn_keys
    nabla_keys = {c.key for n in range(1, 6) for c in all_isoclasses(n, "nabla")}
    ok &= {c.key for c in closure_nabla(5)} == nabla_keys
    ok &= verify_suboperad_relations().ok
    conn4 = {c.key for c in all_isoclasses(4, "connected")}
    ok &= conn4 <= {c.key for c in closure_triple(4)}
    triple6 = {c.key for c in closure_triple(6)}
    conn6 = {c.key for c in all_isoclasses(6, "connected")}
    six_members = {
        c.key for c in closure_triple(6) if len(c.representative) == 6
    }
    ok &= six_members < conn6  # proper subset
    elapsed = time.time() - t0
    ok &= elapsed < 900
    emit(8, "generated families match their closures; triple closure gaps at 6",
         ok, f"{len(triple6)} triple classes, {len(conn6) - len(six_members)} "
             f"missing at size 6, {elapsed:.0f}s")


def test_criterion_09_theta_bijection():
    t0 = time.time()
    ok = True
    for n in range(1, 6):
        images = set()
        wn_total = 0
        for p in all_posets(n):
            if not is_wn(p):
                continue
            wn_total += 1
            c = theta(p)
            ok &= c.elements == p.elements
            ok &= theta_inverse(c) == p
            images.add(c)
        ok &= len(images) == wn_total
        ok &= images == {p for p in all_posets(n) if is_nabla_compatible(p)}
    graft = verify_graft_split(n_max=3)
    ok &= graft.ok
    elapsed = time.time() - t0
    emit(9, "ground-preserving bijection with inverse, plus split identities",
         ok, f"grounds up to 5 in {elapsed:.0f}s")


def test_criterion_10_involution():
    report = verify_involution(n_max=3)
    emit(10, "opposite preserves saturation and swaps the two attachments",
         report.ok, f"{report.cases} cases in {report.seconds:.2f}s")
