"""Replay of the bundled worked examples against their golden fixtures.

Every fixture file under ``posetops/golden/`` freezes the expected outcome of
a small hand-checkable computation: single insertions, full order-sum
expansions, mixed-family nesting comparisons, the generated class lists on up
to four elements, and sample values of the chain-reversing bijection.  The
runner recomputes each case with the public API and reports mismatches; it is
also what the ``paper-examples`` CLI verb executes.

Conventions:
  * fixture posets are stored as ``{"elements": [...], "relations": [...]}``
    documents and rebuilt with :func:`posetops.core.from_doc`;
  * expansions are compared as multisets of labeled posets (via FormalSum
    equality), single results are compared with labels on the nose;
  * class-level cases compare canonical keys, never representatives.
"""

from __future__ import annotations

import json
from importlib import resources

from .canon import class_key
from .core import from_doc, relabel
from .operad import FormalSum, compose
from .report import VerificationReport, timed
from .species import circ_bilinear
from .structure import closure_nabla, closure_wn, theta, theta_inverse

GOLDEN_FILES = (
    "compositions.json",
    "insertion_sums.json",
    "mixed_nesting.json",
    "class_lists.json",
    "bijection_map.json",
)


def load_fixture(name: str) -> dict:
    text = resources.files("posetops.golden").joinpath(name).read_text("utf-8")
    return json.loads(text)


def _run_steps(steps: list[dict]):
    prev = None
    for step in steps:
        outer = prev if step["outer"] == "prev" else from_doc(step["outer"])
        inner = prev if step["inner"] == "prev" else from_doc(step["inner"])
        prev = compose(step["family"], outer, step["vertex"], inner)
    return prev


def check_compositions(report: VerificationReport) -> None:
    for case in load_fixture("compositions.json")["cases"]:
        got = compose(
            case["family"],
            from_doc(case["outer"]),
            case["vertex"],
            from_doc(case["inner"]),
        )
        expected = from_doc(case["expected"])
        report.check(got == expected, case=case["name"], got=got.to_doc())


def check_insertion_sums(report: VerificationReport) -> None:
    for case in load_fixture("insertion_sums.json")["cases"]:
        if case.get("kind") == "product_of_sums":
            left = FormalSum.of(*[from_doc(d) for d in case["left_sum"]])
            right = FormalSum.of(*[from_doc(d) for d in case["right_sum"]])
            got = circ_bilinear(left, case["vertex"], right)
        else:
            got = compose(
                "circ",
                from_doc(case["outer"]),
                case["vertex"],
                from_doc(case["inner"]),
            )
        if "relabel" in case:
            got = got.map_terms(
                lambda p: FormalSum.of(relabel(p, case["relabel"]))
            )
        expected = FormalSum.of(*[from_doc(d) for d in case["expected"]])
        report.check(got == expected, case=case["name"], got=repr(got))


def check_mixed_nesting(report: VerificationReport) -> None:
    for case in load_fixture("mixed_nesting.json")["cases"]:
        left = _run_steps(case["left"])
        right = _run_steps(case["right"])
        left_key = class_key(left)
        right_key = class_key(right)
        ok = (
            left_key == class_key(from_doc(case["left_class"]))
            and right_key == class_key(from_doc(case["right_class"]))
            and left_key != right_key
        )
        report.check(ok, case=case["name"], left=left.to_doc(), right=right.to_doc())


def check_class_lists(report: VerificationReport) -> None:
    fixture = load_fixture("class_lists.json")
    for section, closure in (
        ("series_parallel", closure_wn),
        ("graft_compatible", closure_nabla),
    ):
        listed = {class_key(from_doc(doc)) for doc in fixture[section]}
        generated = {c.key for c in closure(4)}
        report.check(
            listed == generated,
            case=section,
            missing=sorted(generated - listed),
            extra=sorted(listed - generated),
        )
        report.check(
            len(listed) == len(fixture[section]),
            case=f"{section} entries pairwise non-isomorphic",
        )


def check_bijection_map(report: VerificationReport) -> None:
    for case in load_fixture("bijection_map.json")["cases"]:
        source = from_doc(case["input"])
        image = theta(source)
        expected = from_doc(case["expected"])
        report.check(
            image == expected and theta_inverse(image) == source,
            case=f"bijection of {case['input']['relations']}",
            got=image.to_doc(),
        )


def run_worked_examples() -> VerificationReport:
    report = VerificationReport("worked-examples")
    with timed(report):
        check_compositions(report)
        check_insertion_sums(report)
        check_mixed_nesting(report)
        check_class_lists(report)
        check_bijection_map(report)
    return report
