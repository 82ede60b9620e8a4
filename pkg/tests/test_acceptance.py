"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Everything runs on the full grids (A1 up to weight 8, A2 up to total weight
4, A3 fundamentals, B2 up to (2, 2) for the module-level suites; the
coefficient suites use the documented smaller grids).  All checks are exact
in Q(v) except the positivity criterion, which specializes at v = 2.
"""

import json

from qgroups.verify import ALL_CHECKS


def _run(name, label):
    result = ALL_CHECKS[name](quick=False)
    status = "PASS" if result["passed"] else "FAIL"
    print(f"criterion {label}: {status}")
    if not result["passed"]:
        print(json.dumps(result["details"].get("failures", [])[:10], default=str))
    assert result["passed"], f"criterion {label} failed"


def test_criterion_01_relations():
    _run("relations", "1 (defining relations, exact matrix identities)")


def test_criterion_02_dimensions():
    _run("dimensions", "2 (Weyl dimensions and Freudenthal multiplicities)")


def test_criterion_03_hopf():
    _run("hopf", "3 (coassociativity, counit, antipode, duality)")


def test_criterion_04_schur():
    _run("schur", "4 (orthogonality closed forms and antipode square)")


def test_criterion_05_haar_positivity():
    _run("haar_positivity", "5 (positivity of the invariant integral at v=2)")


def test_criterion_06_hom_criterion():
    _run("hom_criterion", "6 (parabolic intertwiner dimension)")


def test_criterion_07_invariants():
    _run("invariants", "7 (invariant-function algebra)")


def test_criterion_08_projectivity():
    _run("projectivity", "8 (trivialization round trips and complements)")


def test_criterion_09_frobenius():
    _run("frobenius", "9 (reciprocity dimensions and round trips)")


def test_criterion_10_borel_weil():
    _run("borel_weil", "10 (holomorphic sections and corollaries)")


def test_criterion_11_determinism(capsys):
    from qgroups.cli import EXIT_OK, main

    args = ["verify", "--quick", "--check", "dimensions", "--check",
            "hom_criterion", "--format", "json"]
    assert main(args) == EXIT_OK
    first = capsys.readouterr().out
    assert main(args) == EXIT_OK
    second = capsys.readouterr().out
    ok = first.encode() == second.encode()
    print(f"criterion 11 (byte-identical verification reports): "
          f"{'PASS' if ok else 'FAIL'}")
    assert ok
