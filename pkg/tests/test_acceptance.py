"""Exit criteria: figure fidelity, exhaustive laws up to n = 12, CLI contract.

Each test records one PASS/FAIL line, printed in the terminal summary.
"""

import io
import json
import time
from contextlib import contextmanager


import conftest
from dyckstat.cli import run
from dyckstat.involution import PhiCase, phi, phi_inverse
from dyckstat.perm321 import enumerate_avoiders
from dyckstat.verify import (
    check_bijection_laws,
    check_duality,
    check_involution,
    check_phi_laws,
    check_switch_symmetry,
    joint_distribution,
)
from dyckstat.words import DyckWord, enumerate_dyck

from figures import FIGURES
from oracles import catalan_rec

MAX_N = 12
PERM_MAX_N = 9
ENUM_MAX_N = 14
PHI_SECONDS = 60.0
ENUM_SECONDS = 120.0


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        conftest.ACCEPTANCE_LINES.append(f"FAIL  {number}. {title}")
        raise
    conftest.ACCEPTANCE_LINES.append(f"PASS  {number}. {title}")


def assert_clean(report, max_n):
    assert report.max_n == max_n
    assert report.counterexample_count == 0, report.to_json()
    assert report.passed
    assert report.instances_checked == sum(catalan_rec(i) for i in range(max_n + 1))


def test_1_figure_fidelity():
    with criterion(1, "phi maps each figure's left path to its right path with the figure's case"):
        for k, case in zip((1, 2, 3), PhiCase):
            source, image = FIGURES[k]
            assert phi(source) == (DyckWord(image), case)


def test_2_inverse_fidelity():
    with criterion(2, "phi_inverse maps each figure's right path back, same case"):
        for k, case in zip((1, 2, 3), PhiCase):
            source, image = FIGURES[k]
            assert phi_inverse(image) == (DyckWord(source), case)


def test_3_phi_local_laws():
    with criterion(3, f"phi laws and round trips, all n <= {MAX_N}, single worker <= {PHI_SECONDS:.0f}s"):
        start = time.perf_counter()
        report = check_phi_laws(MAX_N, jobs=1)
        elapsed = time.perf_counter() - start
        assert_clean(report, MAX_N)
        assert sum(1 for _ in enumerate_dyck(MAX_N)) == 208012
        assert elapsed <= PHI_SECONDS


def test_4_involution():
    with criterion(4, f"Phi is an involution swapping returns and n-ldr, all n <= {MAX_N}"):
        report = check_involution(MAX_N)
        assert_clean(report, MAX_N)
        assert report.findings["internal_domain_violations"] == 0


def test_5_switch_symmetry():
    with criterion(5, f"joint distribution symmetric in (p, q), all n <= {MAX_N}; n = 3 table exact"):
        assert_clean(check_switch_symmetry(MAX_N), MAX_N)
        assert dict(joint_distribution(3).entries) == {
            ((1,), 1, 1): 1,
            ((1, 2), 1, 2): 1,
            ((1, 3), 2, 2): 1,
            ((1, 2), 2, 1): 1,
            ((1, 2, 3), 3, 3): 1,
        }


def test_6_permutation_correspondence():
    with criterion(6, f"321-avoider bijection and statistic correspondences, all n <= {PERM_MAX_N}"):
        assert_clean(check_bijection_laws(PERM_MAX_N), PERM_MAX_N)
        assert sum(1 for _ in enumerate_avoiders(PERM_MAX_N)) == 4862


def test_7_duality():
    with criterion(7, f"fdf(rev D) = n - ldr(D), returns(rev D) = returns(D), all n <= {MAX_N}"):
        assert_clean(check_duality(MAX_N), MAX_N)


def test_8_enumeration_counts():
    with criterion(8, f"|D_n| follows the Catalan recurrence for n <= {ENUM_MAX_N} within {ENUM_SECONDS:.0f}s"):
        start = time.perf_counter()
        counts = [sum(1 for _ in enumerate_dyck(n)) for n in range(ENUM_MAX_N + 1)]
        elapsed = time.perf_counter() - start
        assert counts == [catalan_rec(n) for n in range(ENUM_MAX_N + 1)]
        assert counts[14] == 2674440
        assert elapsed <= ENUM_SECONDS


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    return run(list(argv), stdout=out, stderr=err), out.getvalue(), err.getvalue()


def test_9_cli_contract():
    with criterion(9, "CLI: phi NNENEE, verify --max-n 3 --checks switch, stats NEEN"):
        code, out, _ = _run("phi", "NNENEE")
        assert code == 0
        assert out.splitlines() == ["NENNEE", "case: 2"]

        code, out, _ = _run("verify", "--max-n", "3", "--checks", "switch")
        assert code == 0
        reports = json.loads(out)
        assert [r["passed"] for r in reports] == [True]

        code, out, err = _run("stats", "NEEN")
        assert code == 2
        assert out == "" and err
