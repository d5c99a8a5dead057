"""End-to-end acceptance run: one test per headline criterion.

The full suite executes once (module-scoped fixture, fixed seed) and each
test asserts its criterion's outcome, printing one pass/fail line.  WARN is
a passing status: it marks the repeated-part discrepancies that are reported
by design rather than asserted.

Two criteria are expected to be red on an honest run, and are left red on
purpose rather than weakened:

* criterion 5: the shipped seven cubics do NOT reproduce the matrix
  discriminant as a plain (or per-square weighted) sum of their squares —
  the pointwise ratio varies, so no scalar exists; and
* criterion 6: the closed-form Hilbert polynomials assume the subspaces
  intersect transversally, which fails for every multi-block pattern except
  the three-plane case (all subspaces share the diagonal line), so the
  brute-force Hilbert oracle disagrees with the formulas for most
  distinct-part patterns.

Both defects are measured, reported with full diagnostics, and surfaced —
the suite records what is true, not what was claimed.
"""

import json

import pytest

from eigenstrata.suite import run_suite

SEED = 2026


@pytest.fixture(scope="module")
def suite_report():
    return run_suite(SEED)


def _check(report, number):
    result = next(r for r in report.results if r.number == number)
    line = f"[{result.status}] criterion {number}: {result.name}"
    print(line)
    message = "\n".join(
        [line, *result.details,
         json.dumps([dict(f) for f in result.failures], indent=2, default=str)])
    assert result.status != "FAIL", message
    return result


def test_criterion_01_dimension_formula(suite_report):
    _check(suite_report, 1)


def test_criterion_02_interpolation_counts(suite_report):
    _check(suite_report, 2)


def test_criterion_03_generator_vanishing_and_span(suite_report):
    _check(suite_report, 3)


def test_criterion_04_jacobian_codimension(suite_report):
    _check(suite_report, 4)


def test_criterion_05_discriminant_sum_of_squares(suite_report):
    _check(suite_report, 5)


def test_criterion_06_hilbert_polynomial_vs_oracle(suite_report):
    _check(suite_report, 6)


def test_criterion_07_arrangement_degree(suite_report):
    _check(suite_report, 7)


def test_criterion_08_distance_degree_counts(suite_report):
    result = _check(suite_report, 8)
    # the flagged repeated-part case is reported with both counts
    warn22 = [w for w in result.warnings if w.get("partition") == "2,2"]
    assert warn22 and (warn22[0]["paper_edd"], warn22[0]["subspace_count"],
                       warn22[0]["real_critical_count"]) == (6, 3, 3)


def test_criterion_09_nearest_matrix_transfer(suite_report):
    _check(suite_report, 9)


def test_criterion_10_membership_classification(suite_report):
    _check(suite_report, 10)


def test_criterion_11_invariant_dimensions(suite_report):
    _check(suite_report, 11)


def test_criterion_12_determinism(suite_report):
    _check(suite_report, 12)


def test_suite_exit_semantics(suite_report):
    """The run's machine-readable failure list matches the per-criterion
    statuses; WARN rows never appear in it."""
    failing = {r.number for r in suite_report.results if r.status == "FAIL"}
    listed = {f["criterion"] for f in suite_report.failures()}
    assert listed == failing
