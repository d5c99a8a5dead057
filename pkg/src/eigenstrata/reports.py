"""Report payloads shared by the CLI and the acceptance suite.

Every command's JSON output is one of these payloads serialized verbatim, so
determinism checks can compare payloads without going through a terminal.
No timestamps, durations, or environment data ever enter a payload: byte
reproducibility for a fixed seed is part of the contract.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import arrangement_degree, hilbert_comparison
from .distance import FloatSymmetric, critical_points, edd_report, nearest_symmetric
from .golden import GOLDEN_CASES, golden_case, load_golden
from .interpolation import (jacobian_codim, parametrization_rank, span_equals,
                            vanishing_forms)
from .invariants import chevalley_check
from .partitions import Partition, codimension, dimension
from .polynomials import Polynomial, VariableIndexing
from .sampling import random_samples
from .seeding import derive_seed
from .unipoly import matrix_discriminant_symbolic


def dimension_payload(lam: Partition, seed: int) -> dict:
    formula = dimension(lam)
    rank = parametrization_rank(lam, seed)
    return {"partition": str(lam),
            "formula": formula,
            "codimension": codimension(lam),
            "rank": rank,
            "match": formula == rank,
            "seed": seed}


def samples_payload(lam: Partition, count: int, seed: int, height: int) -> dict:
    pts = random_samples(lam, count, seed, height)
    return {"partition": str(lam), "seed": seed, "height": height,
            "samples": [p.to_json() for p in pts]}


def interpolation_payload(lam: Partition, degree: int, seed: int, mode: str,
                          height: int, prime_count: int) -> dict:
    rep = vanishing_forms(lam, degree, seed, mode=mode, height=height,
                          prime_count=prime_count)
    return rep.to_json()


def hilbert_payload(lam: Partition, t_values, seed: int,
                    cache: dict | None = None) -> dict:
    rows = hilbert_comparison(lam, t_values, seed, cache)
    return {"partition": str(lam), "seed": seed,
            "rows": [r.to_json() for r in rows]}


def degree_payload(lam: Partition, seed: int) -> dict:
    return arrangement_degree(lam, seed).to_json()


def edd_payload(lam: Partition, seed: int) -> dict:
    rep = edd_report(lam, seed)
    pts = critical_points(rep.data_vector, lam)
    payload = rep.to_json()
    payload["critical_points"] = [cp.to_json() for cp in pts]
    return payload


def nearest_payload(matrix: FloatSymmetric, lam: Partition) -> dict:
    rep = nearest_symmetric(matrix, lam)
    payload = rep.to_json()
    payload["partition"] = str(lam)
    payload["input"] = matrix.to_json()
    return payload


def invariants_payload(lam: Partition, dmax: int, seed: int) -> dict:
    return chevalley_check(lam, dmax, seed).to_json()


def discriminant_payload(n: int, sos_check: bool = False) -> dict:
    disc = matrix_discriminant_symbolic(n)
    names = VariableIndexing(n).names
    payload = {"n": n, "polynomial": disc.to_json(),
               "text": disc.to_text(names),
               "term_count": len(disc.terms)}
    if sos_check and n == 3:
        payload["sum_of_squares"] = _sos_comparison(disc)
    return payload


def _sos_comparison(disc: Polynomial) -> dict:
    """Compare the squared shipped cubics against the discriminant."""
    gens = load_golden(golden_case(Partition([2, 1])))
    sos = Polynomial.zero(disc.nvars)
    for g in gens:
        sos = sos + g * g
    lead_exp, lead_coeff = disc.leading()
    scalar = sos.terms.get(lead_exp, Fraction(0)) / lead_coeff
    identical = sos == disc * scalar
    diff = sos - disc * scalar
    return {"scalar_at_leading_term": str(scalar),
            "identity_holds": identical,
            "difference_term_count": len(diff.terms)}


def verify_payload(seed: int, golden_dir=None) -> dict:
    """Golden-data regression: exact vanishing, span agreement, Jacobian codim."""
    cases = []
    for case in GOLDEN_CASES:
        gens = load_golden(case, golden_dir)
        fresh = random_samples(case.partition, 50,
                               derive_seed(seed, "golden-fresh", str(case.partition)))
        bad = []
        for gi, g in enumerate(gens):
            for s in fresh:
                value = g.evaluate(s.ambient)
                if value != 0:
                    bad.append({"generator_index": gi,
                                "generator": g.to_text(VariableIndexing(case.partition.n).names),
                                "value": str(value),
                                "sample": s.to_json()})
                    break
        rep = vanishing_forms(case.partition, case.degree,
                              derive_seed(seed, "golden-interp", str(case.partition)))
        spans = span_equals(gens, rep.basis)
        # Jacobian ranks only make sense at points where the forms vanish; a
        # failing generator is reported above instead of crashing this step.
        codims = [] if bad else sorted({jacobian_codim(gens, s) for s in fresh[:5]})
        cases.append({"partition": str(case.partition),
                      "file": case.filename,
                      "generator_count": len(gens),
                      "expected_count": case.generator_count,
                      "vanishing_failures": bad,
                      "span_matches_interpolation": spans,
                      "interpolated_dimension": rep.nullspace_dim,
                      "jacobian_codims": codims,
                      "expected_codim": case.expected_codim,
                      "recorded_variety_degree": case.variety_degree})
    ok = all(not c["vanishing_failures"] and c["span_matches_interpolation"]
             and c["jacobian_codims"] == [c["expected_codim"]]
             and c["generator_count"] == c["expected_count"] for c in cases)
    return {"seed": seed, "ok": ok, "cases": cases}
