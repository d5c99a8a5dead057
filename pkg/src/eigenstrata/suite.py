"""The acceptance suite: every headline claim, checked end to end.

Each criterion produces PASS, FAIL, or WARN plus a machine-readable failure
list.  WARN is reserved for the repeated-part discrepancies that are
reported by design (ordered-count formulas versus distinct-subspace
measurements) — those never fail the run.  Genuine mismatches between a
closed-form claim and an independent oracle are reported as FAIL even when
they are expected to fail: the suite measures, it does not editorialize.

Nothing here reads the clock into a report: a fixed seed produces
byte-identical output, which criterion 12 checks on live payloads.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, sqrt

import numpy as np

from .arrangement import (arrangement_degree, derksen_hilbert,
                          hilbert_comparison, paper_hilbert)
from .distance import (FloatSymmetric, critical_points, edd_report, jacobi_eigh,
                       nearest_symmetric)
from .golden import GOLDEN_CASES, load_golden
from .interpolation import (jacobian_codim, parametrization_rank,
                            vanishing_forms)
from .invariants import chevalley_check
from .partitions import (Partition, count_distinct_subspaces, dimension,
                         is_coarsening, partitions_of)
from .polynomials import Polynomial
from .reports import (dimension_payload, edd_payload, hilbert_payload,
                      interpolation_payload, invariants_payload,
                      samples_payload, verify_payload)
from .sampling import (SkewParams, SpectrumSpec, cayley, membership_exact,
                       multiplicity_signature, random_samples, sample)
from .seeding import derive_seed, distinct_fractions, random_fraction, rng_for
from .unipoly import matrix_discriminant_symbolic

# WARN-only rows skip oracle ranks wider than this; asserted rows never hit it.
WARN_ORACLE_COLUMN_CAP = 2100

CRITERIA = {
    1: "dimension formula vs parametrization rank",
    2: "interpolation dimensions",
    3: "shipped generators: vanishing and span",
    4: "Jacobian codimension at generic samples",
    5: "sum-of-squares identity for the 3x3 discriminant",
    6: "Hilbert polynomial vs oracle",
    7: "arrangement degree",
    8: "Euclidean distance degree counts",
    9: "nearest-matrix distance transfer",
    10: "subdiscriminant membership classification",
    11: "graded invariant dimensions agree",
    12: "seeded determinism",
}


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    status: str                  # PASS | FAIL | WARN
    details: tuple = ()
    failures: tuple = ()
    warnings: tuple = ()

    def to_json(self):
        return {"criterion": self.number, "name": self.name, "status": self.status,
                "details": list(self.details),
                "failures": [dict(f) for f in self.failures],
                "warnings": [dict(w) for w in self.warnings]}


@dataclass
class SuiteReport:
    seed: int
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "FAIL" for r in self.results)

    def failures(self) -> list:
        out = []
        for r in self.results:
            for f in r.failures:
                rec = {"criterion": r.number, "name": r.name}
                rec.update(f)
                out.append(rec)
        return out

    def to_json(self):
        return {"seed": self.seed,
                "ok": self.ok,
                "results": [r.to_json() for r in self.results],
                "failures": self.failures()}

    def to_text(self) -> str:
        lines = [f"acceptance suite  seed={self.seed}"]
        for r in self.results:
            lines.append(f"[{r.status:4}] {r.number:>2}. {r.name}")
            for d in r.details:
                lines.append(f"        {d}")
        lines.append(f"result: {'ok' if self.ok else 'FAILURES PRESENT'}")
        return "\n".join(lines)


def _result(number, status, details=(), failures=(), warnings=()):
    return CriterionResult(number=number, name=CRITERIA[number], status=status,
                           details=tuple(details), failures=tuple(failures),
                           warnings=tuple(warnings))


def _status(failures, warnings):
    if failures:
        return "FAIL"
    if warnings:
        return "WARN"
    return "PASS"


# --- criterion 1 ------------------------------------------------------------


def criterion_dimension(seed: int) -> CriterionResult:
    details, failures = [], []
    start = time.monotonic()
    count = 0
    for n in range(1, 6):
        for lam in partitions_of(n):
            count += 1
            formula = dimension(lam)
            rank = parametrization_rank(lam, derive_seed(seed, "dim", str(lam)))
            if rank != formula:
                failures.append({"partition": str(lam), "formula": formula,
                                 "rank": rank})
    elapsed = time.monotonic() - start
    if elapsed >= 60:
        failures.append({"budget": "runtime exceeded 60 s"})
    details.append(f"{count} partitions of n <= 5 checked; within budget: "
                   f"{'yes' if elapsed < 60 else 'NO'}")
    return _result(1, _status(failures, ()), details, failures)


# --- criterion 2 ------------------------------------------------------------


def criterion_interpolation_counts(seed: int) -> CriterionResult:
    details, failures = [], []
    expected = [(Partition([2, 1]), 3, 7), (Partition([3, 1]), 2, 10),
                (Partition([2, 2]), 2, 9)]
    for lam, d, want in expected:
        start = time.monotonic()
        rep = vanishing_forms(lam, d, derive_seed(seed, "counts", str(lam), d),
                              mode="exact")
        elapsed = time.monotonic() - start
        ok = rep.nullspace_dim == want and elapsed < 30
        details.append(f"({lam}) degree {d}: dimension {rep.nullspace_dim} "
                       f"(expected {want}), exact, within budget: "
                       f"{'yes' if elapsed < 30 else 'NO'}")
        if not ok:
            failures.append({"partition": str(lam), "degree": d,
                             "expected": want, "actual": rep.nullspace_dim,
                             "within_budget": elapsed < 30})
    lam = Partition([2, 1, 1])
    start = time.monotonic()
    dims = {}
    for d in range(1, 6):
        rep = vanishing_forms(lam, d, derive_seed(seed, "counts", str(lam), d),
                              mode="modular", prime_count=3)
        dims[d] = rep.nullspace_dim
    elapsed = time.monotonic() - start
    ok = all(v == 0 for v in dims.values()) and elapsed < 600
    details.append(f"({lam}) degrees 1..5: dimensions "
                   f"{[dims[d] for d in range(1, 6)]} (expected all 0), modular, "
                   f"within budget: {'yes' if elapsed < 600 else 'NO'}")
    if not ok:
        failures.append({"partition": str(lam), "dimensions": dims,
                         "within_budget": elapsed < 600})
    return _result(2, _status(failures, ()), details, failures)


# --- criteria 3 and 4 -------------------------------------------------------


def criterion_golden(seed: int, golden_dir=None) -> CriterionResult:
    details, failures = [], []
    payload = verify_payload(derive_seed(seed, "golden"), golden_dir)
    for case in payload["cases"]:
        for bad in case["vanishing_failures"]:
            failures.append({"partition": case["partition"],
                             "file": case["file"],
                             "generator_index": bad["generator_index"],
                             "generator": bad["generator"],
                             "value": bad["value"],
                             "sample": bad["sample"]})
        if case["generator_count"] != case["expected_count"]:
            failures.append({"partition": case["partition"], "file": case["file"],
                             "expected_count": case["expected_count"],
                             "actual_count": case["generator_count"]})
        if not case["span_matches_interpolation"]:
            failures.append({"partition": case["partition"],
                             "span_matches_interpolation": False})
        details.append(f"({case['partition']}) {case['generator_count']} generators: "
                       f"vanishing {'ok' if not case['vanishing_failures'] else 'FAILED'}, "
                       f"span {'ok' if case['span_matches_interpolation'] else 'FAILED'}")
    return _result(3, _status(failures, ()), details, failures)


def criterion_jacobian(seed: int, golden_dir=None) -> CriterionResult:
    details, failures = [], []
    for case in GOLDEN_CASES:
        gens = load_golden(case, golden_dir)
        samples = random_samples(case.partition, 5,
                                 derive_seed(seed, "jac", str(case.partition)))
        codims = sorted({jacobian_codim(gens, s) for s in samples})
        details.append(f"({case.partition}) Jacobian codimension at 5 samples: "
                       f"{codims} (expected [{case.expected_codim}])")
        if codims != [case.expected_codim]:
            failures.append({"partition": str(case.partition),
                             "expected": case.expected_codim, "actual": codims})
    return _result(4, _status(failures, ()), details, failures)


# --- criterion 5 ------------------------------------------------------------


def criterion_sum_of_squares(seed: int, golden_dir=None) -> CriterionResult:
    details, failures = [], []
    gens = load_golden(GOLDEN_CASES[0], golden_dir)
    disc = matrix_discriminant_symbolic(3)
    sos = Polynomial.zero(disc.nvars)
    for g in gens:
        sos = sos + g * g
    lead_exp, lead_coeff = disc.leading()
    scalar = sos.terms.get(lead_exp, Fraction(0)) / lead_coeff
    identical = sos == disc * scalar
    details.append(f"scalar from leading coefficients: {scalar} "
                   f"(scalar equals 1: {'yes' if scalar == 1 else 'no'})")
    details.append(f"polynomial identity sum-of-squares == scalar * discriminant: "
                   f"{'holds' if identical else 'FAILS'}")
    if not identical:
        diff = sos - disc * scalar
        rng = rng_for(derive_seed(seed, "sos-probe"), "pts")
        ratios = []
        for _ in range(3):
            p = [random_fraction(rng, 7) for _ in range(disc.nvars)]
            dv, sv = disc.evaluate(p), sos.evaluate(p)
            if dv:
                ratios.append(str(sv / dv))
        details.append(f"difference has {len(diff.terms)} terms; pointwise ratios "
                       f"vary: {ratios}")
        failures.append({"identity": "sum of squared generators vs scalar * discriminant",
                         "scalar": str(scalar),
                         "difference_terms": len(diff.terms),
                         "pointwise_ratios": ratios,
                         "diagnosis": "no scalar (or per-square weighting) reproduces "
                                      "the discriminant from the shipped squares; the "
                                      "discriminant does lie in the span of pairwise "
                                      "products of the generators"})
    return _result(5, _status(failures, ()), details, failures)


# --- criteria 6 and 7 -------------------------------------------------------


def _hilbert_cases(max_n: int = 6):
    for n in range(2, max_n + 1):
        for lam in partitions_of(n):
            yield lam


def criterion_hilbert(seed: int, cache: dict) -> CriterionResult:
    details, failures, warnings = [], [], []
    for lam in _hilbert_cases():
        n, m = lam.n, lam.m
        asserted = lam.has_distinct_parts() and m < n
        if m == n:
            warnings.append({"partition": str(lam),
                             "note": "arrangement is the ambient space; the "
                                     "closed form needs positive codimension"})
            continue
        if not asserted:
            cap_cols = comb(n + (n + 3) - 1, n + 3)
            if cap_cols > WARN_ORACLE_COLUMN_CAP:
                warnings.append({"partition": str(lam),
                                 "note": f"oracle skipped ({cap_cols} monomial "
                                         f"columns above WARN cap)"})
                continue
        rows = hilbert_comparison(lam, range(n, n + 4),
                                  derive_seed(seed, "hilbert"), cache)
        formula_derksen = derksen_hilbert([n - m] * count_distinct_subspaces(lam), n)
        formula_paper = paper_hilbert(lam)
        polys_equal = formula_paper.poly == formula_derksen.poly
        degree_ok = formula_derksen.degree() == m - 1
        row_summary = "; ".join(
            f"t={r.t}: paper {r.paper_value}, distinct {r.derksen_value}, "
            f"oracle {r.oracle_value}" for r in rows)
        if asserted:
            bad = [r for r in rows if not r.matches()]
            if bad or not polys_equal or not degree_ok:
                failures.append({"partition": str(lam),
                                 "formulas_agree": polys_equal,
                                 "degree_is_blocks_minus_one": degree_ok,
                                 "rows": [r.to_json() for r in rows]})
                details.append(f"({lam}) MISMATCH: {row_summary}")
            else:
                details.append(f"({lam}) ok: {row_summary}")
        else:
            agree = all(r.matches() for r in rows)
            warnings.append({"partition": str(lam),
                             "paper_formula": formula_paper.to_text(),
                             "distinct_subspace_formula": formula_derksen.to_text(),
                             "oracle_rows": [r.to_json() for r in rows],
                             "agrees": agree})
            details.append(f"({lam}) WARN (repeated parts): {row_summary}")
    return _result(6, _status(failures, warnings), details, failures, warnings)


def criterion_degree(seed: int, cache: dict) -> CriterionResult:
    details, failures, warnings = [], [], []
    for lam in _hilbert_cases():
        n, m = lam.n, lam.m
        if m < 2:
            continue
        if m == n:
            warnings.append({"partition": str(lam),
                             "note": "ambient space; no proper arrangement degree"})
            continue
        asserted = lam.has_distinct_parts()
        values = {t: v for (p, t), v in cache.items()
                  if p == str(lam) and v is not None}
        cap = None if asserted else WARN_ORACLE_COLUMN_CAP
        kwargs = {} if cap is None else {"max_columns": cap}
        rep = arrangement_degree(lam, derive_seed(seed, "hilbert"), values, **kwargs)
        for t, v in rep.oracle_values.items():
            cache[(str(lam), t)] = v
        line = (f"({lam}) closed form {rep.paper_degree}, geometric "
                f"{rep.geometric_degree}, validated: {rep.validated}")
        if asserted:
            if rep.geometric_degree != rep.paper_degree or not rep.validated:
                failures.append(rep.to_json())
                details.append(line + "  MISMATCH")
            else:
                details.append(line)
        else:
            warnings.append(rep.to_json())
            details.append(line + "  (repeated parts: reported, not asserted)")
    return _result(7, _status(failures, warnings), details, failures, warnings)


# --- criterion 8 ------------------------------------------------------------


def criterion_edd(seed: int) -> CriterionResult:
    details, failures, warnings = [], [], []
    for lam in _hilbert_cases():
        rep = edd_report(lam, derive_seed(seed, "edd", str(lam)))
        triple = (rep.paper_edd, rep.subspace_count, rep.real_critical_count)
        if lam.has_distinct_parts():
            if len(set(triple)) != 1:
                failures.append(rep.to_json())
                details.append(f"({lam}) triple {triple} MISMATCH")
            else:
                details.append(f"({lam}) triple {triple}")
        else:
            warnings.append(rep.to_json())
            details.append(f"({lam}) triple {triple} (repeated parts: reported)")
    # stability and exact orthogonality of the critical points
    unstable, nonortho = [], []
    for n in range(2, 7):
        for lam in partitions_of(n):
            expected = count_distinct_subspaces(lam)
            for k in range(20):
                rng = rng_for(derive_seed(seed, "edd-stab"), str(lam), k)
                u = distinct_fractions(rng, n, 30)
                pts = critical_points(u, lam)
                if len({cp.point for cp in pts}) != expected:
                    unstable.append({"partition": str(lam), "trial": k})
                for cp in pts:
                    for block in cp.subspace.blocks:
                        resid = sum(u[i - 1] - cp.point[i - 1] for i in block)
                        if resid != 0:
                            nonortho.append({"partition": str(lam), "trial": k,
                                             "block": list(block)})
    if unstable:
        failures.append({"count_stability_failures": unstable[:5]})
    if nonortho:
        failures.append({"orthogonality_failures": nonortho[:5]})
    details.append(f"critical point counts stable over 20 data vectors per "
                   f"partition (n <= 6): {'yes' if not unstable else 'NO'}; "
                   f"orthogonality residuals exactly zero: "
                   f"{'yes' if not nonortho else 'NO'}")
    return _result(8, _status(failures, warnings), details, failures, warnings)


# --- criterion 9 ------------------------------------------------------------


def _random_float_symmetric(n: int, rng) -> FloatSymmetric:
    upper = [rng.gauss(0.0, 2.0) for _ in range(n * (n + 1) // 2)]
    return FloatSymmetric(n, tuple(upper))


def criterion_nearest(seed: int) -> CriterionResult:
    details, failures = [], []
    transfer_checked = perturb_checked = 0
    for idx in range(20):
        n = 2 + idx % 4               # 2..5, five of each
        rng = rng_for(derive_seed(seed, "nearest"), idx)
        u = _random_float_symmetric(n, rng)
        w, v = jacobi_eigh(u.to_array())
        exact_w = [Fraction(x) for x in w]
        for lam in partitions_of(n):
            rep = nearest_symmetric(u, lam)
            best = min(cp.squared_distance
                       for cp in critical_points(exact_w, lam))
            transfer_checked += 1
            scale = max(1.0, float(best))
            if abs(rep.squared_distance - float(best)) > 1e-9 * scale:
                failures.append({"matrix_index": idx, "partition": str(lam),
                                 "nearest_sq": rep.squared_distance,
                                 "diagonal_sq": float(best)})
            # local optimality: on-stratum perturbations never improve
            base = sqrt(max(0.0, rep.squared_distance))
            d_new = np.array(rep.eigenvalues)
            for block, mean in zip(rep.grouping, rep.block_means):
                for i in block:
                    d_new[i - 1] = mean
            ua = u.to_array()
            for p_idx in range(20):
                prng = rng_for(derive_seed(seed, "perturb"), idx, str(lam), p_idx)
                skew = SkewParams(n, tuple(
                    Fraction(prng.randint(-10, 10), 2000) for _ in range(comb(n, 2))))
                qf = np.array([[float(x) for x in row]
                               for row in cayley(skew).row_lists()])
                rotated = v @ qf
                candidate = rotated @ np.diag(d_new) @ rotated.T
                dist = float(np.linalg.norm(candidate - ua))
                perturb_checked += 1
                if dist < base - 1e-9:
                    failures.append({"matrix_index": idx, "partition": str(lam),
                                     "perturbation": p_idx,
                                     "distance": dist, "optimal": base})
    details.append(f"{transfer_checked} transfer comparisons at 1e-9 relative; "
                   f"{perturb_checked} on-stratum perturbations checked")
    return _result(9, _status(failures, ()), details, failures)


# --- criterion 10 -----------------------------------------------------------


def criterion_membership(seed: int) -> CriterionResult:
    details, failures = [], []
    checked = 0
    idx = 0
    while checked < 100:
        n = 2 + idx % 4
        for lam in partitions_of(n):
            if checked >= 100:
                break
            rng = rng_for(derive_seed(seed, "member"), str(lam), idx)
            eigenvalues = distinct_fractions(rng, lam.m, 8)
            skew = SkewParams(n, tuple(random_fraction(rng, 8)
                                       for _ in range(comb(n, 2))))
            point = sample(SpectrumSpec(lam, tuple(eigenvalues)), skew)
            signature = multiplicity_signature(point.matrix)
            if signature != lam:
                failures.append({"partition": str(lam),
                                 "classified": str(signature)})
            for other in partitions_of(n):
                want = is_coarsening(lam, other)
                got = membership_exact(point.matrix, other)
                if want != got:
                    failures.append({"partition": str(lam), "tested_against": str(other),
                                     "expected": want, "actual": got})
            checked += 1
        idx += 1
    details.append(f"{checked} constructed-spectrum matrices classified exactly; "
                   f"errors: {len(failures)}")
    return _result(10, _status(failures, ()), details, failures)


# --- criterion 11 -----------------------------------------------------------


def criterion_invariants(seed: int) -> CriterionResult:
    details, failures = [], []
    for n in range(1, 5):
        for lam in partitions_of(n):
            table = chevalley_check(lam, 6, derive_seed(seed, "chev", str(lam)))
            if not table.all_match():
                failures.append(table.to_json())
                details.append(f"({lam}) MISMATCH")
    table21 = chevalley_check(Partition([2, 1]), 6, derive_seed(seed, "chev", "2,1"))
    row6 = table21.rows[5]
    details.append(f"all partitions of n <= 4, degrees 1..6 compared; "
                   f"(2,1) degree-6 row: ({row6.dim_symmetric}, {row6.dim_traces})")
    if (row6.dim_symmetric, row6.dim_traces) != (1, 1):
        failures.append({"partition": "2,1", "degree": 6,
                         "expected": [1, 1],
                         "actual": [row6.dim_symmetric, row6.dim_traces]})
    return _result(11, _status(failures, ()), details, failures)


# --- criterion 12 -----------------------------------------------------------


def criterion_determinism(seed: int) -> CriterionResult:
    details, failures = [], []

    def payload_bytes(fn, *args, **kwargs):
        return json.dumps(fn(*args, **kwargs), sort_keys=True).encode()

    probes = [
        ("dimension", lambda: payload_bytes(dimension_payload, Partition([2, 1]), seed)),
        ("sample", lambda: payload_bytes(samples_payload, Partition([2, 1]), 3, seed, 10)),
        ("interpolate", lambda: payload_bytes(interpolation_payload,
                                              Partition([2, 1]), 3, seed, "exact", 10, 3)),
        ("hilbert", lambda: payload_bytes(hilbert_payload, Partition([2, 1]),
                                          range(3, 6), seed)),
        ("edd", lambda: payload_bytes(edd_payload, Partition([2, 2]), seed)),
        ("invariants", lambda: payload_bytes(invariants_payload, Partition([2, 1]),
                                             4, seed)),
    ]
    for name, thunk in probes:
        first, second = thunk(), thunk()
        if first != second:
            failures.append({"command": name, "note": "payload differs between runs"})
    details.append(f"{len(probes)} command payloads rendered twice: "
                   f"{'byte-identical' if not failures else 'DIFFER'}")
    details.append("single-threaded execution; per-index seed derivation makes "
                   "results schedule-independent by construction")
    return _result(12, _status(failures, ()), details, failures)


# --- driver -----------------------------------------------------------------


def run_suite(seed: int, only=None, golden_dir=None) -> SuiteReport:
    cache: dict = {}
    report = SuiteReport(seed=seed)
    steps = {
        1: lambda: criterion_dimension(seed),
        2: lambda: criterion_interpolation_counts(seed),
        3: lambda: criterion_golden(seed, golden_dir),
        4: lambda: criterion_jacobian(seed, golden_dir),
        5: lambda: criterion_sum_of_squares(seed, golden_dir),
        6: lambda: criterion_hilbert(seed, cache),
        7: lambda: criterion_degree(seed, cache),
        8: lambda: criterion_edd(seed),
        9: lambda: criterion_nearest(seed),
        10: lambda: criterion_membership(seed),
        11: lambda: criterion_invariants(seed),
        12: lambda: criterion_determinism(seed),
    }
    selected = sorted(only) if only else sorted(steps)
    for number in selected:
        report.results.append(steps[number]())
    return report
