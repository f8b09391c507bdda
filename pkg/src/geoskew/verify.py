"""Randomised property checks behind ``geoskew verify``.

Each check draws its own samples from a shared generator and returns a
``PropertyRecord`` holding the worst violation it saw.  Asserted checks
decide the exit status; exploratory ones are only reported.

Checks look up library functions through their modules at call time so
that a patched kernel is picked up (the test-suite relies on this).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import divergences as dv
from . import geodesics as geo
from . import measures as ms
from . import scalar

ALPHA_GRID = (-5.0, -2.0, -1.0, 0.0, 1.0, 3.0, 10.0)


@dataclass
class PropertyRecord:
    name: str
    passed: bool
    worst: float
    tol: float
    samples: int
    asserted: bool = True
    note: str = ""


@dataclass
class VerifyReport:
    seed: int
    records: list[PropertyRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records if r.asserted)

    def format_table(self) -> str:
        width = max(len(r.name) for r in self.records)
        lines = [f"{'property':<{width}}  status   worst        tol      samples"]
        for r in self.records:
            status = ("PASS" if r.passed else "FAIL") if r.asserted else "INFO"
            line = f"{r.name:<{width}}  {status:<7}  {r.worst:<11.4g}  {r.tol:<7.0e}  {r.samples}"
            if r.note:
                line += f"  {r.note}"
            lines.append(line)
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} (seed {self.seed})")
        return "\n".join(lines)


def _record(name, violations, tol, asserted=True, note="") -> PropertyRecord:
    v = np.asarray(violations, dtype=float).ravel()
    worst = float(np.max(v)) if v.size else 0.0
    return PropertyRecord(name, bool(worst <= tol), worst, tol, int(v.size), asserted, note)


def random_probvec(rng: np.random.Generator, n: int) -> np.ndarray:
    """Dirichlet-like draw with a small floor so every weight stays positive."""
    conc = rng.uniform(0.3, 3.0)
    raw = rng.gamma(conc, size=n) + 1e-9
    return raw / math.fsum(raw)


def random_pairs(rng, count, min_len=2, max_len=64):
    out = []
    for _ in range(count):
        n = int(rng.integers(min_len, max_len + 1))
        out.append((random_probvec(rng, n), random_probvec(rng, n)))
    return out


# --- scalar kernel -----------------------------------------------------------


def check_interpolation_bounds(rng, n):
    alphas = list(ALPHA_GRID) + [math.inf, -math.inf, 0.5, 7.3]
    v = []
    for _ in range(n):
        a, b = np.exp(rng.uniform(-30, 30, size=2))
        alpha = alphas[rng.integers(len(alphas))]
        m = scalar.f_interpolate(alpha, rng.uniform(), a, b)
        v.append(max(min(a, b) - m, m - max(a, b)))
    return _record("scalar.interpolation_bounds", v, 0.0)


def check_inverse_monotonicity(rng, n):
    v = []
    for _ in range(n):
        a, b = np.exp(rng.uniform(-5, 5, size=2))
        lam = rng.uniform(0.05, 0.95)
        ms_ = [scalar.f_interpolate(al, lam, a, b) for al in ALPHA_GRID]
        v.extend((ms_[i + 1] - ms_[i]) / max(a, b) for i in range(len(ms_) - 1))
    return _record("scalar.inverse_monotonicity", v, 1e-15)


def check_endpoint_recovery(rng, n):
    v = []
    for _ in range(n):
        a, b = np.exp(rng.uniform(-20, 20, size=2))
        for alpha in ALPHA_GRID + (math.inf, -math.inf):
            v.append(abs(scalar.f_interpolate(alpha, 0.0, a, b) - a))
            v.append(abs(scalar.f_interpolate(alpha, 1.0, a, b) - b))
    return _record("scalar.endpoint_recovery", v, 0.0)


def check_continuity_alpha_one(rng, n):
    v = []
    for _ in range(n):
        a, b = np.exp(rng.uniform(-10, 10, size=2))
        lam = rng.uniform()
        geo_mean = math.exp((1 - lam) * math.log(a) + lam * math.log(b))
        for alpha in (1 - 1e-7, 1 + 1e-7):
            v.append(abs(scalar.f_interpolate(alpha, lam, a, b) - geo_mean) / geo_mean)
    return _record("scalar.continuity_at_alpha_one", v, 1e-5)


def check_limit_consistency(rng, n):
    v = []
    for _ in range(n):
        a, b = rng.uniform(0.1, 10, size=2)
        for lam in (0.25, 0.5, 0.75):
            lo, hi = min(a, b), max(a, b)
            v.append(abs(scalar.f_interpolate(1e6, lam, a, b) - lo) / lo)
            v.append(abs(scalar.f_interpolate(-1e6, lam, a, b) - hi) / hi)
    return _record("scalar.limit_consistency", v, 1e-4)


def check_round_trip(rng, n):
    v = []
    for alpha in (-3.0, -1.0, 0.0, 0.5, 2.0, 3.0, 5.0):
        u = abs((1 - alpha) / 2)
        span = min(300.0, 300.0 / max(u, 1.0))
        x = 10.0 ** rng.uniform(-span, span, size=n)
        y = np.asarray(scalar.f_alpha_inv(alpha, scalar.f_alpha(alpha, x)))
        v.extend(np.abs(y - x) / np.spacing(x))
    return _record("scalar.round_trip_ulps", v, 4.0, note="alpha != 1; see README")


# --- measures ------------------------------------------------------------------


def check_probvec_invariants(rng, n):
    v = []
    for _ in range(n):
        raw = rng.uniform(1e-6, 100, size=int(rng.integers(1, 50)))
        p = ms.normalize(raw)
        v.append(max(abs(math.fsum(p.weights) - 1), -float(np.min(p.weights))))
    return _record("measures.probvec_invariants", v, 1e-9)


def check_tv_metric(rng, n):
    v = []
    for _ in range(n):
        k = int(rng.integers(2, 20))
        a, b, c = (random_probvec(rng, k) for _ in range(3))
        v.append(abs(ms.tv_distance(a, b) - ms.tv_distance(b, a)))
        v.append(ms.tv_distance(a, a))
        v.append(ms.tv_distance(a, c) - ms.tv_distance(a, b) - ms.tv_distance(b, c))
    return _record("measures.tv_metric", v, 1e-12)


def check_gaussian_normalization(rng, n):
    v = []
    for _ in range(max(1, n // 10)):
        mu, var = rng.uniform(-10, 10), rng.uniform(0.1, 10)
        v.append(abs(ms.gaussian_density(mu, var).total_mass() - 1))
    return _record("measures.gaussian_normalization", v, 1e-8)


# --- divergences -----------------------------------------------------------------


def check_identities(rng, n):
    """Closed-form special cases of the divergence family."""
    gs = dv.geodesical_skew
    recs = {k: [] for k in ("lambda_one_is_kl", "lambda_zero_is_zero", "alpha_one_is_scaled_kl",
                             "alpha_minus_one_is_skew", "sym_js", "sym_half_jeffreys", "sym_lambda_js")}
    for p, q in random_pairs(rng, n):
        alpha = float(rng.uniform(-5, 5))
        lam = float(rng.uniform())
        kl_pq = dv.kl(p, q)
        recs["lambda_one_is_kl"].append(abs(gs(alpha, 1.0, p, q) - kl_pq))
        recs["lambda_zero_is_zero"].append(abs(gs(alpha, 0.0, p, q)))
        recs["alpha_one_is_scaled_kl"].append(abs(gs(1.0, lam, p, q) - lam * kl_pq))
        recs["alpha_minus_one_is_skew"].append(abs(gs(-1.0, lam, p, q) - dv.skew(lam, p, q)))
        recs["sym_js"].append(abs(dv.symmetrized_geodesical_skew(-1.0, 0.5, p, q) - dv.js(p, q)))
        recs["sym_half_jeffreys"].append(
            abs(dv.symmetrized_geodesical_skew(alpha, 1.0, p, q) - 0.5 * dv.jeffreys(p, q)))
        lam_js = 0.5 * (np.sum(p * np.log(p / ((1 - lam) * p + lam * q)))
                        + np.sum(q * np.log(q / ((1 - lam) * q + lam * p))))
        recs["sym_lambda_js"].append(abs(dv.symmetrized_geodesical_skew(-1.0, lam, p, q) - lam_js))
    return [_record(f"divergences.{k}", v, 1e-12) for k, v in recs.items()]


def check_generic_kernel(rng, n):
    """The generic log-domain path agrees with the closed forms it bypasses."""
    v = []
    for p, q in random_pairs(rng, n):
        lam = float(rng.uniform(0.01, 0.99))
        v.append(abs(dv._geodesical_skew_generic(-1.0, lam, p, q) - dv.skew(lam, p, q)))
        v.append(abs(dv._geodesical_skew_generic(1.0 + 1e-9, lam, p, q) - lam * dv.kl(p, q)))
    return _record("divergences.generic_kernel_identities", v, 1e-12)


def check_ordering(rng, n):
    gs = dv.geodesical_skew
    mono, sandwich, nonneg, jsb = [], [], [], []
    for p, q in random_pairs(rng, n):
        lam = float(rng.uniform())
        vals = [gs(a, lam, p, q) for a in ALPHA_GRID]
        mono.extend(vals[i] - vals[i + 1] for i in range(len(vals) - 1))
        lo, hi = dv.divergence_lower_bound(p, q), dv.divergence_upper_bound(p, q)
        sandwich.extend(max(lo - x, x - hi) for x in vals)
        nonneg.extend(-x for a, x in zip(ALPHA_GRID, vals) if a >= -1)
        nonneg.append(-gs(rng.uniform(-1, 20), lam, p, q))
        jsb.append(dv.js(p, q) - math.log(2))
    return [
        _record("divergences.monotone_in_alpha", mono, 1e-10),
        _record("divergences.sandwich_bounds", sandwich, 1e-10),
        _record("divergences.nonnegative_alpha_ge_-1", nonneg, 1e-10),
        _record("divergences.js_at_most_ln2", jsb, 1e-12),
    ]


def check_limits(rng, n):
    v = []
    for p, q in random_pairs(rng, n):
        lam = float(rng.uniform(0.05, 0.95))
        v.append(abs(dv.geodesical_skew(1e6, lam, p, q) - dv.geodesical_skew(math.inf, lam, p, q)))
        v.append(abs(dv.geodesical_skew(-1e6, lam, p, q) - dv.geodesical_skew(-math.inf, lam, p, q)))
    return _record("divergences.limits_alpha_pm_inf", v, 1e-4)


def check_witnesses(rng, n):
    p, q = np.array([0.5, 0.5]), np.array([0.25, 0.75])
    asym, centro = [], []
    for alpha in ALPHA_GRID:
        asym.append(abs(dv.geodesical_skew(alpha, 1.0, p, q) - dv.geodesical_skew(alpha, 1.0, q, p)))
        centro.append(dv.geodesical_skew(alpha, 1.0, p, q) - dv.geodesical_skew(alpha, 0.0, p, q))
    # the property holds when the witness gap exceeds 1e-6
    return [
        _record("divergences.asymmetry_witness", [1e-6 - x for x in asym], 0.0),
        _record("divergences.non_centrosymmetry_witness", [1e-6 - x for x in centro], 0.0),
    ]


def check_symmetrized_symmetry(rng, n):
    v = []
    for p, q in random_pairs(rng, n):
        alpha, lam = float(rng.uniform(-5, 5)), float(rng.uniform())
        v.append(abs(dv.symmetrized_geodesical_skew(alpha, lam, p, q)
                     - dv.symmetrized_geodesical_skew(alpha, lam, q, p)))
    return _record("divergences.symmetrized_is_symmetric", v, 1e-14)


def check_strong_convexity(rng, n):
    v = []
    for _ in range(n):
        k = int(rng.integers(2, 32))
        p, q, p0, p1 = (random_probvec(rng, k) for _ in range(4))
        alpha, lam = float(rng.uniform(-5, 5)), float(rng.uniform(0.05, 1.0))
        r = np.exp(scalar.log_f_interpolate(alpha, lam, np.log(p), np.log(q)))
        t = float(rng.uniform(0.01, 0.99))
        pt = (1 - t) * p0 + t * p1
        gap = (1 - t) * dv._kl(p0, r) + t * dv._kl(p1, r) - dv._kl(pt, r)
        bound = 0.5 * t * (1 - t) * ms.tv_distance(p0, p1) ** 2
        v.append(bound - gap)
    return _record("divergences.strong_convexity_fixed_ref", v, 1e-10)


def check_continuity(rng, n):
    gs = dv.geodesical_skew
    v = []
    h, d = 1e-3, 1e-6
    for p, q in random_pairs(rng, max(1, n // 4)):
        alpha, lam = float(rng.uniform(-4, 6)), float(rng.uniform(0.1, 0.9))
        base = gs(alpha, lam, p, q)
        slope = abs(gs(alpha + h, lam, p, q) - base) / h + abs(gs(alpha, lam + h, p, q) - base) / h
        c = 10.0 * slope + 1e-6
        v.append(abs(gs(alpha + d, lam + d, p, q) - base) - c * 2 * d)
    return _record("divergences.continuity_smoke", v, 0.0)


def check_continuous_scaled_kl(rng, n):
    v = []
    for _ in range(3):
        mu1, mu2 = rng.uniform(-1, 1, size=2)
        v1, v2 = rng.uniform(0.3, 2.0, size=2)
        lam = float(rng.uniform())
        got = dv.geodesical_skew_continuous(
            1.0, lam, ms.gaussian_density(mu1, v1), ms.gaussian_density(mu2, v2))
        v.append(abs(got - lam * dv.gaussian_kl(mu1, v1, mu2, v2)))
    return _record("divergences.continuous_alpha_one_scaled_kl", v, 1e-8)


# --- geodesics -------------------------------------------------------------------


def check_geodesic_points(rng, n):
    ends, norm = [], []
    for p, q in random_pairs(rng, max(1, n // 2)):
        for alpha in ALPHA_GRID + (math.inf, -math.inf):
            r0 = geo.alpha_geodesic_point(alpha, 0.0, p, q).r.weights
            r1 = geo.alpha_geodesic_point(alpha, 1.0, p, q).r.weights
            ends.append(max(np.max(np.abs(r0 - p)), np.max(np.abs(r1 - q))))
            pt = geo.alpha_geodesic_point(alpha, float(rng.uniform()), p, q)
            norm.append(abs(math.fsum(pt.r.weights) - 1))
    return [
        _record("geodesics.endpoint_exactness", ends, 1e-12),
        _record("geodesics.normalization", norm, 1e-9),
    ]


def check_duality(rng, n):
    v = []
    for _ in range(n):
        m = np.exp(rng.uniform(-5, 5, size=int(rng.integers(1, 10))))
        alpha = float(rng.uniform(-5, 5))
        eta = geo.dual_representation(-alpha, m).eta
        theta = geo.alpha_representation(alpha, m).theta
        v.append(float(np.max(np.abs(eta - theta))))
    return _record("geodesics.duality_involution", v, 1e-12)


def check_expfamily(rng, n):
    consist, scaled = [], []
    lams = (0.0, 0.25, 0.5, 0.75, 1.0)
    fam = geo.gaussian_family()
    tp = geo.gaussian_natural(rng.uniform(-1, 1), rng.uniform(0.5, 2))
    tq = geo.gaussian_natural(rng.uniform(-1, 1), rng.uniform(0.5, 2))
    grid = geo.quadrature_grid(-15.0, 15.0)
    cases = [(fam, tp, tq, grid)]
    for _ in range(3):
        k = int(rng.integers(2, 12))
        cases.append((geo.categorical_family(k), rng.normal(size=k - 1) * 2,
                      rng.normal(size=k - 1) * 2, geo.categorical_grid(k)))
    for fam, tp, tq, grid in cases:
        p = geo.natural_geodesic_density(fam, tp, tq, 0.0, grid).weights
        q = geo.natural_geodesic_density(fam, tp, tq, 1.0, grid).weights
        for lam in lams:
            got = geo.natural_geodesic_density(fam, tp, tq, lam, grid).weights
            mixed = np.exp((1 - lam) * np.log(p) + lam * np.log(q))
            consist.append(float(np.max(np.abs(got - mixed / math.fsum(mixed)))))
            scaled.append(geo.verify_scaled_kl(fam, tp, tq, lam, grid).abs_diff)
    return [
        _record("geodesics.expfamily_geometric_interpolation", consist, 1e-8),
        _record("geodesics.expfamily_scaled_kl", scaled, 1e-8),
    ]


# --- exploratory -------------------------------------------------------------------


def explore_alpha3_identity(rng, n):
    """Compare D(3, lam) against skew + H(p) + H(q) and against the direct expansion."""
    claim, direct = [], []
    for p, q in random_pairs(rng, n):
        lam = float(rng.uniform(0.05, 0.95))
        d3 = dv.geodesical_skew(3.0, lam, p, q)
        rhs = dv.skew(lam, p, q) + ms.shannon_entropy(p) + ms.shannon_entropy(q)
        claim.append(abs(d3 - rhs))
        expansion = math.fsum(p * np.log((lam * p + (1 - lam) * q) / q))
        direct.append(abs(d3 - expansion))
    return [
        _record("explore.alpha3_entropy_identity_gap", claim, math.inf, asserted=False,
                note="discrepancy |D(3,l) - (skew + H(p) + H(q))|"),
        _record("divergences.alpha3_direct_expansion", direct, 1e-10),
    ]


def explore_subadditivity(rng, n):
    v, hits = [], 0
    for p, q in random_pairs(rng, n):
        a, b = rng.uniform(-1, 5, size=2)
        lam = float(rng.uniform())
        gap = (dv.geodesical_skew(a + b, lam, p, q)
               - dv.geodesical_skew(a, lam, p, q) - dv.geodesical_skew(b, lam, p, q))
        v.append(gap)
        hits += gap > 1e-12
    return _record("explore.subadditivity_alpha", v, math.inf, asserted=False,
                   note=f"violated in {hits}/{n} samples")


CHECKS = (
    check_interpolation_bounds,
    check_inverse_monotonicity,
    check_endpoint_recovery,
    check_continuity_alpha_one,
    check_limit_consistency,
    check_round_trip,
    check_probvec_invariants,
    check_tv_metric,
    check_gaussian_normalization,
    check_identities,
    check_generic_kernel,
    check_ordering,
    check_limits,
    check_witnesses,
    check_symmetrized_symmetry,
    check_strong_convexity,
    check_continuity,
    check_continuous_scaled_kl,
    check_geodesic_points,
    check_duality,
    check_expfamily,
    explore_alpha3_identity,
    explore_subadditivity,
)


def run_verify(seed: int = 0, samples: int = 100) -> VerifyReport:
    rng = np.random.default_rng(seed)
    report = VerifyReport(seed=seed)
    for check in CHECKS:
        try:
            out = check(rng, samples)
        except Exception as exc:  # a crashing check is a failed property
            out = PropertyRecord(check.__name__, False, math.nan, math.nan, 0,
                                 asserted=True, note=f"raised {exc!r}")
        report.records.extend(out if isinstance(out, list) else [out])
    return report
