"""Seeded verification campaigns.

Trial ``i`` of a campaign with seed ``s`` draws from ``trial_rng(s, i, stream)``
only, so reports do not depend on trial order or on how many worker
processes run them.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from hadring.conjecture import (
    diagram_check,
    kernel_power_nilpotency,
    perturbation_check,
    random_block_matrix,
    random_kernel_block_matrix,
    verify_conjecture,
)
from hadring.group_algebra import GroupAlgebraElement, canonical_ideal_product, ga_ideal_product
from hadring.rings import RingSpec, ring_make, trial_rng

# independent random streams inside one trial
STREAM_BLOCK, STREAM_KERNEL, STREAM_PERTURB, STREAM_IDEAL = range(4)

CHECK_ORDER = (
    "conjecture",
    "cayley_hamilton",
    "coefficients",
    "coefficient_squares",
    "scalar_vs_lift",
    "q_in_kernel",
    "frobenius_chain",
    "diagram_lambda",
    "diagram_det",
    "perturbation",
    "kernel_nilpotency",
    "ideal_nilpotency",
)


@dataclass(frozen=True)
class CampaignConfig:
    ring: str
    k: int
    s: int
    trials: int
    seed: int
    output: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.k < 0:
            raise ValueError("k must be >= 0")
        if self.s < 1:
            raise ValueError("s must be >= 1")
        RingSpec.parse(self.ring)


def run_trial(ring: str, k: int, s: int, seed: int, trial: int) -> dict:
    """All checks for one trial; returns {"checks": {...}, "evidence": {...}, "index": n}."""
    base = ring_make(ring)
    checks = {}
    evidence = {}

    M = random_block_matrix(base, k, s, trial_rng(seed, trial, STREAM_BLOCK))
    report = verify_conjecture(M)
    checks.update(report.checks)
    for name in report.failures():
        residual = report.residuals.get(name)
        evidence[name] = {
            "matrix": M.dump(),
            "residual": residual.dump() if residual is not None else None,
        }

    diagram = diagram_check(M)
    checks["diagram_lambda"] = diagram.lambda_square
    checks["diagram_det"] = diagram.det_square
    if not diagram.ok:
        evidence["diagram"] = {"matrix": M.dump()}

    Mt = random_kernel_block_matrix(base, k, s, trial_rng(seed, trial, STREAM_PERTURB))
    checks["perturbation"] = perturbation_check(M, Mt)
    if not checks["perturbation"]:
        evidence["perturbation"] = {"matrix": M.dump(), "perturbation": Mt.dump()}

    K = random_kernel_block_matrix(base, k, s, trial_rng(seed, trial, STREAM_KERNEL))
    nil = kernel_power_nilpotency(K)
    checks["kernel_nilpotency"] = nil.ok
    if not nil.ok:
        evidence["kernel_nilpotency"] = {"matrix": K.dump(), **asdict(nil)}

    rng = trial_rng(seed, trial, STREAM_IDEAL)
    factors = [GroupAlgebraElement.random_ideal(base, k, rng) for _ in range(k + 1)]
    product = ga_ideal_product(factors, base, k)
    checks["ideal_nilpotency"] = product.is_zero()
    if not product.is_zero():
        evidence["ideal_nilpotency"] = {"factors": [f.dump() for f in factors], "product": product.dump()}

    return {"checks": checks, "evidence": evidence, "index": nil.index}


def _run_trial_args(args):
    return run_trial(*args)


def run_campaign(config: CampaignConfig, jobs: int = 1) -> dict:
    """Run ``config.trials`` seeded trials and aggregate a JSON-ready report."""
    base = ring_make(config.ring)
    args = [(config.ring, config.k, config.s, config.seed, i) for i in range(config.trials)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_trial_args, args, chunksize=max(1, len(args) // (4 * jobs))))
    else:
        results = [run_trial(*a) for a in args]

    totals = {name: {"passed": 0, "failed": 0} for name in CHECK_ORDER}
    violations = []
    indices = Counter()
    for trial, res in enumerate(results):
        for name in CHECK_ORDER:
            good = res["checks"][name]
            totals[name]["passed" if good else "failed"] += 1
        for name, ev in sorted(res["evidence"].items()):
            violations.append({"trial": trial, "check": name, "evidence": ev})
        indices[str(res["index"])] += 1

    canonical = canonical_ideal_product(base, config.k)
    canonical_ok = all(c == base.one for c in canonical.coeffs)
    totals["ideal_canonical"] = {"passed": int(canonical_ok), "failed": int(not canonical_ok)}
    if not canonical_ok:
        violations.append({"trial": None, "check": "ideal_canonical", "evidence": {"product": canonical.dump()}})

    return {
        "ring": base.spec,
        "k": config.k,
        "s": config.s,
        "trials": config.trials,
        "seed": config.seed,
        "checks": totals,
        "kernel_nilpotency_index": dict(sorted(indices.items())),
        "violations": violations,
        "ok": not violations,
    }


def run_nilpotency_campaign(ring: str, k: int, samples: int, seed: int) -> dict:
    """Augmentation ideal of R[F2^k]: (k+1)-fold products vanish, a k-fold one does not."""
    base = ring_make(ring)
    zero = 0
    failures = []
    for i in range(samples):
        rng = trial_rng(seed, i, STREAM_IDEAL)
        factors = [GroupAlgebraElement.random_ideal(base, k, rng) for _ in range(k + 1)]
        product = ga_ideal_product(factors, base, k)
        if product.is_zero():
            zero += 1
        else:
            failures.append({"sample": i, "factors": [f.dump() for f in factors], "product": product.dump()})
    canonical = canonical_ideal_product(base, k)
    canonical_ok = all(c == base.one for c in canonical.coeffs) and not canonical.is_zero()
    return {
        "ring": base.spec,
        "k": k,
        "samples": samples,
        "seed": seed,
        "zero_products": zero,
        "canonical_product": canonical.dump(),
        "canonical_is_sum_of_group": canonical_ok,
        "nilpotency_degree": k + 1 if (zero == samples and canonical_ok) else None,
        "violations": failures,
        "ok": zero == samples and canonical_ok,
    }
