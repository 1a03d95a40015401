# adversarial_balancing/experiment/runner.py

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from adversarial_balancing.benchgen.circular import gen_circular
from adversarial_balancing.benchgen.kang_schafer import gen_kang_schafer
from adversarial_balancing.classifiers.family import resolve_family
from adversarial_balancing.classifiers.selection import PredictionMode
from adversarial_balancing.core.dataset import Dataset, load_dataset_csv
from adversarial_balancing.core.problem import Estimand, build_balancing_problem, estimand_legs
from adversarial_balancing.core.weights import weighted_outcome_estimate
from adversarial_balancing.diagnostics.divergence import h_divergence
from adversarial_balancing.diagnostics.variability import effective_sample_size
from adversarial_balancing.experiment.config import ExperimentConfig
from adversarial_balancing.experiment.results import ExperimentResult, MethodResult, bootstrap_ci
from adversarial_balancing.registry.method import MethodRegistry
from adversarial_balancing.shared.base_method import BaseWeightingMethod
from adversarial_balancing.shared.logger import ns_logger
from adversarial_balancing.shared.settings import get_settings

logger = ns_logger("Experiment")

# more than this share of failed replications marks a (method, n) row failed
FAILURE_SHARE = 0.5


@dataclass
class MethodOutcome:
    estimate: float | None = None
    h_divergence: float | None = None
    ess: float | None = None
    error: str | None = None


# ===========================================================
# ONE ESTIMATE
# ===========================================================
def estimate_with(
    method: BaseWeightingMethod,
    ds: Dataset,
    estimand: Estimand,
    seed: int = 0,
    diagnostic_family: str = "lr",
    mode: PredictionMode | None = None,
) -> MethodOutcome:
    """
    Weight every balancing leg of the estimand with ``method`` and combine the
    signed weighted outcome means. Diagnostics average over legs and use
    ``mode`` for the discriminator predictions (train-set when None).
    """
    family = resolve_family(diagnostic_family)
    estimate = 0.0
    divergences, sizes = [], []
    for treatment_value, sign in estimand_legs(estimand, ds):
        w = method.compute_weights(ds, estimand, treatment_value, seed=seed)
        estimate += sign * weighted_outcome_estimate(w, ds.outcome[ds.arm(treatment_value)])
        prob = build_balancing_problem(ds, estimand, treatment_value)
        divergences.append(h_divergence(prob, w, family, mode=mode, seed=seed))
        sizes.append(effective_sample_size(w))
    if estimand.kind == "att":
        treated = ds.outcome[ds.arm(estimand.reference_treatment)]
        estimate += float(np.mean(treated))
    return MethodOutcome(estimate=float(estimate), h_divergence=float(np.mean(divergences)), ess=float(np.mean(sizes)))


# ===========================================================
# REPLICATIONS
# ===========================================================
def replication_dataset(cfg: ExperimentConfig, n: int, replication: int) -> Dataset:
    seed = cfg.seed + replication
    if cfg.benchmark == "kang_schafer":
        return gen_kang_schafer(n, seed, transformed=cfg.transformed)
    if cfg.benchmark == "circular":
        return gen_circular(n, seed)
    return load_dataset_csv(cfg.csv_path, cfg.csv_schema())


def run_replication(cfg: ExperimentConfig, task: tuple[int, int]) -> list[MethodOutcome]:
    n, replication = task
    ds = replication_dataset(cfg, n, replication)
    estimand = cfg.resolved_estimand()
    seed = cfg.seed + replication
    mode = PredictionMode.kfold(cfg.kfold) if cfg.kfold else None
    outcomes = []
    for spec in cfg.methods:
        try:
            method = MethodRegistry.create(spec, **cfg.method_options())
            outcomes.append(estimate_with(method, ds, estimand, seed, cfg.diagnostic_family, mode))
        except Exception as e:
            logger.warning(f"{spec} failed on n={n} replication {replication}: {e}")
            outcomes.append(MethodOutcome(error=f"{type(e).__name__}: {e}"))
    return outcomes


def _tasks(cfg: ExperimentConfig) -> tuple[list[int], list[tuple[int, int]]]:
    if cfg.benchmark == "csv":
        sizes = [load_dataset_csv(cfg.csv_path, cfg.csv_schema()).n_rows]
    else:
        sizes = sorted(set(cfg.sizes))
    return sizes, [(n, r) for n in sizes for r in range(cfg.replications)]


def _mean(values: list[float]) -> float | None:
    return float(np.mean(values)) if values else None


def summarize(
    cfg: ExperimentConfig,
    method_index: int,
    n: int,
    outcomes: list[MethodOutcome],
    truth: float | None,
) -> MethodResult:
    spec = cfg.methods[method_index]
    ok = [o for o in outcomes if o.error is None]
    n_failures = len(outcomes) - len(ok)
    row = MethodResult(
        method=spec,
        n=n,
        n_failures=n_failures,
        failed=n_failures > FAILURE_SHARE * len(outcomes),
        estimates=[o.estimate for o in outcomes],
        errors=[o.error for o in outcomes],
        mean_h_divergence=_mean([o.h_divergence for o in ok]),
        mean_ess=_mean([o.ess for o in ok]),
    )
    if not ok:
        return row

    values = np.array([o.estimate for o in ok])
    if truth is not None:
        values = values - truth
        row.bias = float(values.mean())
        row.rmse = float(np.sqrt(np.mean(values**2)))
    if values.size == 1:
        row.ci_lo = row.ci_hi = float(values[0])
    else:
        ci_seed = cfg.seed + 1_000_003 * (method_index + 1) + n
        row.ci_lo, row.ci_hi = bootstrap_ci(values, cfg.bootstrap_samples, cfg.level, ci_seed)
    return row


def run_experiment(cfg: ExperimentConfig, workers: int | None = None) -> ExperimentResult:
    """
    Every (size, replication) pair is an independent task seeded with
    ``cfg.seed + replication``; results are identical for any worker count.
    """
    workers = workers or cfg.workers or get_settings().resolved_workers()
    sizes, tasks = _tasks(cfg)
    logger.info(
        f"Running {cfg.benchmark}: {len(cfg.methods)} methods x sizes {sizes} x "
        f"{cfg.replications} replications on {workers} worker(s)"
    )

    job = partial(run_replication, cfg)
    if workers == 1:
        per_task = [job(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_task = list(pool.map(job, tasks))

    truth = cfg.resolved_truth()
    rows = []
    for method_index, spec in enumerate(cfg.methods):
        for n in sizes:
            outcomes = [per_task[i][method_index] for i, (size, _) in enumerate(tasks) if size == n]
            row = summarize(cfg, method_index, n, outcomes, truth)
            if row.failed:
                logger.error(f"{spec} failed at n={n} ({row.n_failures}/{len(outcomes)} replications)")
            else:
                logger.info(f"{spec} n={n} bias={row.bias} rmse={row.rmse}")
            rows.append(row)

    return ExperimentResult(
        benchmark=cfg.benchmark,
        estimand=cfg.resolved_estimand().label(),
        truth=truth,
        rows=rows,
    )
