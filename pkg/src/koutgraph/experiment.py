"""Seeded Monte-Carlo sweeps over (mu, k, k2) estimating the probabilities
of {min degree >= k} and {k-vertex-connected}.

Reproducibility contract: the stream for trial t of sweep point
(mu index i, k index j, k2) is seeded with

    derive_seed(master_seed, i, j, k2, t)

(see ``rng.derive_seed``), so results are identical across machines, reruns
and any parallelism level. Both indicators are evaluated on the same graph
per trial, which makes the containment p_kconn <= p_mindeg exact, and the
k-connectivity check is skipped whenever min degree < k (a necessary
condition, so the outcome is unchanged).
"""

from __future__ import annotations

import math
import multiprocessing
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Callable, Iterable

from . import _backend, analytics
from .model import ModelParams, validate_params
from .rng import derive_seed

CSV_HEADER = (
    "n,mu,k,k2,trials,master_seed,p_mindeg,p_kconn,ci_halfwidth,"
    "mean_degree_emp,threshold_k2"
)


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: Cartesian product of mu_list x k_list x k2 range.

    ``k2_range`` is (start, stop, step) with an inclusive stop.
    """

    n: int
    mu_list: tuple[float, ...]
    k_list: tuple[int, ...]
    k2_range: tuple[int, int, int]
    trials: int = 1000
    master_seed: int = 0
    parallelism: int = 1


@dataclass(frozen=True)
class SweepRow:
    n: int
    mu: float
    k: int
    k2: int
    trials: int
    master_seed: int
    p_mindeg: float
    p_kconn: float
    ci_halfwidth: float
    mean_degree_emp: float
    threshold_k2: int
    valid: bool = True
    error: str = ""


def k2_values(cfg: ExperimentConfig) -> list[int]:
    start, stop, step = cfg.k2_range
    return list(range(start, stop + 1, step))


def validate_config(cfg: ExperimentConfig) -> ExperimentConfig:
    if cfg.trials < 1:
        raise ValueError(f"trials >= 1 required, got {cfg.trials}")
    if not cfg.mu_list:
        raise ValueError("mu_list must be non-empty")
    if not cfg.k_list:
        raise ValueError("k_list must be non-empty")
    for k in cfg.k_list:
        if k < 2:
            raise ValueError(f"sweep k values must be >= 2, got {k}")
    values = k2_values(cfg)
    if not values:
        raise ValueError(f"k2_range {cfg.k2_range} is empty")
    if cfg.k2_range[2] < 1:
        raise ValueError("k2 step must be >= 1")
    if cfg.parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    for mu in cfg.mu_list:
        for k2 in values:
            validate_params(ModelParams(n=cfg.n, mu=mu, k2=k2))
    return cfg


def default_k2_range(n: int, mu: float, k: int) -> tuple[int, int, int]:
    """Sweep grid 2..2*threshold step 1, covering both sides of the
    transition."""
    return (2, 2 * analytics.threshold_k2(n, mu, k), 1)


def _threshold_column(n: int, mu: float, k: int) -> int:
    """Threshold for the CSV column; 0 marks 'undefined' (k < 2 or mu = 1)."""
    try:
        return analytics.threshold_k2(n, mu, k)
    except ValueError:
        return 0


def run_point(
    params: ModelParams,
    k: int,
    trials: int,
    master_seed: int,
    point_key: tuple[int, ...] | None = None,
) -> SweepRow:
    """Estimate both probabilities at one parameter point.

    ``point_key`` (used by run_sweep) folds sweep coordinates into the seed
    chain; a bare run_point derives trial t's stream as
    derive_seed(master_seed, t).
    """
    validate_params(params)
    if k < 1:
        raise ValueError(f"k >= 1 required, got {k}")
    if trials < 1:
        raise ValueError(f"trials >= 1 required, got {trials}")
    base = master_seed if point_key is None else derive_seed(master_seed, *point_key)
    seeds = [derive_seed(base, t) for t in range(trials)]
    mindeg_hits, kconn_hits, edge_sum, _ = _backend.kernel.run_trials(
        params.n, params.mu, params.k1, params.k2, k, seeds
    )
    assert kconn_hits <= mindeg_hits
    p_mindeg = mindeg_hits / trials
    p_kconn = kconn_hits / trials
    return SweepRow(
        n=params.n,
        mu=params.mu,
        k=k,
        k2=params.k2,
        trials=trials,
        master_seed=master_seed,
        p_mindeg=p_mindeg,
        p_kconn=p_kconn,
        ci_halfwidth=ci_halfwidth(p_mindeg, trials),
        mean_degree_emp=2.0 * edge_sum / (params.n * trials),
        threshold_k2=_threshold_column(params.n, params.mu, k),
    )


def ci_halfwidth(p_hat: float, trials: int) -> float:
    """Normal-approximation 95% half-width; degenerates to 0 at p in {0, 1}."""
    return 1.96 * math.sqrt(p_hat * (1.0 - p_hat) / trials)


def point_statistics(
    params: ModelParams, k: int, trials: int, master_seed: int
) -> tuple[SweepRow, float]:
    """run_point plus the standard error of the per-trial mean degree."""
    validate_params(params)
    seeds = [derive_seed(master_seed, t) for t in range(trials)]
    mindeg_hits, kconn_hits, edge_sum, edge_sq = _backend.kernel.run_trials(
        params.n, params.mu, params.k1, params.k2, k, seeds
    )
    p_mindeg = mindeg_hits / trials
    mean_e = edge_sum / trials
    var_e = max(0.0, edge_sq / trials - mean_e * mean_e)
    se_mean_degree = (2.0 / params.n) * math.sqrt(var_e / trials)
    row = SweepRow(
        n=params.n,
        mu=params.mu,
        k=k,
        k2=params.k2,
        trials=trials,
        master_seed=master_seed,
        p_mindeg=p_mindeg,
        p_kconn=kconn_hits / trials,
        ci_halfwidth=ci_halfwidth(p_mindeg, trials),
        mean_degree_emp=2.0 * edge_sum / (params.n * trials),
        threshold_k2=_threshold_column(params.n, params.mu, k),
    )
    return row, se_mean_degree


def _point_task(args) -> SweepRow:
    n, mu, k, k2, trials, master_seed, point_key = args
    try:
        return run_point(
            ModelParams(n=n, mu=mu, k2=k2), k, trials, master_seed, point_key
        )
    except Exception as exc:  # sweep continues; row marked invalid
        return SweepRow(
            n=n,
            mu=mu,
            k=k,
            k2=k2,
            trials=trials,
            master_seed=master_seed,
            p_mindeg=float("nan"),
            p_kconn=float("nan"),
            ci_halfwidth=float("nan"),
            mean_degree_emp=float("nan"),
            threshold_k2=0,
            valid=False,
            error=f"{type(exc).__name__}: {exc}",
        )


def run_sweep(
    cfg: ExperimentConfig,
    progress: Callable[[int, int, SweepRow], None] | None = None,
) -> list[SweepRow]:
    """Run every point of the sweep in deterministic order (mu outermost,
    then k, then k2). Output is independent of the parallelism level."""
    validate_config(cfg)
    values = k2_values(cfg)
    tasks = [
        (cfg.n, mu, k, k2, cfg.trials, cfg.master_seed, (i_mu, i_k, k2))
        for i_mu, mu in enumerate(cfg.mu_list)
        for i_k, k in enumerate(cfg.k_list)
        for k2 in values
    ]
    rows: list[SweepRow] = []
    if cfg.parallelism > 1 and len(tasks) > 1:
        with multiprocessing.Pool(cfg.parallelism) as pool:
            for i, row in enumerate(pool.imap(_point_task, tasks, chunksize=1)):
                rows.append(row)
                if progress is not None:
                    progress(i + 1, len(tasks), row)
    else:
        for i, task in enumerate(tasks):
            row = _point_task(task)
            rows.append(row)
            if progress is not None:
                progress(i + 1, len(tasks), row)
    return rows


def stderr_progress(done: int, total: int, row: SweepRow) -> None:
    print(
        f"[{done}/{total}] mu={row.mu:g} k={row.k} k2={row.k2} "
        f"p_mindeg={row.p_mindeg:.3f} p_kconn={row.p_kconn:.3f}",
        file=sys.stderr,
        flush=True,
    )


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def write_csv(rows: Iterable[SweepRow], dest: str | Path | IO[str]) -> None:
    """Fixed 6-decimal formatting; byte-identical output for equal rows."""
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8", newline="\n") as fp:
            write_csv(rows, fp)
        return
    dest.write(CSV_HEADER + "\n")
    for r in rows:
        dest.write(
            ",".join(
                (
                    str(r.n),
                    _fmt(r.mu),
                    str(r.k),
                    str(r.k2),
                    str(r.trials),
                    str(r.master_seed),
                    _fmt(r.p_mindeg),
                    _fmt(r.p_kconn),
                    _fmt(r.ci_halfwidth),
                    _fmt(r.mean_degree_emp),
                    str(r.threshold_k2),
                )
            )
            + "\n"
        )


def read_csv(src: str | Path | IO[str]) -> list[SweepRow]:
    if isinstance(src, (str, Path)):
        with open(src, "r", encoding="utf-8") as fp:
            return read_csv(fp)
    header = src.readline().strip()
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header!r}")
    rows = []
    for line in src:
        line = line.strip()
        if not line:
            continue
        f = line.split(",")
        rows.append(
            SweepRow(
                n=int(f[0]),
                mu=float(f[1]),
                k=int(f[2]),
                k2=int(f[3]),
                trials=int(f[4]),
                master_seed=int(f[5]),
                p_mindeg=float(f[6]),
                p_kconn=float(f[7]),
                ci_halfwidth=float(f[8]),
                mean_degree_emp=float(f[9]),
                threshold_k2=int(f[10]),
            )
        )
    return rows
