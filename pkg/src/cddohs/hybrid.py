"""The CDDO-HS hybrid: CDDO with an enlarged pattern memory (80% of the
population) that a Harmony-Search improvisation refreshes every iteration."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cddo import CddoParams, CddoState, PatternMemory, _run_engine
from .core import Candidate, Problem, RunConfig, RunResult, evaluate
from .hs import HsParams, improvise_from

PM_FRACTION = 0.8


@dataclass
class HybridParams:
    cddo: CddoParams = field(default_factory=CddoParams)
    hs: HsParams = field(default_factory=HsParams)
    refreshes_per_iter: int = 1  # 0 disables the HS refresh (reduces to plain CDDO)

    def pm_size(self, pop_size: int) -> int:
        return math.ceil(PM_FRACTION * pop_size)


def _improvise_refresh(pm: PatternMemory, hs_params: HsParams,
                       problem: Problem, rng) -> tuple[bool, Candidate]:
    pos = improvise_from([c.position for c in pm.entries], hs_params, problem, rng)
    cand = Candidate(pos, evaluate(problem, pos, rng))
    return pm.replace_worst_if_better(cand), cand


def refresh_pattern_memory(pm: PatternMemory, hs_params: HsParams,
                           problem: Problem, rng) -> bool:
    """Improvise one vector over the PM rows; keep it if it beats PM's worst."""
    replaced, _ = _improvise_refresh(pm, hs_params, problem, rng)
    return replaced


def cddo_hs_run(problem: Problem, config: RunConfig,
                params: Optional[HybridParams] = None, run_index: int = 0) -> RunResult:
    """One full hybrid run; identical to CDDO except for the PM sizing and
    the per-iteration HS refresh that precedes the hand-pressure block."""
    params = params or HybridParams()

    def refresh(state: CddoState, prob: Problem, rng) -> None:
        # The improvised vector is an evaluated solution, so it also feeds the
        # global best (the loop updates gbest after the refresh each iteration).
        for _ in range(params.refreshes_per_iter):
            _, cand = _improvise_refresh(state.pm, params.hs, prob, rng)
            state.evals += 1
            if cand.fitness < state.gbest.fitness:
                state.gbest = cand.copy()

    return _run_engine(
        problem, config, params.cddo,
        seed=config.seed_for_run(run_index),
        pm_size=params.pm_size(config.pop_size),
        refresh=refresh if params.refreshes_per_iter > 0 else None,
    )
