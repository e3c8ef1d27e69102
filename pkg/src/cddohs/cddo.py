"""Child Drawing Development Optimization.

Each agent ("drawing") per iteration either takes the skill branch
(pulled toward its personal and the global best, offset by its golden
ratio), takes the creativity branch (rebuilt from a random pattern-memory
elite) when its golden ratio is near phi, or stays put. An elite archive
(the pattern memory) is refreshed with the global best every iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .core import Candidate, Problem, RunConfig, RunResult, clamp, evaluate, make_rng, uniform

PHI = 1.618

SR_LR_HIGH = (0.6, 1.0)
SR_LR_LOW = (0.0, 0.5)


@dataclass
class CddoParams:
    cr: float = 0.1  # creativity factor; kept for fidelity, unused by the update rule
    sr_lr_high: tuple[float, float] = SR_LR_HIGH
    sr_lr_low: tuple[float, float] = SR_LR_LOW
    pm_size: Optional[int] = None  # None -> ceil(0.2 * pop_size)
    gr_tolerance: float = 0.1

    def resolved_pm_size(self, pop_size: int) -> int:
        pm = self.pm_size if self.pm_size is not None else math.ceil(0.2 * pop_size)
        if not 0 < pm <= pop_size:
            raise ValueError(f"pm_size must be in (0, pop_size], got {pm}")
        return pm

    def validate(self):
        lo, hi = self.sr_lr_low, self.sr_lr_high
        if not (0.0 <= lo[0] <= lo[1] <= 1.0 and 0.0 <= hi[0] <= hi[1] <= 1.0):
            raise ValueError("sr/lr intervals must lie within [0, 1]")
        if lo[1] > hi[0]:
            raise ValueError("low interval must sit below the high interval")


@dataclass
class PatternMemory:
    """Fixed-capacity elite archive, worst-replacement policy."""

    entries: list[Candidate]
    capacity: int

    @classmethod
    def from_population(cls, population: list[Candidate], capacity: int) -> "PatternMemory":
        best = sorted(population, key=lambda c: c.fitness)[:capacity]
        return cls([c.copy() for c in best], capacity)

    def worst_index(self) -> int:
        return max(range(len(self.entries)), key=lambda i: self.entries[i].fitness)

    def best_fitness(self) -> float:
        return min(c.fitness for c in self.entries)

    def replace_worst_if_better(self, candidate: Candidate) -> bool:
        w = self.worst_index()
        if candidate.fitness < self.entries[w].fitness:
            self.entries[w] = candidate.copy()
            return True
        return False


@dataclass
class CddoState:
    population: list[Candidate]
    lbest: list[Candidate]
    gbest: Candidate
    pm: PatternMemory
    iteration: int = 0
    evals: int = 0


def random_hand_pressure(problem: Problem, rng) -> float:
    """RHP: a uniform draw within the problem's bounds."""
    return uniform(rng, problem.lower, problem.upper)


def select_hand_pressure(x: Candidate, rng) -> float:
    """HP: a uniformly chosen component of the current position."""
    return float(x.position[rng.integers(x.position.size)])


def golden_ratio(x: Candidate, rng) -> float:
    """(pos[M] + pos[N]) / pos[M] for random distinct indices M != N.

    A zero denominator is resampled once; if still zero, returns phi so the
    agent falls into the creativity branch rather than dividing by zero.
    """
    pos = x.position
    if pos.size < 2:
        raise ValueError("golden ratio needs dim >= 2")
    for _ in range(2):
        m = int(rng.integers(pos.size))
        n = int(rng.integers(pos.size - 1))
        if n >= m:
            n += 1
        if pos[m] != 0.0:
            return float((pos[m] + pos[n]) / pos[m])
    return PHI


def skill_update(x: Candidate, lbest: Candidate, gbest: Candidate,
                 gr: float, sr: float, lr: float, problem: Problem) -> np.ndarray:
    """Skill-branch move: position scaled by gr plus pulls toward both bests.

    gr scales the current position (a dimensionless ratio applied to the
    drawing) rather than being added to it; the additive reading cannot
    contract and demonstrably stalls far above the published optima.
    """
    new = gr * x.position + sr * (lbest.position - x.position) + lr * (gbest.position - x.position)
    return clamp(new, problem)


def creativity_update(pm_entry: Candidate, gbest: Candidate, sr: float,
                      problem: Problem) -> np.ndarray:
    """Creativity-branch move: a pattern-memory elite shifted by sr * gbest."""
    return clamp(pm_entry.position + sr * gbest.position, problem)


def init_state(problem: Problem, config: RunConfig, params: CddoParams,
               rng, pm_size: Optional[int] = None) -> CddoState:
    from .core import init_population

    population = init_population(problem, config.pop_size, rng)
    lbest = [c.copy() for c in population]
    gbest = min(population, key=lambda c: c.fitness).copy()
    capacity = pm_size if pm_size is not None else params.resolved_pm_size(config.pop_size)
    pm = PatternMemory.from_population(population, capacity)
    return CddoState(population, lbest, gbest, pm, iteration=0, evals=config.pop_size)


def cddo_step(state: CddoState, problem: Problem, params: CddoParams, rng) -> CddoState:
    """One iteration over all agents; mutates and returns state."""
    hi_lo, hi_hi = params.sr_lr_high
    lo_lo, lo_hi = params.sr_lr_low
    for i, agent in enumerate(state.population):
        rhp = random_hand_pressure(problem, rng)
        hp = select_hand_pressure(agent, rng)
        gr = golden_ratio(agent, rng)
        if hp < rhp:
            sr = uniform(rng, hi_lo, hi_hi)
            lr = uniform(rng, hi_lo, hi_hi)
            new_pos = skill_update(agent, state.lbest[i], state.gbest, gr, sr, lr, problem)
        elif abs(gr - PHI) <= params.gr_tolerance:
            sr = uniform(rng, lo_lo, lo_hi)
            entry = state.pm.entries[rng.integers(len(state.pm.entries))]
            new_pos = creativity_update(entry, state.gbest, sr, problem)
        else:
            continue  # neither condition holds: the drawing rests this round
        fit = evaluate(problem, new_pos, rng)
        state.evals += 1
        agent.position = new_pos
        agent.fitness = fit
        if fit < state.lbest[i].fitness:
            state.lbest[i] = agent.copy()
        if fit < state.gbest.fitness:
            state.gbest = agent.copy()
    state.pm.replace_worst_if_better(state.gbest)
    state.iteration += 1
    return state


RefreshFn = Callable[[CddoState, Problem, np.random.Generator], None]


def _run_engine(problem: Problem, config: RunConfig, params: CddoParams,
                seed: int, pm_size: Optional[int] = None,
                refresh: Optional[RefreshFn] = None) -> RunResult:
    """Shared driver for CDDO and the hybrid (hybrid supplies a PM refresh hook)."""
    params.validate()
    if problem.dim < 2:
        raise ValueError("CDDO needs dim >= 2 (golden ratio uses two distinct components)")
    rng = make_rng(seed)
    state = init_state(problem, config, params, rng, pm_size=pm_size)
    trace = np.empty(config.max_iters)
    for t in range(config.max_iters):
        if refresh is not None:
            refresh(state, problem, rng)
        cddo_step(state, problem, params, rng)
        trace[t] = state.gbest.fitness
    return RunResult(
        best_fitness=state.gbest.fitness,
        best_position=state.gbest.position.copy(),
        trace=trace,
        seed=seed,
        evals=state.evals,
    )


def cddo_run(problem: Problem, config: RunConfig, params: Optional[CddoParams] = None,
             run_index: int = 0) -> RunResult:
    """One full CDDO run; run r uses seed base_seed + r."""
    return _run_engine(problem, config, params or CddoParams(),
                       seed=config.seed_for_run(run_index))
