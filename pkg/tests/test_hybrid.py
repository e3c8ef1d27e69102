import numpy as np
import pytest

from cddohs.benchmarks import make_function
from cddohs.cddo import CddoParams, Candidate, PatternMemory, cddo_run, init_state
from cddohs.core import RunConfig, make_rng
from cddohs.hs import HsParams
from cddohs.hybrid import HybridParams, cddo_hs_run, refresh_pattern_memory


def _pm(positions):
    cands = [Candidate(np.array(p, float), float(np.sum(np.square(p)))) for p in positions]
    return PatternMemory(cands, len(cands))


class TestRefresh:
    def test_identical_rows_cannot_strictly_improve(self):
        p = make_function("F1")
        pm = _pm([np.full(10, 3.0)] * 4)
        params = HsParams(hmcr=1.0, par=0.0)
        assert not refresh_pattern_memory(pm, params, p, make_rng(1))

    def test_pure_random_ignores_pm(self):
        p = make_function("F1")
        pm = _pm([np.full(10, 99.0)] * 4)
        rng = make_rng(2)
        # with hmcr=0 the improvised vector is uniform in bounds; a uniform
        # draw over [-100,100]^10 beats a PM stuck at 99-vectors essentially always
        hits = sum(
            refresh_pattern_memory(_pm([np.full(10, 99.0)] * 4), HsParams(hmcr=0.0), p, make_rng(s))
            for s in range(20)
        )
        assert hits == 20

    def test_eventual_improvement_of_bad_pm(self):
        p = make_function("F1")
        pm = _pm([np.full(10, 90.0) + i for i in range(4)])
        rng = make_rng(3)
        params = HsParams(hmcr=0.0)
        improved = 0
        for _ in range(1000):
            if refresh_pattern_memory(pm, params, p, rng):
                improved += 1
        assert improved >= 1

    def test_never_increases_worst_fitness(self):
        p = make_function("F9")
        rng = make_rng(4)
        cfg = RunConfig(pop_size=10, base_seed=4)
        state = init_state(p, cfg, CddoParams(), rng, pm_size=8)
        params = HsParams()
        for _ in range(300):
            worst_before = max(c.fitness for c in state.pm.entries)
            refresh_pattern_memory(state.pm, params, p, rng)
            assert max(c.fitness for c in state.pm.entries) <= worst_before


class TestHybridRun:
    def test_pm_capacity_is_80_percent(self):
        assert HybridParams().pm_size(40) == 32
        assert HybridParams().pm_size(10) == 8

    def test_deterministic(self):
        p = make_function("F10")
        cfg = RunConfig(pop_size=20, max_iters=80, base_seed=55)
        a, b = cddo_hs_run(p, cfg), cddo_hs_run(p, cfg)
        assert np.array_equal(a.trace, b.trace)
        assert np.array_equal(a.best_position, b.best_position)
        assert a.evals == b.evals

    def test_trace_monotone(self):
        r = cddo_hs_run(make_function("F9"), RunConfig(pop_size=15, max_iters=100, base_seed=8))
        assert np.all(np.diff(r.trace) <= 0)

    def test_eval_budget_includes_refresh(self):
        cfg = RunConfig(pop_size=15, max_iters=60, base_seed=10)
        r = cddo_hs_run(make_function("F1"), cfg)
        # init + at most pop per iteration + one refresh per iteration
        assert r.evals <= cfg.pop_size * (cfg.max_iters + 1) + cfg.max_iters
        assert r.evals >= cfg.pop_size + cfg.max_iters

    def test_reduces_to_cddo_when_refresh_disabled(self):
        p = make_function("F9")
        cfg = RunConfig(pop_size=16, max_iters=120, base_seed=123)
        pm_size = HybridParams().pm_size(cfg.pop_size)
        hybrid = cddo_hs_run(p, cfg, HybridParams(refreshes_per_iter=0))
        plain = cddo_run(p, cfg, CddoParams(pm_size=pm_size))
        assert np.array_equal(hybrid.trace, plain.trace)
        assert hybrid.evals == plain.evals

    def test_beats_hs_on_sphere(self):
        # direction of the published comparison, small-scale smoke version
        from cddohs.hs import hs_run
        p = make_function("F1")
        cfg = RunConfig(pop_size=20, max_iters=150, base_seed=77, n_runs=5)
        hyb = np.mean([cddo_hs_run(p, cfg, run_index=r).best_fitness for r in range(5)])
        hs = np.mean([hs_run(p, cfg, run_index=r).best_fitness for r in range(5)])
        assert hyb < hs
