import numpy as np
import pytest

from cddohs.benchmarks import make_function
from cddohs.core import (
    Problem, RunConfig, clamp, init_population, make_rng, uniform,
)


def _toy(dim=3, lower=-1.0, upper=1.0):
    return Problem(id="toy", dim=dim, lower=lower, upper=upper,
                   objective=lambda x: float(np.sum(x * x)))


class TestProblem:
    def test_rejects_inverted_bounds(self):
        with pytest.raises(ValueError):
            Problem(id="bad", dim=2, lower=1.0, upper=-1.0, objective=lambda x: 0.0)

    def test_rejects_zero_dim(self):
        with pytest.raises(ValueError):
            Problem(id="bad", dim=0, lower=0.0, upper=1.0, objective=lambda x: 0.0)


class TestRunConfig:
    def test_defaults_match_protocol(self):
        cfg = RunConfig()
        assert (cfg.pop_size, cfg.max_iters, cfg.n_runs) == (40, 500, 30)

    def test_run_seed_is_base_plus_index(self):
        cfg = RunConfig(base_seed=100)
        assert cfg.seed_for_run(0) == 100
        assert cfg.seed_for_run(7) == 107

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            RunConfig(pop_size=0)


class TestClamp:
    def test_in_bounds_passthrough(self):
        p = _toy(dim=2)
        out = clamp(np.array([0.5, -0.5]), p)
        assert np.array_equal(out, [0.5, -0.5])

    def test_saturates(self):
        p = _toy(dim=2)
        out = clamp(np.array([2.0, -3.0]), p)
        assert np.array_equal(out, [1.0, -1.0])

    def test_boundary_is_fixed_point(self):
        p = Problem(id="t", dim=1, lower=1.0, upper=2.0, objective=lambda x: 0.0)
        assert np.array_equal(clamp(np.array([1.0]), p), [1.0])


class TestUniform:
    def test_degenerate_interval(self, rng):
        assert uniform(rng, 3.0, 3.0) == 3.0

    def test_sample_mean(self):
        rng = make_rng(2)
        draws = [uniform(rng, 0.0, 1.0) for _ in range(10_000)]
        assert abs(np.mean(draws) - 0.5) < 0.02

    def test_reproducible_and_distinct(self):
        a = make_rng(5)
        b = make_rng(5)
        va1, va2 = uniform(a, 0, 1), uniform(a, 0, 1)
        vb1, vb2 = uniform(b, 0, 1), uniform(b, 0, 1)
        assert (va1, va2) == (vb1, vb2)
        assert va1 != va2


class TestInitPopulation:
    def test_bounds_and_count(self, rng):
        p = _toy()
        pop = init_population(p, 5, rng)
        assert len(pop) == 5
        for c in pop:
            assert c.position.shape == (3,)
            assert np.all(c.position >= -1) and np.all(c.position <= 1)

    def test_deterministic(self):
        p = _toy()
        pop_a = init_population(p, 5, make_rng(9))
        pop_b = init_population(p, 5, make_rng(9))
        for a, b in zip(pop_a, pop_b):
            assert np.array_equal(a.position, b.position)
            assert a.fitness == b.fitness

    def test_sphere_fitness_matches_hand_formula(self, rng):
        pop = init_population(make_function("F1"), 40, rng)
        for c in pop:
            assert c.fitness == pytest.approx(sum(v * v for v in c.position))
