"""Summary statistics, the Wilcoxon rank-sum test, and ranking tables."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class SampleSummary:
    avg: float
    std: float  # sample standard deviation (n-1 denominator); 0 for n == 1
    n: int


def summarize(samples) -> SampleSummary:
    xs = np.asarray(list(samples), dtype=float)
    if xs.size == 0:
        raise ValueError("cannot summarize an empty sample")
    avg = float(np.mean(xs))
    std = float(np.std(xs, ddof=1)) if xs.size > 1 else 0.0
    return SampleSummary(avg=avg, std=std, n=int(xs.size))


def _midranks(values: np.ndarray) -> np.ndarray:
    """Ranks 1..n with ties assigned the mean of the tied ranks."""
    order = np.argsort(values, kind="mergesort")
    ranks = np.empty(values.size, dtype=float)
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and values[order[j + 1]] == values[order[i]]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


# exact enumeration is used while C(n, n1) stays below this (covers n1+n2 <= 16)
_EXACT_ENUMERATION_LIMIT = 20_000


def _exact_two_sided_p(ranks: np.ndarray, n1: int) -> float:
    """Enumerate every assignment of n1 pooled ranks to the first sample."""
    import itertools

    n = ranks.size
    n2 = n - n1
    mean_u = n1 * n2 / 2.0

    def deviation(idx) -> float:
        r1 = sum(ranks[i] for i in idx)
        u1 = n1 * n2 + n1 * (n1 + 1) / 2.0 - r1
        return abs(u1 - mean_u)

    observed = deviation(range(n1))
    total = extreme = 0
    for idx in itertools.combinations(range(n), n1):
        total += 1
        if deviation(idx) >= observed - 1e-12:
            extreme += 1
    return extreme / total


def wilcoxon_rank_sum(a, b) -> float:
    """Two-sided rank-sum (Mann-Whitney) p-value with midrank tie handling.

    Small samples are enumerated exactly; larger ones use the normal
    approximation with tie-corrected variance and a 0.5 continuity
    correction (the approximation alone is too coarse below ~n=4).
    Degenerate input (every value identical across both samples) returns 1.0.
    """
    a = np.asarray(list(a), dtype=float)
    b = np.asarray(list(b), dtype=float)
    n1, n2 = a.size, b.size
    if n1 < 2 or n2 < 2:
        raise ValueError("both samples need at least 2 elements")
    pooled = np.concatenate([a, b])
    ranks = _midranks(pooled)
    if np.all(pooled == pooled[0]):
        return 1.0  # no evidence either way
    if math.comb(n1 + n2, n1) <= _EXACT_ENUMERATION_LIMIT:
        return _exact_two_sided_p(ranks, n1)
    r1 = float(np.sum(ranks[:n1]))
    u1 = n1 * n2 + n1 * (n1 + 1) / 2.0 - r1
    u2 = n1 * n2 - u1

    # tie correction: 1 - sum(t^3 - t) / (N^3 - N)
    n = n1 + n2
    _, counts = np.unique(pooled, return_counts=True)
    tie_term = float(np.sum(counts ** 3 - counts))
    correction = 1.0 - tie_term / (n ** 3 - n)
    if correction <= 0.0:
        return 1.0  # all values identical: no evidence either way
    sd = math.sqrt(correction * n1 * n2 * (n + 1) / 12.0)

    mean_u = n1 * n2 / 2.0
    z = (max(u1, u2) - mean_u - 0.5) / sd
    z = max(z, 0.0)
    p = 2.0 * (1.0 - _norm_cdf(z))
    return min(max(p, np.nextafter(0.0, 1.0)), 1.0)


def _norm_cdf(z: float) -> float:
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


@dataclass(frozen=True)
class RankTable:
    placements: dict  # func id -> {algo: placement (1 = best)}
    scores: dict      # algo -> mean placement, lower is better

    def best_algorithm(self) -> str:
        return min(self.scores, key=self.scores.get)

    def worst_algorithm(self) -> str:
        return max(self.scores, key=self.scores.get)


def rank_algorithms(results: dict) -> RankTable:
    """Rank algorithms per function by average fitness (ascending).

    ``results`` maps function id -> {algorithm: avg}. Ties share the midrank
    (mean of the tied placements), matching how the published table spreads
    tied algorithms over consecutive places. Score = mean placement across
    functions.
    """
    algo_sets = {frozenset(row) for row in results.values()}
    if len(algo_sets) > 1:
        raise ValueError("every function row must contain the same algorithm set")
    if not results:
        raise ValueError("results must be non-empty")
    algos = sorted(next(iter(algo_sets)))

    placements: dict = {}
    for func, row in results.items():
        placements[func] = {}
        for a in algos:
            less = sum(1 for other in algos if row[other] < row[a])
            tied = sum(1 for other in algos if row[other] == row[a])
            placements[func][a] = less + (tied + 1) / 2.0
    scores = {
        a: float(np.mean([placements[f][a] for f in results])) for a in algos
    }
    return RankTable(placements=placements, scores=scores)
