"""Exit criteria for the build, one test per criterion, all at exact arithmetic.

Each test loops over its whole range and collects every failure, so a red
line reports the full list rather than the first counterexample.
"""

import os
import random
import subprocess
import sys
from fractions import Fraction
from itertools import combinations, product

import pytest

from gtbasis import (
    ModuleVector,
    act_E,
    conjugate,
    cyclic_span_dimension,
    enumerate_infinite_patterns,
    enumerate_patterns,
    exchange_relation,
    fundamental_basis,
    gt_basis,
    gt_basis_vector,
    gz_centrality_check,
    highest_weight_vector,
    partitions,
    rank,
    semistandard_monomials,
    spectral_check,
    stability_check,
    straighten,
    weyl_dimension,
)
from gtbasis.errors import GTError

from oracles import ssyt_count


def acceptance_range(max_size=6, max_n=4):
    """Every (lambda, n) with |lambda| <= max_size and len(lambda) <= n <= max_n."""
    return [
        (lam, n)
        for size in range(max_size + 1)
        for lam in partitions(size, max_n)
        for n in range(max(1, len(lam)), max_n + 1)
    ]


@pytest.mark.acceptance(1, "dimension triple agreement, |lambda| <= 6, n <= 4")
def test_dimension_triple_agreement():
    bad = []
    for lam, n in acceptance_range():
        counts = (len(enumerate_patterns(lam, n)), weyl_dimension(lam, n), ssyt_count(lam, n))
        if len(set(counts)) != 1:
            bad.append((lam, n, counts))
    assert not bad


@pytest.mark.acceptance(2, "spectral theorem for every pattern and every m <= n")
def test_spectral_sweep():
    bad, checks = [], 0
    for lam, n in acceptance_range():
        for p in enumerate_patterns(lam, n):
            for m in range(1, n + 1):
                checks += 1
                report = spectral_check(p, m)
                if not report:
                    bad.append(report.to_dict())
    assert checks > 0 and not bad


@pytest.mark.acceptance(3, "exact rank of the e_Lambda family equals the dimension")
def test_basis_rank():
    bad = []
    for lam, n in acceptance_range():
        vectors = [gt_basis_vector(p).terms for p in enumerate_patterns(lam, n)]
        if rank(vectors) != weyl_dimension(lam, n):
            bad.append((lam, n))
        try:
            gt_basis(lam, n)
        except GTError as err:
            bad.append((lam, n, repr(err)))
    assert not bad


@pytest.mark.acceptance(4, "highest weight vector: raising operators kill it, Cartan eigenvalues, cyclic span")
def test_highest_weight_properties():
    bad = []
    for lam, n in acceptance_range():
        v = highest_weight_vector(lam, n)
        top = tuple(lam) + (0,) * (n - len(lam))
        for i in range(1, n + 1):
            if act_E(i, i, v) != v * top[i - 1]:
                bad.append((lam, n, "cartan", i))
            for j in range(i + 1, n + 1):
                if act_E(i, j, v):
                    bad.append((lam, n, "raising", i, j))
        if cyclic_span_dimension(lam, n) != weyl_dimension(lam, n):
            bad.append((lam, n, "cyclic span"))
    assert not bad


def _exchange_failures(shape, n):
    heights = conjugate(shape)
    bad, count = [], 0
    for filling in product(*[list(product(range(1, n + 1), repeat=h)) for h in heights]):
        for left, right in combinations(range(len(heights)), 2):
            for k in range(1, heights[right] + 1):
                for cells in combinations(range(heights[right]), k):
                    count += 1
                    if straighten(exchange_relation(shape, n, filling, left, right, cells)):
                        bad.append((shape, filling, left, right, cells))
    return bad, count


@pytest.mark.acceptance(5, "exchange relations: three-term identity and all instances for |lambda| <= 5")
def test_exchange_relations():
    bad = []
    # three-term identity on the shape with columns of heights 3 and 2
    shape = (2, 2, 1)
    for n in (3, 5):
        for v1, v2, v3, v4, v5 in product(range(1, n + 1), repeat=5):
            lhs = ModuleVector.monomial(shape, n, [[v1, v3, v5], [v2, v4]])
            rhs = (
                ModuleVector.monomial(shape, n, [[v2, v4, v5], [v1, v3]])
                + ModuleVector.monomial(shape, n, [[v1, v2, v4], [v3, v5]])
                + ModuleVector.monomial(shape, n, [[v2, v3, v4], [v1, v5]])
            )
            if straighten(lhs - rhs):
                bad.append(("three-term", n, (v1, v2, v3, v4, v5)))
    total = 0
    for size in range(1, 6):
        for lam in partitions(size, size):
            found, count = _exchange_failures(lam, max(len(lam), 3))
            bad.extend(found)
            total += count
    assert total > 0 and not bad


def _bracket_failures(v):
    n = v.n
    idx = range(1, n + 1)
    bad = []
    for i, j, k, l in product(idx, repeat=4):
        lhs = act_E(i, j, act_E(k, l, v)) - act_E(k, l, act_E(i, j, v))
        rhs = act_E(i, l, v) * (j == k) - act_E(k, j, v) * (l == i)
        if lhs != rhs:
            bad.append((v.shape, n, (i, j, k, l)))
    return bad


@pytest.mark.acceptance(6, "commutator identity: exhaustive on small modules and 100 random vectors each")
def test_lie_relations():
    rng = random.Random(20240601)
    bad = []
    for lam, n in acceptance_range(3, 3):
        basis = semistandard_monomials(lam, n)
        for mono in basis:
            bad.extend(_bracket_failures(ModuleVector(lam, n, {mono: 1})))
        for _ in range(100):
            picks = rng.sample(basis, min(len(basis), rng.randint(1, 4)))
            terms = {m: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for m in picks}
            bad.extend(_bracket_failures(ModuleVector(lam, n, terms)))
    assert not bad


@pytest.mark.acceptance(7, "colimit stability for degree <= 3, |lambda| <= 4, up to rank 5")
def test_colimit_stability():
    bad, count = [], 0
    for size in range(5):
        for lam in partitions(size, 3):
            for p in enumerate_infinite_patterns(lam, 3):
                count += 1
                try:
                    stability_check(p, 5)
                except GTError as err:
                    bad.append((lam, p.triangle.rows, repr(err)))
    assert count > 0 and not bad


@pytest.mark.acceptance(8, "fundamental representations: wedge monomials match the GT basis, 1 <= k <= n <= 4")
def test_fundamental_representations():
    bad = []
    for n in range(1, 5):
        for k in range(1, n + 1):
            family = fundamental_basis(k, n)
            gt = dict(gt_basis((1,) * k, n))
            patterns = [el.pattern for el in family]
            if len(set(patterns)) != len(family) or set(patterns) != set(gt):
                bad.append((k, n, "not a bijection"))
            for el in family:
                if el.scalar == 0 or gt[el.pattern] != el.vector * el.scalar:
                    bad.append((k, n, el.indices))
    assert not bad


@pytest.mark.acceptance(9, "centrality of the quantum minor coefficients, m <= 3, modules of dimension <= 8")
def test_gz_centrality():
    bad, count = [], 0
    for lam, n in acceptance_range():
        if weyl_dimension(lam, n) > 8:
            continue
        samples = [v for _, v in gt_basis(lam, n)]
        for m in range(1, min(3, n) + 1):
            for i in range(1, m + 1):
                count += 1
                result = gz_centrality_check(m, i, samples)
                if not result:
                    bad.append((lam, n, m, i, result.witness))
    assert count > 0 and not bad


@pytest.mark.acceptance(10, "two verify runs give byte-identical reports")
def test_determinism():
    args = [sys.executable, "-m", "gtbasis", "verify", "--weight", "2,1", "--rank", "3"]
    env = {**os.environ, "GT_THREADS": "2"}
    first = subprocess.run(args, capture_output=True, check=False, env=env)
    second = subprocess.run(args, capture_output=True, check=False, env=env)
    assert first.returncode == second.returncode == 0
    assert first.stdout and first.stdout == second.stdout
