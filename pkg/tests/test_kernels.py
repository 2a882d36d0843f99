import itertools
import os
import random
import subprocess
import sys

import pytest

from statesum import kernels
from statesum.catdata import load_category
from statesum.engine import _compile_fusion, _kernel_inputs, state_sum
from statesum.registry import load_manifold

needs_compiled = pytest.mark.skipif(kernels.compiled_kernel is None, reason="extension not built")


def _random_problem(rng):
    n = rng.randint(1, 5)
    domains = [rng.randint(1, 3) for _ in range(n)]
    ngens = rng.randint(1, 3)
    wvecs = [[]] + [[(rng.randrange(ngens), rng.randint(-2, 2))] for _ in range(4)]
    factors, checks = [], [[] for _ in range(n)]
    for _ in range(rng.randint(1, 4)):
        scope = sorted(rng.sample(range(n), rng.randint(1, min(n, 3))))
        strides, s = [], 1
        for v in reversed(scope):
            strides.insert(0, s)
            s *= domains[v]
        table = [rng.choice([-1, 0, 1, 2, 3, 4]) for _ in range(s)]
        checks[scope[-1]].append(len(factors))
        factors.append((scope, strides, table))
    return domains, factors, checks, wvecs, ngens


def _brute(domains, factors, checks, wvecs, ngens):
    hist = {}
    for x in itertools.product(*(range(k) for k in domains)):
        counts = [0] * ngens
        for scope, strides, table in factors:
            w = table[sum(x[v] * st for v, st in zip(scope, strides))]
            if w < 0:
                break
            for g, e in wvecs[w]:
                counts[g] += e
        else:
            key = tuple(counts)
            hist[key] = hist.get(key, 0) + 1
    return hist


def test_python_kernel_matches_brute_force():
    rng = random.Random(0)
    for _ in range(200):
        prob = _random_problem(rng)
        assert kernels.python_kernel(*prob) == _brute(*prob)


@needs_compiled
def test_compiled_kernel_matches_python():
    rng = random.Random(1)
    for _ in range(200):
        prob = _random_problem(rng)
        assert kernels.compiled_kernel(*prob) == kernels.python_kernel(*prob)


@needs_compiled
@pytest.mark.parametrize("name", ["s3_bdy4simplex", "t3"])
def test_backends_agree_on_engine_problems(name):
    p = _compile_fusion(load_manifold(name), load_category("fibonacci"), load_category("fibonacci").lam)
    tables, checks, gens, wvecs = _kernel_inputs(p)
    args = (p.domains, tables, checks, wvecs, len(gens))
    assert kernels.compiled_kernel(*args) == kernels.python_kernel(*args)


def test_first_values_split_partitions_histogram():
    rng = random.Random(2)
    for _ in range(50):
        prob = _random_problem(rng)
        full = kernels.python_kernel(*prob)
        merged = {}
        k = prob[0][0]
        for part in (range(0, k, 2), range(1, k, 2)):
            for key, n in kernels.python_kernel(*prob, first_values=list(part)).items():
                merged[key] = merged.get(key, 0) + n
        assert merged == full


def test_backend_flag():
    c, d = load_manifold("rp3"), load_category("rep_s3")
    assert state_sum(c, d, backend="python").value == state_sum(c, d).value


def test_pure_python_env_var():
    env = dict(os.environ, STATESUM_PURE_PYTHON="1")
    code = "from statesum import kernels; print(kernels.BACKEND)"
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert r.stdout.strip() == "python"
