import random

import pytest

from diffpow import _kernels_py, kernels

compiled = pytest.importorskip("diffpow._kernels")


def random_vectors(rng, k, d, top):
    return [tuple(rng.randint(0, top) for _ in range(d)) for _ in range(k)]


@pytest.mark.parametrize("seed", range(20))
def test_minimal_elements_agree(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 4)
    vecs = random_vectors(rng, rng.randint(0, 60), d, 6)
    assert compiled.minimal_elements(vecs) == _kernels_py.minimal_elements(vecs)


@pytest.mark.parametrize("seed", range(20))
def test_scan_box_agrees(seed):
    rng = random.Random(100 + seed)
    d = rng.randint(1, 3)
    gens = random_vectors(rng, rng.randint(1, 3), d, 4)
    n = rng.randint(1, 5)
    box = tuple(max(g[i] for g in gens) + n + 1 for i in range(d))
    assert compiled.scan_box(gens, box, n) == _kernels_py.scan_box(gens, box, n)


def test_backend_reported():
    assert kernels.BACKEND in ("cython", "python")


def test_env_var_forces_fallback():
    import os
    import subprocess
    import sys
    code = "from diffpow.kernels import BACKEND; from diffpow import diffpower, MonomialIdeal; " \
           "print(BACKEND, diffpower(MonomialIdeal(2, ((2, 0), (0, 3))), 2).gens)"
    outs = {}
    for flag in ("", "1"):
        env = dict(os.environ, DIFFPOW_PURE_PYTHON=flag)
        outs[flag] = subprocess.run([sys.executable, "-c", code], env=env,
                                    capture_output=True, text=True, check=True).stdout.split(" ", 1)
    assert outs["1"][0] == "python" and outs[""][0] == kernels.BACKEND
    assert outs["1"][1] == outs[""][1]
