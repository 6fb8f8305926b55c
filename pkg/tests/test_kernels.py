import itertools
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from ribboncat import kernels
from ribboncat.catalog import CATALOG_NAMES, deligne_product, load_named


def brute_assoc(N):
    r = N.shape[0]
    for a, b, c, d in itertools.product(range(r), repeat=4):
        lhs = sum(int(N[a, b, e]) * int(N[e, c, d]) for e in range(r))
        rhs = sum(int(N[b, c, e]) * int(N[a, e, d]) for e in range(r))
        if lhs != rhs:
            return a, b, c, d, lhs, rhs
    return None


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: arrays(np.int64, (r, r, r), elements=st.integers(0, 2))))
def test_associativity_matches_brute_force(N):
    for backend in (kernels.python_backend, kernels.compiled_backend):
        if backend is not None:
            assert backend.associativity_violation(N) == brute_assoc(N)


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_associativity_catalog(backend, name):
    assert backend.associativity_violation(load_named(name).N) is None


def test_extended_hom(backend):
    s = deligne_product(load_named("rep_z3"), load_named("ising"))
    M = backend.extended_hom_matrix(s.N, [0, 3, 6], [1, 1, 1])
    expected = sum(s.N[k] for k in (0, 3, 6))
    assert np.array_equal(M, expected)


def brute_gram(M):
    """Canonical column multisets of all m with m m^T = M.

    Peels off outer products c c^T one column at a time (columns in a fixed
    order, repeats allowed) while the residual stays entrywise nonnegative.
    """
    r = M.shape[0]
    top = int(np.sqrt(M.diagonal().max()))
    cols = [c for c in itertools.product(range(top + 1), repeat=r) if any(c)]
    outer = [np.outer(c, c) for c in cols]
    found = set()

    def rec(R, start, chosen):
        if not R.any():
            found.add(tuple(sorted(chosen, reverse=True)))
            return
        for i in range(start, len(cols)):
            rest = R - outer[i]
            if (rest >= 0).all():
                rec(rest, i, chosen + [cols[i]])

    rec(np.array(M), 0, [])
    return found


def canon(solutions):
    out = set()
    for rows in solutions:
        m = np.array(rows)
        out.add(tuple(sorted((tuple(int(v) for v in m[:, j]) for j in range(m.shape[1])), reverse=True)))
    return out


@pytest.mark.parametrize(
    "M",
    [
        [[1, 1, 1], [1, 1, 1], [1, 1, 2]],
        [[4, 2], [2, 4]],
        [[2, 2, 0], [2, 4, 2], [0, 2, 2]],
        [[2, 0], [0, 4]],
        [[1, 1, 2], [1, 1, 2], [2, 2, 4]],
        [[3, 1], [1, 3]],
    ],
)
def test_gram_factorizations_match_enumeration(backend, M):
    M = np.array(M)
    sols, truncated = backend.gram_factorizations(M, range(len(M)), 10_000)
    assert not truncated
    for rows in sols:
        m = np.array(rows)
        assert np.array_equal(m @ m.T, M)
    assert canon(sols) == brute_gram(M)


def test_gram_limit_truncates(backend):
    sols, truncated = backend.gram_factorizations(np.eye(3, dtype=int) * 4, range(3), 2)
    assert truncated and len(sols) == 2


def test_backends_agree_exactly():
    if kernels.compiled_backend is None:
        pytest.skip("compiled kernels not built")
    M = np.array([[4, 2, 2], [2, 4, 2], [2, 2, 4]])
    assert kernels.python_backend.gram_factorizations(M, [2, 0, 1], 1000) == kernels.compiled_backend.gram_factorizations(
        M, [2, 0, 1], 1000
    )


def test_env_var_forces_python_backend():
    env = dict(os.environ, RIBBONCAT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from ribboncat import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
