import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nodalis import _pykernels as py
from nodalis import kernels

compiled = kernels.compiled_backend
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")

ints = st.lists(st.integers(-(10 ** 30), 10 ** 30), min_size=1, max_size=24)
primes = st.sampled_from([3, 5, 7, 13, 101, 65537, 2 ** 61 - 1, 2 ** 89 - 1])


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")


@needs_compiled
def test_compiled_is_default():
    assert kernels.BACKEND == "cython"


@needs_compiled
@given(ints, ints, st.integers(0, 30))
def test_conv_int_agrees(a, b, n):
    assert compiled.conv_int(a, b, n) == py.conv_int(a, b, n)


@needs_compiled
@given(st.data(), primes, st.integers(0, 30))
def test_conv_mod_agrees(data, p, n):
    res = st.lists(st.integers(0, p - 1), min_size=1, max_size=24)
    a, b = data.draw(res), data.draw(res)
    assert compiled.conv_mod(a, b, n, p) == py.conv_mod(a, b, n, p)


@needs_compiled
@given(st.data(), primes, st.integers(1, 30))
def test_inv_mod_agrees(data, p, n):
    a = data.draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=24))
    a[0] = a[0] or 1
    assert compiled.inv_mod(a, n, p) == py.inv_mod(a, n, p)


@needs_compiled
@given(ints, st.integers(1, 20))
def test_inv_int_agrees(a, n):
    a[0] = a[0] or 1
    assert compiled.inv_int(a, n) == py.inv_int(a, n)


@given(ints, ints, st.integers(0, 20))
def test_conv_int_is_product(a, b, n):
    ref = [sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b)) for k in range(n)]
    assert kernels.conv_int(a, b, n) == ref


@given(st.data(), primes, st.integers(1, 20))
def test_inv_mod_is_inverse(data, p, n):
    a = data.draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=12))
    a[0] = a[0] or 1
    inv = kernels.inv_mod(a, n, p)
    prod = kernels.conv_mod(a, inv, n, p)
    assert prod == [1] + [0] * (n - 1)


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=10), st.integers(1, 12))
def test_inv_int_is_inverse(a, n):
    a[0] = a[0] or 1
    T = kernels.inv_int(a, n)
    inv = [Fraction(T[k], a[0] ** (k + 1)) for k in range(n)]
    prod = [sum(a[i] * inv[k - i] for i in range(min(k, len(a) - 1) + 1)) for k in range(n)]
    assert prod == [1] + [0] * (n - 1)


def test_pure_python_fallback():
    env = dict(os.environ, NODALIS_PURE_PYTHON="1")
    code = (
        "from nodalis import kernels; from nodalis.parsing import parse_polynomial as P;"
        "from nodalis.prep import factor_node_branches as f;"
        "print(kernels.BACKEND, f(P('Y^2 - X^2 - X^3'), 6).eta1.to_strings())"
    )
    r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert r.stdout.split(" ", 1)[0] == "python"
    assert "'-1/8'" in r.stdout
