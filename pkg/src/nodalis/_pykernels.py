"""Pure-Python reference implementations of the hot series kernels.

Every function here has a drop-in twin in ``_ckernels.pyx``; the two must
agree exactly on all inputs.
"""


def conv_int(a, b, n):
    """First ``n`` coefficients of the product of integer sequences."""
    la, lb = len(a), len(b)
    out = [0] * n
    for i in range(min(la, n)):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(min(lb, n - i)):
            out[i + j] += ai * b[j]
    return out


def conv_mod(a, b, n, p):
    """First ``n`` coefficients of the product of residue sequences mod ``p``."""
    la, lb = len(a), len(b)
    out = [0] * n
    for k in range(n):
        acc = 0
        for i in range(max(0, k - lb + 1), min(k, la - 1) + 1):
            acc += a[i] * b[k - i]
        out[k] = acc % p
    return out


def inv_mod(a, n, p):
    """First ``n`` coefficients of ``1/a`` mod ``p``; ``a[0]`` must be a unit."""
    inv0 = pow(a[0], -1, p)
    la = len(a)
    out = [0] * n
    out[0] = inv0
    for k in range(1, n):
        acc = 0
        for i in range(1, min(k, la - 1) + 1):
            acc += a[i] * out[k - i]
        out[k] = (-acc * inv0) % p
    return out


def inv_int(a, n):
    """Numerators ``T`` of ``1/a`` for an integer sequence ``a``.

    The ``k``-th coefficient of ``1/a`` is ``T[k] / a[0]**(k+1)``.
    """
    a0 = a[0]
    la = len(a)
    out = [0] * n
    out[0] = 1
    pows = [1] * n
    for i in range(1, n):
        pows[i] = pows[i - 1] * a0
    for k in range(1, n):
        acc = 0
        for i in range(1, min(k, la - 1) + 1):
            acc += a[i] * out[k - i] * pows[i - 1]
        out[k] = -acc
    return out
