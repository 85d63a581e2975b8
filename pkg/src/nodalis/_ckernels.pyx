# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of ``_pykernels``; semantics are identical."""

ctypedef long long i64

cdef i64 _SMALL = 2147483647  # residues below 2**31 keep products inside i64


def conv_int(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, hi
    cdef list out = [0] * n
    cdef object ai
    for i in range(min(la, n)):
        ai = a[i]
        if ai == 0:
            continue
        hi = min(lb, n - i)
        for j in range(hi):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def conv_mod(list a, list b, Py_ssize_t n, object p):
    if p > _SMALL:
        from ._pykernels import conv_mod as slow
        return slow(a, b, n, p)
    cdef i64 pp = p
    cdef Py_ssize_t la = len(a), lb = len(b), i, k, lo, hi
    cdef i64 acc
    cdef i64[:] av, bv
    out = [0] * n
    if la == 0 or lb == 0:
        return out
    import array
    aa = array.array("q", a)
    bb = array.array("q", b)
    av = aa
    bv = bb
    for k in range(n):
        acc = 0
        lo = k - lb + 1
        if lo < 0:
            lo = 0
        hi = k if k < la - 1 else la - 1
        for i in range(lo, hi + 1):
            acc = (acc + av[i] * bv[k - i]) % pp
        out[k] = acc
    return out


def inv_mod(list a, Py_ssize_t n, object p):
    if p > _SMALL:
        from ._pykernels import inv_mod as slow
        return slow(a, n, p)
    cdef i64 pp = p
    cdef i64 inv0 = pow(a[0], -1, p)
    cdef Py_ssize_t la = len(a), k, i, hi
    cdef i64 acc
    import array
    aa = array.array("q", a)
    oo = array.array("q", [0] * n)
    cdef i64[:] av = aa
    cdef i64[:] ov = oo
    ov[0] = inv0
    for k in range(1, n):
        acc = 0
        hi = k if k < la - 1 else la - 1
        for i in range(1, hi + 1):
            acc = (acc + av[i] * ov[k - i]) % pp
        acc = (pp - acc) % pp
        ov[k] = (acc * inv0) % pp
    return list(oo)


def inv_int(list a, Py_ssize_t n):
    cdef object a0 = a[0]
    cdef Py_ssize_t la = len(a), k, i, hi
    cdef list out = [0] * n
    cdef list pows = [1] * n
    cdef object acc
    out[0] = 1
    for i in range(1, n):
        pows[i] = pows[i - 1] * a0
    for k in range(1, n):
        acc = 0
        hi = k if k < la - 1 else la - 1
        for i in range(1, hi + 1):
            acc = acc + a[i] * out[k - i] * pows[i - 1]
        out[k] = -acc
    return out
