# Compiled twins of the functions in _fallback.py.
#
# Native path: modulus degree <= 32, so operands fit in 32 bits and every
# unreduced product (and XOR-sum of products) fits in a uint64.  Anything
# wider is delegated to the pure Python implementation.

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

from hadring import _fallback

DEF MAX_DEGREE = 32


cdef inline uint64_t _clmul(uint64_t a, uint64_t b) noexcept nogil:
    cdef uint64_t r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


cdef inline int _bitlen(uint64_t x) noexcept nogil:
    if x == 0:
        return 0
    return 64 - __builtin_clzll(x)


cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil


cdef inline uint64_t _reduce(uint64_t x, uint64_t modulus, int d) noexcept nogil:
    # d = bit length of modulus
    cdef int n = _bitlen(x)
    while n >= d:
        x ^= modulus << (n - d)
        n = _bitlen(x)
    return x


cdef inline bint _native(object modulus):
    return modulus.bit_length() - 1 <= MAX_DEGREE


def clmul(a, b):
    if a.bit_length() <= 32 and b.bit_length() <= 32:
        return _clmul(a, b)
    return _fallback.clmul(a, b)


def reduce(x, modulus):
    if x.bit_length() <= 64 and _native(modulus):
        return _reduce(x, modulus, modulus.bit_length())
    return _fallback.reduce(x, modulus)


def mulmod(a, b, modulus):
    if not _native(modulus):
        return _fallback.mulmod(a, b, modulus)
    cdef uint64_t m = modulus
    return _reduce(_clmul(a, b), m, modulus.bit_length())


def xor_convolve(a, b, modulus):
    if not _native(modulus):
        return _fallback.xor_convolve(a, b, modulus)
    cdef Py_ssize_t n = len(a), g, h
    cdef uint64_t m = modulus
    cdef int d = modulus.bit_length()
    cdef uint64_t acc, ah
    cdef uint64_t *buf = <uint64_t *> malloc(2 * n * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef uint64_t *bv = buf + n
    try:
        for h in range(n):
            buf[h] = a[h]
            bv[h] = b[h]
        out = []
        for g in range(n):
            acc = 0
            for h in range(n):
                ah = buf[h]
                if ah:
                    acc ^= _clmul(ah, bv[h ^ g])
            out.append(_reduce(acc, m, d))
        return tuple(out)
    finally:
        free(buf)


def matmul(A, B, Py_ssize_t n, Py_ssize_t m, Py_ssize_t p, modulus):
    if not _native(modulus):
        return _fallback.matmul(A, B, n, m, p, modulus)
    cdef uint64_t mod = modulus
    cdef int d = modulus.bit_length()
    cdef Py_ssize_t i, j, t
    cdef uint64_t acc, x
    cdef uint64_t *a = <uint64_t *> malloc((n * m + m * p + 1) * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    cdef uint64_t *b = a + n * m
    try:
        for i in range(n * m):
            a[i] = A[i]
        for i in range(m * p):
            b[i] = B[i]
        out = []
        for i in range(n):
            for j in range(p):
                acc = 0
                for t in range(m):
                    x = a[i * m + t]
                    if x:
                        acc ^= _clmul(x, b[t * p + j])
                out.append(_reduce(acc, mod, d))
        return out
    finally:
        free(a)


def had_matmul(A, B, Py_ssize_t n, Py_ssize_t m, Py_ssize_t p, modulus):
    if not A or not B:
        return [()] * (n * p)
    if not _native(modulus):
        return _fallback.had_matmul(A, B, n, m, p, modulus)
    cdef Py_ssize_t L = len(A[0])
    cdef uint64_t mod = modulus
    cdef int d = modulus.bit_length()
    cdef Py_ssize_t i, j, t, g, h, q
    cdef uint64_t ah
    cdef uint64_t *a = <uint64_t *> malloc((n * m * L + m * p * L + L + 1) * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    cdef uint64_t *b = a + n * m * L
    cdef uint64_t *acc = b + m * p * L
    cdef uint64_t *ae
    cdef uint64_t *be
    try:
        for i in range(n * m):
            row = A[i]
            for q in range(L):
                a[i * L + q] = row[q]
        for i in range(m * p):
            row = B[i]
            for q in range(L):
                b[i * L + q] = row[q]
        out = []
        for i in range(n):
            for j in range(p):
                for g in range(L):
                    acc[g] = 0
                for t in range(m):
                    ae = a + (i * m + t) * L
                    be = b + (t * p + j) * L
                    for h in range(L):
                        ah = ae[h]
                        if not ah:
                            continue
                        for g in range(L):
                            acc[g] ^= _clmul(ah, be[h ^ g])
                out.append(tuple([_reduce(acc[g], mod, d) for g in range(L)]))
        return out
    finally:
        free(a)
