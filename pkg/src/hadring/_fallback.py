"""Pure Python hot kernels.

Every function here has a twin with the same signature in ``_kernels.pyx``.
Ring elements of ``F2[u]/(f)`` are ints (bit i = coefficient of u^i), and
``modulus`` is the bit-encoded f.  Addition is XOR, so sums of products are
accumulated unreduced and reduced once.
"""


def clmul(a, b):
    """Carry-less product of two bit-encoded F2 polynomials."""
    if a.bit_length() > b.bit_length():
        a, b = b, a
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def reduce(x, modulus):
    """Remainder of ``x`` modulo ``modulus`` in F2[u]."""
    d = modulus.bit_length()
    n = x.bit_length()
    while n >= d:
        x ^= modulus << (n - d)
        n = x.bit_length()
    return x


def mulmod(a, b, modulus):
    return reduce(clmul(a, b), modulus)


def xor_convolve(a, b, modulus):
    """First row of the product of two Hadamard matrices.

    ``c[g] = sum_h a[h] * b[h ^ g]`` with entries in F2[u]/(modulus).
    """
    n = len(a)
    out = []
    for g in range(n):
        acc = 0
        for h in range(n):
            ah = a[h]
            if ah:
                acc ^= clmul(ah, b[h ^ g])
        out.append(reduce(acc, modulus))
    return tuple(out)


def matmul(A, B, n, m, p, modulus):
    """Row-major (n x m) @ (m x p) over F2[u]/(modulus)."""
    out = []
    for i in range(n):
        row = A[i * m:(i + 1) * m]
        for j in range(p):
            acc = 0
            for t in range(m):
                x = row[t]
                if x:
                    acc ^= clmul(x, B[t * p + j])
            out.append(reduce(acc, modulus))
    return out


def had_matmul(A, B, n, m, p, modulus):
    """Row-major matrix product over H_k(F2[u]/(modulus)).

    Entries are tuples holding the first row of each Hadamard block.
    """
    if not A or not B:
        return [()] * (n * p)
    size = len(A[0])
    out = []
    for i in range(n):
        row = A[i * m:(i + 1) * m]
        for j in range(p):
            acc = [0] * size
            for t in range(m):
                a = row[t]
                b = B[t * p + j]
                for h in range(size):
                    ah = a[h]
                    if not ah:
                        continue
                    for g in range(size):
                        acc[g] ^= clmul(ah, b[h ^ g])
            out.append(tuple(reduce(x, modulus) for x in acc))
    return out
