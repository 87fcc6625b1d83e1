"""Independent reference computations used only by the tests.

Nothing here imports the library's arithmetic: elements of F2[u]/(f) are
plain ints and matrices are lists of lists.
"""
from itertools import permutations


def peasant_mul(a, b, modulus):
    """Shift-and-add multiplication with reduction at every step."""
    deg = modulus.bit_length() - 1
    r = 0
    a = poly_mod(a, modulus)
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= modulus
    return r


def poly_mod(a, b):
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def brute_irreducible(f):
    """No factor of degree 1..deg/2, by trial division."""
    n = f.bit_length() - 1
    if n < 1:
        return False
    for g in range(2, 1 << (n // 2 + 1)):
        if 1 <= g.bit_length() - 1 <= n // 2 and poly_mod(f, g) == 0:
            return False
    return True


def brute_inverse(a, modulus):
    n = 1 << (modulus.bit_length() - 1)
    for b in range(n):
        if peasant_mul(a, b, modulus) == 1:
            return b
    return None


def matmul(A, B, modulus):
    n, m, p = len(A), len(B), len(B[0])
    out = [[0] * p for _ in range(n)]
    for i in range(n):
        for j in range(p):
            acc = 0
            for t in range(m):
                acc ^= peasant_mul(A[i][t], B[t][j], modulus)
            out[i][j] = acc
    return out


def leibniz_det(A, modulus):
    n = len(A)
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for i in range(n):
            term = peasant_mul(term, A[i][perm[i]], modulus)
        total ^= term
    return total


def kron(A, B, modulus):
    return [
        [peasant_mul(A[i1][j1], B[i2][j2], modulus) for j1 in range(len(A[0])) for j2 in range(len(B[0]))]
        for i1 in range(len(A))
        for i2 in range(len(B))
    ]


def gf2_rank(rows):
    """Rank over GF(2) of bit-vectors given as ints."""
    basis = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    return len(basis)


def krylov_degree_gf2(A):
    """Least l with vec(A^l) in span of lower powers, over GF(2), by ranks."""
    n = len(A)
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    vecs = []
    for l in range(n + 1):
        vecs.append(int("".join(str(x) for row in P for x in row), 2))
        if gf2_rank(vecs) < len(vecs):
            return l
        P = matmul(P, A, 0b10)
    raise AssertionError("unreachable")
