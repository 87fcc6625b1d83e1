"""Arithmetic on bit-encoded polynomials over F2 (bit i = coefficient of u^i)."""
from hadring._core import clmul, reduce


def degree(f):
    """Degree of ``f``; -1 for the zero polynomial."""
    return f.bit_length() - 1


def divmod_(a, b):
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = b.bit_length()
    n = a.bit_length()
    while n >= db:
        shift = n - db
        q ^= 1 << shift
        a ^= b << shift
        n = a.bit_length()
    return q, a


def gcd(a, b):
    while b:
        a, b = b, reduce(a, b)
    return a


def inverse_mod(a, modulus):
    """Inverse of ``a`` in F2[u]/(modulus), or None when gcd(a, modulus) != 1."""
    r0, r1 = modulus, reduce(a, modulus)
    s0, s1 = 0, 1
    while r1:
        q, r = divmod_(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ clmul(q, s1)
    if r0 != 1:
        return None
    return reduce(s0, modulus)


def powmod(a, e, modulus):
    result = reduce(1, modulus)
    a = reduce(a, modulus)
    while e:
        if e & 1:
            result = reduce(clmul(result, a), modulus)
        a = reduce(clmul(a, a), modulus)
        e >>= 1
    return result


def _frobenius_power(f, times):
    """u^(2^times) mod f by repeated squaring."""
    x = reduce(0b10, f)
    for _ in range(times):
        x = reduce(clmul(x, x), f)
    return x


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f):
    """Rabin's test over F2."""
    n = degree(f)
    if n < 1:
        return False
    u = reduce(0b10, f)
    if _frobenius_power(f, n) != u:
        return False
    for p in _prime_factors(n):
        h = _frobenius_power(f, n // p) ^ u
        if gcd(f, h) != 1:
            return False
    return True
