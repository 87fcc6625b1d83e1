"""Finite commutative rings of characteristic 2.

A *context* (``RingContext``) owns the arithmetic; values travel through the
matrix machinery as raw representatives (ints for ``F2[u]/(f)``, tuples for
Hadamard rings) and are wrapped in ``RingElement`` at the public surface.

Spec strings::

    gf2:<n>[:<modulus>]      binary field GF(2^n), default modulus from DEFAULT_MODULI
    quot:<modulus>           F2[u]/(f) for any f of degree >= 1
    had:<base-spec>:<k>      H_k(base), the 2^k x 2^k Hadamard matrices over base

Moduli accept any Python integer literal (``0x11b``, ``0b10000``, ``283``).
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import reduce as _fold

import numpy as np

from hadring import _core, gf2x
from hadring.errors import (
    ContextMismatchError,
    NotInvertibleError,
    RingSpecError,
)

# Low-weight irreducible polynomials; n = 8 uses the AES polynomial.
DEFAULT_MODULI = {
    1: 0x3,
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11B,
    9: 0x203,
    10: 0x409,
    11: 0x805,
    12: 0x1009,
    13: 0x2027,
    14: 0x4021,
    15: 0x8003,
    16: 0x10047,
}


# --------------------------------------------------------------------------
# randomness

def trial_rng(seed, *counters):
    """Counter-based generator for ``(seed, *counters)``.

    Distinct counter tuples give independent streams, so trials can run in
    any order or process and still draw identical values.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, *counters])))


def random_bits(rng, nbits):
    """Uniform integer in [0, 2**nbits)."""
    if nbits <= 0:
        return 0
    nbytes = (nbits + 7) // 8
    return int.from_bytes(rng.bytes(nbytes), "little") & ((1 << nbits) - 1)


# --------------------------------------------------------------------------
# specs

@dataclass(frozen=True)
class RingSpec:
    kind: str  # "binary-field" | "quotient-ring" | "hadamard-ring"
    modulus: int | None = None
    base: RingSpec | None = None
    k: int | None = None

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        text = text.strip()
        head, _, rest = text.partition(":")
        try:
            if head == "gf2":
                parts = rest.split(":")
                if len(parts) not in (1, 2) or not parts[0]:
                    raise RingSpecError(f"expected gf2:<n>[:<modulus>], got {text!r}")
                n = int(parts[0], 0)
                if len(parts) == 2:
                    modulus = int(parts[1], 0)
                elif n in DEFAULT_MODULI:
                    modulus = DEFAULT_MODULI[n]
                else:
                    raise RingSpecError(f"no default modulus for n={n}; pass gf2:{n}:<modulus>")
                if gf2x.degree(modulus) != n:
                    raise RingSpecError(f"modulus {modulus:#x} does not have degree {n}")
                return cls("binary-field", modulus=modulus)
            if head == "quot":
                if not rest or ":" in rest:
                    raise RingSpecError(f"expected quot:<modulus>, got {text!r}")
                return cls("quotient-ring", modulus=int(rest, 0))
            if head == "had":
                base_text, sep, k_text = rest.rpartition(":")
                if not sep or not base_text:
                    raise RingSpecError(f"expected had:<base-spec>:<k>, got {text!r}")
                return cls("hadamard-ring", base=cls.parse(base_text), k=int(k_text, 0))
        except ValueError as exc:
            if isinstance(exc, RingSpecError):
                raise
            raise RingSpecError(f"cannot parse ring spec {text!r}: {exc}") from None
        raise RingSpecError(f"unknown ring kind {head!r} in {text!r}")

    def __str__(self):
        if self.kind == "binary-field":
            return f"gf2:{gf2x.degree(self.modulus)}:{self.modulus:#x}"
        if self.kind == "quotient-ring":
            return f"quot:{self.modulus:#x}"
        return f"had:{self.base}:{self.k}"


def ring_make(spec: RingSpec | str) -> RingContext:
    """Build the context described by ``spec`` (a RingSpec or spec string)."""
    if isinstance(spec, str):
        spec = RingSpec.parse(spec)
    if spec.kind == "binary-field":
        ctx = BinaryField(spec.modulus)
    elif spec.kind == "quotient-ring":
        ctx = QuotientRing(spec.modulus)
    elif spec.kind == "hadamard-ring":
        from hadring.hadamard import HadamardRing

        ctx = HadamardRing(ring_make(spec.base), spec.k)
    else:
        raise RingSpecError(f"unknown ring kind {spec.kind!r}")
    if ctx.add(ctx.one, ctx.one) != ctx.zero:
        raise RingSpecError(f"{ctx.spec} does not have characteristic 2")
    return ctx


# --------------------------------------------------------------------------
# contexts

class RingContext:
    """Arithmetic on raw representatives of one finite commutative ring.

    Subclasses provide ``zero``, ``one``, ``add``, ``mul``, ``inverse_raw``,
    ``random_raw``, ``dump``/``load`` and a ``spec`` string.  Contexts are
    immutable and compare equal when they describe the same ring.
    """

    kind = "abstract"
    is_field = False
    zero = None
    one = None

    # -- raw arithmetic
    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def square(self, a):
        return self.mul(a, a)

    def is_zero(self, a):
        return a == self.zero

    def sum(self, values):
        return _fold(self.add, values, self.zero)

    def inverse_raw(self, a):
        raise NotImplementedError

    def random_raw(self, rng):
        raise NotImplementedError

    def dump(self, a):
        raise NotImplementedError

    def load(self, obj):
        raise NotImplementedError

    def matmul(self, A, B, n, m, p):
        """Row-major (n x m) @ (m x p) on raw entries."""
        add, mul, zero = self.add, self.mul, self.zero
        out = []
        for i in range(n):
            row = A[i * m:(i + 1) * m]
            for j in range(p):
                acc = zero
                for t in range(m):
                    acc = add(acc, mul(row[t], B[t * p + j]))
                out.append(acc)
        return out

    # -- element surface
    def element(self, raw) -> RingElement:
        return RingElement(self, raw)

    def __call__(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ctx != self:
                raise ContextMismatchError(f"{value!r} is not an element of {self.spec}")
            return value
        return self.element(self.coerce(value))

    def coerce(self, value):
        """Validate a raw representative (subclasses normalize here)."""
        return value

    def sample(self, rng) -> RingElement:
        return self.element(self.random_raw(rng))

    @property
    def spec(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.spec}>"


class PolyQuotientRing(RingContext):
    """F2[u]/(modulus) with elements as reduced bit-packed ints."""

    zero = 0

    def __init__(self, modulus: int):
        if not isinstance(modulus, int) or modulus < 0:
            raise RingSpecError(f"modulus must be a non-negative int, got {modulus!r}")
        self.modulus = modulus
        self.degree = gf2x.degree(modulus)
        if self.degree < 1:
            raise RingSpecError(f"modulus {modulus:#x} has degree < 1")
        self.one = 1
        self.order = 1 << self.degree

    def __eq__(self, other):
        return (
            type(other) is type(self) and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def add(self, a, b):
        return a ^ b

    def mul(self, a, b):
        return _core.mulmod(a, b, self.modulus)

    def sum(self, values):
        return _fold(operator.xor, values, 0)

    def inverse_raw(self, a):
        inv = gf2x.inverse_mod(a, self.modulus)
        if inv is None:
            raise NotInvertibleError(f"{a:x} is not invertible in {self.spec}")
        return inv

    def random_raw(self, rng):
        return random_bits(rng, self.degree)

    def coerce(self, value):
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"{self.spec} elements are ints, got {type(value).__name__}")
        if not 0 <= value < self.order:
            raise ValueError(f"{value:#x} is not a reduced representative of {self.spec}")
        return value

    def dump(self, a):
        return format(a, "x")

    def load(self, obj):
        if not isinstance(obj, str):
            raise ValueError(f"expected a hex string, got {obj!r}")
        return self.coerce(int(obj, 16))

    def matmul(self, A, B, n, m, p):
        return _core.matmul(A, B, n, m, p, self.modulus)

    def elements(self):
        """All ring elements in representative order."""
        return [self.element(a) for a in range(self.order)]


class BinaryField(PolyQuotientRing):
    kind = "binary-field"
    is_field = True

    def __init__(self, modulus: int):
        super().__init__(modulus)
        if not gf2x.is_irreducible(modulus):
            raise RingSpecError(f"modulus {modulus:#x} is reducible; GF(2^{self.degree}) needs an irreducible one")

    @property
    def spec(self):
        return f"gf2:{self.degree}:{self.modulus:#x}"


class QuotientRing(PolyQuotientRing):
    kind = "quotient-ring"

    def __init__(self, modulus: int):
        super().__init__(modulus)
        self.is_field = gf2x.is_irreducible(modulus)

    @property
    def spec(self):
        return f"quot:{self.modulus:#x}"


def GF(n: int, modulus: int | None = None) -> BinaryField:
    """GF(2^n), with the default modulus unless one is given."""
    if modulus is None:
        try:
            modulus = DEFAULT_MODULI[n]
        except KeyError:
            raise RingSpecError(f"no default modulus for n={n}") from None
    if gf2x.degree(modulus) != n:
        raise RingSpecError(f"modulus {modulus:#x} does not have degree {n}")
    return BinaryField(modulus)


# --------------------------------------------------------------------------
# elements

class RingElement:
    """Immutable element of a RingContext with operator overloads."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx: RingContext, raw):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("ring elements are immutable")

    def _other(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ContextMismatchError(f"{self.ctx.spec} vs {other.ctx.spec}")
        return other.raw

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self.ctx.element(self.ctx.add(self.raw, b))

    # characteristic 2: subtraction is addition, negation is the identity
    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self.ctx.element(self.ctx.mul(self.raw, b))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative int")
        ctx = self.ctx
        result, base = ctx.one, self.raw
        while e:
            if e & 1:
                result = ctx.mul(result, base)
            base = ctx.square(base)
            e >>= 1
        return ctx.element(result)

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self.ctx.element(self.ctx.mul(self.raw, self.ctx.inverse_raw(b)))

    def inverse(self) -> RingElement:
        return self.ctx.element(self.ctx.inverse_raw(self.raw))

    def square(self) -> RingElement:
        return self.ctx.element(self.ctx.square(self.raw))

    def is_zero(self) -> bool:
        return self.ctx.is_zero(self.raw)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.raw == other.raw and (other.ctx is self.ctx or other.ctx == self.ctx)

    def __hash__(self):
        return hash((self.ctx, self.raw))

    def dump(self):
        return self.ctx.dump(self.raw)

    def __repr__(self):
        return f"{self.ctx.spec}({self.ctx.dump(self.raw)})"


# spec-level operation names
def ring_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def ring_inverse(a: RingElement) -> RingElement:
    return a.inverse()


def ring_sample(ctx: RingContext, rng) -> RingElement:
    return ctx.sample(rng)
