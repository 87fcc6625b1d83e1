"""The algebra H_k(R) of 2^k x 2^k Hadamard matrices over a char-2 ring R.

A Hadamard matrix is stored by its first row (a_0, ..., a_{2^k-1}); the
full matrix is H[i][j] = a[i ^ j].  Products are XOR-convolutions of first
rows, computed directly: the Walsh-Hadamard transform would need to divide
by 2, which is impossible here.
"""
from __future__ import annotations

from hadring import _core
from hadring.errors import ContextMismatchError, NotHadamardError, NotInvertibleError, RingSpecError, ShapeError
from hadring.matrix import RingMatrix, mat_det
from hadring.rings import PolyQuotientRing, RingContext, RingElement, ring_make


class HadamardRing(RingContext):
    """H_k(base) as a ring context; raw values are first-row tuples."""

    kind = "hadamard-ring"

    def __init__(self, base: RingContext, k: int):
        if not isinstance(k, int) or k < 0:
            raise RingSpecError(f"Hadamard level k must be a non-negative int, got {k!r}")
        if base.add(base.one, base.one) != base.zero:
            raise RingSpecError(f"base ring {base.spec} does not have characteristic 2")
        self.base = base
        self.k = k
        self.size = 1 << k
        self.zero = (base.zero,) * self.size
        self.one = (base.one,) + (base.zero,) * (self.size - 1)
        self.is_field = k == 0 and base.is_field
        self._modulus = base.modulus if isinstance(base, PolyQuotientRing) else None

    def __eq__(self, other):
        return type(other) is HadamardRing and other.k == self.k and other.base == self.base

    def __hash__(self):
        return hash(("had", self.base, self.k))

    @property
    def spec(self):
        return f"had:{self.base.spec}:{self.k}"

    # -- raw arithmetic
    def add(self, a, b):
        if self._modulus is not None:
            return tuple([x ^ y for x, y in zip(a, b)])
        return tuple(map(self.base.add, a, b))

    def mul(self, a, b):
        if self._modulus is not None:
            return _core.xor_convolve(a, b, self._modulus)
        add, mul, zero = self.base.add, self.base.mul, self.base.zero
        n = self.size
        out = []
        for g in range(n):
            acc = zero
            for h in range(n):
                acc = add(acc, mul(a[h], b[h ^ g]))
            out.append(acc)
        return tuple(out)

    def matmul(self, A, B, n, m, p):
        if self._modulus is not None:
            return _core.had_matmul(A, B, n, m, p, self._modulus)
        return super().matmul(A, B, n, m, p)

    def eigenvalue_raw(self, a):
        return self.base.sum(a)

    def embed(self, r):
        """r in R as r * I_{2^k}."""
        return (r,) + (self.base.zero,) * (self.size - 1)

    def scalar_mul(self, r, a):
        mul = self.base.mul
        return tuple([mul(r, x) for x in a])

    def inverse_raw(self, a):
        # H^2 = lambda(H)^2 I, so H^-1 = lambda^-2 H exactly when lambda is a unit
        lam = self.eigenvalue_raw(a)
        try:
            inv = self.base.inverse_raw(self.base.square(lam))
        except NotInvertibleError:
            raise NotInvertibleError(f"Hadamard matrix with eigenvalue {self.base.dump(lam)} is not invertible") from None
        return self.scalar_mul(inv, a)

    def random_raw(self, rng):
        return tuple(self.base.random_raw(rng) for _ in range(self.size))

    def coerce(self, value):
        if isinstance(value, HadamardMatrix):
            if value.ctx != self:
                raise ContextMismatchError(f"{value!r} is not in {self.spec}")
            return value.raw
        row = tuple(value)
        if len(row) != self.size:
            raise ShapeError(f"H_{self.k} first rows have length {self.size}, got {len(row)}")
        out = []
        for x in row:
            if isinstance(x, RingElement):
                if x.ctx != self.base:
                    raise ContextMismatchError(f"{x!r} is not in {self.base.spec}")
                out.append(x.raw)
            else:
                out.append(self.base.coerce(x))
        return tuple(out)

    def dump(self, a):
        return [self.base.dump(x) for x in a]

    def load(self, obj):
        if not isinstance(obj, list) or len(obj) != self.size:
            raise ValueError(f"expected a list of {self.size} entries, got {obj!r}")
        return tuple(self.base.load(x) for x in obj)

    def element(self, raw) -> HadamardMatrix:
        return HadamardMatrix(self, raw)


class HadamardMatrix(RingElement):
    """Element of H_k(R), identified with its first row."""

    __slots__ = ()

    @classmethod
    def from_row(cls, base: RingContext, row) -> HadamardMatrix:
        row = list(row)
        size = len(row)
        if size == 0 or size & (size - 1):
            raise ShapeError(f"first row length must be a power of 2, got {size}")
        ctx = HadamardRing(base, size.bit_length() - 1)
        return cls(ctx, ctx.coerce(row))

    @property
    def k(self) -> int:
        return self.ctx.k

    @property
    def base(self) -> RingContext:
        return self.ctx.base

    @property
    def row(self) -> tuple:
        return tuple(self.ctx.base.element(x) for x in self.raw)

    def expand(self) -> RingMatrix:
        return had_expand(self)

    def eigenvalue(self) -> RingElement:
        return had_eigenvalue(self)

    def det(self) -> RingElement:
        return had_det(self)

    def decompose(self):
        return had_decompose(self)

    def dump(self):
        return {"ring": self.base.spec, "k": self.k, "row": self.ctx.dump(self.raw)}

    @classmethod
    def load(cls, obj) -> HadamardMatrix:
        base = ring_make(obj["ring"])
        ctx = HadamardRing(base, int(obj["k"]))
        return cls(ctx, ctx.load(obj["row"]))

    def __repr__(self):
        return f"HadamardMatrix<{self.base.spec}, k={self.k}>({self.ctx.dump(self.raw)})"


def _hadamard(H) -> HadamardMatrix:
    if not isinstance(H, HadamardMatrix):
        raise TypeError(f"expected HadamardMatrix, got {type(H).__name__}")
    return H


def had_expand(H: HadamardMatrix) -> RingMatrix:
    """Full 2^k x 2^k matrix with entry (i, j) = a[i ^ j]."""
    a = _hadamard(H).raw
    n = len(a)
    return RingMatrix(H.base, n, n, [a[i ^ j] for i in range(n) for j in range(n)])


def had_from_full(M: RingMatrix) -> HadamardMatrix:
    """Recover the first row of a Hadamard matrix, checking every entry."""
    n = M.rows
    if M.cols != n:
        raise ShapeError(f"expected a square matrix, got {M.rows}x{M.cols}")
    if n == 0 or n & (n - 1):
        raise ShapeError(f"side {n} is not a power of 2")
    row = M.entries[:n]
    for i in range(n):
        for j in range(n):
            if M.raw(i, j) != row[i ^ j]:
                raise NotHadamardError(f"entry ({i}, {j}) differs from first-row entry {i ^ j}", (i, j))
    ctx = HadamardRing(M.ctx, n.bit_length() - 1)
    return HadamardMatrix(ctx, row)


def _pair(A, B):
    _hadamard(A), _hadamard(B)
    if A.ctx != B.ctx:
        raise ContextMismatchError(f"{A.ctx.spec} vs {B.ctx.spec}")


def had_mul(A: HadamardMatrix, B: HadamardMatrix) -> HadamardMatrix:
    _pair(A, B)
    return A * B


def had_add(A: HadamardMatrix, B: HadamardMatrix) -> HadamardMatrix:
    _pair(A, B)
    return A + B


def had_eigenvalue(H: HadamardMatrix) -> RingElement:
    """The unique eigenvalue: the sum of the first row."""
    return H.base.element(H.ctx.eigenvalue_raw(_hadamard(H).raw))


def had_det(H: HadamardMatrix) -> RingElement:
    """Determinant of the expanded matrix via the division-free charpoly."""
    return mat_det(had_expand(H))


def had_kron_basis(base: RingContext, k: int, i: int) -> HadamardMatrix:
    """J2^(i_0) (x) ... (x) J2^(i_{k-1}): the permutation matrix with first row e_i.

    Digits of ``i`` are read most significant first, matching the left-to-right
    order of the Kronecker factors.
    """
    ctx = HadamardRing(base, k)
    if not 0 <= i < ctx.size:
        raise IndexError(f"basis index {i} out of range for k={k}")
    row = [base.zero] * ctx.size
    row[i] = base.one
    return HadamardMatrix(ctx, tuple(row))


def had_decompose(H: HadamardMatrix):
    """Nonzero terms (a_i, i) of H = sum a_i J2^i."""
    base = _hadamard(H).base
    return [(base.element(a), i) for i, a in enumerate(H.raw) if not base.is_zero(a)]


def had_recompose(base: RingContext, k: int, terms) -> HadamardMatrix:
    """Inverse of had_decompose: sum of a_i * had_kron_basis(i)."""
    ctx = HadamardRing(base, k)
    acc = ctx.element(ctx.zero)
    for coeff, i in terms:
        acc = acc + ctx.element(ctx.scalar_mul(coeff.raw, had_kron_basis(base, k, i).raw))
    return acc
