"""Dense matrices and univariate polynomials over any RingContext.

Everything here is division-free, so it works over rings with zero
divisors and over H_k(R).  All supported contexts have characteristic 2,
which is why no sign bookkeeping appears below: -x == x.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from hadring.errors import ContextMismatchError, OracleLimitError, ShapeError
from hadring.rings import RingContext, RingElement, ring_make

ORACLE_LIMIT = 6


def _same(a: RingContext, b: RingContext):
    if a is not b and a != b:
        raise ContextMismatchError(f"{a.spec} vs {b.spec}")


def _raw_of(ctx, value):
    if isinstance(value, RingElement):
        _same(ctx, value.ctx)
        return value.raw
    return ctx.coerce(value)


class RingMatrix:
    """Immutable row-major matrix of raw representatives over ``ctx``."""

    __slots__ = ("ctx", "rows", "cols", "entries")

    def __init__(self, ctx: RingContext, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    # -- construction
    @classmethod
    def from_rows(cls, ctx: RingContext, rows) -> RingMatrix:
        """Build from nested sequences of raw values or RingElements."""
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(ctx, len(rows), ncols, [_raw_of(ctx, x) for r in rows for x in r])

    @classmethod
    def identity(cls, ctx: RingContext, n: int) -> RingMatrix:
        zero, one = ctx.zero, ctx.one
        return cls(ctx, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, ctx: RingContext, rows: int, cols: int | None = None) -> RingMatrix:
        cols = rows if cols is None else cols
        return cls(ctx, rows, cols, [ctx.zero] * (rows * cols))

    @classmethod
    def random(cls, ctx: RingContext, rows: int, cols: int, rng) -> RingMatrix:
        return cls(ctx, rows, cols, [ctx.random_raw(rng) for _ in range(rows * cols)])

    # -- access
    @property
    def shape(self):
        return (self.rows, self.cols)

    def raw(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def __getitem__(self, ij) -> RingElement:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.ctx.element(self.entries[i * self.cols + j])

    def to_rows(self):
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        z = self.ctx.is_zero
        return all(z(x) for x in self.entries)

    def submatrix(self, rows, cols) -> RingMatrix:
        rows, cols = list(rows), list(cols)
        return RingMatrix(self.ctx, len(rows), len(cols), [self.raw(i, j) for i in rows for j in cols])

    def map(self, fn, ctx: RingContext | None = None) -> RingMatrix:
        """Apply ``fn`` to every raw entry; ``ctx`` is the result context."""
        return RingMatrix(ctx or self.ctx, self.rows, self.cols, [fn(x) for x in self.entries])

    # -- arithmetic
    def _check(self, other: RingMatrix):
        if not isinstance(other, RingMatrix):
            raise TypeError(f"expected RingMatrix, got {type(other).__name__}")
        _same(self.ctx, other.ctx)

    def __add__(self, other: RingMatrix) -> RingMatrix:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        add = self.ctx.add
        return RingMatrix(self.ctx, self.rows, self.cols, map(add, self.entries, other.entries))

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, RingElement):
            return self.scale(_raw_of(self.ctx, other))
        if not isinstance(other, RingMatrix):
            return NotImplemented
        self._check(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        out = self.ctx.matmul(self.entries, other.entries, self.rows, self.cols, other.cols)
        return RingMatrix(self.ctx, self.rows, other.cols, out)

    def __rmul__(self, other):
        if isinstance(other, RingElement):
            return self.scale(_raw_of(self.ctx, other))
        return NotImplemented

    __matmul__ = __mul__

    def scale(self, c) -> RingMatrix:
        mul = self.ctx.mul
        return RingMatrix(self.ctx, self.rows, self.cols, [mul(c, x) for x in self.entries])

    def add_scalar(self, c) -> RingMatrix:
        """``self + c*I`` for square ``self``."""
        n = self.cols
        out = list(self.entries)
        add = self.ctx.add
        for i in range(min(self.rows, n)):
            out[i * n + i] = add(out[i * n + i], c)
        return RingMatrix(self.ctx, self.rows, self.cols, out)

    def __pow__(self, e: int) -> RingMatrix:
        if not self.is_square():
            raise ShapeError("power of a non-square matrix")
        if e < 0:
            raise ValueError("negative matrix power")
        result = RingMatrix.identity(self.ctx, self.rows)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def transpose(self) -> RingMatrix:
        r, c = self.rows, self.cols
        return RingMatrix(self.ctx, c, r, [self.entries[i * c + j] for j in range(c) for i in range(r)])

    @property
    def T(self):
        return self.transpose()

    def kron(self, other: RingMatrix) -> RingMatrix:
        self._check(other)
        mul = self.ctx.mul
        r1, c1, r2, c2 = self.rows, self.cols, other.rows, other.cols
        out = []
        for i1 in range(r1):
            for i2 in range(r2):
                for j1 in range(c1):
                    a = self.entries[i1 * c1 + j1]
                    out.extend(mul(a, other.entries[i2 * c2 + j2]) for j2 in range(c2))
        return RingMatrix(self.ctx, r1 * r2, c1 * c2, out)

    # -- equality / display
    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and (self.ctx is other.ctx or self.ctx == other.ctx)
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.ctx, self.rows, self.cols, self.entries))

    def __repr__(self):
        d = self.ctx.dump
        body = "; ".join(" ".join(str(d(self.raw(i, j))) for j in range(self.cols)) for i in range(self.rows))
        return f"RingMatrix<{self.ctx.spec}>[{body}]"

    # -- JSON
    def dump(self) -> dict:
        return {
            "ring": self.ctx.spec,
            "rows": self.rows,
            "cols": self.cols,
            "entries": [self.ctx.dump(x) for x in self.entries],
        }

    @classmethod
    def load(cls, obj: dict) -> RingMatrix:
        ctx = ring_make(obj["ring"])
        rows, cols = int(obj["rows"]), int(obj["cols"])
        return cls(ctx, rows, cols, [ctx.load(x) for x in obj["entries"]])


# spec-level names for the arithmetic bundle
def mat_identity(ctx, n):
    return RingMatrix.identity(ctx, n)


def mat_add(A, B):
    return A + B


def mat_mul(A, B):
    return A * B


def mat_scale(A, c):
    return A.scale(_raw_of(A.ctx, c))


def mat_pow(A, e):
    return A ** e


def mat_transpose(A):
    return A.transpose()


class RingPolynomial:
    """Univariate polynomial, coefficients ascending by degree, trailing zeros stripped."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: RingContext, coeffs):
        coeffs = [_raw_of(ctx, c) if isinstance(c, RingElement) else c for c in coeffs]
        while coeffs and ctx.is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def x(cls, ctx):
        return cls(ctx, [ctx.zero, ctx.one])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> RingElement:
        raw = self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero
        return self.ctx.element(raw)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def map(self, fn, ctx: RingContext) -> RingPolynomial:
        return RingPolynomial(ctx, [fn(c) for c in self.coeffs])

    def __add__(self, other: RingPolynomial) -> RingPolynomial:
        _same(self.ctx, other.ctx)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.ctx.add
        return RingPolynomial(self.ctx, [add(x, b[i]) if i < len(b) else x for i, x in enumerate(a)])

    __sub__ = __add__

    def __mul__(self, other: RingPolynomial) -> RingPolynomial:
        _same(self.ctx, other.ctx)
        ctx = self.ctx
        if not self.coeffs or not other.coeffs:
            return RingPolynomial(ctx, [])
        out = [ctx.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return RingPolynomial(ctx, out)

    def __pow__(self, e: int) -> RingPolynomial:
        result = RingPolynomial(self.ctx, [self.ctx.one])
        for _ in range(e):
            result = result * self
        return result

    def divmod(self, divisor: RingPolynomial):
        """Long division; the divisor's leading coefficient must be invertible."""
        _same(self.ctx, divisor.ctx)
        if not divisor.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        ctx = self.ctx
        inv_lead = ctx.inverse_raw(divisor.coeffs[-1])
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [ctx.zero] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = ctx.mul(rem[i], inv_lead)
            if ctx.is_zero(c):
                continue
            quot[i - d] = c
            for j, b in enumerate(divisor.coeffs):
                rem[i - d + j] = ctx.add(rem[i - d + j], ctx.mul(c, b))
        return RingPolynomial(ctx, quot), RingPolynomial(ctx, rem)

    def __call__(self, x: RingElement) -> RingElement:
        _same(self.ctx, x.ctx)
        ctx = self.ctx
        acc = ctx.zero
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x.raw), c)
        return ctx.element(acc)

    def __eq__(self, other):
        if not isinstance(other, RingPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.ctx is other.ctx or self.ctx == other.ctx)

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __repr__(self):
        d = self.ctx.dump
        terms = [f"{d(c)}*x^{i}" for i, c in enumerate(self.coeffs) if not self.ctx.is_zero(c)]
        return f"RingPolynomial<{self.ctx.spec}>({' + '.join(terms) or '0'})"

    def dump(self) -> dict:
        return {"ring": self.ctx.spec, "coeffs": [self.ctx.dump(c) for c in self.coeffs]}

    @classmethod
    def load(cls, obj: dict) -> RingPolynomial:
        ctx = ring_make(obj["ring"])
        return cls(ctx, [ctx.load(c) for c in obj["coeffs"]])


# --------------------------------------------------------------------------
# characteristic polynomial

def _require_square(M: RingMatrix):
    if not M.is_square():
        raise ShapeError(f"expected a square matrix, got {M.rows}x{M.cols}")


def charpoly_berkowitz(M: RingMatrix) -> RingPolynomial:
    """det(xI - M) by Berkowitz's division-free recurrence.

    Grows the leading principal submatrix one row/column at a time; each
    step multiplies the running coefficient vector by a lower-triangular
    Toeplitz matrix with first column (1, a_rr, R C, R A C, R A^2 C, ...).
    """
    _require_square(M)
    ctx, n, A = M.ctx, M.rows, M.entries
    add, mul, zero, one = ctx.add, ctx.mul, ctx.zero, ctx.one
    p = [one]  # descending coefficients of the current leading block
    for r in range(n):
        row = [A[r * n + j] for j in range(r)]
        v = [A[i * n + r] for i in range(r)]
        t = [one, A[r * n + r]]
        for step in range(r):
            acc = zero
            for j in range(r):
                acc = add(acc, mul(row[j], v[j]))
            t.append(acc)
            if step + 1 < r:
                nv = []
                for i in range(r):
                    acc = zero
                    base = i * n
                    for j in range(r):
                        acc = add(acc, mul(A[base + j], v[j]))
                    nv.append(acc)
                v = nv
        new = []
        for i in range(r + 2):
            acc = zero
            for j in range(max(0, i - r - 1), min(i, r) + 1):
                acc = add(acc, mul(t[i - j], p[j]))
            new.append(acc)
        p = new
    return RingPolynomial(ctx, p[::-1])


def _leibniz_det(ctx, A, n, idx):
    # char 2: every permutation contributes with sign +1
    add, mul = ctx.add, ctx.mul
    total = ctx.zero
    for perm in permutations(idx):
        term = ctx.one
        for r, c in zip(idx, perm):
            term = mul(term, A[r * n + c])
        total = add(total, term)
    return total


def charpoly_minors_oracle(M: RingMatrix, limit: int = ORACLE_LIMIT) -> RingPolynomial:
    """Characteristic polynomial from sums of principal minors.

    The coefficient of x^(s-k) is the sum of all k x k principal minors,
    each expanded by the Leibniz formula.  Brute force; cross-check only.
    """
    _require_square(M)
    n = M.rows
    if n > limit:
        raise OracleLimitError(f"minors oracle is limited to {limit}x{limit}, got {n}x{n}")
    ctx = M.ctx
    coeffs = [ctx.zero] * (n + 1)
    coeffs[n] = ctx.one
    for k in range(1, n + 1):
        coeffs[n - k] = ctx.sum(_leibniz_det(ctx, M.entries, n, idx) for idx in combinations(range(n), k))
    return RingPolynomial(ctx, coeffs)


def mat_det(M: RingMatrix) -> RingElement:
    """Determinant, read off the constant term of the Berkowitz polynomial."""
    return charpoly_berkowitz(M).coeff(0)


# --------------------------------------------------------------------------
# evaluation at matrices

def poly_eval_at_matrix(p: RingPolynomial, M: RingMatrix, mode: str = "scalar") -> RingMatrix:
    """Sum of p_i M^i with M^0 = I.

    ``p`` may live over M's own ring, or over the base ring R of a Hadamard
    ring H_k(R).  In the latter case ``mode="scalar"`` lets each p_i act on
    the entries of M^i directly and ``mode="lift"`` first embeds p_i as
    p_i * I_{2^k} and evaluates over H_k(R); the two agree.
    """
    _require_square(M)
    if p.ctx is M.ctx or p.ctx == M.ctx:
        coeffs = p.coeffs
    elif getattr(M.ctx, "base", None) == p.ctx:
        if mode == "lift":
            coeffs = [M.ctx.embed(c) for c in p.coeffs]
        elif mode == "scalar":
            act = M.ctx.scalar_mul
            n = M.rows
            acc = RingMatrix.zeros(M.ctx, n)
            power = RingMatrix.identity(M.ctx, n)
            for i, c in enumerate(p.coeffs):
                if not p.ctx.is_zero(c):
                    acc = acc + power.map(lambda x, c=c: act(c, x))
                if i + 1 < len(p.coeffs):
                    power = power * M
            return acc
        else:
            raise ValueError(f"unknown mode {mode!r}")
    else:
        raise ContextMismatchError(f"cannot evaluate a polynomial over {p.ctx.spec} at a matrix over {M.ctx.spec}")
    n = M.rows
    acc = RingMatrix.zeros(M.ctx, n)
    for c in reversed(coeffs):
        acc = (acc * M).add_scalar(c)
    return acc


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an identity check; truthy iff it held."""

    ok: bool
    residual: RingMatrix | None = None

    def __bool__(self):
        return self.ok


def cayley_hamilton_check(M: RingMatrix) -> CheckResult:
    """Evaluate M's own characteristic polynomial at M; the residual must vanish."""
    residual = poly_eval_at_matrix(charpoly_berkowitz(M), M)
    return CheckResult(residual.is_zero(), residual)


def frobenius_eval_check(p: RingPolynomial, M: RingMatrix) -> CheckResult:
    """Compare p(M)^2 with the termwise sum of p_i^2 M^(2i)."""
    _require_square(M)
    lhs = poly_eval_at_matrix(p, M)
    lhs = lhs * lhs
    n = M.rows
    M2 = M * M
    squares = RingPolynomial(p.ctx, [p.ctx.square(c) for c in p.coeffs])
    rhs = RingMatrix.zeros(M.ctx, n)
    power = RingMatrix.identity(M.ctx, n)
    for i in range(len(squares.coeffs)):
        c = squares.coeffs[i]
        if not p.ctx.is_zero(c):
            if p.ctx is M.ctx or p.ctx == M.ctx:
                term = power.scale(c)
            else:
                act = M.ctx.scalar_mul
                term = power.map(lambda x, c=c: act(c, x))
            rhs = rhs + term
        power = power * M2
    residual = lhs + rhs
    return CheckResult(residual.is_zero(), residual)
