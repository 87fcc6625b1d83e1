"""Invariant-subspace diagnostics for Cauchy-built linear layers.

The quantity of interest is the power-dependency degree l of a t x t layer
matrix M: the least l with M^l in the span of I, M, ..., M^(l-1).  A layer
then admits an invariant subspace of dimension at least t - l.  For
block-Hadamard layers (s x s blocks of size 2^k) l <= 2s, improving on the
older (k+1)s.

The exact constants of any published cipher are not reproduced here;
``starkad_like_spec`` builds a Cauchy layer with the same i xor j structure.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from hadring.errors import CauchyError, NotAFieldError, NotBlockHadamardError, ShapeError
from hadring.hadamard import HadamardRing
from hadring.matrix import RingMatrix, RingPolynomial
from hadring.rings import RingContext, RingElement


def _require_field(ctx: RingContext):
    if not ctx.is_field:
        raise NotAFieldError(f"{ctx.spec} is not a field")


@dataclass(frozen=True)
class CauchySpec:
    field: RingContext
    x: tuple
    y: tuple

    def __post_init__(self):
        _require_field(self.field)
        conv = [tuple(v.raw if isinstance(v, RingElement) else self.field.coerce(v) for v in seq) for seq in (self.x, self.y)]
        object.__setattr__(self, "x", conv[0])
        object.__setattr__(self, "y", conv[1])
        if len(self.x) != len(self.y):
            raise CauchyError(f"x and y must have equal length, got {len(self.x)} and {len(self.y)}")
        for name, seq in (("x", self.x), ("y", self.y)):
            seen = {}
            for i, v in enumerate(seq):
                if v in seen:
                    raise CauchyError(f"{name}[{seen[v]}] == {name}[{i}]")
                seen[v] = i
        for i, xi in enumerate(self.x):
            for j, yj in enumerate(self.y):
                if self.field.is_zero(self.field.add(xi, yj)):
                    raise CauchyError(f"x[{i}] + y[{j}] = 0")


def cauchy_build(spec: CauchySpec) -> RingMatrix:
    """t x t matrix with entry (i, j) = 1 / (x_i + y_j)."""
    F = spec.field
    t = len(spec.x)
    return RingMatrix(F, t, t, [F.inverse_raw(F.add(xi, yj)) for xi in spec.x for yj in spec.y])


def starkad_like_spec(field: RingContext, t: int) -> CauchySpec:
    """x_i = i, y_j = t xor j, so every entry depends on i xor j only."""
    _require_field(field)
    if t < 1 or t & (t - 1):
        raise CauchyError(f"t must be a power of 2, got {t}")
    if field.order <= 2 * t:
        raise CauchyError(f"field of order {field.order} is too small for t={t} (needs order > {2 * t})")
    return CauchySpec(field, tuple(range(t)), tuple(t ^ j for j in range(t)))


def block_hadamard_detect(M: RingMatrix, k: int) -> RingMatrix:
    """Partition M into 2^k x 2^k blocks and read each as a Hadamard matrix."""
    n = 1 << k
    if not M.is_square():
        raise ShapeError(f"expected a square matrix, got {M.rows}x{M.cols}")
    if M.rows % n:
        raise ShapeError(f"side {M.rows} is not divisible by 2^{k}")
    s = M.rows // n
    ctx = HadamardRing(M.ctx, k)
    blocks = []
    for bi in range(s):
        for bj in range(s):
            r0, c0 = bi * n, bj * n
            row = tuple(M.raw(r0, c0 + j) for j in range(n))
            for i in range(n):
                for j in range(n):
                    if M.raw(r0 + i, c0 + j) != row[i ^ j]:
                        raise NotBlockHadamardError(
                            f"block ({bi}, {bj}) is not Hadamard at entry ({r0 + i}, {c0 + j})",
                            block=(bi, bj),
                            position=(r0 + i, c0 + j),
                        )
            blocks.append(row)
    return RingMatrix(ctx, s, s, blocks)


def _krylov_dependency(M: RingMatrix):
    """Monic coefficients c with sum c_i M^i = 0 for the least possible degree.

    Incremental Gaussian elimination on vec(I), vec(M), vec(M^2), ...; each
    stored row carries the combination of powers that produced it.
    """
    ctx = M.ctx
    _require_field(ctx)
    if not M.is_square():
        raise ShapeError(f"expected a square matrix, got {M.rows}x{M.cols}")
    add, mul, is_zero, zero = ctx.add, ctx.mul, ctx.is_zero, ctx.zero
    basis = []  # (pivot, vector with 1 at pivot, combination)
    power = RingMatrix.identity(ctx, M.rows)
    for l in range(M.rows + 1):
        vec = list(power.entries)
        comb = [zero] * l + [ctx.one]
        for pivot, bvec, bcomb in basis:
            f = vec[pivot]
            if is_zero(f):
                continue
            for i, b in enumerate(bvec):
                if not is_zero(b):
                    vec[i] = add(vec[i], mul(f, b))
            for i, b in enumerate(bcomb):
                comb[i] = add(comb[i], mul(f, b))
        pivot = next((i for i, v in enumerate(vec) if not is_zero(v)), None)
        if pivot is None:
            return comb
        inv = ctx.inverse_raw(vec[pivot])
        basis.append((pivot, [mul(inv, v) for v in vec], [mul(inv, c) for c in comb]))
        power = power * M
    raise AssertionError("no Krylov dependency within t+1 powers")  # Cayley-Hamilton forbids this


def power_dependency_degree(M: RingMatrix) -> int:
    return len(_krylov_dependency(M)) - 1


def minimal_poly_field(M: RingMatrix) -> RingPolynomial:
    return RingPolynomial(M.ctx, _krylov_dependency(M))


@dataclass(frozen=True)
class InvariantReport:
    t: int
    s: int
    k: int
    l: int
    bound_new: int
    bound_old: int
    dim_lower_bound: int

    @property
    def within_bound(self) -> bool:
        return self.l <= self.bound_new

    def to_json(self) -> dict:
        return asdict(self)


def analyze(M: RingMatrix, k: int) -> InvariantReport:
    """Dependency degree of M against the 2s and (k+1)s bounds."""
    _require_field(M.ctx)
    blocks = block_hadamard_detect(M, k)
    s = blocks.rows
    l = power_dependency_degree(M)
    return InvariantReport(
        t=M.rows,
        s=s,
        k=k,
        l=l,
        bound_new=2 * s,
        bound_old=(k + 1) * s,
        dim_lower_bound=M.rows - l,
    )
