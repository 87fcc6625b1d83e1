"""Block matrices with Hadamard blocks and the q(M)^2 = 0 verification.

A block-Hadamard matrix is an s x s ``RingMatrix`` whose context is
``HadamardRing(R, k)``: each entry is the first row of one 2^k x 2^k block.
The projection lambda-bar replaces every block by its eigenvalue, giving an
s x s matrix M'' over R with characteristic polynomial q.  Squaring q(M) in
characteristic 2 gives sum q_i^2 M^(2i), and since every coefficient Q_i of
M's own characteristic polynomial over H_k(R) satisfies Q_i^2 = q_i^2 * id,
that sum equals Q(M)^2 = 0.  ``verify_conjecture`` checks each link.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from hadring.errors import NotInKernelError, ShapeError
from hadring.hadamard import HadamardMatrix, HadamardRing, had_det
from hadring.matrix import (
    RingMatrix,
    RingPolynomial,
    charpoly_berkowitz,
    frobenius_eval_check,
    mat_det,
    poly_eval_at_matrix,
)
from hadring.rings import RingContext

BlockHadamardMatrix = RingMatrix


def _block_ctx(M: RingMatrix) -> HadamardRing:
    if not isinstance(M, RingMatrix) or not isinstance(M.ctx, HadamardRing):
        raise TypeError("expected a RingMatrix over a Hadamard ring")
    if not M.is_square():
        raise ShapeError(f"block layout must be square, got {M.rows}x{M.cols}")
    return M.ctx


def block_matrix(base: RingContext, k: int, blocks) -> RingMatrix:
    """s x s block matrix from nested first rows (or HadamardMatrix blocks)."""
    ctx = HadamardRing(base, k)
    return RingMatrix.from_rows(ctx, [[ctx.coerce(b) for b in row] for row in blocks])


def random_block_matrix(base: RingContext, k: int, s: int, rng) -> RingMatrix:
    return RingMatrix.random(HadamardRing(base, k), s, s, rng)


def random_kernel_block_matrix(base: RingContext, k: int, s: int, rng) -> RingMatrix:
    """Random block matrix in ker lambda-bar: each block gets a_0 := sum_{i>=1} a_i."""
    ctx = HadamardRing(base, k)
    entries = []
    for _ in range(s * s):
        row = list(ctx.random_raw(rng))
        row[0] = base.sum(row[1:])
        entries.append(tuple(row))
    return RingMatrix(ctx, s, s, entries)


def lambda_projection(M: RingMatrix) -> RingMatrix:
    """M'' with M''[i][j] = lambda(M[i][j])."""
    ctx = _block_ctx(M)
    return M.map(ctx.eigenvalue_raw, ctx.base)


def det_projection(M: RingMatrix) -> RingMatrix:
    """Blockwise determinants."""
    ctx = _block_ctx(M)
    return M.map(lambda a: had_det(HadamardMatrix(ctx, a)).raw, ctx.base)


def lift(Mpp: RingMatrix, k: int) -> RingMatrix:
    """M'' (x) I_{2^k}, as a block matrix over H_k(R)."""
    ctx = HadamardRing(Mpp.ctx, k)
    return Mpp.map(ctx.embed, ctx)


def flatten(M: RingMatrix) -> RingMatrix:
    """The t x t matrix over R (t = 2^k s) obtained by expanding every block."""
    ctx = _block_ctx(M)
    s, n = M.rows, ctx.size
    t = s * n
    out = [None] * (t * t)
    for bi in range(s):
        for bj in range(s):
            a = M.raw(bi, bj)
            for i in range(n):
                base_idx = (bi * n + i) * t + bj * n
                for j in range(n):
                    out[base_idx + j] = a[i ^ j]
    return RingMatrix(ctx.base, t, t, out)


def tensor_decompose(M: RingMatrix):
    """Split M = M'' (x) I + M~ with M~ in ker lambda-bar; returns (M'', M~)."""
    ctx = _block_ctx(M)
    Mpp = lambda_projection(M)
    Mt = M + lift(Mpp, ctx.k)
    if not lambda_projection(Mt).is_zero():
        raise AssertionError("remainder of the tensor decomposition is not in ker lambda-bar")
    return Mpp, Mt


@dataclass
class ConjectureReport:
    """Every intermediate identity of the q(M)^2 = 0 argument for one M."""

    q: RingPolynomial
    Q: RingPolynomial
    checks: dict = field(default_factory=dict)
    residuals: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())

    def __bool__(self):
        return self.ok

    def failures(self):
        return [name for name, good in self.checks.items() if not good]


def verify_conjecture(M: RingMatrix) -> ConjectureReport:
    ctx = _block_ctx(M)
    base = ctx.base
    q = charpoly_berkowitz(lambda_projection(M))
    Q = charpoly_berkowitz(M)
    report = ConjectureReport(q=q, Q=Q)

    # coefficient correspondence lambda(Q_i) = q_i and Q_i^2 = q_i^2 * id
    lam_Q = Q.map(ctx.eigenvalue_raw, base)
    report.checks["coefficients"] = lam_Q == q
    report.checks["coefficient_squares"] = all(
        ctx.square(Q.coeffs[i]) == ctx.embed(base.square(q.coeffs[i])) for i in range(len(Q.coeffs))
    ) and len(Q.coeffs) == len(q.coeffs)

    # Cayley-Hamilton over H_k(R)
    QM = poly_eval_at_matrix(Q, M)
    report.checks["cayley_hamilton"] = QM.is_zero()
    report.residuals["cayley_hamilton"] = QM

    # q(M) by scalar action and by lifting the coefficients
    qM = poly_eval_at_matrix(q, M, mode="scalar")
    qM_lift = poly_eval_at_matrix(q, M, mode="lift")
    report.checks["scalar_vs_lift"] = qM == qM_lift

    # q(M) lies in ker lambda-bar
    report.checks["q_in_kernel"] = lambda_projection(qM).is_zero()

    sq = qM * qM
    report.checks["conjecture"] = sq.is_zero()
    report.residuals["conjecture"] = sq

    chain = frobenius_eval_check(q, M)
    report.checks["frobenius_chain"] = chain.ok
    report.residuals["frobenius_chain"] = chain.residual
    return report


def perturbation_check(M: RingMatrix, Mt: RingMatrix) -> bool:
    """q(M + M~)^2 = 0 for M~ in ker lambda-bar, with q taken from M alone."""
    if not lambda_projection(Mt).is_zero():
        raise NotInKernelError("perturbation must lie in ker lambda-bar")
    q = charpoly_berkowitz(lambda_projection(M))
    qM = poly_eval_at_matrix(q, M + Mt)
    return (qM * qM).is_zero()


@dataclass(frozen=True)
class NilpotencyReport:
    s: int
    k: int
    index: int | None  # smallest n >= 1 with M^n = 0
    vanishes_at_2s: bool
    vanishes_at_k_plus_1: bool

    @property
    def ok(self):
        return self.vanishes_at_2s and self.vanishes_at_k_plus_1

    def __bool__(self):
        return self.ok


def kernel_power_nilpotency(M: RingMatrix) -> NilpotencyReport:
    """For M in ker lambda-bar, check M^(2s) = 0 and M^(k+1) = 0."""
    ctx = _block_ctx(M)
    if not lambda_projection(M).is_zero():
        raise NotInKernelError("some block of M has nonzero eigenvalue")
    s, k = M.rows, ctx.k
    index = None
    power = M
    for n in range(1, max(2 * s, k + 1) + 1):
        if power.is_zero():
            index = n
            break
        power = power * M
    return NilpotencyReport(s, k, index, (M ** (2 * s)).is_zero(), (M ** (k + 1)).is_zero())


@dataclass(frozen=True)
class DiagramReport:
    lambda_square: bool
    det_square: bool

    @property
    def ok(self):
        return self.lambda_square and self.det_square

    def __bool__(self):
        return self.ok


def diagram_check(M: RingMatrix) -> DiagramReport:
    """Both squares commute: lambda(Det M) = Det(lambda-bar M), det(Det M) = Det(det-bar M)."""
    ctx = _block_ctx(M)
    D = HadamardMatrix(ctx, mat_det(M).raw)
    lam_ok = D.eigenvalue() == mat_det(lambda_projection(M))
    det_ok = had_det(D) == mat_det(det_projection(M))
    return DiagramReport(lam_ok, det_ok)


def counterexample_instance(base: RingContext | None = None) -> RingMatrix:
    """[[0, e_0 + e], [e_1 + e, 0]] at k = 2.

    Its lambda-projection is 0 (minimal polynomial x) but M^2 != 0, so the
    characteristic polynomial cannot be replaced by the minimal one.
    """
    from hadring.rings import ring_make

    base = base or ring_make("gf2:1:0x3")
    ctx = HadamardRing(base, 2)
    o, z = base.one, base.zero
    B = (o, z, o, z)  # e_0 + e: e_0 is index 2
    C = (o, o, z, z)  # e_1 + e: e_1 is index 1
    return RingMatrix(ctx, 2, 2, [ctx.zero, B, C, ctx.zero])
