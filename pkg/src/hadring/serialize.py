"""JSON documents for matrices, polynomials, block matrices and reports."""
from __future__ import annotations

import json

from hadring.conjecture import block_matrix, flatten
from hadring.hadamard import HadamardRing
from hadring.matrix import RingMatrix, RingPolynomial
from hadring.rings import ring_make


def dump_block_matrix(M: RingMatrix) -> dict:
    ctx = M.ctx
    if not isinstance(ctx, HadamardRing):
        raise TypeError("expected a matrix over a Hadamard ring")
    return {
        "ring": ctx.base.spec,
        "k": ctx.k,
        "s": M.rows,
        "blocks": [[ctx.dump(M.raw(i, j)) for j in range(M.cols)] for i in range(M.rows)],
    }


def load_block_matrix(obj: dict) -> RingMatrix:
    base = ring_make(obj["ring"])
    k, s = int(obj["k"]), int(obj["s"])
    ctx = HadamardRing(base, k)
    blocks = obj["blocks"]
    if len(blocks) != s or any(len(r) != s for r in blocks):
        raise ValueError(f"expected {s}x{s} blocks")
    return block_matrix(base, k, [[ctx.load(b) for b in row] for row in blocks])


def load_matrix(obj: dict) -> RingMatrix:
    """A plain matrix document, or a block document flattened to its full matrix."""
    if "blocks" in obj:
        return flatten(load_block_matrix(obj))
    return RingMatrix.load(obj)


def load_polynomial(obj: dict) -> RingPolynomial:
    return RingPolynomial.load(obj)


def read_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def to_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
