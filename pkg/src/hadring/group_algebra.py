"""The group algebra R[G] for G = (F2^k, xor), and its two isomorphic models.

Group elements are indexed by integers 0 .. 2^k - 1 through the 2-adic map
``bin``: j = sum_l j_l 2^(k-1-l)  <->  (j_0, ..., j_{k-1}).  The standard
basis vector e_i of G is therefore index 2^(k-1-i), and the identity e is 0.

Three views of the same algebra live here:

* ``GroupAlgebraElement``: coefficients a_g, product sum_{g,h} a_g b_h (g xor h);
* ``HadamardMatrix`` (via ga_to_hadamard / ga_from_hadamard);
* ``MultilinearPoly``: R[x_1..x_k]/(x_i^2 - 1), monomial x_1^{j_0}...x_k^{j_{k-1}}.
"""
from __future__ import annotations

from hadring.errors import ContextMismatchError, NotInIdealError, ShapeError
from hadring.hadamard import HadamardMatrix, HadamardRing
from hadring.rings import RingContext, RingElement, ring_make


def bin_digits(j: int, k: int) -> tuple:
    """(j_0, ..., j_{k-1}) with j_0 the most significant digit."""
    return tuple((j >> (k - 1 - l)) & 1 for l in range(k))


def bin_index(digits) -> int:
    j = 0
    for d in digits:
        j = (j << 1) | (d & 1)
    return j


def standard_basis_index(k: int, i: int) -> int:
    """Index of e_i, the i-th standard basis vector of F2^k."""
    if not 0 <= i < k:
        raise IndexError(f"e_{i} does not exist for k={k}")
    return 1 << (k - 1 - i)


class GroupAlgebraElement:
    __slots__ = ("base", "k", "coeffs")

    def __init__(self, base: RingContext, k: int, coeffs):
        coeffs = tuple(c.raw if isinstance(c, RingElement) else c for c in coeffs)
        if len(coeffs) != 1 << k:
            raise ShapeError(f"R[F2^{k}] needs {1 << k} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("group algebra elements are immutable")

    @classmethod
    def zero(cls, base, k):
        return cls(base, k, [base.zero] * (1 << k))

    @classmethod
    def group_element(cls, base, k, g: int):
        """The basis element g (coefficient 1 at g)."""
        c = [base.zero] * (1 << k)
        c[g] = base.one
        return cls(base, k, c)

    @classmethod
    def identity(cls, base, k):
        return cls.group_element(base, k, 0)

    @classmethod
    def random(cls, base, k, rng):
        return cls(base, k, [base.random_raw(rng) for _ in range(1 << k)])

    @classmethod
    def random_ideal(cls, base, k, rng):
        """Uniform element of the augmentation ideal: a_e := sum of the others."""
        c = [base.random_raw(rng) for _ in range(1 << k)]
        c[0] = base.sum(c[1:])
        return cls(base, k, c)

    def coeff(self, g: int) -> RingElement:
        return self.base.element(self.coeffs[g])

    def _check(self, other):
        if not isinstance(other, GroupAlgebraElement):
            raise TypeError(f"expected GroupAlgebraElement, got {type(other).__name__}")
        if other.k != self.k or other.base != self.base:
            raise ContextMismatchError(
                f"R[F2^{self.k}] over {self.base.spec} vs R[F2^{other.k}] over {other.base.spec}"
            )

    def __add__(self, other):
        self._check(other)
        add = self.base.add
        return GroupAlgebraElement(self.base, self.k, map(add, self.coeffs, other.coeffs))

    __sub__ = __add__

    def __mul__(self, other):
        self._check(other)
        base = self.base
        add, mul, is_zero = base.add, base.mul, base.is_zero
        out = [base.zero] * len(self.coeffs)
        for g, ag in enumerate(self.coeffs):
            if is_zero(ag):
                continue
            for h, bh in enumerate(other.coeffs):
                out[g ^ h] = add(out[g ^ h], mul(ag, bh))
        return GroupAlgebraElement(base, self.k, out)

    def __pow__(self, e: int):
        result = GroupAlgebraElement.identity(self.base, self.k)
        for _ in range(e):
            result = result * self
        return result

    def is_zero(self):
        return all(self.base.is_zero(c) for c in self.coeffs)

    def augmentation(self) -> RingElement:
        return ga_augmentation(self)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.k == other.k and self.base == other.base and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.base, self.k, self.coeffs))

    def __repr__(self):
        terms = [f"{self.base.dump(c)}*g{g}" for g, c in enumerate(self.coeffs) if not self.base.is_zero(c)]
        return f"GroupAlgebraElement<{self.base.spec}, k={self.k}>({' + '.join(terms) or '0'})"

    def dump(self) -> dict:
        return {"ring": self.base.spec, "k": self.k, "coeffs": [self.base.dump(c) for c in self.coeffs]}

    @classmethod
    def load(cls, obj: dict) -> GroupAlgebraElement:
        base = ring_make(obj["ring"])
        return cls(base, int(obj["k"]), [base.load(c) for c in obj["coeffs"]])


def ga_mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a * b


def ga_from_hadamard(H: HadamardMatrix) -> GroupAlgebraElement:
    """(a_{i xor j}) -> sum_j a_j bin(j)."""
    return GroupAlgebraElement(H.base, H.k, H.raw)


def ga_to_hadamard(a: GroupAlgebraElement) -> HadamardMatrix:
    return HadamardMatrix(HadamardRing(a.base, a.k), a.coeffs)


def ga_augmentation(a: GroupAlgebraElement) -> RingElement:
    """epsilon: sum_g a_g g -> sum_g a_g."""
    return a.base.element(a.base.sum(a.coeffs))


def ga_ideal_product(elements, base: RingContext | None = None, k: int | None = None) -> GroupAlgebraElement:
    """Product of augmentation-ideal members.

    Any k+1 of them multiply to zero.  ``base`` and ``k`` are only needed
    for the empty product, which is the identity e.
    """
    elements = list(elements)
    if not elements:
        if base is None or k is None:
            raise ValueError("empty product needs base and k")
        return GroupAlgebraElement.identity(base, k)
    for idx, a in enumerate(elements):
        if not ga_augmentation(a).is_zero():
            raise NotInIdealError(f"factor {idx} has nonzero augmentation")
    result = elements[0]
    for a in elements[1:]:
        result = result * a
    return result


def canonical_ideal_product(base: RingContext, k: int) -> GroupAlgebraElement:
    """prod_{i<k} (e_i + e), which equals sum_{g in G} g."""
    e = GroupAlgebraElement.identity(base, k)
    factors = [GroupAlgebraElement.group_element(base, k, standard_basis_index(k, i)) + e for i in range(k)]
    return ga_ideal_product(factors, base, k)


def nilpotency_degree_witness(base: RingContext, k: int, samples: int, rng):
    """Check that the augmentation ideal has nilpotency degree exactly k+1.

    Returns (zero_products, samples, canonical_ok): how many random (k+1)-fold
    products of ideal elements vanished, and whether the canonical k-fold
    product is the all-ones element (hence nonzero).
    """
    zero = 0
    for _ in range(samples):
        factors = [GroupAlgebraElement.random_ideal(base, k, rng) for _ in range(k + 1)]
        if ga_ideal_product(factors, base, k).is_zero():
            zero += 1
    canon = canonical_ideal_product(base, k)
    all_ones = GroupAlgebraElement(base, k, [base.one] * (1 << k))
    return zero, samples, canon == all_ones and not canon.is_zero()


class MultilinearPoly:
    """Element of R[x_1..x_k]/(x_1^2 - 1, ..., x_k^2 - 1).

    Stored as {exponent tuple: coefficient} over square-free monomials with
    nonzero coefficients; products reduce x_i^2 to 1 eagerly.
    """

    __slots__ = ("base", "k", "terms")

    def __init__(self, base: RingContext, k: int, terms: dict):
        clean = {}
        for mono, c in terms.items():
            mono = tuple(mono)
            if len(mono) != k or any(e not in (0, 1) for e in mono):
                raise ShapeError(f"monomial {mono} is not square-free in {k} variables")
            if not base.is_zero(c):
                clean[mono] = c
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = self.base.add(out.get(mono, self.base.zero), c)
        return MultilinearPoly(self.base, self.k, out)

    def __mul__(self, other):
        if other.k != self.k or other.base != self.base:
            raise ContextMismatchError("polynomials over different algebras")
        base = self.base
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                # exponents add, then x_i^2 = 1
                mono = tuple((a + b) % 2 for a, b in zip(m1, m2))
                out[mono] = base.add(out.get(mono, base.zero), base.mul(c1, c2))
        return MultilinearPoly(base, self.k, out)

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self.k == other.k and self.base == other.base and self.terms == other.terms

    def __hash__(self):
        return hash((self.base, self.k, frozenset(self.terms.items())))

    def __repr__(self):
        def mono(m):
            return "*".join(f"x{i + 1}" for i, e in enumerate(m) if e) or "1"
        body = " + ".join(f"{self.base.dump(c)}*{mono(m)}" for m, c in sorted(self.terms.items()))
        return f"MultilinearPoly<{self.base.spec}, k={self.k}>({body or '0'})"


def ga_to_polyrep(a: GroupAlgebraElement) -> MultilinearPoly:
    return MultilinearPoly(a.base, a.k, {bin_digits(g, a.k): c for g, c in enumerate(a.coeffs)})


def ga_from_polyrep(p: MultilinearPoly) -> GroupAlgebraElement:
    coeffs = [p.base.zero] * (1 << p.k)
    for mono, c in p.terms.items():
        coeffs[bin_index(mono)] = c
    return GroupAlgebraElement(p.base, p.k, coeffs)
