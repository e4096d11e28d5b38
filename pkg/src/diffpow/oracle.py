"""Brute-force ground truth for differential powers.

Polynomials carry exact integer coefficients and are differentiated term by
term with falling factorials.  A polynomial lies in the n-th differential
power of ``I`` when every operator ``d^beta`` with ``|beta| <= n - 1`` sends
it into ``I``; operators of the form ``x^a d^beta`` add nothing, because
multiplying by ``x^a`` keeps a monomial ideal's members inside it.

Nothing here uses the closed-form generator formulas.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb, prod
from typing import Mapping, Optional, Sequence

from .core import (DimensionError, MonomialIdeal, PreconditionError, Vector,
                   contains_monomial, vector)
from .kernels import minimal_elements, scan_box


class OracleError(RuntimeError):
    """Brute-force search could not produce a trustworthy answer."""


def falling_factorial(a: int, k: int) -> int:
    return prod(range(a - k + 1, a + 1)) if k <= a else 0


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with exact integer coefficients, as ``{exponent: coefficient}``."""

    d: int
    terms: Mapping[Vector, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exp, coeff in self.terms.items():
            exp = vector(exp, self.d)
            if coeff:
                clean[exp] = clean.get(exp, 0) + int(coeff)
        object.__setattr__(self, "terms", {e: c for e, c in sorted(clean.items()) if c})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "Polynomial":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._same(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.d, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.d, {e: c * other for e, c in self.terms.items()})
        self._same(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.d, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.monomial((0,) * self.d)
        for _ in range(k):
            out = out * self
        return out

    def max_exponents(self) -> Vector:
        if not self.terms:
            return (0,) * self.d
        return tuple(max(col) for col in zip(*self.terms))

    def _same(self, other: "Polynomial") -> None:
        if self.d != other.d:
            raise DimensionError(f"dimension mismatch: {self.d} vs {other.d}")

    def __repr__(self) -> str:
        return f"Polynomial({self.d}, {self.terms!r})"


def differentiate(f: Polynomial, beta: Sequence[int]) -> Polynomial:
    """Apply ``d^beta = d_1^{beta_1} ... d_d^{beta_d}`` to ``f``."""
    if len(beta) != f.d:
        raise DimensionError(f"operator of dimension {len(beta)} applied in {f.d} variables")
    out = {}
    for exp, coeff in f.terms.items():
        if all(b <= a for a, b in zip(exp, beta)):
            factor = prod(falling_factorial(a, b) for a, b in zip(exp, beta))
            out[tuple(a - b for a, b in zip(exp, beta))] = coeff * factor
    return Polynomial(f.d, out)


def leibniz(f: Polynomial, g: Polynomial, beta: Sequence[int]) -> Polynomial:
    """``d^beta(fg)`` expanded by the general Leibniz rule."""
    total = Polynomial(f.d, {})
    for omega in product(*(range(b + 1) for b in beta)):
        rest = tuple(b - w for b, w in zip(beta, omega))
        c = prod(comb(b, w) for b, w in zip(beta, omega))
        total = total + differentiate(f, omega) * differentiate(g, rest) * c
    return total


def operators(order: int, bound: Sequence[int]):
    """All ``beta <= bound`` with ``|beta| <= order``."""
    for beta in product(*(range(min(b, order) + 1) for b in bound)):
        if sum(beta) <= order:
            yield beta


@dataclass(frozen=True)
class Witness:
    beta: Vector
    exponent: Vector
    coefficient: int


def find_witness(f: Polynomial, I: MonomialIdeal, n: int) -> Optional[Witness]:
    """First operator/term pair sending ``f`` outside ``I``, or None if ``f`` is in the n-th power."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if f.d != I.d:
        raise DimensionError(f"polynomial in {f.d} variables, ideal in {I.d}")
    for beta in operators(n - 1, f.max_exponents()):
        for exp, coeff in differentiate(f, beta).terms.items():
            if not contains_monomial(I, exp):
                return Witness(tuple(beta), exp, coeff)
    return None


def bruteforce_membership(f: Polynomial, I: MonomialIdeal, n: int) -> bool:
    return find_witness(f, I, n) is None


def default_box(I: MonomialIdeal, n: int) -> Vector:
    return vector(m + n + 1 for m in I.max_exponents())


def bruteforce_diffpower(I: MonomialIdeal, n: int, box: Optional[Sequence[int]] = None) -> MonomialIdeal:
    """Generators of the n-th differential power found by scanning every point of ``0..box``.

    Raises :class:`OracleError` if the member set is not upward closed inside
    the box, or if a minimal member sits on the box boundary (a generator
    could be hiding outside).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if I.is_zero or I.is_unit:
        raise PreconditionError("oracle needs a proper nonzero ideal")
    box = default_box(I, n) if box is None else vector(box, I.d)
    if any(b < 1 for b in box):
        raise ValueError(f"box entries must be >= 1, got {box}")
    bits = scan_box(list(I.gens), box, n)
    dims = [b + 1 for b in box]
    members = []
    for idx, gamma in enumerate(product(*(range(m) for m in dims))):
        if bits[idx]:
            members.append(gamma)
    member_set = set(members)
    for gamma in members:
        for i in range(I.d):
            if gamma[i] < box[i]:
                up = gamma[:i] + (gamma[i] + 1,) + gamma[i + 1:]
                if up not in member_set:
                    raise OracleError(f"member set not upward closed: {gamma} in, {up} out")
    mins = minimal_elements(members)
    if not mins:
        raise OracleError(f"no members inside box {box}; enlarge the box")
    for gamma in mins:
        if any(g == b for g, b in zip(gamma, box)):
            raise OracleError(f"minimal element {gamma} touches box {box}; enlarge the box")
    return MonomialIdeal(I.d, tuple(mins))
