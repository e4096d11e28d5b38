"""Monomials and monomial ideals over the exponent lattice.

An exponent vector is a plain tuple of non-negative ints; a monomial ideal is
stored as the antichain of its minimal generators in ascending lex order, so
two ideals are equal exactly when their dataclasses compare equal.
Coefficients never appear here: every ideal handled by the package is
monomial, and its data is the exponent set alone.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional, Sequence

from .kernels import minimal_elements

EXPONENT_CAP = 2**31 - 1

Vector = tuple[int, ...]


class ExponentOverflowError(ArithmeticError):
    pass


class DimensionError(ValueError):
    pass


class PreconditionError(ValueError):
    """Input lies outside the hypotheses of the requested computation."""


def _checked(v: Iterable[int]) -> Vector:
    v = tuple(int(a) for a in v)
    for a in v:
        if a < 0:
            raise ValueError(f"negative exponent in {v}")
        if a > EXPONENT_CAP:
            raise ExponentOverflowError(f"exponent {a} exceeds cap {EXPONENT_CAP}")
    return v


def vector(entries: Iterable[int], d: Optional[int] = None) -> Vector:
    """Validate an exponent vector, optionally against dimension ``d``."""
    v = _checked(entries)
    if not v:
        raise DimensionError("exponent vectors need at least one entry")
    if d is not None and len(v) != d:
        raise DimensionError(f"expected dimension {d}, got {len(v)}")
    return v


def _same_dim(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise DimensionError(f"dimension mismatch: {len(u)} vs {len(v)}")


def add(u: Vector, v: Vector) -> Vector:
    _same_dim(u, v)
    return _checked(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    _same_dim(u, v)
    if any(a < b for a, b in zip(u, v)):
        raise ValueError(f"{v} does not divide {u}")
    return tuple(a - b for a, b in zip(u, v))


def scale(u: Vector, k: int) -> Vector:
    if k < 0:
        raise ValueError("negative multiplier")
    return _checked(k * a for a in u)


def lcm(u: Vector, v: Vector) -> Vector:
    _same_dim(u, v)
    return tuple(a if a >= b else b for a, b in zip(u, v))


def divides(u: Vector, v: Vector) -> bool:
    """True when ``x^u`` divides ``x^v``."""
    return all(a <= b for a, b in zip(u, v))


def degree(u: Vector) -> int:
    return sum(u)


def support(u: Vector) -> tuple[int, ...]:
    return tuple(i for i, a in enumerate(u) if a)


def squarefree(u: Vector) -> Vector:
    return tuple(1 if a else 0 for a in u)


def unit_vector(d: int, i: int, power: int = 1) -> Vector:
    v = [0] * d
    v[i] = power
    return _checked(v)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in ``d`` variables, given by its minimal generators.

    The constructor accepts any generating set and reduces it to the
    canonical antichain.  ``gens == ()`` is the zero ideal and
    ``gens == ((0,)*d,)`` the unit ideal.
    """

    d: int
    gens: tuple[Vector, ...] = ()

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise DimensionError(f"dimension must be a positive integer, got {self.d!r}")
        gens = [vector(g, self.d) for g in self.gens]
        object.__setattr__(self, "gens", tuple(sorted(minimal_elements(gens))))

    @classmethod
    def _canonical(cls, d: int, gens: Iterable[Vector]) -> "MonomialIdeal":
        # skips validation; callers pass vectors already checked
        obj = object.__new__(cls)
        object.__setattr__(obj, "d", d)
        object.__setattr__(obj, "gens", tuple(sorted(minimal_elements(list(gens)))))
        return obj

    @classmethod
    def zero(cls, d: int) -> "MonomialIdeal":
        return cls(d, ())

    @classmethod
    def unit(cls, d: int) -> "MonomialIdeal":
        return cls(d, ((0,) * d,))

    @classmethod
    def principal(cls, gen: Sequence[int]) -> "MonomialIdeal":
        g = vector(gen)
        return cls(len(g), (g,))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def __contains__(self, gamma) -> bool:
        return contains_monomial(self, gamma)

    def __len__(self) -> int:
        return len(self.gens)

    def max_exponents(self) -> Vector:
        """Componentwise maximum over the generators (zeros for the zero ideal)."""
        if not self.gens:
            return (0,) * self.d
        return tuple(max(col) for col in zip(*self.gens))

    def min_exponents(self) -> Vector:
        if not self.gens:
            return (0,) * self.d
        return tuple(min(col) for col in zip(*self.gens))

    def __str__(self) -> str:
        from .textio import format_ideal

        return format_ideal(self)


@dataclass(frozen=True)
class PurePowerIdeal:
    """Irreducible monomial ideal ``(x_i^{a_i} : i in S)``.

    ``powers`` holds ``(i, a_i)`` pairs with 0-based variable indices, sorted
    by index.  An empty ``powers`` stands for the zero ideal.
    """

    d: int
    powers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise DimensionError(f"dimension must be a positive integer, got {self.d!r}")
        powers = sorted((int(i), int(a)) for i, a in self.powers)
        seen = set()
        for i, a in powers:
            if not 0 <= i < self.d:
                raise DimensionError(f"variable index {i} outside 0..{self.d - 1}")
            if i in seen:
                raise ValueError(f"variable {i} listed twice")
            if a < 1:
                raise ValueError(f"pure power exponent must be >= 1, got {a}")
            if a > EXPONENT_CAP:
                raise ExponentOverflowError(f"exponent {a} exceeds cap {EXPONENT_CAP}")
            seen.add(i)
        object.__setattr__(self, "powers", tuple(powers))

    @classmethod
    def from_alpha(cls, alpha: Sequence[int]) -> "PurePowerIdeal":
        """Build ``(x_i^{alpha_i} : i in supp(alpha))``."""
        alpha = vector(alpha)
        return cls(len(alpha), tuple((i, a) for i, a in enumerate(alpha) if a))

    @classmethod
    def from_ideal(cls, ideal: MonomialIdeal) -> "PurePowerIdeal":
        powers = []
        for g in ideal.gens:
            supp = support(g)
            if len(supp) != 1:
                raise PreconditionError(f"generator {g} is not a pure power")
            powers.append((supp[0], g[supp[0]]))
        return cls(ideal.d, tuple(powers))

    @property
    def alpha(self) -> Vector:
        """Exponent vector with ``a_i`` on the support and 0 elsewhere."""
        v = [0] * self.d
        for i, a in self.powers:
            v[i] = a
        return tuple(v)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.powers)

    def to_ideal(self) -> MonomialIdeal:
        return MonomialIdeal._canonical(
            self.d, [unit_vector(self.d, i, a) for i, a in self.powers])

    def contains(self, other: "PurePowerIdeal") -> bool:
        """Ideal containment ``other ⊆ self`` between pure-power ideals."""
        mine = dict(self.powers)
        return all(i in mine and mine[i] <= a for i, a in other.powers)

    def __str__(self) -> str:
        from .textio import format_pure

        return format_pure(self)


def _require_same(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.d != J.d:
        raise DimensionError(f"dimension mismatch: {I.d} vs {J.d}")


def contains_monomial(I: MonomialIdeal, gamma: Sequence[int]) -> bool:
    if len(gamma) != I.d:
        raise DimensionError(f"monomial of dimension {len(gamma)} tested against ideal in {I.d} variables")
    return any(divides(g, gamma) for g in I.gens)


def minimalize(gens: Iterable[Sequence[int]], d: Optional[int] = None) -> MonomialIdeal:
    """Reduce a generating set to the canonical antichain.

    ``d`` is required when ``gens`` is empty (the zero ideal).
    """
    gens = [tuple(g) for g in gens]
    if d is None:
        if not gens:
            raise DimensionError("dimension needed for an empty generating set")
        d = len(gens[0])
    return MonomialIdeal(d, tuple(gens))


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection, via pairwise lcms of generators."""
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    return reduce(_intersect2, ideals)


def _intersect2(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _require_same(I, J)
    return MonomialIdeal._canonical(I.d, {lcm(u, v) for u in I.gens for v in J.gens})


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _require_same(I, J)
    return MonomialIdeal._canonical(I.d, {add(u, v) for u in I.gens for v in J.gens})


def ordinary_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    result = I
    for _ in range(n - 1):
        result = product(result, I)
    return result


def radical(I: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._canonical(I.d, {squarefree(g) for g in I.gens})


def contains_ideal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """True when ``J ⊆ I``."""
    _require_same(I, J)
    return all(contains_monomial(I, g) for g in J.gens)


def is_principal(I: MonomialIdeal) -> Optional[Vector]:
    return I.gens[0] if len(I.gens) == 1 else None
