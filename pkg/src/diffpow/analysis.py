"""Principality indices and containment constants for differential powers."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .core import (MonomialIdeal, PreconditionError, PurePowerIdeal, Vector,
                   contains_ideal, contains_monomial, is_principal,
                   ordinary_power, vector)
from .diffpower import compositions, diffpower, diffpower_principal


@dataclass(frozen=True)
class PrincipalityReport:
    ideal: MonomialIdeal
    n_bound: Optional[int]
    n_min: Optional[int] = None
    principal_gen_at_n_min: Optional[Vector] = None
    search_cap: Optional[int] = None
    principal_gen_at_bound: Optional[Vector] = None
    method: str = "search"


class Direction(enum.Enum):
    ORDINARY_IN_DIFF = "ordinary_in_diff"
    DIFF_IN_ORDINARY = "diff_in_ordinary"


@dataclass(frozen=True)
class ContainmentReport:
    ideal: MonomialIdeal
    n: int
    c_value: int | Fraction
    direction: Direction
    verified: bool
    # diff power index a and ordinary power b actually compared
    diff_index: int = 0
    ordinary_index: int = 0
    witness: Optional[Vector] = None
    extra: dict = field(default_factory=dict)


def _require_nonprincipal(I: MonomialIdeal) -> None:
    if I.is_zero or I.is_unit:
        raise PreconditionError("need a proper nonzero ideal")
    if is_principal(I) is not None:
        raise PreconditionError("ideal is already principal")


def principality_2d(I: MonomialIdeal) -> PrincipalityReport:
    """Exact principality index of a two-variable ideal with radical ``(xy)``.

    With generators ``x^{b_j1} y^{b_j2}`` sorted by increasing x-exponent and
    ``s = max_j (b_{j+1,1} + b_{j,2})``, the n-th differential power is
    principal exactly for ``n >= s - b_{m2} - b_{11}``.
    """
    if I.d != 2:
        raise PreconditionError(f"two-variable ideal required, got d = {I.d}")
    _require_nonprincipal(I)
    beta = sorted(I.gens)  # antichain: x-exponents strictly increase
    first_x, last_y = beta[0][0], beta[-1][1]
    if first_x == 0 or last_y == 0:
        raise PreconditionError(
            "every generator must be divisible by both x and y (radical must be (xy))")
    s = max(beta[j + 1][0] + beta[j][1] for j in range(len(beta) - 1))
    N = s - last_y - first_x
    gen = (s - last_y - 1, s - first_x - 1)
    return PrincipalityReport(I, N, N, gen, None, gen, method="2d")


def principality_3d(I: MonomialIdeal, cap: Optional[int] = None) -> PrincipalityReport:
    """Principality bound for a three-variable ideal with radical ``(xyz)``.

    The bound need not be sharp; pass ``cap`` to also search for the least
    principal index.
    """
    if I.d != 3:
        raise PreconditionError(f"three-variable ideal required, got d = {I.d}")
    _require_nonprincipal(I)
    lo, hi = I.min_exponents(), I.max_exponents()
    if min(lo) < 1:
        raise PreconditionError("every generator must be divisible by x, y and z (radical must be (xyz))")
    spread = [h - l for h, l in zip(hi, lo)]
    N = max(spread[i] + spread[j] for i, j in combinations(range(3), 2))
    gen = tuple(N - 1 + l for l in lo)
    n_min = gen_min = None
    if cap is not None:
        found = nmin_search(I, cap)
        if found is not None:
            n_min, gen_min = found
    return PrincipalityReport(I, N, n_min, gen_min, cap, gen, method="3d")


def principality(I: MonomialIdeal, cap: int = 64) -> PrincipalityReport:
    """Dispatch on the number of variables: exact in 2, bound plus search in 3, search otherwise."""
    if I.d == 2:
        return principality_2d(I)
    if I.d == 3:
        return principality_3d(I, cap)
    _require_nonprincipal(I)
    found = nmin_search(I, cap)
    n_min, gen = found if found is not None else (None, None)
    return PrincipalityReport(I, None, n_min, gen, cap, None, method="search")


def nmin_search(I: MonomialIdeal, cap: int, linear: bool = False) -> Optional[tuple[int, Vector]]:
    """Least ``n <= cap`` whose differential power is principal.

    Principality persists once reached (the m-th power of a principal
    differential power is again principal and equals a later power of ``I``),
    so bisection is sound; ``linear=True`` scans every index instead.
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    _require_nonprincipal(I)

    def probe(n):
        return is_principal(diffpower(I, n))

    if linear:
        for n in range(1, cap + 1):
            g = probe(n)
            if g is not None:
                return n, g
        return None
    top = probe(cap)
    if top is None:
        return None
    lo, hi, best = 1, cap, top  # probe(lo) is None: I itself is not principal
    while hi - lo > 1:
        mid = (lo + hi) // 2
        g = probe(mid)
        if g is None:
            lo = mid
        else:
            hi, best = mid, g
    return hi, best


def lower_containment_c(Q: PurePowerIdeal, n: int) -> ContainmentReport:
    """Least ``c`` from the composition bound with ``Q^n ⊆ Q^<n+c>``, checked.

    ``c`` minimises ``sum (a_i - 1)(w_i - 1)`` over ``i in supp(w)``, for
    weak compositions ``w`` of ``n`` on the support of ``Q``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    alpha = Q.alpha
    supp = Q.support
    if not supp:
        raise PreconditionError("zero ideal")
    best = None
    for w in compositions(n, len(supp)):
        val = sum((alpha[i] - 1) * (wi - 1) for i, wi in zip(supp, w) if wi)
        if best is None or val < best[0]:
            best = (val, w)
    c, w = best
    omega = [0] * Q.d
    for i, wi in zip(supp, w):
        omega[i] = wi
    I = Q.to_ideal()
    ok = contains_ideal(diffpower(I, n + c), ordinary_power(I, n))
    return ContainmentReport(I, n, c, Direction.ORDINARY_IN_DIFF, ok,
                             diff_index=n + c, ordinary_index=n, witness=tuple(omega))


def upper_containment_check(Q: PurePowerIdeal, n: int) -> ContainmentReport:
    """Check ``Q^<cn> ⊆ Q^n`` with ``c = max(max a_i, |supp| + 1)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not Q.powers:
        raise PreconditionError("zero ideal")
    c = max(max(a for _, a in Q.powers), len(Q.powers) + 1)
    I = Q.to_ideal()
    ok = contains_ideal(ordinary_power(I, n), diffpower(I, c * n))
    return ContainmentReport(I, n, c, Direction.DIFF_IN_ORDINARY, ok,
                             diff_index=c * n, ordinary_index=n)


def principal_containment_check(gamma: Sequence[int], n: int) -> ContainmentReport:
    """Check ``(x^g)^<a n> ⊆ (x^g)^n`` with ``a = max g_i``.

    Also checks the sharper index ``(n-1) a + 1``, i.e. the rational constant
    ``c = ((n-1) a + 1) / n`` times ``n``; the outcome is in ``extra``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    gamma = vector(gamma)
    if not any(gamma):
        raise PreconditionError("zero exponent vector")
    a_max = max(gamma)
    I = MonomialIdeal.principal(gamma)
    target = ordinary_power(I, n)
    ok = contains_ideal(target, diffpower_principal(gamma, a_max * n))
    sharp_index = (n - 1) * a_max + 1
    sharp_ok = contains_ideal(target, diffpower_principal(gamma, sharp_index))
    return ContainmentReport(I, n, Fraction(sharp_index, n), Direction.DIFF_IN_ORDINARY,
                             ok and sharp_ok, diff_index=a_max * n, ordinary_index=n,
                             extra={"a_max": a_max, "sharp_index": sharp_index,
                                    "sharp_verified": sharp_ok})


@dataclass(frozen=True)
class NoUniformWitness:
    ideal: MonomialIdeal
    n: int
    p_n: int
    witness: Vector
    in_diffpower: bool
    in_ordinary_power: bool


def _poly_eval(coeffs: Sequence[int], n: int) -> int:
    return sum(c * n**k for k, c in enumerate(coeffs))


def no_uniform_polynomial_demo(p_coeffs: Sequence[int]) -> NoUniformWitness:
    """Counterexample to ``I^<p(n)> ⊆ I^n`` for a given polynomial ``p``.

    ``p_coeffs`` are non-negative, lowest degree first.  Uses ``I = (x^c)``
    with ``c = p(2)`` and the least ``n <= 10c`` with ``c - 1 + p(n) < cn``.
    """
    coeffs = [int(c) for c in p_coeffs]
    if not coeffs or any(c < 0 for c in coeffs):
        raise PreconditionError("coefficients must be non-negative integers")
    if _poly_eval(coeffs, 1) < 1:
        raise PreconditionError("p(n) must be >= 1 for n >= 1")
    c = _poly_eval(coeffs, 2)
    I = MonomialIdeal.principal((c,))
    for n in range(1, 10 * c + 1):
        pn = _poly_eval(coeffs, n)
        if c - 1 + pn < c * n:
            w = (c - 1 + pn,)
            in_diff = contains_monomial(diffpower(I, pn), w)
            in_ord = contains_monomial(ordinary_power(I, n), w)
            if not in_diff or in_ord:
                raise RuntimeError(f"witness x^{w[0]} failed verification")
            return NoUniformWitness(I, n, pn, w, in_diff, in_ord)
    raise PreconditionError(f"no failing n <= {10 * c} for p = {coeffs}")
