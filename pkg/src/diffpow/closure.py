"""Differential closure of monomial ideals.

Over a characteristic-0 polynomial ring the ring is a simple module over its
differential operators, and the differential closure of an ideal is its
radical.  That is how the closure is computed here; the witness routines
below certify individual members constructively and probe non-members.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (DimensionError, MonomialIdeal, PreconditionError, Vector, add,
                   contains_ideal, contains_monomial, intersect, radical,
                   scale, vector)
from .diffpower import diffpower
from .oracle import Polynomial, bruteforce_membership, find_witness

ORACLE_LEVELS = 4


class TheoremViolation(RuntimeError):
    """A certificate that must hold failed; indicates a bug, not bad input."""


def _proper(I: MonomialIdeal) -> None:
    if I.is_zero or I.is_unit:
        raise PreconditionError("closure needs a proper nonzero ideal")


def differential_closure(I: MonomialIdeal) -> MonomialIdeal:
    _proper(I)
    return radical(I)


@dataclass(frozen=True)
class ClosureWitness:
    ideal: MonomialIdeal
    r: Vector
    k: int
    c: Vector
    n_checked: int
    checks: tuple[tuple[int, bool, bool | None], ...]  # (n, fast path, oracle or None)


def witness_probe(I: MonomialIdeal, r, n_max: int = 8) -> ClosureWitness:
    """Certify ``r`` in the closure with multiplier ``c = r^k`` where ``r^k ∈ I``.

    Checks ``c r^n`` against the n-th differential power for every
    ``n <= n_max``, and against the brute-force oracle for ``n <= 4``.
    """
    _proper(I)
    r = vector(r, I.d)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if not contains_monomial(radical(I), r):
        raise PreconditionError(f"{r} is not in the radical")
    k = 1
    while not contains_monomial(I, scale(r, k)):
        k += 1
    c = scale(r, k)
    checks = []
    for n in range(1, n_max + 1):
        target = add(c, scale(r, n))
        fast = contains_monomial(diffpower(I, n), target)
        slow = None
        if n <= ORACLE_LEVELS:
            slow = bruteforce_membership(Polynomial.monomial(target), I, n)
        if not fast or slow is False:
            raise TheoremViolation(f"c r^{n} = {target} not in differential power {n}")
        checks.append((n, fast, slow))
    return ClosureWitness(I, r, k, c, n_max, tuple(checks))


def falsification_probe(I: MonomialIdeal, r, c, n_max: int = ORACLE_LEVELS):
    """First ``n <= n_max`` with ``c r^n`` outside the n-th differential power.

    Returns ``(n, oracle witness)`` or None.  Only meaningful for ``r``
    outside the radical, where it shows this particular ``c`` does not work.
    """
    r = vector(r, I.d)
    c = vector(c, I.d)
    for n in range(1, n_max + 1):
        w = find_witness(Polynomial.monomial(add(c, scale(r, n))), I, n)
        if w is not None:
            return n, w
    return None


@dataclass(frozen=True)
class AxiomReport:
    extensive: bool
    monotone: bool
    ideal_closed: bool
    finite_intersection: bool
    idempotent: bool

    @property
    def all_hold(self) -> bool:
        return all((self.extensive, self.monotone, self.ideal_closed,
                    self.finite_intersection, self.idempotent))


def closure_axiom_suite(I: MonomialIdeal, J: MonomialIdeal, r) -> AxiomReport:
    if I.d != J.d:
        raise DimensionError(f"dimension mismatch: {I.d} vs {J.d}")
    r = vector(r, I.d)
    cI, cJ = differential_closure(I), differential_closure(J)
    return AxiomReport(
        extensive=contains_ideal(cI, I),
        monotone=(not contains_ideal(J, I)) or contains_ideal(cJ, cI),
        ideal_closed=all(contains_monomial(cI, add(g, r)) for g in cI.gens),
        finite_intersection=differential_closure(intersect(I, J)) == intersect(cI, cJ),
        idempotent=differential_closure(cI) == cI,
    )
