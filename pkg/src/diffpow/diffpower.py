"""Differential powers of monomial ideals from closed-form generators.

Pure-power ideals and principal ideals have explicit generator lists; every
other monomial ideal is decomposed into pure-power components, whose
differential powers are intersected (differential powers commute with
intersections).
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional, Sequence

from .core import (MonomialIdeal, PreconditionError, PurePowerIdeal, Vector,
                   intersect, is_principal, vector)
from .decompose import Decomposition, decompose


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` non-negative parts, colex order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    # colex: the last part varies slowest
    for last in range(total + 1):
        for head in compositions(total - last, parts - 1):
            yield head + (last,)


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"differential power index must be a positive integer, got {n!r}")


def pure_generators(Q: PurePowerIdeal, n: int) -> Iterator[Vector]:
    """Yield the (possibly non-minimal) generators of the n-th differential power of ``Q``.

    For each nonempty subset ``S`` of the support with ``|S| <= n``, the
    exponents on ``S`` are ``alpha_i + delta_i`` with ``delta`` a weak
    composition of ``n - |S|``; variables outside ``S`` get exponent 0.
    """
    alpha = Q.alpha
    supp = Q.support
    for size in range(1, min(len(supp), n) + 1):
        for S in combinations(supp, size):
            for delta in compositions(n - size, size):
                gamma = [0] * Q.d
                for i, extra in zip(S, delta):
                    gamma[i] = alpha[i] + extra
                yield tuple(gamma)


def diffpower_pure(Q: PurePowerIdeal, n: int) -> MonomialIdeal:
    _check_n(n)
    if not Q.powers:
        return MonomialIdeal.zero(Q.d)
    if n == 1:
        return Q.to_ideal()
    return MonomialIdeal(Q.d, tuple(pure_generators(Q, n)))


def diffpower_principal(gamma: Sequence[int], n: int) -> MonomialIdeal:
    _check_n(n)
    gamma = vector(gamma)
    if not any(gamma):
        raise PreconditionError("principal differential power needs a non-constant monomial")
    return MonomialIdeal.principal(tuple(a + n - 1 if a else 0 for a in gamma))


def diffpower(I: MonomialIdeal, n: int, trace: Optional[list] = None) -> MonomialIdeal:
    """The n-th differential power of a proper nonzero monomial ideal.

    When ``trace`` is a list, ``(decomposition, [(component, power), ...])``
    is appended to it for reporting.
    """
    _check_n(n)
    if I.is_zero or I.is_unit:
        raise PreconditionError("differential power needs a proper nonzero ideal")
    if n == 1:
        return I
    gen = is_principal(I)
    if gen is not None and trace is None:
        return diffpower_principal(gen, n)
    dec = decompose(I)
    powers = [diffpower_pure(q, n) for q in dec.components]
    if trace is not None:
        trace.append((dec, list(zip(dec.components, powers))))
    return intersect(*powers)


def diffpower_trace(I: MonomialIdeal, n: int) -> tuple[MonomialIdeal, Decomposition, list]:
    trace: list = []
    result = diffpower(I, n, trace=trace)
    if trace:
        dec, parts = trace[0]
    else:
        # n == 1 short-circuits before decomposing
        dec = decompose(I)
        parts = [(q, q.to_ideal()) for q in dec.components]
    return result, dec, parts
