"""Irredundant irreducible decomposition of monomial ideals."""
from __future__ import annotations

from dataclasses import dataclass

from .core import (MonomialIdeal, PreconditionError, PurePowerIdeal,
                   contains_ideal, intersect, support, unit_vector)


@dataclass(frozen=True)
class Decomposition:
    components: tuple[PurePowerIdeal, ...]
    source: MonomialIdeal

    def intersection(self) -> MonomialIdeal:
        return intersect(*(q.to_ideal() for q in self.components))

    def __str__(self) -> str:
        return " ∩ ".join(str(q) for q in self.components)


def _component_key(q: PurePowerIdeal):
    return (len(q.powers), q.powers)


def _split(gens: frozenset, d: int, leaves: set, seen: set) -> None:
    # gens is always an antichain here
    stack = [gens]
    while stack:
        g_set = stack.pop()
        if g_set in seen:
            continue
        seen.add(g_set)
        mixed = sorted(g for g in g_set if len(support(g)) >= 2)
        if not mixed:
            leaves.add(PurePowerIdeal(d, tuple((support(g)[0], g[support(g)[0]]) for g in g_set)))
            continue
        g = mixed[0]
        i = support(g)[0]
        rest = [h for h in g_set if h != g]
        zeroed = list(g)
        zeroed[i] = 0
        for extra in (unit_vector(d, i, g[i]), tuple(zeroed)):
            stack.append(frozenset(MonomialIdeal._canonical(d, rest + [extra]).gens))


def decompose(I: MonomialIdeal) -> Decomposition:
    """Write ``I`` as the unique irredundant intersection of pure-power ideals.

    Splits on the lowest variable of the first mixed generator until every
    generator is a pure power, then discards redundant components.
    """
    if I.is_zero or I.is_unit:
        raise PreconditionError("decomposition needs a proper nonzero ideal")
    leaves: set[PurePowerIdeal] = set()
    _split(frozenset(I.gens), I.d, leaves, set())
    comps = sorted(leaves, key=_component_key)
    # Irreducible monomial ideals are meet-irreducible, so a component is
    # redundant iff it contains another one; drop those first, cheaply.
    comps = [q for q in comps
             if not any(p != q and q.contains(p) for p in comps)]
    comps = _greedy_irredundant(comps)
    return Decomposition(tuple(comps), I)


def _greedy_irredundant(comps: list[PurePowerIdeal]) -> list[PurePowerIdeal]:
    kept = list(comps)
    j = 0
    while j < len(kept) and len(kept) > 1:
        others = intersect(*(q.to_ideal() for k, q in enumerate(kept) if k != j))
        if contains_ideal(kept[j].to_ideal(), others):
            del kept[j]
        else:
            j += 1
    return kept


def is_irredundant(dec: Decomposition) -> bool:
    comps = dec.components
    if len(comps) <= 1:
        return True
    for j, q in enumerate(comps):
        others = intersect(*(p.to_ideal() for k, p in enumerate(comps) if k != j))
        if contains_ideal(q.to_ideal(), others):
            return False
    return True
