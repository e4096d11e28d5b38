"""Shared random instances and hypothesis strategies."""
import random

from hypothesis import assume
from hypothesis import strategies as st

from diffpow.core import MonomialIdeal, PurePowerIdeal


def random_corpus(count=200, max_d=3, max_gens=3, max_exp=4, seed=20240611):
    """Deterministic list of proper nonzero monomial ideals."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, max_d)
        k = rng.randint(1, max_gens)
        gens = [tuple(rng.randint(0, max_exp) for _ in range(d)) for _ in range(k)]
        I = MonomialIdeal(d, gens)
        if not I.is_unit:
            out.append(I)
    return out


def random_pure_powers(count, max_d=4, max_alpha=5, seed=7):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        d = rng.randint(1, max_d)
        alpha = [rng.randint(0, max_alpha) for _ in range(d)]
        if any(alpha):
            out.append(PurePowerIdeal.from_alpha(alpha))
    return out


@st.composite
def ideals(draw, max_d=3, max_exp=4, max_gens=3, d=None):
    if d is None:
        d = draw(st.integers(1, max_d))
    vec = st.tuples(*[st.integers(0, max_exp)] * d)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    I = MonomialIdeal(d, gens)
    assume(not I.is_unit)
    return I


@st.composite
def ideal_pairs(draw, max_d=3, max_exp=4, max_gens=3):
    d = draw(st.integers(1, max_d))
    return (draw(ideals(d=d, max_exp=max_exp, max_gens=max_gens)),
            draw(ideals(d=d, max_exp=max_exp, max_gens=max_gens)))


@st.composite
def vectors(draw, d, max_exp=4):
    return draw(st.tuples(*[st.integers(0, max_exp)] * d))
