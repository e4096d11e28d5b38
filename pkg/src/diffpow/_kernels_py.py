"""Pure-Python versions of the hot kernels.

Selected by :mod:`diffpow.kernels` when the compiled extension is missing
or when ``DIFFPOW_PURE_PYTHON`` is set.  Both implementations must agree
exactly; ``tests/test_kernels.py`` runs them side by side.
"""
from itertools import product


def minimal_elements(vecs):
    """Return the componentwise-minimal elements of ``vecs``, without duplicates.

    Output order is ascending total degree, ties in ascending lex order.
    """
    cands = sorted(set(vecs), key=lambda v: (sum(v), v))
    kept = []
    for v in cands:
        for u in kept:
            if all(a <= b for a, b in zip(u, v)):
                break
        else:
            kept.append(v)
    return kept


def _ideal_table(gens, box):
    # flat row-major table over 0..box_i, last coordinate fastest
    d = len(box)
    dims = [b + 1 for b in box]
    strides = [1] * d
    for i in range(d - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    size = strides[0] * dims[0]
    table = bytearray(size)
    for g in gens:
        if all(a <= b for a, b in zip(g, box)):
            table[sum(a * s for a, s in zip(g, strides))] = 1
    # upward closure: propagate along each axis in increasing index order
    for idx, gamma in enumerate(product(*(range(m) for m in dims))):
        if table[idx]:
            continue
        for i in range(d):
            if gamma[i] > 0 and table[idx - strides[i]]:
                table[idx] = 1
                break
    return table, strides, dims


def scan_box(gens, box, n):
    """Membership bitmap of the n-th differential power over the box ``0..box``.

    A point is a member when every operator of order at most ``n - 1`` sends
    its monomial into the ideal generated by ``gens``.  For a monomial,
    ``d^beta x^gamma`` is a nonzero multiple of ``x^(gamma - beta)`` exactly
    when ``beta <= gamma`` and vanishes otherwise, so only the clipped range
    of operators is enumerated.
    """
    table, strides, dims = _ideal_table(gens, box)
    order = n - 1
    out = bytearray(len(table))
    for idx, gamma in enumerate(product(*(range(m) for m in dims))):
        if not table[idx]:
            continue
        ok = True
        for beta in product(*(range(min(g, order) + 1) for g in gamma)):
            if sum(beta) > order:
                continue
            if not table[idx - sum(b * s for b, s in zip(beta, strides))]:
                ok = False
                break
        if ok:
            out[idx] = 1
    return out
