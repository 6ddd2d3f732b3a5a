"""Pure-Python (numpy) implementations of the batched kernels.

Mirrors ``_kernels.pyx`` function for function. Both must produce identical
doubles: the same products are formed and reduced with min/max only.
"""

import numpy as np

ADD, SUB, MUL, DIV = 0, 1, 2, 3


def _as2d(x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != 4:
        raise ValueError(f"expected an (N, 4) array, got shape {x.shape}")
    return x


def _min4(p1, p2, p3, p4):
    return np.minimum(np.minimum(p1, p2), np.minimum(p3, p4))


def _max4(p1, p2, p3, p4):
    return np.maximum(np.maximum(p1, p2), np.maximum(p3, p4))


def type1_batch(op, al, au, bl, bu):
    """Moore arithmetic on arrays of Type-1 endpoints; returns (lo, hi)."""
    al, au, bl, bu = (np.asarray(v, dtype=np.float64) for v in (al, au, bl, bu))
    if op == ADD:
        return al + bl, au + bu
    if op == SUB:
        return al - bu, au - bl
    if op == DIV:
        bl, bu = 1.0 / bu, 1.0 / bl
    elif op != MUL:
        raise ValueError(f"unknown op code {op}")
    p1, p2, p3, p4 = al * bl, al * bu, au * bl, au * bu
    return _min4(p1, p2, p3, p4), _max4(p1, p2, p3, p4)


def formula_batch(op, A, B):
    """Closed-form Type-2 arithmetic on (N, 4) arrays."""
    A, B = _as2d(A), _as2d(B)
    a1, a2, a3, a4 = A.T
    b1, b2, b3, b4 = B.T
    if op == ADD:
        out = (a1 + b1, a2 + b2, a3 + b3, a4 + b4)
    elif op == SUB:
        out = (a1 - b4, a2 - b3, a3 - b2, a4 - b1)
    else:
        if op == DIV:
            b1, b2, b3, b4 = 1.0 / b4, 1.0 / b3, 1.0 / b2, 1.0 / b1
        elif op != MUL:
            raise ValueError(f"unknown op code {op}")
        c = (a1 * b1, a1 * b4, a4 * b4, a4 * b1)
        d = (a2 * b2, a2 * b3, a3 * b2, a3 * b3)
        out = (_min4(*c), _min4(*d), _max4(*d), _max4(*c))
    return np.stack(out, axis=1)


def corner_batch(op, A, B):
    """16-corner family oracle on (N, 4) arrays."""
    A, B = _as2d(A), _as2d(B)
    n = A.shape[0]
    lo_min = np.full(n, np.inf)
    lo_max = np.full(n, -np.inf)
    hi_min = np.full(n, np.inf)
    hi_max = np.full(n, -np.inf)
    for i in (0, 1):
        for j in (2, 3):
            for k in (0, 1):
                for m in (2, 3):
                    lo, hi = type1_batch(op, A[:, i], A[:, j], B[:, k], B[:, m])
                    lo_min = np.minimum(lo_min, lo)
                    lo_max = np.maximum(lo_max, lo)
                    hi_min = np.minimum(hi_min, hi)
                    hi_max = np.maximum(hi_max, hi)
    return np.stack((lo_min, lo_max, hi_min, hi_max), axis=1)


def membership_scan(op, al, au, bl, bu, claimed):
    """Count claim violations over sampled members and locate sampled extremes.

    Returns ``(violations, extremes[4], argindex[4])`` with extremes ordered as
    (min lower, max lower, min upper, max upper); ties resolve to the first index.
    """
    lo, hi = type1_batch(op, al, au, bl, bu)
    q1, q2, q3, q4 = (float(v) for v in claimed)
    bad = (lo < q1) | (lo > q2) | (hi < q3) | (hi > q4)
    arg = np.array([np.argmin(lo), np.argmax(lo), np.argmin(hi), np.argmax(hi)], dtype=np.intp)
    ext = np.array([lo[arg[0]], lo[arg[1]], hi[arg[2]], hi[arg[3]]])
    return int(np.count_nonzero(bad)), ext, arg


def distances_to(T, x):
    """Extended Moore distance from every row of T to the quadruple x."""
    T = _as2d(T)
    return np.max(np.abs(T - np.asarray(x, dtype=np.float64)), axis=1)


def pair_distances(T, I, J):
    T = _as2d(T)
    return np.max(np.abs(T[np.asarray(I)] - T[np.asarray(J)]), axis=1)


def cauchy_scan(T, eps):
    """Scan all pairs (n < m) in order of m, then n, for distance >= eps.

    Returns ``(n, m, dmax, checked)``; ``n == m == -1`` when no pair violates.
    On a violation ``dmax`` is the violating distance.
    """
    T = _as2d(T)
    dmax = 0.0
    checked = 0
    for m in range(1, T.shape[0]):
        d = np.max(np.abs(T[:m] - T[m]), axis=1)
        hit = np.flatnonzero(d >= eps)
        if hit.size:
            n = int(hit[0])
            return n, m, float(d[n]), checked + n + 1
        checked += m
        dmax = max(dmax, float(d.max()))
    return -1, -1, dmax, checked
