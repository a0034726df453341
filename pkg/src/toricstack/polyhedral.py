"""Exact rational feasibility by Fourier-Motzkin elimination."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

def feasible(equalities: Sequence[tuple[Sequence[int], int]],
             inequalities: Sequence[tuple[Sequence[int], int]],
             nvars: int) -> bool:
    """Does ``{x in Q^nvars : A_eq x = b_eq, A_ge x >= b_ge}`` contain a point?

    Rows are kept as primitive integer vectors ``(coeffs..., rhs)``, which is
    the same exact arithmetic as rationals without the denominators.
    """
    eqs = [_row(c, b, nvars) for c, b in equalities]
    ges = [_row(c, b, nvars) for c, b in inequalities]

    # Gaussian substitution removes the equalities.
    while eqs:
        e = eqs.pop()
        j = next((k for k in range(nvars) if e[k]), None)
        if j is None:
            if e[nvars]:
                return False
            continue
        eqs = [_eliminate(r, e, j) for r in eqs]
        ges = [_eliminate(r, e, j) for r in ges]

    for j in range(nvars):
        pos, neg, rest = [], [], []
        for r in ges:
            (pos if r[j] > 0 else neg if r[j] < 0 else rest).append(r)
        if pos and neg:
            for rp in pos:
                for rn in neg:
                    sp, sn = -rn[j], rp[j]
                    rest.append(_normalize([sp * x + sn * y for x, y in zip(rp, rn)]))
        ges = _dedupe(rest)
        if ges is None:
            return False
    return all(r[nvars] <= 0 for r in ges)


def _row(c, b, nvars) -> list[int]:
    if len(c) != nvars:
        raise ValueError("constraint length does not match variable count")
    return _normalize([int(x) for x in c] + [int(b)])


def _normalize(r: list[int]) -> list[int]:
    g = 0
    for x in r:
        g = gcd(g, x)
    return [x // g for x in r] if g > 1 else r


def _eliminate(r: list[int], e: list[int], j: int) -> list[int]:
    """Clear coordinate ``j`` of ``r`` using ``e`` (with ``e[j] > 0`` for inequalities)."""
    if not r[j]:
        return r
    p, q = e[j], r[j]
    if p < 0:
        p, e = -p, [-x for x in e]
    return _normalize([p * x - q * y for x, y in zip(r, e)])


def _dedupe(rows: list[list[int]]):
    """Drop trivial and duplicate rows; None signals an infeasible ``0 >= positive``."""
    seen: dict[tuple[int, ...], int] = {}
    for r in rows:
        c, b = tuple(r[:-1]), r[-1]
        if not any(c):
            if b > 0:
                return None
            continue
        g = 0
        for x in c:
            g = gcd(g, x)
        key = tuple(x // g for x in c)
        rhs = Fraction(b, g)
        if key not in seen or seen[key] < rhs:
            seen[key] = rhs
    out = []
    for key, rhs in seen.items():
        out.append(_normalize([x * rhs.denominator for x in key] + [rhs.numerator]))
    return out


def cones_overlap_badly(sigma_rays: Sequence[Sequence[int]],
                        tau_rays: Sequence[Sequence[int]],
                        outside: Sequence[int]) -> bool:
    """Is there a point of ``cone(sigma) & cone(tau)`` using a ray of ``sigma`` listed in ``outside``?

    ``outside`` are positions (into ``sigma_rays``) of the rays not shared
    with ``tau``.  The point is normalized so those coefficients sum to 1.
    """
    p, q = len(sigma_rays), len(tau_rays)
    dim = len(sigma_rays[0]) if p else len(tau_rays[0])
    nv = p + q
    eqs = []
    for k in range(dim):
        row = [v[k] for v in sigma_rays] + [-w[k] for w in tau_rays]
        eqs.append((row, 0))
    norm = [1 if i in set(outside) else 0 for i in range(p)] + [0] * q
    eqs.append((norm, 1))
    ges = []
    for i in range(nv):
        e = [0] * nv
        e[i] = 1
        ges.append((e, 0))
    return feasible(eqs, ges, nv)
