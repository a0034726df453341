"""Rational simplicial fans given by primitive rays and maximal cones."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .abelian import FGAbelianGroup, cokernel
from .errors import DuplicateRay, FanError, NotAFan, NotSimplicial, RaysDoNotSpan
from .matrix import IntMatrix, primitive, rank, snf
from .polyhedral import cones_overlap_badly


@dataclass(frozen=True)
class Fan:
    """A simplicial fan in ``Q^rank``.

    ``rays`` keep the caller's order (it indexes the columns of a stacky
    fan's beta).  The zero cone is implicit; a fan with no rays has the
    single maximal cone ``()``.
    """
    rank: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> IntMatrix:
        """Rays as columns, ``rank x n``."""
        return IntMatrix.from_columns(self.rays, rows=self.rank)

    def cone_matrix(self, cone: Sequence[int]) -> IntMatrix:
        return IntMatrix.from_columns([self.rays[i] for i in cone], rows=self.rank)

    def rays_span(self) -> bool:
        return rank(self.ray_matrix()) == self.rank

    def as_dict(self) -> dict:
        return {"rank": self.rank, "rays": [list(r) for r in self.rays],
                "max_cones": [list(c) for c in self.max_cones]}


def make_fan(rank_: int, rays: Sequence[Sequence[int]], max_cones: Sequence[Sequence[int]]) -> Fan:
    """Primitivize the rays and check every fan axiom.

    Raises ``DuplicateRay``, ``NotSimplicial`` or ``NotAFan`` (the latter
    carrying the offending cone pair).
    """
    prims = []
    for r in rays:
        r = tuple(int(x) for x in r)
        if len(r) != rank_:
            raise FanError(f"ray {list(r)} does not live in Z^{rank_}")
        if not any(r):
            raise FanError("zero ray")
        prims.append(primitive(r))
    seen = {}
    for i, r in enumerate(prims):
        if r in seen:
            raise DuplicateRay(f"rays {seen[r]} and {i} have the same primitive generator {list(r)}")
        seen[r] = i

    n = len(prims)
    cones = []
    for c in max_cones:
        idx = tuple(sorted(int(i) for i in c))
        if len(set(idx)) != len(idx):
            raise FanError(f"cone {list(c)} repeats a ray index")
        if any(i < 0 or i >= n for i in idx):
            raise FanError(f"cone {list(c)} refers to a missing ray")
        cones.append(idx)
    if not cones:
        cones = [()]
    if len(set(cones)) != len(cones):
        raise FanError("a maximal cone is listed twice")
    for a, b in combinations(cones, 2):
        if set(a) <= set(b) or set(b) <= set(a):
            raise FanError(f"cone {list(a)} and cone {list(b)}: one is a face of the other")
    used = set().union(*map(set, cones))
    missing = [i for i in range(n) if i not in used]
    if missing:
        raise FanError(f"rays {missing} lie in no maximal cone")
    if n and cones == [()]:
        raise FanError("rays given but no cones")

    fan = Fan(rank_, tuple(prims), tuple(cones))
    for c in cones:
        if rank(fan.cone_matrix(c)) != len(c):
            raise NotSimplicial(f"rays of cone {list(c)} are linearly dependent")
    for a, b in combinations(range(len(cones)), 2):
        if not _meet_in_common_face(fan, cones[a], cones[b]):
            raise NotAFan(f"cones {list(cones[a])} and {list(cones[b])} do not meet in a common face",
                          (cones[a], cones[b]))
    return fan


def _meet_in_common_face(fan: Fan, sigma, tau) -> bool:
    sr = [fan.rays[i] for i in sigma]
    tr = [fan.rays[i] for i in tau]
    out_s = [k for k, i in enumerate(sigma) if i not in tau]
    out_t = [k for k, i in enumerate(tau) if i not in sigma]
    if out_s and cones_overlap_badly(sr, tr, out_s):
        return False
    if out_t and cones_overlap_badly(tr, sr, out_t):
        return False
    return True


def common_face_ok(fan: Fan, sigma, tau) -> bool:
    return _meet_in_common_face(fan, tuple(sigma), tuple(tau))


def is_complete(fan: Fan) -> bool:
    """Wall criterion: pure of full dimension and every wall shared by exactly two cones.

    Exact in ranks <= 2.  In higher rank this is a necessary condition that
    agrees with support coverage for the standard fans used here; it is not
    a proof of completeness for arbitrary embedded fans in rank >= 4.
    """
    d = fan.rank
    if d == 0:
        return True
    if not fan.max_cones or any(len(c) != d for c in fan.max_cones):
        return False
    walls: dict[tuple[int, ...], int] = {}
    for c in fan.max_cones:
        for w in combinations(c, d - 1):
            walls[w] = walls.get(w, 0) + 1
    return all(k == 2 for k in walls.values())


def is_smooth(fan: Fan) -> bool:
    """Every maximal cone's rays extend to a Z-basis."""
    return all(all(f == 1 for f in snf(fan.cone_matrix(c)).invariant_factors)
               for c in fan.max_cones)


def class_group(fan: Fan) -> tuple[FGAbelianGroup, list[tuple[int, ...]]]:
    """Class group ``A = coker(M -> Z^n)``, ``m -> (<m, v_i>)_i``, and the classes of the ``D_i``."""
    if not fan.rays_span():
        raise RaysDoNotSpan("rays do not span; split off the torus factor with span_defect first")
    iota = fan.ray_matrix().T
    A = cokernel(iota)
    classes = [A.class_of(tuple(int(i == j) for j in range(fan.n))) for i in range(fan.n)]
    return A, classes


def cox_patterns(fan: Fan) -> list[frozenset[int]]:
    """Maximal cones read as zero patterns: ``x`` is in ``Z_Sigma`` iff its zero set sits inside one."""
    return [frozenset(c) for c in fan.max_cones]


def in_cox_open(fan: Fan, zero_coordinates: Sequence[int]) -> bool:
    z = set(zero_coordinates)
    return any(z <= set(c) for c in fan.max_cones)


def span_defect(fan: Fan) -> tuple[int, int, IntMatrix]:
    """``(r, d - r, P)`` with ``P`` an ``r x d`` integer matrix.

    ``P`` restricted to the saturation of the ray lattice is an isomorphism
    onto ``Z^r`` and extends to a unimodular change of coordinates of
    ``Z^d``; when the rays span, ``P`` is the identity.
    """
    d = fan.rank
    R = fan.ray_matrix()
    s = snf(R)
    r = s.rank
    if r == d:
        return d, 0, IntMatrix.identity(d)
    return r, d - r, s.U.select_rows(range(r))
