"""Stacky fans ``(N, Sigma, beta)`` and their Picard data.

``N`` is always given in split form ``Z^d + Z/b_1 + ... + Z/b_l``.  A column
of beta is ``d`` integers (the free part, a positive multiple of a ray)
followed by ``l`` residues, stored reduced into ``[0, b_j)``.

The Picard group is ``DG(beta) = coker([B Q]^T)`` where ``Q = [0; diag(b)]``
resolves ``N`` and ``B`` lifts beta with the stored residues.  Its
presentation has ``n + l`` generators: the dual basis vectors ``e_i*`` (the
toric divisors) followed by one generator per torsion summand.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Optional, Sequence

from .abelian import (FGAbelianGroup, GroupHom, cokernel, cyclic_sum, free_group,
                      homs_equal, is_exact_at, pushout, split_resolution)
from .errors import RaysDoNotSpan, StackyFanError, ZeroFreePart
from .fan import Fan, cox_patterns, make_fan
from .matrix import IntMatrix, content, primitive

Vector = tuple[int, ...]


@dataclass(frozen=True)
class StackyFan:
    free_rank: int
    torsion_orders: tuple[int, ...]
    fan: Fan
    beta_free: IntMatrix
    beta_torsion: IntMatrix

    @property
    def n(self) -> int:
        return self.fan.n

    @property
    def ell(self) -> int:
        return len(self.torsion_orders)

    def is_orbifold(self) -> bool:
        return not self.torsion_orders

    def is_canonical(self) -> bool:
        return self.is_orbifold() and all(a == 1 for a in multiplicities(self))

    def is_point(self) -> bool:
        return self.free_rank == 0 and self.n == 0

    def beta_columns(self) -> list[Vector]:
        return [self.beta_free.column(i) + self.beta_torsion.column(i) for i in range(self.n)]

    def lift_matrix(self) -> IntMatrix:
        """``B``: the free rows over the residue rows, ``(d + l) x n``."""
        return self.beta_free.vstack(self.beta_torsion)

    def as_dict(self) -> dict:
        return {
            "lattice": {"rank": self.free_rank, "torsion": list(self.torsion_orders)},
            "beta": [list(c) for c in self.beta_columns()],
            "max_cones": [list(c) for c in self.fan.max_cones],
        }


def make_stacky_fan(d: int, torsion_orders: Sequence[int], beta: Sequence[Sequence[int]],
                    max_cones: Sequence[Sequence[int]]) -> StackyFan:
    """Build and validate a stacky fan from beta columns of length ``d + l``."""
    return _build(d, torsion_orders, beta, max_cones, require_span=True)


def _build(d, torsion_orders, beta, max_cones, require_span):
    d = int(d)
    if d < 0:
        raise StackyFanError("lattice rank must be non-negative")
    orders = tuple(int(b) for b in torsion_orders)
    if any(b < 2 for b in orders):
        raise StackyFanError(f"torsion orders must be >= 2, got {list(orders)}")
    ell = len(orders)
    cols = [tuple(int(x) for x in c) for c in beta]
    for i, c in enumerate(cols):
        if len(c) != d + ell:
            raise StackyFanError(f"beta column {i} has {len(c)} entries, expected {d + ell}")
        if not any(c[:d]):
            raise ZeroFreePart(f"beta column {i} has zero free part and lies on no ray")
    rays = [primitive(c[:d]) for c in cols]
    fan = make_fan(d, rays, max_cones)
    if require_span and not fan.rays_span():
        raise RaysDoNotSpan("the rays do not span N_Q")
    n = len(cols)
    free = IntMatrix.from_columns([c[:d] for c in cols], rows=d) if n else IntMatrix.zeros(d, 0)
    tors = IntMatrix.from_rows([[c[d + j] % orders[j] for c in cols] for j in range(ell)], n)
    return StackyFan(d, orders, fan, free, tors)


def multiplicities(sf: StackyFan) -> tuple[int, ...]:
    """``a_i`` with ``beta_rig(e_i) = a_i v_i``: the content of each free part."""
    return tuple(content(c) for c in sf.beta_free.columns())


def rigidify(sf: StackyFan) -> StackyFan:
    """Kill the torsion of ``N``."""
    return StackyFan(sf.free_rank, (), sf.fan, sf.beta_free, IntMatrix.zeros(0, sf.n))


def canonicalize(sf: StackyFan) -> StackyFan:
    """Replace beta by the primitive rays over the torsion-free lattice."""
    return StackyFan(sf.free_rank, (), sf.fan, sf.fan.ray_matrix(), IntMatrix.zeros(0, sf.n))


def canonical_stacky_fan(fan: Fan) -> StackyFan:
    if not fan.rays_span():
        raise RaysDoNotSpan("the rays do not span N_Q")
    return canonicalize(StackyFan(fan.rank, (), fan, fan.ray_matrix(), IntMatrix.zeros(0, fan.n)))


# ---------------------------------------------------------------------------
# DG(beta)

@dataclass(frozen=True)
class PicardData:
    pic: FGAbelianGroup
    divisor_classes: tuple[Vector, ...]
    n: int = field(default=0)

    def divisor_generator(self, i: int) -> Vector:
        return tuple(int(k == i) for k in range(self.pic.generators))

    def class_of_divisor_combination(self, c: Sequence[int]) -> Vector:
        """Class of ``sum c_i D_i``."""
        return self.pic.class_of(tuple(c) + (0,) * (self.pic.generators - self.n))


def dg_from_matrices(B: IntMatrix, Q: IntMatrix) -> PicardData:
    """``coker([B Q]^T)`` with the images of the first ``B.cols`` dual basis vectors."""
    if B.rows != Q.rows:
        raise StackyFanError("B and Q must have the same codomain")
    n = B.cols
    G = cokernel(B.hstack(Q).T)
    unit = lambda i: tuple(int(k == i) for k in range(G.generators))
    classes = [G.class_of(unit(i)) for i in range(n)]
    # orient each free coordinate so that its first nonzero divisor class is positive
    flips = []
    for k in range(G.free_rank):
        first = next((c[k] for c in classes if c[k]), 0)
        if first < 0:
            flips.append(k)
    if flips:
        G = G.flip_free_coordinates(flips)
        classes = [G.class_of(unit(i)) for i in range(n)]
    return PicardData(G, tuple(classes), n)


def dg_group(sf: StackyFan, lift: Optional[IntMatrix] = None) -> PicardData:
    """Picard group ``DG(beta)`` and the divisor classes ``beta^vee(e_i*)``.

    ``lift`` replaces the default residue lift ``B`` (it must agree with
    beta modulo the torsion orders); the isomorphism class does not depend
    on it.
    """
    B = sf.lift_matrix() if lift is None else lift
    if lift is not None:
        if B.shape != (sf.free_rank + sf.ell, sf.n):
            raise StackyFanError("lift has the wrong shape")
        ref = sf.lift_matrix()
        for j, b in enumerate(sf.torsion_orders):
            r = sf.free_rank + j
            if any((x - y) % b for x, y in zip(B.row(r), ref.row(r))):
                raise StackyFanError("lift does not reduce to beta")
        if any(B.row(k) != ref.row(k) for k in range(sf.free_rank)):
            raise StackyFanError("lift changes the free part of beta")
    return dg_from_matrices(B, split_resolution(sf.free_rank, sf.torsion_orders))


def picard_group(sf: StackyFan) -> FGAbelianGroup:
    return dg_group(sf).pic


@dataclass(frozen=True)
class QuotientPresentation:
    """``[Z_Sigma / G]`` with ``G = Hom(character_group, C*)`` acting through ``action_weights``."""
    character_group: FGAbelianGroup
    action_weights: tuple[Vector, ...]
    cox_patterns: tuple[frozenset, ...]


def quotient_presentation(sf: StackyFan) -> QuotientPresentation:
    pd = dg_group(sf)
    return QuotientPresentation(pd.pic, pd.divisor_classes, tuple(cox_patterns(sf.fan)))


def dm_torus(sf: StackyFan) -> tuple[int, tuple[int, ...]]:
    """``(d, invariant factors of N_tor)``: the torus is ``(C*)^d x BN_tor^vee``."""
    return sf.free_rank, cyclic_sum(sf.torsion_orders).torsion


# ---------------------------------------------------------------------------
# The Picard exact sequences and their pushout squares

@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass
class SequenceReport:
    checks: list[Check]
    index_can_rig: int
    index_rig_full: int

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def as_dict(self) -> dict:
        return {"passed": self.passed,
                "index_can_rig": self.index_can_rig,
                "index_rig_full": self.index_rig_full,
                "checks": [{"name": c.name, "passed": c.passed, **c.detail} for c in self.checks]}


def canonical_to_rigid(sf: StackyFan) -> GroupHom:
    """``Pic(X^can) -> Pic(X^rig)``, ``O(D_i^can) -> a_i O(D_i)``."""
    can, rig = dg_group(canonicalize(sf)).pic, dg_group(rigidify(sf)).pic
    return GroupHom(can, rig, IntMatrix.diagonal(list(multiplicities(sf))))


def rigid_to_full(sf: StackyFan) -> GroupHom:
    """``Pic(X^rig) -> Pic(X)``: extend dual vectors by zero."""
    rig, full = dg_group(rigidify(sf)).pic, dg_group(sf).pic
    M = IntMatrix.identity(sf.n).vstack(IntMatrix.zeros(sf.ell, sf.n))
    return GroupHom(rig, full, M)


def root_bundles(sf: StackyFan) -> tuple[IntMatrix, IntMatrix]:
    """Matrices of ``e_j -> L_j`` into ``Pic(X^rig)`` and ``e_j -> L_j^(1/b_j)`` into ``Pic(X)``.

    ``L_j = sum_i c_ij D_i`` with ``c_ij`` the stored residues; its root is
    minus the ``j``-th extra generator of ``DG(beta)``, because the relation
    column of row ``d + j`` of ``[B Q]`` reads ``sum_i c_ij e_i* + b_j e_(n+j)* = 0``.
    """
    n, ell = sf.n, sf.ell
    L = sf.beta_torsion.T if ell else IntMatrix.zeros(n, 0)
    root = IntMatrix.zeros(n, ell).vstack(-IntMatrix.identity(ell))
    return L, root


def verify_pic_sequences(sf: StackyFan) -> SequenceReport:
    """Check both Picard sequences and both pushout squares.

    ``0 -> Pic(X^can) -> Pic(X^rig) -> sum Z/a_i -> 0`` and
    ``0 -> Pic(X^rig) -> Pic(X) -> sum Z/b_j -> 0``; each square
    ``Z^k --x--> Z^k`` over the left map of its row must be cocartesian.
    """
    n, ell = sf.n, sf.ell
    a = multiplicities(sf)
    b = sf.torsion_orders
    checks: list[Check] = []

    def add(name, ok, **detail):
        checks.append(Check(name, bool(ok), detail))

    # Row 1: canonical -> rigid -> sum Z/a_i -------------------------------
    f = canonical_to_rigid(sf)
    rig = f.target
    Za = cyclic_sum(a)
    q = GroupHom(rig, Za, IntMatrix.identity(n))
    add("can_rig.well_defined", f.is_well_defined() and q.is_well_defined())
    add("can_rig.injective", f.is_injective())
    add("can_rig.exact_middle", is_exact_at(f, q))
    add("can_rig.surjective", q.is_surjective())
    idx_a = f.cokernel_group().order()
    add("can_rig.index", idx_a == prod(a), index=idx_a, expected=prod(a))

    Zn = free_group(n)
    times_a = GroupHom(Zn, Zn, IntMatrix.diagonal(list(a)))
    to_can = GroupHom(Zn, f.source, IntMatrix.identity(n))
    P = pushout(times_a, to_can)
    induced = GroupHom(P, rig, IntMatrix.identity(n).hstack(f.matrix))
    add("can_rig.pushout", P.is_isomorphic(rig) and induced.is_isomorphism(),
        pushout=str(P), group=str(rig))

    # Row 2: rigid -> full -> sum Z/b_j ----------------------------------
    r = rigid_to_full(sf)
    full = r.target
    Zb = cyclic_sum(b)
    p = GroupHom(full, Zb, IntMatrix.zeros(ell, n).hstack(-IntMatrix.identity(ell)))
    add("rig_full.well_defined", r.is_well_defined() and p.is_well_defined())
    add("rig_full.injective", r.is_injective())
    add("rig_full.exact_middle", is_exact_at(r, p))
    add("rig_full.surjective", p.is_surjective())
    idx_b = r.cokernel_group().order()
    add("rig_full.index", idx_b == prod(b), index=idx_b, expected=prod(b))

    L, root = root_bundles(sf)
    Zl = free_group(ell)
    times_b = GroupHom(Zl, Zl, IntMatrix.diagonal(list(b)))
    to_rig = GroupHom(Zl, rig, L)
    # r*(L_j) must equal b_j L_j^(1/b_j): the residue formula against the extension class
    lhs = GroupHom(Zl, full, r.matrix @ L)
    rhs = GroupHom(Zl, full, root @ IntMatrix.diagonal(list(b)))
    add("rig_full.root_classes", homs_equal(lhs, rhs))
    P2 = pushout(times_b, to_rig)
    induced2 = GroupHom(P2, full, root.hstack(r.matrix))
    add("rig_full.pushout", P2.is_isomorphic(full) and induced2.is_isomorphism(),
        pushout=str(P2), group=str(full))

    return SequenceReport(checks, idx_a, idx_b)
