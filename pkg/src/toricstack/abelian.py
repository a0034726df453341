"""Finitely generated abelian groups presented as matrix cokernels.

A group is ``Z^g / colspan(R)`` for a relation matrix ``R`` with ``g`` rows.
Its canonical coordinates come from the Smith form ``U R V = D``: the free
coordinates first, then one coordinate per invariant factor ``>= 2``.
Invariant factors equal to 1 are dropped.

>>> str(cokernel(IntMatrix.from_columns([[2, -2]])))
'Z x Z/2'
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod
from typing import Optional, Sequence

from .errors import KernelNotFree, NotDMTorus, ToricStackError
from .matrix import IntMatrix, column_hnf, kernel, snf

Vector = tuple[int, ...]


@dataclass(frozen=True)
class FGAbelianGroup:
    presentation: IntMatrix
    free_rank: int
    torsion: tuple[int, ...]
    to_canonical: IntMatrix
    from_canonical: IntMatrix = field(repr=False)

    @property
    def generators(self) -> int:
        return self.presentation.rows

    @property
    def coordinates(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def iso_type(self) -> tuple[int, tuple[int, ...]]:
        return self.free_rank, self.torsion

    def is_isomorphic(self, other: "FGAbelianGroup") -> bool:
        return self.iso_type == other.iso_type

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> Optional[int]:
        """Group order, or None when infinite."""
        return prod(self.torsion) if self.free_rank == 0 else None

    def is_cyclic(self) -> bool:
        return self.coordinates <= 1

    def class_of(self, x: Sequence[int]) -> Vector:
        """Normalized canonical coordinates of the generator combination ``x``.

        Torsion coordinates are reduced into ``[0, d)``, so two vectors give
        the same answer exactly when they differ by a relation.
        """
        y = self.to_canonical.apply(tuple(x))
        r = self.free_rank
        return y[:r] + tuple(c % d for c, d in zip(y[r:], self.torsion))

    def is_zero(self, x: Sequence[int]) -> bool:
        return not any(self.class_of(x))

    def lift(self, c: Sequence[int]) -> Vector:
        """A generator combination whose class is ``c``."""
        return self.from_canonical.apply(tuple(c))

    @cached_property
    def _relation_hnf(self):
        return column_hnf(self.presentation)

    def in_relations(self, x: Sequence[int]) -> bool:
        """Hermite membership test in the relation lattice."""
        return self._relation_hnf.contains(x)

    def flip_free_coordinates(self, flips: Sequence[int]) -> "FGAbelianGroup":
        """Same group with the listed free coordinates negated."""
        sign = [(-1 if k in set(flips) else 1) for k in range(self.coordinates)]
        to_c = IntMatrix.from_rows([[s * x for x in row] for s, row in zip(sign, self.to_canonical.data)],
                                   self.generators)
        from_c = IntMatrix.from_rows([[s * x for s, x in zip(sign, row)] for row in self.from_canonical.data],
                                     self.coordinates)
        return FGAbelianGroup(self.presentation, self.free_rank, self.torsion, to_c, from_c)

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def cokernel(M: IntMatrix) -> FGAbelianGroup:
    """``Z^rows / colspan(M)`` in canonical form."""
    s = snf(M)
    g = M.rows
    facs = s.invariant_factors
    tors_idx = [i for i, d in enumerate(facs) if d != 1]
    free_idx = list(range(len(facs), g))
    keep = free_idx + tors_idx
    return FGAbelianGroup(
        presentation=M,
        free_rank=len(free_idx),
        torsion=tuple(facs[i] for i in tors_idx),
        to_canonical=s.U.select_rows(keep),
        from_canonical=s.U_inv.select_columns(keep),
    )


def free_group(rank: int) -> FGAbelianGroup:
    return cokernel(IntMatrix.zeros(rank, 0))


def cyclic_sum(orders: Sequence[int]) -> FGAbelianGroup:
    """``Z/b_1 + ... + Z/b_k`` presented on ``k`` generators (orders 1 allowed)."""
    return cokernel(IntMatrix.diagonal(list(orders)))


def direct_sum(*groups: FGAbelianGroup) -> FGAbelianGroup:
    m = IntMatrix.zeros(0, 0)
    for G in groups:
        R = G.presentation
        top = m.hstack(IntMatrix.zeros(m.rows, R.cols))
        bottom = IntMatrix.zeros(R.rows, m.cols).hstack(R)
        m = top.vstack(bottom)
    return cokernel(m)


def quotient_mod(A: FGAbelianGroup, b: int) -> FGAbelianGroup:
    """``A / bA`` on the same generators as ``A``; use ``class_of`` for cosets."""
    if b < 1:
        raise ToricStackError("quotient_mod needs b >= 1")
    g = A.generators
    return cokernel(A.presentation.hstack(IntMatrix.identity(g).scale(b)))


def quotient_mod_order(A: FGAbelianGroup, b: int) -> int:
    return b ** A.free_rank * prod(gcd(b, d) for d in A.torsion)


def two_term_resolution(A: FGAbelianGroup) -> IntMatrix:
    """``Q = [0; diag(torsion)]``, so ``coker(Q) = Z^d + sum Z/d_j`` in that order."""
    return split_resolution(A.free_rank, A.torsion)


def split_resolution(free_rank: int, orders: Sequence[int]) -> IntMatrix:
    ell = len(orders)
    return IntMatrix.zeros(free_rank, ell).vstack(IntMatrix.diagonal(list(orders)))


# ---------------------------------------------------------------------------
# Homomorphisms

@dataclass(frozen=True)
class GroupHom:
    """Hom given by an integer matrix on presentation generators."""
    source: FGAbelianGroup
    target: FGAbelianGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.generators, self.source.generators):
            raise ToricStackError(
                f"hom matrix has shape {self.matrix.shape}, expected "
                f"{(self.target.generators, self.source.generators)}")

    def __call__(self, x: Sequence[int]) -> Vector:
        return self.matrix.apply(tuple(x))

    def is_well_defined(self) -> bool:
        return all(self.target.in_relations(self(c)) for c in self.source.presentation.columns())

    def _with_target_relations(self) -> IntMatrix:
        return self.matrix.hstack(self.target.presentation)

    def preimage_lattice(self) -> IntMatrix:
        """Generators of ``{x : f(x) in relations of target}`` as columns."""
        K = kernel(self._with_target_relations())
        return K.select_rows(range(self.source.generators))

    def kernel_group(self) -> FGAbelianGroup:
        """``ker f`` as an abstract group (preimage lattice modulo source relations)."""
        P = self.preimage_lattice()
        hf = column_hnf(P)
        coords = [hf.solve(c) for c in self.source.presentation.columns()]
        if any(c is None for c in coords):
            raise ToricStackError("hom is not well defined")
        return cokernel(IntMatrix.from_columns(coords, rows=hf.rank))

    def cokernel_group(self) -> FGAbelianGroup:
        return cokernel(self._with_target_relations())

    def is_injective(self) -> bool:
        return all(self.source.in_relations(c) for c in self.preimage_lattice().columns())

    def is_surjective(self) -> bool:
        return self.cokernel_group().is_trivial()

    def is_isomorphism(self) -> bool:
        return self.is_well_defined() and self.is_injective() and self.is_surjective()

    def then(self, other: "GroupHom") -> "GroupHom":
        return GroupHom(self.source, other.target, other.matrix @ self.matrix)


def identity_hom(A: FGAbelianGroup) -> GroupHom:
    return GroupHom(A, A, IntMatrix.identity(A.generators))


def hom_well_defined(h: GroupHom) -> bool:
    return h.is_well_defined()


def homs_equal(f: GroupHom, g: GroupHom) -> bool:
    """Do two homs with the same source and target agree on every generator?"""
    d = f.matrix - g.matrix
    return all(f.target.in_relations(c) for c in d.columns())


def is_exact_at(f: GroupHom, g: GroupHom) -> bool:
    """``image(f) == kernel(g)`` inside the middle group."""
    B = f.target
    img = f.matrix.hstack(B.presentation)
    ker = g.preimage_lattice().hstack(B.presentation)
    img_h, ker_h = column_hnf(img), column_hnf(ker)
    return (all(ker_h.contains(c) for c in img.columns())
            and all(img_h.contains(c) for c in ker.columns()))


def pushout(f: GroupHom, g: GroupHom) -> FGAbelianGroup:
    """Cokernel of ``x -> (f(x), -g(x))`` into ``target(f) + target(g)``.

    Generators of the result are those of ``target(f)`` followed by those of
    ``target(g)``.
    """
    if f.source.generators != g.source.generators:
        raise ToricStackError("pushout needs homs with a common source")
    Rf, Rg = f.target.presentation, g.target.presentation
    glue = f.matrix.vstack(-g.matrix)
    rel_f = Rf.vstack(IntMatrix.zeros(Rg.rows, Rf.cols))
    rel_g = IntMatrix.zeros(Rf.rows, Rg.cols).vstack(Rg)
    return cokernel(glue.hstack(rel_f, rel_g))


# ---------------------------------------------------------------------------
# Length-one complexes

@dataclass(frozen=True)
class TwoTermComplex:
    """The complex ``[A0 -> A1]`` in degrees -1, 0."""
    phi: GroupHom


def reduce_complex(c: TwoTermComplex) -> tuple[int, FGAbelianGroup]:
    """``[A0 -> A1]`` is quasi-isomorphic to ``[ker -> coker]`` with zero differential.

    Only defined when the kernel is free; returns its rank and the cokernel.
    """
    if not c.phi.is_well_defined():
        raise ToricStackError("complex differential is not a well-defined hom")
    ker = c.phi.kernel_group()
    if ker.torsion:
        raise KernelNotFree(f"kernel {ker} has torsion")
    return ker.free_rank, c.phi.cokernel_group()


def dm_torus_form(c: TwoTermComplex) -> tuple[int, tuple[int, ...]]:
    """``(torus rank, invariant factors of the finite band)``."""
    try:
        r, coker = reduce_complex(c)
    except KernelNotFree as exc:
        raise NotDMTorus(str(exc)) from exc
    if not coker.is_finite():
        raise NotDMTorus(f"cokernel {coker} is infinite")
    return r, coker.torsion


def complex_from_matrix(M: IntMatrix) -> TwoTermComplex:
    """``Z^cols -> Z^rows`` given by ``M`` as a complex of free groups."""
    return TwoTermComplex(GroupHom(free_group(M.cols), free_group(M.rows), M))
