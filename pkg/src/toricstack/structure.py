"""Root constructions, the canonical/root/gerbe decomposition, and recognizers.

A stacky fan is rebuilt from three layers: the canonical stacky fan of its
coarse fan, the divisor multiplicities ``a_i`` (roots along the toric
divisors), and one class ``[L_j]`` in ``Pic(X^rig) / b_j Pic(X^rig)`` per
torsion summand (roots of line bundles, i.e. essentially trivial gerbes).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd, lcm
from typing import Optional, Sequence, Union

from .abelian import FGAbelianGroup, cyclic_sum, cokernel, quotient_mod
from .errors import HasGerbe, IncomparableFans, NotALine, StackyFanError
from .fan import Fan, is_complete, make_fan, span_defect
from .matrix import IntMatrix, determinant, xgcd
from .stacky import (StackyFan, _build, canonicalize, dg_group, dm_torus, make_stacky_fan,
                     multiplicities, rigidify)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class GerbeLayer:
    """Pairs ``(b_j, class_j)``; ``class_j`` lives in ``quotient_mod(Pic(X^rig), b_j)``."""
    entries: tuple[tuple[int, Vector], ...] = ()

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(b for b, _ in self.entries)


@dataclass(frozen=True)
class Decomposition:
    canonical: StackyFan
    multiplicities: tuple[int, ...]
    gerbe: GerbeLayer = field(default_factory=GerbeLayer)

    def as_dict(self) -> dict:
        return {"canonical": self.canonical.as_dict(),
                "multiplicities": list(self.multiplicities),
                "gerbe": [{"order": b, "class": list(c)} for b, c in self.gerbe]}


@dataclass(frozen=True)
class Isomorphic:
    witness: dict

    verdict = "isomorphic"


@dataclass(frozen=True)
class Distinct:
    invariant: str
    values: tuple

    verdict = "distinct"


@dataclass(frozen=True)
class Inconclusive:
    reason: str

    verdict = "inconclusive"


Verdict = Union[Isomorphic, Distinct, Inconclusive]


# ---------------------------------------------------------------------------
# Root constructions

def root_divisors(sf: StackyFan, a: Sequence[int]) -> StackyFan:
    """Take the ``a_i``-th root along each toric divisor ``D_i``."""
    if sf.ell:
        raise HasGerbe("roots of divisors need an orbifold stacky fan")
    a = tuple(int(x) for x in a)
    if len(a) != sf.n or any(x < 1 for x in a):
        raise StackyFanError(f"need {sf.n} positive root orders, got {list(a)}")
    cols = [tuple(k * x for x in c) for k, c in zip(a, sf.beta_free.columns())]
    free = IntMatrix.from_columns(cols, rows=sf.free_rank) if cols else sf.beta_free
    return StackyFan(sf.free_rank, (), sf.fan, free, sf.beta_torsion)


def root_line_bundle(sf: StackyFan, c: Sequence[int], b: int) -> StackyFan:
    """``b``-th root of ``L = sum c_i D_i``: append ``Z/b`` to ``N`` with residues ``c mod b``."""
    c = tuple(int(x) for x in c)
    b = int(b)
    if b < 2:
        raise StackyFanError("root order must be >= 2")
    if len(c) != sf.n:
        raise StackyFanError(f"line bundle needs {sf.n} coefficients, got {len(c)}")
    row = IntMatrix.from_rows([[x % b for x in c]], sf.n)
    return StackyFan(sf.free_rank, sf.torsion_orders + (b,), sf.fan, sf.beta_free,
                     sf.beta_torsion.vstack(row))


# ---------------------------------------------------------------------------
# Decomposition

def gerbe_classes(sf: StackyFan) -> GerbeLayer:
    """``[L_j] = [sum_i c_ij D_i]`` modulo ``b_j`` in ``Pic(X^rig)``."""
    rig = dg_group(rigidify(sf)).pic
    entries = []
    for j, b in enumerate(sf.torsion_orders):
        entries.append((b, quotient_mod(rig, b).class_of(sf.beta_torsion.row(j))))
    return GerbeLayer(tuple(entries))


def decompose(sf: StackyFan) -> Decomposition:
    return Decomposition(canonicalize(sf), multiplicities(sf), gerbe_classes(sf))


def recompose(dec: Decomposition) -> StackyFan:
    """Rebuild a stacky fan: divisor roots first, then one line-bundle root per gerbe entry."""
    can = dec.canonical
    if not can.is_canonical():
        raise StackyFanError("decomposition base is not a canonical stacky fan")
    base = root_divisors(can, dec.multiplicities)
    rig = dg_group(base).pic
    out = base
    for b, cls in dec.gerbe:
        Q = quotient_mod(rig, b)
        cls = tuple(int(x) for x in cls)
        if len(cls) != Q.coordinates or Q.class_of(Q.lift(cls)) != cls:
            raise StackyFanError(f"{list(cls)} is not a normalized class of {Q}")
        # Q is presented on the divisor generators, so a lift is a divisor combination
        out = root_line_bundle(out, Q.lift(cls), b)
    return out


# ---------------------------------------------------------------------------
# Comparison

def _rational_solve_map(src: Sequence[Vector], dst: Sequence[Vector], d: int) -> Optional[IntMatrix]:
    """Integer ``g`` with ``g src_i = dst_i`` for all ``i`` and ``det g = +-1``, if one exists."""
    # pick d independent source vectors by rational elimination
    basis, echelon = [], []
    for k, v in enumerate(src):
        w = [Fraction(x) for x in v]
        for piv, row in echelon:
            if w[piv]:
                f = w[piv] / row[piv]
                w = [x - f * y for x, y in zip(w, row)]
        piv = next((i for i, x in enumerate(w) if x), None)
        if piv is not None:
            echelon.append((piv, w))
            basis.append(k)
        if len(basis) == d:
            break
    if len(basis) < d:
        return None
    # g S = T  =>  S^T g^T = T^T, solve column by column with Gauss-Jordan
    S = [[Fraction(src[k][i]) for i in range(d)] for k in basis]
    T = [[Fraction(dst[k][i]) for i in range(d)] for k in basis]
    aug = [S[r] + T[r] for r in range(d)]
    for col in range(d):
        p = next(r for r in range(col, d) if aug[r][col])
        aug[col], aug[p] = aug[p], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(d):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    gT = [row[d:] for row in aug]
    if any(x.denominator != 1 for row in gT for x in row):
        return None
    g = IntMatrix.from_rows([[int(gT[j][i]) for j in range(d)] for i in range(d)], d)
    if abs(determinant(g)) != 1:
        return None
    if any(g.apply(s) != tuple(t) for s, t in zip(src, dst)):
        return None
    return g


def fan_alignments(f1: Fan, f2: Fan, limit: int = 8):
    """Yield ``(perm, g)``: ray ``i`` of ``f1`` goes to ray ``perm[i]`` of ``f2`` via ``g in GL(Z^d)``."""
    if f1.rank != f2.rank or f1.n != f2.n:
        return
    n = f1.n
    if n > limit:
        raise IncomparableFans(f"ray alignment search is capped at {limit} rays")
    target = {frozenset(c) for c in f2.max_cones}
    if len(target) != len(f1.max_cones):
        return
    d = f1.rank
    for perm in permutations(range(n)):
        if {frozenset(perm[i] for i in c) for c in f1.max_cones} != target:
            continue
        if d == 0:
            yield perm, IntMatrix.identity(0)
            continue
        g = _rational_solve_map(f1.rays, [f2.rays[perm[i]] for i in range(n)], d)
        if g is not None:
            yield perm, g


def _units(b: int) -> list[int]:
    return [u for u in range(1, b) if gcd(u, b) == 1] or [1]


def _torsion_matchings(orders1, orders2):
    """Bijections ``sigma`` with ``orders2[sigma[j]] == orders1[j]``."""
    for sigma in permutations(range(len(orders2))):
        if all(orders2[s] == b for s, b in zip(sigma, orders1)):
            yield sigma


def hard_invariants(sf: StackyFan) -> dict:
    pic = dg_group(sf).pic
    return {"pic": pic.iso_type,
            "multiplicities": tuple(sorted(multiplicities(sf))),
            "torus_rank": sf.free_rank,
            "gerbe_factors": dm_torus(sf)[1]}


def compare(sf1: StackyFan, sf2: StackyFan) -> Verdict:
    """Decide isomorphism of the stacks of two stacky fans where the data allow it.

    ``Isomorphic`` carries the ray permutation, the lattice map, the
    torsion matching and the unit twists.  Only hard invariants are used
    for ``Distinct``; anything else that fails to match is ``Inconclusive``.
    """
    if sf1.free_rank != sf2.free_rank or sf1.n != sf2.n:
        raise IncomparableFans("stacky fans live over fans of different size")
    aligns = list(fan_alignments(sf1.fan, sf2.fan))
    if not aligns:
        raise IncomparableFans("no ray permutation identifies the two coarse fans")

    inv1, inv2 = hard_invariants(sf1), hard_invariants(sf2)
    for key in ("torus_rank", "gerbe_factors", "multiplicities", "pic"):
        if inv1[key] != inv2[key]:
            return Distinct(key, (inv1[key], inv2[key]))

    a1, a2 = multiplicities(sf1), multiplicities(sf2)
    rig2 = dg_group(rigidify(sf2)).pic
    for perm, g in aligns:
        if any(a2[perm[i]] != a1[i] for i in range(sf1.n)):
            continue
        for sigma in _torsion_matchings(sf1.torsion_orders, sf2.torsion_orders):
            units = []
            for j, b in enumerate(sf1.torsion_orders):
                Q = quotient_mod(rig2, b)
                moved = [0] * sf1.n
                for i, x in enumerate(sf1.beta_torsion.row(j)):
                    moved[perm[i]] = x
                target = Q.class_of(sf2.beta_torsion.row(sigma[j]))
                u = next((u for u in _units(b)
                          if Q.class_of([u * x for x in moved]) == target), None)
                if u is None:
                    break
                units.append(u)
            else:
                return Isomorphic({"ray_permutation": list(perm),
                                   "lattice_map": [list(r) for r in g.tolist()],
                                   "torsion_matching": list(sigma),
                                   "unit_twists": units})
    return Inconclusive("invariants agree but no aligned identification of the gerbe classes was found")


# ---------------------------------------------------------------------------
# Weighted projective stacks

@dataclass(frozen=True)
class NotWPS:
    reason: str


def recognize_wps(sf: StackyFan) -> Union[tuple[int, ...], NotWPS]:
    """Weights ``w`` with ``X = P(w)``, or the condition that fails."""
    if not is_complete(sf.fan):
        return NotWPS("fan is not complete")
    pd = dg_group(sf)
    pic = pd.pic
    if not pic.is_cyclic():
        return NotWPS(f"Picard group {pic} is not cyclic")
    if sf.is_point():
        return (pic.order(),)
    if pic.free_rank != 1:
        return NotWPS(f"Picard group {pic} is not infinite cyclic")
    w = tuple(c[0] for c in pd.divisor_classes)
    if all(x > 0 for x in w):
        return w
    if all(x < 0 for x in w):
        return tuple(-x for x in w)
    return NotWPS("mixed signs")


def wps_stacky_fan(w: Sequence[int]) -> StackyFan:
    """Stacky fan of ``P(w)``: ``N = Z^(n+1) / Z w`` and ``beta`` the quotient map."""
    w = tuple(int(x) for x in w)
    if not w or any(x < 1 for x in w):
        raise StackyFanError("weights must be positive")
    if len(w) == 1:
        return make_stacky_fan(0, [w[0]] if w[0] >= 2 else [], [], [])
    N = cokernel(IntMatrix.from_columns([w]))
    d = N.free_rank
    beta = [N.class_of(tuple(int(i == k) for k in range(len(w)))) for i in range(len(w))]
    cones = [c for c in combinations(range(len(w)), d)]
    return make_stacky_fan(d, N.torsion, beta, cones)


# ---------------------------------------------------------------------------
# Complete toric lines

def line_stacky_fan(a1: int, a2: int) -> StackyFan:
    if a1 < 1 or a2 < 1:
        raise StackyFanError("line multiplicities must be positive")
    return make_stacky_fan(1, [], [[a1], [-a2]], [[0], [1]])


@dataclass(frozen=True)
class LineReport:
    multiplicities: tuple[int, int]
    pic: FGAbelianGroup
    gcd: int
    lcm: int
    weights: tuple[int, int]
    k: tuple[int, int]

    def identity_holds(self) -> bool:
        (a1, a2), (k1, k2) = self.multiplicities, self.k
        return Fraction(k1, a1) + Fraction(k2, a2) == Fraction(1, self.lcm)

    def as_dict(self) -> dict:
        return {"multiplicities": list(self.multiplicities), "pic": self.pic.as_dict(),
                "gcd": self.gcd, "lcm": self.lcm, "weights": list(self.weights),
                "k": list(self.k), "identity": self.identity_holds()}


def classify_toric_line(sf: StackyFan) -> LineReport:
    """Pic, weights ``(m/a_1, m/a_2)`` and ``(k_1, k_2)`` with ``k_1/a_1 + k_2/a_2 = 1/m``."""
    if sf.free_rank != 1:
        raise NotALine(f"lattice rank is {sf.free_rank}, not 1")
    if not sf.is_orbifold():
        raise NotALine("stacky fan has a gerbe")
    if sf.n != 2 or not is_complete(sf.fan):
        raise NotALine("fan is not the complete fan of P^1")
    a1, a2 = multiplicities(sf)
    m = lcm(a1, a2)
    p, q = m // a1, m // a2
    # k1 p + k2 q = 1 with the least k2 >= 0
    k2 = 0 if p == 1 else xgcd(q, p)[1] % p
    k1 = (1 - k2 * q) // p
    return LineReport((a1, a2), dg_group(sf).pic, gcd(a1, a2), m, (p, q), (k1, k2))


# ---------------------------------------------------------------------------
# Splitting off a torus factor

def torus_split(d: int, torsion_orders: Sequence[int], beta: Sequence[Sequence[int]],
                max_cones: Sequence[Sequence[int]]) -> tuple[StackyFan, int, tuple[int, ...]]:
    """``(core, torus_rank, gerbe_factors)`` for data whose rays need not span.

    The core is a spanning stacky fan on the saturation of the ray lattice.
    With no rays at all the core is the bare point and ``N`` goes entirely
    into the torus rank and the gerbe factors.
    """
    if not beta:
        core = make_stacky_fan(0, [], [], [])
        return core, int(d), cyclic_sum([int(b) for b in torsion_orders]).torsion
    raw = _build(d, torsion_orders, beta, max_cones, require_span=False)
    r, k, P = span_defect(raw.fan)
    cols = [P.apply(c) + t for c, t in zip(raw.beta_free.columns(), raw.beta_torsion.columns())]
    core = make_stacky_fan(r, raw.torsion_orders, cols, raw.fan.max_cones)
    return core, k, ()
