import random
from itertools import product
from math import gcd, prod

import pytest

from toricstack import (GroupHom, IntMatrix, KernelNotFree, NotDMTorus, TwoTermComplex, cokernel,
                        complex_from_matrix, cyclic_sum, direct_sum, dm_torus_form, free_group,
                        hom_well_defined, is_exact_at, pushout, quotient_mod, reduce_complex,
                        two_term_resolution)
from toricstack.abelian import identity_hom, quotient_mod_order

from oracles import random_matrix, random_unimodular


def col(*v):
    return IntMatrix.from_columns([v])


def test_cokernel_examples():
    assert cokernel(IntMatrix.zeros(3, 0)).iso_type == (3, ())
    assert cokernel(col(2, -3)).iso_type == (1, ())
    G = cokernel(col(2, -2))
    assert G.iso_type == (1, (2,)) and str(G) == "Z x Z/2"
    assert str(cokernel(IntMatrix.identity(2))) == "0"


def test_canonical_coordinates_kill_relations():
    rng = random.Random(3)
    for _ in range(200):
        M = random_matrix(rng, 4, 4, 6)
        G = cokernel(M)
        r = G.free_rank
        for c in M.columns():
            y = G.to_canonical.apply(c)
            assert not any(y[:r])
            assert all(x % d == 0 for x, d in zip(y[r:], G.torsion))
            assert G.is_zero(c)
        assert all(d >= 2 for d in G.torsion)
        assert all(b % a == 0 for a, b in zip(G.torsion, G.torsion[1:]))
        for k in range(G.coordinates):
            e = tuple(int(i == k) for i in range(G.coordinates))
            assert G.class_of(G.lift(e)) == e


def test_presentation_change_keeps_canonical_form():
    rng = random.Random(4)
    for _ in range(200):
        M = random_matrix(rng, 3, 3, 5)
        P, Q = random_unimodular(M.rows, rng), random_unimodular(M.cols, rng)
        assert cokernel(P @ M @ Q).iso_type == cokernel(M).iso_type


def test_hom_well_defined():
    Z2, Z4 = cyclic_sum([2]), cyclic_sum([4])
    assert not hom_well_defined(GroupHom(Z2, Z4, IntMatrix.from_rows([[1]])))
    assert hom_well_defined(GroupHom(Z2, Z4, IntMatrix.from_rows([[2]])))
    G = cokernel(col(2, -2))
    assert hom_well_defined(identity_hom(G))


def test_quotient_mod_examples():
    Z = free_group(1)
    Q = quotient_mod(Z, 2)
    assert Q.iso_type == (0, (2,))
    assert Q.class_of((3,)) == Q.class_of((5,)) == (1,)
    assert quotient_mod(Z, 1).is_trivial()
    assert quotient_mod(cokernel(col(0, 2)), 2).iso_type == (0, (2, 2))


def test_quotient_mod_order_formula():
    rng = random.Random(5)
    for _ in range(200):
        A = cokernel(random_matrix(rng, 3, 3, 6))
        b = rng.randint(1, 6)
        Q = quotient_mod(A, b)
        assert Q.is_finite()
        assert Q.order() == quotient_mod_order(A, b) == b ** A.free_rank * prod(gcd(b, d) for d in A.torsion)


def test_two_term_resolution():
    assert two_term_resolution(free_group(1)).shape == (1, 0)
    assert two_term_resolution(cokernel(col(0, 2))) == col(0, 2)
    A = cyclic_sum([2, 4])
    Q = two_term_resolution(A)
    assert Q == IntMatrix.diagonal([2, 4])
    assert cokernel(Q).iso_type == A.iso_type


def test_reduce_complex_examples():
    assert reduce_complex(complex_from_matrix(IntMatrix.from_rows([[6, 4]])))[0] == 1
    assert reduce_complex(complex_from_matrix(IntMatrix.from_rows([[6, 4]])))[1].iso_type == (0, (2,))
    r, C = reduce_complex(complex_from_matrix(IntMatrix.identity(1)))
    assert r == 0 and C.is_trivial()
    assert dm_torus_form(complex_from_matrix(IntMatrix.from_rows([[6, 4]]))) == (1, (2,))
    assert dm_torus_form(complex_from_matrix(IntMatrix.identity(3))) == (0, ())
    assert dm_torus_form(complex_from_matrix(IntMatrix.diagonal([2, 3]))) == (0, (6,))


def test_reduce_complex_rejects_torsion_kernel():
    # Z/2 -> Z by zero: the kernel is Z/2
    phi = GroupHom(cyclic_sum([2]), free_group(1), IntMatrix.zeros(1, 1))
    with pytest.raises(KernelNotFree):
        reduce_complex(TwoTermComplex(phi))
    with pytest.raises(NotDMTorus):
        dm_torus_form(TwoTermComplex(phi))


def test_dm_torus_needs_finite_cokernel():
    with pytest.raises(NotDMTorus):
        dm_torus_form(complex_from_matrix(IntMatrix.zeros(1, 1)))


def test_reduce_agrees_with_dm_form():
    for w in product(range(0, 4), repeat=2):
        c = complex_from_matrix(IntMatrix.from_rows([list(w)]))
        r, C = reduce_complex(c)
        try:
            assert dm_torus_form(c) == (r, C.torsion)
        except NotDMTorus:
            assert not C.is_finite()


def test_pushout_examples():
    Z = free_group(1)
    idZ = identity_hom(Z)
    assert pushout(idZ, idZ).iso_type == (1, ())
    two = GroupHom(Z, Z, IntMatrix.from_rows([[2]]))
    three = GroupHom(Z, Z, IntMatrix.from_rows([[3]]))
    assert pushout(two, idZ).iso_type == (1, ())
    assert pushout(two, three).iso_type == (1, ())
    with pytest.raises(ValueError):
        pushout(idZ, identity_hom(free_group(2)))


def test_pushout_exact_shape():
    """With ``f`` injective, ``target(g) -> P`` has cokernel ``coker f``."""
    rng = random.Random(6)
    checked = 0
    for _ in range(300):
        n = rng.randint(1, 2)
        S = free_group(n)
        F = random_matrix(rng, n, n, 4)
        if F.rows != n or F.cols != n:
            continue
        f = GroupHom(S, free_group(n), F)
        if not f.is_injective():
            continue
        T = cokernel(random_matrix(rng, 2, 2, 4))
        G = IntMatrix.from_rows([[rng.randint(-3, 3) for _ in range(n)] for _ in range(T.generators)], n)
        g = GroupHom(S, T, G)
        P = pushout(f, g)
        # generators of P: target(f) then target(g)
        onto = IntMatrix.identity(P.generators)
        assert GroupHom(direct_sum(f.target, T), P, onto).is_surjective()
        inc = IntMatrix.zeros(n, T.generators).vstack(IntMatrix.identity(T.generators))
        j = GroupHom(T, P, inc)
        assert j.is_well_defined()
        assert j.cokernel_group().iso_type == f.cokernel_group().iso_type
        checked += 1
    assert checked > 50


def test_exactness_helper():
    Z = free_group(1)
    two = GroupHom(Z, Z, IntMatrix.from_rows([[2]]))
    q = GroupHom(Z, cyclic_sum([2]), IntMatrix.identity(1))
    assert is_exact_at(two, q)
    assert not is_exact_at(GroupHom(Z, Z, IntMatrix.from_rows([[4]])), q)


def test_kernel_group():
    h = GroupHom(cyclic_sum([4]), cyclic_sum([2]), IntMatrix.identity(1))
    assert h.kernel_group().iso_type == (0, (2,))
    assert h.is_surjective() and not h.is_injective()
