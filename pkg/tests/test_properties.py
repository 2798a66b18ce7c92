"""Bulk randomized property suites, seeded for reproducibility.

Each suite runs at least a thousand instances: coboundaries square to
zero, the total differential squares to zero, cup and wedge satisfy
Leibniz and associativity exactly, the Smith factorization identity
holds, and the trace calculus differential and normalization behave.
"""

import random
from fractions import Fraction
from itertools import combinations

from cochainforge.cech.complexes import (Cochain, SimplicialComplex, cup)
from cochainforge.cech.double import dc_wedge, random_double
from cochainforge.cech.snf import kernel_basis, mat_mul, smith_normal_form
from cochainforge.symcalc.rules import normalize
from cochainforge.symcalc.words import (DIFF, INV, PLAIN, U, U1, Generator,
                                        make_word, op_trace, op_word)

SEED = 20260808


def small_complexes():
    K1 = SimplicialComplex(5, [tuple(f) for f in combinations(range(5), 4)])
    K2 = SimplicialComplex(6, [(0, 1, 3), (0, 1, 5), (0, 2, 4), (0, 2, 5),
                               (0, 3, 4), (1, 2, 3), (1, 2, 4), (1, 4, 5),
                               (2, 3, 5), (3, 4, 5)])
    K3 = SimplicialComplex(4, [tuple(f) for f in combinations(range(4), 3)])
    return K1, K2, K3


def test_coboundary_squares_to_zero_bulk():
    rng = random.Random(SEED)
    K1, K2, K3 = small_complexes()
    count = 0
    while count < 1000:
        K = rng.choice((K1, K2, K3))
        p = rng.randint(0, K.dimension - 1)
        c = Cochain.from_vector(K, p, [rng.randint(-9, 9)
                                       for _ in K.simplices(p)])
        dd = c.coboundary().coboundary()
        assert all(v == 0 for v in dd.values.values())
        count += 1


def test_total_differential_squares_to_zero_bulk():
    rng = random.Random(SEED + 1)
    K1, K2, K3 = small_complexes()
    for _ in range(1000):
        K = rng.choice((K1, K3))
        L = rng.choice((K3,))
        a = random_double(K, L, rng.randint(0, 2), rng, 0.25)
        assert a.D().D().is_zero()


def test_cup_leibniz_bulk():
    rng = random.Random(SEED + 2)
    K1, K2, K3 = small_complexes()
    for _ in range(1000):
        K = rng.choice((K1, K2, K3))
        p = rng.randint(0, max(0, K.dimension - 1))
        q = rng.randint(0, max(0, K.dimension - 1 - p))
        a = Cochain.from_vector(K, p, [rng.randint(-4, 4)
                                       for _ in K.simplices(p)])
        b = Cochain.from_vector(K, q, [rng.randint(-4, 4)
                                       for _ in K.simplices(q)])
        lhs = cup(a, b).coboundary()
        rhs = cup(a.coboundary(), b) + cup(a, b.coboundary()).scale((-1) ** p)
        assert (lhs - rhs).values == {}


def test_wedge_leibniz_and_associativity_bulk():
    rng = random.Random(SEED + 3)
    K1, _, K3 = small_complexes()
    for _ in range(500):
        m, n = rng.randint(0, 2), rng.randint(0, 2)
        a = random_double(K1, K3, m, rng, 0.2)
        b = random_double(K1, K3, n, rng, 0.2)
        lhs = dc_wedge(a, b).D()
        rhs = dc_wedge(a.D(), b) + dc_wedge(a, b.D()).scale((-1) ** m)
        assert (lhs - rhs).is_zero()
    for _ in range(500):
        a = random_double(K1, K3, rng.randint(0, 1), rng, 0.2)
        b = random_double(K1, K3, rng.randint(0, 1), rng, 0.2)
        c = random_double(K1, K3, rng.randint(0, 1), rng, 0.2)
        assert (dc_wedge(dc_wedge(a, b), c)
                - dc_wedge(a, dc_wedge(b, c))).is_zero()


def test_smith_factorization_bulk():
    rng = random.Random(SEED + 4)
    for _ in range(1000):
        n = rng.randint(1, 12)
        m = rng.randint(1, 12)
        A = [[rng.randint(-20, 20) for _ in range(m)] for _ in range(n)]
        s = smith_normal_form(A)
        assert mat_mul(mat_mul(s.U, A), s.V) == s.D
        divisors = s.divisors
        assert all(d > 0 for d in divisors)
        for a, b in zip(divisors, divisors[1:]):
            assert b % a == 0
        K = kernel_basis(A)
        if K and K[0]:
            assert all(all(x == 0 for x in row) for row in mat_mul(A, K))


GENS = [Generator("f", U1), Generator("g", U1, (), "alpha_g"),
        Generator("w", U), Generator("v", U)]


def _random_scalar_expr(rng):
    factors = []
    for _ in range(rng.randint(1, 2)):
        word = [(rng.choice(GENS), rng.choice([PLAIN, INV, DIFF]))
                for _ in range(rng.randint(1, 4))]
        factors.append(op_trace(op_word(make_word(word),
                                        coeff=rng.randint(-3, 3))))
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def test_trace_calculus_d_squared_and_idempotence_bulk():
    rng = random.Random(SEED + 5)
    for _ in range(1000):
        e = _random_scalar_expr(rng)
        nf, _ = normalize(e.d().d())
        assert nf.is_zero()
        nf1, _ = normalize(e)
        nf2, _ = normalize(nf1)
        assert nf1 == nf2
