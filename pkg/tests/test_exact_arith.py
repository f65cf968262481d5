import random
from fractions import Fraction as F

import pytest

from sympkit.exact_arith import (
    Cyclotomic,
    GaussianRational,
    PrimeFieldElem,
    QuadExtElem,
    UPoly,
    cyclotomic_polynomial,
    format_gaussian,
    format_rational,
    frobenius,
    is_odd_prime,
    lcm_upto,
    one_like,
    parse_gaussian,
    quadratic_nonresidue,
    rational_sqrt,
    solve_sum_of_squares,
)


def test_rational_sqrt():
    assert rational_sqrt(F(4)) == 2
    assert rational_sqrt(F(9, 4)) == F(3, 2)
    assert rational_sqrt(F(0)) == 0
    assert rational_sqrt(F(2)) is None
    assert rational_sqrt(F(-1)) is None
    assert rational_sqrt(F(49, 121)) == F(7, 11)


def test_is_odd_prime():
    assert [n for n in range(30) if is_odd_prime(n)] == [3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_gaussian_basics():
    i = GaussianRational.i()
    assert i * i == -1
    z = GaussianRational(F(1, 2), F(-3, 4))
    assert z + z.conjugate() == 1
    assert z * z.inverse() == 1
    assert z ** 0 == 1
    assert z ** -2 == (z * z).inverse()
    assert bool(GaussianRational(0)) is False
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


def test_gaussian_field_axioms_random():
    rng = random.Random(7)

    def rand():
        return GaussianRational(
            F(rng.randint(-9, 9), rng.randint(1, 9)),
            F(rng.randint(-9, 9), rng.randint(1, 9)),
        )

    for _ in range(50):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if a:
            assert a * a.inverse() == 1


def test_gaussian_norm_and_conjugation():
    rng = random.Random(8)
    for _ in range(30):
        a = GaussianRational(rng.randint(-6, 6), rng.randint(-6, 6))
        b = GaussianRational(rng.randint(-6, 6), rng.randint(-6, 6))
        assert (a * b).norm() == a.norm() * b.norm()
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()


def test_format_rational():
    assert format_rational(F(3)) == "3"
    assert format_rational(F(-19, 8)) == "-19/8"


def test_format_parse_gaussian():
    assert format_gaussian(GaussianRational(F(1, 2), F(3, 4))) == "1/2+3/4*i"
    assert format_gaussian(GaussianRational(F(1, 2), F(-3, 4))) == "1/2-3/4*i"
    assert format_gaussian(GaussianRational(0, 1)) == "1*i"
    assert format_gaussian(GaussianRational(0, -1)) == "-1*i"
    assert format_gaussian(GaussianRational(F(5))) == "5"
    assert parse_gaussian("1/2-3/4*i") == GaussianRational(F(1, 2), F(-3, 4))
    assert parse_gaussian("-7/3") == GaussianRational(F(-7, 3))
    assert parse_gaussian("i") == GaussianRational.i()
    assert parse_gaussian("-i") == -GaussianRational.i()
    rng = random.Random(9)
    for _ in range(40):
        z = GaussianRational(
            F(rng.randint(-20, 20), rng.randint(1, 12)),
            F(rng.randint(-20, 20), rng.randint(1, 12)),
        )
        assert parse_gaussian(format_gaussian(z)) == z


def test_prime_field_basics():
    a = PrimeFieldElem(7, 3)
    b = PrimeFieldElem(7, 5)
    assert (a + b).val == 1
    assert (a * b).val == 1
    assert (a - b).val == 5
    assert (a / b).val == (3 * pow(5, -1, 7)) % 7
    assert (-a).val == 4
    assert a ** 6 == 1
    assert a == 3 and 3 == a
    # every nonzero element is invertible
    for v in range(1, 7):
        x = PrimeFieldElem(7, v)
        assert x * x.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        PrimeFieldElem(7, 0).inverse()


def test_prime_field_rejects_bad_moduli():
    for bad in (2, 4, 9, 1, 0, -3):
        with pytest.raises(ValueError):
            PrimeFieldElem(bad, 1)


def test_prime_field_mixed_moduli_error():
    with pytest.raises(ValueError):
        PrimeFieldElem(5, 1) + PrimeFieldElem(7, 1)


def test_quadratic_nonresidue_pinned():
    assert quadratic_nonresidue(3).val == 2
    assert quadratic_nonresidue(5).val == 2
    assert quadratic_nonresidue(7).val == 3
    for ell in (3, 5, 7, 11, 13):
        u = quadratic_nonresidue(ell)
        assert all((x * x) % ell != u.val for x in range(ell))


def test_solve_sum_of_squares_pinned():
    assert solve_sum_of_squares(quadratic_nonresidue(3)) == (1, 1)
    assert solve_sum_of_squares(quadratic_nonresidue(5)) == (1, 1)
    assert solve_sum_of_squares(quadratic_nonresidue(7)) == (1, 3)
    for ell in (3, 5, 7, 11, 13):
        a, b = solve_sum_of_squares(quadratic_nonresidue(ell))
        assert a and b
        assert a * a + b * b == quadratic_nonresidue(ell)


def test_quad_ext_arithmetic():
    """F_9 = F_3(sqrt 2): check the multiplication rule and norms exhaustively."""
    ell, u = 3, 2
    elems = [QuadExtElem(ell, u, x, y) for x in range(3) for y in range(3)]
    for a in elems:
        for b in elems:
            p = a * b
            assert p.norm() == a.norm() * b.norm()
    nonzero = [e for e in elems if e]
    assert len(nonzero) == 8
    for e in nonzero:
        assert e * e.inverse() == e.one()
    # multiplicative group of F_9 is cyclic of order 8
    orders = set()
    for e in nonzero:
        k, p = 1, e
        while p != e.one():
            p, k = p * e, k + 1
        orders.add(k)
    assert 8 in orders


def test_frobenius_pinned():
    x = QuadExtElem(3, 2, 2, 1)  # 2 + sqrt(2) in F_9
    # independent oracle: frobenius is the cube map in F_9
    assert frobenius(x) == x * x * x
    assert frobenius(x) == QuadExtElem(3, 2, 2, 2)
    assert frobenius(QuadExtElem(3, 2, 1, 0)) == 1
    assert frobenius(QuadExtElem(3, 2, 0, 1)) == -QuadExtElem(3, 2, 0, 1)
    with pytest.raises(TypeError):
        frobenius(F(1))


def test_frobenius_fixed_field():
    # frobenius fixes exactly the l prime-field elements
    for ell in (3, 5, 7):
        u = quadratic_nonresidue(ell).val
        fixed = [
            (x, y)
            for x in range(ell)
            for y in range(ell)
            if frobenius(QuadExtElem(ell, u, x, y)) == QuadExtElem(ell, u, x, y)
        ]
        assert len(fixed) == ell
        assert all(y == 0 for _, y in fixed)
        # and applying it twice is the identity, everywhere
        for x in range(ell):
            for y in range(ell):
                e = QuadExtElem(ell, u, x, y)
                assert frobenius(frobenius(e)) == e


def test_upoly_basics():
    p = UPoly([1, 0, -2, 0, 1])
    assert p.degree == 4
    assert p.coeff(2) == -2
    assert p.coeff(9) == 0
    assert p(F(1)) == 0
    assert p(F(2)) == 9
    z = UPoly([])
    assert z.degree == -1 and not z
    assert UPoly([1, 0, 0]).degree == 0  # trailing zeros stripped


def test_upoly_ring_properties():
    rng = random.Random(10)
    for _ in range(25):
        a = UPoly([F(rng.randint(-5, 5)) for _ in range(rng.randint(1, 5))])
        b = UPoly([F(rng.randint(-5, 5)) for _ in range(rng.randint(1, 5))])
        x = F(rng.randint(-4, 4))
        assert (a * b)(x) == a(x) * b(x)
        assert (a + b)(x) == a(x) + b(x)
        if a and b:
            assert (a * b).degree == a.degree + b.degree


def test_upoly_from_roots():
    p = UPoly.from_roots([F(2), F(3)])
    assert p == UPoly([1, -5, 6])
    assert p(F(1, 2)) == 0
    assert UPoly.from_roots([]) == UPoly([1])


def test_upoly_domain_promotion():
    p = UPoly([1, GaussianRational.i()])
    assert all(isinstance(c, GaussianRational) for c in p.coeffs)
    q = UPoly([1, F(1, 2)])
    assert all(isinstance(c, F) for c in q.coeffs)
    r = UPoly([PrimeFieldElem(5, 1), PrimeFieldElem(5, 3)])
    assert all(isinstance(c, PrimeFieldElem) for c in r.coeffs)


def test_one_like():
    assert one_like(F(7)) == F(1)
    assert one_like(3) == F(1)
    assert one_like(GaussianRational(0)) == GaussianRational(1)
    assert one_like(PrimeFieldElem(5, 0)) == PrimeFieldElem(5, 1)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # degree is Euler phi
    phi = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 7: 6, 8: 4, 9: 6, 10: 4, 12: 4}
    for n, d in phi.items():
        assert len(cyclotomic_polynomial(n)) - 1 == d


def test_cyclotomic_ring():
    for order in (4, 5, 12):
        z = Cyclotomic.root_of_unity(order, 1)
        powers = [z ** k for k in range(order)]
        assert z ** order == z.one()
        assert all(p != z.one() for p in powers[1:])
        assert len(set(powers)) == order
        total = powers[0]
        for p in powers[1:]:
            total = total + p
        assert total == Cyclotomic(order, [0])  # sum of all order-th roots
    w = Cyclotomic.root_of_unity(12, 7)
    assert w == Cyclotomic.root_of_unity(12, 1) ** 7
    with pytest.raises(ValueError):
        Cyclotomic.root_of_unity(12, 1) + Cyclotomic.root_of_unity(8, 1)


def test_lcm_upto():
    assert lcm_upto(1) == 1
    assert lcm_upto(4) == 12
    assert lcm_upto(10) == 2520
