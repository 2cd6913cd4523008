from fractions import Fraction

import pytest

from arrtwist.rings import (
    CyclotomicElement,
    CyclotomicField,
    LaurentRing,
    MixedRings,
    PrimeField,
    QQ,
    ZZ,
    cyclotomic_poly,
    ring_from_string,
    ring_of,
)


def poly(*coeffs):
    return tuple(Fraction(c) for c in coeffs)


class TestCyclotomicPoly:
    def test_degree_one(self):
        assert cyclotomic_poly(1) == poly(-1, 1)

    def test_known_small(self):
        assert cyclotomic_poly(2) == poly(1, 1)
        assert cyclotomic_poly(3) == poly(1, 1, 1)
        assert cyclotomic_poly(4) == poly(1, 0, 1)

    def test_d6_by_division(self):
        # x^6 - 1 = Phi_1 Phi_2 Phi_3 Phi_6, so Phi_6 = x^2 - x + 1
        assert cyclotomic_poly(6) == poly(1, -1, 1)

    def test_prime_power(self):
        assert cyclotomic_poly(9) == poly(1, 0, 0, 1, 0, 0, 1)


class TestCyclotomicField:
    def test_root_of_unity(self):
        for d in (3, 4, 5, 6, 8):
            K = CyclotomicField(d)
            z = K.zeta()
            acc = K.one
            for _ in range(d):
                acc = acc * z
            assert acc == K.one

    def test_minimal_polynomial_kills_zeta(self):
        for d in (3, 4, 5, 6, 12):
            K = CyclotomicField(d)
            z = K.zeta()
            val = K.zero
            for c in reversed(cyclotomic_poly(d)):
                val = val * z + K.coerce(c)
            assert K.is_zero(val)

    def test_inverse(self):
        K = CyclotomicField(7)
        x = K.zeta(3) - 2 * K.zeta() + K.coerce(Fraction(1, 2))
        assert x * x.inverse() == K.one

    def test_parse_format_roundtrip(self):
        K = CyclotomicField(5)
        x = K.zeta(2) - 3 * K.zeta() + 1
        assert K.parse(K.format(x)) == x


class TestLaurent:
    def test_unit_recognition(self):
        L = LaurentRing(QQ)
        t = L.t()
        assert L.is_unit(3 * t**-2)
        assert L.is_unit(L.one)
        assert not L.is_unit(t - 1)
        assert not L.is_unit(L.zero)

    def test_unit_inverse(self):
        L = LaurentRing(QQ)
        t = L.t()
        u = Fraction(3, 4) * t**5
        assert u * L.unit_inverse(u) == L.one

    def test_divmod_spans(self):
        L = LaurentRing(QQ)
        t = L.t()
        a = t**3 - t**-2
        b = t**2 - 1
        q, r = L.euclid_divmod(a, b)
        assert q * b + r == a
        assert L.euclid_size(r) < L.euclid_size(b)

    def test_gcd_of_torsion_polys(self):
        # gcd(t^a - 1, t^b - 1) is t^gcd(a,b) - 1 up to normalization
        L = LaurentRing(QQ)
        t = L.t()
        assert L.gcd(t**6 - 1, t**4 - 1) == t**2 - 1
        assert L.gcd(t**-3 - 1, t**5 - 1) == t - 1

    def test_canonical_form(self):
        L = LaurentRing(QQ)
        t = L.t()
        v = -3 * t**-2 + 3 * t
        c = L.canonical(v)
        assert min(c.coeffs) == 0  # valuation zero
        assert c.coeffs[max(c.coeffs)] == 1  # monic
        # associate: differ by a unit
        q, r = L.euclid_divmod(v, c)
        assert L.is_zero(r) and L.is_unit(q)

    def test_parse_format_roundtrip(self):
        L = LaurentRing(QQ)
        t = L.t()
        for x in (t**-2 + 1, 2 * t**3 - Fraction(1, 2) * t, L.zero, -t):
            assert L.parse(L.format(x)) == x

    def test_laurent_over_cyclotomic(self):
        K = CyclotomicField(3)
        L = LaurentRing(K)
        z = K.zeta()
        x = L.t() * z + 1
        assert L.parse(L.format(x)) == x
        assert L.is_unit(z * L.t(-4))

    def test_xgcd_identity(self, rnd):
        L = LaurentRing(QQ)
        t = L.t()
        for _ in range(25):
            a = sum((rnd.randint(-2, 2) * t**e for e in range(-2, 3)), L.zero)
            b = sum((rnd.randint(-2, 2) * t**e for e in range(-1, 2)), L.zero)
            if L.is_zero(a) and L.is_zero(b):
                continue
            g, x, y = L.xgcd(a, b)
            assert x * a + y * b == g
            if not L.is_zero(a):
                assert L.is_zero(L.euclid_divmod(a, g)[1])
            if not L.is_zero(b):
                assert L.is_zero(L.euclid_divmod(b, g)[1])


class TestPrimeField:
    def test_arithmetic(self):
        F = PrimeField(7)
        a = F.coerce(3)
        assert (a * F.unit_inverse(a)) == F.one
        assert F.coerce(10) == F.coerce(3)
        assert F.coerce(Fraction(1, 2)) * F.coerce(2) == F.one

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            PrimeField(6)


class TestRingOf:
    def test_rational_literals(self):
        assert ring_of([Fraction(1, 2), 3]) == QQ

    def test_integers(self):
        assert ring_of([1, -4, 0]) == ZZ

    def test_laurent_tag(self):
        L = LaurentRing(QQ)
        assert ring_of([L.t() ** 2 - 1]) == L

    def test_cyclotomic_tag(self):
        K = CyclotomicField(3)
        assert ring_of([K.zeta(), 1]) == K

    def test_mixed_rejected(self):
        K = CyclotomicField(3)
        L = LaurentRing(QQ)
        with pytest.raises(MixedRings):
            ring_of([K.zeta(), L.t()])


class TestRingFromString:
    def test_names(self):
        assert ring_from_string("Q") == QQ
        assert ring_from_string("Z") == ZZ
        assert ring_from_string("F5") == PrimeField(5)
        assert ring_from_string("cyclotomic:6") == CyclotomicField(6)
        assert ring_from_string("laurent") == LaurentRing(QQ)
        assert ring_from_string("laurent:cyclotomic:3") == LaurentRing(CyclotomicField(3))
        for name in ("Q", "Z", "F7", "cyclotomic:4", "laurent", "laurent:F3"):
            assert ring_from_string(name).name.lower() == name.lower()
