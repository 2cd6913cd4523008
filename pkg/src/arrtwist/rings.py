"""Exact scalar arithmetic over the coefficient rings used by the chain
complexes in this package:

* ``Z`` and ``Q`` (plain ``int`` / ``fractions.Fraction``),
* prime fields ``F_p``,
* cyclotomic fields ``Q(zeta_d) = Q[x]/Phi_d(x)``,
* univariate Laurent polynomial rings ``K[t, t^-1]`` over any of the fields.

Every ring is described by a small ``Ring`` object that knows how to coerce,
add, multiply, divide exactly, recognize units, and (for the Euclidean rings
``Z``, ``K[t,t^-1]`` and fields) perform division with remainder.  Scalars are
plain values: ``int``, ``Fraction``, or one of the element classes below.
All values are immutable after construction and all operations are pure.

Canonical associates (used to normalize Smith divisors):

* over ``Z``: the absolute value,
* over a field: ``1`` for any nonzero element,
* over ``K[t,t^-1]``: the representative with valuation ``0`` at ``t = 0``
  and leading coefficient ``1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class MixedRings(ValueError):
    """Raised when values from incompatible rings are combined."""


class UnsupportedRing(ValueError):
    """Raised when an operation does not support the coefficient ring."""


# ----------------------------------------------------------------------
# Polynomials over Q, coefficient tuples ordered low degree -> high.
# Only what cyclotomic arithmetic needs.

def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _poly_trim(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _poly_scale(a, s):
    return _poly_trim(x * s for x in a)


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a, b):
    """Exact division with remainder in Q[x]."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv_lead = Fraction(1) / Fraction(b[-1])
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv_lead
        k = len(a) - len(b)
        q[k] = c
        for j, y in enumerate(b):
            a[k + j] -= c * y
        a.pop()
    return _poly_trim(q), _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple:
    """Coefficients of the d-th cyclotomic polynomial, constant term first.

    Computed by dividing ``x^d - 1`` by ``Phi_e`` for every proper divisor
    ``e`` of ``d``.

    >>> cyclotomic_poly(1)
    (Fraction(-1, 1), Fraction(1, 1))
    >>> cyclotomic_poly(3)
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))
    """
    if d < 1:
        raise ValueError("d must be a positive integer")
    if d == 1:
        return (Fraction(-1), Fraction(1))
    num = tuple(
        Fraction(-1) if i == 0 else Fraction(1) if i == d else Fraction(0)
        for i in range(d + 1)
    )
    for e in range(1, d):
        if d % e == 0:
            num, rem = _poly_divmod(num, cyclotomic_poly(e))
            assert not rem
    return num


def _is_prime(p):
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


# ----------------------------------------------------------------------
# Element classes.


class PrimeFieldElement:
    """An element of F_p, stored as a residue in [0, p)."""

    __slots__ = ("p", "value")

    def __init__(self, p, value):
        self.p = p
        self.value = value % p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise MixedRings(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(self.p, other)
        if isinstance(other, Fraction):
            num = PrimeFieldElement(self.p, other.numerator)
            return num / PrimeFieldElement(self.p, other.denominator)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.p, self.value + o.value)

    __radd__ = __add__

    def __neg__(self):
        return PrimeFieldElement(self.p, -self.value)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.p, self.value - o.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return PrimeFieldElement(self.p, self.value * o.value)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(self.p, pow(self.value, -1, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(("Fp", self.p, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value}"


class CyclotomicElement:
    """An element of Q(zeta_d), a coefficient vector modulo Phi_d.

    ``coeffs`` has length exactly ``phi(d) = deg Phi_d``; index k holds the
    coefficient of ``zeta_d^k``.

    >>> z = CyclotomicElement.zeta(3)
    >>> z * z * z == 1
    True
    >>> z * z + z + 1 == 0
    True
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, d, coeffs):
        phi = len(cyclotomic_poly(d)) - 1
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > phi:
            _, rem = _poly_divmod(tuple(coeffs), cyclotomic_poly(d))
            coeffs = list(rem)
        coeffs += [Fraction(0)] * (phi - len(coeffs))
        self.d = d
        self.coeffs = tuple(coeffs)

    @classmethod
    def zeta(cls, d, power=1):
        power %= d
        return cls(d, [0] * power + [1])

    def _coerce(self, other):
        if isinstance(other, CyclotomicElement):
            if other.d != self.d:
                raise MixedRings(f"Q(zeta_{self.d}) vs Q(zeta_{other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElement(self.d, [Fraction(other)])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicElement(self.d, _poly_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.d, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return CyclotomicElement(self.d, _poly_mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        """Inverse via the extended Euclidean algorithm against Phi_d."""
        if not any(self.coeffs):
            raise ZeroDivisionError(f"0 has no inverse in Q(zeta_{self.d})")
        # Maintain u*self + v*Phi_d == r while reducing (r0, r1).
        r0, r1 = _poly_trim(self.coeffs), cyclotomic_poly(self.d)
        u0, u1 = (Fraction(1),), ()
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            u0, u1 = u1, _poly_add(u0, _poly_scale(_poly_mul(q, u1), -1))
        assert len(r0) == 1  # gcd is a nonzero constant: Phi_d is irreducible
        return CyclotomicElement(self.d, _poly_scale(u0, Fraction(1) / r0[0]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if isinstance(other, CyclotomicElement):
            return self.d == other.d and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("cyc", self.d, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return format_poly_terms(
            ((k, c) for k, c in enumerate(self.coeffs) if c), f"z{self.d}", QQ
        )


class LaurentPoly:
    """A Laurent polynomial over a base field, as a finitely supported map
    exponent -> coefficient.

    >>> t = LaurentPoly.t(QQ)
    >>> (t - 1) * (t + 1) == t*t - 1
    True
    >>> (t**-2 + 1).support()
    (-2, 0)
    """

    __slots__ = ("base", "coeffs")

    def __init__(self, base, coeffs):
        self.base = base
        self.coeffs = {e: c for e, c in coeffs.items() if not base.is_zero(c)}

    @classmethod
    def t(cls, base, exponent=1):
        return cls(base, {exponent: base.one})

    @classmethod
    def const(cls, base, c):
        return cls(base, {0: base.coerce(c)})

    def support(self):
        return tuple(sorted(self.coeffs))

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.base != self.base:
                raise MixedRings("Laurent rings over different base fields")
            return other
        try:
            return LaurentPoly.const(self.base, other)
        except (TypeError, ValueError, MixedRings):
            return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(self.base, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.base, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return LaurentPoly(self.base, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = LaurentPoly.const(self.base, 1)
        for _ in range(n):
            out = out * self
        return out

    def is_unit(self):
        # Over a field base, the units are exactly the monomials c*t^e.
        return len(self.coeffs) == 1

    def inverse(self):
        if not self.is_unit():
            raise ZeroDivisionError(f"{self!r} is not a unit in K[t,t^-1]")
        ((e, c),) = self.coeffs.items()
        return LaurentPoly(self.base, {-e: self.base.unit_inverse(c)})

    def span(self):
        """max exponent - min exponent; the Euclidean size (0 for 0)."""
        if not self.coeffs:
            return 0
        return max(self.coeffs) - min(self.coeffs)

    def divmod(self, other):
        """q, r with self = q*other + r and span(r) < span(other) or r = 0.

        Shift both operands to honest polynomials with nonzero constant
        term, divide in K[t], and shift back; the remainder's span is then
        bounded by the polynomial remainder's degree.
        """
        o = self._coerce(other)
        if not o.coeffs:
            raise ZeroDivisionError("Laurent division by zero")
        if not self.coeffs:
            return LaurentPoly(self.base, {}), LaurentPoly(self.base, {})
        va, vb = min(self.coeffs), min(o.coeffs)
        a = {e - va: c for e, c in self.coeffs.items()}
        b = {e - vb: c for e, c in o.coeffs.items()}
        db = max(b)
        inv_lead = self.base.unit_inverse(b[db])
        q = {}
        while a and max(a) >= db:
            da = max(a)
            c = a[da] * inv_lead
            k = da - db
            q[k] = c
            for e, y in b.items():
                v = a.get(e + k, self.base.zero) - c * y
                if self.base.is_zero(v):
                    a.pop(e + k, None)
                else:
                    a[e + k] = v
        quo = LaurentPoly(self.base, {e + va - vb: c for e, c in q.items()})
        rem = LaurentPoly(self.base, {e + va: c for e, c in a.items()})
        return quo, rem

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("laurent", self.base, tuple(sorted(self.coeffs.items(), key=lambda kv: kv[0]))))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return format_poly_terms(sorted(self.coeffs.items()), "t", self.base)


# ----------------------------------------------------------------------
# Ring descriptors.


class Ring:
    """Common interface over Z, Q, F_p, Q(zeta_d), and K[t,t^-1]."""

    is_field = False
    is_euclidean = True  # every supported ring here is at least Euclidean

    def coerce(self, x):
        raise NotImplementedError

    def is_zero(self, a):
        return not a

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def is_unit(self, a):
        raise NotImplementedError

    def unit_inverse(self, a):
        raise NotImplementedError

    def exact_div(self, a, b):
        """a / b when b divides a exactly; raises ArithmeticError otherwise."""
        q, r = self.euclid_divmod(a, b)
        if not self.is_zero(r):
            raise ArithmeticError(f"{a!r} is not divisible by {b!r}")
        return q

    def euclid_size(self, a):
        raise NotImplementedError

    def euclid_divmod(self, a, b):
        raise NotImplementedError

    def canonical(self, a):
        """The canonical associate of a (see module docstring)."""
        raise NotImplementedError

    def gcd(self, a, b):
        while not self.is_zero(b):
            r = self.euclid_divmod(a, b)[1]
            # keep remainders primitive: gcd is only defined up to units
            if not self.is_zero(r):
                r = self.content_unit([r]) * r
            a, b = b, r
        return self.canonical(a)

    def xgcd(self, a, b):
        """(g, x, y) with x*a + y*b = g and g the canonical gcd.

        Remainders are content-reduced along the way (a unit rescaling of
        the whole Bezout identity), which keeps Laurent coefficient growth
        polynomial."""
        r0, x0, y0 = a, self.one, self.zero
        r1, x1, y1 = b, self.zero, self.one
        while not self.is_zero(r1):
            q, r = self.euclid_divmod(r0, r1)
            x, y = x0 - q * x1, y0 - q * y1
            if not self.is_zero(r):
                u = self.content_unit([r])
                if not self.is_zero(u - self.one):
                    r, x, y = u * r, u * x, u * y
            r0, x0, y0 = r1, x1, y1
            r1, x1, y1 = r, x, y
        g = self.canonical(r0)
        if not self.is_zero(r0):
            u = self.exact_div(g, r0)
            x0, y0 = u * x0, u * y0
        return g, x0, y0

    def format(self, a) -> str:
        return repr(a)

    def parse(self, s):
        raise NotImplementedError

    def content_unit(self, values):
        """A unit u such that scaling ``values`` by u keeps coefficients
        small (used to control growth in elimination).  Default: 1."""
        return self.one

    def __eq__(self, other):
        return type(self) is type(other) and self.__dict__ == other.__dict__

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.__dict__.items(), key=lambda kv: kv[0]))))


class IntegerRing(Ring):
    name = "Z"

    def coerce(self, x):
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        raise MixedRings(f"cannot view {x!r} as an integer")

    def is_unit(self, a):
        return a in (1, -1)

    def unit_inverse(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit in Z")
        return a

    def euclid_size(self, a):
        return abs(a)

    def euclid_divmod(self, a, b):
        q, r = divmod(a, b)
        # Symmetric remainder: |r| <= |b|/2 keeps pivots small.
        if 2 * abs(r) > abs(b):
            if r > 0:
                r -= abs(b)
                q += 1 if b > 0 else -1
            else:
                r += abs(b)
                q -= 1 if b > 0 else -1
        assert a == q * b + r
        return q, r

    def canonical(self, a):
        return abs(a)

    def format(self, a):
        return str(a)

    def parse(self, s):
        return int(str(s))


class RationalField(Ring):
    name = "Q"
    is_field = True

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise MixedRings(f"cannot view {x!r} as a rational")

    def is_unit(self, a):
        return a != 0

    def unit_inverse(self, a):
        return Fraction(1) / a

    def euclid_size(self, a):
        return 0 if a == 0 else 1

    def euclid_divmod(self, a, b):
        return a / b, Fraction(0)

    def canonical(self, a):
        return Fraction(0) if a == 0 else Fraction(1)

    def format(self, a):
        return str(a)

    def parse(self, s):
        return Fraction(str(s))


class PrimeField(Ring):
    is_field = True

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def name(self):
        return f"F{self.p}"

    def coerce(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise MixedRings(f"F_{x.p} element in F_{self.p}")
            return x
        if isinstance(x, int):
            return PrimeFieldElement(self.p, x)
        if isinstance(x, Fraction):
            return PrimeFieldElement(self.p, x.numerator) / PrimeFieldElement(
                self.p, x.denominator
            )
        raise MixedRings(f"cannot view {x!r} in F_{self.p}")

    def is_unit(self, a):
        return bool(self.coerce(a))

    def unit_inverse(self, a):
        return self.coerce(a).inverse()

    def euclid_size(self, a):
        return 0 if self.is_zero(a) else 1

    def euclid_divmod(self, a, b):
        return a / b, self.zero

    def canonical(self, a):
        return self.zero if self.is_zero(a) else self.one

    def format(self, a):
        return str(self.coerce(a).value)

    def parse(self, s):
        return PrimeFieldElement(self.p, int(str(s)))


class CyclotomicField(Ring):
    is_field = True

    def __init__(self, d):
        if d < 1:
            raise ValueError("d must be positive")
        self.d = d

    @property
    def name(self):
        return f"cyclotomic:{self.d}"

    @property
    def degree(self):
        return len(cyclotomic_poly(self.d)) - 1

    def zeta(self, power=1):
        return CyclotomicElement.zeta(self.d, power)

    def coerce(self, x):
        if isinstance(x, CyclotomicElement):
            if x.d != self.d:
                raise MixedRings(f"zeta_{x.d} element in Q(zeta_{self.d})")
            return x
        if isinstance(x, (int, Fraction)):
            return CyclotomicElement(self.d, [Fraction(x)])
        raise MixedRings(f"cannot view {x!r} in Q(zeta_{self.d})")

    def is_unit(self, a):
        return bool(self.coerce(a))

    def unit_inverse(self, a):
        return self.coerce(a).inverse()

    def euclid_size(self, a):
        return 0 if self.is_zero(a) else 1

    def euclid_divmod(self, a, b):
        return a / b, self.zero

    def canonical(self, a):
        return self.zero if self.is_zero(a) else self.one

    def format(self, a):
        a = self.coerce(a)
        return format_poly_terms(
            ((k, c) for k, c in enumerate(a.coeffs) if c), f"z{self.d}", QQ
        )

    def parse(self, s):
        terms = parse_poly_terms(str(s), f"z{self.d}", QQ)
        out = self.zero
        for e, c in terms:
            out = out + c * self.zeta(e)  # zeta() reduces the power mod d
        return out


class LaurentRing(Ring):
    def __init__(self, base=None):
        self.base = base if base is not None else QQ
        if not self.base.is_field:
            raise UnsupportedRing("Laurent coefficients must form a field")

    @property
    def name(self):
        return "laurent" if self.base == QQ else f"laurent:{self.base.name}"

    def t(self, exponent=1):
        return LaurentPoly.t(self.base, exponent)

    def coerce(self, x):
        if isinstance(x, LaurentPoly):
            if x.base != self.base:
                raise MixedRings("Laurent value over a different base field")
            return x
        return LaurentPoly.const(self.base, self.base.coerce(x))

    def is_unit(self, a):
        return self.coerce(a).is_unit()

    def unit_inverse(self, a):
        return self.coerce(a).inverse()

    def euclid_size(self, a):
        a = self.coerce(a)
        return a.span() + 1 if a else 0

    def euclid_divmod(self, a, b):
        return self.coerce(a).divmod(self.coerce(b))

    def canonical(self, a):
        """Zero valuation at t = 0 and leading coefficient 1."""
        a = self.coerce(a)
        if not a:
            return a
        v = min(a.coeffs)
        lead = a.coeffs[max(a.coeffs)]
        inv = self.base.unit_inverse(lead)
        return LaurentPoly(self.base, {e - v: c * inv for e, c in a.coeffs.items()})

    def format(self, a):
        a = self.coerce(a)
        return format_poly_terms(sorted(a.coeffs.items()), "t", self.base)

    def parse(self, s):
        terms = parse_poly_terms(str(s), "t", self.base)
        out = {}
        for e, c in terms:
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(self.base, out)

    def content_unit(self, values):
        # Every nonzero scalar of the base field is a unit here, so rows can
        # be rescaled to primitive integer coefficients (primitive-PRS style
        # growth control in Smith reduction).
        fracs = []
        for v in values:
            v = self.coerce(v)
            for c in v.coeffs.values():
                if isinstance(c, Fraction):
                    fracs.append(c)
                elif isinstance(c, CyclotomicElement):
                    fracs.extend(c.coeffs)
                else:
                    return self.one  # e.g. prime-field base: nothing to do
        fracs = [f for f in fracs if f]
        if not fracs:
            return self.one
        from math import gcd, lcm

        g = 0
        l = 1
        for f in fracs:
            g = gcd(g, f.numerator)
            l = lcm(l, f.denominator)
        u = Fraction(l, g)
        return self.coerce(u) if u != 1 else self.one


ZZ = IntegerRing()
QQ = RationalField()


def ring_of(values) -> Ring:
    """Infer the common ring of a nonempty collection of scalars.

    >>> ring_of([Fraction(1, 2), 3]).name
    'Q'
    >>> ring_of([1, -4]).name
    'Z'
    """
    values = list(values)
    if not values:
        raise ValueError("cannot infer the ring of an empty collection")
    ring = None
    saw_fraction = False
    for v in values:
        if isinstance(v, LaurentPoly):
            r = LaurentRing(v.base)
        elif isinstance(v, CyclotomicElement):
            r = CyclotomicField(v.d)
        elif isinstance(v, PrimeFieldElement):
            r = PrimeField(v.p)
        elif isinstance(v, Fraction):
            saw_fraction = True
            continue
        elif isinstance(v, int):
            continue
        else:
            raise MixedRings(f"unrecognized scalar {v!r}")
        if ring is None:
            ring = r
        elif ring != r:
            raise MixedRings(f"{ring.name} vs {r.name}")
    if ring is None:
        return QQ if saw_fraction else ZZ
    if saw_fraction and not ring.is_field and not isinstance(ring, LaurentRing):
        raise MixedRings(f"rational value among {ring.name} scalars")
    return ring


def ring_from_string(s: str) -> Ring:
    """Parse a ring descriptor such as 'Q', 'F5', 'cyclotomic:3',
    'laurent', or 'laurent:cyclotomic:4'."""
    s = s.strip()
    low = s.lower()
    if low == "z":
        return ZZ
    if low == "q":
        return QQ
    if low.startswith("f") and low[1:].isdigit():
        return PrimeField(int(low[1:]))
    if low.startswith("cyclotomic:"):
        return CyclotomicField(int(low.split(":", 1)[1]))
    if low == "laurent":
        return LaurentRing(QQ)
    if low.startswith("laurent:"):
        return LaurentRing(ring_from_string(s.split(":", 1)[1]))
    raise UnsupportedRing(f"unknown ring descriptor {s!r}")


# ----------------------------------------------------------------------
# Shared term-list formatting/parsing for Laurent and cyclotomic scalars.
# The textual form lists terms in ascending exponent order: "t^-2 + 1",
# "1 + 2*t^3", "z3^2".


def _format_coeff(c, base):
    s = base.format(c)
    return f"({s})" if ("+" in s[1:] or "-" in s[1:] or " " in s) else s


def format_poly_terms(terms, symbol, base) -> str:
    terms = list(terms)
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        if e == 0:
            body = _format_coeff(c, base)
            sign = ""
            if body.startswith("-"):
                sign, body = "-", body[1:]
        else:
            mon = symbol if e == 1 else f"{symbol}^{e}"
            cs = _format_coeff(c, base)
            sign = ""
            if cs.startswith("-"):
                sign, cs = "-", cs[1:]
            body = mon if cs == "1" else f"{cs}*{mon}"
        parts.append((sign, body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" - {body}" if sign == "-" else f" + {body}"
    return out


def parse_poly_terms(s, symbol, base):
    """Inverse of format_poly_terms; also accepts '3t', 't**2', spaces."""
    s = s.replace("**", "^").replace(" ", "")
    if not s or s == "0":
        return []
    # Split on top-level + and - (keep unary sign of the first term).
    chunks, depth, cur = [], 0, ""
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and i > 0 and s[i - 1] not in "+-^(*":
            chunks.append(cur)
            cur = ch
        else:
            cur += ch
    chunks.append(cur)
    terms = []
    for chunk in chunks:
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        if symbol in chunk:
            head, _, tail = chunk.partition(symbol)
            head = head.rstrip("*")
            if head.startswith("(") and head.endswith(")"):
                head = head[1:-1]
            coeff = base.parse(head) if head else base.one
            e = int(tail[1:]) if tail.startswith("^") else 1
        else:
            if chunk.startswith("(") and chunk.endswith(")"):
                chunk = chunk[1:-1]
            coeff = base.parse(chunk)
            e = 0
        terms.append((e, sign * coeff if sign == -1 else coeff))
    return terms
