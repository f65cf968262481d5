"""Exact coefficient domains.

Rationals (stdlib Fraction), Gaussian rationals, prime fields F_l for odd l,
quadratic extensions F_{l^2} = F_l(sqrt u), small cyclotomic rings Z[x]/Phi_L,
and univariate polynomials over any of these.  Everything downstream is generic
over these domains; all values are immutable after construction.
"""

from fractions import Fraction
from math import gcd, isqrt


Rational = Fraction


def is_odd_prime(n):
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(ell):
    if not is_odd_prime(ell):
        raise ValueError("modulus must be an odd prime, got %r" % (ell,))


def rational_sqrt(q):
    """Exact square root of a non-negative Fraction, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def one_like(x):
    "Multiplicative identity of the domain x lives in."
    if isinstance(x, (int, Fraction)):
        return Fraction(1)
    return x.one()


class GaussianRational:
    """a + b*i with exact rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            assert im == 0
            re, im = re.re, re.im
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def one(self):
        return GaussianRational(1)

    @staticmethod
    def i():
        return GaussianRational(0, 1)

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        "re^2 + im^2, a Fraction.  Multiplicative."
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of 0")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __abs__(self):
        # float modulus; used only by floating diagnostics
        return float(self.norm()) ** 0.5

    def __repr__(self):
        return "GaussianRational(%s, %s)" % (self.re, self.im)

    def __str__(self):
        return format_gaussian(self)


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def format_gaussian(z):
    """Serialize a GaussianRational as "a/b+c/d*i" (parts omitted when zero)."""
    z = GaussianRational(z) if not isinstance(z, GaussianRational) else z
    if not z.im:
        return format_rational(z.re)
    imag = format_rational(abs(z.im)) + "*i"
    sign = "-" if z.im < 0 else "+"
    if not z.re:
        return ("-" if z.im < 0 else "") + imag
    return format_rational(z.re) + sign + imag


def parse_gaussian(s):
    "Inverse of format_gaussian.  Accepts plain rationals too."
    s = s.strip().replace(" ", "")
    if "i" not in s:
        return GaussianRational(Fraction(s))
    s = s[:-1]  # strip trailing i
    if s.endswith("*"):
        s = s[:-1]
    # split off the real part, watching for a leading sign on it
    for k in range(len(s) - 1, 0, -1):
        if s[k] in "+-" and s[k - 1] not in "+-/*":
            re_part, im_part = s[:k], s[k] + s[k + 1:]
            break
    else:
        re_part, im_part = "", s
    if im_part in ("", "+"):
        im_part = "1"
    elif im_part == "-":
        im_part = "-1"
    re = Fraction(re_part) if re_part else Fraction(0)
    return GaussianRational(re, Fraction(im_part))


class PrimeFieldElem:
    """An element of F_l, l an odd prime."""

    __slots__ = ("mod", "val")

    def __init__(self, mod, val):
        _require_odd_prime(mod)
        object.__setattr__(self, "mod", mod)
        object.__setattr__(self, "val", val % mod)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def one(self):
        return PrimeFieldElem(self.mod, 1)

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.mod != self.mod:
                raise ValueError("mixed moduli: %d vs %d" % (self.mod, other.mod))
            return other
        if isinstance(other, int):
            return PrimeFieldElem(self.mod, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.mod, self.val + o.val)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.mod, self.val - o.val)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElem(self.mod, self.val * o.val)

    __rmul__ = __mul__

    def inverse(self):
        if self.val == 0:
            raise ZeroDivisionError("inverse of 0 mod %d" % self.mod)
        return PrimeFieldElem(self.mod, pow(self.val, -1, self.mod))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self.inverse()

    def __neg__(self):
        return PrimeFieldElem(self.mod, -self.val)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElem(self.mod, pow(self.val, n, self.mod))

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.val == o.val

    def __hash__(self):
        return hash((self.mod, self.val))

    def __repr__(self):
        return "PrimeFieldElem(%d, %d)" % (self.mod, self.val)


def quadratic_nonresidue(ell):
    """Smallest positive non-square mod ell (an odd prime).  Deterministic."""
    _require_odd_prime(ell)
    squares = {(x * x) % ell for x in range(ell)}
    for u in range(1, ell):
        if u not in squares:
            return PrimeFieldElem(ell, u)
    raise ValueError("no non-residue mod %d" % ell)  # unreachable for odd prime


def solve_sum_of_squares(u, ell=None):
    """Lexicographically smallest (a, b), both nonzero, with a^2+b^2 = u in F_l.

    u may be a PrimeFieldElem (ell inferred) or an int together with ell.
    """
    if isinstance(u, PrimeFieldElem):
        ell, u = u.mod, u.val
    _require_odd_prime(ell)
    u %= ell
    for a in range(1, ell):
        for b in range(1, ell):
            if (a * a + b * b) % ell == u:
                return PrimeFieldElem(ell, a), PrimeFieldElem(ell, b)
    raise ValueError("no two-nonzero-square representation of %d mod %d" % (u, ell))


class QuadExtElem:
    """x + y*sqrt(u) in F_{l^2}, u a fixed non-residue mod l."""

    __slots__ = ("mod", "u", "x", "y")

    def __init__(self, mod, u, x, y=0):
        _require_odd_prime(mod)
        u = u.val if isinstance(u, PrimeFieldElem) else u % mod
        x = x.val if isinstance(x, PrimeFieldElem) else x % mod
        y = y.val if isinstance(y, PrimeFieldElem) else y % mod
        object.__setattr__(self, "mod", mod)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "x", x % mod)
        object.__setattr__(self, "y", y % mod)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def one(self):
        return QuadExtElem(self.mod, self.u, 1, 0)

    def _coerce(self, other):
        if isinstance(other, QuadExtElem):
            if (other.mod, other.u) != (self.mod, self.u):
                raise ValueError("mixed quadratic extensions")
            return other
        if isinstance(other, int):
            return QuadExtElem(self.mod, self.u, other, 0)
        if isinstance(other, PrimeFieldElem):
            if other.mod != self.mod:
                raise ValueError("mixed moduli")
            return QuadExtElem(self.mod, self.u, other.val, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtElem(self.mod, self.u, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtElem(self.mod, self.u, self.x - o.x, self.y - o.y)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (x1 + y1 s)(x2 + y2 s) = x1 x2 + u y1 y2 + (x1 y2 + x2 y1) s
        return QuadExtElem(
            self.mod,
            self.u,
            self.x * o.x + self.u * self.y * o.y,
            self.x * o.y + self.y * o.x,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExtElem(self.mod, self.u, self.x, -self.y)

    def norm(self):
        "x^2 - u y^2 as a PrimeFieldElem (the norm to F_l)."
        return PrimeFieldElem(self.mod, self.x * self.x - self.u * self.y * self.y)

    def inverse(self):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of 0 in F_%d^2" % self.mod)
        ninv = n.inverse().val
        return QuadExtElem(self.mod, self.u, self.x * ninv, -self.y * ninv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self.inverse()

    def __neg__(self):
        return QuadExtElem(self.mod, self.u, -self.x, -self.y)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return self.x != 0 or self.y != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.x == o.x and self.y == o.y

    def __hash__(self):
        return hash((self.mod, self.u, self.x, self.y))

    def __repr__(self):
        return "QuadExtElem(%d, u=%d, %d, %d)" % (self.mod, self.u, self.x, self.y)


def frobenius(x):
    """The l-th power map on F_{l^2}: x + y*sqrt(u) -> x - y*sqrt(u).

    Generates the Galois group over F_l; applying it twice is the identity.
    """
    if not isinstance(x, QuadExtElem):
        raise TypeError("frobenius wants a QuadExtElem")
    return x.conjugate()


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _promote(coeffs):
    "Lift a mixed int/Fraction/GaussianRational list into one common domain."
    if any(isinstance(c, GaussianRational) for c in coeffs):
        return [c if isinstance(c, GaussianRational) else GaussianRational(c)
                for c in coeffs]
    if all(isinstance(c, (int, Fraction)) for c in coeffs):
        return [Fraction(c) for c in coeffs]
    return list(coeffs)


class UPoly:
    """Univariate polynomial, constant term first.

    Normalized so the stored leading coefficient is nonzero (the zero
    polynomial keeps an empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(self, "coeffs", tuple(_strip(_promote(coeffs))))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        raise IndexError(k)

    def coeff(self, k):
        "Coefficient of T^k, with zeros beyond the degree."
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0 * self.coeffs[0] if self.coeffs else Fraction(0)

    def __add__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return UPoly(out)

    def __neg__(self):
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UPoly([])
        out = [self.coeffs[0] * other.coeffs[0] * 0] * (
            len(self.coeffs) + len(other.coeffs) - 1
        )
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UPoly(out)

    def scale(self, c):
        return UPoly([c * a for a in self.coeffs])

    def __call__(self, x):
        out = None
        for c in reversed(self.coeffs):
            out = c if out is None else out * x + c
        return 0 * x if out is None else out

    @classmethod
    def from_roots(cls, roots):
        "prod (1 - r*T) over the given roots."
        roots = list(roots)
        if not roots:
            return cls([1])
        one = one_like(roots[0])
        p = cls([one])
        for r in roots:
            p = p * cls([one, -r])
        return p

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "UPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append("%s*T" % (c,))
            else:
                terms.append("%s*T^%d" % (c, k))
        return "UPoly(%s)" % " + ".join(terms)


def cyclotomic_polynomial(n):
    """Coefficients (constant first) of the n-th cyclotomic polynomial, exact."""
    if n < 1:
        raise ValueError(n)
    # (x^n - 1) / prod_{d | n, d < n} Phi_d, by repeated exact division
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d:
            continue
        phi_d = cyclotomic_polynomial(d)
        num = _polydiv_exact(num, phi_d)
    return tuple(num)


def _polydiv_exact(num, den):
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        q, r = divmod(num[k + len(den) - 1], den[-1])
        assert r == 0, "non-exact cyclotomic division"
        out[k] = q
        for j, c in enumerate(den):
            num[k + j] -= q * c
    assert not any(num), "non-exact cyclotomic division"
    return out


class Cyclotomic:
    """An element of Z[x]/Phi_L(x), written on the power basis 1, x, ..., x^(d-1).

    Coefficients are Fractions (they stay integral for ring elements built
    from roots of unity, but division by integers is allowed).
    """

    __slots__ = ("order", "coeffs")
    _phi = {}

    def __init__(self, order, coeffs):
        phi = Cyclotomic._phi.get(order)
        if phi is None:
            phi = Cyclotomic._phi[order] = cyclotomic_polynomial(order)
        d = len(phi) - 1
        coeffs = [Fraction(c) for c in coeffs]
        # reduce mod Phi (monic)
        while len(coeffs) > d:
            lead = coeffs.pop()
            if lead:
                k = len(coeffs) - d
                for j in range(d):
                    coeffs[k + j] -= lead * phi[j]
        coeffs += [Fraction(0)] * (d - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    @classmethod
    def root_of_unity(cls, order, k):
        "x^k in Z[x]/Phi_order, i.e. the exact primitive-order root to the k."
        k %= order
        return cls(order, [0] * k + [1])

    def one(self):
        return Cyclotomic(self.order, [1])

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Cyclotomic(self.order, out)

    __rmul__ = __mul__

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def inverse(self):
        """Multiplicative inverse, by solving the multiplication-by-self linear
        system over Q on the power basis."""
        d = len(self.coeffs)
        cols = []
        for j in range(d):
            xj = Cyclotomic(self.order, [0] * j + [1])
            cols.append((self * xj).coeffs)
        # Gauss-Jordan on the d x d system (columns are self * x^j)
        aug = [[cols[j][i] for j in range(d)] + [Fraction(1 if i == 0 else 0)]
               for i in range(d)]
        for col in range(d):
            piv = next((r for r in range(col, d) if aug[r][col]), None)
            if piv is None:
                raise ZeroDivisionError("zero divisor in cyclotomic ring")
            aug[col], aug[piv] = aug[piv], aug[col]
            lead = aug[col][col]
            aug[col] = [x / lead for x in aug[col]]
            for r in range(d):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Cyclotomic(self.order, [aug[r][d] for r in range(d)])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.order, list(self.coeffs))


def lcm_upto(n):
    out = 1
    for k in range(1, n + 1):
        out = out * k // gcd(out, k)
    return out
