"""The symplectic similitude group GSp4 over exact coefficient domains.

Conventions fixed here and used everywhere else:

* J = [[0, I2], [-I2, 0]]; g is a similitude iff t(g) J g = nu(g) J.
* The pairing of column vectors is <x, y> = x1 y3 + x2 y4 - x3 y1 - x4 y2,
  so nu can be read off as <g e1, g e3>.
* Characteristic polynomials are det(1 - g T) = 1 + c1 T + ... + c4 T^4
  (constant term first); for a similitude c3 = nu c1 and c4 = nu^2.
* The torus is t(t1, t2, t0) = diag(t1, t2, t0/t1, t0/t2); the two Weyl
  generators act by s1: (t1,t2,t0) -> (t2,t1,t0) and
  s2: (t1,t2,t0) -> (t1, t0/t2, t0).
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import _mat
from .exact_arith import Rational, UPoly, one_like, rational_sqrt


class NotSimilitude(ValueError):
    pass


def pairing(x, y):
    return x[0] * y[2] + x[1] * y[3] - x[2] * y[0] - x[3] * y[1]


def _gram(m):
    "t(m) J m as a 4x4 of pairings of columns."
    cols = _mat.transpose(m)
    return tuple(tuple(pairing(ci, cj) for cj in cols) for ci in cols)


def try_similitude(m):
    "nu with t(m) J m = nu J, or None."
    if isinstance(m, GSpElement):
        return m.nu
    s = _gram(m)
    nu = s[0][2]
    if not nu:
        return None
    for i in range(4):
        for j in range(4):
            want = nu if (i, j) in ((0, 2), (1, 3)) else (
                -nu if (i, j) in ((2, 0), (3, 1)) else nu - nu)
            if s[i][j] != want:
                return None
    return nu


def similitude_of(m):
    """The similitude factor nu(m), raising NotSimilitude when none exists.

    nu is multiplicative under matrix products.
    """
    nu = try_similitude(m)
    if nu is None:
        raise NotSimilitude("matrix is not a symplectic similitude")
    return nu


class GSpElement:
    """A verified element of GSp4: matrix plus its cached similitude factor.

    The similitude relation is recomputed at construction; an element can
    never be in an unverified state.
    """

    __slots__ = ("mat", "nu")

    def __init__(self, mat):
        if isinstance(mat, GSpElement):
            mat = mat.mat
        mat = _mat.freeze(mat)
        if _mat.shape(mat) != (4, 4):
            raise ValueError("need a 4x4 matrix")
        object.__setattr__(self, "mat", mat)
        object.__setattr__(self, "nu", similitude_of(mat))

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __mul__(self, other):
        if isinstance(other, GSpElement):
            other = other.mat
        return GSpElement(_mat.mat_mul(self.mat, other))

    def inverse(self):
        return GSpElement(_mat.mat_inv(self.mat))

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return GSpElement(_mat.mat_pow(self.mat, n))

    def transpose(self):
        return GSpElement(_mat.transpose(self.mat))

    def __eq__(self, other):
        if isinstance(other, GSpElement):
            return self.mat == other.mat
        if isinstance(other, (tuple, list)):
            return _mat.mat_eq(self.mat, _mat.freeze(other))
        return NotImplemented

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return "GSpElement(%r, nu=%r)" % ([list(r) for r in self.mat], self.nu)


def torus(t1, t2, t0):
    "t(t1, t2, t0) = diag(t1, t2, t0/t1, t0/t2)."
    return _mat.diag(t1, t2, t0 / t1, t0 / t2)


def weyl_s1(one=None):
    one = Fraction(1) if one is None else one
    z = one - one
    return ((z, one, z, z), (one, z, z, z), (z, z, z, one), (z, z, one, z))


def weyl_s2(one=None):
    one = Fraction(1) if one is None else one
    z = one - one
    return ((one, z, z, z), (z, z, z, one), (z, z, one, z), (z, -one, z, z))


S1 = weyl_s1()
S2 = weyl_s2()


def char_poly(g):
    """det(1 - g T) as a degree <= 4 UPoly with constant term 1.

    Division-free (principal-minor sums), so it works over any commutative
    coefficient domain.
    """
    m = g.mat if isinstance(g, GSpElement) else _mat.freeze(g)
    n = len(m)
    one = one_like(m[0][0])
    coeffs = [one]
    for k in range(1, n + 1):
        ek = None
        for idx in itertools.combinations(range(n), k):
            sub = tuple(tuple(m[i][j] for j in idx) for i in idx)
            d = _mat.det(sub)
            ek = d if ek is None else ek + d
        coeffs.append(ek if k % 2 == 0 else -ek)
    return UPoly(coeffs)


_LEVI_ZERO = {
    "B": [(i, j) for i in range(4) for j in range(4) if i != j],
    "P": [(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (2, 1), (3, 0), (3, 1)],
    "Q": [(0, 1), (0, 2), (0, 3), (1, 0), (1, 2), (2, 0), (2, 1), (2, 3),
          (3, 0), (3, 2)],
    "Hen": [(0, 1), (0, 3), (1, 0), (1, 2), (2, 1), (2, 3), (3, 0), (3, 2)],
}


def is_in_levi(g, which):
    """Exact block-pattern membership in a Levi or the endoscopic subgroup.

    which is one of "B" (diagonal torus), "P" (Siegel Levi, block-diagonal
    (A, u t(A)^-1)), "Q" (Klingen Levi), "Hen" (the checkerboard subgroup of
    pairs of 2x2 blocks with equal determinant).
    """
    key = {"b": "B", "p": "P", "q": "Q", "hen": "Hen"}.get(str(which).lower())
    if key is None:
        raise ValueError("unknown Levi tag %r" % (which,))
    el = g if isinstance(g, GSpElement) else GSpElement(g)
    m = el.mat
    if any(m[i][j] for i, j in _LEVI_ZERO[key]):
        return False
    if key == "P":
        a = ((m[0][0], m[0][1]), (m[1][0], m[1][1]))
        d = ((m[2][2], m[2][3]), (m[3][2], m[3][3]))
        nu_id = _mat.scalar_mul(el.nu, _mat.identity(2, one_like(el.nu)))
        return _mat.mat_eq(_mat.mat_mul(_mat.transpose(a), d), nu_id)
    if key == "Q":
        inner = ((m[1][1], m[1][3]), (m[3][1], m[3][3]))
        return bool(m[0][0]) and m[0][0] * m[2][2] == _mat.det(inner) == el.nu
    if key == "Hen":
        a = ((m[0][0], m[0][2]), (m[2][0], m[2][2]))
        b = ((m[1][1], m[1][3]), (m[3][1], m[3][3]))
        return _mat.det(a) == _mat.det(b)
    return True


# ---------------------------------------------------------------------------
# Weyl group combinatorics


@dataclass(frozen=True)
class WeylWord:
    """A word in the two Weyl generators, stored as a tuple over {1, 2}."""

    word: tuple

    def __post_init__(self):
        assert all(k in (1, 2) for k in self.word)

    def matrix(self, one=None):
        out = _mat.identity(4, Fraction(1) if one is None else one)
        for k in self.word:
            out = _mat.mat_mul(out, weyl_s1(one) if k == 1 else weyl_s2(one))
        return out

    def __iter__(self):
        return iter(self.word)

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return "1" if not self.word else "".join("s%d" % k for k in self.word)


# The action of a word on torus coordinates, tracked as an integer matrix on
# exponents: row i gives the image of t_i as a monomial in (t1, t2, t0).
_S1_EXP = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
_S2_EXP = ((1, 0, 0), (0, -1, 1), (0, 0, 1))


def _word_exponents(word):
    out = _mat.identity(3, 1)
    for k in word:
        out = _mat.mat_mul(out, _S1_EXP if k == 1 else _S2_EXP)
    return out


def weyl_words():
    "The 8 canonical (shortest, lex-least) words, one per Weyl group element."
    seen = {_word_exponents(()): ()}
    frontier = [()]
    while frontier:
        nxt = []
        for w in sorted(frontier):
            for k in (1, 2):
                w2 = w + (k,)
                key = _word_exponents(w2)
                if key not in seen:
                    seen[key] = w2
                    nxt.append(w2)
        frontier = nxt
    assert len(seen) == 8
    return tuple(WeylWord(w) for w in sorted(seen.values(), key=lambda w: (len(w), w)))


def weyl_act(w, t):
    """Apply a Weyl word to a torus triple (t1, t2, t0), leftmost letter first.

    s1 swaps t1 and t2; s2 sends t2 to t0/t2 and fixes t1, t0.
    """
    t1, t2, t0 = t
    word = w.word if isinstance(w, WeylWord) else tuple(w)
    for k in word:
        if k == 1:
            t1, t2 = t2, t1
        else:
            t2 = t0 / t2
    return (t1, t2, t0)


@dataclass(frozen=True)
class CharacterData:
    """A character of the real torus: three sign bits and three exact exponents.

    chi(t) = eps1(t1)|t1|^s1 * eps2(t2)|t2|^s2 * eps0(t0)|t0|^s0 with each
    eps either trivial (+1) or the sign character (-1).
    """

    eps1: int
    eps2: int
    eps0: int
    s1: Rational = Fraction(0)
    s2: Rational = Fraction(0)
    s0: Rational = Fraction(0)

    def __post_init__(self):
        assert self.eps1 in (1, -1) and self.eps2 in (1, -1) and self.eps0 in (1, -1)
        for f in ("s1", "s2", "s0"):
            object.__setattr__(self, f, Fraction(getattr(self, f)))


def chi_act(w, chi):
    """The Weyl action on characters, dual to weyl_act (letters left to right).

    s1 swaps the (eps1, s1) and (eps2, s2) slots; s2 inverts the second slot
    and folds it into the central one: chi2 -> chi2^-1, sigma -> chi2 sigma.
    """
    e1, e2, e0 = chi.eps1, chi.eps2, chi.eps0
    s1, s2, s0 = chi.s1, chi.s2, chi.s0
    word = w.word if isinstance(w, WeylWord) else tuple(w)
    for k in word:
        if k == 1:
            e1, e2, s1, s2 = e2, e1, s2, s1
        else:
            e0, s0 = e2 * e0, s2 + s0
            s2 = -s2
    return CharacterData(e1, e2, e0, s1, s2, s0)


def weyl_orbit_and_stabilizer(chi):
    """(orbit, stabilizer) of a character under the 8-element Weyl group.

    The orbit is a frozenset of CharacterData; the stabilizer is the tuple of
    canonical words fixing chi.  |orbit| * |stabilizer| = 8 always.
    """
    orbit = set()
    stab = []
    for w in weyl_words():
        im = chi_act(w, chi)
        orbit.add(im)
        if im == chi:
            stab.append(w)
    return frozenset(orbit), tuple(stab)


def casimir_pair(s1, s2):
    "((s1^2 + s2^2 - 5) / 12, s1^2 s2^2), both exact."
    s1, s2 = Fraction(s1), Fraction(s2)
    return ((s1 * s1 + s2 * s2 - 5) / 12, s1 * s1 * s2 * s2)


def infinity_type_solve(c1, c2):
    """All (s1, s2), s1 >= s2 >= 0 rational, with casimir_pair(s1, s2) = (c1, c2).

    Writing u = s1^2, v = s2^2 turns the system into u + v = 12 c1 + 5,
    u v = c2, so u and v are the roots of X^2 - (12 c1 + 5) X + c2; a
    solution survives iff both roots are non-negative squares of rationals.
    """
    p = 12 * Fraction(c1) + 5
    q = Fraction(c2)
    disc = p * p - 4 * q
    root = rational_sqrt(disc)
    if root is None:
        return set()
    out = set()
    u, v = (p + root) / 2, (p - root) / 2
    if u >= 0 and v >= 0:
        su, sv = rational_sqrt(u), rational_sqrt(v)
        if su is not None and sv is not None:
            out.add((max(su, sv), min(su, sv)))
    return out


# ---------------------------------------------------------------------------
# Oddness normal form


def _ei(k, one):
    z = one - one
    return tuple(one if i == k else z for i in range(4))


def _first_nonzero_column(m):
    cols = _mat.transpose(m)
    for c in cols:
        if any(c):
            return c
    return None


def _normalize_leading(v):
    for x in v:
        if x:
            return tuple(y / x for y in v)
    return v


def _symplectic_extend(v):
    """A matrix in Sp4 whose first column is v (columns v, v2, w, w2 with
    <v,w> = <v2,w2> = 1 and all other pairings zero)."""
    one = one_like(v[0])
    basis = [_ei(k, one) for k in range(4)]
    w = next((e for e in basis if pairing(v, e)), None)
    assert w is not None, "degenerate pairing"
    s = pairing(v, w)
    w = tuple(x / s for x in w)
    # project the standard basis into the symplectic complement of (v, w)
    proj = []
    for e in basis:
        a, b = pairing(w, e), pairing(v, e)
        proj.append(tuple(x + a * yv - b * yw for x, yv, yw in zip(e, v, w)))
    v2 = next((_normalize_leading(c) for c in proj if any(c)), None)
    assert v2 is not None
    w2 = next((c for c in proj if pairing(v2, c)), None)
    assert w2 is not None
    s2 = pairing(v2, w2)
    w2 = tuple(x / s2 for x in w2)
    return _mat.transpose((v, v2, w, w2))


def oddness_normalize(g):
    """A conjugator P in GSp4 with P^-1 g P = diag(1, -1, -1, 1), exactly.

    Preconditions: g is an involution, nu(g) = -1, eigenvalues 1, 1, -1, -1
    (checked through char_poly = (1-T)^2 (1+T)^2 so that no factorization
    over the coefficient field is needed).

    The conjugator is assembled constructively: move a +1-eigenvector to e1,
    so g lands in the Klingen-Levi shape; split off the inner 2x2 involution
    and diagonalize it to diag(1, -1); the order-2 condition kills the
    remaining off-diagonal invariant, and the surviving two parameters are
    removed by an explicit unipotent; finish by conjugating
    diag(1, 1, -1, -1) to diag(1, -1, -1, 1) with the Weyl representative s2.
    """
    el = g if isinstance(g, GSpElement) else GSpElement(g)
    m = el.mat
    one = one_like(m[0][0])
    ident = _mat.identity(4, one)
    if el.nu != -one:
        raise ValueError("precondition: nu(g) must be -1")
    if not _mat.mat_eq(_mat.mat_mul(m, m), ident):
        raise ValueError("precondition: g must be an involution")
    if char_poly(el) != UPoly([one, one - one, -(one + one), one - one, one]):
        raise ValueError("precondition: eigenvalues must be 1, 1, -1, -1")

    v = _first_nonzero_column(_mat.mat_add(m, ident))
    assert v is not None
    p1 = _symplectic_extend(_normalize_leading(v))
    g1 = _mat.mat_mul(_mat.mat_inv(p1), _mat.mat_mul(m, p1))
    assert tuple(row[0] for row in g1) == _ei(0, one)

    b = ((g1[1][1], g1[1][3]), (g1[3][1], g1[3][3]))
    i2 = _mat.identity(2, one)
    up = _first_nonzero_column(_mat.mat_add(b, i2))
    um = _first_nonzero_column(_mat.mat_sub(b, i2))
    assert up is not None and um is not None
    up, um = _normalize_leading(up), _normalize_leading(um)
    delta = up[0] * um[1] - up[1] * um[0]
    um = tuple(x / delta for x in um)
    k = [list(row) for row in ident]
    k[1][1], k[1][3], k[3][1], k[3][3] = up[0], um[0], up[1], um[1]
    k = _mat.freeze(k)
    g2 = _mat.mat_mul(_mat.mat_inv(k), _mat.mat_mul(g1, k))
    assert g2[1][1] == one and g2[3][3] == -one and not g2[1][3] and not g2[3][1]
    assert not g2[0][1], "order-2 input cannot carry the first unipotent slot"
    x3, x2 = g2[0][2], g2[0][3]

    half = one / (one + one)
    p2 = ((one, one - one, -x3 * half, -x2 * half),
          (one - one, one, -x2 * half, one - one),
          (one - one, one - one, one, one - one),
          (one - one, one - one, one - one, one))
    p = _mat.mat_mul(_mat.mat_mul(p1, k), _mat.mat_mul(p2, weyl_s2(one)))
    out = GSpElement(p)
    target = _mat.diag(one, -one, -one, one)
    conj = _mat.mat_mul(_mat.mat_inv(p), _mat.mat_mul(m, p))
    assert _mat.mat_eq(conj, target), "normalization failed"
    return out


# ---------------------------------------------------------------------------
# The weight representation and the upper half-space action


def lambda_rep(k1, k2, g):
    """Matrix of the weight-(k1, k2) representation det^k2 Sym^(k1-k2) on the
    monomial basis x^(m-i) y^i, m = k1 - k2.

    The 2x2 input acts by substitution x -> a x + c y, y -> b x + d y for
    g = [[a, b], [c, d]], which makes the map multiplicative:
    lambda_rep(g h) = lambda_rep(g) lambda_rep(h).
    """
    if k1 < k2:
        raise ValueError("need k1 >= k2")
    g = _mat.freeze(g)
    (a, b), (c, d) = g
    det = a * d - b * c
    if not det:
        raise ZeroDivisionError("singular 2x2 input")
    m = k1 - k2
    scale = det ** k2
    cols = []
    for i in range(m + 1):
        # expand (a x + c y)^(m-i) (b x + d y)^i
        coeff = [scale - scale] * (m + 1)
        for r in range(m - i + 1):
            for s in range(i + 1):
                term = (_binom(m - i, r) * _binom(i, s)) * scale \
                    * a ** (m - i - r) * c ** r * b ** (i - s) * d ** s
                coeff[r + s] = coeff[r + s] + term
        cols.append(coeff)
    return _mat.transpose(_mat.freeze(cols))


def _binom(n, k):
    out = 1
    for j in range(k):
        out = out * (n - j) // (j + 1)
    return out


class SiegelPoint:
    """A point of the degree-2 upper half-space: Z symmetric 2x2 over the
    Gaussian rationals with positive definite imaginary part (checked by
    leading principal minors, exactly)."""

    __slots__ = ("Z",)

    def __init__(self, Z):
        from .exact_arith import GaussianRational

        Z = _mat.freeze(
            tuple(tuple(GaussianRational(x) for x in row) for row in Z)
        )
        if _mat.shape(Z) != (2, 2) or Z[0][1] != Z[1][0]:
            raise ValueError("need a symmetric 2x2 matrix")
        y00 = Z[0][0].im
        ydet = Z[0][0].im * Z[1][1].im - Z[0][1].im * Z[1][0].im
        if not (y00 > 0 and ydet > 0):
            raise ValueError("imaginary part is not positive definite")
        object.__setattr__(self, "Z", Z)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def imag(self):
        return tuple(tuple(x.im for x in row) for row in self.Z)

    def __eq__(self, other):
        return isinstance(other, SiegelPoint) and self.Z == other.Z

    def __hash__(self):
        return hash(self.Z)

    def __repr__(self):
        return "SiegelPoint(%r)" % (self.Z,)


def moebius(gamma, Z):
    """(gamma Z, J(gamma, Z)) for the fractional-linear action on the upper
    half-space: gamma Z = (A Z + B)(C Z + D)^-1 with automorphy factor
    C Z + D.  Requires nu(gamma) real and positive; the cocycle identity
    J(gamma delta, Z) = J(gamma, delta Z) J(delta, Z) holds exactly.
    """
    from .exact_arith import GaussianRational

    el = gamma if isinstance(gamma, GSpElement) else GSpElement(gamma)
    nu = el.nu
    if isinstance(nu, (int, Fraction)):
        nu = GaussianRational(nu)
    if not isinstance(nu, GaussianRational):
        raise ValueError("the half-space action needs rational entries")
    if nu.im or nu.re <= 0:
        raise ValueError("need a similitude with positive rational nu")
    zpt = Z if isinstance(Z, SiegelPoint) else SiegelPoint(Z)
    m = tuple(tuple(GaussianRational(x) for x in row) for row in el.mat)
    a = ((m[0][0], m[0][1]), (m[1][0], m[1][1]))
    b = ((m[0][2], m[0][3]), (m[1][2], m[1][3]))
    c = ((m[2][0], m[2][1]), (m[3][0], m[3][1]))
    d = ((m[2][2], m[2][3]), (m[3][2], m[3][3]))
    num = _mat.mat_add(_mat.mat_mul(a, zpt.Z), b)
    j = _mat.mat_add(_mat.mat_mul(c, zpt.Z), d)
    try:
        jinv = _mat.mat_inv(j)
    except ZeroDivisionError:
        raise ValueError("automorphy factor is singular at this point")
    return SiegelPoint(_mat.mat_mul(num, jinv)), j


# ---------------------------------------------------------------------------
# Standard generators (used by the census builders and by tests that need
# generic similitudes over exact fields)


def unipotent_alpha(c):
    "The short-root one-parameter element [[1,c,0,0],[0,1,0,0],[0,0,1,0],[0,0,-c,1]]."
    one = one_like(c)
    z = one - one
    return ((one, c, z, z), (z, one, z, z), (z, z, one, z), (z, z, -c, one))


def unipotent_beta(c):
    "The long-root element [[I2, diag(0,c)], [0, I2]]."
    one = one_like(c)
    z = one - one
    return ((one, z, z, z), (z, one, z, c), (z, z, one, z), (z, z, z, one))


def standard_generators(gamma):
    """Generators of Sp4 over the domain of gamma: two torus coweights at the
    unit gamma, the simple-root unipotents and their transposes, and the two
    Weyl representatives.  Over F_l with gamma a primitive root these
    generate the full symplectic group.
    """
    one = one_like(gamma)
    gens = [
        torus(gamma, one, one),
        torus(one, gamma, one),
        unipotent_alpha(one),
        unipotent_beta(one),
        _mat.transpose(unipotent_alpha(one)),
        _mat.transpose(unipotent_beta(one)),
        weyl_s1(one),
        weyl_s2(one),
    ]
    return [_mat.freeze(g) for g in gens]


def similitude_generator(gamma):
    "diag(1, 1, gamma, gamma): nu = gamma; with Sp4 it generates GSp4."
    one = one_like(gamma)
    return _mat.diag(one, one, gamma, gamma)
