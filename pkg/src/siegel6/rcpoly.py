r"""
Exact polynomial algebra behind the Rankin-Cohen constructions.

Three kinds of polynomial appear:

* :class:`HomogPoly`: a binary form of degree ``j`` in ``(x, y)``, stored in
  the basis ``x^j, x^(j-1) y, ..., y^j``.  These are the values of
  vector-valued forms of weight ``Sym^j x det^k``.
* :class:`EllipticPoly`: a polynomial in ``r_1, ..., r_t``.
* :class:`RCCandidate`: a polynomial in the ``3t`` entries of ``t``
  symmetric matrices ``R^s = (R^s_11, R^s_12; R^s_12, R^s_22)`` whose
  coefficients are binary forms of one fixed degree.  Slot ``s`` owns the
  variables ``3s, 3s+1, 3s+2``.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction
SymMat = tuple  # (a11, a12, a22)


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------


class HomogPoly:
    """Homogeneous polynomial of degree ``j`` in ``x, y``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        self.coeffs = tuple(_q(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")

    @classmethod
    def zero(cls, j: int) -> "HomogPoly":
        return cls([0] * (j + 1))

    @classmethod
    def monomial(cls, j: int, i: int, c=1) -> "HomogPoly":
        """``c * x^(j-i) * y^i``."""
        v = [0] * (j + 1)
        v[i] = c
        return cls(v)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, HomogPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (tuple, list)):
            return self.coeffs == tuple(_q(c) for c in other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"HomogPoly({[str(c) for c in self.coeffs]})"

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        _same_degree(self, other)
        return HomogPoly(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        _same_degree(self, other)
        return HomogPoly(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return HomogPoly(-a for a in self.coeffs)

    def scale(self, c) -> "HomogPoly":
        c = _q(c)
        return HomogPoly(c * a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            return HomogPoly(poly_mul(self.coeffs, other.coeffs))
        return self.scale(other)

    __rmul__ = __mul__

    def d_x(self) -> "HomogPoly":
        j = self.degree
        if j == 0:
            return HomogPoly([0])
        return HomogPoly((j - i) * c for i, c in enumerate(self.coeffs[:-1]))

    def d_y(self) -> "HomogPoly":
        j = self.degree
        if j == 0:
            return HomogPoly([0])
        return HomogPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def shift_x(self) -> "HomogPoly":
        """Multiply by ``x``."""
        return HomogPoly(self.coeffs + (Q(0),))

    def shift_y(self) -> "HomogPoly":
        """Multiply by ``y``."""
        return HomogPoly((Q(0),) + self.coeffs)

    def __call__(self, x, y):
        j = self.degree
        return sum(c * x ** (j - i) * y**i for i, c in enumerate(self.coeffs))


def _same_degree(a: HomogPoly, b: HomogPoly):
    if len(a.coeffs) != len(b.coeffs):
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [Q(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for k, y in enumerate(b):
                if y:
                    out[i + k] += x * y
    return out


def sym_to_form(m: SymMat) -> HomogPoly:
    """``m[v] = m11 x^2 + 2 m12 x y + m22 y^2``."""
    a, b, c = m
    return HomogPoly([a, 2 * _q(b), c])


def rho_apply(u, j: int, k: int, p: HomogPoly) -> HomogPoly:
    """``det(u)^k * p((x, y) u)``."""
    (a, b), (c, d) = u
    a, b, c, d = map(_q, (a, b, c, d))
    det = a * d - b * c
    if det == 0:
        raise ValueError("rho_apply needs an invertible matrix")
    if p.degree != j:
        raise ValueError("degree mismatch")
    xs = [a, c]  # x -> a x + c y
    ys = [b, d]  # y -> b x + d y
    xpow = [[Q(1)]]
    ypow = [[Q(1)]]
    for _ in range(j):
        xpow.append(poly_mul(xpow[-1], xs))
        ypow.append(poly_mul(ypow[-1], ys))
    out = [Q(0)] * (j + 1)
    for i, coef in enumerate(p.coeffs):
        if coef:
            term = poly_mul(xpow[j - i], ypow[i])
            for e, t in enumerate(term):
                out[e] += coef * t
    f = det**k
    return HomogPoly(f * c_ for c_ in out)


def sym_power_matrix(u, j: int) -> list[list[int]]:
    """Integer matrix of ``p -> p((x, y) u)`` on ``H_j`` (columns = images of basis)."""
    cols = []
    for i in range(j + 1):
        img = rho_apply(u, j, 0, HomogPoly.monomial(j, i))
        cols.append(img.coeffs)
    return [[cols[c][r] for c in range(j + 1)] for r in range(j + 1)]


# W(r) = det [[r11, r12, r22], [y^2, -xy, x^2], [d_xx, d_xy, d_yy]]


def _w_parts(p: HomogPoly) -> tuple[HomogPoly, HomogPoly, HomogPoly]:
    pxx = p.d_x().d_x()
    pxy = p.d_x().d_y()
    pyy = p.d_y().d_y()
    x2 = HomogPoly([1, 0, 0])
    xy = HomogPoly([0, 1, 0])
    y2 = HomogPoly([0, 0, 1])
    w11 = -(xy * pyy) - x2 * pxy
    w12 = -(y2 * pyy - x2 * pxx)
    w22 = y2 * pxy + xy * pxx
    return w11, w12, w22


def w_apply(r: SymMat, p: HomogPoly) -> HomogPoly:
    """Apply the determinant operator ``W(r)`` to a binary form of degree >= 2."""
    if p.degree < 2:
        raise ValueError("W(r) acts on forms of degree at least 2")
    w11, w12, w22 = _w_parts(p)
    r11, r12, r22 = map(_q, r)
    return w11.scale(r11) + w12.scale(r12) + w22.scale(r22)


def w_matrices(j: int) -> tuple[list[list[Fraction]], ...]:
    """Matrices of the three linear parts of ``W`` on ``H_j`` (row = output)."""
    mats = []
    parts = [_w_parts(HomogPoly.monomial(j, i)) for i in range(j + 1)]
    for which in range(3):
        mats.append([[parts[c][which][r] for c in range(j + 1)] for r in range(j + 1)])
    return tuple(mats)


def cross(A: SymMat, B: SymMat) -> SymMat:
    """``A J B - B J A`` for symmetric ``A = (a, b; b, c)``, ``B = (a', b'; b', c')``."""
    a, b, c = map(_q, A)
    a2, b2, c2 = map(_q, B)
    return (2 * a * b2 - 2 * b * a2, a * c2 - c * a2, 2 * b * c2 - 2 * c * b2)


# ---------------------------------------------------------------------------
# polynomials in r_1..r_t
# ---------------------------------------------------------------------------


class EllipticPoly:
    """Polynomial with rational coefficients in ``r_1, ..., r_t``."""

    __slots__ = ("t", "terms")

    def __init__(self, t: int, terms: dict | None = None):
        self.t = t
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != t:
                raise ValueError("exponent length mismatch")
            c = _q(c)
            if c:
                self.terms[e] = self.terms.get(e, Q(0)) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def const(cls, t: int, c=1) -> "EllipticPoly":
        return cls(t, {(0,) * t: c})

    @classmethod
    def var(cls, t: int, s: int) -> "EllipticPoly":
        e = [0] * t
        e[s] = 1
        return cls(t, {tuple(e): 1})

    def __eq__(self, other):
        return isinstance(other, EllipticPoly) and self.t == other.t and self.terms == other.terms

    def __repr__(self):
        return f"EllipticPoly({self.t}, {self.terms})"

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Q(0)) + c
        return EllipticPoly(self.t, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "EllipticPoly":
        c = _q(c)
        return EllipticPoly(self.t, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, EllipticPoly):
            return self.scale(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Q(0)) + c1 * c2
        return EllipticPoly(self.t, out)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def euler(self, s: int) -> "EllipticPoly":
        """``r_s * d/dr_s`` applied to self."""
        return EllipticPoly(self.t, {e: e[s] * c for e, c in self.terms.items()})

    def extend(self, t: int) -> "EllipticPoly":
        if t < self.t:
            raise ValueError("cannot drop variables")
        pad = (0,) * (t - self.t)
        return EllipticPoly(t, {e + pad: c for e, c in self.terms.items()})

    def proportional_to(self, other: "EllipticPoly") -> Fraction | None:
        """The scalar ``c`` with ``self == c * other``, or ``None``."""
        if set(self.terms) != set(other.terms) or not other.terms:
            return None
        ratios = {self.terms[e] / other.terms[e] for e in other.terms}
        return ratios.pop() if len(ratios) == 1 else None


def falling(x: int, n: int) -> int:
    """Falling factorial ``x (x-1) ... (x-n+1)``."""
    out = 1
    for i in range(n):
        out *= x - i
    return out


def elliptic_rc(j: int, k1: int, k2: int) -> EllipticPoly:
    """Genus one Rankin-Cohen polynomial ``p_{j,(k1,k2)}``."""
    if j < 0 or j % 2:
        raise ValueError("j must be a non-negative even integer")
    h = j // 2
    terms = {}
    for i in range(h + 1):
        c = (-1) ** i * math.comb(h, i) * falling(k1 + h - 1, i) * falling(k2 + h - 1, h - i)
        terms[(h - i, i)] = c
    return EllipticPoly(2, terms)


# ---------------------------------------------------------------------------
# RC candidates
# ---------------------------------------------------------------------------


class RCCandidate:
    """Polynomial in the entries of ``t`` symmetric matrices with ``H_j`` coefficients."""

    __slots__ = ("t", "j", "terms")

    def __init__(self, t: int, j: int, terms: dict | None = None):
        self.t = t
        self.j = j
        self.terms: dict[tuple, tuple] = {}
        for e, v in (terms or {}).items():
            e = tuple(e)
            if len(e) != 3 * t:
                raise ValueError("exponent length mismatch")
            v = tuple(_q(c) for c in (v.coeffs if isinstance(v, HomogPoly) else v))
            if len(v) != j + 1:
                raise ValueError("coefficient degree mismatch")
            if e in self.terms:
                v = tuple(a + b for a, b in zip(self.terms[e], v))
            self.terms[e] = v
        self.terms = {e: v for e, v in self.terms.items() if any(v)}

    # constructors -----------------------------------------------------------
    @classmethod
    def zero(cls, t: int, j: int) -> "RCCandidate":
        return cls(t, j)

    @classmethod
    def const(cls, t: int, p: HomogPoly) -> "RCCandidate":
        return cls(t, p.degree, {(0,) * (3 * t): p.coeffs})

    @classmethod
    def variable(cls, t: int, s: int, entry: int) -> "RCCandidate":
        """The scalar variable ``R^s_{entry}`` (entry 0, 1, 2 = 11, 12, 22)."""
        e = [0] * (3 * t)
        e[3 * s + entry] = 1
        return cls(t, 0, {tuple(e): (1,)})

    @classmethod
    def r_form(cls, t: int, s: int) -> "RCCandidate":
        """``R^s[v] = R11 x^2 + 2 R12 x y + R22 y^2``."""
        terms = {}
        for entry, vec in ((0, (1, 0, 0)), (1, (0, 2, 0)), (2, (0, 0, 1))):
            e = [0] * (3 * t)
            e[3 * s + entry] = 1
            terms[tuple(e)] = vec
        return cls(t, 2, terms)

    @classmethod
    def cross_form(cls, t: int, s1: int, s2: int) -> "RCCandidate":
        """``(R^s1 x R^s2)[v]`` as a degree two candidate."""
        A = [RCCandidate.variable(t, s1, i) for i in range(3)]
        B = [RCCandidate.variable(t, s2, i) for i in range(3)]
        c11 = (A[0] * B[1] - A[1] * B[0]).scale(2)
        c12 = A[0] * B[2] - A[2] * B[0]
        c22 = (A[1] * B[2] - A[2] * B[1]).scale(2)
        return (
            c11 * RCCandidate.const(t, HomogPoly([1, 0, 0]))
            + c12 * RCCandidate.const(t, HomogPoly([0, 2, 0]))
            + c22 * RCCandidate.const(t, HomogPoly([0, 0, 1]))
        )

    # arithmetic -------------------------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, RCCandidate)
            and (self.t, self.j) == (other.t, other.j)
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"RCCandidate(t={self.t}, j={self.j}, {len(self.terms)} terms)"

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "RCCandidate") -> "RCCandidate":
        if (self.t, self.j) != (other.t, other.j):
            raise ValueError("shape mismatch")
        out = dict(self.terms)
        for e, v in other.terms.items():
            if e in out:
                out[e] = tuple(a + b for a, b in zip(out[e], v))
            else:
                out[e] = v
        return RCCandidate(self.t, self.j, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "RCCandidate":
        c = _q(c)
        return RCCandidate(self.t, self.j, {e: tuple(c * a for a in v) for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, RCCandidate):
            return self.scale(other)
        if self.t != other.t:
            raise ValueError("slot count mismatch")
        out: dict = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = poly_mul(v1, v2)
                if e in out:
                    out[e] = [a + b for a, b in zip(out[e], prod)]
                else:
                    out[e] = prod
        return RCCandidate(self.t, self.j + other.j, out)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def slot_degrees(self) -> list[int]:
        return [max((sum(e[3 * s : 3 * s + 3]) for e in self.terms), default=0) for s in range(self.t)]

    # calculus ---------------------------------------------------------------
    def diff(self, var: int) -> "RCCandidate":
        out = {}
        for e, v in self.terms.items():
            if e[var]:
                f = e[var]
                e2 = list(e)
                e2[var] -= 1
                out[tuple(e2)] = tuple(f * a for a in v)
        return RCCandidate(self.t, self.j, out)

    def mul_var(self, var: int) -> "RCCandidate":
        out = {}
        for e, v in self.terms.items():
            e2 = list(e)
            e2[var] += 1
            out[tuple(e2)] = v
        return RCCandidate(self.t, self.j, out)

    def map_coeffs(self, fn) -> "RCCandidate":
        """Apply a linear map ``H_j -> H_j'`` to every coefficient."""
        out = {}
        j2 = None
        for e, v in self.terms.items():
            w = fn(HomogPoly(v))
            j2 = w.degree
            out[e] = w.coeffs
        if j2 is None:
            j2 = fn(HomogPoly.zero(self.j)).degree
        return RCCandidate(self.t, j2, out)

    def extend_slots(self, t: int) -> "RCCandidate":
        pad = (0,) * (3 * (t - self.t))
        return RCCandidate(t, self.j, {e + pad: v for e, v in self.terms.items()})

    # evaluation -------------------------------------------------------------
    def eval_at(self, mats: Sequence[SymMat]) -> HomogPoly:
        if len(mats) != self.t:
            raise ValueError("need one matrix per slot")
        vals = [_q(x) for m in mats for x in m]
        out = [Q(0)] * (self.j + 1)
        for e, v in self.terms.items():
            w = Q(1)
            for x, k in zip(vals, e):
                if k:
                    w *= x**k
            if w:
                for i, c in enumerate(v):
                    out[i] += w * c
        return HomogPoly(out)


def eval_at(P: RCCandidate, mats: Sequence[SymMat]) -> HomogPoly:
    return P.eval_at(mats)


def psi(p: EllipticPoly, j_out: int | None = None) -> RCCandidate:
    """Substitute ``r_s -> R^s[v]``."""
    t = p.t
    forms = [RCCandidate.r_form(t, s) for s in range(t)]
    d = p.degree()
    if not p.is_homogeneous():
        raise ValueError("psi needs a homogeneous polynomial")
    if j_out is not None and j_out != 2 * d:
        raise ValueError(f"degree mismatch: psi(p) has degree {2 * d}, not {j_out}")
    out = RCCandidate.zero(t, 2 * d)
    powers: dict[tuple[int, int], RCCandidate] = {}

    def power(s, k):
        if (s, k) not in powers:
            powers[(s, k)] = (
                RCCandidate.const(t, HomogPoly([1])) if k == 0 else power(s, k - 1) * forms[s]
            )
        return powers[(s, k)]

    for e, c in p.terms.items():
        term = RCCandidate.const(t, HomogPoly([c]))
        for s, k in enumerate(e):
            term = term * power(s, k)
        out = out + term
    return out


def m_op(p: EllipticPoly, k: Sequence[int]) -> RCCandidate:
    """The weight ``(j+2, 1)`` construction from a polynomial in three variables."""
    if len(k) != 3:
        raise ValueError("m_op needs a type of length three")
    p = p.extend(3) if p.t < 3 else p
    if p.t != 3:
        raise ValueError("m_op needs a polynomial in r1, r2, r3")
    k1, k2, k3 = k
    q3 = p.scale(k3) + p.euler(2)
    q2 = p.scale(k2) + p.euler(1)
    q1 = p.scale(k1) + p.euler(0)
    return (
        RCCandidate.cross_form(3, 0, 1) * psi(q3)
        - RCCandidate.cross_form(3, 0, 2) * psi(q2)
        + RCCandidate.cross_form(3, 1, 2) * psi(q1)
    )


# ---------------------------------------------------------------------------
# homogeneity and harmonicity
# ---------------------------------------------------------------------------


def _lie_defect(P: RCCandidate, which: str) -> RCCandidate:
    """Infinitesimal homogeneity defect for the nilpotent generators of gl(2)."""
    out = RCCandidate.zero(P.t, P.j)
    for s in range(P.t):
        i11, i12, i22 = 3 * s, 3 * s + 1, 3 * s + 2
        if which == "e12":
            out = out + P.diff(i11).mul_var(i12).scale(2) + P.diff(i12).mul_var(i22)
        else:
            out = out + P.diff(i12).mul_var(i11) + P.diff(i22).mul_var(i12).scale(2)
    if which == "e12":
        vpart = P.map_coeffs(lambda h: h.d_y().shift_x() if h.degree else h.scale(0))
    else:
        vpart = P.map_coeffs(lambda h: h.d_x().shift_y() if h.degree else h.scale(0))
    return out - vpart


def _torus_ok(P: RCCandidate, ell: int) -> bool:
    for e, v in P.terms.items():
        E11 = sum(e[0::3])
        E12 = sum(e[1::3])
        E22 = sum(e[2::3])
        for i, c in enumerate(v):
            if c and (2 * E11 + E12 != ell + P.j - i or E12 + 2 * E22 != ell + i):
                return False
    return True


def _rand_q(rng: random.Random, bound: int = 10**6) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 97))


def _rand_sym(rng) -> SymMat:
    return (_rand_q(rng), _rand_q(rng), _rand_q(rng))


def congruence(G, m: SymMat) -> SymMat:
    """``G m G'`` for symmetric ``m``."""
    (a, b), (c, d) = G
    m11, m12, m22 = m
    return (
        a * a * m11 + 2 * a * b * m12 + b * b * m22,
        a * c * m11 + (a * d + b * c) * m12 + b * d * m22,
        c * c * m11 + 2 * c * d * m12 + d * d * m22,
    )


def is_homogeneous(
    P: RCCandidate, j: int, ell: int, *, mode: str = "random", trials: int = 8, seed: int = 0
) -> bool:
    """Decide ``P(G R G'; v) = det(G)^ell P(R; G' v)`` for all ``G``."""
    if P.is_zero():
        return True
    if P.j != j:
        return False
    if mode == "symbolic":
        return _torus_ok(P, ell) and all(_lie_defect(P, w).is_zero() for w in ("e12", "e21"))
    if mode != "random":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    for _ in range(trials):
        G = ((_rand_q(rng), _rand_q(rng)), (_rand_q(rng), _rand_q(rng)))
        if G[0][0] * G[1][1] - G[0][1] * G[1][0] == 0:
            continue
        mats = [_rand_sym(rng) for _ in range(P.t)]
        lhs = P.eval_at([congruence(G, m) for m in mats])
        rhs = rho_apply(G, j, ell, P.eval_at(mats))
        if lhs != rhs:
            return False
    return True


def laplacian(P: RCCandidate, k: Sequence[int]) -> RCCandidate:
    """Polynomial ``Q`` in the ``R`` variables with ``Q(xi xi') = Laplacian of P~``."""
    if len(k) != P.t:
        raise ValueError("type length must equal the number of slots")
    out = RCCandidate.zero(P.t, P.j)
    for s, ks in enumerate(k):
        i11, i12, i22 = 3 * s, 3 * s + 1, 3 * s + 2
        d11, d12, d22 = P.diff(i11), P.diff(i12), P.diff(i22)
        m = 2 * ks
        out = out + (d11 + d22).scale(2 * m)
        out = out + d11.diff(i11).mul_var(i11).scale(4) + d22.diff(i22).mul_var(i22).scale(4)
        out = out + (d11.diff(i12) + d22.diff(i12)).mul_var(i12).scale(4)
        d1212 = d12.diff(i12)
        out = out + d1212.mul_var(i11) + d1212.mul_var(i22)
    return out


def is_harmonic(
    P: RCCandidate, k: Sequence[int], *, mode: str = "random", trials: int = 8, seed: int = 0
) -> bool:
    """Decide whether ``P`` is ``k``-harmonic.

    The Laplacian in the ``xi`` variables is pushed through ``R = xi xi'`` by the
    chain rule, so only first and second partials of ``P`` are needed.
    """
    if len(k) != P.t:
        raise ValueError("type length must equal the number of slots")
    if any(ks < 1 for ks in k):
        raise ValueError("type entries must be positive")
    lap = laplacian(P, k)
    if mode == "symbolic":
        return lap.is_zero()
    if mode != "random":
        raise ValueError(f"unknown mode {mode!r}")
    rng = random.Random(seed)
    for _ in range(trials):
        mats = [_rand_sym(rng) for _ in range(P.t)]
        if not lap.eval_at(mats).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# solving for RC polynomials
# ---------------------------------------------------------------------------


def _monomials(nvars: int, d: int):
    for combo in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        yield tuple(e)


def nullspace(rows: list[dict], ncols: int) -> list[list[Fraction]]:
    """Exact nullspace of a sparse matrix given as a list of ``{col: value}`` rows."""
    # pivot column -> row with a 1 there and zeros in every other pivot column
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {c: _q(v) for c, v in row.items() if v}
        for pc in [c for c in r if c in pivots]:
            _axpy(r, -r[pc], pivots[pc])
        if not r:
            continue
        pc = min(r)
        inv = 1 / r[pc]
        r = {c: v * inv for c, v in r.items()}
        for other in pivots.values():
            if pc in other:
                _axpy(other, -other[pc], r)
        pivots[pc] = r
    basis = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        vec = [Q(0)] * ncols
        vec[fc] = Q(1)
        for pc, r in pivots.items():
            if fc in r:
                vec[pc] = -r[fc]
        basis.append(vec)
    return basis


def _axpy(target: dict, f, src: dict) -> None:
    for c, v in src.items():
        nv = target.get(c, Q(0)) + f * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


def solve_rc_space(j: int, ell: int, k: Sequence[int]) -> list[RCCandidate]:
    """Basis of the RC polynomials of weight ``(j, ell)`` and type ``k``."""
    t = len(k)
    if j < 0 or ell < 0 or j % 2:
        return []
    d = ell + j // 2
    unknowns = []
    for e in _monomials(3 * t, d):
        E12 = sum(e[1::3])
        E22 = sum(e[2::3])
        i = E12 + 2 * E22 - ell
        if 0 <= i <= j:
            unknowns.append((e, i))
    if not unknowns:
        return []
    images = []
    for e, i in unknowns:
        P = RCCandidate(t, j, {e: HomogPoly.monomial(j, i).coeffs})
        parts = [_lie_defect(P, "e12"), _lie_defect(P, "e21"), laplacian(P, k)]
        images.append(parts)
    rowkeys: dict = {}
    rows: list[dict] = []
    for col, parts in enumerate(images):
        for which, img in enumerate(parts):
            for e, v in img.terms.items():
                for i, c in enumerate(v):
                    if c:
                        key = (which, e, i)
                        if key not in rowkeys:
                            rowkeys[key] = len(rows)
                            rows.append({})
                        rows[rowkeys[key]][col] = c
    basis = nullspace(rows, len(unknowns))
    out = []
    for vec in basis:
        den = math.lcm(*(c.denominator for c in vec if c))
        num = math.gcd(*(int(c * den) for c in vec if c))
        scale = Fraction(den, num)
        terms = {}
        for (e, i), c in zip(unknowns, vec):
            if c:
                terms[e] = HomogPoly.monomial(j, i, c * scale).coeffs
        out.append(RCCandidate(t, j, terms))
    return out
