"""Hecke operators ``T(p)`` on scalar and vector-valued expansions.

For weight ``det^k Sym^j`` the coefficient of ``T(p)F`` at ``M`` is

    a(pM) + p^(k-2) * sum_D rho_j(adj D) a(D M D' / p) + p^(2k+j-3) a(M / p)

where ``D`` runs over ``(1, b; 0, p)`` for ``0 <= b < p`` and ``(p, 0; 0, 1)``,
terms whose argument leaves the lattice are dropped, and ``rho_j`` is the
representation without the determinant twist.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .classical import ScalarExpansion
from .index_lattice import Index, act, enumerate_indices, mat_inv, reduce
from .rcpoly import nullspace, rho_apply
from .vvforms import VectorExpansion, fill_orbits, reduced_indices


class HeckeError(ValueError):
    pass


def _reps(p: int):
    return [((1, b), (0, p)) for b in range(p)] + [((p, 0), (0, 1))]


def _adj(D):
    (a, b), (c, d) = D
    return ((d, -b), (-c, a))


def _div_index(n: Index, p: int, coset: str) -> Index | None:
    if n.nu1 % p or n.nu2 % p or n.rho % p:
        return None
    m = Index(n.nu1 // p, n.nu2 // p, n.rho // p)
    return m if m.coset == coset else None


def _vector_at(F: VectorExpansion, n: Index):
    if n.trace <= F.tmax:
        return F[n]
    u, m = reduce(n)
    return rho_apply(mat_inv(u), F.j, F.k, F[m])


def _scalar_at(f: ScalarExpansion, n: Index):
    if n.trace <= f.tmax:
        return f[n]
    u, m = reduce(n)
    return f.expected_sign(u) * f[m]


def _check_prime(p: int):
    if p < 2 or not sympy.isprime(p):
        raise ValueError(f"{p} is not a prime")


def hecke_vector(
    F: VectorExpansion, p: int, *, tmax: int | None = None, full: bool = False
) -> VectorExpansion:
    """``T(p)F`` to doubled trace ``floor(F.tmax / p)`` (or ``tmax`` if smaller)."""
    _check_prime(p)
    avail = F.tmax // p
    if tmax is None:
        tmax = avail
    if tmax > avail:
        raise HeckeError(f"insufficient precision: T({p}) to {tmax} needs input to {p * tmax}")
    j, k = F.j, F.k
    reps = [(D, _adj(D)) for D in _reps(p)]
    mid = Fraction(p) ** (k - 2)
    low = Fraction(p) ** (2 * k + j - 3)
    targets = enumerate_indices(F.coset, tmax) if full else reduced_indices(F.coset, tmax)
    out = {}
    for M in targets:
        acc = F[M.scale(p)]
        for D, A in reps:
            N = _div_index(act(D, M), p, F.coset)
            if N is not None:
                v = _vector_at(F, N)
                if not v.is_zero():
                    acc = acc + rho_apply(A, j, 0, v).scale(mid)
        N = _div_index(M, p, F.coset)
        if N is not None:
            acc = acc + F[N].scale(low)
        if not acc.is_zero():
            out[M] = acc
    if full:
        return VectorExpansion(j, k, F.coset, tmax, out, F.min_doubled_trace)
    return fill_orbits(j, k, F.coset, tmax, out, F.min_doubled_trace)


def hecke_scalar(f: ScalarExpansion, p: int, *, tmax: int | None = None) -> ScalarExpansion:
    """``T(p)f`` for a scalar form of even-coset support."""
    _check_prime(p)
    avail = f.tmax // p
    tmax = avail if tmax is None else tmax
    if tmax > avail:
        raise HeckeError(f"insufficient precision: T({p}) to {tmax} needs input to {p * tmax}")
    k = f.weight
    mid = Fraction(p) ** (k - 2)
    low = Fraction(p) ** (2 * k - 3)
    out = {}
    for M in enumerate_indices(f.coset, tmax):
        acc = f[M.scale(p)]
        for D in _reps(p):
            N = _div_index(act(D, M), p, f.coset)
            if N is not None:
                acc += mid * _scalar_at(f, N)
        N = _div_index(M, p, f.coset)
        if N is not None:
            acc += low * f[N]
        if acc:
            out[M] = acc
    return ScalarExpansion(k, f.coset, tmax, out, f.min_doubled_trace)


def _flat(F) -> dict:
    if isinstance(F, ScalarExpansion):
        return {(n, 0): c for n, c in F.coeffs.items()}
    return {(n, i): c for n, v in F.coeffs.items() for i, c in enumerate(v.coeffs) if c}


def eigenvalue_of(F, p: int) -> Fraction:
    """The ``lambda`` with ``T(p)F = lambda F``, checked at every available coefficient."""
    TF = hecke_scalar(F, p) if isinstance(F, ScalarExpansion) else hecke_vector(F, p)
    src = _flat(F.truncate(TF.tmax))
    img = _flat(TF)
    if not src:
        raise HeckeError("zero form (or no coefficients within T(p) precision)")
    key = min(src, key=lambda t: (t[0].trace, t[0].nu2, t[0].rho, t[1]))
    lam = img.get(key, Fraction(0)) / src[key]
    for t in set(src) | set(img):
        if img.get(t, 0) != lam * src.get(t, 0):
            raise HeckeError("not an eigenform")
    return lam


# --- matrices on bases ---------------------------------------------------------------------


@dataclass(frozen=True)
class HeckeMatrix:
    p: int
    labels: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]  # column c = coordinates of T(p) basis[c]

    @property
    def size(self) -> int:
        return len(self.labels)

    def charpoly(self) -> list[int]:
        return charpoly(self)


def solve_in_span(basis: Sequence, target) -> list[Fraction]:
    """Exact coordinates of ``target`` in ``basis`` over all common coefficients."""
    tmax = min([b.tmax for b in basis] + [target.tmax])
    cols = [_flat(b.truncate(tmax)) for b in basis]
    rhs = _flat(target.truncate(tmax))
    keys = set(rhs).union(*cols)
    n = len(basis)
    rows = []
    for key in keys:
        row = {i: c[key] for i, c in enumerate(cols) if c.get(key)}
        if rhs.get(key):
            row[n] = -rhs[key]
        if row:
            rows.append(row)
    sols = [v for v in nullspace(rows, n + 1) if v[n]]
    if not sols:
        raise HeckeError("target is not in the span of the basis")
    if len(nullspace(rows, n + 1)) != 1:
        raise HeckeError("basis is linearly dependent at this precision")
    v = sols[0]
    return [x / v[n] for x in v[:n]]


def rank(forms: Sequence) -> int:
    tmax = min(f.tmax for f in forms)
    cols = [_flat(f.truncate(tmax)) for f in forms]
    keys = set().union(*cols)
    rows = [{i: c[k] for i, c in enumerate(cols) if c.get(k)} for k in keys]
    return len(forms) - len(nullspace([r for r in rows if r], len(forms)))


def matrix_on_basis(basis: Sequence, p: int, labels: Sequence[str] | None = None) -> HeckeMatrix:
    labels = tuple(labels or (getattr(b, "name", "") or f"b{i}" for i, b in enumerate(basis)))
    if rank(basis) != len(basis):
        raise HeckeError("basis is not linearly independent at this precision")
    cols = []
    for b in basis:
        Tb = hecke_scalar(b, p) if isinstance(b, ScalarExpansion) else hecke_vector(b, p)
        try:
            cols.append(solve_in_span([x.truncate(Tb.tmax) for x in basis], Tb))
        except HeckeError as exc:
            raise HeckeError(f"basis not T({p})-stable: {exc}") from None
    n = len(basis)
    return HeckeMatrix(p, labels, tuple(tuple(cols[c][r] for c in range(n)) for r in range(n)))


def charpoly(M: HeckeMatrix | Sequence[Sequence]) -> list[int]:
    """Coefficients (leading first) of ``det(X - M)``, scaled to a primitive integer polynomial."""
    rows = M.matrix if isinstance(M, HeckeMatrix) else M
    X = sympy.Symbol("X")
    mat = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c
                         for c in row] for row in rows])
    poly = sympy.Poly(mat.charpoly(X).as_expr(), X)
    coeffs = [Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()]
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    g = g or 1
    if ints[0] < 0:
        g = -g
    return [c // g for c in ints]


def format_poly(coeffs: Sequence[int], var: str = "X") -> str:
    deg = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        e = deg - i
        if c == 0:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        mag = abs(c)
        body = f"{mag}" if not mono else (mono if mag == 1 else f"{mag} {mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def discriminant(coeffs: Sequence[int]) -> tuple[int, dict[int, int]]:
    """Discriminant of an integer polynomial with its factorization (sign kept separately)."""
    X = sympy.Symbol("X")
    poly = sympy.Poly(list(coeffs), X)
    if poly.degree() < 1:
        raise ValueError("need a polynomial of positive degree")
    d = 1 if poly.degree() == 1 else int(sympy.discriminant(poly))
    fac = {int(p): int(e) for p, e in sympy.factorint(abs(d)).items()} if d not in (0, 1, -1) else {}
    return d, fac


def format_factorization(fac: dict[int, int]) -> str:
    if not fac:
        return "1"
    return " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in sorted(fac.items()))
