"""Scalar-valued Fourier expansions: the Igusa generators and their ring operations.

Two independent constructions are provided.  ``route="maass"`` lifts index-one
Jacobi forms (Eisenstein series via Cohen's function, cusp forms as products of
those with elliptic Eisenstein series).  ``route="theta"`` multiplies the ten even
theta constants, each summed directly over its lattice.  Both are normalized the
same way so that they can be compared coefficient by coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Iterable, Mapping

from sympy import Rational, bernoulli, divisors, factorint
from sympy.functions.combinatorial.numbers import kronecker_symbol, mobius

from .index_lattice import EVEN, ODD, ZERO, Index, act, coset_sum, enumerate_indices, mat_det
from .kernels import convolve

GENERATOR_NAMES = ("phi4", "phi6", "chi10", "chi12", "chi5")
WEIGHTS = {"phi4": 4, "phi6": 6, "chi10": 10, "chi12": 12, "chi5": 5}
LEAD = Index(2, 2, 2)
CHI5_LEAD = Index(1, 1, 1)
UNIMODULAR_GENERATORS = (((0, 1), (-1, 0)), ((1, 1), (0, 1)), ((1, 0), (0, -1)), ((0, 1), (1, 0)))


def odd_character(u) -> int:
    """Sign of the permutation ``u`` induces on the nonzero vectors of ``F_2^2``."""
    vecs = [(1, 0), (0, 1), (1, 1)]
    (a, b), (c, d) = u
    image = [((a * x + b * y) % 2, (c * x + d * y) % 2) for x, y in vecs]
    perm = [vecs.index(v) for v in image]
    inversions = sum(perm[i] > perm[j] for i in range(3) for j in range(i + 1, 3))
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class ScalarExpansion:
    """Fourier coefficients at every semi-positive index of ``coset`` up to ``tmax``.

    Zero coefficients are not stored.  ``min_doubled_trace`` is a support floor:
    every nonzero coefficient sits at doubled trace at least this large.
    """

    weight: int
    coset: str
    tmax: int
    coeffs: Mapping[Index, Fraction] = field(default_factory=dict)
    min_doubled_trace: int = 0
    name: str = ""

    def __post_init__(self):
        clean = {}
        for n, c in self.coeffs.items():
            n = Index(*n)
            if n.coset != self.coset or not n.is_semipositive() or n.trace > self.tmax:
                raise ValueError(f"index {n} outside the declared support")
            c = Fraction(c)
            if c:
                clean[n] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, n) -> Fraction:
        n = Index(*n)
        if n.trace > self.tmax:
            raise KeyError(f"{n} is beyond the precision bound {self.tmax}")
        return self.coeffs.get(n, Fraction(0))

    def indices(self) -> list[Index]:
        return enumerate_indices(self.coset, self.tmax)

    def truncate(self, tmax: int) -> "ScalarExpansion":
        if tmax > self.tmax:
            raise ValueError("cannot raise precision by truncation")
        kept = {n: c for n, c in self.coeffs.items() if n.trace <= tmax}
        return ScalarExpansion(self.weight, self.coset, tmax, kept, self.min_doubled_trace, self.name)

    def scale(self, c) -> "ScalarExpansion":
        c = Fraction(c)
        return ScalarExpansion(
            self.weight, self.coset, self.tmax,
            {n: c * v for n, v in self.coeffs.items()}, self.min_doubled_trace, self.name,
        )

    def __neg__(self):
        return self.scale(-1)

    def _combine(self, other, sign):
        if (self.weight, self.coset) != (other.weight, other.coset):
            raise ValueError("weight or coset mismatch")
        tmax = min(self.tmax, other.tmax)
        out = {n: c for n, c in self.coeffs.items() if n.trace <= tmax}
        for n, c in other.coeffs.items():
            if n.trace <= tmax:
                out[n] = out.get(n, 0) + sign * c
        return ScalarExpansion(
            self.weight, self.coset, tmax, out,
            min(self.min_doubled_trace, other.min_doubled_trace),
        )

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __eq__(self, other):
        if not isinstance(other, ScalarExpansion):
            return NotImplemented
        return (self.weight, self.coset, self.tmax, self.coeffs) == (
            other.weight, other.coset, other.tmax, other.coeffs,
        )

    def agrees_with(self, other: "ScalarExpansion") -> bool:
        """Equal coefficients up to the smaller of the two precision bounds."""
        tmax = min(self.tmax, other.tmax)
        return self.truncate(tmax).coeffs == other.truncate(tmax).coeffs

    def is_cusp(self) -> bool:
        return all(not n.is_singular() for n in self.coeffs)

    def character(self, u) -> int:
        """Sign ``s`` with ``a(u n u') = s * a(n)`` on the stored coefficients.

        Raises ``ValueError`` if no single sign works.
        """
        signs = set()
        for n, c in self.coeffs.items():
            m = act(u, n)
            if m.trace > self.tmax:
                continue
            ratio = self.coeffs.get(m, Fraction(0)) / c
            signs.add(ratio)
        if not signs:
            return mat_det(u) ** self.weight
        if len(signs) != 1 or abs(next(iter(signs))) != 1:
            raise ValueError(f"no consistent sign for {u}: {signs}")
        return int(next(iter(signs)))

    def expected_sign(self, u) -> int:
        s = mat_det(u) ** self.weight
        return s * odd_character(u) if self.coset == ODD else s

    def check_equivariance(self, gens=None) -> bool:
        """``a(u n u') = det(u)^k a(n)``, twisted by :func:`odd_character` on the odd coset."""
        gens = gens or UNIMODULAR_GENERATORS
        try:
            return all(self.character(u) == self.expected_sign(u) for u in gens)
        except ValueError:
            return False


def constant(c=1, tmax: int = 0, weight: int = 0) -> ScalarExpansion:
    return ScalarExpansion(weight, EVEN, tmax, {ZERO: Fraction(c)} if c else {})


# --- ring operations -------------------------------------------------------------


def _integerize(coeffs: Mapping[Index, Fraction]) -> tuple[dict, int]:
    den = 1
    for c in coeffs.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {tuple(n): [int(c * den)] for n, c in coeffs.items()}, den


def _product_coeffs(f: Mapping, g: Mapping, targets: Iterable[Index]) -> dict[Index, Fraction]:
    lf, df = _integerize(f)
    lg, dg = _integerize(g)
    raw = convolve(lf, lg, [(0, 0, [(0, 1)])], 1, [tuple(t) for t in targets])
    den = df * dg
    return {Index(*n): Fraction(v[0], den) for n, v in raw.items() if v[0]}


def mul(f: ScalarExpansion, g: ScalarExpansion) -> ScalarExpansion:
    tmax = min(f.tmax + g.min_doubled_trace, g.tmax + f.min_doubled_trace)
    coset = coset_sum(f.coset, g.coset)
    floor = f.min_doubled_trace + g.min_doubled_trace
    targets = [n for n in enumerate_indices(coset, tmax) if n.trace >= floor]
    coeffs = _product_coeffs(f.coeffs, g.coeffs, targets)
    return ScalarExpansion(f.weight + g.weight, coset, tmax, coeffs, floor)


def power(f: ScalarExpansion, e: int) -> ScalarExpansion:
    out = constant(1, f.tmax)
    for _ in range(e):
        out = mul(out, f)
    return out


def divide(f: ScalarExpansion, g: ScalarExpansion) -> ScalarExpansion:
    """The quotient ``h`` with ``g * h = f``; ``g`` must have constant term 1."""
    if g.coset != EVEN or f.coset != EVEN:
        raise ValueError("division is implemented on the even coset only")
    if g.coeffs.get(ZERO) != 1:
        raise ValueError("divisor must have constant term 1")
    tmax = min(f.tmax, g.tmax)
    rest = {n: c for n, c in g.coeffs.items() if n != ZERO and n.trace <= tmax}
    h: dict[Index, Fraction] = {}
    by_trace: dict[int, list[Index]] = {}
    for n in enumerate_indices(EVEN, tmax):
        by_trace.setdefault(n.trace, []).append(n)
    for t in sorted(by_trace):
        layer = by_trace[t]
        known = _product_coeffs(rest, h, layer) if h and rest else {}
        for n in layer:
            v = f.coeffs.get(n, Fraction(0)) - known.get(n, Fraction(0))
            if v:
                h[n] = v
    floor = max(0, f.min_doubled_trace - g.min_doubled_trace)
    return ScalarExpansion(f.weight - g.weight, EVEN, tmax, h, floor)


def sqrt_unit_leading(f: ScalarExpansion) -> ScalarExpansion:
    """Square root in the odd coset of an even cusp form led by ``(2,2,2)``.

    Layers of doubled trace ``t`` are solved from the coefficient of ``f`` at
    ``m + (1,1,1)``; inside a layer indices are processed with ``rho``
    descending because the only same-layer dependency is on ``m + (0,0,2)``.
    """
    if f.coset != EVEN:
        raise ValueError("input must live on the even coset")
    lead = f.coeffs.get(LEAD, Fraction(0))
    if any(n.trace < 4 for n in f.coeffs):
        raise ValueError("input must vanish below doubled trace 4")
    r_num, r_den = math.isqrt(lead.numerator), math.isqrt(lead.denominator)
    if lead <= 0 or Fraction(r_num * r_num, r_den * r_den) != lead:
        raise ValueError("leading coefficient is not a positive rational square")
    root = Fraction(r_num, r_den)
    tmax = f.tmax - 2
    g: dict[Index, Fraction] = {}
    if tmax < 2:
        return ScalarExpansion(f.weight // 2, ODD, max(tmax, 0), {}, 2)
    g[CHI5_LEAD] = root
    g[Index(1, 1, -1)] = f[Index(2, 2, 0)] / (2 * root)
    shift = Index(1, 1, 1)
    minus = g[Index(1, 1, -1)]
    layers: dict[int, list[Index]] = {}
    for m in enumerate_indices(ODD, tmax):
        layers.setdefault(m.trace, []).append(m)
    for t in sorted(layers):
        if t == 2:
            continue
        inner = {n: c for n, c in g.items() if 4 <= n.trace <= t - 2}
        targets = [m + shift for m in layers[t]]
        known = _product_coeffs(inner, inner, targets) if inner else {}
        for m in sorted(layers[t], key=lambda m: -m.rho):
            n = m + shift
            v = f.coeffs.get(n, Fraction(0)) - known.get(n, Fraction(0))
            v -= 2 * minus * g.get(m + Index(0, 0, 2), Fraction(0))
            v /= 2 * root
            if v:
                g[m] = v
    out = ScalarExpansion(f.weight // 2, ODD, tmax, g, 2)
    check = mul(out, out)
    if not check.agrees_with(f.truncate(check.tmax)):
        raise ValueError("input is not a square in the expansion ring")
    return out


# --- Maass lift route -------------------------------------------------------------


@lru_cache(maxsize=None)
def _gen_bernoulli(r: int, disc: int) -> Fraction:
    """Generalized Bernoulli number ``B_{r, chi}`` for the character ``(disc/.)``."""
    m = abs(disc)
    total = Rational(0)
    for a in range(1, m + 1):
        chi = kronecker_symbol(disc, a)
        if chi:
            total += chi * bernoulli(r, Rational(a, m))
    val = total * Rational(m) ** (r - 1)
    return Fraction(int(val.p), int(val.q))


def _fundamental(d: int) -> tuple[int, int]:
    """Write a discriminant ``d < 0`` as ``D * f**2`` with ``D`` fundamental."""
    f = 1
    for p, e in factorint(-d).items():
        f *= p ** (e // 2)
    D = d // (f * f)
    if D % 4 not in (0, 1):
        D *= 4
        f //= 2
    return D, f


def _sigma(n: int, s: int) -> int:
    return sum(d**s for d in divisors(n))


@lru_cache(maxsize=None)
def cohen_h(r: int, N: int) -> Fraction:
    """Cohen's function ``H(r, N)``."""
    if N == 0:
        return _zeta_neg(1 - 2 * r)
    if N < 0 or N % 4 in (1, 2):
        return Fraction(0)
    D, f = _fundamental(-N)
    L = -_gen_bernoulli(r, D) / r
    s = 0
    for d in divisors(f):
        mu = int(mobius(d))
        if mu:
            s += mu * int(kronecker_symbol(D, d)) * Fraction(d) ** (r - 1) * _sigma(f // d, 2 * r - 1)
    return L * s


def _zeta_neg(s: int) -> Fraction:
    """``zeta(s)`` for odd negative ``s``."""
    n = 1 - s
    b = bernoulli(n)
    return -Fraction(int(b.p), int(b.q)) / n


def _bern(n: int) -> Fraction:
    b = bernoulli(n)
    return Fraction(int(b.p), int(b.q))


@lru_cache(maxsize=None)
def jacobi_eisenstein(k: int, N: int) -> Fraction:
    """Coefficient of ``E_{k,1}`` at discriminant ``N = 4n - r^2``."""
    return cohen_h(k - 1, N) / _zeta_neg(3 - 2 * k)


def elliptic_eisenstein(k: int, nmax: int) -> list[Fraction]:
    c = -Fraction(2 * k) / _bern(k)
    return [Fraction(1)] + [c * _sigma(n, k - 1) for n in range(1, nmax + 1)]


def _jacobi_product(
    ell: list[Fraction], k: int, nmax_disc: int
) -> dict[int, Fraction]:
    """Discriminant coefficients of ``f * E_{k,1}`` for an elliptic form ``f``."""
    out = {}
    for N in range(nmax_disc + 1):
        if N % 4 in (1, 2):
            continue
        r = N % 2
        n = (N + r * r) // 4
        out[N] = sum(
            (ell[i] * jacobi_eisenstein(k, 4 * (n - i) - r * r) for i in range(n + 1)),
            Fraction(0),
        )
    return out


def jacobi_cusp(k: int, nmax_disc: int) -> dict[int, Fraction]:
    """Discriminant coefficients of the index-one Jacobi cusp form of weight 10 or 12."""
    nmax = nmax_disc // 4 + 1
    e4 = elliptic_eisenstein(4, nmax)
    e6 = elliptic_eisenstein(6, nmax)
    if k == 10:
        a = _jacobi_product(e6, 4, nmax_disc)
        b = _jacobi_product(e4, 6, nmax_disc)
    elif k == 12:
        e44 = [sum((e4[i] * e4[n - i] for i in range(n + 1)), Fraction(0)) for n in range(nmax + 1)]
        a = _jacobi_product(e44, 4, nmax_disc)
        b = _jacobi_product(e6, 6, nmax_disc)
    else:
        raise ValueError("only weights 10 and 12 are available")
    return {N: (a[N] - b[N]) / 144 for N in a}


def maass_lift(c: Callable[[int], Fraction], k: int, tmax: int, const: Fraction) -> dict[Index, Fraction]:
    """Maass lift of an index-one Jacobi form given by its discriminant coefficients."""
    out = {}
    for n in enumerate_indices(EVEN, tmax):
        if n == ZERO:
            v = const
        else:
            g = math.gcd(math.gcd(n.nu1, n.nu2), n.rho) // 2
            disc = n.det16 // 4
            v = sum((Fraction(d) ** (k - 1) * c(disc // (d * d)) for d in divisors(g)), Fraction(0))
        if v:
            out[n] = v
    return out


def _maass_generator(name: str, tmax: int) -> ScalarExpansion:
    k = WEIGHTS[name]
    if name in ("phi4", "phi6"):
        scale = -Fraction(2 * k) / _bern(k)
        coeffs = maass_lift(lambda N: scale * jacobi_eisenstein(k, N), k, tmax, Fraction(1))
        return ScalarExpansion(k, EVEN, tmax, coeffs, 0, name)
    table = jacobi_cusp(k, max(3, (tmax // 2) ** 2))
    lead = table[3]
    coeffs = maass_lift(lambda N: table.get(N, Fraction(0)) / lead, k, tmax, Fraction(0))
    return ScalarExpansion(k, EVEN, tmax, coeffs, 4, name)


# --- theta route --------------------------------------------------------------------
#
# Theta series are kept in the "eighth" lattice: the key (N11, N22, N12) stands for
# the exponent matrix ((N11, N12), (N12, N22)) / 8, which is where y y' / 8 lands
# for y congruent to the top characteristic mod 2.

EVEN_CHARACTERISTICS = tuple(
    (a, b) for a in product((0, 1), repeat=2) for b in product((0, 1), repeat=2)
    if (a[0] * b[0] + a[1] * b[1]) % 2 == 0
)


def _char_sum(*ms):
    a = tuple(sum(m[0][i] for m in ms) % 2 for i in range(2))
    b = tuple(sum(m[1][i] for m in ms) % 2 for i in range(2))
    return a, b


def _is_even(m) -> bool:
    return (m[0][0] * m[1][0] + m[0][1] * m[1][1]) % 2 == 0


def goepel_quadruples() -> list[tuple]:
    return [q for q in combinations(EVEN_CHARACTERISTICS, 4) if _char_sum(*q) == ((0, 0), (0, 0))]


def syzygous_triples() -> list[tuple]:
    return [t for t in combinations(EVEN_CHARACTERISTICS, 3) if _is_even(_char_sum(*t))]


def theta_series(m, bound: int) -> dict[tuple, int]:
    """Theta constant with characteristic ``m`` up to ``N11 + N22 <= bound``."""
    (a1, a2), (b1, b2) = m
    out: dict[tuple, int] = {}
    r = math.isqrt(bound) + 1
    for y1 in range(-r, r + 1):
        if (y1 - a1) % 2:
            continue
        for y2 in range(-r, r + 1):
            if (y2 - a2) % 2 or y1 * y1 + y2 * y2 > bound:
                continue
            e = y1 * b1 + y2 * b2
            if e % 2:
                continue  # cancels against -y
            key = (y1 * y1, y2 * y2, y1 * y2)
            out[key] = out.get(key, 0) + (1 if e % 4 == 0 else -1)
    return {k: v for k, v in out.items() if v}


def _eighth_targets(residues: set, bound: int) -> list[tuple]:
    out = []
    for s in range(bound + 1):
        for n11 in range(s + 1):
            n22 = s - n11
            b = math.isqrt(n11 * n22)
            for n12 in range(-b, b + 1):
                if (n11 % 8, n22 % 8, n12 % 8) in residues:
                    out.append((n11, n22, n12))
    return out


def _residues(series) -> set:
    return {(a % 8, b % 8, c % 8) for a, b, c in series}


def theta_mul(f: dict, g: dict, bound: int) -> dict:
    if not f or not g:
        return {}
    res = {
        tuple((x[i] + y[i]) % 8 for i in range(3)) for x in _residues(f) for y in _residues(g)
    }
    raw = convolve(
        {k: [v] for k, v in f.items()}, {k: [v] for k, v in g.items()},
        [(0, 0, [(0, 1)])], 1, _eighth_targets(res, bound),
    )
    return {k: v[0] for k, v in raw.items() if v[0]}


def theta_power(f: dict, e: int, bound: int) -> dict:
    out = {(0, 0, 0): 1}
    base = f
    while e:
        if e & 1:
            out = theta_mul(out, base, bound)
        e >>= 1
        if e:
            base = theta_mul(base, base, bound)
    return out


def theta_to_expansion(series: dict, weight: int, tmax: int, name: str = "") -> ScalarExpansion:
    """Convert an eighth-lattice series to doubled coordinates."""
    coeffs: dict[Index, Fraction] = {}
    coset = None
    for (n11, n22, n12), v in series.items():
        if not v:
            continue
        if n11 % 4 or n22 % 4 or n12 % 2:
            raise ValueError("series is not supported on the half-lattice")
        n = Index(n11 // 4, n22 // 4, n12 // 2)
        if n.trace > tmax:
            continue
        c = n.coset
        if c is None or (coset is not None and c != coset):
            raise ValueError("series mixes cosets")
        coset = c
        coeffs[n] = Fraction(v)
    coset = coset or EVEN
    floor = min((n.trace for n in coeffs), default=tmax)
    return ScalarExpansion(weight, coset, tmax, coeffs, floor, name)


def _normalize(f: ScalarExpansion, at: Index) -> ScalarExpansion:
    lead = f.coeffs.get(at)
    if not lead:
        raise ValueError(f"cannot normalize: coefficient at {at} vanishes")
    g = f.scale(1 / lead)
    return ScalarExpansion(g.weight, g.coset, g.tmax, g.coeffs, f.min_doubled_trace, f.name)


def _theta_generator(name: str, tmax: int) -> ScalarExpansion:
    bound = 4 * tmax
    thetas = {m: theta_series(m, bound) for m in EVEN_CHARACTERISTICS}
    k = WEIGHTS[name]
    if name == "phi4":
        total: dict = {}
        for th in thetas.values():
            for key, v in theta_power(th, 8, bound).items():
                total[key] = total.get(key, 0) + v
        return _normalize(theta_to_expansion(total, k, tmax, name), ZERO)
    if name in ("chi10", "chi5"):
        e = 2 if name == "chi10" else 1
        prod_ = {(0, 0, 0): 1}
        for th in thetas.values():
            prod_ = theta_mul(prod_, theta_power(th, e, bound), bound)
        f = theta_to_expansion(prod_, k, tmax, name)
        return _normalize(f, LEAD if name == "chi10" else CHI5_LEAD)
    if name == "chi12":
        fourth = {m: theta_power(th, 4, bound) for m, th in thetas.items()}
        total = {}
        for quad in goepel_quadruples():
            term = {(0, 0, 0): 1}
            for m in EVEN_CHARACTERISTICS:
                if m not in quad:
                    term = theta_mul(term, fourth[m], bound)
            for key, v in term.items():
                total[key] = total.get(key, 0) + v
        f = theta_to_expansion({k_: v for k_, v in total.items() if v}, k, tmax, name)
        return _normalize(f, LEAD)
    if name == "phi6":
        return _theta_phi6(thetas, tmax, bound)
    raise ValueError(f"unknown generator {name!r}")


def _theta_phi6(thetas: dict, tmax: int, bound: int) -> ScalarExpansion:
    """Weight 6 Eisenstein series from the 60 syzygous products ``(t1 t2 t3)^4``.

    No sign table is hard-coded.  The admissible combinations are those with
    integral support (translation invariance) that are also symmetric under
    ``Z -> -Z^{-1}``, which swaps the two halves of every characteristic and
    introduces no sign on fourth powers.  Riemann's relations make the
    coefficient vector non-unique, but the resulting form must be unique up to
    scale; that is checked, then the constant term is set to 1.
    """
    from .rcpoly import nullspace

    fourth = {m: theta_power(th, 4, bound) for m, th in thetas.items()}
    triples = syzygous_triples()
    terms = [
        theta_mul(theta_mul(fourth[a], fourth[b], bound), fourth[c], bound) for a, b, c in triples
    ]
    keys = sorted({k for t in terms for k in t if k[0] % 8 or k[1] % 8 or k[2] % 4})
    rows = [{i: t[k] for i, t in enumerate(terms) if t.get(k)} for k in keys]
    where = {frozenset(t): i for i, t in enumerate(triples)}
    for i, t in enumerate(triples):
        j = where[frozenset((m[1], m[0]) for m in t)]
        if j != i:
            rows.append({i: 1, j: -1})
    forms = []
    for vec in nullspace(rows, len(terms)):
        total: dict = {}
        for c, t in zip(vec, terms):
            if c:
                for key, v in t.items():
                    total[key] = total.get(key, 0) + c * v
        total = {k: v for k, v in total.items() if v}
        if total:
            forms.append(total)
    if not forms:
        raise ValueError("no invariant combination of syzygous products")
    base = forms[0]
    pivot = next(iter(base))
    for f in forms[1:]:
        ratio = Fraction(f.get(pivot, 0)) / base[pivot]
        if any(f.get(k, 0) != ratio * base.get(k, 0) for k in set(f) | set(base)):
            raise ValueError("invariant combinations span more than one form")
    const = Fraction(base.get((0, 0, 0), 0))
    if not const:
        raise ValueError("invariant combination has no constant term")
    coeffs: dict[Index, Fraction] = {}
    for (n11, n22, n12), v in base.items():
        n = Index(n11 // 4, n22 // 4, n12 // 2)
        if n.trace <= tmax:
            coeffs[n] = Fraction(v) / const
    return ScalarExpansion(6, EVEN, tmax, coeffs, 0, "phi6")


# --- public constructor ---------------------------------------------------------------


def igusa_generator(name: str, tmax: int, route: str = "maass") -> ScalarExpansion:
    """One of phi4, phi6, chi10, chi12, chi5 to doubled trace ``tmax``.

    phi4 and phi6 have constant term 1, chi10 and chi12 coefficient 1 at
    ``(2,2,2)``, and chi5 coefficient +1 at ``(1,1,1)``.
    """
    if name not in GENERATOR_NAMES:
        raise ValueError(f"unknown generator {name!r}")
    if tmax < 0:
        raise ValueError("tmax must be non-negative")
    if route not in ("maass", "theta"):
        raise ValueError(f"unknown route {route!r}")
    if name == "chi5":
        if route == "theta":
            return _theta_generator(name, tmax)
        g = sqrt_unit_leading(igusa_generator("chi10", tmax + 2, route))
        return ScalarExpansion(5, ODD, g.tmax, g.coeffs, 2, "chi5")
    if route == "theta":
        return _theta_generator(name, tmax)
    return _maass_generator(name, tmax)
