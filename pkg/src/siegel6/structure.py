"""Weight ``(6, k)`` pipeline: auxiliary forms, the seven generators, and the wedge form.

Scalar inputs come from :mod:`siegel6.classical`; vector-valued forms are built
with Rankin-Cohen operators and brackets, and ``E6`` / ``Theta8`` are recovered
from two-dimensional Hecke-stable spaces.

Generator normalization: the reference coefficient table (see :data:`TABLE3`)
is reproduced with one global sign ``TABLE_SIGN`` on all seven generators and
with ``chi5`` entering the triple products as ``CHI5_TABLE_SCALE * chi5``.
"""

from __future__ import annotations

import itertools
import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import sympy

from . import cache
from .classical import ScalarExpansion, igusa_generator, mul, power
from .hecke import charpoly, discriminant, hecke_vector, matrix_on_basis, rank
from .index_lattice import EVEN, Index, enumerate_indices
from .kernels import convolve
from .rcpoly import EllipticPoly, elliptic_rc, m_op, nullspace, psi, solve_rc_space
from .vvforms import (
    VectorExpansion,
    bracket,
    check_equivariance,
    divide_vector,
    is_cusp,
    lincomb,
    rc_apply,
    scal_mul,
)

J = 6
LABELS = (11, 13, 15, 17, 19, 21, 23)
CLASSICAL_WEIGHTS = {"phi4": 4, "phi6": 6, "chi10": 10, "chi12": 12}

TABLE_SIGN = -1
CHI5_TABLE_SCALE = 4

E6_EIGENVALUE_T2 = -24 * (1 + 2**4)
E6_NORMALIZATION = (Index.from_nmr(1, 0, 0), (1, 0, 0, 0, 0, 0, 0))
THETA8_NORMALIZATION = (Index.from_nmr(1, 1, 1), (0, 0, 1, 2, 1, 0, 0))
F11_DIVISOR = 1152
F13_DIVISOR = 4


def _ep(c20, c11, c02, den) -> EllipticPoly:
    return EllipticPoly(2, {(2, 0): c20, (1, 1): c11, (0, 2): c02}).scale(Fraction(1, den))


# label -> (p_i in r1, r2, type, input forms)
TRIPLE_GENERATORS = {
    15: (_ep(5, -14, 7, 160), (5, 4, 5), ("chi5", "phi4", "chi5")),
    17: (_ep(4, -8, 3, 192), (5, 6, 5), ("chi5", "phi6", "chi5")),
    19: (_ep(22, -24, 5, 1920), (4, 10, 4), ("phi4", "chi10", "phi4")),
    21: (_ep(22, -24, 5, 2880), (4, 10, 6), ("phi4", "chi10", "phi6")),
    23: (_ep(13, -14, 3, 16), (5, 12, 5), ("chi5", "chi12", "chi5")),
}

TABLE3 = {
    11: (Index.from_nmr(1, 1, 0), (0, -20, 0, 0, 0, 20, 0)),
    13: (Index.from_nmr(1, 1, 1), (0, -2, -5, 0, 5, 2, 0)),
    15: (Index.from_nmr(2, 1, 0), (0, 312, 0, 180, 0, -102, 0)),
    17: (Index.from_nmr(2, 1, 0), (0, 0, 0, -300, 0, 354, 0)),
    19: (Index.from_nmr(2, 1, 1), (1, 14, 36, 24, 0, 0, 0)),
    21: (Index.from_nmr(2, 1, 1), (-5, -10, -6, -24, -30, -12, 0)),
    23: (Index.from_nmr(2, 2, 1), (3, -37, -50, 0, 50, 37, -3)),
}
TABLE3_DETERMINANT = 2**14 * 3**5 * 5**3 * 11

CHI140_INDEX = Index.from_nmr(12, 8, 4)
CHI140_VALUE = -(2**18) * 3**7 * 5**2

CUSP_FLOOR = 4  # doubled trace of the smallest positive definite even index


class StructureError(ValueError):
    pass


# --- dimensions -------------------------------------------------------------------------------


@dataclass(frozen=True)
class DimSeries:
    numerator: tuple[int, ...] = LABELS
    denominator: tuple[int, ...] = (4, 6, 10, 12)

    def coefficient(self, ell: int) -> int:
        return _series_coefficient(self.numerator, self.denominator, ell)

    def coefficients(self, kmax: int) -> dict[int, int]:
        return {k: self.coefficient(k) for k in range(kmax + 1)}


@lru_cache(maxsize=None)
def _series_coefficient(num: tuple, den: tuple, ell: int) -> int:
    if ell < 0:
        return 0
    # number of (a, b, c, d) with sum den_i * e_i = ell - num_j, summed over j
    counts = [0] * (ell + 1)
    counts[0] = 1
    for d in den:
        for x in range(d, ell + 1):
            counts[x] += counts[x - d]
    return sum(counts[ell - e] for e in num if e <= ell)


def dim_vv(ell: int) -> int:
    """Dimension of the odd-weight space ``M_(6, ell)``."""
    if ell < 0 or ell % 2 == 0:
        raise ValueError("ell must be a non-negative odd integer")
    return DimSeries().coefficient(ell)


def classical_monomials(weight: int) -> list[tuple[int, int, int, int]]:
    """Exponents ``(a, b, c, d)`` with ``4a + 6b + 10c + 12d = weight``."""
    out = []
    if weight < 0:
        return out
    for d in range(weight // 12 + 1):
        for c in range((weight - 12 * d) // 10 + 1):
            for b in range((weight - 12 * d - 10 * c) // 6 + 1):
                rest = weight - 12 * d - 10 * c - 6 * b
                if rest % 4 == 0:
                    out.append((rest // 4, b, c, d))
    return sorted(out)


def monomial_basis(k: int) -> list[tuple[int, tuple[int, int, int, int]]]:
    """Pairs ``(i, exponents)`` spanning ``M_(6, k)`` for odd ``k``."""
    return [(i, e) for i in LABELS for e in classical_monomials(k - i)]


# --- classical inputs -------------------------------------------------------------------------


class ClassicalStore:
    """Lazily computed classical forms, recomputed only when more precision is asked for.

    With ``cache_dir`` set, forms are read from and written to the text cache.
    """

    def __init__(self, route: str = "maass", cache_dir: str | os.PathLike | None = None):
        self.route = route
        self.cache_dir = Path(cache_dir) if cache_dir else None
        self._forms: dict[str, ScalarExpansion] = {}

    def path(self, name: str) -> Path | None:
        if self.cache_dir is None:
            return None
        suffix = "" if self.route == "maass" else f".{self.route}"
        return self.cache_dir / f"{name}{suffix}.txt"

    def get(self, name: str, tmax: int) -> ScalarExpansion:
        f = self._forms.get(name)
        if f is None or f.tmax < tmax:
            f = self._from_cache(name, tmax)
        if f is None:
            f = igusa_generator(name, tmax, self.route)
            if self.cache_dir is not None:
                cache.store(f, self.path(name))
        self._forms[name] = f
        return f.truncate(tmax) if f.tmax > tmax else f

    def _from_cache(self, name: str, tmax: int) -> ScalarExpansion | None:
        path = self.path(name)
        if path is None or not path.exists():
            return None
        try:
            f = cache.load(path)
        except cache.CacheError:
            return None
        if not isinstance(f, ScalarExpansion) or f.tmax < tmax:
            return None
        return f

    def monomial(self, exps: Sequence[int], tmax: int) -> ScalarExpansion:
        out = None
        for name, e in zip(("phi4", "phi6", "chi10", "chi12"), exps):
            if e:
                term = power(self.get(name, tmax), e)
                out = term if out is None else mul(out, term)
        if out is None:
            from .classical import constant

            return constant(1, tmax)
        return out.truncate(tmax) if out.tmax > tmax else out


_DEFAULT_STORE = ClassicalStore()


def _store(store: ClassicalStore | None) -> ClassicalStore:
    return store or _DEFAULT_STORE


# --- auxiliary forms --------------------------------------------------------------------------


def build_F10(tmax: int, store: ClassicalStore | None = None) -> VectorExpansion:
    """A nonzero form in ``M_(6,10)`` from the weight ``(6,0)`` operator on ``(phi4, phi6)``."""
    s = _store(store)
    P = psi(elliptic_rc(6, 4, 6))
    F = rc_apply(P, [s.get("phi4", tmax), s.get("phi6", tmax)], (4, 6), tmax=tmax, name="F10")
    if F.is_zero():
        raise StructureError("F10 vanishes")
    return F


def build_F12(tmax: int, store: ClassicalStore | None = None) -> VectorExpansion:
    """A nonzero cusp form in ``S_(6,12)`` from the weight ``(6,2)`` operator on ``(phi4, phi6)``."""
    s = _store(store)
    space = solve_rc_space(6, 2, (4, 6))
    if not space:
        raise StructureError("no weight (6,2) operator of type (4,6)")
    F = rc_apply(space[0], [s.get("phi4", tmax), s.get("phi6", tmax)], (4, 6), tmax=tmax, name="F12")
    if F.is_zero():
        raise StructureError("F12 vanishes")
    return F


def solve_exact(rows: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Unique solution of an overdetermined system; raises if inconsistent or singular."""
    n = len(rows[0]) if rows else 0
    sparse = []
    for row, b in zip(rows, rhs):
        d = {i: Fraction(c) for i, c in enumerate(row) if c}
        if b:
            d[n] = -Fraction(b)
        if d:
            sparse.append(d)
    ns = nullspace(sparse, n + 1)
    if not any(v[n] for v in ns):
        raise StructureError("inconsistent system")
    if len(ns) != 1:
        raise StructureError("singular system")
    v = ns[0]
    return [x / v[n] for x in v[:n]]


def _flat(F: VectorExpansion, tmax: int) -> dict:
    return {(n, i): c for n, v in F.coeffs.items() if n.trace <= tmax for i, c in enumerate(v.coeffs)}


def _recover(
    F: VectorExpansion, phi4: ScalarExpansion, tmax: int, norm, eigen: int | None, name: str
) -> VectorExpansion:
    """``divide(a F + b T(2)F, phi4)`` with ``(a, b)`` fixed by a normalization (and an eigenvalue)."""
    TF = hecke_vector(F, 2)
    A = divide_vector(F.truncate(TF.tmax), phi4)
    B = divide_vector(TF, phi4)
    at, value = norm
    rows = [[A[at].coeffs[i], B[at].coeffs[i]] for i in range(J + 1)]
    rhs = list(value)
    if eigen is not None:
        probe = B.tmax // 2
        if probe < at.trace:
            raise StructureError(f"insufficient precision to pin the eigenvalue of {name}")
        ea = lincomb([1, -eigen], [hecke_vector(A, 2, tmax=probe), A.truncate(probe)])
        eb = lincomb([1, -eigen], [hecke_vector(B, 2, tmax=probe), B.truncate(probe)])
        fa, fb = _flat(ea, probe), _flat(eb, probe)
        for key in sorted(set(fa) | set(fb)):
            rows.append([fa.get(key, 0), fb.get(key, 0)])
            rhs.append(0)
    alpha, beta = solve_exact(rows, rhs)
    X = lincomb([alpha, beta], [F.truncate(tmax), TF.truncate(tmax)])
    return divide_vector(X, phi4).renamed(name)


def recover_E6(tmax: int, F10: VectorExpansion | None = None, store: ClassicalStore | None = None) -> VectorExpansion:
    """The Klingen Eisenstein series of weight ``(6,6)``; needs ``F10`` to ``2 * tmax``."""
    need = max(2 * tmax, 16)
    F10 = F10 if F10 is not None and F10.tmax >= need else build_F10(need, store)
    phi4 = _store(store).get("phi4", F10.tmax)
    return _recover(F10, phi4, tmax, E6_NORMALIZATION, E6_EIGENVALUE_T2, "E6")


def recover_Theta8(tmax: int, F12: VectorExpansion | None = None, store: ClassicalStore | None = None) -> VectorExpansion:
    """The cusp form of weight ``(6,8)``; needs ``F12`` to ``2 * tmax``."""
    need = max(2 * tmax, 8)
    F12 = F12 if F12 is not None and F12.tmax >= need else build_F12(need, store)
    phi4 = _store(store).get("phi4", F12.tmax)
    return _recover(F12, phi4, tmax, THETA8_NORMALIZATION, None, "Theta8")


# --- generators -------------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorSet:
    forms: Mapping[int, VectorExpansion]
    tmax: int

    def __post_init__(self):
        if tuple(sorted(self.forms)) != LABELS:
            raise StructureError(f"need generators {LABELS}")
        for i, F in self.forms.items():
            if (F.j, F.k) != (J, i):
                raise StructureError(f"F{i} has weight ({F.j},{F.k})")

    def __getitem__(self, i: int) -> VectorExpansion:
        return self.forms[i]

    def column(self, i: int, n: Index) -> tuple[Fraction, ...]:
        return self.forms[i][n].coeffs

    def check(self) -> dict[int, tuple[bool, bool]]:
        return {i: (is_cusp(F), check_equivariance(F)) for i, F in self.forms.items()}


def generator_polynomial(i: int) -> EllipticPoly:
    return TRIPLE_GENERATORS[i][0]


def generator_type(i: int) -> tuple[int, int, int]:
    return TRIPLE_GENERATORS[i][1]


def triple_generator(
    i: int, tmax: int, store: ClassicalStore | None = None, *, targets: Iterable[Index] | None = None
) -> VectorExpansion:
    p, types, names = TRIPLE_GENERATORS[i]
    s = _store(store)
    forms = [s.get(nm, tmax) for nm in names]
    scale = Fraction(TABLE_SIGN) * CHI5_TABLE_SCALE ** names.count("chi5")
    F = rc_apply(m_op(p, types), forms, types, tmax=tmax, targets=targets, name=f"F{i}")
    return F.scale(scale).renamed(f"F{i}")


def bracket_generator(
    i: int,
    tmax: int,
    base: VectorExpansion,
    store: ClassicalStore | None = None,
    *,
    targets: Iterable[Index] | None = None,
) -> VectorExpansion:
    div = {11: F11_DIVISOR, 13: F13_DIVISOR}[i]
    phi4 = _store(store).get("phi4", tmax)
    F = bracket(base, phi4, tmax=tmax, targets=targets)
    return F.scale(Fraction(TABLE_SIGN, div)).renamed(f"F{i}")


def build_generators(tmax: int, store: ClassicalStore | None = None, *, E6=None, Theta8=None) -> GeneratorSet:
    """All seven generators to doubled trace ``tmax``."""
    s = _store(store)
    E6 = E6 if E6 is not None and E6.tmax >= tmax else recover_E6(tmax, store=s)
    Theta8 = Theta8 if Theta8 is not None and Theta8.tmax >= tmax else recover_Theta8(tmax, store=s)
    forms = {
        11: bracket_generator(11, tmax, E6.truncate(tmax), s),
        13: bracket_generator(13, tmax, Theta8.truncate(tmax), s),
    }
    for i in TRIPLE_GENERATORS:
        forms[i] = triple_generator(i, tmax, s)
    return GeneratorSet(forms, tmax)


def table3_columns(gens: GeneratorSet | None = None, store: ClassicalStore | None = None) -> dict[int, tuple[Fraction, ...]]:
    """The reference columns, computed either from ``gens`` or directly at the needed indices."""
    if gens is not None:
        return {i: gens.column(i, n) for i, (n, _) in TABLE3.items()}
    s = _store(store)
    out = {}
    tmax = max(n.trace for n, _ in TABLE3.values())
    E6 = recover_E6(tmax, store=s)
    Th = recover_Theta8(tmax, store=s)
    out[11] = bracket_generator(11, tmax, E6, s, targets=[TABLE3[11][0]])[TABLE3[11][0]].coeffs
    out[13] = bracket_generator(13, tmax, Th, s, targets=[TABLE3[13][0]])[TABLE3[13][0]].coeffs
    for i in TRIPLE_GENERATORS:
        n = TABLE3[i][0]
        out[i] = triple_generator(i, tmax, s, targets=[n])[n].coeffs
    return out


def table3_determinant(columns: Mapping[int, Sequence]) -> Fraction:
    M = sympy.Matrix([[sympy.Rational(Fraction(columns[i][r]).numerator, Fraction(columns[i][r]).denominator)
                       for i in LABELS] for r in range(J + 1)])
    d = M.det()
    return Fraction(int(d.p), int(d.q))


def format_table3(columns: Mapping[int, Sequence]) -> str:
    lines = ["i " + " ".join(f"{i:>8}" for i in LABELS)]
    lines.append("n " + " ".join(f"{_nmr_str(TABLE3[i][0]):>8}" for i in LABELS))
    for r in range(J + 1):
        lines.append("  " + " ".join(f"{str(Fraction(columns[i][r])):>8}" for i in LABELS))
    return "\n".join(lines)


def _nmr_str(n: Index) -> str:
    return "(" + ",".join(str(x) for x in n.nmr) + ")"


# --- the wedge form ---------------------------------------------------------------------------


def _scaled_ints(F: VectorExpansion, tmax: int) -> tuple[dict, int]:
    den = 1
    for n, v in F.coeffs.items():
        if n.trace <= tmax:
            for c in v.coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
    out = {tuple(n): [int(c * den) for c in v.coeffs] for n, v in F.coeffs.items() if n.trace <= tmax}
    return {k: v for k, v in out.items() if any(v)}, den


def _stage_targets(ns: Sequence[Index], s: int, t: int, floor: int) -> list[tuple]:
    """Partial sums after ``s`` of ``t`` factors that can still complete to some ``n``."""
    out = set()
    for n in ns:
        if s == t:
            out.add(tuple(n))
            continue
        for m in enumerate_indices(EVEN, n.trace - floor * (t - s)):
            if m.trace < floor * s or not m.is_positive():
                continue
            rest = n - m
            if rest.is_positive() and rest.trace >= floor * (t - s):
                out.add(tuple(m))
    return sorted(out)


def _subsets(size: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(size), k))


def chi140_coefficients(
    gens: GeneratorSet,
    ns: Sequence[Index],
    *,
    checkpoint_dir: str | os.PathLike | None = None,
    threads: int | None = None,
) -> dict[Index, Fraction]:
    """``c(n)`` for each ``n`` via a staged exterior-power convolution.

    Stage ``s`` holds, for every partial index ``m``, the sum over ``m_1 + ... + m_s = m``
    of ``a_1(m_1) ^ ... ^ a_s(m_s)`` in the ``C(7, s)`` coordinates of the ``s``-th
    exterior power.  The top coordinate at stage 7 is the partition sum of determinants.
    """
    ns = [Index(*n) for n in ns]
    out: dict[Index, Fraction] = {}
    live = []
    t = len(LABELS)
    for n in ns:
        if n.coset != EVEN or not n.is_semipositive() or n.trace < CUSP_FLOOR * t or not n.is_positive():
            out[n] = Fraction(0)
        else:
            live.append(n)
    if not live:
        return out
    need = max(n.trace for n in live) - CUSP_FLOOR * (t - 1)
    if gens.tmax < need:
        raise StructureError(f"insufficient precision: generators needed to doubled trace {need}")
    ck = Path(checkpoint_dir) if checkpoint_dir else None
    tag = "_".join(f"{n.nu1}.{n.nu2}.{n.rho}" for n in live)
    state: dict[tuple, list[int]] | None = None
    den_total = 1
    start = 0
    if ck is not None:
        for s in range(t, 0, -1):
            f = ck / f"chi140_{tag}_stage{s}.json"
            if f.exists():
                data = json.loads(f.read_text())
                state = {tuple(k): v for k, v in data["state"]}
                den_total, start = data["den"], s
                break
    for s in range(start, t):
        F = gens[LABELS[s]]
        right, den = _scaled_ints(F, need)
        den_total *= den
        targets = _stage_targets(live, s + 1, t, CUSP_FLOOR)
        if s == 0:
            state = {k: v for k, v in right.items() if k in set(targets)}
        else:
            src = _subsets(t, s)
            dst = {S: i for i, S in enumerate(_subsets(t, s + 1))}
            groups = []
            for a, S in enumerate(src):
                for b in range(t):
                    if b in S:
                        continue
                    sign = -1 if sum(1 for x in S if x > b) % 2 else 1
                    groups.append((a, b, [(dst[tuple(sorted(S + (b,)))], sign)]))
            state = convolve(state, right, groups, len(dst), targets, threads=threads)
            state = {k: v for k, v in state.items() if any(v)}
        if ck is not None:
            ck.mkdir(parents=True, exist_ok=True)
            f = ck / f"chi140_{tag}_stage{s + 1}.json"
            tmp = f.with_suffix(".tmp")
            tmp.write_text(json.dumps({"den": den_total, "state": [[list(k), v] for k, v in sorted(state.items())]}))
            os.replace(tmp, f)
    for n in live:
        out[n] = Fraction(state.get(tuple(n), [0])[0], den_total)
    return out


def chi140_coefficient(gens: GeneratorSet, n: Index, **kw) -> Fraction:
    return chi140_coefficients(gens, [n], **kw)[Index(*n)]


def chi140_direct(gens: GeneratorSet, n: Index) -> Fraction:
    """The same coefficient by enumerating every 7-tuple partition (small ``n`` only)."""
    from .index_lattice import SupportConstraint, partitions

    n = Index(*n)
    cs = [SupportConstraint(EVEN, CUSP_FLOOR, True)] * len(LABELS)
    total = Fraction(0)
    for parts in partitions(n, len(LABELS), cs):
        cols = [gens[i][m].coeffs for i, m in zip(LABELS, parts)]
        if any(all(c == 0 for c in col) for col in cols):
            continue
        M = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in col] for col in cols]).T
        d = M.det()
        total += Fraction(int(d.p), int(d.q))
    return total


# --- bases and Hecke tables -------------------------------------------------------------------


def basis_forms(gens: GeneratorSet, k: int, tmax: int, store: ClassicalStore | None = None):
    """Monomial basis of ``M_(6,k)`` for odd ``k`` with labels."""
    s = _store(store)
    out = []
    for i, e in monomial_basis(k):
        F = gens[i].truncate(tmax)
        if any(e):
            F = scal_mul(s.monomial(e, tmax), F, tmax=tmax)
        out.append((_monomial_label(i, e), F))
    return out


def _monomial_label(i: int, e: Sequence[int]) -> str:
    parts = [f"F{i}"]
    for name, x in zip(("phi4", "phi6", "chi10", "chi12"), e):
        if x:
            parts.append(name if x == 1 else f"{name}^{x}")
    return "*".join(parts)


def express_in_basis(
    G: VectorExpansion, gens: GeneratorSet, store: ClassicalStore | None = None
) -> dict[str, Fraction]:
    """Coordinates of an odd-weight form in the monomial basis ``F_i * phi4^a phi6^b chi10^c chi12^d``."""
    if G.j != J or G.k % 2 == 0 or G.k < 11:
        raise StructureError("need a form of weight (6, k) with k >= 11 odd")
    tmax = min(G.tmax, gens.tmax)
    basis = basis_forms(gens, G.k, tmax, store)
    if rank([F for _, F in basis]) != len(basis):
        raise StructureError("insufficient precision: monomial basis not independent")
    keys = sorted(set().union(*(_flat(F, tmax) for _, F in basis)) | set(_flat(G, tmax)))
    cols = [_flat(F, tmax) for _, F in basis]
    g = _flat(G, tmax)
    rows = [[c.get(key, 0) for c in cols] for key in keys]
    rhs = [g.get(key, 0) for key in keys]
    try:
        sol = solve_exact(rows, rhs)
    except StructureError:
        raise StructureError("no representation") from None
    return {label: c for (label, _), c in zip(basis, sol)}


@dataclass(frozen=True)
class HeckeTable:
    p: int
    k: int
    labels: tuple[str, ...]
    charpoly: tuple[int, ...]
    factors: tuple[tuple[int, ...], ...]
    discriminants: tuple[tuple[int, dict], ...] = field(default=())


def _factor_charpoly(coeffs: Sequence[int]) -> list[list[int]]:
    X = sympy.Symbol("X")
    poly = sympy.Poly(list(coeffs), X)
    out = []
    for f, e in sorted(sympy.factor_list(poly)[1], key=lambda t: (t[0].degree(), str(t[0]))):
        c = [int(x) for x in f.all_coeffs()]
        if c[0] < 0:
            c = [-x for x in c]
        out.extend([c] * e)
    return out


def hecke_space(
    k: int, tmax: int, store: ClassicalStore | None = None, gens: GeneratorSet | None = None, aux: dict | None = None
) -> list[tuple[str, VectorExpansion]]:
    """A basis of ``M_(6,k)`` to doubled trace ``tmax`` for the tabulated weights."""
    s = _store(store)
    aux = aux if aux is not None else {}
    if k % 2:
        if gens is None or gens.tmax < tmax:
            gens = build_generators(tmax, s)
        return basis_forms(gens, k, tmax, s)
    if k == 6:
        return [("E6", recover_E6(tmax, store=s))]
    if k == 8:
        return [("Theta8", recover_Theta8(tmax, store=s))]
    if k == 10:
        F = build_F10(2 * tmax, s)
        return [("F10", F.truncate(tmax)), ("T2F10", hecke_vector(F, 2, tmax=tmax))]
    if k == 12:
        F = build_F12(2 * tmax, s)
        E6 = recover_E6(tmax, store=s)
        return [
            ("F12", F.truncate(tmax)),
            ("T2F12", hecke_vector(F, 2, tmax=tmax)),
            ("phi6*E6", scal_mul(s.get("phi6", tmax), E6, tmax=tmax)),
        ]
    raise StructureError(f"no basis recipe for weight (6,{k})")


def hecke_table(
    p: int, k: int, tmax: int, store: ClassicalStore | None = None, gens: GeneratorSet | None = None
) -> HeckeTable:
    """Characteristic polynomial of ``T(p)`` on ``M_(6,k)`` from a basis to doubled trace ``tmax``."""
    basis = hecke_space(k, tmax, store, gens)
    M = matrix_on_basis([F for _, F in basis], p, [lab for lab, _ in basis])
    cp = charpoly(M)
    factors = _factor_charpoly(cp)
    discs = tuple(discriminant(f) for f in factors if len(f) > 2)
    return HeckeTable(p, k, M.labels, tuple(cp), tuple(tuple(f) for f in factors), discs)


# --- precision planning -----------------------------------------------------------------------


def plan_precision(target: str, **params) -> dict[str, int]:
    """Doubled-trace requirement per form for a named computation.

    Targets: ``"chi140"`` (``n``), ``"hecke"`` (``p``, ``probe``), ``"table3"``,
    ``"generators"`` (``tmax``).
    """
    if target == "chi140":
        n = Index(*params["n"])
        g = max(0, n.trace - CUSP_FLOOR * (len(LABELS) - 1))
        plan = plan_precision("generators", tmax=g)
        plan.update({f"F{i}": g for i in LABELS})
        return plan
    if target == "hecke":
        p, probe = params["p"], params["probe"]
        plan = plan_precision("generators", tmax=p * probe)
        plan["basis"] = p * probe
        return plan
    if target == "table3":
        t = max(n.trace for n, _ in TABLE3.values())
        plan = {name: t for name in ("phi4", "phi6", "chi10", "chi12", "chi5")}
        plan.update({"E6": t, "Theta8": t, "F10": 2 * t, "F12": 2 * t})
        return plan
    if target == "generators":
        t = params["tmax"]
        plan = {name: t for name in ("phi4", "phi6", "chi10", "chi12", "chi5")}
        plan.update({"E6": t, "Theta8": t, "F10": max(2 * t, 16), "F12": max(2 * t, 8)})
        plan["phi4"] = plan["phi6"] = plan["F10"]
        plan.update({f"F{i}": t for i in LABELS})
        return plan
    raise ValueError(f"unknown target {target!r}")
