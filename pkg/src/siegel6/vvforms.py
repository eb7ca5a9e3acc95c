"""Vector-valued Fourier expansions and the constructions that produce them.

Coefficients are binary forms of degree ``j`` (see :class:`~siegel6.rcpoly.HomogPoly`).
Every bilinear operation is phrased as a grouped convolution (see
:mod:`siegel6.kernels`), with exponent matrices entering through their scaled
entries ``4n = (2 nu1, rho, 2 nu2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .classical import ScalarExpansion
from .index_lattice import (
    EVEN, Index, act, coset_sum, enumerate_indices, mat_inv, reduce,
)
from .kernels import convolve
from .rcpoly import HomogPoly, RCCandidate, is_harmonic, is_homogeneous, rho_apply, w_matrices

UNIMODULAR_GENERATORS = (((0, 1), (-1, 0)), ((1, 1), (0, 1)), ((1, 0), (0, -1)))


@dataclass(frozen=True)
class VectorExpansion:
    """Coefficients ``a(n)`` in ``H_j`` at every index of ``coset`` up to ``tmax``."""

    j: int
    k: int
    coset: str
    tmax: int
    coeffs: Mapping[Index, HomogPoly] = field(default_factory=dict)
    min_doubled_trace: int = 0
    name: str = ""

    def __post_init__(self):
        clean = {}
        for n, v in self.coeffs.items():
            n = Index(*n)
            if n.coset != self.coset or not n.is_semipositive() or n.trace > self.tmax:
                raise ValueError(f"index {n} outside the declared support")
            v = v if isinstance(v, HomogPoly) else HomogPoly(v)
            if v.degree != self.j:
                raise ValueError("coefficient degree mismatch")
            if not v.is_zero():
                clean[n] = v
        object.__setattr__(self, "coeffs", clean)

    @property
    def weight(self) -> tuple[int, int]:
        return (self.j, self.k)

    def __getitem__(self, n) -> HomogPoly:
        n = Index(*n)
        if n.trace > self.tmax:
            raise KeyError(f"{n} is beyond the precision bound {self.tmax}")
        return self.coeffs.get(n) or HomogPoly.zero(self.j)

    def column(self, n) -> tuple[Fraction, ...]:
        return self[n].coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncate(self, tmax: int) -> "VectorExpansion":
        if tmax > self.tmax:
            raise ValueError("cannot raise precision by truncation")
        return self._new({n: v for n, v in self.coeffs.items() if n.trace <= tmax}, tmax=tmax)

    def _new(self, coeffs, **kw) -> "VectorExpansion":
        args = dict(
            j=self.j, k=self.k, coset=self.coset, tmax=self.tmax,
            min_doubled_trace=self.min_doubled_trace, name=self.name,
        )
        args.update(kw)
        return VectorExpansion(coeffs=coeffs, **args)

    def scale(self, c) -> "VectorExpansion":
        c = Fraction(c)
        return self._new({n: v.scale(c) for n, v in self.coeffs.items()})

    def renamed(self, name: str) -> "VectorExpansion":
        return self._new(self.coeffs, name=name)

    def __add__(self, other):
        return lincomb((1, 1), (self, other))

    def __sub__(self, other):
        return lincomb((1, -1), (self, other))

    def __eq__(self, other):
        if not isinstance(other, VectorExpansion):
            return NotImplemented
        return (self.j, self.k, self.coset, self.tmax, self.coeffs) == (
            other.j, other.k, other.coset, other.tmax, other.coeffs,
        )

    def agrees_with(self, other: "VectorExpansion") -> bool:
        tmax = min(self.tmax, other.tmax)
        return self.truncate(tmax).coeffs == other.truncate(tmax).coeffs


def zero_expansion(j: int, k: int, tmax: int, coset: str = EVEN) -> VectorExpansion:
    return VectorExpansion(j, k, coset, tmax, {})


def lincomb(coeffs: Sequence, forms: Sequence[VectorExpansion]) -> VectorExpansion:
    if not forms:
        raise ValueError("need at least one form")
    first = forms[0]
    for f in forms[1:]:
        if (f.j, f.k, f.coset) != (first.j, first.k, first.coset):
            raise ValueError("weight mismatch in linear combination")
    tmax = min(f.tmax for f in forms)
    acc: dict[Index, list[Fraction]] = {}
    for c, f in zip(coeffs, forms):
        c = Fraction(c)
        if not c:
            continue
        for n, v in f.coeffs.items():
            if n.trace <= tmax:
                slot = acc.setdefault(n, [Fraction(0)] * (first.j + 1))
                for i, x in enumerate(v.coeffs):
                    slot[i] += c * x
    floor = min(f.min_doubled_trace for f in forms)
    return VectorExpansion(
        first.j, first.k, first.coset, tmax,
        {n: HomogPoly(v) for n, v in acc.items()}, floor,
    )


# --- predicates -------------------------------------------------------------------


def is_cusp(F: VectorExpansion) -> bool:
    return all(not n.is_singular() for n in F.coeffs)


def check_equivariance(F: VectorExpansion, gens=UNIMODULAR_GENERATORS) -> bool:
    """``a(u n u') = rho(u) a(n)`` for every stored index whose image is in range."""
    for u in gens:
        for n in enumerate_indices(F.coset, F.tmax):
            m = act(u, n)
            if m.trace > F.tmax:
                continue
            if F[m] != rho_apply(u, F.j, F.k, F[n]):
                return False
    return True


def fill_orbits(
    j: int, k: int, coset: str, tmax: int, reps: Mapping[Index, HomogPoly], floor: int = 0, name: str = ""
) -> VectorExpansion:
    """Expand coefficients given at reduced indices to every index up to ``tmax``."""
    out = {}
    for n in enumerate_indices(coset, tmax):
        u, m = reduce(n)
        v = reps.get(m)
        if v is None or v.is_zero():
            continue
        # act(u, n) = m, so a(n) = rho(u^{-1}) a(m)
        w = mat_inv(u)
        out[n] = v if w == ((1, 0), (0, 1)) else rho_apply(w, j, k, v)
    return VectorExpansion(j, k, coset, tmax, out, floor, name)


def reduced_indices(coset: str, tmax: int, floor: int = 0) -> list[Index]:
    return [n for n in enumerate_indices(coset, tmax) if n.trace >= floor and reduce(n)[1] == n]


# --- integer plumbing ----------------------------------------------------------------


def _lcm(vals: Iterable[int]) -> int:
    out = 1
    for v in vals:
        out = out * v // math.gcd(out, v)
    return out


def _scalar_ints(f: ScalarExpansion) -> tuple[dict, int]:
    den = _lcm(c.denominator for c in f.coeffs.values())
    return {n: int(c * den) for n, c in f.coeffs.items()}, den


def _vector_ints(F: VectorExpansion) -> tuple[dict, int]:
    den = _lcm(c.denominator for v in F.coeffs.values() for c in v.coeffs)
    return {n: [int(c * den) for c in v.coeffs] for n, v in F.coeffs.items()}, den


def _mono(n: Index, e: Sequence[int]) -> int:
    a, b, c = n.scaled_entries()
    return a ** e[0] * b ** e[1] * c ** e[2]


def _to_vectors(raw: dict, den: int, j: int) -> dict[Index, HomogPoly]:
    out = {}
    for n, v in raw.items():
        if any(v):
            out[Index(*n)] = HomogPoly(Fraction(x, den) for x in v)
    return out


def _targets(coset, tmax, floor, full, targets):
    if targets is not None:
        return [Index(*t) for t in targets]
    if full:
        return [n for n in enumerate_indices(coset, tmax) if n.trace >= floor]
    return reduced_indices(coset, tmax, floor)


# --- Rankin-Cohen operator at the Fourier level ----------------------------------------------


def rc_apply(
    P: RCCandidate,
    forms: Sequence[ScalarExpansion],
    types_check: Sequence[int] | None = None,
    *,
    tmax: int | None = None,
    verify: bool = True,
    full: bool = False,
    targets: Iterable[Index] | None = None,
    name: str = "",
) -> VectorExpansion:
    """Coefficients ``b(n) = sum P(n_1, ..., n_t; v) a_1(n_1) ... a_t(n_t)``.

    With ``full=False`` only reduced indices are summed and the rest of each
    orbit is filled in by equivariance.  ``targets`` restricts the output to the
    given indices (no orbit filling).
    """
    t = P.t
    if len(forms) != t:
        raise ValueError("need one scalar form per slot")
    weights = [f.weight for f in forms]
    if types_check is not None and list(types_check) != weights:
        raise ValueError(f"form weights {weights} do not match the type {list(types_check)}")
    degs = {sum(e) for e in P.terms}
    if len(degs) > 1:
        raise ValueError("P must be homogeneous in the matrix entries")
    d = degs.pop() if degs else 0
    if 2 * d < P.j or (2 * d - P.j) % 2:
        raise ValueError("matrix degree incompatible with j")
    ell = d - P.j // 2
    if verify and not P.is_zero():
        if not is_homogeneous(P, P.j, ell):
            raise ValueError(f"P is not homogeneous of weight ({P.j}, {ell})")
        if not is_harmonic(P, weights):
            raise ValueError(f"P is not harmonic for the type {weights}")

    coset = forms[0].coset
    for f in forms[1:]:
        coset = coset_sum(coset, f.coset)
    floors = [f.min_doubled_trace for f in forms]
    tmax_avail = min(f.tmax + sum(floors) - fl for f, fl in zip(forms, floors))
    tmax = tmax_avail if tmax is None else tmax
    if tmax > tmax_avail:
        raise ValueError(f"inputs support doubled trace {tmax_avail} only")
    floor = sum(floors)
    k_out = ell + sum(weights)
    out_targets = _targets(coset, tmax, floor, full, targets)
    if P.is_zero() or any(not f.coeffs for f in forms):
        raw, den = {}, 1
    else:
        raw, den = _rc_raw(P, forms, out_targets, tmax, d)
    coeffs = _to_vectors(raw, den, P.j)
    if targets is not None or full:
        return VectorExpansion(P.j, k_out, coset, tmax, coeffs, floor, name)
    return fill_orbits(P.j, k_out, coset, tmax, coeffs, floor, name)


def _rc_raw(P: RCCandidate, forms, out_targets, tmax, d):
    t = P.t
    jp1 = P.j + 1
    cden = _lcm(c.denominator for v in P.terms.values() for c in v)
    terms = {e: [int(c * cden) for c in v] for e, v in P.terms.items()}
    ints, dens = zip(*(_scalar_ints(f) for f in forms))
    slot_exps = [sorted({e[3 * s: 3 * s + 3] for e in terms}) for s in range(t)]

    def channels(s, indices):
        a = ints[s]
        return {
            tuple(n): [_mono(n, ex) * a[n] for ex in slot_exps[s]]
            for n in indices if n in a
        }

    # prefix[(e_1, ..., e_s)] channels, built slot by slot
    prefix_keys = [(ex,) for ex in slot_exps[0]]
    current = channels(0, ints[0].keys())
    coset = forms[0].coset
    floor = forms[0].min_doubled_trace
    for s in range(1, t):
        coset = coset_sum(coset, forms[s].coset)
        floor += forms[s].min_doubled_trace
        right = channels(s, ints[s].keys())
        pos_r = {ex: i for i, ex in enumerate(slot_exps[s])}
        pos_l = {key: i for i, key in enumerate(prefix_keys)}
        if s == t - 1:
            groups = []
            for e, v in terms.items():
                key = tuple(e[3 * r: 3 * r + 3] for r in range(s))
                outs = [(i, c) for i, c in enumerate(v) if c]
                groups.append((pos_l[key], pos_r[e[3 * s: 3 * s + 3]], outs))
            raw = convolve(current, right, groups, jp1, [tuple(n) for n in out_targets])
        else:
            wanted = sorted({tuple(e[3 * r: 3 * r + 3] for r in range(s + 1)) for e in terms})
            pos_o = {key: i for i, key in enumerate(wanted)}
            groups = [
                (pos_l[key[:-1]], pos_r[key[-1]], [(pos_o[key], 1)]) for key in wanted
            ]
            rest = sum(f.min_doubled_trace for f in forms[s + 1:])
            inner = [
                tuple(n) for n in enumerate_indices(coset, tmax - rest) if n.trace >= floor
            ]
            current = convolve(current, right, groups, len(wanted), inner)
            prefix_keys = wanted
    den = cden * 4**d
    for x in dens:
        den *= x
    return raw, den


# --- bracket ----------------------------------------------------------------------------


def bracket(
    F: VectorExpansion,
    phi: ScalarExpansion,
    *,
    tmax: int | None = None,
    full: bool = False,
    targets: Iterable[Index] | None = None,
    name: str = "",
) -> VectorExpansion:
    """The bracket of weight ``(j, k + l + 1)``.

    ``(j-1) c(n) = sum (k + j/2 - 1) a(n1) W(n1) b(n2) - l a(n1) W(n2) b(n2)``
    over ``n1 + n2 = n``, with ``a`` the scalar and ``b`` the vector coefficients.
    """
    j, k, ell = F.j, F.k, phi.weight
    if j < 2:
        raise ValueError("the bracket needs j >= 2")
    coset = coset_sum(F.coset, phi.coset)
    tmax_avail = min(F.tmax + phi.min_doubled_trace, phi.tmax + F.min_doubled_trace)
    tmax = tmax_avail if tmax is None else tmax
    if tmax > tmax_avail:
        raise ValueError(f"inputs support doubled trace {tmax_avail} only")
    floor = F.min_doubled_trace + phi.min_doubled_trace
    out_targets = _targets(coset, tmax, floor, full, targets)
    a, da = _scalar_ints(phi)
    b, db = _vector_ints(F)
    jp1 = j + 1
    left = {tuple(n): [x * v for x in n.scaled_entries()] + [v] for n, v in a.items()}
    right = {
        tuple(n): list(v) + [x * c for x in n.scaled_entries() for c in v] for n, v in b.items()
    }
    W = w_matrices(j)
    wden = _lcm(c.denominator for M in W for row in M for c in row)
    Wi = [[[int(c * wden) for c in row] for row in M] for M in W]
    c1 = 2 * k + j - 2  # twice (k + j/2 - 1)
    groups = []
    for e in range(3):
        for i in range(jp1):
            outs = [(o, c1 * Wi[e][o][i]) for o in range(jp1) if Wi[e][o][i]]
            groups.append((e, i, outs))
            outs2 = [(o, -2 * ell * Wi[e][o][i]) for o in range(jp1) if Wi[e][o][i]]
            groups.append((3, jp1 + e * jp1 + i, outs2))
    raw = convolve(left, right, groups, jp1, [tuple(n) for n in out_targets]) if a and b else {}
    den = 2 * 4 * wden * (j - 1) * da * db
    coeffs = _to_vectors(raw, den, j)
    k_out = k + ell + 1
    if targets is not None or full:
        return VectorExpansion(j, k_out, coset, tmax, coeffs, floor, name)
    return fill_orbits(j, k_out, coset, tmax, coeffs, floor, name)


def satoh_bracket(f1: ScalarExpansion, f2: ScalarExpansion, *, tmax: int | None = None) -> VectorExpansion:
    """``k1 f1 D f2 - k2 f2 D f1`` at the Fourier level, as an ``H_2``-valued expansion."""
    k1, k2 = f1.weight, f2.weight
    coset = coset_sum(f1.coset, f2.coset)
    tmax_avail = min(f1.tmax + f2.min_doubled_trace, f2.tmax + f1.min_doubled_trace)
    tmax = tmax_avail if tmax is None else tmax
    if tmax > tmax_avail:
        raise ValueError(f"inputs support doubled trace {tmax_avail} only")
    floor = f1.min_doubled_trace + f2.min_doubled_trace
    a, da = _scalar_ints(f1)
    b, db = _scalar_ints(f2)
    left = {tuple(n): [v] + [x * v for x in n.scaled_entries()] for n, v in a.items()}
    right = {tuple(n): [v] + [x * v for x in n.scaled_entries()] for n, v in b.items()}
    # scaled entries (4 n11, 4 n12, 4 n22) pair with x^2, 2xy, y^2
    groups = []
    for e, mult in enumerate((1, 2, 1)):
        groups.append((0, 1 + e, [(e, k1 * mult)]))
        groups.append((1 + e, 0, [(e, -k2 * mult)]))
    targets = [tuple(n) for n in enumerate_indices(coset, tmax) if n.trace >= floor]
    raw = convolve(left, right, groups, 3, targets) if a and b else {}
    coeffs = _to_vectors(raw, 4 * da * db, 2)
    return VectorExpansion(2, k1 + k2, coset, tmax, coeffs, floor)


def scal_mul(phi: ScalarExpansion, F: VectorExpansion, *, tmax: int | None = None) -> VectorExpansion:
    coset = coset_sum(F.coset, phi.coset)
    tmax_avail = min(F.tmax + phi.min_doubled_trace, phi.tmax + F.min_doubled_trace)
    tmax = tmax_avail if tmax is None else min(tmax, tmax_avail)
    floor = F.min_doubled_trace + phi.min_doubled_trace
    a, da = _scalar_ints(phi)
    b, db = _vector_ints(F)
    jp1 = F.j + 1
    groups = [(0, i, [(i, 1)]) for i in range(jp1)]
    targets = [tuple(n) for n in enumerate_indices(coset, tmax) if n.trace >= floor]
    raw = convolve({tuple(n): [v] for n, v in a.items()}, {tuple(n): v for n, v in b.items()},
                   groups, jp1, targets) if a and b else {}
    return VectorExpansion(F.j, F.k + phi.weight, coset, tmax, _to_vectors(raw, da * db, F.j), floor)


def divide_vector(F: VectorExpansion, g: ScalarExpansion) -> VectorExpansion:
    """``H`` with ``g * H = F`` for ``g`` with constant term 1."""
    from .index_lattice import ZERO

    if g.coeffs.get(ZERO) != 1 or g.coset != EVEN:
        raise ValueError("divisor must be an even-coset form with constant term 1")
    tmax = min(F.tmax, g.tmax)
    jp1 = F.j + 1
    rest = {n: c for n, c in g.coeffs.items() if n != ZERO and n.trace <= tmax}
    a, da = _scalar_ints(ScalarExpansion(g.weight, EVEN, tmax, rest))
    h: dict[Index, HomogPoly] = {}
    layers: dict[int, list[Index]] = {}
    for n in enumerate_indices(F.coset, tmax):
        layers.setdefault(n.trace, []).append(n)
    groups = [(0, i, [(i, 1)]) for i in range(jp1)]
    for t in sorted(layers):
        known = {}
        if h and a:
            H = VectorExpansion(F.j, F.k, F.coset, tmax, h)
            b, db = _vector_ints(H)
            raw = convolve({tuple(n): [v] for n, v in a.items()}, {tuple(n): v for n, v in b.items()},
                           groups, jp1, [tuple(n) for n in layers[t]])
            known = _to_vectors(raw, da * db, F.j)
        for n in layers[t]:
            v = F[n] - known[n] if n in known else F[n]
            if not v.is_zero():
                h[n] = v
    return VectorExpansion(F.j, F.k - g.weight, F.coset, tmax, h, F.min_doubled_trace)
