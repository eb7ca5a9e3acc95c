r"""
Half-integral symmetric 2x2 exponent matrices.

An index is stored in doubled coordinates ``(nu1, nu2, rho)`` standing for the
matrix ``((nu1/2, rho/4), (rho/4, nu2/2))``.  In the customary ``(n, m, r)``
shorthand this is ``(nu1/2, nu2/2, rho/2)``, so the integral lattice is the
all-even coset and the support of the weight 5 cusp form is the all-odd coset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Sequence

EVEN = "even"
ODD = "odd"
COSETS = (EVEN, ODD)

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix2 = ((1, 0), (0, 1))


class Index(NamedTuple):
    nu1: int
    nu2: int
    rho: int

    @classmethod
    def from_nmr(cls, n, m, r) -> "Index":
        """Build from ``(n, m, r)`` coordinates (halves allowed)."""
        vals = [Fraction(v) * 2 for v in (n, m, r)]
        if any(v.denominator != 1 for v in vals):
            raise ValueError(f"({n}, {m}, {r}) is not on the half-lattice")
        return cls(int(vals[0]), int(vals[1]), int(vals[2]))

    @property
    def nmr(self) -> tuple[Fraction, Fraction, Fraction]:
        return (Fraction(self.nu1, 2), Fraction(self.nu2, 2), Fraction(self.rho, 2))

    @property
    def trace(self) -> int:
        """Doubled trace ``nu1 + nu2``."""
        return self.nu1 + self.nu2

    @property
    def det16(self) -> int:
        """Sixteen times the determinant."""
        return 4 * self.nu1 * self.nu2 - self.rho * self.rho

    @property
    def coset(self) -> str | None:
        parities = {self.nu1 & 1, self.nu2 & 1, self.rho & 1}
        if parities == {0}:
            return EVEN
        if parities == {1}:
            return ODD
        return None

    def is_semipositive(self) -> bool:
        return self.nu1 >= 0 and self.nu2 >= 0 and self.det16 >= 0

    def is_positive(self) -> bool:
        return self.nu1 > 0 and self.nu2 > 0 and self.det16 > 0

    def is_singular(self) -> bool:
        return self.det16 == 0

    def matrix(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        """The half-integral matrix itself, entries as fractions."""
        off = Fraction(self.rho, 4)
        return ((Fraction(self.nu1, 2), off), (off, Fraction(self.nu2, 2)))

    def scaled_entries(self) -> tuple[int, int, int]:
        """Entries ``(n11, n12, n22)`` multiplied by 4."""
        return (2 * self.nu1, self.rho, 2 * self.nu2)

    def __add__(self, other):  # type: ignore[override]
        return Index(self.nu1 + other.nu1, self.nu2 + other.nu2, self.rho + other.rho)

    def __sub__(self, other):
        return Index(self.nu1 - other.nu1, self.nu2 - other.nu2, self.rho - other.rho)

    def __neg__(self):
        return Index(-self.nu1, -self.nu2, -self.rho)

    def scale(self, c: int) -> "Index":
        return Index(c * self.nu1, c * self.nu2, c * self.rho)


ZERO = Index(0, 0, 0)


def coset_sum(a: str, b: str) -> str:
    return EVEN if a == b else ODD


def canonical_key(n: Index) -> tuple[int, int, int]:
    """Sort key used for every deterministic listing (trace, then nu2, then rho)."""
    return (n.trace, n.nu2, n.rho)


# --- unimodular action -------------------------------------------------------


def mat_mul(u: Matrix2, w: Matrix2) -> Matrix2:
    (a, b), (c, d) = u
    (e, f), (g, h) = w
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mat_det(u: Matrix2) -> int:
    return u[0][0] * u[1][1] - u[0][1] * u[1][0]


def mat_inv(u: Matrix2) -> Matrix2:
    d = mat_det(u)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    (a, b), (c, e) = u
    return ((e * d, -b * d), (-c * d, a * d))


def act(u: Matrix2, n: Index) -> Index:
    """Index of ``u n u'``."""
    (a, b), (c, d) = u
    nu1, nu2, rho = n
    return Index(
        nu1 * a * a + rho * a * b + nu2 * b * b,
        nu1 * c * c + rho * c * d + nu2 * d * d,
        2 * nu1 * a * c + rho * (a * d + b * c) + 2 * nu2 * b * d,
    )


def reduce(n: Index) -> tuple[Matrix2, Index]:
    """Return ``(u, m)`` with ``act(u, n) == m`` and ``0 <= rho <= nu1 <= nu2``."""
    if not n.is_semipositive():
        raise ValueError(f"{n} is not semi-positive")
    u: Matrix2 = IDENTITY
    cur = n
    while True:
        if cur.nu1 > cur.nu2:
            step: Matrix2 = ((0, 1), (1, 0))
        elif abs(cur.rho) > cur.nu1:
            # the shear (1,0;c,1) shifts rho by 2*c*nu1
            c = -((cur.rho + cur.nu1) // (2 * cur.nu1))
            step = ((1, 0), (c, 1))
        else:
            break
        cur = act(step, cur)
        u = mat_mul(step, u)
    if cur.rho < 0:
        step = ((1, 0), (0, -1))
        cur = act(step, cur)
        u = mat_mul(step, u)
    return u, cur


# --- enumeration ---------------------------------------------------------------


def _parity(coset: str) -> int:
    if coset not in COSETS:
        raise ValueError(f"unknown coset {coset!r}")
    return 0 if coset == EVEN else 1


def _rho_bound(nu1: int, nu2: int) -> int:
    return math.isqrt(4 * nu1 * nu2)


def enumerate_indices(coset: str, tmax: int) -> list[Index]:
    """All semi-positive indices of ``coset`` with doubled trace at most ``tmax``."""
    par = _parity(coset)
    out = []
    for t in range(2 * par, tmax + 1, 2):
        for nu2 in range(par, t + 1, 2):
            nu1 = t - nu2
            if nu1 < 0 or (nu1 & 1) != par:
                continue
            b = _rho_bound(nu1, nu2)
            lo = -b
            if (lo & 1) != par:
                lo += 1
            for rho in range(lo, b + 1, 2):
                out.append(Index(nu1, nu2, rho))
    out.sort(key=canonical_key)
    return out


def iter_box(n: Index, coset: str) -> Iterator[Index]:
    """Indices ``m`` of ``coset`` with ``m`` and ``n - m`` both semi-positive."""
    par = _parity(coset)
    for a in range(par, n.nu1 + 1, 2):
        for c in range(par, n.nu2 + 1, 2):
            lo, hi = _rho_window(n, a, c)
            if (lo & 1) != par:
                lo += 1
            for r in range(lo, hi + 1, 2):
                yield Index(a, c, r)


def _rho_window(n: Index, a: int, c: int) -> tuple[int, int]:
    b1 = _rho_bound(a, c)
    b2 = _rho_bound(n.nu1 - a, n.nu2 - c)
    return max(-b1, n.rho - b2), min(b1, n.rho + b2)


@dataclass(frozen=True)
class SupportConstraint:
    coset: str = EVEN
    min_doubled_trace: int = 0
    require_positive_det: bool = False

    def __post_init__(self):
        _parity(self.coset)
        if self.min_doubled_trace < 0:
            raise ValueError("min_doubled_trace must be non-negative")

    def admits(self, m: Index) -> bool:
        if m.coset != self.coset or not m.is_semipositive():
            return False
        if m.trace < self.min_doubled_trace:
            return False
        return not (self.require_positive_det and m.det16 <= 0)


def partitions(
    n: Index, t: int, cs: Sequence[SupportConstraint] | None = None
) -> Iterator[tuple[Index, ...]]:
    """Stream the t-tuples of admissible indices summing to ``n``.

    Recursion is on the first slot; the candidate window for each slot is cut
    down by semi-positivity of the slot and of the forced remainder.
    """
    if cs is None:
        cs = [SupportConstraint(n.coset or EVEN)] * t
    cs = list(cs)
    if len(cs) != t:
        raise ValueError("need one constraint per slot")
    if t == 0:
        if n == ZERO:
            yield ()
        return
    if not n.is_semipositive():
        return
    # suffix feasibility data
    suffix_min = [0] * (t + 1)
    suffix_pos = [False] * (t + 1)
    for s in range(t - 1, -1, -1):
        suffix_min[s] = suffix_min[s + 1] + cs[s].min_doubled_trace
        suffix_pos[s] = suffix_pos[s + 1] or cs[s].require_positive_det
    yield from _partitions(n, 0, cs, suffix_min, suffix_pos)


def _partitions(n, s, cs, suffix_min, suffix_pos):
    t = len(cs)
    if n.trace < suffix_min[s]:
        return
    if suffix_pos[s] and not n.is_positive():
        return
    c = cs[s]
    if s == t - 1:
        if c.admits(n):
            yield (n,)
        return
    rest_min = suffix_min[s + 1]
    for m in iter_box(n, c.coset):
        if not c.admits(m):
            continue
        r = n - m
        if r.trace < rest_min:
            continue
        for tail in _partitions(r, s + 1, cs, suffix_min, suffix_pos):
            yield (m,) + tail
