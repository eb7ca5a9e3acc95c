from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from siegel6.classical import constant, igusa_generator
from siegel6.index_lattice import EVEN, ODD, ZERO, Index, coset_sum, enumerate_indices
from siegel6.rcpoly import HomogPoly, cross, elliptic_rc, m_op, nullspace, psi
from siegel6.structure import TRIPLE_GENERATORS
from siegel6.vvforms import (
    VectorExpansion,
    bracket,
    check_equivariance,
    divide_vector,
    fill_orbits,
    is_cusp,
    lincomb,
    rc_apply,
    reduced_indices,
    satoh_bracket,
    scal_mul,
    zero_expansion,
)

TMAX = 8


@pytest.fixture(scope="module")
def f():
    return {name: igusa_generator(name, TMAX) for name in ("phi4", "phi6", "chi10", "chi12", "chi5")}


def brute_rc(P, forms, n):
    """Direct sum over ordered partitions of ``n``."""
    acc = HomogPoly.zero(P.j)
    cosets = [g.coset for g in forms]
    for parts in _ordered(n, cosets):
        w = Fraction(1)
        for g, m in zip(forms, parts):
            w *= g[m]
        if w:
            mats = [(m.matrix()[0][0], m.matrix()[0][1], m.matrix()[1][1]) for m in parts]
            acc = acc + P.eval_at(mats).scale(w)
    return acc


def _ordered(n, cosets):
    if len(cosets) == 1:
        if n.coset == cosets[0] and n.is_semipositive():
            yield (n,)
        return
    for m in enumerate_indices(cosets[0], n.trace):
        rest = n - m
        if rest.is_semipositive():
            for tail in _ordered(rest, cosets[1:]):
                yield (m, *tail)


@pytest.mark.parametrize("case", ["pair", "triple_even", "triple_odd"])
def test_rc_apply_matches_brute_force(f, case):
    if case == "pair":
        P, forms, types = psi(elliptic_rc(2, 4, 6)), [f["phi4"], f["phi6"]], None
    elif case == "triple_even":
        P, forms, types = m_op(elliptic_rc(2, 5, 5), (4, 4, 6)), [f["phi4"], f["phi4"], f["phi6"]], (4, 4, 6)
    else:
        p, types, names = TRIPLE_GENERATORS[15]
        P, forms = m_op(p, types), [f[nm].truncate(7) for nm in names]
    F = rc_apply(P, forms, types, full=True)
    assert F.k == sum(g.weight for g in forms) + (0 if case == "pair" else 1)
    for n in enumerate_indices(F.coset, min(F.tmax, 7)):
        assert F[n] == brute_rc(P, forms, n), n


def test_reduced_fill_matches_full(f):
    P = psi(elliptic_rc(4, 4, 6))
    full = rc_apply(P, [f["phi4"], f["phi6"]], full=True)
    red = rc_apply(P, [f["phi4"], f["phi6"]])
    assert full == red
    assert check_equivariance(red)
    some = [Index(4, 2, 0), Index(2, 2, 2)]
    part = rc_apply(P, [f["phi4"], f["phi6"]], targets=some)
    assert set(part.coeffs) <= set(some)
    assert all(part[n] == full[n] for n in some)


@settings(max_examples=10)
@given(st.fractions(max_denominator=20), st.fractions(max_denominator=20))
def test_rc_apply_is_multilinear(f, a, b):
    P = psi(elliptic_rc(2, 4, 4))
    g, h = f["phi4"], f["phi4"]
    base = rc_apply(P, [g, h], tmax=6)
    assert rc_apply(P, [g.scale(a), h.scale(b)], tmax=6) == base.scale(a * b)


def test_rc_apply_errors(f):
    P = psi(elliptic_rc(2, 4, 6))
    with pytest.raises(ValueError):
        rc_apply(P, [f["phi4"]])
    with pytest.raises(ValueError):
        rc_apply(P, [f["phi4"], f["phi6"]], (4, 4))
    with pytest.raises(ValueError):
        rc_apply(P, [f["phi4"], f["phi4"]])  # not harmonic for type (4, 4)
    with pytest.raises(ValueError):
        rc_apply(P, [f["phi4"], f["phi6"]], tmax=TMAX + 2)


def test_chi5_sign_flip_leaves_triple_generators_unchanged(f):
    for i in (15, 17, 23):
        p, types, names = TRIPLE_GENERATORS[i]
        P = m_op(p, types)
        forms = [f[nm].truncate(7) for nm in names]
        flipped = [g.scale(-1) if nm == "chi5" else g for g, nm in zip(forms, names)]
        assert rc_apply(P, forms, types) == rc_apply(P, flipped, types)
        assert names.count("chi5") == 2


def test_odd_output_coset(f):
    p, types, names = TRIPLE_GENERATORS[17]
    F = rc_apply(m_op(p, types), [f[nm].truncate(7) for nm in names], types)
    expected = EVEN
    for nm in names:
        expected = coset_sum(expected, f[nm].coset)
    assert F.coset == expected == EVEN
    assert is_cusp(F) and check_equivariance(F)


def test_bracket_with_constant_vanishes(f, E6):
    one = constant(1, E6.tmax)
    assert bracket(E6, one).is_zero()


def test_bracket_is_equivariant_cusp(f, E6):
    B = bracket(E6.truncate(TMAX), f["phi6"])
    assert B.weight == (6, 13)
    assert check_equivariance(B) and is_cusp(B)
    full = bracket(E6.truncate(TMAX), f["phi6"], full=True)
    assert full == B
    with pytest.raises(ValueError):
        bracket(VectorExpansion(1, 4, EVEN, 2), f["phi4"])


def test_satoh_bracket(f):
    assert satoh_bracket(f["phi4"], f["phi4"]).is_zero()
    S = satoh_bracket(f["phi4"], f["phi6"])
    assert S.weight == (2, 10)
    assert check_equivariance(S)
    assert satoh_bracket(f["phi6"], f["phi4"]) == S.scale(-1)
    # lowest term: 4 * 1 * D(-504 q2) - 6 * D(240 q2) at n = (0, 1, 0)
    assert S[Index(0, 2, 0)] == HomogPoly([0, 0, 4 * -504 - 6 * 240])


def test_scal_mul_and_divide(f, E6):
    E = E6.truncate(TMAX)
    G = scal_mul(f["phi4"], E)
    assert G.weight == (6, 10)
    assert G[Index(2, 0, 0)] == HomogPoly([1, 0, 0, 0, 0, 0, 0])
    assert E[ZERO].is_zero()
    assert check_equivariance(G)
    assert divide_vector(G, f["phi4"]) == E
    with pytest.raises(ValueError):
        divide_vector(G, f["chi10"])


def test_lincomb_and_arithmetic(E6):
    E = E6.truncate(6)
    assert (E - E).is_zero()
    assert lincomb([2, -1], [E, E]) == E
    assert (E + E) == E.scale(2)
    assert scal_mul(constant(1, 6), E) == E
    assert E.truncate(4).tmax == 4
    with pytest.raises(ValueError):
        E.truncate(8)
    with pytest.raises(KeyError):
        E[Index(8, 0, 0)]
    with pytest.raises(ValueError):
        lincomb([1, 1], [E, zero_expansion(6, 8, 6)])
    with pytest.raises(ValueError):
        VectorExpansion(2, 4, EVEN, 4, {Index(2, 0, 0): HomogPoly([1, 2])})


def test_fill_orbits(E6):
    E = E6.truncate(TMAX)
    reps = {n: E[n] for n in reduced_indices(EVEN, TMAX)}
    assert fill_orbits(6, 6, EVEN, TMAX, reps) == E
    assert ZERO in reduced_indices(EVEN, TMAX)
    assert all(n.trace >= 4 for n in reduced_indices(ODD, 8, floor=4))


def _as_sym(h):
    return (h[0], h[1] / 2, h[2])


def cross_expansion(A, B, tmax):
    """Coefficients of the cross product of two H_2-valued expansions, by brute force."""
    out = {}
    for n in enumerate_indices(EVEN, tmax):
        acc = [Fraction(0)] * 3
        for m, a in A.coeffs.items():
            rest = n - m
            if m.trace <= n.trace and rest.is_semipositive() and rest.coset == EVEN:
                b = B[rest]
                if not b.is_zero():
                    c = cross(_as_sym(a), _as_sym(b))
                    for i, x in enumerate((c[0], 2 * c[1], c[2])):
                        acc[i] += x
        if any(acc):
            out[n] = acc
    return out


def divisible_by_cusp(g, F, T):
    """Whether ``g * G = F`` has a solution ``G`` to trace ``T - 4`` (overdetermined)."""
    unknowns = [(m, i) for m in enumerate_indices(EVEN, T - 4) for i in range(3)]
    col = {u: c for c, u in enumerate(unknowns)}
    rows = []
    for n in enumerate_indices(EVEN, T):
        for i in range(3):
            row = {}
            for a_idx, a in g.coeffs.items():
                m = n - a_idx
                if m.is_semipositive() and m.coset == EVEN and m.trace <= T - 4:
                    row[col[(m, i)]] = a
            rhs = F.get(n, [0] * 3)[i]
            if rhs:
                row[len(unknowns)] = -Fraction(rhs)
            if row:
                rows.append(row)
    return any(v[-1] for v in nullspace(rows, len(unknowns) + 1))


def test_satoh_cross_is_divisible(f):
    T = 10
    chi10, phi4, phi6 = (igusa_generator(name, T) for name in ("chi10", "phi4", "phi6"))
    F = cross_expansion(satoh_bracket(chi10, phi4, tmax=T), satoh_bracket(chi10, phi6, tmax=T), T)
    assert F and divisible_by_cusp(chi10, F, T)
    # control: chi10 is not the repeated form here
    other = cross_expansion(satoh_bracket(phi4, phi6, tmax=T), satoh_bracket(phi4, chi10, tmax=T), T)
    assert other and not divisible_by_cusp(chi10, other, T)
    H = VectorExpansion(2, 25, EVEN, T, {n: HomogPoly(v) for n, v in other.items()})
    assert scal_mul(phi4, divide_vector(H, phi4)).agrees_with(H)
    with pytest.raises(ValueError):
        satoh_bracket(f["chi10"], f["phi4"], tmax=T)
