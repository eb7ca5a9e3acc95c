from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from siegel6.rcpoly import (
    EllipticPoly,
    HomogPoly,
    RCCandidate,
    congruence,
    cross,
    elliptic_rc,
    eval_at,
    is_harmonic,
    is_homogeneous,
    m_op,
    nullspace,
    psi,
    rho_apply,
    solve_rc_space,
    sym_power_matrix,
    w_apply,
)

small = st.integers(-6, 6)
sym = st.tuples(small, small, small)
mat = st.tuples(st.tuples(small, small), st.tuples(small, small)).filter(
    lambda u: u[0][0] * u[1][1] - u[0][1] * u[1][0] != 0
)
form = st.integers(0, 6).flatmap(lambda j: st.lists(small, min_size=j + 1, max_size=j + 1)).map(HomogPoly)


def mat_mul(u, w):
    return tuple(tuple(sum(u[i][k] * w[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def test_elliptic_rc_examples():
    assert elliptic_rc(0, 4, 6).terms == {(0, 0): 1}
    for k1, k2 in [(3, 5), (4, 6), (12, 1)]:
        assert elliptic_rc(2, k1, k2) == EllipticPoly(2, {(1, 0): k2, (0, 1): -k1})
    assert elliptic_rc(4, 6, 5).terms == {(2, 0): 30, (1, 1): -84, (0, 2): 42}
    with pytest.raises(ValueError):
        elliptic_rc(3, 4, 4)


def test_proportional_to():
    p = elliptic_rc(4, 6, 5)
    assert p.scale(Fraction(-3, 7)).proportional_to(p) == Fraction(-3, 7)
    assert elliptic_rc(4, 5, 5).proportional_to(p) is None


def test_psi_and_eval():
    r1 = EllipticPoly.var(1, 0)
    assert eval_at(psi(r1), [(1, Fraction(1, 2), 1)]) == HomogPoly([1, 1, 1])
    assert psi(EllipticPoly.const(2, 5)) == RCCandidate.const(2, HomogPoly([5]))
    with pytest.raises(ValueError):
        psi(r1 + EllipticPoly.const(1))
    with pytest.raises(ValueError):
        psi(elliptic_rc(2, 4, 4), j_out=4)


def test_cross_and_w_examples():
    assert cross((1, 0, 0), (0, 0, 1)) == (0, 1, 0)
    assert cross((1, 2, 3), (1, 2, 3)) == (0, 0, 0)
    # W(r) x^2 = 2 r12 x^2 + 2 r22 x y
    assert w_apply((5, 7, 11), HomogPoly([1, 0, 0])) == HomogPoly([14, 22, 0])
    with pytest.raises(ValueError):
        w_apply((1, 0, 0), HomogPoly([1, 1]))


def test_rho_apply_examples():
    u = ((1, 1), (0, 1))
    # (x, y) u = (x, x + y)
    assert rho_apply(u, 1, 0, HomogPoly([0, 1])) == HomogPoly([1, 1])
    assert rho_apply(((0, 1), (1, 0)), 2, 3, HomogPoly([1, 0, 0])) == HomogPoly([0, 0, -1])
    assert sym_power_matrix(((1, 0), (0, 1)), 3) == [[int(i == j) for j in range(4)] for i in range(4)]
    with pytest.raises(ValueError):
        rho_apply(((1, 2), (2, 4)), 0, 0, HomogPoly([1]))


@given(mat, mat, form, st.integers(-2, 2))
def test_rho_is_a_homomorphism(u, w, p, k):
    j = p.degree
    assert rho_apply(mat_mul(u, w), j, k, p) == rho_apply(u, j, k, rho_apply(w, j, k, p))


@given(mat, sym, sym)
def test_cross_equivariance(g, A, B):
    det = g[0][0] * g[1][1] - g[0][1] * g[1][0]
    lhs = cross(congruence(g, A), congruence(g, B))
    assert lhs == tuple(det * x for x in congruence(g, cross(A, B)))


def test_m_op_of_constant():
    k = (2, 3, 5)
    one = RCCandidate.const(3, HomogPoly([1]))
    expected = (
        RCCandidate.cross_form(3, 0, 1) * one.scale(5)
        - RCCandidate.cross_form(3, 0, 2) * one.scale(3)
        + RCCandidate.cross_form(3, 1, 2) * one.scale(2)
    )
    assert m_op(EllipticPoly.const(3), k) == expected
    assert is_homogeneous(expected, 2, 1, mode="symbolic")


@pytest.mark.parametrize("j", [0, 2, 4, 6])
@pytest.mark.parametrize("k", [(4, 6), (5, 5), (2, 7)])
def test_psi_of_elliptic_rc_is_rc(j, k):
    P = psi(elliptic_rc(j, *k))
    for mode in ("random", "symbolic"):
        assert is_homogeneous(P, j, 0, mode=mode)
        assert is_harmonic(P, k, mode=mode)


def test_checkers_reject():
    # R11 x^2 is neither homogeneous nor harmonic
    P = RCCandidate.variable(1, 0, 0) * RCCandidate.const(1, HomogPoly([1, 0, 0]))
    for mode in ("random", "symbolic"):
        assert not is_homogeneous(P, 2, 1, mode=mode)
        assert not is_harmonic(P, (3,), mode=mode)
    # det R is homogeneous of weight (0, 2) but not harmonic
    v = [RCCandidate.variable(1, 0, i) for i in range(3)]
    D = v[0] * v[2] - v[1] * v[1]
    assert is_homogeneous(D, 0, 2, mode="symbolic") and is_homogeneous(D, 0, 2)
    assert not is_harmonic(D, (4,), mode="symbolic") and not is_harmonic(D, (4,))
    with pytest.raises(ValueError):
        is_harmonic(D, (0,))
    with pytest.raises(ValueError):
        is_homogeneous(D, 0, 2, mode="exact")


@pytest.mark.parametrize(
    "j, ell, types, dim",
    [(0, 0, (4, 6), 1), (6, 0, (4, 6), 1), (2, 1, (1, 1, 1), 1), (3, 0, (4, 4), 0), (2, 0, (4,), 0)],
)
def test_solve_rc_space(j, ell, types, dim):
    space = solve_rc_space(j, ell, types)
    assert len(space) == dim
    for P in space:
        assert is_homogeneous(P, j, ell, mode="symbolic")
        assert is_harmonic(P, types, mode="symbolic")


def test_solved_space_contains_known_constructions():
    (P,) = solve_rc_space(6, 0, (4, 6))
    Q = psi(elliptic_rc(6, 4, 6))
    ratio = next(iter(Q.terms.values()))
    key = next(iter(Q.terms))
    c = Fraction(next(x for x in ratio if x)) / next(x for x in P.terms[key] if x)
    assert P.scale(c) == Q
    (P3,) = solve_rc_space(2, 1, (1, 1, 1))
    M = m_op(EllipticPoly.const(3), (1, 1, 1))
    key = next(iter(M.terms))
    c = Fraction(next(x for x in M.terms[key] if x)) / next(x for x in P3.terms[key] if x)
    assert P3.scale(c) == M


@settings(max_examples=40)
@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_nullspace_against_sympy(nrows, ncols, data):
    dense = [data.draw(st.lists(st.integers(-3, 3), min_size=ncols, max_size=ncols)) for _ in range(nrows)]
    rows = [{c: v for c, v in enumerate(r) if v} for r in dense]
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - sympy.Matrix(dense).rank()
    for vec in basis:
        assert all(sum(r[c] * vec[c] for c in range(ncols)) == 0 for r in dense)



@pytest.mark.parametrize("j", [2, 4, 6])
def test_w_apply_on_monomials(j):
    for a in range(j + 1):
        p = HomogPoly.monomial(j, j - a)  # x^a y^(j-a)
        assert w_apply((0, 0, 0), p).is_zero()
        expected = HomogPoly.monomial(j, j - a + 1, a * (j - 1)) if a else HomogPoly.zero(j)
        assert w_apply((0, 0, 1), p) == expected
    assert w_apply((5, 0, 0), HomogPoly.monomial(j, 0)).is_zero()


@given(st.integers(0, 6), st.integers(-3, 3), st.data())
def test_rho_apply_diagonal_and_unipotent(j, k, data):
    b = data.draw(st.integers(0, j))
    p = HomogPoly.monomial(j, b)
    assert rho_apply(((1, 0), (0, -1)), j, k, p) == p.scale((-1) ** (k + b))
    assert rho_apply(((1, 1), (0, 1)), j, k, HomogPoly.monomial(j, 0)) == HomogPoly.monomial(j, 0)
    assert rho_apply(((1, 0), (0, 1)), j, k, p) == p


@pytest.mark.parametrize("k", [(4, 4, 4), (5, 4, 5), (1, 2, 3)])
def test_m_op_memberships(k):
    k1, k2, _ = k
    p = EllipticPoly(2, {(0, 1): k1 + 1, (1, 0): -(k2 + 1)})
    P = m_op(p, k)
    assert is_homogeneous(P, 4, 1, mode="symbolic") and is_harmonic(P, k, mode="symbolic")
    # the F19 polynomial (22 r1^2 - 24 r1 r2 + 5 r2^2) / 1920 is p_{4,(5,11)} up to scale
    p19 = EllipticPoly(2, {(2, 0): 22, (1, 1): -24, (0, 2): 5})
    assert p19.proportional_to(elliptic_rc(4, 5, 11)) is not None
    Q = m_op(p19, (4, 10, 4))
    assert is_homogeneous(Q, 6, 1) and is_harmonic(Q, (4, 10, 4))
    assert not is_harmonic(m_op(elliptic_rc(4, 5, 7), (4, 10, 4)), (4, 10, 4))
    assert is_homogeneous(RCCandidate.zero(2, 4), 4, 3) and is_harmonic(RCCandidate.zero(2, 4), (1, 1))


def test_weight_six_two_space_is_nonzero():
    space = solve_rc_space(6, 2, (4, 6))
    assert space
    assert eval_at(m_op(EllipticPoly.const(3), (1, 2, 3)), [(0, 0, 0)] * 3).is_zero()
