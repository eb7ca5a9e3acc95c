from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import divisor_sigma

from siegel6.classical import igusa_generator, mul
from siegel6.hecke import (
    HeckeError,
    HeckeMatrix,
    charpoly,
    discriminant,
    eigenvalue_of,
    format_factorization,
    format_poly,
    hecke_scalar,
    hecke_vector,
    matrix_on_basis,
    rank,
    solve_in_span,
)
from siegel6.rcpoly import HomogPoly
from siegel6.structure import build_F10
from siegel6.vvforms import VectorExpansion, lincomb, scal_mul, zero_expansion

TMAX = 18


@pytest.fixture(scope="module")
def f():
    return {name: igusa_generator(name, TMAX) for name in ("phi4", "phi6", "chi10", "chi12")}


def elliptic_coeffs(k, nmax):
    """q-expansion of the unique normalized cusp form of weight 18 or 22."""
    delta = [0] * (nmax + 1)
    prod = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        for _ in range(24):
            prod = [prod[i] - (prod[i - n] if i >= n else 0) for i in range(nmax + 1)]
    delta[1:] = prod[:nmax]
    e4 = [1] + [240 * int(divisor_sigma(n, 3)) for n in range(1, nmax + 1)]
    e6 = [1] + [-504 * int(divisor_sigma(n, 5)) for n in range(1, nmax + 1)]

    def times(a, b):
        return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(nmax + 1)]

    return times(delta, e6) if k == 18 else times(times(delta, e4), e6)


@pytest.mark.parametrize("name, k", [("phi4", 4), ("phi6", 6)])
@pytest.mark.parametrize("p", [2, 3])
def test_eisenstein_eigenvalues(f, name, k, p):
    assert eigenvalue_of(f[name], p) == (1 + p ** (k - 1)) * (1 + p ** (k - 2))


@pytest.mark.parametrize("name, k, ell", [("chi10", 10, 18), ("chi12", 12, 22)])
@pytest.mark.parametrize("p", [2, 3])
def test_saito_kurokawa_eigenvalues(f, name, k, ell, p):
    a = elliptic_coeffs(ell, 3)
    assert eigenvalue_of(f[name], p) == a[p] + p ** (k - 1) + p ** (k - 2)


def test_non_eigenform_rejected(f):
    # phi4^2 spans the weight 8 space, so it is an eigenform
    assert eigenvalue_of(mul(f["phi4"], f["phi4"]), 2) == (1 + 2**7) * (1 + 2**6)
    mixed = mul(f["phi4"], f["phi6"]) + f["chi10"]
    with pytest.raises(HeckeError):
        eigenvalue_of(mixed, 2)
    with pytest.raises(HeckeError):
        eigenvalue_of(f["chi10"].truncate(6), 2)
    with pytest.raises(ValueError):
        hecke_scalar(f["phi4"], 4)
    with pytest.raises(HeckeError):
        hecke_scalar(f["phi4"], 2, tmax=TMAX)


def test_vector_of_degree_zero_matches_scalar(f):
    for name in ("phi4", "chi12"):
        g = f[name]
        V = VectorExpansion(0, g.weight, "even", TMAX, {n: HomogPoly([c]) for n, c in g.coeffs.items()})
        TV, Tg = hecke_vector(V, 2), hecke_scalar(g, 2)
        assert {n: v[0] for n, v in TV.coeffs.items()} == Tg.coeffs
        assert hecke_vector(V, 2, full=True) == TV


@pytest.fixture(scope="module")
def F10():
    return build_F10(16)


@settings(max_examples=8)
@given(st.fractions(max_denominator=9), st.fractions(max_denominator=9))
def test_hecke_is_linear(F10, E6, a, b):
    H = scal_mul(igusa_generator("phi4", 16), E6)
    G = lincomb([a, b], [F10, H])
    assert hecke_vector(G, 2) == lincomb([a, b], [hecke_vector(F10, 2), hecke_vector(H, 2)])


def test_zero_maps_to_zero():
    assert hecke_vector(zero_expansion(6, 10, 8), 2).is_zero()
    with pytest.raises(HeckeError):
        eigenvalue_of(zero_expansion(6, 10, 8), 2)


def test_vector_eigenvalues(E6, F10):
    assert eigenvalue_of(E6, 2) == -408
    with pytest.raises(HeckeError):
        eigenvalue_of(F10, 2)


def test_matrix_on_basis(F10):
    T = hecke_vector(F10, 2)
    M = matrix_on_basis([F10.truncate(8), T], 2, ["F10", "T2F10"])
    assert M.size == 2 and M.labels == ("F10", "T2F10")
    assert sorted(M.charpoly()) == sorted([1, -1680 - 55512, 1680 * 55512])
    coords = solve_in_span([F10.truncate(8), T], lincomb([2, -5], [F10.truncate(8), T]))
    assert coords == [2, -5]
    assert rank([F10, F10.scale(2)]) == 1
    with pytest.raises(HeckeError):
        matrix_on_basis([F10, F10.scale(2)], 2)


def test_charpoly_and_discriminant():
    assert charpoly([[1, 2], [3, 4]]) == [1, -5, -2]
    assert charpoly([[Fraction(1, 2)]]) == [2, -1]
    assert charpoly(HeckeMatrix(2, ("a",), ((Fraction(7),),))) == [1, -7]
    assert discriminant([1, -5, -2]) == (33, {3: 1, 11: 1})
    assert discriminant([1, 0, 1]) == (-4, {2: 2})
    assert discriminant([3, 1])[0] == 1
    with pytest.raises(ValueError):
        discriminant([5])


def test_formatting():
    assert format_poly([1, -5, -2]) == "X^2 - 5 X - 2"
    assert format_poly([-1, 0, 1]) == "-X^2 + 1"
    assert format_poly([0]) == "0"
    assert format_factorization({2: 3, 5: 1}) == "2^3 * 5"
    assert format_factorization({}) == "1"
