from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from sympy import divisor_sigma

from siegel6.classical import (
    ScalarExpansion,
    cohen_h,
    constant,
    divide,
    igusa_generator,
    jacobi_cusp,
    mul,
    odd_character,
    power,
    sqrt_unit_leading,
)
from siegel6.index_lattice import EVEN, ODD, ZERO, Index, enumerate_indices, reduce

TMAX = 12


@pytest.fixture(scope="module")
def forms():
    return {name: igusa_generator(name, TMAX) for name in ("phi4", "phi6", "chi10", "chi12", "chi5")}


def test_normalizations(forms):
    assert forms["phi4"][ZERO] == forms["phi6"][ZERO] == 1
    assert forms["chi10"][Index(2, 2, 2)] == forms["chi12"][Index(2, 2, 2)] == 1
    assert forms["chi5"][Index(1, 1, 1)] == 1
    assert forms["chi5"].coset == ODD and forms["chi5"].weight == 5


def test_known_coefficients(forms):
    phi4, phi6 = forms["phi4"], forms["phi6"]
    assert phi4[Index(2, 0, 0)] == 240
    assert phi4[Index(2, 2, 0)] == 30240
    assert phi4[Index(2, 2, 2)] == 13440
    assert phi6[Index(2, 0, 0)] == -504
    assert phi6[Index(2, 2, 2)] == 44352
    assert forms["chi10"][Index(2, 2, 0)] == -2
    assert forms["chi12"][Index(2, 2, 0)] == 10
    assert forms["chi5"][Index(1, 1, -1)] == -1


def sigma(n, s):
    return int(divisor_sigma(n, s))


@pytest.mark.parametrize("name, k, c", [("phi4", 4, 240), ("phi6", 6, -504)])
def test_siegel_phi_gives_elliptic_eisenstein(forms, name, k, c):
    f = forms[name]
    for n in range(1, TMAX // 2 + 1):
        assert f[Index(2 * n, 0, 0)] == c * sigma(n, k - 1)
        assert f[Index(0, 2 * n, 0)] == c * sigma(n, k - 1)


def test_products_restrict_to_eisenstein(forms):
    # phi4^2 and phi4 phi6 are the only forms of weights 8 and 10 with constant term 1 modulo cusp forms
    e8 = mul(forms["phi4"], forms["phi4"])
    e10 = mul(forms["phi4"], forms["phi6"])
    for n in range(1, TMAX // 2 + 1):
        assert e8[Index(2 * n, 0, 0)] == 480 * sigma(n, 7)
        assert e10[Index(2 * n, 0, 0)] == -264 * sigma(n, 9)


def test_cusp_predicates(forms):
    assert forms["chi10"].is_cusp() and forms["chi12"].is_cusp() and forms["chi5"].is_cusp()
    assert not forms["phi4"].is_cusp()


def test_equivariance(forms):
    assert all(f.check_equivariance() for f in forms.values())
    broken = ScalarExpansion(4, EVEN, 4, {Index(2, 0, 0): 1})
    assert not broken.check_equivariance()


@given(st.sampled_from([((0, 1), (-1, 0)), ((1, 1), (0, 1)), ((1, 0), (0, -1)), ((0, 1), (1, 0))]),
       st.sampled_from([((0, 1), (-1, 0)), ((1, 1), (0, 1)), ((1, 0), (0, -1)), ((0, 1), (1, 0))]))
def test_odd_character_is_multiplicative(u, w):
    uw = tuple(tuple(sum(u[i][k] * w[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    assert odd_character(uw) == odd_character(u) * odd_character(w)


@given(st.sampled_from(["phi4", "phi6", "chi10", "chi12", "chi5"]), st.data())
def test_coefficients_constant_on_orbits(forms, name, data):
    f = forms[name]
    n = data.draw(st.sampled_from(enumerate_indices(f.coset, TMAX)))
    u, m = reduce(n)
    assert f[n] == f.expected_sign(u) * f[m]


def test_chi5_squared_is_chi10(forms):
    sq = mul(forms["chi5"], forms["chi5"])
    assert sq.coset == EVEN and sq.agrees_with(forms["chi10"])
    root = sqrt_unit_leading(forms["chi10"])
    assert root.agrees_with(forms["chi5"])
    with pytest.raises(ValueError):
        sqrt_unit_leading(forms["chi12"].scale(2))
    with pytest.raises(ValueError):
        sqrt_unit_leading(forms["phi4"])


def test_chi5_support(forms):
    for n in forms["chi5"].coeffs:
        assert n.coset == ODD and n.is_positive()


def test_mul_divide_round_trip(forms):
    phi4, phi6, chi10 = forms["phi4"], forms["phi6"], forms["chi10"]
    prod = mul(chi10, phi6)
    assert divide(prod, phi4.truncate(prod.tmax)).agrees_with(divide(mul(chi10, phi6), phi4))
    assert divide(mul(phi4, phi6), phi4).agrees_with(phi6)
    assert divide(mul(chi10, phi4), phi4).agrees_with(chi10)
    assert power(phi4, 2) == mul(mul(constant(1, TMAX), phi4), phi4)
    assert mul(phi4, constant(1, TMAX)) == phi4
    assert divide(chi10, constant(1, TMAX)).agrees_with(chi10)
    assert mul(phi4, phi6)[ZERO] == 1
    with pytest.raises(ValueError):
        divide(phi4, chi10)


def test_arithmetic(forms):
    phi4 = forms["phi4"]
    assert (phi4 - phi4).coeffs == {}
    assert (-phi4).scale(-1) == phi4
    assert phi4.truncate(4).tmax == 4
    with pytest.raises(ValueError):
        phi4.truncate(TMAX + 2)
    with pytest.raises(KeyError):
        phi4[Index(TMAX + 2, 0, 0)]
    with pytest.raises(ValueError):
        phi4 + forms["phi6"]
    with pytest.raises(ValueError):
        ScalarExpansion(4, EVEN, 4, {Index(1, 1, 1): 1})


def test_cohen_h_values():
    # H(3, N) = L(-2, chi_{-N}) for fundamental -N, and zeta(-5) at N = 0
    assert cohen_h(3, 0) == Fraction(-1, 252)
    assert cohen_h(3, 3) == Fraction(-2, 9)
    assert cohen_h(3, 4) == Fraction(-1, 2)
    assert cohen_h(3, 1) == cohen_h(3, 2) == 0


def test_jacobi_cusp_leading():
    for k in (10, 12):
        c = jacobi_cusp(k, 12)
        assert c[0] == 0 and c[3] != 0


@pytest.mark.parametrize("name", ["phi4", "phi6", "chi10", "chi12", "chi5"])
def test_theta_route_agrees(name):
    assert igusa_generator(name, 6, "theta") == igusa_generator(name, 6, "maass")
    with pytest.raises(ValueError):
        igusa_generator(name, 6, "other")
