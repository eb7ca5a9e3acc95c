from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from siegel6 import cache, cli
from siegel6.cache import CacheError
from siegel6.classical import ScalarExpansion
from siegel6.index_lattice import EVEN, ODD, enumerate_indices

coeff = st.fractions(max_denominator=50).filter(lambda c: abs(c) < 10**6)


@st.composite
def scalar_expansions(draw):
    coset = draw(st.sampled_from([EVEN, ODD]))
    tmax = draw(st.integers(0, 6))
    pool = enumerate_indices(coset, tmax)
    chosen = draw(st.lists(st.sampled_from(pool), unique=True)) if pool else []
    coeffs = {n: draw(coeff) for n in chosen}
    name = draw(st.sampled_from(["", "f", "chi5"]))
    return ScalarExpansion(draw(st.integers(0, 20)), coset, tmax, coeffs, 0, name)


@given(scalar_expansions())
def test_scalar_round_trip(f):
    assert cache.loads(cache.dumps(f)) == f
    assert cache.dumps(cache.loads(cache.dumps(f))) == cache.dumps(f)


def test_vector_round_trip(E6, tmp_path):
    path = cache.store(E6, tmp_path / "sub" / "E6.txt")
    assert cache.load(path) == E6
    assert not list(path.parent.glob("*.tmp"))


def test_corruption_is_detected(classical, tmp_path):
    text = cache.dumps(classical["phi4"])
    lines = text.split("\n")
    lines[8] = lines[8].replace("240", "241")
    with pytest.raises(CacheError, match="checksum"):
        cache.loads("\n".join(lines))
    with pytest.raises(CacheError):
        cache.loads("hello\n")
    with pytest.raises(CacheError):
        cache.loads(text.replace("tmax 16", "tmax sixteen"))


def test_header(classical):
    head = cache.dumps(classical["chi5"]).split("\n")[:6]
    assert head == ["# siegel6-cache 1", "name chi5", "weight 0 5", "coset odd", "tmax 16", "floor 2"]
    assert "1/2" in cache.dumps(classical["phi4"].scale(Fraction(1, 2)))


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_cli_dims(capsys):
    assert run(capsys, "dims", "odd", "23") == (0, "11:1 13:1 15:2 17:3 19:4 21:6 23:9\n")
    code, out = run(capsys, "dims", "even", "12")
    assert code == 0 and out.strip() == ""


def test_cli_hecke(capsys):
    code, out = run(capsys, "hecke", "3", "6", "8", "--tmax", "12")
    assert code == 0 and "eigenvalue -27000" in out
    code, out = run(capsys, "hecke", "2", "6", "13", "--tmax", "12", "--charpoly")
    assert code == 0 and "full X + 24000" in out
    code, out = run(capsys, "hecke", "2", "4", "13")
    assert code == 2


def test_cli_errors_exit_2(capsys):
    code, out = run(capsys, "hecke", "5", "6", "13", "--tmax", "4")
    assert code == 2 and out.startswith("error [hecke]:")


def test_cli_classical_and_cache(capsys, tmp_path):
    code, out = run(capsys, "classical", "chi5", "--tmax", "6", "--cache", str(tmp_path))
    assert code == 0 and "coset=odd" in out
    code2, out2 = run(capsys, "classical", "chi5", "--tmax", "6", "--route", "theta")
    assert out.split("\n")[1] == out2.split("\n")[1]
    assert any(tmp_path.iterdir())


def test_cli_rc_space_and_out_file(capsys, tmp_path):
    target = tmp_path / "rc.txt"
    code, out = run(capsys, "rc-space", "6", "0", "4", "6", "--out", str(target))
    assert code == 0 and "dim RC(6,0; (4, 6)) = 1" in out
    assert target.read_text() == out


def test_cli_verify_small_index(capsys, tmp_path):
    code, out = run(capsys, "verify-theorem", "7,7,0", "--checkpoint", str(tmp_path))
    assert code == 0
    assert out.splitlines() == ["c(7,7,0) = 0", "c(mirror) = 0 PASS"]


def test_config_from_env(monkeypatch):
    monkeypatch.setenv("SIEGEL6_THREADS", "3")
    monkeypatch.setenv("SIEGEL6_CACHE", "/tmp/x")
    args = cli.build_parser().parse_args(["dims", "odd", "5"])
    cfg = cli.config_from_args(args)
    assert cfg.threads == 3 and str(cfg.cache_dir) == "/tmp/x"
    with pytest.raises(ValueError):
        cli.Config(None, 0, 0, None)
