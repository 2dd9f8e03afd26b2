import fractions
import os
import subprocess

import pytest

import sdgqc


def test_mass_formulas_are_python_ints():
    assert sdgqc.n_sd_binary(8) == 135
    assert sdgqc.n_sd_hermitian16(4) == 325
    big = sdgqc.n_sd_hermitian16(64)
    assert isinstance(big, int)
    assert big // sdgqc.m_sd_hermitian16(64) == 2**126 + 1


def test_census_matches_formula():
    count, codes = sdgqc.census(2, 6, keep_codes=True)
    assert count == 15
    assert len(codes) == 15
    assert all(sdgqc.is_self_dual(c) for c in codes)
    assert sdgqc.census(2, 8, type2=True)[0] == 30
    assert sdgqc.census(16, 4, containing="1100")[0] == 5


def test_codes():
    h = sdgqc.LinearCode(2, 8, ["11110000", "00111100", "00001111", "01010101"])
    assert (h.q, h.n, h.k) == (2, 8, 4)
    assert sdgqc.is_type_ii(h)
    assert sdgqc.min_distance(h) == 4
    assert sdgqc.weight_tally(h) == [1, 0, 0, 0, 14, 0, 0, 0, 1]
    assert sdgqc.LinearCode.from_text(h.to_text()) == h
    assert h.contains("11111111")
    with pytest.raises(sdgqc.FormatError):
        sdgqc.LinearCode.from_text("not a code")


def test_constructions():
    c1 = sdgqc.LinearCode(2, 2, ["11"])
    c16 = sdgqc.LinearCode(16, 2, ["11"])
    q = sdgqc.quintic_code(c1, c16)
    assert q.n == 10 and sdgqc.is_self_dual(q)
    assert sdgqc.is_gqc_invariant(sdgqc.interleave(q, 2, 5), [5, 5])
    assert sdgqc.crt_components(sdgqc.quintic_map("1", "0")) == ("1", "0")


def test_sampler_is_seeded():
    a = sdgqc.sample_self_dual(16, 6, 9)
    assert a == sdgqc.sample_self_dual(16, 6, 9)
    assert sdgqc.is_self_dual(a)


def test_bounds():
    r = sdgqc.bound_check(2, 2, mode="literal")
    assert (r["lhs"], r["rhs"], r["holds"]) == (16, 10, False)
    assert r["delta"] == fractions.Fraction(1, 5)
    assert sdgqc.max_distance(40) == 24
    assert abs(sdgqc.inverse_entropy(2, 0.5) - 0.1100278644) < 1e-9
    assert sdgqc.entropy(2, 0.5) == pytest.approx(1.0)


def test_cli_in_process():
    code, out, err = sdgqc.run_cli(["mass", "--q", "2", "--ell", "8"])
    assert (code, out, err) == (0, "135\n", "")
    assert sdgqc.run_cli(["nonsense"])[0] == 2


def test_cli_executable():
    exe = os.environ.get("SDGQC_CLI")
    if not exe:
        pytest.skip("SDGQC_CLI not set")
    out = subprocess.run([exe, "census", "--q", "16", "--ell", "4"], capture_output=True, text=True, check=True)
    assert out.stdout == "325\n"
