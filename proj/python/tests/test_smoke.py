import os
import subprocess
from fractions import Fraction

import pytest

import momentcf


def test_genocchi_sequence():
    assert momentcf.sequence("genocchi", n=5) == [1, 1, 3, 17, 155, 2073]


def test_hahn_bernoulli_sequence():
    values = momentcf.sequence("hahn", {"A": 1, "B": 1, "C": 2}, n=4)
    assert values == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]
    assert all(isinstance(v, Fraction) for v in values)


def test_median_genocchi():
    assert [momentcf.median_genocchi(n) for n in range(7)] == [1, 1, 2, 8, 56, 608, 9440]


def test_continued_fractions_round_trip():
    mu = momentcf.sequence("genocchi", n=5)
    gammas, betas, terminates = momentcf.series_to_jfrac(mu)
    assert gammas == [1, 6, 15] and betas == [2, 24] and not terminates
    assert momentcf.cf_to_series(5, gammas=gammas, betas=betas) == mu
    alphas, _ = momentcf.series_to_sfrac(mu)
    assert alphas == [1, 2, 4, 6, 9]
    assert momentcf.cf_to_series(5, alphas=alphas) == mu
    assert momentcf.hankel_det(mu, 3) == 96


def test_cf_by_family():
    out = momentcf.continued_fraction("median_genocchi", depth=4, kind="s")
    assert out["alphas"] == [1, 1, 4, 4]


def test_symbolic_dumont_foata_stays_textual():
    values = momentcf.sequence("dumont_foata", "symbolic", n=1)
    assert values[0] == 1
    assert values[1] == "alpha*beta_bar + alpha_bar*gamma + beta*gamma_bar"


def test_verify():
    report = momentcf.verify("median-genocchi-triple", n=8)
    assert report["passed"] and report["verdict"] == "PASS (3 routes agree)"
    assert "hahn-sfrac" in momentcf.check_ids()


def test_errors_raise():
    with pytest.raises(momentcf.MomentError):
        momentcf.sequence("hahn", {"A": 1, "B": 1})
    with pytest.raises(momentcf.MomentError):
        momentcf.genocchi(3)


def test_cli_through_module():
    code, out, _ = momentcf.run_cli(["seq", "--family", "genocchi", "--n", "3"])
    assert code == 0 and out == "1,1,3,17\n"


@pytest.mark.skipif("MOMENTCF_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_executable():
    result = subprocess.run(
        [os.environ["MOMENTCF_CLI"], "verify", "--id", "median-genocchi-triple", "--n", "8"],
        capture_output=True, text=True, check=False)
    assert result.returncode == 0
    assert result.stdout == "PASS (3 routes agree)\n"
