"""Exact moments, continued fractions and identity checks.

Rational values come back as fractions.Fraction. Symbolic Dumont-Foata
values stay as polynomial strings.
"""

from fractions import Fraction

from . import _momentcf
from ._momentcf import MomentError, check_ids, run_cli

__all__ = [
    "MomentError",
    "bernoulli",
    "cf_to_series",
    "check_ids",
    "continued_fraction",
    "egf",
    "genocchi",
    "hankel_det",
    "median_genocchi",
    "run_cli",
    "sequence",
    "series_to_jfrac",
    "series_to_sfrac",
    "verify",
]


def _value(text):
    try:
        return Fraction(text)
    except ValueError:
        return text


def _values(texts):
    return [_value(t) for t in texts]


def _params(params):
    if params is None:
        return ""
    if isinstance(params, str):
        return params
    return ",".join(f"{k}={Fraction(v)}" for k, v in params.items())


def _strings(values):
    return [str(Fraction(v)) for v in values]


def sequence(family, params=None, n=10):
    """Values 0..n of a family; params is a dict or a "k=v,..." string."""
    return _values(_momentcf.sequence(family, _params(params), n))


def egf(family, params=None, order=16):
    """Coefficients mu_k/k! for k = 0..order."""
    return _values(_momentcf.egf(family, _params(params), order))


def continued_fraction(family, params=None, depth=8, kind="j"):
    out = _momentcf.continued_fraction(family, _params(params), depth, kind)
    for key in ("alphas", "gammas", "betas"):
        if key in out:
            out[key] = _values(out[key])
    return out


def verify(check_id, seed=None, n=None, depth=None, order=None):
    kwargs = {"n": n, "depth": depth, "order": order}
    if seed is not None:
        kwargs["seed"] = seed
    return _momentcf.verify(check_id, **kwargs)


def bernoulli(n):
    return Fraction(_momentcf.bernoulli(n))


def genocchi(n):
    return Fraction(_momentcf.genocchi(n))


def median_genocchi(n):
    return Fraction(_momentcf.median_genocchi(n))


def series_to_jfrac(moments):
    gammas, betas, terminates = _momentcf.series_to_jfrac(_strings(moments))
    return _values(gammas), _values(betas), terminates


def series_to_sfrac(moments):
    alphas, terminates = _momentcf.series_to_sfrac(_strings(moments))
    return _values(alphas), terminates


def cf_to_series(order, alphas=None, gammas=None, betas=()):
    """Expand an S-fraction (alphas) or a J-fraction (gammas, betas)."""
    if alphas is not None:
        return _values(_momentcf.sfrac_to_series(_strings(alphas), order))
    return _values(_momentcf.jfrac_to_series(_strings(gammas), _strings(betas), order))


def hankel_det(moments, n):
    return Fraction(_momentcf.hankel_det(_strings(moments), n))
