"""Gaussian-prime constellations and rank-2 certificates over Q(i).

Gaussian integers are passed as strings such as "-1-6i"; structured results
come back as plain dicts with integers encoded as decimal strings.
"""

import json as _json

from . import _core
from ._core import FormatError, euler_symbol, is_gaussian_prime, mn_invariants, norm, primary_associate

__version__ = "1.0.0"


class CertificationError(ValueError):
    """certify() rejected (beta, k); .reason holds the failed condition."""

    def __init__(self, reason, detail=""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


def factor(g):
    return _json.loads(_core.factor(str(g)))


def torsion(gamma):
    return _json.loads(_core.torsion(str(gamma)))


def selmer(shape, primes):
    return _json.loads(_core.selmer(shape, [str(p) for p in primes]))


def search(box, kmax, shards=1):
    return [_json.loads(h) for h in _core.search(box, kmax, shards)]


def certify(beta, k):
    """Certificate dict for (beta, k), or CertificationError."""
    ok, text = _core.certify(str(beta), str(k))
    if not ok:
        failure = _json.loads(text)
        raise CertificationError(failure["reason"], failure["detail"])
    return _json.loads(text)


def verify(certificate):
    """(ok, failures) for a certificate given as a dict or JSON text."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _core.verify(certificate)


def density(box, shards=1):
    total, target, associates = _core.density(box, shards)
    return {"total": total, "target": target, "associates": associates}


__all__ = [
    "CertificationError",
    "FormatError",
    "certify",
    "density",
    "euler_symbol",
    "factor",
    "is_gaussian_prime",
    "mn_invariants",
    "norm",
    "primary_associate",
    "search",
    "selmer",
    "torsion",
    "verify",
]
