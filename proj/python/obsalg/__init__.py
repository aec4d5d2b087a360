"""Thin wrapper over the C++ core: algebras in, parsed JSON reports out."""
import json
from pathlib import Path

from . import _core
from ._core import ObsalgError

__all__ = ["ObsalgError", "load", "verify", "classify", "hull", "compose",
           "decompose", "spectrum", "h2", "pipeline"]


def _text(alg):
    if isinstance(alg, (dict, list)):
        return json.dumps(alg)
    if isinstance(alg, Path) or (isinstance(alg, str) and not alg.lstrip().startswith("{")):
        return Path(alg).read_text()
    return alg


def load(path):
    return json.loads(Path(path).read_text())


def verify(alg):
    return json.loads(_core.verify(_text(alg)))


def classify(alg):
    return json.loads(_core.classify(_text(alg)))


def hull(alg):
    return json.loads(_core.hull(_text(alg)))


def compose(a, b, mu, force=False):
    return json.loads(_core.compose(_text(a), _text(b), str(mu), force))


def decompose(alg, with_star=True, seed=0):
    return json.loads(_core.decompose(_text(alg), with_star, seed))


def spectrum(alg, element):
    # coordinates: ints, Fractions, "p/q" strings or {"re": .., "im": ..}
    coords = [x if isinstance(x, dict) else str(x) for x in element]
    return json.loads(_core.spectrum(_text(alg), json.dumps(coords)))


def h2(alg):
    return json.loads(_core.h2(_text(alg)))


def pipeline(alg, seed=0, samples=50):
    return json.loads(_core.pipeline(_text(alg), seed, samples))
