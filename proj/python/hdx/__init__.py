"""Exact F2 expansion analysis of pure simplicial complexes.

Reports come back as dicts in the hdx-report/1 result layout; rationals are
{"num": n, "den": d} and can be turned into Fractions with `fraction`.
"""

import json
from fractions import Fraction

from . import _core
from ._core import DEFAULT_CAP, SCHEMA, VERSION, Complex, HdxError

__all__ = [
    "Complex",
    "HdxError",
    "DEFAULT_CAP",
    "SCHEMA",
    "VERSION",
    "fraction",
    "generate",
    "info",
    "weight",
    "norm",
    "coboundary",
    "expansion",
    "cosystole",
    "minimize",
    "fat_profile",
    "spectrum",
    "constants",
    "criterion",
    "cli",
]


def _rat(x):
    if isinstance(x, str):
        return x
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def fraction(value):
    """A report rational as a Fraction; "infinity" stays a string."""
    if value == "infinity":
        return value
    return Fraction(int(value["num"]), int(value["den"]))


def _faces(faces):
    return [[str(v) for v in f] for f in faces]


def _dim(faces, k):
    if k is not None:
        return k
    if not faces:
        raise ValueError("k is required for an empty cochain")
    return len(faces[0]) - 1


def generate(kind, *, n=0, d=0, m=0, q=0, p=1, seed=0, cap=DEFAULT_CAP):
    """Returns (complex, types); types is None when the family has no typing."""
    return _core.generate(kind, n=n, d=d, m=m, q=q, p=_rat(p), seed=seed, cap=cap)


def info(X):
    return json.loads(X.info())


def weight(X, face):
    return fraction(json.loads(X.weight([str(v) for v in face])))


def norm(X, faces, k=None):
    faces = _faces(faces)
    return fraction(json.loads(X.norm(_dim(faces, k), faces)))


def coboundary(X, faces, k=None):
    faces = _faces(faces)
    return _core.coboundary(X, _dim(faces, k), faces)


def expansion(X, k, mode="coboundary", *, cap=DEFAULT_CAP, threads=0):
    return json.loads(_core.expansion(X, k, mode, cap=cap, threads=threads))


def cosystole(X, k, *, cap=DEFAULT_CAP, threads=0):
    return json.loads(_core.cosystole(X, k, cap=cap, threads=threads))


def minimize(X, faces, k=None, *, cap=DEFAULT_CAP, threads=0):
    faces = _faces(faces)
    return json.loads(_core.minimize(X, _dim(faces, k), faces, cap=cap, threads=threads))


def fat_profile(X, faces, eta, k=None):
    faces = _faces(faces)
    return json.loads(_core.fat_profile(X, _dim(faces, k), faces, _rat(eta)))


def spectrum(X, types=None):
    return json.loads(_core.spectrum(X, types))


def constants(d, beta=1, Q=1, q=None):
    return json.loads(_core.constants(d, _rat(beta), Q, q))


def criterion(X, *, cap=DEFAULT_CAP, threads=0, alpha_max_vertices=20):
    return json.loads(_core.criterion(X, cap=cap, threads=threads, alpha_max_vertices=alpha_max_vertices))


def cli(*args):
    """Runs one command-line invocation in-process: (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
