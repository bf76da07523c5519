"""Python interface to the symcert verification engine.

Rationals are exchanged as fractions.Fraction; the extension module uses
"p/q" strings underneath.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from . import _symcert
from ._symcert import Polynomial, check_ids

__all__ = [
    "Polynomial",
    "bb_lower_bound",
    "build_construction",
    "check_ids",
    "grid_oracle_min",
    "psi_at",
    "rank4_at",
    "reduced_system",
    "replay_certificate",
    "run_checks",
    "sample_sphere_points",
    "sample_torus_points",
]

__version__ = _symcert.__version__
ORIENTATION = _symcert.orientation


def _s(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _f(s: str | None) -> Fraction | None:
    return None if s is None else Fraction(s)


def _pt(xs: Sequence[str] | None):
    return None if xs is None else [Fraction(x) for x in xs]


def build_construction() -> dict:
    """Polynomials as Polynomial objects, forms as canonical strings."""
    return _symcert.build_construction()


def reduced_system() -> dict:
    return _symcert.reduced_system()


def evaluate(p: Polynomial, point: Iterable) -> Fraction:
    return Fraction(p.eval([_s(x) for x in point]))


def rank4_at(point: Iterable) -> int:
    return _symcert.rank4_at([_s(x) for x in point])


def psi_at(point: Iterable) -> dict[str, Fraction]:
    """Nonzero components of psi at an exact point."""
    return {k: Fraction(v) for k, v in _symcert.psi_at([_s(x) for x in point])}


def sample_torus_points(n: int, seed: int = 1) -> list[list[Fraction]]:
    return [_pt(p) for p in _symcert.sample_torus_points(n, seed)]


def sample_sphere_points(n: int, seed: int = 1) -> list[list[Fraction]]:
    return [_pt(p) for p in _symcert.sample_sphere_points(n, seed)]


def anchor_point() -> list[Fraction]:
    return _pt(_symcert.anchor_point())


def _domain(domain):
    return [(_s(lo), _s(hi)) for lo, hi in domain]


def bb_lower_bound(objective: Polynomial, domain, constraints=(), target=0, *, max_depth: int = 40,
                   max_boxes: int = 1_000_000, workers: int = 1) -> dict:
    """Certified lower bound; constraints are (Polynomial, "eq" | "le") pairs."""
    r = _symcert.bb_lower_bound(objective, _domain(domain), list(constraints), _s(target), max_depth, max_boxes, workers)
    r["certified_lower_bound"] = Fraction(r["certified_lower_bound"])
    r["witness"] = _pt(r["witness"])
    return r


def grid_oracle_min(p: Polynomial, domain, constraints=(), step=Fraction(1, 10)) -> dict:
    r = _symcert.grid_oracle_min(p, _domain(domain), list(constraints), _s(step))
    r["point"] = _pt(r["point"])
    r["value"] = _f(r["value"])
    return r


def replay_certificate(text: str) -> dict:
    r = _symcert.replay_certificate(text)
    r["claimed_bound"] = Fraction(r["claimed_bound"])
    return r


def run_checks(ids: Sequence[str] | str = "all", **overrides) -> tuple[dict, int]:
    """Runs checks and returns (structured report, exit code)."""
    if isinstance(ids, str):
        ids = list(check_ids()) if ids == "all" else [ids]
    for key in ("threshold", "grid_step"):
        if key in overrides:
            overrides[key] = _s(overrides[key])
    text, code = _symcert.run_checks(list(ids), overrides)
    return json.loads(text), code
