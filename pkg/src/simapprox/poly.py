"""Complex polynomials with certifiable sup-norm bounds on discs.

Coefficients are stored low-to-high in binary64 complex pairs, trimmed of
exactly-zero trailing entries (no epsilon trimming, so degrees never change
silently).  Upper bounds are produced by recentering onto the disc and summing
absolute coefficients; a fixed (1 + 1e-9) inflation keeps the bound on the
safe side of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Disc

BOUND_INFLATION = 1.0 + 1e-9

__all__ = [
    "Poly",
    "ZERO",
    "poly",
    "degree",
    "evaluate",
    "eval_on_array",
    "add",
    "sub",
    "scale",
    "shift_argument",
    "sup_bound_on_disc",
    "sup_sample_on_disc",
    "taylor_split",
]


@dataclass(frozen=True)
class Poly:
    """Coefficient tuple c_0..c_d, low-to-high, with no trailing exact zeros."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("coefficients must be trimmed; use poly() to construct")


ZERO = Poly(())


def poly(coeffs) -> Poly:
    """Build a Poly from any iterable of numbers, trimming trailing exact zeros."""
    cs = [complex(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return Poly(tuple(cs))


def degree(p: Poly) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return len(p.coeffs) - 1


def evaluate(p: Poly, z: complex) -> complex:
    """Horner evaluation of p at z."""
    acc = 0j
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def eval_on_array(p: Poly, zs: np.ndarray) -> np.ndarray:
    """Horner evaluation over a numpy array of points."""
    acc = np.zeros_like(zs, dtype=np.complex128)
    for c in reversed(p.coeffs):
        acc = acc * zs + c
    return acc


def add(p: Poly, q: Poly) -> Poly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return poly(out)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, scale(q, -1.0))


def scale(p: Poly, a: complex) -> Poly:
    return poly(c * a for c in p.coeffs)


def taylor_split(p: Poly, c: complex, d: int) -> tuple[list[complex], Poly]:
    """First d Taylor coefficients of p at c, plus the exact quotient.

    p(z) = sum_{k<d} jet[k] * (z-c)^k + (z-c)^d * quotient(z), computed by d
    rounds of synthetic division by (z - c).
    """
    if d < 1:
        raise ValueError("jet order must be at least 1")
    work = list(p.coeffs)
    jet: list[complex] = []
    for _ in range(d):
        if not work:
            jet.append(0j)
            continue
        # One synthetic division high-to-low; the remainder is the next
        # Taylor coefficient and `work` becomes the quotient.
        acc = 0j
        for i in range(len(work) - 1, -1, -1):
            acc = acc * c + work[i]
            work[i] = acc
        jet.append(work[0])
        del work[0]
    return jet, poly(work)


def shift_argument(p: Poly, a: complex) -> Poly:
    """The polynomial q with q(z) = p(z + a); degree is preserved."""
    if not p.coeffs:
        return ZERO
    jet, _ = taylor_split(p, a, len(p.coeffs))
    return poly(jet)


def sup_bound_on_disc(p: Poly, d: Disc) -> float:
    """Rigorous upper bound for sup |p| on the disc, by recentered coefficients.

    Recenter at the disc's center and sum |b_k| * r^k (triangle inequality),
    inflated by the fixed floating-point safety factor.
    """
    b = shift_argument(p, d.center)
    acc = 0.0
    for c in reversed(b.coeffs):
        acc = acc * d.radius + abs(c)
    return acc * BOUND_INFLATION


def sup_sample_on_disc(p: Poly, d: Disc, n: int) -> float:
    """Max of |p| over n equispaced boundary points; a lower estimate of the sup."""
    if n < 1:
        raise ValueError("need at least one sample point")
    zs = d.center + d.radius * np.exp(2j * np.pi * np.arange(n) / n)
    if not p.coeffs:
        return 0.0
    return float(np.max(np.abs(eval_on_array(p, zs))))
