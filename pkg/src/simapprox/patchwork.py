"""Certified polynomial approximation of piecewise targets on disjoint discs.

A patchwork prescribes one local polynomial target per disc.  One global
polynomial is fitted by matching truncated Taylor jets at every disc center
(Newton-style incremental interpolation over nodes with multiplicities), and
its per-disc error is then certified a posteriori: form the exact difference
polynomial on each disc and bound it by recentered coefficient sums.  The
escalation loop doubles all jet orders until the certified error drops below
tolerance or the total-degree cap is hit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConditioningFailure, OrderCapExceeded, OverlappingDiscs
from .geometry import Disc, TranslationFrame, discs_pairwise_disjoint, frame_discs
from .poly import Poly, poly, shift_argument, sub, sup_bound_on_disc

INITIAL_ORDER = 4
DEFAULT_ORDER_CAP = 256
JET_RESIDUAL_GATE = 1e-8

__all__ = [
    "Patchwork",
    "ApproxResult",
    "build_patchwork",
    "hermite_crt",
    "certified_error",
    "approximate",
    "INITIAL_ORDER",
    "DEFAULT_ORDER_CAP",
]


@dataclass(frozen=True)
class Patchwork:
    """Pairs (disc, local target), the target written in w = z - center."""

    pieces: tuple[tuple[Disc, Poly], ...]

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ValueError("patchwork needs at least one piece")
        if not discs_pairwise_disjoint([disc for disc, _ in self.pieces]):
            raise OverlappingDiscs("patchwork discs must be pairwise disjoint")


@dataclass(frozen=True)
class ApproxResult:
    """A fitted polynomial with rigorous per-disc error bounds.

    jet_residual is the worst relative jet mismatch seen while building q,
    the conditioning diagnostic of the interpolation.
    """

    q: Poly
    per_disc_bound: tuple[float, ...]
    orders: tuple[int, ...]
    jet_residual: float


def build_patchwork(h: Poly, g: Poly, frame: TranslationFrame) -> Patchwork:
    """Piece 0 carries h on the base disc; every translate carries g verbatim.

    The translated target at center c is g(z - c), which in the local
    coordinate w = z - c is exactly g(w).
    """
    discs = frame_discs(frame)
    pieces = [(discs[0], h)]
    pieces.extend((disc, g) for disc in discs[1:])
    return Patchwork(tuple(pieces))


def _ldexp_c(z: complex, e: int) -> complex:
    """Exact scaling of both parts by 2**e."""
    return complex(math.ldexp(z.real, e), math.ldexp(z.imag, e))


def _taylor_prefix(coeffs: list[complex], c: complex, d: int) -> list[complex]:
    """First d Taylor coefficients at c of the polynomial given by coeffs."""
    work = list(coeffs)
    jet: list[complex] = []
    for _ in range(d):
        if not work:
            jet.append(0j)
            continue
        acc = 0j
        for i in range(len(work) - 1, -1, -1):
            acc = acc * c + work[i]
            work[i] = acc
        jet.append(work[0])
        del work[0]
    return jet


def _mul_linear(coeffs: list[complex], c: complex) -> list[complex]:
    """Multiply by (z - c)."""
    out = [0j] * (len(coeffs) + 1)
    for k, b in enumerate(coeffs):
        out[k + 1] += b
        out[k] -= c * b
    return out


def _interpolate(patch: Patchwork, orders: list[int]) -> tuple[Poly, float]:
    """Jet-matching interpolant plus its relative jet-residual diagnostic."""
    pieces = patch.pieces
    if len(orders) != len(pieces):
        raise ValueError("need exactly one jet order per piece")
    if any(d < 1 for d in orders):
        raise ValueError("jet orders must be positive")
    centers = [disc.center for disc, _ in pieces]
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            if centers[i] == centers[j]:
                raise OverlappingDiscs("duplicate interpolation centers")

    # Work in z/sigma coordinates with sigma an exact power of two covering
    # all discs; this keeps Newton basis coefficients inside binary64 range
    # for large translation magnitudes, with no rounding on (un)scaling.
    span = max(1.0, max(abs(disc.center) + disc.radius for disc, _ in pieces))
    e = max(0, math.ceil(math.log2(span)))

    scaled_centers = [_ldexp_c(c, -e) for c in centers]
    scaled_jets: list[list[complex]] = []
    for (disc, target), d in zip(pieces, orders):
        cs = target.coeffs
        scaled_jets.append(
            [_ldexp_c(cs[i], i * e) if i < len(cs) else 0j for i in range(d)]
        )

    q: list[complex] = []  # interpolant, scaled coordinates
    b: list[complex] = [1 + 0j]  # Newton basis: product over processed node factors
    for ch, d, jets in zip(scaled_centers, orders, scaled_jets):
        tq = _taylor_prefix(q, ch, d)
        tb = _taylor_prefix(b, ch, d)
        beta = tb[0]
        bshift = list(b)  # b * (z - ch)^i while i runs over jet orders
        for i in range(d):
            delta = (jets[i] - tq[i]) / beta
            if delta != 0:
                if len(bshift) > len(q):
                    q.extend([0j] * (len(bshift) - len(q)))
                for t, bc in enumerate(bshift):
                    q[t] += delta * bc
                for t in range(d - i):
                    tq[i + t] += delta * tb[t]
            bshift = _mul_linear(bshift, ch)
        b = bshift

    out = [_ldexp_c(c, -k * e) for k, c in enumerate(q)]

    # A-posteriori conditioning gate: the returned polynomial must reproduce
    # every requested jet to the advertised relative accuracy; failure means
    # order escalation cannot help and the caller should improve separation.
    residual = 0.0
    for (disc, target), d in zip(pieces, orders):
        cs = target.coeffs
        jets = [cs[i] if i < len(cs) else 0j for i in range(d)]
        back = _taylor_prefix(out, disc.center, d)
        node_scale = max(1.0, max(abs(a) for a in jets))
        err = max(abs(x - a) for x, a in zip(back, jets))
        residual = max(residual, err / node_scale)
    if not residual < JET_RESIDUAL_GATE:  # also catches nan
        raise ConditioningFailure(residual)

    return poly(out), residual


def hermite_crt(patch: Patchwork, orders: list[int]) -> Poly:
    """The unique polynomial of degree < sum(orders) matching all local jets.

    The first orders[j] Taylor coefficients at each disc center equal the
    local target's (zero-padded) coefficients.
    """
    q, _ = _interpolate(patch, list(orders))
    return q


def certified_error(q: Poly, patch: Patchwork) -> list[float]:
    """Rigorous per-disc upper bounds for |q - target| via exact differences."""
    bounds = []
    for disc, target in patch.pieces:
        delta = sub(shift_argument(q, disc.center), target)
        bounds.append(sup_bound_on_disc(delta, Disc(0j, disc.radius)))
    return bounds


def approximate(patch: Patchwork, tol: float, order_cap: int = DEFAULT_ORDER_CAP) -> ApproxResult:
    """Escalate uniform jet orders (doubling) until the certified error < tol.

    Raises OrderCapExceeded when doubling would push the total degree past
    order_cap, carrying the last certified bound so the caller can decide to
    enlarge the translation magnitude and retry.
    """
    if not tol > 0:
        raise ValueError("tolerance must be positive")
    orders = [INITIAL_ORDER] * len(patch.pieces)
    while True:
        q, residual = _interpolate(patch, orders)
        bounds = certified_error(q, patch)
        worst = max(bounds)
        if worst < tol:
            return ApproxResult(q, tuple(bounds), tuple(orders), residual)
        if 2 * sum(orders) - 1 > order_cap:
            raise OrderCapExceeded(worst, order_cap)
        orders = [2 * d for d in orders]
