"""Reading a common index sequence out of a built series' ledger.

At level n the ledger is asked for a certificate of the exact window shape
(v=n, N=2n, k, n) where p_k is the library target nearest the goal g; the
half tolerances 1/(2n) + 1/(2n) then add up to the level-n claim: one shared
witness index s_n puts every direction's translate within 1/n of g on
D(0, n).  A single-direction orbit probe is included for contrast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .builder import (
    Certificate,
    MagnitudeSequence,
    SeriesFunction,
    TargetLibrary,
    Window,
    magnitude_at,
)
from .errors import MagnitudeIndexError, MissingWindow, NoCloseTarget
from .geometry import Direction, DirectionSet, Disc, disc_mesh, unit_direction
from .poly import Poly, eval_on_array, sub, sup_bound_on_disc

PROBE_GRID = 101

__all__ = [
    "ExtractionEntry",
    "ExtractionResult",
    "extract_common_indices",
    "density_probe",
]


@dataclass(frozen=True)
class ExtractionEntry:
    """Level n served by witness s_n via library target k_n, with certified bound."""

    n: int
    s_n: int
    k_n: int
    certified: float


@dataclass(frozen=True)
class ExtractionResult:
    """Per-level entries (n, s_n, k_n, certified < 1/n) for one goal g."""

    indices: tuple[ExtractionEntry, ...]
    g: Poly


def extract_common_indices(
    series: SeriesFunction,
    targets: TargetLibrary,
    g: Poly,
    horizon: int,
    dirs: DirectionSet,
) -> ExtractionResult:
    """One witness index per level n = 2..horizon, serving all n directions.

    For each level the smallest k with a certified distance below 1/(2n)
    between g and p_k on D(0, n) is chosen; the ledger must contain the
    window (v=n, N=2n, k, n), whose witness and half tolerance combine with
    the distance into a certified bound below 1/n.
    """
    if horizon < 2:
        raise ValueError("horizon must be at least 2")
    if horizon > len(dirs):
        raise ValueError(f"horizon {horizon} exceeds the {len(dirs)} available directions")
    by_window: dict[Window, Certificate] = {c.window: c for c in series.certificates}
    entries = []
    for n in range(2, horizon + 1):
        disc = Disc(0j, float(n))
        half = 1.0 / (2.0 * n)
        chosen = None
        for k in range(1, len(targets) + 1):
            dist = sup_bound_on_disc(sub(g, targets.target(k)), disc)
            if dist < half:
                chosen = (k, dist)
                break
        if chosen is None:
            raise NoCloseTarget(n)
        k, dist = chosen
        cert = by_window.get(Window(v=n, N=2 * n, k=k, n=n))
        if cert is None:
            raise MissingWindow(n, k)
        entries.append(ExtractionEntry(n=n, s_n=cert.witness_s, k_n=k, certified=half + dist))
    return ExtractionResult(tuple(entries), g)


def density_probe(
    f_poly: Poly,
    a: Direction,
    seq: MagnitudeSequence,
    g: Poly,
    v: int,
    s_max: int,
) -> tuple[int, float]:
    """Best single-direction translate of f toward g among s = 1..s_max.

    Purely diagnostic: measures the sampled sup over D(0, v) of
    |f(z + m_s * u) - g(z)| on a 101 x 101 mesh and returns the smallest
    minimizing index with its value.  Finite explicit sequences are scanned
    to their end.
    """
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    if v < 1:
        raise ValueError("probe radius v must be at least 1")
    zs = disc_mesh(0j, float(v), PROBE_GRID)
    gv = eval_on_array(g, zs)
    u = unit_direction(a)
    best_s = 1
    best_sup = math.inf
    for s in range(1, s_max + 1):
        try:
            m = magnitude_at(seq, s)
        except MagnitudeIndexError:
            break
        sup = float(np.max(np.abs(eval_on_array(f_poly, zs + m * u) - gv)))
        if sup < best_sup:
            best_s, best_sup = s, sup
    return best_s, best_sup
