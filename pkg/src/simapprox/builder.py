"""Inductive construction of a polynomial series with a perturbation ledger.

Each window (v, N, k, n) asks that translating the series by one magnitude
m_s in each of the first n directions lands within 1/N of target p_k on the
disc of radius v.  A window is fixed by one certified patchwork step whose
new increment both corrects the translated discs and stays tiny on every
previously certified region; the ledger deducts that smallness from each
earlier certificate's slack so no later step can invalidate an earlier one.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    ConditioningFailure,
    MagnitudeIndexError,
    OrderCapExceeded,
    ScanExhausted,
    SlackDepleted,
)
from .geometry import (
    DirectionSet,
    TranslationFrame,
    disc_mesh,
    min_pair_gap,
    separation_threshold,
    unit_direction,
)
from .patchwork import DEFAULT_ORDER_CAP, approximate, build_patchwork
from .poly import ZERO, Poly, add, eval_on_array, evaluate, sub

DEFAULT_SCAN_CAP = 100_000
DEFAULT_ESCALATION_CAP = 8

__all__ = [
    "Window",
    "MagnitudeSequence",
    "naturals",
    "arithmetic",
    "power_law",
    "spiral",
    "explicit",
    "TargetLibrary",
    "Certificate",
    "SeriesFunction",
    "magnitude_at",
    "scan_witness",
    "fix_window",
    "build",
    "total_polynomial",
    "evaluate_series",
    "verify_certificate",
    "check_budgets",
    "DEFAULT_SCAN_CAP",
    "DEFAULT_ESCALATION_CAP",
    "DEFAULT_ORDER_CAP",
]


@dataclass(frozen=True)
class Window:
    """Approximation demand: within 1/N of target k on D(0, v), first n directions."""

    v: int
    N: int
    k: int
    n: int

    def __post_init__(self) -> None:
        if self.v < 1 or self.N < 1 or self.k < 1:
            raise ValueError("window needs v, N, k >= 1")
        if self.n < 2:
            raise ValueError("window needs at least two directions (n >= 2)")


@dataclass(frozen=True)
class MagnitudeSequence:
    """A deterministic generator of translation magnitudes m_1, m_2, ...

    Built-in kinds: naturals (m_s = s), arithmetic (a + b*s), power (s**p),
    spiral (s * e^(i*s)), and explicit finite lists.  All built-in infinite
    kinds are unbounded in modulus.
    """

    kind: str
    a: complex = 0j
    b: complex = 0j
    p: float = 1.0
    values: tuple[complex, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("naturals", "arithmetic", "power", "spiral", "explicit"):
            raise ValueError(f"unknown magnitude kind {self.kind!r}")
        if self.kind == "arithmetic" and self.b == 0:
            raise ValueError("arithmetic magnitudes need b != 0 to be unbounded")
        if self.kind == "power" and not self.p > 0:
            raise ValueError("power magnitudes need p > 0 to be unbounded")


def naturals() -> MagnitudeSequence:
    return MagnitudeSequence("naturals")


def arithmetic(a: complex, b: complex) -> MagnitudeSequence:
    return MagnitudeSequence("arithmetic", a=complex(a), b=complex(b))


def power_law(p: float) -> MagnitudeSequence:
    return MagnitudeSequence("power", p=float(p))


def spiral() -> MagnitudeSequence:
    return MagnitudeSequence("spiral")


def explicit(values) -> MagnitudeSequence:
    return MagnitudeSequence("explicit", values=tuple(complex(v) for v in values))


@dataclass(frozen=True)
class TargetLibrary:
    """Stable 1-indexed list of target polynomials p_1, p_2, ..."""

    polys: tuple[Poly, ...]

    def __len__(self) -> int:
        return len(self.polys)

    def target(self, k: int) -> Poly:
        if not (1 <= k <= len(self.polys)):
            raise ValueError(f"target index {k} outside 1..{len(self.polys)}")
        return self.polys[k - 1]


@dataclass
class Certificate:
    """One fixed window with its witness and remaining perturbation budget.

    created_bound is the certified max over the translated discs at creation
    (< 1/(2N)); the slack history starts at 1/(2N) - created_bound and each
    later build step appends the value left after deducting its increment's
    certified smallness, so created_bound plus everything deducted stays
    below 1/(2N) < 1/N forever.
    """

    window: Window
    witness_s: int
    m_value: complex
    created_bound: float
    slack_history: list[float]

    @property
    def initial_slack(self) -> float:
        return self.slack_history[0]

    @property
    def slack(self) -> float:
        return self.slack_history[-1]

    def deduct(self, amount: float) -> None:
        remaining = self.slack - amount
        if remaining < 0:
            raise SlackDepleted(
                f"deduction {amount!r} exceeds remaining slack {self.slack!r}"
            )
        self.slack_history.append(remaining)


@dataclass
class SeriesFunction:
    """Ordered increments q_1..q_T with one certificate per fixed window.

    protect_radius covers every disc referenced by any certificate; tail_caps
    records the smallness budget epsilon_t each step was allowed on the
    protected region.  Treat instances as immutable once built.
    """

    increments: list[Poly] = field(default_factory=list)
    certificates: list[Certificate] = field(default_factory=list)
    protect_radius: float = 0.0
    tail_caps: list[float] = field(default_factory=list)
    protect_history: list[float] = field(default_factory=list)

    @classmethod
    def zero(cls) -> "SeriesFunction":
        return cls()


def magnitude_at(seq: MagnitudeSequence, s: int) -> complex:
    """The generator's value at 1-based index s."""
    if s < 1:
        raise ValueError("magnitude indices start at 1")
    if seq.kind == "naturals":
        return complex(s)
    if seq.kind == "arithmetic":
        return seq.a + seq.b * s
    if seq.kind == "power":
        return complex(float(s) ** seq.p)
    if seq.kind == "spiral":
        return s * cmath.exp(1j * s)
    if s > len(seq.values):
        raise MagnitudeIndexError(s, len(seq.values))
    return seq.values[s - 1]


def scan_witness(seq: MagnitudeSequence, threshold: float, start: int, scan_cap: int) -> int:
    """Smallest s >= start with |m_s| > threshold, scanning at most scan_cap indices."""
    if threshold < 0:
        raise ValueError("threshold must be nonnegative")
    if start < 1:
        raise ValueError("scan start must be at least 1")
    if scan_cap < 1:
        raise ValueError("scan cap must be positive")
    for i in range(scan_cap):
        s = start + i
        try:
            m = magnitude_at(seq, s)
        except MagnitudeIndexError:
            raise ScanExhausted(threshold, i) from None
        if abs(m) > threshold:
            return s
    raise ScanExhausted(threshold, scan_cap)


def total_polynomial(series: SeriesFunction) -> Poly:
    """The current partial sum, as one polynomial."""
    acc = ZERO
    for q in series.increments:
        acc = add(acc, q)
    return acc


def evaluate_series(series: SeriesFunction, z: complex) -> complex:
    """Sum of the increments evaluated at z."""
    acc = 0j
    for q in series.increments:
        acc += evaluate(q, z)
    return acc


def fix_window(
    series: SeriesFunction,
    w: Window,
    seq: MagnitudeSequence,
    targets: TargetLibrary,
    dirs: DirectionSet,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    scan_cap: int = DEFAULT_SCAN_CAP,
    escalation_cap: int = DEFAULT_ESCALATION_CAP,
) -> tuple[SeriesFunction, Certificate]:
    """Fix one window: append an increment and its certificate to the series.

    Steps: enlarge the base radius to cover every protected disc, budget the
    allowed perturbation of the past, scan for a witness magnitude beyond the
    separation threshold, fit a certified patchwork whose piece 0 pins the
    current partial sum on the enlarged base disc, then ledger the result.
    On a cap failure the threshold is doubled and the scan redone, at most
    escalation_cap times.  The series is updated in place and returned.
    """
    g = targets.target(w.k)
    prefix = dirs.prefix(w.n)
    h = total_polynomial(series)
    t = len(series.increments) + 1

    v1 = float(max(w.v, math.ceil(series.protect_radius)))
    slack_min = min((c.slack for c in series.certificates), default=math.inf)
    if not slack_min > 0:
        raise SlackDepleted(f"minimum certificate slack is {slack_min!r}")
    eps = min(2.0 ** -t, slack_min / 2.0)
    tol = min(eps, 1.0 / (2.0 * w.N))

    threshold = separation_threshold(v1, min_pair_gap(prefix))
    escalations = 0
    while True:
        s = scan_witness(seq, threshold, 1, scan_cap)
        m = magnitude_at(seq, s)
        patch = build_patchwork(h, g, TranslationFrame(v1, m, prefix.directions))
        try:
            result = approximate(patch, tol, order_cap)
            break
        except (OrderCapExceeded, ConditioningFailure):
            escalations += 1
            if escalations > escalation_cap:
                raise
            threshold *= 2.0

    q_t = sub(result.q, h)
    piece0_bound = result.per_disc_bound[0]
    for cert in series.certificates:
        cert.deduct(piece0_bound)

    created = max(result.per_disc_bound[1:])
    cert = Certificate(
        window=w,
        witness_s=s,
        m_value=m,
        created_bound=created,
        slack_history=[1.0 / (2.0 * w.N) - created],
    )
    series.increments.append(q_t)
    series.certificates.append(cert)
    series.tail_caps.append(eps)
    series.protect_radius = max(series.protect_radius, abs(m) + w.v)
    series.protect_history.append(series.protect_radius)
    return series, cert


def build(
    schedule,
    seq: MagnitudeSequence,
    targets: TargetLibrary,
    dirs: DirectionSet,
    *,
    order_cap: int = DEFAULT_ORDER_CAP,
    scan_cap: int = DEFAULT_SCAN_CAP,
    escalation_cap: int = DEFAULT_ESCALATION_CAP,
) -> SeriesFunction:
    """Fold fix_window over the schedule, starting from the zero series."""
    series = SeriesFunction.zero()
    for w in schedule:
        fix_window(
            series,
            w,
            seq,
            targets,
            dirs,
            order_cap=order_cap,
            scan_cap=scan_cap,
            escalation_cap=escalation_cap,
        )
    return series


def verify_certificate(
    series: SeriesFunction,
    cert: Certificate,
    dirs: DirectionSet,
    targets: TargetLibrary,
    grid: int,
) -> tuple[bool, float]:
    """Grid-sample the window inequality on the current series.

    For each of the first n directions, sample sup over D(0, v) of
    |f(z + m * u_j) - p_k(z)| on a grid x grid mesh (interior plus boundary);
    passes iff the max over directions is below 1/N.
    """
    f = total_polynomial(series)
    p = targets.target(cert.window.k)
    zs = disc_mesh(0j, float(cert.window.v), grid)
    pv = eval_on_array(p, zs)
    measured = 0.0
    for d in dirs.prefix(cert.window.n):
        shift = cert.m_value * unit_direction(d)
        fv = eval_on_array(f, zs + shift)
        measured = max(measured, float(np.max(np.abs(fv - pv))))
    return measured < 1.0 / cert.window.N, measured


def check_budgets(series: SeriesFunction) -> list[str]:
    """Re-run the ledger arithmetic; returns human-readable violations.

    Checks shape coherence, the half-tolerance creation bounds, slack
    initialization, non-negative monotone slack histories, synchronized
    deduction amounts across certificates, and the geometric tail caps.
    """
    problems: list[str] = []
    T = len(series.increments)
    if len(series.certificates) != T:
        problems.append(f"{len(series.certificates)} certificates for {T} increments")
    if len(series.tail_caps) != T:
        problems.append(f"{len(series.tail_caps)} tail caps for {T} increments")
    if len(series.protect_history) != T:
        problems.append(f"{len(series.protect_history)} protection radii for {T} increments")

    for t, cap in enumerate(series.tail_caps, 1):
        if cap > 2.0 ** -t:
            problems.append(f"tail cap {cap!r} at step {t} exceeds {2.0 ** -t!r}")

    for idx, cert in enumerate(series.certificates, 1):
        half = 1.0 / (2.0 * cert.window.N)
        label = f"certificate {idx}"
        if not cert.created_bound >= 0:
            problems.append(f"{label}: created bound {cert.created_bound!r} negative")
        if not cert.created_bound < half:
            problems.append(f"{label}: created bound {cert.created_bound!r} not below {half!r}")
        if abs(cert.initial_slack - (half - cert.created_bound)) > 1e-12:
            problems.append(f"{label}: initial slack {cert.initial_slack!r} mismatched")
        if len(cert.slack_history) != len(series.certificates) - idx + 1:
            problems.append(f"{label}: slack history length {len(cert.slack_history)}")
        for a, b in zip(cert.slack_history, cert.slack_history[1:]):
            if b > a or b < 0:
                problems.append(f"{label}: slack history not nonincreasing nonnegative")
                break

    # Every step's deduction must have hit all existing certificates equally.
    for u in range(2, len(series.certificates) + 1):
        amounts = set()
        for idx in range(1, u):
            hist = series.certificates[idx - 1].slack_history
            pos = u - idx
            if pos < len(hist):
                amounts.add(hist[pos - 1] - hist[pos])
        if len(amounts) > 1 and max(amounts) - min(amounts) > 1e-12:
            problems.append(f"step {u}: deductions differ across certificates")
    return problems
