"""Run configuration: parsing, validation, canonical schedules, and echoing.

Configs are JSON objects with fields directions, magnitudes, targets,
schedule, caps, and grid.  Every validation failure carries the offending
field's path.  The echo form is a normalized plain dict that re-parses to an
identical configuration, suitable for embedding in archives.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .builder import (
    DEFAULT_ESCALATION_CAP,
    DEFAULT_ORDER_CAP,
    DEFAULT_SCAN_CAP,
    MagnitudeSequence,
    TargetLibrary,
    Window,
)
from .errors import ConfigError
from .geometry import Direction, DirectionSet
from .poly import Poly, poly

DEFAULT_GRID = 101

__all__ = [
    "RunConfig",
    "parse_config",
    "load_config",
    "echo_config",
    "canonical_schedule",
    "DEFAULT_GRID",
]


@dataclass(frozen=True)
class RunConfig:
    directions: DirectionSet
    magnitudes: MagnitudeSequence
    targets: TargetLibrary
    schedule: tuple[Window, ...]
    order_cap: int = DEFAULT_ORDER_CAP
    scan_cap: int = DEFAULT_SCAN_CAP
    escalation_cap: int = DEFAULT_ESCALATION_CAP
    grid: int = DEFAULT_GRID


def _number(value, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(field, f"expected a number, got {value!r}")
    return float(value)


def _integer(value, field: str, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(field, f"expected an integer, got {value!r}")
    if value < minimum:
        raise ConfigError(field, f"must be at least {minimum}, got {value}")
    return value


def _complex_value(value, field: str) -> complex:
    """A number, or an [re, im] pair."""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(float(value))
    if isinstance(value, list) and len(value) == 2:
        return complex(_number(value[0], f"{field}[0]"), _number(value[1], f"{field}[1]"))
    raise ConfigError(field, f"expected a number or [re, im] pair, got {value!r}")


def _direction(value, field: str) -> Direction:
    if isinstance(value, str):
        try:
            theta = float(Fraction(value))
        except (ValueError, ZeroDivisionError):
            raise ConfigError(field, f"cannot parse direction {value!r}") from None
    else:
        theta = _number(value, field)
    if not (0.0 <= theta < 1.0):
        raise ConfigError(field, f"direction must lie in [0, 1), got {theta!r}")
    return Direction(theta)


def _directions(value) -> DirectionSet:
    if not isinstance(value, list) or not value:
        raise ConfigError("directions", "expected a non-empty list of angles")
    dirs = [_direction(v, f"directions[{i}]") for i, v in enumerate(value)]
    thetas = [d.theta for d in dirs]
    if len(set(thetas)) != len(thetas):
        raise ConfigError("directions", "directions must be distinct")
    return DirectionSet(tuple(dirs))


def _magnitudes(value) -> MagnitudeSequence:
    if not isinstance(value, dict):
        raise ConfigError("magnitudes", "expected an object with a 'kind' tag")
    kind = value.get("kind")
    known = {
        "naturals": set(),
        "arithmetic": {"a", "b"},
        "power": {"p"},
        "spiral": set(),
        "explicit": {"values"},
    }
    if kind not in known:
        raise ConfigError("magnitudes.kind", f"unknown generator {kind!r}")
    extra = set(value) - known[kind] - {"kind"}
    if extra:
        raise ConfigError("magnitudes", f"unexpected fields {sorted(extra)} for kind {kind!r}")
    try:
        if kind == "arithmetic":
            return MagnitudeSequence(
                "arithmetic",
                a=_complex_value(value.get("a", 0), "magnitudes.a"),
                b=_complex_value(value.get("b"), "magnitudes.b"),
            )
        if kind == "power":
            return MagnitudeSequence("power", p=_number(value.get("p"), "magnitudes.p"))
        if kind == "explicit":
            vals = value.get("values")
            if not isinstance(vals, list):
                raise ConfigError("magnitudes.values", "expected a list")
            return MagnitudeSequence(
                "explicit",
                values=tuple(
                    _complex_value(v, f"magnitudes.values[{i}]") for i, v in enumerate(vals)
                ),
            )
        return MagnitudeSequence(kind)
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError("magnitudes", str(exc)) from None


def _targets(value) -> TargetLibrary:
    if not isinstance(value, list) or not value:
        raise ConfigError("targets", "expected a non-empty list of coefficient arrays")
    polys = []
    for i, arr in enumerate(value):
        if not isinstance(arr, list):
            raise ConfigError(f"targets[{i}]", "expected a coefficient array")
        polys.append(
            poly(_complex_value(c, f"targets[{i}][{j}]") for j, c in enumerate(arr))
        )
    return TargetLibrary(tuple(polys))


def canonical_schedule(count: int, num_targets: int, num_dirs: int) -> list[Window]:
    """First `count` windows of the diagonal enumeration of (v, N, k, n).

    Quadruples with v, N, k >= 1 and n >= 2 are ordered by increasing
    v + N + k + n, ties broken lexicographically; entries whose k or n exceed
    the configured library or direction count are skipped.
    """
    if count == 0:
        return []
    if num_dirs < 2 or num_targets < 1:
        raise ConfigError(
            "schedule", "canonical schedules need at least two directions and one target"
        )
    out: list[Window] = []
    total = 5
    while len(out) < count:
        for v in range(1, total - 3):
            for N in range(1, total - v - 2):
                for k in range(1, total - v - N - 1):
                    n = total - v - N - k
                    if k > num_targets or n > num_dirs:
                        continue
                    out.append(Window(v, N, k, n))
                    if len(out) == count:
                        return out
        total += 1
    return out


def _schedule(value, targets: TargetLibrary, dirs: DirectionSet) -> tuple[Window, ...]:
    if isinstance(value, str):
        head, sep, tail = value.partition(":")
        if head != "canonical" or not sep or not tail.isdigit():
            raise ConfigError("schedule", f"expected 'canonical:T' or a window list, got {value!r}")
        return tuple(canonical_schedule(int(tail), len(targets), len(dirs)))
    if not isinstance(value, list):
        raise ConfigError("schedule", "expected 'canonical:T' or a list of [v, N, k, n] windows")
    windows = []
    for i, item in enumerate(value):
        field = f"schedule[{i}]"
        if not isinstance(item, list) or len(item) != 4:
            raise ConfigError(field, f"expected [v, N, k, n], got {item!r}")
        v = _integer(item[0], f"{field}.v", 1)
        N = _integer(item[1], f"{field}.N", 1)
        k = _integer(item[2], f"{field}.k", 1)
        n = _integer(item[3], f"{field}.n", 2)
        if k > len(targets):
            raise ConfigError(f"{field}.k", f"target index {k} exceeds library size {len(targets)}")
        if n > len(dirs):
            raise ConfigError(f"{field}.n", f"needs {n} directions, only {len(dirs)} configured")
        windows.append(Window(v, N, k, n))
    return tuple(windows)


def parse_config(data, source: str = "config") -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError(source, "expected a JSON object")
    required = {"directions", "magnitudes", "targets", "schedule"}
    allowed = required | {"caps", "grid"}
    missing = required - set(data)
    if missing:
        raise ConfigError(source, f"missing required fields {sorted(missing)}")
    unknown = set(data) - allowed
    if unknown:
        raise ConfigError(source, f"unknown fields {sorted(unknown)}")

    dirs = _directions(data["directions"])
    magnitudes = _magnitudes(data["magnitudes"])
    targets = _targets(data["targets"])
    schedule = _schedule(data["schedule"], targets, dirs)

    caps = data.get("caps", {})
    if not isinstance(caps, dict):
        raise ConfigError("caps", "expected an object")
    unknown = set(caps) - {"order_cap", "scan_cap", "escalation_cap"}
    if unknown:
        raise ConfigError("caps", f"unknown fields {sorted(unknown)}")
    order_cap = _integer(caps.get("order_cap", DEFAULT_ORDER_CAP), "caps.order_cap", 1)
    scan_cap = _integer(caps.get("scan_cap", DEFAULT_SCAN_CAP), "caps.scan_cap", 1)
    escalation_cap = _integer(
        caps.get("escalation_cap", DEFAULT_ESCALATION_CAP), "caps.escalation_cap", 0
    )
    grid = _integer(data.get("grid", DEFAULT_GRID), "grid", 2)

    return RunConfig(
        directions=dirs,
        magnitudes=magnitudes,
        targets=targets,
        schedule=schedule,
        order_cap=order_cap,
        scan_cap=scan_cap,
        escalation_cap=escalation_cap,
        grid=grid,
    )


def load_config(path) -> RunConfig:
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(str(path), f"invalid JSON: {exc}") from None
    return parse_config(data, source=str(path))


def _echo_complex(z: complex) -> list[float]:
    return [z.real, z.imag]


def echo_config(cfg: RunConfig) -> dict:
    """A normalized plain dict that parses back to an identical RunConfig."""
    mag: dict = {"kind": cfg.magnitudes.kind}
    if cfg.magnitudes.kind == "arithmetic":
        mag["a"] = _echo_complex(cfg.magnitudes.a)
        mag["b"] = _echo_complex(cfg.magnitudes.b)
    elif cfg.magnitudes.kind == "power":
        mag["p"] = cfg.magnitudes.p
    elif cfg.magnitudes.kind == "explicit":
        mag["values"] = [_echo_complex(v) for v in cfg.magnitudes.values]
    return {
        "directions": [d.theta for d in cfg.directions],
        "magnitudes": mag,
        "targets": [[_echo_complex(c) for c in p.coeffs] for p in cfg.targets.polys],
        "schedule": [[w.v, w.N, w.k, w.n] for w in cfg.schedule],
        "caps": {
            "order_cap": cfg.order_cap,
            "scan_cap": cfg.scan_cap,
            "escalation_cap": cfg.escalation_cap,
        },
        "grid": cfg.grid,
    }
