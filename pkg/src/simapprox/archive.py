"""Lossless, byte-deterministic serialization of built series.

Archives are JSON with sorted keys and shortest-representation decimals, so
identical builds serialize to identical bytes and every binary64 value
round-trips exactly.  An archive carries everything needed to re-run the
ledger checks: the config echo, the increments, the certificate ledger with
slack histories, the protection radii, and the tail caps.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .builder import Certificate, SeriesFunction, Window
from .config import RunConfig, parse_config
from .errors import ArchiveFormatError
from .poly import poly

FORMAT_VERSION = 1

__all__ = ["SeriesArchive", "FORMAT_VERSION", "serialize_archive", "write_archive", "read_archive"]


@dataclass(frozen=True)
class SeriesArchive:
    """A deserialized archive: version, config (echo + parsed), and the series."""

    version: int
    config: RunConfig
    echo: dict
    series: SeriesFunction


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def serialize_archive(series: SeriesFunction, echo: dict) -> str:
    doc = {
        "format_version": FORMAT_VERSION,
        "config": echo,
        "increments": [[_pair(c) for c in q.coeffs] for q in series.increments],
        "certificates": [
            {
                "window": [c.window.v, c.window.N, c.window.k, c.window.n],
                "witness_s": c.witness_s,
                "m_value": _pair(c.m_value),
                "created_bound": c.created_bound,
                "slack_history": list(c.slack_history),
            }
            for c in series.certificates
        ],
        "protect_radii": list(series.protect_history),
        "tail_caps": list(series.tail_caps),
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_archive(path, series: SeriesFunction, echo: dict) -> None:
    Path(path).write_text(serialize_archive(series, echo), encoding="utf-8")


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise ArchiveFormatError(message)


def _float(value, field: str) -> float:
    _expect(
        isinstance(value, (int, float)) and not isinstance(value, bool),
        f"{field}: expected a number",
    )
    return float(value)


def _int(value, field: str) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), f"{field}: expected an integer")
    return value


def _complex_pair(value, field: str) -> complex:
    _expect(isinstance(value, list) and len(value) == 2, f"{field}: expected an [re, im] pair")
    return complex(_float(value[0], field), _float(value[1], field))


def read_archive(path) -> SeriesArchive:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError:
        raise
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ArchiveFormatError(f"{path}: invalid JSON: {exc}") from None
    _expect(isinstance(doc, dict), "archive must be a JSON object")

    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise ArchiveFormatError(f"unsupported format_version {version!r}, expected {FORMAT_VERSION}")
    for key in ("config", "increments", "certificates", "protect_radii", "tail_caps"):
        _expect(key in doc, f"missing field {key!r}")

    config = parse_config(doc["config"], source="archive config")

    _expect(isinstance(doc["increments"], list), "increments: expected a list")
    increments = []
    for i, arr in enumerate(doc["increments"]):
        _expect(isinstance(arr, list), f"increments[{i}]: expected a coefficient list")
        increments.append(
            poly(_complex_pair(c, f"increments[{i}][{j}]") for j, c in enumerate(arr))
        )

    _expect(isinstance(doc["certificates"], list), "certificates: expected a list")
    certificates = []
    for i, entry in enumerate(doc["certificates"]):
        field = f"certificates[{i}]"
        _expect(isinstance(entry, dict), f"{field}: expected an object")
        win = entry.get("window")
        _expect(isinstance(win, list) and len(win) == 4, f"{field}.window: expected [v, N, k, n]")
        slacks = entry.get("slack_history")
        _expect(
            isinstance(slacks, list) and len(slacks) >= 1, f"{field}.slack_history: expected a list"
        )
        try:
            window = Window(*(_int(x, f"{field}.window") for x in win))
        except ValueError as exc:
            raise ArchiveFormatError(f"{field}.window: {exc}") from None
        certificates.append(
            Certificate(
                window=window,
                witness_s=_int(entry.get("witness_s"), f"{field}.witness_s"),
                m_value=_complex_pair(entry.get("m_value"), f"{field}.m_value"),
                created_bound=_float(entry.get("created_bound"), f"{field}.created_bound"),
                slack_history=[_float(x, f"{field}.slack_history") for x in slacks],
            )
        )

    _expect(isinstance(doc["protect_radii"], list), "protect_radii: expected a list")
    protect_history = [_float(x, f"protect_radii[{i}]") for i, x in enumerate(doc["protect_radii"])]
    _expect(isinstance(doc["tail_caps"], list), "tail_caps: expected a list")
    tail_caps = [_float(x, f"tail_caps[{i}]") for i, x in enumerate(doc["tail_caps"])]

    series = SeriesFunction(
        increments=increments,
        certificates=certificates,
        protect_radius=protect_history[-1] if protect_history else 0.0,
        tail_caps=tail_caps,
        protect_history=protect_history,
    )
    return SeriesArchive(version=version, config=config, echo=doc["config"], series=series)
