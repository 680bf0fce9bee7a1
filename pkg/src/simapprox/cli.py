"""Command-line surface: build, verify, extract, eval, export-grid.

Exit codes: 0 success; 2 configuration or argument errors; 3 magnitude scan
exhausted; 4 order/escalation cap exceeded; 5 verification failure; 6
extraction infeasible; 7 I/O or archive-format errors.
"""

from __future__ import annotations

import argparse
import sys

from .archive import read_archive, write_archive
from .builder import build, check_budgets, evaluate_series, verify_certificate
from .config import echo_config, load_config
from .errors import (
    ArchiveFormatError,
    ConditioningFailure,
    ConfigError,
    MissingWindow,
    NoCloseTarget,
    OrderCapExceeded,
    ScanExhausted,
    SlackDepleted,
)
from .extraction import extract_common_indices
from .poly import degree, poly

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SCAN = 3
EXIT_CAP = 4
EXIT_VERIFY = 5
EXIT_EXTRACT = 6
EXIT_IO = 7

__all__ = ["main"]


def _parse_complex(text: str, field: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ConfigError(field, f"expected 're' or 're,im', got {text!r}")


def _parse_coeffs(text: str, field: str) -> list[complex]:
    return [
        _parse_complex(chunk, field)
        for chunk in (text.split(";") if text.strip() else [])
    ]


def _cmd_build(args) -> int:
    cfg = load_config(args.config)
    series = build(
        cfg.schedule,
        cfg.magnitudes,
        cfg.targets,
        cfg.directions,
        order_cap=cfg.order_cap,
        scan_cap=cfg.scan_cap,
        escalation_cap=cfg.escalation_cap,
    )
    write_archive(args.out, series, echo_config(cfg))
    for t, (q, cert) in enumerate(zip(series.increments, series.certificates), 1):
        w = cert.window
        print(
            f"window {t} (v={w.v}, N={w.N}, k={w.k}, n={w.n}): "
            f"witness s={cert.witness_s}, |m|={abs(cert.m_value):.6g}, "
            f"deg q={degree(q)}, created={cert.created_bound:.6e}, slack={cert.slack:.6e}"
        )
    print(f"wrote {args.out} ({len(series.increments)} increments)")
    return EXIT_OK


def _cmd_verify(args) -> int:
    arch = read_archive(args.archive)
    grid = args.grid if args.grid is not None else arch.config.grid
    if grid < 2:
        raise ConfigError("--grid", f"must be at least 2, got {grid}")
    failures = 0
    for problem in check_budgets(arch.series):
        failures += 1
        print(f"ledger: {problem}")
    for cert in arch.series.certificates:
        w = cert.window
        ok, measured = verify_certificate(
            arch.series, cert, arch.config.directions, arch.config.targets, grid
        )
        status = "PASS" if ok else "FAIL"
        print(
            f"window (v={w.v}, N={w.N}, k={w.k}, n={w.n}): "
            f"measured={measured!r} vs 1/N={1.0 / w.N!r} {status}"
        )
        if not ok:
            failures += 1
    if failures:
        print(f"verification failed ({failures} problem(s))")
        return EXIT_VERIFY
    print(f"all {len(arch.series.certificates)} certificate(s) pass at grid {grid}")
    return EXIT_OK


def _cmd_extract(args) -> int:
    arch = read_archive(args.archive)
    g = poly(_parse_coeffs(args.g, "--g"))
    result = extract_common_indices(
        arch.series, arch.config.targets, g, args.horizon, arch.config.directions
    )
    print("n s_n k_n certified")
    for entry in result.indices:
        print(f"{entry.n} {entry.s_n} {entry.k_n} {entry.certified!r}")
    return EXIT_OK


def _cmd_eval(args) -> int:
    arch = read_archive(args.archive)
    value = evaluate_series(arch.series, _parse_complex(args.z, "--z"))
    print(f"{value.real:.2f} {value.imag:.2f}")
    return EXIT_OK


def _cmd_export_grid(args) -> int:
    arch = read_archive(args.archive)
    parts = args.disc.split(",")
    if len(parts) != 3:
        raise ConfigError("--disc", f"expected 'cx,cy,r', got {args.disc!r}")
    try:
        cx, cy, r = (float(p) for p in parts)
    except ValueError:
        raise ConfigError("--disc", f"expected numbers 'cx,cy,r', got {args.disc!r}") from None
    if r < 0:
        raise ConfigError("--disc", "radius must be nonnegative")
    if args.n < 2:
        raise ConfigError("--n", f"need at least 2 grid points per axis, got {args.n}")
    n = args.n
    lines = []
    for iy in range(n):
        y = cy - r + 2.0 * r * iy / (n - 1)
        for ix in range(n):
            x = cx - r + 2.0 * r * ix / (n - 1)
            value = evaluate_series(arch.series, complex(x, y))
            lines.append(f"{x!r},{y!r},{value.real!r},{value.imag!r},{abs(value)!r}")
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write("\n".join(lines) + "\n")
    print(f"wrote {args.out} ({n * n} rows)")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simapprox",
        description="Build, verify, and query certified simultaneous-approximation series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a series from a config and write an archive")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="re-check every certificate in an archive")
    p.add_argument("archive")
    p.add_argument("--grid", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extract", help="extract one witness index per level for a goal")
    p.add_argument("archive")
    p.add_argument("--g", required=True, help="goal coefficients, e.g. '0,0;1,0' for z")
    p.add_argument("--horizon", type=int, required=True)
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("eval", help="evaluate the series at a point")
    p.add_argument("archive")
    p.add_argument("--z", required=True, help="point as 're,im'")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("export-grid", help="sample the series over a disc's bounding square")
    p.add_argument("archive")
    p.add_argument("--disc", required=True, help="disc as 'cx,cy,r'")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_export_grid)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ScanExhausted as exc:
        print(f"scan exhausted: {exc}", file=sys.stderr)
        return EXIT_SCAN
    except (OrderCapExceeded, ConditioningFailure, SlackDepleted) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NoCloseTarget, MissingWindow) as exc:
        print(f"extraction infeasible: {exc}", file=sys.stderr)
        return EXIT_EXTRACT
    except ArchiveFormatError as exc:
        print(f"archive error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
