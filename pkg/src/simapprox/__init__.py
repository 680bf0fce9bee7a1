"""Certified simultaneous approximation by translates of one polynomial series.

Build a series of polynomial increments whose translates by chosen magnitudes
in several fixed directions simultaneously approximate library targets on
discs, with a machine-checkable certificate ledger; verify, extract common
witness indices, and serialize the result reproducibly.
"""

from .archive import FORMAT_VERSION, SeriesArchive, read_archive, serialize_archive, write_archive
from .builder import (
    Certificate,
    MagnitudeSequence,
    SeriesFunction,
    TargetLibrary,
    Window,
    arithmetic,
    build,
    check_budgets,
    evaluate_series,
    explicit,
    fix_window,
    magnitude_at,
    naturals,
    power_law,
    scan_witness,
    spiral,
    total_polynomial,
    verify_certificate,
)
from .config import RunConfig, canonical_schedule, echo_config, load_config, parse_config
from .errors import (
    ArchiveFormatError,
    ConditioningFailure,
    ConfigError,
    MagnitudeIndexError,
    MissingWindow,
    NoCloseTarget,
    OrderCapExceeded,
    OverlappingDiscs,
    ScanExhausted,
    SlackDepleted,
)
from .extraction import ExtractionEntry, ExtractionResult, density_probe, extract_common_indices
from .geometry import (
    Direction,
    DirectionSet,
    Disc,
    TranslationFrame,
    disc_mesh,
    discs_pairwise_disjoint,
    frame_discs,
    min_pair_gap,
    separation_threshold,
    unit_direction,
)
from .patchwork import (
    ApproxResult,
    Patchwork,
    approximate,
    build_patchwork,
    certified_error,
    hermite_crt,
)
from .poly import (
    ZERO,
    Poly,
    add,
    degree,
    eval_on_array,
    evaluate,
    poly,
    scale,
    shift_argument,
    sub,
    sup_bound_on_disc,
    sup_sample_on_disc,
    taylor_split,
)

__version__ = "1.0.0"
