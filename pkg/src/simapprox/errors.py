"""Failure types raised by the build, verification, and extraction pipeline."""

from __future__ import annotations


class OverlappingDiscs(ValueError):
    """Two discs of a patchwork frame intersect (tangency counts)."""


class ConditioningFailure(ArithmeticError):
    """Jet interpolation lost too much precision to certify its own jets.

    Signals the caller to increase the translation magnitude (better
    separation) instead of raising interpolation orders further.
    """

    def __init__(self, jet_residual: float) -> None:
        super().__init__(f"jet residual {jet_residual:.3e} exceeds recovery gate")
        self.jet_residual = jet_residual


class OrderCapExceeded(RuntimeError):
    """Order doubling would pass the total-degree cap before reaching tolerance."""

    def __init__(self, max_bound: float, order_cap: int) -> None:
        super().__init__(
            f"certified bound stuck at {max_bound:.6e} with total degree capped at {order_cap}"
        )
        self.max_bound = max_bound
        self.order_cap = order_cap


class ScanExhausted(RuntimeError):
    """No magnitude above the threshold within the scan cap."""

    def __init__(self, threshold: float, scanned: int) -> None:
        super().__init__(f"no magnitude above {threshold!r} among {scanned} indices")
        self.threshold = threshold
        self.scanned = scanned


class SlackDepleted(RuntimeError):
    """A certificate's perturbation budget would go non-positive."""


class MagnitudeIndexError(IndexError):
    """Index beyond the end of an explicit (finite) magnitude list."""

    def __init__(self, s: int, length: int) -> None:
        super().__init__(f"magnitude index {s} beyond explicit list of length {length}")
        self.s = s
        self.length = length


class NoCloseTarget(LookupError):
    """No library target within 1/(2n) of the goal on the level-n disc."""

    def __init__(self, n: int) -> None:
        super().__init__(f"no library target within 1/{2 * n} of the goal on |z| <= {n}")
        self.n = n


class MissingWindow(LookupError):
    """The ledger lacks the certificate required at level n for target k."""

    def __init__(self, n: int, k: int) -> None:
        super().__init__(f"ledger has no certificate for window (v={n}, N={2 * n}, k={k}, n={n})")
        self.n = n
        self.k = k


class ConfigError(ValueError):
    """A configuration field failed validation; `field` locates it."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field
        self.reason = message


class ArchiveFormatError(ValueError):
    """A series archive is structurally invalid or has an unknown version."""
