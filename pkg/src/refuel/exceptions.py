"""Custom exceptions for refuelkit.

Provides a clear exception hierarchy with actionable error messages.
Every error carries the process exit code the CLI reports for it.
"""

from pathlib import Path


class RefuelError(Exception):
    """Base exception for all refuelkit errors."""

    exit_code: int = 1

    def __init__(self, message: str, suggestion: str | None = None):
        """Initialize error with message and optional suggestion.

        Args:
            message: Human-readable error description
            suggestion: Actionable suggestion for fixing the error
        """
        self.message = message
        self.suggestion = suggestion
        super().__init__(message)

    def __str__(self) -> str:
        """Format error with suggestion if available."""
        if self.suggestion:
            return f"{self.message}\n\nSuggestion: {self.suggestion}"
        return self.message


class UsageError(RefuelError):
    """Command line flags are missing, conflicting or malformed."""

    exit_code = 2


class InstanceError(RefuelError):
    """Error related to instance contents or job sequences."""


class InvalidInstanceError(InstanceError):
    """Instance violates a structural invariant."""

    def __init__(self, reason: str):
        super().__init__(
            f"Invalid instance: {reason}",
            "Job ids must be 0..n-1, p a positive integer and w a positive finite number",
        )
        self.reason = reason


class MalformedPermutationError(InstanceError):
    """Order is not a permutation of the instance's job ids."""

    def __init__(self, order: list[int], n: int, reason: str):
        super().__init__(
            f"Order is not a permutation of 0..{n - 1}: {reason}",
            "List every job id exactly once",
        )
        self.order = list(order)
        self.n = n
        self.reason = reason


class WindowError(InstanceError):
    """Window bounds do not match the window's jobs."""

    def __init__(self, reason: str):
        super().__init__(f"Invalid window: {reason}")
        self.reason = reason


class EmptyWindowError(WindowError):
    """Pivot selection was asked for on an empty window."""

    def __init__(self):
        super().__init__("cannot select a pivot job from an empty window")


class SizeGuardError(RefuelError):
    """Instance too large for an exhaustive algorithm."""

    exit_code = 3

    def __init__(self, algo: str, n: int, limit: int):
        super().__init__(
            f"{algo} refuses instances with more than {limit} jobs (got {n})",
            "Pass --override-size-guard or set REFUEL_SIZE_GUARD_OVERRIDE=true",
        )
        self.algo = algo
        self.n = n
        self.limit = limit


class SolveTimeoutError(RefuelError):
    """Cooperative deadline was exceeded inside a solver."""

    exit_code = 4

    def __init__(self, algo: str, timeout_s: float, nodes: int = 0):
        super().__init__(
            f"{algo} did not finish within {timeout_s:g}s ({nodes} nodes explored)",
            "Raise --timeout or try a smaller instance",
        )
        self.algo = algo
        self.timeout_s = timeout_s
        self.nodes = nodes


class ValidationFailedError(RefuelError):
    """Order violates at least one dominance relation."""

    exit_code = 5

    def __init__(self, violation_count: int):
        super().__init__(f"Order is not a potential schedule ({violation_count} violations)")
        self.violation_count = violation_count


class FileSystemError(RefuelError):
    """Error related to reading or writing files."""


class InstanceFileError(FileSystemError):
    """Error related to instance files."""


class InstanceFileNotFoundError(InstanceFileError):
    """Instance file does not exist."""

    def __init__(self, path: Path):
        super().__init__(
            f"Instance file not found: {path}",
            "Run 'refuel gen' to create an instance",
        )
        self.path = path


class InvalidInstanceFileError(InstanceFileError):
    """Instance file is not valid JSON or misses required fields."""

    def __init__(self, path: Path, reason: str):
        super().__init__(
            f"Invalid instance file: {path}\nReason: {reason}",
            'Expected {"meta": {...}, "jobs": [{"id": 0, "p": 1, "w": 1.0}, ...]}',
        )
        self.path = path
        self.reason = reason


class ManifestError(FileSystemError):
    """Manifest file missing or malformed."""

    def __init__(self, path: Path, reason: str):
        super().__init__(
            f"Invalid manifest: {path}\nReason: {reason}",
            "Regenerate the dataset with 'refuel gen --dataset'",
        )
        self.path = path
        self.reason = reason


class DatasetWriteError(FileSystemError):
    """Writing a generated file failed."""

    def __init__(self, path: Path, reason: str):
        super().__init__(
            f"Cannot write {path}: {reason}",
            "Check that the output directory is writable",
        )
        self.path = path
        self.reason = reason


class ConfigurationError(RefuelError):
    """Error in configuration."""


class InvalidConfigError(ConfigurationError):
    """Invalid configuration file or value."""

    def __init__(self, config_path: Path | None, reason: str):
        path_str = str(config_path) if config_path else "configuration"
        super().__init__(
            f"Invalid {path_str}: {reason}",
            "Check configuration syntax and values",
        )
        self.config_path = config_path
        self.reason = reason


class EnvironmentVariableError(ConfigurationError):
    """Invalid environment variable value."""

    def __init__(self, var_name: str, invalid_value: str, valid_values: list[str]):
        valid = ", ".join(valid_values)
        super().__init__(
            f"Invalid value for {var_name}: '{invalid_value}'",
            f"Valid values: {valid}",
        )
        self.var_name = var_name
        self.invalid_value = invalid_value
        self.valid_values = valid_values
