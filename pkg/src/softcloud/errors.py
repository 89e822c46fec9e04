"""Exception hierarchy shared by every stage of the pipeline."""


class SoftCloudError(Exception):
    """Base class; ``exit_code`` is what the command line returns for it."""

    exit_code = 1


class IngestError(SoftCloudError):
    """An artifact could not be read (missing, unreadable, binary)."""

    exit_code = 1


class ConfigError(SoftCloudError):
    """Bad flag, config-file entry, or unresolvable artifact kind."""

    exit_code = 2


class LayoutError(SoftCloudError):
    """A tag does not fit on the canvas."""

    exit_code = 3


class UndefinedMetricError(SoftCloudError, ZeroDivisionError):
    """A metric whose denominator is zero; reported as N/A, never as 0."""
