"""Exception taxonomy shared by all spikemag modules."""


class SpikemagError(Exception):
    """Base class for all toolkit errors."""


class FormatError(SpikemagError):
    """File does not start with a recognized header (bad magic or version)."""


class CorruptionError(SpikemagError):
    """Header parsed but the payload is truncated or inconsistent."""


class BoundsError(SpikemagError, IndexError):
    """An index lies outside the valid range."""


class ShapeError(SpikemagError, ValueError):
    """Tensor or frame shapes are incompatible."""


class ConfigurationError(SpikemagError, ValueError):
    """A configuration value violates a module precondition."""


class DegenerateInputError(SpikemagError):
    """Input carries no usable signal (e.g. an all-silent stream)."""


class DegenerateClusteringError(SpikemagError):
    """Fewer distinct values than requested clusters."""


class MeasurementError(SpikemagError):
    """A measurement oracle found no structure to measure."""


class InputError(SpikemagError, ValueError):
    """Too few inputs for the requested reduction."""
