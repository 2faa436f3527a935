"""Exception types raised across the simulator."""


class NharqError(Exception):
    """Base class for simulator errors."""


class ConfigError(NharqError, ValueError):
    """A configuration value is out of range."""


class LengthMismatchError(NharqError, ValueError):
    """Two sequences that must align have different lengths."""


class OddLengthError(NharqError, ValueError):
    """QPSK needs an even number of bits."""


class PayloadLengthError(NharqError, ValueError):
    """Payload does not match the configured frame size."""


class EmptyWindowError(NharqError, ValueError):
    """Combining was asked to work on no rounds."""


class ZeroNormError(NharqError, ValueError):
    """All channel coefficients in a window are zero."""


class UnknownMessageError(NharqError, ValueError):
    """Message is not a constituent of the round."""


class DoubleCancellationError(NharqError, ValueError):
    """Message was already cancelled from the round."""


class FeedbackMismatchError(NharqError, ValueError):
    """Feedback shape does not match the transmission mode."""


class EmptyOutcomesError(NharqError, ValueError):
    """Metrics were requested over zero messages."""


class InvariantViolation(NharqError):
    """A protocol invariant failed during a run."""


class OutputError(NharqError):
    """Results could not be written."""
