"""Maximum ratio combining and successive interference cancellation."""
from typing import Optional, Sequence

import numpy as np

from ..errors import (
    DoubleCancellationError,
    EmptyWindowError,
    LengthMismatchError,
    ZeroNormError,
)
from ..models import RoundRecord, SymbolBlock


def mrc_combine(records: Sequence[RoundRecord]) -> SymbolBlock:
    """sum(conj(h_i) * y_i) / sum(|h_i|^2), per sample.

    Plain conjugate weights are used even when a message's amplitude differs
    between rounds.
    """
    if not records:
        raise EmptyWindowError("MRC needs at least one round")
    lengths = {len(r.y) for r in records if r.y is not None}
    if any(r.y is None for r in records) or len(lengths) != 1:
        raise LengthMismatchError("MRC needs received samples of equal length in every round")

    h = np.array([r.h for r in records], dtype=np.complex128)
    norm2 = float(np.sum(np.abs(h) ** 2))
    if norm2 == 0.0:
        raise ZeroNormError("Channel norm of the combining window is zero")
    stacked = np.stack([r.y for r in records])
    return (np.conj(h) @ stacked) / norm2


def sic_cancel(record: RoundRecord, message_id: int,
               known_symbols: Optional[SymbolBlock]) -> RoundRecord:
    """Subtract a decoded message's contribution h * amplitude * x from a round.

    Records without samples (threshold decoding) only get the cancelled flag.
    """
    constituent = record.constituent(message_id)
    if constituent.cancelled:
        raise DoubleCancellationError(f"x{message_id} already cancelled from round {record.index}")

    y = record.y
    if y is not None:
        if known_symbols is None or len(known_symbols) != len(y):
            raise LengthMismatchError(
                f"Round {record.index} needs {len(y)} known symbols to cancel x{message_id}"
            )
        y = y - record.h * constituent.amplitude * np.asarray(known_symbols)
    return record.with_cancelled(message_id, y)
