"""Gray-mapped QPSK on the unit circle.

    00 -> (+1+1j)/sqrt2    01 -> (-1+1j)/sqrt2
    11 -> (-1-1j)/sqrt2    10 -> (+1-1j)/sqrt2

The first bit of a pair sets the sign of the quadrature part, the second the
sign of the in-phase part. A coordinate of exactly 0 decides as positive.
"""
import numpy as np
import numpy.typing as npt

from ..errors import OddLengthError
from ..models import SymbolBlock

INV_SQRT2: float = 1.0 / np.sqrt(2.0)


def qpsk_modulate(bits: npt.ArrayLike) -> SymbolBlock:
    arr = np.asarray(bits, dtype=np.int8)
    if arr.size % 2:
        raise OddLengthError(f"QPSK needs an even number of bits, got {arr.size}")
    pairs = arr.reshape(-1, 2)
    return INV_SQRT2 * ((1 - 2 * pairs[:, 1]) + 1j * (1 - 2 * pairs[:, 0])).astype(np.complex128)


def qpsk_demodulate(symbols: npt.ArrayLike) -> npt.NDArray[np.uint8]:
    """Hard quadrant decision, inverse Gray map."""
    samples = np.asarray(symbols, dtype=np.complex128)
    out = np.empty((samples.size, 2), dtype=np.uint8)
    out[:, 0] = samples.imag < 0
    out[:, 1] = samples.real < 0
    return out.reshape(-1)
