"""PN9 data whitening (x^9 + x^5 + 1, all-ones seed, restarted per frame)."""
from functools import lru_cache

import numpy as np
import numpy.typing as npt

PN9_PERIOD: int = 511
PN9_SEED: int = 0x1FF


@lru_cache(maxsize=1)
def _pn9_period() -> bytes:
    state = PN9_SEED
    out = bytearray()
    for _ in range(PN9_PERIOD):
        out.append(state & 1)
        feedback = (state ^ (state >> 5)) & 1
        state = (state >> 1) | (feedback << 8)
    return bytes(out)


def pn9_sequence(length: int) -> npt.NDArray[np.uint8]:
    """First `length` bits of the PN9 sequence."""
    period = np.frombuffer(_pn9_period(), dtype=np.uint8)
    reps = -(-length // PN9_PERIOD)
    return np.tile(period, max(reps, 0))[:length].copy()


def whiten(bits: npt.ArrayLike) -> npt.NDArray[np.uint8]:
    """XOR with PN9. Applying it twice returns the input."""
    arr = np.asarray(bits, dtype=np.uint8)
    return arr ^ pn9_sequence(arr.size)
