"""Fixed unit-gain channel: only the receiver noise varies."""
import numpy as np
import numpy.typing as npt

from .base import ChannelBase
from .rng import RngStream


class FixedGainChannel(ChannelBase):

    @property
    def name(self) -> str:
        return "awgn-fixed"

    def sample_block(self, rng: RngStream, n: int) -> npt.NDArray[np.complex128]:
        return np.ones(n, dtype=np.complex128)
