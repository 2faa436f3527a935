"""Rayleigh block fading: CN(0, g) per round, independent across rounds."""
import numpy as np
import numpy.typing as npt

from .base import ChannelBase
from .rng import RngStream


class RayleighBlockChannel(ChannelBase):

    def __init__(self, mean_square_gain: float = 1.0) -> None:
        self.mean_square_gain = mean_square_gain

    @property
    def name(self) -> str:
        return f"rayleigh-block(g={self.mean_square_gain})"

    def sample_block(self, rng: RngStream, n: int) -> npt.NDArray[np.complex128]:
        return rng.complex_normal(n, self.mean_square_gain)
