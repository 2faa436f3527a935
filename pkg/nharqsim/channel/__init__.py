"""Channel models, receiver noise and seeded random streams."""
import numpy as np

from ..models import ChannelKind, ChannelModel, SymbolBlock
from .awgn import FixedGainChannel
from .base import ChannelBase
from .rayleigh import RayleighBlockChannel
from .rng import RngStream


def get_channel(model: ChannelModel) -> ChannelBase:
    """Build the channel implementation for a model description."""
    if model.kind is ChannelKind.AWGN_FIXED:
        return FixedGainChannel()
    if model.kind is ChannelKind.RAYLEIGH_BLOCK:
        return RayleighBlockChannel(model.mean_square_gain)
    raise ValueError(f"Unknown channel kind: {model.kind}")


def sample_channel(model: ChannelModel, rng: RngStream) -> complex:
    """One per-round channel coefficient h_l."""
    return get_channel(model).sample(rng)


def add_noise(symbols: SymbolBlock, rng: RngStream) -> SymbolBlock:
    """Add unit-variance circularly-symmetric complex Gaussian noise."""
    samples = np.asarray(symbols, dtype=np.complex128)
    return samples + rng.complex_normal(samples.size)


__all__ = [
    "ChannelBase", "FixedGainChannel", "RayleighBlockChannel", "RngStream",
    "get_channel", "sample_channel", "add_noise",
]
