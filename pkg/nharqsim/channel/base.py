"""Base channel abstraction."""
from abc import ABC, abstractmethod

import numpy as np
import numpy.typing as npt

from .rng import RngStream


class ChannelBase(ABC):
    """Per-round channel coefficient source (block fading)."""

    @abstractmethod
    def sample_block(self, rng: RngStream, n: int) -> npt.NDArray[np.complex128]:
        """Return n independent per-round coefficients."""
        pass

    def sample(self, rng: RngStream) -> complex:
        """Coefficient for one HARQ round."""
        return complex(self.sample_block(rng, 1)[0])

    @property
    @abstractmethod
    def name(self) -> str:
        """Channel name for logging."""
        pass
