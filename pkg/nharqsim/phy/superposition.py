"""Power-domain superposition of an old and a new packet."""
import math
from dataclasses import dataclass

import numpy as np

from ..errors import ConfigError, LengthMismatchError
from ..models import SymbolBlock

MAX_ALPHA: float = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class SuperpositionSpec:
    """alpha is the old packet's amplitude share; power is the linear P."""
    alpha: float
    power: float

    def __post_init__(self) -> None:
        # alpha == 0 degenerates to a new-only composite
        if not 0 <= self.alpha < MAX_ALPHA:
            raise ConfigError(f"alpha must lie in [0, 1/sqrt(2)), got {self.alpha}")
        if self.power < 0:
            raise ConfigError(f"power must be non-negative, got {self.power}")

    @classmethod
    def from_alpha2(cls, alpha2: float, power: float) -> "SuperpositionSpec":
        return cls(alpha=math.sqrt(alpha2), power=power)

    @property
    def amplitude_old(self) -> float:
        return self.alpha * math.sqrt(self.power)

    @property
    def amplitude_new(self) -> float:
        return math.sqrt((1.0 - self.alpha ** 2) * self.power)

    @property
    def amplitude_full(self) -> float:
        return math.sqrt(self.power)


def superimpose(x_old: SymbolBlock, x_new: SymbolBlock, spec: SuperpositionSpec) -> SymbolBlock:
    if len(x_old) != len(x_new):
        raise LengthMismatchError(f"Cannot superimpose blocks of {len(x_old)} and {len(x_new)} symbols")
    return spec.amplitude_old * np.asarray(x_old) + spec.amplitude_new * np.asarray(x_new)
