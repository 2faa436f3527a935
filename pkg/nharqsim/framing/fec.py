"""Pluggable hard-decision FEC codecs."""
from abc import ABC, abstractmethod
from enum import Enum
from fractions import Fraction
from typing import Dict

import numpy as np
import numpy.typing as npt

from ..errors import LengthMismatchError


class FecScheme(Enum):
    IDENTITY = "identity"
    REPETITION3 = "repetition-3"


class FecCodec(ABC):
    """Abstract base for a bit-level forward error correction code."""

    @property
    @abstractmethod
    def rate(self) -> Fraction:
        """Information bits per coded bit."""

    @abstractmethod
    def encode(self, bits: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
        pass

    @abstractmethod
    def decode(self, bits: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
        pass

    def encoded_length(self, n_bits: int) -> int:
        return int(n_bits / self.rate)


class IdentityCode(FecCodec):
    """No coding; bits pass through."""

    @property
    def rate(self) -> Fraction:
        return Fraction(1)

    def encode(self, bits: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
        return bits.copy()

    def decode(self, bits: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
        return bits.copy()


class RepetitionCode(FecCodec):
    """Each bit sent `factor` times, decoded by majority vote."""

    def __init__(self, factor: int = 3) -> None:
        if factor < 1 or factor % 2 == 0:
            raise ValueError(f"Repetition factor must be odd and positive, got {factor}")
        self.factor = factor

    @property
    def rate(self) -> Fraction:
        return Fraction(1, self.factor)

    def encode(self, bits: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
        return np.repeat(bits, self.factor)

    def decode(self, bits: npt.NDArray[np.uint8]) -> npt.NDArray[np.uint8]:
        if bits.size % self.factor:
            raise LengthMismatchError(
                f"{bits.size} coded bits is not a multiple of the repetition factor {self.factor}"
            )
        votes = bits.reshape(-1, self.factor).sum(axis=1)
        return (votes > self.factor // 2).astype(np.uint8)


_CODECS: Dict[FecScheme, FecCodec] = {
    FecScheme.IDENTITY: IdentityCode(),
    FecScheme.REPETITION3: RepetitionCode(3),
}


def get_codec(scheme: FecScheme) -> FecCodec:
    """Codec instance for a scheme (codecs are stateless and shared)."""
    return _CODECS[scheme]


def fec_encode(bits: npt.ArrayLike, scheme: FecScheme) -> npt.NDArray[np.uint8]:
    return get_codec(scheme).encode(np.asarray(bits, dtype=np.uint8))


def fec_decode(bits: npt.ArrayLike, scheme: FecScheme) -> npt.NDArray[np.uint8]:
    return get_codec(scheme).decode(np.asarray(bits, dtype=np.uint8))
