"""Fixed-length frame construction and parsing.

Layout before whitening and FEC (big-endian fields):

    sync 0x2DD4 (16) | seq (16) | round_index (8) | payload | crc32 (32) | tail 0x00 (8)

The CRC covers seq, round_index and payload. Whitening runs over the whole
frame, then the FEC codec expands it. `round_index` is the round in which the
message was first sent (mod 256), so every copy of a message is identical.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
import numpy.typing as npt

from ..errors import ConfigError, LengthMismatchError, PayloadLengthError
from .crc import crc32
from .fec import FecCodec, FecScheme, get_codec
from .whitening import whiten

SYNC_WORD: int = 0x2DD4
TAIL: int = 0x00
HEADER_BYTES: int = 5  # sync(2) + seq(2) + round_index(1)
TRAILER_BYTES: int = 5  # crc(4) + tail(1)
OVERHEAD_BITS: int = 8 * (HEADER_BYTES + TRAILER_BYTES)


@dataclass(frozen=True)
class FrameConfig:
    """Frame geometry shared by transmitter and receiver."""
    payload_bits: int = 200
    fec: FecScheme = FecScheme.IDENTITY

    def __post_init__(self) -> None:
        if self.payload_bits <= 0 or self.payload_bits % 8:
            raise ConfigError(
                f"payload_bits must be a positive multiple of 8, got {self.payload_bits}"
            )

    @property
    def payload_bytes(self) -> int:
        return self.payload_bits // 8

    @property
    def frame_bits(self) -> int:
        return self.payload_bits + OVERHEAD_BITS

    @property
    def codec(self) -> FecCodec:
        return get_codec(self.fec)

    @property
    def encoded_bits(self) -> int:
        return self.codec.encoded_length(self.frame_bits)

    @property
    def symbols_per_frame(self) -> int:
        return self.encoded_bits // 2


@dataclass(frozen=True)
class Frame:
    seq: int
    round_index: int
    payload: bytes
    encoded_bits: npt.NDArray[np.uint8]


@dataclass(frozen=True)
class ParsedFrame:
    seq: int
    round_index: int
    payload: bytes


class ParseFailure(Enum):
    BAD_HEADER = "bad-header"
    BAD_CRC = "bad-crc"


def _body(seq: int, round_index: int, payload: bytes) -> bytes:
    return (seq & 0xFFFF).to_bytes(2, "big") + bytes([round_index & 0xFF]) + payload


def build_frame(payload: bytes, cfg: FrameConfig, seq: int, round_index: int = 0) -> Frame:
    """Wrap a payload into whitened, FEC-encoded frame bits."""
    if len(payload) != cfg.payload_bytes:
        raise PayloadLengthError(
            f"Payload is {len(payload)} bytes, frame expects {cfg.payload_bytes}"
        )
    body = _body(seq, round_index, payload)
    raw = (
        SYNC_WORD.to_bytes(2, "big")
        + body
        + crc32(body).to_bytes(4, "big")
        + bytes([TAIL])
    )
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8))
    return Frame(
        seq=seq,
        round_index=round_index & 0xFF,
        payload=bytes(payload),
        encoded_bits=cfg.codec.encode(whiten(bits)),
    )


def _dewhitened_bytes(bits: npt.ArrayLike, cfg: FrameConfig) -> bytes:
    arr = np.asarray(bits, dtype=np.uint8)
    if arr.size != cfg.encoded_bits:
        raise LengthMismatchError(
            f"Frame has {arr.size} coded bits, configuration expects {cfg.encoded_bits}"
        )
    return np.packbits(whiten(cfg.codec.decode(arr))).tobytes()


def parse_frame(bits: npt.ArrayLike, cfg: FrameConfig) -> Union[ParsedFrame, ParseFailure]:
    """Undo FEC and whitening, then check header/tail and CRC.

    An invalid sync word or tail discards the frame as BAD_HEADER before the
    CRC is looked at.
    """
    raw = _dewhitened_bytes(bits, cfg)
    n = cfg.payload_bytes
    if int.from_bytes(raw[0:2], "big") != SYNC_WORD or raw[-1] != TAIL:
        return ParseFailure.BAD_HEADER

    body = raw[2:HEADER_BYTES + n]
    received_crc = int.from_bytes(raw[HEADER_BYTES + n:HEADER_BYTES + n + 4], "big")
    if crc32(body) != received_crc:
        return ParseFailure.BAD_CRC

    return ParsedFrame(
        seq=int.from_bytes(raw[2:4], "big"),
        round_index=raw[4],
        payload=bytes(raw[HEADER_BYTES:HEADER_BYTES + n]),
    )


def extract_payload_bits(bits: npt.ArrayLike, cfg: FrameConfig) -> npt.NDArray[np.uint8]:
    """Payload region of a received frame, whether or not it passes its checks."""
    raw = _dewhitened_bytes(bits, cfg)
    payload = np.frombuffer(raw[HEADER_BYTES:HEADER_BYTES + cfg.payload_bytes], dtype=np.uint8)
    return np.unpackbits(payload)
