"""Receiver decode models.

The threshold decoder turns the post-MRC SINR of a window into an outage
decision. The bit-level decoder combines the received samples, demodulates
and parses the frame.
"""
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..errors import ConfigError
from ..framing import FrameConfig, ParsedFrame, build_frame, extract_payload_bits, parse_frame
from ..models import DecoderKind, DecoderModel, MessageContext, RoundRecord, SinrResult, SymbolBlock
from ..phy import mrc_combine, qpsk_demodulate, qpsk_modulate, sinr_grouped

logger = logging.getLogger(__name__)


def threshold_decode(gamma: SinrResult, rate: float) -> bool:
    """Success iff log2(1 + gamma) >= rate; the boundary counts as success."""
    if not rate > 0:
        raise ConfigError(f"rate must be positive, got {rate}")
    if math.isinf(gamma.gamma):
        return True
    return math.log2(1.0 + gamma.gamma) >= rate


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of one decode attempt.

    `symbols` is the re-modulated decoded frame, ready for cancellation.
    `bit_errors` compares the hard-decided payload with the one sent; the
    threshold decoder leaves it None.
    """
    success: bool
    gamma: Optional[float] = None
    symbols: Optional[SymbolBlock] = None
    bit_errors: Optional[int] = None


class Decoder(ABC):
    """Decodes one message from the rounds of its window."""

    @abstractmethod
    def decode(self, message: MessageContext, records: Sequence[RoundRecord]) -> DecodeOutcome:
        pass


class ThresholdDecoder(Decoder):
    def __init__(self, rate: float) -> None:
        self.rate = rate

    def sinr(self, message: MessageContext, records: Sequence[RoundRecord]) -> SinrResult:
        h = [r.h for r in records]
        a = [r.constituent(message.id).amplitude for r in records]
        interference = [
            [(c.message_id, c.amplitude) for c in r.interferers(message.id)]
            for r in records
        ]
        return sinr_grouped(h, a, interference, window=[r.index for r in records])

    def decode(self, message: MessageContext, records: Sequence[RoundRecord]) -> DecodeOutcome:
        gamma = self.sinr(message, records)
        return DecodeOutcome(success=threshold_decode(gamma, self.rate), gamma=gamma.gamma)


class BitLevelDecoder(Decoder):
    def __init__(self, frame_cfg: FrameConfig) -> None:
        self.frame_cfg = frame_cfg

    def _bit_errors(self, decided: bytes, sent: Optional[bytes]) -> Optional[int]:
        if sent is None:
            return None
        diff = np.frombuffer(decided, dtype=np.uint8) ^ np.frombuffer(sent, dtype=np.uint8)
        return int(np.unpackbits(diff).sum())

    def decode(self, message: MessageContext, records: Sequence[RoundRecord]) -> DecodeOutcome:
        bits = qpsk_demodulate(mrc_combine(records))
        parsed = parse_frame(bits, self.frame_cfg)

        if isinstance(parsed, ParsedFrame) and parsed.seq == message.id & 0xFFFF:
            frame = build_frame(parsed.payload, self.frame_cfg, parsed.seq, parsed.round_index)
            return DecodeOutcome(
                success=True,
                symbols=qpsk_modulate(frame.encoded_bits),
                bit_errors=self._bit_errors(parsed.payload, message.payload),
            )

        logger.debug("x%d failed over rounds %s: %s", message.id,
                     [r.index for r in records], getattr(parsed, "value", "wrong seq"))
        decided = np.packbits(extract_payload_bits(bits, self.frame_cfg)).tobytes()
        return DecodeOutcome(success=False, bit_errors=self._bit_errors(decided, message.payload))


def build_decoder(model: DecoderModel, frame_cfg: FrameConfig) -> Decoder:
    """Decoder implementation for a decoder model."""
    if model.kind is DecoderKind.THRESHOLD:
        return ThresholdDecoder(model.rate_bits_per_symbol)
    if model.kind is DecoderKind.BITLEVEL:
        return BitLevelDecoder(frame_cfg)
    raise ValueError(f"Unknown decoder kind: {model.kind}")
