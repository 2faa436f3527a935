"""
Data models shared by the channel, phy, harq and simulation layers.
"""
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Any, List, Optional, Tuple

import numpy as np
import numpy.typing as npt

from . import config
from .errors import ConfigError, InvariantViolation, UnknownMessageError
from .framing import FrameConfig

SymbolBlock = npt.NDArray[np.complex128]


class ChannelKind(Enum):
    AWGN_FIXED = "awgn-fixed"
    RAYLEIGH_BLOCK = "rayleigh-block"


class Mode(Enum):
    ITM = "ITM"
    RM = "RM"


class Ack(Enum):
    ACK = "ACK"
    NACK = "NACK"


class MessageStatus(Enum):
    PENDING = "pending"
    DELIVERED = "delivered"
    ABANDONED = "abandoned"


class DecoderKind(Enum):
    THRESHOLD = "threshold"
    BITLEVEL = "bitlevel"


class Scheme(Enum):
    TYPE1 = "type1"
    HARQ_CC = "harq-cc"
    N_HARQ_CC = "n-harq-cc"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


class AbandonedScoring(Enum):
    """How abandoned frames enter the BER numerator."""
    LOST = "lost"          # every payload bit counted as an error
    EXCLUDE = "exclude"    # left out of numerator and denominator
    MEASURED = "measured"  # errors of the last hard decision (bit-level only)


@dataclass(frozen=True)
class ChannelModel:
    kind: ChannelKind = ChannelKind.AWGN_FIXED
    mean_square_gain: float = 1.0

    def __post_init__(self) -> None:
        if not self.mean_square_gain > 0:
            raise ConfigError(f"mean_square_gain must be positive, got {self.mean_square_gain}")


@dataclass(frozen=True)
class Constituent:
    """One message superimposed in a round, at its transmit amplitude."""
    message_id: int
    amplitude: float
    cancelled: bool = False


@dataclass(frozen=True)
class RoundRecord:
    """Everything the receiver keeps about one HARQ round.

    `y` is None when the decoder works from SINR alone and no samples are drawn.
    """
    index: int
    h: complex
    constituents: Tuple[Constituent, ...]
    y: Optional[SymbolBlock] = None

    def __post_init__(self) -> None:
        if not 1 <= len(self.constituents) <= 2:
            raise InvariantViolation(
                f"Round {self.index} carries {len(self.constituents)} messages; at most two may be superimposed"
            )

    def constituent(self, message_id: int) -> Constituent:
        for c in self.constituents:
            if c.message_id == message_id:
                return c
        raise UnknownMessageError(f"Message {message_id} is not part of round {self.index}")

    def interferers(self, message_id: int) -> List[Constituent]:
        """Constituents other than `message_id` that are still in `y`."""
        return [c for c in self.constituents if c.message_id != message_id and not c.cancelled]

    def with_cancelled(self, message_id: int, y: Optional[SymbolBlock]) -> "RoundRecord":
        constituents = tuple(
            replace(c, cancelled=True) if c.message_id == message_id else c
            for c in self.constituents
        )
        return replace(self, constituents=constituents, y=y)


@dataclass(frozen=True)
class SinrResult:
    gamma: float
    window: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if math.isnan(self.gamma) or self.gamma < 0:
            raise InvariantViolation(f"SINR must be non-negative, got {self.gamma}")


@dataclass(frozen=True)
class Feedback:
    new_ack: Ack
    old_ack: Optional[Ack] = None


@dataclass(frozen=True)
class Transmission:
    """Which messages go out next. ITM carries only `new`."""
    mode: Mode
    new: int
    old: Optional[int] = None

    def __str__(self) -> str:
        if self.mode is Mode.ITM:
            return f"ITM(x{self.new})"
        return f"RM(x{self.old}, x{self.new})"


@dataclass
class MessageContext:
    """Per-message protocol bookkeeping.

    `copies` holds the indices of the rounds the message occupied.
    `uncancellable_id`/`sic_failure_round` bookmark an abandoned message that
    stays as interference in rounds up to and including `sic_failure_round`.
    """
    id: int
    first_round: int = 0
    rounds_used: int = 0
    copies: List[int] = field(default_factory=list)
    status: MessageStatus = MessageStatus.PENDING
    sic_failure_round: Optional[int] = None
    uncancellable_id: Optional[int] = None
    payload: Optional[bytes] = None
    symbols: Optional[SymbolBlock] = None
    bit_errors: Optional[int] = None

    @property
    def pending(self) -> bool:
        return self.status is MessageStatus.PENDING


@dataclass
class HarqEngineState:
    max_rounds: int
    mode: Mode = Mode.ITM
    old: Optional[MessageContext] = None
    new: Optional[MessageContext] = None
    next_seq: int = 0
    next_round: int = 0

    def active(self) -> List[MessageContext]:
        return [m for m in (self.old, self.new) if m is not None]

    def check_invariants(self) -> None:
        active = self.active()
        if self.mode is Mode.ITM and (self.old is not None or self.new is None):
            raise InvariantViolation("ITM must carry exactly one message")
        if self.mode is Mode.RM:
            if self.old is None or self.new is None:
                raise InvariantViolation("RM must carry exactly two messages")
            if not self.old.id < self.new.id:
                raise InvariantViolation(f"RM pair out of order: old x{self.old.id}, new x{self.new.id}")
        for m in active:
            if m.rounds_used > self.max_rounds:
                raise InvariantViolation(f"x{m.id} used {m.rounds_used} rounds, limit is {self.max_rounds}")


@dataclass(frozen=True)
class DecoderModel:
    kind: DecoderKind = DecoderKind.THRESHOLD
    rate_bits_per_symbol: float = config.RATE_BITS_PER_SYMBOL

    def __post_init__(self) -> None:
        if not self.rate_bits_per_symbol > 0:
            raise ConfigError(f"rate must be positive, got {self.rate_bits_per_symbol}")

    @classmethod
    def from_frame_config(cls, frame_cfg: FrameConfig,
                          kind: DecoderKind = DecoderKind.THRESHOLD) -> "DecoderModel":
        """Rate implied by the frame: payload bits per transmitted symbol."""
        return cls(kind=kind, rate_bits_per_symbol=frame_cfg.payload_bits / frame_cfg.symbols_per_frame)


@dataclass(frozen=True)
class MessageOutcome:
    id: int
    status: MessageStatus
    rounds_used: int
    bit_errors: Optional[int] = None


@dataclass(frozen=True)
class SimConfig:
    scheme: Scheme = Scheme.N_HARQ_CC
    snr_db_grid: Tuple[float, ...] = (4.0,)
    alpha2: float = config.ALPHA2
    max_rounds: int = config.MAX_ROUNDS
    frames: int = config.FRAMES
    decoder: DecoderModel = field(default_factory=DecoderModel)
    channel: ChannelModel = field(default_factory=ChannelModel)
    frame_cfg: FrameConfig = field(default_factory=FrameConfig)
    seed: int = config.SEED
    eq7_constant_amplitude: bool = False
    abandoned: AbandonedScoring = AbandonedScoring.LOST
    trials: int = 1
    workers: int = 1

    def __post_init__(self) -> None:
        if not self.snr_db_grid:
            raise ConfigError("SNR grid is empty")
        if not 0 < self.alpha2 < 0.5:
            raise ConfigError(
                f"alpha2={self.alpha2} out of range (0, 0.5): the old packet may not "
                "receive as much power as the new packet, which is decoded first"
            )
        if self.max_rounds < 1:
            raise ConfigError(f"max_rounds must be at least 1, got {self.max_rounds}")
        if self.frames < 1:
            raise ConfigError(f"frames must be at least 1, got {self.frames}")
        if not 1 <= self.trials <= self.frames:
            raise ConfigError(f"trials must be between 1 and frames, got {self.trials}")
        if self.workers < 1:
            raise ConfigError(f"workers must be at least 1, got {self.workers}")
        if not 0 <= self.seed < 2**64:
            raise ConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.eq7_constant_amplitude and self.decoder.kind is not DecoderKind.THRESHOLD:
            raise ConfigError("constant-amplitude old-message SINR is defined for the threshold decoder only")

    @property
    def symbols_per_round(self) -> float:
        """Symbols one round occupies.

        Bit-level runs send real frames; threshold runs send an abstract codeword
        carrying the payload at the decoder's rate.
        """
        if self.decoder.kind is DecoderKind.BITLEVEL:
            return float(self.frame_cfg.symbols_per_frame)
        return self.frame_cfg.payload_bits / self.decoder.rate_bits_per_symbol


@dataclass(frozen=True)
class MetricsRow:
    scheme: Scheme
    snr_db: float
    ber: float
    se: float
    avg_rounds: float
    abandon_rate: float
    frames: int
    seed: int
    # Raw counts behind the ratios; not part of the emitted record
    errored_bits: int = 0
    total_bits: int = 0
    delivered: int = 0
    abandoned: int = 0
    rounds: int = 0
    rm_rounds: int = 0
    sic_failures: int = 0

    def as_record(self) -> dict[str, Any]:
        """Emitted fields, in output column order."""
        return {
            "scheme": self.scheme.value,
            "snr_db": self.snr_db,
            "ber": self.ber,
            "se": self.se,
            "avg_rounds": self.avg_rounds,
            "abandon_rate": self.abandon_rate,
            "frames": self.frames,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class OutputSpec:
    path: str = config.STDOUT_SENTINEL
    format: OutputFormat = OutputFormat.CSV

    @property
    def to_stdout(self) -> bool:
        return self.path == config.STDOUT_SENTINEL
