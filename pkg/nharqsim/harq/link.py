"""Transmit side of one trial: payloads, frames, per-round channel and noise."""
from typing import Sequence, Tuple

from ..channel import RngStream, add_noise, get_channel
from ..framing import build_frame
from ..models import Constituent, DecoderKind, MessageContext, RoundRecord, SimConfig
from ..phy import SuperpositionSpec, db_to_linear, qpsk_modulate, superimpose


class Link:
    """Draws everything random in a trial from a single stream.

    Threshold runs only need channel coefficients; bit-level runs also carry
    payloads, frames and noisy samples.
    """

    def __init__(self, cfg: SimConfig, snr_db: float, rng: RngStream) -> None:
        self.cfg = cfg
        self.power = db_to_linear(snr_db)
        self.rng = rng
        self.channel = get_channel(cfg.channel)
        self.superposition = SuperpositionSpec.from_alpha2(cfg.alpha2, self.power)
        self.with_samples = cfg.decoder.kind is DecoderKind.BITLEVEL
        self.symbols_per_round = cfg.symbols_per_round

    def prepare(self, message: MessageContext) -> None:
        """Draw a payload and modulate the frame for a message about to be sent."""
        if not self.with_samples or message.symbols is not None:
            return
        fc = self.cfg.frame_cfg
        message.payload = self.rng.bytes(fc.payload_bytes)
        frame = build_frame(message.payload, fc, seq=message.id, round_index=message.first_round)
        message.symbols = qpsk_modulate(frame.encoded_bits)

    def transmit(self, index: int, parts: Sequence[Tuple[MessageContext, float]]) -> RoundRecord:
        """Send one round: a single message at its amplitude, or an (old, new) pair superimposed."""
        h = self.channel.sample(self.rng)
        constituents = tuple(Constituent(m.id, amplitude) for m, amplitude in parts)
        if not self.with_samples:
            return RoundRecord(index=index, h=h, constituents=constituents)

        if len(parts) == 2:
            (old, _), (new, _) = parts
            assert old.symbols is not None and new.symbols is not None
            x = superimpose(old.symbols, new.symbols, self.superposition)
        else:
            (message, amplitude), = parts
            assert message.symbols is not None
            x = amplitude * message.symbols
        return RoundRecord(index=index, h=h, constituents=constituents, y=add_noise(h * x, self.rng))
