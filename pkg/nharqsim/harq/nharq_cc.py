"""N-HARQ-CC engine: a failed message's retransmission is superimposed with a fresh one."""
import logging
from dataclasses import replace
from typing import List, Optional, Sequence, Tuple

from ..channel import RngStream
from ..errors import InvariantViolation
from ..events import EventBus
from ..models import (
    Ack,
    Feedback,
    MessageContext,
    Mode,
    RoundRecord,
    Scheme,
    SimConfig,
    SymbolBlock,
    Transmission,
)
from ..phy import sic_cancel
from .base import HarqEngine
from .scheduler import schedule_next

logger = logging.getLogger(__name__)


class NHarqCCEngine(HarqEngine):
    """
    ITM rounds carry one message at full power. RM rounds carry the old
    message at amplitude alpha*sqrt(P) and the new one at sqrt((1-alpha^2)P).

    The receiver decodes the new message first over all its copies, cancels
    it wherever it is stored, then decodes the old message. A new-message
    failure NACKs both.
    """

    scheme = Scheme.N_HARQ_CC

    def __init__(self, cfg: SimConfig, snr_db: float, rng: RngStream,
                 events: Optional[EventBus] = None) -> None:
        super().__init__(cfg, snr_db, rng, events)
        self.spec = self.link.superposition

    def parts(self, tx: Transmission) -> List[Tuple[MessageContext, float]]:
        state = self.state
        assert state.new is not None
        if tx.mode is Mode.ITM:
            return [(state.new, self.spec.amplitude_full)]
        assert state.old is not None
        return [(state.old, self.spec.amplitude_old), (state.new, self.spec.amplitude_new)]

    def schedule(self, fb: Feedback) -> Transmission:
        return schedule_next(self.state, fb)

    def receive_round(self, record: RoundRecord) -> Feedback:
        state = self.state
        assert state.new is not None
        if state.mode is Mode.ITM:
            return Feedback(new_ack=self._attempt(state.new, self.window(state.new)))

        old, new = state.old, state.new
        assert old is not None
        new_ack = self._attempt(new, self.window(new))
        if new_ack is Ack.NACK:
            # The old message sits under the new one; nothing to cancel yet
            return Feedback(new_ack=Ack.NACK, old_ack=Ack.NACK)
        old_ack = self._attempt(old, self._old_window(old))
        return Feedback(new_ack=new_ack, old_ack=old_ack)

    def _attempt(self, message: MessageContext, records: Sequence[RoundRecord]) -> Ack:
        self._check_window(message, records)
        outcome = self.decoder.decode(message, records)
        if outcome.bit_errors is not None:
            message.bit_errors = outcome.bit_errors
        if not outcome.success:
            return Ack.NACK
        self._cancel_everywhere(message.id, outcome.symbols)
        return Ack.ACK

    def _cancel_everywhere(self, message_id: int, symbols: Optional[SymbolBlock]) -> None:
        for index, record in self.records.items():
            if any(c.message_id == message_id and not c.cancelled for c in record.constituents):
                self.records[index] = sic_cancel(record, message_id, symbols)

    def _check_window(self, message: MessageContext, records: Sequence[RoundRecord]) -> None:
        stuck = {
            c.message_id
            for r in records
            for c in r.interferers(message.id)
            if c.message_id in self.abandoned_ids
        }
        if len(stuck) > 1:
            raise InvariantViolation(
                f"x{message.id} window holds {len(stuck)} abandoned interferers: {sorted(stuck)}"
            )

    def _old_window(self, old: MessageContext) -> List[RoundRecord]:
        records = self.window(old)
        if not self.cfg.eq7_constant_amplitude:
            return records
        # Closed-form view: old at alpha*sqrt(P) throughout, leftovers at the new-message amplitude
        return [
            replace(r, constituents=tuple(
                replace(c, amplitude=self.spec.amplitude_old if c.message_id == old.id
                        else self.spec.amplitude_new)
                for c in r.constituents
            ))
            for r in records
        ]
