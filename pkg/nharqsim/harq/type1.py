"""Baseline engines sending one message at a time at full power."""
from abc import abstractmethod
from typing import List, Tuple

from ..models import Ack, Feedback, MessageContext, RoundRecord, Scheme, Transmission
from .base import HarqEngine
from .scheduler import schedule_single


class SingleMessageEngine(HarqEngine):
    """Repeats the current message until ACK or the round limit."""

    def parts(self, tx: Transmission) -> List[Tuple[MessageContext, float]]:
        assert self.state.new is not None
        return [(self.state.new, self.link.power ** 0.5)]

    def schedule(self, fb: Feedback) -> Transmission:
        return schedule_single(self.state, fb)

    @abstractmethod
    def decode_window(self, message: MessageContext) -> List[RoundRecord]:
        pass

    def receive_round(self, record: RoundRecord) -> Feedback:
        message = self.state.new
        assert message is not None
        outcome = self.decoder.decode(message, self.decode_window(message))
        if outcome.bit_errors is not None:
            message.bit_errors = outcome.bit_errors
        return Feedback(new_ack=Ack.ACK if outcome.success else Ack.NACK)


class Type1Engine(SingleMessageEngine):
    """Failed copies are discarded; each round is decoded on its own."""

    scheme = Scheme.TYPE1

    def decode_window(self, message: MessageContext) -> List[RoundRecord]:
        return [self.records[message.copies[-1]]]
