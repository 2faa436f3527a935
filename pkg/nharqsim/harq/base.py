"""
Base HARQ engine: the transmit/receive/schedule loop shared by every scheme.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from ..channel import RngStream
from ..events import Event, EventBus, OutcomeContext, RoundContext, SicFailureContext
from ..models import (
    Feedback,
    MessageContext,
    MessageOutcome,
    MessageStatus,
    Mode,
    RoundRecord,
    Scheme,
    SimConfig,
    Transmission,
)
from .decoder import Decoder, build_decoder
from .link import Link
from .scheduler import begin_round, initial_state

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TranscriptEntry:
    round_index: int
    transmission: Transmission
    feedback: Feedback


@dataclass
class EngineRun:
    """What one engine produced for one trial.

    `outcomes` holds the scored messages (ids below the requested count) in id
    order. `symbols` is the sum of the per-round symbol counts.
    """
    outcomes: List[MessageOutcome] = field(default_factory=list)
    rounds: int = 0
    rm_rounds: int = 0
    symbols: float = 0.0
    sic_failures: int = 0
    transcript: List[TranscriptEntry] = field(default_factory=list)


class HarqEngine(ABC):
    """
    One protocol instance driving one trial.

    Subclasses decide what a round carries (`parts`), how the receiver
    answers (`receive_round`) and what comes next (`schedule`). Observers
    subscribe to `events`; every engine owns its own bus.
    """

    scheme: Scheme

    def __init__(self, cfg: SimConfig, snr_db: float, rng: RngStream,
                 events: Optional[EventBus] = None) -> None:
        self.cfg = cfg
        self.snr_db = snr_db
        self.link = Link(cfg, snr_db, rng)
        self.decoder: Decoder = build_decoder(cfg.decoder, cfg.frame_cfg)
        self.events = events if events is not None else EventBus()
        self.state = initial_state(cfg.max_rounds)
        self.records: Dict[int, RoundRecord] = {}
        self.abandoned_ids: Set[int] = set()
        self._bookmarked: Set[int] = set()

    @abstractmethod
    def parts(self, tx: Transmission) -> List[Tuple[MessageContext, float]]:
        """(message, amplitude) pairs superimposed in the round about to be sent."""
        pass

    @abstractmethod
    def receive_round(self, record: RoundRecord) -> Feedback:
        """Decode what the latest round allows and report ACK/NACK."""
        pass

    @abstractmethod
    def schedule(self, fb: Feedback) -> Transmission:
        pass

    def window(self, message: MessageContext) -> List[RoundRecord]:
        """Stored rounds carrying `message`, oldest first."""
        return [self.records[i] for i in message.copies]

    def step(self) -> Tuple[Transmission, Feedback, List[MessageContext]]:
        """Send one round, collect feedback and schedule the next.

        Returns the messages that terminated in this round.
        """
        tx = begin_round(self.state)
        for m in self.state.active():
            self.link.prepare(m)

        record = self.link.transmit(self.state.next_round - 1, self.parts(tx))
        self.records[record.index] = record
        fb = self.receive_round(record)
        self.events.emit(
            Event.ROUND_TRANSMITTED,
            RoundContext(transmission=tx, record=record,
                         symbols=self.link.symbols_per_round, feedback=fb),
        )

        sent = self.state.active()
        self.schedule(fb)
        terminated = [m for m in sent if not m.pending]
        for m in terminated:
            if m.status is MessageStatus.ABANDONED:
                self.abandoned_ids.add(m.id)
        self._prune()
        return tx, fb, terminated

    def _prune(self) -> None:
        live = {i for m in self.state.active() for i in m.copies}
        for index in [i for i in self.records if i not in live]:
            del self.records[index]

    def run(self, frames: Optional[int] = None) -> EngineRun:
        """Run until messages 0 .. frames-1 have all been delivered or abandoned."""
        frames = self.cfg.frames if frames is None else frames
        result = EngineRun()
        scored: Dict[int, MessageOutcome] = {}

        while len(scored) < frames:
            tx, fb, terminated = self.step()
            result.rounds += 1
            result.rm_rounds += int(tx.mode is Mode.RM)
            result.symbols += self.link.symbols_per_round
            result.transcript.append(TranscriptEntry(self.state.next_round - 1, tx, fb))

            for m in terminated:
                outcome = MessageOutcome(m.id, m.status, m.rounds_used, m.bit_errors)
                in_scope = m.id < frames
                if in_scope:
                    scored[m.id] = outcome
                event = (Event.MESSAGE_DELIVERED if m.status is MessageStatus.DELIVERED
                         else Event.MESSAGE_ABANDONED)
                self.events.emit(event, OutcomeContext(outcome, scored=in_scope))

            for m in self.state.active():
                if m.uncancellable_id is not None and m.id not in self._bookmarked:
                    self._bookmarked.add(m.id)
                    result.sic_failures += 1
                    assert m.sic_failure_round is not None
                    self.events.emit(
                        Event.SIC_FAILURE,
                        SicFailureContext(m.id, m.uncancellable_id, m.sic_failure_round),
                    )

        result.outcomes = [scored[k] for k in sorted(scored)]
        logger.debug("%s at %.2f dB: %d messages in %d rounds (%d RM)",
                     self.scheme.value, self.snr_db, frames, result.rounds, result.rm_rounds)
        return result
