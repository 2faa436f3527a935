"""Per-engine event system for protocol observers."""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, TypeVar

from ..models import Feedback, MessageOutcome, RoundRecord, Transmission

logger = logging.getLogger(__name__)


class Event(Enum):
    """Protocol events raised by a HARQ engine."""
    ROUND_TRANSMITTED = "round_transmitted"
    MESSAGE_DELIVERED = "message_delivered"
    MESSAGE_ABANDONED = "message_abandoned"
    SIC_FAILURE = "sic_failure"


class EventContext:
    """Base context for event handlers."""
    pass


@dataclass
class RoundContext(EventContext):
    """Passed to ROUND_TRANSMITTED handlers once the round's feedback is known."""
    transmission: Transmission
    record: RoundRecord
    symbols: float
    feedback: Optional[Feedback] = None


@dataclass
class OutcomeContext(EventContext):
    """Passed to MESSAGE_DELIVERED and MESSAGE_ABANDONED handlers."""
    outcome: MessageOutcome
    scored: bool = True


@dataclass
class SicFailureContext(EventContext):
    """An abandoned message stays in the window of a surviving one."""
    survivor_id: int
    abandoned_id: int
    last_polluted_round: int


ContextT = TypeVar('ContextT', bound=EventContext)


class EventBus:
    """Dispatcher owned by one engine; engines never share a bus."""

    def __init__(self) -> None:
        self._handlers: Dict[Event, List[Callable[[Any], None]]] = {}

    def subscribe(self, event: Event, handler: Callable[[ContextT], None]) -> None:
        """Subscribe to an event with a typed handler."""
        self._handlers.setdefault(event, []).append(handler)  # type: ignore[arg-type]

    def emit(self, event: Event, context: EventContext) -> None:
        """Emit an event to all subscribers.

        A failing handler is logged and skipped; it never aborts the run.
        """
        for handler in self._handlers.get(event, []):
            try:
                handler(context)
            except Exception:
                logger.exception("Event handler error (%s)", event.value)


__all__ = [
    "Event", "EventContext", "RoundContext", "OutcomeContext", "SicFailureContext",
    "EventBus",
]
