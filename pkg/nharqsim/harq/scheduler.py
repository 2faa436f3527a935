"""Round-by-round scheduling decisions.

N-HARQ-CC pairs a failed message with a fresh one in retransmission mode:

    old/new feedback   next round
    NACK / NACK        RM(old, new)
    ACK  / NACK        RM(new, fresh)
    NACK / ACK         RM(old, fresh)
    ACK  / ACK         ITM(fresh)

An ITM NACK opens RM(sole, fresh); an ITM ACK moves on to ITM(fresh). A NACK
on a message's last allowed round abandons it. If the abandoned message shares
rounds with a surviving one, the survivor is bookmarked as carrying
uncancellable interference up to the abandoned message's last round.
"""
import logging

from ..errors import FeedbackMismatchError, InvariantViolation
from ..models import (
    Ack,
    Feedback,
    HarqEngineState,
    MessageContext,
    MessageStatus,
    Mode,
    Transmission,
)

logger = logging.getLogger(__name__)


def initial_state(max_rounds: int) -> HarqEngineState:
    """ITM state holding message 0."""
    state = HarqEngineState(max_rounds=max_rounds)
    state.new = _fresh(state)
    return state


def _fresh(state: HarqEngineState) -> MessageContext:
    ctx = MessageContext(id=state.next_seq, first_round=state.next_round)
    state.next_seq += 1
    return ctx


def current_transmission(state: HarqEngineState) -> Transmission:
    if state.new is None:
        raise InvariantViolation("No message is scheduled")
    if state.mode is Mode.ITM:
        return Transmission(Mode.ITM, state.new.id)
    assert state.old is not None
    return Transmission(Mode.RM, state.new.id, state.old.id)


def begin_round(state: HarqEngineState) -> Transmission:
    """Book the next round on every active message and return what it carries."""
    state.check_invariants()
    for m in state.active():
        if m.rounds_used >= state.max_rounds:
            raise InvariantViolation(f"x{m.id} scheduled beyond {state.max_rounds} rounds")
        m.rounds_used += 1
        m.copies.append(state.next_round)
    state.next_round += 1
    return current_transmission(state)


def _check_feedback(state: HarqEngineState, fb: Feedback) -> None:
    if state.mode is Mode.RM and fb.old_ack is None:
        raise FeedbackMismatchError("RM round needs feedback for both messages")
    if state.mode is Mode.ITM and fb.old_ack is not None:
        raise FeedbackMismatchError("ITM round carries one message but got feedback for two")


def _settle(m: MessageContext, ack: Ack, max_rounds: int) -> None:
    if ack is Ack.ACK:
        m.status = MessageStatus.DELIVERED
    elif m.rounds_used >= max_rounds:
        m.status = MessageStatus.ABANDONED
        logger.debug("x%d abandoned after %d rounds", m.id, m.rounds_used)


def _bookmark(survivor: MessageContext, abandoned: MessageContext) -> None:
    if survivor.uncancellable_id is not None:
        raise InvariantViolation(
            f"x{survivor.id} already carries abandoned x{survivor.uncancellable_id}; "
            f"x{abandoned.id} would be a second uncancellable interferer"
        )
    survivor.uncancellable_id = abandoned.id
    survivor.sic_failure_round = abandoned.copies[-1]
    logger.debug("SIC failure: x%d keeps x%d in rounds up to %d",
                 survivor.id, abandoned.id, survivor.sic_failure_round)


def schedule_next(state: HarqEngineState, fb: Feedback) -> Transmission:
    """Apply the feedback of the round just sent and decide the next one.

    Terminated messages drop out of `state`; the caller keeps its own
    references if it needs their final status.
    """
    _check_feedback(state, fb)
    assert state.new is not None

    if state.mode is Mode.ITM:
        sole = state.new
        _settle(sole, fb.new_ack, state.max_rounds)
        if sole.pending:
            state.mode = Mode.RM
            state.old = sole
        state.new = _fresh(state)
        return current_transmission(state)

    old, new = state.old, state.new
    assert old is not None and fb.old_ack is not None
    _settle(old, fb.old_ack, state.max_rounds)
    _settle(new, fb.new_ack, state.max_rounds)

    if old.pending and new.pending:
        pass
    elif new.pending:
        if old.status is MessageStatus.ABANDONED:
            _bookmark(new, old)
        state.old, state.new = new, _fresh(state)
    elif old.pending:
        # New message delivered (or abandoned first); the old one takes a fresh partner
        if new.status is MessageStatus.ABANDONED:
            _bookmark(old, new)
        state.new = _fresh(state)
    else:
        state.mode = Mode.ITM
        state.old = None
        state.new = _fresh(state)
    return current_transmission(state)


def schedule_single(state: HarqEngineState, fb: Feedback) -> Transmission:
    """One message at a time: repeat it until ACK or the round limit."""
    _check_feedback(state, fb)
    assert state.new is not None
    _settle(state.new, fb.new_ack, state.max_rounds)
    if not state.new.pending:
        state.new = _fresh(state)
    return current_transmission(state)
