"""HARQ engines, scheduling and decode models."""
from typing import Dict, Optional, Type

from ..channel import RngStream
from ..events import EventBus
from ..models import Scheme, SimConfig
from .base import EngineRun, HarqEngine, TranscriptEntry
from .decoder import (
    BitLevelDecoder,
    DecodeOutcome,
    Decoder,
    ThresholdDecoder,
    build_decoder,
    threshold_decode,
)
from .harq_cc import HarqCCEngine
from .link import Link
from .nharq_cc import NHarqCCEngine
from .scheduler import begin_round, current_transmission, initial_state, schedule_next, schedule_single
from .type1 import SingleMessageEngine, Type1Engine

ENGINES: Dict[Scheme, Type[HarqEngine]] = {
    Scheme.TYPE1: Type1Engine,
    Scheme.HARQ_CC: HarqCCEngine,
    Scheme.N_HARQ_CC: NHarqCCEngine,
}


def get_engine(scheme: Scheme) -> Type[HarqEngine]:
    """Engine class for a scheme."""
    return ENGINES[scheme]


def run_type1_engine(cfg: SimConfig, snr_db: float, rng: RngStream,
                     frames: Optional[int] = None, events: Optional[EventBus] = None) -> EngineRun:
    return Type1Engine(cfg, snr_db, rng, events).run(frames)


def run_harqcc_engine(cfg: SimConfig, snr_db: float, rng: RngStream,
                      frames: Optional[int] = None, events: Optional[EventBus] = None) -> EngineRun:
    return HarqCCEngine(cfg, snr_db, rng, events).run(frames)


def run_nharqcc_engine(cfg: SimConfig, snr_db: float, rng: RngStream,
                       frames: Optional[int] = None, events: Optional[EventBus] = None) -> EngineRun:
    return NHarqCCEngine(cfg, snr_db, rng, events).run(frames)


__all__ = [
    "HarqEngine", "EngineRun", "TranscriptEntry", "SingleMessageEngine",
    "Type1Engine", "HarqCCEngine", "NHarqCCEngine", "ENGINES", "get_engine",
    "run_type1_engine", "run_harqcc_engine", "run_nharqcc_engine",
    "Decoder", "DecodeOutcome", "ThresholdDecoder", "BitLevelDecoder",
    "build_decoder", "threshold_decode", "Link",
    "initial_state", "begin_round", "current_transmission", "schedule_next", "schedule_single",
]
