"""Frame codec: CRC-32, whitening, FEC, fixed-format headers."""
from .crc import crc32
from .fec import FecCodec, FecScheme, fec_decode, fec_encode, get_codec
from .frame import (
    Frame,
    FrameConfig,
    ParsedFrame,
    ParseFailure,
    build_frame,
    extract_payload_bits,
    parse_frame,
)
from .whitening import pn9_sequence, whiten

__all__ = [
    "crc32", "whiten", "pn9_sequence",
    "FecCodec", "FecScheme", "fec_encode", "fec_decode", "get_codec",
    "Frame", "FrameConfig", "ParsedFrame", "ParseFailure",
    "build_frame", "parse_frame", "extract_payload_bits",
]
