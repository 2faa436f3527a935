"""Unit tests for the frame codec."""
import unittest
import zlib

import numpy as np

from nharqsim.errors import ConfigError, LengthMismatchError, PayloadLengthError
from nharqsim.framing import (
    FecScheme,
    FrameConfig,
    ParsedFrame,
    ParseFailure,
    build_frame,
    crc32,
    extract_payload_bits,
    fec_decode,
    fec_encode,
    parse_frame,
    pn9_sequence,
    whiten,
)


class TestCrc32(unittest.TestCase):
    """CRC-32 checksum."""

    def test_check_value(self) -> None:
        """The standard check string gives 0xCBF43926."""
        self.assertEqual(crc32(b"123456789"), 0xCBF43926)

    def test_empty_input(self) -> None:
        self.assertEqual(crc32(b""), 0)

    def test_matches_zlib(self) -> None:
        """Agrees with zlib on random buffers."""
        rng = np.random.default_rng(1)
        for n in (1, 7, 25, 300):
            data = rng.integers(0, 256, size=n, dtype=np.uint8).tobytes()
            self.assertEqual(crc32(data), zlib.crc32(data))

    def test_residue(self) -> None:
        """Data followed by its little-endian CRC leaves the fixed residue."""
        data = b"non-orthogonal chase combining"
        framed = data + crc32(data).to_bytes(4, "little")
        self.assertEqual(crc32(framed), 0x2144DF1C)


class TestWhitening(unittest.TestCase):
    """PN9 whitening."""

    def test_involution_on_random_frames(self) -> None:
        """Whitening twice returns the frame, for 1000 random frames."""
        rng = np.random.default_rng(2)
        for _ in range(1000):
            bits = rng.integers(0, 2, size=280, dtype=np.uint8)
            np.testing.assert_array_equal(whiten(whiten(bits)), bits)

    def test_sequence_period_and_balance(self) -> None:
        """Maximal-length sequence: period 511 with 256 ones."""
        seq = pn9_sequence(1022)
        np.testing.assert_array_equal(seq[:511], seq[511:])
        self.assertEqual(int(seq[:511].sum()), 256)

    def test_seed_starts_with_ones(self) -> None:
        """All-ones seed emits nine ones first."""
        np.testing.assert_array_equal(pn9_sequence(9), np.ones(9, dtype=np.uint8))

    def test_zero_length(self) -> None:
        self.assertEqual(pn9_sequence(0).size, 0)


class TestFec(unittest.TestCase):
    """Hard-decision FEC codecs."""

    def test_identity_passes_bits(self) -> None:
        bits = np.array([1, 0, 1, 1], dtype=np.uint8)
        np.testing.assert_array_equal(fec_encode(bits, FecScheme.IDENTITY), bits)

    def test_repetition_corrects_one_error_per_group(self) -> None:
        """One flipped copy per group is outvoted."""
        bits = np.array([1, 0, 1, 1, 0], dtype=np.uint8)
        coded = fec_encode(bits, FecScheme.REPETITION3)
        self.assertEqual(coded.size, 15)
        coded[0::3] ^= 1
        np.testing.assert_array_equal(fec_decode(coded, FecScheme.REPETITION3), bits)

    def test_repetition_rejects_partial_group(self) -> None:
        with self.assertRaises(LengthMismatchError):
            fec_decode(np.zeros(7, dtype=np.uint8), FecScheme.REPETITION3)


class TestFrame(unittest.TestCase):
    """Frame construction and parsing."""

    def setUp(self) -> None:
        self.cfg = FrameConfig()
        self.payload = bytes(range(25))

    def test_geometry(self) -> None:
        """200 payload bits plus 80 overhead bits; QPSK halves the count."""
        self.assertEqual(self.cfg.frame_bits, 280)
        self.assertEqual(self.cfg.symbols_per_frame, 140)
        rep3 = FrameConfig(fec=FecScheme.REPETITION3)
        self.assertEqual(rep3.encoded_bits, 840)
        self.assertEqual(rep3.symbols_per_frame, 420)

    def test_payload_bits_must_be_whole_bytes(self) -> None:
        with self.assertRaises(ConfigError):
            FrameConfig(payload_bits=201)

    def test_build_then_parse(self) -> None:
        """A clean frame parses back to its header fields and payload."""
        frame = build_frame(self.payload, self.cfg, seq=0x1234, round_index=300)
        parsed = parse_frame(frame.encoded_bits, self.cfg)
        self.assertEqual(parsed, ParsedFrame(seq=0x1234, round_index=300 % 256, payload=self.payload))

    def test_wrong_payload_length(self) -> None:
        with self.assertRaises(PayloadLengthError):
            build_frame(b"\x00" * 24, self.cfg, seq=0)

    def test_wrong_frame_length(self) -> None:
        with self.assertRaises(LengthMismatchError):
            parse_frame(np.zeros(279, dtype=np.uint8), self.cfg)

    def test_every_single_bit_flip_is_detected(self) -> None:
        """Sync or tail flips are header failures; the rest fail the CRC."""
        frame = build_frame(self.payload, self.cfg, seq=7, round_index=1)
        for i in range(self.cfg.encoded_bits):
            bits = frame.encoded_bits.copy()
            bits[i] ^= 1
            expected = ParseFailure.BAD_HEADER if i < 16 or i >= 272 else ParseFailure.BAD_CRC
            self.assertIs(parse_frame(bits, self.cfg), expected, msg=f"bit {i}")

    def test_extract_payload_bits_from_damaged_frame(self) -> None:
        """Payload bits come back even when the CRC fails."""
        frame = build_frame(self.payload, self.cfg, seq=3)
        bits = frame.encoded_bits.copy()
        bits[40] ^= 1  # first payload bit
        self.assertIs(parse_frame(bits, self.cfg), ParseFailure.BAD_CRC)
        recovered = extract_payload_bits(bits, self.cfg)
        sent = np.unpackbits(np.frombuffer(self.payload, dtype=np.uint8))
        self.assertEqual(int(np.sum(recovered != sent)), 1)
        self.assertNotEqual(recovered[0], sent[0])

    def test_copies_of_a_message_are_identical(self) -> None:
        """Same seq, round index and payload give the same coded bits."""
        a = build_frame(self.payload, self.cfg, seq=9, round_index=4)
        b = build_frame(self.payload, self.cfg, seq=9, round_index=4)
        np.testing.assert_array_equal(a.encoded_bits, b.encoded_bits)


if __name__ == '__main__':
    unittest.main()
