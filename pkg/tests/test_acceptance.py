"""Statistical comparisons of the three schemes over the default SNR sweep.

Threshold decoder, Rayleigh block fading, M = 3, rate 1.2 bits/symbol and
10^4 messages per grid point. Seeds are fixed so every run is identical.
"""
import unittest
from typing import List

from nharqsim.models import ChannelKind, ChannelModel, MetricsRow, Scheme, SimConfig
from nharqsim.services import ber_confidence_interval, sweep

GRID = tuple(float(x) for x in range(4, 15))
MESSAGES = 10_000


def _sweep(scheme: Scheme) -> List[MetricsRow]:
    return sweep(SimConfig(
        scheme=scheme,
        snr_db_grid=GRID,
        alpha2=0.2,
        max_rounds=3,
        frames=MESSAGES,
        channel=ChannelModel(ChannelKind.RAYLEIGH_BLOCK),
        seed=2024,
    ))


class TestSchemeComparison(unittest.TestCase):
    """Type-I vs chase combining vs superimposed chase combining."""

    @classmethod
    def setUpClass(cls) -> None:
        cls.type1 = _sweep(Scheme.TYPE1)
        cls.cc = _sweep(Scheme.HARQ_CC)
        cls.ncc = _sweep(Scheme.N_HARQ_CC)

    def test_chase_combining_beats_type1_ber(self) -> None:
        """Combining never loses to discarding copies, at 95% confidence."""
        for t1, cc in zip(self.type1, self.cc):
            t1_low, t1_high = ber_confidence_interval(t1.errored_bits, t1.total_bits)
            cc_low, _ = ber_confidence_interval(cc.errored_bits, cc.total_bits)
            self.assertLessEqual(cc_low, t1_high, msg=f"{t1.snr_db} dB")
            if t1.ber > 0.01:
                self.assertLessEqual(cc.ber, t1.ber, msg=f"{t1.snr_db} dB")

    def test_chase_combining_ber_falls_with_snr(self) -> None:
        """No statistically significant rise from one grid point to the next."""
        for lower, higher in zip(self.cc, self.cc[1:]):
            _, high_at_lower = ber_confidence_interval(lower.errored_bits, lower.total_bits)
            low_at_higher, _ = ber_confidence_interval(higher.errored_bits, higher.total_bits)
            self.assertLessEqual(low_at_higher, high_at_lower, msg=f"{higher.snr_db} dB")
        self.assertLess(self.cc[-1].ber, self.cc[0].ber)

    def test_superposition_gains_spectral_efficiency_at_moderate_snr(self) -> None:
        """The SE gain peaks inside the grid and shrinks towards high SNR."""
        gains = [n.se - c.se for n, c in zip(self.ncc, self.cc)]
        peak = max(gains)
        self.assertGreaterEqual(peak, 0.08)
        self.assertLess(gains.index(peak), len(gains) - 1)
        self.assertLess(gains[-1], peak)

    def test_superposition_uses_shared_rounds(self) -> None:
        """Retransmission rounds carry a second message, so fewer rounds per message."""
        for n, c in zip(self.ncc, self.cc):
            self.assertGreater(n.rm_rounds, 0, msg=f"{n.snr_db} dB")
            self.assertEqual(c.rm_rounds, 0)
        self.assertTrue(any(n.sic_failures > 0 for n in self.ncc))

    def test_se_saturates_at_the_rate(self) -> None:
        for row in self.type1 + self.cc + self.ncc:
            self.assertLessEqual(row.se, 2 * 1.2)
        self.assertGreater(self.cc[-1].se, 1.0)


if __name__ == '__main__':
    unittest.main()
