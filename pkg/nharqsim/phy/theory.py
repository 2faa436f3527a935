"""Analytic reference curves used to calibrate the simulator."""
import math

import numpy as np
from scipy.special import erfc


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def qpsk_bit_error_probability(es_n0: float) -> float:
    """Gray QPSK bit error rate in AWGN: Q(sqrt(Es/N0))."""
    return float(0.5 * erfc(np.sqrt(es_n0) / math.sqrt(2.0)))


def rayleigh_outage_probability(power: float, rate: float, mean_square_gain: float = 1.0) -> float:
    """P[log2(1 + P|h|^2) < rate] for one Rayleigh round."""
    if power <= 0:
        return 1.0
    return 1.0 - math.exp(-(2.0 ** rate - 1.0) / (power * mean_square_gain))
