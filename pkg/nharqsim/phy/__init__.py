"""Baseband PHY: QPSK, superposition, MRC, SIC and SINR."""
from .combining import mrc_combine, sic_cancel
from .modulation import qpsk_demodulate, qpsk_modulate
from .sinr import (
    estimate_post_mrc_sinr,
    gamma_new,
    gamma_old,
    gamma_old_sic_failure,
    sinr_general,
    sinr_grouped,
)
from .superposition import SuperpositionSpec, superimpose
from .theory import db_to_linear, qpsk_bit_error_probability, rayleigh_outage_probability

__all__ = [
    "qpsk_modulate", "qpsk_demodulate",
    "SuperpositionSpec", "superimpose",
    "mrc_combine", "sic_cancel",
    "sinr_general", "sinr_grouped", "gamma_new", "gamma_old", "gamma_old_sic_failure",
    "estimate_post_mrc_sinr",
    "db_to_linear", "qpsk_bit_error_probability", "rayleigh_outage_probability",
]
