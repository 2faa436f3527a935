"""Link-level simulator for non-orthogonal HARQ with chase combining."""
__version__ = "0.1.0"
