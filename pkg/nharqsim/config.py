import os

# Frame and experiment defaults
PAYLOAD_BITS: int = 200
FRAMES: int = int(os.environ.get("NHARQSIM_FRAMES", "1757"))
ALPHA2: float = 0.2
MAX_ROUNDS: int = 3
SNR_GRID: str = "4:14:1"  # start:stop:step in dB
SEED: int = 0

# Threshold decoder operating point: QPSK (2 bits/symbol) x RS rate ~0.6
RATE_BITS_PER_SYMBOL: float = 1.2

# Grid points and trials fan out over this many processes (1 = serial)
WORKERS: int = int(os.environ.get("NHARQSIM_WORKERS", "1"))

# Serialization
FLOAT_DIGITS: int = 10
STDOUT_SENTINEL: str = "-"

# Debug mode - writes DEBUG records of every module to a log file
DEBUG_MODE: bool = os.environ.get("NHARQSIM_DEBUG", "0") == "1"
DEBUG_LOG_PATH: str = os.path.expanduser(
    os.environ.get("NHARQSIM_DEBUG_LOG", "~/.local/share/nharqsim_debug.log")
)
