"""Seeded random streams, one per trial."""
import numpy as np
import numpy.typing as npt


class RngStream:
    """Counter-based generator keyed by (seed, stream_id).

    Streams with different ids never share state, so trials can run in any
    order or process and still draw identical sequences.
    """

    def __init__(self, seed: int, stream_id: int = 0) -> None:
        self.seed = seed
        self.stream_id = stream_id
        seq = np.random.SeedSequence(entropy=seed, spawn_key=(stream_id,))
        self.generator = np.random.Generator(np.random.Philox(seq))

    def complex_normal(self, n: int, variance: float = 1.0) -> npt.NDArray[np.complex128]:
        """n i.i.d. CN(0, variance) draws (variance/2 per real dimension)."""
        parts = self.generator.standard_normal((n, 2))
        return np.sqrt(variance / 2.0) * (parts[:, 0] + 1j * parts[:, 1])

    def bytes(self, n: int) -> bytes:
        return self.generator.integers(0, 256, size=n, dtype=np.uint8).tobytes()

    def bits(self, n: int) -> npt.NDArray[np.uint8]:
        return self.generator.integers(0, 2, size=n, dtype=np.uint8)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"
