"""Table-driven CRC-32 (IEEE 802.3, reflected)."""
from functools import lru_cache
from typing import Iterable, List

CRC32_POLY_REFLECTED: int = 0xEDB88320  # 0x04C11DB7 bit-reversed
CRC32_INIT: int = 0xFFFFFFFF
CRC32_XOR_OUT: int = 0xFFFFFFFF


@lru_cache(maxsize=1)
def crc32_table() -> List[int]:
    """256-entry lookup table for the reflected polynomial."""
    table: List[int] = []
    for i in range(0x100):
        c = i
        for _ in range(8):
            c = (c >> 1) ^ CRC32_POLY_REFLECTED if (c & 1) else c >> 1
        table.append(c & 0xFFFFFFFF)
    return table


def crc32(data: Iterable[int]) -> int:
    """Standard CRC-32 checksum of a byte sequence."""
    table = crc32_table()
    crc = CRC32_INIT
    for byte in bytes(data):
        crc = (crc >> 8) ^ table[(crc ^ byte) & 0xFF]
    return crc ^ CRC32_XOR_OUT
