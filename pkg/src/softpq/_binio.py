"""Little-endian binary readers/writers with byte-offset error reporting."""

from __future__ import annotations

import numpy as np

from .errors import FormatError


class ByteReader:
    """Sequential reader over an in-memory byte string.

    Every read checks bounds and raises FormatError naming the file path and
    the byte offset where the data ran out or went bad.
    """

    def __init__(self, data: bytes, path: str | None = None):
        self.data = data
        self.path = path
        self.offset = 0

    def fail(self, message: str) -> FormatError:
        return FormatError(message, path=self.path, offset=self.offset)

    def take(self, n: int, what: str) -> bytes:
        if self.offset + n > len(self.data):
            raise self.fail(f"truncated file: expected {n} bytes for {what}")
        chunk = self.data[self.offset : self.offset + n]
        self.offset += n
        return chunk

    def magic(self, expected: bytes) -> None:
        got = self.take(len(expected), "magic")
        if got != expected:
            self.offset -= len(expected)
            raise self.fail(f"bad magic: expected {expected!r}, found {got!r}")

    def u8(self, what: str) -> int:
        return self.take(1, what)[0]

    def u16(self, what: str) -> int:
        return int.from_bytes(self.take(2, what), "little")

    def u32(self, what: str) -> int:
        return int.from_bytes(self.take(4, what), "little")

    def array(self, dtype: str, count: int, what: str) -> np.ndarray:
        dt = np.dtype(dtype)
        raw = self.take(dt.itemsize * count, what)
        return np.frombuffer(raw, dtype=dt).copy()

    def expect_end(self) -> None:
        if self.offset != len(self.data):
            raise self.fail(f"{len(self.data) - self.offset} unexpected trailing bytes")


class ByteWriter:
    """Accumulates little-endian fields into a byte string."""

    def __init__(self):
        self.parts: list[bytes] = []

    def magic(self, value: bytes) -> None:
        self.parts.append(value)

    def u8(self, value: int) -> None:
        self.parts.append(int(value).to_bytes(1, "little"))

    def u16(self, value: int) -> None:
        self.parts.append(int(value).to_bytes(2, "little"))

    def u32(self, value: int) -> None:
        self.parts.append(int(value).to_bytes(4, "little"))

    def array(self, values: np.ndarray, dtype: str) -> None:
        self.parts.append(np.ascontiguousarray(values, dtype=np.dtype(dtype)).tobytes())

    def getvalue(self) -> bytes:
        return b"".join(self.parts)
