"""Binary spike stream container and its bit-exact on-disk format.

A stream is an H x W x T field of single-bit events. On disk: a fixed
header followed by one bit-packed frame per timestep, row-major,
MSB-first within each byte, unused trailing bits zero.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

import numpy as np

from .errors import BoundsError, ConfigurationError, CorruptionError, FormatError

MAGIC = b"SPKM"
VERSION = 1
_HEADER = struct.Struct("<4sIIIQI")  # magic, version, height, width, length, rate_hz
HEADER_SIZE = _HEADER.size


@dataclass
class SpikeStream:
    """Immutable binary spike tensor with a uniform sampling clock.

    ``bits`` is stored unpacked as a bool array of shape (length, height,
    width); packing happens only at the file boundary.
    """

    height: int
    width: int
    length: int
    rate_hz: int
    bits: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.height <= 0 or self.width <= 0 or self.length <= 0:
            raise ConfigurationError("stream dimensions must be positive")
        if self.rate_hz <= 0:
            raise ConfigurationError("rate_hz must be positive")
        bits = np.ascontiguousarray(self.bits, dtype=bool)
        if bits.shape != (self.length, self.height, self.width):
            raise ConfigurationError(
                f"bits shape {bits.shape} != {(self.length, self.height, self.width)}"
            )
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @property
    def frame_bytes(self) -> int:
        return (self.height * self.width + 7) // 8

    def spike_at(self, x: int, y: int, t: int) -> int:
        """Return the stored bit at column x, row y, timestep t."""
        if not (0 <= x < self.width and 0 <= y < self.height and 0 <= t < self.length):
            raise BoundsError(f"index (x={x}, y={y}, t={t}) out of range")
        return int(self.bits[t, y, x])

    def spike_count(self) -> int:
        return int(self.bits.sum())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpikeStream):
            return NotImplemented
        return (
            (self.height, self.width, self.length, self.rate_hz)
            == (other.height, other.width, other.length, other.rate_hz)
            and bool(np.array_equal(self.bits, other.bits))
        )


def save_stream(stream: SpikeStream, path) -> None:
    """Write ``stream`` to ``path`` in the bit-packed container format."""
    header = _HEADER.pack(
        MAGIC, VERSION, stream.height, stream.width, stream.length, stream.rate_hz
    )
    # packbits is MSB-first, padding each frame's tail bits with zeros
    flat = stream.bits.reshape(stream.length, stream.height * stream.width)
    payload = np.packbits(flat, axis=1)
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(payload.tobytes())


def load_stream(path) -> SpikeStream:
    """Read a stream back; inverse of :func:`save_stream`, bit-exact."""
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < HEADER_SIZE:
        raise FormatError(f"{path}: file shorter than header")
    magic, version, height, width, length, rate_hz = _HEADER.unpack_from(raw)
    if magic != MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}")
    if version != VERSION:
        raise FormatError(f"{path}: unsupported version {version}")
    frame_bytes = (height * width + 7) // 8
    payload = raw[HEADER_SIZE:]
    if len(payload) != length * frame_bytes:
        raise CorruptionError(
            f"{path}: payload is {len(payload)} bytes, expected {length * frame_bytes}"
        )
    packed = np.frombuffer(payload, dtype=np.uint8).reshape(length, frame_bytes)
    bits = np.unpackbits(packed, axis=1)[:, : height * width]
    bits = bits.reshape(length, height, width).astype(bool)
    return SpikeStream(height=height, width=width, length=length, rate_hz=rate_hz, bits=bits)


def describe(stream: SpikeStream) -> str:
    """Human-readable header summary for the ``spk info`` subcommand."""
    return (
        f"magic: {MAGIC.decode()}\n"
        f"version: {VERSION}\n"
        f"height: {stream.height}\n"
        f"width: {stream.width}\n"
        f"length: {stream.length}\n"
        f"rate_hz: {stream.rate_hz}\n"
        f"spikes: {stream.spike_count()}\n"
    )
