"""RIFF/WAVE reading and writing for PCM16, PCM24 and IEEE float32."""

import struct
from pathlib import Path

import numpy as np

from phase_perturbation.dsp.types import AudioBuffer, FloatArray
from phase_perturbation.errors import FormatError, UnsupportedFormat
from phase_perturbation.logging import logger
from phase_perturbation.models.records import WavMeta

PCM = 0x0001
IEEE_FLOAT = 0x0003
EXTENSIBLE = 0xFFFE

SUPPORTED = {(PCM, 16), (PCM, 24), (IEEE_FLOAT, 32)}
EXPECTED_SAMPLE_RATE = 16000


def _read_fmt_chunk(
    data: bytes, offset: int, size: int
) -> tuple[int, int, int, int, int]:
    if size < 16:
        raise FormatError(f"fmt chunk of {size} bytes is too short", offset)
    format_tag, channels, sample_rate, _byte_rate, block_align, bit_depth = (
        struct.unpack_from("<HHIIHH", data, offset)
    )

    if format_tag == EXTENSIBLE:
        if size < 40:
            raise FormatError("extensible fmt chunk is too short", offset)
        # Sub-format GUID starts 24 bytes in; its first two bytes are the tag.
        format_tag = struct.unpack_from("<H", data, offset + 24)[0]

    if channels < 1:
        raise FormatError("fmt chunk declares zero channels", offset + 2)
    if sample_rate == 0:
        raise FormatError("fmt chunk declares a zero sample rate", offset + 4)
    if (format_tag, bit_depth) not in SUPPORTED:
        raise UnsupportedFormat(
            f"format tag {format_tag:#06x} with {bit_depth}-bit samples is not "
            "supported (PCM16, PCM24, float32 only)"
        )
    if block_align != channels * bit_depth // 8:
        raise FormatError(
            f"block align {block_align} does not match {channels} x {bit_depth} bits",
            offset + 12,
        )
    return format_tag, channels, sample_rate, block_align, bit_depth


def _decode(raw: bytes, bit_depth: int) -> FloatArray:
    if bit_depth == 16:
        return np.frombuffer(raw, dtype="<i2").astype(np.float64) / 2.0**15
    if bit_depth == 24:
        triplets = np.frombuffer(raw, dtype=np.uint8).reshape(-1, 3)
        words = np.zeros((triplets.shape[0], 4), dtype=np.uint8)
        words[:, 1:] = triplets
        # The sample sits in the top three bytes; the shift sign-extends it.
        values = words.view("<i4").reshape(-1) >> 8
        return values.astype(np.float64) / 2.0**23
    return np.frombuffer(raw, dtype="<f4").astype(np.float64)


def read_wav(path: str | Path) -> tuple[AudioBuffer, WavMeta]:
    """Decode a WAV file to mono float samples.

    Integer samples are divided by ``2**(bits - 1)``; channels are averaged.

    Args:
        path: File to read.

    Returns:
        Tuple of (mono audio, header metadata).

    Raises:
        FormatError: Malformed or truncated RIFF structure, with byte offset.
        UnsupportedFormat: Codec or bit depth outside PCM16/PCM24/float32.
        OSError: The file cannot be read.
    """
    data = Path(path).read_bytes()
    if len(data) < 12:
        raise FormatError("file is shorter than a RIFF header", len(data))
    if data[:4] == b"RIFX":
        raise UnsupportedFormat("big-endian RIFX files are not supported")
    if data[:4] != b"RIFF":
        raise FormatError(f"expected 'RIFF', found {data[:4]!r}", 0)
    if data[8:12] != b"WAVE":
        raise FormatError(f"expected 'WAVE', found {data[8:12]!r}", 8)

    fmt: tuple[int, int, int, int, int] | None = None
    payload: bytes | None = None
    offset = 12
    while offset < len(data):
        if offset + 8 > len(data):
            raise FormatError("truncated chunk header", offset)
        chunk_id, size = struct.unpack_from("<4sI", data, offset)
        body = offset + 8
        if body + size > len(data):
            raise FormatError(
                f"chunk {chunk_id!r} declares {size} bytes, "
                f"only {len(data) - body} remain",
                offset + 4,
            )
        if chunk_id == b"fmt ":
            fmt = _read_fmt_chunk(data, body, size)
        elif chunk_id == b"data":
            if fmt is None:
                raise FormatError("data chunk precedes fmt chunk", offset)
            payload = data[body : body + size]
            if size % fmt[3]:
                raise FormatError(
                    f"data size {size} is not a multiple of block align {fmt[3]}",
                    offset + 4,
                )
        # Odd-sized chunks are followed by a pad byte.
        offset = body + size + (size % 2)

    if fmt is None:
        raise FormatError("no fmt chunk", len(data))
    if payload is None:
        raise FormatError("no data chunk", len(data))

    _tag, channels, sample_rate, _block_align, bit_depth = fmt
    samples = _decode(payload, bit_depth).reshape(-1, channels).mean(axis=1)
    meta = WavMeta(
        sample_rate=sample_rate,
        channels=channels,
        bit_depth=bit_depth,
        frame_count=samples.shape[0],
    )
    if sample_rate != EXPECTED_SAMPLE_RATE:
        logger.warning(
            "%s is sampled at %d Hz; mask widths are tuned for %d Hz",
            path,
            sample_rate,
            EXPECTED_SAMPLE_RATE,
        )
    return AudioBuffer(samples=samples, sample_rate=sample_rate), meta


def _encode(samples: FloatArray, bit_depth: int) -> bytes:
    if bit_depth == 16:
        scaled = np.clip(np.rint(samples * 2.0**15), -(2**15), 2**15 - 1)
        return scaled.astype("<i2").tobytes()
    if bit_depth == 24:
        scaled = np.clip(np.rint(samples * 2.0**23), -(2**23), 2**23 - 1)
        words = scaled.astype("<i4").view(np.uint8).reshape(-1, 4)
        return words[:, :3].tobytes()
    return samples.astype("<f4").tobytes()


def write_wav(path: str | Path, audio: AudioBuffer, bit_depth: int = 16) -> int:
    """Encode mono audio as a RIFF/WAVE file.

    Samples outside [-1, 1] are clipped to full scale; PCM conversion
    rounds to nearest.

    Args:
        path: Destination file.
        audio: Samples to write (finite by construction of ``AudioBuffer``).
        bit_depth: 16 or 24 for integer PCM, 32 for IEEE float.

    Returns:
        Number of clipped samples.

    Raises:
        UnsupportedFormat: Bit depth other than 16, 24 or 32.
        OSError: The file cannot be written.
    """
    if bit_depth not in (16, 24, 32):
        raise UnsupportedFormat(f"cannot write {bit_depth}-bit WAV files")

    clipped = int(np.count_nonzero(np.abs(audio.samples) > 1.0))
    if clipped:
        logger.warning("Clipped %d samples while writing %s", clipped, path)
    payload = _encode(np.clip(audio.samples, -1.0, 1.0), bit_depth)

    format_tag = IEEE_FLOAT if bit_depth == 32 else PCM
    block_align = bit_depth // 8
    pad = b"\x00" if len(payload) % 2 else b""
    fmt_chunk = struct.pack(
        "<4sIHHIIHH",
        b"fmt ",
        16,
        format_tag,
        1,
        audio.sample_rate,
        audio.sample_rate * block_align,
        block_align,
        bit_depth,
    )
    data_header = struct.pack("<4sI", b"data", len(payload))
    riff_size = 4 + len(fmt_chunk) + len(data_header) + len(payload) + len(pad)
    header = struct.pack("<4sI4s", b"RIFF", riff_size, b"WAVE")

    Path(path).write_bytes(header + fmt_chunk + data_header + payload + pad)
    return clipped
