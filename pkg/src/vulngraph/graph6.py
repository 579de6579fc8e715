"""Bit-exact graph6 reading and writing for graphs with at most 64 vertices.

Layout: a size header ``N(n)`` followed by the upper triangle of the adjacency
matrix in column-major order, packed six bits per byte, each byte offset by 63.
The final byte is padded with zero bits.
"""

from __future__ import annotations

from typing import Iterator, Union

from .errors import InvalidGraphError
from .graph import MAX_VERTICES, Graph

HEADER = b">>graph6<<"


class Graph6Error(InvalidGraphError):
    """Base class for graph6 decoding failures."""


class Graph6HeaderError(Graph6Error):
    """The size header is missing, truncated or uses invalid bytes."""


class Graph6SizeError(Graph6Error):
    """The encoded vertex count is outside 1..64."""


class Graph6TruncatedError(Graph6Error):
    """Fewer data bytes than the vertex count requires."""


class Graph6TrailingDataError(Graph6Error):
    """More bytes than the vertex count requires."""


class Graph6CharacterError(Graph6Error):
    """A data byte lies outside the printable range 63..126."""


class Graph6PaddingError(Graph6Error):
    """Unused bits of the final byte are not zero."""


def _as_bytes(text: Union[str, bytes]) -> bytes:
    if isinstance(text, str):
        try:
            return text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6CharacterError("graph6 text must be ASCII") from exc
    return bytes(text)


def _data_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: Union[str, bytes]) -> Graph:
    """Decode a single graph6 record; one trailing newline is tolerated."""
    data = _as_bytes(text)
    if data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise Graph6HeaderError("empty graph6 record")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise Graph6HeaderError("truncated or unsupported long size header")
        if any(not 63 <= b <= 126 for b in data[1:4]):
            raise Graph6HeaderError("invalid byte in size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        if n < 63:
            raise Graph6HeaderError("long size header used for n < 63")
        body = data[4:]
    elif 63 <= data[0] < 126:
        n = data[0] - 63
        body = data[1:]
    else:
        raise Graph6HeaderError(f"invalid size byte {data[0]!r}")
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6SizeError(f"vertex count {n} outside 1..{MAX_VERTICES}")

    need = _data_length(n)
    if len(body) < need:
        raise Graph6TruncatedError(f"expected {need} data bytes, found {len(body)}")
    if len(body) > need:
        raise Graph6TrailingDataError(f"{len(body) - need} unexpected trailing bytes")

    bits = 0
    for b in body:
        if not 63 <= b <= 126:
            raise Graph6CharacterError(f"invalid data byte {b!r}")
        bits = (bits << 6) | (b - 63)
    total = n * (n - 1) // 2
    pad = 6 * need - total
    if bits & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    bits >>= pad

    adj = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def upper_triangle_bits(g: Graph) -> int:
    """Column-major upper triangle as an integer, first bit most significant."""
    bits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits = (bits << 1) | (row >> i & 1)
    return bits


def to_graph6(g: Graph) -> bytes:
    n = g.n
    header = bytes([n + 63]) if n < 63 else bytes([126, 63, 63 + (n >> 6), 63 + (n & 63)])
    total = n * (n - 1) // 2
    need = _data_length(n)
    bits = upper_triangle_bits(g) << (6 * need - total)
    body = bytes(63 + (bits >> (6 * (need - 1 - i)) & 63) for i in range(need))
    return header + body


def parse_graph6_stream(text: Union[str, bytes]) -> Iterator[Graph]:
    """Decode newline-separated graph6 records, skipping blank lines."""
    for line in _as_bytes(text).splitlines():
        line = line.strip()
        if line:
            yield parse_graph6(line)
