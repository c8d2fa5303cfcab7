from pathlib import Path
from typing import Iterable, Iterator, TextIO

from chibound.lib.constants import MAX_VERTICES
from chibound.lib.graph.graph import Graph
from chibound.lib.graph.graph_exceptions import Graph6ParseError, UnsupportedSize

__all__ = (
    "GRAPH6_HEADER",
    "encode_graph6",
    "decode_graph6",
    "iter_graph6_lines",
    "read_graph6_file",
    "write_graph6_file",
)


GRAPH6_HEADER = ">>graph6<<"

_LOW = 63
_HIGH = 126


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + _LOW)
    # Three 6-bit chunks after the `~` marker; enough for our vertex cap.
    return "~" + "".join(chr(((n >> shift) & 0x3F) + _LOW) for shift in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """
    Encode `g` in graph6: the size prefix followed by the upper triangle of the
    adjacency matrix in column-major order, six bits per printable byte.
    """
    chunks = [_encode_size(g.n)]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                chunks.append(chr(acc + _LOW))
                acc = 0
                filled = 0
    if filled:
        chunks.append(chr((acc << (6 - filled)) + _LOW))
    return "".join(chunks)


def _decode_size(text: str) -> tuple[int, int]:
    """Return `(n, offset of the first matrix byte)`."""
    if not text:
        raise Graph6ParseError(text, 0, "empty input")
    if text[0] != "~":
        return ord(text[0]) - _LOW, 1
    if len(text) > 1 and text[1] == "~":
        if len(text) < 8:
            raise Graph6ParseError(text, len(text), "truncated 6-byte size field")
        n = 0
        for ch in text[2:8]:
            n = (n << 6) | (ord(ch) - _LOW)
        return n, 8
    if len(text) < 4:
        raise Graph6ParseError(text, len(text), "truncated 3-byte size field")
    n = 0
    for ch in text[1:4]:
        n = (n << 6) | (ord(ch) - _LOW)
    return n, 4


def decode_graph6(text: str) -> Graph:
    """
    Decode one graph6 line. An optional `>>graph6<<` header and surrounding
    whitespace are ignored; every other deviation raises `Graph6ParseError`
    carrying the offending byte offset.
    """
    raw = text
    text = text.strip()
    base = raw.find(text) if text else 0
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
        base += len(GRAPH6_HEADER)

    for offset, ch in enumerate(text):
        if not (_LOW <= ord(ch) <= _HIGH):
            raise Graph6ParseError(raw, base + offset, f"byte {ch!r} outside '?'..'~'")

    try:
        n, start = _decode_size(text)
    except Graph6ParseError as ex:
        raise Graph6ParseError(raw, base + ex.offset, ex.reason) from None
    if n > MAX_VERTICES:
        raise UnsupportedSize("graph6 decoding", n, MAX_VERTICES)

    bit_count = n * (n - 1) // 2
    byte_count = (bit_count + 5) // 6
    body = text[start:]
    if len(body) != byte_count:
        at = base + start + min(len(body), byte_count)
        raise Graph6ParseError(
            raw, at, f"expected {byte_count} matrix bytes for n={n}, got {len(body)}"
        )

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - _LOW
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if bit_count % 6 and byte_count:
        padding = (ord(body[-1]) - _LOW) & ((1 << (6 - bit_count % 6)) - 1)
        if padding:
            at = base + start + byte_count - 1
            raise Graph6ParseError(raw, at, "nonzero padding bits")
    return Graph(n, tuple(rows))


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode newline-delimited graph6, skipping blank lines and `#` comments."""
    for line in lines:
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield decode_graph6(stripped)


def read_graph6_file(path: Path) -> list[Graph]:
    with open(path) as fp:
        return list(iter_graph6_lines(fp))


def write_graph6_file(graphs: Iterable[Graph], path: Path | TextIO) -> int:
    lines = [g.to_graph6() + "\n" for g in graphs]
    if isinstance(path, Path):
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as fp:
            fp.writelines(lines)
    else:
        path.writelines(lines)
    return len(lines)
