"""graph6 and plain edge-list text encodings.

graph6 layout (bit-exact per the standard format definition): a size header
N(n), then the upper triangle of the adjacency matrix read column by column,
x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian into 6-bit groups,
zero-padded on the right, each group offset by 63 into the printable range.
N(n) is the single byte n+63 for n <= 62 and '~' followed by three bytes
holding n as an 18-bit big-endian value (6 bits per byte, +63) for
63 <= n <= 258047. Larger orders are out of scope here and rejected.

The edge-list text format is: first line "n m", then m lines "u v". Files may
hold several graphs: one graph6 string per line, or blank-line-separated
edge-list blocks.

This module works on (n, edges) pairs and adjacency bitmasks so it has no
dependency on the Graph type; graph-level wrappers live in graphs.py.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

GRAPH6_HEADER = ">>graph6<<"
_MAX_N = 258047


class FormatError(ValueError):
    """Malformed graph6 or edge-list input."""


# ---------------------------------------------------------------- graph6 ----

def _size_header(n: int) -> str:
    if n < 0:
        raise FormatError(f"negative vertex count {n}")
    if n <= 62:
        return chr(n + 63)
    if n <= _MAX_N:
        return "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    raise FormatError(f"vertex count {n} exceeds the supported graph6 range (n <= {_MAX_N})")


def _parse_size(s: str) -> tuple[int, str]:
    if not s:
        raise FormatError("empty graph6 string")
    c = ord(s[0])
    if c == 126:
        if len(s) >= 2 and ord(s[1]) == 126:
            raise FormatError("graph6 orders above 258047 are not supported")
        if len(s) < 4:
            raise FormatError("truncated graph6 size header")
        vals = [ord(ch) - 63 for ch in s[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise FormatError("invalid graph6 size header")
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], s[4:]
    if not 63 <= c <= 125:
        raise FormatError(f"invalid graph6 size byte {s[0]!r}")
    return c - 63, s[1:]


def pack_payload(bits: int, nbits: int) -> str:
    """Pack an msb-first bitstring (held in an int) into graph6 payload chars."""
    pad = (-nbits) % 6
    bits <<= pad
    total = nbits + pad
    out = []
    for shift in range(total - 6, -6, -6):
        out.append(chr(((bits >> shift) & 63) + 63))
    return "".join(out)


def graph6_from_bits(n: int, bits: int) -> str:
    """graph6 string from a pre-packed column-major upper-triangle bitstring."""
    return _size_header(n) + pack_payload(bits, n * (n - 1) // 2)


def encode_graph6(n: int, adjacency_bits: Sequence[int]) -> str:
    """graph6 string of the labeled graph given by adjacency bitmasks."""
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        col = adjacency_bits[j]
        for i in range(j):
            bits = (bits << 1) | ((col >> i) & 1)
    return _size_header(n) + pack_payload(bits, nbits)


def decode_graph6(line: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse one graph6 string into (n, edge list)."""
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    n, payload = _parse_size(s)
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(payload) != want:
        raise FormatError(
            f"graph6 payload for n={n} needs {want} characters, got {len(payload)}"
        )
    bits = 0
    for ch in payload:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise FormatError(f"invalid graph6 payload byte {ch!r}")
        bits = (bits << 6) | v
    bits >>= (-nbits) % 6
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if (bits >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return n, edges


def write_graph6_file(items: Iterable[tuple[int, Sequence[int]]], path) -> int:
    """Write one graph6 line per (n, adjacency_bits) item; returns the count."""
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for n, adj in items:
            fh.write(encode_graph6(n, adj))
            fh.write("\n")
            count += 1
    return count


def read_graph6_file(path) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                yield decode_graph6(line)
            except FormatError as exc:
                raise FormatError(f"{path}:{lineno}: {exc}") from None


# ------------------------------------------------------------- edge lists ----

def format_edge_list(n: int, edges: Sequence[tuple[int, int]]) -> str:
    lines = [f"{n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list_block(lines: Sequence[str], where: str = "") -> tuple[int, list[tuple[int, int]]]:
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"{where}expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"{where}expected integer header 'n m', got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise FormatError(f"{where}header says m={m} but block has {len(lines) - 1} edge lines")
    edges = []
    for text in lines[1:]:
        parts = text.split()
        if len(parts) != 2:
            raise FormatError(f"{where}expected edge 'u v', got {text!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"{where}expected integer edge 'u v', got {text!r}") from None
    return n, edges


def read_edge_list_file(path) -> Iterator[tuple[int, list[tuple[int, int]]]]:
    """Yield (n, edges) for each blank-line-separated block in the file."""
    with open(path, encoding="ascii") as fh:
        block: list[str] = []
        start = 1
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line:
                if not block:
                    start = lineno
                block.append(line)
            elif block:
                yield parse_edge_list_block(block, where=f"{path}:{start}: ")
                block = []
        if block:
            yield parse_edge_list_block(block, where=f"{path}:{start}: ")
