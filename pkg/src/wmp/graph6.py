"""graph6 encoding (upper triangle, column-major, 6 bits per printable byte)."""

from __future__ import annotations

from .errors import ParseError, SizeOutOfRange
from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 63 <= n <= 258047: '~' then 18 bits big-endian
    return "~" + "".join(chr(((n >> shift) & 63) + 63) for shift in (12, 6, 0))


def encode_graph6(g: Graph) -> str:
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _size_prefix(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} outside the graph6 range 63..126", pos)

    if s[0] != "~":
        n, start = ord(s[0]) - 63, 1
    elif len(s) >= 2 and s[1] == "~":
        raise ParseError("8-byte size header exceeds the vertex cap", 0)
    else:
        if len(s) < 4:
            raise ParseError("truncated 4-byte size header", len(s))
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        if n < 63:
            raise ParseError(f"non-canonical long header for n={n}", 0)
        start = 4
    if n == 0:
        raise SizeOutOfRange("graph6 string encodes the null graph")
    if n > MAX_VERTICES:
        raise SizeOutOfRange(f"graph6 string encodes {n} > {MAX_VERTICES} vertices")

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = s[start:]
    if len(body) != nbytes:
        raise ParseError(f"expected {nbytes} data bytes for n={n}, got {len(body)}", start)

    value = 0
    for ch in body:
        value = value << 6 | (ord(ch) - 63)
    pad = nbytes * 6 - nbits
    if value & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", len(s) - 1)
    value >>= pad

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))
