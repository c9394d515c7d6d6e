"""graph6 encoding for graphs on at most 62 vertices (single size byte, no header)."""

from .errors import Graph6ParseError, InvalidParameterError
from .graph import Graph

MAX_GRAPH6_VERTICES = 62


def encode_graph6(g):
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise InvalidParameterError(f"graph6 size prefix supports n <= {MAX_GRAPH6_VERTICES}, got {n}")
    out = [chr(63 + n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (rows[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def decode_graph6(s):
    """Parse one graph6 line; errors report the offending byte offset."""
    if isinstance(s, bytes):
        try:
            s = s.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6ParseError("non-ASCII byte", exc.start) from None
    s = s.rstrip("\n")
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"invalid graph6 character {ch!r}", pos)
    if s.startswith(">>graph6<<"):
        raise Graph6ParseError("graph6 headers are not accepted", 0)
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_VERTICES:
        raise Graph6ParseError("multi-byte size prefixes are not supported", 0)
    nbits = n * (n - 1) // 2
    want = 1 + (nbits + 5) // 6
    if len(s) != want:
        raise Graph6ParseError(f"expected {want} bytes for n={n}, got {len(s)}", min(len(s), want))
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            pos = 1 + k // 6
            if (ord(s[pos]) - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (ord(s[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6ParseError("nonzero padding bits", len(s) - 1)
    return Graph._trusted(n, rows)


def write_graph6_file(path, graphs):
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


def read_graph6_file(path):
    graphs = []
    with open(path, "r", encoding="ascii", errors="surrogateescape") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            try:
                graphs.append(decode_graph6(line))
            except Graph6ParseError as exc:
                raise Graph6ParseError(f"line {lineno}: {exc}", exc.offset) from None
    return graphs
