# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

"""graph6 and edge-list text forms of Graph

graph6: size prefix N(n) followed by the upper triangle of the adjacency
matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
in groups of six bits, each group offset by 63.

Edge list: a header line "n m" followed by m lines "u v" with 0-based
vertex indices. Text after '#' is a comment.

"""

from treespec.graph.graph import Graph

GRAPH6_HEADER = '>>graph6<<'


class Graph6ParseError(ValueError):
    def __init__(self, message, offset):
        self.offset = offset
        super(Graph6ParseError, self).__init__(
            "%s (byte offset %d)" % (message, offset))


class EdgeListParseError(ValueError):
    def __init__(self, message, line_number):
        self.line_number = line_number
        super(EdgeListParseError, self).__init__(
            "%s (line %d)" % (message, line_number))


def _size_bytes(n):
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def encode_graph6(graph):
    """Return the graph6 string of graph (no trailing newline)"""
    n = graph.n
    rows = graph.rows
    values = _size_bytes(n)
    group = 0
    count = 0
    for j in range(1, n):
        row = rows[j]
        for i in range(j):
            group = (group << 1) | ((row >> i) & 1)
            count += 1
            if count == 6:
                values.append(group)
                group = 0
                count = 0
    if count:
        values.append(group << (6 - count))
    return ''.join(chr(x + 63) for x in values)


def decode_graph6(text):
    """Parse one graph6 line; errors carry the offending byte offset"""
    if isinstance(text, bytes):
        text = text.decode('ascii', 'replace')
    start = 0
    if text.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    line = text.rstrip('\r\n')
    for pos in range(start, len(line)):
        if not 63 <= ord(line[pos]) <= 126:
            raise Graph6ParseError("Invalid graph6 character %r"
                                   % line[pos], pos)
    if len(line) <= start:
        raise Graph6ParseError("Empty graph6 string", start)

    pos = start
    values = [ord(c) - 63 for c in line]
    if values[pos] < 63:
        n = values[pos]
        pos += 1
    else:
        if pos + 1 < len(values) and values[pos + 1] == 63:
            width = 6
            pos += 2
        else:
            width = 3
            pos += 1
        if pos + width > len(values):
            raise Graph6ParseError("Truncated size field", len(line))
        n = 0
        for x in values[pos:pos + width]:
            n = (n << 6) | x
        pos += width

    num_bits = n * (n - 1) // 2
    num_bytes = (num_bits + 5) // 6
    if len(values) - pos < num_bytes:
        raise Graph6ParseError(
            "Expected %d adjacency bytes, found %d"
            % (num_bytes, len(values) - pos), len(line))
    if len(values) - pos > num_bytes:
        raise Graph6ParseError("Trailing data after adjacency bytes",
                               pos + num_bytes)
    if num_bits % 6 and values[pos + num_bytes - 1] & \
       ((1 << (6 - num_bits % 6)) - 1):
        raise Graph6ParseError("Nonzero padding bits",
                               pos + num_bytes - 1)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            x = values[pos + k // 6]
            if (x >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def edge_list_lines(graph):
    lines = ["%d %d" % (graph.n, graph.m)]
    for u, v in graph.edges:
        lines.append("%d %d" % (u, v))
    return lines


def parse_edge_list(lines):
    """Parse edge-list text given as an iterable of lines"""
    header = None
    edges = []
    seen = set()
    last_line_number = 0
    for line_number, line in enumerate(lines, start=1):
        last_line_number = line_number
        body = line.split('#')[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 2:
            raise EdgeListParseError(
                "Expected two integers, got '%s'" % body, line_number)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise EdgeListParseError(
                "Expected two integers, got '%s'" % body, line_number)
        if header is None:
            if a < 0 or b < 0:
                raise EdgeListParseError("Negative size in header",
                                         line_number)
            header = (a, b)
            continue
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise EdgeListParseError(
                "Vertex out of range 0..%d" % (header[0] - 1), line_number)
        if a == b:
            raise EdgeListParseError("Self-loop at vertex %d" % a,
                                     line_number)
        if (min(a, b), max(a, b)) in seen:
            raise EdgeListParseError("Repeated edge %d %d" % (a, b),
                                     line_number)
        seen.add((min(a, b), max(a, b)))
        edges.append((a, b))
    if header is None:
        raise EdgeListParseError("Missing 'n m' header", last_line_number)
    if len(edges) != header[1]:
        raise EdgeListParseError(
            "Header announces %d edges, found %d" % (header[1], len(edges)),
            last_line_number)
    return Graph.from_edges(header[0], edges)
