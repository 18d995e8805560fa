"""Perm Pattern file formats.

Permutation: one line of whitespace separated integers.
Graph: "n m" line, then m "u v" lines with u < v; blank lines and '#'
comments are ignored.
Instance directory: pattern.txt, text.txt, layout.txt (one
"label p_L p_M p_R q_L q_M q_R" line per vertex, in rank order) and
meta.txt ("l=<l> z=<z> t=<t>" followed by "range i start end" lines).
"""
from __future__ import annotations
import os
import re
from typing import List, Tuple

from .perm_pattern_core import Certificate, Permutation, make_permutation
from .perm_pattern_encoder import (
    EncodingLayout,
    Graph,
    VertexOrdering,
    VertexRecord,
    complete_graph,
    edge_indicator,
    encode,
    layout,
)
from .perm_pattern_errors import MalformedInput, PermPatternError
from .perm_pattern_reduction import ComposedInstance

PATTERN_FILE = 'pattern.txt'
TEXT_FILE = 'text.txt'
LAYOUT_FILE = 'layout.txt'
META_FILE = 'meta.txt'

META_HEADER_RE = re.compile(r'^l=(\d+) z=(\d+) t=(\d+)$')
META_RANGE_RE = re.compile(r'^range (\d+) (\d+) (\d+)$')


def _to_ints(tokens: List[str], what: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise MalformedInput("%s must contain integers only: %s" % (
            what, ' '.join(tokens)))


def read_file(path: str) -> str:
    """Return file content, reporting missing files as MalformedInput."""
    try:
        with open(path) as f:
            return f.read()
    except OSError as e:
        raise MalformedInput("Can't read %s: %s" % (path, e.strerror))


def write_file(path: str, content: str) -> None:
    """Write content to path."""
    with open(path, 'w') as f:
        f.write(content)


def read_permutation(text: str) -> Permutation:
    """Parse permutation text format.

    Raises:
        MalformedInput: non-integer token.
        NotABijection: integers do not form a permutation.
    """
    return make_permutation(_to_ints(text.split(), "Permutation"))


def format_permutation(pi: Permutation) -> str:
    """Return permutation text format with trailing newline."""
    return str(pi) + '\n'


def read_certificate(text: str) -> Certificate:
    """Parse certificate line of space separated positions."""
    return tuple(_to_ints(text.split(), "Certificate"))


def format_certificate(phi: Certificate) -> str:
    """Return certificate line with trailing newline."""
    return ' '.join(str(p) for p in phi) + '\n'


def _content_lines(text: str) -> List[List[str]]:
    lines = []
    for line in text.splitlines():
        line = line.split('#', 1)[0].strip()
        if line:
            lines.append(line.split())
    return lines


def read_graph(text: str) -> Graph:
    """Parse graph text format.

    Raises:
        MalformedInput: bad header, edge line or edge count, or an edge
            not written as u < v.
        NotASimpleGraph: duplicate edge.
    """
    lines = _content_lines(text)
    if not lines or len(lines[0]) != 2:
        raise MalformedInput("Graph must start with 'n m' line")
    n, m = _to_ints(lines[0], "Graph header")
    edges = []
    for tokens in lines[1:]:
        if len(tokens) != 2:
            raise MalformedInput(
                "Edge line must be 'u v': %s" % ' '.join(tokens))
        u, v = _to_ints(tokens, "Edge line")
        if not 1 <= u < v <= n:
            raise MalformedInput(
                "Edge must satisfy 1 <= u < v <= %s: %s %s" % (n, u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise MalformedInput(
            "Graph header declares %s edges, found %s" % (m, len(edges)))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    """Return graph text format, edges sorted."""
    lines = ['%s %s' % (g.n, len(g.edges))]
    lines.extend('%s %s' % e for e in sorted(g.edges))
    return '\n'.join(lines) + '\n'


def format_layout(lay: EncodingLayout) -> str:
    """Return layout lines in rank order."""
    lines = []
    for v, rec in zip(lay.vertices, lay.records):
        lines.append('%s %s %s %s %s %s %s' % (
            v, rec.p_l, rec.p_m, rec.p_r, rec.q_l, rec.q_m, rec.q_r))
    return '\n'.join(lines) + '\n'


def read_layout(text: str, z: int) -> EncodingLayout:
    """Parse layout lines; degrees are derived from the ledger."""
    labels = []
    records = []
    for tokens in _content_lines(text):
        if len(tokens) != 7:
            raise MalformedInput(
                "Layout line needs 7 integers: %s" % ' '.join(tokens))
        label, p_l, p_m, p_r, q_l, q_m, q_r = _to_ints(tokens, "Layout line")
        labels.append(label)
        records.append(VertexRecord(
            p_l, p_m, p_r, q_l, q_m, q_r,
            deg_plus=p_r - p_m,
            deg_minus=q_l - q_m - z + 1,
        ))
    if sorted(labels) != list(range(1, len(labels) + 1)):
        raise MalformedInput("Layout labels must be 1..n")
    return EncodingLayout(z, VertexOrdering(labels), records)


def format_meta(inst: ComposedInstance) -> str:
    """Return meta.txt content."""
    lines = ['l=%s z=%s t=%s' % (inst.l, inst.z, len(inst.input_ranges))]
    lines.extend(
        'range %s %s %s' % (i, start, end)
        for i, (start, end) in enumerate(inst.input_ranges, start=1))
    return '\n'.join(lines) + '\n'


def read_meta(text: str) -> Tuple[int, int, List[Tuple[int, int]]]:
    """Parse meta.txt into l, z and input ranges."""
    lines = [' '.join(t) for t in _content_lines(text)]
    header = META_HEADER_RE.match(lines[0]) if lines else None
    if not header:
        raise MalformedInput("meta must start with 'l=<l> z=<z> t=<t>'")
    l, z, t = (int(g) for g in header.groups())
    ranges = []
    for line in lines[1:]:
        match = META_RANGE_RE.match(line)
        if not match:
            raise MalformedInput("Bad range line: %s" % line)
        i, start, end = (int(g) for g in match.groups())
        if i != len(ranges) + 1:
            raise MalformedInput("Range lines must be numbered 1..t")
        ranges.append((start, end))
    if len(ranges) != t:
        raise MalformedInput(
            "meta declares %s inputs, found %s ranges" % (t, len(ranges)))
    return l, z, ranges


def instance_files(inst: ComposedInstance) -> List[Tuple[str, str]]:
    """Return (file name, content) pairs of instance directory."""
    return [
        (PATTERN_FILE, format_permutation(inst.sigma)),
        (TEXT_FILE, format_permutation(inst.pi)),
        (LAYOUT_FILE, format_layout(inst.layout_text)),
        (META_FILE, format_meta(inst)),
    ]


def write_instance(inst: ComposedInstance, directory: str) -> None:
    """Write instance directory, creating it if needed."""
    os.makedirs(directory, exist_ok=True)
    for name, content in instance_files(inst):
        write_file(os.path.join(directory, name), content)


def read_instance(directory: str) -> ComposedInstance:
    """Load instance directory and rebuild its text graph.

    Graph edges are decoded from the text permutation with the stored
    layout; the result is re-encoded and must reproduce both files.

    Raises:
        MalformedInput: missing or inconsistent files.
    """
    def read(name):
        return read_file(os.path.join(directory, name))

    l, z, ranges = read_meta(read(META_FILE))
    sigma = read_permutation(read(PATTERN_FILE))
    pi = read_permutation(read(TEXT_FILE))
    layout_text = read_layout(read(LAYOUT_FILE), z)
    labels = layout_text.vertices
    edges = [
        (u, v)
        for i, u in enumerate(labels)
        for v in labels[i + 1:]
        if edge_indicator(pi, layout_text, u, v)
    ]
    graph = Graph(len(labels), edges)
    try:
        pi_check, layout_check = encode(graph, z)
        sigma_check = encode(complete_graph(l), z)[0]
    except PermPatternError as e:
        raise MalformedInput("Instance can't be re-encoded: %s" % e)
    if (
        pi_check != pi
        or layout_check != layout_text
        or sigma_check != sigma
    ):
        raise MalformedInput(
            "Instance files in %s are not consistent" % directory)
    return ComposedInstance(
        l=l,
        z=z,
        sigma=sigma,
        pi=pi,
        layout_pattern=layout(complete_graph(l), z),
        layout_text=layout_text,
        input_ranges=tuple(ranges),
        graph=graph,
    )
