"""Plain-text digraph, coloring and suborientation files.

Digraph::

    # comment
    n 7
    0 1
    1 2
    label 0 {1,2}        (optional, free text)

A suborientation file is a digraph file with a ``kneser <a> <b>`` line and a
``label <v> c1,c2,...`` line for every vertex.

Coloring::

    k 7 b 2
    0: 0,1
    1: 2,3
"""

from __future__ import annotations

from pathlib import Path

from .coloring import BFoldColoring, ColoringError, ConsistentSubOrientation, from_mask, to_mask
from .graph import GraphError, OrientedGraph, build_graph


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<text>"):
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body


def _int(tok: str, no: int, source: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", no, source) from None


def _parse_graph(text: str, source: str):
    n = None
    arcs, arc_lines, labels, kneser = [], [], {}, None
    for no, body in _lines(text):
        toks = body.split()
        if n is None:
            if toks[0] != "n" or len(toks) != 2:
                raise FormatError("first line must be 'n <vertex_count>'", no, source)
            n = _int(toks[1], no, source)
            if n < 0:
                raise FormatError("negative vertex count", no, source)
            continue
        if toks[0] == "label":
            if len(toks) < 3:
                raise FormatError("expected 'label <v> <text>'", no, source)
            v = _int(toks[1], no, source)
            if not 0 <= v < n:
                raise FormatError(f"label for vertex {v} outside 0..{n - 1}", no, source)
            labels[v] = (" ".join(toks[2:]), no)
        elif toks[0] == "kneser":
            if len(toks) != 3:
                raise FormatError("expected 'kneser <a> <b>'", no, source)
            kneser = (_int(toks[1], no, source), _int(toks[2], no, source))
        else:
            if len(toks) != 2:
                raise FormatError("expected an arc 'u v'", no, source)
            arcs.append((_int(toks[0], no, source), _int(toks[1], no, source)))
            arc_lines.append(no)
    if n is None:
        raise FormatError("missing 'n <vertex_count>' line", None, source)
    try:
        text_labels = None
        if labels:
            text_labels = [labels[v][0] if v in labels else str(v) for v in range(n)]
        g = build_graph(n, arcs, text_labels)
    except GraphError as exc:
        no = arc_lines[arcs.index(exc.arc)] if exc.arc in arcs else None
        raise FormatError(str(exc), no, source) from None
    return g, labels, kneser


def parse_digraph(text: str, source: str = "<text>") -> OrientedGraph:
    return _parse_graph(text, source)[0]


def format_digraph(g: OrientedGraph, header: str | None = None) -> str:
    out = [f"# {header}"] if header else []
    out.append(f"n {g.n}")
    out += [f"{u} {v}" for u, v in g.arcs]
    if g.labels is not None:
        out += [f"label {v} {text}" for v, text in enumerate(g.labels)]
    return "\n".join(out) + "\n"


def _color_list(tok: str, no: int, source: str) -> list[int]:
    tok = tok.strip().strip("{}")
    if not tok:
        return []
    return [_int(t.strip(), no, source) for t in tok.split(",")]


def parse_coloring(text: str, source: str = "<text>") -> BFoldColoring:
    k = b = None
    sets: dict[int, list[int]] = {}
    for no, body in _lines(text):
        if k is None:
            toks = body.split()
            if len(toks) != 4 or toks[0] != "k" or toks[2] != "b":
                raise FormatError("first line must be 'k <palette> b <fold>'", no, source)
            k, b = _int(toks[1], no, source), _int(toks[3], no, source)
            continue
        if ":" not in body:
            raise FormatError("expected 'v: c1,c2,...'", no, source)
        head, tail = body.split(":", 1)
        v = _int(head.strip(), no, source)
        if v in sets:
            raise FormatError(f"vertex {v} colored twice", no, source)
        colors = _color_list(tail, no, source)
        if len(colors) != b:
            raise FormatError(f"vertex {v} has {len(colors)} colors, expected {b}", no, source)
        if len(set(colors)) != len(colors) or any(not 0 <= c < k for c in colors):
            raise FormatError(f"vertex {v}: colors must be distinct and in 0..{k - 1}", no, source)
        sets[v] = colors
    if k is None:
        raise FormatError("missing 'k <palette> b <fold>' header", None, source)
    if sorted(sets) != list(range(len(sets))):
        raise FormatError(f"vertices must be 0..{len(sets) - 1} without gaps", None, source)
    try:
        return BFoldColoring.from_sets(k, b, [sets[v] for v in range(len(sets))])
    except ColoringError as exc:
        raise FormatError(str(exc), None, source) from None


def format_coloring(c: BFoldColoring, header: str | None = None) -> str:
    out = [f"# {header}"] if header else []
    out.append(f"k {c.k} b {c.b}")
    out += [f"{v}: " + ",".join(map(str, from_mask(m))) for v, m in enumerate(c.masks)]
    return "\n".join(out) + "\n"


def parse_suborientation(text: str, source: str = "<text>") -> ConsistentSubOrientation:
    g, labels, kneser = _parse_graph(text, source)
    if kneser is None:
        raise FormatError("missing 'kneser <a> <b>' line", None, source)
    masks = []
    for v in range(g.n):
        if v not in labels:
            raise FormatError(f"vertex {v} has no label", None, source)
        text_label, no = labels[v]
        colors = _color_list(text_label, no, source)
        if len(set(colors)) != len(colors) or any(c < 0 for c in colors):
            raise FormatError(f"label of vertex {v} must list distinct non-negative colors", no, source)
        masks.append(to_mask(colors))
    return ConsistentSubOrientation(kneser[0], kneser[1], tuple(masks), g)


def format_suborientation(s: ConsistentSubOrientation, header: str | None = None) -> str:
    out = [f"# {header}"] if header else []
    out += [f"n {s.graph.n}", f"kneser {s.a} {s.b}"]
    out += [f"{u} {v}" for u, v in s.graph.arcs]
    out += [f"label {v} " + ",".join(map(str, from_mask(m))) for v, m in enumerate(s.labels)]
    return "\n".join(out) + "\n"


def read_digraph(path) -> OrientedGraph:
    return parse_digraph(Path(path).read_text(), str(path))


def read_coloring(path) -> BFoldColoring:
    return parse_coloring(Path(path).read_text(), str(path))


def read_suborientation(path) -> ConsistentSubOrientation:
    return parse_suborientation(Path(path).read_text(), str(path))
