"""The ``bbd 1`` text format.

::

    bbd 1
    a 3
    # comment
    arc x1 y2
    arc y2 x1

Written files list arcs sorted by (source index, target index) and carry no
comments or blank lines.
"""

from __future__ import annotations

from .digraph import BipartiteDigraph, DigraphError, build, parse_vertex

HEADER = "bbd 1"


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse(text: str) -> BipartiteDigraph:
    a = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    saw_header = False
    for lineno, raw in enumerate(text.split("\n"), start=1):
        raw = raw.removesuffix("\r")
        if not raw.isascii() or any(not (c.isprintable() or c == "\t") for c in raw):
            raise ParseError(lineno, "non-printable or non-ASCII character")
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not saw_header:
            if line != HEADER:
                raise ParseError(lineno, f"expected header {HEADER!r}, got {line!r}")
            saw_header = True
            continue
        fields = line.split()
        if a is None:
            if len(fields) != 2 or fields[0] != "a" or not fields[1].isdigit():
                raise ParseError(lineno, f"expected 'a <int>', got {line!r}")
            a = int(fields[1])
            if a < 1:
                raise ParseError(lineno, "a must be at least 1")
            continue
        if len(fields) != 3 or fields[0] != "arc":
            raise ParseError(lineno, f"expected 'arc <name> <name>', got {line!r}")
        try:
            u, v = parse_vertex(a, fields[1]), parse_vertex(a, fields[2])
            build(a, [(u, v)])
        except DigraphError as exc:
            raise ParseError(lineno, str(exc)) from None
        if (u, v) in seen:
            raise ParseError(lineno, f"duplicate arc {fields[1]} {fields[2]}")
        seen.add((u, v))
        arcs.append((u, v))
    if not saw_header:
        raise ParseError(1, "missing header")
    if a is None:
        raise ParseError(1, "missing 'a <int>' line")
    return build(a, arcs)


def write(D: BipartiteDigraph) -> str:
    lines = [HEADER, f"a {D.a}"]
    lines += [f"arc {D.name(u)} {D.name(v)}" for u, v in D.arcs()]
    return "\n".join(lines) + "\n"


def read_file(path: str) -> BipartiteDigraph:
    # undecodable bytes become U+FFFD and are reported with their line number
    with open(path, encoding="ascii", errors="replace", newline="") as fh:
        return parse(fh.read())


def write_file(path: str, D: BipartiteDigraph) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(write(D))
