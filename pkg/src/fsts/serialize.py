"""Text and JSON serialization.

The ``.hg`` hypergraph format is line oriented:

    # optional comments, full-line or trailing
    r n m
    v1 v2 ... vr        (m edge lines, 0-based vertex ids)

Rationals serialize as ``"p/q"`` strings so that exact values survive a
round trip through JSON.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import HgParseError, InputError
from .hypergraph import Hypergraph, build_hypergraph


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    try:
        num, _, den = text.partition("/")
        if den == "":
            return Fraction(int(num))
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed rational {text!r}") from exc


def loads_hg(text: str) -> Hypergraph:
    """Parse the ``.hg`` format; errors carry 1-based line numbers."""
    header = None
    header_line = 0
    edges: list[tuple[int, ...]] = []
    edge_lines: list[int] = []
    seen: set[tuple[int, ...]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        fields = content.split()
        if header is None:
            if len(fields) != 3:
                raise HgParseError(line_no, f"expected header 'r n m', got {content!r}")
            try:
                header = tuple(int(f) for f in fields)
            except ValueError:
                raise HgParseError(line_no, f"non-integer header field in {content!r}")
            header_line = line_no
            continue
        try:
            vertices = tuple(int(f) for f in fields)
        except ValueError:
            raise HgParseError(line_no, f"non-integer vertex id in {content!r}")
        if len(vertices) != header[0]:
            raise HgParseError(
                line_no, f"expected {header[0]} vertex ids, got {len(vertices)}"
            )
        if len(set(vertices)) != len(vertices):
            raise HgParseError(line_no, f"repeated vertex in edge {vertices}")
        if min(vertices) < 0 or max(vertices) >= header[1]:
            raise HgParseError(
                line_no, f"vertex id outside 0..{header[1] - 1} in {vertices}"
            )
        key = tuple(sorted(vertices))
        if key in seen:
            raise HgParseError(line_no, f"duplicate edge {key}")
        seen.add(key)
        edges.append(vertices)
        edge_lines.append(line_no)
    if header is None:
        raise HgParseError(1, "empty file: missing 'r n m' header")
    r, n, m = header
    if len(edges) != m:
        raise HgParseError(
            edge_lines[-1] if edges else header_line,
            f"header announces {m} edges but file contains {len(edges)}",
        )
    try:
        return build_hypergraph(r, n, edges)
    except InputError as exc:
        raise HgParseError(header_line, str(exc)) from exc


def dumps_hg(h: Hypergraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for part in comment.splitlines():
            lines.append(f"# {part}")
    lines.append(f"{h.r} {h.n} {h.num_edges}")
    for edge in h.edges:
        lines.append(" ".join(str(v) for v in edge))
    return "\n".join(lines) + "\n"


def load_hg(path) -> Hypergraph:
    return loads_hg(Path(path).read_text())


def save_hg(h: Hypergraph, path, comment: str | None = None) -> None:
    Path(path).write_text(dumps_hg(h, comment=comment))
