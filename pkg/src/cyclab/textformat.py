"""Plain-text digraph files.

Line 1 holds ``n``; each of the next ``n`` lines holds ``n`` characters from
``{0,1}`` and character ``j`` of row ``i`` is ``1`` iff the arc ``i -> j``
exists.  A single trailing newline is optional; nothing else is allowed.
"""

from __future__ import annotations

import re

from .digraph import Digraph

__all__ = ["FormatError", "parse_digraph", "serialize_digraph", "read_digraph", "write_digraph"]


class FormatError(ValueError):
    pass


def serialize_digraph(D: Digraph) -> str:
    lines = [str(D.n)]
    for i in range(D.n):
        row = D.out[i]
        lines.append("".join("1" if row >> j & 1 else "0" for j in range(D.n)))
    return "\n".join(lines) + "\n"


def parse_digraph(text: str) -> Digraph:
    body = text[:-1] if text.endswith("\n") else text
    lines = body.split("\n")
    head = lines[0]
    if not re.fullmatch(r"[1-9][0-9]*", head):
        raise FormatError(f"line 1, column 1: malformed vertex count {head!r}")
    n = int(head)
    if len(lines) < n + 1:
        raise FormatError(f"line {len(lines) + 1}, column 1: missing row, expected {n} rows")
    if len(lines) > n + 1:
        raise FormatError(f"line {n + 2}, column 1: unexpected content after the last row")
    rows = []
    for i in range(n):
        lineno = i + 2
        line = lines[i + 1]
        row = 0
        for j, ch in enumerate(line):
            if j == n:
                raise FormatError(f"line {lineno}, column {j + 1}: row longer than {n} characters")
            if ch == "1":
                if j == i:
                    raise FormatError(f"line {lineno}, column {j + 1}: nonzero diagonal entry")
                row |= 1 << j
            elif ch != "0":
                raise FormatError(f"line {lineno}, column {j + 1}: invalid character {ch!r}")
        if len(line) < n:
            raise FormatError(
                f"line {lineno}, column {len(line) + 1}: row shorter than {n} characters"
            )
        rows.append(row)
    return Digraph(n, rows)


def read_digraph(path) -> Digraph:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        before = raw[: exc.start]
        line = before.count(b"\n") + 1
        col = exc.start - (before.rfind(b"\n") + 1) + 1
        raise FormatError(f"line {line}, column {col}: non-ASCII byte") from None
    return parse_digraph(text)


def write_digraph(D: Digraph, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(serialize_digraph(D))
