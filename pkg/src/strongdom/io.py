"""On-disk formats: edge-list text, graph6, and JSON-lines audit reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Any, Iterable

from strongdom.errors import GraphValidationError, ParseError
from strongdom.graph import Graph

# -- edge list ----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-based).

    Blank lines are ignored; anything else out of place is a :class:`ParseError`
    carrying the 1-based line number.
    """
    rows = [(i, line.split()) for i, line in enumerate(text.splitlines(), 1) if line.strip()]
    if not rows:
        raise ParseError("missing header line", 1)
    lineno, header = rows[0]
    n, m = _ints(header, lineno)
    if n < 0 or m < 0:
        raise ParseError("negative count in header", lineno)
    body = rows[1:]
    if len(body) != m:
        at = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else lineno + 1)
        raise ParseError(f"header declares {m} edges, found {len(body)}", at)
    edges = []
    seen = set()
    for lineno, fields in body:
        u, v = _ints(fields, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"loop edge ({u}, {v})", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", lineno)
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def _ints(fields: list[str], lineno: int) -> tuple[int, int]:
    if len(fields) != 2:
        raise ParseError(f"expected two integers, got {len(fields)} fields", lineno)
    try:
        return int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(f"non-integer field in {' '.join(fields)!r}", lineno) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# -- graph6 -------------------------------------------------------------------

_HEADER = ">>graph6<<"
_SMALL_MAX = 62
_MEDIUM_MAX = 258047
_LARGE_MAX = 68719476735


def _size_prefix(n: int) -> str:
    if n <= _SMALL_MAX:
        return chr(n + 63)
    if n <= _MEDIUM_MAX:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= _LARGE_MAX:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphValidationError(f"graph6 cannot encode n={n}")


def write_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline). Padding bits are zero."""
    bits = []
    for j in range(1, g.n):
        nbrs = g.neighbors(j)
        bits.extend(1 if i in nbrs else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6]))) for i in range(0, len(bits), 6)
    )
    return _size_prefix(g.n) + body


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; an optional header and one trailing newline
    are accepted. Non-minimal size prefixes and non-zero padding are rejected
    so that every graph has exactly one encoding."""
    if text.endswith("\n"):
        text = text[:-1]
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    if not text:
        raise ParseError("empty graph6 string")
    for pos, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} at offset {pos} outside graph6 range")
    vals = [ord(ch) - 63 for ch in text]
    if vals[0] != 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise ParseError("truncated 8-byte size prefix")
        n, rest = _join6(vals[2:8]), vals[8:]
        if n <= _MEDIUM_MAX:
            raise ParseError("non-minimal 8-byte size prefix")
    else:
        if len(vals) < 4:
            raise ParseError("truncated 4-byte size prefix")
        n, rest = _join6(vals[1:4]), vals[4:]
        if n <= _SMALL_MAX:
            raise ParseError("non-minimal 4-byte size prefix")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(rest) < need:
        raise ParseError(f"truncated adjacency data: need {need} characters, got {len(rest)}")
    if len(rest) > need:
        raise ParseError(f"{len(rest) - need} trailing character(s) after adjacency data")
    if nbits % 6 and rest[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise ParseError("non-zero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def _join6(vals: list[int]) -> int:
    out = 0
    for v in vals:
        out = (out << 6) | v
    return out


# -- JSON-lines reports -------------------------------------------------------

SCHEMA_VERSION = 1


@dataclass
class ReportRecord:
    """One line of an audit report.

    ``quantities`` holds integers, plus ``"p/q"`` strings for exact rationals.
    ``passed`` is ``None`` when the record is not an audit verdict (headers,
    summaries, solve results).
    """

    theorem: str
    instance: dict[str, Any] = field(default_factory=dict)
    quantities: dict[str, Any] = field(default_factory=dict)
    status: str = "applicable"
    passed: bool | None = None
    tight_lower: bool | None = None
    tight_upper: bool | None = None
    notes: dict[str, Any] = field(default_factory=dict)
    schema: int = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": self.schema,
            "theorem": self.theorem,
            "instance": self.instance,
            "quantities": self.quantities,
            "status": self.status,
            "pass": self.passed,
            "tight_lower": self.tight_lower,
            "tight_upper": self.tight_upper,
            "notes": self.notes,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ReportRecord:
        try:
            return cls(
                theorem=d["theorem"],
                instance=d["instance"],
                quantities=d["quantities"],
                status=d["status"],
                passed=d["pass"],
                tight_lower=d["tight_lower"],
                tight_upper=d["tight_upper"],
                notes=d.get("notes", {}),
                schema=d["schema"],
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"record is missing field {exc}") from None


def dumps_record(record: ReportRecord) -> str:
    return json.dumps(record.to_dict(), sort_keys=True, separators=(",", ":"))


def emit_report(records: Iterable[ReportRecord], stream: IO[str]) -> int:
    """Write one JSON object per line; returns the number of lines written."""
    count = 0
    for rec in records:
        stream.write(dumps_record(rec) + "\n")
        count += 1
    return count


def dumps_report(records: Iterable[ReportRecord]) -> str:
    return "".join(dumps_record(r) + "\n" for r in records)


def load_report(stream: IO[str] | str) -> list[ReportRecord]:
    lines = stream.splitlines() if isinstance(stream, str) else stream
    out = []
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            d = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc.msg}", lineno) from None
        if not isinstance(d, dict):
            raise ParseError("record is not a JSON object", lineno)
        try:
            out.append(ReportRecord.from_dict(d))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    return out
