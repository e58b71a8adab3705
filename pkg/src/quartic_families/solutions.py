"""Concrete integer solutions of X^4 - Y^4 = R^2 - S^2."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace
from typing import Iterable, List, Optional, Sequence, TextIO

SOURCES = ("method-1", "method-2", "method-3", "trivial", "external", "oracle")
CSV_HEADER = ["t", "X", "Y", "R", "S", "degenerate"]


class FamilyCorruptError(RuntimeError):
    """A generated tuple failed the exact check."""


class TupleFormatError(ValueError):
    def __init__(self, row: int, message: str):
        super().__init__(f"row {row}: {message}")
        self.row = row


@dataclass(frozen=True)
class SolutionTuple:
    X: int
    Y: int
    R: int
    S: int
    source: str = "external"
    t: Optional[int] = None
    verified: bool = False

    @property
    def degenerate(self) -> bool:
        # |X| = |Y| covers the all-zero tuple as well.
        return abs(self.X) == abs(self.Y)

    def values(self) -> tuple:
        return (self.X, self.Y, self.R, self.S)

    def to_row(self) -> dict:
        return {
            "t": "" if self.t is None else str(self.t),
            "X": str(self.X),
            "Y": str(self.Y),
            "R": str(self.R),
            "S": str(self.S),
            "degenerate": "true" if self.degenerate else "false",
        }


def check_tuple(X: int, Y: int, R: int, S: int) -> bool:
    return X ** 4 - Y ** 4 == R * R - S * S


def verified(X: int, Y: int, R: int, S: int, source: str = "external", t: Optional[int] = None) -> SolutionTuple:
    """Build a tuple marked verified, or raise ``ValueError`` if it is not a solution."""
    if not check_tuple(X, Y, R, S):
        raise ValueError(f"({X}, {Y}, {R}, {S}) is not a solution")
    return SolutionTuple(X, Y, R, S, source, t, True)


def trivial_family(m: int, n: int) -> SolutionTuple:
    return verified(m, n, m * m, n * n, "trivial")


def generate(fam, t_from: int, t_to: int, skip_degenerate: bool = False) -> List[SolutionTuple]:
    """Evaluate an integer family at every ``t`` in ``[t_from, t_to]``, ascending.

    Every tuple is re-checked exactly; a failure means the family is corrupt.
    """
    if t_from > t_to:
        raise ValueError(f"empty t-range [{t_from}, {t_to}]")
    out = []
    for t in range(t_from, t_to + 1):
        X, Y, R, S = fam.evaluate(t)
        if not check_tuple(X, Y, R, S):
            raise FamilyCorruptError(f"{fam.method} at t = {t} gives a non-solution ({X}, {Y}, {R}, {S})")
        s = SolutionTuple(X, Y, R, S, fam.method, t, True)
        if skip_degenerate and s.degenerate:
            continue
        out.append(s)
    return out


def scale_tuple(s: SolutionTuple, d: int) -> SolutionTuple:
    """``(dX, dY, d^2 R, d^2 S)``; valid because both sides scale by ``d^4``."""
    d2 = d * d
    out = SolutionTuple(d * s.X, d * s.Y, d2 * s.R, d2 * s.S, s.source, s.t, False)
    return replace(out, verified=check_tuple(*out.values()))


def canonicalize(s: SolutionTuple) -> SolutionTuple:
    """Representative with ``X >= Y >= 0`` and ``R, S >= 0``.

    Uses the sign flips of each component and the swap (X,Y,R,S) -> (Y,X,S,R).
    """
    X, Y, R, S = (abs(c) for c in s.values())
    if X < Y:
        X, Y, R, S = Y, X, S, R
    return SolutionTuple(X, Y, R, S, s.source, s.t, check_tuple(X, Y, R, S))


def write_csv(tuples: Iterable[SolutionTuple], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for s in tuples:
        writer.writerow(s.to_row())


def to_json(tuples: Iterable[SolutionTuple]) -> list:
    out = []
    for s in tuples:
        row = s.to_row()
        row["t"] = None if s.t is None else row["t"]
        row["degenerate"] = s.degenerate
        row["source"] = s.source
        out.append(row)
    return out


def _parse_int(value, row: int, name: str) -> int:
    if isinstance(value, bool):
        raise TupleFormatError(row, f"{name} is not an integer")
    if isinstance(value, int):
        return value
    try:
        return int(str(value).strip())
    except ValueError:
        raise TupleFormatError(row, f"{name} = {value!r} is not an integer") from None


def _from_record(record, row: int) -> tuple:
    if isinstance(record, dict):
        missing = [k for k in "XYRS" if k not in record]
        if missing:
            raise TupleFormatError(row, f"missing field(s) {', '.join(missing)}")
        return tuple(_parse_int(record[k], row, k) for k in "XYRS")
    if isinstance(record, (list, tuple)) and len(record) == 4:
        return tuple(_parse_int(v, row, k) for v, k in zip(record, "XYRS"))
    raise TupleFormatError(row, "expected an object with X, Y, R, S or a 4-element array")


def read_tuples(text: str) -> List[tuple]:
    """Parse CSV (header with X,Y,R,S columns) or a JSON array of tuples.

    Rows are numbered from 1 (the CSV header is not counted).
    """
    if not text.strip():
        return []
    if text.lstrip().startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TupleFormatError(exc.lineno, f"invalid JSON: {exc.msg}") from None
        if not isinstance(data, list):
            raise TupleFormatError(1, "expected a JSON array")
        return [_from_record(rec, i) for i, rec in enumerate(data, start=1)]
    reader = csv.reader(io.StringIO(text))
    header = [h.strip() for h in next(reader)]
    if not set("XYRS") <= set(header):
        raise TupleFormatError(0, "CSV header must name the columns X, Y, R, S")
    out = []
    for i, fields in enumerate(reader, start=1):
        if not any(f.strip() for f in fields):
            continue
        if len(fields) != len(header):
            raise TupleFormatError(i, f"expected {len(header)} fields, got {len(fields)}")
        out.append(_from_record(dict(zip(header, fields)), i))
    return out


def sort_key(s: SolutionTuple) -> tuple:
    return s.values()


def as_tuples(rows: Sequence[tuple], source: str = "external") -> List[SolutionTuple]:
    return [SolutionTuple(*r, source=source, verified=check_tuple(*r)) for r in rows]
