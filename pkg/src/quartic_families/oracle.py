"""Exhaustive enumeration of solutions in a box, for ground truth.

For ``n = X^4 - Y^4 > 0`` every way of writing ``n = R^2 - S^2`` with
``R > S >= 0`` comes from exactly one factorization ``n = d*e`` with
``d <= e`` and ``d = e (mod 2)``, via ``R = (d+e)/2``, ``S = (e-d)/2``.
Enumerating divisor pairs is therefore complete.
"""

from __future__ import annotations

import csv
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, TextIO, Tuple

from .numtheory import divisors_from_factors, factorize
from .solutions import SolutionTuple, canonicalize, check_tuple, generate

__all__ = [
    "CoverageReport",
    "EnumerationBounds",
    "SolutionSet",
    "coverage_report",
    "divisor_pairs",
    "enumerate_solutions",
    "factorize",
]


@dataclass(frozen=True)
class EnumerationBounds:
    max_x: int
    max_s: Optional[int] = None

    def __post_init__(self):
        if self.max_x < 0:
            raise ValueError("max_x must be nonnegative")
        if self.max_s is not None and self.max_s < 0:
            raise ValueError("max_s must be nonnegative")

    def to_json(self) -> dict:
        return {"max_x": self.max_x, "max_s": self.max_s}


@dataclass(frozen=True)
class SolutionSet:
    """Canonical tuples in ascending ``(X, Y, R, S)`` order, without duplicates."""

    tuples: Tuple[SolutionTuple, ...]
    bounds: EnumerationBounds
    _keys: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_keys", frozenset(s.values() for s in self.tuples))

    def __len__(self):
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)

    def __contains__(self, item) -> bool:
        if isinstance(item, SolutionTuple):
            item = item.values()
        return tuple(item) in self._keys

    def keys(self) -> List[tuple]:
        return [s.values() for s in self.tuples]

    def write_csv(self, stream: TextIO) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["X", "Y", "R", "S"])
        for s in self.tuples:
            writer.writerow([str(c) for c in s.values()])


def _pairs_from_factors(n: int, factors) -> List[Tuple[int, int]]:
    out = []
    for d in divisors_from_factors(factors):
        e = n // d
        if d > e:
            break
        if (d - e) % 2 == 0:
            out.append((d, e))
    return out


def divisor_pairs(n: int) -> List[Tuple[int, int]]:
    """All ``(d, e)`` with ``d*e = n``, ``d <= e`` and ``d = e (mod 2)``."""
    if n <= 0:
        raise ValueError(f"divisor_pairs needs n > 0, got {n}")
    return _pairs_from_factors(n, factorize(n) if n > 1 else [])


def _quartic_difference_factors(x: int, y: int) -> List[int]:
    # x^4 - y^4 = (x - y)(x + y)(x^2 + y^2); factor the small pieces separately.
    out: Counter = Counter()
    for piece in (x - y, x + y, x * x + y * y):
        if piece > 1:
            out.update(factorize(piece))
    return sorted(out.elements())


def _solutions_for_x(x: int) -> List[tuple]:
    rows = []
    for y in range(x):
        n = x ** 4 - y ** 4
        for d, e in _pairs_from_factors(n, _quartic_difference_factors(x, y)):
            rows.append((x, y, (d + e) // 2, (e - d) // 2))
    return rows


def enumerate_solutions(b: EnumerationBounds, workers: int = 1) -> SolutionSet:
    """Every canonical solution with ``max_x >= X > Y >= 0``.

    With ``max_s`` set, also the degenerate ray ``(X, X, R, R)`` for
    ``0 <= X <= max_x`` and ``0 <= R <= max_s``.
    """
    xs = range(1, b.max_x + 1)
    if workers > 1 and b.max_x > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_solutions_for_x, xs, chunksize=max(1, len(xs) // (4 * workers))))
    else:
        chunks = [_solutions_for_x(x) for x in xs]
    rows = [r for chunk in chunks for r in chunk]
    if b.max_s is not None:
        rows += [(x, x, r, r) for x in range(b.max_x + 1) for r in range(b.max_s + 1)]
    rows.sort()
    tuples = []
    for r in rows:
        if not check_tuple(*r):
            raise AssertionError(f"enumeration produced a non-solution {r}")
        tuples.append(SolutionTuple(*r, source="oracle", verified=True))
    return SolutionSet(tuple(tuples), b)


@dataclass
class CoverageReport:
    bounds: EnumerationBounds
    t_bound: int
    total: int
    covered: int
    per_family: Dict[str, int]
    uncovered: List[tuple]
    hits: Dict[tuple, List[str]]

    @property
    def uncovered_fraction(self) -> Fraction:
        if not self.total:
            return Fraction(0)
        return Fraction(self.total - self.covered, self.total)

    def to_json(self) -> dict:
        out = {
            "bounds": self.bounds.to_json(),
            "t_bound": self.t_bound,
            "total": self.total,
            "covered": self.covered,
            "uncovered_fraction": str(self.uncovered_fraction),
            "per_family": dict(self.per_family),
            "uncovered": [[str(c) for c in row] for row in self.uncovered],
        }
        if self.bounds.max_s is None:
            out["degenerate_ray"] = "X = Y admits (X, X, R, R) for every R >= 0; not enumerated"
        return out

    def format_text(self) -> str:
        lines = [
            f"bounds max_x={self.bounds.max_x} max_s={self.bounds.max_s}, t_bound={self.t_bound}",
            f"covered {self.covered} of {self.total} (uncovered fraction {self.uncovered_fraction})",
        ]
        for name, count in self.per_family.items():
            lines.append(f"  {name}: {count}")
        return "\n".join(lines)


def family_tuples(fam, t_bound: int, max_x: Optional[int] = None) -> set:
    """Canonical tuples a family produces for ``|t| <= t_bound``."""
    out = set()
    for s in generate(fam, -t_bound, t_bound):
        c = canonicalize(s)
        if max_x is None or c.X <= max_x:
            out.add(c.values())
    return out


def coverage_report(sset: SolutionSet, fams: Sequence, t_bound: int) -> CoverageReport:
    """Which families (and the trivial family) reproduce each enumerated tuple."""
    produced = {fam.method: family_tuples(fam, t_bound, sset.bounds.max_x) for fam in fams}
    per_family = {name: 0 for name in produced}
    per_family["trivial"] = 0
    hits: Dict[tuple, List[str]] = {}
    uncovered = []
    for s in sset:
        key = s.values()
        found = [name for name, keys in produced.items() if key in keys]
        if s.R == s.X ** 2 and s.S == s.Y ** 2:
            found.append("trivial")
        for name in found:
            per_family[name] += 1
        hits[key] = found
        if not found:
            uncovered.append(key)
    covered = len(sset) - len(uncovered)
    return CoverageReport(sset.bounds, t_bound, len(sset), covered, per_family, uncovered, hits)
