"""Comparison of derived families against the published coefficient lists."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from ..exact_arith import RatFunc, upoly
from .clearing import WEIGHTS, IntegerSolutionFamily
from .templates import COMPONENTS

MATCH = "MATCH"
MISMATCH = "MISMATCH"


@dataclass(frozen=True)
class RationalForm:
    num_factors: Tuple[upoly.UPoly, ...]
    den_factors: Tuple[upoly.UPoly, ...]

    def ratfunc(self) -> RatFunc:
        return RatFunc(_product(self.num_factors), _product(self.den_factors))


@dataclass(frozen=True)
class PaperReference:
    method: str
    integer: Dict[str, upoly.UPoly]
    rational: Dict[str, RationalForm] = field(default_factory=dict)


def _product(factors) -> upoly.UPoly:
    out: upoly.UPoly = (1,)
    for f in factors:
        out = upoly.mul(out, f)
    return out


def _from_terms(pairs: Sequence[Sequence[int]]) -> upoly.UPoly:
    if not pairs:
        return ()
    coeffs = [0] * (max(d for d, _ in pairs) + 1)
    for d, c in pairs:
        coeffs[d] += c
    return upoly.trim(coeffs)


def load_paper_reference(path: str | Path | None = None) -> Dict[str, PaperReference]:
    """Read the transcribed reference families (bundled file unless ``path`` is given)."""
    if path is None:
        text = resources.files("quartic_families.data").joinpath("paper_families.json").read_text()
    else:
        text = Path(path).read_text()
    raw = json.loads(text)
    out = {}
    for method, entry in raw.items():
        if method.startswith("_"):
            continue
        integer = {n: _from_terms(entry["integer"][n]) for n in COMPONENTS}
        rational = {}
        for n, form in entry.get("rational", {}).items():
            rational[n] = RationalForm(
                tuple(_from_terms(f) for f in form["num_factors"]),
                tuple(_from_terms(f) for f in form["den_factors"]),
            )
        out[method] = PaperReference(method, integer, rational)
    return out


@dataclass
class ComponentReport:
    status: str
    diffs: List[Tuple[int, Fraction, Fraction]]
    printed_at_1: Fraction | None = None
    derived_at_1: Fraction | None = None
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "status": self.status,
            "diffs": [[d, _js(a), _js(b)] for d, a, b in self.diffs],
        }
        if self.printed_at_1 is not None:
            out["value_at_1"] = {"printed": _js(self.printed_at_1), "derived": _js(self.derived_at_1)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class FidelityReport:
    method: str
    scale: Fraction
    integer: Dict[str, ComponentReport]
    rational: Dict[str, ComponentReport]

    @property
    def status(self) -> str:
        parts = list(self.integer.values()) + list(self.rational.values())
        return MATCH if all(c.status == MATCH for c in parts) else MISMATCH

    def mismatches(self) -> List[str]:
        out = [f"integer:{n}" for n, c in self.integer.items() if c.status != MATCH]
        out += [f"rational:{n}" for n, c in self.rational.items() if c.status != MATCH]
        return out

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "status": self.status,
            "scale": _js(self.scale),
            "integer": {n: c.to_json() for n, c in self.integer.items()},
            "rational": {n: c.to_json() for n, c in self.rational.items()},
        }

    def format_text(self) -> str:
        lines = [f"{self.method}: {self.status} (scale g = {self.scale})"]
        for kind, comps in (("integer", self.integer), ("rational", self.rational)):
            for name, c in comps.items():
                line = f"  {kind} {name}: {c.status}"
                if c.status != MATCH and c.printed_at_1 is not None:
                    line += f"  value at t=1 printed {c.printed_at_1}, derived {c.derived_at_1}"
                if c.note:
                    line += f"  ({c.note})"
                lines.append(line)
                for d, a, b in c.diffs:
                    lines.append(f"      degree {d}: printed {a}, derived {b}")
        return "\n".join(lines)


def _js(value):
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else str(value)


def _sign(x) -> int:
    return -1 if x < 0 else 1


def _diff(printed: upoly.UPoly, derived: upoly.UPoly) -> List[Tuple[int, Fraction, Fraction]]:
    n = max(len(printed), len(derived))
    pad = lambda a: list(a) + [0] * (n - len(a))
    return [(d, a, b) for d, (a, b) in enumerate(zip(pad(printed), pad(derived))) if a != b]


def _aligned(printed: upoly.UPoly, derived: upoly.UPoly) -> upoly.UPoly:
    """``derived`` with its sign flipped if that makes the leading coefficients agree."""
    if printed and derived and _sign(upoly.lead(printed)) != _sign(upoly.lead(derived)):
        return upoly.neg(derived)
    return derived


def _compare_rational(form: RationalForm, derived: RatFunc) -> ComponentReport:
    printed = form.ratfunc()
    if printed == derived or printed == -derived:
        return ComponentReport(MATCH, [])
    lead_factor = form.num_factors[-1]
    rest = RatFunc(_product(form.num_factors[:-1]))
    target = derived * RatFunc(_product(form.den_factors)) / rest
    if len(target.den) == 1:
        got = _aligned(lead_factor, target.as_polynomial())
        return ComponentReport(MISMATCH, _diff(lead_factor, got), note="numerator factor")
    return ComponentReport(MISMATCH, [], note="derived form does not share the printed denominator")


def compare_with_paper(fam: IntegerSolutionFamily, reference: PaperReference) -> FidelityReport:
    """Match the printed family up to per-component sign and a single (g, g, g^2, g^2) scale."""
    derived = fam.components()
    lp, ld = upoly.lead(reference.integer["X"]), upoly.lead(derived["X"])
    g = abs(Fraction(lp) / ld) if lp and ld else Fraction(1)

    integer = {}
    for name in COMPONENTS:
        printed = reference.integer[name]
        scaled = _aligned(printed, upoly.scale(derived[name], g ** WEIGHTS[name]))
        diffs = _diff(printed, scaled)
        integer[name] = ComponentReport(
            MATCH if not diffs else MISMATCH,
            diffs,
            Fraction(upoly.evaluate(printed, 1)),
            Fraction(upoly.evaluate(scaled, 1)),
        )

    rational = {}
    for name, form in reference.rational.items():
        value = RatFunc(derived[name]) / fam.lam ** WEIGHTS[name]
        rational[name] = _compare_rational(form, value)
    return FidelityReport(reference.method, g, integer, rational)
