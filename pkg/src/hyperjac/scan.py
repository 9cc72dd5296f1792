"""Exhaustive family sweeps cross-checking the matrix verdict against zeta."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FieldSpec, Poly, is_separable
from .cartier import Classification, CurveModel, classify_ss_g2
from .zeta import LPolynomial, _l_from_counts, count_points_batch, newton_slopes

__all__ = [
    "ScanRecord", "ScanSummary", "parse_template", "enumerate_family", "scan_family",
    "check_l_polynomial",
]

MAX_INSTANCES = 10**6
_BATCH = 2048


@dataclass(frozen=True)
class ScanRecord:
    field: str
    codes: tuple[int, ...]
    coeffs: tuple[str, ...]
    classification: Classification
    counts: tuple[int, ...]
    l_poly: tuple[int, ...]
    slopes: tuple[Fraction, ...]
    agreement: bool

    @property
    def zeta_supersingular(self) -> bool:
        return all(s == Fraction(1, 2) for s in self.slopes)

    def to_dict(self) -> dict:
        return {
            "field": self.field,
            "f": list(self.coeffs),
            "classification": self.classification.value,
            "counts": list(self.counts),
            "l_poly": list(self.l_poly),
            "slopes": [str(s) for s in self.slopes],
            "agreement": self.agreement,
        }


@dataclass
class ScanSummary:
    total: int = 0
    degenerate: int = 0
    separable: int = 0
    supersingular: int = 0
    disagreements: int = 0
    classes: Counter = None

    def __post_init__(self):
        if self.classes is None:
            self.classes = Counter()

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "degenerate": self.degenerate,
            "separable": self.separable,
            "supersingular": self.supersingular,
            "disagreements": self.disagreements,
            "classifications": {c.value: self.classes.get(c, 0) for c in Classification},
        }


def parse_template(spec: FieldSpec, text: str) -> list:
    """Ascending coefficient template; ``*`` ranges over the whole field.

    Returns a list whose entries are element codes or ``None`` for wildcards.
    """
    out = []
    for tok in (s.strip() for s in text.split(",")):
        if not tok:
            raise ValueError(f"malformed template {text!r}")
        out.append(None if tok == "*" else spec.parse(tok).value)
    if len(out) not in (6, 7):
        raise ValueError("scan templates describe genus-2 models: 6 or 7 coefficients")
    return out


def enumerate_family(spec: FieldSpec, template: list):
    """Coefficient code tuples in lexicographic order of the wildcard values."""
    holes = [i for i, c in enumerate(template) if c is None]
    n = spec.q ** len(holes)
    if n > MAX_INSTANCES:
        raise ValueError(f"family has {n} members, above the {MAX_INSTANCES} limit")
    for values in itertools.product(range(spec.q), repeat=len(holes)):
        cs = list(template)
        for i, v in zip(holes, values):
            cs[i] = v
        yield tuple(cs)


def _records_for(batch, spec):
    curves = [CurveModel(f) for f in batch]
    counts = [count_points_batch(batch, k) for k in (1, 2)]
    out = []
    for j, c in enumerate(curves):
        L = _l_from_counts(spec.q, 2, [counts[0][j], counts[1][j]])
        slopes = tuple(newton_slopes(L, spec.p))
        verdict = classify_ss_g2(c)
        zeta_ss = all(s == Fraction(1, 2) for s in slopes)
        out.append(ScanRecord(spec.name, c.f.codes, tuple(c.f.to_list()), verdict,
                              (counts[0][j], counts[1][j]), L.coeffs, slopes,
                              verdict.supersingular == zeta_ss))
    return out


def scan_family(spec: FieldSpec, template: list, summary: ScanSummary | None = None):
    """Yield a :class:`ScanRecord` per separable genus-2 member, in order.

    Members whose degree falls below 5 or that have repeated roots are
    counted in ``summary`` and skipped.
    """
    summary = summary if summary is not None else ScanSummary()
    pending: dict[int, list[Poly]] = {}
    order: list[tuple[int, int]] = []

    def flush():
        results = {}
        for deg, polys in pending.items():
            recs = []
            for i in range(0, len(polys), _BATCH):
                recs.extend(_records_for(polys[i:i + _BATCH], spec))
            results[deg] = iter(recs)
        emitted = [next(results[deg]) for deg, _ in order]
        pending.clear()
        order.clear()
        return emitted

    for codes in enumerate_family(spec, template):
        summary.total += 1
        f = Poly.from_codes(spec, codes)
        if f.degree not in (5, 6):
            summary.degenerate += 1
            continue
        if not is_separable(f):
            continue
        summary.separable += 1
        pending.setdefault(f.degree, []).append(f)
        order.append((f.degree, len(pending[f.degree]) - 1))
        if len(order) >= 8 * _BATCH:
            yield from _tally(flush(), summary)
    if order:
        yield from _tally(flush(), summary)


def _tally(records, summary):
    for r in records:
        summary.classes[r.classification] += 1
        if r.classification.supersingular:
            summary.supersingular += 1
        if not r.agreement:
            summary.disagreements += 1
        yield r


def check_l_polynomial(L: LPolynomial, p: int, counts: list[int]) -> list[str]:
    """Structural self-checks; returns failure descriptions (empty when fine)."""
    problems = []
    if L.point_counts(len(counts)) != list(counts):
        problems.append("power sums do not reproduce the counts")
    slopes = newton_slopes(L, p)
    if sorted(1 - s for s in slopes) != slopes:
        problems.append("slopes not symmetric under s -> 1 - s")
    if L(1) <= 0:
        problems.append("L(1) is not positive")
    return problems
