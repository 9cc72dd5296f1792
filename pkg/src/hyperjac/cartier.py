"""Cartier-Manin matrices of y^2 = f(x) and the genus-2 supersingularity test."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import FieldElement, FieldSpec, Poly, is_separable

__all__ = [
    "CurveModel", "CMMatrix", "Classification", "cm_matrix", "frobenius_twist",
    "classify_ss_g2", "det_identity_check", "reduce_even_to_odd",
]

MAX_DEGREE = 10


@dataclass(frozen=True)
class CurveModel:
    """The hyperelliptic curve y^2 = f(x) with f separable of degree 3..10."""

    f: Poly

    def __post_init__(self):
        n = self.f.degree
        if not 3 <= n <= MAX_DEGREE:
            raise ValueError(f"degree of f must lie in 3..{MAX_DEGREE}, got {n}")
        if not is_separable(self.f):
            raise ValueError("f has a repeated root")

    @property
    def spec(self) -> FieldSpec:
        return self.f.spec

    @property
    def degree(self) -> int:
        return self.f.degree

    @property
    def genus(self) -> int:
        return (self.f.degree - 1) // 2


class CMMatrix:
    """Square matrix over a finite field, stored as integer codes."""

    __slots__ = ("spec", "rows")

    def __init__(self, spec: FieldSpec, rows):
        self.spec = spec
        self.rows = tuple(tuple(spec(c).value if not isinstance(c, int) else c for c in r)
                          for r in rows)
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("Cartier-Manin matrix must be square")

    @classmethod
    def from_elements(cls, rows) -> CMMatrix:
        rows = [list(r) for r in rows]
        spec = rows[0][0].spec
        return cls(spec, [[e.value for e in r] for r in rows])

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.spec, self.rows[i][j])

    def is_zero(self) -> bool:
        return all(c == 0 for r in self.rows for c in r)

    def __matmul__(self, other: CMMatrix) -> CMMatrix:
        if other.spec is not self.spec or other.size != self.size:
            raise ValueError("incompatible matrices")
        F, n = self.spec, self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = F.add(acc, F.mul(self.rows[i][k], other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return CMMatrix(F, out)

    def det(self) -> FieldElement:
        F = self.spec
        m = [list(r) for r in self.rows]
        n = len(m)
        det = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if m[r][c]), None)
            if piv is None:
                return FieldElement(F, 0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = F.neg(det)
            det = F.mul(det, m[c][c])
            inv = F.inv(m[c][c])
            for r in range(c + 1, n):
                u = F.mul(m[r][c], inv)
                if u:
                    m[r] = [F.sub(a, F.mul(u, b)) for a, b in zip(m[r], m[c])]
        return FieldElement(F, det)

    def to_lists(self) -> list[list[str]]:
        return [[self.spec.format(c) for c in r] for r in self.rows]

    def __eq__(self, other):
        if isinstance(other, CMMatrix):
            return self.spec is other.spec and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"CMMatrix({self.to_lists()})"


class Classification(enum.Enum):
    NOT_SUPERSINGULAR = "not_supersingular"
    SUPERSINGULAR_NOT_SUPERSPECIAL = "supersingular_not_superspecial"
    SUPERSPECIAL = "superspecial"

    @property
    def supersingular(self) -> bool:
        return self is not Classification.NOT_SUPERSINGULAR


def cm_matrix(c: CurveModel) -> CMMatrix:
    """M[i][j] = coefficient of x^(p*i - j) in f^((p-1)/2), 1 <= i, j <= g."""
    F = c.spec
    p, g = F.p, c.genus
    h = c.f ** ((p - 1) // 2)
    codes = h.codes
    rows = []
    for i in range(1, g + 1):
        row = []
        for j in range(1, g + 1):
            e = p * i - j
            row.append(codes[e] if e < len(codes) else 0)
        rows.append(row)
    return CMMatrix(F, rows)


def frobenius_twist(m: CMMatrix) -> CMMatrix:
    """Entrywise p-th power."""
    F = m.spec
    return CMMatrix(F, [[F.pow(x, F.p) for x in r] for r in m.rows])


def classify_ss_g2(c: CurveModel) -> Classification:
    """Three-way verdict for a genus-2 jacobian from its Cartier-Manin matrix."""
    if c.genus != 2:
        raise ValueError(f"classification needs genus 2, got genus {c.genus}")
    m = cm_matrix(c)
    if m.is_zero():
        return Classification.SUPERSPECIAL
    if (frobenius_twist(m) @ m).is_zero():
        return Classification.SUPERSINGULAR_NOT_SUPERSPECIAL
    return Classification.NOT_SUPERSINGULAR


def det_identity_check(a1: FieldElement, a2: FieldElement, a3: FieldElement,
                       a5: FieldElement) -> bool:
    """det(M^(3) M) == a1^4 a5^4 for f = a5 x^5 + a3 x^3 + a2 x^2 + a1 x + a0."""
    F = a5.spec
    if F.p != 3:
        raise ValueError("the determinant identity is stated for p = 3")
    if a5.is_zero():
        raise ValueError("a5 must be nonzero")
    # the a0 term never reaches M; a3 sits at x^3, outside M for p = 3
    f = Poly(F, [F.one, a1, a2, a3, F.zero, a5])
    codes = list(f.codes) + [0] * (6 - len(f.codes))
    m = CMMatrix(F, [[codes[2], codes[1]], [codes[5], codes[4]]])
    lhs = (frobenius_twist(m) @ m).det()
    return lhs == a1**4 * a5**4


def reduce_even_to_odd(f: Poly, alpha: FieldElement) -> Poly:
    """Odd-degree model x^(n-1) h(1/x), h(x) = (f / (x - alpha))(x + alpha).

    y^2 = f(x) and y1^2 = result(x1) are related by x1 = 1/(x - alpha),
    y1 = y / (x - alpha)^(n/2).
    """
    n = f.degree
    if n < 2 or n % 2:
        raise ValueError("reduction needs an even-degree polynomial")
    if not is_separable(f):
        raise ValueError("f has a repeated root")
    F = f.spec
    alpha = F(alpha)
    if not f(alpha).is_zero():
        raise ValueError(f"{alpha} is not a root of f")
    f1, rem = divmod(f, Poly(F, [-alpha, F.one]))
    assert rem.is_zero()
    h = f1.shift(alpha)
    h1 = h.reverse(n - 1)
    if h1.degree != n - 1:
        raise AssertionError("reversed polynomial lost degree")
    return h1
