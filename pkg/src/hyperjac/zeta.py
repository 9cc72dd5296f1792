"""Point counts, L-polynomials and Newton slopes of y^2 = f(x).

This is the brute-force oracle: counts come from evaluating f at every point
of F_{q^k} and summing the quadratic character.  Nothing here consults the
Cartier-Manin matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import GF, FieldSpec, Poly, embedding
from .cartier import CurveModel

__all__ = [
    "LPolynomial", "count_points", "count_points_batch", "l_polynomial",
    "newton_slopes", "is_supersingular_zeta", "SIZE_GUARD",
]

SIZE_GUARD = 10**7
# cells of (polynomials x points) evaluated per numpy pass
_CHUNK_CELLS = 1 << 20


@dataclass(frozen=True)
class LPolynomial:
    """L(t) = 1 + a1 t + ... + a_{2g} t^{2g} over F_q."""

    q: int
    g: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c, q, g = self.coeffs, self.q, self.g
        if len(c) != 2 * g + 1 or c[0] != 1 or c[-1] != q**g:
            raise ValueError(f"malformed L-polynomial {c} for q={q}, g={g}")
        for i in range(g + 1):
            if c[2 * g - i] != q ** (g - i) * c[i]:
                raise ValueError(f"functional equation fails at index {i}")
        if g and abs(c[1]) > 2 * g * math.isqrt(q - 1) + 2 * g:
            raise ValueError(f"|a1| = {abs(c[1])} violates the Weil bound")

    def __call__(self, t: int) -> int:
        return sum(a * t**i for i, a in enumerate(self.coeffs))

    def power_sums(self, n: int) -> list[int]:
        """s_k = sum alpha_i^k for k = 1..n, alpha_i the inverse roots."""
        # L(t) = prod (1 - alpha_i t): e_i = (-1)^i a_i
        e = [(-1) ** i * a for i, a in enumerate(self.coeffs)]
        s = []
        for k in range(1, n + 1):
            val = (-1) ** (k - 1) * k * (e[k] if k < len(e) else 0)
            # Newton: s_k = sum_{i<k} (-1)^(i-1) e_i s_{k-i} + (-1)^(k-1) k e_k
            for i in range(1, k):
                ei = e[i] if i < len(e) else 0
                val += (-1) ** (i - 1) * ei * s[k - i - 1]
            s.append(val)
        return s

    def point_counts(self, n: int) -> list[int]:
        """N_k = q^k + 1 - s_k implied by L."""
        return [self.q**k + 1 - s for k, s in enumerate(self.power_sums(n), 1)]


def _base_q(curve: CurveModel) -> int:
    return curve.spec.q


def _extension(spec: FieldSpec, k: int) -> tuple[FieldSpec, list[int]]:
    size = spec.q**k
    if size > SIZE_GUARD:
        raise ValueError(f"counting over a field of size {size} exceeds the {SIZE_GUARD} guard")
    big = GF(spec.p, spec.k * k)
    return big, embedding(spec, big)


def _char_sums(coeffs: np.ndarray, big: FieldSpec) -> np.ndarray:
    """For each row a_0..a_n (codes in ``big``), sum over x of chi(f(x))."""
    p, Q = big.p, big.q
    exp, log = big.exp_table, big.log_table
    dig, pw = big.digit_table, big._pw
    nrows, ncols = coeffs.shape
    out = np.zeros(nrows, dtype=np.int64)
    xchunk = min(Q, max(1, _CHUNK_CELLS))
    rchunk = max(1, _CHUNK_CELLS // xchunk)
    for x0 in range(0, Q, xchunk):
        xs = np.arange(x0, min(Q, x0 + xchunk), dtype=np.int64)
        logx = log[xs]
        xzero = xs == 0
        for r0 in range(0, nrows, rchunk):
            block = coeffs[r0:r0 + rchunk]
            acc = np.repeat(block[:, -1:], len(xs), axis=1)
            for i in range(ncols - 2, -1, -1):
                la = log[acc]
                prod = exp[np.maximum(la, 0) + np.maximum(logx, 0)]
                prod = np.where((acc == 0) | xzero, 0, prod)
                c = block[:, i:i + 1]
                if big.k == 1:
                    acc = (prod + c) % p
                else:
                    acc = ((dig[prod] + dig[c]) % p) @ pw
            lv = log[acc]
            chi = np.where(acc == 0, 0, np.where(lv % 2 == 0, 1, -1))
            out[r0:r0 + len(block)] += chi.sum(axis=1)
    return out


def count_points_batch(polys: list[Poly], k: int = 1) -> list[int]:
    """Projective point counts over F_{q^k} for y^2 = f(x), f in ``polys``.

    All polynomials must share a field and a degree.
    """
    if not polys:
        return []
    spec, n = polys[0].spec, polys[0].degree
    if any(f.spec is not spec or f.degree != n for f in polys):
        raise ValueError("batch polynomials must share field and degree")
    big, emb = _extension(spec, k)
    coeffs = np.array([[emb[c] for c in f.codes] for f in polys], dtype=np.int64)
    sums = _char_sums(coeffs, big)
    counts = []
    for f, s in zip(polys, sums.tolist()):
        affine = big.q + s
        if n % 2:
            inf = 1
        else:
            lc = emb[f.codes[-1]]
            inf = 2 if big.log_table[lc] % 2 == 0 else 0
        counts.append(affine + inf)
    return counts


def count_points(c: CurveModel, k: int = 1) -> int:
    """Points on the smooth projective model over F_{q^k}."""
    return count_points_batch([c.f], k)[0]


def _l_from_counts(q: int, g: int, counts: list[int]) -> LPolynomial:
    # s_k = q^k + 1 - N_k, Newton: k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} s_i
    s = [q**k + 1 - n for k, n in enumerate(counts, 1)]
    e = [1]
    for k in range(1, g + 1):
        tot = sum((-1) ** (i - 1) * e[k - i] * s[i - 1] for i in range(1, k + 1))
        if tot % k:
            raise AssertionError(f"inconsistent point counts {counts}")
        e.append(tot // k)
    a = [(-1) ** i * e[i] for i in range(g + 1)]
    full = a + [q ** (g - i) * a[i] for i in range(g - 1, -1, -1)]
    return LPolynomial(q, g, tuple(full))


def l_polynomial(c: CurveModel, counts: list[int] | None = None) -> LPolynomial:
    """L-polynomial from N_1..N_g (computed unless supplied)."""
    g = c.genus
    if counts is None:
        counts = [count_points(c, k) for k in range(1, g + 1)]
    return _l_from_counts(_base_q(c), g, counts[:g])


def _vp(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def newton_slopes(L: LPolynomial, p: int) -> list[Fraction]:
    """Slopes of the lower convex hull of (i, v_p(a_i) / log_p q), sorted."""
    q = L.q
    k = round(math.log(q, p))
    if p**k != q:
        raise ValueError(f"q = {q} is not a power of {p}")
    pts = [(i, Fraction(_vp(a, p), k)) for i, a in enumerate(L.coeffs) if a]
    hull: list[tuple[int, Fraction]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop the middle point unless it lies strictly below the chord
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.extend([(y2 - y1) / (x2 - x1)] * (x2 - x1))
    return sorted(slopes)


def is_supersingular_zeta(c: CurveModel) -> bool:
    """All Newton slopes of the L-polynomial equal 1/2."""
    L = l_polynomial(c)
    return all(s == Fraction(1, 2) for s in newton_slopes(L, c.spec.p))
