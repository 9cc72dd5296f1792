"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element is a polynomial in zeta_m of degree < phi(m), reduced modulo the
m-th cyclotomic polynomial, stored as integer numerators over one positive
common denominator.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd

__all__ = ["Cyclotomic", "cyclotomic_poly", "euler_phi"]


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@functools.cache
def euler_phi(n: int) -> int:
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


@functools.cache
def _mobius(n: int) -> int:
    out, k = 1, 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            out = -out
        k += 1
    return -out if n > 1 else out


@functools.cache
def _kernel_gens(m: int, c: int) -> tuple[int, ...]:
    """Generators of {a in (Z/m)^* : a = 1 mod c}."""
    members = [a for a in range(1, m + 1) if gcd(a, m) == 1 and (a - 1) % c == 0]
    gens, span = [], {1 % m}
    for a in members:
        if a % m in span:
            continue
        gens.append(a)
        frontier = list(span)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = x * g % m
                    if y not in span:
                        span.add(y)
                        nxt.append(y)
            frontier = nxt
    return tuple(gens)


@functools.cache
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, ascending."""
    num = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(a, b):
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] // b[-1]
        q[i - db] = c
        if c:
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    if any(a[:db]):
        raise ArithmeticError("inexact cyclotomic division")
    return q


def _reduce(vec, m):
    """Reduce an integer vector indexed by exponents modulo Phi_m."""
    phi = cyclotomic_poly(m)
    d = len(phi) - 1
    v = list(vec)
    for i in range(len(v) - 1, d - 1, -1):
        c = v[i]
        if c:
            for j in range(d + 1):
                v[i - d + j] -= c * phi[j]
    return v[:d] + [0] * (d - len(v))


class Cyclotomic:
    """Element of Q(zeta_m); immutable."""

    __slots__ = ("m", "num", "den")

    def __init__(self, m: int, num, den: int = 1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        num = list(num)
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.m = m
        self.num = tuple(num)
        self.den = den

    @classmethod
    def from_exponents(cls, m: int, terms: dict[int, int]) -> Cyclotomic:
        """sum c * zeta_m^e over ``terms`` items (e taken mod m)."""
        vec = [0] * m
        for e, c in terms.items():
            vec[e % m] += c
        return cls(m, _reduce(vec, m))

    @classmethod
    def rational(cls, m: int, value) -> Cyclotomic:
        value = Fraction(value)
        d = euler_phi(m)
        return cls(m, [value.numerator] + [0] * (d - 1), value.denominator)

    @classmethod
    def zeta(cls, m: int, power: int = 1) -> Cyclotomic:
        return cls.from_exponents(m, {power: 1})

    # -- coercion ----------------------------------------------------------

    def lift(self, m2: int) -> Cyclotomic:
        """Same number viewed in Q(zeta_m2), m | m2."""
        if m2 == self.m:
            return self
        if m2 % self.m:
            raise ValueError(f"Q(zeta_{self.m}) is not inside Q(zeta_{m2})")
        step = m2 // self.m
        vec = [0] * m2
        for i, c in enumerate(self.num):
            vec[i * step] += c
        return Cyclotomic(m2, _reduce(vec, m2), self.den)

    def _common(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(self.m, other)
        if not isinstance(other, Cyclotomic):
            return None, None
        if other.m == self.m:
            return self, other
        L = self.m * other.m // gcd(self.m, other.m)
        return self.lift(L), other.lift(L)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        num = [x * b.den + y * a.den for x, y in zip(a.num, b.num)]
        return Cyclotomic(a.m, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.m, [-c for c in self.num], self.den)

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        m = a.m
        vec = [0] * (2 * len(a.num))
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        vec[i + j] += x * y
        return Cyclotomic(m, _reduce(vec, m), a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero")
            num = [c * other.denominator for c in self.num]
            den = self.den * abs(other.numerator)
            if other.numerator < 0:
                num = [-c for c in num]
            return Cyclotomic(self.m, num, den)
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        return NotImplemented

    def inverse(self) -> Cyclotomic:
        """1/x as the product of the other Galois conjugates over the norm."""
        if self.is_zero():
            raise ZeroDivisionError("division by zero")
        m = self.m
        acc = Cyclotomic.rational(m, 1)
        for a in range(2, m):
            if gcd(a, m) == 1:
                acc = acc * self.galois(a)
        norm = (acc * self).to_fraction()
        return acc / norm

    def __pow__(self, e: int) -> Cyclotomic:
        if e < 0:
            return self.inverse() ** (-e)
        out, base = Cyclotomic.rational(self.m, 1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def galois(self, a: int) -> Cyclotomic:
        """Image under zeta_m -> zeta_m^a, gcd(a, m) = 1."""
        if gcd(a, self.m) != 1:
            raise ValueError(f"{a} is not a unit mod {self.m}")
        vec = [0] * self.m
        for i, c in enumerate(self.num):
            vec[(a * i) % self.m] += c
        return Cyclotomic(self.m, _reduce(vec, self.m), self.den)

    def conjugate(self) -> Cyclotomic:
        return self.galois(self.m - 1) if self.m > 2 else self

    # -- predicates -----------------------------------------------------------

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def is_zero(self) -> bool:
        return not any(self.num)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0] if self.num else 0, self.den)

    def conductor(self) -> int:
        """Smallest c | m with this element in Q(zeta_c)."""
        if self.is_rational():
            return 1
        for c in _divisors(self.m):
            if all(self.galois(a) == self for a in _kernel_gens(self.m, c)):
                return c
        return self.m  # pragma: no cover

    def descend(self) -> Cyclotomic:
        """The same element written over its conductor."""
        c = self.conductor()
        if c == self.m:
            return self
        if c in (1, 2):
            return Cyclotomic.rational(1, self.to_fraction())
        # solve sum x_i zeta_c^i = self over Q
        d = euler_phi(c)
        cols = [Cyclotomic.zeta(c, i).lift(self.m).num for i in range(d)]
        n = len(self.num)
        aug = [[Fraction(cols[j][r]) for j in range(d)] + [Fraction(self.num[r], self.den)]
               for r in range(n)]
        sol = _solve(aug, d)
        den = 1
        for x in sol:
            den = den * x.denominator // gcd(den, x.denominator)
        return Cyclotomic(c, [int(x * den) for x in sol], den)

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        # normalized trace is unchanged by lifting, so equal values hash equally
        return hash(self.normalized_trace())

    def normalized_trace(self) -> Fraction:
        """Tr_{Q(zeta_m)/Q}(x) / phi(m)."""
        tot = Fraction(0)
        for i, c in enumerate(self.num):
            if c:
                mi = self.m // gcd(i, self.m)
                tot += Fraction(c * _mobius(mi), euler_phi(mi))
        return tot / self.den

    def __str__(self):
        d = self.descend()
        if d.is_rational():
            return str(d.to_fraction())
        terms = []
        for i, c in enumerate(d.num):
            if not c:
                continue
            mono = "" if i == 0 else (f"z_{d.m}" if i == 1 else f"z_{d.m}^{i}")
            coef = Fraction(c, d.den)
            if mono and abs(coef) == 1:
                body = mono
            elif mono:
                body = f"{abs(coef)}*{mono}"
            else:
                body = str(abs(coef))
            terms.append(("-" if coef < 0 else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Cyclotomic({self})"


def _solve(aug, nvars):
    rows = [r[:] for r in aug]
    piv_cols = []
    r = 0
    for c in range(nvars):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(row[-1] != 0 for row in rows[r:]):
        raise ArithmeticError("inconsistent descent system")
    sol = [Fraction(0)] * nvars
    for i, c in enumerate(piv_cols):
        sol[c] = rows[i][-1]
    return sol
