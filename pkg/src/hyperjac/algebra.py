"""Exact arithmetic in F_{p^k} and in univariate polynomial rings over it.

Elements of F_{p^k} = F_p[t]/(m(t)) are encoded as integers
``c0 + c1*p + ... + c_{k-1}*p^(k-1)`` where ``c0 + c1*t + ...`` is the
reduced representative.  Multiplication goes through discrete log tables,
addition through Zech logarithms (prime fields use plain modular
arithmetic).  The modulus ``m`` is the canonical one: the monic irreducible
whose coefficient tuple ``(c0, ..., c_{k-1})`` is lexicographically smallest.

Polynomials are dense, ascending, with trailing zeros stripped.
"""

from __future__ import annotations

import functools
import itertools
import math
from math import isqrt

import numpy as np
from sympy import factorint, isprime

__all__ = [
    "FieldSpec", "FieldElement", "Poly", "GF", "parse_field",
    "poly_gcd", "is_separable", "resultant", "discriminant", "is_square",
    "galois_in_alternating", "critical_value_resolvent", "is_morse",
    "depress_quintic", "embedding",
]

NEG_INF = -math.inf

# scalar ops use Python lists below this size, numpy arrays above it
_LIST_TABLE_LIMIT = 1 << 20
# hard cap on table-backed fields (10^7 elements)
MAX_FIELD_SIZE = 10**7


# ---------------------------------------------------------------------------
# F_p[x] helpers on plain int lists (used before any tables exist)

def _fp_strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _fp_strip(q), _fp_strip(a[:db])


def _fp_mulmod(a, b, m, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _fp_divmod(_fp_strip(prod), m, p)[1]


def _fp_powmod(a, e, m, p):
    result = [1]
    base = _fp_divmod(a, m, p)[1]
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(a, b, p):
    a, b = _fp_strip(list(a)), _fp_strip(list(b))
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    return a


def _fp_is_irreducible(m, p):
    """Irreducibility of a monic ``m`` over F_p.

    Degrees up to 8 use exhaustive trial division by every monic polynomial
    of degree at most k/2; larger degrees use Rabin's test.
    """
    k = len(m) - 1
    if k <= 1:
        return k == 1
    if k <= 8:
        for d in range(1, k // 2 + 1):
            for tail in itertools.product(range(p), repeat=d):
                if not _fp_divmod(m, list(tail) + [1], p)[1]:
                    return False
        return True
    x = [0, 1]
    if _fp_powmod(x, p**k, m, p) != x:
        return False
    for r in factorint(k):
        h = _fp_powmod(x, p ** (k // r), m, p)
        h = _fp_strip([(c - (i == 1)) % p for i, c in enumerate(h + [0] * (2 - len(h)))])
        if len(_fp_gcd(m, h, p)) != 1:
            return False
    return True


def _canonical_modulus(p, k):
    if k == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=k):
        m = list(tail) + [1]
        if m[0] and _fp_is_irreducible(m, p):
            return tuple(m)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


# ---------------------------------------------------------------------------
# the field

class FieldSpec:
    """The finite field F_{p^k}, p an odd prime, with a canonical model.

    Use :func:`GF` rather than the constructor; instances are cached and
    immutable, so identity comparison is field equality.
    """

    def __init__(self, p: int, k: int = 1):
        if not isinstance(p, int) or not isprime(p):
            raise ValueError(f"characteristic must be prime, got {p!r}")
        if p == 2:
            raise ValueError("characteristic 2 is not supported")
        if k < 1:
            raise ValueError("extension degree must be at least 1")
        q = p**k
        if q > MAX_FIELD_SIZE:
            raise ValueError(f"field of size {q} exceeds the {MAX_FIELD_SIZE} limit")
        self.p = p
        self.k = k
        self.q = q
        self.modulus = _canonical_modulus(p, k)
        self._pw = np.array([p**i for i in range(k)], dtype=np.int64)
        self._build_tables()

    def _mult_matrix(self, g):
        # matrix of y -> g*y on F_p^k (column convention)
        p, k, m = self.p, self.k, list(self.modulus)
        mat = np.zeros((k, k), dtype=np.int64)
        for j in range(k):
            basis = [0] * j + [1]
            col = _fp_mulmod(self._digits_int(g), basis, m, p)
            mat[:len(col), j] = col
        return mat

    def _digits_int(self, a):
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return _fp_strip(out)

    def _find_generator(self):
        p, q, m = self.p, self.q, list(self.modulus)
        if q == 3:
            return 2
        primes = list(factorint(q - 1))
        for g in range(2, q):
            gd = self._digits_int(g)
            if all(_fp_powmod(gd, (q - 1) // r, m, p) != [1] for r in primes):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        n = q - 1
        g = self._find_generator()
        self.generator_code = g
        mat = self._mult_matrix(g)
        block = isqrt(n) + 1
        first = np.zeros((block, k), dtype=np.int64)
        v = np.zeros(k, dtype=np.int64)
        v[0] = 1
        for i in range(block):
            first[i] = v
            v = mat @ v % p
        step = np.eye(k, dtype=np.int64)
        base, e = mat.copy(), block
        while e:
            if e & 1:
                step = step @ base % p
            base = base @ base % p
            e >>= 1
        rows = -(-n // block)
        digits = np.empty((rows * block, k), dtype=np.int64)
        cur = first
        for r in range(rows):
            digits[r * block:(r + 1) * block] = cur
            cur = cur @ step.T % p
        digits = digits[:n]
        exp = digits @ self._pw
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if np.any(log[1:] < 0):
            raise AssertionError("generator does not span the multiplicative group")
        exp2 = np.concatenate([exp, exp])
        # Zech logarithm: g^zech[i] = 1 + g^i, -1 where 1 + g^i = 0
        plus_one = digits.copy()
        plus_one[:, 0] = (plus_one[:, 0] + 1) % p
        zech = log[plus_one @ self._pw]
        all_digits = np.zeros((q, k), dtype=np.int64)
        all_digits[exp] = digits
        self.exp_table = exp2
        self.log_table = log
        self.digit_table = all_digits
        if q <= _LIST_TABLE_LIMIT:
            self._exp = exp2.tolist()
            self._log = log.tolist()
            self._zech = zech.tolist()
        else:
            self._exp, self._log, self._zech = exp2, log, zech
        self._half = n // 2

    # -- scalar ops on integer codes ------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        d = self._log[b] - la
        if d < 0:
            d += self.q - 1
        z = self._zech[d]
        if z < 0:
            return 0
        return int(self._exp[la + z])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if a == 0:
            return 0
        return int(self._exp[self._log[a] + self._half])

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.k == 1:
            return a * b % self.p
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.k == 1:
            return pow(a, -1, self.p)
        la = self._log[a]
        return int(self._exp[(self.q - 1 - la) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        if self.k == 1:
            return pow(a, e, self.p)
        return int(self._exp[(self._log[a] * e) % (self.q - 1)])

    def from_int(self, n: int) -> int:
        return n % self.p

    def digits(self, a: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, digits) -> int:
        if len(digits) > self.k:
            raise ValueError(f"too many basis coefficients for F_{self.q}")
        return sum((c % self.p) * self.p**i for i, c in enumerate(digits))

    # -- element-level API ----------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.spec is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        if isinstance(value, str):
            return self.parse(value)
        return FieldElement(self, self.from_digits(list(value)))

    def element(self, code: int) -> FieldElement:
        """Element from its integer code."""
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for F_{self.q}")
        return FieldElement(self, code)

    def elements(self):
        """All elements in ascending code order."""
        return [FieldElement(self, c) for c in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The basis element t (or 1 in a prime field)."""
        return FieldElement(self, self.p if self.k > 1 else 1)

    def parse(self, text: str) -> FieldElement:
        """Parse ``"c0+c1*t+c2*t^2"``-style input; bare integers are residues mod p."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty field element")
        digits = [0] * self.k
        for sign, term in _split_terms(s):
            if "t" in term:
                if self.k == 1:
                    raise ValueError(f"'t' is undefined in the prime field F_{self.p}")
                coef, _, power = term.partition("t")
                coef = coef.rstrip("*")
                c = int(coef) if coef else 1
                e = int(power.lstrip("^")) if power else 1
                if not power.startswith("^") and power:
                    raise ValueError(f"cannot parse term {term!r}")
            else:
                c, e = int(term), 0
            if e >= self.k:
                raise ValueError(f"power t^{e} is not reduced for F_{self.q}")
            digits[e] = (digits[e] + sign * c) % self.p
        return FieldElement(self, self.from_digits(digits))

    def format(self, code: int) -> str:
        terms = []
        for i, c in enumerate(self.digits(code)):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    @property
    def name(self) -> str:
        return str(self.p) if self.k == 1 else f"{self.p}^{self.k}"

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p, self.k))


def _split_terms(s):
    terms, sign, cur = [], 1, ""
    for ch in s:
        if ch in "+-" and cur and not cur.endswith("^"):
            terms.append((sign, cur))
            sign, cur = (1 if ch == "+" else -1), ""
        elif ch in "+-" and not cur:
            sign = sign * (1 if ch == "+" else -1)
        else:
            cur += ch
    if not cur:
        raise ValueError(f"dangling sign in {s!r}")
    terms.append((sign, cur))
    return terms


def GF(p: int, k: int = 1) -> FieldSpec:
    """The canonical F_{p^k}, cached per ``(p, k)``."""
    return _cached_field(int(p), int(k))


@functools.cache
def _cached_field(p, k):
    return FieldSpec(p, k)


def parse_field(text: str) -> FieldSpec:
    """Parse ``"p"``, ``"p^k"`` or a prime power such as ``"9"``."""
    s = text.strip()
    if "^" in s:
        p, _, k = s.partition("^")
        return GF(int(p), int(k))
    n = int(s)
    fac = factorint(n)
    if len(fac) != 1:
        raise ValueError(f"{n} is not a prime power")
    (p, k), = fac.items()
    return GF(int(p), int(k))


class FieldElement:
    """An element of a :class:`FieldSpec`; immutable and hashable."""

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value: int):
        self.spec = spec
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.digits(self.value)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec is not self.spec:
                raise ValueError(f"mixed fields {self.spec!r} and {other.spec!r}")
            return other.value
        if isinstance(other, int):
            return other % self.spec.p
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(b)))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(b, self.spec.inv(self.value)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def frobenius(self) -> FieldElement:
        """x -> x^p."""
        return self ** self.spec.p

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec is other.spec and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.spec.p
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self.value))

    def __str__(self):
        return self.spec.format(self.value)

    def __repr__(self):
        return f"{self.spec!r}({self})"


def embedding(small: FieldSpec, big: FieldSpec) -> list[int]:
    """Codes in ``big`` of every element of ``small``, indexed by code.

    The image of t is the smallest-code root of ``small.modulus`` in ``big``.
    """
    if small.p != big.p or big.k % small.k:
        raise ValueError(f"{small!r} does not embed in {big!r}")
    if small.k == 1:
        return list(range(small.q))
    root = None
    for r in range(big.q):
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, r), c)
        if acc == 0:
            root = r
            break
    images = []
    for code in range(small.q):
        acc = 0
        for c in reversed(small.digits(code)):
            acc = big.add(big.mul(acc, root), c)
        images.append(acc)
    return images


# ---------------------------------------------------------------------------
# polynomials

class Poly:
    """Dense univariate polynomial over a :class:`FieldSpec`.

    Internally a tuple of integer element codes, ascending, stripped.
    """

    __slots__ = ("spec", "_c")

    def __init__(self, spec: FieldSpec, coeffs=()):
        self.spec = spec
        cs = [spec(c).value if not isinstance(c, int) else c % spec.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._c = tuple(cs)

    @classmethod
    def _raw(cls, spec, codes):
        obj = object.__new__(cls)
        obj.spec = spec
        codes = list(codes)
        while codes and codes[-1] == 0:
            codes.pop()
        obj._c = tuple(codes)
        return obj

    @classmethod
    def from_codes(cls, spec: FieldSpec, codes) -> Poly:
        """Build from integer element codes (not residues)."""
        for c in codes:
            if not 0 <= c < spec.q:
                raise ValueError(f"code {c} out of range for F_{spec.q}")
        return cls._raw(spec, codes)

    @classmethod
    def x(cls, spec: FieldSpec) -> Poly:
        return cls._raw(spec, (0, 1))

    @classmethod
    def constant(cls, spec: FieldSpec, c) -> Poly:
        return cls(spec, [c])

    # -- structure -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.spec, c) for c in self._c)

    @property
    def codes(self) -> tuple[int, ...]:
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    def lc(self) -> FieldElement:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.spec, self._c[-1])

    def coeff(self, i: int) -> FieldElement:
        return FieldElement(self.spec, self._c[i] if 0 <= i < len(self._c) else 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.spec is other.spec and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((self.spec.p, self.spec.k, self._c))

    def _check(self, other):
        if isinstance(other, (int, FieldElement)):
            other = Poly(self.spec, [other])
        if not isinstance(other, Poly):
            return NotImplemented
        if other.spec is not self.spec:
            raise ValueError(f"mixed fields {self.spec!r} and {other.spec!r}")
        return other

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        F, a, b = self.spec, self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return Poly._raw(F, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.spec
        return Poly._raw(F, [F.neg(c) for c in self._c])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        F, a, b = self.spec, self._c, other._c
        if not a or not b:
            return Poly._raw(F, ())
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return Poly._raw(F, out)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        F = self.spec
        c = F(c).value
        return Poly._raw(F, [F.mul(c, x) for x in self._c])

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.spec
        rem = list(self._c)
        b = other._c
        db = len(b) - 1
        inv_lc = F.inv(b[-1])
        quo = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            c = F.mul(c, inv_lc)
            quo[i - db] = c
            for j in range(db + 1):
                if b[j]:
                    rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b[j]))
        return Poly._raw(F, quo), Poly._raw(F, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly._raw(self.spec, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate at a field element (or integer residue)."""
        F = self.spec
        xv = F(x).value
        acc = 0
        for c in reversed(self._c):
            acc = F.add(F.mul(acc, xv), c)
        return FieldElement(F, acc)

    def derivative(self) -> Poly:
        F = self.spec
        return Poly._raw(F, [F.mul(F.from_int(i), c) for i, c in enumerate(self._c)][1:])

    def monic(self) -> Poly:
        if not self._c:
            return self
        return self.scale(self.lc().inverse())

    def shift(self, c) -> Poly:
        """f(x + c)."""
        F = self.spec
        c = F(c).value
        acc = Poly._raw(F, ())
        lin = Poly._raw(F, (c, 1))
        for coef in reversed(self._c):
            acc = acc * lin + Poly._raw(F, (coef,))
        return acc

    def reverse(self, n: int | None = None) -> Poly:
        """x^n f(1/x), with n defaulting to deg f."""
        if n is None:
            n = len(self._c) - 1
        if n < len(self._c) - 1:
            raise ValueError("reversal degree below polynomial degree")
        cs = list(self._c) + [0] * (n + 1 - len(self._c))
        return Poly._raw(self.spec, cs[::-1])

    def map_coeffs(self, fn) -> Poly:
        return Poly._raw(self.spec, [fn(c) for c in self._c])

    # -- text ------------------------------------------------------------------

    def to_list(self) -> list[str]:
        return [self.spec.format(c) for c in self._c]

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if not c:
                continue
            cs = self.spec.format(c)
            if self.spec.k > 1 and "+" in cs:
                cs = f"({cs})"
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Poly({self.spec!r}, {self})"

    @classmethod
    def parse(cls, spec: FieldSpec, text: str) -> Poly:
        """Comma-separated ascending coefficients, e.g. ``"1,0,0,2,0,1"``."""
        parts = [s.strip() for s in text.split(",")]
        if not parts or any(not s for s in parts):
            raise ValueError(f"malformed coefficient list {text!r}")
        return cls(spec, [spec.parse(s) for s in parts])


# ---------------------------------------------------------------------------
# polynomial algorithms

def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero iff both inputs are zero)."""
    if a.spec is not b.spec:
        raise ValueError("mixed fields")
    while b:
        a, b = b, a % b
    return a.monic()


def is_separable(f: Poly) -> bool:
    if f.is_zero():
        raise ValueError("separability of the zero polynomial is undefined")
    if f.degree < 1:
        return True
    return poly_gcd(f, f.derivative()).degree == 0


def resultant(f: Poly, g: Poly) -> FieldElement:
    """Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.

    Euclidean remainder sequence:
    Res(a, b) = (-1)^(deg a deg b) lc(b)^(deg a - deg r) Res(b, r), r = a mod b.
    """
    if f.spec is not g.spec:
        raise ValueError("mixed fields")
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant with the zero polynomial")
    F = f.spec
    acc = 1
    a, b = f, g
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return FieldElement(F, F.mul(acc, F.pow(b._c[-1], da)))
        r = a % b
        if r.is_zero():
            return FieldElement(F, 0)
        dr = len(r) - 1
        if (da * db) % 2:
            acc = F.neg(acc)
        acc = F.mul(acc, F.pow(b._c[-1], da - dr))
        a, b = b, r


def discriminant(f: Poly) -> FieldElement:
    """lc^(2n-2) * prod_{i<j} (alpha_i - alpha_j)^2.

    Satisfies Res(f, f') = (-1)^(n(n-1)/2) lc(f) D when f' has full degree
    n - 1; a degree drop of f' in characteristic p is compensated.
    """
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree at least 2")
    F = f.spec
    df = f.derivative()
    if df.is_zero():
        return FieldElement(F, 0)
    r = resultant(f, df).value
    d = len(df) - 1
    lc = f._c[-1]
    # D = (-1)^(n(n-1)/2) lc^(n-2-d) Res(f, f')
    val = F.mul(r, F.pow(lc, n - 2 - d))
    if (n * (n - 1) // 2) % 2:
        val = F.neg(val)
    return FieldElement(F, val)


def is_square(x: FieldElement) -> bool:
    """Euler's criterion x^((q-1)/2) = 1; zero counts as a square."""
    if x.is_zero():
        return True
    return (x ** ((x.spec.q - 1) // 2)).value == 1


def galois_in_alternating(f: Poly) -> bool:
    """Galois group of separable f lies in A_n iff disc(f) is a square."""
    if not is_separable(f):
        raise ValueError("Galois group test needs a separable polynomial")
    return is_square(discriminant(f))


def _charpoly(mat, F):
    """Characteristic polynomial via Hessenberg reduction (any field)."""
    n = len(mat)
    H = [row[:] for row in mat]
    add, sub, mul, inv = F.add, F.sub, F.mul, F.inv
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        t = inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = mul(H[i][m - 1], t)
            if not u:
                continue
            for j in range(n):
                H[i][j] = sub(H[i][j], mul(u, H[m][j]))
            for row in H:
                row[m] = add(row[m], mul(u, row[i]))
    x = Poly.x(F)
    polys = [Poly._raw(F, (1,))]
    for m in range(1, n + 1):
        pm = (x - Poly._raw(F, (H[m - 1][m - 1],))) * polys[m - 1]
        t = 1
        for i in range(1, m):
            t = mul(t, H[m - i][m - i - 1])
            coef = mul(t, H[m - i - 1][m - 1])
            pm = pm - polys[m - i - 1].scale(FieldElement(F, coef))
        polys.append(pm)
    return polys[n]


def critical_value_resolvent(h: Poly) -> Poly:
    """Res_x(h'(x), T - h(x)) as a polynomial in T.

    Equals lc(h')^deg(h) times the characteristic polynomial of
    multiplication by h on F[x]/(h'), i.e. prod over critical points
    beta of (T - h(beta)) up to that constant.
    """
    F = h.spec
    dh = h.derivative()
    if dh.degree < 1:
        raise ValueError("resolvent needs a derivative of positive degree")
    d = len(dh) - 1
    hr = h % dh
    x = Poly.x(F)
    cols = []
    cur = hr
    for _ in range(d):
        cols.append(list(cur._c) + [0] * (d - len(cur._c)))
        cur = (cur * x) % dh
    mat = [[cols[j][i] for j in range(d)] for i in range(d)]
    cp = _charpoly(mat, F)
    return cp.scale(FieldElement(F, F.pow(dh._c[-1], len(h) - 1)))


def is_morse(h: Poly) -> bool:
    """h' has deg(h) - 1 distinct roots and the critical values are distinct."""
    n = h.degree
    if n < 2:
        raise ValueError("Morse test needs degree at least 2")
    dh = h.derivative()
    if dh.degree != n - 1:
        return False
    if not is_separable(dh):
        return False
    if n == 2:
        return True
    return is_separable(critical_value_resolvent(h))


def depress_quintic(f: Poly) -> tuple[FieldElement, Poly]:
    """Shift x -> x - gamma killing the x^4 term; gamma = a4 / (5 a5)."""
    if f.degree != 5:
        raise ValueError("depress_quintic needs a quintic")
    F = f.spec
    if F.p == 5:
        raise ValueError("cannot remove the quartic term in characteristic 5")
    a5, a4 = f.coeff(5), f.coeff(4)
    gamma = a4 / (a5 * 5)
    h = f.shift(-gamma)
    if not h.coeff(4).is_zero() or h.coeff(5) != a5:
        raise AssertionError("shifted quintic is not depressed")
    return gamma, h
