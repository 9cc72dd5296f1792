"""Character tables of small finite groups with exact cyclotomic values.

Tables come from the group itself (Dixon's method: common eigenvectors of
the class multiplication matrices modulo a prime P = 1 mod exp(G), then
lifted to Q(zeta_exp(G)) through eigenvalue multiplicities).  Nothing about
the expected answer is hardcoded except the one cited local-invariant fact
used by :func:`lemma_sl2_decision`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from sympy import isprime, primitive_root

from .cyclotomic import Cyclotomic
from .permmod import PermGroup

__all__ = [
    "FiniteGroup", "ConjugacyClass", "CharacterTable", "sl2", "psl2",
    "from_perm_group", "trivial_group", "conjugacy_classes", "character_table",
    "is_rational_character", "is_faithful_character", "frobenius_schur",
    "discrete_series_index", "lemma_sl2_decision", "SL2Decision", "CITED_QUATERNION_RAMIFICATION",
]

GROUP_GUARD = 10**4


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group by its sorted element list and multiplication table."""

    name: str
    elements: tuple
    table: tuple = field(repr=False)
    inverse: tuple = field(repr=False)
    identity: int = 0
    central_involution: int | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, a: int, e: int) -> int:
        out = self.identity
        for _ in range(e % self.element_order(a) if e >= 0 else 0):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def exponent(self) -> int:
        e = 1
        for a in range(self.order):
            o = self.element_order(a)
            e = e * o // gcd(e, o)
        return e

    @classmethod
    def from_elements(cls, name, elements, mul, central=None):
        elements = sorted(set(elements))
        if len(elements) > GROUP_GUARD:
            raise ValueError(f"group order {len(elements)} exceeds the {GROUP_GUARD} guard")
        index = {x: i for i, x in enumerate(elements)}
        table = tuple(tuple(index[mul(x, y)] for y in elements) for x in elements)
        ident = next(i for i in range(len(elements))
                     if all(table[i][j] == j for j in range(len(elements))))
        inverse = tuple(row.index(ident) for row in table)
        return cls(name, tuple(elements), table, inverse, ident,
                   index[central] if central is not None else None)


def _sl2_elements(q):
    return [(a, b, c, d) for a in range(q) for b in range(q) for c in range(q)
            for d in range(q) if (a * d - b * c) % q == 1]


def _mat_mul(q):
    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % q, (a * f + b * h) % q, (c * e + d * g) % q, (c * f + d * h) % q)
    return mul


def sl2(q: int) -> FiniteGroup:
    """SL_2(F_q), q an odd prime; elements are (a, b, c, d) row-major."""
    if not isprime(q) or q == 2:
        raise ValueError("SL2 is available for odd primes q")
    z = (q - 1, 0, 0, q - 1)
    G = FiniteGroup.from_elements(f"SL2({q})", _sl2_elements(q), _mat_mul(q), central=z)
    if G.order != q * (q * q - 1):
        raise AssertionError("wrong order for SL2")
    return G


def psl2(q: int) -> FiniteGroup:
    """PSL_2(F_q), elements canonicalized as the smaller of A and -A."""
    if not isprime(q) or q == 2:
        raise ValueError("PSL2 is available for odd primes q")
    mul = _mat_mul(q)

    def canon(x):
        return min(x, tuple((-v) % q for v in x))
    elems = {canon(x) for x in _sl2_elements(q)}
    G = FiniteGroup.from_elements(f"PSL2({q})", elems, lambda x, y: canon(mul(x, y)))
    if G.order != q * (q * q - 1) // 2:
        raise AssertionError("wrong order for PSL2")
    return G


def from_perm_group(P: PermGroup) -> FiniteGroup:
    from .permmod import compose
    return FiniteGroup.from_elements(P.name or f"perm{P.n}", P.elements, compose)


def trivial_group() -> FiniteGroup:
    return FiniteGroup.from_elements("1", [()], lambda x, y: ())


# ---------------------------------------------------------------------------
# classes

@dataclass(frozen=True)
class ConjugacyClass:
    rep: int
    members: tuple[int, ...]
    element_order: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True, eq=False)
class ClassData:
    group: FiniteGroup
    classes: tuple[ConjugacyClass, ...]
    class_of: tuple[int, ...] = field(repr=False)
    power_maps: dict = field(repr=False)

    def square_map(self) -> list[int]:
        return self.power_map(2)

    def power_map(self, e: int) -> list[int]:
        if e not in self.power_maps:
            G = self.group
            self.power_maps[e] = [self.class_of[G.power(c.rep, e)] for c in self.classes]
        return self.power_maps[e]

    def inverse_map(self) -> list[int]:
        G = self.group
        return [self.class_of[G.inverse[c.rep]] for c in self.classes]


def conjugacy_classes(G: FiniteGroup) -> ClassData:
    """Classes ordered by (element order, smallest member); reps are the smallest members."""
    n = G.order
    if n > GROUP_GUARD:
        raise ValueError(f"group order {n} exceeds the {GROUP_GUARD} guard")
    seen = [False] * n
    raw = []
    for a in range(n):
        if seen[a]:
            continue
        members = sorted({G.table[G.table[x][a]][G.inverse[x]] for x in range(n)})
        for m in members:
            seen[m] = True
        raw.append(ConjugacyClass(members[0], tuple(members), G.element_order(a)))
    raw.sort(key=lambda c: (c.element_order, c.rep))
    class_of = [0] * n
    for i, c in enumerate(raw):
        for m in c.members:
            class_of[m] = i
    return ClassData(G, tuple(raw), tuple(class_of), {})


# ---------------------------------------------------------------------------
# Dixon's algorithm

def _dixon_prime(order, exponent):
    bound = 2 * isqrt(order) + 1
    P = exponent + 1
    while P <= bound or not isprime(P):
        P += exponent
    return P


def _rref_mod(rows, P):
    rows = [r[:] for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % P), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, P)
        rows[r] = [x * inv % P for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % P for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _nullspace_mod(mat, P):
    n = len(mat[0])
    red, pivots = _rref_mod(mat, P)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = (-row[f]) % P
        basis.append(v)
    return basis


def _split_spaces(mats, r, P):
    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for M in mats:
        if all(len(s) == 1 for s in spaces):
            break
        new = []
        for W in spaces:
            if len(W) == 1:
                new.append(W)
                continue
            W, piv = _rref_mod(W, P)
            d = len(W)
            # A[t][s]: coordinate t of M b_s in basis W
            images = [[sum(M[j][k] * b[k] for k in range(r)) % P for j in range(r)] for b in W]
            A = [[images[s][piv[t]] for s in range(d)] for t in range(d)]
            found = 0
            for lam in range(P):
                shifted = [[(A[t][s] - (lam if t == s else 0)) % P for s in range(d)]
                           for t in range(d)]
                ns = _nullspace_mod(shifted, P)
                if ns:
                    sub = [[sum(v[s] * W[s][k] for s in range(d)) % P for k in range(r)]
                           for v in ns]
                    new.append(sub)
                    found += len(ns)
                    if found == d:
                        break
            if found != d:
                raise AssertionError("class matrix is not diagonalizable mod P")
        spaces = new
    if any(len(s) != 1 for s in spaces):
        raise AssertionError("class matrices did not separate the characters")
    return [s[0] for s in spaces]


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Irreducible characters as rows of cyclotomic values, one per class."""

    data: ClassData
    exponent: int
    characters: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def group(self) -> FiniteGroup:
        return self.data.group

    @property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        return self.data.classes

    @property
    def degrees(self) -> list[int]:
        return [int(chi[0].to_fraction()) for chi in self.characters]

    def inner(self, chi, psi) -> Fraction:
        """<chi, psi> = (1/|G|) sum_g chi(g) conj(psi(g))."""
        inv = self.data.inverse_map()
        tot = Cyclotomic.rational(self.exponent, 0)
        for k, c in enumerate(self.classes):
            tot = tot + chi[k] * psi[inv[k]] * c.size
        return tot.to_fraction() / self.group.order

    def central_class(self) -> int | None:
        G = self.group
        if G.central_involution is None:
            return None
        return self.data.class_of[G.central_involution]


def character_table(G: FiniteGroup, data: ClassData | None = None,
                    verify: bool = True) -> CharacterTable:
    data = data or conjugacy_classes(G)
    classes = data.classes
    r = len(classes)
    n = G.order
    e = G.exponent()
    P = _dixon_prime(n, e)
    # c[i][j][k] = #{x in K_i : x^-1 z_k in K_j}
    coef = [[[0] * r for _ in range(r)] for _ in range(r)]
    for i, Ki in enumerate(classes):
        for x in Ki.members:
            xi = G.inverse[x]
            row = G.table[xi]
            for k, Kk in enumerate(classes):
                coef[i][data.class_of[row[Kk.rep]]][k] += 1
    mats = [coef[i] for i in range(1, r)]
    vecs = _split_spaces(mats, r, P)
    inv_map = data.inverse_map()
    sizes = [c.size for c in classes]
    g0 = primitive_root(P)
    root_e = pow(g0, (P - 1) // e, P)
    chars = []
    for w in vecs:
        w0 = w[0]
        omega = [x * pow(w0, -1, P) % P for x in w]
        s = sum(omega[k] * omega[inv_map[k]] * pow(sizes[k], -1, P) for k in range(r)) % P
        target = n * pow(s, -1, P) % P
        degs = [d for d in range(1, isqrt(n) + 1) if d * d % P == target]
        if len(degs) != 1:
            raise AssertionError("could not recover a character degree")
        d = degs[0]
        modp = [d * omega[k] * pow(sizes[k], -1, P) % P for k in range(r)]
        values = []
        for k, c in enumerate(classes):
            o = c.element_order
            ro = pow(root_e, e // o, P)
            pw = [modp[data.class_of[G.power(c.rep, l)]] for l in range(o)]
            terms = {}
            inv_o = pow(o, -1, P)
            for j in range(o):
                m = sum(pw[l] * pow(ro, (-j * l) % o, P) for l in range(o)) * inv_o % P
                if m > d:
                    raise AssertionError("eigenvalue multiplicity out of range")
                if m:
                    terms[j * (e // o)] = m
            values.append(Cyclotomic.from_exponents(e, terms))
        chars.append(tuple(values))
    chars.sort(key=lambda chi: (int(chi[0].to_fraction()),
                                [(v.den, v.num) for v in chi]))
    table = CharacterTable(data, e, tuple(chars))
    if verify:
        _verify_table(table)
    return table


def _verify_table(T: CharacterTable):
    n = T.group.order
    if len(T.characters) != len(T.classes):
        raise AssertionError("number of characters differs from number of classes")
    if sum(d * d for d in T.degrees) != n:
        raise AssertionError("sum of squared degrees is not |G|")
    for a, chi in enumerate(T.characters):
        for b in range(a, len(T.characters)):
            if T.inner(chi, T.characters[b]) != (1 if a == b else 0):
                raise AssertionError("row orthogonality fails")


# ---------------------------------------------------------------------------
# predicates on characters

def is_rational_character(chi) -> bool:
    return all(v.is_rational() for v in chi)


def is_faithful_character(chi, table: CharacterTable) -> bool:
    """Kernel {g : chi(g) = chi(1)} is trivial."""
    deg = chi[0]
    kernel = sum(c.size for c, v in zip(table.classes, chi) if v == deg)
    return kernel == 1


def frobenius_schur(chi, table: CharacterTable) -> int:
    """(1/|G|) sum_g chi(g^2)."""
    sq = table.data.square_map()
    tot = Cyclotomic.rational(table.exponent, 0)
    for k, c in enumerate(table.classes):
        tot = tot + chi[sq[k]] * c.size
    val = tot.to_fraction() / table.group.order
    if val not in (-1, 0, 1):
        raise AssertionError(f"Frobenius-Schur indicator {val} out of range")
    return int(val)


def torus_class(table: CharacterTable, q: int) -> int:
    """First class of elements of order q + 1 (a nonsplit torus generator)."""
    for k, c in enumerate(table.classes):
        if c.element_order == q + 1:
            return k
    raise ValueError(f"no element of order {q + 1}")


def discrete_series_index(chi, table: CharacterTable, q: int) -> int | None:
    """j with chi(b) = -(s^j + s^-j), b of order q+1, s = zeta_{q+1}; None if no match."""
    if chi[0] != q - 1:
        return None
    b = torus_class(table, q)
    for j in range(1, (q - 1) // 2 + 1):
        target = -(Cyclotomic.zeta(q + 1, j) + Cyclotomic.zeta(q + 1, -j))
        if chi[b] == target:
            return j
    return None


# ---------------------------------------------------------------------------
# the quaternion-summand decision

# Local invariants of the surviving rational quaternionic summand of Q[SL2(F_5)]
# (finite ramified primes of its quaternion algebra, plus infinity).  Taken
# from the literature on Schur indices of SL2(F_q); not recomputed here.
CITED_QUATERNION_RAMIFICATION = {5: (3,)}


@dataclass(frozen=True)
class SL2Decision:
    q: int
    p: int
    possible: bool
    reason: str
    candidates: tuple[dict, ...]
    cited: bool

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "possible": self.possible,
            "reason": self.reason,
            "candidates": list(self.candidates),
            "ramification": "cited, not computed" if self.cited else None,
        }


def lemma_sl2_decision(q: int, p: int, table: CharacterTable | None = None) -> SL2Decision:
    """Can M_g(H_p), g = (q-1)/2, be a simple summand of Q[SL2(F_q)]?"""
    if q not in (5, 7):
        raise ValueError("q must be 5 or 7")
    if p == 2 or not isprime(p):
        raise ValueError("p must be an odd prime")
    table = table or character_table(sl2(q))
    cands = []
    for idx, chi in enumerate(table.characters):
        if chi[0] != q - 1 or not is_faithful_character(chi, table):
            continue
        info = {
            "index": idx,
            "j": discrete_series_index(chi, table, q),
            "rational": is_rational_character(chi),
            "frobenius_schur": frobenius_schur(chi, table),
        }
        if not info["rational"]:
            b = torus_class(table, q)
            info["witness"] = {"class": b, "value": str(chi[b]),
                               "conductor": chi[b].conductor()}
        cands.append(info)
    survivors = [c for c in cands if c["rational"] and c["frobenius_schur"] == -1]
    if not survivors:
        return SL2Decision(q, p, False,
                           f"no faithful rational quaternionic character of degree {q - 1}",
                           tuple(cands), False)
    ramified = CITED_QUATERNION_RAMIFICATION[q]
    ok = p in ramified
    reason = (f"surviving summand is M_{(q - 1) // 2}(H) with H ramified at infinity and "
              f"{', '.join(map(str, ramified))}; "
              + ("matches" if ok else f"does not match H_{p}"))
    return SL2Decision(q, p, ok, reason, tuple(cands), True)
