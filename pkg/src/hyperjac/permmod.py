"""Permutation groups on a few points and their mod-2 permutation modules.

Permutations are tuples ``g`` with ``g[i]`` the image of ``i``; products
compose right to left, ``(g * h)[i] = g[h[i]]``.  Groups are materialized
by closure, which is fine up to the order guard.

F_2 matrices are lists of row bitmasks: bit ``j`` of ``rows[i]`` is entry
``(i, j)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import permutations

__all__ = [
    "PermGroup", "F2Module", "ORDER_GUARD", "compose", "invert",
    "parse_cycles", "group_from_generators", "is_k_transitive", "heart_module",
    "permutation_module", "end_ring_dim", "is_perfect", "is_solvable",
    "derived_subgroup", "builtin_actions", "is_faithful",
]

ORDER_GUARD = 10**5


def compose(g, h):
    return tuple(g[i] for i in h)


def invert(g):
    out = [0] * len(g)
    for i, j in enumerate(g):
        out[j] = i
    return tuple(out)


def _check_perm(g, n):
    if len(g) != n or sorted(g) != list(range(n)):
        raise ValueError(f"{g!r} is not a permutation of 0..{n - 1}")


def parse_cycles(text: str, n: int | None = None) -> tuple[int, ...]:
    """Cycle notation like ``"(0 1 2 3 4)(5 6)"``; ``"()"`` is the identity."""
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise ValueError(f"cannot parse cycle notation {text!r}")
    cyc = [[int(x) for x in c.replace(",", " ").split()] for c in cycles]
    points = [x for c in cyc for x in c]
    if len(points) != len(set(points)):
        raise ValueError(f"cycles in {text!r} are not disjoint")
    if any(x < 0 for x in points):
        raise ValueError("points must be non-negative")
    size = n if n is not None else (max(points) + 1 if points else 1)
    if points and max(points) >= size:
        raise ValueError(f"point {max(points)} outside 0..{size - 1}")
    img = list(range(size))
    for c in cyc:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


@dataclass(frozen=True)
class PermGroup:
    """A permutation group on ``range(n)`` with its materialized elements."""

    n: int
    generators: tuple[tuple[int, ...], ...]
    elements: frozenset = field(repr=False)
    name: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)

    def sorted_elements(self) -> list[tuple[int, ...]]:
        return sorted(self.elements)


def _closure(n, gens, guard=ORDER_GUARD):
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(s, x)
                if y not in seen:
                    seen.add(y)
                    if len(seen) > guard:
                        raise ValueError(f"group order exceeds the {guard} guard")
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def group_from_generators(n: int, gens, name: str = "") -> PermGroup:
    gens = tuple(tuple(g) for g in gens)
    for g in gens:
        _check_perm(g, n)
    gens = tuple(g for g in gens if g != tuple(range(n))) or ()
    return PermGroup(n, gens, _closure(n, gens), name)


def is_k_transitive(G: PermGroup, k: int) -> bool:
    """Transitivity on ordered k-tuples of distinct points (k = 1 or 2)."""
    if k not in (1, 2):
        raise ValueError("only k = 1, 2 are supported")
    if k > G.n:
        raise ValueError("k exceeds the number of points")
    start = tuple(range(k))
    orbit = {start}
    stack = [start]
    while stack:
        t = stack.pop()
        for s in G.generators:
            u = tuple(s[i] for i in t)
            if u not in orbit:
                orbit.add(u)
                stack.append(u)
    total = 1
    for i in range(k):
        total *= G.n - i
    return len(orbit) == total


# ---------------------------------------------------------------------------
# groups as abstract objects: commutators, derived series

def _subgroup(n, gens):
    return _closure(n, list(gens))


def _normal_closure(G: PermGroup, seeds) -> frozenset:
    gens = set(seeds)
    ident = G.identity
    gens.discard(ident)
    while True:
        H = _subgroup(G.n, sorted(gens))
        extra = set()
        for h in gens:
            for s in G.generators:
                c = compose(compose(s, h), invert(s))
                if c not in H:
                    extra.add(c)
        if not extra:
            return H
        gens |= extra


def derived_subgroup(G: PermGroup) -> PermGroup:
    """[G, G] as the normal closure of commutators of generators."""
    comms = set()
    for a in G.generators:
        for b in G.generators:
            c = compose(compose(invert(a), invert(b)), compose(a, b))
            comms.add(c)
    H = _normal_closure(G, comms)
    gens = _small_generating_set(G.n, H)
    return PermGroup(G.n, gens, H, f"[{G.name}, {G.name}]" if G.name else "")


def _small_generating_set(n, elements):
    gens = []
    sub = frozenset({tuple(range(n))})
    for x in sorted(elements):
        if x not in sub:
            gens.append(x)
            sub = _subgroup(n, gens)
            if len(sub) == len(elements):
                break
    return tuple(gens)


def is_perfect(G: PermGroup) -> bool:
    return derived_subgroup(G).order == G.order


def is_solvable(G: PermGroup) -> bool:
    H = G
    while H.order > 1:
        D = derived_subgroup(H)
        if D.order == H.order:
            return False
        H = D
    return True


# ---------------------------------------------------------------------------
# F_2 modules

def _mat_mul(a, b):
    out = []
    for row in a:
        acc = 0
        j = 0
        r = row
        while r:
            if r & 1:
                acc ^= b[j]
            r >>= 1
            j += 1
        out.append(acc)
    return tuple(out)


def _identity(d):
    return tuple(1 << i for i in range(d))


@dataclass(frozen=True)
class F2Module:
    """An F_2[G]-module: one d x d matrix (row bitmasks) per group generator."""

    dim: int
    action: tuple[tuple[int, ...], ...]
    rep: object = field(default=None, repr=False, compare=False)

    def matrix_of(self, g) -> tuple[int, ...]:
        """Matrix of an arbitrary group element (needs ``rep``)."""
        if self.rep is None:
            raise ValueError("module has no element-level representation")
        return self.rep(g)

    def to_lists(self, m) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.dim)] for row in m]


def _heart_matrix(g, n):
    # basis v_i = e_i - e_{n-1}; column i holds the coordinates of g.v_i
    d = n - 1
    cols = []
    last = g[n - 1]
    for i in range(d):
        v = 0
        a = g[i]
        if a != n - 1:
            v ^= 1 << a
        if last != n - 1:
            v ^= 1 << last
        cols.append(v)
    return tuple(sum(((cols[j] >> i) & 1) << j for j in range(d)) for i in range(d))


def _perm_matrix(g, n):
    # g.e_j = e_{g[j]}: entry (g[j], j) = 1
    rows = [0] * n
    for j, i in enumerate(g):
        rows[i] |= 1 << j
    return tuple(rows)


def _validate(module: F2Module, G: PermGroup):
    for s, a in zip(G.generators, module.action):
        if module.matrix_of(s) != a:
            raise AssertionError("generator matrix does not match the element map")
    for x in G.elements:
        mx = module.matrix_of(x)
        for s in G.generators:
            if module.matrix_of(compose(s, x)) != _mat_mul(module.matrix_of(s), mx):
                raise AssertionError("module action is not a homomorphism")


def heart_module(G: PermGroup, validate: bool = True) -> F2Module:
    """Sum-zero hyperplane of F_2^n in the basis e_i - e_{n-1}, n odd."""
    n = G.n
    if n % 2 == 0:
        raise ValueError("the heart is only built for an odd number of points")
    rep = lambda g: _heart_matrix(g, n)  # noqa: E731
    mod = F2Module(n - 1, tuple(rep(s) for s in G.generators), rep)
    if validate:
        _validate(mod, G)
    return mod


def permutation_module(G: PermGroup) -> F2Module:
    rep = lambda g: _perm_matrix(g, G.n)  # noqa: E731
    return F2Module(G.n, tuple(rep(s) for s in G.generators), rep)


def is_faithful(module: F2Module, G: PermGroup) -> bool:
    ident = _identity(module.dim)
    return sum(1 for g in G.elements if module.matrix_of(g) == ident) == 1


def _nullspace_f2(rows, nvars):
    """Basis of {x : r.x = 0 for every row}, RREF-canonical, as bitmasks."""
    pivots = {}
    for r in rows:
        for col, pr in pivots.items():
            if (r >> col) & 1:
                r ^= pr
        if not r:
            continue
        col = r.bit_length() - 1
        for c2 in list(pivots):
            if (pivots[c2] >> col) & 1:
                pivots[c2] ^= r
        pivots[col] = r
    free = [c for c in range(nvars) if c not in pivots]
    basis = []
    for fcol in free:
        v = 1 << fcol
        for col, pr in pivots.items():
            if (pr >> fcol) & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def end_ring_dim(module: F2Module, G: PermGroup | None = None):
    """Dimension and basis of {X : A X = X A for every generator matrix A}.

    Unknown ``X[i][j]`` is variable ``i*d + j``; basis matrices come out in
    the order of the free variables of the reduced system.
    """
    d = module.dim
    if G is not None and len(module.action) != len(G.generators):
        raise ValueError("module and group disagree on the generators")
    nv = d * d
    eqs = []
    for A in module.action:
        a = [[(A[i] >> j) & 1 for j in range(d)] for i in range(d)]
        for i in range(d):
            for j in range(d):
                # (AX)_{ij} - (XA)_{ij} = sum_k a_ik X_kj - X_ik a_kj
                r = 0
                for k in range(d):
                    if a[i][k]:
                        r ^= 1 << (k * d + j)
                    if a[k][j]:
                        r ^= 1 << (i * d + k)
                if r:
                    eqs.append(r)
    basis = []
    for v in _nullspace_f2(eqs, nv):
        basis.append(tuple(sum(((v >> (i * d + j)) & 1) << j for j in range(d))
                           for i in range(d)))
    return len(basis), basis


# ---------------------------------------------------------------------------
# named groups

def _cyclic(n):
    return [tuple((i + 1) % n for i in range(n))]


def _symmetric(n):
    if n <= 2:
        return [tuple([1, 0][:n])] if n == 2 else []
    return [tuple((i + 1) % n for i in range(n)), (1, 0) + tuple(range(2, n))]


def _alternating(n):
    if n < 3:
        return []
    return [parse_cycles(f"({i} {i + 1} {i + 2})", n) for i in range(n - 2)]


def _projective_line(q):
    # points 0..q-1 and infinity = q; x -> (a x + b) / (c x + d)
    def act(a, b, c, d):
        img = []
        for x in range(q + 1):
            if x == q:
                num, den = a, c
            else:
                num, den = (a * x + b) % q, (c * x + d) % q
            img.append(q if den == 0 else num * pow(den, -1, q) % q)
        return tuple(img)
    return [act(1, 1, 0, 1), act(0, q - 1, 1, 0)]


def _f2_vectors(dim):
    return list(range(1, 2**dim))


def _gl_f2_action(dim, mats):
    vecs = _f2_vectors(dim)
    index = {v: i for i, v in enumerate(vecs)}

    def apply(m, v):
        # m given as column bitmasks
        out = 0
        for j in range(dim):
            if (v >> j) & 1:
                out ^= m[j]
        return out
    return [tuple(index[apply(m, v)] for v in vecs) for m in mats]


def _gl_f2_generators(dim):
    if dim == 1:
        return []
    # elementary transvection e_1 -> e_1 + e_2 and the cyclic shift of basis
    trans = [0b11] + [1 << j for j in range(1, dim)]
    shift = [1 << ((j + 1) % dim) for j in range(dim)]
    return [trans, shift]


_NAME = re.compile(r"^(A|S|C)(\d+)$|^PSL2\((\d+)\)$|^PSL3\(2\)$|^GL\((\d+),\s*F2\)$")


def builtin_actions(name: str) -> PermGroup:
    """Named groups: A_n, S_n, C_n, PSL2(5), PSL2(7), PSL3(2), GL(1,F2), GL(2,F2), GL(3,F2)."""
    key = name.replace("_", "").replace(" ", "")
    m = _NAME.match(key)
    if not m:
        raise ValueError(f"unknown group {name!r}")
    fam, deg, q, gl = m.group(1), m.group(2), m.group(3), m.group(4)
    if fam:
        n = int(deg)
        if not 1 <= n <= 10:
            raise ValueError("A_n, S_n, C_n need 1 <= n <= 10")
        gens = {"A": _alternating, "S": _symmetric, "C": _cyclic}[fam](n)
        G = group_from_generators(n, gens, f"{fam}{n}")
        expect = {"A": _factorial(n) // 2 if n > 1 else 1, "S": _factorial(n), "C": n}[fam]
    elif q:
        q = int(q)
        if q not in (5, 7):
            raise ValueError("PSL2(q) is available for q = 5, 7")
        G = group_from_generators(q + 1, _projective_line(q), f"PSL2({q})")
        expect = q * (q * q - 1) // 2
    elif gl:
        dim = int(gl)
        if dim not in (1, 2, 3):
            raise ValueError("GL(d, F2) is available for d = 1, 2, 3")
        G = group_from_generators(2**dim - 1, _gl_f2_action(dim, _gl_f2_generators(dim)),
                                  f"GL({dim},F2)")
        expect = {1: 1, 2: 6, 3: 168}[dim]
    else:
        G = group_from_generators(7, _gl_f2_action(3, _gl_f2_generators(3)), "PSL3(2)")
        expect = 168
    if G.order != expect:
        raise AssertionError(f"{name} has order {G.order}, expected {expect}")
    return G


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def brute_force_elements(n: int):
    """All permutations of range(n); used for cross-checks."""
    return frozenset(permutations(range(n)))
