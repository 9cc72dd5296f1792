import cmath
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperjac import chartab, permmod
from hyperjac.cyclotomic import Cyclotomic, cyclotomic_poly, euler_phi


def to_complex(x: Cyclotomic) -> complex:
    z = cmath.exp(2j * cmath.pi / x.m)
    return sum(c * z**i for i, c in enumerate(x.num)) / x.den


@pytest.fixture(scope="module")
def T5():
    return chartab.character_table(chartab.sl2(5))


@pytest.fixture(scope="module")
def T7():
    return chartab.character_table(chartab.sl2(7))


# -- cyclotomic arithmetic against complex numbers ---------------------------------

def cyclo(m):
    return st.dictionaries(st.integers(0, m - 1), st.integers(-4, 4), max_size=5).map(
        lambda t: Cyclotomic.from_exponents(m, t))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([1, 3, 4, 5, 8, 12, 15, 24]).flatmap(
    lambda m: st.tuples(cyclo(m), cyclo(m))))
def test_cyclotomic_ring_operations(pair):
    a, b = pair
    for got, want in ((a + b, to_complex(a) + to_complex(b)),
                      (a - b, to_complex(a) - to_complex(b)),
                      (a * b, to_complex(a) * to_complex(b)),
                      (a.conjugate(), to_complex(a).conjugate())):
        assert abs(to_complex(got) - want) < 1e-8
    if not b.is_zero():
        assert abs(to_complex(a / b) - to_complex(a) / to_complex(b)) < 1e-6
        assert (a / b) * b == a


def test_cyclotomic_basics():
    assert [euler_phi(n) for n in (1, 2, 8, 9, 12)] == [1, 1, 4, 6, 4]
    assert cyclotomic_poly(8) == (1, 0, 0, 0, 1)
    z8 = Cyclotomic.zeta(8)
    r2 = z8 + z8.conjugate()
    assert r2 * r2 == 2 and r2.conductor() == 8 and not r2.is_rational()
    assert Cyclotomic.rational(12, Fraction(3, 4)).to_fraction() == Fraction(3, 4)
    z5 = Cyclotomic.zeta(5)
    golden = -(z5**2 + z5**3)
    assert golden * golden == golden + 1 and golden.conductor() == 5
    # the same number viewed in a bigger field is equal and hashes alike
    assert golden.lift(20) == golden and hash(golden.lift(20)) == hash(golden)
    assert str(-z8 + z8**3) == "-z_8 + z_8^3"
    assert z8.galois(3) == z8**3


# -- conjugacy classes and tables ----------------------------------------------------

def brute_classes(G):
    seen, classes = set(), []
    for x in range(G.order):
        if x in seen:
            continue
        cls = {G.mul(G.mul(g, x), G.inverse[g]) for g in range(G.order)}
        seen |= cls
        classes.append(frozenset(cls))
    return set(classes)


@pytest.mark.parametrize("build,q", [(chartab.sl2, 3), (chartab.sl2, 5), (chartab.psl2, 5),
                                     (chartab.psl2, 7)])
def test_conjugacy_classes_brute_force(build, q):
    G = build(q)
    data = chartab.conjugacy_classes(G)
    assert {frozenset(c.members) for c in data.classes} == brute_classes(G)
    for c in data.classes:
        assert G.element_order(c.rep) == c.element_order
    sq = data.square_map()
    for k, c in enumerate(data.classes):
        assert data.class_of[G.mul(c.rep, c.rep)] == sq[k]


def column_orthogonality(T):
    G = T.group
    r = len(T.classes)
    for a, b in itertools.product(range(r), repeat=2):
        tot = sum(to_complex(chi[a]) * to_complex(chi[b]).conjugate() for chi in T.characters)
        expect = G.order / T.classes[a].size if a == b else 0
        assert abs(tot - expect) < 1e-8


def test_sl2_5(T5):
    assert len(T5.classes) == 9
    assert sorted(T5.degrees) == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    column_orthogonality(T5)


def test_sl2_7(T7):
    assert len(T7.classes) == 11
    assert sorted(T7.degrees) == [1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8]
    assert sum(d * d for d in T7.degrees) == 336
    column_orthogonality(T7)


@pytest.mark.parametrize("name,degrees", [("A5", [1, 3, 3, 4, 5]),
                                          ("S5", [1, 1, 4, 4, 5, 5, 6]),
                                          ("PSL3(2)", [1, 3, 3, 6, 7, 8]),
                                          ("S4", [1, 1, 2, 3, 3])])
def test_permutation_group_tables(name, degrees):
    T = chartab.character_table(chartab.from_perm_group(permmod.builtin_actions(name)))
    assert sorted(T.degrees) == degrees
    column_orthogonality(T)


def test_trivial_group():
    T = chartab.character_table(chartab.trivial_group())
    assert T.degrees == [1]


def _perm_character_on_line(T, q):
    # fixed points of (a b; c d) on P^1(F_q)
    G = T.group
    vals = []
    for c in T.classes:
        a, b, cc, d = G.elements[c.rep]
        fixed = sum(1 for x in range(q) if (cc * x * x + (d - a) * x - b) % q == 0)
        fixed += cc % q == 0
        vals.append(Cyclotomic.rational(T.exponent, fixed))
    return vals


@pytest.mark.parametrize("q", [5, 7])
def test_projective_line_character_is_trivial_plus_steinberg(q, T5, T7):
    T = {5: T5, 7: T7}[q]
    pi = _perm_character_on_line(T, q)
    mult = [T.inner(pi, chi) for chi in T.characters]
    assert sorted(mult) == [0] * (len(mult) - 2) + [1, 1]
    degrees = sorted(T.degrees[i] for i, m in enumerate(mult) if m)
    assert degrees == [1, q]


def test_theta_parity_on_central_involution(T5, T7):
    for q, T in ((5, T5), (7, T7)):
        z = T.central_class()
        thetas = [chi for chi in T.characters if chi[0] == q - 1]
        assert len(thetas) == (q - 1) // 2
        for chi in thetas:
            j = chartab.discrete_series_index(chi, T, q)
            assert chi[z] == (-1) ** j * (q - 1)


def test_frobenius_schur_indicators(T5, T7):
    # faithful irreducibles of SL2(q) are symplectic or complex, never orthogonal
    for T in (T5, T7):
        z = T.central_class()
        for chi in T.characters:
            fs = chartab.frobenius_schur(chi, T)
            faithful = chi[z] != chi[0]
            if fs == 1:
                assert not faithful
            if fs == -1:
                assert faithful
            # real-valued iff indicator nonzero
            assert (fs != 0) == all(v == v.conjugate() for v in chi)


@pytest.mark.parametrize("q", [5, 7])
def test_psl2_tables_descend_from_sl2(q, T5, T7):
    T = {5: T5, 7: T7}[q]
    P = chartab.character_table(chartab.psl2(q))
    z = T.central_class()
    descended = sorted(chi[0].to_fraction() for chi in T.characters if chi[z] == chi[0])
    assert sorted(Fraction(d) for d in P.degrees) == descended
    indicators = [chartab.frobenius_schur(chi, P) for chi in P.characters]
    assert -1 not in indicators
    if q == 5:
        assert indicators == [1] * len(indicators)


def test_lemma_sl2_decisions(T5, T7):
    tables = {5: T5, 7: T7}
    verdicts = {(q, p): chartab.lemma_sl2_decision(q, p, tables[q]).possible
                for q in (5, 7) for p in (3, 5, 7, 11, 13)}
    assert [k for k, v in verdicts.items() if v] == [(5, 3)]
    d = chartab.lemma_sl2_decision(7, 3, T7).to_dict()
    assert d["possible"] is False
    assert all(c["witness"]["conductor"] == 8 for c in d["candidates"])
    with pytest.raises(ValueError):
        chartab.lemma_sl2_decision(11, 3)
    with pytest.raises(ValueError):
        chartab.lemma_sl2_decision(5, 4)


def test_symmetric_group_characters_are_orthogonal_type():
    S3 = permmod.group_from_generators(3, [(1, 2, 0), (1, 0, 2)], "S3")
    T = chartab.character_table(chartab.from_perm_group(S3))
    assert sorted(T.degrees) == [1, 1, 2]
    assert [chartab.frobenius_schur(chi, T) for chi in T.characters] == [1, 1, 1]
    assert all(chartab.is_rational_character(chi) for chi in T.characters)
