import pytest

from hyperjac import zeta
from hyperjac.algebra import GF
from hyperjac.scan import (ScanSummary, check_l_polynomial, enumerate_family,
                           parse_template, scan_family)


def test_template_parsing(F9):
    assert parse_template(F9, "1,0,0,*,0,1") == [1, 0, 0, None, 0, 1]
    assert parse_template(F9, "t,*,0,0,0,0,1")[0] == 3
    for bad in ("1,0,*", "1,,0,0,0,1", "1,0,0,0,0,0,0,1"):
        with pytest.raises(ValueError):
            parse_template(F9, bad)


def test_enumeration_is_lexicographic(F3):
    got = list(enumerate_family(F3, [None, 0, None, 0, 0, 1]))
    assert got == [(a, 0, b, 0, 0, 1) for a in range(3) for b in range(3)]


def test_instance_guard():
    F = GF(3, 4)
    with pytest.raises(ValueError, match="limit"):
        next(enumerate_family(F, [None, None, None, None, 0, 1]))


def test_scan_order_survives_degree_batching(F3):
    # a5 wildcard mixes quintic and sextic members; records keep template order
    summary = ScanSummary()
    recs = list(scan_family(F3, parse_template(F3, "1,*,0,0,0,*,*"), summary))
    codes = [tuple(r.codes) + (0,) * (7 - len(r.codes)) for r in recs]
    assert codes == sorted(codes, key=lambda c: (c[1], c[5], c[6]))
    assert {len(r.codes) for r in recs} == {6, 7}
    assert summary.total == 27
    assert summary.degenerate == 3          # a5 = a6 = 0
    assert summary.separable == len(recs)


def test_scan_records_are_consistent(F9):
    summary = ScanSummary()
    for rec in scan_family(F9, parse_template(F9, "*,1,0,t,0,1"), summary):
        L = zeta.LPolynomial(9, 2, rec.l_poly)
        assert check_l_polynomial(L, 3, list(rec.counts)) == []
        assert rec.agreement
        d = rec.to_dict()
        assert set(d) == {"field", "f", "classification", "counts", "l_poly", "slopes",
                          "agreement"}
    assert summary.disagreements == 0


def test_check_l_polynomial_reports_mismatch():
    L = zeta.LPolynomial(3, 2, (1, 0, 0, 0, 9))
    assert check_l_polynomial(L, 3, [4, 10]) == []
    assert check_l_polynomial(L, 3, [5, 10]) == ["power sums do not reproduce the counts"]
