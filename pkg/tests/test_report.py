from fractions import Fraction

import pytest

from voaplus import (analyze, aut_order, build_construction_b, make_lattice,
                     odd_split, parse_spec, repetition_code, stabilizer_order,
                     unimodular_report, vectors_of_norm)
from voaplus.errors import NotEven, NotOdd, NotUnimodular
from voaplus.intmat import det_bareiss, solve_integral


def test_stabilizer_order_worked_cases():
    assert stabilizer_order(make_lattice([[8]])) == (2, None)
    assert stabilizer_order(make_lattice([[4, 0], [0, 4]])) == (16, None)
    assert stabilizer_order(parse_spec("sqrt2*A3")) == (192, None)
    order, reason = stabilizer_order(parse_spec("A2"))
    assert order is None and reason == "roots present"
    lat, _ = build_construction_b(repetition_code(8))
    order, reason = stabilizer_order(lat)
    assert order is None and reason == "rank bound"


def test_aut_orders_worked_cases():
    assert aut_order(make_lattice([[8]])) == 6       # S3
    assert aut_order(make_lattice([[4, 0], [0, 4]])) == 48   # S4 x Z2
    assert aut_order(parse_spec("sqrt2*A3")) == 576
    assert aut_order(parse_spec("A2")) is None


def test_analyze_consistency():
    for spec in ["A1", "2A1", "A2", "sqrt2*A3", "lb(zero(4))", "E8"]:
        rep = analyze(parse_spec(spec))
        assert rep.index_over_stabilizer == rep.orbit_size
        assert rep.orbit_size == (1 + 2 * len(rep.frame_coset_set.cosets)
                                  + rep.orbit.twisted_count)
        assert rep.exceeds_stabilizer == (rep.orbit_size > 1)
        want = len(rep.frame_coset_set.cosets) > 0 or rep.cond_c
        assert rep.exceeds_stabilizer == want
        if rep.aut_order is not None:
            assert rep.aut_order == rep.stabilizer_order * rep.orbit_size
        assert rep.notes


def test_analyze_requires_even():
    with pytest.raises(NotEven):
        analyze(make_lattice([[1]]))


def test_unimodular_verdicts():
    assert unimodular_report(parse_spec("E8")).index == 2
    assert unimodular_report(parse_spec("E8+E8")).index == 1
    assert unimodular_report(parse_spec("Gamma16")).index == 1
    with pytest.raises(NotUnimodular):
        unimodular_report(parse_spec("A2"))


def test_odd_split_rank1():
    rep = odd_split(make_lattice([[1]]))
    assert rep.even_part.gram == ((4,),)
    assert rep.even_part.is_even
    # index 2: determinant scales by 4
    assert rep.even_part.det == 4 * 1
    assert rep.odd_rep == (Fraction(1),)
    assert rep.odd_rep_norm == 1
    assert rep.odd_coset.rep == (Fraction(1, 2),)
    assert rep.odd_coset_in_orbit is False
    assert rep.even_report.orbit_size == 1


def test_odd_split_rank2():
    z2 = parse_spec("Z2")
    rep = odd_split(z2)
    assert rep.even_part.is_even
    assert rep.even_part.det == 4
    # 2L inside the even part
    basis = [list(r) for r in rep.even_basis]
    for i in range(2):
        doubled = [2 if j == i else 0 for j in range(2)]
        assert solve_integral(basis, doubled) is not None
    assert abs(det_bareiss(basis)) == 2
    # even part of Z^2 has 4 roots, so no order is claimed
    assert rep.even_report.root_count == 4
    assert rep.aut_order is None


def test_odd_split_requires_odd():
    with pytest.raises(NotOdd):
        odd_split(make_lattice([[2]]))


def test_odd_split_mixed_diagonal():
    lat = make_lattice([[1, 0], [0, 2]])
    rep = odd_split(lat)
    assert rep.even_part.is_even
    assert rep.even_part.det == 4 * lat.det


def test_odd_coset_has_odd_norms():
    # norms in the odd class are odd, so it can never meet the norm-2
    # bound; the order formula leg stays empty for every odd lattice
    for spec in ["Z1", "Z2", "gram([[1,0],[0,4]])", "gram([[3,1],[1,2]])"]:
        rep = odd_split(parse_spec(spec))
        assert int(rep.odd_rep_norm) % 2 == 1
        assert vectors_of_norm(rep.even_part, rep.odd_coset, 2) == []
        assert rep.odd_coset_in_orbit is False
