import pytest

from voaplus import (build_construction_b, classify_modules, condition_a,
                     condition_b, condition_c, fusion_space, make_lattice,
                     module_orbit, parse_spec, repetition_code, rm14,
                     twisted_character_count, twisted_character_count_mod2,
                     zero_code)
from voaplus.errors import ConditionABC, NotEven


def test_twisted_character_count_anchors():
    assert twisted_character_count(parse_spec("E8")) == 1
    lat, _ = build_construction_b(repetition_code(8))
    assert twisted_character_count(lat) == 256   # all of L/2L
    # the rank-1 root lattice: both routes give 2
    assert twisted_character_count(make_lattice([[2]])) == 2
    assert twisted_character_count_mod2(make_lattice([[2]])) == 2


def test_twisted_count_routes_agree_on_catalog():
    for spec in ["A1", "2A1", "A2", "A3", "D4", "E8", "D8", "sqrt2*A3",
                 "lb(hamming8)", "E8+E8", "Gamma16"]:
        lat = parse_spec(spec)
        assert twisted_character_count(lat) == twisted_character_count_mod2(lat)


def test_classify_modules_counts():
    e8 = classify_modules(parse_spec("E8"))
    assert (e8.untwisted_signed, e8.untwisted_plain, e8.twisted) == (2, 0, 2)
    assert e8.total == 4

    two_a1 = classify_modules(make_lattice([[8]]))
    assert two_a1.untwisted_signed == 4
    assert two_a1.untwisted_plain == 3
    assert two_a1.twisted == 4

    a2 = classify_modules(parse_spec("A2"))
    assert a2.untwisted_signed == 2
    assert a2.untwisted_plain == 1
    assert a2.twisted == 2


def test_classify_requires_even():
    with pytest.raises(NotEven):
        classify_modules(make_lattice([[1]]))


def test_conditions_on_anchor_lattices():
    lat8, _ = build_construction_b(repetition_code(8))
    assert condition_a(lat8).holds
    assert not condition_b(lat8).holds
    assert not condition_c(lat8).holds

    lat16, _ = build_construction_b(rm14())
    assert not condition_a(lat16).holds
    assert condition_b(lat16).holds
    assert not condition_c(lat16).holds

    e8 = parse_spec("E8")
    assert not condition_a(e8).holds   # no qualifying coset at all
    assert not condition_b(e8).holds
    assert condition_c(e8).holds

    lat4, _ = build_construction_b(zero_code(4))
    assert not condition_a(lat4).holds
    assert not condition_b(lat4).holds
    assert not condition_c(lat4).holds


def test_condition_a_on_root_full_lattice():
    # the length-8 Hamming construction has roots but still satisfies (a)
    assert condition_a(parse_spec("lb(hamming8)")).holds
    assert condition_a(parse_spec("D8")).holds


def test_orbit_shapes():
    two_a1 = module_orbit(make_lattice([[8]]))
    assert two_a1.size == 3
    assert two_a1.twisted_sign is None
    labels = [c.label() for c in two_a1.classes]
    assert labels[0] == "[(0)]^-"
    assert len(labels) == 3

    e8 = module_orbit(parse_spec("E8"))
    assert e8.size == 2
    assert e8.twisted_sign == "-"
    assert e8.twisted_count == 1

    gamma = module_orbit(parse_spec("Gamma16"))
    assert gamma.size == 1
    assert gamma.twisted_sign is None

    lat8, _ = build_construction_b(repetition_code(8))
    rep8 = module_orbit(lat8)
    assert rep8.twisted_sign == "-"
    assert rep8.twisted_count == 256
    assert rep8.size == 1 + 2 * len(rep8.frame_coset_set.cosets) + 256

    lat16, _ = build_construction_b(rm14())
    rm = module_orbit(lat16)
    assert rm.twisted_sign == "+"


def test_twisted_gates():
    # twisted classes only at rank 8 (sign -) or 16 (sign +), and only on
    # 2-elementary totally even lattices
    for spec in ["A1", "2A1", "A2", "sqrt2*A3", "D4", "lbish"]:
        if spec == "lbish":
            lat, _ = build_construction_b(zero_code(4))
        else:
            lat = parse_spec(spec)
        orb = module_orbit(lat)
        if orb.twisted_sign is not None:
            assert lat.rank in (8, 16)
            assert lat.is_2_elementary and lat.is_totally_even
            assert orb.twisted_sign == ("-" if lat.rank == 8 else "+")


def test_fusion_space_sizes():
    f = fusion_space(make_lattice([[8]]))
    assert (f.size, f.dim, f.gl_order) == (4, 2, 6)
    f = fusion_space(make_lattice([[4, 0], [0, 4]]))
    assert (f.size, f.dim) == (4, 2)
    f = fusion_space(parse_spec("E8+E8"))
    assert (f.size, f.dim, f.gl_order) == (2, 1, 1)
    with pytest.raises(ConditionABC):
        fusion_space(parse_spec("E8"))


def test_classify_counts_invariant_under_basis_change():
    import random

    from voaplus.intmat import det_bareiss, mat_mul

    rng = random.Random(808)
    for spec in ["A2", "2A1", "sqrt2*A3", "D4"]:
        lat = parse_spec(spec)
        n = lat.rank
        base = classify_modules(lat)
        for _ in range(4):
            # random unimodular transform from elementary row operations
            u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            for _ in range(6):
                i, j = rng.randrange(n), rng.randrange(n)
                if i != j:
                    s = rng.choice([-1, 1])
                    for k in range(n):
                        u[i][k] += s * u[j][k]
            assert abs(det_bareiss(u)) == 1
            g = mat_mul(mat_mul(u, [list(r) for r in lat.gram]),
                        [[u[j][i] for j in range(n)] for i in range(n)])
            other = classify_modules(make_lattice(g))
            assert other == base


def test_twisted_gates_across_catalog():
    from voaplus import CATALOG

    for entry in CATALOG:
        if entry.kind != "lattice":
            continue
        lat = entry.build()
        orb = module_orbit(lat)
        present = orb.twisted_sign is not None
        assert present == (orb.cond_a or orb.cond_b or orb.cond_c)
        if present:
            assert lat.rank in (8, 16)
            assert orb.twisted_sign == ("-" if lat.rank == 8 else "+")
            assert lat.is_2_elementary and lat.is_totally_even


def test_fusion_power_of_two_across_catalog():
    for spec in ["A1", "A2", "A3", "D4", "2A1", "sqrt2*A1", "sqrt2*(A1+A1)",
                 "sqrt2*A3", "lb(zero(4))", "D16", "E8+E8", "Gamma16"]:
        lat = parse_spec(spec)
        orb = module_orbit(lat)
        if not (orb.cond_a or orb.cond_b or orb.cond_c):
            size = fusion_space(lat, orb).size
            assert size & (size - 1) == 0
