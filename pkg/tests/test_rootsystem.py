"""Root-system construction and the two inner-product normalizations."""

from fractions import Fraction

import pytest

from alcoves.rootsystem import (KILLING_SCALE, build_root_system,
                                casimir_eigenvalue, heisenberg_count,
                                parse_type, weyl_dimension)

ALL_TYPES = ["A1", "A2", "A3", "A4", "A5", "A6", "B2", "C2", "B3", "C3",
             "D4", "D5", "G2", "F4", "E6"]

RANK8_TYPES = ALL_TYPES + ["A7", "A8", "B8", "C8", "D8", "E7", "E8"]


@pytest.mark.parametrize("label", ALL_TYPES)
def test_basic_counts(label):
    rs = parse_type(label)
    assert rs.num_positive == (rs.dim_g - rs.rank) // 2
    assert sum(rs.exponents) == rs.num_positive
    assert len(rs.exponents) == rs.rank
    # Degree of prod (1 + t^(2m_i + 1)) is the dimension.
    assert sum(2 * m + 1 for m in rs.exponents) == rs.dim_g


@pytest.mark.parametrize("label", ALL_TYPES)
def test_highest_root_is_maximal(label):
    rs = parse_type(label)
    psi = rs.positive_roots[rs.highest_root]
    for phi in rs.positive_roots:
        assert all(p - q >= 0 for p, q in zip(psi, phi))
    assert rs.pair_roots_std(psi, psi) == 2


@pytest.mark.parametrize("label", ALL_TYPES)
def test_killing_normalization(label):
    rs = parse_type(label)
    scale = KILLING_SCALE(rs)
    for phi, norm in zip(rs.positive_roots, rs.norms_std):
        killing_norm = Fraction(norm, scale)
        # Long roots have Killing norm 1/h_dual; all reciprocals integral.
        if norm == 2:
            assert killing_norm == Fraction(1, rs.h_dual)
        recip = 1 / killing_norm
        assert recip.denominator == 1


@pytest.mark.parametrize("label", ALL_TYPES)
def test_rho_pairings(label):
    """(2 rho, alpha_i) = (alpha_i, alpha_i) and (2 rho, psi) = 1 - (psi, psi)
    in the Killing normalization."""
    rs = parse_type(label)
    scale = KILLING_SCALE(rs)
    for i in range(rs.rank):
        alpha = tuple(int(j == i) for j in range(rs.rank))
        lhs = Fraction(rs.pair_roots_std(rs.two_rho, alpha), scale)
        rhs = Fraction(rs.pair_roots_std(alpha, alpha), scale)
        assert lhs == rhs
    psi = rs.positive_roots[rs.highest_root]
    lhs = Fraction(rs.pair_roots_std(rs.two_rho, psi), scale)
    assert lhs == 1 - Fraction(rs.pair_roots_std(psi, psi), scale)


@pytest.mark.parametrize("label", RANK8_TYPES)
def test_casimir_of_highest_root_is_one(label):
    rs = parse_type(label)
    psi_weight = rs.root_coords_to_weight(rs.positive_roots[rs.highest_root])
    assert casimir_eigenvalue(rs, psi_weight) == 1


def test_paper_scale_examples():
    a1 = build_root_system("A", 1)
    assert (a1.num_positive, a1.h_dual, a1.dim_g) == (1, 2, 3)
    g2 = build_root_system("G", 2)
    assert (g2.num_positive, g2.h_dual, g2.dim_g) == (6, 4, 14)
    a4 = build_root_system("A", 4)
    assert (a4.dim_g, a4.h_dual) == (24, 5)


def test_invalid_types_rejected():
    for family, rank in [("D", 2), ("F", 5), ("B", 1), ("G", 3), ("E", 5), ("E", 9)]:
        with pytest.raises(ValueError):
            build_root_system(family, rank)
    with pytest.raises(ValueError):
        parse_type("X3")


def test_casimir_values():
    a1 = build_root_system("A", 1)
    assert casimir_eigenvalue(a1, (0,)) == 0
    # 2 alpha has fundamental coordinate 4.
    assert casimir_eigenvalue(a1, (4,)) == 3
    with pytest.raises(ValueError):
        casimir_eigenvalue(a1, (-1,))


def test_casimir_positive_definite_off_zero():
    a2 = build_root_system("A", 2)
    for a in range(4):
        for b in range(4):
            cas = casimir_eigenvalue(a2, (a, b))
            assert (cas == 0) == (a == b == 0)
            assert cas >= 0


def test_weyl_dimension_values():
    a2 = build_root_system("A", 2)
    assert weyl_dimension(a2, (0, 0)) == 1
    assert weyl_dimension(a2, (1, 1)) == a2.dim_g
    # Hand evaluation over the three positive roots: (4*1*5)/(1*1*2).
    assert weyl_dimension(a2, (3, 0)) == 10
    with pytest.raises(ValueError):
        weyl_dimension(a2, (1, Fraction(1, 2)))


@pytest.mark.parametrize("label", ALL_TYPES)
def test_weyl_dimension_of_adjoint(label):
    rs = parse_type(label)
    psi_weight = rs.root_coords_to_weight(rs.positive_roots[rs.highest_root])
    assert weyl_dimension(rs, psi_weight) == rs.dim_g


def test_heisenberg_counts():
    assert heisenberg_count(build_root_system("A", 1)) == 0
    assert heisenberg_count(build_root_system("A", 2)) == 1
    assert heisenberg_count(build_root_system("G", 2)) == 2


@pytest.mark.parametrize("label", ALL_TYPES)
def test_heisenberg_matches_dual_coxeter(label):
    rs = parse_type(label)
    assert heisenberg_count(rs) == rs.h_dual - 2


@pytest.mark.parametrize("label", ALL_TYPES)
def test_coordinate_round_trip(label):
    rs = parse_type(label)
    for phi in rs.positive_roots:
        w = rs.root_coords_to_weight(phi)
        back = rs.weight_to_root_coords(w)
        assert tuple(back) == tuple(phi)
        assert rs.in_root_lattice(w)
