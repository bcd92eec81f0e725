"""The level-2 Fock space: operators, crystal, canonical basis, alcoves."""

import pytest
from hypothesis import given, settings, strategies as st

from blobcell import fock, partitions
from blobcell.laurent import LaurentPoly


S_ANCHOR = (-1, 0)
E = 3
WORD = (0, 1, 0, 2, 2, 1, 1, 0, 0, 2)  # operator product, rightmost first


def _apply_crystal(word, s, e):
    b = ((), ())
    for i in reversed(word):
        b = fock.crystal_f(i, b, s, e)
        assert b is not None
    return b


def test_crystal_anchor_geometric():
    assert _apply_crystal(WORD, S_ANCHOR, 3) == ((6,), (4,))


def test_crystal_anchor_asymptotic():
    assert _apply_crystal(WORD, (11, 0), 3) == ((6, 3), (1,))


def test_crystal_e_inverts_f():
    s, e = S_ANCHOR, 3
    b = ((), ())
    for i in reversed(WORD):
        nb = fock.crystal_f(i, b, s, e)
        assert fock.crystal_e(i, nb, s, e) == b
        b = nb


def test_residues_and_node_order():
    s = (-1, 0)
    assert fock.residue((1, 1, 1), s, 3) == 2  # 1 - 1 - 1 mod 3
    assert fock.residue((1, 1, 2), s, 3) == 0
    # equal shifted content (both 0 here): the component-2 node is smaller
    assert fock.node_less((1, 1, 2), (1, 2, 1), s)
    assert not fock.node_less((1, 2, 1), (1, 1, 2), s)


def test_f_action_coefficients():
    s, e = (-1, 0), 3
    vec = {((), ()): LaurentPoly.one()}
    out = fock.f_action(0, vec, s, e)
    # two addable 0-nodes: (1,1,2) and none on component 1 (residue 2).
    assert out == {((), (1,)): LaurentPoly.one()}


def test_divided_power_exact():
    s, e = (0, 0), 2
    vec = {((), ()): LaurentPoly.one()}
    out = fock.divided_f(0, 2, vec, s, e)
    assert all(len(c.items()) >= 1 for c in out.values())
    # f^(2) = f^2/[2]! must stay integral
    for c in out.values():
        assert all(isinstance(x, int) for _, x in c.items())


def test_canonical_basis_unitriangular_small():
    for e, m in ((3, 2), (5, 3)):
        geom = fock.alcove_data(e, m)
        basis = fock.canonical_basis(6, geom.s, e)
        for mu, vec in basis.items():
            assert vec[mu].is_one()
            for b, c in vec.items():
                if b != mu:
                    assert c.nonpositive_part().is_zero()


def test_canonical_basis_bar_invariant_small():
    # G(mu) expanded back in monomials of f's is bar-invariant; here we
    # check the characterizing consequence: applying the bar-symmetric
    # elimination to G returns G itself (coefficients already in v Z[v]).
    geom = fock.alcove_data(3, 2)
    basis = fock.canonical_basis(4, geom.s, 3)
    for mu, vec in basis.items():
        offenders = [b for b, c in vec.items()
                     if b != mu and not c.nonpositive_part().is_zero()]
        assert offenders == []


def test_alcove_geometry_e3_m2():
    geom = fock.alcove_data(3, 2)
    assert geom.s == (-1, 0)
    assert geom.m_minus == -2
    assert geom.is_wall(-2) and geom.is_wall(1) and geom.is_wall(4)
    assert not geom.is_wall(0)
    assert geom.alcove_index(0) == 0
    assert geom.alcove_index(2) == 1
    assert geom.alcove_index(-4) == -1
    with pytest.raises(fock.SingularWeight):
        geom.alcove_index(1)


def test_linkage():
    geom = fock.alcove_data(5, 3)
    assert geom.s == (-2, 0)
    # lambda = 1 and mu = -1 both sit in the fundamental alcove but in
    # different orbits of the wall-reflection group.
    assert not geom.linked(1, -1)
    assert geom.linked(1, 1)
    assert geom.linked(0, -6)  # reflection of 0 across the wall -3
    assert fock.decomposition_number(geom, 1, -1).is_zero()
    assert fock.decomposition_number(geom, -1, 1).is_zero()


def test_decomposition_positive_orientation():
    geom = fock.alcove_data(3, 2)
    # 0 in the fundamental alcove, 6 two alcoves up, linked (6 = 0 + 2e).
    assert geom.linked(0, 6)
    d = fock.decomposition_number(geom, 0, 6)
    assert d == LaurentPoly.monomial(2)
    assert fock.decomposition_number(geom, 6, 0).is_zero()


def test_decomp_matches_llt_small():
    for e, m in ((3, 2), (5, 3)):
        geom = fock.alcove_data(e, m)
        basis = fock.canonical_basis(6, geom.s, e)
        for n in range(1, 7):
            lams = [l for l in partitions.lambda_n(n)
                    if not geom.is_wall(l)]
            for mu_w in lams:
                mu = partitions.one_line_of_weight(n, mu_w)
                vec = basis[mu]
                for lam_w in lams:
                    lam = partitions.one_line_of_weight(n, lam_w)
                    got = vec.get(lam, LaurentPoly.zero())
                    want = (LaurentPoly.one() if lam_w == mu_w else
                            fock.decomposition_number(geom, lam_w, mu_w))
                    assert got == want, (e, n, lam_w, mu_w)


def test_kleshchev_convert_sample():
    assert fock.kleshchev_convert(10, 3, 2, 2) == ((6, 3), (1,))
    assert fock.kleshchev_convert(10, 5, 3, -4) == ((4,), (6,))
    assert fock.kleshchev_convert(10, 7, 4, 0) == ((5, 2), (3,))
    assert fock.kleshchev_convert(10, 9, 5, -6) == ((3,), (7,))


def test_kleshchev_convert_small_n():
    # n = 1: the two simple modules.
    assert fock.kleshchev_convert(1, 3, 2, 1) == ((1,), ())
    assert fock.kleshchev_convert(1, 3, 2, -1) == ((), (1,))


@given(st.integers(1, 5), st.sampled_from([(3, 2), (5, 3)]))
@settings(max_examples=20, deadline=None)
def test_crystal_paths_reach_all_kleshchev(n, em):
    e, m = em
    geom = fock.alcove_data(e, m)
    paths = fock.crystal_paths(n, geom.s, e)
    for lam in partitions.lambda_n(n):
        if not geom.is_wall(lam):
            assert partitions.one_line_of_weight(n, lam) in paths
