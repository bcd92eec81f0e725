"""The unequal-parameter C-basis, cells, the ideal, and the tensor action."""

import pytest

from blobcell import hecke, weylb
from blobcell.hecke import (
    bar_involution, c_gen, compute_kl_basis, ideal_jn, left_cells,
    multiply_t, t_gen, type_a, type_b,
)
from blobcell.laurent import LaurentPoly


def test_quadratic_relations():
    # T_s^2 = (q_s - q_s^{-1}) T_s + 1 with q_0 = v, q_i = v^2.
    for n, s in ((2, 0), (2, 1), (3, 2)):
        cox = type_b(n)
        ts = t_gen(cox, s)
        sq = multiply_t(cox, ts, ts)
        qs = cox.weight(s)
        expected = {cox.identity: LaurentPoly.one()}
        e = cox._gen_elts[s]
        expected[e] = qs - qs.bar()
        assert sq == expected


def test_braid_relations():
    cox = type_b(3)
    for a, b, order in ((0, 1, 4), (1, 2, 3), (0, 2, 2)):
        x = {cox.identity: LaurentPoly.one()}
        y = {cox.identity: LaurentPoly.one()}
        for k in range(order):
            x = multiply_t(cox, x, t_gen(cox, a if k % 2 == 0 else b))
            y = multiply_t(cox, y, t_gen(cox, b if k % 2 == 0 else a))
        assert x == y


def test_bar_is_involution():
    cox = type_b(2)
    basis = compute_kl_basis(2)
    for w in basis.elements:
        x = basis.c[w]
        assert bar_involution(cox, bar_involution(cox, x)) == x


def test_kl_basis_defining_properties():
    basis = compute_kl_basis(3)
    for w in basis.elements:
        assert basis.check_bar_invariance(w)
        expansion = basis.c[w]
        assert expansion[w].is_one()
        for y, h in expansion.items():
            if y != w:
                assert h.nonpositive_part().is_zero()
                assert weylb.bruhat_leq(y, w)


def test_kl_closed_form_identities():
    cox = type_b(3)
    basis = compute_kl_basis(3)
    c0, c1, c2 = (c_gen(cox, k) for k in range(3))
    s1s2s1 = weylb.evaluate_word(3, (1, 2, 1))
    lhs = multiply_t(cox, multiply_t(cox, c1, c2), c1)
    rhs = dict(basis.c[s1s2s1])
    for w, c in c1.items():
        rhs[w] = rhs.get(w, LaurentPoly.zero()) + c
    assert {w: c for w, c in lhs.items() if not c.is_zero()} \
        == {w: c for w, c in rhs.items() if not c.is_zero()}

    s1s0s1 = weylb.evaluate_word(3, (1, 0, 1))
    lhs = multiply_t(cox, multiply_t(cox, c1, c0), c1)
    ratio2 = LaurentPoly({1: 1, -1: 1})
    rhs = dict(basis.c[s1s0s1])
    for w, c in c1.items():
        rhs[w] = rhs.get(w, LaurentPoly.zero()) + c * ratio2
    assert {w: c for w, c in lhs.items() if not c.is_zero()} \
        == {w: c for w, c in rhs.items() if not c.is_zero()}


def test_cells_partition_group():
    basis = compute_kl_basis(3)
    cells = left_cells(basis)
    union = set().union(*cells)
    assert union == set(basis.elements)
    assert sum(len(c) for c in cells) == len(basis.elements)
    # every cell is entirely inside or entirely outside W_b
    for cell in cells:
        flags = {weylb.is_in_wb_by_words(w) for w in cell}
        assert len(flags) == 1


def test_ideal_small():
    basis = compute_kl_basis(3)
    ideal = ideal_jn(3, basis)
    assert ideal.verify_two_sided()
    for g in ideal.generators():
        assert ideal.contains(g)
    assert len(basis.elements) - len(ideal.outside) \
        == weylb.wb_count_formula(3)


def test_cell_module_dimensions():
    basis = compute_kl_basis(3)
    dims = sorted(len(c) for c in left_cells(basis)
                  if weylb.is_in_wb_by_words(min(c)))
    # Standard-module dims at n=3 are 1, 3, 3, 1; the left cells inside
    # W_b have those sizes and their total is |W_b(3)| = 20.
    assert sum(dims) == weylb.wb_count_formula(3)
    assert set(dims) <= {1, 3}
    cell_basis, mats = hecke.cell_module(basis, weylb.identity(3))
    assert len(cell_basis) == 1
    assert set(mats) == {0, 1, 2}


def test_type_a_compare_n2():
    report = hecke.type_a_kl_compare(2)
    assert report["violations"] == []
    assert report["cells_match"]


def test_tensor_ideal_small():
    for n in (2, 3):
        assert hecke.tensor_ideal_annihilates(n)
    assert hecke.ideal_vanish_symbolic(3)


def test_permutation_module_dims():
    from math import comb
    for n in (2, 3, 4, 5):
        for lam in range(-n, n + 1, 2):
            assert len(hecke.permutation_module(n, lam)) \
                == comb(n, (n - lam) // 2)
    with pytest.raises(hecke.WeightOutOfRange):
        hecke.permutation_module(3, 2)


def test_type_a_coxeter_sanity():
    cox = type_a(4)
    ts = t_gen(cox, 1)
    sq = multiply_t(cox, ts, ts)
    assert sq[cox.identity].is_one()
