"""Blob diagrams, the diagram algebra, and its standard modules."""

from math import comb

import pytest

from blobcell import blob, partitions
from blobcell.blob import (
    all_diagrams, blob_algebra_dimension, blob_scalars, compose_diagrams,
    generator_diagram, half_diagrams, identity_diagram,
    regular_representation, standard_module, verify_presentation,
)
from blobcell.laurent import LaurentPoly


def test_dimension_formula():
    for n in (1, 2, 3, 4, 5):
        assert len(all_diagrams(n)) == blob_algebra_dimension(n) \
            == comb(2 * n, n)


def test_identity_neutral():
    for n in (2, 3):
        e = identity_diagram(n)
        for k in range(n):
            u = generator_diagram(n, k)
            for a, b in ((e, u), (u, e)):
                scalar, d = compose_diagrams(a, b)
                assert scalar.is_one() and d == u


def test_generator_squares():
    sc = blob_scalars(2)
    n = 3
    u0 = generator_diagram(n, 0)
    scalar, d = compose_diagrams(u0, u0)
    assert d == u0 and scalar == sc["blob_merge"]
    u1 = generator_diagram(n, 1)
    scalar, d = compose_diagrams(u1, u1)
    assert d == u1 and scalar == sc["delta_plain"]


def test_blob_braid_scalar():
    # U_1 U_0 U_1 = [m-1] U_1
    sc = blob_scalars(2)
    n = 2
    u0, u1 = generator_diagram(n, 0), generator_diagram(n, 1)
    s1, d = compose_diagrams(u1, u0)
    s2, d = compose_diagrams(d, u1)
    assert d == u1 and s1 * s2 == sc["blob_loop"]


def test_standard_module_dims():
    for n in range(1, 7):
        for lam in partitions.lambda_n(n):
            assert len(half_diagrams(n, lam)) == comb(n, (n - lam) // 2)
    with pytest.raises(blob.WeightOutOfRange):
        half_diagrams(3, 2)


def test_presentation_on_standard_modules():
    for n in (1, 2, 3):
        for lam in partitions.lambda_n(n):
            mod = standard_module(n, lam)
            rep = verify_presentation(mod.matrices, 2)
            assert rep["all"], (n, lam, rep)


def test_presentation_on_regular_representation():
    for n in (1, 2, 3):
        rep = verify_presentation(regular_representation(n), 2)
        assert rep["all"], (n, rep)


def test_localization_ranks():
    for n in (2, 3, 4):
        for lam in partitions.lambda_n(n):
            mod = standard_module(n, lam)
            rank = blob.localize_dimension(mod)
            expected = 0 if abs(lam) == n else comb(n - 2,
                                                    (n - 2 - lam) // 2)
            assert rank == expected, (n, lam, rank, expected)


def test_cyclotomic_spec():
    zeta_v, q, i_unit, big_n = blob.cyclotomic_spec(2)
    assert big_n == 12  # the field is Q(zeta_12) for l = 6
    assert (q ** 6).is_one()
    assert not (q * q).is_one()
    assert zeta_v == i_unit * q ** 2
    assert zeta_v * zeta_v == q


def test_compare_cell_to_standard_n2():
    report = blob.compare_cell_to_standard(2)
    assert report["all_match"]
    assert report["identity_cell_lam"] == 2
    assert report["s0_cell_lam"] == -2


def test_scalars():
    sc = blob_scalars(2)
    v = LaurentPoly.monomial(1)
    assert sc["delta_plain"] == -(v + v.bar())
    assert sc["blob_loop"] == LaurentPoly.one()   # [m-1] = [1] = 1
    assert sc["blob_merge"] == -(v + v.bar())     # -[m] = -[2]
