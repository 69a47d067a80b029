"""Fusion products against the character oracle, and the ring laws."""

import pytest

from triplet.fusion import (
    CharPoly,
    DecompList,
    cg_oracle,
    decomp_from_pairs,
    fuse_C,
    fuse_Kr1_K1s,
    fuse_L_family,
    fusion_ring_product,
)
from triplet.kacmod import UnsupportedObjectError
from triplet.virasoro import Params, kac_dual_k11, kac_k, simple_l, sl2_index_to_obj

PAIRS = [Params(2, 3), Params(3, 4), Params(2, 5), Params(3, 5), Params(4, 5)]


def one(obj) -> DecompList:
    return decomp_from_pairs([(1, obj)])


def test_fuse_C_examples():
    assert fuse_C(1, 1) == [0, 2]
    assert fuse_C(0, 5) == [5]
    assert fuse_C(3, 4) == [1, 3, 5, 7]


def test_cg_oracle_examples():
    assert cg_oracle(1, 1) == [0, 2]
    assert cg_oracle(2, 2) == [0, 2, 4]
    for m in range(8):
        assert cg_oracle(m, 0) == [m]


def test_fuse_C_matches_oracle():
    for m in range(13):
        for n in range(13):
            assert fuse_C(m, n) == cg_oracle(m, n)


def test_dimension_grading():
    for m in range(13):
        for n in range(13):
            assert sum(k + 1 for k in fuse_C(m, n)) == (m + 1) * (n + 1)


def test_char_poly_invariants():
    for n in range(9):
        ch = CharPoly.irrep(n)
        assert ch.is_symmetric()
        assert ch.top_degree() == n
        assert ch.dimension() == n + 1
    prod = CharPoly.irrep(3) * CharPoly.irrep(5)
    assert prod.is_symmetric()
    assert prod.dimension() == 24


def test_fuse_L_family_examples():
    for params in PAIRS:
        p = params.p
        assert fuse_L_family(params, 2, 2) == one(kac_dual_k11())
        assert fuse_L_family(params, 3, 2) == one(simple_l(3 * p - 1, 1))
        assert fuse_L_family(params, 3, 3) == decomp_from_pairs(
            [(1, kac_dual_k11()), (1, simple_l(4 * p - 1, 1))]
        )
        assert fuse_L_family(params, 2, 3) == fuse_L_family(params, 3, 2)
    with pytest.raises(ValueError):
        fuse_L_family(Params(2, 3), 1, 2)


def test_fusion_ring_annihilation_and_unit():
    for params in PAIRS:
        p = params.p
        l11 = one(simple_l(1, 1))
        socle = one(simple_l(2 * p - 1, 1))
        unit = one(kac_dual_k11())
        l1 = one(simple_l(3 * p - 1, 1))
        assert fusion_ring_product(params, l11, socle).is_zero()
        assert fusion_ring_product(params, l11, l1).is_zero()
        assert fusion_ring_product(params, l11, unit).is_zero()
        assert fusion_ring_product(params, unit, l1) == l1
        assert fusion_ring_product(params, socle, l1) == l1
        assert fusion_ring_product(params, socle, socle) == unit


def test_fusion_ring_associativity_example():
    params = Params(2, 3)
    l1 = one(sl2_index_to_obj(params, 1))
    l2 = one(sl2_index_to_obj(params, 2))
    lhs = fusion_ring_product(params, fusion_ring_product(params, l1, l1), l2)
    rhs = fusion_ring_product(params, l1, fusion_ring_product(params, l1, l2))
    assert lhs == rhs
    expected = decomp_from_pairs(
        [(1, sl2_index_to_obj(params, 0)), (2, sl2_index_to_obj(params, 2)), (1, sl2_index_to_obj(params, 4))]
    )
    assert lhs == expected


def test_fusion_ring_laws_exhaustive():
    params = Params(2, 3)
    basis = [one(sl2_index_to_obj(params, k)) for k in range(11)]
    for a in basis:
        for b in basis:
            ab = fusion_ring_product(params, a, b)
            assert ab == fusion_ring_product(params, b, a)
            for c in basis:
                lhs = fusion_ring_product(params, ab, c)
                rhs = fusion_ring_product(params, a, fusion_ring_product(params, b, c))
                assert lhs == rhs


def test_even_subring_closed():
    params = Params(3, 4)
    for a in range(0, 11, 2):
        for b in range(0, 11, 2):
            prod = fusion_ring_product(
                params, one(sl2_index_to_obj(params, a)), one(sl2_index_to_obj(params, b))
            )
            for entry in prod.entries:
                if entry.obj.kind == "SimpleL":
                    assert (entry.obj.label.r + 1) % (2 * params.p) == 0


def test_fusion_ring_rejections():
    params = Params(2, 3)
    l11 = one(simple_l(1, 1))
    with pytest.raises(UnsupportedObjectError):
        fusion_ring_product(params, l11, l11)
    # at (2,3) the label (1,4) is canonically (3,2), outside the sl2-type set
    with pytest.raises(UnsupportedObjectError):
        fusion_ring_product(params, one(simple_l(1, 4)), one(kac_dual_k11()))
    with pytest.raises(UnsupportedObjectError):
        fusion_ring_product(params, one(kac_k(1, 2)), one(kac_dual_k11()))


def test_fuse_Kr1_K1s():
    params = Params(2, 3)
    assert fuse_Kr1_K1s(params, 1, 1) == kac_k(1, 1)
    assert fuse_Kr1_K1s(params, 3, 5) == kac_k(3, 5)
    for s in range(1, 6):
        assert fuse_Kr1_K1s(params, 1, s) == kac_k(1, s)
    with pytest.raises(ValueError):
        fuse_Kr1_K1s(params, 0, 1)


def test_decomp_list_invariants():
    from triplet.fusion import DecompEntry

    with pytest.raises(ValueError):
        DecompList((DecompEntry(0, kac_dual_k11()),))
    with pytest.raises(ValueError):
        DecompList((DecompEntry(1, kac_dual_k11()), DecompEntry(2, kac_dual_k11())))
    merged = decomp_from_pairs([(1, kac_dual_k11()), (2, kac_dual_k11())])
    assert len(merged.entries) == 1 and merged.entries[0].mult == 3
