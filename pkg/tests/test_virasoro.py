"""Central charge, conformal weights, label symmetries, canonical labels."""

from fractions import Fraction

import pytest

from triplet.virasoro import (
    ObjLabel,
    Params,
    VirLabel,
    canonical_label,
    central_charge,
    conformal_weight,
    kac_dual_k11,
    kac_k,
    obj_to_sl2_index,
    simple_l,
    sl2_index_to_obj,
)

PAIRS = [Params(2, 3), Params(3, 4), Params(2, 5), Params(3, 5), Params(4, 5)]


def test_central_charge_values():
    assert central_charge(Params(2, 3)) == 0
    assert central_charge(Params(3, 4)) == Fraction(1, 2)
    assert central_charge(Params(2, 5)) == Fraction(-22, 5)


def test_conformal_weight_values():
    for params in PAIRS:
        assert conformal_weight(params, VirLabel(1, 1)) == 0
    p23 = Params(2, 3)
    assert conformal_weight(p23, VirLabel(7, 1)) == 15  # = (2p-1)(2q-1) at n=2
    assert conformal_weight(p23, VirLabel(1, 5)) == 2
    assert conformal_weight(p23, VirLabel(3, 1)) == 2


def test_params_validation():
    with pytest.raises(ValueError):
        Params(2, 4)
    with pytest.raises(ValueError):
        Params(1, 3)
    with pytest.raises(ValueError):
        VirLabel(0, 1)


def test_canonical_label_examples():
    p23 = Params(2, 3)
    assert canonical_label(p23, VirLabel(1, 1)) == VirLabel(1, 1)
    assert canonical_label(p23, VirLabel(1, 5)) == VirLabel(3, 1)
    assert canonical_label(p23, VirLabel(7, 1)) == VirLabel(7, 1)
    assert canonical_label(p23, VirLabel(1, 11)) == VirLabel(7, 1)


def test_canonical_label_properties():
    for params in PAIRS:
        for r in range(1, 31):
            for s in range(1, 31):
                lbl = VirLabel(r, s)
                can = canonical_label(params, lbl)
                assert can.r >= 1 and 1 <= can.s <= params.q
                assert params.q * can.r >= params.p * can.s
                assert canonical_label(params, can) == can
                assert conformal_weight(params, can) == conformal_weight(params, lbl)


def test_translation_symmetry():
    for params in PAIRS:
        for r in range(1, 51):
            for s in range(1, 51):
                assert conformal_weight(params, VirLabel(r, s)) == conformal_weight(
                    params, VirLabel(r + params.p, s + params.q)
                )


def test_family_weight_identities():
    for params in PAIRS:
        p, q = params.p, params.q
        for n in range(1, 21):
            assert conformal_weight(params, VirLabel(2 * n * p - 1, 1)) == (n * p - 1) * (n * q - 1)
            assert conformal_weight(params, VirLabel(n * p - 1, 1)) == Fraction(
                (n * p - 2) * (n * q - 2), 4
            )


def test_row_column_identification():
    # The two presentations of the family modules share canonical labels.
    for params in PAIRS:
        for n in range(2, 21):
            row = canonical_label(params, VirLabel(n * params.p - 1, 1))
            col = canonical_label(params, VirLabel(1, n * params.q - 1))
            assert row == col


def test_obj_label_validation_and_json():
    with pytest.raises(ValueError):
        ObjLabel("KacDualK11", VirLabel(1, 1))
    with pytest.raises(ValueError):
        ObjLabel("SimpleL", None)
    with pytest.raises(ValueError):
        ObjLabel("Mystery", VirLabel(1, 1))
    for obj in (simple_l(3, 1), kac_k(2, 7), kac_dual_k11()):
        assert ObjLabel.from_json(obj.to_json()) == obj


def test_sl2_dictionary_round_trip():
    for params in PAIRS:
        assert sl2_index_to_obj(params, 0) == kac_dual_k11()
        for n in range(0, 9):
            assert obj_to_sl2_index(params, sl2_index_to_obj(params, n)) == n
        # the column presentation maps back too
        assert obj_to_sl2_index(params, simple_l(1, 3 * params.q - 1)) == 1
        assert obj_to_sl2_index(params, simple_l(2 * params.p - 1, 1)) is None
        assert obj_to_sl2_index(params, simple_l(1, 1)) is None
        assert obj_to_sl2_index(params, kac_k(1, 1)) is None
