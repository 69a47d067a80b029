"""Truncated decompositions of the triplet algebra, its ideal, and its dual.

Every decomposition is a finite prefix: entry n carries the simple module
L_{2np-1,1} of lowest weight (np-1)(nq-1) with multiplicity 2n-1, which is
the dimension of the grading module V_{2n-2} in the equivariant form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rat
from .virasoro import ObjLabel, Params, VirLabel, conformal_weight, kac_dual_k11, kac_k, simple_l


@dataclass(frozen=True)
class GradedEntry:
    psl2: int | None  # even highest weight 2n of the multiplicity module, if graded
    mult: int
    obj: ObjLabel
    lowest_weight: Rat

    def __post_init__(self) -> None:
        if self.psl2 is not None:
            if self.psl2 % 2 or self.psl2 < 0:
                raise ValueError(f"grading labels are even and >= 0, got {self.psl2}")
            if self.mult != self.psl2 + 1:
                raise ValueError(
                    f"multiplicity {self.mult} must equal dim V_{self.psl2} = {self.psl2 + 1}"
                )


@dataclass(frozen=True)
class GradedDecomp:
    entries: tuple[GradedEntry, ...]
    n_max: int


def _family_entry(params: Params, n: int, graded: bool) -> GradedEntry:
    obj = simple_l(2 * n * params.p - 1, 1)
    h = conformal_weight(params, obj.label)
    assert h == (n * params.p - 1) * (n * params.q - 1)
    return GradedEntry(
        psl2=2 * n - 2 if graded else None, mult=2 * n - 1, obj=obj, lowest_weight=h
    )


def decompose_wpq(params: Params, n_max: int) -> GradedDecomp:
    """The triplet algebra as a plain Virasoro module, truncated at n_max.

    K_{1,1} with multiplicity 1, then (2n-1) copies of L_{2np-1,1} for
    2 <= n <= n_max.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    entries = [GradedEntry(psl2=None, mult=1, obj=kac_k(1, 1), lowest_weight=Fraction(0))]
    entries += [_family_entry(params, n, graded=False) for n in range(2, n_max + 1)]
    return GradedDecomp(entries=tuple(entries), n_max=n_max)


def decompose_wpq_equivariant(params: Params, n_max: int) -> GradedDecomp:
    """The triplet algebra with its symmetry grading: V_0 on K_{1,1} and
    V_{2n-2} on L_{2np-1,1}."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    entries = [GradedEntry(psl2=0, mult=1, obj=kac_k(1, 1), lowest_weight=Fraction(0))]
    entries += [_family_entry(params, n, graded=True) for n in range(2, n_max + 1)]
    return GradedDecomp(entries=tuple(entries), n_max=n_max)


def decompose_ideal(params: Params, n_max: int) -> GradedDecomp:
    """The simple ideal: (2n-1) copies of L_{2np-1,1} for 1 <= n <= n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    entries = [_family_entry(params, n, graded=False) for n in range(1, n_max + 1)]
    return GradedDecomp(entries=tuple(entries), n_max=n_max)


def decompose_wprime(params: Params, n_max: int, equivariant: bool = True) -> GradedDecomp:
    """The contragredient algebra: K'_{1,1} in place of K_{1,1}.

    With ``equivariant=False`` the grading labels are dropped and only the
    forgetful multiplicities 1, 3, 5, ... remain.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    entries = [
        GradedEntry(
            psl2=0 if equivariant else None,
            mult=1,
            obj=kac_dual_k11(),
            lowest_weight=Fraction(0),
        )
    ]
    entries += [_family_entry(params, n, graded=equivariant) for n in range(2, n_max + 1)]
    return GradedDecomp(entries=tuple(entries), n_max=n_max)


def o0_weight_identity(params: Params, n_max: int) -> list[tuple[int, Rat, bool]]:
    """The congruence h_{1,2nq-2} - h_{1,2} = (np-1)(nq-2) for 2 <= n <= n_max.

    Returns (n, difference, integrality flag); the flag records that the
    difference is an integer, and the difference itself always equals the
    closed form.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    h12 = conformal_weight(params, VirLabel(1, 2))
    out = []
    for n in range(2, n_max + 1):
        diff = conformal_weight(params, VirLabel(1, 2 * n * params.q - 2)) - h12
        out.append((n, diff, diff.denominator == 1))
    return out
