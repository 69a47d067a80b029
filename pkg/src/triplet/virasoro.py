"""Central charge, conformal weights, and canonical Kac labels.

Labels live on the Kac table: a pair (r,s) of positive integers names both
the simple module L_{r,s} and the Kac module K_{r,s} of weight h_{r,s}.
Distinct labels can name isomorphic simple modules; ``canonical_label``
picks the unique representative with r >= 1, 1 <= s <= q and q*r >= p*s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rat


@dataclass(frozen=True)
class Params:
    """The coprime pair (p,q), both >= 2, fixing the central charge."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2 or self.q < 2:
            raise ValueError(f"p and q must be >= 2, got ({self.p},{self.q})")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"p and q must be coprime, got ({self.p},{self.q})")


@dataclass(frozen=True)
class VirLabel:
    """A Kac label (r,s) with r,s >= 1."""

    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.s < 1:
            raise ValueError(f"Kac labels need r,s >= 1, got ({self.r},{self.s})")

    def pair(self) -> tuple[int, int]:
        return (self.r, self.s)


SIMPLE_L = "SimpleL"
KAC_K = "KacK"
KAC_DUAL_K11 = "KacDualK11"


@dataclass(frozen=True)
class ObjLabel:
    """A named module: a simple L_{r,s}, a Kac module K_{r,s}, or K'_{1,1}.

    The contragredient K'_{1,1} carries no label; it always means the dual
    of the Kac module at (1,1).
    """

    kind: str
    label: VirLabel | None = None

    def __post_init__(self) -> None:
        if self.kind not in (SIMPLE_L, KAC_K, KAC_DUAL_K11):
            raise ValueError(f"unknown ObjLabel kind {self.kind!r}")
        if self.kind == KAC_DUAL_K11:
            if self.label is not None:
                raise ValueError("KacDualK11 carries no label")
        elif self.label is None:
            raise ValueError(f"{self.kind} requires a label")

    def __str__(self) -> str:
        if self.kind == KAC_DUAL_K11:
            return "K'_{1,1}"
        tag = "L" if self.kind == SIMPLE_L else "K"
        return f"{tag}_{{{self.label.r},{self.label.s}}}"

    def to_json(self) -> dict:
        if self.kind == KAC_DUAL_K11:
            return {"kind": self.kind}
        return {"kind": self.kind, "label": [self.label.r, self.label.s]}

    @staticmethod
    def from_json(data: dict) -> "ObjLabel":
        kind = data["kind"]
        if kind == KAC_DUAL_K11:
            return kac_dual_k11()
        r, s = data["label"]
        return ObjLabel(kind, VirLabel(r, s))


def simple_l(r: int, s: int) -> ObjLabel:
    return ObjLabel(SIMPLE_L, VirLabel(r, s))


def kac_k(r: int, s: int) -> ObjLabel:
    return ObjLabel(KAC_K, VirLabel(r, s))


def kac_dual_k11() -> ObjLabel:
    return ObjLabel(KAC_DUAL_K11)


def central_charge(params: Params) -> Rat:
    """c = 1 - 6(p-q)^2/(pq), exactly."""
    p, q = params.p, params.q
    return 1 - Fraction(6 * (p - q) ** 2, p * q)


def conformal_weight(params: Params, lbl: VirLabel) -> Rat:
    """h_{r,s} = (r^2-1)q/4p - (rs-1)/2 + (s^2-1)p/4q, exactly."""
    p, q = params.p, params.q
    r, s = lbl.r, lbl.s
    return (
        Fraction((r * r - 1) * q, 4 * p)
        - Fraction(r * s - 1, 2)
        + Fraction((s * s - 1) * p, 4 * q)
    )


def canonical_label(params: Params, lbl: VirLabel) -> VirLabel:
    """The unique symmetry image (r*,s*) with r* >= 1, 1 <= s* <= q, qr* >= ps*.

    The orbit of (r,s) under (r,s) -> (r+p,s+q) and (r,s) -> (-r,-s) is
    scanned directly: for each sign there is exactly one translate with
    s* in [1,q], and exactly one of the two candidates satisfies the
    remaining constraints.
    """
    p, q = params.p, params.q
    candidates = []
    for sign in (1, -1):
        s_img = sign * lbl.s
        r_img = sign * lbl.r
        s_star = (s_img - 1) % q + 1
        k = (s_star - s_img) // q
        r_star = r_img + k * p
        if r_star >= 1 and q * r_star >= p * s_star:
            candidates.append(VirLabel(r_star, s_star))
    uniq = sorted(set(candidates), key=lambda v: v.pair())
    if len(uniq) != 1:
        raise AssertionError(f"canonicalization of {lbl} not unique: {uniq}")
    out = uniq[0]
    assert conformal_weight(params, out) == conformal_weight(params, lbl)
    return out


def canonical_obj(params: Params, obj: ObjLabel) -> ObjLabel:
    """Canonicalize the label of a simple module; other kinds pass through.

    Kac modules with equal weights need not be isomorphic, so only
    SimpleL labels are rewritten.
    """
    if obj.kind == SIMPLE_L:
        return ObjLabel(SIMPLE_L, canonical_label(params, obj.label))
    return obj


def sl2_index_to_obj(params: Params, n: int) -> ObjLabel:
    """The dictionary n -> L_n: K'_{1,1} for n = 0, L_{(n+2)p-1,1} for n >= 1."""
    if n < 0:
        raise ValueError(f"sl2 index must be >= 0, got {n}")
    if n == 0:
        return kac_dual_k11()
    return simple_l((n + 2) * params.p - 1, 1)


def obj_to_sl2_index(params: Params, obj: ObjLabel) -> int | None:
    """Invert :func:`sl2_index_to_obj`; None when obj is not an L_n."""
    if obj.kind == KAC_DUAL_K11:
        return 0
    if obj.kind != SIMPLE_L:
        return None
    lbl = canonical_label(params, obj.label)
    if lbl.s != 1:
        return None
    n, rem = divmod(lbl.r + 1, params.p)
    if rem != 0 or n < 3:
        return None
    return n - 2


def sl2_lowest_weight(params: Params, n: int) -> Rat:
    """Lowest conformal weight of L_n: 0 for the unit K'_{1,1}."""
    if n == 0:
        return Fraction(0)
    return conformal_weight(params, VirLabel((n + 2) * params.p - 1, 1))
