"""Structural data of Kac modules: exact sequences, Loewy diagrams, factors.

The three-layer diagram of K_{mp-1,nq-1} is generated positionally: nodes
are indexed by the integer appearing in their label family, and adjacency
follows the displayed pattern (top node i covers the middle nodes indexed
i-2 and i; middle node i covers the socle nodes indexed i-1 and i+1),
with boundary nodes covering fewer.  Golden tests pin the small cases.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal, Optional, Union

from .virasoro import (
    KAC_DUAL_K11,
    KAC_K,
    SIMPLE_L,
    ObjLabel,
    Params,
    VirLabel,
    canonical_label,
    conformal_weight,
    kac_dual_k11,
    kac_k,
    simple_l,
)


class UnsupportedObjectError(ValueError):
    """Raised for structure requests the source results do not cover."""


@dataclass(frozen=True)
class FusionExpr:
    """A formal fusion product left (x) right, used as the middle of a sequence."""

    left: ObjLabel
    right: ObjLabel

    def __str__(self) -> str:
        return f"{self.left} (x) {self.right}"


@dataclass(frozen=True)
class ExactSeq:
    """A short exact sequence 0 -> sub -> mid -> quot -> 0.

    ``sub`` is None for a zero submodule, in which case ``splits`` is
    None (not applicable) and mid is isomorphic to quot.
    """

    sub: Optional[ObjLabel]
    mid: Union[ObjLabel, FusionExpr]
    quot: ObjLabel
    splits: Optional[bool]

    def __post_init__(self) -> None:
        if self.sub is None and self.splits is not None:
            raise ValueError("a sequence with zero submodule has no split question")

    def __str__(self) -> str:
        sub = "0" if self.sub is None else str(self.sub)
        return f"0 -> {sub} -> {self.mid} -> {self.quot} -> 0"


Layer = Literal["top", "middle", "socle"]


@dataclass(frozen=True)
class LoewyNode:
    id: str
    label: VirLabel
    layer: Layer


@dataclass(frozen=True)
class LoewyDiagram:
    """Layered composition-factor graph; edges run top->middle->socle."""

    nodes: tuple[LoewyNode, ...]
    edges: tuple[tuple[str, str], ...]

    def layer_labels(self, layer: Layer) -> list[VirLabel]:
        return [n.label for n in self.nodes if n.layer == layer]

    def node_by_id(self, node_id: str) -> LoewyNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)


def kac_length2_seq(
    params: Params,
    family: Literal["row", "column", "k11", "k11dual"],
    m: int | None = None,
    r: int | None = None,
    n: int | None = None,
    s: int | None = None,
) -> ExactSeq:
    """The length-2 exact sequence of a Kac module.

    row:    0 -> L_{(m+2)p-r,1} -> K_{mp+r,1} -> L_{mp+r,1} -> 0,  m>=0, 1<=r<=p-1
    column: 0 -> L_{1,(n+2)q-s} -> K_{1,nq+s} -> L_{1,nq+s} -> 0,  n>=0, 1<=s<=q-1
    k11:    0 -> L_{2p-1,1} -> K_{1,1}  -> L_{1,1}    -> 0
    k11dual:0 -> L_{1,1}    -> K'_{1,1} -> L_{2p-1,1} -> 0

    All four are non-split.
    """
    p, q = params.p, params.q
    if family == "row":
        if m is None or r is None or m < 0 or not 1 <= r <= p - 1:
            raise ValueError(f"row family needs m >= 0 and 1 <= r <= p-1, got m={m}, r={r}")
        return ExactSeq(
            sub=simple_l((m + 2) * p - r, 1),
            mid=kac_k(m * p + r, 1),
            quot=simple_l(m * p + r, 1),
            splits=False,
        )
    if family == "column":
        if n is None or s is None or n < 0 or not 1 <= s <= q - 1:
            raise ValueError(f"column family needs n >= 0 and 1 <= s <= q-1, got n={n}, s={s}")
        return ExactSeq(
            sub=simple_l(1, (n + 2) * q - s),
            mid=kac_k(1, n * q + s),
            quot=simple_l(1, n * q + s),
            splits=False,
        )
    if family == "k11":
        return ExactSeq(sub=simple_l(2 * p - 1, 1), mid=kac_k(1, 1), quot=simple_l(1, 1), splits=False)
    if family == "k11dual":
        return ExactSeq(sub=simple_l(1, 1), mid=kac_dual_k11(), quot=simple_l(2 * p - 1, 1), splits=False)
    raise ValueError(f"unknown length-2 family {family!r}")


def k12_fusion_seq(params: Params, r: int, s: int) -> ExactSeq:
    """0 -> K_{r,s-1} -> K_{1,2} (x) K_{r,s} -> K_{r,s+1} -> 0, split iff q does not divide s.

    K_{r,0} := 0, so s = 1 degenerates to the unit isomorphism
    K_{1,2} (x) K_{r,1} = K_{r,2}.
    """
    if r < 1 or s < 1:
        raise ValueError(f"Kac labels need r,s >= 1, got ({r},{s})")
    mid = FusionExpr(kac_k(1, 2), kac_k(r, s))
    if s == 1:
        return ExactSeq(sub=None, mid=mid, quot=kac_k(r, 2), splits=None)
    return ExactSeq(sub=kac_k(r, s - 1), mid=mid, quot=kac_k(r, s + 1), splits=s % params.q != 0)


def _mm_nn_index_sets(m: int, n: int) -> tuple[list[int], list[int], list[int], list[int]]:
    # Index ranges of the four label families in the K_{mp-1,nq-1} diagram.
    top = list(range(m - n + 2, m + n - 1, 2))
    mid_col = list(range(m - n, m + n - 1, 2))  # L_{1,iq+1}
    mid_row = list(range(m - n + 2, m + n - 1, 2))  # L_{jp+1,1}
    socle = list(range(m - n + 1, m + n, 2))  # L_{p-1,iq+1}
    return top, mid_col, mid_row, socle


def kac_mm_nn_diagram(params: Params, m: int, n: int) -> LoewyDiagram:
    """The three-layer Loewy diagram of K_{mp-1,nq-1} for m >= n >= 2.

    Layers: top {L_{ip-1,1}}, middle {L_{1,iq+1}} u {L_{jp+1,1}},
    socle {L_{p-1,iq+1}}, with the index ranges and adjacency of the
    displayed composition series (4n-2 nodes in total).
    """
    if n < 2:
        raise ValueError(f"diagram needs n >= 2, got n={n}")
    if m < n:
        raise ValueError(f"diagram needs m >= n (swap the arguments), got m={m} < n={n}")
    p, q = params.p, params.q
    top_idx, mid_col_idx, mid_row_idx, socle_idx = _mm_nn_index_sets(m, n)

    def make(label: VirLabel, layer: Layer) -> LoewyNode:
        return LoewyNode(id=f"L_{label.r}_{label.s}", label=label, layer=layer)

    top = {i: make(VirLabel(i * p - 1, 1), "top") for i in top_idx}
    mid_col = {i: make(VirLabel(1, i * q + 1), "middle") for i in mid_col_idx}
    mid_row = {j: make(VirLabel(j * p + 1, 1), "middle") for j in mid_row_idx}
    socle = {i: make(VirLabel(p - 1, i * q + 1), "socle") for i in socle_idx}

    nodes: list[LoewyNode] = (
        [top[i] for i in top_idx]
        + [mid_col[i] for i in mid_col_idx]
        + [mid_row[j] for j in mid_row_idx]
        + [socle[i] for i in socle_idx]
    )

    edges: list[tuple[str, str]] = []
    for i in top_idx:
        for k in (i - 2, i):
            if k in mid_col:
                edges.append((top[i].id, mid_col[k].id))
            if k in mid_row:
                edges.append((top[i].id, mid_row[k].id))
    for i in mid_col_idx:
        for k in (i - 1, i + 1):
            if k in socle:
                edges.append((mid_col[i].id, socle[k].id))
    for j in mid_row_idx:
        for k in (j - 1, j + 1):
            if k in socle:
                edges.append((mid_row[j].id, socle[k].id))

    return LoewyDiagram(nodes=tuple(nodes), edges=tuple(edges))


QuotientFamily = Literal["top_mm_nn", "mp_plus1", "mp_minus1_nq_plus1", "mp_minus1_shifted"]


def simple_quotients(params: Params, family: QuotientFamily, m: int, n: int) -> list[VirLabel]:
    """Simple-quotient lists of the Kac modules entering the fusion argument.

    top_mm_nn:           top layer of K_{mp-1,nq-1}            (m >= n >= 2)
    mp_plus1:            quotients of K_{mp+1,nq-1}            (m >= n >= 2)
    mp_minus1_nq_plus1:  quotients of K_{mp-1,nq+1}            (m >= n >= 2)
    mp_minus1_shifted:   quotients of K_{mp-1,(m-n)q+1}        (m > n >= 1)
    """
    p, q = params.p, params.q
    if family == "mp_minus1_shifted":
        if not m > n or n < 1:
            raise ValueError(f"shifted list needs m > n >= 1, got m={m}, n={n}")
        return [VirLabel(1, i * q + 1) for i in range(n, 2 * m - n - 1, 2)]
    if not (m >= n >= 2):
        raise ValueError(f"quotient lists need m >= n >= 2, got m={m}, n={n}")
    if family == "top_mm_nn":
        return [VirLabel(i * p - 1, 1) for i in range(m - n + 2, m + n - 1, 2)]
    if family == "mp_plus1":
        return [VirLabel(j * p + 1, 1) for j in range(m - n + 2, m + n - 1, 2)]
    if family == "mp_minus1_nq_plus1":
        start = m - n if m > n else 2
        return [VirLabel(1, i * q + 1) for i in range(start, m + n - 1, 2)]
    raise ValueError(f"unknown quotient family {family!r}")


def _length2_factors(params: Params, lbl: VirLabel) -> list[VirLabel] | None:
    # Factors of a length-2 Kac module from the two displayed families,
    # or None when (r,s) is not of that shape.
    p, q = params.p, params.q
    if lbl.s == 1 and lbl.r % p != 0:
        m, r = divmod(lbl.r, p)
        return [VirLabel((m + 2) * p - r, 1), VirLabel(m * p + r, 1)]
    if lbl.r == 1 and lbl.s % q != 0:
        n, s = divmod(lbl.s, q)
        return [VirLabel(1, (n + 2) * q - s), VirLabel(1, n * q + s)]
    return None


def composition_factors(params: Params, obj: ObjLabel) -> Counter:
    """Multiset of canonicalized simple factors of a supported module.

    Supports K'_{1,1}, the length-2 Kac families K_{mp+r,1} / K_{1,nq+s}
    (including K_{1,1}), and K_{mp-1,nq-1} with m >= n >= 2.  Anything
    else raises :class:`UnsupportedObjectError`.
    """
    if obj.kind == KAC_DUAL_K11:
        seq = kac_length2_seq(params, "k11dual")
        return Counter(
            canonical_label(params, lbl) for lbl in (seq.sub.label, seq.quot.label)
        )
    if obj.kind == SIMPLE_L:
        return Counter([canonical_label(params, obj.label)])
    assert obj.kind == KAC_K
    lbl = obj.label
    p, q = params.p, params.q
    two = _length2_factors(params, lbl)
    if two is not None:
        return Counter(canonical_label(params, v) for v in two)
    if (lbl.r + 1) % p == 0 and (lbl.s + 1) % q == 0:
        m = (lbl.r + 1) // p
        n = (lbl.s + 1) // q
        if m >= n >= 2:
            diagram = kac_mm_nn_diagram(params, m, n)
            return Counter(canonical_label(params, node.label) for node in diagram.nodes)
    raise UnsupportedObjectError(
        f"composition factors of K_{{{lbl.r},{lbl.s}}} are outside the supported families"
    )


def diagram_weights_congruent(params: Params, diagram: LoewyDiagram, reference: VirLabel) -> bool:
    """All node weights congruent mod 1 to the weight of ``reference``."""
    href = conformal_weight(params, reference)
    return all(
        (conformal_weight(params, node.label) - href).denominator == 1
        for node in diagram.nodes
    )


def diagram_to_dot(params: Params, diagram: LoewyDiagram) -> str:
    """Render a Loewy diagram as DOT, rank-grouped by layer."""
    lines = ["digraph loewy {", "  rankdir=TB;"]
    for layer in ("top", "middle", "socle"):
        ids = [n.id for n in diagram.nodes if n.layer == layer]
        if ids:
            lines.append("  { rank=same; " + "; ".join(f'"{i}"' for i in ids) + "; }")
    for node in diagram.nodes:
        h = conformal_weight(params, node.label)
        hs = str(h.numerator) if h.denominator == 1 else f"{h.numerator}/{h.denominator}"
        lines.append(f'  "{node.id}" [label="L_{{{node.label.r},{node.label.s}}} (h={hs})"];')
    for src, dst in diagram.edges:
        lines.append(f'  "{src}" -> "{dst}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
