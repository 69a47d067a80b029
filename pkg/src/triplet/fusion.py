"""Fusion products: the L_{np-1,1} family, sl2-type fusion, and the CG oracle.

``fuse_C`` implements the closed-form channel rule; ``cg_oracle`` reaches
the same multiset independently by multiplying Weyl characters and peeling
irreducible characters from the top degree down.  The two stay separate so
each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .kacmod import UnsupportedObjectError
from .virasoro import (
    KAC_DUAL_K11,
    ObjLabel,
    Params,
    canonical_obj,
    kac_dual_k11,
    kac_k,
    obj_to_sl2_index,
    simple_l,
    sl2_index_to_obj,
)


@dataclass(frozen=True)
class DecompEntry:
    mult: int
    obj: ObjLabel

    def to_json(self) -> dict:
        return {"mult": self.mult, "obj": self.obj.to_json()}


@dataclass(frozen=True)
class DecompList:
    """A formal non-negative-integer combination of module labels."""

    entries: tuple[DecompEntry, ...]

    def __post_init__(self) -> None:
        if any(e.mult < 1 for e in self.entries):
            raise ValueError("multiplicities must be >= 1")
        if len({e.obj for e in self.entries}) != len(self.entries):
            raise ValueError("entries must be pairwise distinct")

    def is_zero(self) -> bool:
        return not self.entries

    def to_json(self) -> dict:
        return {"entries": [e.to_json() for e in self.entries]}

    def __str__(self) -> str:
        if not self.entries:
            return "0"
        return " + ".join(
            str(e.obj) if e.mult == 1 else f"{e.mult}*{e.obj}" for e in self.entries
        )


def decomp_from_pairs(pairs) -> DecompList:
    """Collect (mult, obj) pairs into a DecompList, merging duplicates."""
    acc: dict[ObjLabel, int] = {}
    order: list[ObjLabel] = []
    for mult, obj in pairs:
        if obj not in acc:
            acc[obj] = 0
            order.append(obj)
        acc[obj] += mult
    return DecompList(tuple(DecompEntry(acc[o], o) for o in order if acc[o]))


@dataclass(frozen=True)
class CharPoly:
    """A symmetric Laurent polynomial with non-negative integer coefficients."""

    coeffs: tuple[tuple[int, int], ...]  # sorted (degree, coefficient) pairs

    @staticmethod
    def from_dict(d: dict[int, int]) -> "CharPoly":
        items = tuple(sorted((k, v) for k, v in d.items() if v))
        return CharPoly(items)

    @staticmethod
    def irrep(n: int) -> "CharPoly":
        """Character of the (n+1)-dimensional module: x^n + x^{n-2} + ... + x^{-n}."""
        return CharPoly.from_dict({d: 1 for d in range(-n, n + 1, 2)})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        out: dict[int, int] = {}
        for da, ca in self.coeffs:
            for db, cb in other.coeffs:
                out[da + db] = out.get(da + db, 0) + ca * cb
        return CharPoly.from_dict(out)

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get(-deg, 0) == c for deg, c in d.items())

    def top_degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero character has no top degree")
        return self.coeffs[-1][0]

    def dimension(self) -> int:
        return sum(c for _, c in self.coeffs)


def fuse_C(m: int, n: int) -> list[int]:
    """Channels of L_m (x) L_n: {k : |m-n| <= k <= m+n, k = m+n mod 2}."""
    if m < 0 or n < 0:
        raise ValueError(f"indices must be >= 0, got ({m},{n})")
    return list(range(abs(m - n), m + n + 1, 2))


def cg_oracle(m: int, n: int) -> list[int]:
    """Clebsch-Gordan channels by character multiplication and greedy peeling.

    Valid because characters of distinct irreducibles have distinct top
    degrees and all multiplicities are non-negative.
    """
    if m < 0 or n < 0:
        raise ValueError(f"indices must be >= 0, got ({m},{n})")
    product = (CharPoly.irrep(m) * CharPoly.irrep(n)).as_dict()
    peeled: list[int] = []
    while product:
        k = max(product)
        if k < 0 or product[k] <= 0:
            raise AssertionError(f"character peeling failed at degree {k}: {product}")
        for _ in range(product[k]):
            peeled.append(k)
        mult = product[k]
        for deg in range(-k, k + 1, 2):
            c = product.get(deg, 0) - mult
            if c:
                product[deg] = c
            else:
                product.pop(deg, None)
    return sorted(peeled)


def fuse_L_family(params: Params, m: int, n: int) -> DecompList:
    """L_{mp-1,1} (x) L_{np-1,1} for m,n >= 2.

    For m != n the result is the direct sum of L_{ip-1,1} with i running
    from |m-n|+2 to m+n-2 in steps of 2; for m = n the unit K'_{1,1}
    appears together with L_{2jp-1,1} for 2 <= j <= n-1.
    """
    if m < 2 or n < 2:
        raise ValueError(f"family fusion needs m,n >= 2, got ({m},{n})")
    p = params.p
    if m != n:
        return decomp_from_pairs(
            (1, simple_l(i * p - 1, 1)) for i in range(abs(m - n) + 2, m + n - 1, 2)
        )
    pairs = [(1, kac_dual_k11())]
    pairs += [(1, simple_l(2 * j * p - 1, 1)) for j in range(2, n)]
    return decomp_from_pairs(pairs)


L11 = simple_l(1, 1)


def _basis_product(params: Params, a: ObjLabel, b: ObjLabel) -> DecompList:
    a = canonical_obj(params, a)
    b = canonical_obj(params, b)
    if a == L11 or b == L11:
        if a == b:
            raise UnsupportedObjectError(
                "L_{1,1} (x) L_{1,1} is outside the computed fusion families"
            )
        return DecompList(())
    ia = obj_to_sl2_index(params, a)
    ib = obj_to_sl2_index(params, b)
    socle = simple_l(2 * params.p - 1, 1)
    if a == socle or b == socle:
        # L_{2p-1,1} is not an sl2-type object, but its products with the
        # supported labels are known: it squares to K'_{1,1} and fixes
        # every sl2-type object.
        if a == b:
            return decomp_from_pairs([(1, kac_dual_k11())])
        other = ib if a == socle else ia
        if other is None:
            raise UnsupportedObjectError(f"unsupported fusion entry {a} (x) {b}")
        return decomp_from_pairs([(1, sl2_index_to_obj(params, other))])
    if ia is None or ib is None:
        bad = a if ia is None else b
        raise UnsupportedObjectError(f"unsupported fusion entry {bad}")
    return decomp_from_pairs((1, sl2_index_to_obj(params, k)) for k in fuse_C(ia, ib))


def fusion_ring_product(params: Params, a: DecompList, b: DecompList) -> DecompList:
    """Bilinear extension of the sl2-type fusion rules.

    Entries may be K'_{1,1}, any L_{(n+2)p-1,1} with n >= 1, the socle
    label L_{2p-1,1}, or L_{1,1}; products against L_{1,1} vanish.
    """
    pairs = []
    for ea in a.entries:
        for eb in b.entries:
            prod = _basis_product(params, ea.obj, eb.obj)
            pairs.extend((ea.mult * eb.mult * e.mult, e.obj) for e in prod.entries)
    merged = decomp_from_pairs(pairs)
    # Stable presentation: unit first, then simple labels by index.
    def key(entry: DecompEntry):
        if entry.obj.kind == KAC_DUAL_K11:
            return (0, 0, 0)
        return (1, entry.obj.label.r, entry.obj.label.s)

    return DecompList(tuple(sorted(merged.entries, key=key)))


def fuse_Kr1_K1s(params: Params, r: int, s: int) -> ObjLabel:
    """K_{r,1} (x) K_{1,s) = K_{r,s} for all r,s >= 1."""
    if r < 1 or s < 1:
        raise ValueError(f"Kac labels need r,s >= 1, got ({r},{s})")
    return kac_k(r, s)
