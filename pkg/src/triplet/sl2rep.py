"""Explicit sl2 irreducibles over Q: forms, Clebsch-Gordan maps, witnesses.

The (n+1)-dimensional module uses the integral convention: F steps down
the weight ladder with coefficient 1 and E steps up with k(n-k+1), so all
matrices, forms, and projection/inclusion systems stay over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .fusion import cg_oracle


@dataclass(frozen=True)
class Irrep:
    """Highest weight n, with E, F, H acting on the basis v_0..v_n."""

    n: int
    e: tuple
    f: tuple
    h: tuple

    def matrices(self) -> dict[str, list]:
        return {"E": [list(r) for r in self.e], "F": [list(r) for r in self.f], "H": [list(r) for r in self.h]}


@dataclass(frozen=True)
class BilinForm:
    n: int
    matrix: tuple

    def pair(self, v: list, w: list) -> Fraction:
        bw = linalg.mat_vec([list(r) for r in self.matrix], w)
        return sum((vi * bi for vi, bi in zip(v, bw) if vi and bi), Fraction(0))


def _freeze(m: list) -> tuple:
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def build_irrep(n: int) -> Irrep:
    """The (n+1)-dimensional irreducible with E v_0 = 0 and F v_k = v_{k+1}."""
    if n < 0:
        raise ValueError(f"highest weight must be >= 0, got {n}")
    dim = n + 1
    e = linalg.zeros(dim, dim)
    f = linalg.zeros(dim, dim)
    h = linalg.zeros(dim, dim)
    for k in range(dim):
        h[k][k] = Fraction(n - 2 * k)
        if k + 1 < dim:
            f[k + 1][k] = Fraction(1)
        if k >= 1:
            e[k - 1][k] = Fraction(k * (n - k + 1))
    return Irrep(n=n, e=_freeze(e), f=_freeze(f), h=_freeze(h))


def bracket(a: list, b: list) -> list:
    return linalg.mat_sub(linalg.mat_mul(a, b), linalg.mat_mul(b, a))


def check_brackets(rep: Irrep) -> bool:
    """[H,E] = 2E, [H,F] = -2F, [E,F] = H, exactly."""
    e = [list(r) for r in rep.e]
    f = [list(r) for r in rep.f]
    h = [list(r) for r in rep.h]
    two_e = [[2 * x for x in row] for row in e]
    minus_two_f = [[-2 * x for x in row] for row in f]
    return (
        linalg.is_zero_matrix(linalg.mat_sub(bracket(h, e), two_e))
        and linalg.is_zero_matrix(linalg.mat_sub(bracket(h, f), minus_two_f))
        and linalg.is_zero_matrix(linalg.mat_sub(bracket(e, f), h))
    )


@lru_cache(maxsize=None)
def invariant_form(n: int) -> BilinForm:
    """The invariant bilinear form on the weight-n irreducible.

    Solves X^T B + B X = 0 for X in {E,F,H} as one linear system; the
    solution space must be one-dimensional.  Normalized so the pairing of
    the highest- and lowest-weight vectors is 1.
    """
    rep = build_irrep(n)
    dim = n + 1
    rows: list[list[Fraction]] = []
    for mat in (rep.e, rep.f, rep.h):
        x = [list(r) for r in mat]
        # (X^T B + B X)[i][j] = sum_k X[k][i] B[k][j] + B[i][k] X[k][j]
        for i in range(dim):
            for j in range(dim):
                row = [Fraction(0)] * (dim * dim)
                for k in range(dim):
                    if x[k][i]:
                        row[k * dim + j] += x[k][i]
                    if x[k][j]:
                        row[i * dim + k] += x[k][j]
                if any(row):
                    rows.append(row)
    # n = 0 imposes no constraints; keep the column count visible.
    basis = linalg.nullspace(rows or [[Fraction(0)] * (dim * dim)])
    if len(basis) != 1:
        raise AssertionError(
            f"invariant-form space of V_{n} has dimension {len(basis)}, expected 1"
        )
    flat = basis[0]
    b = [[flat[i * dim + j] for j in range(dim)] for i in range(dim)]
    top = b[0][dim - 1]
    if top == 0:
        raise AssertionError("invariant form does not pair highest against lowest")
    b = [[x / top for x in row] for row in b]
    _, pivots = linalg.rref(b)
    if len(pivots) != dim:
        raise AssertionError(f"invariant form on V_{n} is degenerate")
    return BilinForm(n=n, matrix=_freeze(b))


def _kron_sum(a: list, b: list) -> list:
    # a (x) I + I (x) b on the basis e_i (x) e_j -> i*dim_b + j
    da, db = len(a), len(b)
    out = linalg.zeros(da * db, da * db)
    for i in range(da):
        for j in range(db):
            row = out[i * db + j]
            for k in range(da):
                if a[i][k]:
                    row[k * db + j] += a[i][k]
            for k in range(db):
                if b[j][k]:
                    row[i * db + k] += b[j][k]
    return out


@lru_cache(maxsize=None)
def _cg_system(m: int, n: int) -> dict[int, tuple[tuple, tuple]]:
    """All (projection, inclusion) pairs for V_m (x) V_n, keyed by channel.

    Inclusions are built by running F down from the highest-weight vector
    of each channel; projections are the rows of the inverse of the
    assembled change-of-basis matrix, which enforces biorthogonality and
    completeness by construction.
    """
    rep_m = build_irrep(m)
    rep_n = build_irrep(n)
    dim = (m + 1) * (n + 1)
    e_t = _kron_sum([list(r) for r in rep_m.e], [list(r) for r in rep_n.e])
    f_t = _kron_sum([list(r) for r in rep_m.f], [list(r) for r in rep_n.f])
    channels = cg_oracle(m, n)

    def weight_indices(w: int) -> list[int]:
        out = []
        for a in range(m + 1):
            for b in range(n + 1):
                if (m - 2 * a) + (n - 2 * b) == w:
                    out.append(a * (n + 1) + b)
        return out

    columns: list[list[Fraction]] = []
    blocks: dict[int, tuple[int, int]] = {}
    for k in channels:
        idx = weight_indices(k)
        # Highest-weight vectors of weight k: nullspace of E restricted to
        # the weight-k coordinates.
        restricted = [[e_t[i][j] for j in idx] for i in range(dim)]
        basis = linalg.nullspace([row for row in restricted if any(row)] or [[Fraction(0)] * len(idx)])
        if len(basis) != 1:
            raise AssertionError(
                f"channel {k} of V_{m} (x) V_{n} has multiplicity {len(basis)}, expected 1"
            )
        vec = [Fraction(0)] * dim
        for pos, coeff in zip(idx, basis[0]):
            vec[pos] = coeff
        lead = next(x for x in vec if x)
        vec = [x / lead for x in vec]
        start = len(columns)
        columns.append(vec)
        for _ in range(k):
            vec = linalg.mat_vec(f_t, vec)
            columns.append(vec)
        blocks[k] = (start, start + k + 1)

    change = [list(row) for row in zip(*columns)]  # dim x dim, blocks as columns
    inverse = linalg.invert(change)
    out: dict[int, tuple[tuple, tuple]] = {}
    for k in channels:
        start, stop = blocks[k]
        incl = [[change[i][c] for c in range(start, stop)] for i in range(dim)]
        proj = [inverse[c] for c in range(start, stop)]
        out[k] = (_freeze(proj), _freeze(incl))
    return out


def cg_maps(m: int, n: int, k: int) -> tuple[list, list]:
    """(projection, inclusion) for the channel V_k inside V_m (x) V_n.

    Both matrices intertwine E, F, H, the projection is a left inverse of
    the inclusion, and over all channels the composites sum to the
    identity on V_m (x) V_n.
    """
    system = _cg_system(m, n)
    if k not in system:
        raise ValueError(f"k={k} is not a channel of V_{m} (x) V_{n}")
    proj, incl = system[k]
    return [list(r) for r in proj], [list(r) for r in incl]


def simplicity_witness(n: int, v: list) -> list:
    """Some v' in V_{2n} with (v',v) != 0, off the invariant form.

    Exists for every nonzero v because the form is nondegenerate; the
    returned vector is a standard basis vector.
    """
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("the zero vector has no pairing witness")
    form = invariant_form(2 * n)
    if len(v) != 2 * n + 1:
        raise ValueError(f"expected a vector in V_{2*n} of length {2*n+1}, got {len(v)}")
    image = linalg.mat_vec([list(r) for r in form.matrix], v)
    for i, x in enumerate(image):
        if x:
            witness = [Fraction(0)] * (2 * n + 1)
            witness[i] = Fraction(1)
            assert form.pair(witness, v) != 0
            return witness
    raise AssertionError("nondegenerate form produced a zero pairing image")
