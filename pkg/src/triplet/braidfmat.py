"""Braiding scalars, balancing phases, and the hexagon-constrained F-matrix.

Two conventions coexist for the self-braiding eigenvalues on L_1 (x) L_1:
the tabulated values (e^{i*pi*pq/2}, -e^{i*pi*pq/2}) and direct evaluation
of the weight formula e^{i*pi*(h_{(k+2)p-1,1} - 2h_{(n+2)p-1,1})}.  They
differ by a global sign; both square to the balancing phases, and the
hexagon constraint is blind to the flip, so both are exposed and the
discrepancy is flagged rather than resolved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from .exactnum import ParamScalar, Phase, Rat, phase_from_weight
from .fusion import fuse_C
from .virasoro import Params, VirLabel, conformal_weight, sl2_lowest_weight

Scalar = Union[Rat, ParamScalar]


@dataclass(frozen=True)
class FMatrix:
    """The 2x2 change-of-bracketing matrix on the channels {0,2}."""

    f00: Scalar
    f02: Scalar
    f20: Scalar
    f22: Scalar

    def entries(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.f00, self.f02, self.f20, self.f22)

    def determinant(self) -> ParamScalar:
        a, b, c, d = (ParamScalar.coerce(x) for x in self.entries())
        return a * d - b * c

    def evaluate(self, t0: Rat) -> "FMatrix":
        def ev(x: Scalar) -> Rat:
            return x.eval(t0) if isinstance(x, ParamScalar) else Fraction(x)

        return FMatrix(*(ev(x) for x in self.entries()))


@dataclass(frozen=True)
class FSolution:
    """One invertible solution family of the hexagon constraint.

    Diagonal: epsilon * Id with epsilon = (-1)^{pq}.
    Parametrized: off-diagonal entries t and -3/(4t), diagonal -epsilon/2.
    """

    kind: Literal["Diagonal", "Parametrized"]
    epsilon: int
    matrix: FMatrix


def _epsilon(params: Params) -> int:
    return -1 if (params.p * params.q) % 2 else 1


def r_scalar_table(params: Params, n: int, k: int) -> Phase:
    """Tabulated self-braiding eigenvalues: only (n,k) = (1,0) and (1,2).

    R_1^0 = e^{i*pi*pq/2} and R_1^2 = -e^{i*pi*pq/2}.
    """
    if n != 1 or k not in (0, 2):
        raise ValueError(f"tabulated R-scalars cover n=1, k in {{0,2}} only, got ({n},{k})")
    base = Fraction(params.p * params.q, 2)
    return Phase(base if k == 0 else base + 1)


def r_scalar_formula(params: Params, n: int, k: int) -> Phase:
    """R_n^k = e^{i*pi*(h_{(k+2)p-1,1} - 2*h_{(n+2)p-1,1})} on a valid channel."""
    if n < 0 or k not in fuse_C(n, n):
        raise ValueError(f"k={k} is not a channel of L_{n} (x) L_{n}")
    p = params.p
    hk = conformal_weight(params, VirLabel((k + 2) * p - 1, 1))
    hn = conformal_weight(params, VirLabel((n + 2) * p - 1, 1))
    phase = Phase(hk - 2 * hn)
    assert (4 * params.p * params.q) % phase.exponent.denominator == 0
    return phase


def balancing_check(params: Params, n: int) -> dict[int, Phase]:
    """Channelwise squared braiding from balancing: e^{2*pi*i*(h_k - 2*h_n)}.

    Weights follow the sl2-type dictionary, so the unit channel k = 0
    contributes weight 0.
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    hn = sl2_lowest_weight(params, n)
    out: dict[int, Phase] = {}
    for k in fuse_C(n, n):
        hk = sl2_lowest_weight(params, k)
        out[k] = phase_from_weight(hk - 2 * hn, 2)
    return out


def hexagon_solutions(params: Params) -> list[FSolution]:
    """All invertible solutions of the hexagon constraint on F.

    Case analysis on F02.  With F02 = 0 the diagonal entries satisfy
    x^2 = eps*x, whose only nonzero root is eps, and the remaining
    off-diagonal equation then kills F20.  With F02 = t kept formal and
    nonzero, the 02-entry forces F00 + F22 = -eps, subtracting the
    diagonal equations forces F00 = F22, and the 00-entry determines F20.
    Every returned matrix is re-checked against the full constraint.
    """
    eps = _epsilon(params)
    diagonal_roots = [x for x in (Fraction(0), Fraction(eps)) if x != 0]
    assert diagonal_roots == [Fraction(eps)]
    f_diag = diagonal_roots[0]
    # F20*(F00 + F22) = -eps*F20 with F00 + F22 = 2*eps leaves only F20 = 0.
    assert 2 * f_diag != -eps
    diag = FSolution(
        kind="Diagonal",
        epsilon=eps,
        matrix=FMatrix(f_diag, Fraction(0), Fraction(0), f_diag),
    )
    t = ParamScalar.t()
    f00 = ParamScalar.const(Fraction(-eps, 2))  # F00 = F22 = -eps/2
    f20 = (f00 * eps - f00 * f00) / t  # eps*F00 = F00^2 + F02*F20
    param = FSolution(kind="Parametrized", epsilon=eps, matrix=FMatrix(f00, t, f20, f00))
    for sol in (diag, param):
        residual = hexagon_residual(params, sol.matrix)
        if any(not ParamScalar.coerce(x).is_zero() for x in residual.entries()):
            raise AssertionError(f"hexagon solution {sol.kind} fails the constraint")
        if sol.matrix.determinant().is_zero():
            raise AssertionError(f"hexagon solution {sol.kind} is not invertible")
    return [diag, param]


def hexagon_residual(params: Params, matrix: FMatrix) -> FMatrix:
    """(-1)^{pq} * [[F00,-F02],[-F20,F22]] - F^2 over the rational-function field."""
    eps = _epsilon(params)
    a, b, c, d = (ParamScalar.coerce(x) for x in matrix.entries())
    sq = (a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d)
    lhs = (a * eps, -b * eps, -c * eps, d * eps)
    return FMatrix(*(l - s for l, s in zip(lhs, sq)))


def hexagon_sign_matrix(r0: Phase, r2: Phase) -> tuple[tuple[Rat, Rat], tuple[Rat, Rat]]:
    """Left-hand-side signs of the scalar hexagon R_1^k F_{kl} R_1^l = (F^2)_{kl}.

    With the normalization R_{m1}^1 = 1 the constraint reads
    s_{kl} * F_{kl} = (F^2)_{kl} with s_{kl} = R_1^k * R_1^l, and the signs
    are unchanged when both scalars are negated simultaneously.
    """
    signs = {}
    for k, rk in ((0, r0), (2, r2)):
        for l, rl in ((0, r0), (2, r2)):
            signs[(k, l)] = (rk * rl).as_rat_sign()
    return ((signs[(0, 0)], signs[(0, 2)]), (signs[(2, 0)], signs[(2, 2)]))


def intrinsic_dimension(sol: FSolution, params: Params) -> Rat:
    """1/F00: the evaluation-coevaluation composite on the unit channel."""
    f00 = sol.matrix.f00
    value = f00.as_rat() if isinstance(f00, ParamScalar) else Fraction(f00)
    if value == 0:
        raise ValueError("F00 = 0: not an invertible hexagon solution")
    return 1 / value
