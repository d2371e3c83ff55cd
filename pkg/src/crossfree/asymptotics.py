"""Growth constants from the algebraic generating-function relations.

Each counting family satisfies a polynomial relation F(z, W(z)) = 0 with
F cubic in w.  The exponential growth of the coefficients is 1/r where
(r, s) is the dominant branch point, i.e. the solution of

    F(z, w) = 0,   F_w(z, w) = 0

with smallest positive z.  Following the classical transfer-theorem recipe,
:func:`bender_growth` locates r deterministically as the smallest positive
real root of the discriminant of F with respect to w, recovers s as the
repeated root of the cubic at z = r, and polishes (r, s) with a damped
two-dimensional Newton iteration.  The aperiodicity/analyticity side
conditions of the transfer theorem are reported as an assumption, not
verified.

The module also provides the exact series-consistency residual linking each
relation back to its dynamic-programming table, empirical ratio estimates,
and the binary-entropy exponent maximizer used for the double-chain lower
bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .recurrences import CountTable

RESIDUAL_TARGET = 1e-12
_GRID_SAMPLES = 10_000
_NEWTON_MAX_STEPS = 200


class BranchPointError(ArithmeticError):
    """No dominant branch point found, or Newton refinement failed."""


@dataclass(frozen=True)
class AlgebraicRelation:
    """A bivariate integer polynomial F(z, w), stored sparsely.

    ``coefficients`` maps (z_degree, w_degree) to an integer coefficient.
    """

    name: str
    coefficients: Mapping[tuple[int, int], int]

    def w_degree(self) -> int:
        return max(wd for (_, wd) in self.coefficients)

    def w_polys(self) -> list[list[int]]:
        """Dense z-polynomials per w-degree: result[j] is the coefficient of w^j."""
        polys: list[list[int]] = [[] for _ in range(self.w_degree() + 1)]
        for (zd, wd), c in self.coefficients.items():
            poly = polys[wd]
            while len(poly) <= zd:
                poly.append(0)
            poly[zd] += c
        return polys

    def eval(self, z: float, w: float) -> float:
        return sum(c * z**zd * w**wd for (zd, wd), c in self.coefficients.items())

    def eval_dw(self, z: float, w: float) -> float:
        return sum(
            c * wd * z**zd * w ** (wd - 1)
            for (zd, wd), c in self.coefficients.items()
            if wd >= 1
        )

    def eval_dz(self, z: float, w: float) -> float:
        return sum(
            c * zd * z ** (zd - 1) * w**wd
            for (zd, wd), c in self.coefficients.items()
            if zd >= 1
        )

    def eval_dzw(self, z: float, w: float) -> float:
        return sum(
            c * zd * wd * z ** (zd - 1) * w ** (wd - 1)
            for (zd, wd), c in self.coefficients.items()
            if zd >= 1 and wd >= 1
        )

    def eval_dww(self, z: float, w: float) -> float:
        return sum(
            c * wd * (wd - 1) * z**zd * w ** (wd - 2)
            for (zd, wd), c in self.coefficients.items()
            if wd >= 2
        )

    @classmethod
    def from_coefficient_list(
        cls, rows: Sequence[Sequence[int]], name: str = "user"
    ) -> "AlgebraicRelation":
        """Build from [[z_degree, w_degree, coefficient], ...]."""
        coeffs: dict[tuple[int, int], int] = {}
        for row in rows:
            if len(row) != 3:
                raise ValueError(f"coefficient row {row!r} is not [zdeg, wdeg, coef]")
            zd, wd, c = row
            coeffs[(int(zd), int(wd))] = coeffs.get((int(zd), int(wd)), 0) + int(c)
        return cls(name, coeffs)


EQ8 = AlgebraicRelation(
    "eq8",
    {
        (3, 3): 3, (2, 3): -4,
        (2, 2): 1, (1, 2): 4,
        (1, 1): -3, (0, 1): -1,
        (0, 0): 1,
    },
)

EQ15 = AlgebraicRelation(
    "eq15",
    {
        (3, 3): 1, (2, 3): 4,
        (2, 2): -5, (1, 2): -4,
        (1, 1): 4, (0, 1): 1,
        (0, 0): -1,
    },
)

EQ22 = AlgebraicRelation(
    "eq22",
    {
        (3, 3): 1, (2, 3): -1,
        (3, 2): 2, (2, 2): -3, (1, 2): 2,
        (1, 1): 1, (0, 1): -1,
        (2, 0): 1, (1, 0): -2, (0, 0): 1,
    },
)

RELATIONS = {"eq8": EQ8, "eq15": EQ15, "eq22": EQ22}


@dataclass(frozen=True)
class SingularityResult:
    relation: str
    r: float
    s: float
    growth: float
    residual_f: float
    residual_fw: float
    assumption: str = (
        "dominant algebraic branch point; aperiodicity and analyticity side "
        "conditions assumed, not verified"
    )

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "r": format(self.r, ".15g"),
            "s": format(self.s, ".15g"),
            "growth": format(self.growth, ".15g"),
            "residual_f": format(self.residual_f, ".3g"),
            "residual_fw": format(self.residual_fw, ".3g"),
            "assumes": self.assumption,
        }


# dense integer polynomial helpers (tiny degrees, exactness over speed)

def _pmul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _padd(*polys: list[int]) -> list[int]:
    out = [0] * max((len(p) for p in polys), default=0)
    for p in polys:
        for i, a in enumerate(p):
            out[i] += a
    return out


def _pscale(p: list[int], k: int) -> list[int]:
    return [k * a for a in p]

def _peval(p: list[int], x: float) -> float:
    acc = 0.0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def _discriminant_cubic(rel: AlgebraicRelation) -> list[int]:
    """Discriminant in w of F = a w^3 + b w^2 + c w + d, an exact z-polynomial."""
    polys = rel.w_polys()
    if rel.w_degree() != 3 or not any(polys[3]):
        raise ValueError(f"{rel.name}: relation must be cubic in w")
    d, c, b, a = polys[0], polys[1], polys[2], polys[3]
    return _padd(
        _pscale(_pmul(_pmul(a, b), _pmul(c, d)), 18),
        _pscale(_pmul(_pmul(b, b), _pmul(b, d)), -4),
        _pmul(_pmul(b, c), _pmul(b, c)),
        _pscale(_pmul(a, _pmul(c, _pmul(c, c))), -4),
        _pscale(_pmul(_pmul(a, a), _pmul(d, d)), -27),
    )


def bender_growth(rel: AlgebraicRelation) -> SingularityResult:
    """Dominant branch point (r, s) of a relation cubic in w, and 1/r.

    Discriminant-then-Newton: the smallest positive discriminant root is
    isolated by sign bisection on a fixed sampling grid, which pins the
    dominant branch deterministically; plain 2-D Newton alone is
    seed-sensitive and may land on a non-dominant root.
    """
    disc = _discriminant_cubic(rel)

    lo, hi = 1e-6, 1.0 - 1e-6
    step = (hi - lo) / (_GRID_SAMPLES - 1)
    prev_x, prev_v = lo, _peval(disc, lo)
    bracket = None
    for i in range(1, _GRID_SAMPLES):
        x = lo + i * step
        v = _peval(disc, x)
        if prev_v == 0.0:
            bracket = (prev_x, prev_x)
            break
        if v == 0.0 or (prev_v < 0) != (v < 0):
            bracket = (prev_x, x)
            break
        prev_x, prev_v = x, v
    if bracket is None:
        raise BranchPointError(
            f"{rel.name}: no dominant branch point - the w-discriminant has no "
            f"sign change on (0, 1)"
        )
    a, b = bracket
    for _ in range(200):
        mid = 0.5 * (a + b)
        if _peval(disc, mid) == 0.0:
            a = b = mid
            break
        if (_peval(disc, a) < 0) != (_peval(disc, mid) < 0):
            b = mid
        else:
            a = mid
    r = 0.5 * (a + b)

    # at z = r the cubic has a repeated root; it is a root of the quadratic F_w
    polys = rel.w_polys()
    qa = 3.0 * _peval(polys[3], r)
    qb = 2.0 * _peval(polys[2], r)
    qc = _peval(polys[1], r)
    disc_q = qb * qb - 4.0 * qa * qc
    disc_q = max(disc_q, 0.0)
    roots = [(-qb + math.sqrt(disc_q)) / (2.0 * qa), (-qb - math.sqrt(disc_q)) / (2.0 * qa)]
    s = min(roots, key=lambda w: abs(rel.eval(r, w)))

    # damped 2-D Newton on (F, F_w)
    def residual(z: float, w: float) -> float:
        return max(abs(rel.eval(z, w)), abs(rel.eval_dw(z, w)))

    res = residual(r, s)
    for _ in range(_NEWTON_MAX_STEPS):
        if res < RESIDUAL_TARGET * 1e-2:
            break
        f1 = rel.eval(r, s)
        f2 = rel.eval_dw(r, s)
        j11 = rel.eval_dz(r, s)
        j12 = rel.eval_dw(r, s)
        j21 = rel.eval_dzw(r, s)
        j22 = rel.eval_dww(r, s)
        det = j11 * j22 - j12 * j21
        if det == 0.0:
            raise BranchPointError(f"{rel.name}: singular Jacobian during refinement")
        dz = (f1 * j22 - f2 * j12) / det
        dw = (j11 * f2 - j21 * f1) / det
        t = 1.0
        while t > 1e-18:
            r2, s2 = r - t * dz, s - t * dw
            if residual(r2, s2) < res:
                r, s, res = r2, s2, residual(r2, s2)
                break
            t *= 0.5
        else:
            break
    res_f = abs(rel.eval(r, s))
    res_fw = abs(rel.eval_dw(r, s))
    if max(res_f, res_fw) >= RESIDUAL_TARGET:
        raise BranchPointError(
            f"{rel.name}: Newton refinement stalled at residuals "
            f"({res_f:.3g}, {res_fw:.3g})"
        )
    if not 0.0 < r < 1.0:
        raise BranchPointError(f"{rel.name}: branch point {r} escaped (0, 1)")
    return SingularityResult(rel.name, r, s, 1.0 / r, res_f, res_fw)


def series_residual(rel: AlgebraicRelation, table: CountTable | Sequence[int], order: int) -> int:
    """Largest |coefficient| of F(z, W(z)) through degree order-3, exact.

    W is the truncated power series built from the table.  The contract is
    residual == 0 when the table is the true series of the relation - an
    integer identity, so the arithmetic is exact and never floating point.
    """
    if order < 3:
        raise ValueError("order must be >= 3")
    if isinstance(table, CountTable):
        if table.n_max < order or table.offset != 0:
            raise ValueError(f"table too short: need indices 0..{order}")
        values = [table[i] for i in range(order + 1)]
    else:
        values = list(table[: order + 1])
        if len(values) < order + 1:
            raise ValueError(f"table too short: need indices 0..{order}")

    size = order + 1

    def tmul(p: list[int], q: list[int]) -> list[int]:
        out = [0] * size
        for i, a in enumerate(p):
            if a:
                for j, b in enumerate(q):
                    if i + j >= size:
                        break
                    out[i + j] += a * b
        return out

    w_pow: dict[int, list[int]] = {0: [1] + [0] * order, 1: values}
    for j in range(2, rel.w_degree() + 1):
        w_pow[j] = tmul(w_pow[j - 1], values)

    acc = [0] * size
    for (zd, wd), c in rel.coefficients.items():
        if zd >= size:
            continue
        for i, a in enumerate(w_pow[wd]):
            if zd + i >= size:
                break
            acc[zd + i] += c * a
    return max(abs(a) for a in acc[: order - 2])


@dataclass(frozen=True)
class GrowthEstimate:
    family: str
    n: int
    ratio: float
    aitken: float

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "ratio": format(self.ratio, ".15g"),
            "aitken": format(self.aitken, ".15g"),
        }


def ratio_growth(table: CountTable, n: int) -> GrowthEstimate:
    """Consecutive-term ratio at n plus the Aitken limit of the last three ratios."""
    if n < 2 or n > table.n_max:
        raise ValueError(f"need 2 <= n <= {table.n_max}, got {n}")
    def ratio(m: int) -> float:
        denom = table[m - 1]
        if denom == 0:
            raise ZeroDivisionError(f"{table.family}({m - 1}) = 0")
        return table[m] / denom

    r_n = ratio(n)
    if n < 4:
        return GrowthEstimate(table.family, n, r_n, r_n)
    r_1, r_2 = ratio(n - 2), ratio(n - 1)
    d2 = r_n - r_2
    d1 = r_2 - r_1
    if d2 == d1:
        aitken = r_n
    else:
        aitken = r_n - d2 * d2 / (d2 - d1)
    return GrowthEstimate(table.family, n, r_n, aitken)


@dataclass(frozen=True)
class AlphaResult:
    """Maximizer of the entropy-weighted growth objective.

    The objective, per point, is 2^H(alpha) * beta^(1-alpha) * gamma^(c*alpha)
    with H the binary entropy; it is maximized in natural-log form.
    """

    alpha_star: float
    growth: float
    beta: float
    gamma: float
    c: float

    def to_json(self) -> dict:
        return {
            "alpha_star": format(self.alpha_star, ".15g"),
            "growth": format(self.growth, ".15g"),
            "beta": format(self.beta, ".15g"),
            "gamma": format(self.gamma, ".15g"),
            "c": format(self.c, ".15g"),
        }


def binary_entropy(alpha: float) -> float:
    """H(alpha) in bits, with the 0 log 0 = 0 endpoint convention."""
    if alpha <= 0.0 or alpha >= 1.0:
        return 0.0
    return -alpha * math.log2(alpha) - (1.0 - alpha) * math.log2(1.0 - alpha)


_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
_INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def optimize_alpha(beta: float, gamma: float, c: float, tol: float = 1e-12) -> AlphaResult:
    """Golden-section maximization of ln2*H(a) + (1-a) ln beta + c*a ln gamma."""
    if not beta > 1.0:
        raise ValueError("beta must exceed 1")
    if gamma < 1.0:
        raise ValueError("gamma must be >= 1")
    if not 0.0 <= c <= 1.0:
        raise ValueError("c must lie in [0, 1]")
    ln_beta, ln_gamma = math.log(beta), math.log(gamma)

    def phi(alpha: float) -> float:
        return (
            math.log(2.0) * binary_entropy(alpha)
            + (1.0 - alpha) * ln_beta
            + c * alpha * ln_gamma
        )

    lo, hi = 0.0, 1.0
    x1 = lo + _INV_PHI_SQ * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = phi(x1), phi(x2)
    while hi - lo > tol:
        if f1 >= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = lo + _INV_PHI_SQ * (hi - lo)
            f1 = phi(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = phi(x2)
    alpha = 0.5 * (lo + hi)
    return AlphaResult(alpha, math.exp(phi(alpha)), beta, gamma, c)
