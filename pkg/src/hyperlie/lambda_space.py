"""Constructions on the curve parameter space.

For genus g the curve is Y^2 = f(X) with f monic of degree 2g+1 and no
X^{2g} term; the parameters l4, l6, ..., l{4g+2} carry their index as
weight.  This module builds f, the discriminant resultant R, the symmetric
matrix T of pairwise field actions, the tangent vector fields L0, L2, ...,
L{4g-2}, and (genus 3) the 10x6 structure matrix of their commutators.
"""

from __future__ import annotations

from fractions import Fraction

from .derivation import BracketRelation, Derivation
from .exactpoly import Poly, PolyMatrix, Ring, cast, divexact, resultant


def lambda_indices(genus: int) -> list[int]:
    return list(range(4, 4 * genus + 3, 2))


class CurveModel:
    """Parameter ring and curve polynomial data for one genus."""

    def __init__(self, genus: int):
        if genus < 1:
            raise ValueError("genus must be at least 1")
        self.genus = genus
        self.indices = lambda_indices(genus)
        self.ring = Ring([(f"l{s}", s) for s in self.indices])
        # X has weight 2, making f homogeneous of weight 4g+2.
        self.fring = Ring([("X", 2)] + [(f"l{s}", s) for s in self.indices])

    def lam(self, s: int, ring: Ring | None = None) -> Poly:
        """l_s as a polynomial; zero whenever s is outside the model's range."""
        ring = ring or self.ring
        if s in self.indices:
            return ring.var(f"l{s}")
        return ring.zero


def build_f(model: CurveModel) -> Poly:
    """The monic curve polynomial f(X) with no X^{2g} term."""
    g = model.genus
    ring = model.fring
    X = ring.var("X")
    f = X ** (2 * g + 1)
    for k, s in enumerate(model.indices):
        # l4 multiplies X^{2g-1}, l6 multiplies X^{2g-2}, ...
        f = f + model.lam(s, ring) * X ** (2 * g - 1 - k)
    return f


def discriminant_R(model: CurveModel, method: str = "bareiss") -> Poly:
    """Resultant of f and df/dX, eliminating X; cut out by the singular locus."""
    f = build_f(model)
    r = resultant(f, f.partial("X"), "X", method=method)
    return cast(r, model.ring)


def t_entry(model: CurveModel, k: int, m: int) -> Poly:
    """Entry T_{2k,2m} of the pairwise-action matrix (half-index form)."""
    if k > m:
        k, m = m, k
    g = model.genus
    p = 2 * (k + m) * model.lam(2 * k + 2 * m)
    for s in range(2, k):
        p = p + 2 * (k + m - 2 * s) * model.lam(2 * s) * model.lam(2 * (k + m - s))
    p = p - Fraction(2 * k * (2 * g - m + 1), 2 * g + 1) * model.lam(2 * k) * model.lam(
        2 * m
    )
    return p


def build_T(model: CurveModel) -> PolyMatrix:
    """The symmetric 2g x 2g matrix with entries T_{2k,2m}."""
    g = model.genus
    rows = [
        [t_entry(model, k, m) for m in range(1, 2 * g + 1)] for k in range(1, 2 * g + 1)
    ]
    return PolyMatrix(model.ring, rows)


def build_L(model: CurveModel, k: int) -> Derivation:
    """The weight-k parameter-space field, k even in 0..4g-2.

    Acts by L_k(l_{2s}) = T_{k+2, 2s-2}.
    """
    g = model.genus
    if k % 2 != 0 or not 0 <= k <= 4 * g - 2:
        raise ValueError(f"field index {k} out of range for genus {g}")
    action = {}
    for s in range(2, 2 * g + 2):
        action[f"l{2 * s}"] = t_entry(model, (k + 2) // 2, s - 1)
    return Derivation(f"L{k}", model.ring, action, weight=k)


def all_L(model: CurveModel) -> dict[int, Derivation]:
    return {k: build_L(model, k) for k in range(0, 4 * model.genus - 1, 2)}


def detT_R_constant(model: CurveModel, det_T: Poly, R: Poly):
    """The constant c with det T = c * R; raises if the quotient is not constant."""
    q = divexact(det_T, R)
    return q.constant_value()


def tangency_multipliers(model: CurveModel, fields, det_T: Poly) -> list[Poly]:
    """Exact multipliers m_k with L_k(det T) = m_k * det T, in field order."""
    out = []
    for k in sorted(fields):
        out.append(divexact(fields[k].apply(det_T), det_T))
    return out


# -- genus-3 commutator structure matrix -------------------------------------

# Row order of the 10 bracket pairs [L_{2i}, L_{2j}], i < j.
M_PAIRS = [
    (2, 4),
    (2, 6),
    (2, 8),
    (2, 10),
    (4, 6),
    (4, 8),
    (4, 10),
    (6, 8),
    (6, 10),
    (8, 10),
]

# Structure coefficients over (L0, L2, L4, L6, L8, L10), to be scaled by 2/7.
_M_RAW = [
    ["8*l6", "-8*l4", "0", "7", "0", "0"],
    ["6*l8", "0", "-6*l4", "0", "14", "0"],
    ["4*l10", "0", "0", "-4*l4", "0", "21"],
    ["2*l12", "0", "0", "0", "-2*l4", "0"],
    ["-7*l10", "9*l8", "-9*l6", "7*l4", "0", "7"],
    ["-14*l12", "6*l10", "0", "-6*l6", "14*l4", "0"],
    ["-21*l14", "3*l12", "0", "0", "-3*l6", "21*l4"],
    ["-7*l14", "-7*l12", "8*l10", "-8*l8", "7*l6", "7*l4"],
    ["0", "-14*l14", "4*l12", "0", "-4*l8", "14*l6"],
    ["0", "0", "-7*l14", "5*l12", "-5*l10", "7*l8"],
]


def build_M(model: CurveModel) -> PolyMatrix:
    """The 10x6 matrix M with bracket rows [L_{2i}, L_{2j}] = M . (L0..L10)."""
    if model.genus != 3:
        raise ValueError("the structure matrix is a genus-3 object")
    scale = Fraction(2, 7)
    rows = [
        [model.ring.parse(entry) * scale for entry in row] for row in _M_RAW
    ]
    return PolyMatrix(model.ring, rows)


def m_relation_rows(model: CurveModel, fields) -> list[BracketRelation]:
    """The ten claimed identities [L_{2i}, L_{2j}] = M-row . (L0..L10)."""
    M = build_M(model)
    ordered = [fields[k] for k in sorted(fields)]
    rows = []
    for r, (i, j) in enumerate(M_PAIRS):
        expansion = [(M.entry(r, c), ordered[c]) for c in range(6)]
        rows.append(
            BracketRelation(fields[i], fields[j], expansion, label=f"[L{i},L{j}]")
        )
    return rows
