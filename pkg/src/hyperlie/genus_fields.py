"""Lifted polynomial vector fields on generator space for genus 1, 2, 3.

The Euler field and the depth-1 field come from closed formulas; the other
odd fields are assembled from the w-expressions by iterated application of
the depth-1 field; the even fields are either explicit (genus 1 and 2) or
reconstructed by ladder completion from their seed values on (x2, y4, z6)
under the prescribed depth-1 commutators (genus 3).  Parameter symbols
l4, l6, ... appearing in displayed actions are always replaced by their
expressions in x, so every field is a genuine derivation of the x-ring.

The genus-2 catalog carries four weight-0 parameters; brackets and
projectability hold identically in them, and a linear solve pins the
normalised member of the family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import reference
from .derivation import BracketRelation, Derivation, combination, ladder_complete
from .exactpoly import Poly, PolyMap, PolyMatrix, Ring
from .lambda_space import CurveModel, build_T
from .param_map import PARAM_NAMES, JacobiMap, build_p, jacobi_map, x_name


def field_names(genus: int) -> list[str]:
    """Catalog field names in ascending weight order."""
    ks = sorted(list(range(0, 4 * genus - 1, 2)) + list(range(1, 2 * genus, 2)))
    return [f"L{k}" for k in ks]


def _xvar(ring: Ring, genus: int, i: int, j: int) -> Poly:
    """x_{i,j} as a variable, zero when the index is out of range."""
    if 1 <= i <= 3 and j % 2 == 1 and 1 <= j <= 2 * genus - 1:
        return ring.var(x_name(genus, i, j))
    return ring.zero


def build_euler(genus: int, ring: Ring) -> Derivation:
    """The Euler field: each coordinate times its weight."""
    action = {}
    for j in range(1, 2 * genus, 2):
        for i in (1, 2, 3):
            name = x_name(genus, i, j)
            action[name] = (i + j) * ring.var(name)
    return Derivation("L0", ring, action, weight=0)


def build_depth1(genus: int, ring: Ring) -> Derivation:
    """The weight-1 field, with the out-of-range guard x_{2,2g+1} = 0."""
    action = {}
    for j in range(1, 2 * genus, 2):
        action[x_name(genus, 1, j)] = _xvar(ring, genus, 2, j)
        action[x_name(genus, 2, j)] = _xvar(ring, genus, 3, j)
        action[x_name(genus, 3, j)] = 4 * (
            2 * _xvar(ring, genus, 1, 1) * _xvar(ring, genus, 2, j)
            + _xvar(ring, genus, 2, 1) * _xvar(ring, genus, 1, j)
            + _xvar(ring, genus, 2, j + 2)
        )
    return Derivation("L1", ring, action, weight=1)


def build_odd(genus: int, s: int, ring: Ring, w_exprs, l1: Derivation) -> Derivation:
    """The weight-s odd field (s in 3..2g-1), from the w-expressions.

    Acts on the depth-1 triple by x2 -> x_{2,s}, x3 -> x_{3,s},
    x4 -> L1(x_{3,s}); on the j-th triple (j >= 3) by iterated L1 application
    to the expression of w_{s,j}.
    """
    if s % 2 == 0 or not 3 <= s <= 2 * genus - 1:
        raise ValueError(f"odd field index {s} out of range for genus {genus}")
    action = {
        x_name(genus, 1, 1): _xvar(ring, genus, 2, s),
        x_name(genus, 2, 1): _xvar(ring, genus, 3, s),
        x_name(genus, 3, 1): l1.on(x_name(genus, 3, s)),
    }
    for j in range(3, 2 * genus, 2):
        w = w_exprs[(min(s, j), max(s, j))]
        first = l1.apply(w)
        second = l1.apply(first)
        action[x_name(genus, 1, j)] = first
        action[x_name(genus, 2, j)] = second
        action[x_name(genus, 3, j)] = l1.apply(second)
    return Derivation(f"L{s}", ring, action, weight=s)


def depth1_commutator_coeffs(genus: int, ring: Ring, k: int) -> list[Poly]:
    """Coefficients of [L1, L_{2k'}] over the odd fields (L1, L3, ...).

    For the even field of weight 2k' = k the coefficient on the odd field of
    weight 2m+1 is x_{1, 2(k/2 - m) - 1} with the usual guard, except that
    the diagonal position m = k/2 carries -1.
    """
    half = k // 2
    out = []
    for m in range(genus):
        if m == half:
            out.append(ring.const(-1))
        else:
            out.append(_xvar(ring, genus, 1, 2 * (half - m) - 1))
    return out


@dataclass
class FieldCatalog:
    """All constructed fields for one genus, plus the shared context."""

    genus: int
    ring: Ring
    fields: dict[str, Derivation]
    jm: JacobiMap
    pmap: PolyMap
    aux: dict[str, Poly]
    params_mode: str
    param_values: tuple = ()  # explicit (name, value) pairs when specialised

    @property
    def names(self) -> list[str]:
        return field_names(self.genus)

    def field(self, name: str) -> Derivation:
        return self.fields[name]

    def odd_fields(self) -> list[Derivation]:
        return [self.fields[f"L{s}"] for s in range(1, 2 * self.genus, 2)]

    def com1_rhs(self, k: int) -> Derivation:
        coeffs = depth1_commutator_coeffs(self.genus, self.ring, k)
        return combination(
            list(zip(coeffs, self.odd_fields())), self.ring, name=f"rhs{k}"
        )


# -- coefficient environment ---------------------------------------------------


def _aux_weight(name: str) -> int:
    return int(name[1:])


def coeff_ring(cat: FieldCatalog) -> Ring:
    """Ring for parsing displayed coefficients: x-vars plus l and aux tokens."""
    vs = [(v.name, v.weight) for v in cat.ring.vars]
    vs += [(f"l{s}", s) for s in sorted(cat.jm.lambda_exprs)]
    vs += [(name, _aux_weight(name)) for name in sorted(cat.aux)]
    return Ring(vs)


def coeff_env(cat: FieldCatalog) -> dict[str, Poly]:
    env = {f"l{s}": p for s, p in cat.jm.lambda_exprs.items()}
    env.update(cat.aux)
    return env


def parse_coeff(cat: FieldCatalog, text: str, _cache={}) -> Poly:
    """Parse a displayed coefficient, resolving l- and aux-symbols into x.

    For a zero-parameter catalog the parameter symbols are zeroed as well,
    so the parsed coefficients match the specialised fields.
    """
    key = (cat.genus, cat.params_mode, cat.param_values, text)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    raw = coeff_ring(cat).parse(text)
    out = raw.substitute(coeff_env(cat), target=cat.ring)
    if cat.params_mode == "zero":
        out = out.substitute({p: 0 for p in PARAM_NAMES}, target=cat.ring)
    elif cat.params_mode == "explicit":
        out = out.substitute(dict(cat.param_values), target=cat.ring)
    _cache[key] = out
    return out


# -- auxiliary polynomials -----------------------------------------------------


def build_aux(genus: int, ring: Ring, w_exprs, fields) -> dict[str, Poly]:
    """Auxiliary polynomials from their defining field applications.

    Every alternate definition listed for a symbol must agree; disagreement
    signals a construction bug and raises immediately.
    """
    if genus == 1:
        return {}
    aux: dict[str, Poly] = {}
    aux["w6"] = w_exprs[(3, 3)]
    if genus == 3:
        aux["w8"] = w_exprs[(3, 5)]
        aux["w10"] = w_exprs[(5, 5)]

    def arg(token: str) -> Poly:
        return aux[token] if token in aux else ring.var(token)

    for name, fname, argname in reference.AUX_DEFS[genus]:
        val = fields[fname].apply(arg(argname))
        if name in aux:
            if aux[name] != val:
                raise AssertionError(
                    f"alternate definitions of {name} disagree: "
                    f"{fname}({argname}) differs"
                )
        else:
            aux[name] = val
    return aux


# -- catalog construction ------------------------------------------------------


def _build_genus12_evens(cat_ring, genus, jm, aux, l_fields):
    """Explicit even fields for genus 1 and 2, from their displayed actions."""
    env = {f"l{s}": p for s, p in jm.lambda_exprs.items()}
    env.update(aux)
    vs = [(v.name, v.weight) for v in cat_ring.vars]
    vs += [(f"l{s}", s) for s in sorted(jm.lambda_exprs)]
    vs += [(name, _aux_weight(name)) for name in sorted(aux)]
    pring = Ring(vs)
    evens = {}
    for name, actions in reference.FIELD_ACTIONS[genus].items():
        if name in ("L1", "L3", "L5"):
            continue
        k = int(name[1:])
        action = {
            v: pring.parse(text).substitute(env, target=cat_ring)
            for v, text in actions.items()
        }
        evens[name] = Derivation(name, cat_ring, action, weight=k)
    return evens


def _ladder_steps(genus: int) -> list[tuple[str, str]]:
    steps = []
    for j in range(1, 2 * genus, 2):
        steps.append((x_name(genus, 1, j), x_name(genus, 2, j)))
        steps.append((x_name(genus, 2, j), x_name(genus, 3, j)))
    return steps


def build_even_by_ladder(cat: FieldCatalog, k: int, seeds: dict) -> Derivation:
    """Even field of weight k from seed values under the depth-1 commutator."""
    return ladder_complete(
        f"L{k}",
        seeds,
        cat.fields["L1"],
        cat.com1_rhs(k),
        _ladder_steps(cat.genus),
        weight=k,
    )


@lru_cache(maxsize=None)
def _catalog_cached(genus: int, params_mode: str) -> FieldCatalog:
    jm = jacobi_map(genus)
    ring = jm.ring
    pmap = build_p(jm)
    fields: dict[str, Derivation] = {}
    fields["L0"] = build_euler(genus, ring)
    fields["L1"] = build_depth1(genus, ring)
    for s in range(3, 2 * genus, 2):
        fields[f"L{s}"] = build_odd(genus, s, ring, jm.w_exprs, fields["L1"])
    aux = build_aux(genus, ring, jm.w_exprs, fields)

    cat = FieldCatalog(genus, ring, fields, jm, pmap, aux, params_mode)

    if genus in (1, 2):
        evens = _build_genus12_evens(ring, genus, jm, aux, fields)
        if genus == 2:
            hatted = {}
            for name, extras in reference.HATTED_G2.items():
                d = evens[name]
                for coeff_text, fname in extras:
                    d = d + fields[fname].scale(parse_coeff(cat, coeff_text))
                hatted[name] = d.rename(name, weight=int(name[1:]))
            evens = hatted
        fields.update(evens)
    else:
        for name, seed_texts in reference.EVEN_SEEDS_G3.items():
            k = int(name[1:])
            seeds = {v: parse_coeff(cat, text) for v, text in seed_texts.items()}
            fields[name] = build_even_by_ladder(cat, k, seeds)

    if genus == 2 and params_mode == "zero":
        zeros = {p: 0 for p in PARAM_NAMES}
        fields = {
            n: Derivation(
                n,
                ring,
                {v: q.substitute(zeros, target=ring) for v, q in d.action.items()},
                weight=d.weight,
            )
            for n, d in fields.items()
        }
        cat = FieldCatalog(genus, ring, fields, jm, pmap, aux, params_mode)
    return cat


def catalog(genus: int, params: str = "symbolic") -> FieldCatalog:
    """Build (and cache) the full field catalog for one genus.

    ``params`` is only meaningful for genus 2: "symbolic" keeps the four
    structure constants as weight-0 variables, "zero" sets them to 0.
    """
    if genus not in (1, 2, 3):
        raise ValueError("catalogs exist for genus 1, 2, 3")
    if genus != 2:
        params = "none"
    return _catalog_cached(genus, params)


def specialize_params(cat: FieldCatalog, values: dict) -> FieldCatalog:
    """Substitute explicit rational values for the genus-2 parameters."""
    assignment = {p: values.get(p, 0) for p in PARAM_NAMES}
    fields = {
        n: Derivation(
            n,
            cat.ring,
            {
                v: q.substitute(assignment, target=cat.ring)
                for v, q in d.action.items()
            },
            weight=d.weight,
        )
        for n, d in cat.fields.items()
    }
    return FieldCatalog(
        cat.genus, cat.ring, fields, cat.jm, cat.pmap, cat.aux, "explicit",
        tuple(sorted((p, Fraction(assignment[p])) for p in PARAM_NAMES)),
    )


# -- bracket tables -------------------------------------------------------------


def euler_relations(cat: FieldCatalog) -> list[BracketRelation]:
    """[L0, Lk] = k Lk for every catalog member."""
    rows = []
    for name in cat.names:
        if name == "L0":
            continue
        k = int(name[1:])
        rows.append(
            BracketRelation(
                cat.fields["L0"],
                cat.fields[name],
                [(cat.ring.const(k), cat.fields[name])],
                label=f"[L0,{name}]",
            )
        )
    return rows


def table_relations(cat: FieldCatalog) -> list[BracketRelation]:
    """Every displayed commutator identity for the catalog's genus."""
    rows = []
    for left, right, coeffs in reference.BRACKET_TABLE[cat.genus]:
        expansion = [
            (parse_coeff(cat, text), cat.fields[fname])
            for fname, text in sorted(coeffs.items())
        ]
        rows.append(
            BracketRelation(
                cat.fields[left], cat.fields[right], expansion,
                label=f"[{left},{right}]",
            )
        )
    return rows


def resolved_table(cat: FieldCatalog) -> dict[tuple[str, str], dict[str, Poly]]:
    """The displayed table with all coefficients resolved into x-polynomials."""
    out = {}
    for left, right, coeffs in reference.BRACKET_TABLE[cat.genus]:
        out[(left, right)] = {
            fname: parse_coeff(cat, text) for fname, text in coeffs.items()
        }
    return out


# -- action matrix and determinant factor ---------------------------------------


def build_Tcal(cat: FieldCatalog) -> PolyMatrix:
    """The 3g x 3g matrix of field actions.

    Rows are the catalog fields in ascending weight order; columns are the
    generator coordinates in ring order.  This row order reproduces the
    stated determinant factors 4, -16, -64.
    """
    cols = [v.name for v in cat.ring.vars if v.name not in PARAM_NAMES]
    rows = [
        [cat.fields[name].on(c) for c in cols] for name in cat.names
    ]
    return PolyMatrix(cat.ring, rows)


def pullback_T(cat: FieldCatalog) -> PolyMatrix:
    """The parameter-space matrix T with the map substituted entry-wise."""
    model = CurveModel(cat.genus)
    T = build_T(model)
    return T.map(lambda p: cat.pmap.pullback(p))


# -- genus-2 normalization -------------------------------------------------------


class NormalizationError(ValueError):
    pass


def _solve_unique_linear(rows: list[list[Fraction]], n: int) -> list[Fraction]:
    """Solve an overdetermined exact linear system with a unique solution.

    Rows are [a_1 .. a_n | b] encoding a.x = b.  Raises NormalizationError if
    the system is inconsistent or underdetermined.
    """
    mat = [list(map(Fraction, r)) for r in rows]
    pivots = []
    row_at = 0
    for col in range(n):
        piv = None
        for r in range(row_at, len(mat)):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        mat[row_at], mat[piv] = mat[piv], mat[row_at]
        pr = mat[row_at]
        inv = 1 / pr[col]
        mat[row_at] = [v * inv for v in pr]
        for r in range(len(mat)):
            if r != row_at and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [v - f * w for v, w in zip(mat[r], mat[row_at])]
        pivots.append(col)
        row_at += 1
    for r in range(row_at, len(mat)):
        if mat[r][n] != 0:
            raise NormalizationError("inconsistent normalization conditions")
    if len(pivots) != n:
        raise NormalizationError("normalization solution is not unique")
    sol = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        sol[col] = mat[r][n]
    return sol


def solve_genus2_normalization(cat: FieldCatalog | None = None) -> dict[str, Fraction]:
    """Find the parameter values forcing the depth-1 commutators into the
    prescribed lower-triangular form; the solution is unique."""
    if cat is None:
        cat = catalog(2, params="symbolic")
    if cat.genus != 2:
        raise ValueError("normalization is a genus-2 computation")
    ring = cat.ring
    pidx = [ring.index(p) for p in PARAM_NAMES]
    rows = []
    for left, right, coeffs in reference.G2_NORMALIZATION:
        target = combination(
            [(parse_coeff(cat, text), cat.fields[f]) for f, text in coeffs.items()],
            ring,
        )
        residual = cat.fields[left].bracket(cat.fields[right]) - target
        for vname, poly in residual.action.items():
            equations: dict[tuple, list[Fraction]] = {}
            for m, c in poly.terms.items():
                pexp = [m[i] for i in pidx]
                deg = sum(pexp)
                base = list(m)
                for i in pidx:
                    base[i] = 0
                base = tuple(base)
                row = equations.setdefault(
                    base, [Fraction(0)] * (len(PARAM_NAMES) + 1)
                )
                if deg == 0:
                    row[-1] -= c  # move constant to the right-hand side
                elif deg == 1:
                    which = next(i for i, e in enumerate(pexp) if e)
                    row[which] += c
                else:
                    raise NormalizationError(
                        "normalization residual is nonlinear in the parameters"
                    )
            rows.extend(equations.values())
    sol = _solve_unique_linear(rows, len(PARAM_NAMES))
    return dict(zip(PARAM_NAMES, sol))
