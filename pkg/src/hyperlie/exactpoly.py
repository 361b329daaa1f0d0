"""Sparse multivariate polynomials over exact rationals, with graded variables.

Every variable carries a non-negative integer weight; a monomial's weight is
the weight-sum of its variables.  Coefficients are exact rationals, stored as
``int`` when integral and :class:`fractions.Fraction` otherwise, so identity
checks are structural equality with zero tolerance.

A ``Poly`` maps exponent tuples (one slot per ring variable) to coefficients.
The zero polynomial has no terms.  All values are immutable after
construction; operations never mutate their arguments.

Also provided: polynomial matrices with a fraction-free Bareiss determinant
and a division-free minor-expansion determinant, exact division, and the
Sylvester-matrix resultant.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

class RingMismatchError(ValueError):
    """Raised when an operation mixes polynomials from different rings."""


def _coeff(value) -> "int | Fraction":
    """Coerce to an exact rational, normalising integral Fractions to int."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"coefficient must be int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True)
class GradedVar:
    """A named variable with a non-negative integer weight."""

    name: str
    weight: int


class Ring:
    """An ordered collection of graded variables; the context for all polys."""

    __slots__ = ("vars", "names", "weights", "_index", "_zero_exps")

    def __init__(self, variables: Iterable):
        vs = []
        for v in variables:
            if isinstance(v, GradedVar):
                vs.append(v)
            else:
                name, weight = v
                vs.append(GradedVar(str(name), int(weight)))
        names = tuple(v.name for v in vs)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names in ring")
        for v in vs:
            if v.weight < 0:
                raise ValueError(f"negative weight for {v.name}")
        self.vars = tuple(vs)
        self.names = names
        self.weights = tuple(v.weight for v in vs)
        self._index = {n: i for i, n in enumerate(names)}
        self._zero_exps = (0,) * len(vs)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.vars == other.vars

    def __hash__(self):
        return hash(self.vars)

    def __repr__(self):
        return f"Ring({', '.join(f'{v.name}:{v.weight}' for v in self.vars)})"

    def index(self, var) -> int:
        name = var.name if isinstance(var, GradedVar) else var
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring") from None

    def has(self, name: str) -> bool:
        return name in self._index

    def var(self, name: str) -> "Poly":
        exps = [0] * len(self.vars)
        exps[self.index(name)] = 1
        return Poly(self, {tuple(exps): 1}, _normalized=True)

    def const(self, value) -> "Poly":
        c = _coeff(Fraction(value) if not isinstance(value, (int, Fraction)) else value)
        if c == 0:
            return Poly(self, {}, _normalized=True)
        return Poly(self, {self._zero_exps: c}, _normalized=True)

    @property
    def zero(self) -> "Poly":
        return Poly(self, {}, _normalized=True)

    @property
    def one(self) -> "Poly":
        return self.const(1)

    def monomial_weight(self, exps: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exps, self.weights) if e)

    def poly(self, terms: Mapping) -> "Poly":
        """Build a polynomial from {exponent tuple: coefficient}."""
        return Poly(self, dict(terms))

    def parse(self, text: str) -> "Poly":
        return _parse(self, text)


def _same_ring(a: "Poly", b: "Poly"):
    if a.ring is not b.ring and a.ring != b.ring:
        raise RingMismatchError("polynomials belong to different rings")


class Poly:
    """Immutable sparse polynomial: {exponent tuple -> nonzero coefficient}."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping, *, _normalized=False):
        self.ring = ring
        if _normalized:
            self.terms = dict(terms)
            return
        n = len(ring.vars)
        clean = {}
        for exps, c in terms.items():
            c = _coeff(c)
            if c == 0:
                continue
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps}")
            clean[exps] = c
        self.terms = clean

    # -- basic predicates ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            _same_ring(self, other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = _coeff(s)
            else:
                out.pop(m, None)
        return Poly(self.ring, out, _normalized=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()}, _normalized=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coeff(other)
            if c == 0:
                return self.ring.zero
            return Poly(
                self.ring,
                {m: _coeff(v * c) for m, v in self.terms.items()},
                _normalized=True,
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                prev = get(m)
                out[m] = ca * cb if prev is None else prev + ca * cb
        return Poly(
            self.ring,
            {m: _coeff(c) for m, c in out.items() if c},
            _normalized=True,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and substitution ----------------------------------------

    def partial(self, var) -> "Poly":
        """Formal partial derivative with respect to one ring variable."""
        i = self.ring.index(var)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if not e:
                continue
            dm = m[:i] + (e - 1,) + m[i + 1 :]
            prev = out.get(dm, 0)
            s = prev + c * e
            if s:
                out[dm] = _coeff(s)
            else:
                out.pop(dm, None)
        return Poly(self.ring, out, _normalized=True)

    def substitute(
        self,
        assignment: Mapping,
        target: Ring | None = None,
        pow_cache: dict | None = None,
    ) -> "Poly":
        """Substitute polynomials (or rationals) for variables.

        Unassigned variables pass through unchanged, looked up by name in the
        target ring (the ring of the assigned values, or this ring if the
        assignment is purely numeric).  A caller-held pow_cache lets repeated
        substitutions of the same assignment share computed powers.
        """
        images: dict[int, Poly] = {}
        for key, val in assignment.items():
            i = self.ring.index(key)
            if isinstance(val, Poly):
                if target is None:
                    target = val.ring
                elif target != val.ring:
                    raise RingMismatchError("assignment values from different rings")
                images[i] = val
            else:
                images[i] = val  # numeric; wrapped once target is known
        if target is None:
            target = self.ring
        for i, val in images.items():
            if not isinstance(val, Poly):
                images[i] = target.const(val)
        result = target.zero
        if pow_cache is None:
            pow_cache = {}
        for m, c in self.terms.items():
            factor = target.const(c)
            for i, e in enumerate(m):
                if not e:
                    continue
                if i in images:
                    key = (i, e)
                    p = pow_cache.get(key)
                    if p is None:
                        p = images[i] ** e
                        pow_cache[key] = p
                    factor = factor * p
                else:
                    name = self.ring.names[i]
                    key = (i, e)
                    p = pow_cache.get(key)
                    if p is None:
                        p = target.var(name) ** e
                        pow_cache[key] = p
                    factor = factor * p
            result = result + factor
        return result

    def evaluate(self, point: Mapping) -> "int | Fraction":
        """Evaluate at a full numeric assignment {name: rational}."""
        vals = []
        for name in self.ring.names:
            if name not in point:
                raise KeyError(f"no value for variable {name!r}")
            vals.append(point[name])
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for v, e in zip(vals, m):
                if e:
                    t *= Fraction(v) ** e
            total += t
        return _coeff(total)

    # -- grading -----------------------------------------------------------

    def weight_check(self) -> "int | None":
        """Common weight of all terms; None if inhomogeneous; 0 for zero."""
        w = None
        for m in self.terms:
            mw = self.ring.monomial_weight(m)
            if w is None:
                w = mw
            elif mw != w:
                return None
        return 0 if w is None else w

    def is_homogeneous_of(self, weight: int) -> bool:
        """True when every term has the given weight (zero poly passes)."""
        return all(self.ring.monomial_weight(m) == weight for m in self.terms)

    def max_total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def degree_in(self, var) -> int:
        i = self.ring.index(var)
        return max((m[i] for m in self.terms), default=0)

    def coeffs_in(self, var) -> dict[int, "Poly"]:
        """Split into {exponent of var: polynomial coefficient} (var removed)."""
        i = self.ring.index(var)
        buckets: dict[int, dict] = {}
        for m, c in self.terms.items():
            e = m[i]
            rest = m[:i] + (0,) + m[i + 1 :]
            buckets.setdefault(e, {})[rest] = c
        return {
            e: Poly(self.ring, t, _normalized=True) for e, t in sorted(buckets.items())
        }

    def variables_used(self) -> set[str]:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ring.names[i])
        return used

    def constant_value(self) -> "int | Fraction":
        """The value of a constant polynomial; raises if non-constant."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            ((m, c),) = self.terms.items()
            if not any(m):
                return c
        raise ValueError("polynomial is not constant")

    # -- serialization -----------------------------------------------------

    def _sorted_terms(self):
        ring = self.ring

        def key(item):
            m, _ = item
            named = tuple(
                (ring.names[i], e) for i, e in enumerate(m) if e
            )
            return (ring.monomial_weight(m), tuple(sorted(named)))

        return sorted(self.terms.items(), key=key)

    def to_text(self) -> str:
        """Canonical text form, e.g. ``-4/3*l4^3 + 6*l6``."""
        if not self.terms:
            return "0"
        parts = []
        for m, c in self._sorted_terms():
            factors = [
                f"{self.ring.names[i]}^{e}" if e > 1 else self.ring.names[i]
                for i, e in enumerate(m)
                if e
            ]
            mono = "*".join(factors)
            if not mono:
                chunk = str(c)
            elif c == 1:
                chunk = mono
            elif c == -1:
                chunk = "-" + mono
            else:
                chunk = f"{c}*{mono}"
            parts.append(chunk)
        out = parts[0]
        for chunk in parts[1:]:
            if chunk.startswith("-"):
                out += " - " + chunk[1:]
            else:
                out += " + " + chunk
        return out

    __str__ = to_text

    def __repr__(self):
        return f"Poly({self.to_text()})"

    def to_json_obj(self) -> dict:
        terms = []
        for m, c in self._sorted_terms():
            mono = {
                self.ring.names[i]: e for i, e in enumerate(m) if e
            }
            terms.append({"c": str(c), "m": mono})
        return {"terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"), sort_keys=True)

    @staticmethod
    def from_json_obj(ring: Ring, obj: Mapping) -> "Poly":
        out = {}
        for t in obj["terms"]:
            exps = [0] * len(ring.vars)
            for name, e in t["m"].items():
                exps[ring.index(name)] = int(e)
            out[tuple(exps)] = _coeff(Fraction(t["c"]))
        return Poly(ring, out)


def cast(p: Poly, target: Ring) -> Poly:
    """Re-express a polynomial in another ring containing its variables."""
    if p.ring == target:
        return p
    mapping = []
    for i, name in enumerate(p.ring.names):
        mapping.append(target._index.get(name, -1))
    n = len(target.vars)
    out = {}
    for m, c in p.terms.items():
        exps = [0] * n
        for i, e in enumerate(m):
            if e:
                j = mapping[i]
                if j < 0:
                    raise KeyError(
                        f"variable {p.ring.names[i]!r} absent from target ring"
                    )
                exps[j] = e
        out[tuple(exps)] = c
    return Poly(target, out, _normalized=True)


# -- parsing ---------------------------------------------------------------


class _Parser:
    """Recursive-descent parser for the canonical text form, with parentheses."""

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text):
        tokens = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch in "+-*^()":
                tokens.append(ch)
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                num = int(text[i:j])
                # rational literal a/b
                if j < n and text[j] == "/":
                    k = j + 1
                    m = k
                    while m < n and text[m].isdigit():
                        m += 1
                    if m == k:
                        raise ValueError("expected denominator after '/'")
                    tokens.append(Fraction(num, int(text[k:m])))
                    i = m
                else:
                    tokens.append(num)
                    i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                tokens.append(("name", text[i:j]))
                i = j
            else:
                raise ValueError(f"unexpected character {ch!r}")
        return tokens

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Poly:
        p = self.expr()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.peek()!r}")
        return p

    def expr(self) -> Poly:
        tok = self.peek()
        negate = False
        if tok in ("+", "-"):
            self.take()
            negate = tok == "-"
        p = self.term()
        if negate:
            p = -p
        while self.peek() in ("+", "-"):
            op = self.take()
            q = self.term()
            p = p - q if op == "-" else p + q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek() == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        tok = self.take()
        if tok == "(":
            p = self.expr()
            if self.take() != ")":
                raise ValueError("unbalanced parenthesis")
        elif tok == "-":
            return -self.factor()
        elif isinstance(tok, (int, Fraction)):
            p = self.ring.const(tok)
        elif isinstance(tok, tuple) and tok[0] == "name":
            p = self.ring.var(tok[1])
        else:
            raise ValueError(f"unexpected token {tok!r}")
        while self.peek() == "^":
            self.take()
            e = self.take()
            if not isinstance(e, int):
                raise ValueError("exponent must be an integer")
            p = p**e
        return p


def _parse(ring: Ring, text: str) -> Poly:
    return _Parser(ring, text).parse()


# -- exact division ----------------------------------------------------------


def _mono_key(ring: Ring, m):
    return (ring.monomial_weight(m), m)


def divexact(p: Poly, d: Poly) -> Poly:
    """Exact division p/d in the polynomial ring; raises if not divisible."""
    _same_ring(p, d)
    if d.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p.ring.zero
    ring = p.ring
    dm = max(d.terms, key=lambda m: _mono_key(ring, m))
    dc = d.terms[dm]
    rem = dict(p.terms)
    out = {}
    while rem:
        rm = max(rem, key=lambda m: _mono_key(ring, m))
        rc = rem[rm]
        qm = tuple(a - b for a, b in zip(rm, dm))
        if any(e < 0 for e in qm):
            raise ValueError("polynomials do not divide exactly")
        qc = _coeff(Fraction(rc) / Fraction(dc))
        out[qm] = qc
        for m2, c2 in d.terms.items():
            k = tuple(a + b for a, b in zip(qm, m2))
            s = rem.get(k, 0) - qc * c2
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return Poly(ring, out, _normalized=True)


# -- matrices ----------------------------------------------------------------


class PolyMatrix:
    """A rectangular grid of polynomials from one ring."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: Ring, rows: Sequence[Sequence[Poly]]):
        self.ring = ring
        self.rows = tuple(tuple(row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for row in self.rows:
            if len(row) != self.ncols:
                raise ValueError("ragged matrix")
            for p in row:
                if p.ring != ring:
                    raise RingMismatchError("matrix entry from another ring")

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def map(self, fn) -> "PolyMatrix":
        rows = [[fn(p) for p in row] for row in self.rows]
        ring = rows[0][0].ring if rows and rows[0] else self.ring
        return PolyMatrix(ring, rows)


def _row_scaled_int_terms(matrix: PolyMatrix):
    """Clear denominators per row; return int-coefficient term dicts + scales."""
    scaled = []
    scales = []
    for row in matrix.rows:
        denom = 1
        for p in row:
            for c in p.terms.values():
                if isinstance(c, Fraction):
                    denom = math.lcm(denom, c.denominator)
        scales.append(denom)
        scaled.append(
            [{m: int(c * denom) for m, c in p.terms.items()} for p in row]
        )
    return scaled, scales


def det_bareiss(matrix: PolyMatrix) -> Poly:
    """Fraction-free Bareiss determinant over the polynomial ring.

    Rows are scaled to integer coefficients first and the scalar restored at
    the end, so the elimination runs entirely over integer-coefficient
    polynomials where every division is exact.
    """
    if not matrix.is_square:
        raise ValueError("determinant requires a square matrix")
    n = matrix.nrows
    ring = matrix.ring
    if n == 0:
        return ring.one
    scaled, scales = _row_scaled_int_terms(matrix)
    work = [
        [Poly(ring, t, _normalized=True) for t in row] for row in scaled
    ]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        pivot_row = k
        while pivot_row < n and work[pivot_row][k].is_zero():
            pivot_row += 1
        if pivot_row == n:
            return ring.zero
        if pivot_row != k:
            work[pivot_row], work[k] = work[k], work[pivot_row]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * work[i][j] - work[i][k] * work[k][j]
                work[i][j] = divexact(num, prev)
            work[i][k] = ring.zero
        prev = pivot
    det = work[n - 1][n - 1]
    return det * Fraction(sign, math.prod(scales))


_PACK_BITS = 16


def det_minor_expansion(matrix: PolyMatrix) -> Poly:
    """Division-free determinant by dynamic programming over column subsets.

    Intermediate minors never require polynomial division, which keeps the
    cost dominated by small-entry-times-minor products.  Monomials are packed
    into single integers during the sweep (16 bits per variable; exponents in
    any minor stay far below that bound here).
    """
    if not matrix.is_square:
        raise ValueError("determinant requires a square matrix")
    n = matrix.nrows
    ring = matrix.ring
    if n == 0:
        return ring.one
    scaled, scales = _row_scaled_int_terms(matrix)
    nvars = len(ring.vars)

    def pack(m):
        acc = 0
        for i, e in enumerate(m):
            if e:
                acc |= e << (i * _PACK_BITS)
        return acc

    ents = [[{pack(m): c for m, c in t.items()} for t in row] for row in scaled]

    masks_by_count = [[] for _ in range(n + 1)]
    for mask in range(1, 1 << n):
        masks_by_count[bin(mask).count("1")].append(mask)

    prev_level = {0: {0: 1}}
    for r in range(1, n + 1):
        row = ents[r - 1]
        cur_level = {}
        row_sign = 1 if (r - 1) % 2 == 0 else -1
        for mask in masks_by_count[r]:
            acc: dict[int, int] = {}
            get = acc.get
            sign = row_sign
            rem = mask
            while rem:
                bit = rem & -rem
                j = bit.bit_length() - 1
                rem ^= bit
                e = row[j]
                sub = prev_level[mask ^ bit]
                if e and sub:
                    if sign > 0:
                        for me, ce in e.items():
                            for ms, cs in sub.items():
                                k = me + ms
                                v = get(k)
                                acc[k] = ce * cs if v is None else v + ce * cs
                    else:
                        for me, ce in e.items():
                            for ms, cs in sub.items():
                                k = me + ms
                                v = get(k)
                                acc[k] = -ce * cs if v is None else v - ce * cs
                sign = -sign
            cur_level[mask] = {k: v for k, v in acc.items() if v}
        prev_level = cur_level

    packed = prev_level[(1 << n) - 1]
    mask_bits = (1 << _PACK_BITS) - 1
    out = {}
    for key, c in packed.items():
        exps = [0] * nvars
        i = 0
        while key:
            exps[i] = key & mask_bits
            key >>= _PACK_BITS
            i += 1
        out[tuple(exps)] = c
    poly = Poly(ring, out, _normalized=True)
    return poly * Fraction(1, math.prod(scales))


def det_cofactor(matrix: PolyMatrix) -> Poly:
    """Naive recursive cofactor expansion along the first row (oracle use)."""
    if not matrix.is_square:
        raise ValueError("determinant requires a square matrix")
    ring = matrix.ring

    def rec(rows):
        n = len(rows)
        if n == 0:
            return ring.one
        if n == 1:
            return rows[0][0]
        total = ring.zero
        first = rows[0]
        rest = rows[1:]
        for j, a in enumerate(first):
            if a.is_zero():
                continue
            sub = [row[:j] + row[j + 1 :] for row in rest]
            term = a * rec(sub)
            total = total + term if j % 2 == 0 else total - term
        return total

    return rec([list(r) for r in matrix.rows])


def determinant(matrix: PolyMatrix, method: str = "bareiss") -> Poly:
    """Exact determinant; identical result for every method."""
    if method == "bareiss":
        return det_bareiss(matrix)
    if method == "minors":
        return det_minor_expansion(matrix)
    if method == "cofactor":
        return det_cofactor(matrix)
    raise ValueError(f"unknown determinant method {method!r}")


def sylvester_matrix(f: Poly, h: Poly, var) -> PolyMatrix:
    """The Sylvester matrix of f and h with respect to one variable.

    Rows built from f's coefficients come first; this fixes the sign
    convention of the resultant.
    """
    _same_ring(f, h)
    if f.is_zero() or h.is_zero():
        raise ValueError("resultant of zero polynomial")
    ring = f.ring
    i = ring.index(var)
    fc = f.coeffs_in(var)
    hc = h.coeffs_in(var)
    m = max(fc)
    n = max(hc)
    if m < 1 or n < 1:
        raise ValueError("both polynomials must have positive degree in var")
    size = m + n
    zero = ring.zero
    rows = []
    for r in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[r + k] = fc.get(m - k, zero)
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[r + k] = hc.get(n - k, zero)
        rows.append(row)
    return PolyMatrix(ring, rows)


def resultant(f: Poly, h: Poly, var, method: str = "bareiss") -> Poly:
    """Resultant of f and h with respect to var (Sylvester determinant)."""
    return determinant(sylvester_matrix(f, h, var), method=method)


# -- named polynomial maps ----------------------------------------------------


class PolyMap:
    """A named polynomial map: ordered components {target variable: Poly}."""

    __slots__ = ("name", "source", "target", "components", "_pow_cache")

    def __init__(self, name: str, source: Ring, target: Ring, components: Mapping):
        self.name = name
        self.source = source
        self.target = target
        comps = {}
        for key, p in components.items():
            vname = key.name if isinstance(key, GradedVar) else key
            target.index(vname)
            if p.ring != source:
                raise RingMismatchError(f"component {vname} not in source ring")
            comps[vname] = p
        self.components = comps
        self._pow_cache = {}  # shared across pullbacks; the map is immutable

    def pullback(self, p: Poly) -> Poly:
        """Compose: substitute this map's components into a target-ring poly."""
        if p.ring != self.target:
            raise RingMismatchError("pullback argument not in target ring")
        return p.substitute(self.components, target=self.source,
                            pow_cache=self._pow_cache)

    def evaluate(self, point: Mapping) -> dict:
        return {v: comp.evaluate(point) for v, comp in self.components.items()}

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "components": [
                {"var": v, "poly": p.to_json_obj()} for v, p in self.components.items()
            ],
        }
