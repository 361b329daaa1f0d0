"""Polynomial vector fields as derivations of a graded polynomial ring.

A derivation is determined by its action on the ring variables; variables
absent from the action map are annihilated.  Application extends by the
Leibniz rule, and the commutator of two derivations is again a derivation.

``ladder_complete`` reconstructs a field from its values on a set of seed
variables plus a prescribed commutator with a partner field, walking a chain
of variables v -> partner(v).
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .exactpoly import Poly, PolyMap, Ring, RingMismatchError


class Derivation:
    """A polynomial vector field: finite map {variable name -> Poly}."""

    __slots__ = ("name", "ring", "weight", "action")

    def __init__(self, name: str, ring: Ring, action: Mapping, weight=None):
        self.name = name
        self.ring = ring
        self.weight = weight
        clean = {}
        for key, p in action.items():
            vname = key if isinstance(key, str) else key.name
            ring.index(vname)
            if not isinstance(p, Poly):
                p = ring.const(p)
            if p.ring != ring:
                raise RingMismatchError(f"action on {vname} from another ring")
            if not p.is_zero():
                clean[vname] = p
        self.action = clean

    def __call__(self, p: Poly) -> Poly:
        return self.apply(p)

    def apply(self, p: Poly) -> Poly:
        """Leibniz-rule application: sum of action[v] * dp/dv."""
        if p.ring != self.ring:
            raise RingMismatchError("argument not in the derivation's ring")
        used = p.variables_used()
        out = self.ring.zero
        for vname, img in self.action.items():
            if vname in used:
                out = out + img * p.partial(vname)
        return out

    def on(self, var) -> Poly:
        """Action on a single variable (zero when absent)."""
        vname = var if isinstance(var, str) else var.name
        self.ring.index(vname)
        return self.action.get(vname, self.ring.zero)

    def bracket(self, other: "Derivation") -> "Derivation":
        """Commutator [self, other] as a derivation."""
        if self.ring != other.ring:
            raise RingMismatchError("bracket of derivations on different rings")
        action = {}
        for vname in set(self.action) | set(other.action):
            q = self.apply(other.on(vname)) - other.apply(self.on(vname))
            if not q.is_zero():
                action[vname] = q
        w = None
        if self.weight is not None and other.weight is not None:
            w = self.weight + other.weight
        return Derivation(f"[{self.name},{other.name}]", self.ring, action, weight=w)

    # -- module structure --------------------------------------------------

    def __add__(self, other: "Derivation") -> "Derivation":
        if self.ring != other.ring:
            raise RingMismatchError("sum of derivations on different rings")
        action = {}
        for vname in set(self.action) | set(other.action):
            q = self.on(vname) + other.on(vname)
            if not q.is_zero():
                action[vname] = q
        return Derivation(f"({self.name}+{other.name})", self.ring, action)

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + other.scale(-1)

    def __neg__(self) -> "Derivation":
        return self.scale(-1)

    def scale(self, c) -> "Derivation":
        """Multiply by a polynomial (or rational) coefficient."""
        if not isinstance(c, Poly):
            c = self.ring.const(c)
        action = {v: c * p for v, p in self.action.items()}
        return Derivation(f"({c})*{self.name}", self.ring, action)

    def is_zero(self) -> bool:
        return not self.action

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return self.ring == other.ring and self.action == other.action

    def __hash__(self):
        return hash((self.ring, frozenset(self.action.items())))

    def rename(self, name: str, weight=None) -> "Derivation":
        return Derivation(
            name, self.ring, self.action, weight=self.weight if weight is None else weight
        )

    def homogeneity_defects(self) -> list[str]:
        """Variables whose image is not homogeneous of weight(v) + weight."""
        if self.weight is None:
            return []
        bad = []
        for vname, p in self.action.items():
            w = self.ring.weights[self.ring.index(vname)]
            if not p.is_homogeneous_of(w + self.weight):
                bad.append(vname)
        return bad

    def __repr__(self):
        return f"Derivation({self.name})"

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "weight": self.weight,
            "action": {
                v: self.on(v).to_text()
                for v in self.ring.names
                if v in self.action
            },
        }


def combination(terms: Sequence, ring: Ring, name: str = "comb") -> Derivation:
    """Module combination sum(coeff * field) as a single derivation."""
    action: dict[str, Poly] = {}
    for coeff, field in terms:
        if not isinstance(coeff, Poly):
            coeff = ring.const(coeff)
        for vname, p in field.action.items():
            q = action.get(vname, ring.zero) + coeff * p
            if q.is_zero():
                action.pop(vname, None)
            else:
                action[vname] = q
    return Derivation(name, ring, action)


class BracketRelation:
    """A claimed identity [left, right] = sum of coeff * field."""

    __slots__ = ("left", "right", "expansion", "label")

    def __init__(self, left: Derivation, right: Derivation, expansion, label=None):
        self.left = left
        self.right = right
        self.expansion = list(expansion)
        self.label = label or f"[{left.name},{right.name}]"

    def residual(self) -> Derivation:
        """bracket(left, right) minus the claimed expansion (zero iff it holds)."""
        ring = self.left.ring
        return self.left.bracket(self.right) - combination(self.expansion, ring)


def verify_bracket_relation(rel: BracketRelation):
    """Check one bracket identity; returns (ok, residual derivation)."""
    res = rel.residual()
    return res.is_zero(), res


def verify_pushforward(d_up: Derivation, pmap: PolyMap, d_down) -> tuple[bool, dict]:
    """Check that d_up projects onto d_down along the polynomial map.

    For every component s of the map: d_up(p_s) must equal the pullback of
    d_down(lambda_s).  Passing d_down=None asserts d_up annihilates every
    component.  Checking on the target generators suffices because both sides
    are derivations.
    """
    failures = {}
    for vname, comp in pmap.components.items():
        lhs = d_up.apply(comp)
        if d_down is None:
            rhs = pmap.source.zero
        else:
            rhs = pmap.pullback(d_down.on(vname))
        diff = lhs - rhs
        if not diff.is_zero():
            failures[vname] = diff
    return not failures, failures


class LadderError(ValueError):
    """Raised when ladder completion cannot produce a consistent field."""


def ladder_complete(
    name: str,
    seeds: Mapping,
    partner: Derivation,
    rhs: Derivation,
    ladder: Sequence[tuple],
    weight=None,
    check_vars: Sequence[str] | None = None,
) -> Derivation:
    """Reconstruct the unique field D with the given seed values satisfying
    [partner, D] = rhs.

    ``ladder`` lists pairs (src, dst) with partner(src) = dst as variables;
    each step forces D(dst) = partner(D(src)) - rhs(src).  After the walk the
    commutator identity is re-checked on ``check_vars`` (default: all ring
    variables); any residual means the seeds are inconsistent with rhs.
    """
    ring = partner.ring
    action: dict[str, Poly] = {}
    for key, p in seeds.items():
        vname = key if isinstance(key, str) else key.name
        ring.index(vname)
        if not isinstance(p, Poly):
            p = ring.const(p)
        action[vname] = p
    for src, dst in ladder:
        src = src if isinstance(src, str) else src.name
        dst = dst if isinstance(dst, str) else dst.name
        if src not in action:
            raise LadderError(f"ladder reaches {dst} before {src} is known")
        if partner.on(src) != ring.var(dst):
            raise LadderError(f"partner does not map {src} to {dst}")
        action[dst] = partner.apply(action[src]) - rhs.on(src)
    result = Derivation(name, ring, action, weight=weight)
    residual = partner.bracket(result) - rhs
    for vname in check_vars if check_vars is not None else ring.names:
        q = residual.on(vname)
        if not q.is_zero():
            raise LadderError(
                f"inconsistent seeds: commutator residual on {vname}: {q.to_text()}"
            )
    return result
