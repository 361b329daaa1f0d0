"""Derivations: Leibniz rule, brackets, pushforward checks, ladder completion."""

import random
from fractions import Fraction

import pytest

from hyperlie import Derivation, Poly, PolyMap, Ring, ladder_complete
from hyperlie.derivation import (
    BracketRelation,
    LadderError,
    combination,
    verify_bracket_relation,
    verify_pushforward,
)


@pytest.fixture
def g1ring():
    return Ring([("x2", 2), ("x3", 3), ("x4", 4)])


@pytest.fixture
def g1fields(g1ring):
    r = g1ring
    L0 = Derivation("L0", r, {"x2": r.parse("2*x2"), "x3": r.parse("3*x3"),
                              "x4": r.parse("4*x4")}, weight=0)
    L1 = Derivation("L1", r, {"x2": r.var("x3"), "x3": r.var("x4"),
                              "x4": r.parse("12*x2*x3")}, weight=1)
    L2 = Derivation("L2", r, {"x2": r.parse("2/3*x4 - 2*x2^2"),
                              "x3": r.parse("3*x2*x3"),
                              "x4": r.parse("2*x2*x4 + 3*x3^2")}, weight=2)
    return {"L0": L0, "L1": L1, "L2": L2}


def random_poly(ring, rng):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        exps = tuple(rng.randint(0, 2) for _ in ring.vars)
        terms[exps] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(ring, terms)


def random_derivation(ring, rng, name="D"):
    action = {v.name: random_poly(ring, rng) for v in ring.vars}
    return Derivation(name, ring, action)


# -- application ----------------------------------------------------------------


def test_euler_multiplies_by_weight(g1ring, g1fields):
    p = g1ring.parse("2*x2^3 + 1/4*x3^2 - 1/2*x2*x4")  # homogeneous, weight 6
    assert g1fields["L0"].apply(p) == 6 * p


def test_depth1_on_first_coordinate(g1fields, g1ring):
    assert g1fields["L1"].on("x2") == g1ring.var("x3")


def test_derivation_kills_constants(g1ring, g1fields):
    assert g1fields["L2"].apply(g1ring.one).is_zero()


def test_leibniz_randomized():
    ring = Ring([("a", 1), ("b", 2), ("c", 3)])
    rng = random.Random(2)
    for _ in range(100):
        d = random_derivation(ring, rng)
        p, q = random_poly(ring, rng), random_poly(ring, rng)
        assert d.apply(p * q) == d.apply(p) * q + p * d.apply(q)


def test_weight_additivity(catalogs):
    cat = catalogs[3]
    p = cat.ring.parse("x2*z6")  # weight 8
    for name in ("L1", "L2", "L5"):
        d = cat.fields[name]
        out = d.apply(p)
        assert out.is_homogeneous_of(8 + d.weight)


# -- brackets -------------------------------------------------------------------


def test_bracket_self_is_zero(g1fields):
    assert g1fields["L2"].bracket(g1fields["L2"]).is_zero()


def test_bracket_antisymmetry():
    ring = Ring([("a", 1), ("b", 2)])
    rng = random.Random(7)
    for _ in range(30):
        A, B = random_derivation(ring, rng), random_derivation(ring, rng)
        assert A.bracket(B) == B.bracket(A).scale(-1)


def test_genus1_bracket_is_coordinate_multiple(g1fields, g1ring):
    got = g1fields["L1"].bracket(g1fields["L2"])
    assert got == g1fields["L1"].scale(g1ring.var("x2"))


def test_genus3_odd_fields_commute(catalogs):
    cat = catalogs[3]
    assert cat.fields["L3"].bracket(cat.fields["L5"]).is_zero()


def test_jacobi_randomized():
    ring = Ring([("a", 1), ("b", 2)])
    rng = random.Random(13)
    for _ in range(15):
        A, B, C = (random_derivation(ring, rng) for _ in range(3))
        total = (
            A.bracket(B.bracket(C))
            + B.bracket(C.bracket(A))
            + C.bracket(A.bracket(B))
        )
        assert total.is_zero()


# -- bracket relations ------------------------------------------------------------


def test_bracket_relation_genus3_depth1(catalogs):
    cat = catalogs[3]
    rel = BracketRelation(
        cat.fields["L1"],
        cat.fields["L2"],
        [(cat.ring.var("x2"), cat.fields["L1"]),
         (cat.ring.const(-1), cat.fields["L3"])],
    )
    ok, residual = verify_bracket_relation(rel)
    assert ok and residual.is_zero()


def test_bracket_relation_genus2_row(catalogs):
    cat = catalogs[2]
    from hyperlie.genus_fields import parse_coeff

    rel = BracketRelation(
        cat.fields["L3"],
        cat.fields["L2"],
        [(parse_coeff(cat, "y4 + 4/5*l4"), cat.fields["L1"])],
    )
    ok, _ = verify_bracket_relation(rel)
    assert ok


def test_bracket_relation_corrupted_fails(catalogs):
    cat = catalogs[3]
    rel = BracketRelation(
        cat.fields["L1"],
        cat.fields["L2"],
        [(cat.ring.parse("x2 + 1"), cat.fields["L1"]),  # corrupted coefficient
         (cat.ring.const(-1), cat.fields["L3"])],
    )
    ok, residual = verify_bracket_relation(rel)
    assert not ok
    assert any(not p.is_zero() for p in residual.action.values())


# -- pushforward -----------------------------------------------------------------


def test_pushforward_genus1_weight2_pair(g1fields, g1ring):
    lring = Ring([("l4", 4), ("l6", 6)])
    pmap = PolyMap("p", g1ring, lring, {
        "l4": g1ring.parse("-3*x2^2 + 1/2*x4"),
        "l6": g1ring.parse("2*x2^3 + 1/4*x3^2 - 1/2*x2*x4"),
    })
    L2_down = Derivation("L2", lring, {
        "l4": lring.parse("6*l6"), "l6": lring.parse("-4/3*l4^2")
    }, weight=2)
    ok, failures = verify_pushforward(g1fields["L2"], pmap, L2_down)
    assert ok, failures
    # both sides on the weight-4 component equal 6 * (weight-6 component)
    expected = g1ring.parse("12*x2^3 + 3/2*x3^2 - 3*x2*x4")
    assert g1fields["L2"].apply(pmap.components["l4"]) == expected
    assert pmap.pullback(L2_down.on("l4")) == expected


def test_pushforward_all_genus3_pairs(catalogs, lam_fields):
    cat = catalogs[3]
    for k in (0, 2, 4, 6, 8, 10):
        ok, failures = verify_pushforward(
            cat.fields[f"L{k}"], cat.pmap, lam_fields[3][k]
        )
        assert ok, (k, failures)


def test_odd_fields_annihilate_map(catalogs):
    cat = catalogs[3]
    for name in ("L1", "L3", "L5"):
        ok, failures = verify_pushforward(cat.fields[name], cat.pmap, None)
        assert ok, (name, failures)


# -- ladder completion -------------------------------------------------------------


def test_ladder_zero_seeds_zero_rhs(g1fields, g1ring):
    zero = Derivation("zero", g1ring, {})
    d = ladder_complete(
        "D", {"x2": g1ring.zero}, g1fields["L1"], zero,
        [("x2", "x3"), ("x3", "x4")],
    )
    assert d.is_zero()


def test_ladder_genus2_reproduces_displayed_value(catalogs_zero):
    cat = catalogs_zero[2]
    rhs = combination(
        [(cat.ring.var("x2"), cat.fields["L1"]),
         (cat.ring.const(-1), cat.fields["L3"])],
        cat.ring,
    )
    seeds = {
        "x2": cat.fields["L2"].on("x2"),
        "y4": cat.fields["L2"].on("y4"),
    }
    steps = [("x2", "x3"), ("x3", "x4"), ("y4", "y5"), ("y5", "y6")]
    d = ladder_complete("L2", seeds, cat.fields["L1"], rhs, steps, weight=2)
    assert d.on("x3") == cat.ring.parse("3*x2*x3 + 5*y5")
    assert d == cat.fields["L2"]


def test_ladder_restricted_to_seeds(catalogs):
    cat = catalogs[3]
    for name in ("L2", "L4", "L6", "L8", "L10"):
        d = cat.fields[name]
        for v in ("x2", "y4", "z6"):
            assert d.on(v) == d.action[v]  # seeds present verbatim


def test_ladder_inconsistent_seeds_raise(g1fields, g1ring):
    zero = Derivation("zero", g1ring, {})
    with pytest.raises(LadderError):
        ladder_complete(
            "bad", {"x2": g1ring.parse("x2^2")}, g1fields["L1"], zero,
            [("x2", "x3"), ("x3", "x4")],
        )


def test_ladder_unknown_step_raises(g1fields, g1ring):
    zero = Derivation("zero", g1ring, {})
    with pytest.raises(LadderError):
        ladder_complete(
            "bad", {"x2": g1ring.zero}, g1fields["L1"], zero,
            [("x3", "x4")],  # x3 has no seed
        )


# -- serialization ------------------------------------------------------------------


def test_derivation_json(g1fields):
    obj = g1fields["L2"].to_json_obj()
    assert obj["name"] == "L2"
    assert obj["weight"] == 2
    assert obj["action"]["x3"] == "3*x2*x3"
