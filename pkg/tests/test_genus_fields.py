"""Lifted fields: construction, tables, projectability, translation."""

import pytest

from hyperlie import det_minor_expansion
from hyperlie import reference
from hyperlie.classical import SymbolDictionary, compare_tables, translate_table
from hyperlie.derivation import verify_bracket_relation, verify_pushforward
from hyperlie.genus_fields import (
    build_Tcal,
    build_even_by_ladder,
    euler_relations,
    parse_coeff,
    pullback_T,
    solve_genus2_normalization,
    specialize_params,
    table_relations,
)


# -- Euler and depth-1 fields ----------------------------------------------------


def test_euler_coefficients(catalogs):
    cat = catalogs[3]
    assert cat.fields["L0"].on("z8") == cat.ring.parse("8*z8")


def test_euler_on_map_component(catalogs):
    cat = catalogs[1]
    l4 = cat.jm.lambda_exprs[4]
    assert cat.fields["L0"].apply(l4) == 4 * l4


def test_euler_self_bracket(catalogs):
    cat = catalogs[2]
    assert cat.fields["L0"].bracket(cat.fields["L0"]).is_zero()


def test_depth1_guard_examples(catalogs):
    # the out-of-range tail term vanishes at the top of each triple
    assert catalogs[1].fields["L1"].on("x4") == catalogs[1].ring.parse("12*x2*x3")
    assert catalogs[2].fields["L1"].on("y6") == catalogs[2].ring.parse(
        "4*(2*x2*y5 + x3*y4)"
    )
    assert catalogs[3].fields["L1"].on("z8") == catalogs[3].ring.parse(
        "4*(x3*z6 + 2*x2*z7)"
    )


# -- odd fields --------------------------------------------------------------------


def test_odd_field_displayed_values(catalogs):
    cat = catalogs[3]
    assert cat.fields["L3"].on("y4") == cat.ring.parse("x3*y4 - x2*y5 + z7")
    assert cat.fields["L5"].on("z6") == cat.ring.parse("y5*z6 - y4*z7")
    cat2 = catalogs[2]
    assert cat2.fields["L3"].on("y6") == cat2.ring.parse(
        "8*x2*x3*y4 - 8*x2^2*y5 + x4*y5 - x3*y6 + 4*y4*y5"
    )


def test_odd_fields_commute_pairwise(catalogs):
    for g in (2, 3):
        cat = catalogs[g]
        odds = cat.odd_fields()
        for i in range(len(odds)):
            for j in range(i + 1, len(odds)):
                assert odds[i].bracket(odds[j]).is_zero()


def test_build_odd_rejects_out_of_range_index(catalogs):
    from hyperlie.genus_fields import build_odd

    cat = catalogs[2]
    with pytest.raises(ValueError):
        build_odd(2, 5, cat.ring, cat.jm.w_exprs, cat.fields["L1"])


# -- auxiliary polynomials ----------------------------------------------------------


def test_aux_polys_match_displayed_forms(catalogs):
    for g in (2, 3):
        cat = catalogs[g]
        for name, text in reference.AUX[g].items():
            assert cat.aux[name] == parse_coeff(cat, text), (g, name)


def test_aux_spot_values(catalogs):
    cat = catalogs[3]
    assert cat.aux["p11"] == cat.ring.parse("y5*z6 - y4*z7")
    assert cat.aux["w13"] == cat.ring.parse(
        "-y5*x2*z6 + x2*y4*z7 - 1/2*y6*z7 + 1/2*y5*z8 + z6*z7"
    )
    cat2 = catalogs[2]
    assert cat2.aux["w9"] == cat2.ring.parse(
        "-x2*x3*y4 + x2^2*y5 - 1/2*(x4*y5 - x3*y6) + y4*y5"
    )


# -- even fields ---------------------------------------------------------------------


def test_genus3_even_seed_display(catalogs):
    cat = catalogs[3]
    expected = parse_coeff(
        cat,
        "-8/7*l8*y4 + 4*l6*z6 - 2*x2*y4*z6 + y6*z6 - y5*z7 + 2*z6^2",
    )
    assert cat.fields["L6"].on("z6") == expected


def test_genus1_weight2_row(catalogs):
    cat = catalogs[1]
    d = cat.fields["L2"]
    assert d.on("x2") == cat.ring.parse("2/3*x4 - 2*x2^2")
    assert d.on("x3") == cat.ring.parse("3*x2*x3")
    assert d.on("x4") == cat.ring.parse("2*x2*x4 + 3*x3^2")


def test_genus2_zero_params_unhats(catalogs, catalogs_zero):
    # with all parameters zero the hatted combinations reduce to the bases
    sym = catalogs[2]
    zero = catalogs_zero[2]
    specialized = specialize_params(sym, {})
    for name in ("L2", "L4", "L6"):
        assert specialized.fields[name] == zero.fields[name]


def test_genus2_even_ladder_matches_explicit(catalogs_zero):
    cat = catalogs_zero[2]
    for name in ("L2", "L4", "L6"):
        k = int(name[1:])
        seeds = {v: cat.fields[name].on(v) for v in ("x2", "y4")}
        laddered = build_even_by_ladder(cat, k, seeds)
        assert laddered == cat.fields[name], name


def test_fields_homogeneous(catalogs):
    for cat in catalogs.values():
        for name, d in cat.fields.items():
            assert d.homogeneity_defects() == [], (cat.genus, name)


# -- tables ---------------------------------------------------------------------------


def test_euler_rows_all_genera(catalogs):
    for cat in catalogs.values():
        for rel in euler_relations(cat):
            ok, residual = verify_bracket_relation(rel)
            assert ok, (cat.genus, rel.label)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_full_bracket_tables(catalogs, g):
    for rel in table_relations(catalogs[g]):
        ok, residual = verify_bracket_relation(rel)
        assert ok, (g, rel.label, residual.to_json_obj())


def test_specific_genus3_rows(catalogs):
    cat = catalogs[3]
    rows = {r.label: r for r in table_relations(cat)}
    for label in ("[L3,L2]", "[L5,L10]", "[L8,L10]"):
        ok, _ = verify_bracket_relation(rows[label])
        assert ok, label


def test_genus2_parametric_row(catalogs):
    # the displayed bracket with all four parameters symbolic
    cat = catalogs[2]
    rows = {r.label: r for r in table_relations(cat)}
    ok, _ = verify_bracket_relation(rows["[L3,L2]"])
    assert ok


# -- projectability -----------------------------------------------------------------


@pytest.mark.parametrize("g", [1, 2, 3])
def test_projectability_all_fields(catalogs, lam_fields, g):
    cat = catalogs[g]
    for name in cat.names:
        k = int(name[1:])
        down = None if k % 2 else lam_fields[g][k]
        ok, failures = verify_pushforward(cat.fields[name], cat.pmap, down)
        assert ok, (g, name, {v: p.to_text() for v, p in failures.items()})


def test_pushforward_homomorphism_genus3(catalogs, lam_fields):
    cat = catalogs[3]
    for i in (0, 2, 4):
        for j in (6, 8, 10):
            up = cat.fields[f"L{i}"].bracket(cat.fields[f"L{j}"])
            down = lam_fields[3][i].bracket(lam_fields[3][j])
            ok, failures = verify_pushforward(up, cat.pmap, down)
            assert ok, (i, j, failures)


# -- action-matrix determinant ---------------------------------------------------------


@pytest.mark.parametrize("g", [1, 2])
def test_detTcal_factor_small(catalogs_zero, g):
    cat = catalogs_zero[g]
    lhs = det_minor_expansion(build_Tcal(cat))
    rhs = det_minor_expansion(pullback_T(cat))
    assert lhs == reference.DET_TCAL_FACTOR[g] * rhs


def test_pullback_det_equals_det_pullback(catalogs_zero, detTs):
    # substitution commutes with the determinant
    for g in (1, 2):
        cat = catalogs_zero[g]
        assert det_minor_expansion(pullback_T(cat)) == cat.pmap.pullback(detTs[g])


# -- normalization ----------------------------------------------------------------------


def test_normalization_solution_is_zero(catalogs):
    sol = solve_genus2_normalization(catalogs[2])
    assert sol == {"alpha": 0, "beta": 0, "gamma1": 0, "gamma2": 0}


def test_normalized_bracket_row(catalogs_zero):
    # with the solution applied, the weight-(2,4) bracket takes the
    # parameter-free displayed form
    cat = catalogs_zero[2]
    rows = {r.label: r for r in table_relations(cat)}
    ok, _ = verify_bracket_relation(rows["[L2,L4]"])
    assert ok


def test_normalization_negative_control(catalogs):
    # forcing alpha = 1 contradicts the classical table
    forced = specialize_params(catalogs[2], {"alpha": 1})
    mism = compare_tables(forced, reference.CLASSICAL_TABLE[2])
    assert mism


# -- classical translation ----------------------------------------------------------------


def test_symbol_dictionary_base_cases(catalogs):
    cat = catalogs[3]
    sd = SymbolDictionary(cat)
    assert sd.image(2, ()) == cat.ring.var("x2")
    assert sd.image(2, (3,)) == cat.ring.var("y5")
    assert sd.image(0, (3, 3)) == cat.aux["w6"]
    assert sd.image(0, (5, 5, 5)) == cat.aux["w15"]
    assert sd.image(1, (3, 3)) == cat.aux["p7"]


def test_symbol_dictionary_missing_symbol(catalogs):
    sd = SymbolDictionary(catalogs[1])
    with pytest.raises(KeyError):
        sd.image(0, (3, 3))  # no such symbol at genus 1


@pytest.mark.parametrize("g", [1, 2, 3])
def test_classical_tables_translate_onto_computed(catalogs, catalogs_zero, g):
    cat = catalogs_zero[2] if g == 2 else catalogs[g]
    assert compare_tables(cat, reference.CLASSICAL_TABLE[g]) == {}


def test_classical_row_translation_values(catalogs):
    cat = catalogs[3]
    translated = translate_table(
        cat, [("L3", "L2", {"L1": "P1_3 - l4", "L5": "-3"})]
    )
    coeffs = translated[("L3", "L2")]
    assert coeffs["L1"] == cat.ring.var("y4") - cat.jm.lambda_exprs[4]
    assert coeffs["L5"] == cat.ring.const(-3)


# -- Jacobi identity -------------------------------------------------------------------


@pytest.mark.parametrize("g", [1, 2])
def test_jacobi_all_triples_small_genus(catalogs, g):
    cat = catalogs[g]
    names = cat.names
    for a in range(len(names)):
        for b in range(a + 1, len(names)):
            for c in range(b + 1, len(names)):
                A, B, C = (cat.fields[names[i]] for i in (a, b, c))
                total = (
                    A.bracket(B.bracket(C))
                    + B.bracket(C.bracket(A))
                    + C.bracket(A.bracket(B))
                )
                assert total.is_zero(), (g, names[a], names[b], names[c])
