"""Parameter-space constructions: f, R, T, the fields and the structure matrix."""

import pytest

from hyperlie import divexact
from hyperlie.derivation import verify_bracket_relation
from hyperlie.lambda_space import (
    build_L,
    build_M,
    build_T,
    build_f,
    m_relation_rows,
    t_entry,
)
from hyperlie import reference


def test_build_f_genus1(models):
    m = models[1]
    assert build_f(m) == m.fring.parse("X^3 + l4*X + l6")


def test_build_f_genus3(models):
    m = models[3]
    assert build_f(m) == m.fring.parse(
        "X^7 + l4*X^5 + l6*X^4 + l8*X^3 + l10*X^2 + l12*X + l14"
    )


def test_build_f_has_no_subleading_term(models):
    for g, m in models.items():
        coeffs = build_f(m).coeffs_in("X")
        assert 2 * g not in coeffs


def test_discriminant_genus1(discriminants, models):
    assert discriminants[1] == models[1].ring.parse("4*l4^3 + 27*l6^2")


@pytest.mark.parametrize("g", [1, 2, 3])
def test_discriminant_weight(discriminants, g):
    R = discriminants[g]
    assert not R.is_zero()
    assert R.is_homogeneous_of(reference.r_weight(g))


def test_T_matches_displayed_matrices(models):
    for g, m in models.items():
        T = build_T(m)
        grid = reference.T_MATRIX[g]
        for i, row in enumerate(grid):
            for j, text in enumerate(row):
                assert T.entry(i, j) == m.ring.parse(text), (g, i, j)


def test_T_symmetric_and_weighted(models):
    for g, m in models.items():
        T = build_T(m)
        assert T.is_symmetric()
        for k in range(1, 2 * g + 1):
            for mm in range(1, 2 * g + 1):
                assert T.entry(k - 1, mm - 1).is_homogeneous_of(2 * k + 2 * mm)


def test_t_entry_symmetry_in_indices(models):
    m = models[3]
    for k in range(1, 7):
        for mm in range(1, 7):
            assert t_entry(m, k, mm) == t_entry(m, mm, k)


def test_build_L_genus1(models):
    m = models[1]
    L0 = build_L(m, 0)
    assert L0.on("l4") == m.ring.parse("4*l4")
    assert L0.on("l6") == m.ring.parse("6*l6")
    L2 = build_L(m, 2)
    assert L2.on("l4") == m.ring.parse("6*l6")
    assert L2.on("l6") == m.ring.parse("-4/3*l4^2")


def test_build_L_rejects_bad_index(models):
    with pytest.raises(ValueError):
        build_L(models[1], 4)
    with pytest.raises(ValueError):
        build_L(models[2], 3)


def test_euler_field_eigenvalues(models, lam_fields):
    for g, m in models.items():
        L0 = lam_fields[g][0]
        for s in m.indices:
            assert L0.apply(m.lam(s)) == s * m.lam(s)


def test_euler_brackets(lam_fields):
    for g, fields in lam_fields.items():
        L0 = fields[0]
        for k, L in fields.items():
            assert L0.bracket(L) == L.scale(k)


def test_detT_is_constant_multiple_of_R(models, lam_fields, discriminants, detTs):
    from hyperlie.lambda_space import detT_R_constant

    for g in (1, 2, 3):
        c = detT_R_constant(models[g], detTs[g], discriminants[g])
        assert c == reference.DETT_R_CONSTANT[g]
        # same weight, weight-0 quotient
        assert detTs[g].weight_check() == discriminants[g].weight_check()


def test_tangency_multipliers(models, lam_fields, detTs):
    from hyperlie.lambda_space import tangency_multipliers

    for g in (1, 2, 3):
        expected = [models[g].ring.parse(t)
                    for t in reference.TANGENCY_MULTIPLIERS[g]]
        got = tangency_multipliers(models[g], lam_fields[g], detTs[g])
        assert got == expected


def test_cross_action_symmetry(models, lam_fields):
    # pairwise actions agree across indices, the derivation-level face of
    # the T-matrix symmetry
    for g, fields in lam_fields.items():
        m = models[g]
        for a in fields:
            for b in fields:
                sa, sb = a + 4, b + 4
                if sa in m.indices and sb in m.indices:
                    assert fields[a].apply(m.lam(sb)) == fields[b].apply(m.lam(sa))


# -- genus-3 structure matrix ----------------------------------------------------


def test_build_M_requires_genus3(models):
    with pytest.raises(ValueError):
        build_M(models[2])


def test_M_entry_spot_values(models):
    m = models[3]
    M = build_M(m)
    # row [L2,L4], column L6
    assert M.entry(0, 3) == m.ring.const(2)
    # row [L8,L10], column L0
    assert M.entry(9, 0).is_zero()
    # row [L2,L10], column L8
    assert M.entry(3, 4) == m.ring.parse("-4/7*l4")


def test_M_relation_rows_hold(models, lam_fields):
    rows = m_relation_rows(models[3], lam_fields[3])
    assert len(rows) == 10
    for rel in rows:
        ok, residual = verify_bracket_relation(rel)
        assert ok, (rel.label, residual.to_json_obj())


def test_M_relation_corrupted_entry_fails(models, lam_fields):
    m = models[3]
    rows = m_relation_rows(m, lam_fields[3])
    rel = rows[0]
    rel.expansion[0] = (rel.expansion[0][0] + 1, rel.expansion[0][1])
    ok, _ = verify_bracket_relation(rel)
    assert not ok
