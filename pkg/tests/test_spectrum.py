import math

import numpy as np
import pytest
from conftest import CASE_I, CASE_III, CASE_IV, MORSE, max_rel, reference_levels, solved

from tietzhua import spectrum as S
from tietzhua.errors import DomainError
from tietzhua.model import Case, MoleculeParams, morse_beta, scale, scale_energy, threshold_ch
from tietzhua.oracle import count_nodes, quad_norm

# Lowest three Numerov levels (cm^-1) on a 80 001-point grid refined twice,
# computed once by the oracle alone and frozen here.
FROZEN = [
    (CASE_I[0], [334.0369036649264, 758.8858870463127, 960.0199358199195]),
    (CASE_III[0], [188.60040963889884, 536.14103302797, 845.2416957887142]),
    (CASE_IV[0], [128.72713658284408, 378.2081404243562, 615.2064223755901]),
    (MORSE, [310.707711558915, 907.3424197657, 1470.9361747544117]),
]

HF = (1.94207, 0.917)
H2 = (1.61890, 0.741)


@pytest.mark.parametrize("params, levels", FROZEN, ids=[p.name for p, _ in FROZEN])
def test_frozen_oracle_levels(params, levels):
    assert max_rel(solved(params).energies[:3], levels) <= 1e-9


# exponents


def test_exponents_at_zero_energy():
    p = MoleculeParams("x", 30_000.0, 1.2, 1.5, 0.25, 1.3)
    sp = scale(p)
    ex = S.exponents_at(sp, 0.0)
    assert ex.lambda_ == pytest.approx(math.sqrt(sp.d_tilde) / 1.5, rel=1e-15)
    assert ex.gamma == pytest.approx(math.sqrt(sp.d_tilde) / (1.5 * 0.25), rel=1e-14)


def test_delta_plus_tends_to_one_as_c_tends_to_one():
    values = [S.exponents_at(scale(MoleculeParams("x", 30_000.0, 1.2, 1.5, c, 1.3)), 100.0).delta_plus
              for c in (0.9, 0.99, 0.999, 0.999999)]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert values[-1] - 1 < 1e-6


def test_exponents_hf_like_mid_well():
    p = MoleculeParams("HF-like", 49_382.0, HF[1], HF[0], 0.17, 0.9570)
    sp = scale(p)
    E = p.D / 2
    ex = S.exponents_at(sp, E)
    d, eps, b, c = sp.d_tilde, E / sp.conv, p.b_h, p.c_h
    assert ex.lambda_ == pytest.approx(math.sqrt((d - eps) / b**2), rel=1e-14)
    assert ex.gamma == pytest.approx(math.sqrt((d / c**2 - eps) / b**2), rel=1e-14)
    assert ex.delta_plus == pytest.approx(0.5 + math.sqrt(0.25 + d / b**2 * (1 - 1 / c) ** 2), rel=1e-14)
    assert ex.delta_minus == pytest.approx(1 - ex.delta_plus, rel=1e-14)
    assert ex.delta_bar_plus == pytest.approx(0.5 + math.sqrt(0.25 + d / b**2 * (1 + 1 / c) ** 2), rel=1e-14)
    assert ex.gamma_bar_plus == ex.gamma
    assert all(math.isfinite(v) for v in vars(ex).values())
    assert ex.lambda_ < ex.gamma


@pytest.mark.parametrize("E", [-1.0, 30_000.0, 40_000.0, math.nan])
def test_exponents_need_bound_energy(E):
    with pytest.raises(DomainError):
        S.exponents_at(scale(MoleculeParams("x", 30_000.0, 1.2, 1.5, 0.25, 1.3)), E)


# case I


@pytest.mark.parametrize("q, expected", [(3.2, 3), (3.0, 2), (0.5, 0), (1e-9, 0), (0.0, -1), (-2.5, -1)])
def test_largest_integer_below(q, expected):
    assert S.largest_integer_below(q) == expected


@pytest.mark.parametrize("params", CASE_I, ids=lambda p: p.name)
def test_case_i_quantization_consistency(params):
    report = solved(params)
    assert report.n_r_max + 1 == len(report.states) == S.count_case_i(params) + 1
    for state in report.states:
        ex = state.exps
        assert ex.lambda_ > 0
        assert abs(ex.gamma - ex.lambda_ - ex.delta_plus - state.n_r) <= 1e-9


def test_case_i_scan_recovers_closed_form():
    params = CASE_I[1]
    sp = scale(params)
    report = solved(params)
    for state in report.states:
        def quantization(E, n=state.n_r):
            ex = S.exponents_at(sp, E)
            return ex.gamma - ex.lambda_ - ex.delta_plus - n

        roots, _ = S.find_roots(quantization, 1e-9 * params.D, params.D * (1 - 1e-9), 2001)
        assert len(roots) == 1
        assert roots[0] == pytest.approx(state.E, rel=1e-10)


def test_case_i_deep_well_matches_oracle():
    params = CASE_I[2]
    assert params.D == 40_000.0 and params.mu == 1.0 and params.b_h == 2.0 and params.r_e == 1.0
    levels = reference_levels(params)
    assert len(levels) == S.count_case_i(params) + 1
    assert max_rel(solved(params).energies, [e for e, _ in levels]) <= 1e-6


def test_case_i_without_bound_states():
    p = MoleculeParams("tiny", 5.0, 1.0, 2.0, 0.9, 1.0)
    report = S.energy_closed_case_i(p)
    assert report.states == [] and report.n_r_max == -1
    assert S.oracle_levels(p) == []


def test_case_i_wavefunction_boundaries():
    params = CASE_I[1]
    r0 = solved(params).regime.r0
    peak = np.max(np.abs(S.wavefunction_case_i(params, 2, np.linspace(r0 + 1e-3, 6.0, 500))))
    assert abs(S.wavefunction_case_i(params, 2, r0 + 1e-7)) < 1e-8 * peak
    assert abs(S.wavefunction_case_i(params, 2, params.r_e + 60 / params.b_h)) < 1e-8 * peak
    with pytest.raises(DomainError):
        S.wavefunction_case_i(params, 2, r0)
    with pytest.raises(DomainError):
        S.wavefunction_case_i(params, S.count_case_i(params) + 1, 1.0)


def test_case_i_solver_rejects_other_regimes():
    with pytest.raises(DomainError):
        S.energy_closed_case_i(CASE_III[0])


# cases III and IV


def test_z0_case_iii_h2_shape():
    p = MoleculeParams("H2", 1000.0, H2[1], H2[0], 0.15, 1.0)
    assert S.z0_case_iii(p) == pytest.approx(0.4978, abs=1e-4)
    assert S.z0_case_iii(p) == pytest.approx(p.c_h / threshold_ch(p), rel=1e-15)


def test_z0_case_iv_h2_shape():
    p = MoleculeParams("H2", 1000.0, H2[1], H2[0], -0.3, 1.0)
    assert S.z0_case_iv(p) == pytest.approx(0.3 / (0.301313237 + 0.3), rel=1e-8)
    assert S.z0_case_iv(p) == pytest.approx(0.49891, abs=1e-5)


@pytest.mark.parametrize("params, value", [(CASE_III[0], S.transcend_value_case_iii),
                                           (CASE_IV[0], S.transcend_value_case_iv)], ids=["III", "IV"])
def test_quantization_function_changes_sign_across_oracle_levels(params, value):
    for E, _ in reference_levels(params)[:-1]:
        below, above = value(params, E * (1 - 1e-6)), value(params, E * (1 + 1e-6))
        assert below.sign * above.sign == -1


@pytest.mark.parametrize("c_h", [0.05, -0.4])
def test_transcendental_deep_well_matches_oracle(c_h):
    params = MoleculeParams("deep", 20_000.0, 1.0, 2.0, c_h, 1.0)
    report = S.solve(params)
    levels = S.oracle_levels(params)
    assert len(report.states) == len(levels) == report.oracle_count
    assert max_rel(report.energies, [e for e, _ in levels]) <= 1e-6
    assert not report.warnings


def test_transcendental_without_bound_states():
    p = MoleculeParams("tiny", 1.0, 1.0, 1.0, 0.05, 1.0)
    report = S.energy_roots_case_iii(p)
    assert report.states == [] and report.oracle_count == 0


@pytest.mark.parametrize("params, wave", [(CASE_III[0], S.wavefunction_case_iii),
                                          (CASE_IV[0], S.wavefunction_case_iv)], ids=["III", "IV"])
def test_root_wavefunction_vanishes_at_origin_and_infinity(params, wave):
    for state in solved(params).states:
        r = S.node_grid(params, state.E)
        peak = np.max(np.abs(wave(params, state.E, r)))
        assert abs(wave(params, state.E, 0.0)) <= 1e-8 * peak
        # past the WKB cut the tail decays at least as fast as exp(-lambda b_h r)
        far = r[-1] + 40.0 / (state.exps.lambda_ * params.b_h)
        assert abs(wave(params, state.E, far)) <= 1e-8 * peak


@pytest.mark.parametrize("params", CASE_III + CASE_IV, ids=lambda p: p.name)
def test_transcendental_report_structure(params):
    report = solved(params)
    energies = report.energies
    assert all(0 < e < params.D for e in energies)
    assert all(a < b for a, b in zip(energies, energies[1:]))
    assert [s.n_r for s in report.states] == list(range(len(energies)))
    assert [s.nodes for s in report.states] == list(range(len(energies)))
    assert all(d.converged for d in report.diagnostics)
    assert not report.warnings


def test_morse_limit_is_monotone():
    ladder = solved(MORSE).energies
    for sign in (1, -1):
        errors = []
        for c in (1e-3, 1e-4, 1e-5):
            report = solved(MORSE.with_ch(sign * c))
            assert len(report.states) == len(ladder)
            errors.append(max_rel(report.energies, ladder))
        assert errors[0] > errors[1] > errors[2]
        assert errors[2] <= 1e-4


def test_case_iii_wavefunction_approaches_morse():
    near = MORSE.with_ch(1e-6)
    for n_r in (0, 3, 8):
        state = solved(near).states[n_r]
        r = S.node_grid(near, state.E)
        th = S.wavefunction_case_iii(near, state.E, r)
        morse = S.wavefunction_morse(MORSE, n_r, r)
        th, morse = th / th[np.argmax(np.abs(th))], morse / morse[np.argmax(np.abs(morse))]
        assert np.max(np.abs(th - morse)) <= 1e-3


# Morse


def test_morse_quantization_consistency():
    report = solved(MORSE)
    sp = scale(MORSE)
    beta = morse_beta(MORSE.b_h, 0.0)
    for state in report.states:
        eps = scale_energy(sp, state.E)
        lhs = 0.5 + (math.sqrt(sp.d_tilde - eps) - math.sqrt(sp.d_tilde)) / beta
        assert lhs == pytest.approx(-state.n_r, abs=1e-12)


def test_morse_deep_ladder_matches_oracle():
    params = MoleculeParams("morse", 40_000.0, 1.0, 2.0, 0.0, 1.0)
    report = S.energy_morse(params)
    levels = S.oracle_levels(params)
    assert len(report.states) == len(levels)
    assert max_rel(report.energies, [e for e, _ in levels]) <= 1e-6
    assert 0 < report.energies[0] < params.D


def test_morse_ground_state_is_pure_exponential():
    sp = scale(MORSE)
    x = math.sqrt(sp.d_tilde) / MORSE.b_h
    r = np.linspace(0.5, 6.0, 40)
    y = 2 * x * np.exp(-MORSE.b_h * (r - MORSE.r_e))
    expected = np.exp(-MORSE.b_h * (x - 0.5) * (r - MORSE.r_e) - y / 2)
    assert np.allclose(S.wavefunction_morse(MORSE, 0, r), expected, rtol=1e-12, atol=0)
    assert S.wavefunction_morse(MORSE, 4, MORSE.r_e + 60 / MORSE.b_h) < 1e-20


def test_morse_without_bound_states():
    report = S.energy_morse(MoleculeParams("tiny", 0.5, 1.0, 2.0, 0.0, 1.0))
    assert report.states == [] and report.n_r_max == -1


# dispatch and normalization


@pytest.mark.parametrize("params, method", [(CASE_I[0], S.CLOSED_FORM), (CASE_III[0], S.TRANSCEND_III),
                                            (CASE_IV[0], S.TRANSCEND_IV), (MORSE, S.MORSE_CLOSED)],
                         ids=["I", "III", "IV", "V"])
def test_solve_dispatch(params, method):
    report = solved(params)
    assert report.method == method
    assert all(s.method == method for s in report.states)


@pytest.mark.parametrize("params", [CASE_III[0], CASE_IV[0], MORSE], ids=lambda p: p.name)
def test_numerical_normalization(params):
    for state in solved(params).states[:3]:
        assert math.isfinite(S.log_norm(params, state))
        r = S.node_grid(params, state.E, cut=S.NORM_CUT)

        def f(x, state=state):
            return S.normalized_wavefunction(params, state, x)

        assert quad_norm(f, float(r[0]), float(r[-1])) == pytest.approx(1.0, abs=1e-8)


def test_normalized_wavefunction_case_i_is_analytic():
    params = CASE_I[0]
    state = solved(params).states[1]
    r = np.linspace(0.8, 3.0, 7)
    assert np.array_equal(S.normalized_wavefunction(params, state, r), S.wavefunction_case_i(params, 1, r))


def test_node_count_on_normalized_curve():
    params = CASE_I[1]
    state = solved(params).states[2]
    r = S.node_grid(params, state.E)
    assert count_nodes(S.normalized_wavefunction(params, state, r)) == 2


def test_regime_reported():
    assert solved(CASE_I[0]).regime.case_id is Case.I
    assert solved(CASE_IV[0]).regime.r0 is None


def test_find_roots_on_sine():
    roots, diagnostics = S.find_roots(math.sin, 0.5, 10.0, 101)
    assert roots == pytest.approx([math.pi, 2 * math.pi, 3 * math.pi], rel=1e-12)
    assert all(d.converged for d in diagnostics)
