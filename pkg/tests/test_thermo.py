import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qtf.constants import get_consts
from qtf.errors import DomainError
from qtf.thermo import (
    BIO_REFERENCE,
    STATED_MAGNITUDES,
    ThermoQuery,
    asymmetry_ratio,
    audit_against_paper,
    coherence_cost,
    compute_budget,
    decoherence_rate,
    dynamic_rendering_rate,
    landauer_cost,
    min_sustain_energy,
    ml_bound,
)

# Frozen extended-precision oracle values (50-digit arithmetic):
#   k_B * 300 * ln 2      = 2.8709788850787238e-21
#   k_B * 300 / (h/2pi)   = 3.9276101738096701e13
#   (h/2pi) / 1e-3        = 1.0545718176461564e-31
#   1e23 * k_B * 300      = 414.1947
#   h * 60 / 4            = 9.939105225e-33
ERASE_PER_BIT_300K = 2.8709788850787238e-21
DECOHERENCE_300K = 3.9276101738096701e13
MIN_SUSTAIN_1MS = 1.0545718176461564e-31
COHERENCE_1E23_300K = 414.1947
ML_MIN_60HZ = 9.939105225e-33

temps = st.floats(min_value=1e-3, max_value=1e6)
counts = st.floats(min_value=0.0, max_value=1e30)
scales = st.floats(min_value=1e-6, max_value=1e6)


class TestLandauer:
    def test_single_bit_oracle(self):
        per_bit, total = landauer_cost(300.0, 1.0)
        assert per_bit == pytest.approx(ERASE_PER_BIT_300K, rel=1e-12)
        assert total == per_bit

    def test_megabit_total(self):
        _, total = landauer_cost(300.0, 1e6)
        assert total == pytest.approx(2.8709788850787238e-15, rel=1e-12)
        # one-significant-figure agreement with the stated 3e-15
        assert f"{total:.0e}" == "3e-15"

    def test_zero_bits(self):
        assert landauer_cost(300.0, 0.0)[1] == 0.0

    def test_rejects_nonpositive_temperature(self):
        with pytest.raises(DomainError):
            landauer_cost(0.0, 1.0)

    @given(t=temps)
    @settings(deadline=None)
    def test_per_bit_over_kbt_is_ln2(self, t):
        per_bit, _ = landauer_cost(t, 1.0)
        assert per_bit / (get_consts().k_b * t) == pytest.approx(math.log(2), rel=1e-12)

    @given(t=temps, bits=counts, k=scales)
    @settings(deadline=None)
    def test_linear_in_bits(self, t, bits, k):
        _, total = landauer_cost(t, bits)
        _, scaled = landauer_cost(t, k * bits)
        assert scaled == pytest.approx(k * total, rel=1e-12)


class TestDecoherenceRate:
    def test_room_temperature_oracle(self):
        assert decoherence_rate(300.0) == pytest.approx(DECOHERENCE_300K, rel=1e-12)

    def test_linear_in_temperature(self):
        assert decoherence_rate(30.0) == pytest.approx(DECOHERENCE_300K / 10, rel=1e-12)

    def test_rejects_nonpositive_temperature(self):
        with pytest.raises(DomainError):
            decoherence_rate(-5.0)


class TestMinSustain:
    def test_one_millisecond_oracle(self):
        e = min_sustain_energy(1e-3)
        assert e == pytest.approx(MIN_SUSTAIN_1MS, rel=1e-12)
        assert e == pytest.approx(1.055e-31, rel=1e-3)

    def test_one_second_equals_hbar(self):
        assert min_sustain_energy(1.0) == get_consts().hbar

    def test_inverse_scaling(self):
        assert min_sustain_energy(1e-6) == pytest.approx(MIN_SUSTAIN_1MS * 1e3, rel=1e-12)

    def test_rejects_nonpositive_time(self):
        with pytest.raises(DomainError):
            min_sustain_energy(0.0)


class TestCoherenceCost:
    def test_avogadro_scale_oracle(self):
        assert coherence_cost(1e23, 300.0) == pytest.approx(COHERENCE_1E23_300K, rel=1e-12)

    def test_zero_modes(self):
        assert coherence_cost(0.0, 300.0) == 0.0

    def test_single_mode_is_kbt(self):
        consts = get_consts()
        assert coherence_cost(1.0, 300.0) == consts.k_b * 300.0

    @given(n=counts, t=temps, k=scales)
    @settings(deadline=None)
    def test_linear_in_modes(self, n, t, k):
        assert coherence_cost(k * n, t) == pytest.approx(k * coherence_cost(n, t), rel=1e-12)


class TestMlBound:
    def test_single_transition_oracle(self):
        ml_min, per_frame = ml_bound(1.0 / 60.0, 1.0)
        assert ml_min == pytest.approx(ML_MIN_60HZ, rel=1e-12)
        assert per_frame == ml_min

    def test_megabit_frame(self):
        _, per_frame = ml_bound(1.0 / 60.0, 1e6)
        assert per_frame == pytest.approx(9.939105225e-27, rel=1e-12)

    def test_exact_inversion(self):
        consts = get_consts()
        ml_min, _ = ml_bound(consts.h / 4.0, 1.0)
        assert ml_min == pytest.approx(1.0, rel=1e-12)

    def test_rejects_nonpositive_time(self):
        with pytest.raises(DomainError):
            ml_bound(0.0, 1.0)

    @given(t=st.floats(min_value=1e-12, max_value=1e6))
    @settings(deadline=None)
    def test_inversion_identity(self, t):
        ml_min, _ = ml_bound(t, 1.0)
        assert ml_min * 4.0 * t / get_consts().h == pytest.approx(1.0, rel=1e-12)


class TestDynamicRate:
    def test_stated_inputs(self):
        assert dynamic_rendering_rate(6e-14, 1e23, 60.0) == pytest.approx(3.6e11, rel=1e-12)

    def test_zero_modes(self):
        assert dynamic_rendering_rate(1.0, 0.0, 60.0) == 0.0

    def test_identity_case(self):
        assert dynamic_rendering_rate(1.0, 1.0, 1.0) == 1.0

    @given(e=st.floats(min_value=0, max_value=1e3), n=counts, f=temps, k=scales)
    @settings(deadline=None)
    def test_linear_in_rate(self, e, n, f, k):
        assert dynamic_rendering_rate(e, n, k * f) == pytest.approx(
            k * dynamic_rendering_rate(e, n, f), rel=1e-12
        )


class TestAsymmetryRatio:
    def test_stated_scene_values(self):
        assert asymmetry_ratio(1e8, 1e4) == pytest.approx(1e4, rel=1e-12)

    def test_defaults_use_reference_table(self):
        assert asymmetry_ratio() == pytest.approx(
            BIO_REFERENCE["wave_scene_j"] / BIO_REFERENCE["collapsed_scene_j"], rel=1e-12
        )

    def test_equal_budgets(self):
        assert asymmetry_ratio(1e-3, 1e-3) == 1.0

    def test_zero_numerator(self):
        assert asymmetry_ratio(0.0, 5.0) == 0.0

    def test_rejects_nonpositive_denominator(self):
        with pytest.raises(DomainError):
            asymmetry_ratio(1.0, 0.0)


class TestBudgetAndAudit:
    def test_budget_fields_nonnegative_and_finite(self):
        budget = compute_budget(ThermoQuery())
        for name in vars(budget):
            value = getattr(budget, name)
            assert math.isfinite(value) and value >= 0, f"{name} = {value}"

    @given(
        t=st.floats(min_value=1.0, max_value=1e4),
        bits=st.floats(min_value=0.0, max_value=1e9),
        modes=st.floats(min_value=0.0, max_value=1e26),
        tau=st.floats(min_value=1e-9, max_value=1e3),
        fps=st.floats(min_value=1e-2, max_value=1e4),
    )
    @settings(deadline=None)
    def test_budget_positivity_for_valid_queries(self, t, bits, modes, tau, fps):
        budget = compute_budget(
            ThermoQuery(
                temperature=t, bits=bits, n_modes=modes, sustain_time=tau, frame_rate=fps
            )
        )
        for name in vars(budget):
            value = getattr(budget, name)
            assert math.isfinite(value) and value >= 0, f"{name} = {value}"

    def test_erase_total_consistency(self):
        query = ThermoQuery()
        budget = compute_budget(query)
        assert budget.erase_total == pytest.approx(
            query.bits * budget.erase_per_bit, rel=1e-12
        )

    def test_audit_flags_exactly_the_known_inconsistencies(self):
        records = audit_against_paper(compute_budget(ThermoQuery()))
        by_name = {r.quantity: r for r in records}
        assert set(by_name) == set(STATED_MAGNITUDES)
        flagged = {name for name, r in by_name.items() if r.flagged}
        assert flagged == {"decoherence_rate", "per_frame"}

    def test_audit_gap_values(self):
        records = {r.quantity: r for r in audit_against_paper(compute_budget())}
        assert records["erase_per_bit"].relative_gap == pytest.approx(0.043, abs=0.001)
        assert records["min_sustain"].relative_gap == pytest.approx(0.0546, abs=0.001)
        assert records["decoherence_rate"].relative_gap == pytest.approx(8.82, abs=0.01)
        assert records["per_frame"].relative_gap == pytest.approx(1.0, abs=1e-6)
        assert records["dynamic_rate"].relative_gap < 1e-12

    def test_flag_threshold_boundary(self):
        records = {r.quantity: r for r in audit_against_paper(compute_budget())}
        for name, record in records.items():
            assert record.flagged == (record.relative_gap > 0.10), name

    def test_query_validation(self):
        with pytest.raises(DomainError):
            ThermoQuery(temperature=-1.0)
        with pytest.raises(DomainError):
            ThermoQuery(bits=-1.0)
        with pytest.raises(DomainError):
            ThermoQuery(frame_rate=0.0)
