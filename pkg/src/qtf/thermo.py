"""Thermodynamic energy-budget calculator with a discrepancy auditor.

Implements the closed-form bounds exactly as written:

* Landauer erasure cost          E = k_B * T * ln 2 per bit
* thermal decoherence rate       gamma = k_B * T / hbar
* minimum sustain energy         E = hbar / tau
* macroscopic coherence cost     E = N * k_B * T   (lower bound, ">~")
* speed-limit minimum energy     E = h / (4*t), per frame N * h / (4*t)
* dynamic rendering rate         E = e * N * f

Where the source publication also states a numeric magnitude for one of
these quantities, the computed value is authoritative and the stated
figure is retained only as an audit target; the auditor flags any
relative gap above 10%.  Known outcomes on the stated default inputs:
the decoherence rate and the per-frame speed-limit energy are both
irreproducible from their own formulas and get flagged, the others
agree to within a few percent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import PhysConsts, get_consts
from .errors import DomainError

# Relative gap above which the auditor flags a quantity.
FLAG_THRESHOLD = 0.10

# Stated magnitudes for quantities the budget computes, used as audit
# targets.  erase_total and per_frame assume the stated 1e6-bit symbolic
# unit; decoherence_rate and erase_per_bit assume 300 K; min_sustain
# assumes tau = 1 ms; dynamic_rate is the stated worked product for
# 6e-14 J/mode/frame * 1e23 modes * 60 Hz.
STATED_MAGNITUDES: dict[str, float] = {
    "erase_per_bit": 3e-21,
    "erase_total": 3e-15,
    "decoherence_rate": 4e12,
    "min_sustain": 1e-31,
    "per_frame": 1e20,
    "dynamic_rate": 3.6e11,
}

# Read-only biological / scene reference constants.  No biology is
# modeled; these feed asymmetry_ratio defaults and the report tables.
# dynamic_rate_divergence_claim is the alternative ">> 1e25 J/s" figure
# stated alongside the computed 3.6e11; both are reported, neither is
# adjudicated here.
BIO_REFERENCE: dict[str, float] = {
    "phototransduction_j_per_photon": 1e-16,
    "signal_stabilization_j_per_dot": 1e-6,
    "collapsed_dot_j": 1e-3,
    "wave_scene_j": 1e8,
    "collapsed_scene_j": 1e4,
    "dynamic_rate_divergence_claim_w": 1e25,
}


@dataclass(frozen=True)
class ThermoQuery:
    """Inputs to the budget; defaults are the stated reference inputs."""

    temperature: float = 300.0             # K
    bits: float = 1e6                      # bits per rendered symbolic unit
    n_modes: float = 1e23                  # interacting degrees of freedom
    sustain_time: float = 1e-3             # s
    frame_rate: float = 60.0               # Hz
    energy_per_mode_per_frame: float = 6e-14  # J (opaque stated parameter)

    def __post_init__(self) -> None:
        if not (math.isfinite(self.temperature) and self.temperature > 0):
            raise DomainError(f"temperature must be > 0, got {self.temperature}")
        for name in ("bits", "n_modes"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise DomainError(f"{name} must be >= 0, got {value}")
        for name in ("sustain_time", "frame_rate"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be > 0, got {value}")
        e = self.energy_per_mode_per_frame
        if not (math.isfinite(e) and e >= 0):
            raise DomainError(f"energy_per_mode_per_frame must be >= 0, got {e}")


@dataclass(frozen=True)
class EnergyBudget:
    """All computed cost components for one query (SI units)."""

    erase_per_bit: float      # J
    erase_total: float        # J
    decoherence_rate: float   # Hz
    min_sustain: float        # J
    coherence_cost: float     # J
    ml_min_energy: float      # J
    per_frame: float          # J
    dynamic_rate: float       # J/s


@dataclass(frozen=True)
class DiscrepancyRecord:
    """One computed-vs-stated comparison; flagged when the gap is > 10%."""

    quantity: str
    computed: float
    stated: float
    relative_gap: float
    flagged: bool


def landauer_cost(
    temperature: float, bits: float, consts: PhysConsts | None = None
) -> tuple[float, float]:
    """Minimum erasure cost: (per-bit k_B*T*ln2, total for ``bits``)."""
    if not (math.isfinite(temperature) and temperature > 0):
        raise DomainError(f"temperature must be > 0, got {temperature}")
    if not (math.isfinite(bits) and bits >= 0):
        raise DomainError(f"bits must be >= 0, got {bits}")
    consts = consts or get_consts()
    per_bit = consts.k_b * temperature * math.log(2.0)
    return per_bit, bits * per_bit


def decoherence_rate(temperature: float, consts: PhysConsts | None = None) -> float:
    """Thermal decoherence rate k_B*T/hbar in Hz."""
    if not (math.isfinite(temperature) and temperature > 0):
        raise DomainError(f"temperature must be > 0, got {temperature}")
    consts = consts or get_consts()
    return consts.k_b * temperature / consts.hbar


def min_sustain_energy(sustain_time: float, consts: PhysConsts | None = None) -> float:
    """Minimum energy hbar/tau to sustain coherence for ``sustain_time``."""
    if not (math.isfinite(sustain_time) and sustain_time > 0):
        raise DomainError(f"sustain_time must be > 0, got {sustain_time}")
    consts = consts or get_consts()
    return consts.hbar / sustain_time


def coherence_cost(
    n_modes: float, temperature: float, consts: PhysConsts | None = None
) -> float:
    """Entropic lower bound N*k_B*T to hold N modes coherent (">~")."""
    if not (math.isfinite(n_modes) and n_modes >= 0):
        raise DomainError(f"n_modes must be >= 0, got {n_modes}")
    if not (math.isfinite(temperature) and temperature > 0):
        raise DomainError(f"temperature must be > 0, got {temperature}")
    consts = consts or get_consts()
    return n_modes * consts.k_b * temperature


def ml_bound(
    transition_time: float,
    n_transitions: float,
    consts: PhysConsts | None = None,
) -> tuple[float, float]:
    """Speed-limit minimum energy h/(4*t) and per-frame N*h/(4*t)."""
    if not (math.isfinite(transition_time) and transition_time > 0):
        raise DomainError(f"transition_time must be > 0, got {transition_time}")
    if not (math.isfinite(n_transitions) and n_transitions >= 0):
        raise DomainError(f"n_transitions must be >= 0, got {n_transitions}")
    consts = consts or get_consts()
    ml_min = consts.h / (4.0 * transition_time)
    return ml_min, n_transitions * ml_min


def dynamic_rendering_rate(
    energy_per_mode_per_frame: float, n_modes: float, frame_rate: float
) -> float:
    """Continuous rendering power e * N * f in J/s."""
    for name, value in (
        ("energy_per_mode_per_frame", energy_per_mode_per_frame),
        ("n_modes", n_modes),
        ("frame_rate", frame_rate),
    ):
        if not (math.isfinite(value) and value >= 0):
            raise DomainError(f"{name} must be >= 0, got {value}")
    return energy_per_mode_per_frame * n_modes * frame_rate


def asymmetry_ratio(
    w_wave: float = BIO_REFERENCE["wave_scene_j"],
    w_collapsed: float = BIO_REFERENCE["collapsed_scene_j"],
) -> float:
    """Wave-vs-collapsed rendering cost ratio for one scene."""
    if not (math.isfinite(w_wave) and w_wave >= 0):
        raise DomainError(f"w_wave must be >= 0, got {w_wave}")
    if not (math.isfinite(w_collapsed) and w_collapsed > 0):
        raise DomainError(f"w_collapsed must be > 0, got {w_collapsed}")
    return w_wave / w_collapsed


def compute_budget(
    query: ThermoQuery | None = None, consts: PhysConsts | None = None
) -> EnergyBudget:
    """Evaluate every budget component for one query.

    The per-frame speed-limit energy uses ``bits`` as the transition
    count, matching the stated per-symbolic-unit usage.
    """
    query = query or ThermoQuery()
    consts = consts or get_consts()
    erase_per_bit, erase_total = landauer_cost(query.temperature, query.bits, consts)
    ml_min, per_frame = ml_bound(1.0 / query.frame_rate, query.bits, consts)
    return EnergyBudget(
        erase_per_bit=erase_per_bit,
        erase_total=erase_total,
        decoherence_rate=decoherence_rate(query.temperature, consts),
        min_sustain=min_sustain_energy(query.sustain_time, consts),
        coherence_cost=coherence_cost(query.n_modes, query.temperature, consts),
        ml_min_energy=ml_min,
        per_frame=per_frame,
        dynamic_rate=dynamic_rendering_rate(
            query.energy_per_mode_per_frame, query.n_modes, query.frame_rate
        ),
    )


def audit_against_paper(
    budget: EnergyBudget, stated: dict[str, float] | None = None
) -> list[DiscrepancyRecord]:
    """Compare computed budget fields against stated magnitudes.

    Only meaningful when the budget was computed from the stated default
    inputs; one record per quantity with a stated magnitude, in a fixed
    order.
    """
    stated = STATED_MAGNITUDES if stated is None else stated
    records = []
    for quantity, target in stated.items():
        computed = getattr(budget, quantity)
        gap = abs(computed - target) / abs(target)
        records.append(
            DiscrepancyRecord(
                quantity=quantity,
                computed=computed,
                stated=target,
                relative_gap=gap,
                flagged=gap > FLAG_THRESHOLD,
            )
        )
    return records
