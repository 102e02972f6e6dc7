"""Exact quantum mechanics of the equilateral-triangle billiard and its 30-60-90 half."""

__version__ = "0.1.0"

from .spectrum import (
    FULL,
    HALF,
    MINUS,
    PLUS,
    SPECIAL,
    BilliardConfig,
    EnergyLevel,
    QuantumNumbers,
    energy,
    enumerate_levels,
    epsilon,
    k_of_epsilon,
    levels_below,
    weyl_count,
)
from .eigenfunctions import (
    centroid,
    check_symmetry_relations,
    gram_matrix,
    inner_product,
    inside,
    psi,
    psi_special_product,
    triangle_quadrature,
    wall_distance,
)
from .orbits import (
    OrbitClass,
    enumerate_orbits,
    orbit_angle,
    orbit_features,
    orbit_length,
    orbit_length_pq,
)
from .length_spectrum import (
    LengthSpectrum,
    compare_variants,
    compute_rho,
    default_grid,
    detect_peaks,
    match_features,
)
from .wavepacket import (
    AutocorrSeries,
    ExpansionTable,
    GaussianPacket,
    TimescaleSet,
    autocorrelation,
    autocorrelation_at,
    density_snapshot,
    energy_expectation,
    evolve_at_points,
    evolve_on_grid,
    expand,
    gaussian_trig_integral,
    packet_energy,
    revival_scan,
    revival_time,
    timescales_for_packet,
    timescales_for_qn,
)
from .transforms import (
    QNTransform,
    apply_transform,
    canonicalize,
    epsilon_multiplicativity_check,
    in_wedge,
)
