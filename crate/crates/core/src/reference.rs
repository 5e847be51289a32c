//! Reference values, used only to report deviations.
//!
//! Nothing in the library computes from these numbers.

#![allow(clippy::approx_constant)]

/// One reference row of the peak-specific-entropy table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceRow {
    pub field: &'static str,
    pub cavity: &'static str,
    pub boundary: &'static str,
    /// `(H/E)_max`.
    pub peak: f64,
    /// `[ζ(4)]^{1/4}`.
    pub estimate: f64,
    /// `2πR`.
    pub two_pi_r: f64,
    /// Relative tolerance used when comparing computed values.
    pub tolerance: f64,
}

const fn row(
    field: &'static str,
    cavity: &'static str,
    boundary: &'static str,
    peak: f64,
    estimate: f64,
    two_pi_r: f64,
    tolerance: f64,
) -> ReferenceRow {
    ReferenceRow {
        field,
        cavity,
        boundary,
        peak,
        estimate,
        two_pi_r,
        tolerance,
    }
}

/// Reference table rows, in the order of [`crate::counting::table1_cases`].
pub const TABLE1: [ReferenceRow; 9] = [
    row(
        "scalar",
        "unit sphere",
        "Dirichlet",
        0.454,
        0.476,
        6.283,
        0.02,
    ),
    row(
        "scalar",
        "unit sphere",
        "Neumann",
        0.701,
        0.721,
        6.283,
        0.02,
    ),
    row(
        "electromagnetic",
        "unit sphere",
        "conducting",
        0.716,
        0.749,
        6.283,
        0.02,
    ),
    row("neutrino", "unit sphere", "bag", 0.547, 0.566, 6.283, 0.05),
    row("scalar", "1x1x1", "Dirichlet", 0.269, 0.280, 5.441, 0.02),
    row(
        "scalar",
        "1x0.95x0.9",
        "Dirichlet",
        0.249,
        0.266,
        5.174,
        0.02,
    ),
    row("scalar", "1x0.95x0.9", "Neumann", 0.428, 0.457, 5.174, 0.02),
    row(
        "electromagnetic",
        "1x0.95x0.9",
        "conducting",
        0.365,
        0.380,
        5.174,
        0.02,
    ),
    row(
        "scalar",
        "1x0.66x0.2",
        "Dirichlet",
        0.122,
        0.131,
        3.828,
        0.02,
    ),
];

/// Blurred multichannel `α(r)` for `r = 10⁻³, 10⁻², 10⁻¹, ½`.
pub const BLURRED_ALPHA: [(f64, f64); 4] = [(1e-3, 4.85), (1e-2, 2.95), (1e-1, 1.41), (0.5, 0.645)];

/// `μπħ/τ` at the root of the self-heralding normalisation.
pub const LINEAR_ROOT_HALF_B: f64 = 0.4931;

/// Linear-bound coefficient, bits/s per unit energy.
pub const LINEAR_COEFFICIENT: f64 = 0.2279;

/// Continuum CIF at `ξ = 10⁴`, bits.
pub const CIF_XI_1E4_BITS: f64 = 147.6;

/// Self-heralding CIF at `ξ = 10`, bits.
pub const CIF_SELF_XI_10_BITS: f64 = 2.0;

/// Self-heralding minimum energy cost per bit (`ħ/τ`) and its location (bits).
pub const SELF_COST_MINIMUM: (f64, f64) = (4.39, 3.5);

/// One-particle coefficients: well, rotator, oscillator.
pub const ONE_PARTICLE: [f64; 3] = [0.119, 0.499, 0.369];

/// Rotator `I*R*` values for `j* = 1, 2, 3`.
pub const ROTATOR_SEQUENCE: [f64; 3] = [1.08, 5.24, 13.4];

/// Segment field peak `(H/E)_max` in units of `L/ħc`.
pub const LINE_FIELD_PEAK: f64 = 0.216;

/// Soliton bound coefficient.
pub const SOLITON_COEFFICIENT: f64 = 0.416;

/// Hadron gas peak `(H/E)_max`, MeV⁻¹.
pub const HADRON_PEAK: f64 = 0.007;

/// Crossover of the single-mode heuristic `(x*, f*)`.
pub const CROSSOVER: (f64, f64) = (3.92, 1.16);
