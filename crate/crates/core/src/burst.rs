//! Finite-duration signals: the characteristic information function (CIF),
//! coherent versus occupation-number coding and the linear bounds.
//!
//! The periodic-boundary spectrum `ε_j = 2πj/τ` is parametrised by
//! `b = 2πμ/τ`; `ξ = Ēτ` is the dimensionless signal energy (`ħ = 1`).

use std::f64::consts::{LN_2, PI};

use rayon::prelude::*;
use serde::Serialize;

use crate::numerics::{partition_sums, solve_monotone, Bracket};
use crate::spectra::{ModeSpectrum, Statistics};
use crate::{Error, Result, LOG2_E};

/// Whether the vacuum is a usable symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Heralding {
    /// Arrival time known in advance (`ζ = 0`).
    Heralded,
    /// Must contain at least one quantum (`ζ = 1`).
    SelfHeralding,
}

impl Heralding {
    pub fn zeta(self) -> f64 {
        match self {
            Heralding::Heralded => 0.0,
            Heralding::SelfHeralding => 1.0,
        }
    }
}

/// One solved point of the CIF.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CifPoint {
    pub b: f64,
    pub ln_z: f64,
    pub xi: f64,
    pub imax_bits: f64,
    pub heralding: Heralding,
}

/// `ln(1 − ζ/Z)` for `ln Z > 0`.
fn ln_vacuum_factor(ln_z: f64, heralding: Heralding) -> f64 {
    match heralding {
        Heralding::Heralded => 0.0,
        Heralding::SelfHeralding => (-(-ln_z).exp_m1()).ln(),
    }
}

/// Evaluates `ln Z`, `ξ` and `I_max` at `b`.
///
/// `ξ = 2π (Z/(Z−ζ)) Σ j/(e^{bj}−1)` and `I_max = [bξ/2π + ln(Z−ζ)] log₂e`,
/// with `Z − ζ` handled in log space.
pub fn cif_point(b: f64, heralding: Heralding) -> Result<CifPoint> {
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "b must be finite and > 0, got {b}"
        )));
    }
    let sums = partition_sums(b)?;
    let ln_z = sums.lnz;
    if heralding == Heralding::SelfHeralding && ln_z <= 0.0 {
        return Err(Error::OutOfRange(format!(
            "b = {b}: Z − 1 underflows for a self-heralding signal"
        )));
    }
    let lvf = ln_vacuum_factor(ln_z, heralding);
    let xi = 2.0 * PI * sums.s1 * (-lvf).exp();
    if !(xi.is_finite() && xi > 0.0) {
        return Err(Error::OutOfRange(format!(
            "b = {b}: signal energy out of floating range"
        )));
    }
    let imax_nits = b * xi / (2.0 * PI) + ln_z + lvf;
    Ok(CifPoint {
        b,
        ln_z,
        xi,
        imax_bits: imax_nits.max(0.0) * LOG2_E,
        heralding,
    })
}

const B_MIN: f64 = 1e-6;
const B_MAX: f64 = 50.0;

/// Widens `[lo, hi]` in `ln b` until `g` changes sign or the float range ends.
fn bracket_ln_b<G: Fn(f64) -> Result<f64>>(g: &G) -> Result<Bracket> {
    let (mut lo, mut hi) = (B_MIN.ln(), B_MAX.ln());
    for _ in 0..8 {
        let (g_lo, g_hi) = (g(lo)?, g(hi)?);
        if g_lo.signum() != g_hi.signum() {
            return Ok(Bracket { lo, hi });
        }
        if g_lo < 0.0 {
            lo -= 4.0;
        }
        if g_hi > 0.0 {
            hi = (hi.exp() * 4.0).min(700.0).ln();
        }
    }
    Err(Error::OutOfRange(
        "target outside the reachable range of b".into(),
    ))
}

/// Inverts `ξ(b)` for the given signal energy.
pub fn cif_solve(xi: f64, heralding: Heralding) -> Result<CifPoint> {
    if !(xi.is_finite() && xi > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "xi must be finite and > 0, got {xi}"
        )));
    }
    if heralding == Heralding::SelfHeralding && xi <= 2.0 * PI {
        return Err(Error::OutOfRange(format!(
            "xi = {xi}: a self-heralding signal carries at least one quantum, so xi > 2π"
        )));
    }
    let target = xi.ln();
    // ξ(b) decreases in b; work in ln b for uniform relative accuracy
    let g = |u: f64| -> Result<f64> {
        match cif_point(u.exp(), heralding) {
            Ok(p) => Ok(p.xi.ln() - target),
            // past the representable range ξ is effectively minimal
            Err(Error::OutOfRange(_)) => Ok(-1.0),
            Err(e) => Err(e),
        }
    };
    let bracket = bracket_ln_b(&g)?;
    let mut failure = None;
    let u = solve_monotone(
        |u| match g(u) {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e);
                f64::NAN
            }
        },
        bracket,
        1e-12,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    cif_point(u.exp(), heralding)
}

/// Continuum form `(πξ/3)^{1/2} log₂e`.
pub fn large_xi_bits(xi: f64) -> f64 {
    (PI * xi / 3.0).sqrt() * LOG2_E
}

/// Closed-form heralded CIF `R log₂e − ½ log₂R − 1.18808` for `ξ > 0.12`.
///
/// `R = ½ + (¼ − π²/36 + πξ/3)^{1/2}` is `π²/(3b)` with `b` taken from the
/// three-term Euler–Maclaurin energy.
pub fn cif_closed_heralded(xi: f64) -> Result<f64> {
    if !(xi.is_finite() && xi > 0.12) {
        return Err(Error::OutOfRange(format!(
            "closed-form CIF needs xi > 0.12, got {xi}"
        )));
    }
    let r = 0.5 + (0.25 - PI * PI / 36.0 + PI * xi / 3.0).sqrt();
    Ok(r * LOG2_E - 0.5 * r.log2() - 1.18808)
}

/// Solves `I_max(b) = target` bits on one branch.
fn solve_for_information(target_bits: f64, heralding: Heralding) -> Result<CifPoint> {
    let g = |u: f64| -> Result<f64> {
        match cif_point(u.exp(), heralding) {
            Ok(p) => Ok(p.imax_bits - target_bits),
            Err(Error::OutOfRange(_)) => Ok(-target_bits),
            Err(e) => Err(e),
        }
    };
    let bracket = bracket_ln_b(&g)?;
    let u = solve_monotone(
        |u| g(u).unwrap_or(f64::NAN),
        bracket,
        1e-12 * target_bits.max(1.0),
    )?;
    cif_point(u.exp(), heralding)
}

/// `(I_max, ε_min = ξ/I_max)` along one CIF branch, `ε_min` in units of `ħ/τ`.
///
/// Grid points are independent and evaluated in parallel.
pub fn energy_cost_curve(heralding: Heralding, imax_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    imax_grid
        .par_iter()
        .map(|&i| {
            if !(i.is_finite() && i > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "information must be > 0, got {i}"
                )));
            }
            let p = solve_for_information(i, heralding)?;
            Ok((i, p.xi / p.imax_bits))
        })
        .collect()
}

/// Location of the minimum energy cost per bit on a branch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostMinimum {
    pub point: CifPoint,
    pub cost: f64,
}

/// Golden-section search for the minimum of `ξ/I_max` over `ln b`.
pub fn energy_cost_minimum(heralding: Heralding) -> Result<CostMinimum> {
    let cost = |u: f64| -> f64 {
        cif_point(u.exp(), heralding)
            .map(|p| {
                if p.imax_bits > 0.0 {
                    p.xi / p.imax_bits
                } else {
                    f64::INFINITY
                }
            })
            .unwrap_or(f64::INFINITY)
    };
    // coarse scan, then refine around the best cell
    let (lo, hi) = ((1e-3f64).ln(), 20f64.ln());
    let steps = 400;
    let h = (hi - lo) / steps as f64;
    let best = (0..=steps)
        .map(|k| lo + k as f64 * h)
        .min_by(|&a, &b| cost(a).total_cmp(&cost(b)))
        .expect("non-empty scan");
    let (mut a, mut c) = (best - h, best + h);
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = c - phi * (c - a);
    let mut x2 = a + phi * (c - a);
    let (mut f1, mut f2) = (cost(x1), cost(x2));
    while c - a > 1e-12 {
        if f1 <= f2 {
            c = x2;
            x2 = x1;
            f2 = f1;
            x1 = c - phi * (c - a);
            f1 = cost(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (c - a);
            f2 = cost(x2);
        }
    }
    let point = cif_point((0.5 * (a + c)).exp(), heralding)?;
    if heralding == Heralding::Heralded && point.b >= 20.0 * 0.999 {
        return Err(Error::OutOfRange(
            "heralded cost has no interior minimum; it falls toward zero information".into(),
        ));
    }
    Ok(CostMinimum {
        cost: point.xi / point.imax_bits,
        point,
    })
}

// ---------------------------------------------------------------------------
// Coherent versus occupation-number coding
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StateFamily {
    Occupation,
    Coherent,
}

/// Peak information (bits) of `N = omegas.len()` modes at mean energy `Ē`.
///
/// Coherent: `N log₂e + Σ log₂(Ē/(Nω_j))`; a negative value is reported as
/// an overcompleteness error. Occupation: `μ` from `Ē = Σ ω_j/(e^{μω_j}−1)`,
/// then `μĒ log₂e − Σ log₂(1 − e^{−μω_j})`.
pub fn state_family_imax(family: StateFamily, mean_energy: f64, omegas: &[f64]) -> Result<f64> {
    if !(mean_energy.is_finite() && mean_energy > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "mean energy must be finite and > 0, got {mean_energy}"
        )));
    }
    if omegas.is_empty() {
        return Err(Error::InvalidArgument("need at least one mode".into()));
    }
    if let Some(w) = omegas.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "mode frequency must be > 0, got {w}"
        )));
    }
    let n = omegas.len() as f64;
    match family {
        StateFamily::Coherent => {
            let bits = n * LOG2_E
                + omegas
                    .iter()
                    .map(|w| (mean_energy / (n * w)).log2())
                    .sum::<f64>();
            if bits < 0.0 {
                return Err(Error::Overcompleteness { value: bits });
            }
            Ok(bits)
        }
        StateFamily::Occupation => {
            let energy = |mu: f64| -> f64 { omegas.iter().map(|w| w / (mu * w).exp_m1()).sum() };
            let g = |u: f64| energy(u.exp()).ln() - mean_energy.ln();
            let w_min = omegas.iter().copied().fold(f64::INFINITY, f64::min);
            let w_max = omegas.iter().copied().fold(0.0, f64::max);
            // Ē(μ) runs from N/μ (small μ) down to ~ω e^{−μω} (large μ)
            let lo = (1e-3 * n / mean_energy).min(1e-3 / w_max).ln();
            let hi = ((n / mean_energy).ln().max(1.0) * 10.0 / w_min + 10.0 / w_min).ln();
            let u = solve_monotone(g, Bracket::new(lo, hi)?, 1e-14)?;
            let mu = u.exp();
            let nits = mu * mean_energy
                - omegas
                    .iter()
                    .map(|w| (-(-mu * w).exp()).ln_1p())
                    .sum::<f64>();
            Ok(nits * LOG2_E)
        }
    }
}

/// Equal-frequency occupation closed form
/// `N log₂(1 + Ē/(Nω)) + (Ē/ω) log₂(1 + Nω/Ē)`.
pub fn occupation_equal_omega_bits(mean_energy: f64, n: usize, omega: f64) -> f64 {
    let n = n as f64;
    n * (mean_energy / (n * omega)).ln_1p() * LOG2_E
        + mean_energy / omega * (n * omega / mean_energy).ln_1p() * LOG2_E
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarginRow {
    pub mean_energy: f64,
    pub modes: usize,
    pub occupation_bits: f64,
    /// `None` where the coherent value is formally negative.
    pub coherent_bits: Option<f64>,
    pub margin_bits: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Theorem2Report {
    pub rows: Vec<MarginRow>,
    pub all_nonnegative: bool,
}

/// Occupation-number minus coherent information on a grid of `(Ē, N)`
/// with unit frequencies.
pub fn theorem2_check(
    mean_energy_grid: &[f64],
    mode_count_grid: &[usize],
) -> Result<Theorem2Report> {
    if mean_energy_grid.is_empty() || mode_count_grid.is_empty() {
        return Err(Error::InvalidArgument("grids must be non-empty".into()));
    }
    let mut rows = Vec::new();
    for &e in mean_energy_grid {
        for &n in mode_count_grid {
            let omegas = vec![1.0; n];
            let occ = state_family_imax(StateFamily::Occupation, e, &omegas)?;
            let coh = match state_family_imax(StateFamily::Coherent, e, &omegas) {
                Ok(v) => Some(v),
                Err(Error::Overcompleteness { .. }) => None,
                Err(err) => return Err(err),
            };
            rows.push(MarginRow {
                mean_energy: e,
                modes: n,
                occupation_bits: occ,
                coherent_bits: coh,
                margin_bits: coh.map(|c| occ - c),
            });
        }
    }
    let all_nonnegative = rows
        .iter()
        .all(|r| r.margin_bits.is_none_or(|m| m >= -1e-12));
    Ok(Theorem2Report {
        rows,
        all_nonnegative,
    })
}

// ---------------------------------------------------------------------------
// Linear bounds
// ---------------------------------------------------------------------------

/// `ln Z(μ) = −Σ g ln(1 − e^{−με})` over the spectrum.
pub fn spectrum_ln_z(spectrum: &ModeSpectrum, mu: f64) -> f64 {
    -spectrum
        .levels()
        .iter()
        .map(|l| l.degeneracy as f64 * (-(-mu * l.energy).exp()).ln_1p())
        .sum::<f64>()
}

/// Root `μ` of `channels · ln Z(μ) = target`.
fn solve_mu(spectrum: &ModeSpectrum, channels: f64, target: f64) -> Result<f64> {
    let e1 = spectrum.lowest();
    let g = |u: f64| (channels * spectrum_ln_z(spectrum, u.exp())).ln() - target.ln();
    let (mut lo, mut hi) = ((1e-3 / e1).ln(), (50.0 / e1).ln());
    for _ in 0..40 {
        if g(lo) > 0.0 {
            break;
        }
        lo -= 2.0;
    }
    for _ in 0..40 {
        let v = g(hi);
        if v < 0.0 || v.is_nan() {
            break;
        }
        hi += 1.0;
    }
    let u = solve_monotone(
        |u| {
            let v = g(u);
            // ln Z underflowing to zero means "far below the target"
            if v.is_nan() || v == f64::NEG_INFINITY {
                -1e300
            } else {
                v
            }
        },
        Bracket::new(lo, hi)?,
        1e-14,
    )?;
    Ok(u.exp())
}

/// Light-crossing duration used to turn `μ` into a rate, `2 × length scale`.
///
/// For the periodic spectrum this is exactly the signal duration `τ`.
fn duration(spectrum: &ModeSpectrum) -> Option<f64> {
    spectrum.length_scale().map(|r| 2.0 * r)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LinearBound {
    /// Root of `−Σ g ln(1 − e^{−με}) = ln 2`.
    pub mu: f64,
    /// `μ log₂e / τ`: `İ_max ≤ rate_coeff_bits · E` in bits/s.
    pub rate_coeff_bits: Option<f64>,
    /// `b = 2πμ/τ` (the dimensionless root on the periodic spectrum).
    pub b: Option<f64>,
}

/// Mean-energy linear bound from the self-heralding normalisation `Z = 2`.
pub fn linear_bound_mu(spectrum: &ModeSpectrum) -> Result<LinearBound> {
    if spectrum.statistics() != Statistics::Bose {
        return Err(Error::InvalidArgument(
            "linear bound needs a bose spectrum".into(),
        ));
    }
    let mu = solve_mu(spectrum, 1.0, LN_2)?;
    let tau = duration(spectrum);
    Ok(LinearBound {
        mu,
        rate_coeff_bits: tau.map(|t| mu * LOG2_E / t),
        b: tau.map(|t| 2.0 * PI * mu / t),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Multichannel {
    /// `N` identical channels, only the all-vacuum state excluded.
    Simple(u64),
    /// At least a fraction `r` of channels must carry a quantum.
    Blurred(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultichannelBound {
    pub mu: f64,
    /// Exact bound coefficient `μ log₂e/τ` (bits/s per unit energy).
    pub rate_coeff_bits: Option<f64>,
    /// Large-`N` form `log₂(N/ln 2)/2π` (simple mode only).
    pub large_n_coeff_bits: Option<f64>,
    /// `G(r)` (blurred mode only).
    pub g: Option<f64>,
    /// `α(r) = 2πμ/τ`; the bound is `α E/2π` in nits/s (blurred mode only).
    pub alpha: Option<f64>,
}

/// `G(r) = r(1−r)^{−1}|ln r| + |ln(1−r)|`.
pub fn blur_g(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "filling fraction must lie in (0, 1), got {r}"
        )));
    }
    Ok(r / (1.0 - r) * r.ln().abs() + (1.0 - r).ln().abs())
}

pub fn multichannel_bounds(
    mode: Multichannel,
    spectrum: &ModeSpectrum,
) -> Result<MultichannelBound> {
    let tau = duration(spectrum);
    match mode {
        Multichannel::Simple(n) => {
            if n == 0 {
                return Err(Error::InvalidArgument("need at least one channel".into()));
            }
            let mu = solve_mu(spectrum, n as f64, LN_2)?;
            Ok(MultichannelBound {
                mu,
                rate_coeff_bits: tau.map(|t| mu * LOG2_E / t),
                large_n_coeff_bits: Some((n as f64 / LN_2).log2() / (2.0 * PI)),
                g: None,
                alpha: None,
            })
        }
        Multichannel::Blurred(r) => {
            let g = blur_g(r)?;
            let mu = solve_mu(spectrum, 1.0, g)?;
            Ok(MultichannelBound {
                mu,
                rate_coeff_bits: tau.map(|t| mu * LOG2_E / t),
                large_n_coeff_bits: None,
                g: Some(g),
                alpha: tau.map(|t| 2.0 * PI * mu / t),
            })
        }
    }
}
