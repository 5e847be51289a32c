//! Steady-state channel capacities, single-mode noisy channels and the
//! linear-bound heuristics.
//!
//! Natural units `ħ = c = k_B = 1`: powers are in inverse-time squared,
//! temperatures and accelerations in inverse time.

use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};
use std::fmt;

use serde::Serialize;

use crate::numerics::{solve_monotone, Bracket};
use crate::{Error, Result, LOG2_E};

/// Mass allowed outside a distribution's support cutoff.
pub const TAIL_TOLERANCE: f64 = 1e-12;

// ---------------------------------------------------------------------------
// Distributions
// ---------------------------------------------------------------------------

/// A probability mass function on `0, 1, …, support_cutoff`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelDistribution {
    probs: Vec<f64>,
}

impl LevelDistribution {
    /// Validates non-negativity and normalisation to `1 ± 1e-12`.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidArgument("distribution has no support".into()));
        }
        if let Some(p) = probs.iter().find(|p| !(p.is_finite() && **p >= 0.0)) {
            return Err(Error::InvalidArgument(format!("invalid probability {p}")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > TAIL_TOLERANCE * 10.0_f64.max(probs.len() as f64 * 1e-3) {
            return Err(Error::InvalidArgument(format!(
                "probabilities sum to {total}, not 1"
            )));
        }
        Ok(Self { probs })
    }

    pub fn point_mass(m: usize) -> Self {
        let mut probs = vec![0.0; m + 1];
        probs[m] = 1.0;
        Self { probs }
    }

    /// `(1 − e^{−a}) e^{−a m}`, cut where the remaining tail `e^{−a(M+1)}`
    /// drops below [`TAIL_TOLERANCE`]. `a = ∞` is the point mass at zero.
    pub fn geometric(a: f64) -> Result<Self> {
        if a.is_nan() || a <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "geometric parameter must be > 0, got {a}"
            )));
        }
        if a == f64::INFINITY {
            return Ok(Self::point_mass(0));
        }
        let cutoff = geometric_cutoff(a);
        let q = (-a).exp();
        let p0 = -(-a).exp_m1();
        let probs: Vec<f64> = (0..=cutoff).map(|m| p0 * q.powi(m as i32)).collect();
        Self::new(probs)
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn support_cutoff(&self) -> usize {
        self.probs.len() - 1
    }

    pub fn prob(&self, m: usize) -> f64 {
        self.probs.get(m).copied().unwrap_or(0.0)
    }

    pub fn mean(&self) -> f64 {
        self.probs
            .iter()
            .enumerate()
            .map(|(m, p)| m as f64 * p)
            .sum()
    }

    /// Distribution of the sum of independent draws from `self` and `other`,
    /// cut at the larger of the two supports.
    pub fn convolve(&self, other: &Self) -> Self {
        let n = self.probs.len().max(other.probs.len());
        let mut out = vec![0.0; n];
        for (i, &p) in self.probs.iter().enumerate() {
            for (j, &q) in other.probs.iter().enumerate().take(n.saturating_sub(i)) {
                out[i + j] += p * q;
            }
        }
        Self { probs: out }
    }

    /// `½ Σ |p − q|` over the union of supports.
    pub fn total_variation(&self, other: &Self) -> f64 {
        let n = self.probs.len().max(other.probs.len());
        0.5 * (0..n)
            .map(|m| (self.prob(m) - other.prob(m)).abs())
            .sum::<f64>()
    }
}

fn geometric_cutoff(a: f64) -> usize {
    // e^{−a(M+1)} < tolerance, with a little margin
    ((-(TAIL_TOLERANCE * 0.1).ln() / a).ceil() as usize).max(1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InfoBase {
    Bits,
    Nits,
}

/// `−Σ p ln p`, in bits or nits. Zero-probability terms contribute nothing.
pub fn entropy(dist: &LevelDistribution, base: InfoBase) -> f64 {
    let nits: f64 = -dist
        .probs()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.ln())
        .sum::<f64>();
    match base {
        InfoBase::Nits => nits,
        InfoBase::Bits => nits * LOG2_E,
    }
}

// ---------------------------------------------------------------------------
// Rates
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RateUnit {
    BitsPerS,
    NitsPerS,
}

impl fmt::Display for RateUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RateUnit::BitsPerS => "bits/s",
            RateUnit::NitsPerS => "nits/s",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Classical,
    Quantum,
    Exact,
}

/// A rate with its unit and the inputs that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CapacityResult {
    pub rate: f64,
    pub unit: RateUnit,
    pub inputs: BTreeMap<String, f64>,
    pub regime: Option<Regime>,
}

impl CapacityResult {
    fn bits(rate: f64, inputs: &[(&str, f64)], regime: Option<Regime>) -> Self {
        Self {
            rate,
            unit: RateUnit::BitsPerS,
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            regime,
        }
    }

    /// The same rate expressed in the other unit.
    pub fn in_unit(&self, unit: RateUnit) -> Self {
        let rate = match (self.unit, unit) {
            (RateUnit::BitsPerS, RateUnit::NitsPerS) => self.rate / LOG2_E,
            (RateUnit::NitsPerS, RateUnit::BitsPerS) => self.rate * LOG2_E,
            _ => self.rate,
        };
        Self {
            rate,
            unit,
            ..self.clone()
        }
    }
}

fn non_negative(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be finite and >= 0, got {v}"
        )))
    }
}

fn strictly_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be finite and > 0, got {v}"
        )))
    }
}

/// Shannon's `(Δω/2π) log₂(1 + P/N)`.
///
/// `N = 0` is rejected: the classical formula diverges there.
pub fn shannon_capacity(delta_omega: f64, p: f64, n: f64) -> Result<CapacityResult> {
    strictly_positive("delta_omega", delta_omega)?;
    non_negative("P", p)?;
    non_negative("N", n)?;
    if n == 0.0 {
        return Err(Error::InvalidArgument(
            "noise power N = 0: the classical capacity diverges".into(),
        ));
    }
    let rate = delta_omega / (2.0 * PI) * (p / n).ln_1p() * LOG2_E;
    Ok(CapacityResult::bits(
        rate,
        &[("delta_omega", delta_omega), ("P", p), ("N", n)],
        Some(Regime::Classical),
    ))
}

/// Thermal noise power `kTΔω/2π`.
pub fn nyquist_noise(t: f64, delta_omega: f64) -> f64 {
    t * delta_omega / (2.0 * PI)
}

/// `f(x) = x^{−1/2} log₂(1 + x)`.
pub fn crossover_f(x: f64) -> f64 {
    x.ln_1p() * LOG2_E / x.sqrt()
}

/// Maximiser and maximum of [`crossover_f`].
pub fn crossover_heuristic() -> (f64, f64) {
    // f′ = 0 ⇔ 2x/(1+x) = ln(1+x)
    let x = solve_monotone(
        |x| 2.0 * x / (1.0 + x) - x.ln_1p(),
        Bracket { lo: 1.0, hi: 10.0 },
        1e-15,
    )
    .expect("crossover root is bracketed");
    (x, crossover_f(x))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Species {
    Bose,
    Fermi,
}

/// Noiseless broadband capacity `(πP/3)^{1/2} log₂e`, smaller by `√2` for
/// fermions.
pub fn pendry_capacity(p: f64, species: Species) -> Result<CapacityResult> {
    non_negative("P", p)?;
    let bose = (PI * p / 3.0).sqrt() * LOG2_E;
    let rate = match species {
        Species::Bose => bose,
        Species::Fermi => bose / 2f64.sqrt(),
    };
    Ok(CapacityResult::bits(
        rate,
        &[("P", p)],
        Some(Regime::Quantum),
    ))
}

/// Model behind an energy-cost-per-bit evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CostModel {
    Shannon { n: f64, delta_omega: f64 },
    Pendry,
    LebedevLevitin { t: f64 },
}

/// Minimal energy per bit at information rate `rate` (bits/s).
pub fn energy_cost_per_bit(model: CostModel, rate: f64) -> Result<f64> {
    non_negative("rate", rate)?;
    Ok(match model {
        CostModel::Shannon { n, delta_omega } => {
            strictly_positive("delta_omega", delta_omega)?;
            non_negative("N", n)?;
            let k = 2.0 * PI * LN_2 / delta_omega;
            if rate == 0.0 {
                n * k
            } else {
                n * (k * rate).exp_m1() / rate
            }
        }
        CostModel::Pendry => 3.0 * LN_2 * LN_2 / PI * rate,
        CostModel::LebedevLevitin { t } => {
            non_negative("T", t)?;
            (t + 3.0 / PI * rate) * LN_2
        }
    })
}

/// Thermal-noise broadband capacity `(πT/6){[1 + 12P/(πT²)]^{1/2} − 1} log₂e`.
pub fn lebedev_levitin_capacity(p: f64, t: f64) -> Result<CapacityResult> {
    non_negative("P", p)?;
    non_negative("T", t)?;
    if t == 0.0 {
        let mut r = pendry_capacity(p, Species::Bose)?;
        r.inputs.insert("T".into(), 0.0);
        return Ok(r);
    }
    // (πT/6)(√(1+u) − 1) written as (πT/6)·u/(√(1+u) + 1) to keep low-P accuracy
    let u = 12.0 * p / (PI * t * t);
    let rate = PI * t / 6.0 * u / ((1.0 + u).sqrt() + 1.0) * LOG2_E;
    Ok(CapacityResult::bits(
        rate,
        &[("P", p), ("T", t)],
        Some(Regime::Exact),
    ))
}

/// Thermal noise power of a broadband channel, `πT²/12`.
pub fn thermal_noise_power(t: f64) -> f64 {
    PI * t * t / 12.0
}

/// Noise-agnostic bounds on the capacity for signal power `P` and noise
/// power `N`, in bits/s: `(lower, upper)`.
pub fn noncommittal_bounds(p: f64, n: f64) -> Result<(f64, f64)> {
    non_negative("P", p)?;
    non_negative("N", n)?;
    let upper = (PI * p / 3.0).sqrt() * LOG2_E;
    if p == 0.0 {
        return Ok((0.0, 0.0));
    }
    if n == 0.0 {
        return Ok((upper, upper));
    }
    let s = p / n;
    let factor = s / ((1.0 + s).sqrt() + 1.0) / s.sqrt();
    Ok((upper * factor, upper))
}

/// [`noncommittal_bounds`] with the thermal noise power of temperature `T`.
pub fn lebedev_levitin_bounds(p: f64, t: f64) -> Result<(f64, f64)> {
    noncommittal_bounds(p, thermal_noise_power(t))
}

// ---------------------------------------------------------------------------
// Single noisy mode
// ---------------------------------------------------------------------------

/// Maximum entropy `β/(e^β−1) − ln(1−e^{−β})` of a geometric distribution.
pub fn geometric_entropy(beta: f64) -> f64 {
    if beta == f64::INFINITY {
        return 0.0;
    }
    beta / beta.exp_m1() - (-(-beta).exp()).ln_1p()
}

/// One mode with thermal noise parameter `α` and mean signal quanta `n̄`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NoisyModeChannel {
    pub alpha: f64,
    pub n_bar_in: f64,
    pub beta: f64,
}

impl NoisyModeChannel {
    /// `α = ∞` is the noiseless channel.
    pub fn new(alpha: f64, n_bar_in: f64) -> Result<Self> {
        if alpha.is_nan() || alpha <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "alpha must be > 0, got {alpha}"
            )));
        }
        non_negative("n_bar_in", n_bar_in)?;
        let noise_mean = noise_mean(alpha);
        let total = noise_mean + n_bar_in;
        let beta = if total == 0.0 {
            f64::INFINITY
        } else if n_bar_in == 0.0 {
            alpha
        } else {
            (1.0 / total).ln_1p()
        };
        Ok(Self {
            alpha,
            n_bar_in,
            beta,
        })
    }

    pub fn noise_distribution(&self) -> Result<LevelDistribution> {
        LevelDistribution::geometric(self.alpha)
    }

    pub fn output_distribution(&self) -> Result<LevelDistribution> {
        LevelDistribution::geometric(self.beta)
    }

    /// The optimal input distribution.
    pub fn input_distribution(&self) -> Result<LevelDistribution> {
        if self.n_bar_in == 0.0 {
            return Ok(LevelDistribution::point_mass(0));
        }
        theorem1_distribution(self.alpha, self.beta, None)
    }
}

fn noise_mean(alpha: f64) -> f64 {
    if alpha == f64::INFINITY {
        0.0
    } else {
        1.0 / alpha.exp_m1()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SingleModeInfo {
    pub imax_nits: f64,
    /// `(lower, upper)` bounds valid for any noise of the same mean.
    pub bounds: (f64, f64),
}

/// Peak information per mode for thermal noise.
pub fn single_mode_info(channel: &NoisyModeChannel) -> SingleModeInfo {
    let h_out = geometric_entropy(channel.beta);
    let h_noise = geometric_entropy(channel.alpha);
    let imax = if channel.n_bar_in == 0.0 {
        0.0
    } else {
        h_out - h_noise
    };
    SingleModeInfo {
        imax_nits: imax,
        bounds: (imax, h_out),
    }
}

/// Narrowband capacity with thermal noise.
///
/// `n = 2πP_ω/ω` input quanta per mode, `x = ω/T`; `T = 0` is the noiseless
/// quantum limit.
pub fn narrowband_capacity(
    delta_omega: f64,
    omega: f64,
    p_omega: f64,
    t: f64,
) -> Result<CapacityResult> {
    strictly_positive("omega", omega)?;
    non_negative("delta_omega", delta_omega)?;
    non_negative("P_omega", p_omega)?;
    non_negative("T", t)?;
    let inputs = [
        ("delta_omega", delta_omega),
        ("omega", omega),
        ("P_omega", p_omega),
        ("T", t),
    ];
    let n = 2.0 * PI * p_omega / omega;
    if n == 0.0 {
        return Ok(CapacityResult::bits(0.0, &inputs, Some(Regime::Exact)));
    }
    let x = if t == 0.0 { f64::INFINITY } else { omega / t };
    // q = e^{−x}; every term rewritten to stay finite as q → 0
    let q = (-x).exp();
    let one_minus_q = -(-x).exp_m1();
    let thermal = if q == 0.0 { 0.0 } else { q / one_minus_q };
    let x_term = if q == 0.0 { 0.0 } else { x * q / one_minus_q };
    let ratio = one_minus_q / (n * one_minus_q + q);
    let nits = (n * one_minus_q).ln_1p() + (n + thermal) * ratio.ln_1p() - x_term;
    let rate = delta_omega / (2.0 * PI) * nits * LOG2_E;
    Ok(CapacityResult::bits(
        rate.max(0.0),
        &inputs,
        Some(Regime::Exact),
    ))
}

/// Classical limit `(Δω/2π) log₂(1 + 2πP_ω/T)`.
pub fn narrowband_classical(delta_omega: f64, p_omega: f64, t: f64) -> f64 {
    delta_omega / (2.0 * PI) * (2.0 * PI * p_omega / t).ln_1p() * LOG2_E
}

/// Quantum limit `(Δω/2π)[log₂(1+n) + n log₂(1+1/n)]`, `n = 2πP_ω/ω`.
pub fn narrowband_quantum(delta_omega: f64, omega: f64, p_omega: f64) -> f64 {
    let n = 2.0 * PI * p_omega / omega;
    if n == 0.0 {
        return 0.0;
    }
    delta_omega / (2.0 * PI) * (n.ln_1p() + n * (1.0 / n).ln_1p()) * LOG2_E
}

/// Input law that turns geometric(α) noise into geometric(β) output.
///
/// `Q(0) = (1−e^{−β})/(1−e^{−α})`, `Q(m) = Q(0)(1−e^{β−α})e^{−βm}` for
/// `m ≥ 1`. The support grows until the neglected tail is below 1e-12;
/// `mmax` forces a larger cutoff.
pub fn theorem1_distribution(
    alpha: f64,
    beta: f64,
    mmax: Option<usize>,
) -> Result<LevelDistribution> {
    if alpha.is_nan() || alpha <= 0.0 || !(beta.is_finite() && beta > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "need alpha > 0 and finite beta > 0, got alpha={alpha}, beta={beta}"
        )));
    }
    if beta >= alpha {
        return Err(Error::InvalidArgument(format!(
            "beta must be below alpha, got beta={beta} >= alpha={alpha}"
        )));
    }
    let cutoff = geometric_cutoff(beta).max(mmax.unwrap_or(0));
    let q0 = if alpha == f64::INFINITY {
        -(-beta).exp_m1()
    } else {
        (-beta).exp_m1() / (-alpha).exp_m1()
    };
    let factor = if alpha == f64::INFINITY {
        1.0
    } else {
        -(beta - alpha).exp_m1()
    };
    let probs: Vec<f64> = (0..=cutoff)
        .map(|m| {
            if m == 0 {
                q0
            } else {
                q0 * factor * (-beta * m as f64).exp()
            }
        })
        .collect();
    LevelDistribution::new(probs)
}

// ---------------------------------------------------------------------------
// Linear-bound heuristics
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinearBoundHeuristics {
    /// `(E/2π) log₂(1+4π)` bits/s.
    pub bremermann: f64,
    /// `2πE log₂e` bits/s from the entropy bound and causality.
    pub bulk_transport: f64,
    /// Bose-counting bound on the information, in bits, at `(E, ε, Δε)`.
    pub heuristic_rhs: f64,
    /// `heuristic_rhs / τ`.
    pub heuristic_rate: f64,
    /// Largest possible bracket, `2 max f`.
    pub bracket_max: f64,
    /// `bracket_max / √(2π)`, the coefficient of `E` in the rate bound.
    pub heuristic_coefficient: f64,
    /// `heuristic_coefficient · E` bits/s.
    pub heuristic_rate_bound: f64,
}

pub fn linear_bound_heuristics(
    e: f64,
    tau: f64,
    eps: f64,
    deps: f64,
) -> Result<LinearBoundHeuristics> {
    strictly_positive("E", e)?;
    strictly_positive("tau", tau)?;
    strictly_positive("eps", eps)?;
    strictly_positive("deps", deps)?;
    let x = deps / eps;
    let bracket = crossover_f(x) + crossover_f(1.0 / x);
    let heuristic_rhs = e / (eps * deps).sqrt() * bracket;
    let (_, f_star) = crossover_heuristic();
    let bracket_max = 2.0 * f_star;
    let coefficient = bracket_max / (2.0 * PI).sqrt();
    Ok(LinearBoundHeuristics {
        bremermann: e / (2.0 * PI) * (1.0 + 4.0 * PI).log2(),
        bulk_transport: 2.0 * PI * e * LOG2_E,
        heuristic_rhs,
        heuristic_rate: heuristic_rhs / tau,
        bracket_max,
        heuristic_coefficient: coefficient,
        heuristic_rate_bound: coefficient * e,
    })
}

// ---------------------------------------------------------------------------
// Accelerated receivers and moving signals
// ---------------------------------------------------------------------------

/// Capacity seen by a receiver with proper acceleration `a`.
pub fn unruh_capacity(p: f64, a: f64) -> Result<CapacityResult> {
    non_negative("P", p)?;
    strictly_positive("a", a)?;
    let u = 48.0 * PI * p / (a * a);
    let rate = a / 12.0 * u / ((1.0 + u).sqrt() + 1.0) * LOG2_E;
    Ok(CapacityResult::bits(
        rate,
        &[("P", p), ("a", a)],
        Some(Regime::Exact),
    ))
}

/// Low-power form `(2πP/a) log₂e`.
pub fn unruh_low_power(p: f64, a: f64) -> f64 {
    2.0 * PI * p / a * LOG2_E
}

/// Power `10⁻² a²` separating the two regimes.
pub fn unruh_crossover_power(a: f64) -> f64 {
    1e-2 * a * a
}

/// Signal energy and duration seen by a receiver moving at `V` along a
/// carrier of propagation speed `c_s`.
pub fn boost_signal(e: f64, tau: f64, v: f64, c_s: f64) -> Result<(f64, f64)> {
    non_negative("E", e)?;
    strictly_positive("tau", tau)?;
    if !(c_s > 0.0 && c_s <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "c_s must lie in (0, 1], got {c_s}"
        )));
    }
    if !(v.is_finite() && v.abs() < c_s) {
        return Err(Error::InvalidArgument(format!(
            "|V| must be below c_s = {c_s}, got {v}"
        )));
    }
    let gamma = 1.0 / (1.0 - v * v).sqrt();
    let doppler = 1.0 - v / c_s;
    Ok((gamma * e * doppler, tau / (doppler * gamma)))
}
