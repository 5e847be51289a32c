//! Exact microcanonical state counts `Ω(E)`, specific-entropy peaks,
//! spectral zeta estimates, rigorous bounds and storage examples.
//!
//! `Ω(E)` counts every multi-quantum configuration with total energy at most
//! `E`, vacuum included. Counts are exact integers held at exact jump
//! energies; no binning is involved.

use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::numerics::{bose_integral, solve_monotone, Bracket};
use crate::spectra::{
    hagedorn_spectrum_above, misc_spectrum, soliton_radius, BoxField, Cavity, Cutoff, Level,
    MiscKind, ModeSpectrum, SphereField, Statistics, HBAR_C_MEV_FM, MERGE_TOLERANCE,
};
use crate::{Error, Result, LOG2_E};

/// Upper limit on enumeration work, in ladder entries processed.
pub const ENUMERATION_GUARD: u64 = 100_000_000;

/// Ceiling used by the cavity experiments, in units of the lowest mode.
pub const DEFAULT_CEILING_FACTOR: f64 = 7.0;

// ---------------------------------------------------------------------------
// Exact integer tallies
// ---------------------------------------------------------------------------

trait Tally: Clone + Send + Sync {
    fn unit() -> Self;
    fn plus(&self, other: &Self) -> Option<Self>;
    fn times(&self, other: &Self) -> Option<Self>;
    fn into_big(self) -> BigUint;
}

impl Tally for u128 {
    fn unit() -> Self {
        1
    }
    fn plus(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
    fn times(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Tally for BigUint {
    fn unit() -> Self {
        BigUint::one()
    }
    fn plus(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn times(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn into_big(self) -> BigUint {
        self
    }
}

#[derive(Debug)]
enum Halt {
    Overflow,
    Guard,
}

type Row<T> = (f64, T);

fn same_energy(a: f64, b: f64) -> bool {
    (a - b).abs() <= MERGE_TOLERANCE * a.abs().max(b.abs())
}

fn push_merge<T: Tally>(out: &mut Vec<Row<T>>, e: f64, c: &T) -> std::result::Result<(), Halt> {
    if let Some(last) = out.last_mut() {
        if same_energy(last.0, e) {
            last.1 = last.1.plus(c).ok_or(Halt::Overflow)?;
            return Ok(());
        }
    }
    out.push((e, c.clone()));
    Ok(())
}

/// Adds one bosonic mode: `new(E) = old(E) + new(E − ε)`.
fn add_bose_mode<T: Tally>(
    old: &[Row<T>],
    eps: f64,
    ceiling: f64,
) -> std::result::Result<Vec<Row<T>>, Halt> {
    let lim = ceiling * (1.0 + MERGE_TOLERANCE);
    let mut out: Vec<Row<T>> = Vec::with_capacity(old.len() + old.len() / 2);
    let (mut p, mut q) = (0usize, 0usize);
    loop {
        let a = old.get(p).map(|r| r.0).filter(|&e| e <= lim);
        let b = (q < out.len())
            .then(|| out[q].0 + eps)
            .filter(|&e| e <= lim);
        match (a, b) {
            (None, None) => break,
            (Some(ea), Some(eb)) if eb < ea => {
                let c = out[q].1.clone();
                push_merge(&mut out, eb, &c)?;
                q += 1;
            }
            (Some(ea), _) => {
                push_merge(&mut out, ea, &old[p].1)?;
                p += 1;
            }
            (None, Some(eb)) => {
                let c = out[q].1.clone();
                push_merge(&mut out, eb, &c)?;
                q += 1;
            }
        }
    }
    Ok(out)
}

/// Adds one fermionic mode: `new(E) = old(E) + old(E − ε)`.
fn add_fermi_mode<T: Tally>(
    old: &[Row<T>],
    eps: f64,
    ceiling: f64,
) -> std::result::Result<Vec<Row<T>>, Halt> {
    let lim = ceiling * (1.0 + MERGE_TOLERANCE);
    let mut out: Vec<Row<T>> = Vec::with_capacity(2 * old.len());
    let (mut p, mut q) = (0usize, 0usize);
    loop {
        let a = old.get(p).map(|r| r.0).filter(|&e| e <= lim);
        let b = old.get(q).map(|r| r.0 + eps).filter(|&e| e <= lim);
        match (a, b) {
            (None, None) => break,
            (Some(ea), Some(eb)) if eb < ea => {
                push_merge(&mut out, eb, &old[q].1)?;
                q += 1;
            }
            (Some(ea), _) => {
                push_merge(&mut out, ea, &old[p].1)?;
                p += 1;
            }
            (None, Some(eb)) => {
                push_merge(&mut out, eb, &old[q].1)?;
                q += 1;
            }
        }
    }
    Ok(out)
}

/// Work counter shared by the parallel branches.
struct Budget {
    used: AtomicU64,
    limit: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Self {
            used: AtomicU64::new(0),
            limit,
        }
    }

    fn spend(&self, n: u64) -> std::result::Result<(), Halt> {
        if self.used.fetch_add(n, Ordering::Relaxed) + n > self.limit {
            Err(Halt::Guard)
        } else {
            Ok(())
        }
    }
}

/// Configuration counts at each distinct total energy `≤ ceiling`.
///
/// Levels are folded in one mode at a time, highest first, so the working
/// set stays small until the densely populated low levels arrive. A level
/// of degeneracy `g` is `g` identical modes, which reproduces the Bose
/// weight `C(n+g−1, n)` and the Fermi weight `C(g, n)`.
fn fold_levels<T: Tally>(
    levels: &[Level],
    statistics: Statistics,
    ceiling: f64,
    seed: Vec<Row<T>>,
    budget: &Budget,
) -> std::result::Result<Vec<Row<T>>, Halt> {
    let mut rows = seed;
    for level in levels.iter().rev() {
        if level.energy > ceiling * (1.0 + MERGE_TOLERANCE) {
            continue;
        }
        for _ in 0..level.degeneracy {
            rows = match statistics {
                Statistics::Bose => add_bose_mode(&rows, level.energy, ceiling)?,
                Statistics::Fermi => add_fermi_mode(&rows, level.energy, ceiling)?,
            };
            budget.spend(rows.len() as u64)?;
        }
    }
    Ok(rows)
}

/// Splits on the occupation of the lowest level and folds the remaining
/// levels for each branch in parallel; merging is exact and ordered.
fn density_rows<T: Tally>(
    spectrum: &ModeSpectrum,
    ceiling: f64,
    guard: u64,
) -> std::result::Result<Vec<Row<T>>, Halt> {
    let levels = spectrum.levels();
    let stats = spectrum.statistics();
    let budget = Budget::new(guard);
    // distinct occupations of the lowest level with their exact weights
    let base = fold_levels::<T>(
        &levels[..1],
        stats,
        ceiling,
        vec![(0.0, T::unit())],
        &budget,
    )?;
    let parts = base
        .par_iter()
        .map(|(e0, c0)| {
            let rows = fold_levels::<T>(
                &levels[1..],
                stats,
                ceiling - e0,
                vec![(0.0, T::unit())],
                &budget,
            )?;
            rows.into_iter()
                .map(|(e, c)| Ok((e + e0, c.times(c0).ok_or(Halt::Overflow)?)))
                .collect::<std::result::Result<Vec<_>, Halt>>()
        })
        .collect::<std::result::Result<Vec<_>, Halt>>()?;
    merge_sorted_parts(parts)
}

fn merge_sorted_parts<T: Tally>(parts: Vec<Vec<Row<T>>>) -> std::result::Result<Vec<Row<T>>, Halt> {
    let mut all: Vec<Row<T>> = parts.into_iter().flatten().collect();
    all.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<Row<T>> = Vec::with_capacity(all.len());
    for (e, c) in all {
        push_merge(&mut out, e, &c)?;
    }
    Ok(out)
}

fn density_big(spectrum: &ModeSpectrum, ceiling: f64, limit: u64) -> Result<Vec<(f64, BigUint)>> {
    let guard = || Error::GuardExceeded { limit };
    match density_rows::<u128>(spectrum, ceiling, limit) {
        Ok(rows) => Ok(rows.into_iter().map(|(e, c)| (e, c.into_big())).collect()),
        Err(Halt::Guard) => Err(guard()),
        Err(Halt::Overflow) => match density_rows::<BigUint>(spectrum, ceiling, limit) {
            Ok(rows) => Ok(rows),
            Err(Halt::Guard) => Err(guard()),
            Err(Halt::Overflow) => unreachable!("arbitrary precision cannot overflow"),
        },
    }
}

/// `ln x` for an arbitrary-precision integer.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().expect("fits in f64").ln()
    } else {
        let shift = bits - 64;
        (x >> shift).to_f64().expect("64-bit mantissa").ln() + shift as f64 * LN_2
    }
}

// ---------------------------------------------------------------------------
// Ladder
// ---------------------------------------------------------------------------

/// One step of the cumulative count.
#[derive(Debug, Clone, PartialEq)]
pub struct Jump {
    pub energy: f64,
    /// `Ω(energy)`, every configuration at or below `energy`.
    pub omega: BigUint,
}

impl Jump {
    pub fn h_nits(&self) -> f64 {
        ln_big(&self.omega)
    }
}

impl Serialize for Jump {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Jump", 3)?;
        st.serialize_field("energy", &self.energy)?;
        st.serialize_field("omega", &self.omega.to_string())?;
        st.serialize_field("h_nits", &self.h_nits())?;
        st.end()
    }
}

/// Cumulative `Ω(E)` at every jump energy up to a ceiling.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountLadder {
    pub jumps: Vec<Jump>,
    pub ceiling: f64,
    pub spectrum_label: String,
    pub statistics: Statistics,
}

impl CountLadder {
    /// `Ω(E)` for `0 ≤ E ≤ ceiling`.
    pub fn omega_at(&self, e: f64) -> Result<BigUint> {
        if !(e >= 0.0 && e <= self.ceiling * (1.0 + MERGE_TOLERANCE)) {
            return Err(Error::OutOfRange(format!(
                "energy {e} outside [0, {}] covered by the ladder",
                self.ceiling
            )));
        }
        let idx = self
            .jumps
            .partition_point(|j| j.energy <= e + MERGE_TOLERANCE * e.abs());
        Ok(self.jumps[idx - 1].omega.clone())
    }

    /// CSV with columns `energy,omega,h_nits`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("energy,omega,h_nits\n");
        for j in &self.jumps {
            let _ = writeln!(s, "{},{},{}", j.energy, j.omega, j.h_nits());
        }
        s
    }
}

/// Exact `Ω(E)` at every jump up to `ceiling`.
pub fn omega_ladder(spectrum: &ModeSpectrum, ceiling: f64) -> Result<CountLadder> {
    omega_ladder_with_guard(spectrum, ceiling, ENUMERATION_GUARD)
}

/// As [`omega_ladder`] with an explicit work limit.
pub fn omega_ladder_with_guard(
    spectrum: &ModeSpectrum,
    ceiling: f64,
    guard: u64,
) -> Result<CountLadder> {
    if !(ceiling.is_finite() && ceiling >= spectrum.lowest()) {
        return Err(Error::InvalidArgument(format!(
            "ceiling {ceiling} must be finite and at least the lowest level {}",
            spectrum.lowest()
        )));
    }
    let rows = density_big(spectrum, ceiling, guard)?;
    let mut jumps = Vec::with_capacity(rows.len());
    let mut acc = BigUint::zero();
    for (e, c) in rows {
        acc += c;
        jumps.push(Jump {
            energy: e,
            omega: acc.clone(),
        });
    }
    Ok(CountLadder {
        jumps,
        ceiling,
        spectrum_label: spectrum.label().to_string(),
        statistics: spectrum.statistics(),
    })
}

// ---------------------------------------------------------------------------
// Spectral zeta
// ---------------------------------------------------------------------------

/// Spectral zeta with its tail estimate and the derived bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetaBounds {
    pub kappa: f64,
    /// Partial sum plus tail.
    pub zeta: f64,
    pub tail: f64,
    /// `ζ(κ)^{1/κ}`; for `κ = 4` the peak specific-entropy estimate.
    pub estimate: f64,
    /// `ζ̄(4)` of the enclosing Dirichlet sphere (needs a length scale).
    pub zeta_bar: Option<f64>,
    /// `[4! ζ̄(4)]^{1/4}`.
    pub rigorous_bound: Option<f64>,
}

impl ZetaBounds {
    /// `ln N*(E)`, `N*(E) = [cosh(xE) + cos(xE)]/2` with `x` the rigorous bound.
    pub fn ln_n_star(&self, e: f64) -> Option<f64> {
        let x = self.rigorous_bound?;
        let t = x * e;
        // cosh t + cos t = e^t (1 + e^{−2t} + 2 cos t · e^{−t}) / 2
        Some(t - 2.0 * LN_2 + (1.0 + (-2.0 * t).exp() + 2.0 * t.cos() * (-t).exp()).ln())
    }

    pub fn n_star(&self, e: f64) -> Option<f64> {
        let x = self.rigorous_bound?;
        Some(0.5 * ((x * e).cosh() + (x * e).cos()))
    }
}

fn check_kappa(kappa: f64) -> Result<()> {
    if !(kappa.is_finite() && kappa > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "kappa must be finite and > 0, got {kappa}"
        )));
    }
    Ok(())
}

/// Power-law tail `n d /((κ−d) E_c^κ)` for `n` modes below `E_c` growing as `E^d`.
fn weyl_tail(count: f64, ec: f64, dimension: u32, kappa: f64) -> Result<f64> {
    let d = dimension as f64;
    if kappa <= d {
        return Err(Error::InvalidArgument(format!(
            "zeta({kappa}) diverges for a {dimension}-dimensional spectrum"
        )));
    }
    Ok(count * d / ((kappa - d) * ec.powf(kappa)))
}

fn enclosing_sphere(length_scale: Option<f64>, kappa: f64) -> Result<(Option<f64>, Option<f64>)> {
    match length_scale {
        Some(r) if kappa == 4.0 => {
            let zbar = r.powi(4) * unit_sphere_dirichlet_zeta4()?;
            Ok((Some(zbar), Some((24.0 * zbar).powf(0.25))))
        }
        _ => Ok((None, None)),
    }
}

/// `ζ(κ) = Σ g ε^{−κ}` over an explicit spectrum plus a Weyl tail.
///
/// Levels above the spectrum's completeness energy are ignored; the tail
/// replaces them. A tail above 1% of the total is refused.
pub fn spectral_zeta_and_bounds(spectrum: &ModeSpectrum, kappa: f64) -> Result<ZetaBounds> {
    check_kappa(kappa)?;
    let (partial, tail) = match spectrum.cutoff() {
        Cutoff::Complete => (
            spectrum
                .levels()
                .iter()
                .map(|l| l.degeneracy as f64 * l.energy.powf(-kappa))
                .sum::<f64>(),
            0.0,
        ),
        Cutoff::Truncated {
            complete_below,
            dimension,
            ..
        } => {
            if dimension == 0 {
                return Err(Error::MethodMismatch(format!(
                    "{}: no power-law growth to extrapolate the zeta tail",
                    spectrum.label()
                )));
            }
            let lim = complete_below * (1.0 + MERGE_TOLERANCE);
            let partial: f64 = spectrum
                .levels()
                .iter()
                .take_while(|l| l.energy <= lim)
                .map(|l| l.degeneracy as f64 * l.energy.powf(-kappa))
                .sum();
            let count = spectrum.count_below(complete_below) as f64;
            (partial, weyl_tail(count, complete_below, dimension, kappa)?)
        }
    };
    finish_zeta(partial, tail, kappa, spectrum.length_scale())
}

fn finish_zeta(
    partial: f64,
    tail: f64,
    kappa: f64,
    length_scale: Option<f64>,
) -> Result<ZetaBounds> {
    let zeta = partial + tail;
    if tail > 0.01 * zeta {
        return Err(Error::ZetaTail { tail, total: zeta });
    }
    let (zeta_bar, rigorous_bound) = enclosing_sphere(length_scale, kappa)?;
    Ok(ZetaBounds {
        kappa,
        zeta,
        tail,
        estimate: zeta.powf(1.0 / kappa),
        zeta_bar,
        rigorous_bound,
    })
}

fn smallest_dimension(cavity: &Cavity) -> f64 {
    match *cavity {
        Cavity::Sphere { r, .. } => r,
        Cavity::Box { a, b, c, .. } => a.min(b).min(c),
    }
}

/// Deep zeta of a cavity, streamed; the cutoff doubles until the tail is
/// below 1% of the total.
fn cavity_zeta_raw(cavity: &Cavity, kappa: f64) -> Result<(f64, f64)> {
    check_kappa(kappa)?;
    let mut emax = 64.0 / smallest_dimension(cavity);
    let mut last = None;
    for _ in 0..8 {
        let sums = cavity.mode_sums(kappa, emax)?;
        let tail = weyl_tail(sums.mode_count, emax, 3, kappa)?;
        let total = sums.power_sum + tail;
        if tail < 0.01 * total {
            return Ok((sums.power_sum, tail));
        }
        last = Some((sums.power_sum, tail));
        emax *= 2.0;
    }
    let (partial, tail) = last.expect("loop ran");
    Ok((partial, tail))
}

pub fn cavity_zeta_and_bounds(cavity: &Cavity, kappa: f64) -> Result<ZetaBounds> {
    let (partial, tail) = cavity_zeta_raw(cavity, kappa)?;
    finish_zeta(partial, tail, kappa, Some(cavity.length_scale()))
}

/// `ζ(4)` of the unit Dirichlet sphere, computed once.
pub fn unit_sphere_dirichlet_zeta4() -> Result<f64> {
    static CACHE: OnceLock<Result<f64>> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            let cavity = Cavity::Sphere {
                field: SphereField::ScalarDirichlet,
                r: 1.0,
            };
            cavity_zeta_raw(&cavity, 4.0).map(|(p, t)| p + t)
        })
        .clone()
}

// ---------------------------------------------------------------------------
// Peak specific entropy
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PeakReport {
    /// Largest `ln Ω(E)/E` over the ladder.
    pub h_over_e_max: f64,
    pub argmax_energy: f64,
    /// `[ζ(4)]^{1/4}`.
    pub zeta4_quarter: Option<f64>,
    /// `[4! ζ̄(4)]^{1/4}`.
    pub rigorous_bound: Option<f64>,
    /// `2πR`.
    pub geometric_bound: Option<f64>,
    /// Bounds that the peak fails to respect; empty when all hold.
    pub violations: Vec<String>,
}

/// Scans the jumps for the maximum of `ln Ω/E`.
pub fn specific_entropy_peak(
    ladder: &CountLadder,
    length_scale: Option<f64>,
    zeta: Option<&ZetaBounds>,
) -> Result<PeakReport> {
    let (argmax_energy, h_over_e_max) = ladder
        .jumps
        .iter()
        .filter(|j| j.energy > 0.0)
        .map(|j| (j.energy, j.h_nits() / j.energy))
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .ok_or_else(|| Error::InvalidArgument("ladder holds only the vacuum".into()))?;
    let geometric_bound = length_scale.map(|r| 2.0 * PI * r);
    let rigorous_bound = zeta.and_then(|z| z.rigorous_bound);
    let mut violations = Vec::new();
    if let Some(g) = geometric_bound {
        if h_over_e_max > g {
            violations.push(format!("H/E = {h_over_e_max} exceeds 2πR = {g}"));
        }
    }
    if let Some(b) = rigorous_bound {
        if h_over_e_max > b {
            violations.push(format!("H/E = {h_over_e_max} exceeds [4!ζ̄(4)]^(1/4) = {b}"));
        }
    }
    Ok(PeakReport {
        h_over_e_max,
        argmax_energy,
        zeta4_quarter: zeta.filter(|z| z.kappa == 4.0).map(|z| z.estimate),
        rigorous_bound,
        geometric_bound,
        violations,
    })
}

/// Lowest mode of a cavity.
pub fn cavity_lowest(cavity: &Cavity) -> Result<f64> {
    let mut emax = 4.0 / smallest_dimension(cavity);
    for _ in 0..30 {
        match cavity.spectrum(emax) {
            Ok(s) => return Ok(s.lowest()),
            Err(Error::EmptySpectrum(_)) => emax *= 2.0,
            Err(e) => return Err(e),
        }
    }
    Err(Error::EmptySpectrum(cavity.label()))
}

/// Ladder of a cavity up to `factor ×` its lowest mode.
pub fn cavity_ladder(cavity: &Cavity, factor: f64) -> Result<CountLadder> {
    if !(factor.is_finite() && factor >= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "ceiling factor must be >= 1, got {factor}"
        )));
    }
    let ceiling = factor * cavity_lowest(cavity)?;
    let spectrum = cavity.spectrum(ceiling)?;
    omega_ladder(&spectrum, ceiling)
}

/// Peak, estimate and bounds for a cavity.
pub fn cavity_peak(cavity: &Cavity, factor: f64) -> Result<PeakReport> {
    let ladder = cavity_ladder(cavity, factor)?;
    let zeta = cavity_zeta_and_bounds(cavity, 4.0)?;
    specific_entropy_peak(&ladder, Some(cavity.length_scale()), Some(&zeta))
}

// ---------------------------------------------------------------------------
// Table 1 cases
// ---------------------------------------------------------------------------

/// One cavity configuration of the peak-specific-entropy table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableCase {
    pub field: &'static str,
    pub cavity_name: &'static str,
    pub boundary: &'static str,
    pub cavity: Cavity,
}

pub fn table1_cases() -> Vec<TableCase> {
    let sphere = |field| Cavity::Sphere { field, r: 1.0 };
    let cube = |field, a, b, c| Cavity::Box { field, a, b, c };
    vec![
        TableCase {
            field: "scalar",
            cavity_name: "unit sphere",
            boundary: "Dirichlet",
            cavity: sphere(SphereField::ScalarDirichlet),
        },
        TableCase {
            field: "scalar",
            cavity_name: "unit sphere",
            boundary: "Neumann",
            cavity: sphere(SphereField::ScalarNeumann),
        },
        TableCase {
            field: "electromagnetic",
            cavity_name: "unit sphere",
            boundary: "conducting",
            cavity: sphere(SphereField::Em),
        },
        TableCase {
            field: "neutrino",
            cavity_name: "unit sphere",
            boundary: "bag",
            cavity: sphere(SphereField::Neutrino),
        },
        TableCase {
            field: "scalar",
            cavity_name: "1x1x1",
            boundary: "Dirichlet",
            cavity: cube(BoxField::ScalarDirichlet, 1.0, 1.0, 1.0),
        },
        TableCase {
            field: "scalar",
            cavity_name: "1x0.95x0.9",
            boundary: "Dirichlet",
            cavity: cube(BoxField::ScalarDirichlet, 1.0, 0.95, 0.9),
        },
        TableCase {
            field: "scalar",
            cavity_name: "1x0.95x0.9",
            boundary: "Neumann",
            cavity: cube(BoxField::ScalarNeumann, 1.0, 0.95, 0.9),
        },
        TableCase {
            field: "electromagnetic",
            cavity_name: "1x0.95x0.9",
            boundary: "conducting",
            cavity: cube(BoxField::Em, 1.0, 0.95, 0.9),
        },
        TableCase {
            field: "scalar",
            cavity_name: "1x0.66x0.2",
            boundary: "Dirichlet",
            cavity: cube(BoxField::ScalarDirichlet, 1.0, 0.66, 0.2),
        },
    ]
}

// ---------------------------------------------------------------------------
// Overcounting function
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OvercountMethod {
    ClosedFormUniform,
    IntegralEquation,
}

/// `N` at every distinct multiset sum up to `emax`:
/// `N(E) = 1 + Σ_{ε_j ≤ E} g_j N(E − ε_j)`.
pub fn overcount_ladder(spectrum: &ModeSpectrum, emax: f64) -> Result<Vec<(f64, BigUint)>> {
    let bose = spectrum.clone().with_statistics(Statistics::Bose);
    let energies: Vec<f64> = density_big(&bose, emax, ENUMERATION_GUARD)?
        .into_iter()
        .map(|(e, _)| e)
        .collect();
    let levels = spectrum.levels();
    let mut n: Vec<BigUint> = Vec::with_capacity(energies.len());
    for (k, &s) in energies.iter().enumerate() {
        let mut v = BigUint::one();
        for l in levels {
            if l.energy > s * (1.0 + MERGE_TOLERANCE) {
                break;
            }
            let x = s - l.energy;
            let tol = 1e-9 * s.max(l.energy);
            let idx = energies[..k].partition_point(|&e| e <= x + tol);
            if idx > 0 {
                v += &n[idx - 1] * l.degeneracy;
            }
        }
        n.push(v);
    }
    Ok(energies.into_iter().zip(n).collect())
}

/// Uniform gap `ε` if the spectrum is `{jε, g = 1}` complete through `e`.
fn uniform_gap(spectrum: &ModeSpectrum, e: f64) -> Option<f64> {
    let levels = spectrum.levels();
    let gap = levels[0].energy;
    let uniform = levels.iter().enumerate().all(|(i, l)| {
        l.degeneracy == 1 && same_energy(l.energy, gap * (i + 1) as f64)
            || (l.energy - gap * (i + 1) as f64).abs() <= 1e-9 * l.energy && l.degeneracy == 1
    });
    let needed = (e / gap * (1.0 + 1e-12)).floor();
    let covered = match spectrum.cutoff() {
        Cutoff::Complete => true,
        Cutoff::Truncated { complete_below, .. } => complete_below >= needed * gap * (1.0 - 1e-12),
    } && (levels.len() as f64) >= needed;
    (uniform && covered).then_some(gap)
}

/// Number of ordered tuples of quanta with total energy `≤ e`.
pub fn n_overcount(spectrum: &ModeSpectrum, e: f64, method: OvercountMethod) -> Result<BigUint> {
    if !(e.is_finite() && e >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "energy must be finite and >= 0, got {e}"
        )));
    }
    match method {
        OvercountMethod::ClosedFormUniform => {
            let gap = uniform_gap(spectrum, e).ok_or_else(|| {
                Error::MethodMismatch(format!(
                    "{}: closed form needs levels jε (g = 1) complete up to E",
                    spectrum.label()
                ))
            })?;
            let k = (e / gap * (1.0 + 1e-12)).floor() as u64;
            Ok(BigUint::one() << k)
        }
        OvercountMethod::IntegralEquation => {
            if e < spectrum.lowest() {
                return Ok(BigUint::one());
            }
            let ladder = overcount_ladder(spectrum, e)?;
            Ok(ladder.last().expect("vacuum entry").1.clone())
        }
    }
}

// ---------------------------------------------------------------------------
// Sandwich
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SandwichReport {
    pub jumps_checked: usize,
    /// `Ω(E) ≤ N(E)` at every jump.
    pub omega_le_overcount: bool,
    /// `Ω(E) ≤ N*(E)` at every jump.
    pub omega_le_n_star: bool,
    /// `ln Ω(E)/E ≤ [4! ζ̄(4)]^{1/4}` at every jump.
    pub h_over_e_le_rigorous: bool,
    pub first_failure: Option<String>,
}

/// Checks `Ω ≤ N`, `Ω ≤ N*` and `H/E ≤ [4!ζ̄(4)]^{1/4}` at every ladder jump.
pub fn sandwich_check(
    spectrum: &ModeSpectrum,
    ladder: &CountLadder,
    zeta: &ZetaBounds,
) -> Result<SandwichReport> {
    let bound = zeta
        .rigorous_bound
        .ok_or_else(|| Error::InvalidArgument("sandwich needs a length scale".into()))?;
    let over = overcount_ladder(spectrum, ladder.ceiling)?;
    let mut report = SandwichReport {
        jumps_checked: 0,
        omega_le_overcount: true,
        omega_le_n_star: true,
        h_over_e_le_rigorous: true,
        first_failure: None,
    };
    for j in &ladder.jumps {
        report.jumps_checked += 1;
        let idx = over.partition_point(|(e, _)| *e <= j.energy * (1.0 + 1e-9));
        let n = &over[idx - 1].1;
        let h = j.h_nits();
        let mut fail = |what: &str, flag: &mut bool| {
            *flag = false;
            if report.first_failure.is_none() {
                report.first_failure = Some(format!("{what} at E = {}", j.energy));
            }
        };
        let mut f1 = report.omega_le_overcount;
        let mut f2 = report.omega_le_n_star;
        let mut f3 = report.h_over_e_le_rigorous;
        if &j.omega > n {
            fail("Ω > N", &mut f1);
        }
        let ln_star = zeta.ln_n_star(j.energy).expect("bound present");
        if h > ln_star + 1e-12 * ln_star.abs().max(1.0) {
            fail("Ω > N*", &mut f2);
        }
        if j.energy > 0.0 && h / j.energy > bound {
            fail("H/E above the rigorous bound", &mut f3);
        }
        report.omega_le_overcount = f1;
        report.omega_le_n_star = f2;
        report.h_over_e_le_rigorous = f3;
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// One-particle systems
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OneParticle {
    Well,
    Rotator,
    Oscillator,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OneParticleBound {
    pub system: OneParticle,
    /// Coefficient `c` in `I < c·ER/ħc` bits.
    pub coefficient_bits: f64,
    /// Where the optimum sits.
    pub optimum: BTreeMap<String, f64>,
    /// Rotator only: `I*R*²` at the peak for `j* = 0, 1, 2, …`.
    pub sequence: Vec<f64>,
    /// Rotator only: `ln N/(ER)` at the optimum in bits, `N = (j*+1)²`.
    pub direct_ratio_bits: Option<f64>,
}

/// Golden-section maximum of a unimodal `f` on `[lo, hi]`.
fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > tol {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// `Y(e*, R*) = ln(2e*R*²/π²)/(R*(1+e*))`.
fn well_y(e: f64, r: f64) -> f64 {
    (2.0 * e * r * r / (PI * PI)).ln() / (r * (1.0 + e))
}

/// `X = ln(j+1)/(R* + j(j+1)/(2I*R*))`.
fn rotator_x(j: u32, i_star: f64, r: f64) -> f64 {
    let j = j as f64;
    (j + 1.0).ln() / (r + j * (j + 1.0) / (2.0 * i_star * r))
}

/// `I*R*²` at which `X` peaks for a given `j*`.
pub fn rotator_peak_moment(j: u32) -> f64 {
    let j = j as f64;
    0.5 * ((2.0 * j + 1.0) * (j + 1.0) * (j + 1.0).ln() - j * (j + 1.0))
}

/// Ways to write `n` as an ordered sum of three non-negative integers.
fn three_way(n: u32) -> f64 {
    let n = n as f64;
    (n + 1.0) * (n + 2.0) / 2.0
}

/// `K = ln F(n)/(R*[1 + (n+3/2)y])` with `R* = (n+3/2)^{1/2} y^{−1/2}`.
fn oscillator_k(n: u32, y: f64) -> f64 {
    let m = n as f64 + 1.5;
    let r = (m / y).sqrt();
    three_way(n).ln() / (r * (1.0 + m * y))
}

pub fn one_particle_bounds(system: OneParticle) -> OneParticleBound {
    let mut optimum = BTreeMap::new();
    match system {
        OneParticle::Well => {
            // inner optimum over R*, outer over the nonrelativistic range e* ≤ 1
            let best_r = |e: f64| golden_max(|u| well_y(e, u.exp()), -5.0, 8.0, 1e-12);
            let (e, _) = golden_max(|e| best_r(e).1, 1e-4, 1.0, 1e-12);
            let (u, y) = best_r(e);
            optimum.insert("e_star".into(), e);
            optimum.insert("r_star".into(), u.exp());
            optimum.insert("y".into(), y);
            OneParticleBound {
                system,
                coefficient_bits: 0.5 * y * LOG2_E,
                optimum,
                sequence: Vec::new(),
                direct_ratio_bits: None,
            }
        }
        OneParticle::Rotator => {
            // I* = 1 (gyration radius at most R); R* from the peak condition
            let sequence: Vec<f64> = (0..8).map(rotator_peak_moment).collect();
            let (j, x) = (1..=8u32)
                .map(|j| (j, rotator_x(j, 1.0, rotator_peak_moment(j).sqrt())))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .expect("non-empty");
            optimum.insert("j_star".into(), j as f64);
            optimum.insert("r_star".into(), rotator_peak_moment(j).sqrt());
            optimum.insert("x_max".into(), x);
            OneParticleBound {
                system,
                coefficient_bits: x * LOG2_E,
                optimum,
                sequence,
                direct_ratio_bits: Some(2.0 * x * LOG2_E),
            }
        }
        OneParticle::Oscillator => {
            let (n, u, k) = (1..=30u32)
                .map(|n| {
                    let (u, k) = golden_max(|u| oscillator_k(n, u.exp()), -12.0, 4.0, 1e-12);
                    (n, u, k)
                })
                .max_by(|a, b| a.2.total_cmp(&b.2))
                .expect("non-empty");
            optimum.insert("n".into(), n as f64);
            optimum.insert("y".into(), u.exp());
            optimum.insert("k".into(), k);
            OneParticleBound {
                system,
                coefficient_bits: k * LOG2_E,
                optimum,
                sequence: Vec::new(),
                direct_ratio_bits: None,
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Solitons and one-dimensional storage
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StorageQuery {
    /// Kink of mass parameter `m` with excitation budget `e`.
    SolitonImax { e: f64, m: f64 },
    /// `n` molecules drawn from `species` kinds, each of mass `mass` and radius `varsigma`.
    Chain {
        n: u64,
        species: u64,
        mass: f64,
        varsigma: f64,
    },
    /// Thermal phonons in a chain of length `l`.
    Phonon {
        e: f64,
        l: f64,
        varsigma: f64,
        c_s: f64,
    },
    /// Massless scalar field on a segment of length `l`.
    LineField { e: f64, l: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StorageReport {
    pub query: StorageQuery,
    pub values: BTreeMap<String, f64>,
    pub regime: Option<String>,
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{name} must be finite and > 0, got {v}"
        )))
    }
}

/// `log₂e/(√(3/2)·√8)`: soliton storage per unit `E R_s`.
pub fn soliton_coefficient() -> f64 {
    LOG2_E / (1.5f64.sqrt() * 8f64.sqrt())
}

/// Peak `ln Ω(E)/E` of the segment field, in units of `L/ħc`.
pub fn line_field_peak_coefficient() -> Result<f64> {
    let spectrum = misc_spectrum(MiscKind::LineCavity { l: 1.0, jmax: 40 })?;
    let ladder = omega_ladder(&spectrum, 40.0 * PI)?;
    Ok(specific_entropy_peak(&ladder, None, None)?.h_over_e_max)
}

pub fn soliton_and_onedim(query: StorageQuery) -> Result<StorageReport> {
    let mut v = BTreeMap::new();
    let mut regime = None;
    match query {
        StorageQuery::SolitonImax { e, m } => {
            if !(e.is_finite() && e >= 0.0) {
                return Err(Error::InvalidArgument(format!("E must be >= 0, got {e}")));
            }
            positive("m", m)?;
            let omega1 = m * 1.5f64.sqrt();
            let quanta = (e / omega1 * (1.0 + 1e-12)).floor();
            let r_s = soliton_radius(m);
            v.insert("omega1".into(), omega1);
            v.insert("imax_bits".into(), (1.0 + quanta).log2());
            v.insert("radius".into(), r_s);
            v.insert("bound_coefficient".into(), soliton_coefficient());
            v.insert("bound_bits".into(), soliton_coefficient() * e * r_s);
            v.insert("geometric_bound_bits".into(), 2.0 * PI * e * r_s * LOG2_E);
        }
        StorageQuery::Chain {
            n,
            species,
            mass,
            varsigma,
        } => {
            if n == 0 || species == 0 {
                return Err(Error::InvalidArgument(
                    "chain needs n >= 1 and species >= 1".into(),
                ));
            }
            positive("mass", mass)?;
            positive("varsigma", varsigma)?;
            if varsigma * mass <= 1.0 {
                return Err(Error::InvalidArgument(format!(
                    "molecular radius {varsigma} is inside the Compton length {}",
                    1.0 / mass
                )));
            }
            let nf = n as f64;
            let h = nf * (species as f64).ln();
            let bound = 2.0 * PI * (nf * mass) * (nf * varsigma);
            v.insert("h_max_bits".into(), h * LOG2_E);
            v.insert("bound_bits".into(), bound * LOG2_E);
            v.insert("compton_floor_bits".into(), 2.0 * PI * nf * nf * LOG2_E);
            v.insert("margin_bits".into(), (bound - h) * LOG2_E);
        }
        StorageQuery::Phonon {
            e,
            l,
            varsigma,
            c_s,
        } => {
            positive("E", e)?;
            positive("L", l)?;
            positive("varsigma", varsigma)?;
            positive("c_s", c_s)?;
            let energy_at = |t: f64| -> f64 {
                let x = c_s / (2.0 * varsigma * t);
                l * t * t / (PI * c_s) * bose_integral(x).unwrap_or(f64::NAN)
            };
            let g = |u: f64| energy_at(u.exp()).ln() - e.ln();
            let (mut lo, mut hi) = ((c_s / l).ln() - 20.0, (c_s / varsigma).ln() + 20.0);
            while g(lo) > 0.0 {
                lo -= 10.0;
            }
            while g(hi) < 0.0 {
                hi += 10.0;
            }
            let t = solve_monotone(g, Bracket::new(lo, hi)?, 1e-13)?.exp();
            let x = c_s / (2.0 * varsigma * t);
            let h = 2.0 * l * t / (PI * c_s) * bose_integral(x)?;
            v.insert("temperature".into(), t);
            v.insert("x".into(), x);
            v.insert("h_max_nits".into(), h);
            v.insert("h_max_bits".into(), h * LOG2_E);
            v.insert(
                "sqrt_law_nits".into(),
                (2.0 * PI * e * l / (3.0 * c_s)).sqrt(),
            );
            v.insert("saturation_nits".into(), l / (PI * varsigma));
            v.insert("energy_over_gap".into(), e * l / c_s);
            regime = Some(
                if x >= 10.0 {
                    "sqrt_law"
                } else if x <= 0.1 {
                    "saturation"
                } else {
                    "crossover"
                }
                .to_string(),
            );
        }
        StorageQuery::LineField { e, l } => {
            positive("E", e)?;
            positive("L", l)?;
            let gap = PI / l;
            let jmax = (e / gap).floor() as usize + 1;
            let spectrum = misc_spectrum(MiscKind::LineCavity { l, jmax })?;
            let ladder = omega_ladder(&spectrum, e.max(gap))?;
            let h = ladder.omega_at(e).map(|o| ln_big(&o))?;
            let peak = line_field_peak_coefficient()?;
            v.insert("h_exact_nits".into(), h);
            v.insert("h_analytic_nits".into(), (2.0 * PI * e * l / 3.0).sqrt());
            v.insert("peak_coefficient".into(), peak);
            v.insert("peak_h_over_e".into(), peak * l);
            v.insert("energy_over_gap".into(), e / gap);
            regime = Some(
                if e >= 10.0 * gap {
                    "continuum"
                } else {
                    "discrete"
                }
                .to_string(),
            );
        }
    }
    Ok(StorageReport {
        query,
        values: v,
        regime,
    })
}

// ---------------------------------------------------------------------------
// Hadrons
// ---------------------------------------------------------------------------

/// Peak `ln Ω/E` (per MeV) for a gas of non-interacting hadron resonances.
pub fn hadron_peak(emax: f64, bin_width: f64) -> Result<PeakReport> {
    hadron_peak_above(0.0, emax, bin_width)
}

/// As [`hadron_peak`] with the level density realised only above `threshold` MeV.
pub fn hadron_peak_above(threshold: f64, emax: f64, bin_width: f64) -> Result<PeakReport> {
    let spectrum = hagedorn_spectrum_above(threshold, emax, bin_width)?;
    let ladder = omega_ladder(&spectrum, emax)?;
    specific_entropy_peak(&ladder, Some(1.0 / HBAR_C_MEV_FM), None)
}
