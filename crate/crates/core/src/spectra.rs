//! One-quantum mode spectra `{ε_j, g_j}`.
//!
//! Energies are in natural units (`ħ = c = 1`) except for the Hagedorn
//! spectrum, which is tabulated in MeV.

use std::f64::consts::PI;
use std::fmt;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::numerics::{bessel_zeros, bessel_zeros_below, BesselCaps, ZeroKind};
use crate::{Error, Result};

/// Relative tolerance below which two level energies count as equal.
pub const MERGE_TOLERANCE: f64 = 1e-12;

/// `ħc` in MeV·fm.
pub const HBAR_C_MEV_FM: f64 = 197.326_980_4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Bose,
    Fermi,
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistics::Bose => "bose",
            Statistics::Fermi => "fermi",
        })
    }
}

/// A single one-quantum level.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub energy: f64,
    pub degeneracy: u64,
}

/// How a spectrum was cut off.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Truncation {
    /// The first `jmax` levels of an indexed family.
    Index { jmax: usize },
    /// Spherical cavities: orders `ℓ ≤ ell_max`, root indices `n ≤ n_max`.
    Orders { ell_max: usize, n_max: usize },
    /// Every mode with energy at most `emax`.
    Energy { emax: f64 },
    /// Binned density realised below `emax`.
    Bins { emax: f64, bin_width: f64 },
}

/// Cutoff metadata carried by every spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cutoff {
    /// The list holds every confined mode of the system.
    Complete,
    /// Every mode below `complete_below` is present; above it the level
    /// count grows like `E^dimension`.
    Truncated {
        rule: Truncation,
        complete_below: f64,
        dimension: u32,
    },
}

/// An ordered list of one-quantum levels with statistics and geometry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeSpectrum {
    levels: Vec<Level>,
    statistics: Statistics,
    label: String,
    length_scale: Option<f64>,
    cutoff: Cutoff,
}

impl ModeSpectrum {
    /// Validates, sorts and merges `levels`.
    ///
    /// Energies must be finite and strictly positive and degeneracies at
    /// least one. Levels closer than [`MERGE_TOLERANCE`] are merged with
    /// their degeneracies summed; the lowest energy of a cluster is kept.
    pub fn new(
        levels: Vec<Level>,
        statistics: Statistics,
        label: impl Into<String>,
        cutoff: Cutoff,
    ) -> Result<Self> {
        let label = label.into();
        for l in &levels {
            if !(l.energy.is_finite() && l.energy > 0.0) {
                return Err(Error::InvalidArgument(format!(
                    "{label}: level energy must be finite and > 0, got {}",
                    l.energy
                )));
            }
            if l.degeneracy == 0 {
                return Err(Error::InvalidArgument(format!(
                    "{label}: zero degeneracy at energy {}",
                    l.energy
                )));
            }
        }
        if levels.is_empty() {
            return Err(Error::EmptySpectrum(label));
        }
        Ok(Self {
            levels: merge_levels(levels),
            statistics,
            label,
            length_scale: None,
            cutoff,
        })
    }

    /// Attaches the circumscribing radius used by the `2πER` bound.
    pub fn with_length_scale(mut self, length_scale: f64) -> Result<Self> {
        if !(length_scale.is_finite() && length_scale > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "length scale must be finite and > 0, got {length_scale}"
            )));
        }
        self.length_scale = Some(length_scale);
        Ok(self)
    }

    pub fn with_statistics(mut self, statistics: Statistics) -> Self {
        self.statistics = statistics;
        self
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn length_scale(&self) -> Option<f64> {
        self.length_scale
    }

    pub fn cutoff(&self) -> Cutoff {
        self.cutoff
    }

    pub fn lowest(&self) -> f64 {
        self.levels[0].energy
    }

    /// Total number of modes, degeneracies included.
    pub fn mode_count(&self) -> u64 {
        self.levels.iter().map(|l| l.degeneracy).sum()
    }

    /// Number of modes (with degeneracy) at energies `≤ e`.
    pub fn count_below(&self, e: f64) -> u64 {
        self.levels
            .iter()
            .take_while(|l| l.energy <= e * (1.0 + MERGE_TOLERANCE))
            .map(|l| l.degeneracy)
            .sum()
    }

    /// Keeps only levels with energy `≤ emax`.
    pub fn truncated(&self, emax: f64) -> Result<Self> {
        let levels: Vec<Level> = self
            .levels
            .iter()
            .copied()
            .filter(|l| l.energy <= emax * (1.0 + MERGE_TOLERANCE))
            .collect();
        if levels.is_empty() {
            return Err(Error::EmptySpectrum(format!(
                "{}: no level below {emax}",
                self.label
            )));
        }
        Ok(Self {
            levels,
            ..self.clone()
        })
    }
}

fn merge_levels(mut levels: Vec<Level>) -> Vec<Level> {
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    let mut out: Vec<Level> = Vec::with_capacity(levels.len());
    for l in levels {
        match out.last_mut() {
            Some(last) if (l.energy - last.energy) <= MERGE_TOLERANCE * last.energy => {
                last.degeneracy += l.degeneracy;
            }
            _ => out.push(l),
        }
    }
    out
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

/// `ε_j = 2πj/τ`, `g_j = 1`, `j = 1…jmax`; the dc mode is left out.
pub fn periodic_spectrum(tau: f64, jmax: usize) -> Result<ModeSpectrum> {
    positive("tau", tau)?;
    if jmax == 0 {
        return Err(Error::InvalidArgument("jmax must be >= 1".into()));
    }
    let gap = 2.0 * PI / tau;
    let levels = (1..=jmax)
        .map(|j| Level {
            energy: gap * j as f64,
            degeneracy: 1,
        })
        .collect();
    ModeSpectrum::new(
        levels,
        Statistics::Bose,
        format!("periodic tau={tau}"),
        Cutoff::Truncated {
            rule: Truncation::Index { jmax },
            complete_below: gap * jmax as f64,
            dimension: 1,
        },
    )?
    .with_length_scale(0.5 * tau)
}

// ---------------------------------------------------------------------------
// Spherical cavities
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SphereField {
    ScalarDirichlet,
    ScalarNeumann,
    Em,
    Neutrino,
}

impl SphereField {
    /// `(zero kind, degeneracy multiplier)` families contributing at order ℓ.
    fn families(self, ell: usize) -> &'static [(ZeroKind, u64)] {
        match self {
            SphereField::ScalarDirichlet => &[(ZeroKind::Function, 1)],
            SphereField::ScalarNeumann => &[(ZeroKind::Derivative, 1)],
            SphereField::Em if ell == 0 => &[],
            SphereField::Em => &[(ZeroKind::Function, 1), (ZeroKind::Derivative, 1)],
            SphereField::Neutrino => &[(ZeroKind::Function, 2)],
        }
    }

    fn statistics(self) -> Statistics {
        match self {
            SphereField::Neutrino => Statistics::Fermi,
            _ => Statistics::Bose,
        }
    }

    fn name(self) -> &'static str {
        match self {
            SphereField::ScalarDirichlet => "scalar dirichlet",
            SphereField::ScalarNeumann => "scalar neumann",
            SphereField::Em => "electromagnetic",
            SphereField::Neutrino => "neutrino",
        }
    }
}

/// Sphere of radius `r` with orders `ℓ ≤ ell_max` and `n ≤ n_max` roots each.
///
/// `ε = x_{nℓ}/R` with `x_{nℓ}` a zero of `j_ℓ` or `j_ℓ′`, each `(2ℓ+1)`-fold
/// degenerate (doubled for the neutrino).
pub fn sphere_spectrum(
    field: SphereField,
    r: f64,
    ell_max: usize,
    n_max: usize,
) -> Result<ModeSpectrum> {
    sphere_spectrum_with_caps(field, r, ell_max, n_max, BesselCaps::default())
}

pub fn sphere_spectrum_with_caps(
    field: SphereField,
    r: f64,
    ell_max: usize,
    n_max: usize,
    caps: BesselCaps,
) -> Result<ModeSpectrum> {
    positive("R", r)?;
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be >= 1".into()));
    }
    let per_order: Vec<Result<(Vec<Level>, f64)>> = (0..=ell_max)
        .into_par_iter()
        .map(|ell| {
            let mut levels = Vec::new();
            let mut top = f64::INFINITY;
            for &(kind, mult) in field.families(ell) {
                let zeros = bessel_zeros(kind, ell, n_max, caps)?;
                top = top.min(*zeros.last().unwrap());
                levels.extend(zeros.into_iter().map(|x| Level {
                    energy: x / r,
                    degeneracy: mult * (2 * ell as u64 + 1),
                }));
            }
            Ok((levels, top / r))
        })
        .collect();
    let mut levels = Vec::new();
    // orders above ell_max start beyond x = ell_max + 1
    let mut complete_below = (ell_max as f64 + 1.0) / r;
    for item in per_order {
        let (lv, top) = item?;
        complete_below = complete_below.min(top);
        levels.extend(lv);
    }
    ModeSpectrum::new(
        levels,
        field.statistics(),
        format!("{} sphere R={r}", field.name()),
        Cutoff::Truncated {
            rule: Truncation::Orders { ell_max, n_max },
            complete_below,
            dimension: 3,
        },
    )?
    .with_length_scale(r)
}

/// Every sphere mode with `ε ≤ emax`.
pub fn sphere_spectrum_below(field: SphereField, r: f64, emax: f64) -> Result<ModeSpectrum> {
    positive("R", r)?;
    positive("emax", emax)?;
    let mut levels = Vec::new();
    Cavity::Sphere { field, r }.for_each_order_below(emax, |_, lv| levels.extend_from_slice(lv))?;
    if levels.is_empty() {
        return Err(Error::EmptySpectrum(format!(
            "{} sphere R={r}: no mode below {emax}",
            field.name()
        )));
    }
    ModeSpectrum::new(
        levels,
        field.statistics(),
        format!("{} sphere R={r}", field.name()),
        Cutoff::Truncated {
            rule: Truncation::Energy { emax },
            complete_below: emax,
            dimension: 3,
        },
    )?
    .with_length_scale(r)
}

// ---------------------------------------------------------------------------
// Rectangular cavities
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoxField {
    ScalarDirichlet,
    /// Indices from zero, dropping only the constant mode.
    ScalarNeumann,
    Em,
}

impl BoxField {
    /// Degeneracy of the index triple, zero when the triple is excluded.
    fn degeneracy(self, i: u64, j: u64, k: u64) -> u64 {
        let zeros = (i == 0) as u32 + (j == 0) as u32 + (k == 0) as u32;
        match (self, zeros) {
            (BoxField::ScalarDirichlet, 0) => 1,
            (BoxField::ScalarDirichlet, _) => 0,
            (BoxField::ScalarNeumann, 3) => 0,
            (BoxField::ScalarNeumann, _) => 1,
            (BoxField::Em, 0) => 2,
            (BoxField::Em, 1) => 1,
            (BoxField::Em, _) => 0,
        }
    }

    fn min_index(self) -> u64 {
        match self {
            BoxField::ScalarDirichlet => 1,
            _ => 0,
        }
    }

    fn name(self) -> &'static str {
        match self {
            BoxField::ScalarDirichlet => "scalar dirichlet",
            BoxField::ScalarNeumann => "scalar neumann",
            BoxField::Em => "electromagnetic",
        }
    }
}

fn box_half_diagonal(a: f64, b: f64, c: f64) -> f64 {
    0.5 * (a * a + b * b + c * c).sqrt()
}

/// Box of sides `a × b × c`: `ε = π(i²/A² + j²/B² + k²/C²)^{1/2} ≤ emax`.
pub fn box_spectrum(field: BoxField, a: f64, b: f64, c: f64, emax: f64) -> Result<ModeSpectrum> {
    positive("A", a)?;
    positive("B", b)?;
    positive("C", c)?;
    positive("emax", emax)?;
    let mut levels = Vec::new();
    for_each_box_mode(field, a, b, c, emax, |energy, degeneracy| {
        levels.push(Level { energy, degeneracy })
    });
    if levels.is_empty() {
        return Err(Error::EmptySpectrum(format!(
            "{} box {a}x{b}x{c}: emax {emax} below the lowest mode",
            field.name()
        )));
    }
    ModeSpectrum::new(
        levels,
        Statistics::Bose,
        format!("{} box {a}x{b}x{c}", field.name()),
        Cutoff::Truncated {
            rule: Truncation::Energy { emax },
            complete_below: emax,
            dimension: 3,
        },
    )?
    .with_length_scale(box_half_diagonal(a, b, c))
}

/// Calls `f(ε, g)` for each allowed index triple with `ε ≤ emax`, in a
/// fixed lexicographic order. No merging is done.
fn for_each_box_mode<F: FnMut(f64, u64)>(
    field: BoxField,
    a: f64,
    b: f64,
    c: f64,
    emax: f64,
    mut f: F,
) {
    let imax = (emax / PI * a).floor() as u64 + 1;
    for i in field.min_index()..=imax {
        box_slice(field, a, b, c, emax, i, &mut f);
    }
}

// ---------------------------------------------------------------------------
// Streaming access for deep spectral sums
// ---------------------------------------------------------------------------

/// A cavity whose modes can be streamed to arbitrary depth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cavity {
    Sphere {
        field: SphereField,
        r: f64,
    },
    Box {
        field: BoxField,
        a: f64,
        b: f64,
        c: f64,
    },
}

/// `Σ g ε^{−κ}` and `Σ g` over all modes with `ε ≤ emax`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSums {
    pub power_sum: f64,
    pub mode_count: f64,
}

impl Cavity {
    pub fn statistics(&self) -> Statistics {
        match self {
            Cavity::Sphere { field, .. } => field.statistics(),
            Cavity::Box { .. } => Statistics::Bose,
        }
    }

    /// Circumscribing radius.
    pub fn length_scale(&self) -> f64 {
        match *self {
            Cavity::Sphere { r, .. } => r,
            Cavity::Box { a, b, c, .. } => box_half_diagonal(a, b, c),
        }
    }

    pub fn label(&self) -> String {
        match *self {
            Cavity::Sphere { field, r } => format!("{} sphere R={r}", field.name()),
            Cavity::Box { field, a, b, c } => format!("{} box {a}x{b}x{c}", field.name()),
        }
    }

    /// Explicit spectrum of every mode with `ε ≤ emax`.
    pub fn spectrum(&self, emax: f64) -> Result<ModeSpectrum> {
        match *self {
            Cavity::Sphere { field, r } => sphere_spectrum_below(field, r, emax),
            Cavity::Box { field, a, b, c } => box_spectrum(field, a, b, c, emax),
        }
    }

    /// Sphere orders are computed in parallel and handed to `f` in order.
    fn for_each_order_below<F: FnMut(usize, &[Level])>(&self, emax: f64, mut f: F) -> Result<()> {
        let Cavity::Sphere { field, r } = *self else {
            return Err(Error::InvalidArgument(
                "order iteration needs a sphere".into(),
            ));
        };
        let xmax = emax * r;
        // every zero of j_ℓ or j_ℓ′ with ℓ ≥ 1 exceeds ℓ
        let ell_top = xmax.floor() as usize + 1;
        let chunks: Vec<Result<Vec<Level>>> = (0..=ell_top)
            .into_par_iter()
            .map(|ell| {
                let mut out = Vec::new();
                for &(kind, mult) in field.families(ell) {
                    for x in bessel_zeros_below(kind, ell, xmax)? {
                        out.push(Level {
                            energy: x / r,
                            degeneracy: mult * (2 * ell as u64 + 1),
                        });
                    }
                }
                Ok(out)
            })
            .collect();
        for (ell, chunk) in chunks.into_iter().enumerate() {
            f(ell, &chunk?);
        }
        Ok(())
    }

    /// Streams every mode below `emax` into `Σ g ε^{−κ}` and `Σ g`.
    ///
    /// Box modes are never materialised, so very deep sums stay cheap.
    pub fn mode_sums(&self, kappa: f64, emax: f64) -> Result<ModeSums> {
        positive("emax", emax)?;
        let mut sums = ModeSums {
            power_sum: 0.0,
            mode_count: 0.0,
        };
        match *self {
            Cavity::Sphere { .. } => {
                self.for_each_order_below(emax, |_, lv| {
                    for l in lv {
                        sums.power_sum += l.degeneracy as f64 * l.energy.powf(-kappa);
                        sums.mode_count += l.degeneracy as f64;
                    }
                })?;
            }
            Cavity::Box { field, a, b, c } => {
                // split on the first index for parallelism, then add in order
                let first = field.min_index();
                let imax = (emax / PI * a).floor() as u64 + 1;
                let parts: Vec<(f64, f64)> = (first..=imax)
                    .into_par_iter()
                    .map(|i| {
                        let mut p = 0.0;
                        let mut n = 0.0;
                        box_slice(field, a, b, c, emax, i, |e, g| {
                            p += g as f64 * e.powf(-kappa);
                            n += g as f64;
                        });
                        (p, n)
                    })
                    .collect();
                for (p, n) in parts {
                    sums.power_sum += p;
                    sums.mode_count += n;
                }
            }
        }
        Ok(sums)
    }
}

/// Box modes with first index fixed to `i`.
fn box_slice<F: FnMut(f64, u64)>(
    field: BoxField,
    a: f64,
    b: f64,
    c: f64,
    emax: f64,
    i: u64,
    mut f: F,
) {
    let lim = (emax / PI).powi(2) * (1.0 + 1e-12);
    let (ib, ic) = (1.0 / (b * b), 1.0 / (c * c));
    let m = field.min_index();
    let si = (i * i) as f64 / (a * a);
    let mut j = m;
    while si + (j * j) as f64 * ib + (m * m) as f64 * ic <= lim {
        let sj = si + (j * j) as f64 * ib;
        let mut k = m;
        while sj + (k * k) as f64 * ic <= lim {
            let g = field.degeneracy(i, j, k);
            if g > 0 {
                f(PI * (sj + (k * k) as f64 * ic).sqrt(), g);
            }
            k += 1;
        }
        j += 1;
    }
}

// ---------------------------------------------------------------------------
// Hadrons
// ---------------------------------------------------------------------------

/// Hagedorn level density `μ(e) = 26300 (2.5·10⁴ + e²)^{−5/4} e^{e/160}` per MeV.
pub fn hagedorn_density(e_mev: f64) -> f64 {
    26300.0 * (2.5e4 + e_mev * e_mev).powf(-1.25) * (e_mev / 160.0).exp()
}

fn integrate_density(lo: f64, hi: f64) -> f64 {
    // composite Simpson; μ is smooth and slowly varying on a bin
    let n = 64;
    let h = (hi - lo) / n as f64;
    let mut s = hagedorn_density(lo) + hagedorn_density(hi);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * hagedorn_density(lo + i as f64 * h);
    }
    s * h / 3.0
}

/// Deterministic realisation of the Hagedorn density on `[0, emax)`.
///
/// One level per bin at the bin centre, with degeneracy equal to the rounded
/// integral of the density over the bin. Empty bins are dropped.
pub fn hagedorn_spectrum(emax: f64, bin_width: f64) -> Result<ModeSpectrum> {
    hagedorn_spectrum_above(0.0, emax, bin_width)
}

/// As [`hagedorn_spectrum`] with bins starting at `threshold` MeV.
pub fn hagedorn_spectrum_above(threshold: f64, emax: f64, bin_width: f64) -> Result<ModeSpectrum> {
    if !(emax.is_finite() && emax > 0.0 && emax <= 2000.0) {
        return Err(Error::InvalidArgument(format!(
            "hagedorn emax must lie in (0, 2000] MeV, got {emax}"
        )));
    }
    if !(1.0..=50.0).contains(&bin_width) {
        return Err(Error::InvalidArgument(format!(
            "hagedorn bin width must lie in [1, 50] MeV, got {bin_width}"
        )));
    }
    if !(threshold.is_finite() && threshold >= 0.0 && threshold < emax) {
        return Err(Error::InvalidArgument(format!(
            "hagedorn threshold must lie in [0, emax), got {threshold}"
        )));
    }
    let mut levels = Vec::new();
    let mut k = 0usize;
    loop {
        let lo = threshold + k as f64 * bin_width;
        if lo >= emax {
            break;
        }
        let hi = lo + bin_width;
        let g = integrate_density(lo, hi).round() as u64;
        if g > 0 {
            levels.push(Level {
                energy: 0.5 * (lo + hi),
                degeneracy: g,
            });
        }
        k += 1;
    }
    if levels.is_empty() {
        return Err(Error::EmptySpectrum(
            "hagedorn: every bin rounds to zero".into(),
        ));
    }
    ModeSpectrum::new(
        levels,
        Statistics::Bose,
        format!("hagedorn bins={bin_width}MeV from {threshold}MeV"),
        Cutoff::Truncated {
            rule: Truncation::Bins { emax, bin_width },
            complete_below: emax,
            dimension: 0,
        },
    )?
    .with_length_scale(1.0 / HBAR_C_MEV_FM)
}

// ---------------------------------------------------------------------------
// One-dimensional and soliton spectra
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MiscKind {
    /// Dirichlet standing waves on a segment of length `l`.
    LineCavity { l: f64, jmax: usize },
    /// Acoustic chain of length `l`, lattice half-spacing `varsigma`, sound speed `c_s`.
    PhononChain { l: f64, varsigma: f64, c_s: f64 },
    /// The confined excitation of a kink of mass parameter `m`.
    Soliton { m: f64 },
}

/// Soliton confinement radius `√8/m`.
pub fn soliton_radius(m: f64) -> f64 {
    8f64.sqrt() / m
}

pub fn misc_spectrum(kind: MiscKind) -> Result<ModeSpectrum> {
    match kind {
        MiscKind::LineCavity { l, jmax } => {
            positive("L", l)?;
            if jmax == 0 {
                return Err(Error::InvalidArgument("jmax must be >= 1".into()));
            }
            let gap = PI / l;
            let levels = (1..=jmax)
                .map(|j| Level {
                    energy: gap * j as f64,
                    degeneracy: 1,
                })
                .collect();
            ModeSpectrum::new(
                levels,
                Statistics::Bose,
                format!("line cavity L={l}"),
                Cutoff::Truncated {
                    rule: Truncation::Index { jmax },
                    complete_below: gap * jmax as f64,
                    dimension: 1,
                },
            )?
            .with_length_scale(0.5 * l)
        }
        MiscKind::PhononChain { l, varsigma, c_s } => {
            positive("L", l)?;
            positive("varsigma", varsigma)?;
            positive("c_s", c_s)?;
            let count = (l / (2.0 * varsigma) * (1.0 + 1e-12)).floor() as usize;
            if count < 2 {
                return Err(Error::InvalidArgument(format!(
                    "phonon chain needs L/(2 varsigma) >= 2, got {}",
                    l / (2.0 * varsigma)
                )));
            }
            let gap = PI * c_s / l;
            let levels = (1..=count)
                .map(|j| Level {
                    energy: gap * j as f64,
                    degeneracy: 1,
                })
                .collect();
            ModeSpectrum::new(
                levels,
                Statistics::Bose,
                format!("phonon chain L={l}"),
                Cutoff::Complete,
            )?
            .with_length_scale(0.5 * l)
        }
        MiscKind::Soliton { m } => {
            positive("m", m)?;
            ModeSpectrum::new(
                vec![Level {
                    energy: m * 1.5f64.sqrt(),
                    degeneracy: 1,
                }],
                Statistics::Bose,
                format!("soliton m={m}"),
                Cutoff::Complete,
            )?
            .with_length_scale(soliton_radius(m))
        }
    }
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

/// Parses the `energy,degeneracy` text format.
///
/// Lines starting with `#` are comments, except the directives
/// `# statistics=bose|fermi` and `# length_scale=<real>`.
pub fn parse_spectrum(text: &str, label: &str) -> Result<ModeSpectrum> {
    let mut statistics = Statistics::Bose;
    let mut length_scale = None;
    let mut levels = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some((key, value)) = comment.split_once('=') {
                let (key, value) = (key.trim(), value.trim());
                match key {
                    "statistics" => {
                        statistics = match value {
                            "bose" => Statistics::Bose,
                            "fermi" => Statistics::Fermi,
                            other => {
                                return Err(Error::Parse {
                                    line: line_no,
                                    message: format!("unknown statistics '{other}'"),
                                })
                            }
                        }
                    }
                    "length_scale" => {
                        let v: f64 = value.parse().map_err(|_| Error::Parse {
                            line: line_no,
                            message: format!("invalid length_scale '{value}'"),
                        })?;
                        if !(v.is_finite() && v > 0.0) {
                            return Err(Error::Parse {
                                line: line_no,
                                message: format!("length_scale must be > 0, got {v}"),
                            });
                        }
                        length_scale = Some(v);
                    }
                    _ => {}
                }
            }
            continue;
        }
        let (e, g) = line.split_once(',').ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("expected 'energy,degeneracy', got '{line}'"),
        })?;
        let energy: f64 = e.trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid energy '{}'", e.trim()),
        })?;
        let degeneracy: u64 = g.trim().parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid degeneracy '{}'", g.trim()),
        })?;
        if !(energy.is_finite() && energy > 0.0) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("energy must be > 0 (zero modes are excluded), got {energy}"),
            });
        }
        if degeneracy == 0 {
            return Err(Error::Parse {
                line: line_no,
                message: "degeneracy must be >= 1".into(),
            });
        }
        levels.push(Level { energy, degeneracy });
    }
    let spectrum = ModeSpectrum::new(levels, statistics, label, Cutoff::Complete)?;
    match length_scale {
        Some(r) => spectrum.with_length_scale(r),
        None => Ok(spectrum),
    }
}

pub fn load_spectrum(path: &Path) -> Result<ModeSpectrum> {
    let text = std::fs::read_to_string(path)?;
    parse_spectrum(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(s: &ModeSpectrum) -> Vec<(f64, u64)> {
        s.levels()
            .iter()
            .map(|l| (l.energy, l.degeneracy))
            .collect()
    }

    #[test]
    fn periodic_examples() {
        let s = periodic_spectrum(2.0 * PI, 3).unwrap();
        assert_eq!(pairs(&s), vec![(1.0, 1), (2.0, 1), (3.0, 1)]);
        let s = periodic_spectrum(1.0, 1).unwrap();
        assert_eq!(pairs(&s), vec![(2.0 * PI, 1)]);
        let s = periodic_spectrum(2.0 * PI, 10_000).unwrap();
        assert_eq!(s.levels().len(), 10_000);
        for w in s.levels().windows(2) {
            assert!((w[1].energy - w[0].energy - 1.0).abs() < 1e-9);
        }
        assert!(periodic_spectrum(0.0, 3).is_err());
        assert!(periodic_spectrum(1.0, 0).is_err());
    }

    #[test]
    fn sphere_lowest_levels() {
        let s = sphere_spectrum(SphereField::ScalarDirichlet, 1.0, 3, 3).unwrap();
        assert!((s.levels()[0].energy - PI).abs() < 1e-12);
        assert_eq!(s.levels()[0].degeneracy, 1);
        assert!((s.levels()[1].energy - 4.493_409_457_909).abs() < 1e-9);
        assert_eq!(s.levels()[1].degeneracy, 3);

        let em = sphere_spectrum(SphereField::Em, 1.0, 3, 3).unwrap();
        assert!((em.levels()[0].energy - 2.081_575_977_818).abs() < 1e-9);
        assert_eq!(em.levels()[0].degeneracy, 3);

        let nu = sphere_spectrum(SphereField::Neutrino, 1.0, 2, 2).unwrap();
        assert_eq!(nu.statistics(), Statistics::Fermi);
        assert_eq!(nu.levels()[0].degeneracy, 2);

        assert!(matches!(
            sphere_spectrum(SphereField::ScalarDirichlet, 1.0, 300, 1),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn sphere_spectrum_below_is_complete() {
        let below = sphere_spectrum_below(SphereField::ScalarNeumann, 1.0, 12.0).unwrap();
        let wide = sphere_spectrum(SphereField::ScalarNeumann, 1.0, 20, 10).unwrap();
        assert_eq!(below.levels(), wide.truncated(12.0).unwrap().levels());
        // the neumann ℓ = 0 zero mode never appears
        assert!(below.lowest() > 2.0);
    }

    #[test]
    fn sphere_weyl_growth() {
        let s = sphere_spectrum_below(SphereField::ScalarDirichlet, 1.0, 30.0).unwrap();
        // leading volume term within 20 % once X ≥ 20
        for &x in &[20.0, 25.0, 30.0] {
            let n = s.count_below(x) as f64;
            let lead = 2.0 / (9.0 * PI) * x * x * x;
            assert!((n / lead - 1.0).abs() < 0.2, "x={x}: {n} vs {lead}");
        }
        // two-term Weyl law (2/9π)X³ − X²/4 for the Dirichlet ball
        for &x in &[15.0, 20.0, 30.0] {
            let n = s.count_below(x) as f64;
            let weyl = 2.0 / (9.0 * PI) * x * x * x - 0.25 * x * x;
            assert!((n / weyl - 1.0).abs() < 0.1, "x={x}: {n} vs {weyl}");
        }
    }

    #[test]
    fn box_examples() {
        let s = box_spectrum(BoxField::ScalarDirichlet, 1.0, 1.0, 1.0, 10.0).unwrap();
        assert!((s.lowest() - PI * 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(s.levels()[0].degeneracy, 1);
        // (1,1,2) and permutations merge
        assert_eq!(s.levels()[1].degeneracy, 3);

        let s = box_spectrum(BoxField::ScalarDirichlet, 1.0, 0.95, 0.9, 10.0).unwrap();
        let want = PI * (1.0 + 1.0 / 0.9025 + 1.0 / 0.81f64).sqrt();
        assert!((s.lowest() - want).abs() < 1e-12);
        assert!((s.lowest() - 5.743_70).abs() < 1e-5);

        let em = box_spectrum(BoxField::Em, 1.0, 1.0, 1.0, 6.0).unwrap();
        assert!((em.lowest() - PI * 2f64.sqrt()).abs() < 1e-12);
        // three orientations with one zero index, g = 1 each
        assert_eq!(em.levels()[0].degeneracy, 3);

        assert!(matches!(
            box_spectrum(BoxField::ScalarDirichlet, 1.0, 1.0, 1.0, 5.0),
            Err(Error::EmptySpectrum(_))
        ));
    }

    #[test]
    fn box_neumann_drops_constant_mode() {
        let s = box_spectrum(BoxField::ScalarNeumann, 1.0, 0.95, 0.9, 4.0).unwrap();
        assert!((s.lowest() - PI).abs() < 1e-12);
        assert_eq!(s.levels()[0].degeneracy, 1);
    }

    #[test]
    fn box_streaming_matches_explicit() {
        let cav = Cavity::Box {
            field: BoxField::Em,
            a: 1.0,
            b: 0.95,
            c: 0.9,
        };
        let s = cav.spectrum(25.0).unwrap();
        let sums = cav.mode_sums(4.0, 25.0).unwrap();
        let direct: f64 = s
            .levels()
            .iter()
            .map(|l| l.degeneracy as f64 * l.energy.powi(-4))
            .sum();
        assert!((sums.power_sum - direct).abs() < 1e-12 * direct);
        assert_eq!(sums.mode_count as u64, s.mode_count());
    }

    #[test]
    fn hagedorn_density_values() {
        assert!((hagedorn_density(1000.0) - 0.4177).abs() < 1e-3);
        // d ln μ/de = 1/160 − 2.5e/(2.5·10⁴ + e²) turns positive at e = 200 + √15000
        let turn = 200.0 + 15000f64.sqrt();
        assert!(hagedorn_density(turn - 1.0) > hagedorn_density(turn));
        let mut prev = hagedorn_density(turn);
        for e in (330..2000).step_by(10) {
            let cur = hagedorn_density(e as f64);
            assert!(cur > prev);
            prev = cur;
        }
    }

    #[test]
    fn hagedorn_realisation_rule() {
        let s = hagedorn_spectrum(1400.0, 10.0).unwrap();
        for l in s.levels() {
            let lo = l.energy - 5.0;
            assert!((lo / 10.0 - (lo / 10.0).round()).abs() < 1e-9);
            assert_eq!(
                l.degeneracy,
                integrate_density(lo, lo + 10.0).round() as u64
            );
        }
        assert!(hagedorn_spectrum(2500.0, 10.0).is_err());
        assert!(hagedorn_spectrum(1000.0, 0.5).is_err());
    }

    #[test]
    fn misc_examples() {
        let s = misc_spectrum(MiscKind::Soliton { m: 1.0 }).unwrap();
        assert_eq!(s.levels().len(), 1);
        assert!((s.lowest() - 1.224_745).abs() < 1e-6);

        let s = misc_spectrum(MiscKind::LineCavity { l: PI, jmax: 3 }).unwrap();
        let got = pairs(&s);
        for (k, (e, g)) in got.iter().enumerate() {
            assert!((e - (k + 1) as f64).abs() < 1e-12);
            assert_eq!(*g, 1);
        }

        let s = misc_spectrum(MiscKind::PhononChain {
            l: 100.0,
            varsigma: 1.0,
            c_s: 1.0,
        })
        .unwrap();
        assert_eq!(s.levels().len(), 50);
        assert!((s.levels()[49].energy - PI / 2.0).abs() < 1e-12);
        assert!(misc_spectrum(MiscKind::PhononChain {
            l: 3.0,
            varsigma: 1.0,
            c_s: 1.0
        })
        .is_err());
    }

    #[test]
    fn parse_examples() {
        let s = parse_spectrum("1.0,1\n2.0,3\n", "t").unwrap();
        assert_eq!(pairs(&s), vec![(1.0, 1), (2.0, 3)]);
        assert_eq!(s.statistics(), Statistics::Bose);

        let s = parse_spectrum(
            "# statistics=fermi\n# length_scale=2.5\n3,1\n1,2\n1,1\n",
            "t",
        )
        .unwrap();
        assert_eq!(s.statistics(), Statistics::Fermi);
        assert_eq!(s.length_scale(), Some(2.5));
        assert_eq!(pairs(&s), vec![(1.0, 3), (3.0, 1)]);

        assert!(matches!(
            parse_spectrum("1.0,1\n0.0,1\n", "t"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_spectrum("1.0,0\n", "t"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_spectrum("x\n", "t"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_spectrum("# only a comment\n", "t"),
            Err(Error::EmptySpectrum(_))
        ));
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(32))]

            #[test]
            fn box_permutation_covariant(a in 0.5f64..1.5, b in 0.5f64..1.5, c in 0.5f64..1.5) {
                let emax = 20.0;
                let base = box_spectrum(BoxField::Em, a, b, c, emax).unwrap();
                let perm = box_spectrum(BoxField::Em, c, a, b, emax).unwrap();
                prop_assert_eq!(base.mode_count(), perm.mode_count());
                let mut e1: Vec<f64> = base.levels().iter().flat_map(|l| std::iter::repeat_n(l.energy, l.degeneracy as usize)).collect();
                let mut e2: Vec<f64> = perm.levels().iter().flat_map(|l| std::iter::repeat_n(l.energy, l.degeneracy as usize)).collect();
                e1.sort_by(f64::total_cmp);
                e2.sort_by(f64::total_cmp);
                for (x, y) in e1.iter().zip(&e2) {
                    prop_assert!((x - y).abs() <= 1e-12 * x);
                }
            }

            #[test]
            fn spectra_satisfy_invariants(tau in 0.1f64..10.0, jmax in 1usize..50) {
                let s = periodic_spectrum(tau, jmax).unwrap();
                prop_assert!(s.levels().windows(2).all(|w| w[0].energy < w[1].energy));
                prop_assert!(s.levels().iter().all(|l| l.energy > 0.0 && l.degeneracy >= 1));
            }
        }
    }
}
