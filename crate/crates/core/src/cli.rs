//! Command-line front end.
//!
//! Every subcommand builds a [`Table`] and renders it as CSV or JSON, so the
//! output is a pure function of the flags.

use std::f64::consts::PI;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::burst::{self, Heralding, Multichannel, StateFamily};
use crate::capacity::{self, CapacityResult, CostModel, NoisyModeChannel, Species};
use crate::counting::{self, OneParticle, OvercountMethod, StorageQuery, DEFAULT_CEILING_FACTOR};
use crate::reference;
use crate::spectra::{self, BoxField, Cavity, ModeSpectrum, SphereField};
use crate::{Error, Result, LOG2_E};

const HBAR_SI: f64 = 1.054_571_817e-34;
const K_B_SI: f64 = 1.380_649e-23;
const C_SI: f64 = 299_792_458.0;

/// Levels kept when a periodic signal spectrum stands in for an infinite one.
const PERIODIC_LEVELS: usize = 2000;

#[derive(Parser, Debug)]
#[command(
    name = "qlimits",
    version,
    about = "Quantum limits on information rates and storage"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Output::Csv, global = true)]
    output: Output,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Units::Natural, global = true)]
    units: Units,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Csv,
    Json,
}

/// `natural`: ħ = c = k_B = 1. `si`: joules, watts, kelvin, seconds, metres.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Units {
    Natural,
    Si,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Steady-state channel capacities.
    #[command(subcommand)]
    Capacity(CapacityCmd),
    /// Burst signals: characteristic information function and costs.
    #[command(subcommand)]
    Burst(BurstCmd),
    /// Rate and storage bounds.
    #[command(subcommand)]
    Bound(BoundCmd),
    /// Exact state counting on a spectrum.
    #[command(subcommand)]
    Count(CountCmd),
    /// Peak specific entropy for the nine reference cavities.
    Table1 {
        #[arg(long, default_value_t = DEFAULT_CEILING_FACTOR)]
        ceiling_factor: f64,
    },
    /// CIF curves on a logarithmic grid of ξ.
    Fig1 {
        #[arg(long, default_value_t = 0.1)]
        xi_min: f64,
        #[arg(long, default_value_t = 1e5)]
        xi_max: f64,
        #[arg(long, default_value_t = 10)]
        per_decade: usize,
    },
    /// Energy cost per bit along both CIF branches.
    Fig2 {
        #[arg(long, default_value_t = 0.05)]
        imax_min: f64,
        #[arg(long, default_value_t = 20.0)]
        imax_max: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
    },
    /// ln Ω(E)/E against E for the 1×0.95×0.9 Neumann box.
    Fig3 {
        #[arg(long, default_value_t = DEFAULT_CEILING_FACTOR)]
        ceiling_factor: f64,
    },
}

#[derive(Subcommand, Debug)]
enum CapacityCmd {
    /// Classical band-limited Gaussian channel.
    Shannon {
        #[arg(long)]
        delta_omega: f64,
        #[arg(long)]
        power: f64,
        #[arg(long)]
        noise: f64,
    },
    /// Noiseless broadband quantum channel.
    Pendry {
        #[arg(long)]
        power: f64,
        #[arg(long, value_enum, default_value_t = SpeciesArg::Bose)]
        species: SpeciesArg,
    },
    /// Broadband channel with thermal noise, plus noise-independent bounds.
    LebedevLevitin {
        #[arg(long)]
        power: f64,
        #[arg(long)]
        temperature: f64,
    },
    /// Narrowband channel with thermal noise and its two limits.
    Narrowband {
        #[arg(long)]
        delta_omega: f64,
        #[arg(long)]
        omega: f64,
        #[arg(long)]
        power_omega: f64,
        #[arg(long)]
        temperature: f64,
    },
    /// Peak information in one thermally noisy mode.
    SingleMode {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        n_bar_in: f64,
    },
    /// Optimal input distribution Q(m) for noise α and output β.
    Distribution {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        mmax: Option<usize>,
    },
    /// Minimal energy per bit at a given rate.
    Cost {
        #[arg(long, value_enum)]
        model: CostArg,
        #[arg(long)]
        rate: f64,
        #[arg(long)]
        noise: Option<f64>,
        #[arg(long)]
        delta_omega: Option<f64>,
        #[arg(long)]
        temperature: Option<f64>,
    },
    /// Maximum of the single-mode crossover heuristic.
    Crossover,
    /// Bremermann, bulk-transport and heuristic rate bounds.
    Heuristics {
        #[arg(long)]
        energy: f64,
        #[arg(long)]
        tau: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long)]
        deps: f64,
    },
    /// Capacity for a uniformly accelerated receiver.
    Unruh {
        #[arg(long)]
        power: f64,
        #[arg(long)]
        acceleration: f64,
    },
    /// Signal energy and duration seen by a moving receiver.
    Boost {
        #[arg(long)]
        energy: f64,
        #[arg(long)]
        tau: f64,
        #[arg(long)]
        velocity: f64,
        #[arg(long, default_value_t = 1.0)]
        c_s: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SpeciesArg {
    Bose,
    Fermi,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CostArg {
    Shannon,
    Pendry,
    LebedevLevitin,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum HeraldingArg {
    Heralded,
    SelfHeralding,
}

impl From<HeraldingArg> for Heralding {
    fn from(h: HeraldingArg) -> Self {
        match h {
            HeraldingArg::Heralded => Heralding::Heralded,
            HeraldingArg::SelfHeralding => Heralding::SelfHeralding,
        }
    }
}

#[derive(Subcommand, Debug)]
enum BurstCmd {
    /// Solve the CIF at ξ, given directly or as energy × duration.
    Cif {
        #[arg(long, conflicts_with_all = ["energy", "tau"])]
        xi: Option<f64>,
        #[arg(long, requires = "tau")]
        energy: Option<f64>,
        #[arg(long, requires = "energy")]
        tau: Option<f64>,
        #[arg(long, value_enum, default_value_t = HeraldingArg::Heralded)]
        heralding: HeraldingArg,
    },
    /// CIF at a given inverse temperature b.
    Point {
        #[arg(long)]
        b: f64,
        #[arg(long, value_enum, default_value_t = HeraldingArg::Heralded)]
        heralding: HeraldingArg,
    },
    /// Three-term closed form of the heralded CIF.
    Closed {
        #[arg(long)]
        xi: f64,
    },
    /// Minimum energy cost per bit on one branch.
    CostMin {
        #[arg(long, value_enum, default_value_t = HeraldingArg::SelfHeralding)]
        heralding: HeraldingArg,
    },
    /// Peak information of a signalling family over given mode frequencies.
    Family {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        mean_energy: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        omegas: Vec<f64>,
    },
    /// Occupation minus coherent information on an (Ē, N) grid.
    Theorem2 {
        #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0, 300.0, 1000.0, 3000.0])]
        mean_energy: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_values_t = [1usize, 2, 3, 4, 5])]
        modes: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Occupation,
    Coherent,
}

#[derive(Subcommand, Debug)]
enum BoundCmd {
    /// Linear rate bound from the self-heralding normalisation.
    Linear {
        #[arg(long, default_value_t = 1.0)]
        tau: f64,
    },
    /// N identical channels, only the all-vacuum state excluded.
    Simple {
        #[arg(long)]
        channels: u64,
        #[arg(long, default_value_t = 1.0)]
        tau: f64,
    },
    /// Channels of which a fraction r must carry a quantum.
    Blurred {
        #[arg(long)]
        filling: f64,
        #[arg(long, default_value_t = 1.0)]
        tau: f64,
    },
    /// Storage coefficient of a one-particle system.
    OneParticle {
        #[arg(long, value_enum)]
        system: OneParticleArg,
    },
    /// Information in a kink soliton.
    Soliton {
        #[arg(long)]
        energy: f64,
        #[arg(long)]
        m: f64,
    },
    /// Information in a chain of molecules.
    Chain {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        species: u64,
        #[arg(long)]
        mass: f64,
        #[arg(long)]
        varsigma: f64,
    },
    /// Thermal phonons in a chain.
    Phonon {
        #[arg(long)]
        energy: f64,
        #[arg(long)]
        l: f64,
        #[arg(long)]
        varsigma: f64,
        #[arg(long)]
        c_s: f64,
    },
    /// Massless scalar field on a segment.
    LineField {
        #[arg(long)]
        energy: f64,
        #[arg(long)]
        l: f64,
    },
    /// Peak specific entropy of a hadron gas (MeV⁻¹).
    Hadron {
        #[arg(long, default_value_t = 0.0)]
        threshold: f64,
        #[arg(long, default_value_t = 2000.0)]
        emax: f64,
        #[arg(long, default_value_t = 10.0)]
        bin_width: f64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OneParticleArg {
    Well,
    Rotator,
    Oscillator,
}

#[derive(Subcommand, Debug)]
enum CountCmd {
    /// Exact Ω(E) at every jump up to the ceiling.
    Ladder {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        shape: SourceShape,
        #[command(flatten)]
        ceiling: Ceiling,
    },
    /// Peak ln Ω/E with the zeta estimate and bounds.
    Peak {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        shape: SourceShape,
        #[command(flatten)]
        ceiling: Ceiling,
    },
    /// Spectral zeta function and derived bounds.
    Zeta {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        shape: SourceShape,
        #[arg(long, default_value_t = 4.0)]
        kappa: f64,
    },
    /// Overcounting function N(E).
    Overcount {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        shape: SourceShape,
        #[arg(long)]
        energy: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::IntegralEquation)]
        method: MethodArg,
    },
    /// Check Ω ≤ N, Ω ≤ N* and H/E below the rigorous bound at every jump.
    Sandwich {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        shape: SourceShape,
        #[command(flatten)]
        ceiling: Ceiling,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    ClosedFormUniform,
    IntegralEquation,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SphereArg {
    ScalarDirichlet,
    ScalarNeumann,
    Em,
    Neutrino,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BoxArg {
    ScalarDirichlet,
    ScalarNeumann,
    Em,
}

/// Where the one-quantum spectrum comes from; exactly one must be given.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Source {
    /// Spectrum file of `energy,degeneracy` lines.
    #[arg(long)]
    spectrum: Option<PathBuf>,
    /// Spherical cavity of radius `--radius`.
    #[arg(long, value_enum)]
    sphere: Option<SphereArg>,
    /// Rectangular cavity with sides `--dims`.
    #[arg(long = "box", value_enum)]
    box_field: Option<BoxArg>,
    /// Periodic signal spectrum of this duration.
    #[arg(long)]
    periodic: Option<f64>,
}

#[derive(Args, Debug)]
struct SourceShape {
    #[arg(long, default_value_t = 1.0)]
    radius: f64,
    #[arg(long, value_delimiter = ',', default_values_t = [1.0, 1.0, 1.0])]
    dims: Vec<f64>,
}

#[derive(Args, Debug)]
struct Ceiling {
    /// Absolute energy ceiling; overrides `--ceiling-factor`.
    #[arg(long)]
    ceiling: Option<f64>,
    /// Ceiling as a multiple of the lowest mode.
    #[arg(long, default_value_t = DEFAULT_CEILING_FACTOR)]
    ceiling_factor: f64,
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(x) => fmt_num(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => {
                format!("\"{}\"", s.replace('"', "\"\""))
            }
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) if x.is_finite() => json!(x),
            Cell::Num(x) => json!(fmt_num(*x)),
            Cell::Int(n) => json!(n),
            Cell::Text(s) => json!(s),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Self {
        Cell::Int(n)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

/// Shortest round-trip decimal, switching to exponent form at the extremes.
fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = x.abs();
    if a != 0.0 && !(1e-5..1e15).contains(&a) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Rows under a header, with the formula they evaluate.
#[derive(Debug, Clone)]
struct Table {
    formula: String,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(formula: impl Into<String>, columns: &[&'static str]) -> Self {
        Self {
            formula: formula.into(),
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn single(formula: impl Into<String>, pairs: Vec<(&'static str, Cell)>) -> Self {
        let (columns, row): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let mut t = Self::new(formula, &columns);
        t.push(row);
        t
    }

    fn to_csv(&self) -> String {
        let mut s = format!("# {}\n{}\n", self.formula, self.columns.join(","));
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
        s
    }

    fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "formula": self.formula, "columns": self.columns, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("table serialises");
        s.push('\n');
        s
    }
}

// ---------------------------------------------------------------------------
// Units
// ---------------------------------------------------------------------------

/// Converts inputs to natural units (time in seconds, ħ = c = k_B = 1) and
/// energies back out.
#[derive(Debug, Clone, Copy)]
struct Conv(Units);

impl Conv {
    fn si(self) -> bool {
        self.0 == Units::Si
    }
    fn energy(self, e: f64) -> f64 {
        if self.si() {
            e / HBAR_SI
        } else {
            e
        }
    }
    fn power(self, p: f64) -> f64 {
        self.energy(p)
    }
    fn temperature(self, t: f64) -> f64 {
        if self.si() {
            t * K_B_SI / HBAR_SI
        } else {
            t
        }
    }
    fn acceleration(self, a: f64) -> f64 {
        if self.si() {
            a / C_SI
        } else {
            a
        }
    }
    fn velocity(self, v: f64) -> f64 {
        if self.si() {
            v / C_SI
        } else {
            v
        }
    }
    fn energy_out(self, e: f64) -> f64 {
        if self.si() {
            e * HBAR_SI
        } else {
            e
        }
    }
    /// Coefficient of energy in a rate: bits/s per natural energy unit to bits/s per joule.
    fn per_energy_out(self, k: f64) -> f64 {
        if self.si() {
            k / HBAR_SI
        } else {
            k
        }
    }
    fn energy_unit(self) -> &'static str {
        if self.si() {
            "J"
        } else {
            "natural"
        }
    }
    fn require_natural(self, what: &str) -> Result<()> {
        if self.si() {
            Err(Error::InvalidArgument(format!(
                "{what} works in dimensionless units; --units si does not apply"
            )))
        } else {
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            report("usage", &e.kind().to_string(), Some(&e.to_string()));
            return 2;
        }
    };
    let table = match execute(&cli) {
        Ok(t) => t,
        Err(e) => {
            report(error_kind(&e), &e.to_string(), None);
            return if matches!(e, Error::InvalidArgument(_)) {
                2
            } else {
                1
            };
        }
    };
    let text = match cli.output {
        Output::Csv => table.to_csv(),
        Output::Json => table.to_json(),
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            report("io", &e.to_string(), None);
            1
        }
    }
}

fn report(kind: &str, message: &str, detail: Option<&str>) {
    let mut doc = json!({ "error": kind, "message": message });
    if let Some(d) = detail {
        doc["detail"] = json!(d.trim_end());
    }
    eprintln!("{doc}");
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidArgument(_) => "invalid_argument",
        Error::NotBracketed { .. } => "not_bracketed",
        Error::CapExceeded(_) => "cap_exceeded",
        Error::BracketFailure(_) => "bracket_failure",
        Error::EmptySpectrum(_) => "empty_spectrum",
        Error::Parse { .. } => "parse",
        Error::GuardExceeded { .. } => "guard_exceeded",
        Error::Overcompleteness { .. } => "overcompleteness",
        Error::ZetaTail { .. } => "zeta_tail",
        Error::OutOfRange(_) => "out_of_range",
        Error::MethodMismatch(_) => "method_mismatch",
        Error::Io(_) => "io",
    }
}

fn execute(cli: &Cli) -> Result<Table> {
    let u = Conv(cli.units);
    match &cli.command {
        Command::Capacity(c) => capacity_cmd(c, u),
        Command::Burst(c) => burst_cmd(c, u),
        Command::Bound(c) => bound_cmd(c, u),
        Command::Count(c) => {
            u.require_natural("count")?;
            count_cmd(c)
        }
        Command::Table1 { ceiling_factor } => {
            u.require_natural("table1")?;
            table1(*ceiling_factor)
        }
        Command::Fig1 {
            xi_min,
            xi_max,
            per_decade,
        } => {
            u.require_natural("fig1")?;
            fig1(*xi_min, *xi_max, *per_decade)
        }
        Command::Fig2 {
            imax_min,
            imax_max,
            points,
        } => {
            u.require_natural("fig2")?;
            fig2(*imax_min, *imax_max, *points)
        }
        Command::Fig3 { ceiling_factor } => {
            u.require_natural("fig3")?;
            fig3(*ceiling_factor)
        }
    }
}

// ---------------------------------------------------------------------------
// capacity
// ---------------------------------------------------------------------------

fn rate_table(formula: &str, r: &CapacityResult, extra: Vec<(&'static str, Cell)>) -> Table {
    let mut pairs: Vec<(&'static str, Cell)> = vec![
        ("rate", r.rate.into()),
        ("unit", r.unit.to_string().into()),
        (
            "regime",
            r.regime
                .map_or(Cell::Empty, |g| Cell::Text(format!("{g:?}").to_lowercase())),
        ),
    ];
    pairs.extend(extra);
    Table::single(formula, pairs)
}

fn capacity_cmd(c: &CapacityCmd, u: Conv) -> Result<Table> {
    Ok(match *c {
        CapacityCmd::Shannon {
            delta_omega,
            power,
            noise,
        } => {
            let r = capacity::shannon_capacity(delta_omega, u.power(power), u.power(noise))?;
            rate_table("C = (delta_omega/2pi) log2(1 + P/N)", &r, vec![])
        }
        CapacityCmd::Pendry { power, species } => {
            let sp = match species {
                SpeciesArg::Bose => Species::Bose,
                SpeciesArg::Fermi => Species::Fermi,
            };
            let r = capacity::pendry_capacity(u.power(power), sp)?;
            rate_table("C = (pi P/3)^(1/2) log2 e, fermions / sqrt 2", &r, vec![])
        }
        CapacityCmd::LebedevLevitin { power, temperature } => {
            let (p, t) = (u.power(power), u.temperature(temperature));
            let r = capacity::lebedev_levitin_capacity(p, t)?;
            let (lo, hi) = capacity::lebedev_levitin_bounds(p, t)?;
            rate_table(
                "C = (pi T/6)[(1 + 12P/(pi T^2))^(1/2) - 1] log2 e; noise-independent bounds",
                &r,
                vec![("lower_bound", lo.into()), ("upper_bound", hi.into())],
            )
        }
        CapacityCmd::Narrowband {
            delta_omega,
            omega,
            power_omega,
            temperature,
        } => {
            let (pw, t) = (u.energy(power_omega), u.temperature(temperature));
            let r = capacity::narrowband_capacity(delta_omega, omega, pw, t)?;
            rate_table(
                "C = (delta_omega/2pi)[g(n + nbar) - g(nbar)] log2 e with classical and quantum limits",
                &r,
                vec![
                    ("classical_limit", capacity::narrowband_classical(delta_omega, pw, t).into()),
                    ("quantum_limit", capacity::narrowband_quantum(delta_omega, omega, pw).into()),
                ],
            )
        }
        CapacityCmd::SingleMode { alpha, n_bar_in } => {
            let ch = NoisyModeChannel::new(alpha, n_bar_in)?;
            let info = capacity::single_mode_info(&ch);
            Table::single(
                "I_max = H(beta) - H(alpha), geometric output and noise",
                vec![
                    ("alpha", alpha.into()),
                    ("n_bar_in", n_bar_in.into()),
                    ("beta", ch.beta.into()),
                    ("imax_nits", info.imax_nits.into()),
                    ("imax_bits", (info.imax_nits * LOG2_E).into()),
                    ("lower_bound_nits", info.bounds.0.into()),
                    ("upper_bound_nits", info.bounds.1.into()),
                ],
            )
        }
        CapacityCmd::Distribution { alpha, beta, mmax } => {
            let q = capacity::theorem1_distribution(alpha, beta, mmax)?;
            let mut t = Table::new(
                "Q(m): input law whose convolution with geometric(alpha) is geometric(beta)",
                &["m", "q"],
            );
            for (m, p) in q.probs().iter().enumerate() {
                t.push(vec![(m as u64).into(), (*p).into()]);
            }
            t
        }
        CapacityCmd::Cost {
            model,
            rate,
            noise,
            delta_omega,
            temperature,
        } => {
            let need = |v: Option<f64>, name: &str| {
                v.ok_or_else(|| {
                    Error::InvalidArgument(format!("--{name} is required for this model"))
                })
            };
            let m = match model {
                CostArg::Shannon => CostModel::Shannon {
                    n: u.power(need(noise, "noise")?),
                    delta_omega: need(delta_omega, "delta-omega")?,
                },
                CostArg::Pendry => CostModel::Pendry,
                CostArg::LebedevLevitin => CostModel::LebedevLevitin {
                    t: u.temperature(need(temperature, "temperature")?),
                },
            };
            let cost = capacity::energy_cost_per_bit(m, rate)?;
            Table::single(
                "energy per bit = P/C at rate C",
                vec![
                    ("rate_bits_per_s", rate.into()),
                    ("energy_per_bit", u.energy_out(cost).into()),
                    ("energy_unit", u.energy_unit().into()),
                ],
            )
        }
        CapacityCmd::Crossover => {
            let (x, f) = capacity::crossover_heuristic();
            Table::single(
                "max over x of f(x) = log2(1+x)/sqrt(x) style single-mode heuristic",
                vec![("x_star", x.into()), ("f_star", f.into())],
            )
        }
        CapacityCmd::Heuristics {
            energy,
            tau,
            eps,
            deps,
        } => {
            let h = capacity::linear_bound_heuristics(
                u.energy(energy),
                tau,
                u.energy(eps),
                u.energy(deps),
            )?;
            Table::single(
                "Bremermann (E/2pi) log2(1+4pi), bulk 2pi E log2 e, heuristic bracket/sqrt(2pi) E",
                vec![
                    ("bremermann", h.bremermann.into()),
                    ("bulk_transport", h.bulk_transport.into()),
                    ("heuristic_rhs_bits", h.heuristic_rhs.into()),
                    ("heuristic_rate", h.heuristic_rate.into()),
                    ("bracket_max", h.bracket_max.into()),
                    (
                        "heuristic_coefficient",
                        u.per_energy_out(h.heuristic_coefficient).into(),
                    ),
                    ("heuristic_rate_bound", h.heuristic_rate_bound.into()),
                ],
            )
        }
        CapacityCmd::Unruh {
            power,
            acceleration,
        } => {
            let (p, a) = (u.power(power), u.acceleration(acceleration));
            let r = capacity::unruh_capacity(p, a)?;
            rate_table(
                "C = (a/12) u/((1+u)^(1/2)+1) log2 e, u = 48 pi P/a^2",
                &r,
                vec![
                    ("low_power_limit", capacity::unruh_low_power(p, a).into()),
                    (
                        "crossover_power",
                        u.energy_out(capacity::unruh_crossover_power(a)).into(),
                    ),
                ],
            )
        }
        CapacityCmd::Boost {
            energy,
            tau,
            velocity,
            c_s,
        } => {
            let (e, t) = capacity::boost_signal(
                u.energy(energy),
                tau,
                u.velocity(velocity),
                u.velocity(c_s),
            )?;
            Table::single(
                "E' = gamma E (1 - V/c_s), tau' = tau/(gamma (1 - V/c_s))",
                vec![
                    ("energy", u.energy_out(e).into()),
                    ("tau", t.into()),
                    ("energy_unit", u.energy_unit().into()),
                ],
            )
        }
    })
}

// ---------------------------------------------------------------------------
// burst
// ---------------------------------------------------------------------------

fn cif_row(p: &burst::CifPoint) -> Vec<(&'static str, Cell)> {
    let h = match p.heralding {
        Heralding::Heralded => "heralded",
        Heralding::SelfHeralding => "self_heralding",
    };
    vec![
        ("heralding", h.into()),
        ("xi", p.xi.into()),
        ("b", p.b.into()),
        ("ln_z", p.ln_z.into()),
        ("imax_bits", p.imax_bits.into()),
    ]
}

const CIF_FORMULA: &str =
    "xi = 2 pi (Z/(Z-zeta)) sum j/(e^(bj)-1), I = [b xi/2pi + ln(Z-zeta)] log2 e";

fn burst_cmd(c: &BurstCmd, u: Conv) -> Result<Table> {
    Ok(match c {
        BurstCmd::Cif {
            xi,
            energy,
            tau,
            heralding,
        } => {
            let xi = match (xi, energy, tau) {
                (Some(x), _, _) => *x,
                (None, Some(e), Some(t)) => u.energy(*e) * t,
                _ => {
                    return Err(Error::InvalidArgument(
                        "give --xi or both --energy and --tau".into(),
                    ))
                }
            };
            let p = burst::cif_solve(xi, (*heralding).into())?;
            let mut row = cif_row(&p);
            row.push(("large_xi_bits", burst::large_xi_bits(xi).into()));
            Table::single(CIF_FORMULA, row)
        }
        BurstCmd::Point { b, heralding } => Table::single(
            CIF_FORMULA,
            cif_row(&burst::cif_point(*b, (*heralding).into())?),
        ),
        BurstCmd::Closed { xi } => Table::single(
            "I = R log2 e - (1/2) log2 R - 1.18808, R = 1/2 + (1/4 - pi^2/36 + pi xi/3)^(1/2)",
            vec![
                ("xi", (*xi).into()),
                ("imax_bits", burst::cif_closed_heralded(*xi)?.into()),
                (
                    "exact_bits",
                    burst::cif_solve(*xi, Heralding::Heralded)?.imax_bits.into(),
                ),
            ],
        ),
        BurstCmd::CostMin { heralding } => {
            let m = burst::energy_cost_minimum((*heralding).into())?;
            let mut row = cif_row(&m.point);
            row.push(("cost_hbar_over_tau", m.cost.into()));
            Table::single("minimum over b of xi/I_max", row)
        }
        BurstCmd::Family {
            family,
            mean_energy,
            omegas,
        } => {
            let f = match family {
                FamilyArg::Occupation => StateFamily::Occupation,
                FamilyArg::Coherent => StateFamily::Coherent,
            };
            let e = u.energy(*mean_energy);
            let w: Vec<f64> = omegas.iter().map(|&x| u.energy(x)).collect();
            Table::single(
                "occupation: mu E log2 e - sum log2(1 - e^(-mu w)); coherent: N log2 e + sum log2(E/(N w))",
                vec![
                    ("modes", (w.len() as u64).into()),
                    ("imax_bits", burst::state_family_imax(f, e, &w)?.into()),
                ],
            )
        }
        BurstCmd::Theorem2 { mean_energy, modes } => {
            let r = burst::theorem2_check(mean_energy, modes)?;
            let mut t = Table::new(
                "occupation-number minus coherent-state information, unit frequencies",
                &[
                    "mean_energy",
                    "modes",
                    "occupation_bits",
                    "coherent_bits",
                    "margin_bits",
                ],
            );
            for row in &r.rows {
                t.push(vec![
                    row.mean_energy.into(),
                    (row.modes as u64).into(),
                    row.occupation_bits.into(),
                    row.coherent_bits.into(),
                    row.margin_bits.into(),
                ]);
            }
            t
        }
    })
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

fn storage_table(formula: &str, r: &counting::StorageReport) -> Table {
    let mut t = Table::new(formula, &["quantity", "value", "regime"]);
    for (k, v) in &r.values {
        t.push(vec![
            k.as_str().into(),
            (*v).into(),
            r.regime.clone().map_or(Cell::Empty, Cell::Text),
        ]);
    }
    t
}

fn bound_cmd(c: &BoundCmd, u: Conv) -> Result<Table> {
    let periodic = |tau: f64| spectra::periodic_spectrum(tau, PERIODIC_LEVELS);
    Ok(match *c {
        BoundCmd::Linear { tau } => {
            let b = burst::linear_bound_mu(&periodic(tau)?)?;
            Table::single(
                "-sum ln(1 - e^(-mu e_j)) = ln 2; rate <= mu E log2 e/tau",
                vec![
                    ("tau", tau.into()),
                    ("mu", b.mu.into()),
                    ("b", b.b.into()),
                    ("half_b", b.b.map(|x| x / 2.0).into()),
                    (
                        "rate_coeff_bits",
                        b.rate_coeff_bits.map(|k| u.per_energy_out(k)).into(),
                    ),
                ],
            )
        }
        BoundCmd::Simple { channels, tau } => {
            let b = burst::multichannel_bounds(Multichannel::Simple(channels), &periodic(tau)?)?;
            Table::single(
                "-N sum ln(1 - e^(-mu e_j)) = ln 2; large N: log2(N/ln 2)/2pi",
                vec![
                    ("channels", channels.into()),
                    ("mu", b.mu.into()),
                    (
                        "rate_coeff_bits",
                        b.rate_coeff_bits.map(|k| u.per_energy_out(k)).into(),
                    ),
                    (
                        "large_n_coeff_bits",
                        b.large_n_coeff_bits.map(|k| u.per_energy_out(k)).into(),
                    ),
                ],
            )
        }
        BoundCmd::Blurred { filling, tau } => {
            let b = burst::multichannel_bounds(Multichannel::Blurred(filling), &periodic(tau)?)?;
            let alpha = b
                .alpha
                .ok_or_else(|| Error::MethodMismatch("no duration for alpha".into()))?;
            Table::single(
                "G(r) = r/(1-r)|ln r| + |ln(1-r)|; -sum ln(1 - e^(-alpha j)) = G(r); rate <= alpha E/2pi nits/s",
                vec![
                    ("filling", filling.into()),
                    ("g", b.g.into()),
                    ("alpha", alpha.into()),
                    ("rate_coeff_nits", u.per_energy_out(alpha / (2.0 * PI)).into()),
                ],
            )
        }
        BoundCmd::OneParticle { system } => {
            u.require_natural("one-particle")?;
            let s = match system {
                OneParticleArg::Well => OneParticle::Well,
                OneParticleArg::Rotator => OneParticle::Rotator,
                OneParticleArg::Oscillator => OneParticle::Oscillator,
            };
            let r = counting::one_particle_bounds(s);
            let mut t = Table::new("I < c E R/(hbar c) bits", &["quantity", "value"]);
            t.push(vec!["coefficient_bits".into(), r.coefficient_bits.into()]);
            if let Some(d) = r.direct_ratio_bits {
                t.push(vec!["direct_ratio_bits".into(), d.into()]);
            }
            for (k, v) in &r.optimum {
                t.push(vec![format!("optimum_{k}").into(), (*v).into()]);
            }
            for (j, v) in r.sequence.iter().enumerate() {
                t.push(vec![format!("i_star_r_star_sq_j{j}").into(), (*v).into()]);
            }
            t
        }
        BoundCmd::Soliton { energy, m } => {
            u.require_natural("soliton")?;
            storage_table(
                "kink storage versus E R_s",
                &counting::soliton_and_onedim(StorageQuery::SolitonImax { e: energy, m })?,
            )
        }
        BoundCmd::Chain {
            n,
            species,
            mass,
            varsigma,
        } => {
            u.require_natural("chain")?;
            storage_table(
                "n log2(species) bits in a chain of n molecules",
                &counting::soliton_and_onedim(StorageQuery::Chain {
                    n,
                    species,
                    mass,
                    varsigma,
                })?,
            )
        }
        BoundCmd::Phonon {
            energy,
            l,
            varsigma,
            c_s,
        } => {
            u.require_natural("phonon")?;
            storage_table(
                "thermal phonon entropy in a chain",
                &counting::soliton_and_onedim(StorageQuery::Phonon {
                    e: energy,
                    l,
                    varsigma,
                    c_s,
                })?,
            )
        }
        BoundCmd::LineField { energy, l } => {
            u.require_natural("line-field")?;
            storage_table(
                "ln Omega(E) for a scalar field on a segment",
                &counting::soliton_and_onedim(StorageQuery::LineField { e: energy, l })?,
            )
        }
        BoundCmd::Hadron {
            threshold,
            emax,
            bin_width,
        } => {
            u.require_natural("hadron")?;
            let p = counting::hadron_peak_above(threshold, emax, bin_width)?;
            Table::single(
                "max ln Omega(E)/E over a binned Hagedorn spectrum, MeV^-1",
                vec![
                    ("threshold_mev", threshold.into()),
                    ("bin_width_mev", bin_width.into()),
                    ("h_over_e_max", p.h_over_e_max.into()),
                    ("argmax_energy_mev", p.argmax_energy.into()),
                    ("two_pi_r", p.geometric_bound.into()),
                ],
            )
        }
    })
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

enum Resolved {
    Cavity(Cavity),
    Spectrum(ModeSpectrum),
}

fn resolve(source: &Source, shape: &SourceShape) -> Result<Resolved> {
    if let Some(path) = &source.spectrum {
        return Ok(Resolved::Spectrum(spectra::load_spectrum(path)?));
    }
    if let Some(tau) = source.periodic {
        return Ok(Resolved::Spectrum(spectra::periodic_spectrum(
            tau,
            PERIODIC_LEVELS,
        )?));
    }
    if let Some(f) = source.sphere {
        let field = match f {
            SphereArg::ScalarDirichlet => SphereField::ScalarDirichlet,
            SphereArg::ScalarNeumann => SphereField::ScalarNeumann,
            SphereArg::Em => SphereField::Em,
            SphereArg::Neutrino => SphereField::Neutrino,
        };
        return Ok(Resolved::Cavity(Cavity::Sphere {
            field,
            r: shape.radius,
        }));
    }
    if let Some(f) = source.box_field {
        let field = match f {
            BoxArg::ScalarDirichlet => BoxField::ScalarDirichlet,
            BoxArg::ScalarNeumann => BoxField::ScalarNeumann,
            BoxArg::Em => BoxField::Em,
        };
        let [a, b, c] = shape.dims[..] else {
            return Err(Error::InvalidArgument(format!(
                "--dims needs three sides, got {}",
                shape.dims.len()
            )));
        };
        return Ok(Resolved::Cavity(Cavity::Box { field, a, b, c }));
    }
    Err(Error::InvalidArgument("no spectrum source given".into()))
}

impl Resolved {
    /// Spectrum complete below the ceiling, and the ceiling itself.
    fn spectrum_to(&self, ceiling: &Ceiling) -> Result<(ModeSpectrum, f64)> {
        match self {
            Resolved::Cavity(c) => {
                let e = match ceiling.ceiling {
                    Some(e) => e,
                    None => ceiling.ceiling_factor * counting::cavity_lowest(c)?,
                };
                Ok((c.spectrum(e)?, e))
            }
            Resolved::Spectrum(s) => {
                let e = ceiling
                    .ceiling
                    .unwrap_or(ceiling.ceiling_factor * s.lowest());
                Ok((s.clone(), e))
            }
        }
    }

    fn zeta(&self, kappa: f64) -> Result<counting::ZetaBounds> {
        match self {
            Resolved::Cavity(c) => counting::cavity_zeta_and_bounds(c, kappa),
            Resolved::Spectrum(s) => counting::spectral_zeta_and_bounds(s, kappa),
        }
    }

    fn length_scale(&self) -> Option<f64> {
        match self {
            Resolved::Cavity(c) => Some(c.length_scale()),
            Resolved::Spectrum(s) => s.length_scale(),
        }
    }

    /// A spectrum reaching at least `e`.
    fn spectrum_at(&self, e: f64) -> Result<ModeSpectrum> {
        match self {
            Resolved::Cavity(c) => c.spectrum(e),
            Resolved::Spectrum(s) => Ok(s.clone()),
        }
    }
}

fn count_cmd(c: &CountCmd) -> Result<Table> {
    match c {
        CountCmd::Ladder {
            source,
            shape,
            ceiling,
        } => {
            let r = resolve(source, shape)?;
            let (s, e) = r.spectrum_to(ceiling)?;
            ladder_table(&counting::omega_ladder(&s, e)?)
        }
        CountCmd::Peak {
            source,
            shape,
            ceiling,
        } => {
            let r = resolve(source, shape)?;
            let (s, e) = r.spectrum_to(ceiling)?;
            let ladder = counting::omega_ladder(&s, e)?;
            let zeta = r.zeta(4.0).ok();
            let p = counting::specific_entropy_peak(&ladder, r.length_scale(), zeta.as_ref())?;
            Ok(Table::single(
                "max ln Omega(E)/E; estimate [zeta(4)]^(1/4); bound [4! zeta_bar(4)]^(1/4)",
                vec![
                    ("h_over_e_max", p.h_over_e_max.into()),
                    ("argmax_energy", p.argmax_energy.into()),
                    ("estimate", p.zeta4_quarter.into()),
                    ("rigorous_bound", p.rigorous_bound.into()),
                    ("two_pi_r", p.geometric_bound.into()),
                    ("violations", p.violations.join("; ").into()),
                ],
            ))
        }
        CountCmd::Zeta {
            source,
            shape,
            kappa,
        } => {
            let z = resolve(source, shape)?.zeta(*kappa)?;
            Ok(Table::single(
                "zeta(kappa) = sum g e^(-kappa) with Weyl tail",
                vec![
                    ("kappa", z.kappa.into()),
                    ("zeta", z.zeta.into()),
                    ("tail", z.tail.into()),
                    ("estimate", z.estimate.into()),
                    ("zeta_bar", z.zeta_bar.into()),
                    ("rigorous_bound", z.rigorous_bound.into()),
                ],
            ))
        }
        CountCmd::Overcount {
            source,
            shape,
            energy,
            method,
        } => {
            let s = resolve(source, shape)?.spectrum_at(*energy)?;
            let m = match method {
                MethodArg::ClosedFormUniform => OvercountMethod::ClosedFormUniform,
                MethodArg::IntegralEquation => OvercountMethod::IntegralEquation,
            };
            let n = counting::n_overcount(&s, *energy, m)?;
            Ok(Table::single(
                "N(E): ordered tuples of quanta with total energy <= E",
                vec![
                    ("energy", (*energy).into()),
                    ("n", n.to_string().into()),
                    ("ln_n", counting::ln_big(&n).into()),
                ],
            ))
        }
        CountCmd::Sandwich {
            source,
            shape,
            ceiling,
        } => {
            let r = resolve(source, shape)?;
            let (s, e) = r.spectrum_to(ceiling)?;
            let ladder = counting::omega_ladder(&s, e)?;
            let zeta = r.zeta(4.0)?;
            let rep = counting::sandwich_check(&s, &ladder, &zeta)?;
            Ok(Table::single(
                "Omega <= N, Omega <= N*, ln Omega/E <= [4! zeta_bar(4)]^(1/4) at every jump",
                vec![
                    ("jumps_checked", (rep.jumps_checked as u64).into()),
                    (
                        "omega_le_overcount",
                        rep.omega_le_overcount.to_string().into(),
                    ),
                    ("omega_le_n_star", rep.omega_le_n_star.to_string().into()),
                    (
                        "h_over_e_le_rigorous",
                        rep.h_over_e_le_rigorous.to_string().into(),
                    ),
                    (
                        "first_failure",
                        rep.first_failure.clone().map_or(Cell::Empty, Cell::Text),
                    ),
                ],
            ))
        }
    }
}

fn ladder_table(l: &counting::CountLadder) -> Result<Table> {
    let mut t = Table::new(
        "Omega(E): exact count of occupation states with energy <= E",
        &["energy", "omega", "h_nits", "h_over_e"],
    );
    for j in &l.jumps {
        let h = j.h_nits();
        let ratio = if j.energy > 0.0 {
            Cell::Num(h / j.energy)
        } else {
            Cell::Empty
        };
        t.push(vec![
            j.energy.into(),
            j.omega.to_string().into(),
            h.into(),
            ratio,
        ]);
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// tables and figures
// ---------------------------------------------------------------------------

fn table1(factor: f64) -> Result<Table> {
    let mut t = Table::new(
        "max ln Omega(E)/E up to the ceiling; estimate [zeta(4)]^(1/4); bound [4! zeta_bar(4)]^(1/4); reference_* are reference values",
        &[
            "field",
            "cavity",
            "boundary",
            "numeric",
            "estimate",
            "rigorous_bound",
            "two_pi_r",
            "reference_numeric",
            "reference_estimate",
            "numeric_deviation",
            "estimate_deviation",
        ],
    );
    for (case, pubrow) in counting::table1_cases()
        .iter()
        .zip(reference::TABLE1.iter())
    {
        let p = counting::cavity_peak(&case.cavity, factor)?;
        let est = p.zeta4_quarter;
        t.push(vec![
            case.field.into(),
            case.cavity_name.into(),
            case.boundary.into(),
            p.h_over_e_max.into(),
            est.into(),
            p.rigorous_bound.into(),
            p.geometric_bound.into(),
            pubrow.peak.into(),
            pubrow.estimate.into(),
            (p.h_over_e_max / pubrow.peak - 1.0).into(),
            est.map(|e| e / pubrow.estimate - 1.0).into(),
        ]);
    }
    Ok(t)
}

fn log_grid(lo: f64, hi: f64, per_decade: usize) -> Result<Vec<f64>> {
    if !(lo > 0.0 && hi > lo && per_decade > 0) {
        return Err(Error::InvalidArgument(
            "grid needs 0 < min < max and at least one point per decade".into(),
        ));
    }
    let steps = ((hi / lo).log10() * per_decade as f64).round() as usize;
    let (l0, l1) = (lo.log10(), hi.log10());
    Ok((0..=steps.max(1))
        .map(|k| 10f64.powf(l0 + (l1 - l0) * k as f64 / steps.max(1) as f64))
        .collect())
}

fn fig1(lo: f64, hi: f64, per_decade: usize) -> Result<Table> {
    use rayon::prelude::*;
    let grid = log_grid(lo, hi, per_decade)?;
    let rows: Vec<Result<Vec<Cell>>> = grid
        .par_iter()
        .map(|&xi| {
            let her = burst::cif_solve(xi, Heralding::Heralded)?.imax_bits;
            let sh = match burst::cif_solve(xi, Heralding::SelfHeralding) {
                Ok(p) => Cell::Num(p.imax_bits),
                Err(Error::OutOfRange(_)) => Cell::Empty,
                Err(e) => return Err(e),
            };
            Ok(vec![xi.into(), her.into(), sh, burst::large_xi_bits(xi).into()])
        })
        .collect();
    let mut t = Table::new(
        "CIF I(xi) in bits for heralded and self-heralding signals; large_xi = (pi xi/3)^(1/2) log2 e",
        &["xi", "heralded_bits", "self_heralding_bits", "large_xi_bits"],
    );
    for r in rows {
        t.push(r?);
    }
    Ok(t)
}

fn fig2(lo: f64, hi: f64, points: usize) -> Result<Table> {
    if !(lo > 0.0 && hi > lo && points >= 2) {
        return Err(Error::InvalidArgument(
            "need 0 < min < max and at least two points".into(),
        ));
    }
    let grid: Vec<f64> = (0..points)
        .map(|k| lo * (hi / lo).powf(k as f64 / (points - 1) as f64))
        .collect();
    let her = burst::energy_cost_curve(Heralding::Heralded, &grid)?;
    let sh = burst::energy_cost_curve(Heralding::SelfHeralding, &grid)?;
    let mut t = Table::new(
        "energy cost per bit xi/I_max in units of hbar/tau against I_max",
        &["imax_bits", "heralded_cost", "self_heralding_cost"],
    );
    for ((i, h), (_, s)) in her.iter().zip(&sh) {
        t.push(vec![(*i).into(), (*h).into(), (*s).into()]);
    }
    Ok(t)
}

fn fig3(factor: f64) -> Result<Table> {
    let cavity = Cavity::Box {
        field: BoxField::ScalarNeumann,
        a: 1.0,
        b: 0.95,
        c: 0.9,
    };
    let ladder = counting::cavity_ladder(&cavity, factor)?;
    let mut t = Table::new(
        "ln Omega(E)/E against E, scalar Neumann box 1x0.95x0.9",
        &["energy", "h_over_e"],
    );
    for j in ladder.jumps.iter().filter(|j| j.energy > 0.0) {
        t.push(vec![j.energy.into(), (j.h_nits() / j.energy).into()]);
    }
    Ok(t)
}
