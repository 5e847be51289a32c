//! Brute-force oracles and random spectra shared by the integration tests.
#![allow(dead_code)]

use qlimits::spectra::{Cutoff, Level, ModeSpectrum, Statistics};
use rand::Rng;

pub const REL_TOL: f64 = 1e-9;

/// A small random spectrum and a ceiling between its lowest level and 8×.
///
/// Half the energies sit on a quarter-integer grid so that accidental
/// degeneracies among sums actually occur.
pub fn random_case<R: Rng>(rng: &mut R, statistics: Statistics) -> (ModeSpectrum, f64) {
    let n_levels = rng.gen_range(1..=6);
    let levels: Vec<Level> = (0..n_levels)
        .map(|_| {
            let energy = if rng.gen_bool(0.5) {
                rng.gen_range(4..=12) as f64 * 0.25
            } else {
                rng.gen_range(1.0..3.0)
            };
            Level {
                energy,
                degeneracy: rng.gen_range(1..=3),
            }
        })
        .collect();
    let s = ModeSpectrum::new(levels, statistics, "random", Cutoff::Complete).unwrap();
    let ceiling = s.lowest() * rng.gen_range(1.0..8.0);
    (s, ceiling)
}

/// Energy of every occupation-number state at or below `ceiling`, sorted.
///
/// Each degenerate level is expanded into separate modes and every
/// occupation vector is visited explicitly.
pub fn brute_state_energies(spectrum: &ModeSpectrum, ceiling: f64) -> Vec<f64> {
    let mut modes = Vec::new();
    for l in spectrum.levels() {
        for _ in 0..l.degeneracy {
            modes.push(l.energy);
        }
    }
    let fermi = spectrum.statistics() == Statistics::Fermi;
    let limit = ceiling * (1.0 + REL_TOL);
    let mut out = Vec::new();
    fn visit(modes: &[f64], fermi: bool, limit: f64, energy: f64, out: &mut Vec<f64>) {
        let Some((&e, rest)) = modes.split_first() else {
            out.push(energy);
            return;
        };
        let max_n = if fermi { 1 } else { usize::MAX };
        let mut n = 0;
        let mut total = energy;
        while n <= max_n && total <= limit {
            visit(rest, fermi, limit, total, out);
            n += 1;
            total = energy + n as f64 * e;
        }
    }
    visit(&modes, fermi, limit, 0.0, &mut out);
    out.sort_by(f64::total_cmp);
    out
}

/// Number of states with energy at most `e`.
pub fn count_le(sorted: &[f64], e: f64) -> u64 {
    sorted.partition_point(|&x| x <= e * (1.0 + REL_TOL) + 1e-300) as u64
}

/// Distinct energies after clustering values within `REL_TOL`.
pub fn distinct(sorted: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &x in sorted {
        match out.last() {
            Some(&y) if (x - y).abs() <= REL_TOL * x.max(1.0) => {}
            _ => out.push(x),
        }
    }
    out
}

/// Ordered tuples of quanta with total energy at most `e`, counted as
/// `Σ (Σn)!/Πn_j! · Π g_j^{n_j}` over Bose occupation vectors of the levels.
pub fn brute_tuples(spectrum: &ModeSpectrum, e: f64) -> u128 {
    let levels = spectrum.levels();
    let limit = e * (1.0 + REL_TOL);
    fn factorial(n: u32) -> u128 {
        (1..=n as u128).product()
    }
    fn visit(levels: &[Level], limit: f64, energy: f64, occ: &mut Vec<u32>, acc: &mut u128) {
        let Some((l, rest)) = levels.split_first() else {
            let total: u32 = occ.iter().sum();
            let mut ways = factorial(total);
            for &n in occ.iter() {
                ways /= factorial(n);
            }
            *acc += ways;
            return;
        };
        let mut n = 0u32;
        while energy + n as f64 * l.energy <= limit {
            occ.push(n);
            let before = *acc;
            let mut sub = 0u128;
            visit(rest, limit, energy + n as f64 * l.energy, occ, &mut sub);
            *acc = before + sub * (l.degeneracy as u128).pow(n);
            occ.pop();
            n += 1;
        }
    }
    let mut acc = 0u128;
    visit(levels, limit, 0.0, &mut Vec::new(), &mut acc);
    acc
}

/// Compares the exact ladder with brute-force enumeration: same jump
/// energies, same cumulative count at each jump.
pub fn check_ladder(spectrum: &ModeSpectrum, ceiling: f64) -> Result<(), String> {
    let ladder = qlimits::counting::omega_ladder(spectrum, ceiling).map_err(|e| e.to_string())?;
    let states = brute_state_energies(spectrum, ceiling);
    let jumps = distinct(&states);
    if jumps.len() != ladder.jumps.len() {
        return Err(format!(
            "{} jumps, brute force finds {}",
            ladder.jumps.len(),
            jumps.len()
        ));
    }
    for (j, &e) in ladder.jumps.iter().zip(&jumps) {
        if (j.energy - e).abs() > REL_TOL * e.max(1.0) {
            return Err(format!("jump at {} but brute force at {e}", j.energy));
        }
        let want = count_le(&states, e);
        if j.omega != want.into() {
            return Err(format!("Ω({e}) = {} but brute force gives {want}", j.omega));
        }
    }
    Ok(())
}

/// Compares the recursive overcount with the multinomial count at every
/// brute-force Bose state energy.
pub fn check_overcount(spectrum: &ModeSpectrum, ceiling: f64) -> Result<(), String> {
    use qlimits::counting::{n_overcount, OvercountMethod};
    let bose = spectrum.clone().with_statistics(Statistics::Bose);
    for e in distinct(&brute_state_energies(&bose, ceiling)) {
        let got = n_overcount(spectrum, e, OvercountMethod::IntegralEquation)
            .map_err(|x| x.to_string())?;
        let want = brute_tuples(spectrum, e);
        if got != want.into() {
            return Err(format!("N({e}) = {got} but tuple count gives {want}"));
        }
    }
    Ok(())
}
