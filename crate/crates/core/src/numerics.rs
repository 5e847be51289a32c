//! Special functions and root finding shared by the physics modules.

use std::f64::consts::PI;

use crate::{Error, Result};

/// `π²/6`, the value of `∫₀^∞ x/(eˣ−1) dx`.
pub const PI2_OVER_6: f64 = PI * PI / 6.0;

/// Integration constant of the Euler–Maclaurin `ln Z` approximation.
///
/// Equal to `−½ ln 2π`; the exact sum and the asymptotic form agree on it.
pub const LN_Z_CONSTANT: f64 = -0.918_938_533_204_672_7;

/// Closed interval used to seed a monotone root solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidArgument(format!(
                "bracket requires finite lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Solves `f(x) = 0` for `f` monotone on `bracket`.
///
/// Bisection narrows the bracket first, then safeguarded secant steps
/// polish the root. Stops when `|f(x)| ≤ tol` or the bracket is narrower
/// than `tol · max(1, |x|)`. Deterministic for a given `f`.
pub fn solve_monotone<F>(mut f: F, bracket: Bracket, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let (mut f_lo, mut f_hi) = (f(lo), f(hi));
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo.signum() == f_hi.signum() {
        return Err(Error::NotBracketed { lo, hi, f_lo, f_hi });
    }

    let start_width = hi - lo;
    let mut last_width = f64::INFINITY;
    let mut x = 0.5 * (lo + hi);
    for iter in 0..400 {
        let width = hi - lo;
        // secant step only once the bracket is small and shrinking well
        let use_secant = iter >= 8 && width < 1e-2 * start_width && width < 0.5 * last_width;
        last_width = width;
        x = if use_secant {
            let s = hi - f_hi * (hi - lo) / (f_hi - f_lo);
            if s > lo && s < hi {
                s
            } else {
                0.5 * (lo + hi)
            }
        } else {
            0.5 * (lo + hi)
        };
        let fx = f(x);
        if fx == 0.0 || fx.abs() <= tol {
            return Ok(x);
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        if hi - lo <= tol * x.abs().max(1.0) {
            // return the endpoint closer to zero
            return Ok(if f_lo.abs() < f_hi.abs() { lo } else { hi });
        }
    }
    Ok(x)
}

// ---------------------------------------------------------------------------
// Spherical Bessel functions
// ---------------------------------------------------------------------------

/// Which function's zeros to locate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZeroKind {
    /// Zeros of `j_ℓ(x)`.
    Function,
    /// Zeros of `j_ℓ′(x)`.
    Derivative,
}

/// Upper limits on the order and root index accepted by [`bessel_zero`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BesselCaps {
    pub max_order: usize,
    pub max_index: usize,
}

impl Default for BesselCaps {
    fn default() -> Self {
        Self {
            max_order: 200,
            max_index: 200,
        }
    }
}

/// Returns `(j_ℓ(x), j_ℓ′(x))` for `x ≥ 0`.
///
/// Upward recurrence is used where it is stable (`x > ℓ`); otherwise a
/// Miller downward recurrence normalised by `Σ (2k+1) j_k² = 1`.
pub fn spherical_jn_with_derivative(ell: usize, x: f64) -> (f64, f64) {
    if x == 0.0 {
        let j = if ell == 0 { 1.0 } else { 0.0 };
        let dj = if ell == 1 { 1.0 / 3.0 } else { 0.0 };
        return (j, dj);
    }
    // need j_{ℓ-1} and j_ℓ (or j_0, j_1 for ℓ = 0)
    let top = ell.max(1);
    let (j_prev, j_top) = if x > top as f64 {
        upward(top, x)
    } else {
        miller(top, x)
    };
    // j_prev = j_{top-1}, j_top = j_top
    if ell == 0 {
        // j_0 = j_prev, j_0' = -j_1
        (j_prev, -j_top)
    } else {
        let j = j_top;
        let dj = j_prev - (ell as f64 + 1.0) / x * j;
        (j, dj)
    }
}

/// `j_ℓ(x)`.
pub fn spherical_jn(ell: usize, x: f64) -> f64 {
    spherical_jn_with_derivative(ell, x).0
}

fn upward(top: usize, x: f64) -> (f64, f64) {
    let (s, c) = x.sin_cos();
    let mut jm = s / x;
    let mut j = s / (x * x) - c / x;
    for k in 1..top {
        let next = (2 * k + 1) as f64 / x * j - jm;
        jm = j;
        j = next;
    }
    (jm, j)
}

fn miller(top: usize, x: f64) -> (f64, f64) {
    let start = top + (160.0 * top as f64).sqrt() as usize + 24 + x as usize / 4;
    let mut f_next = 0.0_f64; // f_{k+1}
    let mut f = 1e-10_f64; // f_k
    let mut norm = 0.0_f64;
    let mut at_top = (0.0, 0.0);
    let mut k = start;
    loop {
        norm += (2 * k + 1) as f64 * f * f;
        if k == top {
            at_top.1 = f;
        }
        if k + 1 == top {
            at_top.0 = f;
        }
        if k == 0 {
            break;
        }
        let prev = (2 * k + 1) as f64 / x * f - f_next;
        f_next = f;
        f = prev;
        k -= 1;
        if f.abs() > 1e100 {
            f *= 1e-100;
            f_next *= 1e-100;
            norm *= 1e-200;
            at_top.0 *= 1e-100;
            at_top.1 *= 1e-100;
        }
    }
    // the top index always exceeds zero, so both stored values are final
    let scale = norm.sqrt();
    let sign = {
        // fix overall sign from j_0 = sin x / x, or j_1 when j_0 is tiny
        let (s, c) = x.sin_cos();
        let j0 = s / x;
        let j1 = s / (x * x) - c / x;
        let (exact, approx) = if j0.abs() > j1.abs() {
            (j0, f)
        } else {
            (j1, f_next)
        };
        if (exact >= 0.0) == (approx >= 0.0) {
            1.0
        } else {
            -1.0
        }
    };
    (sign * at_top.0 / scale, sign * at_top.1 / scale)
}

fn zero_target(kind: ZeroKind, ell: usize) -> impl Fn(f64) -> f64 {
    move |x| {
        let (j, dj) = spherical_jn_with_derivative(ell, x);
        match kind {
            ZeroKind::Function => j,
            ZeroKind::Derivative => dj,
        }
    }
}

/// Scans `x` upward in steps of `π/8` and collects strictly positive zeros
/// until `stop` returns true for the list found so far or `x` passes `xmax`.
fn scan_zeros<S>(kind: ZeroKind, ell: usize, xmax: f64, mut stop: S) -> Result<Vec<f64>>
where
    S: FnMut(&[f64]) -> bool,
{
    let f = zero_target(kind, ell);
    let step = PI / 8.0;
    let mut a = 0.5 * ell.max(1) as f64;
    let mut fa = f(a);
    let mut zeros = Vec::new();
    while !stop(&zeros) {
        if a > xmax {
            break;
        }
        let b = a + step;
        let fb = f(b);
        if fa == 0.0 {
            zeros.push(a);
        } else if fa.signum() != fb.signum() && fb != 0.0 {
            let root = solve_monotone(&f, Bracket { lo: a, hi: b }, 1e-15)?;
            zeros.push(root);
        }
        a = b;
        fa = fb;
    }
    Ok(zeros)
}

/// The `n`-th strictly positive zero of `j_ℓ` or `j_ℓ′` (`n ≥ 1`).
pub fn bessel_zero(kind: ZeroKind, ell: usize, n: usize) -> Result<f64> {
    bessel_zero_with_caps(kind, ell, n, BesselCaps::default())
}

pub fn bessel_zero_with_caps(
    kind: ZeroKind,
    ell: usize,
    n: usize,
    caps: BesselCaps,
) -> Result<f64> {
    Ok(*bessel_zeros(kind, ell, n, caps)?
        .last()
        .expect("n >= 1 zeros requested"))
}

/// The first `count` strictly positive zeros, ascending.
pub fn bessel_zeros(
    kind: ZeroKind,
    ell: usize,
    count: usize,
    caps: BesselCaps,
) -> Result<Vec<f64>> {
    if count == 0 {
        return Err(Error::InvalidArgument("zero index n must be >= 1".into()));
    }
    if ell > caps.max_order {
        return Err(Error::CapExceeded(format!(
            "order {ell} exceeds cap {}",
            caps.max_order
        )));
    }
    if count > caps.max_index {
        return Err(Error::CapExceeded(format!(
            "zero index {count} exceeds cap {}",
            caps.max_index
        )));
    }
    // the n-th zero lies below ℓ + (n + 1)π + a generous margin
    let xmax = ell as f64 + (count as f64 + 2.0) * PI + 10.0 * (ell as f64 + 1.0).cbrt() + 10.0;
    let zeros = scan_zeros(kind, ell, xmax, |z| z.len() >= count)?;
    if zeros.len() < count {
        return Err(Error::BracketFailure(format!(
            "found {} of {count} zeros of {kind:?} order {ell} below {xmax}",
            zeros.len()
        )));
    }
    Ok(zeros)
}

/// All strictly positive zeros below `xmax`, ascending.
pub fn bessel_zeros_below(kind: ZeroKind, ell: usize, xmax: f64) -> Result<Vec<f64>> {
    scan_zeros(kind, ell, xmax, |_| false).map(|mut z| {
        z.retain(|&x| x <= xmax);
        z
    })
}

// ---------------------------------------------------------------------------
// Bose integral
// ---------------------------------------------------------------------------

fn bose_integrand(x: f64) -> f64 {
    if x < 1e-3 {
        let x2 = x * x;
        1.0 - 0.5 * x + x2 / 12.0 - x2 * x2 / 720.0
    } else {
        x / x.exp_m1()
    }
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// `∫₀^X x/(eˣ−1) dx`; `f64::INFINITY` returns `π²/6`.
pub fn bose_integral(upper: f64) -> Result<f64> {
    if upper.is_nan() || upper < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "bose_integral upper limit must be >= 0, got {upper}"
        )));
    }
    if upper == f64::INFINITY {
        return Ok(PI2_OVER_6);
    }
    if upper == 0.0 {
        return Ok(0.0);
    }
    // the integrand is below 1e-24 past x = 60
    let b = upper.min(60.0);
    let f = bose_integrand;
    let (fa, fm, fb) = (f(0.0), f(0.5 * b), f(b));
    let whole = simpson(0.0, b, fa, fm, fb);
    Ok(adaptive_simpson(&f, 0.0, b, fa, fm, fb, whole, 1e-14, 48))
}

// ---------------------------------------------------------------------------
// Sums over the uniformly spaced spectrum ε_j = j
// ---------------------------------------------------------------------------

/// `s1 = Σ_{j≥1} j/(e^{bj}−1)` and `lnz = −Σ_{j≥1} ln(1−e^{−bj})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumPair {
    pub s1: f64,
    pub lnz: f64,
}

fn check_b(b: f64) -> Result<()> {
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "b must be finite and > 0, got {b}"
        )));
    }
    Ok(())
}

/// Euler–Maclaurin closed forms for the two sums.
pub fn euler_maclaurin_sums(b: f64) -> Result<SumPair> {
    check_b(b)?;
    Ok(SumPair {
        s1: PI2_OVER_6 / (b * b) - 0.5 / b + 1.0 / 24.0,
        lnz: PI2_OVER_6 / b + 0.5 * b.ln() - b / 24.0 + LN_Z_CONSTANT,
    })
}

/// Result of a direct term-by-term summation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectSum {
    pub sums: SumPair,
    /// Geometric bound on the neglected tail of each sum.
    pub tail_bound: SumPair,
    pub terms: usize,
}

/// Direct summation of both sums, stopping once the current terms fall
/// below `1e-14` of the accumulated values.
pub fn exact_sums(b: f64) -> Result<DirectSum> {
    check_b(b)?;
    let q = (-b).exp();
    let mut s1 = 0.0;
    let mut lnz = 0.0;
    let mut j = 1usize;
    loop {
        let x = b * j as f64;
        let t1 = j as f64 / x.exp_m1();
        let t2 = -(-(-x).exp()).ln_1p();
        s1 += t1;
        lnz += t2;
        if t1 <= 1e-14 * s1 && t2 <= 1e-14 * lnz {
            // subsequent terms shrink at least by the ratio ((j+1)/j)·q
            let ratio = (j as f64 + 1.0) / j as f64 * q;
            let geo = if ratio < 1.0 {
                ratio / (1.0 - ratio)
            } else {
                f64::INFINITY
            };
            return Ok(DirectSum {
                sums: SumPair { s1, lnz },
                tail_bound: SumPair {
                    s1: t1 * geo,
                    lnz: t2 * geo,
                },
                terms: j,
            });
        }
        j += 1;
    }
}

/// Exact values of the sums for any `b > 0`.
///
/// Direct summation for `b ≥ 1`; below that the modular transformation of
/// the Euler function maps `b → 4π²/b`, where a handful of terms suffice.
pub fn partition_sums(b: f64) -> Result<SumPair> {
    check_b(b)?;
    if b >= 1.0 {
        return Ok(exact_sums(b)?.sums);
    }
    let dual_b = 4.0 * PI * PI / b;
    let dual = exact_sums(dual_b)?.sums;
    let lnz = PI2_OVER_6 / b + 0.5 * (b / (2.0 * PI)).ln() - b / 24.0 + dual.lnz;
    let s1 = PI2_OVER_6 / (b * b) - 0.5 / b + 1.0 / 24.0 - 4.0 * PI * PI / (b * b) * dual.s1;
    Ok(SumPair { s1, lnz })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn bracket_rejects_inverted_interval() {
        assert!(Bracket::new(2.0, 1.0).is_err());
        assert!(Bracket::new(1.0, f64::NAN).is_err());
    }

    #[test]
    fn solve_linear_and_exponential() {
        let r = solve_monotone(|x| x - 2.0, Bracket::new(0.0, 5.0).unwrap(), 1e-14).unwrap();
        assert!((r - 2.0).abs() < 1e-12);
        let r =
            solve_monotone(|x| (-x).exp() - 0.5, Bracket::new(0.0, 5.0).unwrap(), 1e-15).unwrap();
        assert!((r - std::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn solve_rejects_non_straddling_bracket() {
        let err = solve_monotone(|x| x + 1.0, Bracket::new(0.0, 5.0).unwrap(), 1e-12).unwrap_err();
        assert!(matches!(err, Error::NotBracketed { .. }));
    }

    #[test]
    fn j0_and_j1_closed_forms() {
        for &x in &[0.1, 0.7, 1.0, 3.3, 10.0, 57.0] {
            let (s, c) = f64::sin_cos(x);
            assert!((spherical_jn(0, x) - s / x).abs() < 1e-14);
            assert!((spherical_jn(1, x) - (s / (x * x) - c / x)).abs() < 1e-13);
        }
    }

    #[test]
    fn miller_and_upward_agree_near_crossover() {
        // evaluate ℓ = 10 just below and above x = ℓ through both paths
        for &x in &[9.5, 10.5, 11.0] {
            let up = upward(10, x);
            let mi = miller(10, x);
            assert!((up.1 - mi.1).abs() < 1e-12, "x={x}: {up:?} vs {mi:?}");
            assert!((up.0 - mi.0).abs() < 1e-12);
        }
    }

    #[test]
    fn small_argument_series_for_high_order() {
        // j_ℓ(x) ≈ x^ℓ / (2ℓ+1)!! for x ≪ ℓ
        let x: f64 = 0.5;
        let ell = 6;
        let dfact: f64 = (1..=2 * ell + 1).step_by(2).map(|k| k as f64).product();
        let approx = x.powi(ell as i32) / dfact * (1.0 - x * x / (2.0 * (2 * ell + 3) as f64));
        assert!(rel(spherical_jn(ell, x), approx) < 1e-4);
    }

    #[test]
    fn trivial_zeros_of_j0() {
        assert!(rel(bessel_zero(ZeroKind::Function, 0, 1).unwrap(), PI) < 1e-12);
        assert!(rel(bessel_zero(ZeroKind::Function, 0, 2).unwrap(), 2.0 * PI) < 1e-12);
    }

    #[test]
    fn first_zero_of_j1_solves_tan_x_eq_x() {
        // independent oracle: bisection on tan x − x inside (π, 3π/2)
        let (mut lo, mut hi) = (PI + 1e-9, 1.5 * PI - 1e-9);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid.tan() - mid < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let oracle = 0.5 * (lo + hi);
        let z = bessel_zero(ZeroKind::Function, 1, 1).unwrap();
        assert!(rel(z, oracle) < 1e-12, "{z} vs {oracle}");
        assert!((z - 4.493409457909064).abs() < 1e-11);
    }

    #[test]
    fn first_zero_of_j1_prime() {
        // j_1'(x) = 0  ⇔  tan x = 2x/(2 − x²)
        let g = |x: f64| (2.0 - x * x) * x.sin() - 2.0 * x * x.cos();
        let (mut lo, mut hi) = (1.5, 2.5);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid).signum() == g(lo).signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let z = bessel_zero(ZeroKind::Derivative, 1, 1).unwrap();
        assert!(rel(z, 0.5 * (lo + hi)) < 1e-12);
        assert!((z - 2.081575977818101).abs() < 1e-10);
    }

    #[test]
    fn derivative_of_j0_skips_origin() {
        // j_0' = −j_1, so its zeros are those of j_1
        let z = bessel_zero(ZeroKind::Derivative, 0, 1).unwrap();
        assert!(rel(z, bessel_zero(ZeroKind::Function, 1, 1).unwrap()) < 1e-12);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            bessel_zero(ZeroKind::Function, 201, 1),
            Err(Error::CapExceeded(_))
        ));
        assert!(matches!(
            bessel_zero(ZeroKind::Function, 0, 201),
            Err(Error::CapExceeded(_))
        ));
        assert!(bessel_zero(ZeroKind::Function, 0, 0).is_err());
    }

    #[test]
    fn zeros_vanish_and_interlace() {
        for ell in 0..=20 {
            let zs = bessel_zeros(ZeroKind::Function, ell, 20, BesselCaps::default()).unwrap();
            let next =
                bessel_zeros(ZeroKind::Function, ell + 1, 20, BesselCaps::default()).unwrap();
            for (n, &z) in zs.iter().enumerate() {
                let (j, dj) = spherical_jn_with_derivative(ell, z);
                assert!((j / dj).abs() < 1e-10, "ell={ell} n={n}: j={j} dj={dj}");
                if n + 1 < zs.len() {
                    assert!(z < zs[n + 1]);
                    // zeros of j_ℓ and j_{ℓ+1} interlace
                    assert!(z < next[n] && next[n] < zs[n + 1]);
                }
            }
        }
    }

    #[test]
    fn high_order_zero_is_a_root() {
        let z = bessel_zero(ZeroKind::Function, 150, 3).unwrap();
        let (j, dj) = spherical_jn_with_derivative(150, z);
        assert!((j / dj).abs() < 1e-10);
        assert!(z > 150.0);
    }

    #[test]
    fn zeros_below_matches_indexed() {
        let below = bessel_zeros_below(ZeroKind::Derivative, 3, 30.0).unwrap();
        let idx =
            bessel_zeros(ZeroKind::Derivative, 3, below.len(), BesselCaps::default()).unwrap();
        assert_eq!(below, idx);
        assert!(below.iter().all(|&x| x <= 30.0));
    }

    #[test]
    fn bose_integral_values() {
        assert_eq!(bose_integral(0.0).unwrap(), 0.0);
        assert_eq!(bose_integral(f64::INFINITY).unwrap(), PI2_OVER_6);
        assert!(bose_integral(-1.0).is_err());
        // oracle: ∫₀^X = π²/6 − Σ_k e^{−kX}(X/k + 1/k²)
        let tail = |x: f64| -> f64 {
            PI2_OVER_6
                - (1..2000)
                    .map(|k| {
                        let k = k as f64;
                        (-k * x).exp() * (x / k + 1.0 / (k * k))
                    })
                    .sum::<f64>()
        };
        for &x in &[1.0, 0.3, 2.5, 10.0, 40.0] {
            assert!((bose_integral(x).unwrap() - tail(x)).abs() < 1e-11, "x={x}");
        }
        assert!((bose_integral(1.0).unwrap() - 0.777_504_634).abs() < 1e-8);
    }

    #[test]
    fn euler_maclaurin_at_b1() {
        let em = euler_maclaurin_sums(1.0).unwrap();
        let ex = exact_sums(1.0).unwrap().sums;
        assert!((em.s1 - 1.186_600).abs() < 1e-6);
        assert!((ex.s1 - 1.186_600).abs() < 1e-5);
        assert!((em.lnz - 0.684_326).abs() < 5e-6);
        assert!((ex.lnz - 0.684_33).abs() < 1e-5);
        assert!(euler_maclaurin_sums(0.0).is_err());
        assert!(exact_sums(-1.0).is_err());
    }

    #[test]
    fn euler_maclaurin_within_one_percent_at_b4() {
        let em = euler_maclaurin_sums(4.0).unwrap();
        let ex = exact_sums(4.0).unwrap().sums;
        assert!(rel(em.s1, ex.s1) < 0.01);
        assert!(rel(em.lnz, ex.lnz) < 0.01);
    }

    #[test]
    fn partition_sums_match_direct_summation() {
        for &b in &[1e-3, 0.01, 0.2, 0.5, 0.99, 1.0, 3.0, 20.0] {
            let fast = partition_sums(b).unwrap();
            let slow = exact_sums(b).unwrap().sums;
            assert!(
                rel(fast.s1, slow.s1) < 1e-10,
                "b={b} {} {}",
                fast.s1,
                slow.s1
            );
            assert!(
                rel(fast.lnz, slow.lnz) < 1e-10,
                "b={b} {} {}",
                fast.lnz,
                slow.lnz
            );
        }
    }

    #[test]
    fn sums_strictly_decrease_in_b() {
        let mut prev = partition_sums(1e-3).unwrap();
        for k in 1..200 {
            let b = 1e-3 * 1.05f64.powi(k);
            let cur = partition_sums(b).unwrap();
            assert!(cur.s1 < prev.s1 && cur.lnz < prev.lnz);
            assert!(cur.s1 > 0.0 && cur.lnz > 0.0);
            prev = cur;
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn bose_integral_monotone_and_bounded(a in 0.0f64..50.0, d in 0.0f64..10.0) {
                let lo = bose_integral(a).unwrap();
                let hi = bose_integral(a + d).unwrap();
                prop_assert!(hi >= lo - 1e-14);
                prop_assert!(hi <= PI2_OVER_6 + 1e-14);
            }

            #[test]
            fn em_error_below_one_percent(b in 1e-3f64..4.0) {
                let em = euler_maclaurin_sums(b).unwrap();
                let ex = partition_sums(b).unwrap();
                prop_assert!(((em.s1 - ex.s1) / ex.s1).abs() < 1e-2);
                prop_assert!(((em.lnz - ex.lnz) / ex.lnz).abs() < 1e-2);
            }
        }
    }
}
