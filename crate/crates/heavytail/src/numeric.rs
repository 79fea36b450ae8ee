//! Small numeric kernels: compensated summation, adaptive quadrature,
//! bisection root finding.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Absolute floor under which interval refinement stops; avoids stalls near
/// integrable singularities at the support edge.
const QUAD_ABS_FLOOR: f64 = 1e-14;
const QUAD_MAX_DEPTH: u32 = 60;

/// Kahan–Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy)]
pub struct KahanSum<T> {
    sum: T,
    comp: T,
}

impl<T: Real> Default for KahanSum<T> {
    fn default() -> Self {
        KahanSum { sum: T::zero(), comp: T::zero() }
    }
}

impl<T: Real> KahanSum<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: T) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.comp
    }
}

pub fn kahan_sum<T: Real>(values: impl IntoIterator<Item = T>) -> T {
    let mut acc = KahanSum::new();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

fn simpson<T: Real>(fa: T, fm: T, fb: T, h: T) -> T {
    h / T::of(6.0) * (fa + T::of(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<T: Real, F: Fn(T) -> T>(
    f: &F,
    a: T,
    fa: T,
    b: T,
    fb: T,
    m: T,
    fm: T,
    whole: T,
    tol: T,
    depth: u32,
) -> T {
    let lm = (a + m) * T::of(0.5);
    let rm = (m + b) * T::of(0.5);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= T::of(15.0) * tol {
        return left + right + delta / T::of(15.0);
    }
    let half = tol * T::of(0.5);
    adapt(f, a, fa, m, fm, lm, flm, left, half, depth - 1)
        + adapt(f, m, fm, b, fb, rm, frm, right, half, depth - 1)
}

/// Adaptive Simpson quadrature of `f` on `[a, b]` to relative tolerance
/// `rel_tol`, with an absolute floor so that near-zero integrals terminate.
pub fn integrate<T: Real, F: Fn(T) -> T>(f: F, a: T, b: T, rel_tol: T) -> T {
    if !(b > a) {
        return T::zero();
    }
    let m = (a + b) * T::of(0.5);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(fa, fm, fb, b - a);
    let tol = (whole.abs() * rel_tol).max(T::of(QUAD_ABS_FLOOR));
    adapt(&f, a, fa, b, fb, m, fm, whole, tol, QUAD_MAX_DEPTH)
}

/// Integrate across a sorted list of breakpoints: kinks in the integrand
/// (support edges, region switches) should be listed so each panel is smooth.
pub fn integrate_split<T: Real, F: Fn(T) -> T>(f: F, points: &[T], rel_tol: T) -> T {
    let mut acc = KahanSum::new();
    for w in points.windows(2) {
        acc.add(integrate(&f, w[0], w[1], rel_tol));
    }
    acc.value()
}

/// Breakpoints for `[0, s]` with a kink at `kink` and decade splits above it,
/// so adaptive panels never face ten orders of magnitude at once.
pub fn decade_points<T: Real>(s: T, kink: T) -> Vec<T> {
    let mut pts = vec![T::zero()];
    if s <= T::zero() {
        return pts;
    }
    if kink > T::zero() && kink < s {
        pts.push(kink);
        let mut p = kink * T::of(10.0);
        while p < s {
            pts.push(p);
            p = p * T::of(10.0);
        }
    }
    pts.push(s);
    pts
}

/// Bisection on `[lo, hi]` for continuous `f` with `f(lo)` and `f(hi)` of
/// opposite (weak) signs. Runs to relative interval width `rel_tol` or until
/// the midpoint stops moving in the scalar type.
pub fn bisect<T: Real, F: Fn(T) -> T>(f: F, mut lo: T, mut hi: T, rel_tol: T) -> Result<T> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == T::zero() {
        return Ok(lo);
    }
    if fhi == T::zero() {
        return Ok(hi);
    }
    if (flo > T::zero()) == (fhi > T::zero()) {
        return Err(Error::BracketFailed(format!(
            "f({}) = {} and f({}) = {} have the same sign",
            lo.f64(),
            flo.f64(),
            hi.f64(),
            fhi.f64()
        )));
    }
    loop {
        let mid = (lo + hi) * T::of(0.5);
        if mid <= lo || mid >= hi {
            return Ok(mid); // no representable point between the brackets
        }
        let fmid = f(mid);
        if fmid == T::zero() {
            return Ok(mid);
        }
        if (fmid > T::zero()) == (flo > T::zero()) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if hi - lo <= rel_tol * mid.abs().max(T::of(1e-300)) {
            return Ok((lo + hi) * T::of(0.5));
        }
    }
}

/// Log-spaced grid of `points` values from `min` to `max` inclusive.
pub fn log_grid<T: Real>(min: T, max: T, points: usize) -> Vec<T> {
    assert!(points >= 2 && min > T::zero() && max > min);
    let (lmin, lmax) = (min.ln(), max.ln());
    (0..points)
        .map(|i| {
            let t = T::of(i as f64) / T::of((points - 1) as f64);
            (lmin + (lmax - lmin) * t).exp()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_polynomial_exact() {
        // x^3 over [0,2] = 4; Simpson is exact on cubics
        let v = integrate(|x: f64| x * x * x, 0.0, 2.0, 1e-12);
        assert!((v - 4.0).abs() < 1e-12);
    }

    #[test]
    fn adaptive_handles_sqrt_singularity() {
        // ∫0^1 1/sqrt(x) dx = 2, integrable singularity at 0
        let v = integrate(|x: f64| if x == 0.0 { 0.0 } else { 1.0 / x.sqrt() }, 0.0, 1.0, 1e-10);
        assert!((v - 2.0).abs() < 1e-6, "got {v}");
    }

    #[test]
    fn split_decades_wide_domain() {
        // ∫1^1e8 x^-2 dx = 1 - 1e-8
        let pts = decade_points(1e8_f64, 1.0);
        let v = integrate_split(|x: f64| x.powi(-2), &pts[1..], 1e-12);
        assert!((v - (1.0 - 1e-8)).abs() < 1e-10, "got {v}");
    }

    #[test]
    fn bisect_finds_sqrt2() {
        let r = bisect(|x: f64| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        assert!(bisect(|x: f64| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn kahan_recovers_small_terms() {
        let mut acc = KahanSum::new();
        acc.add(1e16_f64);
        for _ in 0..1000 {
            acc.add(1.0);
        }
        acc.add(-1e16_f64);
        assert_eq!(acc.value(), 1000.0);
    }

    #[test]
    fn log_grid_endpoints() {
        let g = log_grid(10.0_f64, 1e6, 13);
        assert_eq!(g.len(), 13);
        assert!((g[0] - 10.0).abs() < 1e-9);
        assert!((g[12] - 1e6).abs() / 1e6 < 1e-12);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }
}
