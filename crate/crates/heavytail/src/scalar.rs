//! Scalar abstraction: the core math is generic over `f32`/`f64`.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the library is generic over.
///
/// Special functions (gamma, log-gamma) are evaluated through `f64` and
/// converted back, so `f32` loses nothing beyond its own precision.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Lift an `f64` constant into this scalar type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 converts to any Real")
    }

    fn f64(self) -> f64 {
        self.to_f64().expect("Real converts to f64")
    }

    /// Euler–Mascheroni constant γ.
    fn euler_gamma() -> Self {
        Self::of(0.577_215_664_901_532_9)
    }

    /// Γ(x) for x where the f64 gamma is defined.
    fn gamma_fn(x: Self) -> Self {
        Self::of(libm::tgamma(x.f64()))
    }

    /// log Γ(x) for x > 0.
    fn ln_gamma_fn(x: Self) -> Self {
        Self::of(libm::lgamma(x.f64()))
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_special_values() {
        let g: f64 = Real::gamma_fn(0.5);
        assert!((g - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        assert!((f64::gamma_fn(1.0) - 1.0).abs() < 1e-14);
        assert!((f64::gamma_fn(5.0) - 24.0).abs() < 1e-10);
        // reflection sanity: Γ(1+x) = xΓ(x)
        let x = 0.3_f64;
        assert!((f64::gamma_fn(1.3) - x * f64::gamma_fn(x)).abs() < 1e-12);
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for &x in &[0.25_f64, 1.0, 2.5, 10.0, 60.0] {
            let lg = f64::ln_gamma_fn(x);
            if x < 50.0 {
                assert!((lg.exp() - f64::gamma_fn(x)).abs() / f64::gamma_fn(x) < 1e-12);
            } else {
                assert!(lg.is_finite());
            }
        }
    }

    #[test]
    fn generic_over_f32() {
        let g: f32 = Real::gamma_fn(0.5_f32);
        assert!((g - std::f32::consts::PI.sqrt()).abs() < 1e-5);
    }
}
