//! Extended reals for moment bookkeeping.
//!
//! Infinite moments are represented explicitly instead of as sentinel floats;
//! regime logic branches on finiteness.

use crate::scalar::Real;

/// A nonnegative extended real: either a finite value or +∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Moment<T> {
    Finite(T),
    Infinite,
}

impl<T: Real> Moment<T> {
    pub fn is_finite(self) -> bool {
        matches!(self, Moment::Finite(_))
    }

    /// Finite value, or `None` when infinite.
    pub fn finite(self) -> Option<T> {
        match self {
            Moment::Finite(v) => Some(v),
            Moment::Infinite => None,
        }
    }

    /// Finite value, panicking with `what` when infinite. For call sites whose
    /// preconditions already guarantee finiteness.
    pub fn expect_finite(self, what: &str) -> T {
        match self {
            Moment::Finite(v) => v,
            Moment::Infinite => panic!("{what} is infinite"),
        }
    }

    /// Collapse to an ordinary float, mapping ∞ to `T::infinity()`.
    pub fn as_float(self) -> T {
        match self {
            Moment::Finite(v) => v,
            Moment::Infinite => T::infinity(),
        }
    }

    pub fn map<F: FnOnce(T) -> T>(self, f: F) -> Moment<T> {
        match self {
            Moment::Finite(v) => Moment::Finite(f(v)),
            Moment::Infinite => Moment::Infinite,
        }
    }
}

/// The scalar moments μ, μ₂, μ₃, μ₄ and σ² = μ₂ − μ² of a positive law.
#[derive(Debug, Clone, Copy)]
pub struct MomentTable<T> {
    pub mu: Moment<T>,
    pub mu2: Moment<T>,
    pub mu3: Moment<T>,
    pub mu4: Moment<T>,
    pub sigma2: Moment<T>,
}

impl<T: Real> MomentTable<T> {
    pub fn from_raw(mu: Moment<T>, mu2: Moment<T>, mu3: Moment<T>, mu4: Moment<T>) -> Self {
        let sigma2 = match (mu, mu2) {
            (Moment::Finite(m), Moment::Finite(m2)) => Moment::Finite(m2 - m * m),
            _ => Moment::Infinite,
        };
        MomentTable { mu, mu2, mu3, mu4, sigma2 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma2_from_raw() {
        let t = MomentTable::from_raw(
            Moment::Finite(1.0_f64),
            Moment::Finite(2.0),
            Moment::Finite(6.0),
            Moment::Finite(24.0),
        );
        assert_eq!(t.sigma2, Moment::Finite(1.0));
        let t = MomentTable::from_raw(Moment::Finite(1.5_f64), Moment::Infinite, Moment::Infinite, Moment::Infinite);
        assert!(!t.sigma2.is_finite());
    }
}
