//! Scalar abstraction over the floating-point type used by the whole crate.
//!
//! Everything numeric is generic over [`Scalar`] so the same code runs in
//! `f32` and `f64`. The concrete aliases at the crate root pin `f64`, which
//! is what the tight tolerances of the exact oracle require.

use std::fmt;
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

/// Floating-point scalar usable for phase-space coordinates, control
/// parameters, energies and probabilities.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + fmt::Debug
    + fmt::Display
    + fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// Convert from `f64`, rounding to the nearest representable value.
    fn from_f64_lossy(v: f64) -> Self;

    /// Widen (or pass through) to `f64`.
    fn to_f64_lossy(self) -> f64;

    /// One standard-normal draw from the given stream.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One uniform draw from `[0, 1)`.
    fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

macro_rules! impl_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_f64_lossy(v: f64) -> Self {
                v as $t
            }

            fn to_f64_lossy(self) -> f64 {
                self as f64
            }

            fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                StandardNormal.sample(rng)
            }

            fn unit_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.random::<$t>()
            }
        }
    };
}

impl_scalar!(f32);
impl_scalar!(f64);

/// `log(sum_i exp(v_i))` without overflow; `-inf` for an empty slice.
pub fn logsumexp<F: Scalar>(values: &[F]) -> F {
    let mut max = F::neg_infinity();
    for &v in values {
        if v > max {
            max = v;
        }
    }
    if max == F::neg_infinity() || max.is_nan() {
        return max;
    }
    let mut sum = F::zero();
    for &v in values {
        sum += (v - max).exp();
    }
    max + sum.ln()
}

/// `log(exp(a) - exp(b))` for `a >= b`; `-inf` when the difference underflows.
pub fn logsubexp<F: Scalar>(a: F, b: F) -> F {
    if b == F::neg_infinity() {
        return a;
    }
    debug_assert!(b <= a);
    // ln(1 - e^{b-a}) via ln_1p for accuracy near b == a.
    a + (-((b - a).exp())).ln_1p()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logsumexp_matches_naive_for_small_values() {
        let vals = [0.5_f64, 2.0, -1.0];
        let naive = vals.iter().map(|v| v.exp()).sum::<f64>().ln();
        assert!((logsumexp(&vals) - naive).abs() < 1e-14);
    }

    #[test]
    fn logsumexp_handles_large_values() {
        let vals = [1234.0_f64, 1232.0];
        let expected = 1232.0 + (2.0_f64.exp() + 1.0).ln();
        assert!((logsumexp(&vals) - expected).abs() < 1e-12);
        assert!(vals.iter().map(|v| v.exp()).sum::<f64>().is_infinite());
    }

    #[test]
    fn logsumexp_empty_is_neg_infinity() {
        let vals: [f64; 0] = [];
        assert_eq!(logsumexp(&vals), f64::NEG_INFINITY);
    }

    #[test]
    fn logsubexp_roundtrip() {
        let a = 3.0_f64;
        let b = 1.0_f64;
        let expected = (a.exp() - b.exp()).ln();
        assert!((logsubexp(a, b) - expected).abs() < 1e-13);
    }

    #[test]
    fn generic_code_runs_in_f32() {
        let vals = [1.0_f32, 2.0];
        let naive = (1.0_f32.exp() + 2.0_f32.exp()).ln();
        assert!((logsumexp(&vals) - naive).abs() < 1e-6);
    }
}
