//! Daubechies filter coefficients.
//!
//! The coefficients `c_0..c_{2p-1}` are normalized so that they sum to 2,
//! matching the two-scale relation `φ(x) = Σ c_k φ(2x − k)` without a `√2`
//! factor. They are embedded as double-word constants (about 106 bits).

mod table;

use crate::error::{Error, Result};
use crate::real::{DoubleF64, Real};

pub const MIN_ORDER: u32 = 2;
pub const MAX_ORDER: u32 = 19;

/// Bits carried by the embedded coefficients.
pub const WIDE_MANTISSA_BITS: u32 = DoubleF64::MANTISSA_BITS;

pub(crate) fn check_order(p: u32) -> Result<()> {
    if (MIN_ORDER..=MAX_ORDER).contains(&p) {
        Ok(())
    } else {
        Err(Error::UnsupportedOrder { p })
    }
}

/// The `2p` filter coefficients of the Daubechies scaling function with `p`
/// vanishing moments.
#[derive(Clone, Debug, PartialEq)]
pub struct FilterBank {
    p: u32,
    coeffs: Vec<DoubleF64>,
}

impl FilterBank {
    pub fn new(p: u32) -> Result<Self> {
        check_order(p)?;
        let coeffs = table::FILTERS[(p - MIN_ORDER) as usize]
            .iter()
            .map(|&(hi, lo)| DoubleF64 { hi, lo })
            .collect();
        Ok(FilterBank { p, coeffs })
    }

    /// Wraps arbitrary coefficients without checking them; useful for
    /// feeding perturbed banks to [`verify_filter`].
    pub fn from_coefficients(p: u32, coeffs: Vec<DoubleF64>) -> Self {
        FilterBank { p, coeffs }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[DoubleF64] {
        &self.coeffs
    }

    /// Coefficients rounded to the working type `W`.
    pub fn coeffs_as<W: Real>(&self) -> Vec<W> {
        self.coeffs.iter().map(|&c| W::from_dd(c)).collect()
    }
}

/// Shorthand for [`FilterBank::new`].
pub fn filter_coefficients(p: u32) -> Result<FilterBank> {
    FilterBank::new(p)
}

/// Largest residual of each filter identity.
#[derive(Clone, Debug, PartialEq)]
pub struct FilterReport {
    pub p: u32,
    /// `|Σ c_k − 2|`
    pub sum: f64,
    /// `max(|Σ c_{2k} − 1|, |Σ c_{2k+1} − 1|)`
    pub parity_sums: f64,
    /// `max_m |Σ c_k c_{k+2m} − 2 δ_{m0}|`
    pub orthonormality: f64,
    /// `max_m |Σ (−1)^k k^m c_k| / Σ |k^m c_k|` for `m < p`
    pub vanishing_moments: f64,
    /// `|coeffs| − 2p`, zero for a well-formed bank.
    pub length_mismatch: usize,
}

impl FilterReport {
    /// Acceptance threshold `2^(8 − wide mantissa bits)`.
    pub fn threshold() -> f64 {
        crate::real::pow2(8 - WIDE_MANTISSA_BITS as i32)
    }

    pub fn max_residual(&self) -> f64 {
        self.sum
            .max(self.parity_sums)
            .max(self.orthonormality)
            .max(self.vanishing_moments)
    }

    pub fn passes(&self) -> bool {
        self.length_mismatch == 0 && self.max_residual() <= Self::threshold()
    }
}

/// Evaluates every filter identity in double-word arithmetic.
///
/// Moment sums grow like `(2p)^m`, so their residual is reported relative to
/// `Σ |k^m c_k|`; the other identities are absolute.
pub fn verify_filter(bank: &FilterBank) -> FilterReport {
    let c = bank.coeffs();
    let two = DoubleF64::from_f64(2.0);
    let one = DoubleF64::ONE;

    let total: DoubleF64 = c.iter().copied().sum();
    let even: DoubleF64 = c.iter().step_by(2).copied().sum();
    let odd: DoubleF64 = c.iter().skip(1).step_by(2).copied().sum();

    let mut ortho = 0.0f64;
    for m in 0..c.len().div_ceil(2) {
        let s: DoubleF64 = (0..c.len().saturating_sub(2 * m))
            .map(|k| c[k] * c[k + 2 * m])
            .sum();
        let target = if m == 0 { two } else { DoubleF64::ZERO };
        ortho = ortho.max((s - target).abs().to_f64());
    }

    let mut moments = 0.0f64;
    for m in 0..bank.p() {
        let mut s = DoubleF64::ZERO;
        let mut scale = DoubleF64::ZERO;
        for (k, &ck) in c.iter().enumerate() {
            let term = DoubleF64::from_f64(k as f64).powi(m) * ck;
            scale += term.abs();
            if k % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        if scale.hi > 0.0 {
            moments = moments.max((s / scale).abs().to_f64());
        }
    }

    FilterReport {
        p: bank.p(),
        sum: (total - two).abs().to_f64(),
        parity_sums: (even - one).abs().to_f64().max((odd - one).abs().to_f64()),
        orthonormality: ortho,
        vanishing_moments: moments,
        length_mismatch: c.len().abs_diff(2 * bank.p() as usize),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_matches_closed_form() {
        let bank = FilterBank::new(2).unwrap();
        let s3 = DoubleF64::from_f64(3.0).sqrt();
        let one = DoubleF64::ONE;
        let three = DoubleF64::from_f64(3.0);
        let expected = [
            (one + s3).mul_pow2(-2),
            (three + s3).mul_pow2(-2),
            (three - s3).mul_pow2(-2),
            (one - s3).mul_pow2(-2),
        ];
        for (got, want) in bank.coeffs().iter().zip(expected) {
            assert!((*got - want).abs().to_f64() < 1e-31, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn every_order_passes_the_identity_suite() {
        for p in MIN_ORDER..=MAX_ORDER {
            let bank = FilterBank::new(p).unwrap();
            assert_eq!(bank.len(), 2 * p as usize);
            let report = verify_filter(&bank);
            assert!(report.passes(), "p = {p}: {report:?}");
        }
    }

    #[test]
    fn out_of_range_orders_are_rejected() {
        assert_eq!(FilterBank::new(20), Err(Error::UnsupportedOrder { p: 20 }));
        assert_eq!(FilterBank::new(1), Err(Error::UnsupportedOrder { p: 1 }));
        let msg = FilterBank::new(20).unwrap_err().to_string();
        assert!(msg.contains("2..=19"), "{msg}");
    }

    #[test]
    fn perturbation_shows_up_in_orthonormality() {
        let bank = FilterBank::new(4).unwrap();
        let mut c = bank.coeffs().to_vec();
        c[3] += DoubleF64::from_f64(1e-6);
        let report = verify_filter(&FilterBank::from_coefficients(4, c));
        assert!(report.orthonormality >= 1e-7, "{report:?}");
        assert!(!report.passes());
    }

    #[test]
    fn p2_moments_vanish_to_rounding() {
        let report = verify_filter(&FilterBank::new(2).unwrap());
        assert!(report.vanishing_moments < 1e-30, "{report:?}");
    }

    #[test]
    fn repeated_calls_are_bit_identical() {
        for p in [2, 9, 19] {
            assert_eq!(FilterBank::new(p).unwrap(), FilterBank::new(p).unwrap());
        }
    }
}
