//! Constant-time local interpolation on equispaced dyadic tables.
//!
//! Records are stored interleaved (`y, v, acc, jerk` per abscissa) since
//! every evaluation reads both endpoint records of its cell in full.
//! Hermite bases are written in Horner form in the local coordinate
//! `t = (x − x_i)/h`; value terms use `y_i + h01(t)(y_{i+1} − y_i)`,
//! which is the same polynomial as `h00 y_i + h01 y_{i+1}` because
//! `h00 = 1 − h01` for every order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::real::Real;

/// Default exponent of the matched Hölder model.
pub const HOLDER_ALPHA: f64 = 0.5;

/// Hölder exponent `2 − ln(1 + √3)/ln 2` of the `p = 2` scaling function.
pub fn p2_holder_exponent() -> f64 {
    2.0 - (1.0 + 3f64.sqrt()).ln() / 2f64.ln()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InterpolatorKind {
    Linear,
    MatchedHolder,
    CubicHermite,
    QuinticHermite,
    SepticHermite,
}

impl InterpolatorKind {
    /// Derivative grids the interpolant itself consumes.
    pub fn derivative_grids_required(self) -> usize {
        match self {
            InterpolatorKind::Linear => 0,
            InterpolatorKind::MatchedHolder | InterpolatorKind::CubicHermite => 1,
            InterpolatorKind::QuinticHermite => 2,
            InterpolatorKind::SepticHermite => 3,
        }
    }

    /// The interpolator with the smallest asymptotic error constant for `p`.
    pub fn best_for(p: u32) -> Result<Self> {
        crate::filters::check_order(p)?;
        Ok(match p {
            2 => InterpolatorKind::MatchedHolder,
            3 => InterpolatorKind::Linear,
            4 | 5 => InterpolatorKind::CubicHermite,
            6..=9 => InterpolatorKind::QuinticHermite,
            _ => InterpolatorKind::SepticHermite,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            InterpolatorKind::Linear => "linear",
            InterpolatorKind::MatchedHolder => "matched-holder",
            InterpolatorKind::CubicHermite => "cubic-hermite",
            InterpolatorKind::QuinticHermite => "quintic-hermite",
            InterpolatorKind::SepticHermite => "septic-hermite",
        }
    }
}

impl fmt::Display for InterpolatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InterpolatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "linear" => InterpolatorKind::Linear,
            "matched-holder" => InterpolatorKind::MatchedHolder,
            "cubic-hermite" => InterpolatorKind::CubicHermite,
            "quintic-hermite" => InterpolatorKind::QuinticHermite,
            "septic-hermite" => InterpolatorKind::SepticHermite,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown interpolator `{other}`"
                )))
            }
        })
    }
}

/// Array-of-structs table over the abscissas `a + i·2^-j`.
#[derive(Clone, Debug, PartialEq)]
pub struct InterleavedTable<T> {
    left: i64,
    refinement: u32,
    arity: usize,
    data: Vec<T>,
}

#[inline]
fn c<T: Real>(x: f64) -> T {
    T::from_f64(x)
}

impl<T: Real> InterleavedTable<T> {
    /// Interleaves equally long columns (value first, then derivatives).
    pub fn from_columns(left: i64, refinement: u32, columns: &[&[T]]) -> Result<Self> {
        let arity = columns.len();
        if arity == 0 || arity > 4 {
            return Err(Error::InvalidArgument(format!(
                "tables hold 1 to 4 columns, got {arity}"
            )));
        }
        let len = columns[0].len();
        if len < 2 || columns.iter().any(|col| col.len() != len) {
            return Err(Error::InvalidArgument(
                "columns must have equal length of at least 2".into(),
            ));
        }
        let mut data = Vec::with_capacity(len * arity);
        for i in 0..len {
            data.extend(columns.iter().map(|col| col[i]));
        }
        Ok(InterleavedTable {
            left,
            refinement,
            arity,
            data,
        })
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn refinement(&self) -> u32 {
        self.refinement
    }

    pub fn left(&self) -> i64 {
        self.left
    }

    pub fn right(&self) -> f64 {
        self.abscissa(self.len() - 1)
    }

    pub fn spacing(&self) -> T {
        T::one().mul_pow2(-(self.refinement as i32))
    }

    pub fn abscissa(&self, i: usize) -> f64 {
        self.left as f64 + i as f64 * crate::real::pow2(-(self.refinement as i32))
    }

    pub fn record(&self, i: usize) -> &[T] {
        &self.data[i * self.arity..(i + 1) * self.arity]
    }

    /// Approximate heap footprint.
    pub fn bytes(&self) -> usize {
        self.data.len() * std::mem::size_of::<T>()
    }

    /// Cell index and local coordinate of `x`. The right endpoint maps to
    /// the last cell with `t = 1`. `None` outside the table.
    #[inline]
    pub fn locate(&self, x: T) -> Option<(usize, T)> {
        let scaled = x.mul_pow2(self.refinement as i32);
        let fl = scaled.floor();
        let t = scaled - fl;
        let fl = fl.to_f64();
        if !fl.is_finite() {
            return None;
        }
        let idx = fl as i64 - self.left * (1i64 << self.refinement);
        let last = self.len() as i64 - 1;
        if idx < 0 || idx > last {
            return None;
        }
        if idx == last {
            if t != T::zero() {
                return None;
            }
            return Some((last as usize - 1, T::one()));
        }
        Some((idx as usize, t))
    }

    #[inline]
    fn cell(&self, x: T) -> Option<(&[T], &[T], T)> {
        let (i, t) = self.locate(x)?;
        let a = self.arity;
        let base = i * a;
        Some((&self.data[base..base + a], &self.data[base + a..base + 2 * a], t))
    }

    fn require(&self, arity: usize) {
        assert!(
            self.arity >= arity,
            "interpolant needs {arity} columns, table has {}",
            self.arity
        );
    }

    /// Piecewise linear interpolation of the value column.
    pub fn linear(&self, x: T) -> Option<T> {
        self.linear_column(0, x)
    }

    /// Piecewise linear interpolation of any column.
    pub fn linear_column(&self, col: usize, x: T) -> Option<T> {
        self.require(col + 1);
        let (a, b, t) = self.cell(x)?;
        Some(a[col] + t * (b[col] - a[col]))
    }

    pub fn cubic_hermite(&self, x: T) -> Option<T> {
        self.require(2);
        let (a, b, t) = self.cell(x)?;
        let h = self.spacing();
        let dy = b[0] - a[0];
        let h01 = t * t * (c::<T>(3.0) - c::<T>(2.0) * t);
        let s = t - T::one();
        let h10 = t * s * s;
        let h11 = t * t * s;
        Some(a[0] + h01 * dy + h * (h10 * a[1] + h11 * b[1]))
    }

    pub fn cubic_hermite_prime(&self, x: T) -> Option<T> {
        self.require(2);
        let (a, b, t) = self.cell(x)?;
        let h = self.spacing();
        let dy = b[0] - a[0];
        let d01 = c::<T>(6.0) * t * (T::one() - t);
        let d10 = T::one() + t * (c::<T>(-4.0) + c::<T>(3.0) * t);
        let d11 = t * (c::<T>(3.0) * t - c::<T>(2.0));
        Some(d01 * dy / h + d10 * a[1] + d11 * b[1])
    }

    pub fn quintic_hermite(&self, x: T) -> Option<T> {
        self.require(3);
        let (a, b, t) = self.cell(x)?;
        let h = self.spacing();
        let dy = b[0] - a[0];
        let t2 = t * t;
        let t3 = t2 * t;
        let h01 = t3 * (c::<T>(10.0) + t * (c::<T>(-15.0) + c::<T>(6.0) * t));
        let h10 = t * (T::one() + t2 * (c::<T>(-6.0) + t * (c::<T>(8.0) - c::<T>(3.0) * t)));
        let h11 = t3 * (c::<T>(-4.0) + t * (c::<T>(7.0) - c::<T>(3.0) * t));
        let h20 = t2 * (T::one() + t * (c::<T>(-3.0) + t * (c::<T>(3.0) - t)));
        let h21 = t3 * (T::one() + t * (c::<T>(-2.0) + t));
        let half_h2 = h * h * c::<T>(0.5);
        Some(a[0] + h01 * dy + h * (h10 * a[1] + h11 * b[1]) + half_h2 * (h20 * a[2] + h21 * b[2]))
    }

    pub fn quintic_hermite_prime(&self, x: T) -> Option<T> {
        self.require(3);
        let (a, b, t) = self.cell(x)?;
        let h = self.spacing();
        let dy = b[0] - a[0];
        let t2 = t * t;
        let s = T::one() - t;
        let d01 = c::<T>(30.0) * t2 * s * s;
        let d10 = T::one() + t2 * (c::<T>(-18.0) + t * (c::<T>(32.0) - c::<T>(15.0) * t));
        let d11 = t2 * (c::<T>(-12.0) + t * (c::<T>(28.0) - c::<T>(15.0) * t));
        let d20 = t * (c::<T>(2.0) + t * (c::<T>(-9.0) + t * (c::<T>(12.0) - c::<T>(5.0) * t)));
        let d21 = t2 * (c::<T>(3.0) + t * (c::<T>(-8.0) + c::<T>(5.0) * t));
        Some(
            d01 * dy / h
                + d10 * a[1]
                + d11 * b[1]
                + h * c::<T>(0.5) * (d20 * a[2] + d21 * b[2]),
        )
    }

    pub fn quintic_hermite_double_prime(&self, x: T) -> Option<T> {
        self.require(3);
        let (a, b, t) = self.cell(x)?;
        let h = self.spacing();
        let dy = b[0] - a[0];
        let e01 = t * (c::<T>(60.0) + t * (c::<T>(-180.0) + c::<T>(120.0) * t));
        let e10 = t * (c::<T>(-36.0) + t * (c::<T>(96.0) - c::<T>(60.0) * t));
        let e11 = t * (c::<T>(-24.0) + t * (c::<T>(84.0) - c::<T>(60.0) * t));
        let e20 = c::<T>(2.0) + t * (c::<T>(-18.0) + t * (c::<T>(36.0) - c::<T>(20.0) * t));
        let e21 = t * (c::<T>(6.0) + t * (c::<T>(-24.0) + c::<T>(20.0) * t));
        Some(
            e01 * dy / (h * h)
                + (e10 * a[1] + e11 * b[1]) / h
                + c::<T>(0.5) * (e20 * a[2] + e21 * b[2]),
        )
    }

    pub fn septic_hermite(&self, x: T) -> Option<T> {
        self.require(4);
        let (a, b, t) = self.cell(x)?;
        let h = self.spacing();
        let dy = b[0] - a[0];
        let t2 = t * t;
        let t3 = t2 * t;
        let t4 = t2 * t2;
        let h01 = t4 * (c::<T>(35.0) + t * (c::<T>(-84.0) + t * (c::<T>(70.0) - c::<T>(20.0) * t)));
        let h10 = t
            * (T::one()
                + t3 * (c::<T>(-20.0) + t * (c::<T>(45.0) + t * (c::<T>(-36.0) + c::<T>(10.0) * t))));
        let h11 = t4 * (c::<T>(-15.0) + t * (c::<T>(39.0) + t * (c::<T>(-34.0) + c::<T>(10.0) * t)));
        let h20 = t2
            * (T::one()
                + t2 * (c::<T>(-10.0) + t * (c::<T>(20.0) + t * (c::<T>(-15.0) + c::<T>(4.0) * t))));
        let h21 = t4 * (c::<T>(5.0) + t * (c::<T>(-14.0) + t * (c::<T>(13.0) - c::<T>(4.0) * t)));
        let h30 = t3 * (T::one() + t * (c::<T>(-4.0) + t * (c::<T>(6.0) + t * (c::<T>(-4.0) + t))));
        let h31 = t4 * (-T::one() + t * (c::<T>(3.0) + t * (c::<T>(-3.0) + t)));
        let h2 = h * h;
        Some(
            a[0] + h01 * dy
                + h * (h10 * a[1] + h11 * b[1])
                + h2 * c::<T>(0.5) * (h20 * a[2] + h21 * b[2])
                + h2 * h / c::<T>(6.0) * (h30 * a[3] + h31 * b[3]),
        )
    }

    pub fn septic_hermite_prime(&self, x: T) -> Option<T> {
        self.require(4);
        let (a, b, t) = self.cell(x)?;
        let h = self.spacing();
        let dy = b[0] - a[0];
        let t2 = t * t;
        let t3 = t2 * t;
        let d01 = t3 * (c::<T>(140.0) + t * (c::<T>(-420.0) + t * (c::<T>(420.0) - c::<T>(140.0) * t)));
        let d10 = T::one()
            + t3 * (c::<T>(-80.0) + t * (c::<T>(225.0) + t * (c::<T>(-216.0) + c::<T>(70.0) * t)));
        let d11 = t3 * (c::<T>(-60.0) + t * (c::<T>(195.0) + t * (c::<T>(-204.0) + c::<T>(70.0) * t)));
        let d20 = t
            * (c::<T>(2.0)
                + t2 * (c::<T>(-40.0) + t * (c::<T>(100.0) + t * (c::<T>(-90.0) + c::<T>(28.0) * t))));
        let d21 = t3 * (c::<T>(20.0) + t * (c::<T>(-70.0) + t * (c::<T>(78.0) - c::<T>(28.0) * t)));
        let d30 = t2
            * (c::<T>(3.0) + t * (c::<T>(-16.0) + t * (c::<T>(30.0) + t * (c::<T>(-24.0) + c::<T>(7.0) * t))));
        let d31 = t3 * (c::<T>(-4.0) + t * (c::<T>(15.0) + t * (c::<T>(-18.0) + c::<T>(7.0) * t)));
        Some(
            d01 * dy / h
                + d10 * a[1]
                + d11 * b[1]
                + h * c::<T>(0.5) * (d20 * a[2] + d21 * b[2])
                + h * h / c::<T>(6.0) * (d30 * a[3] + d31 * b[3]),
        )
    }

    pub fn septic_hermite_double_prime(&self, x: T) -> Option<T> {
        self.require(4);
        let (a, b, t) = self.cell(x)?;
        let h = self.spacing();
        let dy = b[0] - a[0];
        let t2 = t * t;
        let e01 = t2 * (c::<T>(420.0) + t * (c::<T>(-1680.0) + t * (c::<T>(2100.0) - c::<T>(840.0) * t)));
        let e10 = t2 * (c::<T>(-240.0) + t * (c::<T>(900.0) + t * (c::<T>(-1080.0) + c::<T>(420.0) * t)));
        let e11 = t2 * (c::<T>(-180.0) + t * (c::<T>(780.0) + t * (c::<T>(-1020.0) + c::<T>(420.0) * t)));
        let e20 = c::<T>(2.0)
            + t2 * (c::<T>(-120.0) + t * (c::<T>(400.0) + t * (c::<T>(-450.0) + c::<T>(168.0) * t)));
        let e21 = t2 * (c::<T>(60.0) + t * (c::<T>(-280.0) + t * (c::<T>(390.0) - c::<T>(168.0) * t)));
        let e30 = t
            * (c::<T>(6.0)
                + t * (c::<T>(-48.0) + t * (c::<T>(120.0) + t * (c::<T>(-120.0) + c::<T>(42.0) * t))));
        let e31 = t2 * (c::<T>(-12.0) + t * (c::<T>(60.0) + t * (c::<T>(-90.0) + c::<T>(42.0) * t)));
        Some(
            e01 * dy / (h * h)
                + (e10 * a[1] + e11 * b[1]) / h
                + c::<T>(0.5) * (e20 * a[2] + e21 * b[2])
                + h / c::<T>(6.0) * (e30 * a[3] + e31 * b[3]),
        )
    }

    /// `y_i + c1·t + c2·t^α`, matching the value at both nodes and the
    /// derivative at the right node while leaving a Hölder cusp at the left.
    pub fn matched_holder(&self, alpha: T, x: T) -> Option<T> {
        self.require(2);
        let (a, b, t) = self.cell(x)?;
        let (c1, c2) = holder_coefficients(alpha, self.spacing(), a, b);
        Some(a[0] + c1 * t + c2 * holder_pow(t, alpha))
    }

    /// Derivative of [`matched_holder`](Self::matched_holder); at exact nodes
    /// (where the model's right limit is unbounded) the stored derivative.
    pub fn matched_holder_prime(&self, alpha: T, x: T) -> Option<T> {
        self.require(2);
        let (a, b, t) = self.cell(x)?;
        if t == T::zero() {
            return Some(a[1]);
        }
        let h = self.spacing();
        let (c1, c2) = holder_coefficients(alpha, h, a, b);
        Some((c1 + alpha * c2 * holder_pow(t, alpha) / t) / h)
    }
}

#[inline]
fn holder_pow<T: Real>(t: T, alpha: T) -> T {
    if alpha == c::<T>(0.5) {
        t.sqrt()
    } else {
        t.powf(alpha)
    }
}

#[inline]
fn holder_coefficients<T: Real>(alpha: T, h: T, a: &[T], b: &[T]) -> (T, T) {
    let dy = b[0] - a[0];
    let vh = b[1] * h;
    let inv = T::one() / (T::one() - alpha);
    ((vh - alpha * dy) * inv, (dy - vh) * inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn table(columns: &[&[f64]], left: i64, j: u32) -> InterleavedTable<f64> {
        InterleavedTable::from_columns(left, j, columns).unwrap()
    }

    #[test]
    fn best_interpolator_mapping() {
        assert_eq!(InterpolatorKind::best_for(2).unwrap(), InterpolatorKind::MatchedHolder);
        assert_eq!(InterpolatorKind::best_for(3).unwrap(), InterpolatorKind::Linear);
        assert_eq!(InterpolatorKind::best_for(5).unwrap(), InterpolatorKind::CubicHermite);
        assert_eq!(InterpolatorKind::best_for(7).unwrap(), InterpolatorKind::QuinticHermite);
        assert_eq!(InterpolatorKind::best_for(12).unwrap(), InterpolatorKind::SepticHermite);
        assert!(InterpolatorKind::best_for(20).is_err());
        for k in [
            InterpolatorKind::Linear,
            InterpolatorKind::MatchedHolder,
            InterpolatorKind::CubicHermite,
            InterpolatorKind::QuinticHermite,
            InterpolatorKind::SepticHermite,
        ] {
            assert_eq!(k.name().parse::<InterpolatorKind>().unwrap(), k);
        }
    }

    #[test]
    fn locate_examples() {
        let y = [0.0, 1.0, 2.0, 3.0, 4.0];
        let tab = table(&[&y], 1, 2); // a = 1, h = 1/4
        assert_eq!(tab.locate(1.0), Some((0, 0.0)));
        assert_eq!(tab.locate(1.0 + 1.5 * 0.25), Some((1, 0.5)));
        assert_eq!(tab.locate(2.0), Some((3, 1.0)));
        assert_eq!(tab.locate(0.99), None);
        assert_eq!(tab.locate(2.01), None);
        assert_eq!(tab.linear(2.0), Some(4.0));
    }

    #[test]
    fn linear_examples() {
        let tab = table(&[&[2.0, 4.0, 7.0]], 0, 0);
        assert_eq!(tab.linear(0.5), Some(3.0));
        assert_eq!(tab.linear(1.0), Some(4.0));
        let affine: Vec<f64> = (0..9).map(|i| 3.0 - 0.5 * i as f64 / 4.0).collect();
        let tab = table(&[&affine], 0, 2);
        for k in 0..64 {
            let x = k as f64 / 32.0;
            assert_eq!(tab.linear(x), Some(3.0 - 0.5 * x));
        }
    }

    #[test]
    fn cubic_midpoint_of_step() {
        let tab = table(&[&[0.0, 1.0], &[0.0, 0.0]], 0, 0);
        assert_eq!(tab.cubic_hermite(0.5), Some(0.5));
        assert_eq!(tab.cubic_hermite(0.0), Some(0.0));
        assert_eq!(tab.cubic_hermite(1.0), Some(1.0));
    }

    fn sampled(poly: &[f64], derivs: usize, left: i64, j: u32, n: usize) -> InterleavedTable<f64> {
        let h = crate::real::pow2(-(j as i32));
        let mut cols = vec![Vec::with_capacity(n); derivs + 1];
        for i in 0..n {
            let x = left as f64 + i as f64 * h;
            for (d, col) in cols.iter_mut().enumerate() {
                col.push(poly_eval(poly, d, x));
            }
        }
        let refs: Vec<&[f64]> = cols.iter().map(|c| c.as_slice()).collect();
        table(&refs, left, j)
    }

    fn poly_eval(coeffs: &[f64], deriv: usize, x: f64) -> f64 {
        coeffs
            .iter()
            .enumerate()
            .filter(|(k, _)| *k >= deriv)
            .map(|(k, &ck)| {
                let falling: f64 = ((k - deriv + 1)..=k).map(|m| m as f64).product();
                ck * falling * x.powi((k - deriv) as i32)
            })
            .sum()
    }

    #[test]
    fn cubic_reproduces_cubics() {
        // q(x) = x³ − 2x + 1
        let q = [1.0, -2.0, 0.0, 1.0];
        let tab = sampled(&q, 1, -1, 2, 13);
        for k in 0..=300 {
            let x = -1.0 + 3.0 * k as f64 / 300.0;
            let want = poly_eval(&q, 0, x);
            let got = tab.cubic_hermite(x).unwrap();
            assert!((got - want).abs() <= 1e-13 * want.abs().max(1.0), "x = {x}");
            let dp = tab.cubic_hermite_prime(x).unwrap();
            assert!((dp - poly_eval(&q, 1, x)).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn quintic_nodes_are_exact() {
        let q = [0.3, -1.0, 2.0, 0.5, -0.25, 0.125];
        let tab = sampled(&q, 2, 0, 3, 17);
        for i in 0..16 {
            let x = tab.abscissa(i);
            let r = tab.record(i);
            assert_eq!(tab.quintic_hermite(x), Some(r[0]));
            assert_eq!(tab.quintic_hermite_prime(x), Some(r[1]));
            assert_eq!(tab.quintic_hermite_double_prime(x), Some(r[2]));
        }
    }

    #[test]
    fn septic_nodes_are_exact() {
        let q = [0.3, -1.0, 2.0, 0.5, -0.25, 0.125, 0.01, -0.02];
        let tab = sampled(&q, 3, 0, 3, 17);
        for i in 0..16 {
            let x = tab.abscissa(i);
            let r = tab.record(i);
            assert_eq!(tab.septic_hermite(x), Some(r[0]));
            assert_eq!(tab.septic_hermite_prime(x), Some(r[1]));
            assert_eq!(tab.septic_hermite_double_prime(x), Some(r[2]));
        }
    }

    #[test]
    fn derivatives_agree_with_centered_differences() {
        let f = |x: f64| (1.3 * x).sin() + 0.2 * x * x;
        let df = |x: f64| 1.3 * (1.3 * x).cos() + 0.4 * x;
        let d2f = |x: f64| -1.69 * (1.3 * x).sin() + 0.4;
        let d3f = |x: f64| -2.197 * (1.3 * x).cos();
        let j = 3;
        let n = 8 * 4 + 1;
        let h = 0.125;
        let col = |g: &dyn Fn(f64) -> f64| (0..n).map(|i| g(i as f64 * h)).collect::<Vec<_>>();
        let (y, v, a, jk) = (col(&f), col(&df), col(&d2f), col(&d3f));
        let cubic = table(&[&y, &v], 0, j);
        let quintic = table(&[&y, &v, &a], 0, j);
        let septic = table(&[&y, &v, &a, &jk], 0, j);
        let mut errs = Vec::new();
        for delta in [1e-2, 5e-3] {
            let mut worst = 0.0f64;
            for k in 1..40 {
                let x = 0.1 + k as f64 * 0.0917;
                let fd = |g: &dyn Fn(f64) -> f64| (g(x + delta) - g(x - delta)) / (2.0 * delta);
                let checks = [
                    (fd(&|z| cubic.cubic_hermite(z).unwrap()), cubic.cubic_hermite_prime(x).unwrap()),
                    (fd(&|z| quintic.quintic_hermite(z).unwrap()), quintic.quintic_hermite_prime(x).unwrap()),
                    (
                        fd(&|z| quintic.quintic_hermite_prime(z).unwrap()),
                        quintic.quintic_hermite_double_prime(x).unwrap(),
                    ),
                    (fd(&|z| septic.septic_hermite(z).unwrap()), septic.septic_hermite_prime(x).unwrap()),
                    (
                        fd(&|z| septic.septic_hermite_prime(z).unwrap()),
                        septic.septic_hermite_double_prime(x).unwrap(),
                    ),
                ];
                for (a, b) in checks {
                    worst = worst.max((a - b).abs());
                }
            }
            errs.push(worst);
        }
        // second order: halving δ cuts the discrepancy by ~4
        assert!(errs[0] < 1e-2, "{errs:?}");
        assert!(errs[1] < errs[0] / 3.0, "{errs:?}");
    }

    #[test]
    fn quintic_prime_matches_expanded_formula() {
        let y = [0.2, -0.7];
        let v = [1.5, 0.3];
        let a = [-2.0, 4.0];
        let tab = table(&[&y, &v, &a], 0, 2);
        let dx = 0.25;
        for k in 0..=20 {
            let t = k as f64 / 20.0;
            let x = t * dx;
            let printed = (30.0 * t * t - 60.0 * t.powi(3) + 30.0 * t.powi(4)) * (y[1] - y[0]) / dx
                + (1.0 - 18.0 * t * t + 32.0 * t.powi(3) - 15.0 * t.powi(4)) * v[0]
                - (12.0 * t * t - 28.0 * t.powi(3) + 15.0 * t.powi(4)) * v[1]
                + dx / 2.0
                    * ((2.0 * t - 9.0 * t * t + 12.0 * t.powi(3) - 5.0 * t.powi(4)) * a[0]
                        + (3.0 * t * t - 8.0 * t.powi(3) + 5.0 * t.powi(4)) * a[1]);
            let got = tab.quintic_hermite_prime(x).unwrap();
            assert!((got - printed).abs() < 1e-13, "t = {t}: {got} vs {printed}");
        }
    }

    #[test]
    fn septic_second_derivative_matches_expanded_formula() {
        let y = [0.2, -0.7];
        let v = [1.5, 0.3];
        let a = [-2.0, 4.0];
        let jk = [10.0, -3.0];
        let tab = table(&[&y, &v, &a, &jk], 0, 1);
        let dx = 0.5;
        for k in 0..=20 {
            let t = k as f64 / 20.0;
            let tp = |n: i32| t.powi(n);
            let printed = 420.0 * tp(2) * (1.0 - 4.0 * t + 5.0 * tp(2) - 2.0 * tp(3)) * (y[1] - y[0])
                / (dx * dx)
                + 60.0 * tp(2) * (-4.0 + 15.0 * t - 18.0 * tp(2) + 7.0 * tp(3)) * v[0] / dx
                + 60.0 * tp(2) * (-3.0 + 13.0 * t - 17.0 * tp(2) + 7.0 * tp(3)) * v[1] / dx
                + (1.0 - 60.0 * tp(2) + 200.0 * tp(3) - 225.0 * tp(4) + 84.0 * tp(5)) * a[0]
                + tp(2) * (30.0 - 140.0 * t + 195.0 * tp(2) - 84.0 * tp(3)) * a[1]
                + t * (1.0 - 8.0 * t + 20.0 * tp(2) - 20.0 * tp(3) + 7.0 * tp(4)) * jk[0] * dx
                + tp(2) * (-2.0 + 10.0 * t - 15.0 * tp(2) + 7.0 * tp(3)) * jk[1] * dx;
            let got = tab.septic_hermite_double_prime(t * dx).unwrap();
            assert!((got - printed).abs() < 1e-11, "t = {t}: {got} vs {printed}");
        }
    }

    /// Each basis function's value and derivatives at both ends, read off
    /// by feeding unit data through the interpolant with `h = 1`.
    #[test]
    fn cardinal_conditions() {
        // septic: 8 basis functions, derivative orders 0..=3 at t = 0 and 1
        for slot in 0..8 {
            let mut cols = vec![vec![0.0; 2]; 4];
            let (node, order) = (slot / 4, slot % 4);
            // data weights are v·h, a·h²/2, j·h³/6 with h = 1
            let weight = [1.0, 1.0, 2.0, 6.0][order];
            cols[order][node] = weight;
            let refs: Vec<&[f64]> = cols.iter().map(|c| c.as_slice()).collect();
            let tab = table(&refs, 0, 0);
            for end in 0..2 {
                let x = end as f64;
                let vals = [
                    tab.septic_hermite(x).unwrap(),
                    tab.septic_hermite_prime(x).unwrap(),
                    tab.septic_hermite_double_prime(x).unwrap(),
                ];
                for (d, v) in vals.iter().enumerate() {
                    let expected = if end == node && d == order { weight } else { 0.0 };
                    assert_eq!(*v, expected, "slot {slot}, end {end}, order {d}");
                }
            }
        }
        // quintic: 6 basis functions, orders 0..=2
        for slot in 0..6 {
            let mut cols = vec![vec![0.0; 2]; 3];
            let (node, order) = (slot / 3, slot % 3);
            let weight = [1.0, 1.0, 2.0][order];
            cols[order][node] = weight;
            let refs: Vec<&[f64]> = cols.iter().map(|c| c.as_slice()).collect();
            let tab = table(&refs, 0, 0);
            for end in 0..2 {
                let x = end as f64;
                let vals = [
                    tab.quintic_hermite(x).unwrap(),
                    tab.quintic_hermite_prime(x).unwrap(),
                    tab.quintic_hermite_double_prime(x).unwrap(),
                ];
                for (d, v) in vals.iter().enumerate() {
                    let expected = if end == node && d == order { weight } else { 0.0 };
                    assert_eq!(*v, expected, "slot {slot}, end {end}, order {d}");
                }
            }
        }
    }

    #[test]
    fn h31_vanishes_to_second_order_with_unit_jerk_at_right() {
        let h31 = |t: f64| -t.powi(4) + 3.0 * t.powi(5) - 3.0 * t.powi(6) + t.powi(7);
        let d3 = |t: f64| -24.0 * t + 180.0 * t * t - 360.0 * t.powi(3) + 210.0 * t.powi(4);
        assert_eq!(h31(0.0), 0.0);
        assert_eq!(h31(1.0), 0.0);
        assert_eq!(d3(1.0), 6.0);
        assert_eq!(d3(0.0), 0.0);
        // matches the table's basis: unit jerk weight at the right node
        let tab = table(&[&[0.0, 0.0], &[0.0, 0.0], &[0.0, 0.0], &[0.0, 6.0]], 0, 0);
        for k in 0..=10 {
            let t = k as f64 / 10.0;
            assert!((tab.septic_hermite(t).unwrap() - h31(t)).abs() < 1e-15);
        }
    }

    #[test]
    fn quintic_acceleration_does_not_leak_into_right_node() {
        let tab = table(&[&[0.0, 0.0], &[0.0, 0.0], &[5.0, 0.0]], 0, 0);
        assert_eq!(tab.quintic_hermite(1.0), Some(0.0));
    }

    #[test]
    fn polynomial_exactness_quintic_and_septic() {
        let q5 = [0.5, -1.0, 0.25, 2.0, -0.75, 0.3];
        let tab = sampled(&q5, 2, -2, 2, 17);
        let q7 = [0.5, -1.0, 0.25, 2.0, -0.75, 0.3, 0.05, -0.01];
        let tab7 = sampled(&q7, 3, -2, 2, 17);
        for k in 0..=400 {
            let x = -2.0 + 4.0 * k as f64 / 400.0;
            let w5 = poly_eval(&q5, 0, x);
            let w7 = poly_eval(&q7, 0, x);
            let scale5 = q5.iter().map(|c| c.abs()).sum::<f64>() * 16.0;
            let scale7 = q7.iter().map(|c| c.abs()).sum::<f64>() * 64.0;
            assert!((tab.quintic_hermite(x).unwrap() - w5).abs() <= 1e-12 * scale5);
            assert!((tab7.septic_hermite(x).unwrap() - w7).abs() <= 1e-11 * scale7);
        }
    }

    #[test]
    fn matched_holder_examples() {
        let tab = table(&[&[0.3, 0.9], &[7.0, -1.2]], 0, 3);
        let alpha = 0.5;
        assert_eq!(tab.matched_holder(alpha, 0.0), Some(0.3));
        assert!((tab.matched_holder(alpha, 0.125).unwrap() - 0.9).abs() < 1e-15);
        assert!((tab.matched_holder_prime(alpha, 0.125).unwrap() + 1.2).abs() < 1e-13);
        assert_eq!(tab.matched_holder_prime(alpha, 0.0), Some(7.0));
        let flat = table(&[&[0.4, 0.4], &[3.0, 0.0]], 0, 0);
        for k in 0..=10 {
            assert_eq!(flat.matched_holder(alpha, k as f64 / 10.0), Some(0.4));
        }
        let exponent = p2_holder_exponent();
        assert!((exponent - 0.5500).abs() < 1e-4);
        assert!((tab.matched_holder(exponent, 0.125).unwrap() - 0.9).abs() < 1e-15);
    }

    proptest! {
        #[test]
        fn matched_holder_endpoint_identities(
            y0 in -2.0f64..2.0,
            y1 in -2.0f64..2.0,
            v1 in -50.0f64..50.0,
            j in 0u32..20,
            alpha in 0.05f64..0.95,
        ) {
            let tab = table(&[&[y0, y1], &[0.0, v1]], 0, j);
            let h = crate::real::pow2(-(j as i32));
            let eps = f64::EPSILON;
            let scale = (y0.abs() + y1.abs() + (v1 * h).abs()) / (1.0 - alpha);
            let value = tab.matched_holder(alpha, h).unwrap();
            prop_assert!((value - y1).abs() <= 4.0 * eps * scale.max(f64::MIN_POSITIVE));
            let prime = tab.matched_holder_prime(alpha, h).unwrap();
            prop_assert!((prime - v1).abs() * h <= 4.0 * eps * scale.max(f64::MIN_POSITIVE));
        }

        #[test]
        fn cubic_hermite_reproduces_random_cubics(
            c0 in -3.0f64..3.0, c1 in -3.0f64..3.0, c2 in -3.0f64..3.0, c3 in -3.0f64..3.0,
            x in -1.0f64..2.0,
        ) {
            let q = [c0, c1, c2, c3];
            let tab = sampled(&q, 1, -1, 3, 25);
            let want = poly_eval(&q, 0, x);
            let scale = q.iter().map(|c| c.abs()).sum::<f64>() * 8.0;
            prop_assert!((tab.cubic_hermite(x).unwrap() - want).abs() <= 1e-13 * scale);
        }
    }

    #[test]
    fn f32_tables_work() {
        let tab = InterleavedTable::<f32>::from_columns(0, 1, &[&[0.0, 1.0, 0.0], &[2.0, 0.0, -2.0]])
            .unwrap();
        assert_eq!(tab.cubic_hermite(0.5), Some(1.0));
        assert_eq!(tab.locate(1.0), Some((1, 1.0)));
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert!(InterleavedTable::<f64>::from_columns(0, 0, &[]).is_err());
        assert!(InterleavedTable::<f64>::from_columns(0, 0, &[&[1.0, 2.0], &[1.0]]).is_err());
        assert!(InterleavedTable::<f64>::from_columns(0, 0, &[&[1.0]]).is_err());
    }
}
