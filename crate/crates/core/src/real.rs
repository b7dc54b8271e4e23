//! Floating point types used for grid construction and evaluation.
//!
//! Grids are built in a *wide* type and rounded once to the *target* type
//! the evaluator answers in. Two native targets are supported (`f32`,
//! `f64`); [`DoubleF64`] provides roughly 106 bits of mantissa from an
//! unevaluated pair of `f64` values and serves both as the wide type for
//! `f64` targets and as a reference evaluator precision.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Double-word number `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Default, PartialEq)]
pub struct DoubleF64 {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn fast_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl DoubleF64 {
    pub const ZERO: DoubleF64 = DoubleF64 { hi: 0.0, lo: 0.0 };
    pub const ONE: DoubleF64 = DoubleF64 { hi: 1.0, lo: 0.0 };

    /// Builds a normalized pair from two arbitrary `f64` values.
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        DoubleF64 { hi, lo }
    }

    #[inline]
    pub const fn from_f64(x: f64) -> Self {
        DoubleF64 { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return DoubleF64::from_f64(self.hi.sqrt());
        }
        let s = DoubleF64::from_f64(self.hi.sqrt());
        // one Newton step doubles the number of correct bits
        s + (self - s * s) / (s * 2.0)
    }

    pub fn floor(self) -> Self {
        let fh = self.hi.floor();
        if fh == self.hi {
            let (hi, lo) = fast_two_sum(fh, self.lo.floor());
            DoubleF64 { hi, lo }
        } else {
            DoubleF64::from_f64(fh)
        }
    }

    /// Exact multiplication by `2^e`.
    #[inline]
    pub fn mul_pow2(self, e: i32) -> Self {
        let s = pow2(e);
        DoubleF64 {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    pub fn powi(self, n: u32) -> Self {
        let mut acc = DoubleF64::ONE;
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }
}

/// `2^e` as an `f64`, exact for the normal range.
#[inline]
pub fn pow2(e: i32) -> f64 {
    debug_assert!((-1022..=1023).contains(&e));
    f64::from_bits(((1023 + e) as u64) << 52)
}

impl fmt::Debug for DoubleF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleF64({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for DoubleF64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_f64(), f)
    }
}

impl PartialOrd for DoubleF64 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Neg for DoubleF64 {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        DoubleF64 {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DoubleF64 {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = fast_two_sum(s, e + t);
        let (hi, lo) = fast_two_sum(s, e + f);
        DoubleF64 { hi, lo }
    }
}

impl Sub for DoubleF64 {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleF64 {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = fast_two_sum(p, e);
        DoubleF64 { hi, lo }
    }
}

impl Mul<f64> for DoubleF64 {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: f64) -> Self {
        let (p, e) = two_prod(self.hi, rhs);
        let (hi, lo) = fast_two_sum(p, e + self.lo * rhs);
        DoubleF64 { hi, lo }
    }
}

impl Div for DoubleF64 {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * q1;
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * q2;
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = fast_two_sum(q1, q2);
        DoubleF64 { hi, lo } + DoubleF64::from_f64(q3)
    }
}

impl AddAssign for DoubleF64 {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl SubAssign for DoubleF64 {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl MulAssign for DoubleF64 {
    #[inline]
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Sum for DoubleF64 {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(DoubleF64::ZERO, |a, b| a + b)
    }
}

/// Arithmetic needed by grid construction and interpolation.
pub trait Real:
    Copy
    + Send
    + Sync
    + fmt::Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + 'static
{
    /// Number of significand bits, including the implicit bit.
    const MANTISSA_BITS: u32;
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    /// Correctly rounded conversion from a double-word value.
    fn from_dd(x: DoubleF64) -> Self;
    fn to_f64(self) -> f64;
    fn to_dd(self) -> DoubleF64;
    fn abs(self) -> Self;
    fn sqrt(self) -> Self;
    fn powf(self, e: Self) -> Self;
    fn floor(self) -> Self;
    /// Exact multiplication by `2^e`.
    fn mul_pow2(self, e: i32) -> Self;
    /// Spacing between `|self|` and the next larger representable, as `f64`.
    fn ulp(self) -> f64;
    /// Smallest positive normal value, as `f64`.
    fn min_positive() -> f64;
}

/// A precision evaluators can answer in, with the wide type its grids are
/// built in.
pub trait Target: Real {
    type Wide: Real;
    fn from_wide(w: Self::Wide) -> Self;
}

impl Real for f64 {
    const MANTISSA_BITS: u32 = 53;
    const NAME: &'static str = "f64";

    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn one() -> Self {
        1.0
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn from_dd(x: DoubleF64) -> Self {
        x.hi + x.lo
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
    #[inline]
    fn to_dd(self) -> DoubleF64 {
        DoubleF64::from_f64(self)
    }
    #[inline]
    fn abs(self) -> Self {
        f64::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    #[inline]
    fn powf(self, e: Self) -> Self {
        f64::powf(self, e)
    }
    #[inline]
    fn floor(self) -> Self {
        f64::floor(self)
    }
    #[inline]
    fn mul_pow2(self, e: i32) -> Self {
        self * pow2(e)
    }
    fn ulp(self) -> f64 {
        let a = f64::abs(self);
        a.next_up() - a
    }
    fn min_positive() -> f64 {
        f64::MIN_POSITIVE
    }
}

impl Target for f64 {
    type Wide = DoubleF64;
    #[inline]
    fn from_wide(w: DoubleF64) -> Self {
        f64::from_dd(w)
    }
}

impl Real for f32 {
    const MANTISSA_BITS: u32 = 24;
    const NAME: &'static str = "f32";

    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn one() -> Self {
        1.0
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        x as f32
    }
    fn from_dd(x: DoubleF64) -> Self {
        let r = x.hi as f32;
        // `hi as f32` can only be wrong when `hi` sits exactly on a
        // midpoint between two f32 values; then `lo` breaks the tie.
        let diff = x.hi - r as f64;
        if diff != 0.0 && x.lo != 0.0 {
            let up = r.next_up();
            let down = r.next_down();
            if diff == (up as f64 - r as f64) / 2.0 && x.lo > 0.0 {
                return up;
            }
            if diff == (down as f64 - r as f64) / 2.0 && x.lo < 0.0 {
                return down;
            }
        }
        r
    }
    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }
    #[inline]
    fn to_dd(self) -> DoubleF64 {
        DoubleF64::from_f64(self as f64)
    }
    #[inline]
    fn abs(self) -> Self {
        f32::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        f32::sqrt(self)
    }
    #[inline]
    fn powf(self, e: Self) -> Self {
        f32::powf(self, e)
    }
    #[inline]
    fn floor(self) -> Self {
        f32::floor(self)
    }
    #[inline]
    fn mul_pow2(self, e: i32) -> Self {
        self * pow2(e) as f32
    }
    fn ulp(self) -> f64 {
        let a = f32::abs(self);
        (a.next_up() - a) as f64
    }
    fn min_positive() -> f64 {
        f32::MIN_POSITIVE as f64
    }
}

impl Target for f32 {
    type Wide = f64;
    #[inline]
    fn from_wide(w: f64) -> Self {
        w as f32
    }
}

impl Real for DoubleF64 {
    const MANTISSA_BITS: u32 = 106;
    const NAME: &'static str = "double-f64";

    #[inline]
    fn zero() -> Self {
        DoubleF64::ZERO
    }
    #[inline]
    fn one() -> Self {
        DoubleF64::ONE
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        DoubleF64::from_f64(x)
    }
    #[inline]
    fn from_dd(x: DoubleF64) -> Self {
        x
    }
    #[inline]
    fn to_f64(self) -> f64 {
        DoubleF64::to_f64(self)
    }
    #[inline]
    fn to_dd(self) -> DoubleF64 {
        self
    }
    #[inline]
    fn abs(self) -> Self {
        DoubleF64::abs(self)
    }
    #[inline]
    fn sqrt(self) -> Self {
        DoubleF64::sqrt(self)
    }
    fn powf(self, e: Self) -> Self {
        if e == DoubleF64::from_f64(0.5) {
            return self.sqrt();
        }
        // Only used for non-default Hölder exponents; binary64 accuracy.
        DoubleF64::from_f64(self.to_f64().powf(e.to_f64()))
    }
    #[inline]
    fn floor(self) -> Self {
        DoubleF64::floor(self)
    }
    #[inline]
    fn mul_pow2(self, e: i32) -> Self {
        DoubleF64::mul_pow2(self, e)
    }
    fn ulp(self) -> f64 {
        let a = f64::abs(self.hi);
        (a.next_up() - a) * pow2(-53)
    }
    fn min_positive() -> f64 {
        f64::MIN_POSITIVE * pow2(53)
    }
}

impl Target for DoubleF64 {
    type Wide = DoubleF64;
    #[inline]
    fn from_wide(w: DoubleF64) -> Self {
        w
    }
}
