//! Dyadic grids of `φ^(n)` and `ψ^(n)`.
//!
//! Values at the integers come from the eigenproblem `L v = 2^-n v` with
//! `L_jk = c_{2j−k}` over the interior integers `1..=2p−2`; finer levels
//! follow from the two-scale relation. All arithmetic happens in the wide
//! type `W`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::filters::{check_order, FilterBank};
use crate::real::Real;

/// Default memory budget for a single grid construction (1 GiB).
pub const DEFAULT_BUDGET_BYTES: u128 = 1 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionKind {
    Scaling,
    Wavelet,
}

impl FunctionKind {
    /// Closed support `[a, b]`: `[0, 2p−1]` for φ, `[1−p, p]` for ψ.
    pub fn support(self, p: u32) -> (i64, i64) {
        let p = p as i64;
        match self {
            FunctionKind::Scaling => (0, 2 * p - 1),
            FunctionKind::Wavelet => (1 - p, p),
        }
    }

    pub fn code(self) -> u64 {
        match self {
            FunctionKind::Scaling => 0,
            FunctionKind::Wavelet => 1,
        }
    }

    pub fn from_code(code: u64) -> Option<Self> {
        match code {
            0 => Some(FunctionKind::Scaling),
            1 => Some(FunctionKind::Wavelet),
            _ => None,
        }
    }
}

/// Empirical Hölder exponents `L + α` (slopes of the sup-norm regressions).
const HOLDER: [f64; 18] = [
    0.55, 1.08, 1.62, 1.98, 2.20, 2.46, 2.77, 3.08, 3.36, 3.61, 3.86, 4.10, 4.32, 4.56, 4.80,
    5.02, 5.24, 5.46,
];

/// Regression `log2 ‖φ − φ_j‖∞ ≈ intercept + slope·j` for the best
/// interpolator at each `p`.
const REGRESSION: [(f64, f64); 18] = [
    (-2.15, -0.55),
    (-1.85, -1.08),
    (-1.98, -1.62),
    (-3.93, -1.98),
    (-4.96, -2.20),
    (-4.76, -2.46),
    (-4.99, -2.77),
    (-5.72, -3.08),
    (-7.21, -3.36),
    (-7.89, -3.61),
    (-8.66, -3.86),
    (-9.29, -4.10),
    (-9.14, -4.32),
    (-9.47, -4.56),
    (-10.1, -4.80),
    (-10.8, -5.02),
    (-10.6, -5.24),
    (-10.9, -5.46),
];

pub fn holder_exponent(p: u32) -> Result<f64> {
    check_order(p)?;
    Ok(HOLDER[(p - 2) as usize])
}

/// `(intercept, slope)` of the reference sup-norm error model for `p`.
pub fn error_model(p: u32) -> Result<(f64, f64)> {
    check_order(p)?;
    Ok(REGRESSION[(p - 2) as usize])
}

/// Predicted `‖φ − φ_j‖∞` at refinement `j`.
pub fn predicted_sup_error(p: u32, j: u32) -> Result<f64> {
    let (a, b) = error_model(p)?;
    Ok((a + b * j as f64).exp2())
}

/// Highest derivative order for which grids are built: the (possibly weak)
/// derivative exists when `n ≤ ⌈L + α⌉`, and the moment normalization needs
/// `n < p`.
pub fn max_derivative(p: u32) -> Result<u32> {
    let s = holder_exponent(p)?;
    Ok((s.ceil() as u32).min(p - 1))
}

/// Number of grid points at refinement `j` over a support of width `2p − 1`.
pub fn grid_len(p: u32, j: u32) -> Option<usize> {
    let width = (2 * p as usize).checked_sub(1)?;
    let per_unit = 1usize.checked_shl(j)?;
    width.checked_mul(per_unit)?.checked_add(1)
}

fn grid_bytes<W>(p: u32, j: u32) -> u128 {
    let count = ((2 * p as u128 - 1) << j.min(100)) + 1;
    count * std::mem::size_of::<W>() as u128
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridOptions {
    pub budget_bytes: u128,
}

impl Default for GridOptions {
    fn default() -> Self {
        GridOptions {
            budget_bytes: DEFAULT_BUDGET_BYTES,
        }
    }
}

pub(crate) fn check_budget(required: u128, budget: u128) -> Result<()> {
    if required > budget {
        Err(Error::BudgetExceeded { required, budget })
    } else {
        Ok(())
    }
}

/// Values of `φ^(n)` or `ψ^(n)` at `a + m/2^j`, `m = 0..=(2p−1)·2^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DyadicGrid<W> {
    p: u32,
    kind: FunctionKind,
    derivative: u32,
    refinement: u32,
    values: Vec<W>,
}

impl<W: Real> DyadicGrid<W> {
    /// Assembles a grid from raw values, checking only the length.
    pub fn from_values(
        p: u32,
        kind: FunctionKind,
        derivative: u32,
        refinement: u32,
        values: Vec<W>,
    ) -> Result<Self> {
        check_order(p)?;
        let expected = grid_len(p, refinement)
            .ok_or_else(|| Error::InvalidArgument(format!("refinement {refinement} too large")))?;
        if values.len() != expected {
            return Err(Error::Format(format!(
                "grid for p = {p}, j = {refinement} needs {expected} values, got {}",
                values.len()
            )));
        }
        Ok(DyadicGrid {
            p,
            kind,
            derivative,
            refinement,
            values,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn kind(&self) -> FunctionKind {
        self.kind
    }

    pub fn derivative(&self) -> u32 {
        self.derivative
    }

    pub fn refinement(&self) -> u32 {
        self.refinement
    }

    pub fn values(&self) -> &[W] {
        &self.values
    }

    pub fn into_values(self) -> Vec<W> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support(&self) -> (i64, i64) {
        self.kind.support(self.p)
    }

    /// Abscissa of entry `i` (exact in binary64 for any practical grid).
    pub fn abscissa(&self, i: usize) -> f64 {
        self.support().0 as f64 + i as f64 * crate::real::pow2(-(self.refinement as i32))
    }

    /// Index of `x` if it is a node of this grid.
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let s = (x - self.support().0 as f64) * crate::real::pow2(self.refinement as i32);
        if s.fract() != 0.0 || s < 0.0 || s >= self.values.len() as f64 {
            return None;
        }
        Some(s as usize)
    }

    /// Values at the integer abscissas.
    pub fn integer_values(&self) -> Vec<W> {
        self.values
            .iter()
            .step_by(1 << self.refinement)
            .copied()
            .collect()
    }

    /// The same function sampled at a coarser refinement (every
    /// `2^(j − level)`-th entry).
    pub fn coarsen(&self, level: u32) -> Result<DyadicGrid<W>> {
        if level > self.refinement {
            return Err(Error::InvalidArgument(format!(
                "cannot coarsen refinement {} to {level}",
                self.refinement
            )));
        }
        let stride = 1usize << (self.refinement - level);
        Ok(DyadicGrid {
            p: self.p,
            kind: self.kind,
            derivative: self.derivative,
            refinement: level,
            values: self.values.iter().step_by(stride).copied().collect(),
        })
    }

    /// Rounds every value to another precision.
    pub fn convert<T: Real>(&self) -> DyadicGrid<T> {
        DyadicGrid {
            p: self.p,
            kind: self.kind,
            derivative: self.derivative,
            refinement: self.refinement,
            values: self.values.iter().map(|&v| T::from_dd(v.to_dd())).collect(),
        }
    }
}

fn check_derivative(p: u32, n: u32) -> Result<()> {
    let max = max_derivative(p)?;
    if n > max {
        Err(Error::DerivativeUnavailable { p, n, max })
    } else {
        Ok(())
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

/// Gaussian elimination with partial pivoting on a consistent
/// `(rows × cols)` system, `rows ≥ cols`. Fails when fewer than `cols`
/// pivots are numerically nonzero.
fn solve_consistent<W: Real>(mut a: Vec<Vec<W>>, mut b: Vec<W>, tol: f64) -> Option<Vec<W>> {
    let rows = a.len();
    let cols = a[0].len();
    for col in 0..cols {
        let (piv, mag) = (col..rows)
            .map(|r| (r, a[r][col].abs()))
            .fold((col, W::zero()), |best, cur| if cur.1 > best.1 { cur } else { best });
        if mag.to_f64() <= tol {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..rows {
            let f = a[r][col] / a[col][col];
            if f == W::zero() {
                continue;
            }
            for c in col..cols {
                let d = f * a[col][c];
                a[r][c] -= d;
            }
            let d = f * b[col];
            b[r] -= d;
        }
    }
    let mut x = vec![W::zero(); cols];
    for r in (0..cols).rev() {
        let mut s = b[r];
        for c in r + 1..cols {
            s -= a[r][c] * x[c];
        }
        x[r] = s / a[r][r];
    }
    Some(x)
}

/// `φ^(n)` at the integers `0..=2p−1`.
///
/// The eigenvector of `L` for eigenvalue `2^-n` is pinned down by the moment
/// condition `Σ_k k^n φ^(n)(k) = (−1)^n n!`, which is appended to the
/// singular system `(L − 2^-n I) v = 0`; the resulting consistent
/// overdetermined system has a unique solution when the eigenvalue is
/// simple. One step of iterative refinement follows.
pub fn integer_grid<W: Real>(bank: &FilterBank, n: u32) -> Result<Vec<W>> {
    let p = bank.p();
    check_derivative(p, n)?;
    let c: Vec<W> = bank.coeffs_as();
    let dim = 2 * p as usize - 2;
    let lambda = W::one().mul_pow2(-(n as i32));

    let coef = |idx: i64| -> W {
        if (0..c.len() as i64).contains(&idx) {
            c[idx as usize]
        } else {
            W::zero()
        }
    };
    // rows/cols indexed by the interior integers 1..=2p−2
    let mut a = vec![vec![W::zero(); dim]; dim + 1];
    for j in 0..dim {
        for k in 0..dim {
            a[j][k] = coef(2 * (j as i64 + 1) - (k as i64 + 1));
        }
        a[j][j] -= lambda;
    }
    for k in 0..dim {
        a[dim][k] = W::from_f64(((k + 1) as f64).powi(n as i32));
    }
    let mut rhs = vec![W::zero(); dim + 1];
    let target = if n % 2 == 0 { factorial(n) } else { -factorial(n) };
    rhs[dim] = W::from_f64(target);

    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.to_f64().abs()));
    let tol = scale * crate::real::pow2(12 - W::MANTISSA_BITS as i32) * dim as f64;
    let defective = || Error::DefectiveEigenproblem { p, n };

    let mut v = solve_consistent(a.clone(), rhs.clone(), tol).ok_or_else(defective)?;
    let residual: Vec<W> = a
        .iter()
        .zip(&rhs)
        .map(|(row, &r)| {
            let mut s = -r;
            for (x, y) in row.iter().zip(&v) {
                s += *x * *y;
            }
            s
        })
        .collect();
    let delta = solve_consistent(a, residual, tol).ok_or_else(defective)?;
    for (x, d) in v.iter_mut().zip(delta) {
        *x -= d;
    }

    let mut out = Vec::with_capacity(dim + 2);
    out.push(W::zero());
    out.extend(v);
    out.push(W::zero());
    Ok(out)
}

/// `max_j |(L v)_j − 2^-n v_j| / max |v|` over the interior integers.
pub fn eigen_residual<W: Real>(bank: &FilterBank, n: u32, values: &[W]) -> f64 {
    let c: Vec<W> = bank.coeffs_as();
    let lambda = W::one().mul_pow2(-(n as i32));
    let last = values.len() - 1;
    let mut worst = 0.0f64;
    let mut norm = 0.0f64;
    for j in 1..last {
        let mut s = W::zero();
        for k in 1..last {
            let idx = 2 * j as i64 - k as i64;
            if (0..c.len() as i64).contains(&idx) {
                s += c[idx as usize] * values[k];
            }
        }
        worst = worst.max((s - lambda * values[j]).abs().to_f64());
        norm = norm.max(values[j].abs().to_f64());
    }
    worst / norm
}

/// One two-scale refinement step of a scaling-function grid.
///
/// Even entries of the result are copied from the input; odd entries are
/// `2^n Σ_k c_k φ^(n)(2x − k)` evaluated on the input grid.
pub fn refine<W: Real>(grid: &DyadicGrid<W>, bank: &FilterBank) -> Result<DyadicGrid<W>> {
    if grid.kind != FunctionKind::Scaling {
        return Err(Error::InvalidArgument(
            "only scaling-function grids can be refined".into(),
        ));
    }
    if bank.p() != grid.p {
        return Err(Error::InvalidArgument(format!(
            "filter bank for p = {} cannot refine a grid for p = {}",
            bank.p(),
            grid.p
        )));
    }
    let c: Vec<W> = bank.coeffs_as();
    let old = &grid.values;
    let stride = 1usize << grid.refinement;
    let len = 2 * (old.len() - 1) + 1;
    let n = grid.derivative as i32;

    let values: Vec<W> = (0..len)
        .into_par_iter()
        .map(|m| {
            if m % 2 == 0 {
                return old[m / 2];
            }
            let mut s = W::zero();
            for (k, &ck) in c.iter().enumerate() {
                let offset = k * stride;
                if offset > m {
                    break;
                }
                if let Some(&v) = old.get(m - offset) {
                    s += ck * v;
                }
            }
            s.mul_pow2(n)
        })
        .collect();

    Ok(DyadicGrid {
        p: grid.p,
        kind: FunctionKind::Scaling,
        derivative: grid.derivative,
        refinement: grid.refinement + 1,
        values,
    })
}

/// Integer values followed by `j_max` refinements.
pub fn build_scaling_grid<W: Real>(
    p: u32,
    j_max: u32,
    n: u32,
    options: &GridOptions,
) -> Result<DyadicGrid<W>> {
    check_order(p)?;
    check_derivative(p, n)?;
    check_budget(grid_bytes::<W>(p, j_max), options.budget_bytes)?;
    let bank = FilterBank::new(p)?;
    let mut grid = DyadicGrid {
        p,
        kind: FunctionKind::Scaling,
        derivative: n,
        refinement: 0,
        values: integer_grid(&bank, n)?,
    };
    for _ in 0..j_max {
        grid = refine(&grid, &bank)?;
    }
    Ok(grid)
}

/// `ψ^(n)` on `[1−p, p]` at refinement `j_max`, computed from a scaling grid
/// at the same refinement via `ψ^(n)(x) = 2^n Σ_k (−1)^{k+1} c_k φ^(n)(2x + k − 1)`.
pub fn build_wavelet_grid<W: Real>(
    p: u32,
    j_max: u32,
    n: u32,
    options: &GridOptions,
) -> Result<DyadicGrid<W>> {
    check_order(p)?;
    check_budget(2 * grid_bytes::<W>(p, j_max), options.budget_bytes)?;
    let phi = build_scaling_grid::<W>(p, j_max, n, options)?;
    Ok(wavelet_from_scaling(&phi, &FilterBank::new(p)?))
}

/// Applies the wavelet relation to a finished scaling grid.
pub fn wavelet_from_scaling<W: Real>(phi: &DyadicGrid<W>, bank: &FilterBank) -> DyadicGrid<W> {
    let c: Vec<W> = bank.coeffs_as();
    let j = phi.refinement;
    let per_unit = 1i64 << j;
    let len = phi.values.len();
    let two_p = c.len() as i64;
    let n = phi.derivative as i32;

    let values: Vec<W> = (0..len)
        .into_par_iter()
        .map(|m| {
            let mut s = W::zero();
            for (k, &ck) in c.iter().enumerate() {
                // 2x + k − 1 with x = 1 − p + m/2^j, as an index into φ
                let idx = 2 * m as i64 + (k as i64 + 1 - two_p) * per_unit;
                if (0..len as i64).contains(&idx) {
                    let term = ck * phi.values[idx as usize];
                    if k % 2 == 1 {
                        s += term;
                    } else {
                        s -= term;
                    }
                }
            }
            s.mul_pow2(n)
        })
        .collect();

    DyadicGrid {
        p: phi.p,
        kind: FunctionKind::Wavelet,
        derivative: phi.derivative,
        refinement: j,
        values,
    }
}

/// Residuals of the structural grid invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct GridValidation {
    pub length_ok: bool,
    /// Largest magnitude at the two support endpoints.
    pub boundary: f64,
    /// `|Σ_k k^n φ^(n)(k) − (−1)^n n!|` over integer abscissas (scaling only).
    pub normalization: f64,
    /// `max |φ^(n)(x) − 2^n Σ_k c_k φ^(n)(2x − k)|` over every node (scaling only).
    pub two_scale: f64,
}

pub fn validate<W: Real>(grid: &DyadicGrid<W>, bank: &FilterBank) -> GridValidation {
    let len = grid.values.len();
    let length_ok = grid_len(grid.p, grid.refinement) == Some(len);
    let boundary = grid.values[0]
        .abs()
        .to_f64()
        .max(grid.values[len - 1].abs().to_f64());
    if grid.kind != FunctionKind::Scaling {
        return GridValidation {
            length_ok,
            boundary,
            normalization: 0.0,
            two_scale: 0.0,
        };
    }

    let n = grid.derivative;
    let mut moment = W::zero();
    for (k, v) in grid.integer_values().into_iter().enumerate() {
        moment += W::from_f64((k as f64).powi(n as i32)) * v;
    }
    let target = if n % 2 == 0 { factorial(n) } else { -factorial(n) };
    let normalization = (moment - W::from_f64(target)).abs().to_f64();

    let c: Vec<W> = bank.coeffs_as();
    let per_unit = 1usize << grid.refinement;
    let two_scale = (0..len)
        .into_par_iter()
        .map(|i| {
            let mut s = W::zero();
            for (k, &ck) in c.iter().enumerate() {
                let shift = k * per_unit;
                if 2 * i >= shift && 2 * i - shift < len {
                    s += ck * grid.values[2 * i - shift];
                }
            }
            (grid.values[i] - s.mul_pow2(n as i32)).abs().to_f64()
        })
        .reduce(|| 0.0, f64::max);

    GridValidation {
        length_ok,
        boundary,
        normalization,
        two_scale,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::DoubleF64;

    fn sqrt3() -> DoubleF64 {
        DoubleF64::from_f64(3.0).sqrt()
    }

    #[test]
    fn p2_integer_values_match_closed_form() {
        let bank = FilterBank::new(2).unwrap();
        let v: Vec<DoubleF64> = integer_grid(&bank, 0).unwrap();
        let one = DoubleF64::ONE;
        let want = [
            DoubleF64::ZERO,
            (one + sqrt3()).mul_pow2(-1),
            (one - sqrt3()).mul_pow2(-1),
            DoubleF64::ZERO,
        ];
        for (g, w) in v.iter().zip(want) {
            assert!((*g - w).abs().to_f64() <= 1e-30, "{g:?} vs {w:?}");
        }
    }

    #[test]
    fn integer_values_partition_unity_and_derivatives_sum_to_zero() {
        for p in 2..=19 {
            let bank = FilterBank::new(p).unwrap();
            let v: Vec<DoubleF64> = integer_grid(&bank, 0).unwrap();
            let s: DoubleF64 = v.iter().copied().sum();
            assert!((s - DoubleF64::ONE).abs().to_f64() < 1e-28, "p = {p}");
            for n in 1..=max_derivative(p).unwrap() {
                let d: Vec<DoubleF64> = integer_grid(&bank, n).unwrap();
                let s: DoubleF64 = d.iter().copied().sum();
                let scale = d.iter().fold(0.0f64, |m, x| m.max(x.abs().to_f64()));
                assert!(s.abs().to_f64() < 1e-26 * scale, "p = {p}, n = {n}: {s:?}");
            }
        }
    }

    #[test]
    fn eigen_residuals_are_at_wide_rounding_level() {
        let bound = crate::real::pow2(10 - 106);
        for p in 2..=19 {
            let bank = FilterBank::new(p).unwrap();
            for n in 0..=max_derivative(p).unwrap() {
                let v: Vec<DoubleF64> = integer_grid(&bank, n).unwrap();
                let r = eigen_residual(&bank, n, &v);
                assert!(r <= bound, "p = {p}, n = {n}: residual {r:e}");
            }
        }
    }

    #[test]
    fn unavailable_derivative_is_reported() {
        let bank = FilterBank::new(4).unwrap();
        let err = integer_grid::<f64>(&bank, 3).unwrap_err();
        assert_eq!(err, Error::DerivativeUnavailable { p: 4, n: 3, max: 2 });
        assert!(build_scaling_grid::<f64>(2, 3, 2, &GridOptions::default()).is_err());
    }

    #[test]
    fn first_refinement_of_p2() {
        let g = build_scaling_grid::<DoubleF64>(2, 1, 0, &GridOptions::default()).unwrap();
        // φ(1/2) = c_0 φ(1) = (2 + √3)/4
        let want = (DoubleF64::from_f64(2.0) + sqrt3()).mul_pow2(-2);
        assert!((g.values()[1] - want).abs().to_f64() < 1e-30);
        assert!((g.values()[1].to_f64() - 0.933013).abs() < 1e-6);
    }

    #[test]
    fn refinement_copies_even_points() {
        let bank = FilterBank::new(5).unwrap();
        let g = build_scaling_grid::<DoubleF64>(5, 4, 1, &GridOptions::default()).unwrap();
        let r = refine(&g, &bank).unwrap();
        assert_eq!(r.coarsen(4).unwrap(), g);
        assert_eq!(r.len(), 9 * 32 + 1);
    }

    #[test]
    fn build_then_refine_matches_direct_build() {
        let bank = FilterBank::new(6).unwrap();
        let opts = GridOptions::default();
        let a = build_scaling_grid::<DoubleF64>(6, 5, 2, &opts).unwrap();
        let b = build_scaling_grid::<DoubleF64>(6, 6, 2, &opts).unwrap();
        assert_eq!(refine(&a, &bank).unwrap(), b);
    }

    #[test]
    fn zero_refinements_is_the_integer_grid() {
        let g = build_scaling_grid::<f64>(2, 0, 0, &GridOptions::default()).unwrap();
        let bank = FilterBank::new(2).unwrap();
        assert_eq!(g.values(), integer_grid::<f64>(&bank, 0).unwrap().as_slice());
    }

    #[test]
    fn p3_level8_length_and_integer_sum() {
        let g = build_scaling_grid::<DoubleF64>(3, 8, 0, &GridOptions::default()).unwrap();
        assert_eq!(g.len(), 1281);
        let s: DoubleF64 = g.integer_values().into_iter().sum();
        assert!((s - DoubleF64::ONE).abs().to_f64() < 1e-29);
    }

    #[test]
    fn budget_guard_rejects_huge_grids() {
        let err = build_scaling_grid::<f64>(15, 60, 0, &GridOptions::default()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }), "{err:?}");
        let small = GridOptions { budget_bytes: 1000 };
        assert!(build_scaling_grid::<f64>(3, 8, 0, &small).is_err());
    }

    #[test]
    fn grid_invariants_hold_for_all_orders() {
        for p in 2..=19 {
            let bank = FilterBank::new(p).unwrap();
            for n in 0..=max_derivative(p).unwrap().min(3) {
                let g = build_scaling_grid::<DoubleF64>(p, 5, n, &GridOptions::default()).unwrap();
                let v = validate(&g, &bank);
                let scale = g.values().iter().fold(1.0f64, |m, x| m.max(x.abs().to_f64()));
                assert!(v.length_ok);
                assert_eq!(v.boundary, 0.0);
                assert!(v.normalization < 1e-25 * scale, "p = {p}, n = {n}: {v:?}");
                assert!(v.two_scale < 1e-27 * scale, "p = {p}, n = {n}: {v:?}");
            }
        }
    }

    #[test]
    fn wavelet_support_and_zero_mean() {
        let opts = GridOptions::default();
        let psi = build_wavelet_grid::<DoubleF64>(8, 6, 0, &opts).unwrap();
        assert_eq!(psi.support(), (-7, 8));
        assert_eq!(psi.abscissa(0), -7.0);
        assert_eq!(psi.abscissa(psi.len() - 1), 8.0);
        let h = crate::real::pow2(-6);
        let integral: f64 = psi.values().iter().map(|v| v.to_f64()).sum::<f64>() * h;
        assert!(integral.abs() < 1e-10, "{integral:e}");
        let v = validate(&psi, &FilterBank::new(8).unwrap());
        assert_eq!(v.boundary, 0.0);
    }

    #[test]
    fn wavelet_nodes_follow_the_alternating_sum() {
        let opts = GridOptions::default();
        let p = 4;
        let bank = FilterBank::new(p).unwrap();
        let phi = build_scaling_grid::<DoubleF64>(p, 5, 0, &opts).unwrap();
        let psi = wavelet_from_scaling(&phi, &bank);
        for (m, &v) in psi.values().iter().enumerate().step_by(7) {
            let x = psi.abscissa(m);
            let mut s = DoubleF64::ZERO;
            for (k, &ck) in bank.coeffs().iter().enumerate() {
                let arg = 2.0 * x + k as f64 - 1.0;
                if let Some(i) = phi.index_of(arg) {
                    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
                    s += ck * phi.values()[i] * sign;
                }
            }
            assert_eq!(s, v, "x = {x}");
        }
    }
}
