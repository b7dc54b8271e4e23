//! Quadrature, continuous wavelet transforms and sparse wavelet series.
//!
//! Basis functions follow the convention `φ_jk(x) = 2^(−j/2) φ(2^(−j) x − k)`,
//! so more negative `j` means finer detail.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::evaluators::{ScalingEvaluator, WaveletEvaluator};
use crate::filters::check_order;
use crate::io::format_f64;

/// Stopping rule for [`adaptive_trapezoid`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadOptions {
    pub rel_tol: f64,
    /// Absolute fallback; `None` means `rel_tol · (b − a) · max |g|`.
    pub abs_tol: Option<f64>,
    /// Halvings performed before the stopping rule is consulted.
    pub min_levels: u32,
    pub max_levels: u32,
}

impl QuadOptions {
    pub fn new(rel_tol: f64) -> Self {
        QuadOptions {
            rel_tol,
            abs_tol: None,
            min_levels: 1,
            max_levels: 24,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Last difference between successive estimates.
    pub error: f64,
    pub evaluations: usize,
}

/// Trapezoid rule with repeated global halving, reusing earlier samples.
///
/// Stops once `|I_m − I_{m−1}| ≤ rel_tol·|I_m|` or the difference drops
/// below the absolute fallback.
pub fn adaptive_trapezoid<G: Fn(f64) -> f64>(g: G, a: f64, b: f64, options: &QuadOptions) -> Result<Quadrature> {
    if !(a < b) {
        if a == b {
            return Ok(Quadrature {
                value: 0.0,
                error: 0.0,
                evaluations: 0,
            });
        }
        return Err(Error::InvalidArgument(format!(
            "integration bounds must satisfy a < b, got [{a}, {b}]"
        )));
    }
    let width = b - a;
    let (ga, gb) = (g(a), g(b));
    let mut max_abs = ga.abs().max(gb.abs());
    let mut estimate = 0.5 * width * (ga + gb);
    let mut evaluations = 2;
    let mut diff = f64::INFINITY;
    for level in 1..=options.max_levels {
        let panels = 1u64 << (level - 1);
        let h = width / (2 * panels) as f64;
        let mut mid = 0.0;
        for i in 0..panels {
            let v = g(a + (2 * i + 1) as f64 * h);
            max_abs = max_abs.max(v.abs());
            mid += v;
        }
        evaluations += panels as usize;
        let next = 0.5 * estimate + h * mid;
        diff = (next - estimate).abs();
        estimate = next;
        if !estimate.is_finite() {
            return Err(Error::NonConvergence {
                value: estimate,
                error: diff,
            });
        }
        if level >= options.min_levels {
            let abs_tol = options.abs_tol.unwrap_or(options.rel_tol * width * max_abs);
            if diff <= options.rel_tol * estimate.abs() || diff <= abs_tol {
                return Ok(Quadrature {
                    value: estimate,
                    error: diff,
                    evaluations,
                });
            }
        }
    }
    Err(Error::NonConvergence {
        value: estimate,
        error: diff,
    })
}

/// Integrates over `[a, b]` cell by cell, splitting at every breakpoint
/// strictly inside the interval. Errors carry the summed partial result.
pub fn integrate_piecewise<G: Fn(f64) -> f64>(
    g: G,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    options: &QuadOptions,
) -> Result<Quadrature> {
    let mut cuts: Vec<f64> = breakpoints.iter().copied().filter(|&x| x > a && x < b).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut edges = Vec::with_capacity(cuts.len() + 2);
    edges.push(a);
    edges.extend(cuts);
    edges.push(b);
    let mut total = Quadrature {
        value: 0.0,
        error: 0.0,
        evaluations: 0,
    };
    let mut failed = false;
    for w in edges.windows(2) {
        match adaptive_trapezoid(&g, w[0], w[1], options) {
            Ok(q) => {
                total.value += q.value;
                total.error += q.error;
                total.evaluations += q.evaluations;
            }
            Err(Error::NonConvergence { value, error }) => {
                failed = true;
                total.value += value;
                total.error += error;
            }
            Err(e) => return Err(e),
        }
    }
    if failed {
        Err(Error::NonConvergence {
            value: total.value,
            error: total.error,
        })
    } else {
        Ok(total)
    }
}

/// Locally adaptive trapezoid rule for integrands with isolated oscillatory
/// singularities. Each panel carries the trapezoid sums on 1, 2 and 4
/// subpanels; two Richardson steps give a pair of Simpson estimates whose
/// difference decides acceptance. A panel is accepted once that difference
/// is below its share `abs_tol · w / (b − a)` of a global absolute
/// tolerance, or once its width reaches `min_width` (where its contribution
/// is bounded by `w · max |g|`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BisectionOptions {
    pub abs_tol: f64,
    pub min_width: f64,
    /// Uniform subdivision depth before any panel may be accepted.
    pub min_depth: u32,
    pub max_depth: u32,
}

impl BisectionOptions {
    pub fn new(abs_tol: f64, width: f64) -> Self {
        BisectionOptions {
            abs_tol,
            min_width: abs_tol * width * 1e-3,
            min_depth: 4,
            max_depth: 80,
        }
    }
}

pub fn adaptive_bisection<G: Fn(f64) -> f64>(g: G, a: f64, b: f64, options: &BisectionOptions) -> Result<Quadrature> {
    if !(a < b) {
        return Err(Error::InvalidArgument(format!(
            "integration bounds must satisfy a < b, got [{a}, {b}]"
        )));
    }
    let per_width = options.abs_tol / (b - a);
    let mut q = Quadrature {
        value: 0.0,
        error: 0.0,
        evaluations: 5,
    };
    let mut exhausted = false;
    // stack of (lo, hi, samples at the 5 quarter points, depth); left panels on top
    let h = 0.25 * (b - a);
    let f0 = [g(a), g(a + h), g(a + 2.0 * h), g(a + 3.0 * h), g(b)];
    let mut stack = vec![(a, b, f0, 0u32)];
    while let Some((lo, hi, f, depth)) = stack.pop() {
        let w = hi - lo;
        let t1 = 0.5 * w * (f[0] + f[4]);
        let t2 = 0.5 * t1 + 0.5 * w * f[2];
        let t4 = 0.5 * t2 + 0.25 * w * (f[1] + f[3]);
        let s_coarse = (4.0 * t2 - t1) / 3.0;
        let s_fine = (4.0 * t4 - t2) / 3.0;
        let diff = (s_fine - s_coarse).abs();
        let settled = diff <= 15.0 * per_width * w || w <= options.min_width;
        if depth >= options.min_depth && settled {
            q.value += s_fine + (s_fine - s_coarse) / 15.0;
            q.error += diff / 15.0;
            continue;
        }
        if depth >= options.max_depth {
            exhausted = true;
            q.value += s_fine;
            q.error += diff;
            continue;
        }
        let mid = 0.5 * (lo + hi);
        let e = 0.125 * w;
        let (l1, r1) = (g(lo + e), g(mid + e));
        let (l3, r3) = (g(lo + 3.0 * e), g(mid + 3.0 * e));
        q.evaluations += 4;
        stack.push((mid, hi, [f[2], r1, f[3], r3, f[4]], depth + 1));
        stack.push((lo, mid, [f[0], l1, f[1], l3, f[2]], depth + 1));
    }
    if exhausted || !q.value.is_finite() {
        Err(Error::NonConvergence {
            value: q.value,
            error: q.error,
        })
    } else {
        Ok(q)
    }
}

/// Integer-spaced cut points `start + m·step` for `m = 1..count`.
fn lattice(start: f64, step: f64, count: i64) -> impl Iterator<Item = f64> {
    (1..count).map(move |m| start + m as f64 * step)
}

/// `√|s| ∫_{1−p}^{p} f(s u + t) ψ(u) du`, split at the integers of `u`.
pub fn cwt<F: Fn(f64) -> f64>(f: F, psi: &WaveletEvaluator<f64>, s: f64, t: f64, tol: f64) -> Result<f64> {
    if s == 0.0 || !s.is_finite() || !t.is_finite() {
        return Err(Error::InvalidArgument(format!("scale must be finite and nonzero, got s = {s}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let (a, b) = psi.support();
    let cells = (b - a) as i64;
    let per_cell = tol / cells as f64;
    let mut total = 0.0;
    let mut error = 0.0;
    let mut failed = false;
    let edges: Vec<f64> = std::iter::once(a).chain(lattice(a, 1.0, cells)).chain(std::iter::once(b)).collect();
    for w in edges.windows(2) {
        let opts = BisectionOptions::new(per_cell, w[1] - w[0]);
        match adaptive_bisection(|u| f(s * u + t) * psi.value(u), w[0], w[1], &opts) {
            Ok(q) => {
                total += q.value;
                error += q.error;
            }
            Err(Error::NonConvergence { value, error: e }) => {
                failed = true;
                total += value;
                error += e;
            }
            Err(e) => return Err(e),
        }
    }
    let scale = s.abs().sqrt();
    if failed {
        return Err(Error::NonConvergence {
            value: scale * total,
            error: scale * error,
        });
    }
    Ok(scale * total)
}

/// One scalogram row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalogramPoint {
    pub s: f64,
    pub t: f64,
    pub w: f64,
}

/// [`cwt`] over the tensor grid `scales × translates`, ordered by `(s, t)`.
pub fn scalogram<F: Fn(f64) -> f64 + Sync>(
    f: F,
    psi: &WaveletEvaluator<f64>,
    scales: &[f64],
    translates: &[f64],
    tol: f64,
) -> Result<Vec<ScalogramPoint>> {
    let pairs: Vec<(f64, f64)> = scales
        .iter()
        .flat_map(|&s| translates.iter().map(move |&t| (s, t)))
        .collect();
    pairs
        .par_iter()
        .map(|&(s, t)| cwt(&f, psi, s, t, tol).map(|w| ScalogramPoint { s, t, w }))
        .collect()
}

const BUMP_T: [f64; 11] = [0.1, 0.13, 0.15, 0.23, 0.25, 0.40, 0.44, 0.65, 0.76, 0.78, 0.81];
const BUMP_H: [f64; 11] = [4.0, 5.0, 3.0, 4.0, 5.0, 4.2, 2.1, 4.3, 3.1, 5.1, 4.2];
const BUMP_W: [f64; 11] = [0.005, 0.005, 0.006, 0.01, 0.01, 0.03, 0.01, 0.01, 0.005, 0.008, 0.005];

/// Donoho's bumps test signal on `(0, 1)`.
pub fn bumps(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    let mut y = 0.0;
    for i in 0..11 {
        let z = 1.0 + (x - BUMP_T[i]).abs() / BUMP_W[i];
        let z2 = z * z;
        y += BUMP_H[i] / (z2 * z2);
    }
    y
}

/// Cusp locations of [`bumps`].
pub fn bumps_breakpoints() -> Vec<f64> {
    BUMP_T.to_vec()
}

/// Test signals addressable by name (`bumps`, `sin_recip:a`, `const:c`,
/// `poly:c0,c1,...`).
#[derive(Clone, Debug, PartialEq)]
pub enum NamedFunction {
    Bumps,
    /// `sin(a/x)`, defined as 0 at `x = 0`.
    SinRecip(f64),
    Const(f64),
    /// Coefficients in ascending powers.
    Poly(Vec<f64>),
}

impl NamedFunction {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            NamedFunction::Bumps => bumps(x),
            NamedFunction::SinRecip(a) => {
                if x == 0.0 {
                    0.0
                } else {
                    (a / x).sin()
                }
            }
            NamedFunction::Const(c) => *c,
            NamedFunction::Poly(c) => c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck),
        }
    }

    /// Interval outside which the function vanishes, if any.
    pub fn support(&self) -> Option<(f64, f64)> {
        match self {
            NamedFunction::Bumps => Some((0.0, 1.0)),
            _ => None,
        }
    }

    /// Points where the function is not smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            NamedFunction::Bumps => bumps_breakpoints(),
            NamedFunction::SinRecip(_) => vec![0.0],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for NamedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedFunction::Bumps => f.write_str("bumps"),
            NamedFunction::SinRecip(a) => write!(f, "sin_recip:{}", format_f64(*a)),
            NamedFunction::Const(c) => write!(f, "const:{}", format_f64(*c)),
            NamedFunction::Poly(c) => {
                let parts: Vec<String> = c.iter().map(|&v| format_f64(v)).collect();
                write!(f, "poly:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for NamedFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidArgument(format!("{what} in function `{s}`"));
        let number = |v: &str| v.trim().parse::<f64>().map_err(|_| bad("malformed number"));
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        match (name, arg) {
            ("bumps", None) => Ok(NamedFunction::Bumps),
            ("sin_recip", Some(a)) => Ok(NamedFunction::SinRecip(number(a)?)),
            ("const", Some(c)) => Ok(NamedFunction::Const(number(c)?)),
            ("poly", Some(cs)) => Ok(NamedFunction::Poly(
                cs.split(',').map(number).collect::<Result<_>>()?,
            )),
            _ => Err(Error::InvalidArgument(format!(
                "unknown function `{s}` (expected bumps, sin_recip:a, const:c or poly:c0,c1,...)"
            ))),
        }
    }
}

/// Basis function family of a coefficient; `Phi` sorts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisKind {
    Phi,
    Psi,
}

impl BasisKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisKind::Phi => "phi",
            BasisKind::Psi => "psi",
        }
    }
}

impl FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "phi" => Ok(BasisKind::Phi),
            "psi" => Ok(BasisKind::Psi),
            other => Err(Error::Format(format!("unknown basis kind `{other}`"))),
        }
    }
}

/// Key of one coefficient: `(kind, j, k)`.
pub type CoefficientKey = (BasisKind, i32, i64);

/// Sparse coefficients of a truncated wavelet series.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveletCoefficientSet {
    pub p: u32,
    pub j_min: i32,
    pub j_max: i32,
    pub tau: f64,
    entries: BTreeMap<CoefficientKey, f64>,
    /// Entries whose quadrature did not converge (best estimates are kept).
    pub unconverged: Vec<CoefficientKey>,
}

#[inline]
fn pow2i(j: i32) -> f64 {
    crate::real::pow2(j)
}

/// Support of a basis function in `x`.
pub fn basis_support(p: u32, (kind, j, k): CoefficientKey) -> (f64, f64) {
    let p = p as i64;
    let (lo, hi) = match kind {
        BasisKind::Phi => (k, k + 2 * p - 1),
        BasisKind::Psi => (k + 1 - p, k + p),
    };
    (pow2i(j) * lo as f64, pow2i(j) * hi as f64)
}

impl WaveletCoefficientSet {
    pub fn new(p: u32, j_min: i32, j_max: i32) -> Result<Self> {
        check_order(p)?;
        if j_min > j_max {
            return Err(Error::InvalidArgument(format!("j_min = {j_min} exceeds j_max = {j_max}")));
        }
        Ok(WaveletCoefficientSet {
            p,
            j_min,
            j_max,
            tau: 0.0,
            entries: BTreeMap::new(),
            unconverged: Vec::new(),
        })
    }

    pub fn insert(&mut self, key: CoefficientKey, value: f64) -> Result<()> {
        let (kind, j, _) = key;
        let ok = match kind {
            BasisKind::Phi => j == self.j_max,
            BasisKind::Psi => (self.j_min..=self.j_max).contains(&j),
        };
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "{} entry at level {j} lies outside {}..={}",
                kind.as_str(),
                self.j_min,
                self.j_max
            )));
        }
        self.entries.insert(key, value);
        Ok(())
    }

    pub fn get(&self, key: CoefficientKey) -> Option<f64> {
        self.entries.get(&key).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending `(kind, j, k)` order.
    pub fn iter(&self) -> impl Iterator<Item = (CoefficientKey, f64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn values(&self) -> Vec<f64> {
        self.entries.values().copied().collect()
    }

    /// Drops every entry with `|c| ≤ τ`.
    pub fn threshold(&self, tau: f64) -> WaveletCoefficientSet {
        WaveletCoefficientSet {
            p: self.p,
            j_min: self.j_min,
            j_max: self.j_max,
            tau: self.tau.max(tau),
            entries: self
                .entries
                .iter()
                .filter(|(_, v)| v.abs() > tau)
                .map(|(k, v)| (*k, *v))
                .collect(),
            unconverged: self.unconverged.clone(),
        }
    }

    /// `Σ c·basis(x)` over the entries whose support contains `x`, summed in
    /// ascending `(kind, j, k)` order.
    pub fn eval(&self, phi: &ScalingEvaluator<f64>, psi: &WaveletEvaluator<f64>, x: f64) -> f64 {
        if self.entries.is_empty() {
            return 0.0;
        }
        let p = self.p as i64;
        let mut sum = 0.0;
        let j = self.j_max;
        let u = pow2i(-j) * x;
        let norm = pow2i(-j).sqrt();
        for k in (u - (2 * p - 1) as f64).ceil() as i64..=u.floor() as i64 {
            if let Some(c) = self.entries.get(&(BasisKind::Phi, j, k)) {
                sum += c * norm * phi.value(u - k as f64);
            }
        }
        for j in self.j_min..=self.j_max {
            let u = pow2i(-j) * x;
            let norm = pow2i(-j).sqrt();
            for k in (u - p as f64).ceil() as i64..=(u + (p - 1) as f64).floor() as i64 {
                if let Some(c) = self.entries.get(&(BasisKind::Psi, j, k)) {
                    sum += c * norm * psi.value(u - k as f64);
                }
            }
        }
        sum
    }

    /// Text form: a `p,j_min,j_max,tau` header and its values, then a
    /// `kind,j,k,coefficient` header and one sorted row per entry.
    pub fn write_to<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "p,j_min,j_max,tau")?;
        writeln!(out, "{},{},{},{}", self.p, self.j_min, self.j_max, format_f64(self.tau))?;
        writeln!(out, "kind,j,k,coefficient")?;
        for ((kind, j, k), c) in self.iter() {
            writeln!(out, "{},{j},{k},{}", kind.as_str(), format_f64(c))?;
        }
        Ok(())
    }

    /// Parses [`write_to`](Self::write_to) output. An empty input yields an
    /// empty set (`p = 2`, single level 0).
    pub fn read_from<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines().enumerate().filter_map(|(i, l)| match l {
            Ok(l) if l.trim().is_empty() => None,
            other => Some((i + 1, other)),
        });
        let Some((n, header)) = lines.next() else {
            return WaveletCoefficientSet::new(2, 0, 0);
        };
        if header?.trim() != "p,j_min,j_max,tau" {
            return Err(Error::Format(format!("line {n}: expected header `p,j_min,j_max,tau`")));
        }
        let (n, values) = lines.next().ok_or_else(|| Error::Format("missing parameter line".into()))?;
        let values = values?;
        let fields: Vec<&str> = values.trim().split(',').collect();
        let bad = |n: usize, what: &str| Error::Format(format!("line {n}: {what}"));
        if fields.len() != 4 {
            return Err(bad(n, "expected 4 fields"));
        }
        let p: u32 = fields[0].parse().map_err(|_| bad(n, "bad p"))?;
        let j_min: i32 = fields[1].parse().map_err(|_| bad(n, "bad j_min"))?;
        let j_max: i32 = fields[2].parse().map_err(|_| bad(n, "bad j_max"))?;
        let tau: f64 = fields[3].parse().map_err(|_| bad(n, "bad tau"))?;
        let mut set = WaveletCoefficientSet::new(p, j_min, j_max)?;
        set.tau = tau;
        match lines.next() {
            None => return Ok(set),
            Some((n, l)) => {
                if l?.trim() != "kind,j,k,coefficient" {
                    return Err(bad(n, "expected header `kind,j,k,coefficient`"));
                }
            }
        }
        for (n, line) in lines {
            let line = line?;
            let f: Vec<&str> = line.trim().split(',').collect();
            if f.len() != 4 {
                return Err(bad(n, "expected 4 fields"));
            }
            let kind: BasisKind = f[0].parse().map_err(|_| bad(n, "bad kind"))?;
            let j: i32 = f[1].parse().map_err(|_| bad(n, "bad j"))?;
            let k: i64 = f[2].parse().map_err(|_| bad(n, "bad k"))?;
            let c: f64 = f[3].parse().map_err(|_| bad(n, "bad coefficient"))?;
            set.insert((kind, j, k), c).map_err(|e| bad(n, &e.to_string()))?;
        }
        Ok(set)
    }
}

/// What to expand and how accurately.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionSpec {
    pub p: u32,
    pub j_min: i32,
    pub j_max: i32,
    /// Interval carrying the function; basis functions not meeting it are skipped.
    pub interval: (f64, f64),
    /// Kinks of the function, used as extra quadrature cut points.
    pub breakpoints: Vec<f64>,
    pub quad: QuadOptions,
}

impl ExpansionSpec {
    /// Quadrature at relative tolerance `1e-6`, no extra breakpoints.
    pub fn new(p: u32, j_min: i32, j_max: i32, interval: (f64, f64)) -> Self {
        ExpansionSpec {
            p,
            j_min,
            j_max,
            interval,
            breakpoints: Vec::new(),
            quad: QuadOptions::new(DEFAULT_EXPANSION_TOL),
        }
    }
}

pub const DEFAULT_EXPANSION_TOL: f64 = 1e-6;

/// `⟨f, φ_{j_max,k}⟩` and `⟨f, ψ_jk⟩` for every basis function meeting the
/// interval. Entries are computed in parallel; failed quadratures keep
/// their best estimate and are listed in `unconverged`.
pub fn expansion_coefficients<F: Fn(f64) -> f64 + Sync>(
    f: F,
    phi: &ScalingEvaluator<f64>,
    psi: &WaveletEvaluator<f64>,
    spec: &ExpansionSpec,
) -> Result<WaveletCoefficientSet> {
    let p = spec.p;
    if phi.p() != p || psi.p() != p {
        return Err(Error::InvalidArgument("evaluators do not match p".into()));
    }
    let (a, b) = spec.interval;
    if !(a < b) {
        return Err(Error::InvalidArgument(format!("empty interval [{a}, {b}]")));
    }
    let mut set = WaveletCoefficientSet::new(p, spec.j_min, spec.j_max)?;
    let pi = p as i64;
    let mut keys = Vec::new();
    let j = spec.j_max;
    let (ua, ub) = (pow2i(-j) * a, pow2i(-j) * b);
    for k in (ua - (2 * pi - 1) as f64).floor() as i64..=ub.ceil() as i64 {
        keys.push((BasisKind::Phi, j, k));
    }
    for j in spec.j_min..=spec.j_max {
        let (ua, ub) = (pow2i(-j) * a, pow2i(-j) * b);
        for k in (ua - pi as f64).floor() as i64..=(ub + (pi - 1) as f64).ceil() as i64 {
            keys.push((BasisKind::Psi, j, k));
        }
    }
    keys.retain(|&key| {
        let (lo, hi) = basis_support(p, key);
        lo < b && hi > a
    });

    let results: Vec<(CoefficientKey, f64, bool)> = keys
        .par_iter()
        .map(|&key| {
            let (kind, j, k) = key;
            let (lo, hi) = basis_support(p, key);
            let (lo, hi) = (lo.max(a), hi.min(b));
            let scale = pow2i(-j);
            let norm = scale.sqrt();
            let step = pow2i(j);
            let origin = match kind {
                BasisKind::Phi => step * k as f64,
                BasisKind::Psi => step * (k + 1 - pi) as f64,
            };
            let mut cuts: Vec<f64> = lattice(origin, step, 2 * pi - 1).collect();
            cuts.extend(spec.breakpoints.iter().copied());
            let g = |x: f64| {
                let u = scale * x - k as f64;
                let basis = match kind {
                    BasisKind::Phi => phi.value(u),
                    BasisKind::Psi => psi.value(u),
                };
                f(x) * norm * basis
            };
            match integrate_piecewise(g, lo, hi, &cuts, &spec.quad) {
                Ok(q) => (key, q.value, true),
                Err(Error::NonConvergence { value, .. }) => (key, value, false),
                Err(_) => (key, f64::NAN, false),
            }
        })
        .collect();
    for (key, value, ok) in results {
        if !ok {
            set.unconverged.push(key);
        }
        if value != 0.0 {
            set.insert(key, value)?;
        }
    }
    Ok(set)
}

/// Hoyer sparsity `(√n − ‖x‖₁/‖x‖₂)/(√n − 1)`: 1 for one-hot, 0 for flat.
pub fn hoyer_sparsity(values: &[f64]) -> Result<f64> {
    let n = values.len();
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Hoyer sparsity needs at least 2 values, got {n}"
        )));
    }
    let l1: f64 = values.iter().map(|v| v.abs()).sum();
    let l2 = values.iter().map(|v| v * v).sum::<f64>().sqrt();
    if l2 == 0.0 {
        return Err(Error::InvalidArgument("Hoyer sparsity of an all-zero vector".into()));
    }
    let rn = (n as f64).sqrt();
    Ok(((rn - l1 / l2) / (rn - 1.0)).clamp(0.0, 1.0))
}
