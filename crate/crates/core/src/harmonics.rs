//! Hyperspherical harmonics.
//!
//! A harmonic is labelled by the chain `(l, m_{d−2}, …, m_2, m_1)` with
//! `l ≥ m_{d−2} ≥ … ≥ m_2 ≥ |m_1|`. The unnormalized product eigenfunction is
//!
//! ```text
//! Ψ = P^{m_{d−2}}_{l,d}(cos θ_d) · P^{m_{d−3}}_{m_{d−2},d−1}(cos θ_{d−1}) ⋯ P^{m_1}_{m_2,3}(cos θ_3) · e^{i m_1 φ}
//! ```
//!
//! and `Y = f · Ψ` (or `f · Ψ*` for negative `m_1`) with
//! `f = (2π)^{−1/2} N^{(d)}_{l m_{d−2}} ⋯ N^{(3)}_{m_2 |m_1|}`. The explicit
//! `(2π)^{−1/2}` accounts for the azimuthal integral, which the polar
//! normalization factors alone leave at `2π`.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gegenbauer::{assoc, norm_factor, poly};
use crate::geometry::{solid_angle, to_ultraspherical, Angles, CartesianPoint, UltrasphericalPoint};
use crate::quadrature::{theta_rule, SphereGrid};
use crate::special::{binomial, pairwise_sum};

/// Label `(l; m_{d−2}, …, m_2, m_1)` of one harmonic in dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    l: usize,
    /// `[m_{d−2}, …, m_2, m_1]`, length `d − 2`.
    m: Vec<i64>,
}

impl MultiIndex {
    pub fn new(d: usize, l: usize, m: Vec<i64>) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidDimension { d, min: 3 });
        }
        if m.len() != d - 2 {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: m.len() + 2,
            });
        }
        let idx = MultiIndex { l, m };
        idx.check_chain()?;
        Ok(idx)
    }

    /// The constant harmonic of dimension `d`.
    pub fn zero(d: usize) -> Self {
        MultiIndex {
            l: 0,
            m: vec![0; d.saturating_sub(2)],
        }
    }

    fn check_chain(&self) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::InvalidIndex {
                index: self.to_string(),
                reason,
            })
        };
        let mut upper = self.l as i64;
        let last = self.m.len() - 1;
        for (i, &mi) in self.m.iter().enumerate() {
            let value = if i == last { mi.abs() } else { mi };
            if value < 0 {
                return fail(format!("m_{} = {mi} is negative", self.dim() - 2 - i));
            }
            if value > upper {
                return fail(format!("chain requires |m_{}| <= {upper}", self.dim() - 2 - i));
            }
            upper = value;
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.m.len() + 2
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `[m_{d−2}, …, m_1]`.
    pub fn m(&self) -> &[i64] {
        &self.m
    }

    /// Azimuthal number `m_1` (may be negative).
    pub fn m1(&self) -> i64 {
        *self.m.last().expect("index has at least one m")
    }

    /// `[l, m_{d−2}, …, m_2, |m_1|]`: the degree carried into each polar factor.
    pub fn chain(&self) -> Vec<usize> {
        std::iter::once(self.l)
            .chain(self.m.iter().map(|v| v.unsigned_abs() as usize))
            .collect()
    }

    /// Same index with `m_1` negated.
    pub fn conjugate(&self) -> Self {
        let mut m = self.m.clone();
        if let Some(last) = m.last_mut() {
            *last = -*last;
        }
        MultiIndex { l: self.l, m }
    }

    /// Flat `[l, m_{d−2}, …, m_1]` as used in coefficient files.
    pub fn to_vec(&self) -> Vec<i64> {
        std::iter::once(self.l as i64).chain(self.m.iter().copied()).collect()
    }

    pub fn from_slice(d: usize, v: &[i64]) -> Result<Self> {
        let (&l, rest) = v.split_first().ok_or_else(|| Error::InvalidIndex {
            index: "[]".into(),
            reason: "empty index".into(),
        })?;
        if l < 0 {
            return Err(Error::InvalidIndex {
                index: format!("{v:?}"),
                reason: "negative degree l".into(),
            });
        }
        MultiIndex::new(d, l as usize, rest.to_vec())
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .len()
            .cmp(&other.m.len())
            .then(self.l.cmp(&other.l))
            .then_with(|| self.m.cmp(&other.m))
    }
}

/// `(l,m_{d−2},…,m_2;m_1)`, e.g. `(2,1;-1)` in four dimensions, `(1;0)` in three.
impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.l)?;
        let (last, upper) = self.m.split_last().expect("index has at least one m");
        for v in upper {
            write!(f, ",{v}")?;
        }
        write!(f, ";{last})")
    }
}

/// Parses the [`Display`](fmt::Display) form; the dimension is inferred from the length.
impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidIndex {
            index: s.to_string(),
            reason: reason.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| bad("expected parentheses"))?;
        let values = inner
            .split([',', ';'])
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| bad("entries must be integers"))?;
        if values.len() < 2 {
            return Err(bad("need at least l and m_1"));
        }
        MultiIndex::from_slice(values.len() + 1, &values)
    }
}

/// Number of independent harmonics of degree `l` in dimension `d`:
/// `(d+2l−2)(d+l−3)! / ((d−2)! l!)`.
pub fn count(d: usize, l: usize) -> u64 {
    assert!(d >= 3, "harmonics need d >= 3, got {d}");
    let (d, l) = (d as u64, l as u64);
    // (d+l−3)!/((d−2)! l!) = C(d+l−3, l) / (d−2)
    let c = binomial(d + l - 3, l).expect("level count overflows u128");
    let n = (d + 2 * l - 2) as u128 * c / (d - 2) as u128;
    u64::try_from(n).expect("level count overflows u64")
}

/// All indices of level `l`, in ascending lexicographic order of
/// `(m_{d−2}, …, m_2, m_1)` with `m_1` running from `−m_2` to `m_2`.
pub fn enumerate(d: usize, l: usize) -> Vec<MultiIndex> {
    assert!(d >= 3, "harmonics need d >= 3, got {d}");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(d - 2);
    enumerate_rec(l, d - 2, l as i64, &mut prefix, &mut out);
    out
}

fn enumerate_rec(l: usize, slots: usize, upper: i64, prefix: &mut Vec<i64>, out: &mut Vec<MultiIndex>) {
    if prefix.len() + 1 == slots {
        for m1 in -upper..=upper {
            prefix.push(m1);
            out.push(MultiIndex { l, m: prefix.clone() });
            prefix.pop();
        }
        return;
    }
    for v in 0..=upper {
        prefix.push(v);
        enumerate_rec(l, slots, v, prefix, out);
        prefix.pop();
    }
}

/// Every index with `l ≤ lmax`, level by level.
pub fn enumerate_up_to(d: usize, lmax: usize) -> Vec<MultiIndex> {
    (0..=lmax).flat_map(|l| enumerate(d, l)).collect()
}

fn check_angles(idx: &MultiIndex, angles: &Angles) -> Result<()> {
    angles.check_dim(idx.dim())
}

/// Polar part of `Ψ`: the product of associated functions over `θ_d … θ_3`.
fn polar_product(idx: &MultiIndex, angles: &Angles) -> f64 {
    let d = idx.dim();
    let chain = idx.chain();
    (3..=d)
        .map(|k| {
            let pos = d - k;
            assoc(chain[pos], chain[pos + 1], k, angles.theta_j(k))
        })
        .product()
}

/// Unnormalized product eigenfunction `Ψ`; requires `m_1 ≥ 0`.
pub fn eval_psi(idx: &MultiIndex, angles: &Angles) -> Result<Complex64> {
    check_angles(idx, angles)?;
    if idx.m1() < 0 {
        return Err(Error::InvalidIndex {
            index: idx.to_string(),
            reason: "Ψ is defined for m_1 >= 0; use eval_harmonic for the conjugate branch".into(),
        });
    }
    let phase = Complex64::from_polar(1.0, idx.m1() as f64 * angles.phi);
    Ok(polar_product(idx, angles) * phase)
}

/// Normalization coefficient `f` making `∫ |Y|² dΩ = 1`.
pub fn norm_coeff(idx: &MultiIndex) -> f64 {
    let d = idx.dim();
    let chain = idx.chain();
    let polar: f64 = (3..=d)
        .map(|k| {
            let pos = d - k;
            norm_factor(chain[pos], chain[pos + 1], k).expect("chain invariant guarantees n <= l")
        })
        .product();
    polar / TAU.sqrt()
}

/// Orthonormal harmonic `Y_idx(Ω)`.
pub fn eval_harmonic(idx: &MultiIndex, angles: &Angles) -> Result<Complex64> {
    check_angles(idx, angles)?;
    let m1 = idx.m1();
    let phase = Complex64::from_polar(1.0, m1 as f64 * angles.phi);
    Ok(norm_coeff(idx) * polar_product(idx, angles) * phase)
}

/// `∫ Y_a Ȳ_b dΩ` for every pair, by full tensor-product quadrature.
pub fn gram_matrix(indices: &[MultiIndex], grid: &SphereGrid) -> Result<Vec<Vec<Complex64>>> {
    for idx in indices {
        if idx.dim() != grid.d {
            return Err(Error::DimensionMismatch {
                expected: grid.d,
                found: idx.dim(),
            });
        }
    }
    let nodes: Vec<_> = grid.nodes().collect();
    let values: Vec<Vec<Complex64>> = indices
        .iter()
        .map(|idx| nodes.iter().map(|n| eval_harmonic(idx, &n.angles)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut gram = vec![vec![Complex64::default(); indices.len()]; indices.len()];
    let mut terms = vec![Complex64::default(); nodes.len()];
    for a in 0..indices.len() {
        for b in a..indices.len() {
            for (k, node) in nodes.iter().enumerate() {
                terms[k] = node.weight * values[a][k] * values[b][k].conj();
            }
            let v = pairwise_sum(&terms);
            gram[a][b] = v;
            gram[b][a] = v.conj();
        }
    }
    Ok(gram)
}

/// `∫ Y_a Ȳ_b dΩ` for every pair, integrating angle by angle with the same
/// one-dimensional rules as [`crate::quadrature::sphere_grid`]. Cost is
/// independent of the grid's tensor size, which keeps high dimensions cheap.
pub fn gram_separable(indices: &[MultiIndex], lmax: usize) -> Result<Vec<Vec<Complex64>>> {
    let Some(first) = indices.first() else {
        return Ok(Vec::new());
    };
    let d = first.dim();
    if let Some(bad) = indices.iter().find(|i| i.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bad.dim(),
        });
    }
    let n_theta = lmax + 2;
    let n_phi = 2 * lmax + 2;
    let rules = (3..=d).map(|k| theta_rule(k as u32 - 2, n_theta)).collect::<Result<Vec<_>>>()?;
    let chains: Vec<Vec<usize>> = indices.iter().map(MultiIndex::chain).collect();
    let norms: Vec<f64> = indices.iter().map(norm_coeff).collect();

    let mut gram = vec![vec![Complex64::default(); indices.len()]; indices.len()];
    for a in 0..indices.len() {
        for b in a..indices.len() {
            let dm = indices[a].m1() - indices[b].m1();
            let phi_terms: Vec<Complex64> = (0..n_phi)
                .map(|j| Complex64::from_polar(TAU / n_phi as f64, dm as f64 * TAU * j as f64 / n_phi as f64))
                .collect();
            let mut value = pairwise_sum(&phi_terms) * norms[a] * norms[b];
            for (rule, k) in rules.iter().zip(3..=d) {
                let pos = d - k;
                let (ca, cb) = (&chains[a], &chains[b]);
                value *= rule.integrate(|t| assoc(ca[pos], ca[pos + 1], k, t) * assoc(cb[pos], cb[pos + 1], k, t));
            }
            gram[a][b] = value;
            gram[b][a] = value.conj();
        }
    }
    Ok(gram)
}

/// `(d−2)Ω_d/(2l+d−2) · Σ_idx Y_idx(a) Ȳ_idx(b)` over one level, as a complex number.
pub fn addition_sum_complex(d: usize, l: usize, a: &Angles, b: &Angles) -> Result<Complex64> {
    if d < 3 {
        return Err(Error::InvalidDimension { d, min: 3 });
    }
    a.check_dim(d)?;
    b.check_dim(d)?;
    let terms = enumerate(d, l)
        .iter()
        .map(|idx| Ok(eval_harmonic(idx, a)? * eval_harmonic(idx, b)?.conj()))
        .collect::<Result<Vec<_>>>()?;
    let prefactor = (d - 2) as f64 * solid_angle(d)? / (2 * l + d - 2) as f64;
    Ok(prefactor * pairwise_sum(&terms))
}

/// Real part of [`addition_sum_complex`]; equals `P_{l,d}(cos γ)`.
pub fn addition_sum(d: usize, l: usize, a: &Angles, b: &Angles) -> Result<f64> {
    addition_sum_complex(d, l, a, b).map(|z| z.re)
}

/// `K_{l,d} = Ω_d/Ω_{d−1} · (d−2) / ((2l+d−2)(d−3))`, defined for `d ≥ 4`.
pub fn addition_constant(l: usize, d: usize) -> Result<f64> {
    if d < 4 {
        return Err(Error::InvalidDimension { d, min: 4 });
    }
    Ok(solid_angle(d)? / solid_angle(d - 1)? * (d - 2) as f64 / ((2 * l + d - 2) * (d - 3)) as f64)
}

/// Addition theorem reduced to the outermost angle:
///
/// ```text
/// K_{l,d} Σ_{m=0}^{l} (2m+d−3) (N^{(d)}_{lm})² P^m_{l,d}(cos θ_a) P^m_{l,d}(cos θ_b) P_{m,d−1}(cos γ_{d−1})
/// ```
pub fn addition_reduced(d: usize, l: usize, theta_a: f64, theta_b: f64, cos_gamma_lower: f64) -> Result<f64> {
    let k = addition_constant(l, d)?;
    let mut terms = Vec::with_capacity(l + 1);
    for m in 0..=l {
        let n = norm_factor(l, m, d)?;
        terms.push(
            (2 * m + d - 3) as f64
                * n
                * n
                * assoc(l, m, d, theta_a)
                * assoc(l, m, d, theta_b)
                * poly(m, d - 1, cos_gamma_lower),
        );
    }
    Ok(k * pairwise_sum(&terms))
}

/// `Σ_idx |Y_idx(Ω)|²` over one level.
pub fn level_trace(d: usize, l: usize, angles: &Angles) -> Result<f64> {
    let terms = enumerate(d, l)
        .iter()
        .map(|idx| eval_harmonic(idx, angles).map(|y| y.norm_sqr()))
        .collect::<Result<Vec<_>>>()?;
    Ok(pairwise_sum(&terms))
}

/// The constant value of [`level_trace`]: `(2l+d−2) P_{l,d}(1) / ((d−2) Ω_d)`.
pub fn level_trace_value(d: usize, l: usize) -> Result<f64> {
    Ok((2 * l + d - 2) as f64 * poly(l, d, 1.0) / ((d - 2) as f64 * solid_angle(d)?))
}

/// Which solution of the radial Euler equation multiplies the harmonic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialBranch {
    /// `r^l`, regular at the origin.
    Regular,
    /// `r^{−(l+d−2)}`, decaying at infinity.
    Decaying,
}

impl RadialBranch {
    pub fn exponent(self, l: usize, d: usize) -> f64 {
        match self {
            RadialBranch::Regular => l as f64,
            RadialBranch::Decaying => -((l + d - 2) as f64),
        }
    }
}

/// Finite-difference Laplacian of a solid harmonic at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaplacianResidual {
    /// `|Σ_i D_i|`, the discrete Laplacian.
    pub residual: f64,
    /// `Σ_i |D_i| + max|u| / r²` over the stencil.
    pub scale: f64,
}

impl LaplacianResidual {
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.residual
        } else {
            self.residual / self.scale
        }
    }
}

/// Below this `sin θ_j` the chart is considered singular at the evaluation point.
pub const AXIS_GUARD: f64 = 1e-6;

/// Discrete Laplacian of `u = r^κ Y_idx` (κ from `branch`) at the point
/// `(r, angles)`, using central second differences with step `h` along each
/// Cartesian axis.
pub fn harmonicity_residual(
    idx: &MultiIndex,
    branch: RadialBranch,
    r: f64,
    angles: &Angles,
    h: f64,
) -> Result<LaplacianResidual> {
    let d = idx.dim();
    check_angles(idx, angles)?;
    if !(r > 0.0) {
        return Err(Error::InvalidParameter(format!("radius {r} must be positive")));
    }
    if !(h > 0.0 && h < r) {
        return Err(Error::InvalidParameter(format!("step {h} must lie in (0, r)")));
    }
    if let Some(s) = angles.theta.iter().map(|t| t.sin()).find(|s| s.abs() < AXIS_GUARD) {
        return Err(Error::AxisSingularity { sin_theta: s });
    }
    let exponent = branch.exponent(idx.l(), d);
    let solid = |x: &[f64]| -> Result<Complex64> {
        let p = to_ultraspherical(&CartesianPoint::new(x.to_vec()))?;
        Ok(p.r.powf(exponent) * eval_harmonic(idx, &p.angles)?)
    };
    let center = UltrasphericalPoint {
        r,
        angles: angles.clone(),
    };
    let x0 = crate::geometry::to_cartesian(&center).x;
    let u0 = solid(&x0)?;
    let mut max_u = u0.norm();
    let mut lap = Complex64::default();
    let mut abs_sum = 0.0;
    let mut shifted = x0.clone();
    for i in 0..d {
        shifted[i] = x0[i] + h;
        let up = solid(&shifted)?;
        shifted[i] = x0[i] - h;
        let down = solid(&shifted)?;
        shifted[i] = x0[i];
        let second = (up - 2.0 * u0 + down) / (h * h);
        lap += second;
        abs_sum += second.norm();
        max_u = max_u.max(up.norm()).max(down.norm());
    }
    Ok(LaplacianResidual {
        residual: lap.norm(),
        scale: abs_sum + max_u / (r * r),
    })
}
