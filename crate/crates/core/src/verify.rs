//! Numerical verifier for the identities implemented by the other modules.
//!
//! Each check reports the largest residual it saw, measured relative to the
//! natural scale of the quantity (see the check descriptions in [`CHECKS`]).

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gegenbauer::{
    assoc, assoc_with_theta_derivatives, deriv_at_one, norm_factor, ode_residual, poly, poly_deriv,
    poly_reference,
};
use crate::geometry::{cos_gamma, cos_gamma_upto, random_angles, solid_angle, to_cartesian, Angles, UltrasphericalPoint};
use crate::harmonics::{
    addition_reduced, addition_sum_complex, count, enumerate, enumerate_up_to, gram_matrix, gram_separable,
    harmonicity_residual, level_trace, level_trace_value, MultiIndex, RadialBranch,
};
use crate::quadrature::{sphere_grid, theta_rule};
use crate::solver::{
    eval_expansion, green_direct, green_expansion, solve, BoundaryProblem, BoundarySamples, Domain,
    HarmonicExpansion, RadialCoeffs, SphereData,
};

pub const MIN_DIM: usize = 3;
pub const MAX_DIM: usize = 8;
pub const MAX_LMAX: usize = 8;

/// Tolerance of the finite-difference harmonicity check, independent of `tol`:
/// the O(h²) stencil error dominates long before roundoff.
pub const HARMONICITY_TOL: f64 = 1e-4;
pub const HARMONICITY_STEP: f64 = 1e-3;

/// Check names with a one-line description, in run order.
pub const CHECKS: &[(&str, &str)] = &[
    ("generating_function", "|Σ_{l≤80} r^l P_l(x) − (1+r²−2rx)^{−(d−2)/2}| / exact, r = 0.4"),
    ("oracle_equivalence", "recurrence vs binomial-sum oracle, |Δ| / max(1, |P|)"),
    ("derivative_identity", "d^m P_l / dx^m at x = 1 vs closed form, relative"),
    ("ode_residual", "associated-function ODE residual / sum of |terms|"),
    ("normalization", "|N² ∫ sin^{d−2} (P^n_l)² dθ − 1|"),
    ("counts", "|enumeration length − closed-form count|"),
    ("solid_angle", "grid weight and recursion vs 2π^{d/2}/Γ(d/2), relative"),
    ("gram", "max |∫ Y_a Ȳ_b dΩ − δ_ab|"),
    ("addition_theorem", "|(d−2)Ω/(2l+d−2) Σ Y Ȳ − P_l(cos γ)| / P_l(1), full and reduced forms"),
    ("level_trace", "|Σ |Y|² − (2l+d−2)P_l(1)/((d−2)Ω)| / value"),
    ("harmonicity", "finite-difference Laplacian of r^l Y and r^{−(l+d−2)} Y, relative"),
    ("solver_roundtrip", "manufactured coefficients recovered by interior, exterior and annulus fits"),
    ("green_expansion", "|multipole sum (lmax 60) − |x−y|^{2−d}| / |x−y|^{2−d}, r_</r_> ≤ 0.3"),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub d: usize,
    pub lmax: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub d_min: usize,
    pub d_max: usize,
    pub lmax: usize,
    pub tol: f64,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(d_min: usize, d_max: usize, lmax: usize, tol: f64) -> Result<Self> {
        if d_min < MIN_DIM || d_max > MAX_DIM || d_min > d_max {
            return Err(Error::InvalidParameter(format!(
                "dimension range {d_min}..={d_max} must lie within {MIN_DIM}..={MAX_DIM}"
            )));
        }
        if lmax > MAX_LMAX {
            return Err(Error::InvalidParameter(format!("lmax = {lmax} exceeds {MAX_LMAX}")));
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidParameter(format!("tolerance {tol} must be positive")));
        }
        Ok(VerifyConfig {
            d_min,
            d_max,
            lmax,
            tol,
            seed: 0x5eed,
        })
    }
}

pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    for d in cfg.d_min..=cfg.d_max {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ d as u64);
        let l = cfg.lmax;
        let mut push = |name: &str, lmax: usize, residual: f64, tolerance: f64| {
            checks.push(CheckResult {
                name: name.to_string(),
                d,
                lmax,
                max_residual: residual,
                tolerance,
                // NaN residuals fail
                pass: residual <= tolerance,
            });
        };
        push("generating_function", 80, generating_function(d), cfg.tol);
        push("oracle_equivalence", l, oracle_equivalence(d, l), cfg.tol);
        push("derivative_identity", l, derivative_identity(d, l), cfg.tol);
        push("ode_residual", l, ode_check(d, l)?, cfg.tol);
        push("normalization", l, normalization(d, l)?, cfg.tol);
        push("counts", l, counts(d, l), cfg.tol);
        push("solid_angle", l, solid_angle_check(d, l)?, cfg.tol);
        push("gram", l, gram(d, l, &mut rng)?, cfg.tol);
        push("addition_theorem", l, addition(d, l, &mut rng)?, cfg.tol);
        push("level_trace", l, trace(d, l, &mut rng)?, cfg.tol);
        push("harmonicity", l.min(3), harmonicity(d, l.min(3), &mut rng)?, HARMONICITY_TOL);
        let ls = solver_lmax(d, l);
        push("solver_roundtrip", ls, solver_roundtrip(d, ls, &mut rng)?, cfg.tol);
        push("green_expansion", 60, green(d, &mut rng)?, cfg.tol);
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerifyReport { checks, pass })
}

const XS: [f64; 7] = [-1.0, -0.7, -0.3, 0.0, 0.4, 0.8, 1.0];

fn generating_function(d: usize) -> f64 {
    let r: f64 = 0.4;
    XS.iter()
        .map(|&x| {
            let terms: Vec<f64> = (0..=80).map(|l| r.powi(l as i32) * poly(l, d, x)).collect();
            let exact = (1.0 + r * r - 2.0 * r * x).powf(-(d as f64 - 2.0) / 2.0);
            (crate::special::pairwise_sum(&terms) - exact).abs() / exact
        })
        .fold(0.0, f64::max)
}

fn oracle_equivalence(d: usize, lmax: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for l in 0..=lmax {
        for &x in &XS {
            let reference = poly_reference(l, d, x);
            worst = worst.max((poly(l, d, x) - reference).abs() / reference.abs().max(1.0));
        }
    }
    worst
}

fn derivative_identity(d: usize, lmax: usize) -> f64 {
    let mut worst: f64 = 0.0;
    for l in 0..=lmax {
        for n in 0..=l {
            let exact = deriv_at_one(l, n, d);
            worst = worst.max((poly_deriv(l, n, d, 1.0) - exact).abs() / exact.abs().max(1.0));
        }
    }
    worst
}

fn ode_check(d: usize, lmax: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for l in 0..=lmax {
        for m in 0..=l {
            for k in 1..=10 {
                let theta = PI * k as f64 / 11.0;
                let residual = ode_residual(l, m, d, theta)?;
                let (f, df, d2f) = assoc_with_theta_derivatives(l, m, d, theta);
                let (s, c) = theta.sin_cos();
                let (lf, mf, dd) = (l as f64, m as f64, d as f64);
                let scale = d2f.abs()
                    + ((dd - 2.0) * c / s * df).abs()
                    + (lf * (lf + dd - 2.0) * f).abs()
                    + (mf * (mf + dd - 3.0) / (s * s) * f).abs();
                if scale > 0.0 {
                    worst = worst.max(residual.abs() / scale);
                }
            }
        }
    }
    Ok(worst)
}

fn normalization(d: usize, lmax: usize) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for l in 0..=lmax {
        // (P^n_l)² is a polynomial of degree 2l in cos θ
        let rule = theta_rule(d as u32 - 2, l + 1)?;
        for n in 0..=l {
            let nf = norm_factor(l, n, d)?;
            let integral = rule.integrate(|t| assoc(l, n, d, t).powi(2));
            worst = worst.max((nf * nf * integral - 1.0).abs());
        }
    }
    Ok(worst)
}

fn counts(d: usize, lmax: usize) -> f64 {
    (0..=lmax)
        .map(|l| (enumerate(d, l).len() as f64 - count(d, l) as f64).abs())
        .fold(0.0, f64::max)
}

fn solid_angle_check(d: usize, lmax: usize) -> Result<f64> {
    let exact = solid_angle(d)?;
    let recursion = solid_angle(d - 1)? * crate::special::wallis(d as u32 - 2);
    let grid_weight = if d <= 6 {
        sphere_grid(d, lmax)?.total_weight()
    } else {
        // product of the one-dimensional rule masses equals the tensor grid total
        let grid = sphere_grid(d, lmax)?;
        grid.theta_rules.iter().map(|r| r.weights.iter().sum::<f64>()).product::<f64>() * 2.0 * PI
    };
    Ok(((recursion - exact).abs().max((grid_weight - exact).abs())) / exact)
}

/// Full-tensor Gram work limit, in harmonic evaluations.
const TENSOR_BUDGET: usize = 2_000_000;
const GRAM_SAMPLE: usize = 80;

fn sample_indices(d: usize, lmax: usize, limit: usize, rng: &mut ChaCha8Rng) -> Vec<MultiIndex> {
    let mut all = enumerate_up_to(d, lmax);
    if all.len() > limit {
        all.shuffle(rng);
        all.truncate(limit);
        all.sort();
    }
    all
}

fn max_identity_deviation(g: &[Vec<Complex64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (a, row) in g.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            let target = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((v - target).norm());
        }
    }
    worst
}

fn gram(d: usize, lmax: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
    let all = enumerate_up_to(d, lmax);
    let grid = sphere_grid(d, lmax)?;
    if all.len() * grid.len() <= TENSOR_BUDGET {
        return Ok(max_identity_deviation(&gram_matrix(&all, &grid)?));
    }
    let indices = sample_indices(d, lmax, GRAM_SAMPLE, rng);
    Ok(max_identity_deviation(&gram_separable(&indices, lmax)?))
}

fn addition(d: usize, lmax: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    // the full sum touches every index of a level; cap the work in high d
    let pairs = if count(d, lmax) > 500 { 3 } else { 10 };
    for l in 0..=lmax {
        let scale = poly(l, d, 1.0);
        for _ in 0..pairs {
            let (a, b) = (random_angles(rng, d), random_angles(rng, d));
            let target = poly(l, d, cos_gamma(&a, &b, d)?);
            let full = addition_sum_complex(d, l, &a, &b)?;
            worst = worst.max((full - target).norm() / scale);
            if d >= 4 {
                let lower = cos_gamma_upto(&a, &b, d - 1);
                let reduced = addition_reduced(d, l, a.theta[0], b.theta[0], lower)?;
                worst = worst.max((reduced - target).abs() / scale);
            }
        }
    }
    Ok(worst)
}

fn trace(d: usize, lmax: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for l in 0..=lmax {
        let value = level_trace_value(d, l)?;
        for _ in 0..3 {
            let a = random_angles(rng, d);
            worst = worst.max((level_trace(d, l, &a)? - value).abs() / value);
        }
    }
    Ok(worst)
}

fn interior_angles(rng: &mut ChaCha8Rng, d: usize) -> Angles {
    Angles {
        theta: (0..d - 2).map(|_| rng.gen_range(0.2..PI - 0.2)).collect(),
        phi: rng.gen_range(0.0..2.0 * PI),
    }
}

fn harmonicity(d: usize, lmax: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
    let indices = sample_indices(d, lmax, 12, rng);
    let mut worst: f64 = 0.0;
    for idx in &indices {
        for _ in 0..4 {
            let r = rng.gen_range(0.5..0.9);
            let a = interior_angles(rng, d);
            for branch in [RadialBranch::Regular, RadialBranch::Decaying] {
                let res = harmonicity_residual(idx, branch, r, &a, HARMONICITY_STEP)?;
                worst = worst.max(res.relative());
            }
        }
    }
    Ok(worst)
}

/// Projection work limit, in harmonic evaluations per sphere.
const SOLVER_BUDGET: usize = 2_000_000;

fn solver_lmax(d: usize, lmax: usize) -> usize {
    let mut ls = lmax.min(3);
    while ls > 0 && enumerate_up_to(d, ls).len() * sphere_grid(d, ls).map_or(usize::MAX, |g| g.len()) > SOLVER_BUDGET {
        ls -= 1;
    }
    ls
}

fn random_expansion(rng: &mut ChaCha8Rng, d: usize, lmax: usize, a: bool, b: bool) -> Result<HarmonicExpansion> {
    let mut exp = HarmonicExpansion::new(d, lmax)?;
    for idx in enumerate_up_to(d, lmax) {
        let mut draw = |on: bool| {
            if on {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            } else {
                Complex64::default()
            }
        };
        let c = RadialCoeffs::new(draw(a), draw(b));
        exp.insert(idx, c)?;
    }
    Ok(exp)
}

fn sphere(truth: &HarmonicExpansion, radius: f64) -> Result<SphereData> {
    let grid = sphere_grid(truth.dim(), truth.lmax())?;
    Ok(SphereData {
        radius,
        samples: BoundarySamples::from_expansion(grid, truth, radius)?,
    })
}

fn boundary_error(fit: &HarmonicExpansion, data: &SphereData) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (node, v) in data.samples.grid.nodes().zip(&data.samples.values) {
        worst = worst.max((eval_expansion(fit, data.radius, &node.angles)? - v).norm());
    }
    Ok(worst)
}

fn solver_roundtrip(d: usize, lmax: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    let interior = random_expansion(rng, d, lmax, true, false)?;
    let s = sphere(&interior, 1.0)?;
    let fit = solve(&BoundaryProblem::new(d, lmax, Domain::Interior(s.clone()))?)?;
    worst = worst.max(fit.max_abs_diff(&interior)).max(boundary_error(&fit, &s)?);

    let exterior = random_expansion(rng, d, lmax, false, true)?;
    let s = sphere(&exterior, 1.0)?;
    let fit = solve(&BoundaryProblem::new(d, lmax, Domain::Exterior(s.clone()))?)?;
    worst = worst.max(fit.max_abs_diff(&exterior)).max(boundary_error(&fit, &s)?);

    let shell = random_expansion(rng, d, lmax, true, true)?;
    let (inner, outer) = (sphere(&shell, 0.5)?, sphere(&shell, 2.0)?);
    let fit = solve(&BoundaryProblem::new(
        d,
        lmax,
        Domain::Annulus {
            inner: inner.clone(),
            outer: outer.clone(),
        },
    )?)?;
    worst = worst
        .max(fit.max_abs_diff(&shell))
        .max(boundary_error(&fit, &inner)?)
        .max(boundary_error(&fit, &outer)?);
    Ok(worst)
}

fn green(d: usize, rng: &mut ChaCha8Rng) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let xa = to_cartesian(&UltrasphericalPoint {
            r: rng.gen_range(0.1..0.3),
            angles: random_angles(rng, d),
        });
        let xb = to_cartesian(&UltrasphericalPoint {
            r: 1.0,
            angles: random_angles(rng, d),
        });
        let exact = green_direct(&xa, &xb)?;
        worst = worst.max((green_expansion(&xa, &xb, 60)? - exact).abs() / exact);
    }
    Ok(worst)
}
