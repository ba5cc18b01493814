//! Dirichlet problems for the Laplace equation with spherical boundaries.
//!
//! Every solution that is finite in the angles is a sum of
//! `(A r^l + B r^{−(l+d−2)}) Y_idx(Ω)` over harmonic indices. Boundary data on
//! a sphere of radius `R` is projected onto the harmonics; the radial
//! constants then follow from regularity (interior), decay (exterior) or a
//! 2×2 system per index (annulus).

use std::collections::BTreeMap;

use log::warn;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gegenbauer::poly;
use crate::geometry::{cos_gamma, to_ultraspherical, Angles, CartesianPoint};
use crate::harmonics::{enumerate_up_to, eval_harmonic, MultiIndex};
use crate::quadrature::SphereGrid;
use crate::special::pairwise_sum;

/// Radial constants `(A, B)` of one harmonic term.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RadialCoeffs {
    pub a: Complex64,
    pub b: Complex64,
}

impl RadialCoeffs {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        RadialCoeffs { a, b }
    }
}

/// `A r^l + B r^{−(l+d−2)}`.
pub fn radial_eval(a: Complex64, b: Complex64, l: usize, d: usize, r: f64) -> Result<Complex64> {
    if r < 0.0 || r.is_nan() {
        return Err(Error::InvalidParameter(format!("radius {r} must be nonnegative")));
    }
    let regular = a * r.powi(l as i32);
    if b == Complex64::default() {
        return Ok(regular);
    }
    if r == 0.0 {
        return Err(Error::SingularEvaluation(
            "decaying branch r^-(l+d-2) evaluated at the origin".into(),
        ));
    }
    Ok(regular + b * r.powi(-((l + d - 2) as i32)))
}

/// Finite harmonic expansion; indices without an entry have `A = B = 0`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct HarmonicExpansion {
    d: usize,
    lmax: usize,
    coeffs: BTreeMap<MultiIndex, RadialCoeffs>,
}

impl HarmonicExpansion {
    pub fn new(d: usize, lmax: usize) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidDimension { d, min: 3 });
        }
        Ok(HarmonicExpansion {
            d,
            lmax,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn insert(&mut self, idx: MultiIndex, c: RadialCoeffs) -> Result<()> {
        if idx.dim() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: idx.dim(),
            });
        }
        if idx.l() > self.lmax {
            return Err(Error::InvalidIndex {
                index: idx.to_string(),
                reason: format!("degree exceeds the expansion's lmax = {}", self.lmax),
            });
        }
        self.coeffs.insert(idx, c);
        Ok(())
    }

    pub fn get(&self, idx: &MultiIndex) -> RadialCoeffs {
        self.coeffs.get(idx).copied().unwrap_or_default()
    }

    /// Stored terms in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, &RadialCoeffs)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest coefficient difference against another expansion, over the union of keys.
    pub fn max_abs_diff(&self, other: &HarmonicExpansion) -> f64 {
        self.coeffs
            .keys()
            .chain(other.coeffs.keys())
            .map(|k| {
                let (x, y) = (self.get(k), other.get(k));
                (x.a - y.a).norm().max((x.b - y.b).norm())
            })
            .fold(0.0, f64::max)
    }
}

/// `Σ_idx (A r^l + B r^{−(l+d−2)}) Y_idx(Ω)`.
pub fn eval_expansion(exp: &HarmonicExpansion, r: f64, angles: &Angles) -> Result<Complex64> {
    angles.check_dim(exp.d)?;
    let terms = exp
        .iter()
        .map(|(idx, c)| Ok(radial_eval(c.a, c.b, idx.l(), exp.d, r)? * eval_harmonic(idx, angles)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(pairwise_sum(&terms))
}

pub fn eval_expansion_cartesian(exp: &HarmonicExpansion, x: &CartesianPoint) -> Result<Complex64> {
    if x.dim() != exp.d {
        return Err(Error::DimensionMismatch {
            expected: exp.d,
            found: x.dim(),
        });
    }
    let p = to_ultraspherical(x)?;
    eval_expansion(exp, p.r, &p.angles)
}

/// Values of a function at the nodes of a [`SphereGrid`], in node order.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundarySamples {
    pub grid: SphereGrid,
    pub values: Vec<Complex64>,
}

impl BoundarySamples {
    pub fn new(grid: SphereGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidParameter(format!(
                "{} samples for a grid of {} nodes",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::InvalidParameter("boundary samples must be finite".into()));
        }
        Ok(BoundarySamples { grid, values })
    }

    pub fn from_fn(grid: SphereGrid, f: impl Fn(&Angles) -> Complex64) -> Self {
        let values = grid.sample(f);
        BoundarySamples { grid, values }
    }

    /// Samples of the expansion on the sphere of radius `r`.
    pub fn from_expansion(grid: SphereGrid, exp: &HarmonicExpansion, r: f64) -> Result<Self> {
        let values = grid.nodes().map(|n| eval_expansion(exp, r, &n.angles)).collect::<Result<_>>()?;
        Ok(BoundarySamples { grid, values })
    }
}

/// `c_idx = ∫ data · Ȳ_idx dΩ` for every index with `l ≤ lmax`.
pub fn project_boundary(samples: &BoundarySamples, lmax: usize) -> Result<BTreeMap<MultiIndex, Complex64>> {
    let grid = &samples.grid;
    if grid.lmax < lmax {
        return Err(Error::InvalidParameter(format!(
            "grid resolves levels up to {}, projection asks for {lmax}",
            grid.lmax
        )));
    }
    if samples.values.len() != grid.len() {
        return Err(Error::InvalidParameter(format!(
            "{} samples for a grid of {} nodes",
            samples.values.len(),
            grid.len()
        )));
    }
    let nodes: Vec<_> = grid.nodes().collect();
    let mut out = BTreeMap::new();
    let mut terms = vec![Complex64::default(); nodes.len()];
    for idx in enumerate_up_to(grid.d, lmax) {
        for ((t, n), v) in terms.iter_mut().zip(&nodes).zip(&samples.values) {
            *t = n.weight * v * eval_harmonic(&idx, &n.angles)?.conj();
        }
        out.insert(idx, pairwise_sum(&terms));
    }
    Ok(out)
}

/// Dirichlet data on one sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereData {
    pub radius: f64,
    pub samples: BoundarySamples,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Domain {
    /// Ball `r < R`.
    Interior(SphereData),
    /// Complement `r > R`, with the field vanishing at infinity.
    Exterior(SphereData),
    /// Shell `R_inner < r < R_outer`.
    Annulus { inner: SphereData, outer: SphereData },
}

impl Domain {
    pub fn kind(&self) -> &'static str {
        match self {
            Domain::Interior(_) => "interior",
            Domain::Exterior(_) => "exterior",
            Domain::Annulus { .. } => "annulus",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryProblem {
    pub d: usize,
    pub lmax: usize,
    pub domain: Domain,
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidParameter(format!("radius {r} must be positive")));
    }
    Ok(())
}

impl BoundaryProblem {
    pub fn new(d: usize, lmax: usize, domain: Domain) -> Result<Self> {
        if d < 3 {
            return Err(Error::InvalidDimension { d, min: 3 });
        }
        let spheres: Vec<&SphereData> = match &domain {
            Domain::Interior(s) | Domain::Exterior(s) => vec![s],
            Domain::Annulus { inner, outer } => {
                if !(inner.radius < outer.radius) {
                    return Err(Error::InvalidParameter(format!(
                        "annulus requires R_inner < R_outer, got {} and {}",
                        inner.radius, outer.radius
                    )));
                }
                vec![inner, outer]
            }
        };
        for s in spheres {
            check_radius(s.radius)?;
            if s.samples.grid.d != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: s.samples.grid.d,
                });
            }
        }
        Ok(BoundaryProblem { d, lmax, domain })
    }
}

fn wrong_kind(expected: &str, p: &BoundaryProblem) -> Error {
    Error::InvalidParameter(format!("expected an {expected} problem, got {}", p.domain.kind()))
}

/// Regular solution in the ball: `B = 0`, `A = c / R^l`.
pub fn fit_interior(p: &BoundaryProblem) -> Result<HarmonicExpansion> {
    let Domain::Interior(s) = &p.domain else {
        return Err(wrong_kind("interior", p));
    };
    check_radius(s.radius)?;
    let mut exp = HarmonicExpansion::new(p.d, p.lmax)?;
    for (idx, c) in project_boundary(&s.samples, p.lmax)? {
        let a = c / s.radius.powi(idx.l() as i32);
        exp.insert(idx, RadialCoeffs::new(a, Complex64::default()))?;
    }
    Ok(exp)
}

/// Decaying solution outside the ball: `A = 0`, `B = c R^{l+d−2}`.
pub fn fit_exterior(p: &BoundaryProblem) -> Result<HarmonicExpansion> {
    let Domain::Exterior(s) = &p.domain else {
        return Err(wrong_kind("exterior", p));
    };
    check_radius(s.radius)?;
    let mut exp = HarmonicExpansion::new(p.d, p.lmax)?;
    for (idx, c) in project_boundary(&s.samples, p.lmax)? {
        let b = c * s.radius.powi((idx.l() + p.d - 2) as i32);
        exp.insert(idx, RadialCoeffs::new(Complex64::default(), b))?;
    }
    Ok(exp)
}

/// Relative determinant below which an annulus index is reported as ill-conditioned.
pub const ANNULUS_CONDITION_WARN: f64 = 1e-12;

/// Per index, solves `A R_i^l + B R_i^{−(l+d−2)} = c_idx(R_i)` for both radii by Cramer's rule.
pub fn fit_annulus(p: &BoundaryProblem) -> Result<HarmonicExpansion> {
    let Domain::Annulus { inner, outer } = &p.domain else {
        return Err(wrong_kind("annulus", p));
    };
    check_radius(inner.radius)?;
    check_radius(outer.radius)?;
    let (r1, r2) = (inner.radius, outer.radius);
    let c_inner = project_boundary(&inner.samples, p.lmax)?;
    let c_outer = project_boundary(&outer.samples, p.lmax)?;
    let mut exp = HarmonicExpansion::new(p.d, p.lmax)?;
    for (idx, c1) in c_inner {
        let c2 = c_outer[&idx];
        let l = idx.l() as i32;
        let q = -((idx.l() + p.d - 2) as i32);
        let (u1, v1) = (r1.powi(l), r1.powi(q));
        let (u2, v2) = (r2.powi(l), r2.powi(q));
        let det = u1 * v2 - u2 * v1;
        let scale = (u1 * v2).abs() + (u2 * v1).abs();
        if det == 0.0 || !det.is_finite() {
            return Err(Error::SingularSystem {
                index: idx.to_string(),
                det,
            });
        }
        if det.abs() < ANNULUS_CONDITION_WARN * scale {
            warn!("annulus system for {idx} is ill-conditioned: |det| = {:e}, scale = {scale:e}", det.abs());
        }
        let a = (c1 * v2 - c2 * v1) / det;
        let b = (u1 * c2 - u2 * c1) / det;
        exp.insert(idx, RadialCoeffs::new(a, b))?;
    }
    Ok(exp)
}

/// Dispatches on the problem's domain.
pub fn solve(p: &BoundaryProblem) -> Result<HarmonicExpansion> {
    match p.domain {
        Domain::Interior(_) => fit_interior(p),
        Domain::Exterior(_) => fit_exterior(p),
        Domain::Annulus { .. } => fit_annulus(p),
    }
}

/// `|x − y|^{−(d−2)}` evaluated directly.
pub fn green_direct(x: &CartesianPoint, y: &CartesianPoint) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    let diff = CartesianPoint::new(x.x.iter().zip(&y.x).map(|(a, b)| a - b).collect());
    Ok(diff.norm().powi(-(x.dim() as i32 - 2)))
}

/// Truncated multipole expansion `Σ_{l≤lmax} r_<^l / r_>^{l+d−2} P_{l,d}(cos γ)` of `|x − y|^{−(d−2)}`.
pub fn green_expansion(x: &CartesianPoint, y: &CartesianPoint, lmax: usize) -> Result<f64> {
    let d = x.dim();
    if y.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: y.dim(),
        });
    }
    if d < 3 {
        return Err(Error::InvalidDimension { d, min: 3 });
    }
    let px = to_ultraspherical(x)?;
    let py = to_ultraspherical(y)?;
    if px.r == py.r {
        return Err(Error::NonConvergent { radius: px.r });
    }
    let (near, far) = if px.r < py.r { (&px, &py) } else { (&py, &px) };
    let far_power = -((d - 2) as i32);
    if near.r == 0.0 {
        // only the l = 0 term survives and the direction is irrelevant
        return Ok(far.r.powi(far_power));
    }
    let c = cos_gamma(&px.angles, &py.angles, d)?;
    let ratio = near.r / far.r;
    let terms: Vec<f64> = (0..=lmax)
        .map(|l| ratio.powi(l as i32) * poly(l, d, c))
        .collect();
    Ok(far.r.powi(far_power) * pairwise_sum(&terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{random_angles, solid_angle, to_cartesian, UltrasphericalPoint};
    use crate::harmonics::enumerate;
    use crate::quadrature::sphere_grid;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_expansion(rng: &mut ChaCha8Rng, d: usize, lmax: usize, a: bool, b: bool) -> HarmonicExpansion {
        let mut exp = HarmonicExpansion::new(d, lmax).unwrap();
        for idx in enumerate_up_to(d, lmax) {
            let mut draw = |on: bool| if on { c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) } else { c(0.0, 0.0) };
            let coeffs = RadialCoeffs::new(draw(a), draw(b));
            exp.insert(idx, coeffs).unwrap();
        }
        exp
    }

    fn single(d: usize, lmax: usize, idx: &MultiIndex, a: Complex64, b: Complex64) -> HarmonicExpansion {
        let mut e = HarmonicExpansion::new(d, lmax).unwrap();
        e.insert(idx.clone(), RadialCoeffs::new(a, b)).unwrap();
        e
    }

    #[test]
    fn radial_values() {
        assert_eq!(radial_eval(c(1.0, 0.0), c(0.0, 0.0), 0, 3, 7.0).unwrap(), c(1.0, 0.0));
        assert_eq!(radial_eval(c(0.0, 0.0), c(1.0, 0.0), 0, 4, 2.0).unwrap(), c(0.25, 0.0));
        assert_eq!(radial_eval(c(1.0, 0.0), c(1.0, 0.0), 2, 5, 1.0).unwrap(), c(2.0, 0.0));
        assert_eq!(radial_eval(c(3.0, 0.0), c(0.0, 0.0), 2, 5, 0.0).unwrap(), c(0.0, 0.0));
        assert!(radial_eval(c(0.0, 0.0), c(1.0, 0.0), 1, 3, 0.0).is_err());
    }

    #[test]
    fn expansion_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let d = 4;
        let zero = MultiIndex::zero(d);
        let e = single(d, 0, &zero, c(2.0, -1.0), c(0.0, 0.0));
        let a = random_angles(&mut rng, d);
        let v = eval_expansion(&e, 0.3, &a).unwrap();
        assert!((v - c(2.0, -1.0) / solid_angle(d).unwrap().sqrt()).norm() < 1e-15);

        let idx = MultiIndex::new(d, 2, vec![1, -1]).unwrap();
        let e = single(d, 2, &idx, c(1.0, 0.0), c(0.0, 0.0));
        assert_eq!(eval_expansion(&e, 1.0, &a).unwrap(), eval_harmonic(&idx, &a).unwrap());

        let e = random_expansion(&mut rng, 4, 2, true, true);
        let (r, a) = (0.8, random_angles(&mut rng, 4));
        let mut brute = c(0.0, 0.0);
        for (idx, k) in e.iter() {
            let l = idx.l() as i32;
            brute += (k.a * 0.8_f64.powi(l) + k.b * 0.8_f64.powi(-(l + 2))) * eval_harmonic(idx, &a).unwrap();
        }
        assert!((eval_expansion(&e, r, &a).unwrap() - brute).norm() < 1e-14);
        assert!(eval_expansion(&e, r, &random_angles(&mut rng, 5)).is_err());
    }

    #[test]
    fn insert_validates() {
        let mut e = HarmonicExpansion::new(4, 2).unwrap();
        assert!(e.insert(MultiIndex::zero(5), RadialCoeffs::default()).is_err());
        assert!(e.insert(MultiIndex::new(4, 3, vec![0, 0]).unwrap(), RadialCoeffs::default()).is_err());
        assert!(HarmonicExpansion::new(2, 1).is_err());
    }

    #[test]
    fn projection_recovers_harmonics() {
        let d = 4;
        let grid = sphere_grid(d, 3).unwrap();
        let ya = MultiIndex::new(d, 2, vec![1, 1]).unwrap();
        let yb = MultiIndex::new(d, 3, vec![2, -1]).unwrap();
        let s = BoundarySamples::from_fn(grid.clone(), |a| eval_harmonic(&ya, a).unwrap());
        let proj = project_boundary(&s, 3).unwrap();
        for (k, v) in &proj {
            let target = if *k == ya { c(1.0, 0.0) } else { c(0.0, 0.0) };
            assert!((v - target).norm() < 1e-10, "{k}: {v}");
        }

        let s = BoundarySamples::from_fn(grid.clone(), |_| c(5.0, 0.0));
        let proj = project_boundary(&s, 3).unwrap();
        let omega = solid_angle(d).unwrap();
        assert!((proj[&MultiIndex::zero(d)] - c(5.0 * omega.sqrt(), 0.0)).norm() < 1e-12);

        let s = BoundarySamples::from_fn(grid.clone(), |a| {
            2.0 * eval_harmonic(&ya, a).unwrap() + c(0.0, 3.0) * eval_harmonic(&yb, a).unwrap()
        });
        let proj = project_boundary(&s, 3).unwrap();
        assert!((proj[&ya] - c(2.0, 0.0)).norm() < 1e-10);
        assert!((proj[&yb] - c(0.0, 3.0)).norm() < 1e-10);

        assert!(project_boundary(&s, 4).is_err());
    }

    fn sphere(d: usize, lmax: usize, radius: f64, f: impl Fn(&Angles) -> Complex64) -> SphereData {
        SphereData {
            radius,
            samples: BoundarySamples::from_fn(sphere_grid(d, lmax).unwrap(), f),
        }
    }

    #[test]
    fn interior_fits() {
        let d = 4;
        let ya = MultiIndex::new(d, 2, vec![2, 0]).unwrap();
        for (radius, expected) in [(1.0, 1.0), (2.0, 0.25)] {
            let p = BoundaryProblem::new(
                d,
                3,
                Domain::Interior(sphere(d, 3, radius, |a| eval_harmonic(&ya, a).unwrap())),
            )
            .unwrap();
            let e = fit_interior(&p).unwrap();
            assert!((e.get(&ya).a - c(expected, 0.0)).norm() < 1e-10);
            assert!(e.iter().all(|(_, k)| k.b == c(0.0, 0.0)));
        }
    }

    #[test]
    fn interior_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let truth = random_expansion(&mut rng, 4, 3, true, false);
        let data = BoundarySamples::from_expansion(sphere_grid(4, 3).unwrap(), &truth, 1.5).unwrap();
        let p = BoundaryProblem::new(4, 3, Domain::Interior(SphereData { radius: 1.5, samples: data })).unwrap();
        assert!(fit_interior(&p).unwrap().max_abs_diff(&truth) < 1e-8);
        assert!(fit_exterior(&p).is_err());
    }

    #[test]
    fn exterior_fits() {
        let d = 4;
        let zero = MultiIndex::zero(d);
        let y0 = |a: &Angles| eval_harmonic(&zero, a).unwrap();
        let p = BoundaryProblem::new(d, 2, Domain::Exterior(sphere(d, 2, 1.0, y0))).unwrap();
        let e = fit_exterior(&p).unwrap();
        assert!((e.get(&zero).b - c(1.0, 0.0)).norm() < 1e-12);
        let a = Angles::new(vec![1.0, 2.0], 0.5).unwrap();
        let at2 = eval_expansion(&e, 2.0, &a).unwrap();
        assert!((at2 - 0.25 * y0(&a)).norm() < 1e-12);

        // constant data: field falls off like r^{-(d-2)}
        for d in 3..=6 {
            let p = BoundaryProblem::new(d, 1, Domain::Exterior(sphere(d, 1, 1.0, |_| c(3.0, 0.0)))).unwrap();
            let e = fit_exterior(&p).unwrap();
            let a = Angles::pole(d);
            for r in [1.5, 2.0, 4.0] {
                let v = eval_expansion(&e, r, &a).unwrap();
                assert!((v.re - 3.0 * r.powi(-(d as i32 - 2))).abs() < 1e-12);
            }
        }

        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let truth = random_expansion(&mut rng, 4, 3, false, true);
        let data = BoundarySamples::from_expansion(sphere_grid(4, 3).unwrap(), &truth, 0.7).unwrap();
        let p = BoundaryProblem::new(4, 3, Domain::Exterior(SphereData { radius: 0.7, samples: data })).unwrap();
        assert!(fit_exterior(&p).unwrap().max_abs_diff(&truth) < 1e-8);
    }

    fn annulus_from(truth: &HarmonicExpansion, lmax: usize, r1: f64, r2: f64) -> BoundaryProblem {
        let d = truth.dim();
        let grid = sphere_grid(d, lmax).unwrap();
        let inner = SphereData {
            radius: r1,
            samples: BoundarySamples::from_expansion(grid.clone(), truth, r1).unwrap(),
        };
        let outer = SphereData {
            radius: r2,
            samples: BoundarySamples::from_expansion(grid, truth, r2).unwrap(),
        };
        BoundaryProblem::new(d, lmax, Domain::Annulus { inner, outer }).unwrap()
    }

    #[test]
    fn annulus_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let truth = random_expansion(&mut rng, 4, 3, true, true);
        let fit = fit_annulus(&annulus_from(&truth, 3, 0.5, 2.0)).unwrap();
        assert!(fit.max_abs_diff(&truth) < 1e-8);
    }

    #[test]
    fn annulus_constant_data_matches_closed_form() {
        // equal constant data on both spheres: only l = 0 survives, and the
        // 2×2 system gives A = c√Ω_d, B = 0
        let d = 5;
        let grid = sphere_grid(d, 2).unwrap();
        let data = |r: f64| SphereData {
            radius: r,
            samples: BoundarySamples::from_fn(grid.clone(), |_| c(2.0, 0.0)),
        };
        let p = BoundaryProblem::new(d, 2, Domain::Annulus { inner: data(0.5), outer: data(2.0) }).unwrap();
        let e = fit_annulus(&p).unwrap();
        let k = e.get(&MultiIndex::zero(d));
        assert!((k.a - c(2.0 * solid_angle(d).unwrap().sqrt(), 0.0)).norm() < 1e-10);
        assert!(k.b.norm() < 1e-10);
    }

    #[test]
    fn annulus_vanishes_on_zero_inner_data() {
        let d = 4;
        let ya = MultiIndex::new(d, 2, vec![1, 0]).unwrap();
        let inner = sphere(d, 3, 0.5, |_| c(0.0, 0.0));
        let outer = sphere(d, 3, 2.0, |a| eval_harmonic(&ya, a).unwrap());
        let p = BoundaryProblem::new(d, 3, Domain::Annulus { inner, outer }).unwrap();
        let e = fit_annulus(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for _ in 0..10 {
            let a = random_angles(&mut rng, d);
            assert!(eval_expansion(&e, 0.5, &a).unwrap().norm() < 1e-8);
            let outer_val = eval_expansion(&e, 2.0, &a).unwrap();
            assert!((outer_val - eval_harmonic(&ya, &a).unwrap()).norm() < 1e-8);
        }
    }

    #[test]
    fn annulus_with_regular_field_has_no_decaying_part() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let truth = random_expansion(&mut rng, 5, 2, true, false);
        let fit = fit_annulus(&annulus_from(&truth, 2, 0.6, 1.3)).unwrap();
        assert!(fit.iter().all(|(_, k)| k.b.norm() < 1e-8));
    }

    #[test]
    fn annulus_rejects_bad_radii() {
        let d = 4;
        let same = BoundaryProblem::new(
            d,
            1,
            Domain::Annulus {
                inner: sphere(d, 1, 1.0, |_| c(1.0, 0.0)),
                outer: sphere(d, 1, 1.0, |_| c(1.0, 0.0)),
            },
        );
        assert!(matches!(same, Err(Error::InvalidParameter(_))));
        assert!(BoundaryProblem::new(d, 1, Domain::Interior(sphere(d, 1, 0.0, |_| c(1.0, 0.0)))).is_err());
        assert!(BoundaryProblem::new(5, 1, Domain::Interior(sphere(d, 1, 1.0, |_| c(1.0, 0.0)))).is_err());
    }

    #[test]
    fn real_data_gives_real_field() {
        let d = 4;
        let data = |a: &Angles| {
            let u = a.unit_vector();
            c(1.0 + u[0] * u[3] - 2.0 * u[1] + u[2] * u[2], 0.0)
        };
        let p = BoundaryProblem::new(d, 3, Domain::Interior(sphere(d, 3, 1.0, data))).unwrap();
        let e = fit_interior(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(67);
        for _ in 0..20 {
            let a = random_angles(&mut rng, d);
            let v = eval_expansion(&e, rng.gen_range(0.0..1.0), &a).unwrap();
            assert!(v.im.abs() < 1e-10);
        }
        // band-limited polynomial data is reproduced on the boundary
        for _ in 0..10 {
            let a = random_angles(&mut rng, d);
            assert!((eval_expansion(&e, 1.0, &a).unwrap() - data(&a)).norm() < 1e-10);
        }
    }

    #[test]
    fn green_function_expansion() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for d in 3..=6 {
            let y = CartesianPoint::new((0..d).map(|i| if i == d - 1 { 1.0 } else { 0.0 }).collect());
            let r: f64 = 0.35;
            let theta = 1.1;
            let mut theta_v = vec![0.5; d - 2];
            theta_v[0] = theta;
            let x = to_cartesian(&UltrasphericalPoint::new(r, theta_v, 0.2).unwrap());
            let approx = green_expansion(&x, &y, 60).unwrap();
            let exact = (1.0 + r * r - 2.0 * r * theta.cos()).powf(-(d as f64 - 2.0) / 2.0);
            assert!((approx - exact).abs() < 1e-13);
        }

        let d = 5;
        for _ in 0..10 {
            let xa = to_cartesian(&UltrasphericalPoint { r: 0.3, angles: random_angles(&mut rng, d) });
            let xb = to_cartesian(&UltrasphericalPoint { r: 1.0, angles: random_angles(&mut rng, d) });
            let approx = green_expansion(&xa, &xb, 40).unwrap();
            assert!((approx - green_direct(&xa, &xb).unwrap()).abs() < 1e-6);
            assert_eq!(approx, green_expansion(&xb, &xa, 40).unwrap());
        }

        let origin = CartesianPoint::new(vec![0.0; 4]);
        let xb = CartesianPoint::new(vec![0.0, 2.0, 0.0, 0.0]);
        assert_eq!(green_expansion(&origin, &xb, 10).unwrap(), 0.25);

        let same = CartesianPoint::new(vec![1.0, 0.0, 0.0, 0.0]);
        assert!(green_expansion(&same, &xb, 3).is_ok());
        let xc = CartesianPoint::new(vec![0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(green_expansion(&same, &xc, 3), Err(Error::NonConvergent { .. })));
    }

    #[test]
    fn fits_are_linear() {
        let d = 4;
        let grid = sphere_grid(d, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(73);
        let f = random_expansion(&mut rng, d, 2, true, false);
        let g = random_expansion(&mut rng, d, 2, true, false);
        let (alpha, beta) = (c(0.5, -1.0), c(2.0, 0.25));
        let fit = |vals: Vec<Complex64>| {
            let s = BoundarySamples::new(grid.clone(), vals).unwrap();
            fit_interior(&BoundaryProblem::new(d, 2, Domain::Interior(SphereData { radius: 1.0, samples: s })).unwrap())
                .unwrap()
        };
        let fv = BoundarySamples::from_expansion(grid.clone(), &f, 1.0).unwrap().values;
        let gv = BoundarySamples::from_expansion(grid.clone(), &g, 1.0).unwrap().values;
        let combo: Vec<_> = fv.iter().zip(&gv).map(|(a, b)| alpha * a + beta * b).collect();
        let (ff, fg, fc) = (fit(fv), fit(gv), fit(combo));
        for idx in enumerate(d, 2) {
            let expect = alpha * ff.get(&idx).a + beta * fg.get(&idx).a;
            assert!((fc.get(&idx).a - expect).norm() < 1e-12);
        }
    }
}
