//! Exterior problem: the decaying field outside a sphere of radius 0.5 in R^3.
//!
//! ```text
//! cargo run --example exterior_dirichlet
//! ```

use ultraspherical::harmonics::eval_harmonic;
use ultraspherical::quadrature::sphere_grid;
use ultraspherical::solver::{eval_expansion, fit_exterior};
use ultraspherical::{Angles, BoundaryProblem, BoundarySamples, Complex64, Domain, MultiIndex, SphereData};

fn main() {
    let d = 3;
    let monopole = MultiIndex::zero(d);
    let dipole = MultiIndex::new(d, 1, vec![0]).unwrap();
    let data = |a: &Angles| {
        eval_harmonic(&monopole, a).unwrap() + Complex64::new(0.5, 0.0) * eval_harmonic(&dipole, a).unwrap()
    };
    let samples = BoundarySamples::from_fn(sphere_grid(d, 2).unwrap(), data);
    let problem = BoundaryProblem::new(d, 2, Domain::Exterior(SphereData { radius: 0.5, samples })).unwrap();
    let field = fit_exterior(&problem).unwrap();

    println!("B coefficients (A = 0 outside):");
    for (idx, c) in field.iter().filter(|(_, c)| c.b.norm() > 1e-12) {
        println!("  {idx}: B = {:.12}", c.b);
    }
    let pole = Angles::pole(d);
    for r in [0.5, 1.0, 2.0, 4.0, 8.0] {
        println!("u(r={r}, pole) = {:.12}", eval_expansion(&field, r, &pole).unwrap().re);
    }
}
