//! Dirichlet problem in the unit ball of R^4 with polynomial boundary data.
//!
//! ```text
//! cargo run --example interior_dirichlet
//! ```

use ultraspherical::harmonics::{harmonicity_residual, RadialBranch};
use ultraspherical::quadrature::sphere_grid;
use ultraspherical::solver::{eval_expansion, solve};
use ultraspherical::{Angles, BoundaryProblem, BoundarySamples, Complex64, Domain, SphereData};

fn main() {
    let d = 4;
    let lmax = 3;
    // u = x_1 x_2 + x_4³ on the sphere; band-limited to l ≤ 3
    let data = |a: &Angles| {
        let u = a.unit_vector();
        Complex64::new(u[0] * u[1] + u[3].powi(3), 0.0)
    };
    let samples = BoundarySamples::from_fn(sphere_grid(d, lmax).unwrap(), data);
    let problem = BoundaryProblem::new(d, lmax, Domain::Interior(SphereData { radius: 1.0, samples })).unwrap();
    let field = solve(&problem).unwrap();

    println!("nonzero coefficients:");
    for (idx, c) in field.iter().filter(|(_, c)| c.a.norm() > 1e-12) {
        println!("  {idx}: A = {:.12}", c.a);
    }

    let a = Angles::new(vec![0.8, 1.9], 0.4).unwrap();
    println!("\nboundary: data {:.12}, field {:.12}", data(&a).re, eval_expansion(&field, 1.0, &a).unwrap().re);
    for r in [0.0, 0.25, 0.5, 0.75] {
        println!("u(r={r}) = {:+.12}", eval_expansion(&field, r, &a).unwrap().re);
    }

    // each term is harmonic: check one with the finite-difference Laplacian
    let (idx, _) = field.iter().find(|(i, c)| i.l() == 3 && c.a.norm() > 1e-12).unwrap();
    let res = harmonicity_residual(idx, RadialBranch::Regular, 0.6, &a, 1e-3).unwrap();
    println!("FD Laplacian of r^3 Y{idx}: relative residual {:.2e}", res.relative());
}
