//! Shell 0.5 < r < 2 in R^5: zero data inside, a single harmonic outside.
//!
//! ```text
//! cargo run --example annulus
//! ```

use ultraspherical::harmonics::eval_harmonic;
use ultraspherical::quadrature::sphere_grid;
use ultraspherical::solver::{eval_expansion, fit_annulus};
use ultraspherical::{Angles, BoundaryProblem, BoundarySamples, Complex64, Domain, MultiIndex, SphereData};

fn main() {
    let d = 5;
    let lmax = 2;
    let idx: MultiIndex = "(2,1,1;0)".parse().unwrap();
    let grid = sphere_grid(d, lmax).unwrap();
    let inner = SphereData {
        radius: 0.5,
        samples: BoundarySamples::from_fn(grid.clone(), |_| Complex64::default()),
    };
    let outer = SphereData {
        radius: 2.0,
        samples: BoundarySamples::from_fn(grid, |a| eval_harmonic(&idx, a).unwrap()),
    };
    let problem = BoundaryProblem::new(d, lmax, Domain::Annulus { inner, outer }).unwrap();
    let field = fit_annulus(&problem).unwrap();
    let c = field.get(&idx);
    println!("{idx}: A = {:.12}, B = {:.12}", c.a.re, c.b.re);
    // closed form: A r^2 + B r^-5 vanishes at 0.5 and equals 1 at 2
    let a = 1.0 / (4.0 - 0.5f64.powi(12));
    let b = -a * 0.5f64.powi(7);
    println!("closed form: A = {a:.12}, B = {b:.12}");

    let dir = Angles::new(vec![1.0, 0.7, 0.9], 0.3).unwrap();
    let y = eval_harmonic(&idx, &dir).unwrap().re;
    for r in [0.5, 1.0, 1.5, 2.0] {
        let u = eval_expansion(&field, r, &dir).unwrap().re;
        println!("r={r}: u/Y = {:+.12}", u / y);
    }
}
