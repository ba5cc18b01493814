//! The recursive polar chart and the angle between two directions.
//!
//! ```text
//! cargo run --example coordinates
//! ```

use ultraspherical::geometry::{cos_gamma, solid_angle, to_cartesian, to_ultraspherical};
use ultraspherical::{CartesianPoint, UltrasphericalPoint};

fn main() {
    let p = UltrasphericalPoint::new(2.0, vec![0.3, 1.1, 2.0], 4.5).unwrap();
    let x = to_cartesian(&p);
    println!("(r, θ5, θ4, θ3, φ) = (2, 0.3, 1.1, 2.0, 4.5)");
    println!("cartesian: {:?}", x.x);
    println!("|x| = {}", x.norm());

    let back = to_ultraspherical(&x).unwrap();
    println!("back: r={} theta={:?} phi={}", back.r, back.angles.theta, back.angles.phi);

    let q = to_ultraspherical(&CartesianPoint::new(vec![1.0, 1.0, 0.0, 0.0, 1.0])).unwrap();
    println!("cos γ between the two directions: {:.12}", cos_gamma(&p.angles, &q.angles, 5).unwrap());

    println!("\nsolid angles Ω_d:");
    for d in 2..=8 {
        println!("  d={d}: {:.12}", solid_angle(d).unwrap());
    }
}
