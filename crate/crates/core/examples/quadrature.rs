//! Gauss rules for sin^α θ dθ and tensor grids on the sphere.
//!
//! ```text
//! cargo run --example quadrature
//! ```

use ultraspherical::geometry::solid_angle;
use ultraspherical::quadrature::{sphere_grid, theta_rule};
use ultraspherical::Complex64;

fn main() {
    let rule = theta_rule(2, 4).unwrap();
    println!("4-point rule for sin²θ:");
    for (t, w) in rule.nodes.iter().zip(&rule.weights) {
        println!("  θ={t:.15}  w={w:.15}");
    }
    // exact for polynomials in cos θ up to degree 7
    let m6 = rule.integrate(|t| t.cos().powi(6));
    println!("∫ sin²θ cos⁶θ dθ = {m6:.15} (exact 5π/128 = {:.15})", 5.0 * std::f64::consts::PI / 128.0);

    let grid = sphere_grid(5, 3).unwrap();
    println!("\nd=5, lmax=3 grid: {} nodes, total weight {:.14}, Ω_5 = {:.14}", grid.len(), grid.total_weight(), solid_angle(5).unwrap());
    let second_moment = grid.integrate(|a| Complex64::new(a.unit_vector()[0].powi(2), 0.0));
    println!("∫ x_1² dΩ = {:.14} (Ω_5/5 = {:.14})", second_moment.re, solid_angle(5).unwrap() / 5.0);
}
