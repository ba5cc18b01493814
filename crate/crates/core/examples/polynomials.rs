//! Ultraspherical polynomials, their derivatives and associated functions.
//!
//! ```text
//! cargo run --example polynomials
//! ```

use ultraspherical::gegenbauer::{assoc, deriv_at_one, norm_factor, poly, poly_deriv};

fn main() {
    // d = 3 gives the Legendre polynomials
    println!("P_l,3(0.5) for l = 0..5:");
    for l in 0..=5 {
        println!("  l={l}: {:+.12}", poly(l, 3, 0.5));
    }

    let (l, d) = (4, 5);
    println!("\nP_{l},{d} and its derivatives at x = 1:");
    for n in 0..=l {
        println!("  n={n}: recurrence {:>10.4}  closed form {:>10.4}", poly_deriv(l, n, d, 1.0), deriv_at_one(l, n, d));
    }

    println!("\nnormalized associated functions N P^m_3,4(cos 0.7):");
    for m in 0..=3 {
        let n = norm_factor(3, m, 4).unwrap();
        println!("  m={m}: N={n:.10}  N*P={:+.10}", n * assoc(3, m, 4, 0.7));
    }
}
