//! Multipole expansion of the fundamental solution |x − y|^{2−d}.
//!
//! ```text
//! cargo run --example green_function
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ultraspherical::geometry::{random_angles, to_cartesian};
use ultraspherical::solver::{green_direct, green_expansion};
use ultraspherical::UltrasphericalPoint;

fn main() {
    let d = 5;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let x = to_cartesian(&UltrasphericalPoint { r: 0.3, angles: random_angles(&mut rng, d) });
    let y = to_cartesian(&UltrasphericalPoint { r: 1.0, angles: random_angles(&mut rng, d) });
    let exact = green_direct(&x, &y).unwrap();
    println!("|x − y|^-3 = {exact:.15}");
    for lmax in [0, 5, 10, 20, 30, 40] {
        let approx = green_expansion(&x, &y, lmax).unwrap();
        println!("lmax={lmax:>2}: {approx:.15}  error {:.2e}", (approx - exact).abs());
    }
    println!("equal radii: {:?}", green_expansion(&x, &x, 10).unwrap_err());
}
