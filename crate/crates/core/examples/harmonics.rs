//! Enumerating and evaluating hyperspherical harmonics; orthonormality and
//! the addition theorem.
//!
//! ```text
//! cargo run --example harmonics
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ultraspherical::gegenbauer::poly;
use ultraspherical::geometry::{cos_gamma, random_angles};
use ultraspherical::harmonics::{addition_sum, count, enumerate, enumerate_up_to, eval_harmonic, gram_matrix};
use ultraspherical::quadrature::sphere_grid;
use ultraspherical::MultiIndex;

fn main() {
    let d = 4;
    for l in 0..=3 {
        let labels: Vec<String> = enumerate(d, l).iter().map(|i| i.to_string()).collect();
        println!("l={l}: {} harmonics {}", count(d, l), labels.join(" "));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = random_angles(&mut rng, d);
    let idx: MultiIndex = "(2,1;-1)".parse().unwrap();
    println!("\nY{idx} at {:?}, φ={:.3}: {:.12}", a.theta, a.phi, eval_harmonic(&idx, &a).unwrap());

    let indices = enumerate_up_to(d, 3);
    let gram = gram_matrix(&indices, &sphere_grid(d, 3).unwrap()).unwrap();
    let mut off = 0.0f64;
    for (i, row) in gram.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            off = off.max((v - if i == j { 1.0 } else { 0.0 }).norm());
        }
    }
    println!("Gram matrix of {} harmonics: max |G − I| = {off:.2e}", indices.len());

    let b = random_angles(&mut rng, d);
    let c = cos_gamma(&a, &b, d).unwrap();
    for l in 0..=3 {
        println!("l={l}: addition sum {:+.14}  P_l,4(cos γ) {:+.14}", addition_sum(d, l, &a, &b).unwrap(), poly(l, d, c));
    }
}
