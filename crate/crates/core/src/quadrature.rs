//! Quadrature for the surface measure
//! `dΩ_d = sin^{d−2} θ_d ⋯ sin θ_3 dθ_d ⋯ dθ_3 dφ`.
//!
//! Each polar angle gets a Gauss rule for `sin^α θ dθ` on `[0, π]`. Substituting
//! `x = cos θ` turns this into a Gauss rule for `(1 − x²)^{(α−1)/2}` on `[−1, 1]`,
//! i.e. Gauss–Gegenbauer with parameter `μ = α/2`. Nodes are the zeros of the
//! orthonormal polynomial of degree `n`, found by bracketing plus safeguarded
//! Newton on the three-term recurrence; weights are Christoffel numbers.
//! The azimuth uses the uniform trapezoidal rule.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::Angles;
use crate::special::{pairwise_sum, wallis};

const NEWTON_TOL: f64 = 1e-14;
const MAX_NEWTON: usize = 100;

/// Gauss rule for `∫₀^π sin^α θ f(cos θ) dθ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaRule {
    pub alpha: u32,
    /// Strictly increasing nodes in `(0, π)`.
    pub nodes: Vec<f64>,
    /// `cos` of each node, computed before the conversion to angles.
    pub cos_nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl ThetaRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_i f(θ_i)`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        let terms: Vec<f64> = self.nodes.iter().zip(&self.weights).map(|(&t, &w)| w * f(t)).collect();
        pairwise_sum(&terms)
    }
}

/// Recurrence coefficient `b_k` of the monic Gegenbauer polynomials,
/// `p_{k+1} = x p_k − b_k p_{k−1}`.
fn gegenbauer_b(k: usize, mu: f64) -> f64 {
    if k == 1 && mu == 0.0 {
        // Chebyshev limit of 2μ / (4 (1+μ) μ)
        return 0.5;
    }
    let k = k as f64;
    k * (k + 2.0 * mu - 1.0) / (4.0 * (k + mu) * (k + mu - 1.0))
}

/// Orthonormal polynomials `q_0 … q_n` at `x`: returns `(q_n(x), q_n'(x), Σ_{k<n} q_k(x)²)`.
fn orthonormal_eval(n: usize, x: f64, mu: f64, mass: f64) -> (f64, f64, f64) {
    let mut q_prev = 0.0;
    let mut dq_prev = 0.0;
    let mut q = 1.0 / mass.sqrt();
    let mut dq = 0.0;
    let mut sum_sq = 0.0;
    let mut sqrt_b_prev = 0.0;
    for k in 0..n {
        sum_sq += q * q;
        let sqrt_b = gegenbauer_b(k + 1, mu).sqrt();
        let q_next = (x * q - sqrt_b_prev * q_prev) / sqrt_b;
        let dq_next = (q + x * dq - sqrt_b_prev * dq_prev) / sqrt_b;
        q_prev = q;
        dq_prev = dq;
        q = q_next;
        dq = dq_next;
        sqrt_b_prev = sqrt_b;
    }
    (q, dq, sum_sq)
}

/// Root of `q_n` in `[lo, hi]` (with a sign change), Newton with bisection fallback.
fn refine_root(n: usize, mu: f64, mass: f64, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = orthonormal_eval(n, lo, mu, mass).0;
    let mut x = 0.5 * (lo + hi);
    for _ in 0..MAX_NEWTON {
        let (f, df, _) = orthonormal_eval(n, x, mu, mass);
        if f == 0.0 {
            return x;
        }
        if (f < 0.0) == (f_lo < 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - f / df;
        let next = if df != 0.0 && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        let step = (next - x).abs();
        x = next;
        if step < NEWTON_TOL {
            break;
        }
    }
    x
}

/// Positive zeros of `q_n` in decreasing order (increasing `θ`).
fn positive_roots(n: usize, mu: f64, mass: f64) -> Vec<f64> {
    let wanted = n / 2;
    let mut samples = 4 * n + 8;
    loop {
        // θ grid on [0, π/2); the last interval touches x = 0, which is a root
        // for odd n and is handled separately
        let thetas: Vec<f64> = (0..samples).map(|j| 0.5 * PI * j as f64 / samples as f64).collect();
        let mut roots = Vec::with_capacity(wanted);
        let mut x_prev = thetas[0].cos();
        let mut f_prev = orthonormal_eval(n, x_prev, mu, mass).0;
        for &t in &thetas[1..] {
            let x = t.cos();
            let f = orthonormal_eval(n, x, mu, mass).0;
            if f == 0.0 {
                roots.push(x);
            } else if f_prev != 0.0 && (f < 0.0) != (f_prev < 0.0) {
                roots.push(refine_root(n, mu, mass, x, x_prev));
            }
            x_prev = x;
            f_prev = f;
        }
        if roots.len() == wanted {
            return roots;
        }
        samples *= 2;
        assert!(samples < 1 << 24, "failed to bracket {wanted} Gauss nodes for n = {n}");
    }
}

/// Gauss rule with `n` nodes for `sin^α θ dθ` on `[0, π]`, exact for
/// polynomials in `cos θ` of degree ≤ `2n − 1`.
pub fn theta_rule(alpha: u32, n: usize) -> Result<ThetaRule> {
    if n < 1 {
        return Err(Error::InvalidParameter("a rule needs at least one node".into()));
    }
    let mu = alpha as f64 / 2.0;
    let mass = wallis(alpha);
    let positive = positive_roots(n, mu, mass);

    let weight_at = |x: f64| 1.0 / orthonormal_eval(n, x, mu, mass).2;
    let mut nodes = Vec::with_capacity(n);
    let mut cos_nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for &x in &positive {
        nodes.push(x.acos());
        cos_nodes.push(x);
        weights.push(weight_at(x));
    }
    if n % 2 == 1 {
        nodes.push(PI / 2.0);
        cos_nodes.push(0.0);
        weights.push(weight_at(0.0));
    }
    // mirror image about θ = π/2
    for i in (0..positive.len()).rev() {
        nodes.push(PI - nodes[i]);
        cos_nodes.push(-cos_nodes[i]);
        weights.push(weights[i]);
    }
    Ok(ThetaRule {
        alpha,
        nodes,
        cos_nodes,
        weights,
    })
}

/// Tensor-product grid on the unit `(d−1)`-sphere.
///
/// Node order: `θ_d` outermost, then `θ_{d−1}`, …, `θ_3`, with `φ` innermost.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereGrid {
    pub d: usize,
    /// Highest harmonic level whose pairwise products the grid integrates exactly.
    pub lmax: usize,
    /// Rules for `θ_d, …, θ_3`; rule `k` has weight exponent `d − 2 − k`.
    pub theta_rules: Vec<ThetaRule>,
    pub n_phi: usize,
}

/// Grid with `lmax + 2` Gauss nodes per polar angle and `2 lmax + 2` azimuthal nodes.
pub fn sphere_grid(d: usize, lmax: usize) -> Result<SphereGrid> {
    if d < 3 {
        return Err(Error::InvalidDimension { d, min: 3 });
    }
    let n_theta = lmax + 2;
    let theta_rules = (3..=d)
        .rev()
        .map(|j| theta_rule(j as u32 - 2, n_theta))
        .collect::<Result<Vec<_>>>()?;
    Ok(SphereGrid {
        d,
        lmax,
        theta_rules,
        n_phi: 2 * lmax + 2,
    })
}

/// One node of a [`SphereGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridNode {
    pub angles: Angles,
    pub weight: f64,
}

impl SphereGrid {
    pub fn len(&self) -> usize {
        self.theta_rules.iter().map(ThetaRule::len).product::<usize>() * self.n_phi
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn phi_weight(&self) -> f64 {
        TAU / self.n_phi as f64
    }

    pub fn total_weight(&self) -> f64 {
        let weights: Vec<f64> = self.nodes().map(|n| n.weight).collect();
        pairwise_sum(&weights)
    }

    /// Lazily enumerated nodes; memory stays `O(Σ n_j)`.
    pub fn nodes(&self) -> GridNodes<'_> {
        GridNodes {
            grid: self,
            counter: vec![0; self.theta_rules.len() + 1],
            done: self.is_empty(),
        }
    }

    /// `Σ w f(Ω)` with pairwise summation in node order.
    pub fn integrate(&self, f: impl Fn(&Angles) -> Complex64) -> Complex64 {
        let terms: Vec<Complex64> = self.nodes().map(|n| n.weight * f(&n.angles)).collect();
        pairwise_sum(&terms)
    }

    /// Evaluates `f` at every node, in node order.
    pub fn sample(&self, f: impl Fn(&Angles) -> Complex64) -> Vec<Complex64> {
        self.nodes().map(|n| f(&n.angles)).collect()
    }
}

pub struct GridNodes<'a> {
    grid: &'a SphereGrid,
    counter: Vec<usize>,
    done: bool,
}

impl Iterator for GridNodes<'_> {
    type Item = GridNode;

    fn next(&mut self) -> Option<GridNode> {
        if self.done {
            return None;
        }
        let g = self.grid;
        let k = g.theta_rules.len();
        let mut weight = g.phi_weight();
        let mut theta = Vec::with_capacity(k);
        for (rule, &i) in g.theta_rules.iter().zip(&self.counter) {
            theta.push(rule.nodes[i]);
            weight *= rule.weights[i];
        }
        let phi = TAU * self.counter[k] as f64 / g.n_phi as f64;
        let node = GridNode {
            angles: Angles { theta, phi },
            weight,
        };

        // odometer increment, φ fastest
        let mut pos = k;
        loop {
            let limit = if pos == k { g.n_phi } else { g.theta_rules[pos].len() };
            self.counter[pos] += 1;
            if self.counter[pos] < limit {
                break;
            }
            self.counter[pos] = 0;
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
        }
        Some(node)
    }
}

/// `∫ f ḡ dΩ` on the grid, with deterministic pairwise summation.
pub fn inner_product(
    f: impl Fn(&Angles) -> Complex64,
    g: impl Fn(&Angles) -> Complex64,
    grid: &SphereGrid,
) -> Complex64 {
    grid.integrate(|a| f(a) * g(a).conj())
}

/// `∫ f ḡ dΩ` where `f` is given as samples in node order.
pub fn inner_product_samples(
    samples: &[Complex64],
    g: impl Fn(&Angles) -> Complex64,
    grid: &SphereGrid,
) -> Result<Complex64> {
    if samples.len() != grid.len() {
        return Err(Error::InvalidParameter(format!(
            "{} samples for a grid of {} nodes",
            samples.len(),
            grid.len()
        )));
    }
    let terms: Vec<Complex64> = grid
        .nodes()
        .zip(samples)
        .map(|(n, &s)| n.weight * s * g(&n.angles).conj())
        .collect();
    Ok(pairwise_sum(&terms))
}
