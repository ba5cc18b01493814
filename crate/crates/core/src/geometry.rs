//! Ultraspherical coordinates.
//!
//! A point of `R^d` is written `(r, θ_d, θ_{d−1}, …, θ_3, φ)` with
//!
//! ```text
//! x_j     = r_j cos θ_j,   r_{j−1} = r_j sin θ_j,   j = d, …, 3,   r_d = r
//! x_1     = r_2 cos φ,     x_2     = r_2 sin φ
//! ```
//!
//! Cartesian components are stored in the order `(x_1, x_2, …, x_d)`, so the
//! last component is the polar axis of `θ_d`. Polar angles live in `[0, π]`,
//! the azimuth in `[0, 2π)`. Whenever an intermediate radius `r_j` vanishes the
//! angles it no longer determines are set to zero.

use std::f64::consts::{PI, TAU};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::special::gamma_half;

/// Direction on the unit `(d−1)`-sphere: polar angles `θ_d, …, θ_3` followed by `φ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Angles {
    /// `[θ_d, θ_{d−1}, …, θ_3]`, length `d − 2`.
    pub theta: Vec<f64>,
    pub phi: f64,
}

impl Angles {
    pub fn new(theta: Vec<f64>, phi: f64) -> Result<Self> {
        let angles = Angles { theta, phi };
        angles.validate()?;
        Ok(angles)
    }

    /// The north pole `θ_d = … = θ_3 = φ = 0` of the `(d−1)`-sphere.
    pub fn pole(d: usize) -> Self {
        Angles {
            theta: vec![0.0; d.saturating_sub(2)],
            phi: 0.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.theta.len() + 2
    }

    /// Polar angle `θ_j` for `3 ≤ j ≤ d`.
    pub fn theta_j(&self, j: usize) -> f64 {
        self.theta[self.dim() - j]
    }

    pub fn validate(&self) -> Result<()> {
        if self.theta.is_empty() {
            return Err(Error::InvalidDimension { d: 2, min: 3 });
        }
        for (i, &t) in self.theta.iter().enumerate() {
            if !(0.0..=PI).contains(&t) {
                return Err(Error::InvalidAngle(format!(
                    "θ_{} = {t} outside [0, π]",
                    self.dim() - i
                )));
            }
        }
        if !(0.0..TAU).contains(&self.phi) {
            return Err(Error::InvalidAngle(format!("φ = {} outside [0, 2π)", self.phi)));
        }
        Ok(())
    }

    pub fn check_dim(&self, d: usize) -> Result<()> {
        if self.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: self.dim(),
            });
        }
        Ok(())
    }

    /// Unit vector in Cartesian order `(x_1, …, x_d)`.
    pub fn unit_vector(&self) -> Vec<f64> {
        let d = self.dim();
        let mut x = vec![0.0; d];
        let mut rj = 1.0;
        for (i, &t) in self.theta.iter().enumerate() {
            let (s, c) = t.sin_cos();
            x[d - 1 - i] = rj * c;
            rj *= s;
        }
        let (s, c) = self.phi.sin_cos();
        x[0] = rj * c;
        x[1] = rj * s;
        x
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UltrasphericalPoint {
    pub r: f64,
    #[serde(flatten)]
    pub angles: Angles,
}

impl UltrasphericalPoint {
    pub fn new(r: f64, theta: Vec<f64>, phi: f64) -> Result<Self> {
        if !(r >= 0.0) {
            return Err(Error::InvalidParameter(format!("radius {r} must be nonnegative")));
        }
        Ok(UltrasphericalPoint {
            r,
            angles: Angles::new(theta, phi)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.angles.dim()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CartesianPoint {
    /// `(x_1, …, x_d)`.
    pub x: Vec<f64>,
}

impl CartesianPoint {
    pub fn new(x: Vec<f64>) -> Self {
        CartesianPoint { x }
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn norm(&self) -> f64 {
        norm(&self.x)
    }
}

fn norm(x: &[f64]) -> f64 {
    // scaled to avoid overflow/underflow in the squares
    let scale = x.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return scale;
    }
    scale * x.iter().map(|v| (v / scale).powi(2)).sum::<f64>().sqrt()
}

pub fn to_cartesian(p: &UltrasphericalPoint) -> CartesianPoint {
    let x = p.angles.unit_vector().into_iter().map(|u| p.r * u).collect();
    CartesianPoint { x }
}

/// Same as [`to_cartesian`] with an explicit dimension check.
pub fn to_cartesian_checked(p: &UltrasphericalPoint, d: usize) -> Result<CartesianPoint> {
    p.angles.check_dim(d)?;
    Ok(to_cartesian(p))
}

pub fn to_ultraspherical(p: &CartesianPoint) -> Result<UltrasphericalPoint> {
    let d = p.dim();
    if d < 3 {
        return Err(Error::InvalidDimension { d, min: 3 });
    }
    let x = &p.x;
    let r = norm(x);
    let mut theta = vec![0.0; d - 2];
    let mut phi = 0.0;
    for j in (3..=d).rev() {
        // r_{j−1} from the remaining components directly, not by repeated sin
        let r_lower = norm(&x[..j - 1]);
        let xj = x[j - 1];
        if r_lower == 0.0 && xj == 0.0 {
            return Ok(UltrasphericalPoint {
                r,
                angles: Angles { theta, phi },
            });
        }
        theta[d - j] = r_lower.atan2(xj);
    }
    if x[0] != 0.0 || x[1] != 0.0 {
        phi = x[1].atan2(x[0]);
        if phi < 0.0 {
            phi += TAU;
        }
        if phi >= TAU {
            phi = 0.0;
        }
    }
    Ok(UltrasphericalPoint {
        r,
        angles: Angles { theta, phi },
    })
}

/// Surface measure of the unit `(d−1)`-sphere, `Ω_d = 2 π^{d/2} / Γ(d/2)`.
pub fn solid_angle(d: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidDimension { d, min: 2 });
    }
    Ok(2.0 * PI.powf(d as f64 / 2.0) / gamma_half(d as u64))
}

/// `Ω_d / Ω_{d−1} = √π Γ((d−1)/2) / Γ(d/2)`, the integral of `sin^{d−2} θ` over `[0, π]`.
pub fn solid_angle_ratio(d: usize) -> Result<f64> {
    if d < 3 {
        return Err(Error::InvalidDimension { d, min: 3 });
    }
    Ok(PI.sqrt() * gamma_half(d as u64 - 1) / gamma_half(d as u64))
}

/// Cosine of the angle between two directions, by the recursion
/// `cos γ_j = cos θ_j cos θ'_j + sin θ_j sin θ'_j cos γ_{j−1}`, `cos γ_2 = cos(φ − φ')`.
pub fn cos_gamma(a: &Angles, b: &Angles, d: usize) -> Result<f64> {
    a.check_dim(d)?;
    b.check_dim(d)?;
    Ok(cos_gamma_upto(a, b, d))
}

/// `cos γ_top`, using only `φ` and the polar angles `θ_3 … θ_top`.
pub fn cos_gamma_upto(a: &Angles, b: &Angles, top: usize) -> f64 {
    let mut c = (a.phi - b.phi).cos();
    for j in 3..=top {
        let (sa, ca) = a.theta_j(j).sin_cos();
        let (sb, cb) = b.theta_j(j).sin_cos();
        c = ca * cb + sa * sb * c;
    }
    c.clamp(-1.0, 1.0)
}

/// Angles drawn uniformly in the chart (not uniformly on the sphere).
pub fn random_angles<R: Rng + ?Sized>(rng: &mut R, d: usize) -> Angles {
    Angles {
        theta: (0..d - 2).map(|_| rng.gen_range(0.0..PI)).collect(),
        phi: rng.gen_range(0.0..TAU),
    }
}
