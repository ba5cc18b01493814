//! Ultraspherical polynomials `P_{l,d}` and associated functions `P^m_{l,d}`.
//!
//! `P_{l,d}(x)` is the coefficient of `r^l` in `(1 + r² − 2rx)^{−(d−2)/2}`; for
//! `d = 3` these are the Legendre polynomials, in general they are Gegenbauer
//! polynomials with parameter `λ = (d − 2)/2`.
//!
//! Derivatives never go through symbolic differentiation: differentiating the
//! generating function `m` times in `x` gives
//!
//! ```text
//! d^m P_{l,d}/dx^m = α(m, d) · P_{l−m, d+2m}(x),   α(m, d) = (d−2) d (d+2) ⋯ (d+2m−4)
//! ```
//!
//! so every derivative is a single recurrence evaluation in a shifted dimension.

use crate::error::{Error, Result};
use crate::geometry::solid_angle_ratio;
use crate::special::{factorial_ratio, DoubleDouble};

fn assert_dim(d: usize) {
    assert!(d >= 3, "ultraspherical polynomials need d >= 3, got {d}");
}

/// `P_{l,d}(x)` by the three-term recurrence
/// `l P_l = (2l + d − 4) x P_{l−1} − (l + d − 4) P_{l−2}`, `P_0 = 1`, `P_1 = (d − 2) x`.
///
/// Arguments outside `[−1, 1]` are evaluated but not validated.
///
/// # Panics
/// If `d < 3`.
pub fn poly(l: usize, d: usize, x: f64) -> f64 {
    assert_dim(d);
    let d = d as f64;
    let mut prev = 1.0;
    if l == 0 {
        return prev;
    }
    let mut cur = (d - 2.0) * x;
    for k in 2..=l {
        let k = k as f64;
        let next = ((2.0 * k + d - 4.0) * x * cur - (k + d - 4.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    cur
}

/// Reference value of `P_{l,d}(x)` read off the generating function directly.
///
/// Writes `(1 + r² − 2rx)^{−λ} = (1 − r(2x − r))^{−λ} = Σ_k C(λ+k−1, k) r^k (2x − r)^k`
/// and collects the `r^l` terms:
///
/// ```text
/// P_{l,d}(x) = Σ_{k=⌈l/2⌉}^{l} (λ)_k / k! · C(k, l−k) · (2x)^{2k−l} · (−1)^{l−k}
/// ```
///
/// Shares no code with [`poly`] and is used to validate the recurrence.
pub fn poly_reference(l: usize, d: usize, x: f64) -> f64 {
    assert_dim(d);
    // the terms alternate and can exceed the result by orders of magnitude,
    // so the sum is carried in double-double
    let dd = DoubleDouble::new;
    let lambda = (d as f64 - 2.0) / 2.0;
    let two_x = dd(2.0 * x);
    let mut total = dd(0.0);
    for k in l.div_ceil(2)..=l {
        // generalized binomial (λ)_k / k!
        let mut gbin = dd(1.0);
        for i in 0..k {
            gbin = gbin.mul(dd(lambda + i as f64)).div(dd(i as f64 + 1.0));
        }
        let j = l - k;
        let mut bin = dd(1.0);
        for i in 0..j {
            bin = bin.mul(dd((k - i) as f64)).div(dd(i as f64 + 1.0));
        }
        let mut term = gbin.mul(bin);
        for _ in 0..(2 * k - l) {
            term = term.mul(two_x);
        }
        total = if j % 2 == 0 { total.add(term) } else { total.add(term.neg()) };
    }
    total.to_f64()
}

/// `α(m, d) = (d−2) d (d+2) ⋯ (d+2m−4)`, with `α(0, d) = 1`.
pub fn alpha_factor(m: usize, d: usize) -> f64 {
    (0..m).map(|k| (d + 2 * k) as f64 - 2.0).product()
}

/// `d^m P_{l,d} / dx^m` at `x`; zero when `m > l`.
pub fn poly_deriv(l: usize, m: usize, d: usize, x: f64) -> f64 {
    assert_dim(d);
    if m > l {
        return 0.0;
    }
    alpha_factor(m, d) * poly(l - m, d + 2 * m, x)
}

/// `n`-th derivative of `P_{l,d}` at `x = 1`:
/// `α(n, d) (d+n+l−3)! / ((l−n)! (d+2n−3)!)`; zero when `n > l`.
pub fn deriv_at_one(l: usize, n: usize, d: usize) -> f64 {
    assert_dim(d);
    if n > l {
        return 0.0;
    }
    let (l, n, d) = (l as u64, n as u64, d as u64);
    alpha_factor(n as usize, d as usize) * factorial_ratio(&[d + n + l - 3], &[l - n, d + 2 * n - 3])
}

/// Associated function `P^m_{l,d}(cos θ) = sin^m θ · d^m P_{l,d}/dx^m (cos θ)`; zero when `m > l`.
pub fn assoc(l: usize, m: usize, d: usize, theta: f64) -> f64 {
    if m > l {
        return 0.0;
    }
    let (s, c) = theta.sin_cos();
    s.powi(m as i32) * poly_deriv(l, m, d, c)
}

/// Normalization factor of `P^n_{l,d}` with respect to `sin^{d−2} θ dθ` on `[0, π]`:
///
/// ```text
/// N^{(d)}_{ln} = sqrt( (2l+d−2)/(d−2) · Ω_{d−1}/Ω_d · (d−3)! (l−n)! / (d+l+n−3)! )
/// ```
pub fn norm_factor(l: usize, n: usize, d: usize) -> Result<f64> {
    if d < 3 {
        return Err(Error::InvalidDimension { d, min: 3 });
    }
    if n > l {
        return Err(Error::InvalidParameter(format!(
            "normalization factor needs n <= l, got n = {n}, l = {l}"
        )));
    }
    let prefactor = (2 * l + d - 2) as f64 / (d - 2) as f64 / solid_angle_ratio(d)?;
    let (l, n, d) = (l as u64, n as u64, d as u64);
    let ratio = factorial_ratio(&[d - 3, l - n], &[d + l + n - 3]);
    Ok((prefactor * ratio).sqrt())
}

/// Distance from the endpoints of `[0, π]` below which [`ode_residual`] refuses to evaluate.
pub const ODE_ENDPOINT_GUARD: f64 = 1e-3;

/// Left-hand side of the ODE satisfied by `f = P^m_{l,d}(cos θ)`:
///
/// ```text
/// sin^{2−d} θ (sin^{d−2} θ f')' + ( l(l+d−2) − m(m+d−3)/sin² θ ) f
/// ```
///
/// with `f'`, `f''` obtained analytically from [`poly_deriv`].
pub fn ode_residual(l: usize, m: usize, d: usize, theta: f64) -> Result<f64> {
    if d < 3 {
        return Err(Error::InvalidDimension { d, min: 3 });
    }
    if m > l {
        return Err(Error::InvalidParameter(format!("order m = {m} exceeds degree l = {l}")));
    }
    if !(ODE_ENDPOINT_GUARD..=std::f64::consts::PI - ODE_ENDPOINT_GUARD).contains(&theta) {
        return Err(Error::SingularEvaluation(format!(
            "θ = {theta} is within {ODE_ENDPOINT_GUARD} of a singular endpoint"
        )));
    }
    let (f, df, d2f) = assoc_with_theta_derivatives(l, m, d, theta);
    let (s, c) = theta.sin_cos();
    let (lf, mf, dd) = (l as f64, m as f64, d as f64);
    Ok(d2f + (dd - 2.0) * c / s * df
        + (lf * (lf + dd - 2.0) - mf * (mf + dd - 3.0) / (s * s)) * f)
}

/// `(f, df/dθ, d²f/dθ²)` for `f(θ) = sin^m θ D(cos θ)`, `D = d^m P_{l,d}/dx^m`.
pub(crate) fn assoc_with_theta_derivatives(l: usize, m: usize, d: usize, theta: f64) -> (f64, f64, f64) {
    let (s, c) = theta.sin_cos();
    let dm = poly_deriv(l, m, d, c);
    let dm1 = poly_deriv(l, m + 1, d, c);
    let dm2 = poly_deriv(l, m + 2, d, c);
    let mf = m as f64;
    let sp = |k: i32| if k < 0 { 0.0 } else { s.powi(k) };
    let mi = m as i32;

    let f = sp(mi) * dm;
    let df = mf * sp(mi - 1) * c * dm - sp(mi + 1) * dm1;
    // m (m−1) s^{m−2} c² D vanishes for m < 2
    let lead = if m >= 2 { mf * (mf - 1.0) * sp(mi - 2) * c * c * dm } else { 0.0 };
    let d2f = lead - mf * sp(mi) * dm - (2.0 * mf + 1.0) * sp(mi) * c * dm1 + sp(mi + 2) * dm2;
    (f, df, d2f)
}
