use std::f64::consts::PI;

use approx::assert_relative_eq;
use num_complex::Complex64;
use proptest::prelude::*;
use ultraspherical::gegenbauer::{assoc, poly, poly_deriv};
use ultraspherical::geometry::{
    cos_gamma, solid_angle, to_cartesian, to_ultraspherical, Angles, CartesianPoint, UltrasphericalPoint,
};
use ultraspherical::harmonics::{count, enumerate, eval_harmonic, level_trace, level_trace_value, MultiIndex};
use ultraspherical::quadrature::theta_rule;
use ultraspherical::solver::{green_direct, green_expansion, radial_eval};

fn angles(d: usize) -> impl Strategy<Value = Angles> {
    (prop::collection::vec(0.0..PI, d - 2), 0.0..2.0 * PI).prop_map(|(theta, phi)| Angles { theta, phi })
}

fn dim_and_angles() -> impl Strategy<Value = (usize, Angles)> {
    (3usize..=8).prop_flat_map(|d| (Just(d), angles(d)))
}

fn index() -> impl Strategy<Value = MultiIndex> {
    (3usize..=6, 0usize..=5, any::<prop::sample::Index>())
        .prop_map(|(d, l, pick)| {
            let all = enumerate(d, l);
            all[pick.index(all.len())].clone()
        })
}

proptest! {
    #[test]
    fn cartesian_roundtrip((_, a) in dim_and_angles(), r in 0.01f64..10.0) {
        let p = UltrasphericalPoint { r, angles: a };
        let x = to_cartesian(&p);
        prop_assert!((x.norm() - r).abs() <= 1e-12 * r);
        let back = to_cartesian(&to_ultraspherical(&x).unwrap());
        for (u, v) in x.x.iter().zip(&back.x) {
            prop_assert!((u - v).abs() <= 1e-12 * r);
        }
    }

    #[test]
    fn cos_gamma_matches_dot_product((d, a) in dim_and_angles(), seed in angles(8)) {
        let b = Angles { theta: seed.theta[..d - 2].to_vec(), phi: seed.phi };
        let ua = to_cartesian(&UltrasphericalPoint { r: 1.0, angles: a.clone() }).x;
        let ub = to_cartesian(&UltrasphericalPoint { r: 1.0, angles: b.clone() }).x;
        let dot: f64 = ua.iter().zip(&ub).map(|(x, y)| x * y).sum();
        prop_assert!((cos_gamma(&a, &b, d).unwrap() - dot).abs() < 1e-12);
    }

    #[test]
    fn polynomials_bounded_by_endpoint(d in 3usize..=8, l in 0usize..=12, x in -1.0f64..=1.0) {
        let p = poly(l, d, x);
        prop_assert!(p.abs() <= poly(l, d, 1.0) * (1.0 + 1e-12));
        let parity = if l % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!((poly(l, d, -x) - parity * p).abs() <= 1e-12 * poly(l, d, 1.0));
    }

    #[test]
    fn three_term_relation_with_derivative(d in 3usize..=8, l in 1usize..=10, x in -1.0f64..=1.0) {
        // (1 − x²) P' = (l + d − 3) P_{l−1} − l x P_l
        let lhs = (1.0 - x * x) * poly_deriv(l, 1, d, x);
        let rhs = (l + d - 3) as f64 * poly(l - 1, d, x) - l as f64 * x * poly(l, d, x);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * poly(l, d, 1.0) * (l + d) as f64);
    }

    #[test]
    fn associated_vanish_at_poles(d in 3usize..=7, l in 1usize..=6, m in 1usize..=6) {
        prop_assume!(m <= l);
        prop_assert_eq!(assoc(l, m, d, 0.0), 0.0);
        prop_assert!(assoc(l, m, d, PI).abs() < 1e-12 * poly(l, d, 1.0).max(1.0) * 100.0);
    }

    #[test]
    fn conjugate_index_conjugates_harmonic(idx in index(), seed in angles(8)) {
        let d = idx.dim();
        let a = Angles { theta: seed.theta[..d - 2].to_vec(), phi: seed.phi };
        let y = eval_harmonic(&idx, &a).unwrap();
        let yc = eval_harmonic(&idx.conjugate(), &a).unwrap();
        prop_assert!((y.conj() - yc).norm() < 1e-12 * (1.0 + y.norm()));
    }

    #[test]
    fn index_text_roundtrip(idx in index()) {
        let back: MultiIndex = idx.to_string().parse().unwrap();
        prop_assert_eq!(back, idx);
    }

    #[test]
    fn level_trace_is_constant((d, a) in dim_and_angles(), l in 0usize..=3) {
        prop_assume!(count(d, l) < 400);
        let v = level_trace_value(d, l).unwrap();
        prop_assert!((level_trace(d, l, &a).unwrap() - v).abs() < 1e-10 * v);
    }

    #[test]
    fn rule_weights_positive_and_symmetric(alpha in 0u32..=8, n in 1usize..=16) {
        let r = theta_rule(alpha, n).unwrap();
        prop_assert!(r.weights.iter().all(|w| *w > 0.0));
        prop_assert!(r.nodes.windows(2).all(|p| p[0] < p[1]));
        for i in 0..n {
            prop_assert_eq!(r.weights[i], r.weights[n - 1 - i]);
            prop_assert!((r.nodes[i] + r.nodes[n - 1 - i] - PI).abs() < 1e-14);
        }
    }

    #[test]
    fn green_expansion_symmetric_and_converges(
        (d, a) in dim_and_angles(),
        seed in angles(8),
        ra in 0.0f64..0.5,
        rb in 1.0f64..3.0,
    ) {
        let b = Angles { theta: seed.theta[..d - 2].to_vec(), phi: seed.phi };
        let xa = to_cartesian(&UltrasphericalPoint { r: ra, angles: a });
        let xb = to_cartesian(&UltrasphericalPoint { r: rb, angles: b });
        let g = green_expansion(&xa, &xb, 80).unwrap();
        prop_assert_eq!(g, green_expansion(&xb, &xa, 80).unwrap());
        let exact = green_direct(&xa, &xb).unwrap();
        prop_assert!((g - exact).abs() < 1e-12 * exact);
    }

    #[test]
    fn radial_branches_are_euler_solutions(d in 3usize..=8, l in 0usize..=6, r in 0.2f64..3.0) {
        // r² u'' + (d−1) r u' − l(l+d−2) u = 0 for both branches, by central differences
        let h = 1e-4 * r;
        for (a, b) in [(1.0, 0.0), (0.0, 1.0)] {
            let u = |s: f64| radial_eval(Complex64::new(a, 0.0), Complex64::new(b, 0.0), l, d, s).unwrap().re;
            let (um, u0, up) = (u(r - h), u(r), u(r + h));
            let d1 = (up - um) / (2.0 * h);
            let d2 = (up - 2.0 * u0 + um) / (h * h);
            let lhs = r * r * d2 + (d - 1) as f64 * r * d1 - (l * (l + d - 2)) as f64 * u0;
            let scale = (r * r * d2).abs() + ((d - 1) as f64 * r * d1).abs() + ((l * (l + d - 2)) as f64 * u0).abs();
            prop_assert!(lhs.abs() <= 1e-5 * scale.max(1e-300));
        }
    }
}

#[test]
fn solid_angle_small_dimensions() {
    assert_relative_eq!(solid_angle(2).unwrap(), 2.0 * PI, max_relative = 1e-15);
    assert_relative_eq!(solid_angle(3).unwrap(), 4.0 * PI, max_relative = 1e-15);
    assert_relative_eq!(solid_angle(4).unwrap(), 2.0 * PI * PI, max_relative = 1e-15);
    assert_relative_eq!(solid_angle(5).unwrap(), 8.0 * PI * PI / 3.0, max_relative = 1e-15);
}

#[test]
fn origin_has_zero_radius() {
    let p = to_ultraspherical(&CartesianPoint::new(vec![0.0; 5])).unwrap();
    assert_eq!(p.r, 0.0);
    assert_eq!(p.dim(), 5);
}
