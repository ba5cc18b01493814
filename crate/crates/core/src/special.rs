//! Small numeric helpers shared by the other modules.

use std::f64::consts::PI;
use std::ops::Add;

/// Largest `n` for which `n!` fits in a `u128`.
pub(crate) const EXACT_FACTORIAL_MAX: u64 = 34;

fn factorial_u128(n: u64) -> u128 {
    (2..=n as u128).product()
}

/// `n!` as a double. Exact integer accumulation up to 34!, `exp(lgamma(n + 1))` beyond.
pub(crate) fn factorial(n: u64) -> f64 {
    if n <= EXACT_FACTORIAL_MAX {
        factorial_u128(n) as f64
    } else {
        libm::lgamma(n as f64 + 1.0).exp()
    }
}

pub(crate) fn ln_factorial(n: u64) -> f64 {
    if n <= EXACT_FACTORIAL_MAX {
        (factorial_u128(n) as f64).ln()
    } else {
        libm::lgamma(n as f64 + 1.0)
    }
}

/// `Π a_i! / Π b_j!`, computed exactly when every factorial is in the integer
/// range and through log-factorials otherwise.
pub(crate) fn factorial_ratio(num: &[u64], den: &[u64]) -> f64 {
    if num.iter().chain(den).all(|&n| n <= EXACT_FACTORIAL_MAX) {
        let top: f64 = num.iter().map(|&n| factorial(n)).product();
        let bottom: f64 = den.iter().map(|&n| factorial(n)).product();
        if top.is_finite() && bottom.is_finite() && bottom > 0.0 {
            return top / bottom;
        }
    }
    let ln: f64 = num.iter().map(|&n| ln_factorial(n)).sum::<f64>()
        - den.iter().map(|&n| ln_factorial(n)).sum::<f64>();
    ln.exp()
}

/// Binomial coefficient in exact integer arithmetic, `None` on overflow.
pub(crate) fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// `Γ(k / 2)` for a positive integer `k`.
pub(crate) fn gamma_half(k: u64) -> f64 {
    assert!(k > 0, "Γ(0) is undefined");
    if k % 2 == 0 {
        factorial(k / 2 - 1)
    } else {
        // Γ(1/2) = √π, Γ(x + 1) = x Γ(x)
        let mut g = PI.sqrt();
        let mut x = 0.5;
        while x < k as f64 / 2.0 - 0.25 {
            g *= x;
            x += 1.0;
        }
        g
    }
}

/// `∫₀^π sin^α θ dθ` by the Wallis reduction.
pub(crate) fn wallis(alpha: u32) -> f64 {
    let (mut value, mut a) = if alpha % 2 == 0 { (PI, 0) } else { (2.0, 1) };
    while a < alpha {
        a += 2;
        value *= (a - 1) as f64 / a as f64;
    }
    value
}

/// Pairwise (cascade) summation with a fixed split, so the result depends
/// only on the order of the input.
pub(crate) fn pairwise_sum<T>(values: &[T]) -> T
where
    T: Copy + Add<Output = T> + Default,
{
    const BLOCK: usize = 8;
    if values.len() <= BLOCK {
        return values.iter().fold(T::default(), |acc, &v| acc + v);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

/// Unevaluated sum `hi + lo` carrying about 32 significant digits.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub(crate) struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> DoubleDouble {
    let s = a + b;
    DoubleDouble { hi: s, lo: b - (s - a) }
}

impl DoubleDouble {
    pub fn new(v: f64) -> Self {
        DoubleDouble { hi: v, lo: 0.0 }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        quick_two_sum(s, e + self.lo + o.lo)
    }

    pub fn neg(self) -> Self {
        DoubleDouble { hi: -self.hi, lo: -self.lo }
    }

    pub fn mul(self, o: Self) -> Self {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        quick_two_sum(p, e + self.hi * o.lo + self.lo * o.hi)
    }

    pub fn div(self, o: Self) -> Self {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(DoubleDouble::new(q1)).neg());
        let q2 = r.hi / o.hi;
        let r = r.add(o.mul(DoubleDouble::new(q2)).neg());
        let q3 = r.hi / o.hi;
        quick_two_sum(q1, q2).add(DoubleDouble::new(q3))
    }
}
