//! Independent reference computations for the acceptance suite.
//!
//! Nothing here calls into the crate's special-function code.

/// Γ(k/2) for a positive integer k, from Γ(1) = 1, Γ(1/2) = √π and
/// Γ(x + 1) = x Γ(x).
pub fn gamma_half_integer(k: u32) -> f64 {
    let (mut x, mut g) = if k.is_multiple_of(2) {
        (1.0, 1.0)
    } else {
        (0.5, std::f64::consts::PI.sqrt())
    };
    while x < f64::from(k) / 2.0 {
        g *= x;
        x += 1.0;
    }
    g
}

/// Upper tail of the χ² distribution by composite Simpson integration.
///
/// With t = s² the density becomes 2 s^(k−1) e^(−s²/2) / (2^(k/2) Γ(k/2)),
/// which is smooth at the origin for every k ≥ 1.
pub fn chi_square_upper_tail(x: f64, k: u32) -> f64 {
    let lo = x.sqrt();
    let hi = lo + 40.0;
    let intervals = 40_000usize;
    let h = (hi - lo) / intervals as f64;
    let f = |s: f64| 2.0 * s.powi(k as i32 - 1) * (-0.5 * s * s).exp();
    let mut sum = f(lo) + f(hi);
    for i in 1..intervals {
        let s = lo + i as f64 * h;
        sum += if i % 2 == 1 { 4.0 * f(s) } else { 2.0 * f(s) };
    }
    let norm = 2f64.powf(f64::from(k) / 2.0) * gamma_half_integer(k);
    sum * h / 3.0 / norm
}

/// Statistic whose oracle upper-tail probability equals `p`, by bisection.
pub fn chi_square_quantile_upper(p: f64, k: u32) -> f64 {
    let (mut a, mut b) = (0.0f64, 400.0f64);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if chi_square_upper_tail(m, k) > p {
            a = m;
        } else {
            b = m;
        }
        if b - a < 1e-10 {
            break;
        }
    }
    0.5 * (a + b)
}

/// Two-sided 95% binomial band on a rejection count, from the normal
/// approximation with continuity correction.
pub fn binomial_band(trials: usize, p: f64) -> (f64, f64) {
    let n = trials as f64;
    let sd = (p * (1.0 - p) / n).sqrt();
    (p - 1.96 * sd - 0.5 / n, p + 1.96 * sd + 0.5 / n)
}
