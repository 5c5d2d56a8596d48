//! Regularized incomplete gamma functions and the χ² upper tail.

use crate::error::{Error, Result};

const MAX_ITERATIONS: usize = 100_000;
const EPS: f64 = 1e-16;
const TINY: f64 = 1e-300;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0`, Lanczos approximation (g = 7, nine terms).
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection: Γ(x)Γ(1-x) = π / sin(πx)
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

fn check_args(s: f64, x: f64) -> Result<()> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::domain(format!("gamma shape {s} must be positive")));
    }
    if x.is_nan() || x < 0.0 {
        return Err(Error::domain(format!(
            "gamma argument {x} must be non-negative"
        )));
    }
    Ok(())
}

/// Prefactor `x^s e^{-x} / Γ(s)` in log space.
fn log_prefactor(s: f64, x: f64) -> f64 {
    s * x.ln() - x - ln_gamma(s)
}

/// Series for P(s, x); converges quickly for `x < s + 1`.
fn lower_series(s: f64, x: f64) -> Result<f64> {
    let mut term = 1.0 / s;
    let mut sum = term;
    let mut denom = s;
    for _ in 0..MAX_ITERATIONS {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if term.abs() < sum.abs() * EPS {
            return Ok((sum.ln() + log_prefactor(s, x)).exp());
        }
    }
    Err(Error::Numeric(format!(
        "incomplete gamma series did not converge for s={s}, x={x}"
    )))
}

/// Continued fraction (modified Lentz) for Q(s, x); used for `x >= s + 1`.
fn upper_continued_fraction(s: f64, x: f64) -> Result<f64> {
    let mut b = x + 1.0 - s;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=MAX_ITERATIONS {
        let an = -(i as f64) * (i as f64 - s);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            return Ok((log_prefactor(s, x) + h.ln()).exp());
        }
    }
    Err(Error::Numeric(format!(
        "incomplete gamma continued fraction did not converge for s={s}, x={x}"
    )))
}

/// Lower regularized incomplete gamma `P(s, x) = γ(s, x) / Γ(s)`.
pub fn lower_regularized_gamma(s: f64, x: f64) -> Result<f64> {
    check_args(s, x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(1.0);
    }
    let p = if x < s + 1.0 {
        lower_series(s, x)?
    } else {
        1.0 - upper_continued_fraction(s, x)?
    };
    Ok(p.clamp(0.0, 1.0))
}

/// Upper regularized incomplete gamma `Q(s, x) = 1 - P(s, x)`, computed
/// directly in the tail to avoid cancellation.
pub fn upper_regularized_gamma(s: f64, x: f64) -> Result<f64> {
    check_args(s, x)?;
    if x == 0.0 {
        return Ok(1.0);
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    let q = if x < s + 1.0 {
        1.0 - lower_series(s, x)?
    } else {
        upper_continued_fraction(s, x)?
    };
    Ok(q.clamp(0.0, 1.0))
}

/// Upper-tail probability of a χ² variate with `dof` degrees of freedom.
pub fn chi_square_p_value(statistic: f64, dof: u32) -> Result<f64> {
    if dof == 0 {
        return Err(Error::domain("degrees of freedom must be at least 1"));
    }
    if statistic.is_nan() || statistic < 0.0 {
        return Err(Error::domain(format!(
            "statistic {statistic} must be non-negative"
        )));
    }
    upper_regularized_gamma(f64::from(dof) / 2.0, statistic / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn ln_gamma_known_values() {
        assert_abs_diff_eq!(ln_gamma(1.0), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ln_gamma(2.0), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(ln_gamma(5.0), 24f64.ln(), epsilon = 1e-13);
        assert_abs_diff_eq!(
            ln_gamma(0.5),
            std::f64::consts::PI.sqrt().ln(),
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(ln_gamma(0.1), 2.252_712_651_734_206, epsilon = 1e-13);
    }

    #[test]
    fn gamma_edge_values() {
        assert_eq!(lower_regularized_gamma(3.0, 0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(
            lower_regularized_gamma(0.5, 500.0).unwrap(),
            1.0,
            epsilon = 1e-10
        );
        // P(4, 4) = 1 - e^-4 (1 + 4 + 8 + 32/3)
        let closed = 1.0 - (-4f64).exp() * (1.0 + 4.0 + 8.0 + 32.0 / 3.0);
        assert_abs_diff_eq!(
            lower_regularized_gamma(4.0, 4.0).unwrap(),
            closed,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            lower_regularized_gamma(4.0, 4.0).unwrap(),
            0.56653,
            epsilon = 1e-4
        );
    }

    #[test]
    fn gamma_matches_integer_shape_closed_form() {
        // For integer s: Q(s, x) = e^-x Σ_{k<s} x^k / k!
        for s in 1..=25u32 {
            for &x in &[0.1, 1.0, 3.5, 10.0, 27.0, 60.0, 150.0] {
                let mut term = 1.0;
                let mut sum = 0.0;
                for k in 0..s {
                    if k > 0 {
                        term *= x / f64::from(k);
                    }
                    sum += term;
                }
                let q = (-x).exp() * sum;
                let got = lower_regularized_gamma(f64::from(s), x).unwrap();
                assert_abs_diff_eq!(got, 1.0 - q, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(lower_regularized_gamma(0.0, 1.0).is_err());
        assert!(lower_regularized_gamma(1.0, -1.0).is_err());
        assert!(chi_square_p_value(1.0, 0).is_err());
        assert!(chi_square_p_value(-1.0, 3).is_err());
        assert!(chi_square_p_value(f64::NAN, 3).is_err());
    }

    #[test]
    fn chi_square_table_values() {
        assert_eq!(chi_square_p_value(0.0, 8).unwrap(), 1.0);
        assert_abs_diff_eq!(
            chi_square_p_value(15.507, 8).unwrap(),
            0.050,
            epsilon = 0.001
        );
        assert_abs_diff_eq!(
            chi_square_p_value(2.733, 8).unwrap(),
            0.950,
            epsilon = 0.001
        );
        // dof 2 is exponential: p = e^{-x/2}
        assert_abs_diff_eq!(
            chi_square_p_value(7.0, 2).unwrap(),
            (-3.5f64).exp(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn p_value_monotone_and_vanishing() {
        for k in 1..=20 {
            let mut prev = 1.0;
            for step in 0..=400 {
                let x = f64::from(step) * 0.5;
                let p = chi_square_p_value(x, k).unwrap();
                assert!(p <= prev + 1e-15, "k={k} x={x}");
                prev = p;
            }
            assert!(chi_square_p_value(1e4, k).unwrap() < 1e-100);
        }
    }
}
