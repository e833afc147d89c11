//! Adaptive tanh-sinh (double exponential) quadrature.
//!
//! Levels double the node count by halving the step in the transformed
//! variable; the error estimate is the change between the last two levels,
//! which for analytic integrands shrinks superlinearly, so the next
//! doubling moves the value by less than the reported estimate.
//!
//! Integrands must be evaluable on the closed interval: node abscissae can
//! land on the endpoints once the transform saturates at working precision.

use crate::error::{Error, Result};
use crate::hp::HPReal;

/// Outcome of an `integrate` call.
#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: HPReal,
    /// Absolute error estimate, validated by node doubling.
    pub error_estimate: HPReal,
    /// Number of integrand evaluations performed.
    pub evaluations: usize,
}

const MAX_LEVEL: usize = 16;
const MAX_EVALUATIONS: usize = 4_000_000;

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Returns an error carrying the best estimate when the evaluation budget
/// is exhausted before the doubling estimate drops below `tol`.
pub fn integrate<F>(f: F, a: &HPReal, b: &HPReal, tol: &HPReal) -> Result<QuadratureResult>
where
    F: Fn(&HPReal) -> Result<HPReal>,
{
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN tolerances too
    if !(tol > &HPReal::zero(tol.digits())) {
        return Err(Error::Config(format!("quadrature tolerance must be positive, got {tol}")));
    }
    if a > b {
        return Err(Error::domain("integrate", format!("[{a}, {b}]"), "lower bound exceeds upper bound"));
    }
    let digits = a.digits().max(b.digits()).max(tol.digits());
    if a == b {
        return Ok(QuadratureResult {
            value: HPReal::zero(digits),
            error_estimate: HPReal::zero(digits),
            evaluations: 0,
        });
    }

    let half = HPReal::from_ratio(1, 2, digits);
    let center = (a + b) * &half;
    let scale = (b - a) * &half;
    let pi_half = HPReal::pi(digits) * &half;

    // node cutoff: weights below the working-precision floor contribute
    // nothing (tolerances tighter than that floor are unreachable anyway
    // and end in the budget error)
    let target = digits as f64 + 8.0;
    let t_max = ((target * std::f64::consts::LN_10) / std::f64::consts::PI).asinh() + 0.5;

    let evaluations = std::cell::Cell::new(0usize);
    let node = |t: f64| -> Result<HPReal> {
        let t = HPReal::parse(&format!("{t:.17e}"), digits).expect("node literal");
        let z = &pi_half * &t.sinh();
        let x = &center + &(&scale * &z.tanh());
        let cosh_z = z.cosh();
        let weight = (&pi_half * &t.cosh()) / (&cosh_z * &cosh_z);
        evaluations.set(evaluations.get() + 1);
        Ok(&(f(&x)?) * &(&weight * &scale))
    };

    // level 0: h = 1
    let mut h = 1.0f64;
    let mut sum = node(0.0)?;
    let mut j = 1.0f64;
    while j * h <= t_max {
        sum = &sum + &node(j * h)?;
        sum = &sum + &node(-j * h)?;
        j += 1.0;
    }
    let mut prev = &sum * &HPReal::parse(&format!("{h:.17e}"), digits).unwrap();

    for _level in 1..=MAX_LEVEL {
        h /= 2.0;
        let mut k = 1.0f64;
        while k * h <= t_max {
            sum = &sum + &node(k * h)?;
            sum = &sum + &node(-k * h)?;
            k += 2.0;
        }
        let current = &sum * &HPReal::parse(&format!("{h:.17e}"), digits).unwrap();
        let raw = (&current - &prev).abs();
        // floor the estimate at rounding scale so it stays honest under further doubling
        let floor = &current.abs() * &HPReal::pow10(-(digits as i64 + 2), digits);
        let error_estimate = if raw > floor { raw } else { floor };
        if &error_estimate <= tol {
            return Ok(QuadratureResult { value: current, error_estimate, evaluations: evaluations.get() });
        }
        if evaluations.get() > MAX_EVALUATIONS {
            return Err(Error::Quadrature {
                best_value: current,
                best_error: error_estimate,
                evaluations: evaluations.get(),
            });
        }
        prev = current;
    }
    let error_estimate = HPReal::zero(digits); // level cap exceeded before convergence
    Err(Error::Quadrature { best_value: prev, best_error: error_estimate, evaluations: evaluations.get() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::const_pi;

    fn tol(digits: u32, e: i64) -> HPReal {
        HPReal::pow10(e, digits)
    }

    #[test]
    fn constant_one() {
        let d = 45;
        let r = integrate(
            |_| Ok(HPReal::from_u64(1, d)),
            &HPReal::zero(d),
            &HPReal::from_u64(1, d),
            &tol(d, -30),
        )
        .unwrap();
        assert!((&r.value - &HPReal::from_u64(1, d)).abs() < tol(d, -30));
        assert!(r.error_estimate <= tol(d, -30));
    }

    #[test]
    fn sine_over_half_period() {
        let d = 45;
        let pi = const_pi(d).unwrap();
        let r = integrate(|x| Ok(x.sin()), &HPReal::zero(d), &pi, &tol(d, -30)).unwrap();
        assert!((&r.value - &HPReal::from_u64(2, d)).abs() < tol(d, -29), "got {}", r.value);
    }

    #[test]
    fn arctan_kernel() {
        let d = 45;
        let pi = const_pi(d).unwrap();
        let quarter_pi = &pi / &HPReal::from_u64(4, d);
        let one = HPReal::from_u64(1, d);
        let r = integrate(
            |x| Ok((&one / &(&one + &(x * x))).clone()),
            &HPReal::zero(d),
            &one,
            &tol(d, -30),
        )
        .unwrap();
        assert!((&r.value - &quarter_pi).abs() < tol(d, -29), "got {}", r.value);
    }

    #[test]
    fn empty_interval_is_zero() {
        let d = 40;
        let a = HPReal::from_u64(3, d);
        let r = integrate(|_| Ok(HPReal::from_u64(7, d)), &a, &a, &tol(d, -20)).unwrap();
        assert!(r.value.is_zero());
        assert_eq!(r.evaluations, 0);
    }

    #[test]
    fn reversed_interval_is_rejected() {
        let d = 40;
        let a = HPReal::from_u64(1, d);
        let b = HPReal::zero(d);
        assert!(integrate(|_| Ok(HPReal::zero(d)), &a, &b, &tol(d, -20)).is_err());
    }

    #[test]
    fn doubling_validates_error_estimate() {
        let d = 45;
        let one = HPReal::from_u64(1, d);
        let f = |x: &HPReal| Ok((x * x).exp());
        let coarse = integrate(f, &HPReal::zero(d), &one, &tol(d, -18)).unwrap();
        let fine = integrate(f, &HPReal::zero(d), &one, &tol(d, -32)).unwrap();
        let shift = (&coarse.value - &fine.value).abs();
        assert!(shift <= coarse.error_estimate, "shift {shift} vs est {}", coarse.error_estimate);
    }

    #[test]
    fn interval_additivity() {
        let d = 45;
        let f = |x: &HPReal| Ok(x.sin() + x.cos());
        let a = HPReal::zero(d);
        let b = HPReal::from_u64(2, d);
        let t = tol(d, -30);
        let whole = integrate(f, &a, &b, &t).unwrap().value;
        for c in ["0.3", "0.9", "1.7"] {
            let c = HPReal::parse(c, d).unwrap();
            let left = integrate(f, &a, &c, &t).unwrap().value;
            let right = integrate(f, &c, &b, &t).unwrap().value;
            let four_tol = &t * &HPReal::from_u64(4, d);
            assert!((&(&left + &right) - &whole).abs() < four_tol, "split at {c}");
        }
    }
}
