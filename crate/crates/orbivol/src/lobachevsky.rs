//! Lobachevsky functions Л₂, Л₃ and integer zeta values.
//!
//! Л₂(ω) = ½ Σ sin(2rω)/r² = −∫₀^ω log|2 sin t| dt and its trilogarithmic
//! companion Л₃(ω) = ¼ Σ cos(2rω)/r³ = ¼ζ(3) − ∫₀^ω Л₂(t) dt. The defining
//! Fourier series converge too slowly to evaluate directly, so both are
//! computed from the equivalent power series obtained by integrating
//! log(sin t / t) = −Σ ζ(2m) t^{2m} / (m π^{2m}) term by term:
//!
//!   Л₂(ω) = ω(1 − log 2ω) + Σ_{m≥1} r_m ω^{2m+1},
//!   Л₃(ω) = ¼ζ(3) + ω²(½ log 2ω − ¾) − Σ_{m≥1} r_m/(2m+2) ω^{2m+2},
//!
//! with rational coefficients r_m = 2^{2m−1}|B_{2m}| / ((2m)! m (2m+1)).
//! After reduction to |ω| ≤ π/2 the term ratio is at most 1/4, giving a
//! geometric tail with an explicit bound. The integral form of Л₃ is kept
//! as an independent cross-check route.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rug::{Integer, Rational};

use crate::bernoulli::bernoulli;
use crate::error::{Error, Result};
use crate::hp::{require_min_digits, working_digits, HPReal};
use crate::quad;

/// Series order selector for [`LobValue`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LobOrder {
    Two,
    Three,
}

/// An evaluated Lobachevsky function value.
#[derive(Clone, Debug)]
pub struct LobValue {
    pub omega: HPReal,
    pub order: LobOrder,
    pub value: HPReal,
}

impl LobValue {
    pub fn evaluate(order: LobOrder, omega: &HPReal, digits: u32) -> Result<LobValue> {
        let value = match order {
            LobOrder::Two => lob2(omega, digits)?,
            LobOrder::Three => lob3(omega, digits)?,
        };
        Ok(LobValue { omega: omega.clone(), order, value })
    }
}

struct LobCoeffs {
    /// r_m for Л₂, m = 1..
    r: Vec<HPReal>,
    /// r_m/(2m+2) for Л₃
    s: Vec<HPReal>,
}

static COEFFS: OnceLock<Mutex<HashMap<u32, Arc<LobCoeffs>>>> = OnceLock::new();

fn coeffs(wp: u32) -> Arc<LobCoeffs> {
    let map = COEFFS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = map.lock().unwrap();
    if let Some(c) = map.get(&wp) {
        return c.clone();
    }
    // enough terms for |ω| ≤ π/2 where the ratio is (ω/π)² ≤ 1/4
    let terms = ((wp as f64 + 10.0) * std::f64::consts::LN_10 / (4f64).ln()).ceil() as usize + 4;
    let mut r = Vec::with_capacity(terms);
    let mut s = Vec::with_capacity(terms);
    let mut fact = Rational::from(1); // (2m)!
    let mut pow2 = Rational::from(2); // 2^{2m-1}
    for m in 1..=terms {
        fact *= Integer::from(2 * m - 1) * Integer::from(2 * m);
        if m > 1 {
            pow2 *= 4;
        }
        let b2m = bernoulli(2 * m).abs();
        let rm = Rational::from(&pow2 * &b2m)
            / (Rational::from(&fact * &Integer::from((m * (2 * m + 1)) as u64)));
        let sm = Rational::from(&rm) / Rational::from((2 * m as u64 + 2, 1u64));
        r.push(HPReal::from_rational(&rm, wp));
        s.push(HPReal::from_rational(&sm, wp));
    }
    let arc = Arc::new(LobCoeffs { r, s });
    map.insert(wp, arc.clone());
    arc
}

/// Reduce ω modulo π into [−π/2, π/2].
///
/// Residues below the ulp scale of the input are flushed to exactly zero,
/// so arguments that are representations of multiples of π short-circuit.
fn reduce_mod_pi(omega: &HPReal, wp: u32) -> HPReal {
    let pi = HPReal::pi(wp);
    let k = (omega / &pi).round();
    let w = omega - &(&k * &pi);
    if !k.is_zero() {
        // ulp of the input at its own precision, with a small safety factor
        let f = omega.as_float();
        if let Some(exp) = f.get_exp() {
            let ulp_exp = exp - f.prec() as i32 + 4;
            let mut ulp = rug::Float::with_val(f.prec(), 1u32);
            ulp >>= -ulp_exp;
            if w.as_float().clone().abs() < ulp {
                return HPReal::zero(wp);
            }
        }
    }
    w
}

/// Л₂(ω) to the requested precision. Total function, odd and π-periodic.
pub fn lob2(omega: &HPReal, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let w = reduce_mod_pi(omega, wp);
    if w.is_zero() {
        return Ok(HPReal::zero(digits));
    }
    let negate = w.is_negative();
    let w = w.abs();
    let c = coeffs(wp);
    let cutoff = HPReal::pow10(-(wp as i64 + 8), wp);
    let w2 = &w * &w;
    let mut power = &w2 * &w;
    let mut sum = HPReal::zero(wp);
    for rm in &c.r {
        let term = rm * &power;
        sum = &sum + &term;
        if term < cutoff {
            break;
        }
        power = &power * &w2;
    }
    let ln_2w = (&w + &w).ln().expect("2ω > 0 after reduction");
    let mut value = &(&w - &(&w * &ln_2w)) + &sum;
    if negate {
        value = -value;
    }
    Ok(value)
}

/// Л₃(ω) via the power series. Total function, even and π-periodic.
pub fn lob3(omega: &HPReal, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let w = reduce_mod_pi(omega, wp).abs();
    let quarter_zeta3 = &zeta_int(3, wp)? / &HPReal::from_u64(4, wp);
    if w.is_zero() {
        return Ok(quarter_zeta3);
    }
    let c = coeffs(wp);
    let cutoff = HPReal::pow10(-(wp as i64 + 8), wp);
    let w2 = &w * &w;
    let mut power = &w2 * &w2;
    let mut sum = HPReal::zero(wp);
    for sm in &c.s {
        let term = sm * &power;
        sum = &sum + &term;
        if term < cutoff {
            break;
        }
        power = &power * &w2;
    }
    let ln_2w = (&w + &w).ln().expect("2ω > 0 after reduction");
    let half = HPReal::from_ratio(1, 2, wp);
    let three_quarters = HPReal::from_ratio(3, 4, wp);
    let quadratic = &w2 * &(&(&half * &ln_2w) - &three_quarters);
    Ok(&(&quarter_zeta3 + &quadratic) - &sum)
}

/// Л₃(ω) via its integral representation ¼ζ(3) − ∫₀^ω Л₂(t) dt.
///
/// Slower than [`lob3`]; retained as an independent cross-check of the
/// series route (both must agree to working precision).
pub fn lob3_integral(omega: &HPReal, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let quarter_zeta3 = &zeta_int(3, wp)? / &HPReal::from_u64(4, wp);
    if omega.is_zero() {
        return Ok(quarter_zeta3);
    }
    let tol = HPReal::pow10(-(digits as i64 + 5), wp);
    let zero = HPReal::zero(wp);
    let (lo, hi, flip) = if omega.is_negative() {
        (omega.clone(), zero, true)
    } else {
        (zero, omega.clone(), false)
    };
    let integral = quad::integrate(|t| lob2(t, digits), &lo, &hi, &tol)?;
    let signed = if flip { -integral.value } else { integral.value };
    Ok(&quarter_zeta3 - &signed)
}

/// Riemann zeta at an integer argument n ≥ 2.
///
/// Even arguments use the Bernoulli closed form ζ(2m) = |B_2m|(2π)^2m / (2(2m)!);
/// odd arguments use the accelerated alternating series of Cohen,
/// Rodriguez Villegas and Zagier applied to η(n).
pub fn zeta_int(n: u32, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    if n < 2 {
        return Err(Error::domain("zeta_int", n, "argument must be at least 2"));
    }
    let wp = working_digits(digits);
    if n.is_multiple_of(2) {
        let m = (n / 2) as usize;
        let b = bernoulli(2 * m).abs();
        let mut fact = Rational::from(2);
        for k in 1..=2 * m {
            fact *= Integer::from(k as u64);
        }
        let ratio = b / fact; // |B_2m| / (2 (2m)!)
        let two_pi = HPReal::pi(wp) * HPReal::from_u64(2, wp);
        return Ok(&two_pi.pow_i(n as i32) * &HPReal::from_rational(&ratio, wp));
    }
    Ok(zeta_odd_cvz(n, wp))
}

/// Accelerated alternating series for ζ at odd arguments.
fn zeta_odd_cvz(s: u32, wp: u32) -> HPReal {
    let iters = ((wp as f64 + 6.0) * std::f64::consts::LN_10 / (3.0 + 8f64.sqrt()).ln()).ceil() as u32 + 2;
    let base = &HPReal::from_u64(3, wp) + &HPReal::from_u64(8, wp).sqrt().unwrap();
    let d0 = base.pow_i(iters as i32);
    let d = &(&d0 + &d0.recip().unwrap()) * &HPReal::from_ratio(1, 2, wp);
    let mut b = -HPReal::from_u64(1, wp);
    let mut c = -d.clone();
    let mut sum = HPReal::zero(wp);
    for k in 0..iters {
        c = &b - &c;
        // a_k = (k+1)^{-s}
        let ak = HPReal::from_u64(k as u64 + 1, wp).pow_i(-(s as i32));
        sum = &sum + &(&c * &ak);
        let num = HPReal::from_i64((k as i64 + iters as i64) * (k as i64 - iters as i64), wp);
        let den = &(&HPReal::from_u64(k as u64, wp) + &HPReal::from_ratio(1, 2, wp))
            * &HPReal::from_u64(k as u64 + 1, wp);
        b = &(&b * &num) / &den;
    }
    let eta = &sum / &d;
    // ζ(s) = η(s) / (1 - 2^{1-s})
    let two_pow = HPReal::from_u64(2, wp).pow_i(1 - s as i32);
    &eta / &(&HPReal::from_u64(1, wp) - &two_pow)
}

/// ζ at integers by Euler–Maclaurin; an independent route used to
/// cross-check [`zeta_int`] for odd arguments.
pub fn zeta_int_euler_maclaurin(n: u32, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    if n < 2 {
        return Err(Error::domain("zeta_int_euler_maclaurin", n, "argument must be at least 2"));
    }
    let wp = working_digits(digits);
    let s = n;
    let cutoff = HPReal::pow10(-(wp as i64 + 6), wp);
    let mut big_n = 24 + wp / 2;
    loop {
        let mut sum = HPReal::zero(wp);
        for k in 1..big_n {
            sum = &sum + &HPReal::from_u64(k as u64, wp).pow_i(-(s as i32));
        }
        let nf = HPReal::from_u64(big_n as u64, wp);
        sum = &sum + &(&nf.pow_i(1 - s as i32) / &HPReal::from_u64((s - 1) as u64, wp));
        sum = &sum + &(&nf.pow_i(-(s as i32)) * &HPReal::from_ratio(1, 2, wp));
        let n2 = &nf * &nf;
        let mut poch = HPReal::from_u64(s as u64, wp);
        let mut fact = Rational::from(2);
        let mut npow = nf.pow_i(-(s as i32) - 1);
        let mut prev_mag: Option<HPReal> = None;
        let mut converged = false;
        for j in 1..200usize {
            if j > 1 {
                poch = &poch
                    * &HPReal::from_u64((s as u64) + 2 * j as u64 - 3, wp)
                    * &HPReal::from_u64((s as u64) + 2 * j as u64 - 2, wp);
                fact *= Integer::from(2 * j as u64 - 1) * Integer::from(2 * j as u64);
                npow = &npow / &n2;
            }
            let b = bernoulli(2 * j);
            let coeff = HPReal::from_rational(&(b / &fact), wp);
            let term = &(&coeff * &poch) * &npow;
            sum = &sum + &term;
            let mag = term.abs();
            if mag < cutoff {
                converged = true;
                break;
            }
            if let Some(p) = prev_mag {
                if mag > p {
                    break; // diverging tail; need a larger N
                }
            }
            prev_mag = Some(mag);
        }
        if converged {
            return Ok(sum);
        }
        big_n *= 2;
    }
}
