//! Special values of Riemann, Dirichlet, Dedekind zeta and relative
//! L-functions.
//!
//! Two evaluation strategies coexist. Quadratic fields go through the
//! character decomposition ζ_k(s) = ζ(s) L(s, χ_D) with L evaluated by
//! Hurwitz zeta values, which reaches full working precision. Quartic
//! fields and relative quadratic extensions go through Euler products
//! truncated at a prime cutoff, which carry an explicit tail bound: the
//! neglected log-tail is at most k/(1 − P^{−s}) · P^{1−s}/(s−1) for k
//! prime ideals above each rational prime.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rug::ops::RemRounding;
use rug::{Integer, Rational};

use crate::bernoulli::bernoulli;
use crate::error::{Error, Result};
use crate::hp::{require_min_digits, working_digits, HPReal};
use crate::lobachevsky::zeta_int;
use crate::nt::field::NumberField;
use crate::nt::modpoly::{factor_degrees_mod_p, modinv, modpow};
use crate::nt::primes::primes_cached;
use crate::nt::quadfield::{find_generator, is_square_mod_pi_power, valuation, QuadCtx, QuadElem};

/// A truncated Euler product together with its certified tail bound.
#[derive(Clone, Debug)]
pub struct EulerProductValue {
    pub s: u32,
    pub cutoff: u64,
    pub value: HPReal,
    /// Absolute bound on |value(∞) − value(cutoff)|.
    pub tail_bound: HPReal,
}

/// Kronecker symbol (a | n) for n > 0.
pub fn kronecker(a: i64, n: i64) -> i32 {
    assert!(n > 0, "kronecker: modulus must be positive");
    let mut a = a;
    let mut n = n;
    let mut result = 1i32;
    let mut twos = 0u32;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if twos % 2 == 1 {
            let am8 = a.rem_euclid(8);
            if am8 == 3 || am8 == 5 {
                result = -result;
            }
        }
    }
    a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let nm8 = n % 8;
            if nm8 == 3 || nm8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn legendre(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if modpow(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Square root mod an odd prime (Tonelli–Shanks); `a` must be a residue.
fn sqrt_mod(a: u64, p: u64) -> u64 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if p % 4 == 3 {
        return modpow(a, (p + 1) / 4, p);
    }
    // write p − 1 = q 2^s
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| legendre(z, p) == -1).expect("nonresidue exists");
    let mut m = s;
    let mut c = modpow(z, q, p);
    let mut t = modpow(a, q, p);
    let mut r = modpow(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut t2 = t;
        while t2 != 1 {
            t2 = (t2 as u128 * t2 as u128 % p as u128) as u64;
            i += 1;
        }
        let b = modpow(c, 1 << (m - i - 1), p);
        m = i;
        c = (b as u128 * b as u128 % p as u128) as u64;
        t = (t as u128 * c as u128 % p as u128) as u64;
        r = (r as u128 * b as u128 % p as u128) as u64;
    }
    r
}

/// Is d > 0 a fundamental discriminant?
pub fn is_fundamental(d: u64) -> bool {
    fn squarefree(mut m: u64) -> bool {
        let mut q = 2u64;
        while q * q <= m {
            if m.is_multiple_of(q * q) {
                return false;
            }
            while m.is_multiple_of(q) {
                m /= q;
            }
            q += 1;
        }
        true
    }
    if d <= 1 {
        return false;
    }
    if d % 4 == 1 {
        squarefree(d)
    } else if d.is_multiple_of(4) {
        let m = d / 4;
        (m % 4 == 2 || m % 4 == 3) && squarefree(m)
    } else {
        false
    }
}

/// Hurwitz zeta ζ(s, x) for integer s ≥ 2 and rational x = num/den in
/// (0, 1], by Euler–Maclaurin with an adaptive truncation point.
pub fn hurwitz_zeta(s: u32, num: u64, den: u64, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    if s < 2 {
        return Err(Error::domain("hurwitz_zeta", s, "argument must be at least 2"));
    }
    if num == 0 || num > den {
        return Err(Error::domain("hurwitz_zeta", format!("{num}/{den}"), "offset must lie in (0, 1]"));
    }
    let wp = working_digits(digits);
    let x = HPReal::from_ratio(num as i64, den as i64, wp);
    let cutoff = HPReal::pow10(-(wp as i64 + 6), wp);
    let mut big_n = 24 + wp / 2;
    loop {
        let mut sum = HPReal::zero(wp);
        for k in 0..big_n {
            sum = &sum + &(&x + &HPReal::from_u64(k as u64, wp)).pow_i(-(s as i32));
        }
        let nx = &x + &HPReal::from_u64(big_n as u64, wp);
        sum = &sum + &(&nx.pow_i(1 - s as i32) / &HPReal::from_u64((s - 1) as u64, wp));
        sum = &sum + &(&nx.pow_i(-(s as i32)) * &HPReal::from_ratio(1, 2, wp));
        let nx2 = &nx * &nx;
        let mut poch = HPReal::from_u64(s as u64, wp);
        let mut fact = Rational::from(2);
        let mut npow = nx.pow_i(-(s as i32) - 1);
        let mut prev_mag: Option<HPReal> = None;
        let mut converged = false;
        for j in 1..200usize {
            if j > 1 {
                poch = &poch
                    * &HPReal::from_u64(s as u64 + 2 * j as u64 - 3, wp)
                    * &HPReal::from_u64(s as u64 + 2 * j as u64 - 2, wp);
                fact *= Integer::from(2 * j as u64 - 1) * Integer::from(2 * j as u64);
                npow = &npow / &nx2;
            }
            let coeff = HPReal::from_rational(&(bernoulli(2 * j) / &fact), wp);
            let term = &(&coeff * &poch) * &npow;
            sum = &sum + &term;
            let mag = term.abs();
            if mag < cutoff {
                converged = true;
                break;
            }
            if let Some(p) = prev_mag {
                if mag > p {
                    break;
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

/// Dirichlet L(s, χ_D) for the real quadratic character of fundamental
/// discriminant D, via the Hurwitz decomposition
/// L = D^{−s} Σ_a χ(a) ζ(s, a/D).
pub fn dirichlet_l_quadratic(s: u32, d_fund: u64, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    if !is_fundamental(d_fund) {
        return Err(Error::domain("dirichlet_l_quadratic", d_fund, "discriminant is not fundamental"));
    }
    let wp = working_digits(digits);
    let mut sum = HPReal::zero(wp);
    for a in 1..d_fund {
        let chi = kronecker(d_fund as i64, a as i64);
        if chi == 0 {
            continue;
        }
        let h = hurwitz_zeta(s, a, d_fund, digits)?;
        sum = if chi > 0 { &sum + &h } else { &sum - &h };
    }
    Ok(&sum * &HPReal::from_u64(d_fund, wp).pow_i(-(s as i32)))
}

/// ζ_k(s) = ζ(s) L(s, χ_D) for the real quadratic field of fundamental
/// discriminant D, at full working precision.
pub fn dedekind_zeta_quadratic(d_fund: u64, s: u32, digits: u32) -> Result<HPReal> {
    let z = zeta_int(s, digits)?;
    let l = dirichlet_l_quadratic(s, d_fund, digits)?;
    Ok(&z * &l)
}

/// Independent Euler-product route for ζ_k of a real quadratic field;
/// used to cross-check the character decomposition.
pub fn dedekind_zeta_quadratic_euler(
    d_fund: u64,
    s: u32,
    cutoff: u64,
    digits: u32,
) -> Result<EulerProductValue> {
    require_min_digits(digits)?;
    check_cutoff(cutoff)?;
    if !is_fundamental(d_fund) {
        return Err(Error::domain("dedekind_zeta_quadratic_euler", d_fund, "discriminant is not fundamental"));
    }
    let wp = working_digits(digits);
    let one = HPReal::from_u64(1, wp);
    let mut value = one.clone();
    for &p in primes_cached(cutoff).iter() {
        let kr = kronecker(d_fund as i64, p as i64);
        let pf = HPReal::from_u64(p, wp).pow_i(s as i32);
        match kr {
            1 => {
                let f = &pf / &(&pf - &one);
                value = &value * &f.square();
            }
            -1 => {
                let pf2 = pf.square();
                value = &value * &(&pf2 / &(&pf2 - &one));
            }
            _ => {
                value = &value * &(&pf / &(&pf - &one));
            }
        }
    }
    let tail_bound = tail_bound(&value, 2, s, cutoff, wp);
    Ok(EulerProductValue { s, cutoff, value, tail_bound })
}

fn check_cutoff(cutoff: u64) -> Result<()> {
    if cutoff > (1 << 31) {
        return Err(Error::Config(format!(
            "prime cutoff {cutoff} exceeds the supported bound 2^31"
        )));
    }
    Ok(())
}

/// log-tail ≤ k/(1 − P^{−s}) · P^{1−s}/(s−1); absolute bound via expm1.
fn tail_bound(value: &HPReal, ideals_per_prime: u32, s: u32, cutoff: u64, wp: u32) -> HPReal {
    let one = HPReal::from_u64(1, wp);
    let p = HPReal::from_u64(cutoff, wp);
    let p_minus_s = p.pow_i(-(s as i32));
    let log_tail = &(&HPReal::from_u64(ideals_per_prime as u64, wp) / &(&one - &p_minus_s))
        * &(&p.pow_i(1 - s as i32) / &HPReal::from_u64(s as u64 - 1, wp));
    &value.abs() * &(&log_tail.exp() - &one)
}

type MemoKey = (String, u32, u64, u32);
static MEMO: OnceLock<Mutex<HashMap<MemoKey, EulerProductValue>>> = OnceLock::new();

fn memo_get(key: &MemoKey) -> Option<EulerProductValue> {
    MEMO.get_or_init(|| Mutex::new(HashMap::new())).lock().unwrap().get(key).cloned()
}

fn memo_put(key: MemoKey, value: &EulerProductValue) {
    MEMO.get_or_init(|| Mutex::new(HashMap::new())).lock().unwrap().insert(key, value.clone());
}

/// ζ_l(s) for a monogenic quartic field by the Euler product over primes
/// up to `cutoff`, with splitting read off the defining polynomial mod p
/// at every prime (valid by monogenicity).
pub fn dedekind_zeta_quartic(
    field: &NumberField,
    s: u32,
    cutoff: u64,
    digits: u32,
) -> Result<EulerProductValue> {
    require_min_digits(digits)?;
    if field.degree != 4 {
        return Err(Error::domain("dedekind_zeta_quartic", &field.label, "field must be quartic"));
    }
    if !field.monogenic {
        return Err(Error::Refused(format!(
            "field {} is not monogenic (index² = {}); evaluate ζ_l = ζ_k · L via relative_l instead",
            field.label, field.index_square
        )));
    }
    if s < 2 {
        return Err(Error::domain("dedekind_zeta_quartic", s, "argument must be at least 2"));
    }
    check_cutoff(cutoff)?;
    let key = (format!("quartic:{}:{:?}", field.label, field.poly), s, cutoff, digits);
    if let Some(hit) = memo_get(&key) {
        return Ok(hit);
    }
    let wp = working_digits(digits);
    let one = HPReal::from_u64(1, wp);
    let mut value = one.clone();
    for &p in primes_cached(cutoff).iter() {
        let split = factor_degrees_mod_p(&field.poly, p, &field.poly_disc, &field.index_square)?;
        for &(f, _e) in &split.shape {
            let pf = HPReal::from_u64(p, wp).pow_i((f * s) as i32);
            value = &value * &(&pf / &(&pf - &one));
        }
    }
    let tail_bound = tail_bound(&value, 4, s, cutoff, wp);
    let out = EulerProductValue { s, cutoff, value, tail_bound };
    memo_put(key, &out);
    Ok(out)
}

/// An element (a + b√d)/c of a real quadratic field, d the squarefree
/// radicand.
#[derive(Clone, Copy, Debug)]
pub struct QuadAlgebraic {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl std::fmt::Display for QuadAlgebraic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} + {}·√d)/{}", self.a, self.b, self.c)
    }
}

struct RelSetup {
    ctx: QuadCtx,
    disc: i64,
    /// β in θ-coordinates, integral (scaled by a square if necessary).
    beta: QuadElem,
    norm_signed: Integer,
    norm_abs: Integer,
    beta_a: i64,
    beta_b: i64,
}

fn relative_setup(k: &NumberField, beta: &QuadAlgebraic) -> Result<RelSetup> {
    if k.degree != 2 || !k.monogenic {
        return Err(Error::Refused(format!(
            "relative_l requires a monogenic quadratic base field, got {}",
            k.label
        )));
    }
    let disc_int = k
        .abs_disc
        .to_i64()
        .ok_or_else(|| Error::Validation("base discriminant too large".into()))?;
    if !is_fundamental(disc_int as u64) {
        return Err(Error::Validation(format!("base discriminant {disc_int} is not fundamental")));
    }
    // poly = x² + c1 x + c0 → θ² = tθ + n with t = −c1, n = −c0
    let t = -k.poly[1].to_i64().unwrap();
    let n = -k.poly[0].to_i64().unwrap();
    let ctx = QuadCtx { t, n };
    if ctx.disc() != disc_int {
        return Err(Error::Validation("defining polynomial does not match the discriminant".into()));
    }
    // √d = (2θ − t)/scale where disc = scale²·d
    let (scale, _d) = if disc_int % 4 == 0 { (2i64, disc_int / 4) } else { (1i64, disc_int) };
    if beta.c == 0 {
        return Err(Error::Validation("beta denominator must be nonzero".into()));
    }
    // θ-coordinates of (a + b√d)/c as exact rationals
    let a_r = Rational::from((beta.a, beta.c)) - Rational::from((beta.b * t, beta.c * scale));
    let b_r = Rational::from((2 * beta.b, beta.c * scale));
    // scale by λ² to reach integral coordinates (same square class)
    let lam = a_r.denom().clone().lcm(b_r.denom());
    let lam2 = Rational::from((Integer::from(&lam * &lam), Integer::from(1)));
    let elem = QuadElem { a: a_r * &lam2, b: b_r * &lam2 };
    debug_assert!(elem.is_integral());
    let nrm = elem.norm(&ctx);
    if nrm == 0 {
        return Err(Error::Validation("beta must be nonzero".into()));
    }
    let norm_signed = nrm.numer().clone();
    let norm_abs = norm_signed.clone().abs();
    let beta_a = elem.a.numer().to_i64().ok_or_else(|| Error::Validation("beta too large".into()))?;
    let beta_b = elem.b.numer().to_i64().ok_or_else(|| Error::Validation("beta too large".into()))?;
    Ok(RelSetup { ctx, disc: disc_int, beta: elem, norm_signed, norm_abs, beta_a, beta_b })
}

/// Roots of x² − tx − n mod p (p odd, splitting or ramified case).
fn poly_roots_mod_p(ctx: &QuadCtx, p: u64) -> Vec<u64> {
    if p == 2 {
        return (0..2)
            .filter(|&r| (r as i64 * r as i64 - ctx.t * r as i64 - ctx.n).rem_euclid(2) == 0)
            .collect();
    }
    let disc = ctx.disc().rem_euclid(p as i64) as u64;
    let t = ctx.t.rem_euclid(p as i64) as u64;
    let inv2 = modinv(2, p);
    if disc == 0 {
        return vec![((t as u128 * inv2 as u128) % p as u128) as u64];
    }
    if legendre(disc, p) != 1 {
        return Vec::new();
    }
    let root = sqrt_mod(disc, p);
    let mut out = vec![
        (((t + root) as u128 * inv2 as u128) % p as u128) as u64,
        (((t + p - root) as u128 * inv2 as u128) % p as u128) as u64,
    ];
    out.sort_unstable();
    out.dedup();
    out
}

/// Character χ(𝔭) values over the rational prime p, as (ideal norm, χ).
///
/// Fast residue arithmetic covers unramified odd primes not meeting β;
/// dyadic, ramified and β-dividing primes go through exact ideal
/// valuations and the square-defect test in the completion.
fn rel_chi_at(setup: &RelSetup, p: u64) -> Result<Vec<(u64, i32)>> {
    let ctx = &setup.ctx;
    let kr = kronecker(setup.disc, p as i64);
    let difficult = p == 2 || kr == 0 || setup.norm_abs.is_divisible(&Integer::from(p));
    if !difficult {
        let a = setup.beta_a.rem_euclid(p as i64) as u64;
        let b = setup.beta_b.rem_euclid(p as i64) as u64;
        if kr == 1 {
            let t = setup.ctx.t.rem_euclid(p as i64) as u64;
            let root_disc = sqrt_mod((setup.disc).rem_euclid(p as i64) as u64, p);
            let inv2 = modinv(2, p);
            let mut out = Vec::with_capacity(2);
            for sign in [0, 1] {
                let r = if sign == 0 {
                    ((t + root_disc) as u128 * inv2 as u128 % p as u128) as u64
                } else {
                    ((t + p - root_disc) as u128 * inv2 as u128 % p as u128) as u64
                };
                let image = (a as u128 + b as u128 * r as u128) as u64 % p;
                out.push((p, legendre(image, p)));
            }
            Ok(out)
        } else {
            // inert: χ(𝔭) = (N(β) | p) since β^((p²−1)/2) = N(β)^((p−1)/2)
            let img = setup.norm_signed.clone().rem_euc(Integer::from(p)).to_u64().unwrap();
            Ok(vec![(p * p, legendre(img, p))])
        }
    } else {
        // exact path
        let generators: Vec<QuadElem> = if kr == 0 {
            vec![find_generator(p, None, ctx)?]
        } else if kr == 1 {
            let mut gens = Vec::new();
            for r in poly_roots_mod_p(ctx, p) {
                gens.push(find_generator(p, Some(r), ctx)?);
            }
            gens
        } else {
            vec![QuadElem::from_ints(p as i64, 0)]
        };
        let mut out = Vec::new();
        for g in generators {
            let gn = g.norm(ctx).numer().clone().abs();
            let nrm_u64 = gn.to_u64().expect("prime power norm fits");
            let (v, unit) = valuation(&setup.beta, &g, ctx)?;
            if v % 2 == 1 {
                out.push((nrm_u64, 0));
                continue;
            }
            let chi = if p == 2 {
                let two = QuadElem::from_ints(2, 0);
                let (e, _) = valuation(&two, &g, ctx)?;
                if is_square_mod_pi_power(&unit, &g, 2 * e + 1, ctx)? {
                    1
                } else if is_square_mod_pi_power(&unit, &g, 2 * e, ctx)? {
                    -1
                } else {
                    0
                }
            } else if nrm_u64 == p * p {
                // inert
                let nu = unit.norm(ctx).numer().clone().rem_euc(Integer::from(p));
                legendre(nu.to_u64().unwrap(), p)
            } else {
                // residue degree 1: reduce at the root annihilating g
                let roots = poly_roots_mod_p(ctx, p);
                let ga = g.a.numer().to_i64().unwrap();
                let gb = g.b.numer().to_i64().unwrap();
                let root = roots
                    .iter()
                    .copied()
                    .find(|&r| (ga + gb * r as i64).rem_euclid(p as i64) == 0)
                    .expect("generator reduces at one root");
                let ua = unit.a.numer().to_i64().unwrap().rem_euclid(p as i64) as u64;
                let ub = unit.b.numer().to_i64().unwrap().rem_euclid(p as i64) as u64;
                let image = ((ua as u128 + ub as u128 * root as u128) % p as u128) as u64;
                legendre(image, p)
            };
            out.push((nrm_u64, chi));
        }
        Ok(out)
    }
}

/// L_{l/k}(s) = ζ_l(s)/ζ_k(s) for the quadratic extension l = k(√β), as
/// an Euler product over the primes of k above rational primes ≤ cutoff.
///
/// χ(𝔭) ∈ {−1, 0, +1} is the quadratic residue character of β at 𝔭, zero
/// exactly at the primes ramifying in l/k.
pub fn relative_l(
    k: &NumberField,
    beta: &QuadAlgebraic,
    s: u32,
    cutoff: u64,
    digits: u32,
) -> Result<EulerProductValue> {
    require_min_digits(digits)?;
    if s < 2 {
        return Err(Error::domain("relative_l", s, "argument must be at least 2"));
    }
    check_cutoff(cutoff)?;
    let key = (format!("rel:{}:{}:{}:{}", k.label, beta.a, beta.b, beta.c), s, cutoff, digits);
    if let Some(hit) = memo_get(&key) {
        return Ok(hit);
    }
    let setup = relative_setup(k, beta)?;
    let wp = working_digits(digits);
    let one = HPReal::from_u64(1, wp);
    let mut value = one.clone();
    let mut nontrivial_seen = false;
    for &p in primes_cached(cutoff).iter() {
        for (nrm, chi) in rel_chi_at(&setup, p)? {
            if chi != 1 {
                nontrivial_seen = true;
            }
            if chi == 0 {
                continue;
            }
            let nf = HPReal::from_u64(nrm, wp).pow_i(s as i32);
            let factor = if chi == 1 { &nf / &(&nf - &one) } else { &nf / &(&nf + &one) };
            value = &value * &factor;
        }
    }
    if !nontrivial_seen {
        return Err(Error::Inconclusive(format!(
            "character of beta = {beta} trivial at every tested prime up to {cutoff}; beta may be a square in k"
        )));
    }
    let tail_bound = tail_bound(&value, 2, s, cutoff, wp);
    let out = EulerProductValue { s, cutoff, value, tail_bound };
    memo_put(key, &out);
    Ok(out)
}

/// Character values of the relative extension at a single rational prime;
/// exposed for ramification bookkeeping and tests.
pub fn relative_chi(k: &NumberField, beta: &QuadAlgebraic, p: u64) -> Result<Vec<(u64, i32)>> {
    let setup = relative_setup(k, beta)?;
    rel_chi_at(&setup, p)
}
