//! Exact arithmetic in a real quadratic field Q(θ) with θ² = tθ + n.
//!
//! Only monogenic quadratic fields appear here (O = Z[θ]), so integrality
//! is integrality of the θ-coordinates.

use rug::Rational;

use crate::error::{Error, Result};

/// Field context: θ² = tθ + n, discriminant t² + 4n.
#[derive(Clone, Copy, Debug)]
pub struct QuadCtx {
    pub t: i64,
    pub n: i64,
}

impl QuadCtx {
    pub fn disc(&self) -> i64 {
        self.t * self.t + 4 * self.n
    }
}

/// Element a + bθ with exact rational coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadElem {
    pub a: Rational,
    pub b: Rational,
}

impl QuadElem {
    pub fn from_ints(a: i64, b: i64) -> QuadElem {
        QuadElem { a: Rational::from(a), b: Rational::from(b) }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn mul(&self, other: &QuadElem, ctx: &QuadCtx) -> QuadElem {
        // (a + bθ)(c + dθ) = ac + bd·n + (ad + bc + bd·t) θ
        let ac = Rational::from(&self.a * &other.a);
        let bd = Rational::from(&self.b * &other.b);
        let ad_bc = Rational::from(&self.a * &other.b) + Rational::from(&self.b * &other.a);
        QuadElem {
            a: ac + Rational::from(&bd * &Rational::from(ctx.n)),
            b: ad_bc + bd * Rational::from(ctx.t),
        }
    }

    /// Galois conjugate: θ ↦ t − θ.
    pub fn conj(&self, ctx: &QuadCtx) -> QuadElem {
        QuadElem {
            a: Rational::from(&self.a) + Rational::from(&self.b * &Rational::from(ctx.t)),
            b: -self.b.clone(),
        }
    }

    /// Field norm a² + abt − nb².
    pub fn norm(&self, ctx: &QuadCtx) -> Rational {
        let a2 = Rational::from(&self.a * &self.a);
        let abt = Rational::from(&self.a * &self.b) * Rational::from(ctx.t);
        let nb2 = Rational::from(&self.b * &self.b) * Rational::from(ctx.n);
        a2 + abt - nb2
    }

    /// Exact quotient self / other.
    pub fn div(&self, other: &QuadElem, ctx: &QuadCtx) -> Result<QuadElem> {
        let nrm = other.norm(ctx);
        if nrm == 0 {
            return Err(Error::domain("quadfield_div", format!("{other:?}"), "division by zero element"));
        }
        let prod = self.mul(&other.conj(ctx), ctx);
        Ok(QuadElem { a: prod.a / nrm.clone(), b: prod.b / nrm })
    }
}

/// Valuation of an integral element at the prime generated by `pi`
/// (repeated exact division while the quotient stays integral).
pub fn valuation(x: &QuadElem, pi: &QuadElem, ctx: &QuadCtx) -> Result<(u32, QuadElem)> {
    if x.is_zero() {
        return Err(Error::domain("valuation", "0", "valuation of zero is infinite"));
    }
    if !x.is_integral() {
        return Err(Error::domain("valuation", format!("{x:?}"), "element is not integral"));
    }
    let mut v = 0u32;
    let mut cur = x.clone();
    loop {
        let q = cur.div(pi, ctx)?;
        if q.is_integral() {
            v += 1;
            cur = q;
        } else {
            return Ok((v, cur));
        }
    }
}

/// Is `u` congruent to a square modulo 𝔭^m, for 𝔭 = (pi) over 2?
///
/// Candidates x + yθ with 0 ≤ x, y < 2^m cover all residues since
/// 𝔭^m ⊇ (2^m). Used by the dyadic square-defect test; the candidate space
/// stays tiny (m ≤ 5).
pub fn is_square_mod_pi_power(u: &QuadElem, pi: &QuadElem, m: u32, ctx: &QuadCtx) -> Result<bool> {
    let span = 1i64 << m;
    for x in 0..span {
        for y in 0..span {
            let c = QuadElem::from_ints(x, y);
            let c2 = c.mul(&c, ctx);
            let diff = QuadElem { a: Rational::from(&c2.a - &u.a), b: Rational::from(&c2.b - &u.b) };
            if diff.is_zero() {
                return Ok(true);
            }
            if !diff.is_integral() {
                continue;
            }
            let (v, _) = valuation(&diff, pi, ctx)?;
            if v >= m {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Search a generator of a prime ideal of norm p (optionally pinned to the
/// root r of the defining polynomial mod p for split primes).
pub fn find_generator(p: u64, root: Option<u64>, ctx: &QuadCtx) -> Result<QuadElem> {
    let bound = 200i64;
    for v in -bound..=bound {
        for u in -bound..=bound {
            if u == 0 && v == 0 {
                continue;
            }
            let g = QuadElem::from_ints(u, v);
            let nrm = g.norm(ctx);
            if Rational::from(nrm.abs_ref()) != p {
                continue;
            }
            if let Some(r) = root {
                let img = (u.rem_euclid(p as i64) as u64 + (v.rem_euclid(p as i64) as u64) * (r % p)) % p;
                if img != 0 {
                    continue;
                }
            }
            return Ok(g);
        }
    }
    Err(Error::Inconclusive(format!(
        "no generator of norm {p} found within the search bound; supply the character value manually"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    const K0: QuadCtx = QuadCtx { t: 1, n: 1 }; // golden ratio field

    #[test]
    fn norms_and_conjugates() {
        // β = −1 + 2√5 = −3 + 4θ has norm −19
        let beta = QuadElem::from_ints(-3, 4);
        assert_eq!(beta.norm(&K0), Rational::from(-19));
        let c = beta.conj(&K0);
        assert_eq!(beta.mul(&c, &K0).a, Rational::from(-19));
        assert_eq!(beta.mul(&c, &K0).b, Rational::from(0));
        // ω = θ is a unit
        assert_eq!(QuadElem::from_ints(0, 1).norm(&K0), Rational::from(-1));
    }

    #[test]
    fn valuations_at_beta() {
        let beta = QuadElem::from_ints(-3, 4); // generates the prime of norm 19
        let (v, unit) = valuation(&beta, &beta, &K0).unwrap();
        assert_eq!(v, 1);
        assert_eq!(unit, QuadElem::from_ints(1, 0));
        // 19 = −β·β̄·(unit adjustments): v_𝔭(19) = 1 since the conjugate
        // prime also divides it once
        let nineteen = QuadElem::from_ints(19, 0);
        let (v, _) = valuation(&nineteen, &beta, &K0).unwrap();
        assert_eq!(v, 1);
    }

    #[test]
    fn dyadic_square_classes_in_k0() {
        // 2 is inert in the golden-ratio field; e = 1
        let two = QuadElem::from_ints(2, 0);
        // ω = θ: not a square mod 𝔭² (the dyadic place ramifies in k(√ω))
        let omega = QuadElem::from_ints(0, 1);
        assert!(!is_square_mod_pi_power(&omega, &two, 2, &K0).unwrap());
        // 3 + 2√5 = 1 + 4θ ≡ 1 mod 4: square mod 𝔭², not mod 𝔭³
        let beta0 = QuadElem::from_ints(1, 4);
        assert!(is_square_mod_pi_power(&beta0, &two, 2, &K0).unwrap());
        assert!(!is_square_mod_pi_power(&beta0, &two, 3, &K0).unwrap());
        // squares are squares
        let sq = QuadElem::from_ints(3, 5).mul(&QuadElem::from_ints(3, 5), &K0);
        assert!(is_square_mod_pi_power(&sq, &two, 3, &K0).unwrap());
    }

    #[test]
    fn generator_search() {
        // 11 splits; roots of x² − x − 1 mod 11 are 4 and 8
        let g = find_generator(11, Some(4), &K0).unwrap();
        assert_eq!(Rational::from(g.norm(&K0).abs_ref()), Rational::from(11));
        let img = (g.a.numer().to_i64().unwrap().rem_euclid(11) + g.b.numer().to_i64().unwrap().rem_euclid(11) * 4) % 11;
        assert_eq!(img, 0);
    }
}
