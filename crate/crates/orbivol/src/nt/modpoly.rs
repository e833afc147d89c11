//! Factorization degrees of integer polynomials modulo primes.
//!
//! For unramified primes (p ∤ disc) the polynomial is squarefree mod p and
//! distinct-degree factorization applies. At ramified primes a complete
//! naive factorization handles repeated factors; those primes divide the
//! discriminant and are small for every field shipped here.
//!
//! When p divides the index [O_K : Z[θ]], factoring the defining
//! polynomial no longer reflects prime splitting and the call refuses.

use rug::ops::RemRounding;
use rug::Integer;

use crate::error::{Error, Result};

/// Residue degrees and ramification indices of the primes over `prime`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingType {
    pub prime: u64,
    /// Multiset of (residue degree f, ramification index e).
    pub shape: Vec<(u32, u32)>,
}

impl SplittingType {
    /// Σ e·f, which must equal the field degree.
    pub fn total(&self) -> u32 {
        self.shape.iter().map(|&(f, e)| f * e).sum()
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

pub(crate) fn modinv(a: u64, p: u64) -> u64 {
    modpow(a % p, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Product of a and b reduced mod (monic f, p)
fn mulred(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let n = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mulmod(ai, bj, p)) % p;
        }
    }
    for i in (n..prod.len()).rev() {
        let c = prod[i];
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for k in 0..n {
            let sub = mulmod(c, f[k], p);
            prod[i - n + k] = (prod[i - n + k] + p - sub) % p;
        }
    }
    prod.truncate(n);
    prod.resize(n, 0);
    prod
}

fn polymod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    trim(&mut a);
    let mut bb = b.to_vec();
    trim(&mut bb);
    let db = bb.len() - 1;
    let lead_inv = modinv(bb[db], p);
    while a.len() >= bb.len() {
        let da = a.len() - 1;
        let c = mulmod(a[da], lead_inv, p);
        let shift = da - db;
        for k in 0..=db {
            let sub = mulmod(c, bb[k], p);
            a[shift + k] = (a[shift + k] + p - sub) % p;
        }
        a.truncate(da);
        trim(&mut a);
        if a.is_empty() {
            break;
        }
    }
    a
}

fn polygcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = polymod(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let inv = modinv(lead, p);
        for c in a.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    a
}

fn polydiv_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    trim(&mut a);
    let db = b.len() - 1;
    let lead_inv = modinv(b[db], p);
    let mut q = vec![0u64; a.len() - db];
    for i in (db..a.len()).rev() {
        let c = mulmod(a[i], lead_inv, p);
        q[i - db] = c;
        if c != 0 {
            for k in 0..=db {
                let sub = mulmod(c, b[k], p);
                a[i - db + k] = (a[i - db + k] + p - sub) % p;
            }
        }
    }
    q
}

/// x^(p^d) mod (monic fm, p)
fn frobenius_power(fm: &[u64], p: u64, d: usize) -> Vec<u64> {
    let n = fm.len() - 1;
    let mut cur = vec![0u64; n];
    if n == 1 {
        cur[0] = (p - fm[0] % p) % p;
    } else {
        cur[1] = 1;
    }
    for _ in 0..d {
        let mut acc = vec![0u64; n];
        acc[0] = 1;
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulred(&acc, &base, fm, p);
            }
            base = mulred(&base, &base, fm, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

/// Distinct-degree factorization for a squarefree monic polynomial mod p.
fn ddf_squarefree(fm: &[u64], p: u64) -> Vec<(u32, u32)> {
    let mut rem = fm.to_vec();
    trim(&mut rem);
    let mut shape = Vec::new();
    let mut d = 1usize;
    loop {
        trim(&mut rem);
        if rem.len() <= 1 {
            break;
        }
        let nrem = rem.len() - 1;
        if 2 * d > nrem {
            shape.push((nrem as u32, 1));
            break;
        }
        let xq = frobenius_power(&rem, p, d);
        let mut diff = xq;
        diff.resize(nrem.max(2), 0);
        if nrem >= 2 {
            diff[1] = (diff[1] + p - 1) % p;
        } else {
            let xmod = (p - rem[0] % p) % p;
            diff[0] = (diff[0] + p - xmod) % p;
        }
        trim(&mut diff);
        if diff.is_empty() {
            // x^(p^d) ≡ x: everything left factors in degree d
            for _ in 0..(nrem / d) {
                shape.push((d as u32, 1));
            }
            break;
        }
        let g = polygcd(&rem, &diff, p);
        let dg = g.len().saturating_sub(1);
        if dg > 0 {
            for _ in 0..(dg / d) {
                shape.push((d as u32, 1));
            }
            rem = polydiv_exact(&rem, &g, p);
        }
        d += 1;
    }
    shape
}

/// Complete naive factorization over F_p for small p (ramified primes),
/// degree ≤ 4, reporting multiplicities.
fn naive_factor(fm: &[u64], p: u64) -> Result<Vec<(u32, u32)>> {
    if p > 1_000_000 {
        return Err(Error::Refused(format!(
            "ramified prime {p} too large for the complete factorization path"
        )));
    }
    let mut rem = fm.to_vec();
    trim(&mut rem);
    let mut shape: Vec<(u32, u32)> = Vec::new();
    let mut root_mult: std::collections::BTreeMap<u64, u32> = std::collections::BTreeMap::new();
    'strip: loop {
        if rem.len() <= 1 {
            break;
        }
        for r in 0..p {
            let mut v = 0u64;
            for &c in rem.iter().rev() {
                v = (mulmod(v, r, p) + c) % p;
            }
            if v == 0 {
                *root_mult.entry(r).or_insert(0) += 1;
                let lin = vec![(p - r) % p, 1];
                rem = polydiv_exact(&rem, &lin, p);
                trim(&mut rem);
                continue 'strip;
            }
        }
        break;
    }
    for (_, e) in root_mult {
        shape.push((1, e));
    }
    let d = rem.len().saturating_sub(1);
    match d {
        0 => {}
        2 | 3 => shape.push((d as u32, 1)), // rootless quadratic/cubic is irreducible
        4 => {
            // rootless quartic: irreducible, two distinct quadratics, or a
            // quadratic squared
            let deriv: Vec<u64> = (1..=4).map(|i| mulmod(rem[i], i as u64 % p, p)).collect();
            let mut dv = deriv;
            trim(&mut dv);
            if dv.is_empty() {
                // char-p degenerate derivative: a perfect square of a
                // rootless (hence irreducible) quadratic
                shape.push((2, 2));
            } else {
                let g = polygcd(&rem, &dv, p);
                match g.len().saturating_sub(1) {
                    2 => shape.push((2, 2)),
                    0 => {
                        // squarefree: split (2)(2) from irreducible (4) by
                        // whether x^(p²) ≡ x mod rem
                        let xq2 = frobenius_power(&rem, p, 2);
                        let mut diff = xq2;
                        diff.resize(4, 0);
                        diff[1] = (diff[1] + p - 1) % p;
                        trim(&mut diff);
                        let fixed = if diff.is_empty() { 4 } else { polygcd(&rem, &diff, p).len().saturating_sub(1) };
                        if fixed == 4 {
                            shape.push((2, 1));
                            shape.push((2, 1));
                        } else {
                            shape.push((4, 1));
                        }
                    }
                    other => {
                        return Err(Error::Refused(format!(
                            "unexpected gcd degree {other} in ramified factorization at p = {p}"
                        )))
                    }
                }
            }
        }
        _ => {
            return Err(Error::Refused(format!(
                "complete factorization only implemented through degree 4, got {d}"
            )))
        }
    }
    Ok(shape)
}

/// Factorization shape of `poly` mod p, valid as a splitting type whenever
/// p does not divide the index [O_K : Z[θ]] (all p for monogenic fields).
///
/// `poly_disc` is the exact polynomial discriminant and `index_square` the
/// quotient |disc| / field-disc; a prime dividing the index square is
/// refused since Dedekind's criterion does not apply there.
pub fn factor_degrees_mod_p(
    poly: &[Integer],
    p: u64,
    poly_disc: &Integer,
    index_square: &Integer,
) -> Result<SplittingType> {
    if index_square != &1 && index_square.is_divisible(&Integer::from(p)) {
        return Err(Error::Refused(format!(
            "prime {p} divides the index of the equation order; supply splitting data another way"
        )));
    }
    let fm: Vec<u64> = poly
        .iter()
        .map(|c| {
            let r = c.clone().rem_euc(Integer::from(p));
            r.to_u64().expect("reduced coefficient fits")
        })
        .collect();
    let shape = if poly_disc.is_divisible(&Integer::from(p)) {
        naive_factor(&fm, p)?
    } else {
        ddf_squarefree(&fm, p)
    };
    let st = SplittingType { prime: p, shape };
    debug_assert_eq!(st.total() as usize, poly.len() - 1);
    Ok(st)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&c| Integer::from(c)).collect()
    }

    fn shape_of(v: &[i64], p: u64) -> Vec<(u32, u32)> {
        let f = poly(v);
        let disc = crate::nt::intpoly::poly_disc(&f).unwrap();
        let mut s = factor_degrees_mod_p(&f, p, &disc, &Integer::from(1)).unwrap().shape;
        s.sort();
        s
    }

    #[test]
    fn golden_ratio_polynomial_splittings() {
        // x² − x − 1
        assert_eq!(shape_of(&[-1, -1, 1], 11), vec![(1, 1), (1, 1)]);
        assert_eq!(shape_of(&[-1, -1, 1], 2), vec![(2, 1)]);
        assert_eq!(shape_of(&[-1, -1, 1], 5), vec![(1, 2)]);
        assert_eq!(shape_of(&[-1, -1, 1], 19), vec![(1, 1), (1, 1)]);
    }

    #[test]
    fn quartic_splittings_match_root_counts() {
        // x⁴ − x² − 1 mod p: root counts checked by brute force
        for p in [3u64, 7, 11, 19, 29, 101, 997] {
            let shape = shape_of(&[-1, 0, -1, 0, 1], p);
            let brute = (0..p)
                .filter(|&r| {
                    let r2 = mulmod(r, r, p);
                    let r4 = mulmod(r2, r2, p);
                    (r4 + 2 * p - r2 - 1).is_multiple_of(p)
                })
                .count() as u32;
            let linear: u32 = shape.iter().filter(|&&(f, _)| f == 1).map(|&(_, e)| e).sum();
            assert_eq!(linear, brute, "p = {p}, shape {shape:?}");
            assert_eq!(shape.iter().map(|&(f, e)| f * e).sum::<u32>(), 4);
        }
    }

    #[test]
    fn ramified_prime_of_ell2_at_two() {
        // x⁴ − x² − 1 ≡ (x² + x + 1)² mod 2
        assert_eq!(shape_of(&[-1, 0, -1, 0, 1], 2), vec![(2, 2)]);
        // and at 5: disc −400 is divisible by 5
        let s = shape_of(&[-1, 0, -1, 0, 1], 5);
        assert_eq!(s.iter().map(|&(f, e)| f * e).sum::<u32>(), 4);
        assert!(s.iter().any(|&(_, e)| e > 1), "5 ramifies: {s:?}");
    }

    #[test]
    fn index_primes_are_refused() {
        let f = poly(&[-19, 0, 2, 0, 1]); // index square 4096
        let disc = crate::nt::intpoly::poly_disc(&f).unwrap();
        let refused = factor_degrees_mod_p(&f, 2, &disc, &Integer::from(4096));
        assert!(matches!(refused, Err(Error::Refused(_))));
        // odd primes are fine
        assert!(factor_degrees_mod_p(&f, 3, &disc, &Integer::from(4096)).is_ok());
    }
}
