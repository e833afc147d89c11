//! Exact integer polynomial arithmetic: resultants, discriminants and
//! small-degree irreducibility tests.
//!
//! Polynomials are coefficient vectors in ascending order (constant term
//! first). Everything here is exact integer arithmetic; no floating point
//! enters.

use rug::ops::Pow;
use rug::Integer;

use crate::error::{Error, Result};

fn degree(f: &[Integer]) -> usize {
    let mut d = f.len();
    while d > 0 && f[d - 1] == 0 {
        d -= 1;
    }
    d.saturating_sub(1)
}

/// Resultant of f and g as the determinant of their Sylvester matrix,
/// evaluated by fraction-free (Bareiss) elimination.
pub fn resultant(f: &[Integer], g: &[Integer]) -> Integer {
    let m = degree(f);
    let n = degree(g);
    if m == 0 {
        return f[0].clone().pow(n as u32);
    }
    if n == 0 {
        return g[0].clone().pow(m as u32);
    }
    let size = m + n;
    let mut mat = vec![vec![Integer::new(); size]; size];
    for i in 0..n {
        for (j, c) in f[..=m].iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g[..=n].iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    let mut sign = 1i32;
    let mut prev = Integer::from(1);
    for k in 0..size - 1 {
        if mat[k][k] == 0 {
            let Some(r) = (k + 1..size).find(|&r| mat[r][k] != 0) else {
                return Integer::new();
            };
            mat.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let t = Integer::from(&mat[i][j] * &mat[k][k]) - Integer::from(&mat[i][k] * &mat[k][j]);
                mat[i][j] = t / &prev;
            }
            mat[i][k] = Integer::new();
        }
        prev = mat[k][k].clone();
    }
    let mut out = mat[size - 1][size - 1].clone();
    if sign < 0 {
        out = -out;
    }
    out
}

/// Exact discriminant of a monic integer polynomial of degree ≥ 2:
/// (−1)^(n(n−1)/2) · Res(f, f').
pub fn poly_disc(f: &[Integer]) -> Result<Integer> {
    let n = degree(f);
    if n < 2 {
        return Err(Error::domain("poly_disc", format!("{f:?}"), "degree must be at least 2"));
    }
    if f[n] != 1 {
        return Err(Error::domain("poly_disc", format!("{f:?}"), "polynomial must be monic"));
    }
    let deriv: Vec<Integer> = (1..=n).map(|i| Integer::from(&f[i] * &Integer::from(i as u64))).collect();
    let res = resultant(&f[..=n], &deriv);
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -res } else { res })
}

/// Irreducibility over the rationals for monic polynomials of degree ≤ 4,
/// by the rational-root test plus the quadratic-factor search.
pub fn is_irreducible_deg_le4(f: &[Integer]) -> Result<bool> {
    let n = degree(f);
    if n == 0 || n > 4 {
        return Err(Error::domain(
            "is_irreducible",
            format!("{f:?}"),
            "only degrees 1 through 4 are supported",
        ));
    }
    if f[n] != 1 {
        return Err(Error::domain("is_irreducible", format!("{f:?}"), "polynomial must be monic"));
    }
    if n == 1 {
        return Ok(true);
    }
    if f[0] == 0 {
        return Ok(false); // x divides f
    }
    // monic: any rational root is an integer dividing the constant term
    let c0 = f[0].clone().abs();
    let mut divisor = Integer::from(1);
    while divisor <= c0 {
        if c0.is_divisible(&divisor) {
            for sign in [1i32, -1] {
                let r = if sign > 0 { divisor.clone() } else { -divisor.clone() };
                let mut v = Integer::new();
                for c in f[..=n].iter().rev() {
                    v = v * &r + c;
                }
                if v == 0 {
                    return Ok(false);
                }
            }
        }
        divisor += 1;
    }
    if n <= 3 {
        return Ok(true); // a factorization of a cubic needs a linear factor
    }
    // degree 4: look for (x² + a x + b)(x² + c x + d) with integer a,b,c,d
    let e3 = &f[3];
    let e2 = &f[2];
    let e1 = &f[1];
    let e0 = &f[0];
    let bound = f[0].clone().abs();
    let mut b = Integer::from(1);
    while b <= bound {
        if e0.is_divisible(&b) {
            for bsign in [1i32, -1] {
                let bb = if bsign > 0 { b.clone() } else { -b.clone() };
                let dd = Integer::from(e0 / &bb);
                // a + c = e3 ; b + d + a c = e2 ; a d + b c = e1
                // substitute c = e3 - a:  a d + b e3 - a b = e1  =>  a (d - b) = e1 - b e3
                let rhs = Integer::from(e1 - &Integer::from(&bb * e3));
                let diff = Integer::from(&dd - &bb);
                let candidates: Vec<Integer> = if diff == 0 {
                    if rhs != 0 {
                        continue;
                    }
                    // any a with a(e3 − a) = e2 − 2b
                    let target = Integer::from(e2 - &Integer::from(2 * &bb));
                    // a² − e3 a + target = 0
                    let disc = Integer::from(e3 * e3) - Integer::from(4 * &target);
                    if disc < 0 {
                        continue;
                    }
                    let (root, rem) = disc.sqrt_rem(Integer::new());
                    if rem != 0 {
                        continue;
                    }
                    let two = Integer::from(2);
                    let mut cands = Vec::new();
                    for r in [root.clone(), -root] {
                        let num = Integer::from(e3 + &r);
                        if num.is_divisible(&two) {
                            cands.push(num / two.clone());
                        }
                    }
                    cands
                } else {
                    if !rhs.is_divisible(&diff) {
                        continue;
                    }
                    vec![rhs / diff]
                };
                for a in candidates {
                    let c = Integer::from(e3 - &a);
                    let check2 = Integer::from(&bb + &dd) + Integer::from(&a * &c);
                    if &check2 == e2 {
                        return Ok(false);
                    }
                }
            }
        }
        b += 1;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&c| Integer::from(c)).collect()
    }

    #[test]
    fn quadratic_disc() {
        assert_eq!(poly_disc(&poly(&[-1, -1, 1])).unwrap(), Integer::from(5));
        assert_eq!(poly_disc(&poly(&[-2, 0, 1])).unwrap(), Integer::from(8));
    }

    #[test]
    fn quartic_discs() {
        // biquadratic closed form 16q(p² − 4q)² fixes the magnitude; the
        // resultant fixes the sign
        assert_eq!(poly_disc(&poly(&[-1, 0, -1, 0, 1])).unwrap(), Integer::from(-400));
        assert_eq!(poly_disc(&poly(&[-1, 2, 0, -1, 1])).unwrap(), Integer::from(-275));
        assert_eq!(poly_disc(&poly(&[-19, 0, 2, 0, 1])).unwrap(), Integer::from(-1_945_600));
        assert_eq!(poly_disc(&poly(&[-7, 0, 2, 0, 1])).unwrap(), Integer::from(-114_688));
    }

    #[test]
    fn disc_rejects_low_degree_and_non_monic() {
        assert!(poly_disc(&poly(&[1, 2])).is_err());
        assert!(poly_disc(&poly(&[1, 1, 2])).is_err());
    }

    #[test]
    fn disc_recomputation_is_bit_identical() {
        let f = poly(&[-19, 0, 2, 0, 1]);
        assert_eq!(poly_disc(&f).unwrap(), poly_disc(&f).unwrap());
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible_deg_le4(&poly(&[-1, -1, 1])).unwrap());
        assert!(is_irreducible_deg_le4(&poly(&[-1, 0, -1, 0, 1])).unwrap());
        assert!(is_irreducible_deg_le4(&poly(&[-1, 2, 0, -1, 1])).unwrap());
        // x⁴ − 1 = (x−1)(x+1)(x²+1)
        assert!(!is_irreducible_deg_le4(&poly(&[-1, 0, 0, 0, 1])).unwrap());
        // (x²+1)(x²+2) = x⁴ + 3x² + 2 has no rational roots
        assert!(!is_irreducible_deg_le4(&poly(&[2, 0, 3, 0, 1])).unwrap());
        // (x²+x+1)² = x⁴ + 2x³ + 3x² + 2x + 1
        assert!(!is_irreducible_deg_le4(&poly(&[1, 2, 3, 2, 1])).unwrap());
    }
}
