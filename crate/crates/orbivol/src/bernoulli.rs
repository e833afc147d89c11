//! Exact Bernoulli numbers with a process-wide cache.
//!
//! The even-index values feed the Lobachevsky power series, the
//! Euler–Maclaurin corrections and the even zeta closed forms, so they are
//! computed once as exact rationals and shared.

use std::sync::Mutex;
use std::sync::OnceLock;

use rug::{Integer, Rational};

static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// `B_n` (with the `B_1 = -1/2` convention), exact.
pub fn bernoulli(n: usize) -> Rational {
    let cache = CACHE.get_or_init(|| Mutex::new(vec![Rational::from(1)]));
    let mut table = cache.lock().unwrap();
    while table.len() <= n {
        let m = table.len();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -1/(m+1) sum_{j<m} C(m+1,j) B_j
        let mut acc = Rational::new();
        for (j, b) in table.iter().enumerate() {
            let c = Integer::from(m as u32 + 1).binomial(j as u32);
            acc += Rational::from((c, Integer::from(1))) * b;
        }
        let value = -acc / Rational::from((m as u32 + 1, 1u32));
        table.push(value);
    }
    table[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), Rational::from(1));
        assert_eq!(bernoulli(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli(2), Rational::from((1, 6)));
        assert_eq!(bernoulli(3), Rational::new());
        assert_eq!(bernoulli(4), Rational::from((-1, 30)));
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
    }

    #[test]
    fn odd_indices_vanish() {
        for n in (5..40).step_by(2) {
            assert_eq!(bernoulli(n), Rational::new(), "B_{n}");
        }
    }
}
