//! Prime sieve.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// All primes ≤ n, by sieve of Eratosthenes. Empty for n < 2.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| !composite[i]).map(|i| i as u64).collect()
}

static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<u64>>>>> = OnceLock::new();

/// Shared sieve results for the Euler products, keyed by cutoff.
pub fn primes_cached(n: u64) -> Arc<Vec<u64>> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut cache = cache.lock().unwrap();
    cache.entry(n).or_insert_with(|| Arc::new(primes_up_to(n))).clone()
}
