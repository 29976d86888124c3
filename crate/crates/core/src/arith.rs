//! Exact integer arithmetic and the classical multiplicative functions that
//! every other module is built on: factorization, ω, the radical s(n), φ,
//! the Carmichael exponent, the von Mangoldt function, prime enumeration,
//! and the clamped iterated logarithm lgₖ.
//!
//! Everything here is exact 64-bit arithmetic except for the real-valued
//! outputs (`mangoldt`, `iter_log`), which are ordinary doubles.

use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArithError {
    #[error("cannot factor 0")]
    FactorZero,
    #[error("iterated logarithm requires x > 0, got {0}")]
    LogDomain(f64),
}

/// Exact prime-power decomposition of a positive integer.
///
/// Primes are strictly increasing and each carries exponent ≥ 1; the empty
/// list represents n = 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The (prime, exponent) pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct prime factors ω(n).
    pub fn omega(&self) -> u32 {
        self.factors.len() as u32
    }

    /// Largest squarefree divisor s(n).
    pub fn radical(&self) -> u64 {
        self.factors.iter().map(|&(p, _)| p).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// All divisors of n, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let prev = out.clone();
            let mut pw = 1u64;
            for _ in 0..e {
                pw *= p;
                out.extend(prev.iter().map(|d| d * pw));
            }
        }
        out.sort_unstable();
        out
    }

    fn product(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product::<u64>()
    }
}

/// (a * b) mod m without overflow.
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m by square-and-multiply. `m = 1` yields 0.
pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// lcm(a, b); panics on overflow (callers only combine divisors of a common
/// 64-bit value, where overflow cannot occur).
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflow")
}

const TRIAL_LIMIT: u64 = 1_000_000;

fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        primes_up_to(TRIAL_LIMIT)
            .into_iter()
            .map(|p| p as u32)
            .collect()
    })
}

/// Deterministic Miller–Rabin. The fixed base set decides primality
/// correctly for every 64-bit integer.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'base: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle Pollard rho. `n` must be odd, composite, and free of factors
/// below the trial-division limit, so a nontrivial split always exists.
fn rho_split(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime(n) && n % 2 == 1);
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_inner(mut n: u64, out: &mut Vec<(u64, u32)>) {
    for &p in small_primes() {
        let p = p as u64;
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if n == 1 {
        return;
    }
    if n < TRIAL_LIMIT * TRIAL_LIMIT || is_prime(n) {
        out.push((n, 1));
        return;
    }
    // Composite cofactor with both prime factors above the trial limit.
    let mut stack = vec![n];
    let mut extra: Vec<u64> = Vec::new();
    while let Some(m) = stack.pop() {
        if is_prime(m) {
            extra.push(m);
            continue;
        }
        let d = rho_split(m);
        stack.push(d);
        stack.push(m / d);
    }
    extra.sort_unstable();
    let mut i = 0;
    while i < extra.len() {
        let p = extra[i];
        let mut e = 0u32;
        while i < extra.len() && extra[i] == p {
            e += 1;
            i += 1;
        }
        out.push((p, e));
    }
}

/// Factor a positive 64-bit integer. Rejects 0; `factor(1)` is the empty
/// product. Output is deterministic and sorted by prime.
pub fn factor(n: u64) -> Result<Factorization, ArithError> {
    if n == 0 {
        return Err(ArithError::FactorZero);
    }
    let mut factors = Vec::new();
    factor_inner(n, &mut factors);
    let f = Factorization { n, factors };
    debug_assert_eq!(f.product(), n);
    Ok(f)
}

/// Number of distinct prime factors. Panics if n = 0.
pub fn omega(n: u64) -> u32 {
    factor(n).expect("omega of 0").omega()
}

/// Largest squarefree divisor s(n). Panics if n = 0.
pub fn radical(n: u64) -> u64 {
    factor(n).expect("radical of 0").radical()
}

/// Euler's totient φ(n). Panics if n = 0.
pub fn euler_phi(n: u64) -> u64 {
    euler_phi_of(&factor(n).expect("phi of 0"))
}

pub fn euler_phi_of(f: &Factorization) -> u64 {
    f.factors()
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

/// Carmichael's function λ(n), the exponent of (Z/n)ˣ. Panics if n = 0.
pub fn carmichael(n: u64) -> u64 {
    carmichael_of(&factor(n).expect("carmichael of 0"))
}

pub fn carmichael_of(f: &Factorization) -> u64 {
    let mut out = 1u64;
    for &(p, e) in f.factors() {
        let comp = if p == 2 {
            match e {
                1 => 1,
                2 => 2,
                _ => 1u64 << (e - 2),
            }
        } else {
            p.pow(e - 1) * (p - 1)
        };
        out = lcm(out, comp);
    }
    out
}

/// Von Mangoldt Λ(n): log p when n is a power of the prime p, else 0.
/// Panics if n = 0.
pub fn mangoldt(n: u64) -> f64 {
    let f = factor(n).expect("mangoldt of 0");
    match f.factors() {
        [(p, _)] => (*p as f64).ln(),
        _ => 0.0,
    }
}

/// All primes ≤ n, ascending, by a plain sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = usize::try_from(n).expect("sieve bound exceeds address space");
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    out
}

/// The j-th prime, 1-indexed (`nth_prime(1) = 2`).
pub fn nth_prime(j: usize) -> u64 {
    assert!(j >= 1, "nth_prime is 1-indexed");
    // p_j < j (ln j + ln ln j) for j ≥ 6.
    let bound = if j < 6 {
        13
    } else {
        let jf = j as f64;
        (jf * (jf.ln() + jf.ln().ln())).ceil() as u64 + 16
    };
    primes_up_to(bound)[j - 1]
}

/// The clamped iterated logarithm: lg₁x = max(log x, 1) and
/// lgₖx = max(log lgₖ₋₁x, 1). Rejects x ≤ 0; `k` must be ≥ 1.
pub fn iter_log(x: f64, k: u32) -> Result<f64, ArithError> {
    assert!(k >= 1, "iter_log depth must be at least 1");
    if !(x > 0.0) {
        return Err(ArithError::LogDomain(x));
    }
    let mut v = x.ln().max(1.0);
    for _ in 1..k {
        v = v.ln().max(1.0);
    }
    Ok(v)
}

/// Thread-safe memoized factorization cache. Entirely optional: it produces
/// the same `Factorization` values as [`factor`].
#[derive(Default)]
pub struct FactorCache {
    map: DashMap<u64, Arc<Factorization>>,
}

impl FactorCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn factor(&self, n: u64) -> Result<Arc<Factorization>, ArithError> {
        if let Some(f) = self.map.get(&n) {
            return Ok(Arc::clone(&f));
        }
        let f = Arc::new(factor(n)?);
        self.map.insert(n, Arc::clone(&f));
        Ok(f)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_examples() {
        assert_eq!(factor(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factor(1).unwrap().factors(), &[]);
        assert_eq!(factor(1024).unwrap().factors(), &[(2, 10)]);
        assert_eq!(factor(0), Err(ArithError::FactorZero));
    }

    #[test]
    fn factor_large_semiprime() {
        // 1000003 * 1000033, both above the trial-division limit.
        let n = 1_000_003u64 * 1_000_033;
        assert_eq!(factor(n).unwrap().factors(), &[(1_000_003, 1), (1_000_033, 1)]);
    }

    #[test]
    fn omega_radical_phi() {
        assert_eq!(omega(12), 2);
        assert_eq!(omega(1), 0);
        assert_eq!(omega(30), 3);
        assert_eq!(radical(12), 6);
        assert_eq!(radical(1), 1);
        assert_eq!(radical(8), 2);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(49), 42);
    }

    /// Brute-force maximal multiplicative order over the units mod n.
    fn max_order_brute(n: u64) -> u64 {
        let mut best = 1;
        for a in 1..n.max(2) {
            if gcd(a, n) != 1 {
                continue;
            }
            let mut x = a % n;
            let mut k = 1u64;
            while x != 1 % n {
                x = mul_mod(x, a, n);
                k += 1;
            }
            best = best.max(k);
        }
        best
    }

    #[test]
    fn carmichael_examples() {
        assert_eq!(carmichael(7), 6);
        assert_eq!(max_order_brute(8), 2);
        assert_eq!(carmichael(8), 2);
        assert_eq!(max_order_brute(12), 2);
        assert_eq!(carmichael(12), 2);
        for n in 2..200 {
            assert_eq!(carmichael(n), max_order_brute(n), "n = {n}");
        }
    }

    #[test]
    fn mangoldt_examples() {
        assert!((mangoldt(8) - 2f64.ln()).abs() < 1e-15);
        assert_eq!(mangoldt(6), 0.0);
        assert!((mangoldt(7) - 7f64.ln()).abs() < 1e-15);
        assert_eq!(mangoldt(1), 0.0);
    }

    #[test]
    fn primes_examples() {
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(
            primes_up_to(30),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
        assert_eq!(nth_prime(1), 2);
        assert_eq!(nth_prime(5), 11);
        assert_eq!(nth_prime(25), 97);
        assert_eq!(nth_prime(168), 997);
    }

    #[test]
    fn iter_log_examples() {
        assert_eq!(iter_log(2.0, 1).unwrap(), 1.0);
        assert!((iter_log(std::f64::consts::E.powi(2), 1).unwrap() - 2.0).abs() < 1e-12);
        let x = (std::f64::consts::E.powi(3)).exp();
        assert!((iter_log(x, 2).unwrap() - 3.0).abs() < 1e-12);
        assert!(iter_log(0.0, 1).is_err());
        assert!(iter_log(-1.0, 2).is_err());
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(factor(12).unwrap().divisors(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(factor(1).unwrap().divisors(), vec![1]);
    }

    #[test]
    fn cache_transparent() {
        let cache = FactorCache::new();
        for n in [12u64, 1, 1024, 12] {
            assert_eq!(*cache.factor(n).unwrap(), factor(n).unwrap());
        }
        assert_eq!(cache.len(), 3);
    }

    #[test]
    fn is_prime_small() {
        let sieve = primes_up_to(2000);
        for n in 0..=2000u64 {
            assert_eq!(is_prime(n), sieve.binary_search(&n).is_ok(), "n = {n}");
        }
    }
}
