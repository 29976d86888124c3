//! Direct evaluation of the weighted Chebyshev sum
//! ψ₁(x,χ) = Σ_{n<x} χ(n)Λ(n)(x−n), plus empirical scaling reports of
//! |ψ₁(x,χ)| against x^{1+σ} log q over the nonprincipal part of Φ*(q).
//!
//! The evaluator is the definition itself: prime powers are enumerated by
//! a segmented sieve and accumulated in ascending order with compensated
//! summation, so x up to 10⁷ keeps full double precision.

use num_complex::Complex64;
use thiserror::Error;

use crate::arith::primes_up_to;
use crate::characters::{CharacterError, CharacterGroup, DirichletCharacter};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PsiError {
    #[error("x must be at least 1, got {x}")]
    XTooSmall { x: f64 },
    #[error("modulus {q} too small; need q >= 3")]
    ModulusTooSmall { q: u64 },
    #[error("sigma must lie in [1/2, 1), got {sigma}")]
    SigmaOutOfRange { sigma: f64 },
    #[error("grid must be strictly increasing with every value >= 2")]
    BadGrid,
    #[error(transparent)]
    Character(#[from] CharacterError),
}

/// Kahan–Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
struct Compensated {
    sum: f64,
    c: f64,
}

impl Compensated {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.c += (self.sum - t) + v;
        } else {
            self.c += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.c
    }
}

const SEGMENT: u64 = 1 << 16;

/// Visit (n, log p) for every prime power n = p^k < limit, in ascending
/// order of n; exactly the support of the von Mangoldt function.
pub fn for_each_prime_power<F: FnMut(u64, f64)>(limit: u64, mut f: F) {
    if limit <= 2 {
        return;
    }
    let root = (limit as f64).sqrt() as u64 + 1;
    let base = primes_up_to(root);

    // powers p^k, k >= 2, sorted ascending
    let mut powers: Vec<(u64, f64)> = Vec::new();
    for &p in &base {
        let lp = (p as f64).ln();
        let mut m = p * p;
        while m < limit {
            powers.push((m, lp));
            match m.checked_mul(p) {
                Some(next) => m = next,
                None => break,
            }
        }
    }
    powers.sort_unstable_by_key(|&(m, _)| m);
    let mut next_power = 0usize;

    let mut composite = vec![false; SEGMENT as usize];
    let mut lo = 2u64;
    while lo < limit {
        let hi = (lo + SEGMENT).min(limit);
        let len = (hi - lo) as usize;
        composite[..len].fill(false);
        for &p in &base {
            if p * p >= hi {
                break;
            }
            let mut m = (lo + p - 1) / p * p;
            if m == p {
                m = p * p;
            }
            while m < hi {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        for n in lo..hi {
            if !composite[(n - lo) as usize] {
                while next_power < powers.len() && powers[next_power].0 < n {
                    let (m, lp) = powers[next_power];
                    f(m, lp);
                    next_power += 1;
                }
                f(n, (n as f64).ln());
            }
        }
        lo = hi;
    }
    while next_power < powers.len() {
        let (m, lp) = powers[next_power];
        f(m, lp);
        next_power += 1;
    }
}

/// ψ₁(x,χ) = Σ_{n<x} χ(n)Λ(n)(x−n), strict inequality, exact finite sum.
/// The modulus-1 trivial character gives the classical ψ₁(x).
pub fn psi1(x: f64, chi: &DirichletCharacter) -> Result<Complex64, PsiError> {
    if !(x >= 1.0) || !x.is_finite() {
        return Err(PsiError::XTooSmall { x });
    }
    let q = chi.modulus();
    let table = chi.value_table();
    let limit = x.ceil() as u64; // n < limit coincides with n < x on integers
    let mut re = Compensated::default();
    let mut im = Compensated::default();
    for_each_prime_power(limit, |n, logp| {
        let v = table[(n % q) as usize];
        if v.re == 0.0 && v.im == 0.0 {
            return;
        }
        let w = logp * (x - n as f64);
        re.add(v.re * w);
        im.add(v.im * w);
    });
    Ok(Complex64::new(re.value(), im.value()))
}

/// One evaluated grid point of a scaling report.
#[derive(Debug, Clone)]
pub struct Psi1Row {
    /// Index of the character within the Φ*(q) enumeration order.
    pub char_index: usize,
    pub char_exponents: Vec<u64>,
    pub x: f64,
    pub value: Complex64,
    /// |ψ₁(x,χ)| / (x^{1+σ} log q).
    pub ratio: f64,
}

/// ψ₁ over every nonprincipal χ ∈ Φ*(q) on a grid of x values, with the
/// ratios against x^{1+σ} log q. A measurement, not a theorem check: no
/// zero-free hypothesis is certified.
#[derive(Debug, Clone)]
pub struct Psi1Report {
    pub modulus: u64,
    pub sigma: f64,
    pub rows: Vec<Psi1Row>,
    pub max_ratio: f64,
}

pub fn psi1_scaling_report(q: u64, sigma: f64, grid: &[f64]) -> Result<Psi1Report, PsiError> {
    if q < 3 {
        return Err(PsiError::ModulusTooSmall { q });
    }
    if !(0.5..1.0).contains(&sigma) {
        return Err(PsiError::SigmaOutOfRange { sigma });
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) || grid.iter().any(|&x| !(x >= 2.0)) {
        return Err(PsiError::BadGrid);
    }
    let log_q = (q as f64).ln();
    let mut rows = Vec::new();
    let mut max_ratio = 0.0f64;
    for (char_index, chi) in CharacterGroup::new(q)?.phi_star().into_iter().enumerate() {
        if chi.is_principal() {
            continue;
        }
        for &x in grid {
            let value = psi1(x, &chi)?;
            let ratio = value.norm() / (x.powf(1.0 + sigma) * log_q);
            debug_assert!(value.is_finite());
            max_ratio = max_ratio.max(ratio);
            rows.push(Psi1Row {
                char_index,
                char_exponents: chi.exponents().to_vec(),
                x,
                value,
                ratio,
            });
        }
    }
    // row order follows the primary key: x first, then character
    rows.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.char_index.cmp(&b.char_index)));
    Ok(Psi1Report { modulus: q, sigma, rows, max_ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factor, mangoldt};
    use crate::characters::enumerate_characters;

    fn trivial() -> DirichletCharacter {
        DirichletCharacter::modulus_one()
    }

    #[test]
    fn prime_power_stream_matches_mangoldt() {
        let mut stream = Vec::new();
        for_each_prime_power(2000, |n, lp| stream.push((n, lp)));
        let direct: Vec<(u64, f64)> = (2..2000u64)
            .filter(|&n| factor(n).unwrap().factors().len() == 1)
            .map(|n| (n, mangoldt(n)))
            .collect();
        assert_eq!(stream.len(), direct.len());
        for ((n1, l1), (n2, l2)) in stream.iter().zip(&direct) {
            assert_eq!(n1, n2);
            assert!((l1 - l2).abs() < 1e-12);
        }
    }

    #[test]
    fn psi1_hand_values() {
        // x = 5, trivial: Λ(2)·3 + Λ(3)·2 + Λ(4)·1 = 4 log 2 + 2 log 3
        let v = psi1(5.0, &trivial()).unwrap();
        let expect = 4.0 * 2f64.ln() + 2.0 * 3f64.ln();
        assert!((v.re - expect).abs() < 1e-12);
        assert_eq!(v.im, 0.0);
        assert!((v.re - 4.9698).abs() < 1e-3);

        // x = 10, nonprincipal mod 3: −4log2 − 5log5 + 3log7
        let eta = enumerate_characters(3).unwrap().pop().unwrap();
        assert!(!eta.is_principal());
        let v = psi1(10.0, &eta).unwrap();
        let expect = -4.0 * 2f64.ln() - 5.0 * 5f64.ln() + 3.0 * 7f64.ln();
        assert!((v.re - expect).abs() < 1e-12);
        assert!(v.im.abs() < 1e-12);
        assert!((v.re + 4.98205).abs() < 1e-4);

        // x = 2: empty sum
        let v = psi1(2.0, &eta).unwrap();
        assert_eq!(v, Complex64::new(0.0, 0.0));

        assert!(psi1(0.5, &trivial()).is_err());
    }

    #[test]
    fn psi1_fractional_x() {
        // n < 4.5 includes n = 4
        let v = psi1(4.5, &trivial()).unwrap();
        let expect = 2f64.ln() * (2.5 + 0.5) + 3f64.ln() * 1.5;
        assert!((v.re - expect).abs() < 1e-12);
    }

    #[test]
    fn classical_normalization_desk_scale() {
        let x = 1e5;
        let v = psi1(x, &trivial()).unwrap();
        assert!((v.re / (x * x / 2.0) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn difference_identity_small() {
        for q in [1u64, 3, 4, 5, 12] {
            let chars = if q == 1 {
                vec![trivial()]
            } else {
                enumerate_characters(q).unwrap()
            };
            for chi in chars {
                for x in [2u64, 7, 50, 300] {
                    let lhs = psi1((x + 1) as f64, &chi).unwrap() - psi1(x as f64, &chi).unwrap();
                    let mut rhs = Complex64::new(0.0, 0.0);
                    for n in 2..=x {
                        rhs += chi.eval(n).to_complex() * mangoldt(n);
                    }
                    assert!(
                        (lhs - rhs).norm() <= 1e-9 * lhs.norm().max(1.0),
                        "q={q} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn psi1_matches_naive_direct_sum() {
        for q in [1u64, 3, 5, 8, 12] {
            let chars = if q == 1 {
                vec![trivial()]
            } else {
                enumerate_characters(q).unwrap()
            };
            for chi in &chars {
                for x in [2.5f64, 17.0, 100.3, 999.0, 2500.7] {
                    let fast = psi1(x, chi).unwrap();
                    let mut slow = Complex64::new(0.0, 0.0);
                    let mut n = 2u64;
                    while (n as f64) < x {
                        let lam = mangoldt(n);
                        if lam != 0.0 {
                            slow += chi.eval(n).to_complex() * lam * (x - n as f64);
                        }
                        n += 1;
                    }
                    assert!(
                        (fast - slow).norm() <= 1e-9 * slow.norm().max(1.0),
                        "q={q} x={x}: {fast} vs {slow}"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugation_symmetry() {
        for q in [5u64, 7, 16] {
            for chi in enumerate_characters(q).unwrap() {
                let v = psi1(123.0, &chi).unwrap();
                let w = psi1(123.0, &chi.conj()).unwrap();
                assert!((v.conj() - w).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn scaling_report_shapes() {
        let r = psi1_scaling_report(3, 0.5, &[10.0, 100.0, 1000.0]).unwrap();
        // Φ*(3) = Φ(3): one nonprincipal character, three grid points
        assert_eq!(r.rows.len(), 3);
        assert!(r.rows.iter().all(|row| row.ratio.is_finite()));
        assert!(r.max_ratio > 0.0);

        // Φ*(4) = Φ(4): single nonprincipal character
        let r = psi1_scaling_report(4, 0.5, &[10.0, 20.0]).unwrap();
        assert_eq!(r.rows.len(), 2);

        let r = psi1_scaling_report(3, 0.5, &[]).unwrap();
        assert!(r.rows.is_empty());
        assert_eq!(r.max_ratio, 0.0);

        assert!(psi1_scaling_report(2, 0.5, &[10.0]).is_err());
        assert!(psi1_scaling_report(3, 0.4, &[10.0]).is_err());
        assert!(psi1_scaling_report(3, 0.5, &[10.0, 10.0]).is_err());
        assert!(psi1_scaling_report(3, 0.5, &[1.0, 10.0]).is_err());
    }
}
