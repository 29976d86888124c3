//! Rosser's weights for the linear sieve and the shifted-sieve lower bound,
//! together with a concrete weighted-sequence abstraction.
//!
//! The weight table assigns λ⁻_d ∈ {−1, 0, +1} to every squarefree divisor
//! of P = ∏_{p≤z} p. Writing d = q₁⋯q_r with q₁ > … > q_r, the weight is
//! (−1)^r when q₁⋯q_{2l−1}·q_{2l}³ < y for every 1 ≤ l ≤ ⌊r/2⌋ and 0
//! otherwise (the l = 0 condition is an empty product and vacuous). The
//! divisor sums σ_n = Σ_{d|n} λ⁻_d then satisfy σ₁ = 1 and σ_n ≤ 0 for
//! n ≥ 2, which is what makes the lower bound sound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{factor, gcd, nth_prime, primes_up_to};

/// Largest supported sifting limit: π(60) = 17 primes keeps the 2^π(z)
/// weight table comfortably in memory.
pub const MAX_SIEVE_Z: u64 = 60;

/// Default multiplier in the canonical parameter choice y = C₂·z²
/// (clamped into the validity window [z², z⁴]). Grid-measured: the T-sum
/// is already positive at C₂ = 1 for every 2 ≤ z ≤ 60, and C₂ = 4 keeps a
/// healthy margin (min T·log z over the grid is then 0.693, the empirical
/// stand-in for the C₁ of the asymptotic statement).
pub const DEFAULT_C2: f64 = 4.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SieveError {
    #[error("rosser parameter y must be at least 2, got {y}")]
    BadY { y: f64 },
    #[error("sifting limit z must lie in [2, {max}], got {z}")]
    BadZ { z: u64, max: u64 },
    #[error("{n} is not a squarefree product of primes <= z = {z}")]
    NotDivisorOfPrimorial { n: u64, z: u64 },
    #[error("sifting modulus {upsilon} is not squarefree")]
    NotSquarefree { upsilon: u64 },
    #[error("density model must satisfy f(d) >= d; got f({d}) = {value}")]
    DensityTooSmall { d: u64, value: f64 },
    #[error("density model must assign every prime of {upsilon} a value")]
    DensityIncomplete { upsilon: u64 },
    #[error("item weights must be nonnegative and finite")]
    BadWeight,
    #[error("item multiplicities must be positive")]
    BadMultiplicity,
    #[error("X must be positive and finite, got {x}")]
    BadX { x: f64 },
    #[error("remainder cap R must be positive and finite, got {r}")]
    BadRemainderCap { r: f64 },
    #[error("remainder condition violated: observed {observed} exceeds declared cap {declared}")]
    RemainderExceeded { observed: f64, declared: f64 },
    #[error("y = {y} lies outside the validity window [{lo}, {hi}]")]
    YOutsideWindow { y: f64, lo: f64, hi: f64 },
}

/// Rosser weights λ⁻_d over the squarefree divisors of P = ∏_{p≤z} p,
/// for a parameter y, with the divisor sums σ precomputed.
#[derive(Debug, Clone)]
pub struct RosserWeightTable {
    y: f64,
    z: u64,
    primes: Vec<u64>,
    divisors: Vec<u128>,
    lambda: Vec<i8>,
    sigma: Vec<i32>,
}

/// The two sums of the shifted bound: Σ|λ⁻_d| and the exact
/// T = Σ_{d|P} σ_d / ∏_{p|d}(p−1).
#[derive(Debug, Clone)]
pub struct WeightSums {
    pub abs_sum: u64,
    pub t_sum: BigRational,
}

impl WeightSums {
    pub fn t_sum_f64(&self) -> f64 {
        self.t_sum.to_f64().unwrap_or(f64::NAN)
    }
}

/// Build the weight table for parameter y and sifting limit z.
pub fn rosser_weights(y: f64, z: u64) -> Result<RosserWeightTable, SieveError> {
    if !(y >= 2.0) || !y.is_finite() {
        return Err(SieveError::BadY { y });
    }
    if !(2..=MAX_SIEVE_Z).contains(&z) {
        return Err(SieveError::BadZ { z, max: MAX_SIEVE_Z });
    }
    let primes = primes_up_to(z);
    let k = primes.len();
    let size = 1usize << k;
    let mut divisors = vec![1u128; size];
    let mut lambda = vec![0i8; size];
    lambda[0] = 1; // λ⁻_1 = (−1)^0
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        divisors[mask] = divisors[mask & (mask - 1)] * primes[low] as u128;

        // primes of d, largest first
        let qs: Vec<u128> = (0..k)
            .rev()
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| primes[i] as u128)
            .collect();
        let r = qs.len();
        let mut ok = true;
        let mut prefix: u128 = 1;
        let mut absorbed = 0usize;
        for l in 1..=r / 2 {
            while absorbed < 2 * l - 1 {
                prefix *= qs[absorbed];
                absorbed += 1;
            }
            let pair = qs[2 * l - 1];
            if (prefix * pair * pair * pair) as f64 >= y {
                ok = false;
                break;
            }
        }
        if ok {
            lambda[mask] = if r % 2 == 0 { 1 } else { -1 };
        }
    }
    // subset-sum transform: sigma[mask] = Σ_{sub ⊆ mask} lambda[sub]
    let mut sigma: Vec<i32> = lambda.iter().map(|&l| l as i32).collect();
    for b in 0..k {
        for mask in 0..size {
            if mask >> b & 1 == 1 {
                sigma[mask] += sigma[mask ^ (1 << b)];
            }
        }
    }
    Ok(RosserWeightTable { y, z, primes, divisors, lambda, sigma })
}

impl RosserWeightTable {
    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Number of squarefree divisors of P, i.e. 2^π(z).
    pub fn divisor_count(&self) -> usize {
        self.lambda.len()
    }

    fn mask_of(&self, n: u64) -> Result<usize, SieveError> {
        let err = SieveError::NotDivisorOfPrimorial { n, z: self.z };
        if n == 0 {
            return Err(err);
        }
        let mut rest = n;
        let mut mask = 0usize;
        for (i, &p) in self.primes.iter().enumerate() {
            if rest % p == 0 {
                rest /= p;
                mask |= 1 << i;
                if rest % p == 0 {
                    return Err(err); // not squarefree
                }
            }
        }
        if rest != 1 {
            return Err(err);
        }
        Ok(mask)
    }

    /// λ⁻_n for n | P.
    pub fn lambda(&self, n: u64) -> Result<i8, SieveError> {
        Ok(self.lambda[self.mask_of(n)?])
    }

    /// σ_n = Σ_{d|n} λ⁻_d for n | P.
    pub fn sigma(&self, n: u64) -> Result<i64, SieveError> {
        Ok(self.sigma[self.mask_of(n)?] as i64)
    }

    /// All (d, σ_d) pairs over d | P; d as u128 since the full primorial
    /// exceeds 64 bits near z = 60.
    pub fn divisor_sigmas(&self) -> impl Iterator<Item = (u128, i64)> + '_ {
        self.divisors
            .iter()
            .zip(&self.sigma)
            .map(|(&d, &s)| (d, s as i64))
    }

    /// (Σ_{d|P} |λ⁻_d|, T = Σ_{d|P} σ_d / ∏_{p|d}(p−1)); T exact.
    pub fn weight_sums(&self) -> WeightSums {
        let size = self.lambda.len();
        let mut denoms = vec![1u128; size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            denoms[mask] = denoms[mask & (mask - 1)] * (self.primes[low] - 1) as u128;
        }
        let mut abs_sum = 0u64;
        let mut t_sum = BigRational::zero();
        for mask in 0..size {
            if self.lambda[mask] != 0 {
                abs_sum += 1;
            }
            if self.sigma[mask] != 0 {
                t_sum += BigRational::new(
                    BigInt::from(self.sigma[mask]),
                    BigInt::from(denoms[mask]),
                );
            }
        }
        WeightSums { abs_sum, t_sum }
    }
}

/// One element of a sifting sequence: an identifier, the positive integer
/// ν(a) the sieve conditions on, and a nonnegative weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SieveItem {
    pub id: u64,
    pub multiplicity: u64,
    pub weight: f64,
}

impl SieveItem {
    pub fn unit(value: u64) -> Self {
        SieveItem { id: value, multiplicity: value, weight: 1.0 }
    }
}

/// Multiplicative density function f with f(d) ≥ d on divisors of Υ,
/// determined by its values on the primes of Υ.
#[derive(Debug, Clone)]
pub enum DensityFn {
    /// f(d) = d.
    Identity,
    /// f(∏p) = ∏ value(p); every prime of Υ must be listed with value ≥ p.
    PrimeValues(Vec<(u64, f64)>),
}

impl DensityFn {
    /// f(d) for a squarefree d. Unlisted primes make the evaluation fail
    /// at instance construction, not here.
    pub fn eval(&self, d: u64) -> f64 {
        match self {
            DensityFn::Identity => d as f64,
            DensityFn::PrimeValues(vals) => {
                let mut rest = d;
                let mut out = 1.0;
                for &(p, v) in vals {
                    if rest % p == 0 {
                        rest /= p;
                        out *= v;
                    }
                }
                debug_assert_eq!(rest, 1, "density evaluated off the divisors of upsilon");
                out
            }
        }
    }
}

/// A finite weighted sequence with its sifting modulus and density model
/// (X, f, R) for the remainder condition |A_d − X/f(d)| ≤ R.
#[derive(Debug, Clone)]
pub struct SieveInstance {
    items: Vec<SieveItem>,
    upsilon: u64,
    x: f64,
    density: DensityFn,
    remainder_cap: f64,
}

/// Exact accounting of an instance: the sifted sum S, every A_d, and the
/// observed remainder max_d |A_d − X/f(d)|.
#[derive(Debug, Clone)]
pub struct InstanceStats {
    pub sifted_sum: f64,
    /// (d, A_d) for every d | Υ, ascending in d.
    pub divisor_sums: Vec<(u64, f64)>,
    pub r_observed: f64,
}

impl SieveInstance {
    pub fn new(
        items: Vec<SieveItem>,
        upsilon: u64,
        x: f64,
        density: DensityFn,
        remainder_cap: f64,
    ) -> Result<Self, SieveError> {
        if upsilon == 0 || !factor(upsilon).expect("upsilon >= 1").is_squarefree() {
            return Err(SieveError::NotSquarefree { upsilon });
        }
        if !(x > 0.0) || !x.is_finite() {
            return Err(SieveError::BadX { x });
        }
        if !(remainder_cap > 0.0) || !remainder_cap.is_finite() {
            return Err(SieveError::BadRemainderCap { r: remainder_cap });
        }
        for item in &items {
            if item.multiplicity == 0 {
                return Err(SieveError::BadMultiplicity);
            }
            if !(item.weight >= 0.0) || !item.weight.is_finite() {
                return Err(SieveError::BadWeight);
            }
        }
        if let DensityFn::PrimeValues(vals) = &density {
            for &(p, _) in factor(upsilon).unwrap().factors() {
                if !vals.iter().any(|&(q, _)| q == p) {
                    return Err(SieveError::DensityIncomplete { upsilon });
                }
            }
        }
        for d in factor(upsilon).unwrap().divisors() {
            let v = density.eval(d);
            if !(v >= d as f64) {
                return Err(SieveError::DensityTooSmall { d, value: v });
            }
        }
        Ok(SieveInstance { items, upsilon, x, density, remainder_cap })
    }

    pub fn items(&self) -> &[SieveItem] {
        &self.items
    }

    pub fn upsilon(&self) -> u64 {
        self.upsilon
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn density(&self) -> &DensityFn {
        &self.density
    }

    pub fn remainder_cap(&self) -> f64 {
        self.remainder_cap
    }
}

/// S(A,Υ), the table of A_d over d | Υ, and the observed remainder.
pub fn instance_stats(inst: &SieveInstance) -> InstanceStats {
    let divisors = factor(inst.upsilon).expect("upsilon >= 1").divisors();
    let mut sums = vec![0.0f64; divisors.len()];
    let mut sifted = 0.0f64;
    for item in &inst.items {
        let g = gcd(item.multiplicity, inst.upsilon);
        if g == 1 {
            sifted += item.weight;
        }
        for (i, &d) in divisors.iter().enumerate() {
            if g % d == 0 {
                sums[i] += item.weight;
            }
        }
    }
    let mut r_observed = 0.0f64;
    for (i, &d) in divisors.iter().enumerate() {
        let model = inst.x / inst.density.eval(d);
        r_observed = r_observed.max((sums[i] - model).abs());
    }
    InstanceStats {
        sifted_sum: sifted,
        divisor_sums: divisors.into_iter().zip(sums).collect(),
        r_observed,
    }
}

/// The evaluated shifted-sieve lower bound and everything that went into it.
#[derive(Debug, Clone)]
pub struct ShiftedBound {
    pub bound: f64,
    pub main_term: f64,
    pub remainder_term: f64,
    /// Rosser parameter actually used (0 when Υ = 1 and nothing is sifted).
    pub y: f64,
    /// Sifting limit p_{ω(Υ)} (0 when Υ = 1).
    pub z: u64,
    pub t_sum: f64,
    pub abs_sum: u64,
    pub stats: InstanceStats,
}

/// Canonical parameter y = C₂·z², clamped into the validity window.
pub fn default_y(z: u64) -> f64 {
    let z = z as f64;
    (DEFAULT_C2 * z * z).clamp(z * z, z * z * z * z)
}

/// Evaluate the shifted-sieve lower bound
/// S(A,Υ) ≥ X ∏_{p|Υ}(1 − 1/f(p)) Σ_{d|P} σ_d/∏_{p|d}(p−1) − R Σ_{d|P}|λ⁻_d|
/// with Rosser weights at parameter y (default [`default_y`]) and
/// z = p_{ω(Υ)}. The declared remainder condition is checked against the
/// instance before the bound is formed; Υ = 1 yields S itself.
pub fn shifted_lower_bound(
    inst: &SieveInstance,
    y: Option<f64>,
) -> Result<ShiftedBound, SieveError> {
    let stats = instance_stats(inst);
    if stats.r_observed > inst.remainder_cap {
        return Err(SieveError::RemainderExceeded {
            observed: stats.r_observed,
            declared: inst.remainder_cap,
        });
    }
    let upsilon_primes: Vec<u64> = factor(inst.upsilon)
        .expect("upsilon >= 1")
        .factors()
        .iter()
        .map(|&(p, _)| p)
        .collect();
    if upsilon_primes.is_empty() {
        // nothing to sift
        return Ok(ShiftedBound {
            bound: stats.sifted_sum,
            main_term: stats.sifted_sum,
            remainder_term: 0.0,
            y: 0.0,
            z: 0,
            t_sum: 0.0,
            abs_sum: 0,
            stats,
        });
    }
    let z = nth_prime(upsilon_primes.len());
    let zf = z as f64;
    let (lo, hi) = (zf * zf, zf * zf * zf * zf);
    let y = y.unwrap_or_else(|| default_y(z));
    if !(lo..=hi).contains(&y) {
        return Err(SieveError::YOutsideWindow { y, lo, hi });
    }
    let table = rosser_weights(y, z)?;
    let sums = table.weight_sums();
    let product: f64 = upsilon_primes
        .iter()
        .map(|&p| 1.0 - 1.0 / inst.density.eval(p))
        .product();
    let t = sums.t_sum_f64();
    let main_term = inst.x * product * t;
    let remainder_term = inst.remainder_cap * sums.abs_sum as f64;
    Ok(ShiftedBound {
        bound: main_term - remainder_term,
        main_term,
        remainder_term,
        y,
        z,
        t_sum: t,
        abs_sum: sums.abs_sum,
        stats,
    })
}

/// Smallest grid value C₂ such that the T-sum at y = clamp(C₂z², z², z⁴) is
/// strictly positive for every z in `2..=z_max`; measurement behind the
/// recorded [`DEFAULT_C2`].
pub fn measure_positive_c2(z_max: u64, grid: &[f64]) -> Option<f64> {
    'c2: for &c2 in grid {
        for z in 2..=z_max {
            let zf = z as f64;
            let y = (c2 * zf * zf).clamp(zf * zf, zf.powi(4));
            let table = rosser_weights(y, z).ok()?;
            if !table.weight_sums().t_sum.is_positive() {
                continue 'c2;
            }
        }
        return Some(c2);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_examples() {
        let t = rosser_weights(100.0, 5).unwrap();
        assert_eq!(t.lambda(1).unwrap(), 1);
        assert_eq!(t.lambda(6).unwrap(), 1); // 3·2³ = 24 < 100
        assert_eq!(t.lambda(30).unwrap(), 0); // 5·3³ = 135 ≥ 100
        assert_eq!(t.lambda(2).unwrap(), -1);
        assert_eq!(t.lambda(15).unwrap(), 0); // 5·3³ = 135 ≥ 100
        assert_eq!(t.lambda(10).unwrap(), 1); // 5·2³ = 40 < 100
        assert!(t.lambda(4).is_err());
        assert!(t.lambda(7).is_err());
    }

    #[test]
    fn sigma_examples() {
        let t = rosser_weights(100.0, 5).unwrap();
        assert_eq!(t.sigma(1).unwrap(), 1);
        for p in [2u64, 3, 5] {
            assert!(t.sigma(p).unwrap() <= 0);
        }
        // σ_6 = λ₁ + λ₂ + λ₃ + λ₆ = 1 − 1 − 1 + 1
        assert_eq!(t.sigma(6).unwrap(), 0);
        assert_eq!(t.sigma(15).unwrap(), -1);
        assert_eq!(t.sigma(30).unwrap(), 0);
    }

    #[test]
    fn sigma_nonpositive_small_grid() {
        for z in 2..=13u64 {
            let zf = z as f64;
            for y in [zf * zf, 2.0 * zf * zf, zf.powi(3), zf.powi(4)] {
                let t = rosser_weights(y, z).unwrap();
                let mut first = true;
                for (d, s) in t.divisor_sigmas() {
                    if first {
                        assert_eq!((d, s), (1, 1));
                        first = false;
                    } else {
                        assert!(s <= 0, "sigma_{d} = {s} at y={y} z={z}");
                    }
                }
            }
        }
    }

    #[test]
    fn weight_sums_z2() {
        // P = 2, divisors {1, 2}: T = 1/1 + 0/1 = 1, |λ| count 2
        let t = rosser_weights(16.0, 2).unwrap();
        assert_eq!(t.sigma(1).unwrap(), 1);
        assert_eq!(t.sigma(2).unwrap(), 0);
        let s = t.weight_sums();
        assert_eq!(s.abs_sum, 2);
        assert_eq!(s.t_sum, BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn abs_sum_bounded_by_divisors() {
        for z in [2u64, 5, 11, 19] {
            let t = rosser_weights((z * z) as f64, z).unwrap();
            assert!(t.weight_sums().abs_sum <= t.divisor_count() as u64);
        }
    }

    /// T computed through the closed form T = ∏_{p≤z} p/(p−1) · Σ λ_d/d,
    /// an independent algebraic route.
    fn t_sum_via_identity(t: &RosserWeightTable) -> BigRational {
        let mut f = BigRational::from(BigInt::from(1));
        for &p in t.primes() {
            f *= BigRational::new(BigInt::from(p), BigInt::from(p - 1));
        }
        let mut s = BigRational::zero();
        for (mask, &l) in t.lambda.iter().enumerate() {
            if l != 0 {
                s += BigRational::new(BigInt::from(l), BigInt::from(t.divisors[mask]));
            }
        }
        f * s
    }

    #[test]
    fn t_sum_matches_identity() {
        for z in [2u64, 3, 5, 11, 13] {
            for c in [1.0, 2.0, 4.0] {
                let y = (c * (z * z) as f64).min(((z * z) as f64).powi(2));
                let t = rosser_weights(y, z).unwrap();
                assert_eq!(t.weight_sums().t_sum, t_sum_via_identity(&t), "z={z} y={y}");
            }
        }
    }

    fn unit_instance(n: u64, upsilon: u64) -> SieveInstance {
        let items = (1..=n).map(SieveItem::unit).collect();
        SieveInstance::new(items, upsilon, n as f64, DensityFn::Identity, 1.0).unwrap()
    }

    #[test]
    fn instance_stats_example() {
        // n ≤ 100, Υ = 6: Legendre count 100 − 50 − 33 + 16 = 33
        let inst = unit_instance(100, 6);
        let stats = instance_stats(&inst);
        assert_eq!(stats.sifted_sum, 33.0);
        let get = |d: u64| {
            stats
                .divisor_sums
                .iter()
                .find(|&&(dd, _)| dd == d)
                .unwrap()
                .1
        };
        assert_eq!(get(1), 100.0);
        assert_eq!(get(2), 50.0);
        assert_eq!(get(3), 33.0);
        assert_eq!(get(6), 16.0);
        assert!(stats.r_observed <= 1.0);
    }

    #[test]
    fn instance_stats_empty() {
        let inst =
            SieveInstance::new(Vec::new(), 6, 1.0, DensityFn::Identity, 10.0).unwrap();
        let stats = instance_stats(&inst);
        assert_eq!(stats.sifted_sum, 0.0);
        assert!(stats.divisor_sums.iter().all(|&(_, a)| a == 0.0));
    }

    #[test]
    fn shifted_bound_example() {
        // Υ = 6 → z = 3, y = 9: λ = {1:+1, 2:−1, 3:−1, 6:0},
        // T = 1 − 1/2 = 1/2, Σ|λ| = 3, ∏(1−1/p) = 1/3:
        // bound = 100·(1/3)·(1/2) − 3 = 50/3 − 3
        let inst = unit_instance(100, 6);
        let b = shifted_lower_bound(&inst, Some(9.0)).unwrap();
        assert_eq!(b.z, 3);
        assert_eq!(b.abs_sum, 3);
        assert!((b.t_sum - 0.5).abs() < 1e-15);
        let expect = 100.0 / 3.0 * 0.5 - 3.0;
        assert!((b.bound - expect).abs() < 1e-9);
        assert!(b.bound <= b.stats.sifted_sum);
        assert!(b.bound > 0.0);
    }

    #[test]
    fn shifted_bound_degenerate() {
        let inst =
            SieveInstance::new((1..=50).map(SieveItem::unit).collect(), 1, 50.0, DensityFn::Identity, 1.0)
                .unwrap();
        let b = shifted_lower_bound(&inst, None).unwrap();
        assert_eq!(b.bound, 50.0);
        assert_eq!(b.z, 0);
    }

    #[test]
    fn shifted_bound_rejects_bad_y() {
        let inst = unit_instance(100, 6);
        // window for z = 3 is [9, 81]
        assert!(matches!(
            shifted_lower_bound(&inst, Some(8.0)),
            Err(SieveError::YOutsideWindow { .. })
        ));
        assert!(matches!(
            shifted_lower_bound(&inst, Some(82.0)),
            Err(SieveError::YOutsideWindow { .. })
        ));
    }

    #[test]
    fn shifted_bound_rejects_remainder_violation() {
        // X wildly off makes |A_d − X/f(d)| blow past R
        let items: Vec<SieveItem> = (1..=100).map(SieveItem::unit).collect();
        let inst = SieveInstance::new(items, 6, 5000.0, DensityFn::Identity, 1.0).unwrap();
        assert!(matches!(
            shifted_lower_bound(&inst, Some(9.0)),
            Err(SieveError::RemainderExceeded { .. })
        ));
    }

    #[test]
    fn monotone_in_remainder_cap() {
        let items: Vec<SieveItem> = (1..=1000).map(SieveItem::unit).collect();
        let mut last = f64::INFINITY;
        for cap in [1.0, 2.0, 5.0, 50.0] {
            let inst =
                SieveInstance::new(items.clone(), 30, 1000.0, DensityFn::Identity, cap).unwrap();
            let b = shifted_lower_bound(&inst, Some(25.0)).unwrap();
            assert!(b.bound <= last);
            last = b.bound;
        }
    }

    #[test]
    fn instance_validation() {
        assert!(matches!(
            SieveInstance::new(Vec::new(), 12, 1.0, DensityFn::Identity, 1.0),
            Err(SieveError::NotSquarefree { upsilon: 12 })
        ));
        assert!(SieveInstance::new(Vec::new(), 6, 0.0, DensityFn::Identity, 1.0).is_err());
        assert!(SieveInstance::new(
            vec![SieveItem { id: 1, multiplicity: 0, weight: 1.0 }],
            6,
            1.0,
            DensityFn::Identity,
            1.0
        )
        .is_err());
        assert!(SieveInstance::new(
            vec![SieveItem { id: 1, multiplicity: 1, weight: -1.0 }],
            6,
            1.0,
            DensityFn::Identity,
            1.0
        )
        .is_err());
        // f(2) = 1.5 < 2 violates f(d) ≥ d
        assert!(matches!(
            SieveInstance::new(
                Vec::new(),
                2,
                1.0,
                DensityFn::PrimeValues(vec![(2, 1.5)]),
                1.0
            ),
            Err(SieveError::DensityTooSmall { .. })
        ));
        // missing prime value
        assert!(matches!(
            SieveInstance::new(
                Vec::new(),
                6,
                1.0,
                DensityFn::PrimeValues(vec![(2, 2.0)]),
                1.0
            ),
            Err(SieveError::DensityIncomplete { .. })
        ));
    }

    #[test]
    fn rosser_rejects_out_of_range() {
        assert!(matches!(rosser_weights(1.0, 5), Err(SieveError::BadY { .. })));
        assert!(matches!(rosser_weights(10.0, 1), Err(SieveError::BadZ { .. })));
        assert!(matches!(
            rosser_weights(10.0, MAX_SIEVE_Z + 1),
            Err(SieveError::BadZ { .. })
        ));
    }

    #[test]
    fn default_c2_is_recorded_minimum_grid_value() {
        // positivity already holds at the first grid point
        let measured = measure_positive_c2(30, &[1.0, 2.0, 4.0, 8.0]).unwrap();
        assert_eq!(measured, 1.0);
        // and the recorded default keeps T positive everywhere
        for z in 2..=30u64 {
            let t = rosser_weights(default_y(z), z).unwrap();
            assert!(t.weight_sums().t_sum.is_positive(), "z = {z}");
        }
    }
}
