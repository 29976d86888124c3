//! Structure of the unit group (Z/q)ˣ: CRT decomposition into cyclic
//! components, element orders, λ-root detection, the λ-root density c₀,
//! the least prime λ-root g*(q), and the conditional bound f(q,σ).
//!
//! A λ-root mod q is a unit whose multiplicative order equals the group
//! exponent E(q) (the Carmichael function); it generalizes primitive roots
//! to moduli without them.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_rational::Ratio;
use thiserror::Error;

use crate::arith::{
    self, carmichael_of, euler_phi_of, factor, gcd, is_prime, iter_log, mul_mod, pow_mod,
    Factorization,
};

/// Default search ceiling for [`g_star`]. No unconditional bound on the
/// least prime λ-root is known, so the search fails loudly instead of
/// looping.
pub const DEFAULT_GSTAR_CEILING: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UnitGroupError {
    #[error("modulus {q} too small; need q >= {min}")]
    ModulusTooSmall { q: u64, min: u64 },
    #[error("{a} is not coprime to {q}")]
    NotCoprime { a: u64, q: u64 },
    #[error("no prime lambda-root of modulus {q} found below ceiling {ceiling}")]
    CeilingExceeded { q: u64, ceiling: u64 },
    #[error("sigma must lie in [1/2, 1), got {sigma}")]
    SigmaOutOfRange { sigma: f64 },
}

/// How a cyclic component sits inside the CRT decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// Full unit group of an odd prime power, cyclic.
    OddCyclic,
    /// Unit group mod 4, cyclic of order 2.
    Four,
    /// The ⟨−1⟩ part of the units mod 2^e, e ≥ 3.
    TwoSign,
    /// The ⟨5⟩ part of the units mod 2^e, e ≥ 3.
    TwoCyclic,
}

/// One cyclic factor C_{n} of (Z/q)ˣ, with its generator as a residue mod
/// the prime-power modulus and the CRT lift of that generator mod q.
#[derive(Debug)]
pub struct Component {
    prime: u64,
    prime_power: u64,
    generator: u64,
    order: u64,
    kind: ComponentKind,
    lift: u64,
    baby: OnceLock<BabySteps>,
}

#[derive(Debug)]
struct BabySteps {
    step: u64,
    giant: u64, // generator^(-step) mod prime_power
    table: HashMap<u64, u64>,
}

impl Component {
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn prime_power(&self) -> u64 {
        self.prime_power
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn kind(&self) -> ComponentKind {
        self.kind
    }

    /// Generator lifted mod q: ≡ generator (mod prime_power), ≡ 1 elsewhere.
    pub fn lifted_generator(&self) -> u64 {
        self.lift
    }

    fn baby_steps(&self) -> &BabySteps {
        self.baby.get_or_init(|| {
            let m = self.prime_power;
            let step = (self.order as f64).sqrt().ceil() as u64;
            let step = step.max(1);
            let mut table = HashMap::with_capacity(step as usize);
            let mut cur = 1u64 % m;
            for j in 0..step {
                table.entry(cur).or_insert(j);
                cur = mul_mod(cur, self.generator, m);
            }
            // generator^(-step) = generator^(order - step mod order)
            let e = (self.order - step % self.order) % self.order;
            let giant = pow_mod(self.generator, e, m);
            BabySteps { step, giant, table }
        })
    }

    /// Discrete log of `b` in ⟨generator⟩ mod prime_power, baby-step/giant-step.
    fn dlog_cyclic(&self, b: u64) -> Option<u64> {
        let bs = self.baby_steps();
        let m = self.prime_power;
        let mut cur = b % m;
        let mut i = 0u64;
        while i * bs.step < self.order + bs.step {
            if let Some(&j) = bs.table.get(&cur) {
                let x = i * bs.step + j;
                if x < self.order {
                    return Some(x);
                }
                return Some(x % self.order);
            }
            cur = mul_mod(cur, bs.giant, m);
            i += 1;
        }
        None
    }
}

/// CRT cyclic decomposition of (Z/q)ˣ with per-component generators.
///
/// Components are ordered by prime (2-part first, then odd primes
/// ascending); for 8 | q the 2-part contributes the ⟨−1⟩ component followed
/// by ⟨5⟩. Every unit mod q has a unique exponent vector with respect to
/// the lifted generators.
#[derive(Debug)]
pub struct UnitGroup {
    modulus: u64,
    phi: u64,
    exponent: u64,
    components: Vec<Component>,
    exponent_factors: Factorization,
}

fn inv_mod(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) must be 1
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(m as i128) as u64
}

/// x ≡ a (mod m), x ≡ 1 (mod n) for coprime m, n; result mod m·n.
fn crt_lift(a: u64, m: u64, n: u64) -> u64 {
    if n == 1 {
        return a % m;
    }
    // x = a + m*t with  m*t ≡ 1 - a (mod n)
    let rhs = (1 + n as u128 - (a % n) as u128) % n as u128;
    let t = mul_mod(rhs as u64, inv_mod(m % n, n), n);
    ((a as u128 + m as u128 * t as u128) % (m as u128 * n as u128)) as u64
}

/// Least primitive root mod an odd prime power.
fn least_primitive_root(pp: u64, phi: u64, phi_factors: &Factorization) -> u64 {
    'g: for g in 2..pp {
        if gcd(g, pp) != 1 {
            continue;
        }
        for &(r, _) in phi_factors.factors() {
            if pow_mod(g, phi / r, pp) == 1 {
                continue 'g;
            }
        }
        return g;
    }
    unreachable!("odd prime powers always have primitive roots");
}

impl UnitGroup {
    /// Decompose (Z/q)ˣ for q ≥ 2. Each component carries the smallest
    /// generator of its canonical cyclic subgroup, so output is
    /// deterministic.
    pub fn decompose(q: u64) -> Result<Self, UnitGroupError> {
        if q < 2 {
            return Err(UnitGroupError::ModulusTooSmall { q, min: 2 });
        }
        let f = factor(q).expect("q >= 2");
        let mut components = Vec::new();
        for &(p, e) in f.factors() {
            let pp = p.pow(e);
            let rest = q / pp;
            if p == 2 {
                match e {
                    1 => {}
                    2 => components.push(Component {
                        prime: 2,
                        prime_power: 4,
                        generator: 3,
                        order: 2,
                        kind: ComponentKind::Four,
                        lift: crt_lift(3, 4, rest),
                        baby: OnceLock::new(),
                    }),
                    _ => {
                        components.push(Component {
                            prime: 2,
                            prime_power: pp,
                            generator: pp - 1,
                            order: 2,
                            kind: ComponentKind::TwoSign,
                            lift: crt_lift(pp - 1, pp, rest),
                            baby: OnceLock::new(),
                        });
                        components.push(Component {
                            prime: 2,
                            prime_power: pp,
                            generator: 5,
                            order: pp / 4,
                            kind: ComponentKind::TwoCyclic,
                            lift: crt_lift(5, pp, rest),
                            baby: OnceLock::new(),
                        });
                    }
                }
            } else {
                let phi = pp / p * (p - 1);
                let phi_factors = factor(phi).expect("phi >= 1");
                let g = least_primitive_root(pp, phi, &phi_factors);
                components.push(Component {
                    prime: p,
                    prime_power: pp,
                    generator: g,
                    order: phi,
                    kind: ComponentKind::OddCyclic,
                    lift: crt_lift(g, pp, rest),
                    baby: OnceLock::new(),
                });
            }
        }
        let exponent = carmichael_of(&f);
        let phi = euler_phi_of(&f);
        debug_assert_eq!(
            components.iter().map(|c| c.order).product::<u64>(),
            phi
        );
        debug_assert_eq!(
            components.iter().fold(1u64, |l, c| arith::lcm(l, c.order)),
            exponent
        );
        Ok(UnitGroup {
            modulus: q,
            phi,
            exponent,
            components,
            exponent_factors: factor(exponent).expect("E >= 1"),
        })
    }

    /// The trivial group mod 1; not reachable through [`UnitGroup::decompose`],
    /// which requires q ≥ 2, but needed for the modulus-1 principal
    /// character.
    pub fn trivial() -> Self {
        UnitGroup {
            modulus: 1,
            phi: 1,
            exponent: 1,
            components: Vec::new(),
            exponent_factors: factor(1).unwrap(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    /// E(q), the exponent of the group.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn exponent_factors(&self) -> &Factorization {
        &self.exponent_factors
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_unit(&self, a: u64) -> bool {
        gcd(a % self.modulus, self.modulus) == 1
    }

    /// Exponent vector (discrete log) of a unit with respect to the
    /// component generators. `None` when gcd(a, q) > 1.
    pub fn dlog(&self, a: u64) -> Option<Vec<u64>> {
        let a = a % self.modulus;
        if !self.is_unit(a) {
            return None;
        }
        let mut out = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            match comp.kind {
                ComponentKind::OddCyclic => {
                    out.push(comp.dlog_cyclic(a % comp.prime_power)?);
                }
                ComponentKind::Four => {
                    out.push(if a % 4 == 3 { 1 } else { 0 });
                }
                ComponentKind::TwoSign => {
                    out.push(if a % 4 == 3 { 1 } else { 0 });
                }
                ComponentKind::TwoCyclic => {
                    let m = comp.prime_power;
                    let mut b = a % m;
                    if b % 4 == 3 {
                        b = m - b;
                    }
                    out.push(comp.dlog_cyclic(b)?);
                }
            }
        }
        Some(out)
    }

    /// Rebuild the unit from an exponent vector.
    pub fn from_dlog(&self, digits: &[u64]) -> u64 {
        assert_eq!(digits.len(), self.components.len());
        let mut u = 1 % self.modulus;
        for (comp, &d) in self.components.iter().zip(digits) {
            u = mul_mod(u, pow_mod(comp.lift, d, self.modulus), self.modulus);
        }
        u
    }

    /// Visit every unit once as (residue, exponent vector), in
    /// lexicographic vector order (last component fastest). The visit order
    /// index equals the mixed-radix rank of the vector.
    pub fn for_each_unit<F: FnMut(u64, &[u64])>(&self, mut f: F) {
        let k = self.components.len();
        let mut digits = vec![0u64; k];
        let mut u = 1 % self.modulus;
        loop {
            f(u, &digits);
            let mut j = k;
            loop {
                if j == 0 {
                    return;
                }
                j -= 1;
                digits[j] += 1;
                u = mul_mod(u, self.components[j].lift, self.modulus);
                if digits[j] < self.components[j].order {
                    break;
                }
                digits[j] = 0;
            }
        }
    }

    /// Multiplicative order of a unit, by dividing E(q) down through its
    /// prime factors (never by naive iteration).
    pub fn order_of(&self, a: u64) -> Result<u64, UnitGroupError> {
        let q = self.modulus;
        let a = a % q;
        if !self.is_unit(a) {
            return Err(UnitGroupError::NotCoprime { a, q });
        }
        let mut ord = self.exponent;
        for &(r, _) in self.exponent_factors.factors() {
            while ord % r == 0 && pow_mod(a, ord / r, q) == 1 {
                ord /= r;
            }
        }
        Ok(ord)
    }

    /// true ⇔ the order of `a` is maximal, i.e. equals E(q).
    pub fn is_lambda_root(&self, a: u64) -> Result<bool, UnitGroupError> {
        let q = self.modulus;
        let a = a % q;
        if !self.is_unit(a) {
            return Err(UnitGroupError::NotCoprime { a, q });
        }
        for &(r, _) in self.exponent_factors.factors() {
            if pow_mod(a, self.exponent / r, q) == 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of λ-roots among the units, by inclusion–exclusion over the
    /// primes dividing E(q): Σ_{d | s(E)} μ(d) ∏_j gcd(E/d, n_j).
    pub fn lambda_root_count(&self) -> u64 {
        let primes: Vec<u64> = self
            .exponent_factors
            .factors()
            .iter()
            .map(|&(p, _)| p)
            .collect();
        let mut count = 0i128;
        for mask in 0..1u32 << primes.len() {
            let mut d = 1u64;
            let mut mu = 1i128;
            for (i, &p) in primes.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    d *= p;
                    mu = -mu;
                }
            }
            let m = self.exponent / d;
            let prod: u128 = self
                .components
                .iter()
                .map(|c| gcd(m, c.order) as u128)
                .product();
            count += mu * prod as i128;
        }
        u64::try_from(count).expect("inclusion-exclusion count is nonnegative")
    }

    /// c₀: the probability that a uniformly random unit is a λ-root, as an
    /// exact rational.
    pub fn lambda_density(&self) -> Ratio<u64> {
        Ratio::new(self.lambda_root_count(), self.phi)
    }

    /// Least prime λ-root, searching primes below `ceiling`.
    pub fn least_prime_lambda_root(&self, ceiling: u64) -> Result<u64, UnitGroupError> {
        let q = self.modulus;
        let mut p = 2u64;
        while p <= ceiling {
            if q % p != 0 && self.is_lambda_root(p % q)? {
                return Ok(p);
            }
            p = if p == 2 { 3 } else { p + 2 };
            while p <= ceiling && !is_prime(p) {
                p += 2;
            }
        }
        Err(UnitGroupError::CeilingExceeded { q, ceiling })
    }
}

/// Decompose (Z/q)ˣ; rejects q < 2.
pub fn decompose(q: u64) -> Result<UnitGroup, UnitGroupError> {
    UnitGroup::decompose(q)
}

/// Multiplicative order of a mod q (q ≥ 1); rejects gcd(a, q) > 1.
pub fn element_order(a: u64, q: u64) -> Result<u64, UnitGroupError> {
    if q == 0 {
        return Err(UnitGroupError::ModulusTooSmall { q, min: 1 });
    }
    let a = a % q.max(1);
    if gcd(a, q) != 1 {
        return Err(UnitGroupError::NotCoprime { a, q });
    }
    let exponent = arith::carmichael(q);
    let mut ord = exponent;
    for &(r, _) in factor(exponent).expect("E >= 1").factors() {
        while ord % r == 0 && pow_mod(a, ord / r, q) == 1 {
            ord /= r;
        }
    }
    Ok(ord)
}

/// true ⇔ the order of a mod q equals E(q).
pub fn is_lambda_root(a: u64, q: u64) -> Result<bool, UnitGroupError> {
    Ok(element_order(a, q)? == arith::carmichael(q))
}

/// c₀ for modulus q ≥ 2, exact.
pub fn lambda_density(q: u64) -> Result<Ratio<u64>, UnitGroupError> {
    Ok(UnitGroup::decompose(q)?.lambda_density())
}

/// g*(q): the least prime λ-root mod q, searched up to the default ceiling.
pub fn g_star(q: u64) -> Result<u64, UnitGroupError> {
    g_star_with_ceiling(q, DEFAULT_GSTAR_CEILING)
}

/// g*(q) with an explicit search ceiling. A `CeilingExceeded` error is the
/// only failure mode for q ≥ 2: it reports that the search ran out, which
/// is distinct from (never observed) nonexistence.
pub fn g_star_with_ceiling(q: u64, ceiling: u64) -> Result<u64, UnitGroupError> {
    if q < 2 {
        return Err(UnitGroupError::ModulusTooSmall { q, min: 2 });
    }
    let exponent = arith::carmichael(q);
    let exp_factors = factor(exponent).expect("E >= 1");
    let is_root = |p: u64| -> bool {
        if q % p == 0 {
            return false;
        }
        exp_factors
            .factors()
            .iter()
            .all(|&(r, _)| pow_mod(p, exponent / r, q) != 1)
    };
    let mut p = 2u64;
    while p <= ceiling {
        if is_root(p) {
            return Ok(p);
        }
        p = if p == 2 { 3 } else { p + 2 };
        while p <= ceiling && !is_prime(p) {
            p += 2;
        }
    }
    Err(UnitGroupError::CeilingExceeded { q, ceiling })
}

/// ω(φ(q)) clamped below at 1 wherever it enters a product; the clamp only
/// engages for φ(q) = 1, i.e. q ∈ {1, 2}.
pub fn omega_phi_clamped(q: u64) -> f64 {
    arith::omega(arith::euler_phi(q)).max(1) as f64
}

/// f(q,σ) = (ω(φ(q))² lg₁ω(φ(q)) · c₀⁻¹ log q)^{1/(1−σ)}, with ω clamped
/// to max(ω, 1) so small q still get finite values.
pub fn f_bound(q: u64, sigma: f64) -> Result<f64, UnitGroupError> {
    if !(0.5..1.0).contains(&sigma) {
        return Err(UnitGroupError::SigmaOutOfRange { sigma });
    }
    let group = UnitGroup::decompose(q)?;
    let m = omega_phi_clamped(q);
    let lg1 = iter_log(m, 1).expect("m >= 1");
    let c0 = group.lambda_density();
    let c0_inv = *c0.denom() as f64 / *c0.numer() as f64;
    let base = m * m * lg1 * c0_inv * (q as f64).ln();
    Ok(base.powf(1.0 / (1.0 - sigma)))
}

/// The comparison scale (ω(φ(q)) lg₁ω(φ(q)))⁴ (log q)² of the
/// GRH-conditional bound, with the small-q clamp applied.
pub fn grh_denominator(q: u64) -> f64 {
    let m = omega_phi_clamped(q);
    let lg1 = iter_log(m, 1).expect("m >= 1");
    (m * lg1).powi(4) * (q as f64).ln().powi(2)
}

/// g*(q) / ((ω(φ(q)) lg₁ω(φ(q)))⁴ (log q)²), the ratio against the
/// GRH-conditional bound shape; requires q ≥ 3.
pub fn grh_ratio(q: u64) -> Result<f64, UnitGroupError> {
    grh_ratio_with_ceiling(q, DEFAULT_GSTAR_CEILING)
}

pub fn grh_ratio_with_ceiling(q: u64, ceiling: u64) -> Result<f64, UnitGroupError> {
    if q < 3 {
        return Err(UnitGroupError::ModulusTooSmall { q, min: 3 });
    }
    let g = g_star_with_ceiling(q, ceiling)?;
    Ok(g as f64 / grh_denominator(q))
}
