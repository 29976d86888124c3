//! Admissible multiples: nq is an admissible multiple of q when some
//! character in Φ*(nq) is induced by a primitive character mod q, i.e. has
//! conductor exactly q. Includes the counting function A(x;q), the
//! exponent-selection rule p_i^{r_i−1} ≤ y ≤ p_i^{r_i}, and a checker for
//! the dichotomy that admissible multiples must satisfy.
//!
//! Admissibility is decided by direct enumeration of Φ*(nq) plus conductor
//! computation, the definition itself rather than any structural shortcut;
//! the dichotomy is what gets tested against it.

use thiserror::Error;

use crate::arith::{euler_phi, factor};
use crate::characters::{CharacterError, CharacterGroup, DirichletCharacter};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AdmissibleError {
    #[error("base modulus must be at least 2, got {q}")]
    BaseTooSmall { q: u64 },
    #[error("{q} does not divide {nq}")]
    NotAMultiple { q: u64, nq: u64 },
    #[error("parameter y must exceed 1, got {y}")]
    BadY { y: f64 },
    #[error("bound requires q <= z, got q = {q}, z = {z}")]
    ZBelowBase { q: u64, z: f64 },
    #[error("derived modulus overflowed 64 bits for q = {q}")]
    ModulusOverflow { q: u64 },
    #[error(transparent)]
    Character(#[from] CharacterError),
}

/// Outcome of an admissibility test, carrying the witnessing character
/// when one exists: a member of Φ*(nq) with conductor exactly q.
#[derive(Debug, Clone)]
pub struct AdmissibilityReport {
    base: u64,
    multiple: u64,
    witness: Option<DirichletCharacter>,
}

impl AdmissibilityReport {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn multiple(&self) -> u64 {
        self.multiple
    }

    pub fn is_admissible(&self) -> bool {
        self.witness.is_some()
    }

    pub fn witness(&self) -> Option<&DirichletCharacter> {
        self.witness.as_ref()
    }
}

/// Scan Φ*(nq) in its deterministic order for a character of conductor
/// exactly q; the first hit becomes the witness.
pub fn is_admissible_multiple(q: u64, nq: u64) -> Result<AdmissibilityReport, AdmissibleError> {
    if q < 2 {
        return Err(AdmissibleError::BaseTooSmall { q });
    }
    if nq == 0 || nq % q != 0 {
        return Err(AdmissibleError::NotAMultiple { q, nq });
    }
    let group = CharacterGroup::new(nq)?;
    let witness = group
        .phi_star()
        .into_iter()
        .find(|chi| chi.conductor() == q);
    Ok(AdmissibilityReport { base: q, multiple: nq, witness })
}

/// The admissible multiples of q not exceeding x, ascending.
pub fn admissible_multiples(x: u64, q: u64) -> Result<Vec<AdmissibilityReport>, AdmissibleError> {
    if q < 2 {
        return Err(AdmissibleError::BaseTooSmall { q });
    }
    let mut out = Vec::new();
    let mut nq = q;
    while nq <= x {
        let report = is_admissible_multiple(q, nq)?;
        if report.is_admissible() {
            out.push(report);
        }
        nq += q;
    }
    Ok(out)
}

/// A(x;q): the number of admissible multiples of q not exceeding x.
pub fn count_admissible(x: u64, q: u64) -> Result<u64, AdmissibleError> {
    Ok(admissible_multiples(x, q)?.len() as u64)
}

/// Exponent choice r₁,…,r_t for the primes of q and the derived modulus
/// D = φ²(q)·p₁^{r₁}⋯p_t^{r_t}.
#[derive(Debug, Clone, PartialEq)]
pub struct CraftyParams {
    base: u64,
    y: f64,
    /// (p_i, r_i, p_i^{r_i}), primes ascending.
    prime_powers: Vec<(u64, u32, u64)>,
    modulus: u64,
}

impl CraftyParams {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn prime_powers(&self) -> &[(u64, u32, u64)] {
        &self.prime_powers
    }

    /// D = φ²(q)·∏ p_i^{r_i}.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Choose the minimal r_i with p_i^{r_i} ≥ y; this satisfies
/// p_i^{r_i−1} ≤ y ≤ p_i^{r_i}. When y is exactly a power of p_i both the
/// matching r and r + 1 qualify; the minimal choice is taken.
pub fn choose_exponents(q: u64, y: f64) -> Result<CraftyParams, AdmissibleError> {
    if q < 2 {
        return Err(AdmissibleError::BaseTooSmall { q });
    }
    if !(y > 1.0) || !y.is_finite() {
        return Err(AdmissibleError::BadY { y });
    }
    let overflow = AdmissibleError::ModulusOverflow { q };
    let mut prime_powers = Vec::new();
    for &(p, _) in factor(q).expect("q >= 2").factors() {
        let mut r = 1u32;
        let mut pw = p;
        while (pw as f64) < y {
            pw = pw.checked_mul(p).ok_or_else(|| overflow.clone())?;
            r += 1;
        }
        debug_assert!(((pw / p) as f64) <= y || r == 1);
        prime_powers.push((p, r, pw));
    }
    let phi = euler_phi(q);
    let mut modulus = phi.checked_mul(phi).ok_or_else(|| overflow.clone())?;
    for &(_, _, pw) in &prime_powers {
        modulus = modulus.checked_mul(pw).ok_or_else(|| overflow.clone())?;
    }
    Ok(CraftyParams { base: q, y, prime_powers, modulus })
}

/// true ⇔ D ≤ z³·y^{log z}; requires q ≤ z (the regime where the bound
/// chain φ²(q)∏p^r ≤ q²y^t z ≤ z³y^{log z} applies).
pub fn modulus_bound_check(params: &CraftyParams, y: f64, z: f64) -> Result<bool, AdmissibleError> {
    if z < params.base as f64 {
        return Err(AdmissibleError::ZBelowBase { q: params.base, z });
    }
    Ok((params.modulus as f64) <= z.powi(3) * y.powf(z.ln()))
}

/// Verdict of the admissible-multiple dichotomy for one n: either (i) some
/// chosen prime power p_i^{r_i} divides n, or (ii) no prime dividing n is
/// ≡ 1 (mod D). Non-admissible multiples make the claim vacuous.
#[derive(Debug, Clone, PartialEq)]
pub struct DichotomyVerdict {
    pub base: u64,
    pub n: u64,
    pub multiple: u64,
    /// (i): p_i^{r_i} | n for some i.
    pub prime_power_divides: bool,
    /// (ii): no prime factor of n is ≡ 1 (mod D).
    pub no_prime_one_mod_d: bool,
    pub admissible: bool,
    /// admissible ⇒ (i) ∨ (ii); vacuously true otherwise.
    pub holds: bool,
}

impl DichotomyVerdict {
    /// The claim imposes nothing on non-admissible multiples.
    pub fn is_vacuous(&self) -> bool {
        !self.admissible
    }
}

/// Evaluate both arms of the dichotomy at n and test the claim on the
/// multiple nq.
pub fn craftylem_dichotomy(
    q: u64,
    params: &CraftyParams,
    n: u64,
) -> Result<DichotomyVerdict, AdmissibleError> {
    assert_eq!(q, params.base, "params were built for a different base");
    if n == 0 {
        return Err(AdmissibleError::NotAMultiple { q, nq: 0 });
    }
    let nq = q
        .checked_mul(n)
        .ok_or(AdmissibleError::ModulusOverflow { q })?;
    let prime_power_divides = dichotomy_first_arm(params, n);
    let no_prime_one_mod_d = dichotomy_second_arm(params, n);
    let admissible = is_admissible_multiple(q, nq)?.is_admissible();
    let holds = !admissible || prime_power_divides || no_prime_one_mod_d;
    Ok(DichotomyVerdict {
        base: q,
        n,
        multiple: nq,
        prime_power_divides,
        no_prime_one_mod_d,
        admissible,
        holds,
    })
}

/// (i): some chosen p_i^{r_i} divides n.
pub fn dichotomy_first_arm(params: &CraftyParams, n: u64) -> bool {
    params.prime_powers.iter().any(|&(_, _, pw)| n % pw == 0)
}

/// (ii): no prime factor of n is ≡ 1 (mod D).
pub fn dichotomy_second_arm(params: &CraftyParams, n: u64) -> bool {
    let d = params.modulus;
    factor(n)
        .expect("n >= 1")
        .factors()
        .iter()
        .all(|&(p, _)| p % d != 1 % d)
}
