//! Dirichlet characters mod q, represented as exponent vectors over the
//! unit-group generators. Values are exact roots of unity; floating-point
//! conversion happens only at module boundaries.
//!
//! Besides enumeration and evaluation this module computes conductors,
//! induces characters to larger moduli, and builds the distinguished
//! subgroup Φ*(q) = {χ^{E(q)/s(φ(q))}}.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use thiserror::Error;

use crate::arith::{factor, gcd, lcm};
use crate::unitgroup::{ComponentKind, UnitGroup, UnitGroupError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CharacterError {
    #[error("modulus {m} does not divide {q}")]
    NotDivisible { m: u64, q: u64 },
    #[error("exponent vector has wrong shape for modulus {q}")]
    BadExponents { q: u64 },
    #[error(transparent)]
    Group(#[from] UnitGroupError),
}

/// An exact root of unity e^{2πik/m} in lowest terms, or the distinguished
/// zero (the value of a character off the units).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootOfUnity {
    Zero,
    /// e^{2πi·num/den} with 0 ≤ num < den and gcd(num, den) = 1 (num = 0
    /// forces den = 1).
    Root { num: u64, den: u64 },
}

impl RootOfUnity {
    pub fn one() -> Self {
        RootOfUnity::Root { num: 0, den: 1 }
    }

    /// Reduce k/m mod 1 to lowest terms.
    pub fn from_angle(k: u64, m: u64) -> Self {
        assert!(m > 0, "denominator must be positive");
        let k = k % m;
        if k == 0 {
            return Self::one();
        }
        let g = gcd(k, m);
        RootOfUnity::Root { num: k / g, den: m / g }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, RootOfUnity::Zero)
    }

    pub fn is_one(&self) -> bool {
        matches!(self, RootOfUnity::Root { num: 0, .. })
    }

    /// (numerator, denominator) of the angle, reduced; `None` for zero.
    pub fn angle(&self) -> Option<(u64, u64)> {
        match *self {
            RootOfUnity::Zero => None,
            RootOfUnity::Root { num, den } => Some((num, den)),
        }
    }

    /// Multiplicative order as a root of unity; `None` for zero.
    pub fn order(&self) -> Option<u64> {
        self.angle().map(|(_, den)| den)
    }

    pub fn mul(self, other: Self) -> Self {
        match (self, other) {
            (RootOfUnity::Root { num: n1, den: d1 }, RootOfUnity::Root { num: n2, den: d2 }) => {
                let l = lcm(d1, d2);
                let t = ((n1 as u128 * (l / d1) as u128 + n2 as u128 * (l / d2) as u128)
                    % l as u128) as u64;
                Self::from_angle(t, l)
            }
            _ => RootOfUnity::Zero,
        }
    }

    pub fn pow(self, k: u64) -> Self {
        match self {
            RootOfUnity::Zero => RootOfUnity::Zero,
            RootOfUnity::Root { num, den } => {
                Self::from_angle(((num as u128 * k as u128) % den as u128) as u64, den)
            }
        }
    }

    /// Complex conjugate (= inverse on the unit circle).
    pub fn conj(self) -> Self {
        match self {
            RootOfUnity::Zero => RootOfUnity::Zero,
            RootOfUnity::Root { num, den } => Self::from_angle(den - num, den),
        }
    }

    pub fn to_complex(self) -> Complex64 {
        match self {
            RootOfUnity::Zero => Complex64::new(0.0, 0.0),
            RootOfUnity::Root { num: 0, .. } => Complex64::new(1.0, 0.0),
            RootOfUnity::Root { num: 1, den: 2 } => Complex64::new(-1.0, 0.0),
            RootOfUnity::Root { num: 1, den: 4 } => Complex64::new(0.0, 1.0),
            RootOfUnity::Root { num: 3, den: 4 } => Complex64::new(0.0, -1.0),
            RootOfUnity::Root { num, den } => {
                let theta = 2.0 * std::f64::consts::PI * num as f64 / den as f64;
                Complex64::new(theta.cos(), theta.sin())
            }
        }
    }
}

/// The order-th roots of unity as complex doubles, indexed by angle
/// numerator. Conjugate symmetry is exact (`roots[n − t]` is the bitwise
/// conjugate of `roots[t]`) and the quarter points are exact.
pub fn unit_roots(order: u64) -> Vec<Complex64> {
    let n = order as usize;
    let mut out = vec![Complex64::new(1.0, 0.0); n.max(1)];
    for t in 1..=n / 2 {
        let v = if 2 * t == n {
            Complex64::new(-1.0, 0.0)
        } else if 4 * t == n {
            Complex64::new(0.0, 1.0)
        } else {
            let theta = 2.0 * std::f64::consts::PI * t as f64 / n as f64;
            Complex64::new(theta.cos(), theta.sin())
        };
        out[t] = v;
        if t != n - t {
            out[n - t] = v.conj();
        }
    }
    out
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RootOfUnity::Zero => write!(f, "0"),
            RootOfUnity::Root { num: 0, .. } => write!(f, "1"),
            RootOfUnity::Root { num: 1, den: 2 } => write!(f, "-1"),
            RootOfUnity::Root { num, den } => write!(f, "e({num}/{den})"),
        }
    }
}

/// The character group Φ(q) of a fixed modulus, sharing one unit-group
/// decomposition across all its characters.
#[derive(Debug, Clone)]
pub struct CharacterGroup {
    group: Arc<UnitGroup>,
}

/// A Dirichlet character mod q: the exponent vector (e_j) against the
/// unit-group generators, with its order cached.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    exponents: Vec<u64>,
    order: u64,
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.exponents == other.exponents
    }
}

impl Eq for DirichletCharacter {}

fn order_of_exponents(group: &UnitGroup, exponents: &[u64]) -> u64 {
    group
        .components()
        .iter()
        .zip(exponents)
        .fold(1u64, |acc, (c, &e)| lcm(acc, c.order() / gcd(e, c.order())))
}

impl CharacterGroup {
    /// Character group for modulus q ≥ 1 (q = 1 carries only the trivial
    /// character).
    pub fn new(q: u64) -> Result<Self, CharacterError> {
        let group = if q == 1 {
            UnitGroup::trivial()
        } else {
            UnitGroup::decompose(q)?
        };
        Ok(CharacterGroup { group: Arc::new(group) })
    }

    pub fn from_group(group: Arc<UnitGroup>) -> Self {
        CharacterGroup { group }
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus()
    }

    pub fn unit_group(&self) -> &Arc<UnitGroup> {
        &self.group
    }

    pub fn character(&self, exponents: Vec<u64>) -> Result<DirichletCharacter, CharacterError> {
        let comps = self.group.components();
        if exponents.len() != comps.len()
            || exponents.iter().zip(comps).any(|(&e, c)| e >= c.order())
        {
            return Err(CharacterError::BadExponents { q: self.modulus() });
        }
        let order = order_of_exponents(&self.group, &exponents);
        Ok(DirichletCharacter { group: Arc::clone(&self.group), exponents, order })
    }

    pub fn principal(&self) -> DirichletCharacter {
        let exponents = vec![0; self.group.components().len()];
        DirichletCharacter { group: Arc::clone(&self.group), exponents, order: 1 }
    }

    /// All φ(q) characters, exponent vectors in lexicographic order.
    pub fn enumerate(&self) -> Vec<DirichletCharacter> {
        let orders: Vec<u64> = self.group.components().iter().map(|c| c.order()).collect();
        let mut out = Vec::with_capacity(self.group.phi() as usize);
        let mut e = vec![0u64; orders.len()];
        loop {
            out.push(DirichletCharacter {
                group: Arc::clone(&self.group),
                exponents: e.clone(),
                order: order_of_exponents(&self.group, &e),
            });
            let mut j = orders.len();
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                e[j] += 1;
                if e[j] < orders[j] {
                    break;
                }
                e[j] = 0;
            }
        }
    }

    /// The exponent E(q)/s(φ(q)) of the Φ* power map.
    pub fn phi_star_exponent(&self) -> u64 {
        if self.modulus() == 1 {
            return 1;
        }
        let rad_phi = factor(self.group.phi()).expect("phi >= 1").radical();
        debug_assert_eq!(self.group.exponent() % rad_phi, 0);
        self.group.exponent() / rad_phi
    }

    /// Φ*(q): the image of χ ↦ χ^{E(q)/s(φ(q))}, deduplicated, in
    /// lexicographic exponent order.
    pub fn phi_star(&self) -> Vec<DirichletCharacter> {
        let kappa = self.phi_star_exponent();
        let orders: Vec<u64> = self.group.components().iter().map(|c| c.order()).collect();
        let mut image: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut e = vec![0u64; orders.len()];
        loop {
            let mapped: Vec<u64> = e
                .iter()
                .zip(&orders)
                .map(|(&ej, &nj)| ((ej as u128 * kappa as u128) % nj as u128) as u64)
                .collect();
            image.insert(mapped);
            let mut j = orders.len();
            let mut done = false;
            loop {
                if j == 0 {
                    done = true;
                    break;
                }
                j -= 1;
                e[j] += 1;
                if e[j] < orders[j] {
                    break;
                }
                e[j] = 0;
            }
            if done {
                break;
            }
        }
        image
            .into_iter()
            .map(|exponents| {
                let order = order_of_exponents(&self.group, &exponents);
                DirichletCharacter { group: Arc::clone(&self.group), exponents, order }
            })
            .collect()
    }
}

impl DirichletCharacter {
    /// The trivial character of modulus 1 (identically 1; gives the
    /// classical ψ₁ when fed to the psi evaluator).
    pub fn modulus_one() -> Self {
        DirichletCharacter {
            group: Arc::new(UnitGroup::trivial()),
            exponents: Vec::new(),
            order: 1,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus()
    }

    pub fn group(&self) -> &Arc<UnitGroup> {
        &self.group
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Least k ≥ 1 with χ^k principal.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// Exact value χ(a): a root of unity on units, zero otherwise.
    pub fn eval(&self, a: u64) -> RootOfUnity {
        let q = self.modulus();
        if q == 1 {
            return RootOfUnity::one();
        }
        let a = a % q;
        match self.group.dlog(a) {
            None => RootOfUnity::Zero,
            Some(digits) => RootOfUnity::from_angle(self.angle_numerator(&digits), self.group.exponent()),
        }
    }

    /// Angle numerator over the common denominator E(q) for a unit with the
    /// given exponent vector.
    fn angle_numerator(&self, digits: &[u64]) -> u64 {
        let e_q = self.group.exponent();
        let mut t = 0u64;
        for ((c, &ej), &xj) in self.group.components().iter().zip(&self.exponents).zip(digits) {
            let stride = e_q / c.order();
            let term = (ej as u128 * xj as u128) % c.order() as u128;
            t = ((t as u128 + term * stride as u128) % e_q as u128) as u64;
        }
        t
    }

    /// Angle numerators over denominator E(q), indexed by residue;
    /// `u64::MAX` marks non-units. One O(φ(q)) group walk, no per-element
    /// discrete logs.
    pub fn angle_table(&self) -> Vec<u64> {
        let q = self.modulus();
        let mut table = vec![u64::MAX; q as usize];
        self.group.for_each_unit(|u, digits| {
            table[u as usize] = self.angle_numerator(digits);
        });
        table
    }

    /// χ as a dense complex value table indexed by residue (zeros off the
    /// units).
    pub fn value_table(&self) -> Vec<Complex64> {
        let roots = unit_roots(self.group.exponent());
        self.angle_table()
            .into_iter()
            .map(|t| {
                if t == u64::MAX {
                    Complex64::new(0.0, 0.0)
                } else {
                    roots[t as usize]
                }
            })
            .collect()
    }

    /// χ·ψ (both mod q).
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.modulus(), other.modulus());
        let exponents: Vec<u64> = self
            .group
            .components()
            .iter()
            .zip(self.exponents.iter().zip(&other.exponents))
            .map(|(c, (&a, &b))| (a + b) % c.order())
            .collect();
        let order = order_of_exponents(&self.group, &exponents);
        DirichletCharacter { group: Arc::clone(&self.group), exponents, order }
    }

    /// χ̄ = χ⁻¹.
    pub fn conj(&self) -> Self {
        let exponents: Vec<u64> = self
            .group
            .components()
            .iter()
            .zip(&self.exponents)
            .map(|(c, &e)| if e == 0 { 0 } else { c.order() - e })
            .collect();
        DirichletCharacter {
            group: Arc::clone(&self.group),
            exponents,
            order: self.order,
        }
    }

    /// χ^k.
    pub fn pow(&self, k: u64) -> Self {
        let exponents: Vec<u64> = self
            .group
            .components()
            .iter()
            .zip(&self.exponents)
            .map(|(c, &e)| ((e as u128 * k as u128) % c.order() as u128) as u64)
            .collect();
        let order = order_of_exponents(&self.group, &exponents);
        DirichletCharacter { group: Arc::clone(&self.group), exponents, order }
    }

    /// True when χ is trivial on the kernel of (Z/q)ˣ → (Z/m)ˣ, i.e. χ is
    /// induced by a character mod m. Tested on the kernel generators of
    /// each CRT component, so no unit enumeration is needed.
    pub fn induced_from(&self, m: u64) -> Result<bool, CharacterError> {
        let q = self.modulus();
        if m == 0 || q % m != 0 {
            return Err(CharacterError::NotDivisible { m, q });
        }
        Ok(self.trivial_on_kernel(m))
    }

    fn trivial_on_kernel(&self, m: u64) -> bool {
        for (c, &e) in self.group.components().iter().zip(&self.exponents) {
            let p = c.prime();
            // p-adic valuation of m
            let mut pc = 1u64;
            {
                let mut mm = m;
                while mm % p == 0 {
                    mm /= p;
                    pc *= p;
                }
            }
            let ok = match c.kind() {
                ComponentKind::OddCyclic => {
                    // kernel generated by g^{φ(p^c)}
                    let phi_pc = if pc == 1 { 1 } else { pc / p * (p - 1) };
                    (e as u128 * phi_pc as u128) % c.order() as u128 == 0
                }
                ComponentKind::Four | ComponentKind::TwoSign => {
                    // −1 (resp. 3 mod 4) survives reduction only when 4 | m
                    pc >= 4 || e == 0
                }
                ComponentKind::TwoCyclic => {
                    // kernel of ⟨5⟩ under reduction mod 2^c is ⟨5^{2^{c-2}}⟩
                    if pc >= 4 {
                        let stride = (pc / 4) as u128;
                        (e as u128 * stride) % c.order() as u128 == 0
                    } else {
                        e == 0
                    }
                }
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// The conductor: the least m | q such that χ is trivial on every unit
    /// ≡ 1 (mod m). Divisors are scanned ascending; m = q always passes.
    pub fn conductor(&self) -> u64 {
        let q = self.modulus();
        if q == 1 {
            return 1;
        }
        for m in factor(q).expect("q >= 1").divisors() {
            if self.trivial_on_kernel(m) {
                return m;
            }
        }
        unreachable!("a character mod q is induced by itself");
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus()
    }

    /// The character mod `q` (a multiple of this modulus) that agrees with
    /// χ on units coprime to q. Conductor is preserved.
    pub fn induce(&self, q: u64) -> Result<DirichletCharacter, CharacterError> {
        let m = self.modulus();
        if m == 0 || q % m != 0 {
            return Err(CharacterError::NotDivisible { m, q });
        }
        let target = CharacterGroup::new(q)?;
        let exponents: Vec<u64> = target
            .unit_group()
            .components()
            .iter()
            .map(|c| {
                // lifted generator is a unit mod q, hence a unit mod m
                let v = self.eval(c.lifted_generator() % m.max(1));
                let (num, den) = v.angle().expect("character value on a unit");
                debug_assert_eq!(c.order() % den, 0);
                num * (c.order() / den)
            })
            .collect();
        target.character(exponents)
    }

    /// The primitive character mod conductor(χ) that induces χ.
    pub fn primitive_part(&self) -> Result<DirichletCharacter, CharacterError> {
        let f = self.conductor();
        if f == 1 {
            return Ok(CharacterGroup::new(1)?.principal());
        }
        let q = self.modulus();
        let sub = CharacterGroup::new(f)?;
        let exponents: Vec<u64> = sub
            .unit_group()
            .components()
            .iter()
            .map(|c| {
                // lift the generator to a residue coprime to q; χ takes the
                // same value on every unit in that class mod f
                let mut a = c.lifted_generator();
                while gcd(a, q) != 1 {
                    a += f;
                }
                let v = self.eval(a);
                let (num, den) = v.angle().expect("unit value");
                debug_assert_eq!(c.order() % den, 0);
                num * (c.order() / den)
            })
            .collect();
        sub.character(exponents)
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi_{}[", self.modulus())?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// All φ(q) characters mod q, q ≥ 2, in deterministic (lexicographic) order.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>, CharacterError> {
    if q < 2 {
        return Err(UnitGroupError::ModulusTooSmall { q, min: 2 }.into());
    }
    Ok(CharacterGroup::new(q)?.enumerate())
}

/// Exact evaluation χ(a).
pub fn char_eval(chi: &DirichletCharacter, a: u64) -> RootOfUnity {
    chi.eval(a)
}

/// (order of χ, whether χ is principal).
pub fn char_order(chi: &DirichletCharacter) -> (u64, bool) {
    (chi.order(), chi.is_principal())
}

/// Conductor of χ.
pub fn conductor(chi: &DirichletCharacter) -> u64 {
    chi.conductor()
}

/// Induce a character mod m to a multiple modulus q.
pub fn induce(chi: &DirichletCharacter, q: u64) -> Result<DirichletCharacter, CharacterError> {
    chi.induce(q)
}

/// Φ*(q) for q ≥ 2.
pub fn phi_star(q: u64) -> Result<Vec<DirichletCharacter>, CharacterError> {
    if q < 2 {
        return Err(UnitGroupError::ModulusTooSmall { q, min: 2 }.into());
    }
    Ok(CharacterGroup::new(q)?.phi_star())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_algebra() {
        let one = RootOfUnity::one();
        let half = RootOfUnity::from_angle(1, 2);
        assert!(one.is_one());
        assert_eq!(half.mul(half), one);
        assert_eq!(half.pow(3), half);
        assert_eq!(RootOfUnity::from_angle(5, 10), half);
        assert_eq!(RootOfUnity::from_angle(2, 6), RootOfUnity::from_angle(1, 3));
        let third = RootOfUnity::from_angle(1, 3);
        assert_eq!(third.mul(third.conj()), one);
        assert_eq!(RootOfUnity::Zero.mul(one), RootOfUnity::Zero);
        let v = third.to_complex();
        assert!((v.re + 0.5).abs() < 1e-15);
        assert!((v.im - (3f64.sqrt() / 2.0)).abs() < 1e-15);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_characters(3).unwrap().len(), 2);
        assert_eq!(enumerate_characters(8).unwrap().len(), 4);
        let chars16 = enumerate_characters(16).unwrap();
        assert_eq!(chars16.len(), 8);
        let mut orders: Vec<u64> = chars16.iter().map(|c| c.order()).collect();
        orders.sort_unstable();
        // C2 x C4: element orders 1,2,2,2,4,4,4,4... in the dual group
        assert_eq!(orders, vec![1, 2, 2, 2, 4, 4, 4, 4]);
        assert!(enumerate_characters(1).is_err());
    }

    #[test]
    fn eval_examples() {
        let g3 = CharacterGroup::new(3).unwrap();
        let chars = g3.enumerate();
        let principal = &chars[0];
        let eta = &chars[1];
        assert!(principal.is_principal());
        assert!(principal.eval(2).is_one());
        assert_eq!(eta.eval(2), RootOfUnity::from_angle(1, 2));
        assert_eq!(eta.eval(1), RootOfUnity::one());

        // any character mod 6 vanishes at 3
        for chi in enumerate_characters(6).unwrap() {
            assert!(chi.eval(3).is_zero());
        }
    }

    #[test]
    fn eval_is_multiplicative() {
        for q in 2..60u64 {
            for chi in enumerate_characters(q).unwrap() {
                for a in 1..q {
                    for b in 1..q {
                        let lhs = chi.eval(a * b % q);
                        let rhs = chi.eval(a).mul(chi.eval(b));
                        assert_eq!(lhs, rhs, "q={q} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        let chars3 = enumerate_characters(3).unwrap();
        assert_eq!(char_order(&chars3[0]), (1, true));
        assert_eq!(char_order(&chars3[1]), (2, false));
        let chars16 = enumerate_characters(16).unwrap();
        assert!(chars16.iter().any(|c| c.order() == 4));
        for c in &chars16 {
            // order is the least k with chi^k principal
            let k = c.order();
            assert!(c.pow(k).is_principal());
            for j in 1..k {
                assert!(!c.pow(j).is_principal(), "{c} at {j}");
            }
        }
    }

    /// Brute-force conductor: smallest m | q with χ constant (= 1) on all
    /// units ≡ 1 mod m.
    fn conductor_brute(chi: &DirichletCharacter) -> u64 {
        let q = chi.modulus();
        'm: for m in factor(q).unwrap().divisors() {
            let mut a = 1;
            while a <= q {
                if gcd(a, q) == 1 && !chi.eval(a).is_one() {
                    continue 'm;
                }
                a += m;
            }
            return m;
        }
        q
    }

    #[test]
    fn conductor_examples() {
        let g6 = CharacterGroup::new(6).unwrap();
        for chi in g6.enumerate() {
            let expect = if chi.is_principal() { 1 } else { 3 };
            assert_eq!(chi.conductor(), expect);
        }
        // quadratic character mod 9 has conductor 3
        let g9 = CharacterGroup::new(9).unwrap();
        let quad = g9
            .enumerate()
            .into_iter()
            .find(|c| c.order() == 2)
            .unwrap();
        assert_eq!(quad.eval(2), RootOfUnity::from_angle(1, 2));
        assert_eq!(quad.conductor(), 3);
    }

    #[test]
    fn conductor_matches_brute_force() {
        // range chosen to cover 2^8 and 2^7·3 (the deep 2-adic kernels)
        for q in 2..=384u64 {
            for chi in enumerate_characters(q).unwrap() {
                assert_eq!(chi.conductor(), conductor_brute(&chi), "q={q} chi={chi}");
            }
        }
    }

    #[test]
    fn induce_examples() {
        let g3 = CharacterGroup::new(3).unwrap();
        let chars = g3.enumerate();
        let principal6 = chars[0].induce(6).unwrap();
        assert!(principal6.is_principal());
        assert_eq!(principal6.modulus(), 6);

        let eta6 = chars[1].induce(6).unwrap();
        assert!(!eta6.is_principal());
        assert_eq!(eta6.conductor(), 3);
        // agrees with the mod-3 character on units mod 6
        for a in [1u64, 5] {
            assert_eq!(eta6.eval(a), chars[1].eval(a % 3));
        }

        assert!(chars[1].induce(7).is_err());
    }

    #[test]
    fn induce_primitive_roundtrip() {
        for m in 2..=40u64 {
            for chi in enumerate_characters(m).unwrap() {
                if !chi.is_primitive() {
                    continue;
                }
                let mut q = m;
                while q <= 300 {
                    let lifted = chi.induce(q).unwrap();
                    assert_eq!(lifted.conductor(), m);
                    let back = lifted.primitive_part().unwrap();
                    assert_eq!(back, chi, "m={m} q={q}");
                    q += m;
                }
            }
        }
    }

    #[test]
    fn phi_star_examples() {
        // q = 7: exponent E/s(phi) = 1, so the image is everything
        let s7 = phi_star(7).unwrap();
        assert_eq!(s7.len(), 6);

        // q = 16: E = 4, s(phi) = 2, exponent 2: squares of C2 x C4 => 2
        let s16 = phi_star(16).unwrap();
        assert_eq!(s16.len(), 2);
        assert!(s16.iter().any(|c| c.is_principal()));

        let s3 = phi_star(3).unwrap();
        assert_eq!(s3.len(), 2);
    }

    #[test]
    fn phi_star_is_subgroup_small() {
        for q in 2..=120u64 {
            let stars = phi_star(q).unwrap();
            for a in &stars {
                assert!(stars.contains(&a.conj()), "inverse closure q={q}");
                for b in &stars {
                    assert!(stars.contains(&a.mul(b)), "product closure q={q}");
                }
            }
        }
    }

    #[test]
    fn phi_star_size_formula() {
        for q in 2..=400u64 {
            let cg = CharacterGroup::new(q).unwrap();
            let kappa = cg.phi_star_exponent();
            let expect: u64 = cg
                .unit_group()
                .components()
                .iter()
                .map(|c| c.order() / gcd(c.order(), kappa))
                .product();
            assert_eq!(cg.phi_star().len() as u64, expect, "q={q}");
        }
    }

    #[test]
    fn modulus_one_character() {
        let chi = DirichletCharacter::modulus_one();
        assert_eq!(chi.modulus(), 1);
        assert!(chi.is_principal());
        for a in 0..10 {
            assert!(chi.eval(a).is_one());
        }
        assert_eq!(chi.conductor(), 1);
    }
}
