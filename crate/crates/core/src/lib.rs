//! Least prime λ-roots and the machinery around them: unit-group
//! decompositions, Dirichlet characters with exact root-of-unity values,
//! the distinguished subgroup Φ*(q), admissible multiples, Rosser's
//! weights with the shifted-sieve lower bound, and direct evaluation of
//! the weighted Chebyshev sum ψ₁(x,χ).
//!
//! A λ-root mod q is a unit whose multiplicative order equals the group
//! exponent E(q); g*(q) is the least prime λ-root. The library computes
//! these objects exactly at desk scale and ships a verification suite
//! ([`verify`]) that exercises every structural identity it relies on.

pub mod admissible;
pub mod arith;
pub mod characters;
pub mod psi;
pub mod sieve;
pub mod unitgroup;
pub mod verify;

pub use admissible::{
    admissible_multiples, choose_exponents, count_admissible, craftylem_dichotomy,
    is_admissible_multiple, modulus_bound_check, AdmissibilityReport, AdmissibleError,
    CraftyParams, DichotomyVerdict,
};
pub use arith::{
    carmichael, euler_phi, factor, iter_log, mangoldt, omega, primes_up_to, radical, ArithError,
    FactorCache, Factorization,
};
pub use characters::{
    char_eval, char_order, conductor, enumerate_characters, induce, phi_star, CharacterError,
    CharacterGroup, DirichletCharacter, RootOfUnity,
};
pub use psi::{psi1, psi1_scaling_report, Psi1Report, Psi1Row, PsiError};
pub use sieve::{
    default_y, instance_stats, rosser_weights, shifted_lower_bound, DensityFn, InstanceStats,
    RosserWeightTable, ShiftedBound, SieveError, SieveInstance, SieveItem, WeightSums,
};
pub use unitgroup::{
    decompose, element_order, f_bound, g_star, g_star_with_ceiling, grh_ratio,
    grh_ratio_with_ceiling, is_lambda_root, lambda_density, UnitGroup, UnitGroupError,
    DEFAULT_GSTAR_CEILING,
};
pub use verify::{run_all, CheckReport, SuiteConfig};
