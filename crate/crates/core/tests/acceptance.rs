//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line with the measured details (visible under `--nocapture`).

use lamroot_core::verify::{self, CheckReport};

fn assert_criterion(criterion: &str, reports: &[CheckReport]) {
    for r in reports {
        println!(
            "{criterion}: {} [{}] in {:.2?}: {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.elapsed,
            r.details
        );
    }
    for r in reports {
        assert!(r.passed, "{criterion} failed at {}: {}", r.name, r.details);
    }
}

/// Criterion 1: σ₁ = 1, σ_n ≤ 0 for n ≥ 2, exhaustive over z ≤ 30 and
/// y ∈ {z², 2z², z³, z⁴}.
#[test]
fn acceptance_1_rosser_weight_correctness() {
    assert_criterion("criterion 1", &[verify::check_rosser_sigma()]);
}

/// Criterion 2: on 200 seeded instances the shifted bound never exceeds
/// the exact sifted sum; strictly positive on N = 10⁵, Υ = 2310, y = z².
#[test]
fn acceptance_2_shifted_sieve_soundness() {
    assert_criterion("criterion 2", &[verify::check_sieve_soundness(42)]);
}

/// Criterion 3: exhaustive dichotomy for q ∈ 3..30, y ∈ {2,3,5}, n ≤ 500.
#[test]
fn acceptance_3_dichotomy_exhaustive() {
    assert_criterion("criterion 3", &[verify::check_craftylem()]);
}

/// Criterion 4: c₀ by formula equals brute force, exactly, 2 ≤ q ≤ 2000.
#[test]
fn acceptance_4_c0_formula_vs_brute_force() {
    assert_criterion("criterion 4", &[verify::check_lambda_density_oracle()]);
}

/// Criterion 5: orthogonality both directions to 10⁻⁹ for q ≤ 500;
/// conductor/induce round trip exact for primitive moduli ≤ 100 against
/// targets ≤ 1000.
#[test]
fn acceptance_5_character_algebra() {
    assert_criterion(
        "criterion 5",
        &[
            verify::check_character_orthogonality(),
            verify::check_conductor_induce(),
        ],
    );
}

/// Criterion 6: radical(E(q)) = radical(φ(q)) for 3 ≤ q ≤ 10⁴ and the
/// |Φ*(q)| component formula for q ≤ 2000.
#[test]
fn acceptance_6_phi_star_exponent_equivalence() {
    assert_criterion("criterion 6", &[verify::check_phi_star_structure()]);
}

/// Criterion 7: sweep 3 ≤ q ≤ 10⁵; every g* found below the ceiling and
/// the max ratio stays at the recorded pin (expected at q = 3).
#[test]
fn acceptance_7_grh_corollary_sweep() {
    assert_criterion("criterion 7", &[verify::check_grh_sweep(100_000)]);
}

/// Criterion 8: ψ₁ classical normalization at 10⁶ within 10⁻³ and the
/// difference identity within 10⁻⁹ relative for q ≤ 20, x ≤ 10⁴.
#[test]
fn acceptance_8_psi1_normalization_and_identity() {
    assert_criterion("criterion 8", &[verify::check_psi1()]);
}

/// Criterion 9: frozen spot values.
#[test]
fn acceptance_9_spot_values() {
    assert_criterion("criterion 9", &[verify::check_spot_values()]);
}
