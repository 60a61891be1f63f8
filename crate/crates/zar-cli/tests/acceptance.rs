//! The acceptance gate: every check suite must pass at the default seed.
//! Each test prints one machine-readable verdict line.

use zar_cli::suite::{run_one, DEFAULT_SEED};

fn gate(name: &str) {
    let r = run_one(name, DEFAULT_SEED).expect("suite must run to completion");
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    println!(
        "{verdict} {}: {} checks, {} violations",
        r.name, r.checked, r.violations
    );
    for note in &r.notes {
        println!("  note: {note}");
    }
    for example in &r.examples {
        println!("  violation: {example}");
    }
    assert!(
        r.passed(),
        "suite {} reported {} violations out of {} checks",
        r.name,
        r.violations,
        r.checked
    );
}

#[test]
fn finite_poset_closures_factor_through_the_patch_closure() {
    gate("poset-closures");
}

#[test]
fn dual_posets_swap_the_specialization_order() {
    gate("poset-duality");
}

#[test]
fn principal_ultrafilters_recover_their_centers() {
    gate("ultrafilter-primes");
}

#[test]
fn patch_closure_adds_exactly_the_generic_point() {
    gate("patch-closure");
}

#[test]
fn pullback_families_cover_the_trivial_extension_locus() {
    gate("pullback-covers");
}

#[test]
fn function_ring_axioms_and_content_inclusions_hold() {
    gate("kr-axioms");
}

#[test]
fn function_ring_membership_sees_only_the_hat() {
    gate("kr-hat");
}

#[test]
fn finite_type_equality_and_separation_are_decidable() {
    gate("star-paths");
}

#[test]
fn wedge_operations_cancel_on_finitely_generated_ideals() {
    gate("eab");
}

#[test]
fn wedge_images_are_stable_under_the_hat_completion() {
    gate("wedge-hat");
}

#[test]
fn principal_ideal_bases_are_vacant() {
    gate("vacancy");
}

#[test]
fn equal_patch_closures_give_equal_intersection_rings() {
    gate("ring-agreement");
}
