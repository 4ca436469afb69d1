//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every tolerance here is exact — integer, polynomial or rational equality.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use diagram_algebra::combinatorics::{
    algebra_dimension, predicted_symmetric_count, symmetric_total_table,
};
use diagram_algebra::enumerate::enumerate;
use diagram_algebra::model::SymmetricBasis;
use diagram_algebra::symgroup::{
    involution_decomposition, involutions, odd_parts, partitions,
};
use diagram_algebra::verify::{
    check_absorption, check_character_recursion, check_disjointness, check_dimension_census,
    check_module_axiom, check_multiplicity_free, check_regression_fixtures,
    check_sequence_identities, check_symmetric_census, check_tl_bijection,
    check_twist_comparison, CheckReport, Mode,
};
use diagram_algebra::Family;

const SEED: u64 = 0xD1A6;

fn conclude(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("{criterion}: PASS");
    } else {
        println!("{criterion}: FAIL");
        panic!("{criterion} failed:\n{}", failures.join("\n"));
    }
}

fn collect(reports: impl IntoIterator<Item = CheckReport>) -> Vec<String> {
    reports
        .into_iter()
        .filter(|r| !r.passed())
        .map(|r| {
            format!(
                "{} {:?} k={:?}: {}",
                r.check,
                r.family,
                r.k,
                r.witness.as_deref().unwrap_or("no witness")
            )
        })
        .collect()
}

#[test]
fn criterion_01_algebra_dimensions() {
    let bounds = [
        (Family::Partition, 3),
        (Family::Brauer, 5),
        (Family::RookMonoid, 4),
        (Family::RookBrauer, 4),
        (Family::TemperleyLieb, 8),
        (Family::Motzkin, 5),
        (Family::PlanarRook, 6),
    ];
    let mut failures = Vec::new();
    for (fam, kmax) in bounds {
        for k in 0..=kmax {
            let enumerated = enumerate(fam, k).len() as u64;
            let expected = algebra_dimension(fam, k).unwrap();
            if enumerated != expected {
                failures.push(format!("{fam:?} k={k}: {enumerated} != {expected}"));
            }
            failures.extend(collect([check_dimension_census(fam, k)]));
        }
    }
    conclude("criterion 1 (algebra dimensions by enumeration)", failures);
}

#[test]
fn criterion_02_symmetric_diagram_tables() {
    let bounds = [
        (Family::SymmetricGroup, 8),
        (Family::Partition, 5),
        (Family::Brauer, 7),
        (Family::RookMonoid, 7),
        (Family::RookBrauer, 6),
        (Family::TemperleyLieb, 10),
        (Family::Motzkin, 7),
        (Family::PlanarRook, 10),
    ];
    let mut failures = Vec::new();
    for (fam, kmax) in bounds {
        let table = symmetric_total_table(fam).unwrap();
        for k in 0..=kmax {
            failures.extend(collect([check_symmetric_census(fam, k)]));
            // independent total: sum the closed forms and compare to the table
            let total: u64 = (0..=k)
                .flat_map(|r| (0..=r).map(move |f| (r, f)))
                .map(|(r, f)| predicted_symmetric_count(fam, k, r, f).unwrap())
                .sum();
            if total != table[k] {
                failures.push(format!("{fam:?} k={k}: closed-form total {total} != {}", table[k]));
            }
        }
    }
    conclude("criterion 2 (graded symmetric-diagram tables)", failures);
}

fn module_axiom_bounds() -> [(Family, usize); 8] {
    [
        (Family::Partition, 2),
        (Family::Brauer, 4),
        (Family::RookMonoid, 3),
        (Family::RookBrauer, 3),
        (Family::TemperleyLieb, 5),
        (Family::Motzkin, 4),
        (Family::PlanarRook, 4),
        (Family::SymmetricGroup, 4),
    ]
}

#[test]
fn criterion_03_module_axiom() {
    let mut failures = Vec::new();
    for (fam, kmax) in module_axiom_bounds() {
        for k in 0..=kmax {
            failures.extend(collect([check_module_axiom(fam, k, Mode::Exhaustive, SEED)]));
        }
        // ten thousand seeded random pairs one size up
        failures.extend(collect([check_module_axiom(fam, kmax + 1, Mode::Sampled, SEED)]));
    }
    conclude("criterion 3 (module axiom, exhaustive plus sampled)", failures);
}

#[test]
fn criterion_04_involution_module_decomposition() {
    let mut failures = Vec::new();
    for k in 1..=7 {
        match involution_decomposition(k) {
            Err(e) => failures.push(format!("k={k}: {e}")),
            Ok(dec) => {
                for (li, lambda) in dec.partitions.iter().enumerate() {
                    for (fi, &f) in dec.fixed_counts.iter().enumerate() {
                        let expected = u64::from(odd_parts(lambda) == f);
                        if dec.multiplicity[li][fi] != expected {
                            failures.push(format!(
                                "k={k}: m(f={f}, {lambda:?}) = {} != {expected}",
                                dec.multiplicity[li][fi]
                            ));
                        }
                    }
                }
            }
        }
    }
    conclude("criterion 4 (multiplicity table of the involution module)", failures);
}

#[test]
fn criterion_05_sign_twist_comparison() {
    let mut failures = Vec::new();
    for k in 1..=6 {
        failures.extend(collect([check_twist_comparison(k)]));
    }
    conclude("criterion 5 (sign-twist model comparison)", failures);
}

fn commutant_bounds() -> [(Family, usize); 7] {
    [
        (Family::Partition, 2),
        (Family::Brauer, 3),
        (Family::RookMonoid, 3),
        (Family::RookBrauer, 3),
        (Family::TemperleyLieb, 5),
        (Family::Motzkin, 4),
        (Family::PlanarRook, 5),
    ]
}

#[test]
fn criterion_06_multiplicity_freeness() {
    let mut failures = Vec::new();
    for (fam, kmax) in commutant_bounds() {
        for k in 0..=kmax {
            failures.extend(collect([check_multiplicity_free(fam, k, None)]));
        }
    }
    conclude("criterion 6 (commutant dimensions / multiplicity-freeness)", failures);
}

#[test]
fn criterion_07_disjointness() {
    let mut failures = Vec::new();
    for (fam, kmax) in commutant_bounds() {
        for k in 0..=kmax {
            failures.extend(collect([check_disjointness(fam, k, None)]));
        }
    }
    conclude("criterion 7 (no intertwiners across ranks)", failures);
}

#[test]
fn criterion_08_character_recursion() {
    let mut failures = Vec::new();
    for (fam, kmax) in module_axiom_bounds() {
        if fam == Family::SymmetricGroup {
            continue;
        }
        let step = fam.tower_step().unwrap();
        for k in step..=kmax {
            failures.extend(collect([check_character_recursion(fam, k)]));
        }
    }
    conclude("criterion 8 (model character recursion)", failures);
}

#[test]
fn criterion_09_absorption() {
    let mut failures = Vec::new();
    for (fam, kmax) in module_axiom_bounds() {
        for k in 0..=kmax {
            failures.extend(collect([check_absorption(fam, k)]));
        }
    }
    conclude("criterion 9 (absorbing idempotents)", failures);
}

#[test]
fn criterion_10_tl_bijection() {
    let failures = collect([check_tl_bijection(12)]);
    conclude("criterion 10 (symmetric Temperley-Lieb subset bijection)", failures);
}

#[test]
fn criterion_11_regression_fixtures() {
    let failures = collect([check_regression_fixtures()]);
    conclude("criterion 11 (transcribed worked examples)", failures);
}

#[test]
fn criterion_12_binomial_transforms() {
    let failures = collect([check_sequence_identities(10)]);
    conclude("criterion 12 (binomial-transform identities)", failures);
}

// Cross-checks tying the criteria together: the graded involution counts
// from the decomposition's degrees, exercised once more at the top size.
#[test]
fn involution_degrees_cross_check() {
    let mut failures = Vec::new();
    for k in 1..=7 {
        for f in (0..=k).filter(|f| (k - f) % 2 == 0) {
            let basis = SymmetricBasis::new(Family::SymmetricGroup, k, k, f);
            if basis.len() != involutions(k, f).len() {
                failures.push(format!(
                    "k={k} f={f}: {} symmetric diagrams vs {} involutions",
                    basis.len(),
                    involutions(k, f).len()
                ));
            }
        }
        let total: usize = (0..=k).map(|f| involutions(k, f).len()).sum();
        if total as u64 != symmetric_total_table(Family::SymmetricGroup).unwrap()[k] {
            failures.push(format!("k={k}: total {total} off the table"));
        }
        let classes = partitions(k).len();
        if classes == 0 {
            failures.push(format!("k={k}: no conjugacy classes"));
        }
    }
    conclude("cross-check (involution counts and grades)", failures);
}
