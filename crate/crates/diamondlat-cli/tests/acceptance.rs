//! The acceptance suite: one test per verification criterion, each printing
//! its pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; `diamondlat verify --suite all` runs the same checks
//! from the command line.

use diamondlat_cli::suites::{run_suites, SuiteConfig};

fn run(name: &str) {
    let reports = run_suites(name, &SuiteConfig::default()).expect("suite name is valid");
    for report in reports {
        println!("{}", report.headline());
        for extra in report.details.iter().skip(1) {
            println!("      {extra}");
        }
        assert!(
            report.passed,
            "criterion {} ({}) failed: {:?}",
            report.criterion, report.suite, report.details
        );
    }
}

#[test]
fn criterion_01_closure_methods_agree_exhaustively_on_the_cube() {
    run("closure-exhaustive");
}

#[test]
fn criterion_02_closure_methods_agree_on_random_subsets() {
    run("closure-random");
}

#[test]
fn criterion_03_closed_sets_biject_with_cs_packings() {
    run("closed-bijection");
}

#[test]
fn criterion_04_nonmodular_hosts_break_the_correspondence() {
    run("nonmodular-control");
}

#[test]
fn criterion_05_generating_families_of_the_boolean_cube() {
    run("generating-families");
}

#[test]
fn criterion_06_birkhoff_roundtrip_and_extension_bijection() {
    run("birkhoff-roundtrip");
}

#[test]
fn criterion_07_wedderburn_lattices_are_exact() {
    run("wedderburn-random");
}

#[test]
fn criterion_08_diamond_closure_implies_rational_generation() {
    run("weakening-replay");
}

#[test]
fn criterion_09_fixed_worked_example() {
    run("worked-example");
}

#[test]
fn criterion_10_closure_map_axioms() {
    run("closure-axioms");
}
