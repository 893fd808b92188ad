//! Coherent families and their limits. Finite families are trivial: the
//! diagonal is the top stage. At order type omega the step family is
//! admissible at every finite stage for the eventually-zero sub-theory,
//! yet its limit is rejected: the coherent-limit condition fails for any
//! proper sub-theory.
//!
//! Run with `cargo run --example coherent_limit`.

use relaxkit::coherent::{
    lambda_check, lambdas, omega_limit, FiniteCoherentFamily, OmegaFamily, DEFAULT_PROBE_BOUND,
};
use relaxkit::domain::FinDomain;
use relaxkit::order::WellOrder;

fn main() {
    // A finite coherent family: each stage extends the previous one.
    let order = WellOrder::by_list_order(FinDomain::new(["0", "1", "2"]).unwrap());
    let fam = FiniteCoherentFamily::new(order, vec![vec![1], vec![1, 0], vec![1, 0, 1]]).unwrap();
    assert!(fam.check_coherent().is_ok());
    println!(
        "finite family limit = {:?} (the top stage)",
        fam.limit().unwrap()
    );

    // The step family: stage n is constantly 1 on positions 0..=n. Every
    // stage, extended by zeros, is eventually zero; the diagonal is the
    // all-ones sequence.
    let step_limit = omega_limit(&OmegaFamily::Step, DEFAULT_PROBE_BOUND).unwrap();
    println!(
        "step family diagonal: prefix {:?}, tail {}",
        step_limit.prefix(),
        step_limit.tail()
    );

    let (lambda, restriction) = lambdas::eventually_zero();
    let verdict =
        lambda_check(&OmegaFamily::Step, lambda, restriction, DEFAULT_PROBE_BOUND).unwrap();
    println!(
        "step vs eventually-zero: stages admissible = {}, limit admissible = {}",
        verdict.stages_admissible, verdict.limit_admissible
    );
    assert!(verdict.is_counterexample());
    println!("=> counterexample: the sub-theory misses a limit its stages promise");

    // The maximal sub-theory never fails the condition.
    let (lambda, restriction) = lambdas::all();
    let verdict =
        lambda_check(&OmegaFamily::Step, lambda, restriction, DEFAULT_PROBE_BOUND).unwrap();
    assert!(!verdict.is_counterexample());
    println!("the maximal sub-theory admits the same limit: no counterexample");
}
