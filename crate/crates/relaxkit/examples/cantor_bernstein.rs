//! The explicit Cantor-Bernstein construction: two injections in, one
//! bijection out, with the case used at each element.
//!
//! Run with `cargo run --example cantor_bernstein`.

use relaxkit::cb::{cantor_bernstein, InjectionTable};
use relaxkit::domain::FinDomain;

fn main() {
    let a = FinDomain::new(["0", "1", "2"]).unwrap();
    let b = FinDomain::new(["x", "y", "z"]).unwrap();

    let table = |from: &FinDomain, to: &FinDomain, pairs: &[(&str, &str)]| {
        let assignments: Vec<(String, String)> = pairs
            .iter()
            .map(|&(s, t)| (s.to_owned(), t.to_owned()))
            .collect();
        InjectionTable::new(from.clone(), to.clone(), &assignments).unwrap()
    };

    // f and g are deliberately unrelated, so the adjusted map has to work.
    let f = table(&a, &b, &[("0", "y"), ("1", "z"), ("2", "x")]);
    let g = table(&b, &a, &[("x", "0"), ("y", "2"), ("z", "1")]);

    let bij = cantor_bernstein(&f, &g).unwrap();
    assert!(bij.is_bijection());
    println!("bijection A -> B:");
    for i in 0..a.size() {
        println!(
            "  {} -> {}   ({})",
            a.label(i),
            b.label(bij.apply(i)),
            bij.case(i)
        );
    }

    // Rejection of non-injective input names the offending pair.
    let clash = InjectionTable::new(
        a.clone(),
        b.clone(),
        &[
            ("0".to_owned(), "x".to_owned()),
            ("1".to_owned(), "x".to_owned()),
            ("2".to_owned(), "y".to_owned()),
        ],
    );
    println!("collision check: {}", clash.unwrap_err());
}
