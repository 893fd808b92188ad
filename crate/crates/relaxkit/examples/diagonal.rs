//! Finite cardinality and Cantor's diagonal as an executable check: for
//! any table p mapping a domain into its powerset, the diagonal function
//! escapes the image of p.
//!
//! Run with `cargo run --example diagonal`.

use relaxkit::cardinal::{cantor_diagonal, card, inj_exists};
use relaxkit::domain::{FinDomain, DEFAULT_POWERSET_BOUND};

fn main() {
    let a = FinDomain::new(["x", "y", "z"]).unwrap();
    let b = FinDomain::new(["p", "q"]).unwrap();
    println!("card = {} and {}", card(&a), card(&b));
    println!("injection a -> b exists: {}", inj_exists(&a, &b));
    println!("injection b -> a exists: {}", inj_exists(&b, &a));

    // Pick a table A -> P(A) and diagonalize out of it.
    let ps = a.powerset(DEFAULT_POWERSET_BOUND).unwrap();
    let p = vec![ps[5].clone(), ps[0].clone(), ps[7].clone()];
    println!("table rows:");
    for (i, row) in p.iter().enumerate() {
        println!("  p[{}] = {}", a.label(i), row.bit_string());
    }
    let h = cantor_diagonal(&a, &p).unwrap();
    println!("diagonal = {}", h.bit_string());
    for row in &p {
        assert_ne!(&h, row);
    }
    println!("diagonal differs from every row, as it must");

    // Exhaustively: no map from a 2-element domain covers its powerset.
    let small = FinDomain::new(["0", "1"]).unwrap();
    let ps = small.powerset(DEFAULT_POWERSET_BOUND).unwrap();
    let mut checked = 0;
    for i in 0..ps.len() {
        for j in 0..ps.len() {
            let table = [ps[i].clone(), ps[j].clone()];
            let h = cantor_diagonal(&small, &table).unwrap();
            assert!(table.iter().all(|row| *row != h));
            checked += 1;
        }
    }
    println!("diagonal escaped all {checked} maps on two elements");
}
