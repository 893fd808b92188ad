//! Finite logical domains: quotients, powerset enumeration, emptiness
//! detection, and disjoint unions of fibers.
//!
//! Run with `cargo run --example domains`.

use relaxkit::domain::{union_of_fibers, BinFn, EqvTable, FinDomain, DEFAULT_POWERSET_BOUND};

fn main() {
    // A domain is an ordered list of distinct labels; equality is label
    // equality, so the equality pairing is decidable by construction.
    let numbers = FinDomain::new(["0", "1", "2", "3"]).unwrap();

    // Quotient by congruence mod 2. Class labels are the least member.
    let pairs = (0..4)
        .map(|i| (0..4).map(|j| i % 2 == j % 2).collect())
        .collect();
    let eqv = EqvTable::new(numbers.clone(), pairs).unwrap();
    let q = eqv.quotient().unwrap();
    println!("classes of Z/2 on {{0,1,2,3}}: {:?}", q.classes().labels());
    for i in 0..numbers.size() {
        println!("  {} -> {}", numbers.label(i), q.class_label(i));
    }

    // The powerset is the list of all binary functions, in binary-counter
    // order with element 0 as the least-significant bit.
    let small = FinDomain::new(["a", "b"]).unwrap();
    let powerset = small.powerset(DEFAULT_POWERSET_BOUND).unwrap();
    println!("powerset of {{a,b}} ({} functions):", powerset.len());
    for h in &powerset {
        println!("  {} empty={}", h.bit_string(), h.is_empty());
    }

    // The first element of the powerset is the empty function.
    assert!(powerset[0].is_empty());
    assert!(BinFn::empty(small).is_empty());

    // Union of a family of domains indexed by a base domain.
    let base = FinDomain::new(["p", "q"]).unwrap();
    let fibers = [
        FinDomain::new(["x", "y"]).unwrap(),
        FinDomain::new(["u", "v", "w"]).unwrap(),
    ];
    let (union, to_base) = union_of_fibers(&base, &fibers);
    println!("union of fibers ({} elements):", union.size());
    for (i, b) in to_base.iter().enumerate() {
        println!("  {} over {}", union.label(i), base.label(*b));
    }
}
