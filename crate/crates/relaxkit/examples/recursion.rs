//! Recursion along well-orders: validation of comparison tables, the
//! recursion engine, maximal order-isomorphisms, choice-driven
//! enumeration, and the canonical product order.
//!
//! Run with `cargo run --example recursion`.

use relaxkit::domain::{BinFn, FinDomain};
use relaxkit::order::{
    canonical_product, check_well_order, order_isomorphism, order_type, recursion,
    recursive_extension, well_order_via_choice, PartialFn, WellOrder,
};

fn numeric_order(n: usize) -> WellOrder {
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    WellOrder::by_list_order(FinDomain::new(labels).unwrap())
}

fn factorial_rule(f: &PartialFn<u64>, elem: usize) -> Option<u64> {
    let r = f.order().rank_of(elem);
    if r == 0 {
        Some(1)
    } else {
        Some(f.value_at_rank(r - 1)? * r as u64)
    }
}

fn main() {
    // A comparison table is validated before anything recurses over it.
    let d = FinDomain::new(["0", "1", "2"]).unwrap();
    let leq: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i <= j).collect()).collect();
    let w = check_well_order(&d, &leq).unwrap();
    println!("validated order, positions = {:?}", w.positions());

    // Factorials as the recursion f[n] = n * f[n-1].
    let order = numeric_order(6);
    let fact = recursion(&order, factorial_rule);
    let values: Vec<u64> = fact.values_in_order().into_iter().copied().collect();
    println!("factorials along 0..6: {values:?}");

    // The same rule extended from a nonstandard seed f[0] = 5.
    let mut seeded = vec![None; 6];
    seeded[order.element_at_rank(0)] = Some(5);
    let seed = PartialFn::from_values(order.clone(), seeded);
    let ext = recursive_extension(&order, factorial_rule, seed).unwrap();
    let values: Vec<u64> = ext.values_in_order().into_iter().copied().collect();
    println!("seeded extension:       {values:?}");

    // The maximal order-isomorphism has full domain or full image.
    let a = numeric_order(3);
    let b = numeric_order(5);
    let iso = order_isomorphism(&a, &b);
    println!(
        "iso from a {}-order into a {}-order maps {} elements (full domain)",
        order_type(&a),
        order_type(&b),
        iso.defined_count(),
    );

    // Choice-driven enumeration: the least-unused rule replays label order.
    let letters = FinDomain::new(["c", "a", "b"]).unwrap();
    let chosen = well_order_via_choice(&letters, |h: &BinFn| {
        let next = (0..h.domain().size()).find(|&i| !h.bit(i)).unwrap();
        h.domain().label(next).to_owned()
    })
    .unwrap();
    println!("choice enumeration: {:?}", chosen.labels_in_order());

    // The canonical product order on pairs, banded by maximum.
    let product = canonical_product(&numeric_order(3), 3).unwrap();
    println!("canonical order on 3x3: {:?}", product.labels_in_order());
}
