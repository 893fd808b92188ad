//! The Ackermann-coded hereditarily finite universe: membership is a bit
//! test, sets round-trip through set literals, and the beth tower
//! stratifies codes by rank so that membership always descends.
//!
//! Run with `cargo run --example ackermann`.

use relaxkit::hf::{
    decode, encode, hf_choice, hf_powerset, hf_separation, hf_union, mem, parse_set_literal,
    set_literal, transitive_closure, BethTower, HfCode, DEFAULT_BIT_BUDGET, DEFAULT_POWERSET_BOUND,
};

fn main() {
    // Every natural codes a hereditarily finite set: m is in n iff bit m of
    // n is set.
    for n in 0..8u64 {
        println!("{n} = {}", set_literal(&HfCode::from(n)));
    }

    let three = parse_set_literal("{{},{{}}}", DEFAULT_BIT_BUDGET).unwrap();
    println!("parse {{{{}},{{{{}}}}}} -> {three}");
    assert_eq!(three, HfCode::from(3u64));
    assert!(mem(&HfCode::from(0u64), &three));
    assert!(!mem(&HfCode::from(2u64), &three));

    // The set operations are bit games on codes.
    println!("union of 3      = {}", hf_union(&three));
    println!(
        "powerset of 3   = {}",
        hf_powerset(&three, DEFAULT_POWERSET_BOUND, DEFAULT_BIT_BUDGET).unwrap()
    );
    println!(
        "evens inside 12 = {}",
        hf_separation(&HfCode::from(12u64), |e| {
            e.as_biguint() % 2u32 == 0u32.into()
        })
    );
    println!("choice from 5   = {}", hf_choice(&HfCode::from(5u64)));
    println!(
        "closure of 2    = {}",
        transitive_closure(&HfCode::from(2u64))
    );

    // decode and encode are mutually inverse.
    let elements = decode(&HfCode::from(37u64));
    println!("37 decodes to {elements:?}");
    assert_eq!(
        encode(&elements, DEFAULT_BIT_BUDGET).unwrap(),
        HfCode::from(37u64)
    );

    // The base-1 beth tower: 1, 2, 4, 16, 65536, ... Ranks stratify codes
    // and membership strictly lowers rank.
    let tower = BethTower::new(1);
    for k in 0..5 {
        println!("B[{k}] = {}", tower.value(k).unwrap());
    }
    for n in [0u64, 1, 2, 5, 100, 65535] {
        let code = HfCode::from(n);
        println!(
            "rank({n}) = {}, rank as function = {}",
            tower.rank(&code).unwrap(),
            tower.rank_fn(&code).unwrap()
        );
    }
}
