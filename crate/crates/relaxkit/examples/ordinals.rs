//! Cantor-normal-form ordinal arithmetic below epsilon-0, and the
//! canonical pairing bijection between pairs of naturals and naturals.
//!
//! Run with `cargo run --example ordinals`.

use relaxkit::ordinal::{pair_index, unpair, OrdCnf};

fn main() {
    let parse = |s: &str| s.parse::<OrdCnf>().unwrap();

    // Ordinal addition absorbs on the left, multiplication distributes on
    // the left only.
    println!("1 + w  = {}", parse("1").add(&parse("w")));
    println!("w + 1  = {}", parse("w").add(&parse("1")));
    println!("2 * w  = {}", parse("2").mul(&parse("w")));
    println!("w * 2  = {}", parse("w").mul(&parse("2")));
    println!("(w+1)*(w+2) = {}", parse("w+1").mul(&parse("w+2")));

    let big = parse("w^w^2*4+w^2*3+w+5");
    println!("roundtrip: {big}");
    println!("classify w^2   = {}", parse("w^2").classify());
    println!("classify w+3   = {}", parse("w+3").classify());
    println!(
        "sup of 3, w, 5 = {}",
        OrdCnf::sup(&[parse("3"), parse("w"), parse("5")]).unwrap()
    );

    // The canonical order on pairs of naturals has order type omega: the
    // pair index walks the square shells below each diagonal corner.
    println!("first pairs in canonical order:");
    for n in 0..8u64 {
        let (a, b) = unpair(n);
        assert_eq!(pair_index(a, b), n);
        println!("  {n} -> ({a},{b})");
    }
}
