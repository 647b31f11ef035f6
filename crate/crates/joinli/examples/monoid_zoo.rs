//! Finite-monoid machinery on its own: exhaustive enumeration of small
//! monoids, ω-powers, products, quotients and the division oracle.
//!
//! ```sh
//! cargo run --example monoid_zoo
//! ```

use std::collections::BTreeSet;

use joinli::algebra::{
    direct_product, divides, Division, DivisionBudget, FiniteMonoid, MonoidCongruence,
    DEFAULT_PRODUCT_CAP,
};
use joinli::oracle::monoids_of_size;

fn main() {
    for n in 1..=4 {
        let monoids = monoids_of_size(n).unwrap();
        let groups = monoids.iter().filter(|m| m.is_group()).count();
        let commutative = monoids
            .iter()
            .filter(|m| {
                m.elements()
                    .all(|a| m.elements().all(|b| m.mul(a, b) == m.mul(b, a)))
            })
            .count();
        println!(
            "size {n}: {:2} monoids up to isomorphism ({groups} groups, {commutative} commutative)",
            monoids.len()
        );
    }
    println!();

    // ω-powers: the unique idempotent power of each element
    let z6 = FiniteMonoid::cyclic(6);
    println!(
        "in Z6, ω-powers are all the identity: {:?}",
        z6.elements().map(|m| z6.omega(m)).collect::<Vec<_>>()
    );
    let chain = FiniteMonoid::new(vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]], 0).unwrap();
    println!(
        "in {{1, m, m²}} with m³ = m², ω(m) = m²: {:?}",
        chain.elements().map(|m| chain.omega(m)).collect::<Vec<_>>()
    );
    println!();

    // quotients: Z4 modulo parity is Z2
    let z4 = FiniteMonoid::cyclic(4);
    let congruence = MonoidCongruence::new(z4, vec![0, 1, 0, 1]).unwrap();
    let (quotient, projection) = congruence.quotient();
    println!(
        "Z4 / parity: size {} with projection {projection:?}",
        quotient.size()
    );

    // products and division
    let z2 = FiniteMonoid::cyclic(2);
    let klein = direct_product(&z2, &z2, DEFAULT_PRODUCT_CAP).unwrap();
    println!("Z2 × Z2: size {}", klein.monoid.size());
    let budget = DivisionBudget::default();
    for (name, m) in [
        ("Z2", FiniteMonoid::cyclic(2)),
        ("Z3", FiniteMonoid::cyclic(3)),
        ("Z4", FiniteMonoid::cyclic(4)),
    ] {
        let verdict = divides(&m, &klein.monoid, &budget);
        println!(
            "{name} divides Z2 × Z2: {}",
            matches!(verdict, Division::Divides)
        );
    }

    // a submonoid generated from chosen elements
    let sub = klein
        .monoid
        .generated_submonoid(&BTreeSet::from([klein.pair(1, 0)]));
    println!("submonoid of Z2 × Z2 generated by (1,0): {sub:?}");
}
