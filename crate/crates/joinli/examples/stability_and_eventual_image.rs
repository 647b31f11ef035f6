//! Stability index and eventual image: the level sets `A_n = φ(Σ^n)` are
//! eventually periodic; the stability index is the least `k` with
//! `A_2k = A_k`, and `T = φ(Σ^{≥s})` collects every image of a long word.
//!
//! ```sh
//! cargo run --example stability_and_eventual_image
//! ```

use std::collections::BTreeSet;

use joinli::automata::{prefix_language, Dfa};
use joinli::stamps::Stamp;

fn main() {
    let parity = Dfa::new(vec!['a'], 0, BTreeSet::from([0]), vec![vec![1], vec![0]]).unwrap();
    let mod3 = Dfa::new(
        vec!['a', 'b'],
        0,
        BTreeSet::from([0]),
        vec![vec![1, 0], vec![2, 1], vec![0, 2]],
    )
    .unwrap();
    let stamps = [
        ("(aa)* over {a}", Stamp::syntactic(&parity)),
        (
            "a Σ* over {a,b}",
            Stamp::syntactic(&prefix_language(&['a', 'b'], "a").unwrap()),
        ),
        ("#a ≡ 0 mod 3", Stamp::syntactic(&mod3)),
    ];

    for (name, stamp) in stamps {
        let ei = stamp.eventual_image();
        println!("{name}: monoid of size {}", stamp.monoid().size());
        for (n, level) in ei.level_sets().iter().enumerate() {
            println!("  A_{} = {level:?}", n + 1);
        }
        println!(
            "  cycle starts at level {}, period {}, stability index s = {}",
            ei.cycle_start(),
            ei.period(),
            ei.stability_index()
        );
        println!("  T = φ(Σ^≥s) = {:?}", ei.t());
        println!("  image semigroup φ(Σ⁺) = {:?}", stamp.image_semigroup());
        println!();
    }
}
