//! The essential congruence collapses elements that behave identically
//! between long contexts: `m ≈ m'` when `α·m·β = α·m'·β` for all `α, β` in
//! the eventual image. A trivial quotient means the language only depends
//! on bounded prefixes and suffixes.
//!
//! ```sh
//! cargo run --example essential_quotient
//! ```

use std::collections::BTreeSet;

use joinli::automata::{all_words, prefix_language, subword_language, Dfa};
use joinli::decide::essential_quotient;
use joinli::stamps::Stamp;

fn main() {
    let ab = ['a', 'b'];
    let parity = Dfa::new(vec!['a'], 0, BTreeSet::from([0]), vec![vec![1], vec![0]]).unwrap();
    let cases = [
        ("a Σ*", prefix_language(&ab, "a").unwrap()),
        ("a Σ* b", all_words(&ab).concat_words("a", "b")),
        ("(aa)* over {a}", parity),
        ("Σ* b Σ*", subword_language(&ab, "b").unwrap()),
    ];

    for (name, dfa) in cases {
        let stamp = Stamp::syntactic(&dfa);
        let quotient = essential_quotient(&stamp);
        println!("language {name}");
        println!(
            "  syntactic monoid {} elements → quotient {} classes (stability index {})",
            stamp.monoid().size(),
            quotient.quotient_size(),
            quotient.stability_index()
        );
        println!("  T = {:?}", quotient.t());
        println!("  projection = {:?}", quotient.congruence().classes());
        if quotient.quotient_size() == 1 {
            println!("  → membership depends only on bounded prefixes and suffixes");
        } else {
            println!("  → genuinely non-local structure survives the collapse");
        }
        // words with equal quotient image agree inside every long context
        let mu = quotient.quotient_stamp();
        println!(
            "  μ(\"a\") = {}, μ(\"aa\") = {}",
            mu.eval("a").unwrap(),
            mu.eval("aa").unwrap()
        );
        println!();
    }
}
