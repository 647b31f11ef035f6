//! Compute syntactic stamps of a few regular languages and inspect them.
//!
//! ```sh
//! cargo run --example syntactic_monoid
//! ```

use joinli::automata::{all_words, prefix_language, subword_language};
use joinli::stamps::Stamp;

fn main() {
    let ab = ['a', 'b'];
    let languages = [
        ("Σ*", all_words(&ab)),
        ("a Σ*", prefix_language(&ab, "a").unwrap()),
        ("Σ* b Σ*", subword_language(&ab, "b").unwrap()),
        ("a Σ* b", all_words(&ab).concat_words("a", "b")),
    ];

    for (name, dfa) in &languages {
        let stamp = Stamp::syntactic(dfa);
        let monoid = stamp.monoid();
        println!("language {name}");
        println!("  minimal automaton: {} states", dfa.minimize().states());
        println!(
            "  syntactic monoid:  {} elements, identity {}",
            monoid.size(),
            monoid.identity()
        );
        println!("  letter images:     {:?}", stamp.letter_images());
        println!("  accepting set:     {:?}", stamp.accepting().unwrap());
        for row in monoid.table() {
            println!("    {row:?}");
        }
        // the stamp recognises the language it came from
        assert!(stamp.language().equivalent(dfa).unwrap());
        for w in ["", "a", "b", "ab", "ba", "bab"] {
            println!(
                "  φ({w:?}) = {} (accepted: {})",
                stamp.eval(w).unwrap(),
                stamp.accepts(w).unwrap()
            );
        }
        println!();
    }
}
