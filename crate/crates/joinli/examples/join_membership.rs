//! Decide membership of languages in joins `V ∨ LI`, running the
//! structural and equational procedures side by side.
//!
//! ```sh
//! cargo run --example join_membership
//! ```

use std::collections::BTreeSet;

use joinli::automata::{all_words, subword_language, Dfa};
use joinli::decide::in_join_with_li;
use joinli::identities::Variety;

fn main() {
    let ab = ['a', 'b'];
    let parity = Dfa::new(vec!['a'], 0, BTreeSet::from([0]), vec![vec![1], vec![0]]).unwrap();
    let languages = [
        ("a Σ* b", all_words(&ab).concat_words("a", "b")),
        ("Σ* b Σ*", subword_language(&ab, "b").unwrap()),
        (
            "b Σ* b Σ*",
            subword_language(&ab, "b").unwrap().concat_words("b", ""),
        ),
        ("(aa)* over {a}", parity),
    ];
    let varieties = [
        Variety::Triv,
        Variety::R,
        Variety::J,
        Variety::A,
        Variety::G,
    ];

    print!("{:16}", "");
    for v in &varieties {
        print!("{:>9}", format!("{v} ∨ LI"));
    }
    println!();
    for (name, dfa) in &languages {
        print!("{name:16}");
        for v in &varieties {
            let verdict = in_join_with_li(dfa, *v).unwrap();
            print!("{:>9}", if verdict.in_join { "yes" } else { "no" });
        }
        println!();
    }
    println!();

    // a negative verdict carries a violated wrapped identity
    let verdict = in_join_with_li(&languages[3].1, Variety::J).unwrap();
    println!(
        "(aa)* ∉ Lang(J ∨ LI); violated: {}",
        verdict.witness.as_ref().unwrap().identity
    );
    println!("assignment: {:?}", verdict.witness.unwrap().assignment);

    // J1 is refused outright: essentially-J1 does not coincide with the join
    let err = in_join_with_li(&languages[1].1, Variety::J1).unwrap_err();
    println!("\njoin-li J1 → {err}");
}
