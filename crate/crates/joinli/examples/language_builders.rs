//! The language builders and the automaton algebra: prefix/suffix/infix
//! families, monomials, subword languages, Boolean operations, word
//! quotients and morphism preimages.
//!
//! ```sh
//! cargo run --example language_builders
//! ```

use std::collections::{BTreeMap, BTreeSet};

use joinli::automata::{
    all_words, build_family, infix_li, monomial_language, prefix_language, subword_language,
    suffix_language, LanguageFamily, NeMorphism,
};

fn main() {
    let ab = ['a', 'b'];

    let prefix = prefix_language(&ab, "ab").unwrap();
    let suffix = suffix_language(&ab, "ba").unwrap();
    println!(
        "ab Σ*: {} states; Σ* ba: {} states",
        prefix.states(),
        suffix.states()
    );

    // an LI language: U Σ* V ∪ W
    let li = infix_li(&ab, &["a".into()], &["b".into()], &["bb".into()]).unwrap();
    println!(
        "a Σ* b ∪ {{bb}}: accepts \"ab\"? {}  accepts \"bb\"? {}",
        li.accepts("ab"),
        li.accepts("bb")
    );

    // monomials determinize exactly even without a normal form
    let mono = monomial_language(
        &ab,
        &[BTreeSet::from(['b']), BTreeSet::from(['a', 'b'])],
        &['a'],
        None,
    )
    .unwrap();
    println!(
        "b* a Σ* equals Σ* a Σ*? {}",
        mono.equivalent(&subword_language(&ab, "a").unwrap())
            .unwrap()
    );

    // Boolean algebra and quotients
    let even_length = joinli::automata::Dfa::new(
        ab.to_vec(),
        0,
        std::collections::BTreeSet::from([0]),
        vec![vec![1, 1], vec![0, 0]],
    )
    .unwrap();
    let even_and_contains_b = subword_language(&ab, "b")
        .unwrap()
        .intersection(&even_length)
        .unwrap();
    let quotient = even_and_contains_b.word_quotient("a", "b");
    println!(
        "(even ∩ Σ*bΣ*) quotient by (a, b): {} states, accepts ε? {}  accepts \"ab\"? {}",
        quotient.states(),
        quotient.accepts(""),
        quotient.accepts("ab")
    );

    // preimage under a non-erasing morphism
    let double = NeMorphism::new(
        vec!['a'],
        ab.to_vec(),
        BTreeMap::from([('a', "ab".to_string())]),
    )
    .unwrap();
    let pre = double.preimage(&subword_language(&ab, "b").unwrap());
    println!(
        "f(a) = ab pulls Σ*bΣ* back to: accepts \"a\"? {}  accepts ε? {}",
        pre.accepts("a"),
        pre.accepts("")
    );

    // the declarative family interface used by the CLI
    let spec = LanguageFamily::InfixLi {
        u: vec!["ab".into()],
        v: vec!["ba".into()],
        w: vec![],
    };
    let built = build_family(&ab, &spec).unwrap();
    let direct = all_words(&ab).concat_words("ab", "ba");
    println!(
        "builder and direct construction agree? {}",
        built.equivalent(&direct).unwrap()
    );
}
