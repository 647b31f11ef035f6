//! Quotient witnesses: given a language `L` of a variety and words `x, y`,
//! build `K` in the same variety with `L = x⁻¹ K y⁻¹`. One construction per
//! family — monomials, their mirrors, subword classes, group languages.
//!
//! ```sh
//! cargo run --example witness_constructions
//! ```

use std::collections::BTreeSet;

use joinli::automata::{subword_language, Dfa, NormalMode};
use joinli::constructions::{
    group_witness, j_witness, l_witness, r_witness, RMonomial, DEFAULT_PROFILE_STATE_CAP,
};

fn main() {
    let ab = ['a', 'b'];

    // R: the monomial b* a (a|b)*, wrapped on the left by b
    let mono = RMonomial::new(
        ab.to_vec(),
        vec![BTreeSet::from(['b']), BTreeSet::from(['a', 'b'])],
        vec!['a'],
        NormalMode::R,
    )
    .unwrap();
    let k = r_witness(std::slice::from_ref(&mono), "b", "").unwrap();
    println!("r_witness(b* a Σ*, x=b, y=ε): {} states", k.states());
    assert!(k.word_quotient("b", "").equivalent(mono.dfa()).unwrap());

    // L: the mirror monomial (a|b)* a b*, wrapped on the right
    let mirror = RMonomial::new(
        ab.to_vec(),
        vec![BTreeSet::from(['a', 'b']), BTreeSet::from(['b'])],
        vec!['a'],
        NormalMode::L,
    )
    .unwrap();
    let k = l_witness(std::slice::from_ref(&mirror), "", "b").unwrap();
    println!("l_witness(Σ* a b*, x=ε, y=b): {} states", k.states());
    assert!(k.word_quotient("", "b").equivalent(mirror.dfa()).unwrap());

    // J: Σ* b Σ* is a union of level-1 subword classes
    let pt = subword_language(&ab, "b").unwrap();
    let k = j_witness(&pt, 1, "a", "", DEFAULT_PROFILE_STATE_CAP).unwrap();
    println!(
        "j_witness(Σ* b Σ*, level 1, x=a, y=ε): {} states",
        k.states()
    );
    assert!(k.word_quotient("a", "").equivalent(&pt).unwrap());

    // groups: the parity language, wrapped by a single letter
    let parity = Dfa::new(vec!['a'], 0, BTreeSet::from([0]), vec![vec![1], vec![0]]).unwrap();
    let k = group_witness(&parity, "a", "").unwrap();
    println!(
        "group_witness((aa)*, x=a, y=ε): {} states (the odd-length words)",
        k.states()
    );
    assert!(k.word_quotient("a", "").equivalent(&parity).unwrap());
    assert!(k.equivalent(&parity.complement()).unwrap());

    // the group construction refuses non-group syntactic monoids
    let err = group_witness(&subword_language(&ab, "b").unwrap(), "a", "").unwrap_err();
    println!("group_witness(Σ* b Σ*, …) → {err}");
}
