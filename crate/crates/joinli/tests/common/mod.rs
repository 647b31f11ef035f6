#![allow(dead_code)]

//! Shared corpora for the integration suites: handcrafted languages, seeded
//! random minimal automata, and pinned language lists per variety.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use joinli::automata::{
    all_words, empty_language, infix_li, monomial_language, prefix_language, single_word,
    subword_language, suffix_language, Dfa, NormalMode,
};
use joinli::constructions::{simon_profile, RMonomial, DEFAULT_PROFILE_STATE_CAP};
use joinli::stamps::Stamp;
use joinli::FiniteMonoid;

pub const AB: [char; 2] = ['a', 'b'];

/// The parity language (aa)* over the single-letter alphabet.
pub fn even_as() -> Dfa {
    Dfa::new(vec!['a'], 0, BTreeSet::from([0]), vec![vec![1], vec![0]]).unwrap()
}

/// Twenty handcrafted languages covering the named corner cases.
pub fn handcrafted() -> Vec<Dfa> {
    let sigma = all_words(&AB);
    let mut out = vec![
        sigma.clone(),                                             // Σ*
        empty_language(&AB),                                       // ∅
        single_word(&AB, "").unwrap(),                             // {ε}
        single_word(&AB, "a").unwrap(),                            // {a}
        prefix_language(&AB, "a").unwrap(),                        // a Σ*
        suffix_language(&AB, "a").unwrap(),                        // Σ* a
        sigma.concat_words("a", "b"),                              // a Σ* b
        subword_language(&AB, "b").unwrap().concat_words("b", ""), // b Σ* b Σ*
        subword_language(&AB, "b").unwrap(),                       // Σ* b Σ*
        subword_language(&AB, "ab").unwrap(),                      // Σ* a Σ* b Σ*
        suffix_language(&AB, "abb").unwrap(),                      // Σ* abb
        prefix_language(&AB, "a")
            .unwrap()
            .union(&suffix_language(&AB, "b").unwrap())
            .unwrap(),
        infix_li(&AB, &["ab".into()], &["ba".into()], &["".into()]).unwrap(),
    ];
    // (ab)*
    out.push(
        Dfa::new(
            AB.to_vec(),
            0,
            BTreeSet::from([0]),
            vec![vec![1, 2], vec![2, 0], vec![2, 2]],
        )
        .unwrap(),
    );
    // a* b*
    out.push(
        Dfa::new(
            AB.to_vec(),
            0,
            BTreeSet::from([0, 1]),
            vec![vec![0, 1], vec![2, 1], vec![2, 2]],
        )
        .unwrap(),
    );
    // even number of a's
    out.push(
        Dfa::new(
            AB.to_vec(),
            0,
            BTreeSet::from([0]),
            vec![vec![1, 0], vec![0, 1]],
        )
        .unwrap(),
    );
    // number of a's divisible by 3
    out.push(
        Dfa::new(
            AB.to_vec(),
            0,
            BTreeSet::from([0]),
            vec![vec![1, 0], vec![2, 1], vec![0, 2]],
        )
        .unwrap(),
    );
    // b* a Σ* (R-monomial)
    out.push(
        monomial_language(
            &AB,
            &[BTreeSet::from(['b']), BTreeSet::from(['a', 'b'])],
            &['a'],
            None,
        )
        .unwrap(),
    );
    // words of even length
    out.push(
        Dfa::new(
            AB.to_vec(),
            0,
            BTreeSet::from([0]),
            vec![vec![1, 1], vec![0, 0]],
        )
        .unwrap(),
    );
    out.push(even_as());
    assert_eq!(out.len(), 20);
    out
}

pub fn random_dfa(rng: &mut ChaCha8Rng, states: usize, alphabet: &[char]) -> Dfa {
    let delta: Vec<Vec<usize>> = (0..states)
        .map(|_| {
            (0..alphabet.len())
                .map(|_| rng.gen_range(0..states))
                .collect()
        })
        .collect();
    let finals: BTreeSet<usize> = (0..states).filter(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(alphabet.to_vec(), 0, finals, delta).unwrap()
}

/// `count` distinct minimal automata over {a, b} with at most 5 states,
/// sampled with a fixed seed.
pub fn sampled_minimal(count: usize, seed: u64) -> Vec<Dfa> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let states = rng.gen_range(1..=5);
        let d = random_dfa(&mut rng, states, &AB).minimize();
        let key = serde_json::to_string(&d).unwrap();
        if seen.insert(key) {
            out.push(d);
        }
    }
    out
}

/// The acceptance corpus: 20 handcrafted languages plus 480 sampled
/// distinct minimal automata.
pub fn corpus() -> Vec<Dfa> {
    let mut out = handcrafted();
    out.extend(sampled_minimal(480, 0x6a6f696e6c69));
    out
}

/// Pinned locally-trivial builder languages.
pub fn li_builder_list() -> Vec<Dfa> {
    let mut out = Vec::new();
    for u in ["", "a", "b", "ab", "ba", "aab"] {
        out.push(prefix_language(&AB, u).unwrap());
        out.push(suffix_language(&AB, u).unwrap());
    }
    for w in ["", "a", "ab", "abb"] {
        out.push(single_word(&AB, w).unwrap());
    }
    out.push(infix_li(&AB, &["a".into()], &["b".into()], &[]).unwrap());
    out.push(
        infix_li(
            &AB,
            &["a".into(), "ab".into()],
            &["b".into(), "".into()],
            &["".into()],
        )
        .unwrap(),
    );
    out.push(infix_li(&AB, &["b".into()], &["a".into()], &["bb".into()]).unwrap());
    out
}

/// Pinned R-normal monomials of degree at most 2 over {a, b}.
pub fn r_monomial_list() -> Vec<RMonomial> {
    let s = |letters: &[char]| -> BTreeSet<char> { letters.iter().copied().collect() };
    let mono = |sets: Vec<BTreeSet<char>>, letters: Vec<char>| {
        RMonomial::new(AB.to_vec(), sets, letters, NormalMode::R).unwrap()
    };
    vec![
        mono(vec![s(&[])], vec![]),
        mono(vec![s(&['a'])], vec![]),
        mono(vec![s(&['b'])], vec![]),
        mono(vec![s(&['a', 'b'])], vec![]),
        mono(vec![s(&['b']), s(&['a', 'b'])], vec!['a']),
        mono(vec![s(&['b']), s(&['b'])], vec!['a']),
        mono(vec![s(&[]), s(&['a', 'b'])], vec!['a']),
        mono(vec![s(&[]), s(&['a'])], vec!['b']),
        mono(vec![s(&['a']), s(&['a', 'b'])], vec!['b']),
        mono(vec![s(&['a']), s(&[])], vec!['b']),
        mono(vec![s(&['b']), s(&['a']), s(&['a', 'b'])], vec!['a', 'b']),
        mono(vec![s(&[]), s(&[]), s(&[])], vec!['a', 'b']),
        mono(vec![s(&['b']), s(&['b']), s(&['a', 'b'])], vec!['a', 'a']),
        mono(vec![s(&['a']), s(&['a']), s(&['a', 'b'])], vec!['b', 'b']),
    ]
}

/// Pinned L-normal monomials, mirrors of the R list.
pub fn l_monomial_list() -> Vec<RMonomial> {
    r_monomial_list()
        .iter()
        .map(|m| {
            let sets: Vec<BTreeSet<char>> = m.sets().iter().rev().cloned().collect();
            let letters: Vec<char> = m.letters().iter().rev().copied().collect();
            RMonomial::new(AB.to_vec(), sets, letters, NormalMode::L).unwrap()
        })
        .collect()
}

/// Unions of subword classes: every union at level 1, plus seeded unions at
/// level 2.
pub fn piecewise_testable_list(level2_samples: usize, seed: u64) -> Vec<(Dfa, usize)> {
    let mut out = Vec::new();
    let p1 = simon_profile(&AB, 1, DEFAULT_PROFILE_STATE_CAP).unwrap();
    for mask in 0u32..(1 << p1.class_count()) {
        let accept: BTreeSet<usize> = (0..p1.class_count())
            .filter(|i| mask >> i & 1 == 1)
            .collect();
        out.push((p1.class_language(&accept), 1));
    }
    let p2 = simon_profile(&AB, 2, DEFAULT_PROFILE_STATE_CAP).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..level2_samples {
        let accept: BTreeSet<usize> = (0..p2.class_count())
            .filter(|_| rng.gen_bool(0.4))
            .collect();
        out.push((p2.class_language(&accept), 2));
    }
    out
}

/// Group-recognised languages over {a, b}: preimages of accepting sets
/// under stamps onto Z2 and Z3.
pub fn group_language_list() -> Vec<Dfa> {
    let mut out = Vec::new();
    let z2 = FiniteMonoid::cyclic(2);
    let z3 = FiniteMonoid::cyclic(3);
    let stamps = [
        Stamp::new(AB.to_vec(), z2.clone(), [('a', 1), ('b', 0)].into(), None).unwrap(),
        Stamp::new(AB.to_vec(), z2.clone(), [('a', 1), ('b', 1)].into(), None).unwrap(),
        Stamp::new(AB.to_vec(), z2, [('a', 0), ('b', 1)].into(), None).unwrap(),
        Stamp::new(AB.to_vec(), z3.clone(), [('a', 1), ('b', 0)].into(), None).unwrap(),
        Stamp::new(AB.to_vec(), z3.clone(), [('a', 1), ('b', 2)].into(), None).unwrap(),
        Stamp::new(AB.to_vec(), z3, [('a', 1), ('b', 1)].into(), None).unwrap(),
    ];
    for stamp in &stamps {
        let n = stamp.monoid().size();
        let accept_sets: Vec<BTreeSet<usize>> = if n == 2 {
            vec![BTreeSet::from([0]), BTreeSet::from([1])]
        } else {
            vec![
                BTreeSet::from([0]),
                BTreeSet::from([1]),
                BTreeSet::from([0, 2]),
            ]
        };
        for acc in accept_sets {
            out.push(stamp.language_of(&acc));
        }
    }
    out
}

/// Seeded word sampler over {a, b}.
pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| if rng.gen_bool(0.5) { 'a' } else { 'b' })
        .collect()
}
