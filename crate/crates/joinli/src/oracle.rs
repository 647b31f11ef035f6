//! Independent brute-force oracles.
//!
//! Everything here recomputes answers from first principles — word
//! enumeration, context tables, exhaustive table search — precisely so the
//! test suite and the CLI `--verify` flag can cross-check the structured
//! implementations against something that shares no code with them.

use std::collections::{BTreeSet, HashMap};

use crate::algebra::{AlgebraError, Element, FiniteMonoid};
use crate::automata::{AutomataError, Dfa};
use crate::identities::{Factor, IdentityStatement, Mode, OmegaTerm};
use crate::stamps::Stamp;

/// Length-lexicographic enumeration of all words up to a maximum length.
#[derive(Debug, Clone)]
pub struct WordEnumeration {
    alphabet: Vec<char>,
    max_length: usize,
}

impl WordEnumeration {
    pub fn new(alphabet: Vec<char>, max_length: usize) -> Self {
        WordEnumeration {
            alphabet,
            max_length,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = String> + '_ {
        (0..=self.max_length).flat_map(move |n| words_of_length(&self.alphabet, n))
    }
}

/// All words of exactly length `n`, in lexicographic order of the alphabet.
pub fn words_of_length(alphabet: &[char], n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for &c in alphabet {
                let mut w2 = w.clone();
                w2.push(c);
                next.push(w2);
            }
        }
        out = next;
    }
    out
}

/// Do the two automata agree on every word of length at most `n`? A
/// necessary condition for equivalence; with `n` at least the product
/// automaton's state count it is also sufficient.
pub fn approx_equal(d1: &Dfa, d2: &Dfa, n: usize) -> Result<bool, AutomataError> {
    if d1.alphabet() != d2.alphabet() {
        return Err(AutomataError::AlphabetMismatch {
            left: d1.alphabet().to_vec(),
            right: d2.alphabet().to_vec(),
        });
    }
    let k = d1.alphabet().len();
    let mut seen = BTreeSet::from([(d1.initial(), d2.initial())]);
    let mut frontier = vec![(d1.initial(), d2.initial())];
    for _ in 0..=n {
        let mut next = Vec::new();
        for &(p, q) in &frontier {
            if d1.finals().contains(&p) != d2.finals().contains(&q) {
                return Ok(false);
            }
            for c in 0..k {
                let t = (d1.step(p, c), d2.step(q, c));
                if seen.insert(t) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    Ok(true)
}

/// Partitions all words of length at most `n` by agreement of the
/// membership of `x·w·y` over all contexts `x, y` of length at most `n`.
/// Classes are ordered by their first (length-lexicographic) member.
pub fn syntactic_classes_bruteforce(d: &Dfa, n: usize) -> Vec<Vec<String>> {
    let words: Vec<String> = WordEnumeration::new(d.alphabet().to_vec(), n)
        .iter()
        .collect();
    // the context table factors: membership(x·w·y) = accept(run(run(init, x), w·y)),
    // so it is determined by the left states reached by contexts x and, per such
    // state, the acceptance profile over the contexts y.
    let left_states: Vec<usize> = {
        let mut seen = BTreeSet::new();
        for x in &words {
            seen.insert(d.run_from(d.initial(), x));
        }
        seen.into_iter().collect()
    };
    let accept_profile: Vec<Vec<bool>> = (0..d.states())
        .map(|q| {
            words
                .iter()
                .map(|y| d.finals().contains(&d.run_from(q, y)))
                .collect()
        })
        .collect();
    let mut profile_class: HashMap<&Vec<bool>, usize> = HashMap::new();
    for q in 0..d.states() {
        let fresh = profile_class.len();
        profile_class.entry(&accept_profile[q]).or_insert(fresh);
    }

    let mut classes: Vec<Vec<String>> = Vec::new();
    let mut by_signature: HashMap<Vec<usize>, usize> = HashMap::new();
    for w in &words {
        let signature: Vec<usize> = left_states
            .iter()
            .map(|&q| profile_class[&accept_profile[d.run_from(q, w)]])
            .collect();
        let fresh = classes.len();
        let idx = *by_signature.entry(signature).or_insert(fresh);
        if idx == classes.len() {
            classes.push(Vec::new());
        }
        classes[idx].push(w.clone());
    }
    classes
}

/// `φ(Σ^n)` by direct enumeration of all `|Σ|^n` words.
pub fn image_of_length(s: &Stamp, n: usize) -> Vec<Element> {
    let m = s.monoid();
    let images: Vec<Element> = s
        .alphabet()
        .iter()
        .map(|&c| s.letter_image(c).expect("alphabet letter"))
        .collect();
    let mut out = vec![false; m.size()];
    let mut stack = vec![(m.identity(), 0usize)];
    while let Some((e, depth)) = stack.pop() {
        if depth == n {
            out[e] = true;
            continue;
        }
        for &img in &images {
            stack.push((m.mul(e, img), depth + 1));
        }
    }
    out.iter()
        .enumerate()
        .filter_map(|(e, &b)| b.then_some(e))
        .collect()
}

/// Stability index recomputed from [`image_of_length`] alone, scanning
/// `k = 1..=max_k`. `None` when no index at most `max_k` exists.
pub fn stability_index_bruteforce(s: &Stamp, max_k: usize) -> Option<usize> {
    (1..=max_k).find(|&k| image_of_length(s, 2 * k) == image_of_length(s, k))
}

/// The sets `φ(Σ^1), …, φ(Σ^horizon)`, each recomputed by direct iteration
/// with letters multiplied on the *left* and no periodicity detection —
/// a second route to the level sets for lengths where enumerating the
/// `|Σ|^n` words individually is out of reach.
pub fn images_by_length_iterated(s: &Stamp, horizon: usize) -> Vec<Vec<Element>> {
    let m = s.monoid();
    let images: BTreeSet<Element> = s
        .alphabet()
        .iter()
        .map(|&c| s.letter_image(c).expect("alphabet letter"))
        .collect();
    let mut out: Vec<Vec<Element>> = Vec::with_capacity(horizon);
    let mut current: BTreeSet<Element> = images.clone();
    for _ in 0..horizon {
        out.push(current.iter().copied().collect());
        current = images
            .iter()
            .flat_map(|&g| current.iter().map(move |&x| m.mul(g, x)))
            .collect();
    }
    out
}

pub const MONOID_ENUMERATION_CAP: usize = 4;

/// All monoids of exactly `size` elements, up to isomorphism, identity
/// normalised to element 0. Exhaustive table search with canonical-form
/// deduplication; capped because the table space grows as `n^((n-1)^2)`.
pub fn monoids_of_size(size: usize) -> Result<Vec<FiniteMonoid>, AlgebraError> {
    if size == 0 || size > MONOID_ENUMERATION_CAP {
        return Err(AlgebraError::EnumerationTooLarge {
            requested: size,
            cap: MONOID_ENUMERATION_CAP,
        });
    }
    if size == 1 {
        return Ok(vec![FiniteMonoid::trivial()]);
    }
    let free = (size - 1) * (size - 1);
    let mut canon_seen: BTreeSet<Vec<Element>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut entries = vec![0usize; free];
    loop {
        let mut table = vec![vec![0; size]; size];
        for a in 0..size {
            table[0][a] = a;
            table[a][0] = a;
        }
        for (i, &e) in entries.iter().enumerate() {
            let a = 1 + i / (size - 1);
            let b = 1 + i % (size - 1);
            table[a][b] = e;
        }
        if associative(&table) {
            let canon = canonical_form(&table);
            if canon_seen.insert(canon) {
                out.push(FiniteMonoid::new(table, 0).expect("validated by enumeration"));
            }
        }
        // odometer over the free entries
        let mut i = 0;
        loop {
            if i == free {
                return Ok(out);
            }
            entries[i] += 1;
            if entries[i] < size {
                break;
            }
            entries[i] = 0;
            i += 1;
        }
    }
}

/// All monoids of size `1..=max_size`, up to isomorphism.
pub fn monoids_up_to(max_size: usize) -> Result<Vec<FiniteMonoid>, AlgebraError> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        out.extend(monoids_of_size(n)?);
    }
    Ok(out)
}

fn associative(table: &[Vec<Element>]) -> bool {
    let n = table.len();
    for a in 0..n {
        for b in 0..n {
            let ab = table[a][b];
            for c in 0..n {
                if table[ab][c] != table[a][table[b][c]] {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographically least table over all permutations fixing the identity 0.
fn canonical_form(table: &[Vec<Element>]) -> Vec<Element> {
    let n = table.len();
    let mut others: Vec<Element> = (1..n).collect();
    let mut best: Option<Vec<Element>> = None;
    permute(&mut others, 0, &mut |perm| {
        let mut map = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            map[i + 1] = p;
        }
        let mut flat = Vec::with_capacity(n * n);
        let mut inv = vec![0; n];
        for (a, &ma) in map.iter().enumerate() {
            inv[ma] = a;
        }
        for a in 0..n {
            for b in 0..n {
                flat.push(map[table[inv[a]][inv[b]]]);
            }
        }
        if best.as_ref().is_none_or(|b| flat < *b) {
            best = Some(flat);
        }
    });
    best.unwrap()
}

fn permute(items: &mut Vec<Element>, k: usize, visit: &mut impl FnMut(&[Element])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Identity satisfaction by word-level substitution: every variable ranges
/// over all words of length `1..=max_len` (`0..=max_len` in `all` mode) and
/// ω-powers are realised as the word power with exponent `|M|!`, which is
/// idempotent under any stamp onto `M`. With `max_len ≥ |M|` the word images
/// cover the whole substitution range, so the verdict is exact.
pub fn satisfies_bruteforce(s: &Stamp, id: &IdentityStatement, mode: Mode, max_len: usize) -> bool {
    let m = s.monoid();
    assert!(m.size() <= 20, "factorial exponent overflows past size 20");
    let exponent: u64 = (1..=m.size() as u64).product();
    let min_len = match mode {
        Mode::All => 0,
        Mode::Ne => 1,
    };
    let mut words: Vec<Element> = Vec::new();
    for n in min_len..=max_len {
        for w in words_of_length(s.alphabet(), n) {
            words.push(s.eval(&w).expect("enumerated over the stamp alphabet"));
        }
    }
    let vars: Vec<String> = id.variables().into_iter().collect();
    let mut assignment: Vec<Element> = vec![m.identity(); vars.len()];
    let mut idx = vec![0usize; vars.len()];
    if !vars.is_empty() {
        assignment.iter_mut().for_each(|v| *v = words[0]);
    }
    loop {
        let lhs = eval_word_level(m, &id.lhs, &vars, &assignment, exponent);
        let rhs = eval_word_level(m, &id.rhs, &vars, &assignment, exponent);
        if lhs != rhs {
            return false;
        }
        let mut i = 0;
        loop {
            if i == vars.len() {
                return true;
            }
            idx[i] += 1;
            if idx[i] < words.len() {
                assignment[i] = words[idx[i]];
                break;
            }
            idx[i] = 0;
            assignment[i] = words[0];
            i += 1;
        }
    }
}

fn eval_word_level(
    m: &FiniteMonoid,
    t: &OmegaTerm,
    vars: &[String],
    assignment: &[Element],
    exponent: u64,
) -> Element {
    let mut acc = m.identity();
    for f in &t.0 {
        let v = match f {
            Factor::Var(name) => {
                let i = vars.iter().position(|v| v == name).expect("bound variable");
                assignment[i]
            }
            Factor::Omega(inner) => m.pow(
                eval_word_level(m, inner, vars, assignment, exponent),
                exponent,
            ),
        };
        acc = m.mul(acc, v);
    }
    acc
}

/// Is `u` a subword (scattered substring) of `w`?
pub fn is_subword(u: &str, w: &str) -> bool {
    let mut it = u.chars().peekable();
    for c in w.chars() {
        if it.peek() == Some(&c) {
            it.next();
        }
    }
    it.peek().is_none()
}

/// Does `w` match the monomial `A₀* a₁ A₁* ⋯ a_k A_k*`? Direct
/// nondeterministic simulation on levels, no automata machinery.
pub fn monomial_matches(sets: &[BTreeSet<char>], letters: &[char], w: &str) -> bool {
    assert_eq!(sets.len(), letters.len() + 1);
    let mut levels: BTreeSet<usize> = BTreeSet::from([0]);
    for c in w.chars() {
        let mut next = BTreeSet::new();
        for &l in &levels {
            if sets[l].contains(&c) {
                next.insert(l);
            }
            if l < letters.len() && letters[l] == c {
                next.insert(l + 1);
            }
        }
        levels = next;
        if levels.is_empty() {
            return false;
        }
    }
    levels.contains(&letters.len())
}

/// Language-level test for local triviality: membership of words of length
/// at least `2s` must depend only on the length-`s` prefix and suffix.
/// Checked on the syntactic stamp as: for all `α, β ∈ φ(Σ^s)`, the
/// membership value of `α·m·β` is constant over `m ∈ M`. The level set is
/// recomputed by word enumeration.
pub fn is_li_language_bruteforce(s: &Stamp) -> bool {
    let acc = s
        .accepting()
        .expect("needs a syntactic stamp with accepting set");
    let m = s.monoid();
    let stability = s.stability_index();
    let a_s = image_of_length(s, stability);
    for &alpha in &a_s {
        for &beta in &a_s {
            let mut values = m
                .elements()
                .map(|e| acc.contains(&m.mul(m.mul(alpha, e), beta)));
            let first = values.next().expect("nonempty monoid");
            if values.any(|v| v != first) {
                return false;
            }
        }
    }
    true
}
