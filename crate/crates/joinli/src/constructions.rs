//! Constructive quotient witnesses: given a language `L` of a variety and
//! words `x, y`, build a language `K` of the same variety with
//! `L = x⁻¹ K y⁻¹`.
//!
//! Four families are covered — monomials for R, their mirror images for L,
//! unions of subword classes for J, and group-recognised languages — plus an
//! exhaustive reproduction of the counterexample showing no such witness
//! scheme can exist for J1. Every builder verifies the defining quotient
//! identity by automaton equivalence before returning.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::automata::{
    all_words, monomial_language, single_word, subword_language, AutomataError, Dfa, NormalMode,
};
use crate::decide::{
    bounded_criterion_check, is_essentially_v_equational, is_essentially_v_structural,
    CriterionOutcome,
};
use crate::identities::Variety;
use crate::oracle::words_of_length;
use crate::stamps::Stamp;

/// Default ceiling on subword-profile automaton states; profiles grow
/// doubly exponentially in the level.
pub const DEFAULT_PROFILE_STATE_CAP: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Automata(#[from] AutomataError),
    #[error("every monomial must be in {expected:?}-normal form for this construction")]
    WrongMode { expected: NormalMode },
    #[error("monomials must share a single alphabet")]
    MixedAlphabets,
    #[error("at least one monomial is required")]
    NoMonomials,
    #[error("subword profile exceeded the state cap of {cap}")]
    ProfileCapExceeded { cap: usize },
    #[error("language is not piecewise-testable at level {level}: words in the same subword class disagree on membership")]
    NotPiecewiseTestable { level: usize },
    #[error("syntactic monoid of size {size} is not a group")]
    NotAGroup { size: usize },
    #[error("internal consistency failure: {context}")]
    Consistency { context: String },
}

/// A monomial `A₀* a₁ A₁* ⋯ a_k A_k*` in R- or L-normal form.
#[derive(Debug, Clone)]
pub struct RMonomial {
    alphabet: Vec<char>,
    sets: Vec<BTreeSet<char>>,
    letters: Vec<char>,
    mode: NormalMode,
    dfa: Dfa,
}

impl RMonomial {
    pub fn new(
        alphabet: Vec<char>,
        sets: Vec<BTreeSet<char>>,
        letters: Vec<char>,
        mode: NormalMode,
    ) -> Result<Self, ConstructionError> {
        let dfa = monomial_language(&alphabet, &sets, &letters, Some(mode))?;
        Ok(RMonomial {
            alphabet,
            sets,
            letters,
            mode,
            dfa,
        })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn sets(&self) -> &[BTreeSet<char>] {
        &self.sets
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn mode(&self) -> NormalMode {
        self.mode
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    fn degree(&self) -> usize {
        self.letters.len()
    }
}

fn check_monomials(
    monomials: &[RMonomial],
    expected: NormalMode,
) -> Result<Vec<char>, ConstructionError> {
    let first = monomials.first().ok_or(ConstructionError::NoMonomials)?;
    let alphabet = first.alphabet.clone();
    for m in monomials {
        if m.mode != expected {
            return Err(ConstructionError::WrongMode { expected });
        }
        if m.alphabet != alphabet {
            return Err(ConstructionError::MixedAlphabets);
        }
    }
    Ok(alphabet)
}

fn union_of(alphabet: &[char], dfas: impl IntoIterator<Item = Dfa>) -> Dfa {
    let mut acc = crate::automata::empty_language(alphabet);
    for d in dfas {
        acc = acc.union(&d).expect("same alphabet");
    }
    acc
}

fn verify_quotient(
    k: &Dfa,
    x: &str,
    y: &str,
    l: &Dfa,
    what: &str,
) -> Result<(), ConstructionError> {
    if k.word_quotient(x, y).equivalent(l).unwrap_or(false) {
        Ok(())
    } else {
        Err(ConstructionError::Consistency {
            context: format!("{what}: constructed K fails x^-1 K y^-1 = L"),
        })
    }
}

/// Witness for a union of R-normal monomials: `K` with `L = x⁻¹ K y⁻¹` that
/// is again a Boolean combination of R-monomials.
///
/// Per monomial, `y` factors uniquely as `z·t` with `z ∈ A_k*` maximal; the
/// witness is `x·A₀*a₁⋯a_kA_k*·t` minus the finitely many languages
/// `x·A₀*a₁⋯a_k·v·t` for `v ∈ A_k^{<|z|}` (read as the singleton `{x·v·t}`
/// when `k = 0`).
pub fn r_witness(monomials: &[RMonomial], x: &str, y: &str) -> Result<Dfa, ConstructionError> {
    let alphabet = check_monomials(monomials, NormalMode::R)?;
    let target = union_of(&alphabet, monomials.iter().map(|m| m.dfa.clone()));
    target.check_word(x)?;
    target.check_word(y)?;

    let mut pieces = Vec::new();
    for mono in monomials {
        let k = mono.degree();
        let last = &mono.sets[k];
        let split = y.chars().take_while(|c| last.contains(c)).count();
        let (z, t) = y.split_at(y.char_indices().nth(split).map_or(y.len(), |(i, _)| i));
        let mut piece = mono.dfa.concat_words(x, t);
        let last_letters: Vec<char> = last.iter().copied().collect();
        for len in 0..z.chars().count() {
            for v in words_of_length(&last_letters, len) {
                let excluded = if k == 0 {
                    single_word(&alphabet, &format!("{x}{v}{t}"))?
                } else {
                    let mut prefix_sets = mono.sets[..k].to_vec();
                    prefix_sets.push(BTreeSet::new());
                    let stem = monomial_language(&alphabet, &prefix_sets, &mono.letters, None)?;
                    stem.concat_words(x, &format!("{v}{t}"))
                };
                piece = piece.difference(&excluded).expect("same alphabet");
            }
        }
        pieces.push(piece);
    }
    let witness = union_of(&alphabet, pieces);
    verify_quotient(&witness, x, y, &target, "r_witness")?;
    Ok(witness)
}

/// Mirror witness for unions of L-normal monomials: `x` factors as `t·z`
/// with `z ∈ A₀*` a maximal suffix, and the excluded languages are
/// `t·v·a₁A₁*⋯a_kA_k*·y` for `v ∈ A₀^{<|z|}`.
pub fn l_witness(monomials: &[RMonomial], x: &str, y: &str) -> Result<Dfa, ConstructionError> {
    let alphabet = check_monomials(monomials, NormalMode::L)?;
    let target = union_of(&alphabet, monomials.iter().map(|m| m.dfa.clone()));
    target.check_word(x)?;
    target.check_word(y)?;

    let mut pieces = Vec::new();
    for mono in monomials {
        let k = mono.degree();
        let first = &mono.sets[0];
        let chars: Vec<char> = x.chars().collect();
        let keep = chars.iter().rev().take_while(|c| first.contains(c)).count();
        let t: String = chars[..chars.len() - keep].iter().collect();
        let z: String = chars[chars.len() - keep..].iter().collect();
        let mut piece = mono.dfa.concat_words(&t, y);
        let first_letters: Vec<char> = first.iter().copied().collect();
        for len in 0..z.chars().count() {
            for v in words_of_length(&first_letters, len) {
                let excluded = if k == 0 {
                    single_word(&alphabet, &format!("{t}{v}{y}"))?
                } else {
                    let mut suffix_sets = vec![BTreeSet::new()];
                    suffix_sets.extend_from_slice(&mono.sets[1..]);
                    let stem = monomial_language(&alphabet, &suffix_sets, &mono.letters, None)?;
                    stem.concat_words(&format!("{t}{v}"), y)
                };
                piece = piece.difference(&excluded).expect("same alphabet");
            }
        }
        pieces.push(piece);
    }
    let witness = union_of(&alphabet, pieces);
    verify_quotient(&witness, x, y, &target, "l_witness")?;
    Ok(witness)
}

/// The deterministic automaton whose state after reading `w` is the set of
/// subwords of `w` of length at most `k`. Two words reach the same state
/// exactly when they share their short subwords.
#[derive(Debug, Clone)]
pub struct SubwordProfile {
    alphabet: Vec<char>,
    k: usize,
    states: Vec<BTreeSet<String>>,
    delta: Vec<Vec<usize>>,
}

/// Builds the reachable subword-profile automaton for the given level.
pub fn simon_profile(
    alphabet: &[char],
    k: usize,
    cap: usize,
) -> Result<SubwordProfile, ConstructionError> {
    let letters = alphabet.len();
    let initial: BTreeSet<String> = BTreeSet::from([String::new()]);
    let mut index: HashMap<BTreeSet<String>, usize> = HashMap::new();
    let mut states = vec![initial.clone()];
    index.insert(initial, 0);
    let mut delta: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < states.len() {
        let state = states[head].clone();
        let mut row = Vec::with_capacity(letters);
        for &c in alphabet {
            let mut next = state.clone();
            for u in &state {
                if u.chars().count() < k {
                    next.insert(format!("{u}{c}"));
                }
            }
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    if states.len() >= cap {
                        return Err(ConstructionError::ProfileCapExceeded { cap });
                    }
                    index.insert(next.clone(), states.len());
                    states.push(next);
                    states.len() - 1
                }
            };
            row.push(id);
        }
        delta.push(row);
        head += 1;
    }
    Ok(SubwordProfile {
        alphabet: alphabet.to_vec(),
        k,
        states,
        delta,
    })
}

impl SubwordProfile {
    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn level(&self) -> usize {
        self.k
    }

    /// Number of reachable profiles, i.e. of subword classes at this level.
    pub fn class_count(&self) -> usize {
        self.states.len()
    }

    pub fn state_of(&self, w: &str) -> usize {
        w.chars().fold(0, |q, c| {
            let i = self
                .alphabet
                .iter()
                .position(|&a| a == c)
                .unwrap_or_else(|| panic!("symbol {c:?} not in alphabet"));
            self.delta[q][i]
        })
    }

    /// The subwords of length at most the level, for words reaching `state`.
    pub fn subwords(&self, state: usize) -> &BTreeSet<String> {
        &self.states[state]
    }

    pub fn equivalent_words(&self, w1: &str, w2: &str) -> bool {
        self.state_of(w1) == self.state_of(w2)
    }

    /// The union of the subword classes named by `accept`, as an automaton.
    pub fn class_language(&self, accept: &BTreeSet<usize>) -> Dfa {
        Dfa::new(self.alphabet.clone(), 0, accept.clone(), self.delta.clone())
            .expect("profile automaton is complete")
            .minimize()
    }

    /// Profile states jointly reachable with an accepting state of `d`,
    /// i.e. the classes realised by words of the language.
    fn realised_classes(&self, d: &Dfa) -> Result<BTreeSet<usize>, AutomataError> {
        let mut out = BTreeSet::new();
        for (p, q) in self.product_reach(d)? {
            if d.finals().contains(&q) {
                out.insert(p);
            }
        }
        Ok(out)
    }

    fn product_reach(&self, d: &Dfa) -> Result<Vec<(usize, usize)>, AutomataError> {
        if d.alphabet() != self.alphabet.as_slice() {
            return Err(AutomataError::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: d.alphabet().to_vec(),
            });
        }
        let mut seen = BTreeSet::from([(0, d.initial())]);
        let mut frontier = vec![(0, d.initial())];
        while let Some((p, q)) = frontier.pop() {
            for c in 0..self.alphabet.len() {
                let t = (self.delta[p][c], d.step(q, c));
                if seen.insert(t) {
                    frontier.push(t);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

/// Witness for a piecewise-testable language: `L` must be a union of
/// subword classes at level `k` (checked); the witness is the union of the
/// level-`|xy|+k` classes of `x·w·y` over `w ∈ L`.
pub fn j_witness(
    l: &Dfa,
    k: usize,
    x: &str,
    y: &str,
    cap: usize,
) -> Result<Dfa, ConstructionError> {
    l.check_word(x)?;
    l.check_word(y)?;
    let profile = simon_profile(l.alphabet(), k, cap)?;
    // precondition: membership must be constant on each subword class
    let mut verdict: Vec<Option<bool>> = vec![None; profile.class_count()];
    for (p, q) in profile.product_reach(l)? {
        let accepting = l.finals().contains(&q);
        match verdict[p] {
            None => verdict[p] = Some(accepting),
            Some(v) if v != accepting => {
                return Err(ConstructionError::NotPiecewiseTestable { level: k })
            }
            _ => {}
        }
    }

    let m = x.chars().count() + y.chars().count() + k;
    let fine = simon_profile(l.alphabet(), m, cap)?;
    let wrapped = l.concat_words(x, y);
    let realised = fine.realised_classes(&wrapped)?;
    let witness = fine.class_language(&realised);
    verify_quotient(&witness, x, y, l, "j_witness")?;
    Ok(witness)
}

/// Witness for a language whose syntactic monoid is a group: the preimage
/// of `η(x)·η(L)·η(y)` under the syntactic morphism `η`.
pub fn group_witness(l: &Dfa, x: &str, y: &str) -> Result<Dfa, ConstructionError> {
    l.check_word(x)?;
    l.check_word(y)?;
    let stamp = Stamp::syntactic(l);
    let monoid = stamp.monoid();
    if !monoid.is_group() {
        return Err(ConstructionError::NotAGroup {
            size: monoid.size(),
        });
    }
    let image_x = stamp.eval(x).expect("checked word");
    let image_y = stamp.eval(y).expect("checked word");
    let accepting = stamp
        .accepting()
        .expect("syntactic stamp carries its accepting set");
    let target: BTreeSet<_> = accepting
        .iter()
        .map(|&f| monoid.mul(monoid.mul(image_x, f), image_y))
        .collect();
    let witness = stamp.language_of(&target);
    verify_quotient(&witness, x, y, l, "group_witness")?;
    Ok(witness)
}

/// All Boolean combinations of the languages `Σ*cΣ*` for `c` in the
/// alphabet, deduplicated by language equality. These are exactly the
/// languages with idempotent commutative syntactic monoid.
pub fn j1_languages(alphabet: &[char]) -> Vec<Dfa> {
    // atoms: words whose letter content is exactly a given subset
    let n = alphabet.len();
    let mut atoms = Vec::new();
    for subset in 0u32..(1 << n) {
        let mut atom = all_words(alphabet);
        for (i, &c) in alphabet.iter().enumerate() {
            let contains = subword_language(alphabet, &c.to_string()).expect("single letter");
            let part = if subset >> i & 1 == 1 {
                contains
            } else {
                contains.complement()
            };
            atom = atom.intersection(&part).expect("same alphabet");
        }
        atoms.push(atom);
    }
    let mut out: Vec<Dfa> = Vec::new();
    for mask in 0u32..(1 << atoms.len()) {
        let selected = atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, a)| a.clone());
        let lang = union_of(alphabet, selected);
        if !out.contains(&lang) {
            out.push(lang);
        }
    }
    out
}

/// One refuted context-length pair of the J1 counterexample.
#[derive(Debug, Clone, Serialize)]
pub struct J1Refutation {
    pub left_len: usize,
    pub right_len: usize,
    pub u: String,
    pub v: String,
    /// word outside `u⁻¹Lv⁻¹` that every candidate's quotient cannot separate…
    pub absent: String,
    /// …from this word inside `u⁻¹Lv⁻¹`
    pub present: String,
}

/// Exhaustive reproduction of the failure of criterion (A) for J1.
#[derive(Debug, Clone, Serialize)]
pub struct J1Report {
    pub language: Dfa,
    pub x: String,
    pub y: String,
    pub candidate_count: usize,
    pub max_context_len: usize,
    pub refutations: Vec<J1Refutation>,
    pub certified_language: Dfa,
    pub essentially_j1: bool,
}

/// Builds the counterexample report: `L = Σ*bΣ*` over `{a, b}` with
/// `x = b`, `y = ε` admits no quotient witness among the 16 languages with
/// idempotent commutative syntactic monoid, for any context lengths up to 3
/// — each pair `(a^k, a^l)` is refuted by the words `a` and `ab` — even
/// though the syntactic stamp of `b·Σ*bΣ*` is essentially-J1 by both
/// procedures. Any deviation from that outcome raises a consistency error.
pub fn j1_counterexample_report() -> Result<J1Report, ConstructionError> {
    let alphabet = ['a', 'b'];
    let language = subword_language(&alphabet, "b").expect("Σ*bΣ*");
    let (x, y) = ("b", "");
    let candidates = j1_languages(&alphabet);
    if candidates.len() != 16 {
        return Err(ConstructionError::Consistency {
            context: format!(
                "expected 16 distinct J1 languages over two letters, found {}",
                candidates.len()
            ),
        });
    }

    let max_context_len = 3;
    let mut refutations = Vec::new();
    for left_len in 0..=max_context_len {
        for right_len in 0..=max_context_len {
            let outcome =
                bounded_criterion_check(&language, x, y, left_len, right_len, &candidates)?;
            let (u, v) = match outcome {
                CriterionOutcome::Refuted { u, v } => (u, v),
                CriterionOutcome::Expressible { .. } => {
                    return Err(ConstructionError::Consistency {
                        context: format!(
                            "quotient expressibility unexpectedly holds at context lengths ({left_len}, {right_len})"
                        ),
                    })
                }
            };
            if u != "a".repeat(left_len) || v != "a".repeat(right_len) {
                return Err(ConstructionError::Consistency {
                    context: format!(
                        "expected the refutation at (a^{left_len}, a^{right_len}), got ({u}, {v})"
                    ),
                });
            }
            let quotient = language.word_quotient(&u, &v);
            if quotient.accepts("a") || !quotient.accepts("ab") {
                return Err(ConstructionError::Consistency {
                    context: "the distinguishing pair must satisfy a ∉ u⁻¹Lv⁻¹ and ab ∈ u⁻¹Lv⁻¹"
                        .into(),
                });
            }
            let xu = format!("{x}{u}");
            let vy = format!("{v}{y}");
            for cand in &candidates {
                let q = cand.word_quotient(&xu, &vy);
                if q.accepts("a") != q.accepts("ab") {
                    return Err(ConstructionError::Consistency {
                        context: "a candidate quotient separates a from ab, contradicting letter-content invariance".into(),
                    });
                }
            }
            refutations.push(J1Refutation {
                left_len,
                right_len,
                u,
                v,
                absent: "a".into(),
                present: "ab".into(),
            });
        }
    }

    // the same wrapped language is nonetheless essentially-J1
    let certified_language = language.concat_words("b", "");
    let stamp = Stamp::syntactic(&certified_language);
    let (basis, _) = Variety::J1.basis();
    let structural = is_essentially_v_structural(&stamp, &basis);
    let equational = is_essentially_v_equational(&stamp, &basis);
    if !(structural && equational) {
        return Err(ConstructionError::Consistency {
            context: format!(
                "b·Σ*bΣ* must be essentially-J1 (structural={structural}, equational={equational})"
            ),
        });
    }

    Ok(J1Report {
        language,
        x: x.to_string(),
        y: y.to_string(),
        candidate_count: candidates.len(),
        max_context_len,
        refutations,
        certified_language,
        essentially_j1: true,
    })
}

impl fmt::Display for J1Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "J1 against criterion (A): L = Σ*bΣ* over {{a, b}}, x = {:?}, y = {:?}",
            self.x, self.y
        )?;
        writeln!(
            f,
            "candidates: {} distinct Boolean combinations of Σ*aΣ* and Σ*bΣ*",
            self.candidate_count
        )?;
        for r in &self.refutations {
            writeln!(
                f,
                "  context lengths ({}, {}): refuted at u = {:?}, v = {:?}: {:?} ∉ u⁻¹Lv⁻¹ ∋ {:?}, \
                 yet every candidate quotient (xu)⁻¹K(vy)⁻¹ contains both or neither",
                r.left_len, r.right_len, r.u, r.v, r.absent, r.present
            )?;
        }
        writeln!(
            f,
            "no bounded quotient expression exists, so Lang(J1 ∨ LI) misses x·L·y = b·Σ*bΣ*"
        )?;
        write!(
            f,
            "still, the syntactic stamp of b·Σ*bΣ* is essentially-J1 (structural and equational procedures agree)"
        )
    }
}

#[derive(Debug, Clone, serde::Deserialize)]
struct MonomialJsonEntry {
    sets: Vec<BTreeSet<char>>,
    letters: Vec<char>,
}

#[derive(Debug, Clone, serde::Deserialize)]
struct MonomialsJson {
    alphabet: Vec<char>,
    monomials: Vec<MonomialJsonEntry>,
    mode: NormalMode,
}

/// Parses the monomial-list JSON format:
/// `{"alphabet": [...], "monomials": [{"sets": [...], "letters": [...]}, …], "mode": "R"}`.
pub fn monomials_from_json(text: &str) -> Result<Vec<RMonomial>, ConstructionError> {
    let raw: MonomialsJson =
        serde_json::from_str(text).map_err(|e| ConstructionError::Consistency {
            context: format!("monomial JSON: {e}"),
        })?;
    raw.monomials
        .into_iter()
        .map(|m| RMonomial::new(raw.alphabet.clone(), m.sets, m.letters, raw.mode))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    const AB: [char; 2] = ['a', 'b'];

    fn b_star_a_sigma_star() -> RMonomial {
        RMonomial::new(
            AB.to_vec(),
            vec![BTreeSet::from(['b']), BTreeSet::from(['a', 'b'])],
            vec!['a'],
            NormalMode::R,
        )
        .unwrap()
    }

    #[test]
    fn r_witness_with_empty_suffix() {
        let mono = b_star_a_sigma_star();
        let k = r_witness(std::slice::from_ref(&mono), "b", "").unwrap();
        // K = b · b*a(a|b)*, no exclusions
        let want = mono.dfa().concat_words("b", "");
        assert!(k.equivalent(&want).unwrap());
        assert!(k.word_quotient("b", "").equivalent(mono.dfa()).unwrap());
    }

    #[test]
    fn r_witness_degree_zero_uses_singleton_exclusions() {
        let mono = RMonomial::new(
            AB.to_vec(),
            vec![BTreeSet::from(['a'])],
            vec![],
            NormalMode::R,
        )
        .unwrap();
        let k = r_witness(std::slice::from_ref(&mono), "", "a").unwrap();
        // a* minus the empty word: the nonempty words of a's
        let want = mono
            .dfa()
            .difference(&single_word(&AB, "").unwrap())
            .unwrap();
        assert!(k.equivalent(&want).unwrap());
    }

    #[test]
    fn r_witness_trivial_wrapping_returns_the_language() {
        let mono = b_star_a_sigma_star();
        let k = r_witness(std::slice::from_ref(&mono), "", "").unwrap();
        assert!(k.equivalent(mono.dfa()).unwrap());
    }

    #[test]
    fn r_witness_exclusion_path_with_nonempty_z() {
        let mono = b_star_a_sigma_star();
        // y = "ab": z = "ab" (both letters in A₁), t = ""
        let k = r_witness(std::slice::from_ref(&mono), "", "ab").unwrap();
        assert!(k.word_quotient("", "ab").equivalent(mono.dfa()).unwrap());
    }

    #[test]
    fn r_witness_rejects_l_mode_monomials() {
        let mono = RMonomial::new(
            AB.to_vec(),
            vec![BTreeSet::from(['a', 'b']), BTreeSet::from(['b'])],
            vec!['a'],
            NormalMode::L,
        )
        .unwrap();
        assert_eq!(
            r_witness(&[mono], "", "").unwrap_err(),
            ConstructionError::WrongMode {
                expected: NormalMode::R
            }
        );
    }

    #[test]
    fn l_witness_mirrors_r_witness_under_reversal() {
        // L-normal: a ∉ A₁ = {b}
        let l_mono = RMonomial::new(
            AB.to_vec(),
            vec![BTreeSet::from(['a', 'b']), BTreeSet::from(['b'])],
            vec!['a'],
            NormalMode::L,
        )
        .unwrap();
        // mirrored monomial is R-normal
        let r_mono = RMonomial::new(
            AB.to_vec(),
            vec![BTreeSet::from(['b']), BTreeSet::from(['a', 'b'])],
            vec!['a'],
            NormalMode::R,
        )
        .unwrap();
        for (x, y) in [("a", ""), ("", ""), ("ba", "b"), ("aa", "ab")] {
            let kl = l_witness(std::slice::from_ref(&l_mono), x, y).unwrap();
            let xr: String = x.chars().rev().collect();
            let yr: String = y.chars().rev().collect();
            let kr = r_witness(std::slice::from_ref(&r_mono), &yr, &xr).unwrap();
            assert!(kl.equivalent(&kr.reverse()).unwrap(), "x={x:?} y={y:?}");
        }
    }

    #[test]
    fn l_witness_verifies_its_quotient() {
        let mono = RMonomial::new(
            AB.to_vec(),
            vec![BTreeSet::from(['a', 'b']), BTreeSet::from(['b'])],
            vec!['a'],
            NormalMode::L,
        )
        .unwrap();
        let k = l_witness(std::slice::from_ref(&mono), "a", "").unwrap();
        assert!(k.word_quotient("a", "").equivalent(mono.dfa()).unwrap());
    }

    #[test]
    fn profile_level_zero_has_one_state() {
        let p = simon_profile(&AB, 0, DEFAULT_PROFILE_STATE_CAP).unwrap();
        assert_eq!(p.class_count(), 1);
    }

    #[test]
    fn profile_level_one_counts_letter_sets() {
        let p = simon_profile(&AB, 1, DEFAULT_PROFILE_STATE_CAP).unwrap();
        assert_eq!(p.class_count(), 4);
        let single = simon_profile(&['a'], 1, DEFAULT_PROFILE_STATE_CAP).unwrap();
        assert_eq!(single.class_count(), 2);
    }

    #[test]
    fn profile_cap_is_enforced() {
        assert_eq!(
            simon_profile(&AB, 2, 5).unwrap_err(),
            ConstructionError::ProfileCapExceeded { cap: 5 }
        );
    }

    #[test]
    fn profile_states_are_exactly_short_subword_sets() {
        let p = simon_profile(&AB, 2, DEFAULT_PROFILE_STATE_CAP).unwrap();
        for w in oracle::WordEnumeration::new(AB.to_vec(), 5).iter() {
            let state = p.state_of(&w);
            for u in oracle::WordEnumeration::new(AB.to_vec(), 2).iter() {
                assert_eq!(
                    p.subwords(state).contains(&u),
                    oracle::is_subword(&u, &w),
                    "u={u:?} w={w:?}"
                );
            }
        }
    }

    #[test]
    fn profile_equivalence_is_a_congruence_on_samples() {
        let p = simon_profile(&AB, 2, DEFAULT_PROFILE_STATE_CAP).unwrap();
        let words: Vec<String> = oracle::WordEnumeration::new(AB.to_vec(), 4)
            .iter()
            .collect();
        for w1 in &words {
            for w2 in &words {
                if p.equivalent_words(w1, w2) {
                    for glue in ["a", "b", "ab"] {
                        assert!(p.equivalent_words(&format!("{glue}{w1}"), &format!("{glue}{w2}")));
                        assert!(p.equivalent_words(&format!("{w1}{glue}"), &format!("{w2}{glue}")));
                    }
                }
            }
        }
    }

    #[test]
    fn j_witness_identity_case() {
        let l = subword_language(&AB, "b").unwrap();
        let k = j_witness(&l, 1, "", "", DEFAULT_PROFILE_STATE_CAP).unwrap();
        assert!(k.equivalent(&l).unwrap());
    }

    #[test]
    fn j_witness_wrapping_case() {
        let l = subword_language(&AB, "b").unwrap();
        let k = j_witness(&l, 1, "a", "", DEFAULT_PROFILE_STATE_CAP).unwrap();
        assert!(k.word_quotient("a", "").equivalent(&l).unwrap());
        // every witness word must contain the subword ab
        assert!(k
            .difference(&subword_language(&AB, "ab").unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn j_witness_of_empty_language_is_empty() {
        let l = crate::automata::empty_language(&AB);
        let k = j_witness(&l, 1, "a", "b", DEFAULT_PROFILE_STATE_CAP).unwrap();
        assert!(k.is_empty());
    }

    #[test]
    fn j_witness_rejects_non_piecewise_testable_levels() {
        // a Σ* is not a union of ~_1 classes
        let l = crate::automata::prefix_language(&AB, "a").unwrap();
        assert_eq!(
            j_witness(&l, 1, "", "", DEFAULT_PROFILE_STATE_CAP).unwrap_err(),
            ConstructionError::NotPiecewiseTestable { level: 1 }
        );
    }

    #[test]
    fn group_witness_on_parity() {
        let even = Dfa::new(vec!['a'], 0, BTreeSet::from([0]), vec![vec![1], vec![0]]).unwrap();
        let k = group_witness(&even, "a", "").unwrap();
        // η(a)·η(L) = the odd class, so K is the words of odd length
        let odd = even.complement();
        assert!(k.equivalent(&odd).unwrap());
        let k2 = group_witness(&even, "", "").unwrap();
        assert!(k2.equivalent(&even).unwrap());
    }

    #[test]
    fn group_witness_rejects_non_groups() {
        let l = crate::automata::prefix_language(&AB, "a").unwrap();
        assert_eq!(
            group_witness(&l, "a", "").unwrap_err(),
            ConstructionError::NotAGroup { size: 3 }
        );
    }

    #[test]
    fn sixteen_j1_languages_over_two_letters() {
        let langs = j1_languages(&AB);
        assert_eq!(langs.len(), 16);
        // all are letter-content determined: quotienting by a letter of the
        // word's content never changes membership of same-content words
        for lang in &langs {
            for w in oracle::WordEnumeration::new(AB.to_vec(), 4).iter() {
                let doubled: String = w.chars().flat_map(|c| [c, c]).collect();
                assert_eq!(lang.accepts(&w), lang.accepts(&doubled), "{w:?}");
            }
        }
    }

    #[test]
    fn j1_report_reproduces_the_refutation() {
        let report = j1_counterexample_report().unwrap();
        assert_eq!(report.candidate_count, 16);
        assert_eq!(report.refutations.len(), 16);
        for r in &report.refutations {
            assert_eq!(r.u, "a".repeat(r.left_len));
            assert_eq!(r.v, "a".repeat(r.right_len));
            assert_eq!((r.absent.as_str(), r.present.as_str()), ("a", "ab"));
        }
        assert!(report.essentially_j1);
        let text = report.to_string();
        assert!(text.contains("essentially-J1"));
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"candidate_count\":16"));
    }

    #[test]
    fn monomial_json_parses() {
        let text = r#"{
            "alphabet": ["a", "b"],
            "monomials": [{"sets": [["b"], ["a", "b"]], "letters": ["a"]}],
            "mode": "R"
        }"#;
        let monos = monomials_from_json(text).unwrap();
        assert_eq!(monos.len(), 1);
        assert!(monos[0]
            .dfa()
            .equivalent(b_star_a_sigma_star().dfa())
            .unwrap());
    }
}
