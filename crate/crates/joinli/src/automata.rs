//! Complete deterministic finite automata and the language families used by
//! the decision procedures.
//!
//! Every [`Dfa`] is complete: the transition table is total. Partial automata
//! are completed with a sink when loaded from JSON. All operations return a
//! *canonical* automaton — minimized and renumbered breadth-first from the
//! initial state — so two automata recognise the same language exactly when
//! they are structurally equal.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of an automaton state.
pub type State = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AutomataError {
    #[error("alphabet must be nonempty")]
    EmptyAlphabet,
    #[error("duplicate letter {0:?} in alphabet")]
    DuplicateLetter(char),
    #[error("automaton must have at least one state")]
    NoStates,
    #[error("state {state} is out of range ({states} states)")]
    StateOutOfRange { state: State, states: usize },
    #[error("delta must have one row of {letters} entries per state, row {row} has {len}")]
    DeltaShape {
        letters: usize,
        row: usize,
        len: usize,
    },
    #[error("operands have different alphabets: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<char>, right: Vec<char> },
    #[error("symbol {symbol:?} is not in the alphabet {alphabet:?}")]
    UnknownSymbol { symbol: char, alphabet: Vec<char> },
    #[error("letter {letter:?} of monomial position {index} is not in the alphabet")]
    MonomialLetterOutOfAlphabet { index: usize, letter: char },
    #[error("monomial needs one more set than letters: {sets} sets, {letters} letters")]
    MonomialShape { sets: usize, letters: usize },
    #[error("{mode:?}-normal form violated at position {index}: letter {letter:?} lies in the adjacent set")]
    NormalFormViolation {
        mode: NormalMode,
        index: usize,
        letter: char,
    },
    #[error("morphism image for {letter:?} must be a nonempty word")]
    ErasingMorphism { letter: char },
    #[error("morphism is missing an image for letter {letter:?}")]
    MissingImage { letter: char },
}

/// Normal forms for monomials `A₀*a₁A₁*…a_kA_k*`: `R` requires
/// `aᵢ ∉ Aᵢ₋₁`, `L` requires `aᵢ ∉ Aᵢ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormalMode {
    R,
    L,
}

/// A complete deterministic finite automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<char>,
    initial: State,
    finals: BTreeSet<State>,
    delta: Vec<Vec<State>>,
}

impl Dfa {
    /// Validates and builds an automaton. `delta[state][letter_index]` must
    /// be total; use [`Dfa::from_partial`] to complete a partial table.
    pub fn new(
        alphabet: Vec<char>,
        initial: State,
        finals: BTreeSet<State>,
        delta: Vec<Vec<State>>,
    ) -> Result<Self, AutomataError> {
        let rows: Vec<Vec<Option<State>>> = delta
            .into_iter()
            .map(|r| r.into_iter().map(Some).collect())
            .collect();
        Dfa::from_partial(alphabet, initial, finals, rows)
    }

    /// Builds an automaton from a possibly partial transition table; missing
    /// transitions are routed to a fresh sink state.
    pub fn from_partial(
        alphabet: Vec<char>,
        initial: State,
        finals: BTreeSet<State>,
        delta: Vec<Vec<Option<State>>>,
    ) -> Result<Self, AutomataError> {
        if alphabet.is_empty() {
            return Err(AutomataError::EmptyAlphabet);
        }
        let mut seen = BTreeSet::new();
        for &c in &alphabet {
            if !seen.insert(c) {
                return Err(AutomataError::DuplicateLetter(c));
            }
        }
        let states = delta.len();
        if states == 0 {
            return Err(AutomataError::NoStates);
        }
        let needs_sink = delta.iter().any(|row| row.iter().any(Option::is_none));
        let total = if needs_sink { states + 1 } else { states };
        if initial >= states {
            return Err(AutomataError::StateOutOfRange {
                state: initial,
                states,
            });
        }
        for &f in &finals {
            if f >= states {
                return Err(AutomataError::StateOutOfRange { state: f, states });
            }
        }
        let mut rows = Vec::with_capacity(total);
        for (row, r) in delta.into_iter().enumerate() {
            if r.len() != alphabet.len() {
                return Err(AutomataError::DeltaShape {
                    letters: alphabet.len(),
                    row,
                    len: r.len(),
                });
            }
            let mut out = Vec::with_capacity(alphabet.len());
            for entry in r {
                match entry {
                    Some(t) if t < states => out.push(t),
                    Some(t) => return Err(AutomataError::StateOutOfRange { state: t, states }),
                    None => out.push(states), // sink
                }
            }
            rows.push(out);
        }
        if needs_sink {
            rows.push(vec![states; alphabet.len()]);
        }
        Ok(Dfa {
            alphabet,
            initial,
            finals,
            delta: rows,
        })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.delta.len()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<State> {
        &self.finals
    }

    pub fn delta(&self) -> &[Vec<State>] {
        &self.delta
    }

    pub fn letter_index(&self, c: char) -> Option<usize> {
        self.alphabet.iter().position(|&a| a == c)
    }

    pub fn check_word(&self, w: &str) -> Result<(), AutomataError> {
        for c in w.chars() {
            if self.letter_index(c).is_none() {
                return Err(AutomataError::UnknownSymbol {
                    symbol: c,
                    alphabet: self.alphabet.clone(),
                });
            }
        }
        Ok(())
    }

    #[inline]
    pub fn step(&self, q: State, letter: usize) -> State {
        self.delta[q][letter]
    }

    /// Runs the automaton on `w` starting at `q`. Panics on symbols outside
    /// the alphabet; use [`Dfa::check_word`] on untrusted input first.
    pub fn run_from(&self, q: State, w: &str) -> State {
        w.chars().fold(q, |s, c| {
            let i = self
                .letter_index(c)
                .unwrap_or_else(|| panic!("symbol {c:?} not in alphabet {:?}", self.alphabet));
            self.step(s, i)
        })
    }

    pub fn accepts(&self, w: &str) -> bool {
        self.finals.contains(&self.run_from(self.initial, w))
    }

    /// The canonical minimal automaton for the same language: unreachable
    /// states dropped, Moore partition refinement, then a breadth-first
    /// renumbering so that equal languages yield identical structures.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        // reachable states in BFS order
        let mut order = Vec::new();
        let mut index = vec![usize::MAX; self.states()];
        let mut queue = VecDeque::from([self.initial]);
        index[self.initial] = 0;
        order.push(self.initial);
        while let Some(q) = queue.pop_front() {
            for c in 0..k {
                let t = self.delta[q][c];
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }
        let n = order.len();
        let reduced: Vec<Vec<usize>> = order
            .iter()
            .map(|&q| (0..k).map(|c| index[self.delta[q][c]]).collect())
            .collect();
        let accepting: Vec<bool> = order.iter().map(|q| self.finals.contains(q)).collect();

        // Moore refinement to the coarsest congruence separating finals.
        let sigs: Vec<Vec<usize>> = (0..n).map(|q| vec![accepting[q] as usize]).collect();
        let (mut block, mut blocks) = renumber(&sigs);
        loop {
            let sigs: Vec<Vec<usize>> = (0..n)
                .map(|q| {
                    let mut sig = Vec::with_capacity(k + 1);
                    sig.push(block[q]);
                    sig.extend((0..k).map(|c| block[reduced[q][c]]));
                    sig
                })
                .collect();
            let (next_block, next_count) = renumber(&sigs);
            if next_count == blocks {
                break;
            }
            block = next_block;
            blocks = next_count;
        }

        // canonical BFS renumbering of the quotient
        let mut canon = vec![usize::MAX; blocks];
        let mut block_rep = vec![usize::MAX; blocks];
        for q in 0..n {
            if block_rep[block[q]] == usize::MAX {
                block_rep[block[q]] = q;
            }
        }
        let mut bfs = VecDeque::from([block[0]]);
        canon[block[0]] = 0;
        let mut assigned = 1;
        let mut canon_order = vec![block[0]];
        while let Some(b) = bfs.pop_front() {
            let rep = block_rep[b];
            for c in 0..k {
                let tb = block[reduced[rep][c]];
                if canon[tb] == usize::MAX {
                    canon[tb] = assigned;
                    assigned += 1;
                    canon_order.push(tb);
                    bfs.push_back(tb);
                }
            }
        }
        debug_assert_eq!(assigned, blocks);

        let delta = canon_order
            .iter()
            .map(|&b| {
                (0..k)
                    .map(|c| canon[block[reduced[block_rep[b]][c]]])
                    .collect()
            })
            .collect();
        let finals = (0..n)
            .filter(|&q| accepting[q])
            .map(|q| canon[block[q]])
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            delta,
        }
    }

    fn require_same_alphabet(&self, other: &Dfa) -> Result<(), AutomataError> {
        if self.alphabet != other.alphabet {
            return Err(AutomataError::AlphabetMismatch {
                left: self.alphabet.clone(),
                right: other.alphabet.clone(),
            });
        }
        Ok(())
    }

    fn product(&self, other: &Dfa, accept: impl Fn(bool, bool) -> bool) -> Dfa {
        let k = self.alphabet.len();
        let mut index: HashMap<(State, State), State> = HashMap::new();
        let mut order = vec![(self.initial, other.initial)];
        index.insert((self.initial, other.initial), 0);
        let mut delta: Vec<Vec<State>> = Vec::new();
        let mut finals = BTreeSet::new();
        let mut head = 0;
        while head < order.len() {
            let (p, q) = order[head];
            if accept(self.finals.contains(&p), other.finals.contains(&q)) {
                finals.insert(head);
            }
            let mut row = Vec::with_capacity(k);
            for c in 0..k {
                let t = (self.delta[p][c], other.delta[q][c]);
                let id = *index.entry(t).or_insert_with(|| {
                    order.push(t);
                    order.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            head += 1;
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            delta,
        }
        .minimize()
    }

    pub fn complement(&self) -> Dfa {
        let finals = (0..self.states())
            .filter(|q| !self.finals.contains(q))
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: self.initial,
            finals,
            delta: self.delta.clone(),
        }
        .minimize()
    }

    pub fn union(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.require_same_alphabet(other)?;
        Ok(self.product(other, |a, b| a || b))
    }

    pub fn intersection(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.require_same_alphabet(other)?;
        Ok(self.product(other, |a, b| a && b))
    }

    pub fn difference(&self, other: &Dfa) -> Result<Dfa, AutomataError> {
        self.require_same_alphabet(other)?;
        Ok(self.product(other, |a, b| a && !b))
    }

    /// True when both automata recognise the same language.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool, AutomataError> {
        self.require_same_alphabet(other)?;
        Ok(self.minimize() == other.minimize())
    }

    pub fn is_empty(&self) -> bool {
        let m = self.minimize();
        m.finals.is_empty()
    }

    /// The quotient `u⁻¹ L v⁻¹ = { w : u·w·v ∈ L }`: advance the initial
    /// state along `u`, recompute finals as the states from which `v`
    /// reaches a final state.
    pub fn word_quotient(&self, u: &str, v: &str) -> Dfa {
        let initial = self.run_from(self.initial, u);
        let finals = (0..self.states())
            .filter(|&q| self.finals.contains(&self.run_from(q, v)))
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            initial,
            finals,
            delta: self.delta.clone(),
        }
        .minimize()
    }

    /// The language `x·L·y = { x·w·y : w ∈ L }` for fixed words `x`, `y`.
    ///
    /// Deterministic construction: a prefix check for `x` feeds a machine
    /// that buffers the most recent `|y|` letters, so a word is accepted
    /// exactly when it is `x`, then a word of `L`, then `y`. The defining
    /// quotient identity `x⁻¹(x·L·y)y⁻¹ = L` is asserted before returning.
    pub fn concat_words(&self, x: &str, y: &str) -> Dfa {
        self.check_word(x).expect("x must be over the alphabet");
        self.check_word(y).expect("y must be over the alphabet");
        let k = self.alphabet.len();
        let xs: Vec<usize> = x.chars().map(|c| self.letter_index(c).unwrap()).collect();
        let ys: Vec<usize> = y.chars().map(|c| self.letter_index(c).unwrap()).collect();

        #[derive(Clone, PartialEq, Eq, Hash)]
        enum CState {
            Prefix(usize),
            Run(State, Vec<usize>),
            Dead,
        }
        let start = if xs.is_empty() {
            CState::Run(self.initial, Vec::new())
        } else {
            CState::Prefix(0)
        };
        let mut index: HashMap<CState, State> = HashMap::new();
        let mut order = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<Vec<State>> = Vec::new();
        let mut finals = BTreeSet::new();
        let mut head = 0;
        while head < order.len() {
            let st = order[head].clone();
            if let CState::Run(q, buf) = &st {
                if buf.as_slice() == ys.as_slice() && self.finals.contains(q) {
                    finals.insert(head);
                }
            }
            let mut row = Vec::with_capacity(k);
            for c in 0..k {
                let succ = match &st {
                    CState::Dead => CState::Dead,
                    CState::Prefix(i) => {
                        if xs[*i] == c {
                            if i + 1 == xs.len() {
                                CState::Run(self.initial, Vec::new())
                            } else {
                                CState::Prefix(i + 1)
                            }
                        } else {
                            CState::Dead
                        }
                    }
                    CState::Run(q, buf) => {
                        let mut buf = buf.clone();
                        buf.push(c);
                        if buf.len() > ys.len() {
                            let fed = buf.remove(0);
                            CState::Run(self.delta[*q][fed], buf)
                        } else {
                            CState::Run(*q, buf)
                        }
                    }
                };
                let id = *index.entry(succ.clone()).or_insert_with(|| {
                    order.push(succ);
                    order.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            head += 1;
        }
        let result = Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            delta,
        }
        .minimize();
        debug_assert!(
            result.word_quotient(x, y).equivalent(self).unwrap(),
            "x^-1 (x L y) y^-1 must give back L"
        );
        result
    }

    /// The mirror language `{ rev(w) : w ∈ L }`, via reverse-subset
    /// construction.
    pub fn reverse(&self) -> Dfa {
        let k = self.alphabet.len();
        let start: BTreeSet<State> = self.finals.clone();
        let mut index: HashMap<BTreeSet<State>, State> = HashMap::new();
        let mut order = vec![start.clone()];
        index.insert(start, 0);
        let mut delta: Vec<Vec<State>> = Vec::new();
        let mut finals = BTreeSet::new();
        let mut head = 0;
        while head < order.len() {
            let set = order[head].clone();
            if set.contains(&self.initial) {
                finals.insert(head);
            }
            let mut row = Vec::with_capacity(k);
            for c in 0..k {
                let pre: BTreeSet<State> = (0..self.states())
                    .filter(|&p| set.contains(&self.delta[p][c]))
                    .collect();
                let id = *index.entry(pre.clone()).or_insert_with(|| {
                    order.push(pre);
                    order.len() - 1
                });
                row.push(id);
            }
            delta.push(row);
            head += 1;
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals,
            delta,
        }
        .minimize()
    }
}

fn renumber(sigs: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let mut ids: HashMap<&[usize], usize> = HashMap::new();
    let mut block = Vec::with_capacity(sigs.len());
    for s in sigs {
        let fresh = ids.len();
        block.push(*ids.entry(s.as_slice()).or_insert(fresh));
    }
    (block, ids.len())
}

/// A non-erasing morphism between free monoids: each source letter maps to a
/// nonempty word over the target alphabet.
#[derive(Debug, Clone)]
pub struct NeMorphism {
    source: Vec<char>,
    target: Vec<char>,
    image: BTreeMap<char, String>,
}

impl NeMorphism {
    pub fn new(
        source: Vec<char>,
        target: Vec<char>,
        image: BTreeMap<char, String>,
    ) -> Result<Self, AutomataError> {
        if source.is_empty() || target.is_empty() {
            return Err(AutomataError::EmptyAlphabet);
        }
        for &c in &source {
            let w = image
                .get(&c)
                .ok_or(AutomataError::MissingImage { letter: c })?;
            if w.is_empty() {
                return Err(AutomataError::ErasingMorphism { letter: c });
            }
            for t in w.chars() {
                if !target.contains(&t) {
                    return Err(AutomataError::UnknownSymbol {
                        symbol: t,
                        alphabet: target.clone(),
                    });
                }
            }
        }
        Ok(NeMorphism {
            source,
            target,
            image,
        })
    }

    pub fn source(&self) -> &[char] {
        &self.source
    }

    pub fn target(&self) -> &[char] {
        &self.target
    }

    pub fn apply(&self, w: &str) -> String {
        w.chars().map(|c| self.image[&c].as_str()).collect()
    }

    /// The preimage `f⁻¹(L)`: same states, the transition on a source letter
    /// is the run of `d` over that letter's image word.
    pub fn preimage(&self, d: &Dfa) -> Dfa {
        assert_eq!(
            d.alphabet(),
            self.target.as_slice(),
            "the automaton alphabet must match the morphism target"
        );
        let delta = (0..d.states())
            .map(|q| {
                self.source
                    .iter()
                    .map(|&c| d.run_from(q, &self.image[&c]))
                    .collect()
            })
            .collect();
        Dfa {
            alphabet: self.source.clone(),
            initial: d.initial,
            finals: d.finals.clone(),
            delta,
        }
        .minimize()
    }
}

/// Σ* over `alphabet`.
pub fn all_words(alphabet: &[char]) -> Dfa {
    Dfa::new(
        alphabet.to_vec(),
        0,
        BTreeSet::from([0]),
        vec![vec![0; alphabet.len()]],
    )
    .expect("valid")
}

/// The empty language over `alphabet`.
pub fn empty_language(alphabet: &[char]) -> Dfa {
    Dfa::new(
        alphabet.to_vec(),
        0,
        BTreeSet::new(),
        vec![vec![0; alphabet.len()]],
    )
    .expect("valid")
}

fn letter_indices(alphabet: &[char], w: &str) -> Result<Vec<usize>, AutomataError> {
    w.chars()
        .map(|c| {
            alphabet
                .iter()
                .position(|&a| a == c)
                .ok_or(AutomataError::UnknownSymbol {
                    symbol: c,
                    alphabet: alphabet.to_vec(),
                })
        })
        .collect()
}

/// `u Σ*`.
pub fn prefix_language(alphabet: &[char], u: &str) -> Result<Dfa, AutomataError> {
    let us = letter_indices(alphabet, u)?;
    let k = alphabet.len();
    let n = us.len();
    // states 0..n track the matched prefix, n is "matched, accept", n+1 sink
    let mut delta = Vec::with_capacity(n + 2);
    for (i, &ui) in us.iter().enumerate() {
        delta.push(
            (0..k)
                .map(|c| if c == ui { i + 1 } else { n + 1 })
                .collect(),
        );
    }
    delta.push(vec![n; k]);
    delta.push(vec![n + 1; k]);
    Ok(Dfa::new(alphabet.to_vec(), 0, BTreeSet::from([n]), delta)?.minimize())
}

/// `Σ* u`, via a window over the most recent `|u|` letters.
pub fn suffix_language(alphabet: &[char], u: &str) -> Result<Dfa, AutomataError> {
    let us = letter_indices(alphabet, u)?;
    let k = alphabet.len();
    let mut index: HashMap<Vec<usize>, State> = HashMap::new();
    let mut order = vec![Vec::new()];
    index.insert(Vec::new(), 0);
    let mut delta: Vec<Vec<State>> = Vec::new();
    let mut finals = BTreeSet::new();
    let mut head = 0;
    while head < order.len() {
        let window = order[head].clone();
        if window == us {
            finals.insert(head);
        }
        let mut row = Vec::with_capacity(k);
        for c in 0..k {
            let mut w = window.clone();
            w.push(c);
            if w.len() > us.len() {
                w.remove(0);
            }
            let id = *index.entry(w.clone()).or_insert_with(|| {
                order.push(w);
                order.len() - 1
            });
            row.push(id);
        }
        delta.push(row);
        head += 1;
    }
    Ok(Dfa {
        alphabet: alphabet.to_vec(),
        initial: 0,
        finals,
        delta,
    }
    .minimize())
}

/// The singleton language `{w}`.
pub fn single_word(alphabet: &[char], w: &str) -> Result<Dfa, AutomataError> {
    let ws = letter_indices(alphabet, w)?;
    let k = alphabet.len();
    let n = ws.len();
    let mut delta = Vec::with_capacity(n + 2);
    for (i, &wi) in ws.iter().enumerate() {
        delta.push(
            (0..k)
                .map(|c| if c == wi { i + 1 } else { n + 1 })
                .collect(),
        );
    }
    delta.push(vec![n + 1; k]); // after the full word, anything dies
    delta.push(vec![n + 1; k]);
    Ok(Dfa::new(alphabet.to_vec(), 0, BTreeSet::from([n]), delta)?.minimize())
}

/// `Σ* u₁ Σ* u₂ ⋯ Σ* u_n Σ*` — words containing `u` as a subword
/// (scattered substring).
pub fn subword_language(alphabet: &[char], u: &str) -> Result<Dfa, AutomataError> {
    let us = letter_indices(alphabet, u)?;
    let k = alphabet.len();
    let n = us.len();
    let mut delta = Vec::with_capacity(n + 1);
    for (i, &ui) in us.iter().enumerate() {
        delta.push((0..k).map(|c| if c == ui { i + 1 } else { i }).collect());
    }
    delta.push(vec![n; k]);
    Ok(Dfa::new(alphabet.to_vec(), 0, BTreeSet::from([n]), delta)?.minimize())
}

/// `U Σ* V ∪ W` for finite word sets `U`, `V`, `W`.
pub fn infix_li(
    alphabet: &[char],
    u: &[String],
    v: &[String],
    w: &[String],
) -> Result<Dfa, AutomataError> {
    let sigma_star = all_words(alphabet);
    let mut acc = empty_language(alphabet);
    for uw in u {
        letter_indices(alphabet, uw)?;
        for vw in v {
            letter_indices(alphabet, vw)?;
            acc = acc.union(&sigma_star.concat_words(uw, vw))?;
        }
    }
    for ww in w {
        acc = acc.union(&single_word(alphabet, ww)?)?;
    }
    Ok(acc)
}

/// The monomial `A₀* a₁ A₁* ⋯ a_k A_k*`, determinized by subset
/// construction over the obvious (k+1)-state automaton. When `normal`
/// is set, the corresponding normal form is enforced.
pub fn monomial_language(
    alphabet: &[char],
    sets: &[BTreeSet<char>],
    letters: &[char],
    normal: Option<NormalMode>,
) -> Result<Dfa, AutomataError> {
    if sets.len() != letters.len() + 1 {
        return Err(AutomataError::MonomialShape {
            sets: sets.len(),
            letters: letters.len(),
        });
    }
    for (i, s) in sets.iter().enumerate() {
        for &c in s {
            if !alphabet.contains(&c) {
                return Err(AutomataError::MonomialLetterOutOfAlphabet {
                    index: i,
                    letter: c,
                });
            }
        }
    }
    for (i, &a) in letters.iter().enumerate() {
        if !alphabet.contains(&a) {
            return Err(AutomataError::MonomialLetterOutOfAlphabet {
                index: i + 1,
                letter: a,
            });
        }
    }
    if let Some(mode) = normal {
        for (i, &a) in letters.iter().enumerate() {
            let adjacent = match mode {
                NormalMode::R => &sets[i],     // aᵢ ∉ Aᵢ₋₁
                NormalMode::L => &sets[i + 1], // aᵢ ∉ Aᵢ
            };
            if adjacent.contains(&a) {
                return Err(AutomataError::NormalFormViolation {
                    mode,
                    index: i + 1,
                    letter: a,
                });
            }
        }
    }
    let k = alphabet.len();
    let levels = sets.len();
    let mut index: HashMap<Vec<usize>, State> = HashMap::new();
    let start = vec![0usize];
    let mut order = vec![start.clone()];
    index.insert(start, 0);
    let mut delta: Vec<Vec<State>> = Vec::new();
    let mut finals = BTreeSet::new();
    let mut head = 0;
    while head < order.len() {
        let subset = order[head].clone();
        if subset.contains(&(levels - 1)) {
            finals.insert(head);
        }
        let mut row = Vec::with_capacity(k);
        for (ci, &c) in alphabet.iter().enumerate() {
            let _ = ci;
            let mut succ: BTreeSet<usize> = BTreeSet::new();
            for &lvl in &subset {
                if sets[lvl].contains(&c) {
                    succ.insert(lvl);
                }
                if lvl + 1 < levels && letters[lvl] == c {
                    succ.insert(lvl + 1);
                }
            }
            let succ: Vec<usize> = succ.into_iter().collect();
            let id = *index.entry(succ.clone()).or_insert_with(|| {
                order.push(succ);
                order.len() - 1
            });
            row.push(id);
        }
        delta.push(row);
        head += 1;
    }
    Ok(Dfa {
        alphabet: alphabet.to_vec(),
        initial: 0,
        finals,
        delta,
    }
    .minimize())
}

/// Declarative description of a buildable language family.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum LanguageFamily {
    Prefix {
        u: String,
    },
    Suffix {
        u: String,
    },
    Single {
        w: String,
    },
    Subword {
        u: String,
    },
    InfixLi {
        #[serde(default)]
        u: Vec<String>,
        #[serde(default)]
        v: Vec<String>,
        #[serde(default)]
        w: Vec<String>,
    },
    Monomial {
        sets: Vec<BTreeSet<char>>,
        letters: Vec<char>,
        #[serde(default)]
        normal: Option<NormalMode>,
    },
}

/// Builds the minimized automaton of the described language.
pub fn build_family(alphabet: &[char], spec: &LanguageFamily) -> Result<Dfa, AutomataError> {
    match spec {
        LanguageFamily::Prefix { u } => prefix_language(alphabet, u),
        LanguageFamily::Suffix { u } => suffix_language(alphabet, u),
        LanguageFamily::Single { w } => single_word(alphabet, w),
        LanguageFamily::Subword { u } => subword_language(alphabet, u),
        LanguageFamily::InfixLi { u, v, w } => infix_li(alphabet, u, v, w),
        LanguageFamily::Monomial {
            sets,
            letters,
            normal,
        } => monomial_language(alphabet, sets, letters, *normal),
    }
}

#[derive(Serialize, Deserialize)]
struct DfaJson {
    alphabet: Vec<char>,
    states: usize,
    initial: usize,
    finals: Vec<usize>,
    delta: Vec<Vec<Option<usize>>>,
}

impl Serialize for Dfa {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        DfaJson {
            alphabet: self.alphabet.clone(),
            states: self.states(),
            initial: self.initial,
            finals: self.finals.iter().copied().collect(),
            delta: self
                .delta
                .iter()
                .map(|r| r.iter().map(|&t| Some(t)).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Dfa {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = DfaJson::deserialize(deserializer)?;
        if raw.delta.len() != raw.states {
            return Err(serde::de::Error::custom(format!(
                "states field is {} but delta has {} rows",
                raw.states,
                raw.delta.len()
            )));
        }
        Dfa::from_partial(
            raw.alphabet,
            raw.initial,
            raw.finals.into_iter().collect(),
            raw.delta,
        )
        .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const AB: [char; 2] = ['a', 'b'];

    fn even_as() -> Dfa {
        // (aa)* over {a}: 2 states
        Dfa::new(vec!['a'], 0, BTreeSet::from([0]), vec![vec![1], vec![0]]).unwrap()
    }

    #[test]
    fn minimize_is_identity_on_minimal() {
        let all = all_words(&AB);
        assert_eq!(all.minimize(), all);
    }

    #[test]
    fn minimize_merges_duplicated_parity_states() {
        // 4-state automaton for (aa)* where states 2,3 duplicate 0,1
        let d = Dfa::new(
            vec!['a'],
            0,
            BTreeSet::from([0, 2]),
            vec![vec![1], vec![2], vec![3], vec![0]],
        )
        .unwrap();
        let m = d.minimize();
        assert_eq!(m.states(), 2);
        assert!(m.equivalent(&even_as()).unwrap());
    }

    #[test]
    fn minimize_drops_unreachable_accepting_state() {
        let d = Dfa::new(
            AB.to_vec(),
            0,
            BTreeSet::from([1]),
            vec![vec![0, 0], vec![1, 1]],
        )
        .unwrap();
        let m = d.minimize();
        assert_eq!(m.states(), 1);
        assert!(m.finals().is_empty());
    }

    #[test]
    fn complement_is_an_involution() {
        let d = prefix_language(&AB, "ab").unwrap();
        assert!(d.complement().complement().equivalent(&d).unwrap());
    }

    #[test]
    fn union_of_prefix_languages_is_all_nonempty_words() {
        let a = prefix_language(&AB, "a").unwrap();
        let b = prefix_language(&AB, "b").unwrap();
        let nonempty = single_word(&AB, "").unwrap().complement();
        assert!(a.union(&b).unwrap().equivalent(&nonempty).unwrap());
    }

    #[test]
    fn intersection_with_empty_is_empty() {
        let d = prefix_language(&AB, "a").unwrap();
        assert!(d.intersection(&empty_language(&AB)).unwrap().is_empty());
    }

    #[test]
    fn boolean_ops_reject_mismatched_alphabets() {
        let d = all_words(&AB);
        let e = all_words(&['a']);
        assert!(matches!(
            d.union(&e),
            Err(AutomataError::AlphabetMismatch { .. })
        ));
        assert!(matches!(
            d.equivalent(&e),
            Err(AutomataError::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn empty_quotient_words_give_same_language() {
        let d = prefix_language(&AB, "ab").unwrap();
        assert!(d.word_quotient("", "").equivalent(&d).unwrap());
    }

    #[test]
    fn left_quotient_of_prefix_language() {
        let d = prefix_language(&AB, "a").unwrap();
        assert!(d
            .word_quotient("a", "")
            .equivalent(&all_words(&AB))
            .unwrap());
    }

    #[test]
    fn two_sided_quotient_of_even_as() {
        let d = even_as();
        assert!(d.word_quotient("a", "a").equivalent(&d).unwrap());
    }

    #[test]
    fn concat_words_trivial_cases() {
        let d = prefix_language(&AB, "ab").unwrap();
        assert!(d.concat_words("", "").equivalent(&d).unwrap());
        let empty = empty_language(&AB);
        assert!(empty.concat_words("a", "b").is_empty());
    }

    #[test]
    fn concat_words_builds_infix_language() {
        let got = all_words(&AB).concat_words("a", "b");
        let want = infix_li(&AB, &["a".into()], &["b".into()], &[]).unwrap();
        assert!(got.equivalent(&want).unwrap());
    }

    #[test]
    fn ne_preimage_under_identity_is_same_language() {
        let d = suffix_language(&AB, "ab").unwrap();
        let f = NeMorphism::new(
            AB.to_vec(),
            AB.to_vec(),
            BTreeMap::from([('a', "a".into()), ('b', "b".into())]),
        )
        .unwrap();
        assert!(f.preimage(&d).equivalent(&d).unwrap());
    }

    #[test]
    fn ne_preimage_of_doubling_morphism() {
        let f =
            NeMorphism::new(vec!['a'], vec!['a'], BTreeMap::from([('a', "aa".into())])).unwrap();
        let got = f.preimage(&even_as());
        assert!(got.equivalent(&all_words(&['a'])).unwrap());
    }

    #[test]
    fn ne_preimage_matches_brute_force_on_suffix_language() {
        let f = NeMorphism::new(
            AB.to_vec(),
            AB.to_vec(),
            BTreeMap::from([('a', "ab".into()), ('b', "b".into())]),
        )
        .unwrap();
        let l = suffix_language(&AB, "bb").unwrap();
        let got = f.preimage(&l);
        for w in crate::oracle::WordEnumeration::new(AB.to_vec(), 6).iter() {
            assert_eq!(got.accepts(&w), l.accepts(&f.apply(&w)), "word {w:?}");
        }
        // every letter image ends in b, so the image of w ends in bb exactly
        // when w itself ends in b and has a letter before it
        let want = suffix_language(&AB, "b")
            .unwrap()
            .difference(&single_word(&AB, "b").unwrap())
            .unwrap();
        assert!(got.equivalent(&want).unwrap());
    }

    #[test]
    fn erasing_morphisms_are_rejected() {
        let err = NeMorphism::new(vec!['a'], vec!['a'], BTreeMap::from([('a', "".into())]));
        assert!(matches!(
            err,
            Err(AutomataError::ErasingMorphism { letter: 'a' })
        ));
    }

    #[test]
    fn equivalence_distinguishes_even_as_from_all() {
        let even = even_as();
        let all = all_words(&['a']);
        assert!(even.equivalent(&even).unwrap());
        assert!(!even.equivalent(&all).unwrap());
    }

    #[test]
    fn infix_language_built_two_ways() {
        let via_builder = infix_li(&AB, &["ab".into()], &["ba".into()], &[]).unwrap();
        let via_concat = all_words(&AB).concat_words("ab", "ba");
        assert!(via_builder.equivalent(&via_concat).unwrap());
    }

    #[test]
    fn prefix_of_empty_word_is_all_words() {
        assert!(prefix_language(&AB, "")
            .unwrap()
            .equivalent(&all_words(&AB))
            .unwrap());
    }

    #[test]
    fn r_normal_monomial_equals_contains_an_a() {
        let mono = monomial_language(
            &AB,
            &[BTreeSet::from(['b']), BTreeSet::from(['a', 'b'])],
            &['a'],
            Some(NormalMode::R),
        )
        .unwrap();
        let contains_a = subword_language(&AB, "a").unwrap();
        assert!(mono.equivalent(&contains_a).unwrap());
    }

    #[test]
    fn normal_form_violations_name_the_position() {
        let err = monomial_language(
            &AB,
            &[BTreeSet::from(['a']), BTreeSet::new()],
            &['a'],
            Some(NormalMode::R),
        )
        .unwrap_err();
        assert_eq!(
            err,
            AutomataError::NormalFormViolation {
                mode: NormalMode::R,
                index: 1,
                letter: 'a'
            }
        );
    }

    #[test]
    fn ambiguous_monomial_without_normal_form_is_still_exact() {
        // a* a a* : nonempty words of a's, needs genuine subset construction
        let mono = monomial_language(
            &['a'],
            &[BTreeSet::from(['a']), BTreeSet::from(['a'])],
            &['a'],
            None,
        )
        .unwrap();
        let nonempty = single_word(&['a'], "").unwrap().complement();
        assert!(mono.equivalent(&nonempty).unwrap());
    }

    #[test]
    fn reverse_of_prefix_is_suffix_of_reversed_word() {
        let d = prefix_language(&AB, "ab").unwrap();
        let want = suffix_language(&AB, "ba").unwrap();
        assert!(d.reverse().equivalent(&want).unwrap());
        assert!(d.reverse().reverse().equivalent(&d).unwrap());
    }

    #[test]
    fn quotient_concat_identities_on_fixed_cases() {
        // x (x^-1 K y^-1) y = x Σ* y ∩ K  and  x^-1 (x K y) y^-1 = K
        let cases = [
            (suffix_language(&AB, "ab").unwrap(), "a", "b"),
            (subword_language(&AB, "ba").unwrap(), "bb", ""),
            (prefix_language(&AB, "a").unwrap(), "", "ab"),
        ];
        for (k, x, y) in cases {
            let wrapped = k.word_quotient(x, y).concat_words(x, y);
            let want = all_words(&AB).concat_words(x, y).intersection(&k).unwrap();
            assert!(wrapped.equivalent(&want).unwrap());
            assert!(k
                .concat_words(x, y)
                .word_quotient(x, y)
                .equivalent(&k)
                .unwrap());
        }
    }

    #[test]
    fn json_round_trip_preserves_language() {
        let d = infix_li(&AB, &["a".into()], &["b".into()], &["bb".into()]).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        let back: Dfa = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn partial_json_delta_is_completed_with_a_sink() {
        let json = r#"{
            "alphabet": ["a", "b"],
            "states": 1,
            "initial": 0,
            "finals": [0],
            "delta": [[0, null]]
        }"#;
        let d: Dfa = serde_json::from_str(json).unwrap();
        assert!(d.accepts("aaa"));
        assert!(!d.accepts("ab"));
        assert!(d
            .equivalent(&monomial_language(&AB, &[BTreeSet::from(['a'])], &[], None).unwrap())
            .unwrap());
    }
}
