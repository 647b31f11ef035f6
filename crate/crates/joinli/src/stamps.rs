//! Stamps: surjective morphisms from a free monoid onto a finite monoid.
//!
//! The central constructor is [`Stamp::syntactic`], which computes the
//! syntactic stamp of a regular language as the transition monoid of its
//! minimal automaton. A stamp also knows its *stability index* — the least
//! `k ≥ 1` with `φ(Σ^2k) = φ(Σ^k)` — and the *eventual image*
//! `T = φ(Σ^{≥s})`, the two-sided ideal driving the essential congruence.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Element, FiniteMonoid};
use crate::automata::Dfa;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StampError {
    #[error("symbol {symbol:?} is not in the stamp alphabet {alphabet:?}")]
    UnknownSymbol { symbol: char, alphabet: Vec<char> },
    #[error("no image given for letter {letter:?}")]
    MissingLetterImage { letter: char },
    #[error("letter image {image} for {letter:?} is out of range (monoid size {size})")]
    ImageOutOfRange {
        letter: char,
        image: Element,
        size: usize,
    },
    #[error("letter images generate a submonoid of size {generated}, not the whole monoid of size {size}")]
    NotSurjective { generated: usize, size: usize },
    #[error("accepting element {element} is out of range (monoid size {size})")]
    AcceptingOutOfRange { element: Element, size: usize },
    #[error("alphabet must be nonempty")]
    EmptyAlphabet,
}

/// A surjective morphism `φ: Σ* → M`, given by the images of the letters.
/// When the stamp arises as a syntactic morphism it also carries the
/// accepting set `φ(L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stamp {
    alphabet: Vec<char>,
    monoid: FiniteMonoid,
    letter_image: BTreeMap<char, Element>,
    accepting: Option<BTreeSet<Element>>,
}

impl Stamp {
    pub fn new(
        alphabet: Vec<char>,
        monoid: FiniteMonoid,
        letter_image: BTreeMap<char, Element>,
        accepting: Option<BTreeSet<Element>>,
    ) -> Result<Self, StampError> {
        if alphabet.is_empty() {
            return Err(StampError::EmptyAlphabet);
        }
        let mut gens = BTreeSet::new();
        for &c in &alphabet {
            let img = *letter_image
                .get(&c)
                .ok_or(StampError::MissingLetterImage { letter: c })?;
            if img >= monoid.size() {
                return Err(StampError::ImageOutOfRange {
                    letter: c,
                    image: img,
                    size: monoid.size(),
                });
            }
            gens.insert(img);
        }
        let generated = monoid.generated_submonoid(&gens);
        if generated.len() != monoid.size() {
            return Err(StampError::NotSurjective {
                generated: generated.len(),
                size: monoid.size(),
            });
        }
        if let Some(acc) = &accepting {
            for &a in acc {
                if a >= monoid.size() {
                    return Err(StampError::AcceptingOutOfRange {
                        element: a,
                        size: monoid.size(),
                    });
                }
            }
        }
        Ok(Stamp {
            alphabet,
            monoid,
            letter_image,
            accepting,
        })
    }

    /// The syntactic stamp of the language of `d`: minimize, then compute the
    /// transition monoid. Elements are state functions, multiplied in
    /// diagrammatic order (the left factor acts first), so
    /// `φ(xy) = φ(x)·φ(y)` reading words left to right. The accepting set
    /// collects the actions that send the initial state into a final one,
    /// giving the recognition invariant `w ∈ L ⇔ φ(w) ∈ accepting`.
    pub fn syntactic(d: &Dfa) -> Stamp {
        let d = d.minimize();
        let n = d.states();
        let k = d.alphabet().len();
        let letter_fn: Vec<Vec<usize>> = (0..k)
            .map(|c| (0..n).map(|q| d.step(q, c)).collect())
            .collect();

        let identity: Vec<usize> = (0..n).collect();
        let mut index: HashMap<Vec<usize>, Element> = HashMap::new();
        let mut order: Vec<Vec<usize>> = vec![identity.clone()];
        index.insert(identity, 0);
        let mut head = 0;
        while head < order.len() {
            let f = order[head].clone();
            for lf in &letter_fn {
                let g: Vec<usize> = f.iter().map(|&q| lf[q]).collect();
                if !index.contains_key(&g) {
                    index.insert(g.clone(), order.len());
                    order.push(g);
                }
            }
            head += 1;
        }

        let size = order.len();
        let mut table = vec![vec![0; size]; size];
        for (i, f) in order.iter().enumerate() {
            for (j, g) in order.iter().enumerate() {
                let h: Vec<usize> = f.iter().map(|&q| g[q]).collect();
                table[i][j] = index[&h];
            }
        }
        let monoid = FiniteMonoid::from_parts_unchecked(table, 0);
        let letter_image: BTreeMap<char, Element> = d
            .alphabet()
            .iter()
            .enumerate()
            .map(|(c, &ch)| (ch, index[&letter_fn[c]]))
            .collect();
        let accepting: BTreeSet<Element> = order
            .iter()
            .enumerate()
            .filter(|(_, f)| d.finals().contains(&f[d.initial()]))
            .map(|(i, _)| i)
            .collect();
        Stamp {
            alphabet: d.alphabet().to_vec(),
            monoid,
            letter_image,
            accepting: Some(accepting),
        }
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn letter_image(&self, c: char) -> Option<Element> {
        self.letter_image.get(&c).copied()
    }

    pub fn letter_images(&self) -> &BTreeMap<char, Element> {
        &self.letter_image
    }

    pub fn accepting(&self) -> Option<&BTreeSet<Element>> {
        self.accepting.as_ref()
    }

    /// `φ(w)`: fold of the letter images, the empty word maps to the identity.
    pub fn eval(&self, w: &str) -> Result<Element, StampError> {
        let mut acc = self.monoid.identity();
        for c in w.chars() {
            let img = self.letter_image.get(&c).ok_or(StampError::UnknownSymbol {
                symbol: c,
                alphabet: self.alphabet.clone(),
            })?;
            acc = self.monoid.mul(acc, *img);
        }
        Ok(acc)
    }

    /// Membership via the recognition invariant; requires an accepting set.
    pub fn accepts(&self, w: &str) -> Result<bool, StampError> {
        let acc = self.accepting.as_ref().expect("stamp has no accepting set");
        Ok(acc.contains(&self.eval(w)?))
    }

    /// The level sets `A_n = φ(Σ^n)` for `n = 1, 2, …`, computed up to and
    /// including the first repetition, together with the 1-based level where
    /// the cycle starts and the cycle length.
    fn level_sets(&self) -> (Vec<Vec<Element>>, usize, usize) {
        let m = &self.monoid;
        let a1: BTreeSet<Element> = self.letter_image.values().copied().collect();
        let a1: Vec<Element> = a1.into_iter().collect();
        let mut sets: Vec<Vec<Element>> = vec![a1.clone()];
        let mut seen: HashMap<Vec<Element>, usize> = HashMap::new();
        seen.insert(a1.clone(), 0);
        // pigeonhole: a repeat must occur within 2^|M| steps
        loop {
            let last = sets.last().unwrap();
            let mut mark = vec![false; m.size()];
            for &x in last {
                for &g in &a1 {
                    mark[m.mul(x, g)] = true;
                }
            }
            let next: Vec<Element> = mark
                .iter()
                .enumerate()
                .filter_map(|(e, &b)| b.then_some(e))
                .collect();
            if let Some(&first) = seen.get(&next) {
                let cycle_start = first + 1; // 1-based level of A_{first+1}
                let period = sets.len() + 1 - cycle_start;
                sets.push(next);
                return (sets, cycle_start, period);
            }
            seen.insert(next.clone(), sets.len());
            sets.push(next);
        }
    }

    /// The least `k ≥ 1` with `φ(Σ^2k) = φ(Σ^k)`; at that point `φ(Σ^k)` is
    /// a semigroup.
    pub fn stability_index(&self) -> usize {
        let (sets, cycle_start, period) = self.level_sets();
        let level = |n: usize| -> &Vec<Element> {
            debug_assert!(n >= 1);
            if n <= sets.len() {
                &sets[n - 1]
            } else {
                &sets[cycle_start - 1 + (n - cycle_start) % period]
            }
        };
        for k in 1..=(cycle_start + period + 1) {
            if level(2 * k) == level(k) {
                return k;
            }
        }
        unreachable!("a stability index exists for every stamp onto a finite monoid");
    }

    /// The eventual image `T = φ(Σ^{≥s})` together with the level-set data
    /// that produced it.
    pub fn eventual_image(&self) -> EventualImage {
        let (sets, cycle_start, period) = self.level_sets();
        let s = self.stability_index();
        let level = |n: usize| -> &Vec<Element> {
            if n <= sets.len() {
                &sets[n - 1]
            } else {
                &sets[cycle_start - 1 + (n - cycle_start) % period]
            }
        };
        // s is always inside the cycle, so one full period starting at s
        // covers every A_n with n ≥ s.
        let mut t: BTreeSet<Element> = BTreeSet::new();
        for n in s..s + period {
            t.extend(level(n).iter().copied());
        }
        let t: Vec<Element> = t.into_iter().collect();

        let m = &self.monoid;
        debug_assert!(
            {
                let a_s: BTreeSet<Element> = level(s).iter().copied().collect();
                let sq: BTreeSet<Element> = a_s
                    .iter()
                    .flat_map(|&x| a_s.iter().map(move |&y| m.mul(x, y)))
                    .collect();
                sq == a_s
            },
            "A_s must be a semigroup at the stability index"
        );
        debug_assert!(
            t.iter().all(|&x| {
                m.elements().all(|g| {
                    t.binary_search(&m.mul(x, g)).is_ok() && t.binary_search(&m.mul(g, x)).is_ok()
                })
            }),
            "T must be a two-sided ideal of the image"
        );

        EventualImage {
            stamp: self.clone(),
            stability_index: s,
            level_sets: sets,
            cycle_start,
            period,
            t,
        }
    }

    /// `φ(Σ⁺)`: the subsemigroup generated by the letter images. This is the
    /// substitution range for ne-satisfaction.
    pub fn image_semigroup(&self) -> Vec<Element> {
        let m = &self.monoid;
        let gens: BTreeSet<Element> = self.letter_image.values().copied().collect();
        let mut mark = vec![false; m.size()];
        let mut frontier: Vec<Element> = gens.iter().copied().collect();
        for &g in &frontier {
            mark[g] = true;
        }
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let p = m.mul(x, g);
                if !mark[p] {
                    mark[p] = true;
                    frontier.push(p);
                }
            }
        }
        mark.iter()
            .enumerate()
            .filter_map(|(e, &b)| b.then_some(e))
            .collect()
    }

    /// The language `φ⁻¹(accept)` as a canonical automaton: states are the
    /// monoid elements acted on by right multiplication.
    pub fn language_of(&self, accept: &BTreeSet<Element>) -> Dfa {
        for &a in accept {
            assert!(a < self.monoid.size(), "accepting element {a} out of range");
        }
        let delta = self
            .monoid
            .elements()
            .map(|e| {
                self.alphabet
                    .iter()
                    .map(|c| self.monoid.mul(e, self.letter_image[c]))
                    .collect()
            })
            .collect();
        Dfa::new(
            self.alphabet.clone(),
            self.monoid.identity(),
            accept.clone(),
            delta,
        )
        .expect("valid by construction")
        .minimize()
    }

    /// The recognised language, for stamps carrying an accepting set.
    pub fn language(&self) -> Dfa {
        let acc = self.accepting.as_ref().expect("stamp has no accepting set");
        self.language_of(acc)
    }
}

/// The eventual image of a stamp: level sets `A_n = φ(Σ^n)` up to their
/// first repetition, the stability index, and `T = φ(Σ^{≥s})`.
#[derive(Debug, Clone)]
pub struct EventualImage {
    stamp: Stamp,
    stability_index: usize,
    level_sets: Vec<Vec<Element>>,
    cycle_start: usize,
    period: usize,
    t: Vec<Element>,
}

impl EventualImage {
    pub fn stamp(&self) -> &Stamp {
        &self.stamp
    }

    pub fn stability_index(&self) -> usize {
        self.stability_index
    }

    /// `A_1, A_2, …` up to and including the first repeated set.
    pub fn level_sets(&self) -> &[Vec<Element>] {
        &self.level_sets
    }

    /// 1-based level at which the level sets become periodic.
    pub fn cycle_start(&self) -> usize {
        self.cycle_start
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// `A_n` for arbitrary `n ≥ 1`, by eventual periodicity.
    pub fn level(&self, n: usize) -> &[Element] {
        assert!(n >= 1);
        if n <= self.level_sets.len() {
            &self.level_sets[n - 1]
        } else {
            &self.level_sets[self.cycle_start - 1 + (n - self.cycle_start) % self.period]
        }
    }

    /// `T = φ(Σ^{≥s})`, sorted.
    pub fn t(&self) -> &[Element] {
        &self.t
    }
}

#[derive(Serialize, Deserialize)]
struct StampJson {
    alphabet: Vec<char>,
    monoid: FiniteMonoid,
    letters: BTreeMap<char, Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    accepting: Option<Vec<Element>>,
}

impl Serialize for Stamp {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        StampJson {
            alphabet: self.alphabet.clone(),
            monoid: self.monoid.clone(),
            letters: self.letter_image.clone(),
            accepting: self.accepting.as_ref().map(|a| a.iter().copied().collect()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Stamp {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = StampJson::deserialize(deserializer)?;
        Stamp::new(
            raw.alphabet,
            raw.monoid,
            raw.letters,
            raw.accepting.map(|a| a.into_iter().collect()),
        )
        .map_err(serde::de::Error::custom)
    }
}
