//! Finite monoids as multiplication tables.
//!
//! Elements are dense indices `0..size`; the identity is an arbitrary index.
//! Values are immutable after construction and safe to share across threads.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a monoid element.
pub type Element = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("table must be a {size}x{size} square, row {row} has length {len}")]
    RaggedTable { size: usize, row: usize, len: usize },
    #[error("table entry [{a}][{b}] = {value} is out of range (size {size})")]
    EntryOutOfRange {
        a: Element,
        b: Element,
        value: usize,
        size: usize,
    },
    #[error("identity index {identity} is out of range (size {size})")]
    IdentityOutOfRange { identity: Element, size: usize },
    #[error(
        "identity law violated: {identity}*{m} = {left} and {m}*{identity} = {right}, expected {m}"
    )]
    IdentityLawViolated {
        identity: Element,
        m: Element,
        left: Element,
        right: Element,
    },
    #[error("associativity violated at ({a}, {b}, {c}): ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: Element,
        b: Element,
        c: Element,
        left: Element,
        right: Element,
    },
    #[error("product size {size} exceeds the cap {cap}")]
    ProductTooLarge { size: usize, cap: usize },
    #[error("element names must be {size} distinct strings")]
    BadNames { size: usize },
    #[error("class map has length {len}, monoid has {size} elements")]
    BadClassMap { len: usize, size: usize },
    #[error("class indices must be dense, class {class} is empty")]
    EmptyClass { class: usize },
    #[error("partition is not a congruence: {a} ~ {b} but multiplying by {c} separates them")]
    NotACongruence { a: Element, b: Element, c: Element },
    #[error("monoid enumeration is capped at size {cap}, requested {requested}")]
    EnumerationTooLarge { requested: usize, cap: usize },
}

/// A finite monoid given by its full multiplication table.
///
/// `table[a][b]` is the product `a*b` (row = left factor). The constructor
/// checks the identity law and associativity, so a value of this type is
/// always a genuine monoid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteMonoid {
    size: usize,
    identity: Element,
    table: Vec<Vec<Element>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl FiniteMonoid {
    /// Validates and builds a monoid from a square multiplication table.
    pub fn new(table: Vec<Vec<Element>>, identity: Element) -> Result<Self, AlgebraError> {
        let size = table.len();
        for (row, r) in table.iter().enumerate() {
            if r.len() != size {
                return Err(AlgebraError::RaggedTable {
                    size,
                    row,
                    len: r.len(),
                });
            }
        }
        if identity >= size {
            return Err(AlgebraError::IdentityOutOfRange { identity, size });
        }
        for (a, row) in table.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(AlgebraError::EntryOutOfRange {
                        a,
                        b,
                        value: v,
                        size,
                    });
                }
            }
        }
        for m in 0..size {
            let left = table[identity][m];
            let right = table[m][identity];
            if left != m || right != m {
                return Err(AlgebraError::IdentityLawViolated {
                    identity,
                    m,
                    left,
                    right,
                });
            }
        }
        // O(n^3), fine at the sizes raw tables come in at.
        for a in 0..size {
            for b in 0..size {
                let ab = table[a][b];
                for c in 0..size {
                    let left = table[ab][c];
                    let right = table[a][table[b][c]];
                    if left != right {
                        return Err(AlgebraError::NotAssociative {
                            a,
                            b,
                            c,
                            left,
                            right,
                        });
                    }
                }
            }
        }
        Ok(FiniteMonoid {
            size,
            identity,
            table,
            names: None,
        })
    }

    /// Builds a monoid from a table that is associative by construction
    /// (transition monoids, products, quotients). Skips the O(n^3) check,
    /// which is prohibitive for the large transition monoids syntactic
    /// stamps produce; the identity law is still verified.
    pub(crate) fn from_parts_unchecked(table: Vec<Vec<Element>>, identity: Element) -> Self {
        let size = table.len();
        debug_assert!(table.iter().all(|r| r.len() == size));
        debug_assert!((0..size).all(|m| table[identity][m] == m && table[m][identity] == m));
        FiniteMonoid {
            size,
            identity,
            table,
            names: None,
        }
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        FiniteMonoid {
            size: 1,
            identity: 0,
            table: vec![vec![0]],
            names: None,
        }
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group order must be positive");
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteMonoid::from_parts_unchecked(table, 0)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<Element>] {
        &self.table
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        0..self.size
    }

    pub fn is_idempotent(&self, m: Element) -> bool {
        self.mul(m, m) == m
    }

    /// Attaches display names to the elements.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, AlgebraError> {
        let distinct: BTreeSet<&String> = names.iter().collect();
        if names.len() != self.size || distinct.len() != self.size {
            return Err(AlgebraError::BadNames { size: self.size });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// The ω-power of `m`: the unique idempotent among the positive powers
    /// of `m`. Scans `m, m², m³, …` until an idempotent shows up, which
    /// happens within `size` steps in any finite monoid.
    pub fn omega(&self, m: Element) -> Element {
        assert!(m < self.size, "element {m} out of range");
        let mut p = m;
        for _ in 0..=self.size {
            if self.mul(p, p) == p {
                return p;
            }
            p = self.mul(p, m);
        }
        unreachable!("no idempotent power found; the table is not a monoid");
    }

    /// ω-powers of every element, for hot loops.
    pub(crate) fn omega_table(&self) -> Vec<Element> {
        self.elements().map(|m| self.omega(m)).collect()
    }

    /// `m^e` by binary exponentiation, `e ≥ 1`.
    pub fn pow(&self, m: Element, e: u64) -> Element {
        assert!(e >= 1, "only positive powers are defined");
        let mut acc = self.identity;
        let mut base = m;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Least subset containing the identity and `gens`, closed under product.
    pub fn generated_submonoid(&self, gens: &BTreeSet<Element>) -> BTreeSet<Element> {
        for &g in gens {
            assert!(g < self.size, "generator {g} out of range");
        }
        let mut seen = vec![false; self.size];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        for &g in gens {
            if !seen[g] {
                seen[g] = true;
                frontier.push(g);
            }
        }
        let gens: Vec<Element> = gens.iter().copied().collect();
        while let Some(s) = frontier.pop() {
            for &g in &gens {
                for p in [self.mul(s, g), self.mul(g, s)] {
                    if !seen[p] {
                        seen[p] = true;
                        frontier.push(p);
                    }
                }
            }
        }
        seen.iter()
            .enumerate()
            .filter_map(|(m, &b)| b.then_some(m))
            .collect()
    }

    /// True when the monoid is a group, i.e. every ω-power is the identity.
    pub fn is_group(&self) -> bool {
        self.elements().all(|m| self.omega(m) == self.identity)
    }
}

/// Direct product of two monoids, with the element pairing exposed.
#[derive(Debug, Clone)]
pub struct DirectProduct {
    pub monoid: FiniteMonoid,
    left_size: usize,
    right_size: usize,
}

impl DirectProduct {
    pub fn pair(&self, a: Element, b: Element) -> Element {
        assert!(a < self.left_size && b < self.right_size);
        a * self.right_size + b
    }

    pub fn unpair(&self, p: Element) -> (Element, Element) {
        (p / self.right_size, p % self.right_size)
    }
}

pub const DEFAULT_PRODUCT_CAP: usize = 10_000;

/// Componentwise product of `m` and `n`; errors when `|m|·|n|` exceeds `cap`.
pub fn direct_product(
    m: &FiniteMonoid,
    n: &FiniteMonoid,
    cap: usize,
) -> Result<DirectProduct, AlgebraError> {
    let size = m.size().checked_mul(n.size()).filter(|&s| s <= cap).ok_or(
        AlgebraError::ProductTooLarge {
            size: m.size().saturating_mul(n.size()),
            cap,
        },
    )?;
    let right = n.size();
    let mut table = vec![vec![0; size]; size];
    for a1 in m.elements() {
        for b1 in n.elements() {
            let p = a1 * right + b1;
            for a2 in m.elements() {
                for b2 in n.elements() {
                    table[p][a2 * right + b2] = m.mul(a1, a2) * right + n.mul(b1, b2);
                }
            }
        }
    }
    let identity = m.identity() * right + n.identity();
    Ok(DirectProduct {
        monoid: FiniteMonoid::from_parts_unchecked(table, identity),
        left_size: m.size(),
        right_size: n.size(),
    })
}

/// A partition of a monoid's carrier compatible with multiplication.
#[derive(Debug, Clone)]
pub struct MonoidCongruence {
    base: FiniteMonoid,
    class_of: Vec<usize>,
    class_count: usize,
}

impl MonoidCongruence {
    /// Validates that `class_of` is a dense partition compatible with the
    /// multiplication of `base`.
    pub fn new(base: FiniteMonoid, class_of: Vec<usize>) -> Result<Self, AlgebraError> {
        if class_of.len() != base.size() {
            return Err(AlgebraError::BadClassMap {
                len: class_of.len(),
                size: base.size(),
            });
        }
        let class_count = class_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut rep = vec![None; class_count];
        for (m, &c) in class_of.iter().enumerate() {
            if rep[c].is_none() {
                rep[c] = Some(m);
            }
        }
        for (c, r) in rep.iter().enumerate() {
            if r.is_none() {
                return Err(AlgebraError::EmptyClass { class: c });
            }
        }
        // a ~ rep(a) must be preserved by one-sided multiplication; that
        // suffices for two-sided compatibility via transitivity.
        for a in base.elements() {
            let r = rep[class_of[a]].unwrap();
            if r == a {
                continue;
            }
            for c in base.elements() {
                if class_of[base.mul(a, c)] != class_of[base.mul(r, c)]
                    || class_of[base.mul(c, a)] != class_of[base.mul(c, r)]
                {
                    return Err(AlgebraError::NotACongruence { a, b: r, c });
                }
            }
        }
        Ok(MonoidCongruence {
            base,
            class_of,
            class_count,
        })
    }

    /// The congruence with one class per element.
    pub fn identity_congruence(base: FiniteMonoid) -> Self {
        let class_of = (0..base.size()).collect();
        let class_count = base.size();
        MonoidCongruence {
            base,
            class_of,
            class_count,
        }
    }

    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn class_of(&self, m: Element) -> usize {
        self.class_of[m]
    }

    pub fn classes(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// The quotient monoid together with the projection map.
    pub fn quotient(&self) -> (FiniteMonoid, Vec<Element>) {
        let q = self.class_count;
        let mut rep = vec![usize::MAX; q];
        for m in self.base.elements() {
            let c = self.class_of[m];
            if rep[c] == usize::MAX {
                rep[c] = m;
            }
        }
        let mut table = vec![vec![0; q]; q];
        for a in 0..q {
            for b in 0..q {
                table[a][b] = self.class_of[self.base.mul(rep[a], rep[b])];
            }
        }
        let identity = self.class_of[self.base.identity()];
        (
            FiniteMonoid::from_parts_unchecked(table, identity),
            self.class_of.clone(),
        )
    }
}

/// Outcome of the division search: a third verdict distinguishes an
/// exhausted search budget from a definite "no".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Division {
    Divides,
    DoesNotDivide,
    BudgetExhausted,
}

/// Budget for [`divides`]. The defaults cover every submonoid when the
/// candidate divisor has at most `max_generators + 1` elements and search
/// surjections only onto monoids of size at most `max_image_size`.
#[derive(Debug, Clone, Copy)]
pub struct DivisionBudget {
    pub max_generators: usize,
    pub max_image_size: usize,
    pub max_candidates: u64,
}

impl Default for DivisionBudget {
    fn default() -> Self {
        DivisionBudget {
            max_generators: 4,
            max_image_size: 6,
            max_candidates: 2_000_000,
        }
    }
}

/// Test oracle: does `m` divide `n`, i.e. is `m` the image of a submonoid of
/// `n` under a surjective monoid morphism? Exponential search, intended for
/// small `n` only.
pub fn divides(m: &FiniteMonoid, n: &FiniteMonoid, budget: &DivisionBudget) -> Division {
    if m.size() == 1 {
        return Division::Divides;
    }
    if m.size() > budget.max_image_size {
        return Division::BudgetExhausted;
    }
    if m.size() > n.size() {
        return Division::DoesNotDivide;
    }

    let others: Vec<Element> = n.elements().filter(|&e| e != n.identity()).collect();
    let complete = others.len() <= budget.max_generators;
    let mut submonoids: BTreeSet<Vec<Element>> = BTreeSet::new();
    let mut collect = |gens: &BTreeSet<Element>| {
        let sub = n.generated_submonoid(gens);
        submonoids.insert(sub.into_iter().collect());
    };
    if complete {
        // Every subset of the non-identity elements is a generator set, so
        // every submonoid is covered.
        for mask in 0u32..(1 << others.len()) {
            let gens: BTreeSet<Element> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            collect(&gens);
        }
    } else {
        for mask in 0u64..(1 << others.len().min(20)) {
            if (mask.count_ones() as usize) > budget.max_generators {
                continue;
            }
            let gens: BTreeSet<Element> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            collect(&gens);
        }
    }

    let mut candidates_tried = 0u64;
    let mut exhausted = !complete;
    for sub in &submonoids {
        if sub.len() < m.size() {
            continue;
        }
        match surjection_search(m, n, sub, budget, &mut candidates_tried) {
            SearchOutcome::Found => return Division::Divides,
            SearchOutcome::NotFound => {}
            SearchOutcome::OutOfBudget => exhausted = true,
        }
    }
    if exhausted {
        Division::BudgetExhausted
    } else {
        Division::DoesNotDivide
    }
}

enum SearchOutcome {
    Found,
    NotFound,
    OutOfBudget,
}

/// Searches for a surjective morphism from the submonoid `sub` of `n` onto
/// `m`, by enumerating images of a generating set and propagating.
fn surjection_search(
    m: &FiniteMonoid,
    n: &FiniteMonoid,
    sub: &[Element],
    budget: &DivisionBudget,
    tried: &mut u64,
) -> SearchOutcome {
    // Greedy generating set for the submonoid.
    let mut gens: Vec<Element> = Vec::new();
    let mut generated: BTreeSet<Element> = n.generated_submonoid(&BTreeSet::new());
    for &s in sub {
        if !generated.contains(&s) {
            gens.push(s);
            let gen_set: BTreeSet<Element> = gens.iter().copied().collect();
            generated = n.generated_submonoid(&gen_set);
        }
    }
    debug_assert_eq!(generated.len(), sub.len());

    let index_of: std::collections::HashMap<Element, usize> =
        sub.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let k = gens.len();
    let mut choice = vec![0 as Element; k];
    loop {
        *tried += 1;
        if *tried > budget.max_candidates {
            return SearchOutcome::OutOfBudget;
        }
        if try_extend(m, n, sub, &index_of, &gens, &choice) {
            return SearchOutcome::Found;
        }
        // odometer over images of the generators
        let mut i = 0;
        loop {
            if i == k {
                return SearchOutcome::NotFound;
            }
            choice[i] += 1;
            if choice[i] < m.size() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn try_extend(
    m: &FiniteMonoid,
    n: &FiniteMonoid,
    sub: &[Element],
    index_of: &std::collections::HashMap<Element, usize>,
    gens: &[Element],
    images: &[Element],
) -> bool {
    let mut h: Vec<Option<Element>> = vec![None; sub.len()];
    h[index_of[&n.identity()]] = Some(m.identity());
    for (g, &img) in gens.iter().zip(images) {
        let gi = index_of[g];
        match h[gi] {
            Some(prev) if prev != img => return false,
            _ => h[gi] = Some(img),
        }
    }
    // Close under right multiplication by generators.
    let mut changed = true;
    while changed {
        changed = false;
        for (si, &s) in sub.iter().enumerate() {
            let Some(hs) = h[si] else { continue };
            for (g, &img) in gens.iter().zip(images) {
                let t = n.mul(s, *g);
                let ti = index_of[&t];
                let expected = m.mul(hs, img);
                match h[ti] {
                    Some(prev) => {
                        if prev != expected {
                            return false;
                        }
                    }
                    None => {
                        h[ti] = Some(expected);
                        changed = true;
                    }
                }
            }
        }
    }
    if h.iter().any(|v| v.is_none()) {
        return false;
    }
    let h: Vec<Element> = h.into_iter().map(|v| v.unwrap()).collect();
    // Full multiplicativity and surjectivity.
    for (ai, &a) in sub.iter().enumerate() {
        for (bi, &b) in sub.iter().enumerate() {
            let ab = n.mul(a, b);
            if h[index_of[&ab]] != m.mul(h[ai], h[bi]) {
                return false;
            }
        }
    }
    let image: BTreeSet<Element> = h.iter().copied().collect();
    image.len() == m.size()
}

mod serde_support {
    use super::*;
    use serde::Deserializer;

    #[derive(Deserialize)]
    struct MonoidJson {
        size: usize,
        identity: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    }

    impl<'de> Deserialize<'de> for FiniteMonoid {
        fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
            let raw = MonoidJson::deserialize(deserializer)?;
            if raw.table.len() != raw.size {
                return Err(serde::de::Error::custom(format!(
                    "size field is {} but the table has {} rows",
                    raw.size,
                    raw.table.len()
                )));
            }
            let monoid =
                FiniteMonoid::new(raw.table, raw.identity).map_err(serde::de::Error::custom)?;
            match raw.names {
                Some(names) => monoid.with_names(names).map_err(serde::de::Error::custom),
                None => Ok(monoid),
            }
        }
    }
}
