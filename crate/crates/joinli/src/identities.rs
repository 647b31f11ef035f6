//! ω-term identities: parsing, evaluation over finite monoids, satisfaction
//! by stamps, builtin variety bases and the `U(E)` transform.
//!
//! # The identity DSL
//!
//! ```text
//! identity := term "=" term
//! term     := "1" | factor+
//! factor   := var | var "^w" | "(" term ")" "^w"
//! var      := [a-z][0-9]*
//! ```
//!
//! Factors are separated by whitespace; `1` denotes the empty product. A run
//! of letters like `ab` — parenthesised or not — is split into single-letter
//! variables, so `(ab)^w a = (ab)^w` and `(a b)^w a = (a b)^w` parse the
//! same. Digits attach to the preceding letter: `x1` is one variable, which
//! is how fresh names generated by [`u_of_e`] stay unambiguous.
//!
//! # Satisfaction
//!
//! A stamp `φ` *all-satisfies* `u = v` when every substitution of the
//! variables by images of arbitrary words equates both sides, and
//! *ne-satisfies* it when substitutions range over images of nonempty words.
//! At the level of elements these ranges are the full carrier and the image
//! semigroup `φ(Σ⁺)` respectively, each variable chosen independently.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Element, FiniteMonoid};
use crate::stamps::Stamp;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdentityError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unbound variable {0:?} in term")]
    UnboundVariable(String),
    #[error("unknown variety {0:?}; choose one of R, L, J, LI, J1, Com, ACom, A, G, Ab, triv")]
    UnknownVariety(String),
}

/// One multiplicative factor of an ω-term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Factor {
    Var(String),
    Omega(OmegaTerm),
}

/// A product of factors; the empty product denotes the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OmegaTerm(pub Vec<Factor>);

impl OmegaTerm {
    pub fn var(name: &str) -> Self {
        OmegaTerm(vec![Factor::Var(name.to_string())])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn collect_variables(&self, out: &mut BTreeSet<String>) {
        for f in &self.0 {
            match f {
                Factor::Var(v) => {
                    out.insert(v.clone());
                }
                Factor::Omega(t) => t.collect_variables(out),
            }
        }
    }
}

impl fmt::Display for OmegaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, factor) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match factor {
                Factor::Var(v) => write!(f, "{v}")?,
                Factor::Omega(inner) => match inner.0.as_slice() {
                    [Factor::Var(v)] => write!(f, "{v}^w")?,
                    _ => write!(f, "({inner})^w")?,
                },
            }
        }
        Ok(())
    }
}

/// An identity `lhs = rhs` between ω-terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdentityStatement {
    pub lhs: OmegaTerm,
    pub rhs: OmegaTerm,
}

impl IdentityStatement {
    /// The variables occurring on either side.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.lhs.collect_variables(&mut out);
        self.rhs.collect_variables(&mut out);
        out
    }
}

impl fmt::Display for IdentityStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Var(String, usize),
    One(usize),
    Open(usize),
    Close(usize),
    OmegaPower(usize),
    Equals(usize),
}

fn tokenize(text: &str) -> Result<Vec<Token>, IdentityError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '(' => {
                tokens.push(Token::Open(i));
                i += 1;
            }
            ')' => {
                tokens.push(Token::Close(i));
                i += 1;
            }
            '=' => {
                tokens.push(Token::Equals(i));
                i += 1;
            }
            '^' => {
                if chars.get(i + 1) == Some(&'w') {
                    tokens.push(Token::OmegaPower(i));
                    i += 2;
                } else {
                    return Err(IdentityError::Parse {
                        position: i,
                        message: "expected `w` after `^`".into(),
                    });
                }
            }
            'a'..='z' | '0'..='9' => {
                let start = i;
                let mut run = String::new();
                while i < chars.len()
                    && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit())
                {
                    run.push(chars[i]);
                    i += 1;
                }
                if run == "1" {
                    tokens.push(Token::One(start));
                    continue;
                }
                // split the run into variables: a letter plus trailing digits
                let rc: Vec<char> = run.chars().collect();
                let mut j = 0;
                while j < rc.len() {
                    if !rc[j].is_ascii_lowercase() {
                        return Err(IdentityError::Parse {
                            position: start + j,
                            message: format!(
                                "variable must start with a letter, found {:?}",
                                rc[j]
                            ),
                        });
                    }
                    let mut name = String::new();
                    name.push(rc[j]);
                    j += 1;
                    while j < rc.len() && rc[j].is_ascii_digit() {
                        name.push(rc[j]);
                        j += 1;
                    }
                    tokens.push(Token::Var(name, start + j - 1));
                }
            }
            other => {
                return Err(IdentityError::Parse {
                    position: i,
                    message: format!("unexpected character {other:?}"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn error(&self, message: impl Into<String>) -> IdentityError {
        let position = match self.peek() {
            Some(
                Token::Var(_, p)
                | Token::One(p)
                | Token::Open(p)
                | Token::Close(p)
                | Token::OmegaPower(p)
                | Token::Equals(p),
            ) => *p,
            None => self.end,
        };
        IdentityError::Parse {
            position,
            message: message.into(),
        }
    }

    /// term := "1" | factor+ ; stops at `=`, `)` or end of input.
    fn term(&mut self) -> Result<OmegaTerm, IdentityError> {
        if let Some(Token::One(_)) = self.peek() {
            self.pos += 1;
            return match self.peek() {
                None | Some(Token::Equals(_)) | Some(Token::Close(_)) => Ok(OmegaTerm::default()),
                _ => Err(self.error("`1` must stand alone as a term")),
            };
        }
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(Token::Var(name, _)) => {
                    let name = name.clone();
                    self.pos += 1;
                    if let Some(Token::OmegaPower(_)) = self.peek() {
                        self.pos += 1;
                        factors.push(Factor::Omega(OmegaTerm::var(&name)));
                    } else {
                        factors.push(Factor::Var(name));
                    }
                }
                Some(Token::Open(_)) => {
                    self.pos += 1;
                    let inner = self.term()?;
                    match self.peek() {
                        Some(Token::Close(_)) => self.pos += 1,
                        _ => return Err(self.error("expected `)`")),
                    }
                    match self.peek() {
                        Some(Token::OmegaPower(_)) => self.pos += 1,
                        _ => return Err(self.error("a parenthesised group must be raised to ^w")),
                    }
                    factors.push(Factor::Omega(inner));
                }
                _ => break,
            }
        }
        if factors.is_empty() {
            return Err(self.error("expected a term"));
        }
        Ok(OmegaTerm(factors))
    }
}

/// Parses an identity in the DSL described at module level.
pub fn parse_identity(text: &str) -> Result<IdentityStatement, IdentityError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.chars().count(),
    };
    let lhs = parser.term()?;
    match parser.peek() {
        Some(Token::Equals(_)) => parser.pos += 1,
        _ => return Err(parser.error("expected `=`")),
    }
    let rhs = parser.term()?;
    if parser.peek().is_some() {
        return Err(parser.error("trailing input after identity"));
    }
    Ok(IdentityStatement { lhs, rhs })
}

/// Evaluates a term: concatenation is the monoid product, `(t)^w` is the
/// ω-power of the value of `t`, the empty term is the identity element.
pub fn eval_term(
    m: &FiniteMonoid,
    t: &OmegaTerm,
    assignment: &BTreeMap<String, Element>,
) -> Result<Element, IdentityError> {
    let mut acc = m.identity();
    for f in &t.0 {
        let v = match f {
            Factor::Var(name) => *assignment
                .get(name)
                .ok_or_else(|| IdentityError::UnboundVariable(name.clone()))?,
            Factor::Omega(inner) => m.omega(eval_term(m, inner, assignment)?),
        };
        acc = m.mul(acc, v);
    }
    Ok(acc)
}

/// A term with variables resolved to slots, for evaluation in hot loops.
#[derive(Debug, Clone)]
pub(crate) enum CompiledFactor {
    Slot(usize),
    Omega(Vec<CompiledFactor>),
}

pub(crate) fn compile_term(t: &OmegaTerm, slots: &BTreeMap<String, usize>) -> Vec<CompiledFactor> {
    t.0.iter()
        .map(|f| match f {
            Factor::Var(name) => CompiledFactor::Slot(slots[name]),
            Factor::Omega(inner) => CompiledFactor::Omega(compile_term(inner, slots)),
        })
        .collect()
}

/// Evaluator with a precomputed ω-power table.
pub(crate) struct TermEvaluator<'m> {
    m: &'m FiniteMonoid,
    omega: Vec<Element>,
}

impl<'m> TermEvaluator<'m> {
    pub(crate) fn new(m: &'m FiniteMonoid) -> Self {
        TermEvaluator {
            m,
            omega: m.omega_table(),
        }
    }

    pub(crate) fn eval(&self, factors: &[CompiledFactor], values: &[Element]) -> Element {
        let mut acc = self.m.identity();
        for f in factors {
            let v = match f {
                CompiledFactor::Slot(i) => values[*i],
                CompiledFactor::Omega(inner) => self.omega[self.eval(inner, values)],
            };
            acc = self.m.mul(acc, v);
        }
        acc
    }
}

/// Substitution range for identity satisfaction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Variables range over images of arbitrary words: the full carrier.
    All,
    /// Variables range over images of nonempty words: the image semigroup.
    Ne,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::All => write!(f, "all"),
            Mode::Ne => write!(f, "ne"),
        }
    }
}

fn substitution_range(s: &Stamp, mode: Mode) -> Vec<Element> {
    match mode {
        Mode::All => s.monoid().elements().collect(),
        Mode::Ne => s.image_semigroup(),
    }
}

/// Searches for an assignment violating `id` over the given range; `None`
/// means the identity is satisfied.
fn violation_over_range(
    m: &FiniteMonoid,
    id: &IdentityStatement,
    range: &[Element],
) -> Option<BTreeMap<String, Element>> {
    let vars: Vec<String> = id.variables().into_iter().collect();
    let slots: BTreeMap<String, usize> = vars
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let lhs = compile_term(&id.lhs, &slots);
    let rhs = compile_term(&id.rhs, &slots);
    let eval = TermEvaluator::new(m);
    if vars.is_empty() {
        return (eval.eval(&lhs, &[]) != eval.eval(&rhs, &[])).then(BTreeMap::new);
    }
    if range.is_empty() {
        return None;
    }
    let mut idx = vec![0usize; vars.len()];
    let mut values: Vec<Element> = vec![range[0]; vars.len()];
    loop {
        if eval.eval(&lhs, &values) != eval.eval(&rhs, &values) {
            return Some(vars.iter().cloned().zip(values.iter().copied()).collect());
        }
        let mut i = 0;
        loop {
            if i == vars.len() {
                return None;
            }
            idx[i] += 1;
            if idx[i] < range.len() {
                values[i] = range[idx[i]];
                break;
            }
            idx[i] = 0;
            values[i] = range[0];
            i += 1;
        }
    }
}

/// Does the stamp satisfy the identity in the given mode?
pub fn satisfies(s: &Stamp, id: &IdentityStatement, mode: Mode) -> bool {
    find_violation(s, id, mode).is_none()
}

/// Like [`satisfies`], but returns a violating assignment when there is one.
pub fn find_violation(
    s: &Stamp,
    id: &IdentityStatement,
    mode: Mode,
) -> Option<BTreeMap<String, Element>> {
    violation_over_range(s.monoid(), id, &substitution_range(s, mode))
}

/// All-satisfaction by a bare monoid (satisfaction in `all` mode depends
/// only on the carrier, not on the letter images).
pub fn monoid_all_satisfies(m: &FiniteMonoid, id: &IdentityStatement) -> bool {
    find_monoid_violation(m, id).is_none()
}

/// A carrier assignment violating `id`, when the monoid does not
/// all-satisfy it.
pub fn find_monoid_violation(
    m: &FiniteMonoid,
    id: &IdentityStatement,
) -> Option<BTreeMap<String, Element>> {
    let range: Vec<Element> = m.elements().collect();
    violation_over_range(m, id, &range)
}

/// Fresh names `x, y, z, t` (digit-suffixed on collision) for wrapping `id`.
pub(crate) fn wrapper_names(id: &IdentityStatement) -> [String; 4] {
    let mut used = id.variables();
    let mut fresh = |base: &str| -> String {
        let mut candidate = base.to_string();
        let mut n = 0usize;
        while used.contains(&candidate) {
            n += 1;
            candidate = format!("{base}{n}");
        }
        used.insert(candidate.clone());
        candidate
    };
    [fresh("x"), fresh("y"), fresh("z"), fresh("t")]
}

/// Wraps `u = v` into `x^w y u z t^w = x^w y v z t^w` with fresh `x,y,z,t`.
pub fn u_of_e_single(id: &IdentityStatement) -> IdentityStatement {
    let [x, y, z, t] = wrapper_names(id);
    let wrap = |core: &OmegaTerm| -> OmegaTerm {
        let mut factors = vec![Factor::Omega(OmegaTerm::var(&x)), Factor::Var(y.clone())];
        factors.extend(core.0.iter().cloned());
        factors.push(Factor::Var(z.clone()));
        factors.push(Factor::Omega(OmegaTerm::var(&t)));
        OmegaTerm(factors)
    };
    IdentityStatement {
        lhs: wrap(&id.lhs),
        rhs: wrap(&id.rhs),
    }
}

/// The `U(E)` transform: each identity of the set, wrapped.
pub fn u_of_e(identities: &[IdentityStatement]) -> Vec<IdentityStatement> {
    identities.iter().map(u_of_e_single).collect()
}

/// Builtin varieties with ω-identity bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variety {
    /// `(ab)^ω a = (ab)^ω`
    R,
    /// `b (ab)^ω = (ab)^ω`
    L,
    /// both of the above
    J,
    /// locally trivial semigroups, ne-defined by `x^ω y x^ω = x^ω`
    Li,
    /// idempotent commutative monoids: `xx = x`, `xy = yx`
    J1,
    /// commutative monoids: `xy = yx`
    Com,
    /// commutative aperiodic monoids
    ACom,
    /// aperiodic monoids: `x^ω x = x^ω`
    A,
    /// groups: `x^ω = 1`
    G,
    /// abelian groups
    Ab,
    /// the trivial variety: `x = y`
    Triv,
}

impl Variety {
    pub const ALL: [Variety; 11] = [
        Variety::R,
        Variety::L,
        Variety::J,
        Variety::Li,
        Variety::J1,
        Variety::Com,
        Variety::ACom,
        Variety::A,
        Variety::G,
        Variety::Ab,
        Variety::Triv,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Variety::R => "R",
            Variety::L => "L",
            Variety::J => "J",
            Variety::Li => "LI",
            Variety::J1 => "J1",
            Variety::Com => "Com",
            Variety::ACom => "ACom",
            Variety::A => "A",
            Variety::G => "G",
            Variety::Ab => "Ab",
            Variety::Triv => "triv",
        }
    }

    /// The identity basis and the mode it is meant to be checked in.
    pub fn basis(&self) -> (Vec<IdentityStatement>, Mode) {
        let parse = |texts: &[&str]| -> Vec<IdentityStatement> {
            texts
                .iter()
                .map(|t| parse_identity(t).expect("builtin basis parses"))
                .collect()
        };
        match self {
            Variety::R => (parse(&["(a b)^w a = (a b)^w"]), Mode::All),
            Variety::L => (parse(&["b (a b)^w = (a b)^w"]), Mode::All),
            Variety::J => (
                parse(&["(a b)^w a = (a b)^w", "b (a b)^w = (a b)^w"]),
                Mode::All,
            ),
            Variety::Li => (parse(&["x^w y x^w = x^w"]), Mode::Ne),
            Variety::J1 => (parse(&["x x = x", "x y = y x"]), Mode::All),
            Variety::Com => (parse(&["x y = y x"]), Mode::All),
            Variety::ACom => (parse(&["x y = y x", "x^w x = x^w"]), Mode::All),
            Variety::A => (parse(&["x^w x = x^w"]), Mode::All),
            Variety::G => (parse(&["x^w = 1"]), Mode::All),
            Variety::Ab => (parse(&["x^w = 1", "x y = y x"]), Mode::All),
            Variety::Triv => (parse(&["x = y"]), Mode::All),
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl std::str::FromStr for Variety {
    type Err = IdentityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variety::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| IdentityError::UnknownVariety(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{all_words, prefix_language, Dfa};
    use std::collections::BTreeSet as Set;

    fn parity_stamp() -> Stamp {
        let d = Dfa::new(vec!['a'], 0, Set::from([0]), vec![vec![1], vec![0]]).unwrap();
        Stamp::syntactic(&d)
    }

    #[test]
    fn parses_the_li_identity() {
        let id = parse_identity("x^w y x^w = x^w").unwrap();
        assert_eq!(
            id.lhs,
            OmegaTerm(vec![
                Factor::Omega(OmegaTerm::var("x")),
                Factor::Var("y".into()),
                Factor::Omega(OmegaTerm::var("x")),
            ])
        );
        assert_eq!(id.rhs, OmegaTerm(vec![Factor::Omega(OmegaTerm::var("x"))]));
        assert_eq!(
            id.variables(),
            Set::from(["x".to_string(), "y".to_string()])
        );
    }

    #[test]
    fn parses_the_r_identity_with_group_omega() {
        let id = parse_identity("(a b)^w a = (a b)^w").unwrap();
        let ab = OmegaTerm(vec![Factor::Var("a".into()), Factor::Var("b".into())]);
        assert_eq!(
            id.lhs,
            OmegaTerm(vec![Factor::Omega(ab.clone()), Factor::Var("a".into())])
        );
        assert_eq!(id.rhs, OmegaTerm(vec![Factor::Omega(ab)]));
    }

    #[test]
    fn juxtaposed_letters_split_into_variables() {
        assert_eq!(
            parse_identity("(ab)^w a = (ab)^w").unwrap(),
            parse_identity("(a b)^w a = (a b)^w").unwrap()
        );
        assert_eq!(
            parse_identity("xy = yx").unwrap(),
            parse_identity("x y = y x").unwrap()
        );
    }

    #[test]
    fn digit_suffixes_attach_to_the_preceding_letter() {
        let id = parse_identity("x1 y1 = y1 x1").unwrap();
        assert_eq!(
            id.variables(),
            Set::from(["x1".to_string(), "y1".to_string()])
        );
        let split = parse_identity("x1y1 = y1x1").unwrap();
        assert_eq!(split, id);
    }

    #[test]
    fn parses_constant_one() {
        let id = parse_identity("x^w = 1").unwrap();
        assert!(id.rhs.is_empty());
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_identity("x^v = x") {
            Err(IdentityError::Parse { position, .. }) => assert_eq!(position, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_identity("(a b = a").is_err());
        assert!(parse_identity("(a b) = a").is_err(), "groups must carry ^w");
        assert!(parse_identity("x = ").is_err());
        assert!(parse_identity("x 1 = x").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "x^w y x^w = x^w",
            "(a b)^w a = (a b)^w",
            "x^w = 1",
            "x^w y (a b)^w a z t^w = x^w y (a b)^w z t^w",
        ] {
            let id = parse_identity(text).unwrap();
            assert_eq!(id.to_string(), text);
            assert_eq!(parse_identity(&id.to_string()).unwrap(), id);
        }
    }

    #[test]
    fn eval_of_empty_term_is_identity() {
        let m = FiniteMonoid::cyclic(3);
        assert_eq!(
            eval_term(&m, &OmegaTerm::default(), &BTreeMap::new()).unwrap(),
            0
        );
    }

    #[test]
    fn eval_omega_in_group_is_identity() {
        let m = FiniteMonoid::cyclic(3);
        let t = OmegaTerm(vec![Factor::Omega(OmegaTerm::var("x"))]);
        let asg = BTreeMap::from([("x".to_string(), 1)]);
        assert_eq!(eval_term(&m, &t, &asg).unwrap(), 0);
    }

    #[test]
    fn eval_left_absorption_in_first_letter_monoid() {
        let s = Stamp::syntactic(&prefix_language(&['a', 'b'], "a").unwrap());
        let a = s.eval("a").unwrap();
        let b = s.eval("b").unwrap();
        let id = parse_identity("x^w y x^w = x^w").unwrap();
        let asg = BTreeMap::from([("x".to_string(), a), ("y".to_string(), b)]);
        assert_eq!(eval_term(s.monoid(), &id.lhs, &asg).unwrap(), a);
    }

    #[test]
    fn eval_reports_unbound_variables() {
        let m = FiniteMonoid::cyclic(2);
        let t = OmegaTerm::var("x");
        assert_eq!(
            eval_term(&m, &t, &BTreeMap::new()),
            Err(IdentityError::UnboundVariable("x".into()))
        );
    }

    #[test]
    fn trivial_stamp_satisfies_everything() {
        let s = Stamp::syntactic(&all_words(&['a', 'b']));
        for v in Variety::ALL {
            let (basis, _) = v.basis();
            for id in &basis {
                assert!(satisfies(&s, id, Mode::All));
                assert!(satisfies(&s, id, Mode::Ne));
            }
        }
    }

    #[test]
    fn parity_is_not_aperiodic() {
        let s = parity_stamp();
        let id = parse_identity("x^w x = x^w").unwrap();
        assert!(!satisfies(&s, &id, Mode::All));
        let witness = find_violation(&s, &id, Mode::All).unwrap();
        assert_eq!(witness["x"], 1);
    }

    #[test]
    fn infix_language_ne_satisfies_li() {
        let d = all_words(&['a', 'b']).concat_words("a", "b");
        let s = Stamp::syntactic(&d);
        let (li, mode) = Variety::Li.basis();
        assert_eq!(mode, Mode::Ne);
        assert!(satisfies(&s, &li[0], Mode::Ne));
        assert!(!satisfies(&s, &li[0], Mode::All));
        assert!(crate::oracle::satisfies_bruteforce(
            &s,
            &li[0],
            Mode::Ne,
            s.monoid().size()
        ));
    }

    #[test]
    fn all_satisfaction_implies_ne_satisfaction() {
        let stamps = [
            parity_stamp(),
            Stamp::syntactic(&prefix_language(&['a', 'b'], "a").unwrap()),
            Stamp::syntactic(&crate::automata::subword_language(&['a', 'b'], "ab").unwrap()),
        ];
        for s in &stamps {
            for v in Variety::ALL {
                let (basis, _) = v.basis();
                for id in &basis {
                    if satisfies(s, id, Mode::All) {
                        assert!(satisfies(s, id, Mode::Ne), "{v}: {id} on {s:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn all_mode_satisfaction_depends_only_on_the_carrier() {
        let stamps = [
            parity_stamp(),
            Stamp::syntactic(&prefix_language(&['a', 'b'], "a").unwrap()),
        ];
        for s in &stamps {
            for v in [Variety::R, Variety::L, Variety::J] {
                let (basis, _) = v.basis();
                for id in &basis {
                    assert_eq!(
                        satisfies(s, id, Mode::All),
                        monoid_all_satisfies(s.monoid(), id)
                    );
                }
            }
        }
    }

    #[test]
    fn u_of_e_wraps_the_r_identity() {
        let (basis, _) = Variety::R.basis();
        let wrapped = u_of_e(&basis);
        assert_eq!(wrapped.len(), 1);
        assert_eq!(
            wrapped[0].to_string(),
            "x^w y (a b)^w a z t^w = x^w y (a b)^w z t^w"
        );
    }

    #[test]
    fn u_of_e_wraps_the_l_identity() {
        let (basis, _) = Variety::L.basis();
        let wrapped = u_of_e(&basis);
        assert_eq!(
            wrapped[0].to_string(),
            "x^w y b (a b)^w z t^w = x^w y (a b)^w z t^w"
        );
    }

    #[test]
    fn u_of_e_picks_fresh_names_without_capture() {
        let id = parse_identity("x y = y x").unwrap();
        let wrapped = u_of_e_single(&id);
        assert_eq!(wrapped.to_string(), "x1^w y1 x y z t^w = x1^w y1 y x z t^w");
        let vars = wrapped.variables();
        assert!(vars.contains("x1") && vars.contains("y1"));
        assert!(vars.contains("z") && vars.contains("t"));
    }

    #[test]
    fn builtin_bases_match_their_definitions() {
        let (r, mode) = Variety::R.basis();
        assert_eq!(mode, Mode::All);
        assert_eq!(r[0].to_string(), "(a b)^w a = (a b)^w");
        let (li, mode) = Variety::Li.basis();
        assert_eq!(mode, Mode::Ne);
        assert_eq!(li[0].to_string(), "x^w y x^w = x^w");
        let (triv, _) = Variety::Triv.basis();
        assert_eq!(triv[0].to_string(), "x = y");
        assert!("Q".parse::<Variety>().is_err());
        assert_eq!("J1".parse::<Variety>().unwrap(), Variety::J1);
    }
}
