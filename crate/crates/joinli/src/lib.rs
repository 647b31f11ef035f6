//! Finite monoids, syntactic stamps and decision procedures for membership of
//! regular languages in joins `V ∨ LI`, where `LI` is the variety of finite
//! locally trivial semigroups.
//!
//! The crate is organised around a few core objects:
//!
//! * [`algebra::FiniteMonoid`] — finite monoids as multiplication tables,
//!   with ω-powers, products, quotients and a brute-force division oracle;
//! * [`automata::Dfa`] — complete deterministic automata with Boolean
//!   operations, word quotients and builders for the language families used
//!   throughout (prefix/suffix, monomials, subword languages, ...);
//! * [`stamps::Stamp`] — surjective morphisms from a free monoid onto a
//!   finite monoid, in particular syntactic stamps of regular languages,
//!   together with their stability index and eventual image;
//! * [`identities`] — ω-term identities, their satisfaction by stamps in
//!   `all` and `ne` mode, builtin variety bases and the `U(E)` transform;
//! * [`decide`] — the essential congruence, essentially-V membership decided
//!   two independent ways, and join-with-LI membership;
//! * [`constructions`] — constructive quotient witnesses for R, L, J and
//!   group languages, plus the J1 counterexample report;
//! * [`oracle`] — brute-force cross-checks backing the test suite and the
//!   CLI `--verify` mode.
//!
//! Every runnable capability has an example under `examples/`; the `joinli`
//! binary exposes the same operations as subcommands.

pub mod algebra;
pub mod automata;
pub mod cli;
pub mod constructions;
pub mod decide;
pub mod identities;
pub mod oracle;
pub mod stamps;

pub use algebra::{FiniteMonoid, MonoidCongruence};
pub use automata::{Dfa, NeMorphism};
pub use decide::JoinVerdict;
pub use identities::{IdentityStatement, OmegaTerm, Variety};
pub use stamps::Stamp;
