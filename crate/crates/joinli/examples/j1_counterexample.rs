//! The J1 counterexample: wrapping `Σ*bΣ*` with a single letter leaves the
//! class of languages recognised by idempotent commutative monoids and
//! cannot be recovered from any of its 16 members by bounded quotients —
//! even though the wrapped language is still essentially-J1. Hence
//! essentially-J1 strictly contains `J1 ∨ LI`.
//!
//! ```sh
//! cargo run --example j1_counterexample
//! ```

use joinli::constructions::j1_counterexample_report;

fn main() {
    let report = j1_counterexample_report().expect("the counterexample reproduces exactly");
    println!("{report}");
    println!();
    println!(
        "machine-readable: {} refutations, candidate count {}",
        report.refutations.len(),
        report.candidate_count
    );
}
