//! Command-line front end exposing the decision procedures and
//! constructions with stable, machine-readable output.
//!
//! Exit codes: `0` — decided positively or constructed; `1` — negative
//! decision; `2` — usage or input error; `3` — internal consistency
//! failure (the dual procedures disagreed or a construction failed its own
//! verification, which indicates a bug rather than bad input).
//!
//! The global `--json` flag switches the human-readable verbs to JSON on
//! stdout; `--verify` additionally runs matching brute-force cross-checks,
//! reporting on stderr.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::algebra::FiniteMonoid;
use crate::automata::{build_family, Dfa, LanguageFamily};
use crate::constructions::{
    group_witness, j1_counterexample_report, j_witness, l_witness, monomials_from_json, r_witness,
    ConstructionError, DEFAULT_PROFILE_STATE_CAP,
};
use crate::decide::{essential_quotient, in_join_with_li, DecideError, EquationalChecker};
use crate::identities::{
    find_monoid_violation, find_violation, monoid_all_satisfies, parse_identity, satisfies, u_of_e,
    u_of_e_single, Mode, Variety,
};
use crate::oracle;
use crate::stamps::Stamp;

/// Environment variable overriding the subword-profile state cap.
pub const PROFILE_CAP_ENV: &str = "JOINLI_PROFILE_STATE_CAP";

#[derive(Parser)]
#[command(
    name = "joinli",
    version,
    about = "Syntactic monoids, essential quotients and membership of regular languages in joins with the locally trivial semigroups"
)]
struct Cli {
    /// Print machine-readable JSON on stdout
    #[arg(long, global = true)]
    json: bool,
    /// Run brute-force cross-checks of the computed answer (reported on stderr)
    #[arg(long, global = true)]
    verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    All,
    Ne,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::All => Mode::All,
            ModeArg::Ne => Mode::Ne,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WitnessKind {
    R,
    L,
    J,
    Group,
}

#[derive(Subcommand)]
enum Command {
    /// Print the syntactic stamp of a language as JSON
    Synmon { dfa: PathBuf },
    /// Print the stability index of the syntactic stamp
    Stability { dfa: PathBuf },
    /// Print the essential quotient of the syntactic stamp
    Essquo { dfa: PathBuf },
    /// Check an identity against a stamp (DFA input) or monoid (monoid input)
    #[command(name = "check-identity")]
    CheckIdentity {
        /// Identity in the DSL, e.g. "x^w y x^w = x^w"
        identity: String,
        /// Substitution mode: images of all words, or of nonempty words only
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Path to a DFA JSON or monoid JSON file
        input: PathBuf,
    },
    /// Check the builtin basis of a variety on the syntactic stamp
    Variety {
        /// One of R, L, J, LI, J1, Com, ACom, A, G, Ab, triv
        name: String,
        dfa: PathBuf,
    },
    /// Decide membership of the language in the join of a variety with LI
    #[command(name = "join-li")]
    JoinLi {
        /// One of R, L, J, A, G, Ab, Com, ACom, triv
        name: String,
        dfa: PathBuf,
    },
    /// Print the wrapped identity x^w y u z t^w = x^w y v z t^w
    Uofe {
        /// Identity in the DSL
        identity: String,
    },
    /// Construct a quotient witness K with L = x^-1 K y^-1
    Witness {
        #[arg(value_enum)]
        family: WitnessKind,
        /// Monomial JSON (r/l) or DFA JSON (j/group)
        input: PathBuf,
        #[arg(long, default_value = "")]
        x: String,
        #[arg(long, default_value = "")]
        y: String,
        /// Piecewise-testability level, required for the j family
        #[arg(long)]
        k: Option<usize>,
    },
    /// Built-in demonstrations; currently `j1`
    Demo { which: String },
    /// Build a language-family automaton and print its JSON
    Build {
        /// The alphabet, as a string of distinct letters, e.g. `ab`
        #[arg(long)]
        alphabet: String,
        #[command(subcommand)]
        family: BuildCommand,
    },
}

#[derive(Subcommand)]
enum BuildCommand {
    /// u Σ*
    Prefix { u: String },
    /// Σ* u
    Suffix { u: String },
    /// the singleton {w}
    Single { w: String },
    /// Σ* u1 Σ* u2 … Σ* un Σ* (words containing u as a subword)
    Subword { u: String },
    /// U Σ* V ∪ W for finite word sets (repeat --u/--v/--w per word)
    #[command(name = "infix-li")]
    InfixLi {
        #[arg(long = "u")]
        u: Vec<String>,
        #[arg(long = "v")]
        v: Vec<String>,
        #[arg(long = "w")]
        w: Vec<String>,
    },
    /// A0* a1 A1* … ak Ak* from a monomial JSON file
    Monomial { file: PathBuf },
}

enum CliError {
    Usage(String),
    Consistency(String),
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Consistency { .. } => CliError::Consistency(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<DecideError> for CliError {
    fn from(e: DecideError) -> Self {
        match e {
            DecideError::ProcedureDisagreement { .. } => CliError::Consistency(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run(args: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 2;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Consistency(msg)) => {
            eprintln!("internal consistency failure: {msg}");
            3
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_dfa(path: &Path) -> Result<Dfa, CliError> {
    serde_json::from_str(&read_file(path)?)
        .map_err(|e| usage(format!("{}: not a DFA JSON file: {e}", path.display())))
}

enum StampInput {
    Language(Dfa),
    Monoid(FiniteMonoid),
}

fn load_stamp_input(path: &Path) -> Result<StampInput, CliError> {
    let text = read_file(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: not JSON: {e}", path.display())))?;
    if value.get("delta").is_some() {
        Ok(StampInput::Language(
            serde_json::from_value(value)
                .map_err(|e| usage(format!("{}: not a DFA JSON file: {e}", path.display())))?,
        ))
    } else if value.get("table").is_some() {
        Ok(StampInput::Monoid(serde_json::from_value(value).map_err(
            |e| usage(format!("{}: not a monoid JSON file: {e}", path.display())),
        )?))
    } else {
        Err(usage(format!(
            "{}: expected a DFA (`delta`) or monoid (`table`) JSON file",
            path.display()
        )))
    }
}

fn profile_cap() -> usize {
    std::env::var(PROFILE_CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_PROFILE_STATE_CAP)
}

/// Writes a line to stdout, tolerating a closed pipe (e.g. `| head`).
fn emit(text: impl std::fmt::Display) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn print_json<T: serde::Serialize>(value: &T) {
    emit(serde_json::to_string_pretty(value).expect("serializable"));
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Synmon { dfa } => {
            let d = load_dfa(&dfa)?;
            let stamp = Stamp::syntactic(&d);
            if cli.verify {
                verify_syntactic_stamp(&d, &stamp)?;
            }
            print_json(&stamp);
            Ok(0)
        }
        Command::Stability { dfa } => {
            let d = load_dfa(&dfa)?;
            let stamp = Stamp::syntactic(&d);
            let s = stamp.stability_index();
            if cli.verify {
                verify_stability(&stamp)?;
            }
            if cli.json {
                print_json(&json!({ "stability_index": s }));
            } else {
                emit(s);
            }
            Ok(0)
        }
        Command::Essquo { dfa } => {
            let d = load_dfa(&dfa)?;
            let stamp = Stamp::syntactic(&d);
            let eq = essential_quotient(&stamp);
            if cli.verify {
                verify_essential_quotient(&stamp, &eq)?;
            }
            let payload = json!({
                "stability_index": eq.stability_index(),
                "t": eq.t(),
                "class_count": eq.quotient_size(),
                "projection": eq.congruence().classes(),
                "quotient_monoid": eq.quotient_stamp().monoid(),
                "quotient_letters": eq.quotient_stamp().letter_images(),
            });
            if cli.json {
                print_json(&payload);
            } else {
                emit(format_args!(
                    "essential quotient: {} classes (syntactic monoid has {} elements), stability index {}",
                    eq.quotient_size(),
                    stamp.monoid().size(),
                    eq.stability_index()
                ));
                emit(format_args!("projection: {:?}", eq.congruence().classes()));
            }
            Ok(0)
        }
        Command::CheckIdentity {
            identity,
            mode,
            input,
        } => {
            let id = parse_identity(&identity).map_err(|e| usage(e.to_string()))?;
            let mode: Mode = mode.into();
            let (satisfied, violation, kind) = match load_stamp_input(&input)? {
                StampInput::Language(d) => {
                    let stamp = Stamp::syntactic(&d);
                    if cli.verify {
                        verify_identity_check(&stamp, &id, mode)?;
                    }
                    let v = find_violation(&stamp, &id, mode);
                    (v.is_none(), v, "dfa")
                }
                StampInput::Monoid(m) => {
                    if mode == Mode::Ne {
                        return Err(usage(
                            "ne-satisfaction ranges over images of nonempty words and needs letter images; provide a DFA input",
                        ));
                    }
                    let v = find_monoid_violation(&m, &id);
                    (v.is_none(), v, "monoid")
                }
            };
            if cli.json {
                print_json(&json!({
                    "identity": id.to_string(),
                    "mode": mode.to_string(),
                    "input": kind,
                    "satisfied": satisfied,
                    "violation": violation,
                }));
            } else if satisfied {
                emit(format_args!("satisfied ({mode})"));
            } else {
                emit(format_args!(
                    "not satisfied ({mode}); violating assignment: {:?}",
                    violation.as_ref().expect("present when not satisfied")
                ));
            }
            Ok(if satisfied { 0 } else { 1 })
        }
        Command::Variety { name, dfa } => {
            let variety: Variety = name
                .parse()
                .map_err(|e: crate::identities::IdentityError| usage(e.to_string()))?;
            let d = load_dfa(&dfa)?;
            let stamp = Stamp::syntactic(&d);
            let (basis, mode) = variety.basis();
            if cli.verify {
                for id in &basis {
                    verify_identity_check(&stamp, id, mode)?;
                }
            }
            let failing = basis.iter().find(|id| match mode {
                Mode::All => !monoid_all_satisfies(stamp.monoid(), id),
                Mode::Ne => !satisfies(&stamp, id, Mode::Ne),
            });
            let satisfied = failing.is_none();
            if cli.json {
                print_json(&json!({
                    "variety": variety.name(),
                    "mode": mode.to_string(),
                    "satisfied": satisfied,
                    "failing_identity": failing.map(|id| id.to_string()),
                }));
            } else if satisfied {
                emit(format_args!(
                    "syntactic monoid satisfies the {variety} basis ({mode} mode)"
                ));
            } else {
                emit(format_args!(
                    "syntactic monoid fails the {variety} basis ({mode} mode) at: {}",
                    failing.expect("present when not satisfied")
                ));
            }
            Ok(if satisfied { 0 } else { 1 })
        }
        Command::JoinLi { name, dfa } => {
            let variety: Variety = name
                .parse()
                .map_err(|e: crate::identities::IdentityError| usage(e.to_string()))?;
            let d = load_dfa(&dfa)?;
            let verdict = in_join_with_li(&d, variety)?;
            if cli.verify {
                verify_join_verdict(&d, variety, verdict.in_join)?;
            }
            if cli.json {
                print_json(&verdict);
            } else {
                emit(format_args!(
                    "L ∈ Lang({} ∨ LI): {} (quotient size {}, stability index {}{})",
                    verdict.variety,
                    if verdict.in_join { "yes" } else { "no" },
                    verdict.quotient_size,
                    verdict.stability_index,
                    match verdict.criterion_status {
                        crate::decide::CriterionStatus::Proved => "",
                        crate::decide::CriterionStatus::PaperAsserted =>
                            ", criterion (A) paper-asserted",
                        crate::decide::CriterionStatus::Classical =>
                            ", criterion (A) by classical closure",
                    },
                ));
                if let Some(w) = &verdict.witness {
                    emit(format_args!("violated identity: {}", w.identity));
                    emit(format_args!("assignment: {:?}", w.assignment));
                }
            }
            Ok(if verdict.in_join { 0 } else { 1 })
        }
        Command::Uofe { identity } => {
            let id = parse_identity(&identity).map_err(|e| usage(e.to_string()))?;
            let wrapped = u_of_e_single(&id);
            if cli.json {
                print_json(&json!({ "input": id.to_string(), "output": wrapped.to_string() }));
            } else {
                emit(wrapped);
            }
            Ok(0)
        }
        Command::Witness {
            family,
            input,
            x,
            y,
            k,
        } => {
            let witness = match family {
                WitnessKind::R => {
                    let monomials = monomials_from_json(&read_file(&input)?)
                        .map_err(|e| usage(e.to_string()))?;
                    r_witness(&monomials, &x, &y)?
                }
                WitnessKind::L => {
                    let monomials = monomials_from_json(&read_file(&input)?)
                        .map_err(|e| usage(e.to_string()))?;
                    l_witness(&monomials, &x, &y)?
                }
                WitnessKind::J => {
                    let level = k.ok_or_else(|| usage("the j family needs --k <level>"))?;
                    j_witness(&load_dfa(&input)?, level, &x, &y, profile_cap())?
                }
                WitnessKind::Group => group_witness(&load_dfa(&input)?, &x, &y)?,
            };
            if cli.verify {
                verify_witness_basis(family, &witness)?;
            }
            print_json(&witness);
            Ok(0)
        }
        Command::Demo { which } => {
            if which != "j1" {
                return Err(usage(format!("unknown demo {which:?}; available: j1")));
            }
            let report = j1_counterexample_report()?;
            if cli.json {
                print_json(&report);
            } else {
                emit(report);
            }
            Ok(0)
        }
        Command::Build { alphabet, family } => {
            let letters: Vec<char> = alphabet.chars().collect();
            let spec = match family {
                BuildCommand::Prefix { u } => LanguageFamily::Prefix { u },
                BuildCommand::Suffix { u } => LanguageFamily::Suffix { u },
                BuildCommand::Single { w } => LanguageFamily::Single { w },
                BuildCommand::Subword { u } => LanguageFamily::Subword { u },
                BuildCommand::InfixLi { u, v, w } => LanguageFamily::InfixLi { u, v, w },
                BuildCommand::Monomial { file } => {
                    let monomials = monomials_from_json(&read_file(&file)?)
                        .map_err(|e| usage(e.to_string()))?;
                    let mut acc = crate::automata::empty_language(&letters);
                    for m in &monomials {
                        if m.alphabet() != letters.as_slice() {
                            return Err(usage(
                                "monomial file alphabet differs from --alphabet".to_string(),
                            ));
                        }
                        acc = acc.union(m.dfa()).map_err(|e| usage(e.to_string()))?;
                    }
                    if cli.verify {
                        verify_build_monomials(&monomials, &acc)?;
                    }
                    print_json(&acc);
                    return Ok(0);
                }
            };
            let dfa = build_family(&letters, &spec).map_err(|e| usage(e.to_string()))?;
            if cli.verify {
                verify_build(&letters, &spec, &dfa)?;
            }
            print_json(&dfa);
            Ok(0)
        }
    }
}

fn consistency(msg: impl Into<String>) -> CliError {
    CliError::Consistency(msg.into())
}

fn verify_syntactic_stamp(d: &Dfa, stamp: &Stamp) -> Result<(), CliError> {
    if !stamp
        .language()
        .equivalent(d)
        .map_err(|e| usage(e.to_string()))?
    {
        return Err(consistency(
            "language of the syntactic stamp differs from the input",
        ));
    }
    eprintln!("verify: stamp language round trip: ok");
    let min = d.minimize();
    if min.states() <= 6 {
        let n = 2 * min.states();
        let brute = oracle::syntactic_classes_bruteforce(&min, n);
        let words: Vec<String> = oracle::WordEnumeration::new(min.alphabet().to_vec(), n)
            .iter()
            .collect();
        let mut by_value: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for w in &words {
            by_value
                .entry(stamp.eval(w).expect("in-alphabet word"))
                .or_default()
                .push(w.clone());
        }
        let brute_set: BTreeSet<Vec<String>> = brute.into_iter().collect();
        let stamp_set: BTreeSet<Vec<String>> = by_value.into_values().collect();
        if brute_set != stamp_set {
            return Err(consistency(
                "brute-force context classes disagree with the syntactic-stamp partition",
            ));
        }
        eprintln!(
            "verify: context classes on words of length <= {n}: ok ({} classes)",
            stamp_set.len()
        );
    } else {
        eprintln!("verify: context-class brute force skipped (more than 6 states)");
    }
    Ok(())
}

fn verify_stability(stamp: &Stamp) -> Result<(), CliError> {
    let ei = stamp.eventual_image();
    let s = ei.stability_index();
    let horizon = 2 * s + ei.period();
    let work = (stamp.alphabet().len() as f64).powi(horizon as i32);
    if work > 8_000_000.0 {
        return Err(usage(format!(
            "stability verification would enumerate ~{work:.0} words (length up to {horizon}); too large"
        )));
    }
    for n in 1..=horizon {
        if oracle::image_of_length(stamp, n) != ei.level(n) {
            return Err(consistency(format!(
                "level set at length {n} differs from word enumeration"
            )));
        }
    }
    if oracle::stability_index_bruteforce(stamp, s) != Some(s) {
        return Err(consistency("brute-force stability index differs"));
    }
    let mut t_brute: BTreeSet<usize> = BTreeSet::new();
    for n in s..=horizon {
        t_brute.extend(oracle::image_of_length(stamp, n));
    }
    if t_brute.into_iter().collect::<Vec<_>>() != ei.t() {
        return Err(consistency("eventual image differs from word enumeration"));
    }
    eprintln!("verify: level sets, stability index and eventual image by word enumeration: ok");
    Ok(())
}

fn verify_essential_quotient(
    stamp: &Stamp,
    eq: &crate::decide::EssentialQuotient,
) -> Result<(), CliError> {
    let m = stamp.monoid();
    let t = eq.t();
    let pairs = m.size() * m.size();
    if pairs * t.len() * t.len() <= 20_000_000 {
        for a in m.elements() {
            for b in m.elements() {
                let same_class = eq.congruence().class_of(a) == eq.congruence().class_of(b);
                let same_contexts = t.iter().all(|&al| {
                    t.iter()
                        .all(|&be| m.mul(m.mul(al, a), be) == m.mul(m.mul(al, b), be))
                });
                if same_class != same_contexts {
                    return Err(consistency(format!(
                        "essential congruence wrong on elements {a} and {b}"
                    )));
                }
            }
        }
        eprintln!("verify: essential congruence against its definition: ok");
    } else {
        eprintln!("verify: essential-congruence recheck skipped (too large)");
    }
    if stamp.accepting().is_some() {
        let li = oracle::is_li_language_bruteforce(stamp);
        if li != (eq.quotient_size() == 1) {
            return Err(consistency(
                "trivial essential quotient must coincide with the language being locally trivial",
            ));
        }
        eprintln!("verify: trivial quotient vs locally-trivial language: ok");
    }
    Ok(())
}

fn verify_identity_check(
    stamp: &Stamp,
    id: &crate::identities::IdentityStatement,
    mode: Mode,
) -> Result<(), CliError> {
    if stamp.monoid().size() > 8 {
        eprintln!("verify: word-substitution brute force skipped (monoid larger than 8)");
        return Ok(());
    }
    let brute = oracle::satisfies_bruteforce(stamp, id, mode, stamp.monoid().size());
    if brute != satisfies(stamp, id, mode) {
        return Err(consistency(format!(
            "word-substitution brute force disagrees on {id} in {mode} mode"
        )));
    }
    eprintln!("verify: word-substitution brute force on {id}: ok");
    Ok(())
}

fn verify_join_verdict(d: &Dfa, variety: Variety, in_join: bool) -> Result<(), CliError> {
    let stamp = Stamp::syntactic(d);
    let (basis, _) = variety.basis();
    if stamp.monoid().size() <= 8 {
        let generic = u_of_e(&basis)
            .iter()
            .all(|wrapped| satisfies(&stamp, wrapped, Mode::Ne));
        if generic != in_join {
            return Err(consistency(
                "generic ne-satisfaction of the wrapped identities disagrees with the verdict",
            ));
        }
        eprintln!("verify: generic ne-satisfaction of U(E): ok");
    } else {
        eprintln!("verify: generic U(E) cross-check skipped (monoid larger than 8)");
    }
    let checker = EquationalChecker::new(&stamp);
    let equational = basis.iter().all(|id| checker.check(id).is_none());
    if equational != in_join {
        return Err(consistency("equational recheck disagrees with the verdict"));
    }
    Ok(())
}

fn verify_witness_basis(kind: WitnessKind, witness: &Dfa) -> Result<(), CliError> {
    let variety = match kind {
        WitnessKind::R => Variety::R,
        WitnessKind::L => Variety::L,
        WitnessKind::J => Variety::J,
        WitnessKind::Group => Variety::G,
    };
    let stamp = Stamp::syntactic(witness);
    let (basis, _) = variety.basis();
    for id in &basis {
        if !monoid_all_satisfies(stamp.monoid(), id) {
            return Err(consistency(format!(
                "witness language leaves the family: its syntactic monoid fails {id}"
            )));
        }
    }
    eprintln!("verify: witness syntactic monoid satisfies the {variety} basis: ok");
    Ok(())
}

fn verify_build(alphabet: &[char], spec: &LanguageFamily, dfa: &Dfa) -> Result<(), CliError> {
    let check = |w: &str| -> bool {
        match spec {
            LanguageFamily::Prefix { u } => w.starts_with(u.as_str()),
            LanguageFamily::Suffix { u } => w.ends_with(u.as_str()),
            LanguageFamily::Single { w: only } => w == only,
            LanguageFamily::Subword { u } => oracle::is_subword(u, w),
            LanguageFamily::InfixLi { u, v, w: extra } => {
                extra.iter().any(|e| e == w)
                    || u.iter().any(|uw| {
                        v.iter().any(|vw| {
                            w.chars().count() >= uw.chars().count() + vw.chars().count()
                                && w.starts_with(uw.as_str())
                                && w.ends_with(vw.as_str())
                        })
                    })
            }
            LanguageFamily::Monomial { sets, letters, .. } => {
                oracle::monomial_matches(sets, letters, w)
            }
        }
    };
    for w in oracle::WordEnumeration::new(alphabet.to_vec(), 8).iter() {
        if dfa.accepts(&w) != check(&w) {
            return Err(consistency(format!(
                "built automaton disagrees with the family on {w:?}"
            )));
        }
    }
    eprintln!("verify: membership against direct word predicates up to length 8: ok");
    Ok(())
}

fn verify_build_monomials(
    monomials: &[crate::constructions::RMonomial],
    dfa: &Dfa,
) -> Result<(), CliError> {
    for w in oracle::WordEnumeration::new(dfa.alphabet().to_vec(), 8).iter() {
        let direct = monomials
            .iter()
            .any(|m| oracle::monomial_matches(m.sets(), m.letters(), &w));
        if dfa.accepts(&w) != direct {
            return Err(consistency(format!(
                "monomial union disagrees with the matcher on {w:?}"
            )));
        }
    }
    eprintln!("verify: monomial membership up to length 8: ok");
    Ok(())
}
