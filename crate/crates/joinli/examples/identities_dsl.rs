//! The ω-identity DSL: parsing, the builtin variety bases, satisfaction in
//! `all` versus `ne` mode, and the wrapping transform that turns a basis
//! for V into one for the essentially-V stamps.
//!
//! ```sh
//! cargo run --example identities_dsl
//! ```

use joinli::automata::all_words;
use joinli::identities::{parse_identity, satisfies, u_of_e, Mode, Variety};
use joinli::stamps::Stamp;

fn main() {
    // parsing: juxtaposed letters split, ^w binds to a variable or group
    for text in ["x^w y x^w = x^w", "(ab)^w a = (ab)^w", "x^w = 1"] {
        let id = parse_identity(text).unwrap();
        println!(
            "{text:28} parses to {id}   (variables {:?})",
            id.variables()
        );
    }
    println!();

    // builtin bases and their intended satisfaction mode
    for variety in Variety::ALL {
        let (basis, mode) = variety.basis();
        let rendered: Vec<String> = basis.iter().map(|id| id.to_string()).collect();
        println!("{variety:>4} ({mode}): {}", rendered.join(",  "));
    }
    println!();

    // the wrapping transform: a basis for V becomes a basis for
    // essentially-V under ne-satisfaction
    let (r_basis, _) = Variety::R.basis();
    for (original, wrapped) in r_basis.iter().zip(u_of_e(&r_basis)) {
        println!("U({original})  =  {wrapped}");
    }
    println!();

    // a Σ* b is locally trivial: it ne-satisfies the LI identity but not in
    // all mode (substituting the identity element breaks it)
    let stamp = Stamp::syntactic(&all_words(&['a', 'b']).concat_words("a", "b"));
    let (li, _) = Variety::Li.basis();
    println!("a Σ* b vs {}:", li[0]);
    println!("  ne  mode: {}", satisfies(&stamp, &li[0], Mode::Ne));
    println!("  all mode: {}", satisfies(&stamp, &li[0], Mode::All));
}
