//! Built-in systems, addressable by name from the CLI and the suite.

use crate::prs::{Counter, ParikhRewritingSystem};
use crate::thue::{RuleFamily, ThueSystem};
use crate::words::{Alphabet, Word};

/// Names of the built-in Thue systems.
pub const THUE_PRESETS: [&str; 5] = [
    "binary-swap",
    "binary-ex1506b",
    "ternary-ex0701c",
    "salomaa",
    "binary-R1R2",
];

/// Names of the built-in Parikh rewriting systems.
pub const PRS_PRESETS: [&str; 4] = [
    "binary-swap-ab",
    "salomaa-abc",
    "ternary-allswaps",
    "binary-R1R2-ab",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedSystem {
    Thue(ThueSystem),
    Prs(ParikhRewritingSystem),
}

impl NamedSystem {
    pub fn thue(&self) -> &ThueSystem {
        match self {
            NamedSystem::Thue(t) => t,
            NamedSystem::Prs(p) => p.thue(),
        }
    }
}

pub fn lookup(name: &str) -> Option<NamedSystem> {
    Some(match name {
        "binary-swap" => NamedSystem::Thue(binary_swap()),
        "binary-ex1506b" => NamedSystem::Thue(binary_ex1506b()),
        "ternary-ex0701c" => NamedSystem::Thue(ternary_ex0701c()),
        "salomaa" => NamedSystem::Thue(salomaa_thue()),
        "binary-R1R2" => NamedSystem::Thue(binary_r1r2()),
        "binary-swap-ab" => NamedSystem::Prs(binary_swap_ab()),
        "salomaa-abc" => NamedSystem::Prs(salomaa_abc()),
        "ternary-allswaps" => NamedSystem::Prs(ternary_allswaps()),
        "binary-R1R2-ab" => NamedSystem::Prs(binary_r1r2_ab()),
        _ => return None,
    })
}

fn binary() -> Alphabet {
    Alphabet::parse("ab").expect("valid alphabet")
}

fn ternary() -> Alphabet {
    Alphabet::parse("abc").expect("valid alphabet")
}

fn w(a: &Alphabet, s: &str) -> Word {
    a.word(s).expect("preset words use the preset alphabet")
}

fn system(a: Alphabet, rules: Vec<RuleFamily>) -> ThueSystem {
    ThueSystem::new(a, rules).expect("presets are valid")
}

fn finite(a: &Alphabet, id: &str, left: &str, right: &str) -> RuleFamily {
    RuleFamily::finite(id, w(a, left), w(a, right))
}

/// `u x v <-> v x u` with `u`, `v` two-letter words, `x ∈ Γ*`.
fn sandwich(a: &Alphabet, id: &str, u: &str, v: &str, gamma: &str) -> RuleFamily {
    RuleFamily::parametric(
        id,
        (w(a, u), w(a, v)),
        a.letter_set(gamma).expect("preset infix alphabet"),
        (w(a, v), w(a, u)),
    )
}

/// `{(ab, ba)}` over `a < b`.
pub fn binary_swap() -> ThueSystem {
    let a = binary();
    let r = finite(&a, "ab-ba", "ab", "ba");
    system(a, vec![r])
}

/// `{(abxba, baxab) | x ∈ {a,b}*}` over `a < b`.
pub fn binary_ex1506b() -> ThueSystem {
    let a = binary();
    let r = sandwich(&a, "abxba", "ab", "ba", "ab");
    system(a, vec![r])
}

/// `{(ac,ca)} ∪ {(abxba,baxab) | x ∈ {a,b}*} ∪ {(bcxcb,cbxbc) | x ∈ {b,c}*}`
/// over `a < b < c`: sound, complete only up to length 7.
pub fn ternary_ex0701c() -> ThueSystem {
    let a = ternary();
    let rules = vec![
        finite(&a, "ac", "ac", "ca"),
        sandwich(&a, "abxba", "ab", "ba", "ab"),
        sandwich(&a, "bcxcb", "bc", "cb", "bc"),
    ];
    system(a, rules)
}

/// Salomaa's rules over `a < b < c`: `ac <-> ca`, `abxba <-> baxab` and
/// `bcxcb <-> cbxbc` for every `x ∈ Σ*`.
pub fn salomaa_thue() -> ThueSystem {
    let a = ternary();
    let rules = vec![
        finite(&a, "ac", "ac", "ca"),
        sandwich(&a, "abxba", "ab", "ba", "abc"),
        sandwich(&a, "bcxcb", "bc", "cb", "abc"),
    ];
    system(a, rules)
}

/// The two cyclic triples of length-3 rules over `a < b`:
/// `R1 = {(abb,bab), (bab,bba), (bba,abb)}` and
/// `R2 = {(baa,aba), (aba,aab), (aab,baa)}`.
pub fn r1_r2_rules() -> (Vec<RuleFamily>, Vec<RuleFamily>) {
    let a = binary();
    (
        vec![
            finite(&a, "abb-bab", "abb", "bab"),
            finite(&a, "bab-bba", "bab", "bba"),
            finite(&a, "bba-abb", "bba", "abb"),
        ],
        vec![
            finite(&a, "baa-aba", "baa", "aba"),
            finite(&a, "aba-aab", "aba", "aab"),
            finite(&a, "aab-baa", "aab", "baa"),
        ],
    )
}

/// `R1 ∪ R2` over `a < b`.
pub fn binary_r1r2() -> ThueSystem {
    let (mut r1, r2) = r1_r2_rules();
    r1.extend(r2);
    system(binary(), r1)
}

fn prs(thue: ThueSystem, counters: &[&str]) -> ParikhRewritingSystem {
    let counters = counters
        .iter()
        .map(|c| Counter::new(thue.alphabet(), w(thue.alphabet(), c)).expect("preset counter"))
        .collect();
    ParikhRewritingSystem::new(thue, counters).expect("presets are valid")
}

/// `({a<b}, {(ab,ba)}, {ab})`: sound and complete.
pub fn binary_swap_ab() -> ParikhRewritingSystem {
    prs(binary_swap(), &["ab"])
}

/// Salomaa's rules with the single counter `abc`: sound and complete.
pub fn salomaa_abc() -> ParikhRewritingSystem {
    prs(salomaa_thue(), &["abc"])
}

/// All three adjacent swaps with counters `ab`, `bc`, `abc`.
pub fn ternary_allswaps() -> ParikhRewritingSystem {
    let a = ternary();
    let rules = vec![
        finite(&a, "ac-ca", "ac", "ca"),
        finite(&a, "bc-cb", "bc", "cb"),
        finite(&a, "ab-ba", "ab", "ba"),
    ];
    prs(system(a, rules), &["ab", "bc", "abc"])
}

/// `R1 ∪ R2` with counter `ab`.
pub fn binary_r1r2_ab() -> ParikhRewritingSystem {
    prs(binary_r1r2(), &["ab"])
}
