//! A one-shot runner for the reference checks: every published example this
//! crate reproduces, each tagged with the claim it certifies.
//!
//! ```no_run
//! use parikh::suite::{verify_paper_suite, Budget};
//!
//! let report = verify_paper_suite(Budget::Default);
//! print!("{}", report.table());
//! std::process::exit(report.exit_code());
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::irreducible::{derive_thue_system, irreducible, irreducible_graph_path};
use crate::limits::Limits;
use crate::matrix::{m_equivalent, parikh_matrix, verify_matrix_theorem};
use crate::oracle::{build_ambiguous_pair, projection_bound, salomaa_order_pair};
use crate::presets;
use crate::prs::{
    audit_prs_complete, audit_prs_sound, counter_delta, prs_transforms, Counter,
    ParikhRewritingSystem,
};
use crate::thue::{audit_parikh_complete, audit_parikh_sound, dist, transforms, ThueSystem};
use crate::words::{count_subword, parikh_vector, words_of_length, Alphabet, Word};

/// How much work the suite may do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Budget {
    /// Run nothing.
    Zero,
    /// Everything that fits the default state cap.
    Default,
    /// Also the checks that need a state cap of 10^8.
    HighMemory,
}

impl std::str::FromStr for Budget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Budget> {
        match s {
            "zero" => Ok(Budget::Zero),
            "default" => Ok(Budget::Default),
            "high-memory" => Ok(Budget::HighMemory),
            _ => Err(Error::Parse(format!(
                "unknown budget {s:?} (expected zero, default or high-memory)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// The systems the checks run against. Replacing one lets a test confirm that
/// the suite notices a broken system.
#[derive(Debug, Clone)]
pub struct SuiteSystems {
    pub binary_swap_ab: ParikhRewritingSystem,
    pub binary_ex1506b: ThueSystem,
    pub ternary_ex0701c: ThueSystem,
    pub salomaa_abc: ParikhRewritingSystem,
    pub binary_r1r2_ab: ParikhRewritingSystem,
}

impl Default for SuiteSystems {
    fn default() -> Self {
        SuiteSystems {
            binary_swap_ab: presets::binary_swap_ab(),
            binary_ex1506b: presets::binary_ex1506b(),
            ternary_ex0701c: presets::ternary_ex0701c(),
            salomaa_abc: presets::salomaa_abc(),
            binary_r1r2_ab: presets::binary_r1r2_ab(),
        }
    }
}

/// What a check found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
            witness: None,
        }
    }

    fn with_witness(mut self, witness: Option<String>) -> Self {
        self.witness = witness;
        self
    }
}

/// One reference check.
pub struct Check {
    pub id: u32,
    pub name: &'static str,
    /// The published claim the check certifies.
    pub anchor: &'static str,
    /// Pinned wall-time bound.
    pub limit: Duration,
    /// Needs [`Budget::HighMemory`].
    pub high_memory: bool,
    run: fn(&SuiteSystems, &Limits) -> Result<Outcome>,
}

impl Check {
    pub fn run(&self, systems: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
        (self.run)(systems, limits)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub id: u32,
    pub name: &'static str,
    pub anchor: &'static str,
    pub status: Status,
    pub detail: String,
    pub witness: Option<String>,
    pub wall_time_ms: f64,
    pub limit_ms: f64,
    pub within_limit: bool,
    pub high_memory: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub budget: Budget,
    pub entries: Vec<EntryReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.exit_code() == 0
    }

    /// 0 when every check that the default budget runs passed, 1 when some
    /// check failed, 2 when some of them were skipped.
    pub fn exit_code(&self) -> i32 {
        if self.entries.iter().any(|e| e.status == Status::Fail) {
            1
        } else if self
            .entries
            .iter()
            .any(|e| e.status == Status::Skipped && !e.high_memory)
        {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>3}  {:<7}  {:>10}  {:<28}  anchor",
            "id", "status", "time", "check"
        );
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            let time = match e.status {
                Status::Skipped => "-".to_string(),
                _ => format!("{:.1} ms", e.wall_time_ms),
            };
            let _ = writeln!(
                out,
                "{:>3}  {:<7}  {:>10}  {:<28}  {}",
                e.id, status, time, e.name, e.anchor
            );
            if e.status == Status::Fail {
                let _ = writeln!(out, "     {}", e.detail);
                if let Some(w) = &e.witness {
                    let _ = writeln!(out, "     witness: {w}");
                }
            }
        }
        out
    }
}

pub fn limits_for(budget: Budget) -> Limits {
    match budget {
        Budget::HighMemory => Limits::with_max_states(100_000_000),
        _ => Limits::default(),
    }
}

/// Runs one check under a budget, timing it.
pub fn run_check(check: &Check, systems: &SuiteSystems, budget: Budget) -> EntryReport {
    let skipped = budget == Budget::Zero || (check.high_memory && budget != Budget::HighMemory);
    let mut entry = EntryReport {
        id: check.id,
        name: check.name,
        anchor: check.anchor,
        status: Status::Skipped,
        detail: String::new(),
        witness: None,
        wall_time_ms: 0.0,
        limit_ms: check.limit.as_secs_f64() * 1e3,
        within_limit: true,
        high_memory: check.high_memory,
    };
    if skipped {
        entry.detail = "over budget".into();
        return entry;
    }
    let start = Instant::now();
    let outcome = check.run(systems, &limits_for(budget));
    let elapsed = start.elapsed();
    entry.wall_time_ms = elapsed.as_secs_f64() * 1e3;
    entry.within_limit = elapsed <= check.limit;
    match outcome {
        Ok(o) => {
            entry.status = if o.passed { Status::Pass } else { Status::Fail };
            entry.detail = o.detail;
            entry.witness = o.witness;
        }
        Err(e) => {
            entry.status = Status::Fail;
            entry.detail = format!("error: {e}");
        }
    }
    entry
}

pub fn verify_paper_suite(budget: Budget) -> SuiteReport {
    verify_paper_suite_with(budget, &SuiteSystems::default())
}

/// Runs every check concurrently; entries come back ordered by id.
pub fn verify_paper_suite_with(budget: Budget, systems: &SuiteSystems) -> SuiteReport {
    let entries = CHECKS
        .par_iter()
        .map(|c| run_check(c, systems, budget))
        .collect();
    SuiteReport { budget, entries }
}

pub fn checks() -> &'static [Check] {
    &CHECKS
}

const fn ms(n: u64) -> Duration {
    Duration::from_millis(n)
}

const fn secs(n: u64) -> Duration {
    Duration::from_secs(n)
}

static CHECKS: [Check; 18] = [
    Check {
        id: 1,
        name: "matrix-abcbac",
        anchor: "Parikh matrix of abcbac over a<b<c",
        limit: ms(1),
        high_memory: false,
        run: matrix_abcbac,
    },
    Check {
        id: 2,
        name: "subword-counts",
        anchor: "|aabab|_ab = 5, |baacbc|_abc = 2, |w|_λ = 1",
        limit: ms(1),
        high_memory: false,
        run: subword_counts,
    },
    Check {
        id: 3,
        name: "matrix-entry-theorem",
        anchor: "matrix entries are subword counts; the mapping is a morphism",
        limit: secs(1),
        high_memory: false,
        run: matrix_entry_theorem,
    },
    Check {
        id: 4,
        name: "binary-swap-prs",
        anchor: "({a<b}, {(ab,ba)}, {ab}) is sound and complete",
        limit: secs(10),
        high_memory: false,
        run: binary_swap_prs,
    },
    Check {
        id: 5,
        name: "binary-sandwich-thue",
        anchor: "{(abxba, baxab)} is Parikh sound and complete",
        limit: secs(10),
        high_memory: false,
        run: binary_sandwich_thue,
    },
    Check {
        id: 6,
        name: "ternary-restricted-incomplete",
        anchor: "abbcbacb ≡_M bacbabbc but abbcbacb ⇏_R bacbabbc",
        limit: secs(60),
        high_memory: false,
        run: ternary_restricted_incomplete,
    },
    Check {
        id: 7,
        name: "salomaa-sound-complete",
        anchor: "Salomaa's system with counter abc is sound and complete",
        limit: secs(120),
        high_memory: false,
        run: salomaa_sound_complete,
    },
    Check {
        id: 8,
        name: "binary-swap-irreducibles",
        anchor: "w irr⇒ w' iff w →_{R'} w' with R' = {(abxba, baxab)}",
        limit: secs(30),
        high_memory: false,
        run: binary_swap_irreducibles,
    },
    Check {
        id: 9,
        name: "cyclic-triple-subsets",
        anchor: "subsets of R1 ∪ R2 with counter ab: sound and complete iff not both singletons",
        limit: secs(120),
        high_memory: false,
        run: cyclic_triple_subsets,
    },
    Check {
        id: 10,
        name: "cyclic-triple-order-three",
        anchor: "bbaaabaab ⇒ abbabaaba is irreducible of order 3",
        limit: secs(10),
        high_memory: false,
        run: cyclic_triple_order_three,
    },
    Check {
        id: 11,
        name: "salomaa-order-family",
        anchor: "irreducible transformations of every order n+1",
        limit: secs(30),
        high_memory: false,
        run: salomaa_order_family,
    },
    Check {
        id: 12,
        name: "salomaa-order-three-needed",
        anchor: "aabcbaaaccab ⇒ baacaaabccba needs an order-3 step",
        limit: secs(60),
        high_memory: false,
        run: salomaa_order_three_needed,
    },
    Check {
        id: 13,
        name: "salomaa-order-three-split",
        anchor: "abcbcbacab ⇒ bacabcbcba splits into steps of order ≤ 2",
        limit: secs(30),
        high_memory: false,
        run: salomaa_order_three_split,
    },
    Check {
        id: 14,
        name: "projection-bound",
        anchor: "projected distances bound dist from below, not always tightly",
        limit: secs(60),
        high_memory: false,
        run: projection_bound_check,
    },
    Check {
        id: 15,
        name: "doubling-construction",
        anchor: "w_{n+1} = w_n w_n' agrees with w_{n+1}' on subwords of length ≤ n",
        limit: secs(5),
        high_memory: false,
        run: doubling_construction,
    },
    Check {
        id: 16,
        name: "derived-system-reaudit",
        anchor: "the irreducible transformations form a sound and complete Thue system",
        limit: secs(30),
        high_memory: false,
        run: derived_system_reaudit,
    },
    Check {
        id: 17,
        name: "counter-deltas",
        anchor: "abbcacb → abcbabc changes |·|_abc by +1; the zero-delta chain",
        limit: ms(1),
        high_memory: false,
        run: counter_deltas,
    },
    Check {
        id: 18,
        name: "salomaa-twenty-letters",
        anchor: "abcbabacababcbabacab ⇒ bacababcbabacababcba is reducible, dist 4",
        limit: secs(3600),
        high_memory: true,
        run: salomaa_twenty_letters,
    },
];

fn alphabet(s: &str) -> Alphabet {
    Alphabet::parse(s).expect("valid alphabet")
}

fn words(a: &Alphabet, w: &str, v: &str) -> Result<(Word, Word)> {
    Ok((a.word(w)?, a.word(v)?))
}

fn show(a: &Alphabet, (w, v): &(Word, Word)) -> String {
    format!("{} / {}", a.render(w), a.render(v))
}

fn matrix_abcbac(_: &SuiteSystems, _: &Limits) -> Result<Outcome> {
    let abc = alphabet("abc");
    let m = parikh_matrix(&abc, &abc.word("abcbac")?)?;
    let rows: Vec<Vec<u64>> = m.rows().map(<[u64]>::to_vec).collect();
    let expected = vec![
        vec![1, 2, 2, 3],
        vec![0, 1, 2, 3],
        vec![0, 0, 1, 2],
        vec![0, 0, 0, 1],
    ];
    Ok(Outcome::new(rows == expected, format!("{rows:?}")))
}

fn subword_counts(_: &SuiteSystems, _: &Limits) -> Result<Outcome> {
    let abc = alphabet("abc");
    let count = |w: &str, u: &str| -> Result<u64> { count_subword(&abc.word(w)?, &abc.word(u)?) };
    let got = [
        count("aabab", "ab")?,
        count("baacbc", "abc")?,
        count("abcbac", "")?,
        count("", "")?,
    ];
    Ok(Outcome::new(got == [5, 2, 1, 1], format!("{got:?}")))
}

fn matrix_entry_theorem(_: &SuiteSystems, _: &Limits) -> Result<Outcome> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for i in 0..500 {
        let size = rng.gen_range(2..=4);
        let a = Alphabet::latin(size)?;
        let len = rng.gen_range(0..=12);
        let w = Word::from_letters((0..len).map(|_| rng.gen_range(0..size as u8)).collect());
        let cut = rng.gen_range(0..=len);
        let (u, v) = (
            Word::from(&w.letters()[..cut]),
            Word::from(&w.letters()[cut..]),
        );
        let product = parikh_matrix(&a, &u)?.mul(&parikh_matrix(&a, &v)?)?;
        if !verify_matrix_theorem(&a, &w)? || product != parikh_matrix(&a, &w)? {
            return Ok(Outcome::new(false, format!("sample {i}")).with_witness(Some(a.render(&w))));
        }
    }
    Ok(Outcome::new(true, "500 random words"))
}

fn prs_audits(prs: &ParikhRewritingSystem, n: usize, limits: &Limits) -> Result<Outcome> {
    let sound = audit_prs_sound(prs, n, limits)?;
    let complete = audit_prs_complete(prs, n, limits)?;
    let a = prs.alphabet();
    let witness = sound
        .witness
        .as_ref()
        .map(|p| format!("unsound: {}", show(a, p)))
        .or_else(|| {
            complete
                .witness
                .as_ref()
                .map(|p| format!("incomplete: {}", show(a, p)))
        });
    Ok(Outcome::new(
        sound.holds && complete.holds,
        format!(
            "sound {}, complete {} (lengths ≤ {n}, {} words)",
            sound.holds, complete.holds, sound.words_checked
        ),
    )
    .with_witness(witness))
}

fn binary_swap_prs(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    prs_audits(&s.binary_swap_ab, 8, limits)
}

fn binary_sandwich_thue(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let t = &s.binary_ex1506b;
    let sound = audit_parikh_sound(t, 8, limits)?;
    let complete = audit_parikh_complete(t, 8, limits)?;
    let witness = sound
        .witness
        .as_ref()
        .map(|step| t.render_step(step))
        .or_else(|| complete.witness.as_ref().map(|p| show(t.alphabet(), p)));
    Ok(Outcome::new(
        sound.holds && complete.holds,
        format!(
            "sound {}, complete {} (lengths ≤ 8)",
            sound.holds, complete.holds
        ),
    )
    .with_witness(witness))
}

fn ternary_restricted_incomplete(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let t = &s.ternary_ex0701c;
    let a = t.alphabet();
    let report = audit_parikh_complete(t, 8, limits)?;
    let expected = words(a, "abbcbacb", "bacbabbc")?;
    let (w, v) = words(a, "babcbabcbabcbab", "bbacabbcabbcbba")?;
    let class_size = parikh_vector(a, &w).multinomial().unwrap_or(u64::MAX);
    let long_split = m_equivalent(a, &w, &v)? && !transforms(t, &w, &v, limits)?;
    let passed = report.witness.as_ref() == Some(&expected) && long_split && class_size == 225_225;
    Ok(Outcome::new(
        passed,
        format!("15-letter pair split {long_split}, anagram class {class_size}"),
    )
    .with_witness(report.witness.as_ref().map(|p| show(a, p))))
}

fn salomaa_sound_complete(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    prs_audits(&s.salomaa_abc, 9, limits)
}

fn binary_swap_irreducibles(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let derived = derive_thue_system(&s.binary_swap_ab, 8, limits)?;
    let sandwich = presets::binary_ex1506b();
    let mut expected = BTreeSet::new();
    for len in 0..=8 {
        for w in words_of_length(2, len) {
            for v in sandwich.neighbors(&w) {
                expected.insert(if w < v {
                    (w.clone(), v)
                } else {
                    (v, w.clone())
                });
            }
        }
    }
    let got: BTreeSet<(Word, Word)> = derived
        .rules
        .iter()
        .map(|r| (r.left.clone(), r.right.clone()))
        .collect();
    let all_order_two = derived.rules.iter().all(|r| r.order == 2);
    let a = derived.alphabet.clone();
    let stray = got
        .symmetric_difference(&expected)
        .next()
        .map(|p| show(&a, p));
    Ok(Outcome::new(
        got == expected && all_order_two,
        format!(
            "{} derived, {} expected, orders {:?}",
            got.len(),
            expected.len(),
            derived.histogram
        ),
    )
    .with_witness(stray))
}

fn cyclic_triple_subsets(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let (r1, r2) = presets::r1_r2_rules();
    let base = &s.binary_r1r2_ab;
    let a = base.alphabet().clone();
    let counter = || -> Result<Vec<Counter>> { Ok(vec![Counter::parse(&a, "ab")?]) };
    let mut instances = 0;
    for m1 in 1u32..8 {
        for m2 in 1u32..8 {
            if m1.count_ones() < 2 && m2.count_ones() < 2 {
                continue;
            }
            let pick = |rules: &[crate::thue::RuleFamily], mask: u32| {
                rules
                    .iter()
                    .enumerate()
                    .filter(move |(i, _)| mask >> i & 1 == 1)
                    .map(|(_, r)| r.clone())
                    .collect::<Vec<_>>()
            };
            let mut rules = pick(&r1, m1);
            rules.extend(pick(&r2, m2));
            let ids: Vec<String> = rules.iter().map(|r| r.id.clone()).collect();
            let prs = ParikhRewritingSystem::new(ThueSystem::new(a.clone(), rules)?, counter()?)?;
            let o = prs_audits(&prs, 7, limits)?;
            if !o.passed {
                return Ok(Outcome::new(false, format!("R = {ids:?}: {}", o.detail))
                    .with_witness(o.witness));
            }
            instances += 1;
        }
    }
    let singletons = ParikhRewritingSystem::new(
        ThueSystem::new(a.clone(), vec![r1[0].clone(), r2[0].clone()])?,
        counter()?,
    )?;
    let report = audit_prs_complete(&singletons, 7, limits)?;
    let expected = words(&a, "abba", "baab")?;
    Ok(Outcome::new(
        instances == 40 && report.witness.as_ref() == Some(&expected),
        format!("{instances} subsets sound and complete at lengths ≤ 7"),
    )
    .with_witness(report.witness.as_ref().map(|p| show(&a, p))))
}

fn cyclic_triple_order_three(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let p = &s.binary_r1r2_ab;
    let (w, v) = words(p.alphabet(), "bbaaabaab", "abbabaaba")?;
    let d = dist(p.thue(), &w, &v, limits)?;
    let irr = irreducible(p, &w, &v, limits)?;
    let path = irreducible_graph_path(p, &w, &v, 2, limits)?;
    Ok(Outcome::new(
        d == Some(3) && irr.irreducible && irr.order == Some(3) && path.is_some(),
        format!(
            "dist {d:?}, order {:?}, order-2 path of {:?} steps",
            irr.order,
            path.as_ref().map(Vec::len)
        ),
    ))
}

fn salomaa_order_family(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let p = &s.salomaa_abc;
    let mut orders = Vec::new();
    for n in 1..=2 {
        let (w, v) = salomaa_order_pair(n)?;
        if !prs_transforms(p, &w, &v, limits)? {
            return Ok(Outcome::new(false, format!("n = {n}: not related"))
                .with_witness(Some(show(p.alphabet(), &(w, v)))));
        }
        orders.push(irreducible(p, &w, &v, limits)?.order);
    }
    Ok(Outcome::new(
        orders == [Some(2), Some(3)],
        format!("orders {orders:?}"),
    ))
}

fn salomaa_order_three_needed(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let p = &s.salomaa_abc;
    let (w, v) = words(p.alphabet(), "aabcbaaaccab", "baacaaabccba")?;
    let irr = irreducible(p, &w, &v, limits)?;
    let path = irreducible_graph_path(p, &w, &v, 2, limits)?;
    let class = parikh_vector(p.alphabet(), &w)
        .multinomial()
        .unwrap_or(u64::MAX);
    Ok(Outcome::new(
        irr.irreducible && irr.order == Some(3) && path.is_none(),
        format!(
            "order {:?}, order-2 path found {}, anagram class {class}",
            irr.order,
            path.is_some()
        ),
    ))
}

fn salomaa_order_three_split(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let p = &s.salomaa_abc;
    let (w, v) = words(p.alphabet(), "abcbcbacab", "bacabcbcba")?;
    let irr = irreducible(p, &w, &v, limits)?;
    let path = irreducible_graph_path(p, &w, &v, 2, limits)?;
    let class = parikh_vector(p.alphabet(), &w)
        .multinomial()
        .unwrap_or(u64::MAX);
    Ok(Outcome::new(
        irr.irreducible && irr.order == Some(3) && path.is_some(),
        format!(
            "order {:?}, order-2 path of {:?} steps, anagram class {class}",
            irr.order,
            path.as_ref().map(Vec::len)
        ),
    ))
}

fn projection_bound_check(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let t = s.salomaa_abc.thue();
    let a = t.alphabet();
    let (w, v) = words(a, "abbcacb", "baacbbc")?;
    let tight = (projection_bound(&w, &v, limits)?, dist(t, &w, &v, limits)?);
    let (x, y) = words(a, "bcacabcabbca", "cabbcabcacab")?;
    let strict = (projection_bound(&x, &y, limits)?, dist(t, &x, &y, limits)?);
    Ok(Outcome::new(
        tight == (3, Some(3)) && strict.1.is_some_and(|d| strict.0 < d),
        format!(
            "bound/dist {}/{:?} and {}/{:?}",
            tight.0, tight.1, strict.0, strict.1
        ),
    ))
}

fn doubling_construction(_: &SuiteSystems, _: &Limits) -> Result<Outcome> {
    let a = alphabet("ab");
    let (s, t) = words(&a, "ab", "ba")?;
    for n in 1..=4 {
        let (w, v) = build_ambiguous_pair(&s, &t, n)?;
        let mut agree = w != v;
        for u in (0..=n).flat_map(|len| words_of_length(2, len)) {
            agree &= count_subword(&w, &u)? == count_subword(&v, &u)?;
        }
        if !agree {
            return Ok(
                Outcome::new(false, format!("n = {n}")).with_witness(Some(show(&a, &(w, v))))
            );
        }
    }
    Ok(Outcome::new(true, "n = 1..4"))
}

fn derived_system_reaudit(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let derived = derive_thue_system(&s.binary_swap_ab, 6, limits)?;
    let t = derived.to_thue_system()?;
    let sound = audit_parikh_sound(&t, 6, limits)?;
    let complete = audit_parikh_complete(&t, 6, limits)?;
    let witness = sound
        .witness
        .as_ref()
        .map(|step| t.render_step(step))
        .or_else(|| complete.witness.as_ref().map(|p| show(t.alphabet(), p)));
    Ok(Outcome::new(
        sound.holds && complete.holds,
        format!(
            "{} rules; sound {}, complete {}",
            t.rules().len(),
            sound.holds,
            complete.holds
        ),
    )
    .with_witness(witness))
}

fn counter_deltas(s: &SuiteSystems, _: &Limits) -> Result<Outcome> {
    let t = s.salomaa_abc.thue();
    let a = t.alphabet();
    let abc = Counter::parse(a, "abc")?;
    let delta = |from: &str, to: &str| -> Result<Option<i64>> {
        let (w, v) = words(a, from, to)?;
        match t.direct_steps(&w).into_iter().find(|s| s.result == v) {
            Some(step) => Ok(Some(counter_delta(&step, &abc)?)),
            None => Ok(None),
        }
    };
    let first = delta("abbcacb", "abcbabc")?;
    let chain = ["abbcacb", "abbaccb", "baabccb", "baacbbc", "bacabbc"];
    let deltas = chain
        .windows(2)
        .map(|p| delta(p[0], p[1]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::new(
        first == Some(1) && deltas == [Some(0); 4],
        format!("single step {first:?}, chain {deltas:?}"),
    ))
}

fn salomaa_twenty_letters(s: &SuiteSystems, limits: &Limits) -> Result<Outcome> {
    let p = &s.salomaa_abc;
    let (w, v) = words(p.alphabet(), "abcbabacababcbabacab", "bacababcbabacababcba")?;
    let irr = irreducible(p, &w, &v, limits)?;
    Ok(Outcome::new(
        !irr.irreducible && irr.distance == 4,
        format!("dist {}, irreducible {}", irr.distance, irr.irreducible),
    )
    .with_witness(irr.splitter.map(|x| p.alphabet().render(&x))))
}
