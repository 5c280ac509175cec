//! `parikh`: command-line front end for Parikh matrices, Thue systems and
//! Parikh rewriting systems.
//!
//! Exit status: 0 when the command succeeds or the checked property holds,
//! 1 when the property is violated (the witness is printed), 2 when a
//! resource cap is exceeded, 3 for invalid input.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use parikh::format::{parse_system, system_to_json, SystemFile};
use parikh::presets::{self, NamedSystem};
use parikh::suite::{verify_paper_suite, Budget};
use parikh::thue::shortest_path;
use parikh::{
    audit_parikh_complete, audit_parikh_sound, audit_prs_complete, audit_prs_sound, count_subword,
    counter_delta, decompose, derive_thue_system, dist, irreducible, irreducible_graph_path,
    m_equivalent, parikh_matrix, r_class, Alphabet, DirectStep, Limits, ParikhRewritingSystem,
    ThueSystem, Word,
};

#[derive(Parser)]
#[command(
    name = "parikh",
    version,
    about = "Parikh matrices, Thue systems and Parikh rewriting systems"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum number of words a single search may hold.
    #[arg(long, global = true, value_name = "STATES")]
    cap: Option<usize>,

    /// Worker threads; 1 runs everything serially.
    #[arg(long, global = true, value_name = "K")]
    threads: Option<usize>,

    /// Treat SYSTEM arguments as file paths even when they name a preset.
    #[arg(long, global = true)]
    prefer_file: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// |w|_u, the number of occurrences of u as a scattered subword of w.
    Count {
        alphabet: String,
        w: String,
        u: String,
    },
    /// The Parikh matrix of w.
    Matrix { alphabet: String, w: String },
    /// Whether two words have the same Parikh matrix.
    Equiv {
        alphabet: String,
        w: String,
        other: String,
    },
    /// Every direct step from w.
    Neighbors {
        #[arg(long)]
        system: String,
        w: String,
    },
    /// Rewriting distance between two words.
    Dist {
        #[arg(long)]
        system: String,
        /// Also print a shortest path (with counter deltas for a Parikh rewriting system).
        #[arg(long)]
        path: bool,
        w: String,
        other: String,
    },
    /// Every word reachable from w.
    Class {
        #[arg(long)]
        system: String,
        w: String,
    },
    /// Exhaustive soundness or completeness check up to a length bound.
    Audit {
        kind: AuditKind,
        #[arg(long)]
        system: String,
        #[arg(long)]
        max_len: usize,
        /// Audit the Parikh rewriting system (counters included) instead of its rules alone.
        #[arg(long)]
        prs: bool,
    },
    /// Whether a transformation is irreducible, with its order.
    Irr {
        #[arg(long = "prs")]
        system: String,
        w: String,
        other: String,
    },
    /// Splits a transformation into irreducible ones.
    Decompose {
        #[arg(long = "prs")]
        system: String,
        w: String,
        other: String,
    },
    /// A path of irreducible transformations of bounded order.
    Path {
        #[arg(long = "prs")]
        system: String,
        #[arg(long)]
        max_order: usize,
        w: String,
        other: String,
    },
    /// Every irreducible transformation between words up to a length bound.
    Derive {
        #[arg(long = "prs")]
        system: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Runs the built-in reference checks.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "default")]
        budget: BudgetArg,
    },
    /// Prints a system as a JSON system file.
    System { system: String },
    /// Lists the built-in systems.
    Presets,
}

#[derive(Clone, Copy, ValueEnum)]
enum AuditKind {
    Sound,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum BudgetArg {
    Zero,
    Default,
    HighMemory,
}

enum Failure {
    Resource(String),
    Input(String),
}

impl From<parikh::Error> for Failure {
    fn from(e: parikh::Error) -> Self {
        if e.is_resource_limit() {
            Failure::Resource(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: 0,
        }
    }

    fn verdict(holds: bool, text: String, json: Value) -> Self {
        Output {
            text,
            json,
            code: if holds { 0 } else { 1 },
        }
    }
}

type Run = Result<Output, Failure>;

struct Ctx {
    limits: Limits,
    prefer_file: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let ctx = Ctx {
        limits: cli
            .cap
            .map_or_else(Limits::default, Limits::with_max_states),
        prefer_file: cli.prefer_file,
    };
    match run(&ctx, cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("json values serialize")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(ctx: &Ctx, command: Command) -> Run {
    match command {
        Command::Count { alphabet, w, u } => {
            let a = Alphabet::parse(&alphabet)?;
            let n = count_subword(&word(&a, &w)?, &word(&a, &u)?)?;
            Ok(Output::ok(format!("{n}\n"), json!({ "count": n })))
        }
        Command::Matrix { alphabet, w } => {
            let a = Alphabet::parse(&alphabet)?;
            let m = parikh_matrix(&a, &word(&a, &w)?)?;
            let text = format!("{}\n", m.to_string().trim_end());
            Ok(Output::ok(text, json!({ "word": w, "matrix": m })))
        }
        Command::Equiv { alphabet, w, other } => {
            let a = Alphabet::parse(&alphabet)?;
            let eq = m_equivalent(&a, &word(&a, &w)?, &word(&a, &other)?)?;
            let text = if eq {
                "M-equivalent\n"
            } else {
                "not M-equivalent\n"
            };
            Ok(Output::verdict(
                eq,
                text.into(),
                json!({ "equivalent": eq }),
            ))
        }
        Command::Neighbors { system, w } => {
            let s = load(ctx, &system)?;
            let t = s.thue();
            let steps = t.direct_steps(&word(t.alphabet(), &w)?);
            let mut text = String::new();
            for step in &steps {
                let _ = writeln!(text, "{}", t.render_step(step));
            }
            let json = steps.iter().map(|s| step_json(t, s)).collect();
            Ok(Output::ok(text, Value::Array(json)))
        }
        Command::Dist {
            system,
            path,
            w,
            other,
        } => dist_cmd(ctx, &system, path, &w, &other),
        Command::Class { system, w } => {
            let s = load(ctx, &system)?;
            let t = s.thue();
            let a = t.alphabet();
            let members = r_class(t, &word(a, &w)?, &ctx.limits)?;
            let names: Vec<String> = members.iter().map(|m| show(a, m)).collect();
            let text = names.iter().map(|n| format!("{n}\n")).collect();
            Ok(Output::ok(
                text,
                json!({ "size": names.len(), "members": names }),
            ))
        }
        Command::Audit {
            kind,
            system,
            max_len,
            prs,
        } => audit_cmd(ctx, kind, &system, max_len, prs),
        Command::Irr { system, w, other } => {
            let p = load_prs(ctx, &system)?;
            let a = p.alphabet();
            let r = irreducible(&p, &word(a, &w)?, &word(a, &other)?, &ctx.limits)?;
            let splitter = r.splitter.as_ref().map(|x| show(a, x));
            let text = match &splitter {
                None => format!("irreducible, order {}\n", r.distance),
                Some(x) => format!("reducible, distance {}, splitter {x}\n", r.distance),
            };
            let json = json!({
                "irreducible": r.irreducible,
                "distance": r.distance,
                "order": r.order,
                "splitter": splitter,
            });
            Ok(Output::ok(text, json))
        }
        Command::Decompose { system, w, other } => {
            let p = load_prs(ctx, &system)?;
            let a = p.alphabet();
            let chain = decompose(&p, &word(a, &w)?, &word(a, &other)?, &ctx.limits)?;
            Ok(chain_output(a, &chain))
        }
        Command::Path {
            system,
            max_order,
            w,
            other,
        } => {
            let p = load_prs(ctx, &system)?;
            let a = p.alphabet();
            match irreducible_graph_path(
                &p,
                &word(a, &w)?,
                &word(a, &other)?,
                max_order,
                &ctx.limits,
            )? {
                Some(chain) => Ok(chain_output(a, &chain)),
                None => Ok(Output::verdict(
                    false,
                    format!(
                        "no path of irreducible transformations of order at most {max_order}\n"
                    ),
                    Value::Null,
                )),
            }
        }
        Command::Derive { system, max_len } => {
            let p = load_prs(ctx, &system)?;
            let d = derive_thue_system(&p, max_len, &ctx.limits)?;
            let a = &d.alphabet;
            let mut text = String::new();
            for r in &d.rules {
                let _ = writeln!(
                    text,
                    "{} <-> {}  (order {})",
                    show(a, &r.left),
                    show(a, &r.right),
                    r.order
                );
            }
            for (order, n) in &d.histogram {
                let _ = writeln!(text, "order {order}: {n} rules");
            }
            let rules: Vec<Value> = d
                .rules
                .iter()
                .map(|r| json!({ "left": show(a, &r.left), "right": show(a, &r.right), "order": r.order }))
                .collect();
            let histogram: serde_json::Map<String, Value> = d
                .histogram
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            let json = json!({
                "max_len": max_len,
                "rules": rules,
                "histogram": histogram,
                "system": SystemFile::from_thue(&d.to_thue_system()?),
            });
            Ok(Output::ok(text, json))
        }
        Command::VerifyPaper { budget } => {
            let budget = match budget {
                BudgetArg::Zero => Budget::Zero,
                BudgetArg::Default => Budget::Default,
                BudgetArg::HighMemory => Budget::HighMemory,
            };
            let report = verify_paper_suite(budget);
            let json: Value =
                serde_json::from_str(&report.to_json()).expect("report is valid json");
            Ok(Output {
                text: report.table(),
                json,
                code: report.exit_code() as u8,
            })
        }
        Command::System { system } => {
            let s = load(ctx, &system)?;
            let text = system_to_json(&s);
            let json = serde_json::from_str(&text).expect("system file is valid json");
            Ok(Output::ok(text + "\n", json))
        }
        Command::Presets => {
            let mut text = String::new();
            for name in presets::THUE_PRESETS {
                let _ = writeln!(text, "{name}  (Thue system)");
            }
            for name in presets::PRS_PRESETS {
                let _ = writeln!(text, "{name}  (Parikh rewriting system)");
            }
            let json = json!({ "thue": presets::THUE_PRESETS, "prs": presets::PRS_PRESETS });
            Ok(Output::ok(text, json))
        }
    }
}

fn dist_cmd(ctx: &Ctx, system: &str, with_path: bool, w: &str, other: &str) -> Run {
    let s = load(ctx, system)?;
    let t = s.thue();
    let a = t.alphabet();
    let (w, other) = (word(a, w)?, word(a, other)?);
    if !with_path {
        let d = dist(t, &w, &other, &ctx.limits)?;
        let text = d.map_or_else(|| "unreachable\n".to_string(), |d| format!("{d}\n"));
        return Ok(Output::verdict(d.is_some(), text, json!({ "distance": d })));
    }
    let Some(steps) = shortest_path(t, &w, &other, &ctx.limits)? else {
        return Ok(Output::verdict(
            false,
            "unreachable\n".into(),
            json!({ "distance": null, "path": null }),
        ));
    };
    let counters = match &s {
        NamedSystem::Prs(p) => p.counters().to_vec(),
        NamedSystem::Thue(_) => Vec::new(),
    };
    let mut text = format!("{}\n", steps.len());
    let mut path = Vec::new();
    for step in &steps {
        let deltas = counters
            .iter()
            .map(|c| Ok((show(a, c.word()), counter_delta(step, c)?)))
            .collect::<Result<Vec<_>, parikh::Error>>()?;
        let annotation: String = deltas.iter().map(|(c, d)| format!("  {c}:{d:+}")).collect();
        let _ = writeln!(text, "{}{annotation}", t.render_step(step));
        let mut j = step_json(t, step);
        j["source"] = json!(show(a, &step.source));
        j["deltas"] = deltas
            .iter()
            .map(|(c, d)| (c.clone(), json!(d)))
            .collect::<serde_json::Map<_, _>>()
            .into();
        path.push(j);
    }
    Ok(Output::ok(
        text,
        json!({ "distance": steps.len(), "path": path }),
    ))
}

fn audit_cmd(ctx: &Ctx, kind: AuditKind, system: &str, max_len: usize, prs: bool) -> Run {
    let s = load(ctx, system)?;
    let pair_json = |a: &Alphabet, p: &(Word, Word)| json!([show(a, &p.0), show(a, &p.1)]);
    let (holds, words_checked, witness_text, witness_json) = if prs {
        let p = as_prs(s, system)?;
        let a = p.alphabet();
        let report = match kind {
            AuditKind::Sound => audit_prs_sound(&p, max_len, &ctx.limits)?,
            AuditKind::Complete => audit_prs_complete(&p, max_len, &ctx.limits)?,
        };
        let w = report.witness.as_ref();
        (
            report.holds,
            report.words_checked,
            w.map(|p| format!("{} / {}", show(a, &p.0), show(a, &p.1))),
            w.map(|p| pair_json(a, p)),
        )
    } else {
        let t = s.thue();
        let a = t.alphabet();
        match kind {
            AuditKind::Sound => {
                let report = audit_parikh_sound(t, max_len, &ctx.limits)?;
                let w = report.witness.as_ref();
                (
                    report.holds,
                    report.words_checked,
                    w.map(|s| t.render_step(s)),
                    w.map(|s| step_json(t, s)),
                )
            }
            AuditKind::Complete => {
                let report = audit_parikh_complete(t, max_len, &ctx.limits)?;
                let w = report.witness.as_ref();
                (
                    report.holds,
                    report.words_checked,
                    w.map(|p| format!("{} / {}", show(a, &p.0), show(a, &p.1))),
                    w.map(|p| pair_json(a, p)),
                )
            }
        }
    };
    let mut text = if holds {
        format!("holds for every word of length at most {max_len} ({words_checked} words)\n")
    } else {
        format!("fails within length {max_len}\n")
    };
    if let Some(w) = witness_text {
        let _ = writeln!(text, "witness: {w}");
    }
    let json = json!({
        "holds": holds,
        "max_len": max_len,
        "words_checked": words_checked,
        "witness": witness_json,
    });
    Ok(Output::verdict(holds, text, json))
}

fn chain_output(a: &Alphabet, chain: &[parikh::IrreducibleStep]) -> Output {
    let mut text = String::new();
    for s in chain {
        let _ = writeln!(
            text,
            "{} => {}  (order {})",
            show(a, &s.source),
            show(a, &s.target),
            s.order
        );
    }
    let total: usize = chain.iter().map(|s| s.order).sum();
    let _ = writeln!(text, "{} steps, total order {total}", chain.len());
    let steps: Vec<Value> = chain
        .iter()
        .map(|s| json!({ "source": show(a, &s.source), "target": show(a, &s.target), "order": s.order }))
        .collect();
    Output::ok(text, json!({ "steps": steps, "total_order": total }))
}

fn step_json(t: &ThueSystem, s: &DirectStep) -> Value {
    let a = t.alphabet();
    json!({
        "result": show(a, &s.result),
        "rule": t.rules()[s.rule].id,
        "direction": s.direction,
        "position": s.position,
        "infix": show(a, &s.infix),
    })
}

/// Words on the command line; `-` and `λ` stand for the empty word.
fn word(a: &Alphabet, s: &str) -> Result<Word, Failure> {
    if s == "-" || s == "λ" {
        return Ok(Word::empty());
    }
    Ok(a.word(s)?)
}

fn show(a: &Alphabet, w: &Word) -> String {
    if w.is_empty() {
        "λ".into()
    } else {
        a.render(w)
    }
}

fn load(ctx: &Ctx, spec: &str) -> Result<NamedSystem, Failure> {
    if !ctx.prefer_file {
        if let Some(s) = presets::lookup(spec) {
            return Ok(s);
        }
    }
    if !Path::new(spec).exists() {
        return Err(Failure::Input(format!(
            "{spec:?} is neither a preset name nor an existing file (see `parikh presets`)"
        )));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| Failure::Input(format!("reading {spec}: {e}")))?;
    Ok(parse_system(&text)?)
}

fn as_prs(s: NamedSystem, spec: &str) -> Result<ParikhRewritingSystem, Failure> {
    match s {
        NamedSystem::Prs(p) => Ok(p),
        NamedSystem::Thue(_) => Err(Failure::Input(format!(
            "{spec} is a Thue system without counters; a Parikh rewriting system is required"
        ))),
    }
}

fn load_prs(ctx: &Ctx, spec: &str) -> Result<ParikhRewritingSystem, Failure> {
    as_prs(load(ctx, spec)?, spec)
}
