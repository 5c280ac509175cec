//! Parikh rewriting systems `(Σ, R, C)`: a Parikh-vector-preserving Thue
//! system plus counter words whose subword counts every transformation must
//! conserve.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::parikh_matrix;
use crate::thue::audit::{audit_units, first_pair, split_m_class};
use crate::thue::search::label_classes;
use crate::thue::{transforms, AuditReport, DirectStep, ThueSystem};
use crate::words::{anagrams, count_subword, Alphabet, Word};

/// A counter `a_i a_{i+1} ... a_j` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Counter(Word);

impl Counter {
    pub fn new(alphabet: &Alphabet, word: Word) -> Result<Counter> {
        let invalid = |reason: &str| Error::InvalidCounter {
            counter: alphabet
                .check(&word)
                .map_or_else(|_| format!("{word:?}"), |_| alphabet.render(&word)),
            reason: reason.into(),
        };
        alphabet
            .check(&word)
            .map_err(|_| invalid("letter outside the alphabet"))?;
        if word.len() < 2 {
            return Err(invalid("a counter has at least two letters"));
        }
        if word.letters().windows(2).any(|p| p[1] != p[0] + 1) {
            return Err(invalid(
                "a counter must be a contiguous ascending run of the alphabet",
            ));
        }
        Ok(Counter(word))
    }

    pub fn parse(alphabet: &Alphabet, s: &str) -> Result<Counter> {
        let word = alphabet.word(s).map_err(|e| Error::InvalidCounter {
            counter: s.to_string(),
            reason: e.to_string(),
        })?;
        Counter::new(alphabet, word)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParikhRewritingSystem {
    thue: ThueSystem,
    counters: Vec<Counter>,
}

impl ParikhRewritingSystem {
    pub fn new(thue: ThueSystem, counters: Vec<Counter>) -> Result<Self> {
        if thue.alphabet().size() < 2 {
            return Err(Error::InvalidSystem(
                "a Parikh rewriting system needs at least two letters".into(),
            ));
        }
        if let Some(r) = thue.rules().iter().find(|r| !r.preserves_parikh_vector()) {
            return Err(Error::InvalidRule {
                id: r.id.clone(),
                reason: "rule does not preserve the Parikh vector".into(),
            });
        }
        for c in &counters {
            thue.alphabet()
                .check(c.word())
                .map_err(|_| Error::InvalidCounter {
                    counter: format!("{:?}", c.word()),
                    reason: "letter outside the alphabet".into(),
                })?;
        }
        let mut counters = counters;
        counters.sort();
        counters.dedup();
        Ok(ParikhRewritingSystem { thue, counters })
    }

    pub fn thue(&self) -> &ThueSystem {
        &self.thue
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.thue.alphabet()
    }

    pub fn counters(&self) -> &[Counter] {
        &self.counters
    }

    /// `(|w|_c)` for every counter `c`, in counter order.
    pub fn counter_values(&self, w: &Word) -> Result<Vec<u64>> {
        self.counters
            .iter()
            .map(|c| count_subword(w, c.word()))
            .collect()
    }

    /// The same system with a rule removed.
    pub fn without_rule(&self, id: &str) -> Result<Self> {
        ParikhRewritingSystem::new(self.thue.without_rule(id)?, self.counters.clone())
    }
}

/// `w ⇒_𝔓 target`: counters agree and `target` is reachable.
pub fn prs_transforms(
    prs: &ParikhRewritingSystem,
    w: &Word,
    target: &Word,
    limits: &Limits,
) -> Result<bool> {
    prs.alphabet().check(w)?;
    prs.alphabet().check(target)?;
    if prs.counter_values(w)? != prs.counter_values(target)? {
        return Ok(false);
    }
    transforms(prs.thue(), w, target, limits)
}

/// `|result|_c - |source|_c`.
pub fn counter_delta(step: &DirectStep, counter: &Counter) -> Result<i64> {
    let before = count_subword(&step.source, counter.word())?;
    let after = count_subword(&step.result, counter.word())?;
    let to_i64 = |v: u64| i64::try_from(v).map_err(|_| Error::Overflow("taking a counter delta"));
    Ok(to_i64(after)? - to_i64(before)?)
}

struct UnitSurvey {
    members: Vec<Word>,
    labels: Vec<u32>,
    counters: Vec<Vec<u64>>,
    matrices: Vec<crate::matrix::ParikhMatrix>,
}

fn survey(
    prs: &ParikhRewritingSystem,
    v: &crate::words::ParikhVector,
    limits: &Limits,
) -> Result<UnitSurvey> {
    let members: Vec<Word> = anagrams(v, limits)?.collect();
    let labels = label_classes(prs.thue(), &members, limits)?;
    let counters = members
        .iter()
        .map(|w| prs.counter_values(w))
        .collect::<Result<Vec<_>>>()?;
    let matrices = members
        .iter()
        .map(|w| parikh_matrix(prs.alphabet(), w))
        .collect::<Result<Vec<_>>>()?;
    Ok(UnitSurvey {
        members,
        labels,
        counters,
        matrices,
    })
}

fn smallest(found: Vec<Option<(Word, Word)>>) -> Option<(Word, Word)> {
    found
        .into_iter()
        .flatten()
        .min_by(|a, b| (a.0.len(), &a.0, &a.1).cmp(&(b.0.len(), &b.0, &b.1)))
}

/// Checks, for every word of length at most `max_len`, that all words of its
/// rewrite class sharing its counter values share its Parikh matrix. The
/// witness is a counter-equal reachable pair with different matrices.
pub fn audit_prs_sound(
    prs: &ParikhRewritingSystem,
    max_len: usize,
    limits: &Limits,
) -> Result<AuditReport<(Word, Word)>> {
    let (units, total) = audit_units(prs.alphabet().size(), max_len, limits)?;
    let found = units
        .par_iter()
        .map(|v| -> Result<Option<(Word, Word)>> {
            let s = survey(prs, v, limits)?;
            let mut cells: HashMap<(u32, &[u64]), Vec<usize>> = HashMap::new();
            for i in 0..s.members.len() {
                cells
                    .entry((s.labels[i], &s.counters[i]))
                    .or_default()
                    .push(i);
            }
            Ok(cells
                .values()
                .filter_map(|cell| {
                    let first = cell[0];
                    cell[1..]
                        .iter()
                        .find(|&&j| s.matrices[j] != s.matrices[first])
                        .map(|&j| (s.members[first].clone(), s.members[j].clone()))
                })
                .min())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AuditReport::from_witness(max_len, total, smallest(found)))
}

/// Checks that every M-class of words of length at most `max_len` is
/// contained in a single `⇒_𝔓` class. Counter equality is checked too rather
/// than inferred from the matrices.
pub fn audit_prs_complete(
    prs: &ParikhRewritingSystem,
    max_len: usize,
    limits: &Limits,
) -> Result<AuditReport<(Word, Word)>> {
    let (units, total) = audit_units(prs.alphabet().size(), max_len, limits)?;
    let found = units
        .par_iter()
        .map(|v| -> Result<Option<(Word, Word)>> {
            let s = survey(prs, v, limits)?;
            Ok(split_m_class(&s.members, &s.matrices, |i, j| {
                s.labels[i] == s.labels[j] && s.counters[i] == s.counters[j]
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AuditReport::from_witness(
        max_len,
        total,
        first_pair(&units, found),
    ))
}
