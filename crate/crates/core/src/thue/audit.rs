//! Bounded Parikh soundness and completeness audits for Thue systems.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::matrix::{parikh_matrix, ParikhMatrix};
use crate::thue::search::label_classes;
use crate::thue::{DirectStep, ThueSystem};
use crate::words::{anagrams, parikh_vectors_of_length, words_up_to, ParikhVector, Word};

/// Outcome of a bounded audit over every word of length at most `max_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport<W> {
    pub holds: bool,
    pub max_len: usize,
    pub words_checked: u64,
    /// The smallest violation (shortest source, then lexicographically first).
    pub witness: Option<W>,
}

impl<W> AuditReport<W> {
    pub(crate) fn from_witness(max_len: usize, words_checked: u64, witness: Option<W>) -> Self {
        AuditReport {
            holds: witness.is_none(),
            max_len,
            words_checked,
            witness,
        }
    }
}

/// Every Parikh vector of total at most `max_len`, after checking that the
/// words they cover fit the limits.
pub(crate) fn audit_units(
    size: usize,
    max_len: usize,
    limits: &Limits,
) -> Result<(Vec<ParikhVector>, u64)> {
    if max_len > limits.max_word_len {
        return Err(Error::WordTooLong {
            len: max_len,
            limit: limits.max_word_len,
        });
    }
    let total = words_up_to(size, max_len)
        .filter(|&t| t <= limits.max_states as u64)
        .ok_or(Error::CapExceeded {
            limit: limits.max_states,
            context: "enumerating all words up to the length bound",
        })?;
    let units = (0..=max_len as u64)
        .flat_map(|len| parikh_vectors_of_length(size, len))
        .collect();
    Ok((units, total))
}

fn shortlex(w: &Word) -> (usize, &Word) {
    (w.len(), w)
}

/// Checks that every direct step from every word of length at most `max_len`
/// preserves the Parikh matrix.
///
/// Since `⇒_R` is generated by direct steps and M-equivalence is a congruence,
/// this certifies Parikh soundness restricted to those lengths.
pub fn audit_parikh_sound(
    system: &ThueSystem,
    max_len: usize,
    limits: &Limits,
) -> Result<AuditReport<DirectStep>> {
    let alphabet = system.alphabet();
    let (units, total) = audit_units(alphabet.size(), max_len, limits)?;
    let found: Vec<Option<DirectStep>> = units
        .par_iter()
        .map(|v| -> Result<Option<DirectStep>> {
            for w in anagrams(v, limits)? {
                let m = parikh_matrix(alphabet, &w)?;
                for step in system.direct_steps(&w) {
                    if parikh_matrix(alphabet, &step.result)? != m {
                        return Ok(Some(step));
                    }
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    let witness = found
        .into_iter()
        .flatten()
        .min_by(|a, b| shortlex(&a.source).cmp(&shortlex(&b.source)));
    Ok(AuditReport::from_witness(max_len, total, witness))
}

/// Within one anagram class: the smallest `w` having an M-equivalent word
/// outside its rewrite class, paired with the smallest such word.
pub(crate) fn split_m_class(
    members: &[Word],
    matrices: &[ParikhMatrix],
    same_class: impl Fn(usize, usize) -> bool,
) -> Option<(Word, Word)> {
    let mut groups: HashMap<&ParikhMatrix, Vec<usize>> = HashMap::new();
    for (i, m) in matrices.iter().enumerate() {
        groups.entry(m).or_default().push(i);
    }
    groups
        .values()
        .filter_map(|g| {
            // members are sorted, so g[0] is the smallest word of the group
            let first = g[0];
            g[1..]
                .iter()
                .find(|&&j| !same_class(first, j))
                .map(|&j| (members[first].clone(), members[j].clone()))
        })
        .min()
}

/// Checks that every M-class of words of length at most `max_len` lies
/// inside a single rewrite class.
///
/// The reported pair comes from the shortest failing Parikh vector (ties
/// broken by comparing the vectors) and is the smallest split of that
/// vector's M-classes.
pub fn audit_parikh_complete(
    system: &ThueSystem,
    max_len: usize,
    limits: &Limits,
) -> Result<AuditReport<(Word, Word)>> {
    let alphabet = system.alphabet();
    let (units, total) = audit_units(alphabet.size(), max_len, limits)?;
    let found: Vec<Option<(Word, Word)>> = units
        .par_iter()
        .map(|v| -> Result<Option<(Word, Word)>> {
            let members: Vec<Word> = anagrams(v, limits)?.collect();
            let matrices = members
                .iter()
                .map(|w| parikh_matrix(alphabet, w))
                .collect::<Result<Vec<_>>>()?;
            let labels = label_classes(system, &members, limits)?;
            Ok(split_m_class(&members, &matrices, |i, j| {
                labels[i] == labels[j]
            }))
        })
        .collect::<Result<_>>()?;
    Ok(AuditReport::from_witness(
        max_len,
        total,
        first_pair(&units, found),
    ))
}

/// The witness of the first failing unit, with units ordered by length and
/// then by Parikh vector.
pub(crate) fn first_pair(
    units: &[ParikhVector],
    found: Vec<Option<(Word, Word)>>,
) -> Option<(Word, Word)> {
    units
        .iter()
        .zip(found)
        .filter_map(|(v, w)| w.map(|w| ((v.total(), v.counts()), w)))
        .min_by(|a, b| a.0.cmp(&b.0))
        .map(|(_, w)| w)
}
