//! Thue systems with parametric rule families.
//!
//! A rule family pairs two [`RewritePattern`]s. A pattern is either a single
//! word `uv`, or the infinite set `{ u x v : x ∈ Γ* }` for an infix alphabet
//! `Γ`. The infix is copied verbatim from the matched left side to the right
//! side, and every family is applied in both directions.

pub(crate) mod audit;
pub(crate) mod search;

pub use audit::{audit_parikh_complete, audit_parikh_sound, AuditReport};
pub use search::{
    dist, dist_bidirectional, distances_from, r_class, shortest_path, transforms, ClassGraph,
};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{Alphabet, LetterSet, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewritePattern {
    pub prefix: Word,
    /// `None` for a plain word.
    pub infix: Option<LetterSet>,
    pub suffix: Word,
}

impl RewritePattern {
    pub fn word(w: Word) -> Self {
        RewritePattern {
            prefix: w,
            infix: None,
            suffix: Word::empty(),
        }
    }

    pub fn parametric(prefix: Word, infix: LetterSet, suffix: Word) -> Self {
        RewritePattern {
            prefix,
            infix: Some(infix),
            suffix,
        }
    }

    /// The pattern instantiated with `x` (ignored for plain words).
    pub fn instantiate(&self, x: &Word) -> Word {
        match self.infix {
            None => self.prefix.concat(&self.suffix),
            Some(_) => self.prefix.concat(x).concat(&self.suffix),
        }
    }

    fn fixed_histogram(&self) -> [u64; crate::words::MAX_ALPHABET] {
        let mut h = self.prefix.letter_histogram();
        for (a, b) in h.iter_mut().zip(self.suffix.letter_histogram()) {
            *a += b;
        }
        h
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self.infix {
            None => alphabet.render(&self.prefix.concat(&self.suffix)),
            Some(g) => format!(
                "{}[{}*]{}",
                alphabet.render(&self.prefix),
                alphabet.render_set(g),
                alphabet.render(&self.suffix)
            ),
        }
    }
}

/// A rewriting rule pair `(left, right)`, possibly parametric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RuleFamily {
    pub id: String,
    pub left: RewritePattern,
    pub right: RewritePattern,
}

impl RuleFamily {
    pub fn finite(id: impl Into<String>, left: Word, right: Word) -> Self {
        RuleFamily {
            id: id.into(),
            left: RewritePattern::word(left),
            right: RewritePattern::word(right),
        }
    }

    /// `(u x v, u' x v')` for every `x ∈ Γ*`.
    pub fn parametric(
        id: impl Into<String>,
        (prefix, suffix): (Word, Word),
        infix: LetterSet,
        (right_prefix, right_suffix): (Word, Word),
    ) -> Self {
        RuleFamily {
            id: id.into(),
            left: RewritePattern::parametric(prefix, infix, suffix),
            right: RewritePattern::parametric(right_prefix, infix, right_suffix),
        }
    }

    pub fn is_parametric(&self) -> bool {
        self.left.infix.is_some()
    }

    /// Whether every instance of the family maps a word to an anagram of itself.
    pub fn preserves_parikh_vector(&self) -> bool {
        self.left.fixed_histogram() == self.right.fixed_histogram()
    }

    fn pattern(&self, direction: Direction) -> (&RewritePattern, &RewritePattern) {
        match direction {
            Direction::Forward => (&self.left, &self.right),
            Direction::Backward => (&self.right, &self.left),
        }
    }

    fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        let invalid = |reason: &str| Error::InvalidRule {
            id: self.id.clone(),
            reason: reason.to_string(),
        };
        for w in [
            &self.left.prefix,
            &self.left.suffix,
            &self.right.prefix,
            &self.right.suffix,
        ] {
            alphabet
                .check(w)
                .map_err(|e| invalid(&format!("word outside the alphabet ({e})")))?;
        }
        match (self.left.infix, self.right.infix) {
            (None, None) => {
                if self.left.instantiate(&Word::empty()) == self.right.instantiate(&Word::empty()) {
                    return Err(invalid("left and right words are equal"));
                }
            }
            (Some(l), Some(r)) if l == r => {
                if l.iter().any(|x| x as usize >= alphabet.size()) {
                    return Err(invalid("infix alphabet is not a subset of the alphabet"));
                }
            }
            _ => return Err(invalid("left and right must share the same infix alphabet")),
        }
        Ok(())
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!(
            "{}: {} <-> {}",
            self.id,
            self.left.render(alphabet),
            self.right.render(alphabet)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// left → right
    Forward,
    /// right → left
    Backward,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "->",
            Direction::Backward => "<-",
        })
    }
}

/// One application of one rule at one position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DirectStep {
    pub source: Word,
    pub result: Word,
    /// Index into [`ThueSystem::rules`].
    pub rule: usize,
    pub direction: Direction,
    /// Start of the rewritten factor in `source`.
    pub position: usize,
    /// The matched infix (λ for finite rules).
    pub infix: Word,
}

impl DirectStep {
    /// Re-applies the recorded instantiation to `source`.
    pub fn replay(&self, system: &ThueSystem) -> Option<Word> {
        let (from, to) = system.rules.get(self.rule)?.pattern(self.direction);
        let window = from.instantiate(&self.infix);
        let src = self.source.letters();
        let end = self.position.checked_add(window.len())?;
        if end > src.len() || &src[self.position..end] != window.letters() {
            return None;
        }
        let mut out = src[..self.position].to_vec();
        out.extend_from_slice(to.instantiate(&self.infix).letters());
        out.extend_from_slice(&src[end..]);
        Some(Word::from_letters(out))
    }
}

/// A Thue system `(Σ, R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThueSystem {
    alphabet: Alphabet,
    rules: Vec<RuleFamily>,
}

// A matched window: the factor `source[start..end]` equals the source-side
// pattern with infix `source[infix.0..infix.1]`.
struct Site<'a> {
    rule: usize,
    direction: Direction,
    start: usize,
    infix: (usize, usize),
    end: usize,
    replacement: &'a RewritePattern,
}

impl ThueSystem {
    pub fn new(alphabet: Alphabet, rules: Vec<RuleFamily>) -> Result<Self> {
        if rules.is_empty() {
            return Err(Error::InvalidSystem(
                "a Thue system needs at least one rule".into(),
            ));
        }
        for (i, r) in rules.iter().enumerate() {
            r.validate(&alphabet)?;
            if rules[..i].iter().any(|o| o.id == r.id) {
                return Err(Error::InvalidSystem(format!(
                    "duplicate rule id {:?}",
                    r.id
                )));
            }
        }
        Ok(ThueSystem { alphabet, rules })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RuleFamily] {
        &self.rules
    }

    pub fn preserves_parikh_vector(&self) -> bool {
        self.rules.iter().all(RuleFamily::preserves_parikh_vector)
    }

    /// A copy without the rule named `id`; used for mutation tests.
    pub fn without_rule(&self, id: &str) -> Result<ThueSystem> {
        if self.rules.iter().all(|r| r.id != id) {
            return Err(Error::InvalidSystem(format!("no rule with id {id:?}")));
        }
        ThueSystem::new(
            self.alphabet.clone(),
            self.rules.iter().filter(|r| r.id != id).cloned().collect(),
        )
    }

    fn for_each_site<'a>(&'a self, w: &[u8], mut f: impl FnMut(Site<'a>)) {
        for (rule, family) in self.rules.iter().enumerate() {
            for direction in [Direction::Forward, Direction::Backward] {
                let (from, to) = family.pattern(direction);
                let (u, v) = (from.prefix.letters(), from.suffix.letters());
                if u.len() + v.len() > w.len() {
                    continue;
                }
                for start in 0..=w.len() - u.len() - v.len() {
                    if !w[start..].starts_with(u) {
                        continue;
                    }
                    let infix_start = start + u.len();
                    let mut infix_end = infix_start;
                    loop {
                        if w[infix_end..].starts_with(v) {
                            f(Site {
                                rule,
                                direction,
                                start,
                                infix: (infix_start, infix_end),
                                end: infix_end + v.len(),
                                replacement: to,
                            });
                        }
                        match from.infix {
                            Some(gamma) if infix_end < w.len() && gamma.contains(w[infix_end]) => {
                                infix_end += 1
                            }
                            _ => break,
                        }
                    }
                }
            }
        }
    }

    fn rewrite(w: &[u8], site: &Site<'_>) -> Option<Vec<u8>> {
        let to = site.replacement;
        let mut out = Vec::with_capacity(w.len() + to.prefix.len() + to.suffix.len());
        out.extend_from_slice(&w[..site.start]);
        out.extend_from_slice(to.prefix.letters());
        if to.infix.is_some() {
            out.extend_from_slice(&w[site.infix.0..site.infix.1]);
        }
        out.extend_from_slice(to.suffix.letters());
        out.extend_from_slice(&w[site.end..]);
        (out != w).then_some(out)
    }

    /// Every instantiation that changes `w`, in (rule, direction, position,
    /// infix length) order.
    pub fn direct_steps(&self, w: &Word) -> Vec<DirectStep> {
        let mut steps = Vec::new();
        self.for_each_site(w.letters(), |site| {
            if let Some(result) = Self::rewrite(w.letters(), &site) {
                steps.push(DirectStep {
                    source: w.clone(),
                    result: Word::from_letters(result),
                    rule: site.rule,
                    direction: site.direction,
                    position: site.start,
                    infix: Word::from(&w.letters()[site.infix.0..site.infix.1]),
                });
            }
        });
        steps.sort_by(|a, b| {
            (a.rule, a.direction, a.position, a.infix.len()).cmp(&(
                b.rule,
                b.direction,
                b.position,
                b.infix.len(),
            ))
        });
        steps
    }

    /// The distinct words reachable from `w` in one step, sorted.
    pub fn neighbors(&self, w: &Word) -> Vec<Word> {
        let mut out = Vec::new();
        self.for_each_site(w.letters(), |site| {
            if let Some(result) = Self::rewrite(w.letters(), &site) {
                out.push(Word::from_letters(result));
            }
        });
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn render_step(&self, step: &DirectStep) -> String {
        let a = &self.alphabet;
        format!(
            "{} => {} ({} {} at {}, x={})",
            a.render(&step.source),
            a.render(&step.result),
            self.rules[step.rule].id,
            step.direction,
            step.position,
            if step.infix.is_empty() {
                "λ".to_string()
            } else {
                a.render(&step.infix)
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::words::{parikh_vector, words_of_length};
    use proptest::prelude::*;

    fn render_all(t: &ThueSystem, w: &str) -> Vec<String> {
        let w = t.alphabet().word(w).unwrap();
        t.neighbors(&w)
            .iter()
            .map(|n| t.alphabet().render(n))
            .collect()
    }

    #[test]
    fn binary_swap_neighbors() {
        let t = presets::binary_swap();
        assert_eq!(render_all(&t, "ab"), ["ba"]);
        assert_eq!(render_all(&t, "aabb"), ["abab"]);
        let steps = t.direct_steps(&t.alphabet().word("ab").unwrap());
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].direction, Direction::Forward);
        assert_eq!(steps[0].position, 0);
    }

    #[test]
    fn parametric_family_matches_empty_infix() {
        let t = presets::binary_ex1506b();
        assert_eq!(render_all(&t, "abba"), ["baab"]);
        assert_eq!(render_all(&t, "abaabba"), ["aabbaba", "ababaab", "baaabab"]);
    }

    #[test]
    fn salomaa_steps_on_ac() {
        let t = presets::salomaa_thue();
        assert_eq!(render_all(&t, "ac"), ["ca"]);
        let step = &t.direct_steps(&t.alphabet().word("ac").unwrap())[0];
        assert_eq!(t.rules()[step.rule].id, "ac");
    }

    #[test]
    fn infix_is_restricted_to_gamma() {
        let t = presets::ternary_ex0701c();
        // x = c is not allowed in ab x ba
        assert!(!render_all(&t, "abcba").contains(&"bacab".to_string()));
        let s = presets::salomaa_thue();
        assert!(render_all(&s, "abcba").contains(&"bacab".to_string()));
    }

    #[test]
    fn identity_instantiations_are_skipped() {
        let a = Alphabet::parse("ab").unwrap();
        let w = |s| a.word(s).unwrap();
        // a x a <-> a x a is degenerate for every x, b x <-> x b only for some x
        let t = ThueSystem::new(
            a.clone(),
            vec![RuleFamily::parametric(
                "bx",
                (w("b"), w("")),
                a.letter_set("ab").unwrap(),
                (w(""), w("b")),
            )],
        )
        .unwrap();
        // "bb" -> "bb" (x = b, identical) must not appear
        assert!(t.neighbors(&w("bb")).is_empty());
        assert_eq!(render_all(&t, "ba"), ["ab"]);
    }

    #[test]
    fn validation_errors() {
        let a = Alphabet::parse("ab").unwrap();
        let w = |s| a.word(s).unwrap();
        assert!(ThueSystem::new(a.clone(), vec![]).is_err());
        assert!(matches!(
            ThueSystem::new(
                a.clone(),
                vec![RuleFamily::finite("same", w("ab"), w("ab"))]
            ),
            Err(Error::InvalidRule { .. })
        ));
        let mixed = RuleFamily {
            id: "mixed".into(),
            left: RewritePattern::parametric(w("a"), a.letter_set("a").unwrap(), w("")),
            right: RewritePattern::word(w("a")),
        };
        assert!(ThueSystem::new(a.clone(), vec![mixed]).is_err());
        let outside = RuleFamily::finite("c", Word::from_letters(vec![2]), w("a"));
        assert!(ThueSystem::new(a.clone(), vec![outside]).is_err());
        let dup = vec![
            RuleFamily::finite("r", w("ab"), w("ba")),
            RuleFamily::finite("r", w("aab"), w("aba")),
        ];
        assert!(ThueSystem::new(a, dup).is_err());
    }

    #[test]
    fn steps_replay_and_are_symmetric() {
        for t in [
            presets::salomaa_thue(),
            presets::ternary_ex0701c(),
            presets::binary_r1r2(),
            presets::binary_ex1506b(),
        ] {
            let s = t.alphabet().size();
            for w in (0..=6).flat_map(|n| words_of_length(s, n)) {
                for step in t.direct_steps(&w) {
                    assert_ne!(step.result, w);
                    assert_eq!(step.replay(&t).as_ref(), Some(&step.result));
                    assert!(t.neighbors(&step.result).contains(&w));
                    assert_eq!(
                        parikh_vector(t.alphabet(), &step.result),
                        parikh_vector(t.alphabet(), &w)
                    );
                }
            }
        }
    }

    proptest! {
        #[test]
        fn neighbors_are_distinct_step_results(letters in proptest::collection::vec(0u8..3, 0..12)) {
            let t = presets::salomaa_thue();
            let w = Word::from_letters(letters);
            let mut from_steps: Vec<Word> = t.direct_steps(&w).into_iter().map(|s| s.result).collect();
            from_steps.sort();
            from_steps.dedup();
            prop_assert_eq!(from_steps, t.neighbors(&w));
        }
    }
}
