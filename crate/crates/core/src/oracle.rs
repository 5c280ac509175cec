//! Explicit constructions of ambiguous and unreachable pairs, and the
//! projection lower bound on distances in Salomaa's system.

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::presets;
use crate::prs::ParikhRewritingSystem;
use crate::thue::{dist, transforms};
use crate::words::{Alphabet, LetterSet, Word};

/// The doubling construction `w_{k+1} = w_k w_k'`, `w_{k+1}' = w_k' w_k`,
/// returning `(w_n, w_n')`.
///
/// Starting from two distinct anagrams, the results are distinct and have the
/// same number of occurrences of every subword of length at most `n`.
pub fn build_ambiguous_pair(w1: &Word, w1_prime: &Word, n: usize) -> Result<(Word, Word)> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if w1 == w1_prime {
        return Err(Error::Precondition(
            "the seed words must be distinct".into(),
        ));
    }
    if w1.letter_histogram() != w1_prime.letter_histogram() {
        return Err(Error::Precondition(
            "the seed words must have the same Parikh vector".into(),
        ));
    }
    let (mut w, mut v) = (w1.clone(), w1_prime.clone());
    for _ in 1..n {
        (w, v) = (w.concat(&v), v.concat(&w));
    }
    Ok((w, v))
}

/// `(ab a^{n-1} ba, ba a^{n-1} ab)`: M-equivalent, yet no factor of length at
/// most `n` of the first word is M-ambiguous. No sound system whose rules
/// have length at most `n` can rewrite one into the other.
pub fn incompleteness_witness(alphabet: &Alphabet, n: usize) -> Result<(Word, Word)> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if alphabet.size() < 2 {
        return Err(Error::InvalidAlphabet(
            "the construction needs at least two letters".into(),
        ));
    }
    let a = Word::from_letters(vec![0]);
    let ab = Word::from_letters(vec![0, 1]);
    let ba = Word::from_letters(vec![1, 0]);
    let middle = a.repeat(n - 1);
    Ok((
        ab.concat(&middle).concat(&ba),
        ba.concat(&middle).concat(&ab),
    ))
}

/// `(a^n bcb a^n a c^n ab, b a^n c a^n ab c^n ba)` over `a < b < c`, an
/// irreducible transformation of order `n + 1` in Salomaa's system.
pub fn salomaa_order_pair(n: usize) -> Result<(Word, Word)> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let abc = Alphabet::latin(3)?;
    let an = "a".repeat(n);
    let cn = "c".repeat(n);
    let w = abc.word(&format!("{an}bcb{an}a{cn}ab"))?;
    let v = abc.word(&format!("b{an}c{an}ab{cn}ba"))?;
    Ok((w, v))
}

/// A pair of distinct words related by `prs`: the doubling construction
/// applied `|Σ|` times to the first non-trivial instance of the first rule.
pub fn prs_ambiguous_pair(prs: &ParikhRewritingSystem) -> Result<(Word, Word)> {
    let rule = prs
        .thue()
        .rules()
        .first()
        .ok_or_else(|| Error::InvalidSystem("the system has no rules".into()))?;
    let mut infixes = vec![Word::empty()];
    if let Some(gamma) = rule.left.infix {
        infixes.extend(gamma.iter().map(|l| Word::from_letters(vec![l])));
    }
    let (w, v) = infixes
        .iter()
        .map(|x| (rule.left.instantiate(x), rule.right.instantiate(x)))
        .find(|(w, v)| w != v)
        .ok_or_else(|| Error::InvalidRule {
            id: rule.id.clone(),
            reason: "no short non-identity instance".into(),
        })?;
    build_ambiguous_pair(&w, &v, prs.alphabet().size())
}

/// Lower bound on `dist(w, target)` in Salomaa's system: the sum of the
/// distances between the projections onto `{a,b}`, `{b,c}` and `{a,c}`,
/// measured in the corresponding two-letter subsystems.
pub fn projection_bound(w: &Word, target: &Word, limits: &Limits) -> Result<usize> {
    let salomaa = presets::salomaa_thue();
    let abc = salomaa.alphabet();
    abc.check(w)?;
    abc.check(target)?;
    if !transforms(&salomaa, w, target, limits)? {
        return Err(Error::NotRelated(abc.render(w), abc.render(target)));
    }
    let parts = [
        (LetterSet::from_letters([0, 1]), presets::binary_ex1506b()),
        (LetterSet::from_letters([1, 2]), presets::binary_ex1506b()),
        (LetterSet::from_letters([0, 2]), presets::binary_swap()),
    ];
    let mut total = 0;
    for (gamma, system) in parts {
        let (p, q) = (
            crate::words::project(w, gamma),
            crate::words::project(target, gamma),
        );
        total += dist(&system, &p, &q, limits)?.ok_or_else(|| {
            Error::NotRelated(system.alphabet().render(&p), system.alphabet().render(&q))
        })?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{m_ambiguous, m_equivalent};
    use crate::prs::prs_transforms;
    use crate::thue::{audit_parikh_complete, audit_parikh_sound, r_class, RuleFamily, ThueSystem};
    use crate::words::words_of_length;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    fn abc() -> Alphabet {
        Alphabet::parse("abc").unwrap()
    }

    /// Occurrences of `u` counted by enumerating increasing index tuples.
    fn brute_count(w: &[u8], u: &[u8]) -> u64 {
        match u.split_first() {
            None => 1,
            Some((&head, rest)) => (0..w.len())
                .filter(|&i| w[i] == head)
                .map(|i| brute_count(&w[i + 1..], rest))
                .sum(),
        }
    }

    fn same_spectrum(w: &Word, v: &Word, size: usize, up_to: usize) -> bool {
        (0..=up_to)
            .flat_map(|len| words_of_length(size, len))
            .all(|u| brute_count(w.letters(), u.letters()) == brute_count(v.letters(), u.letters()))
    }

    fn pair(a: &Alphabet, (w, v): (Word, Word)) -> (String, String) {
        (a.render(&w), a.render(&v))
    }

    #[test]
    fn doubling_instances() {
        let a = ab();
        let (x, y) = (a.word("ab").unwrap(), a.word("ba").unwrap());
        let expect = |s: &str, t: &str| (s.to_string(), t.to_string());
        assert_eq!(
            pair(&a, build_ambiguous_pair(&x, &y, 1).unwrap()),
            expect("ab", "ba")
        );
        assert_eq!(
            pair(&a, build_ambiguous_pair(&x, &y, 2).unwrap()),
            expect("abba", "baab")
        );
        let third = build_ambiguous_pair(&x, &y, 3).unwrap();
        assert_eq!(pair(&a, third.clone()), expect("abbabaab", "baababba"));
        assert!(same_spectrum(&third.0, &third.1, 2, 3));
    }

    #[test]
    fn doubling_property_for_several_seeds() {
        let a = ab();
        for (s, t) in [("ab", "ba"), ("abb", "bab"), ("aab", "aba")] {
            let (s, t) = (a.word(s).unwrap(), a.word(t).unwrap());
            for n in 1..=4 {
                let (w, v) = build_ambiguous_pair(&s, &t, n).unwrap();
                assert_ne!(w, v);
                assert!(same_spectrum(&w, &v, 2, n), "n={n}");
            }
        }
    }

    #[test]
    fn doubling_rejects_bad_seeds() {
        let a = ab();
        let w = a.word("ab").unwrap();
        assert!(matches!(
            build_ambiguous_pair(&w, &w, 2),
            Err(Error::Precondition(_))
        ));
        let v = a.word("bb").unwrap();
        assert!(matches!(
            build_ambiguous_pair(&w, &v, 2),
            Err(Error::Precondition(_))
        ));
        let v = a.word("ba").unwrap();
        assert!(build_ambiguous_pair(&w, &v, 0).is_err());
    }

    #[test]
    fn incompleteness_witness_instances() {
        let a = ab();
        let expect = |s: &str, t: &str| (s.to_string(), t.to_string());
        assert_eq!(
            pair(&a, incompleteness_witness(&a, 1).unwrap()),
            expect("abba", "baab")
        );
        assert_eq!(
            pair(&a, incompleteness_witness(&a, 3).unwrap()),
            expect("abaaba", "baaaab")
        );
        assert!(incompleteness_witness(&Alphabet::parse("a").unwrap(), 2).is_err());
    }

    #[test]
    fn incompleteness_witness_is_m_equivalent_with_unambiguous_factors() {
        let l = Limits::default();
        for a in [ab(), abc()] {
            for n in 1..=6 {
                let (w, v) = incompleteness_witness(&a, n).unwrap();
                assert!(m_equivalent(&a, &w, &v).unwrap());
                for x in [&w, &v] {
                    assert!(x.letters().iter().eq(x.letters().iter().rev()));
                }
                for len in 1..=n.min(w.len()) {
                    for start in 0..=w.len() - len {
                        let factor = Word::from(&w.letters()[start..start + len]);
                        assert!(!m_ambiguous(&a, &factor, &l).unwrap(), "n={n} {factor:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn sound_finite_system_misses_the_witness() {
        let a = ab();
        let rule = RuleFamily::finite("abba", a.word("abba").unwrap(), a.word("baab").unwrap());
        let t = ThueSystem::new(a.clone(), vec![rule]).unwrap();
        let l = Limits::default();
        let (w, v) = incompleteness_witness(&a, 4).unwrap();
        assert!(audit_parikh_sound(&t, w.len(), &l).unwrap().holds);
        assert!(!transforms(&t, &w, &v, &l).unwrap());
        assert!(!audit_parikh_complete(&t, w.len(), &l).unwrap().holds);
    }

    #[test]
    fn salomaa_pairs() {
        let a = abc();
        let expect = |s: &str, t: &str| (s.to_string(), t.to_string());
        assert_eq!(
            pair(&a, salomaa_order_pair(1).unwrap()),
            expect("abcbaacab", "bacaabcba")
        );
        assert_eq!(
            pair(&a, salomaa_order_pair(2).unwrap()),
            expect("aabcbaaaccab", "baacaaabccba")
        );
        assert!(salomaa_order_pair(0).is_err());
    }

    #[test]
    fn every_preset_has_an_ambiguous_word() {
        let l = Limits::default();
        for name in presets::PRS_PRESETS {
            let presets::NamedSystem::Prs(p) = presets::lookup(name).unwrap() else {
                unreachable!()
            };
            let (w, v) = prs_ambiguous_pair(&p).unwrap();
            assert_ne!(w, v);
            assert!(prs_transforms(&p, &w, &v, &l).unwrap(), "{name}");
        }
    }

    #[test]
    fn projection_bound_examples() {
        let a = abc();
        let l = Limits::default();
        let w = a.word("abbcacb").unwrap();
        let v = a.word("baacbbc").unwrap();
        assert_eq!(projection_bound(&w, &v, &l).unwrap(), 3);
        assert_eq!(projection_bound(&w, &w, &l).unwrap(), 0);
        let x = a.word("abc").unwrap();
        let y = a.word("cba").unwrap();
        assert!(matches!(
            projection_bound(&x, &y, &l),
            Err(Error::NotRelated(..))
        ));
    }

    #[test]
    fn projection_bound_can_be_strict() {
        let a = abc();
        let l = Limits::default();
        let w = a.word("bcacabcabbca").unwrap();
        let v = a.word("cabbcabcacab").unwrap();
        let bound = projection_bound(&w, &v, &l).unwrap();
        let d = dist(&presets::salomaa_thue(), &w, &v, &l).unwrap().unwrap();
        assert!(bound < d, "bound {bound}, dist {d}");
    }

    #[test]
    fn projection_bound_never_exceeds_dist() {
        let p = presets::salomaa_abc();
        let t = p.thue();
        let l = Limits::default();
        let mut rng = StdRng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 100 {
            let len = rng.gen_range(0..=10);
            let w = Word::from_letters((0..len).map(|_| rng.gen_range(0..3)).collect());
            let counters = p.counter_values(&w).unwrap();
            let related: Vec<Word> = r_class(t, &w, &l)
                .unwrap()
                .into_iter()
                .filter(|v| p.counter_values(v).unwrap() == counters)
                .collect();
            let v = &related[rng.gen_range(0..related.len())];
            let d = dist(t, &w, v, &l).unwrap().unwrap();
            assert!(projection_bound(&w, v, &l).unwrap() <= d);
            checked += 1;
        }
    }
}
