//! Irreducible transformations of a Parikh rewriting system.
//!
//! A transformation `w ⇒_𝔓 w'` between distinct words is reducible when some
//! third word `w''` with the same counter values lies on a shortest rewriting
//! path between them:
//!
//! ```text
//! dist(w, w'') + dist(w'', w') = dist(w, w')
//! ```
//!
//! Otherwise it is irreducible, and its order is `dist(w, w')`. Every
//! transformation splits into irreducible ones whose orders add up to the
//! distance ([`decompose`]); the irreducible transformations themselves form a
//! Thue system ([`derive_thue_system`]).

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::rc::Rc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::prs::ParikhRewritingSystem;
use crate::thue::audit::audit_units;
use crate::thue::{ClassGraph, RuleFamily, ThueSystem};
use crate::words::{anagrams, Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irreducibility {
    pub irreducible: bool,
    /// `dist_R` between the two words.
    pub distance: usize,
    /// Equal to `distance` when irreducible.
    pub order: Option<usize>,
    /// Lexicographically smallest splitting word when reducible.
    pub splitter: Option<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleStep {
    pub source: Word,
    pub target: Word,
    pub order: usize,
}

/// One rewrite class with per-member counter values and memoized distance rows.
struct PrsClass {
    graph: ClassGraph,
    counters: Vec<Vec<u64>>,
    rows: RefCell<HashMap<u32, Rc<Vec<u32>>>>,
}

impl PrsClass {
    fn build(prs: &ParikhRewritingSystem, seed: &Word, limits: &Limits) -> Result<PrsClass> {
        let graph = ClassGraph::build(prs.thue(), seed, limits)?;
        let counters = graph
            .words()
            .iter()
            .map(|w| prs.counter_values(w))
            .collect::<Result<Vec<_>>>()?;
        Ok(PrsClass {
            graph,
            counters,
            rows: RefCell::default(),
        })
    }

    /// Builds the class of `w` and checks `w ⇒_𝔓 target`.
    fn for_pair(
        prs: &ParikhRewritingSystem,
        w: &Word,
        target: &Word,
        limits: &Limits,
    ) -> Result<(PrsClass, u32, u32)> {
        prs.alphabet().check(w)?;
        prs.alphabet().check(target)?;
        let not_related =
            || Error::NotRelated(prs.alphabet().render(w), prs.alphabet().render(target));
        if prs.counter_values(w)? != prs.counter_values(target)? {
            return Err(not_related());
        }
        if w.letter_histogram() != target.letter_histogram() {
            return Err(not_related());
        }
        let class = PrsClass::build(prs, w, limits)?;
        let i = class.graph.index_of(w).expect("seed is a member");
        let j = class.graph.index_of(target).ok_or_else(not_related)?;
        Ok((class, i, j))
    }

    fn row(&self, i: u32) -> Rc<Vec<u32>> {
        self.rows
            .borrow_mut()
            .entry(i)
            .or_insert_with(|| Rc::new(self.graph.distances(i)))
            .clone()
    }

    /// Distance between `i` and `j`, and the smallest splitter if any.
    fn split(&self, i: u32, j: u32) -> (u32, Option<u32>) {
        let (ri, rj) = (self.row(i), self.row(j));
        let d = ri[j as usize];
        let splitter = (0..self.graph.len() as u32).find(|&k| {
            k != i
                && k != j
                && self.counters[k as usize] == self.counters[i as usize]
                && ri[k as usize] + rj[k as usize] == d
        });
        (d, splitter)
    }

    fn chain(&self, i: u32, j: u32, out: &mut Vec<IrreducibleStep>) {
        match self.split(i, j) {
            (d, None) => out.push(IrreducibleStep {
                source: self.graph.word(i).clone(),
                target: self.graph.word(j).clone(),
                order: d as usize,
            }),
            (_, Some(k)) => {
                self.chain(i, k, out);
                self.chain(k, j, out);
            }
        }
    }

    /// Members reachable from `u` by one irreducible transformation of order
    /// at most `max_order`, with the orders, sorted by member.
    fn irreducible_neighbors(&self, u: u32, max_order: u32) -> Vec<(u32, u32)> {
        let same_cell = |x: u32| self.counters[x as usize] == self.counters[u as usize];
        let ball = self.graph.ball(u, max_order);
        let mut candidates: Vec<(u32, u32)> = ball
            .iter()
            .filter(|&(&v, &d)| d > 0 && same_cell(v))
            .map(|(&v, &d)| (v, d))
            .collect();
        candidates.sort_unstable();
        candidates
            .into_iter()
            .filter(|&(v, d)| {
                if d == 1 {
                    return true;
                }
                // a splitter is strictly closer than d to both ends
                let around_v = self.graph.ball(v, d - 1);
                !ball.iter().any(|(&x, &dx)| {
                    x != u
                        && x != v
                        && dx < d
                        && same_cell(x)
                        && around_v.get(&x).is_some_and(|&dv| dx + dv == d)
                })
            })
            .collect()
    }
}

/// Decides whether `w ⇒_𝔓 target` is irreducible.
///
/// Requires `w != target` and `w ⇒_𝔓 target`; violations are errors.
pub fn irreducible(
    prs: &ParikhRewritingSystem,
    w: &Word,
    target: &Word,
    limits: &Limits,
) -> Result<Irreducibility> {
    if w == target {
        return Err(Error::Precondition(
            "identity transformations are neither reducible nor irreducible".into(),
        ));
    }
    let (class, i, j) = PrsClass::for_pair(prs, w, target, limits)?;
    let (d, splitter) = class.split(i, j);
    let d = d as usize;
    Ok(Irreducibility {
        irreducible: splitter.is_none(),
        distance: d,
        order: splitter.is_none().then_some(d),
        splitter: splitter.map(|k| class.graph.word(k).clone()),
    })
}

/// Splits `w ⇒_𝔓 target` into irreducible transformations whose orders sum
/// to `dist(w, target)`. Reducible pairs are split at their smallest
/// splitter. The chain is empty when `w == target`.
pub fn decompose(
    prs: &ParikhRewritingSystem,
    w: &Word,
    target: &Word,
    limits: &Limits,
) -> Result<Vec<IrreducibleStep>> {
    let (class, i, j) = PrsClass::for_pair(prs, w, target, limits)?;
    let mut out = Vec::new();
    if i != j {
        class.chain(i, j, &mut out);
    }
    Ok(out)
}

/// Shortest path from `w` to `target` in the graph whose edges are the
/// irreducible transformations of order at most `max_order`; `None` if there
/// is none.
pub fn irreducible_graph_path(
    prs: &ParikhRewritingSystem,
    w: &Word,
    target: &Word,
    max_order: usize,
    limits: &Limits,
) -> Result<Option<Vec<IrreducibleStep>>> {
    if max_order == 0 {
        return Err(Error::Precondition(
            "the maximum order must be at least 1".into(),
        ));
    }
    let (class, start, goal) = PrsClass::for_pair(prs, w, target, limits)?;
    let max_order = u32::try_from(max_order).unwrap_or(u32::MAX);
    let mut parent: HashMap<u32, (u32, u32)> = HashMap::new();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u == goal {
            break;
        }
        for (v, order) in class.irreducible_neighbors(u, max_order) {
            if seen.insert(v) {
                parent.insert(v, (u, order));
                queue.push_back(v);
            }
        }
    }
    if !seen.contains(&goal) {
        return Ok(None);
    }
    let mut path = Vec::new();
    let mut at = goal;
    while let Some(&(p, order)) = parent.get(&at) {
        path.push(IrreducibleStep {
            source: class.graph.word(p).clone(),
            target: class.graph.word(at).clone(),
            order: order as usize,
        });
        at = p;
    }
    path.reverse();
    Ok(Some(path))
}

/// One derived rule: an irreducible transformation between two whole words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DerivedRule {
    pub left: Word,
    pub right: Word,
    pub order: usize,
}

/// The irreducible transformations between words up to a length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSystem {
    pub alphabet: Alphabet,
    pub max_len: usize,
    /// Each unordered pair once, `left < right`, sorted by length then words.
    pub rules: Vec<DerivedRule>,
    /// Number of rules per order.
    pub histogram: BTreeMap<usize, usize>,
}

impl DerivedSystem {
    /// The rules as a Thue system of finite rules.
    pub fn to_thue_system(&self) -> Result<ThueSystem> {
        let rules = self
            .rules
            .iter()
            .enumerate()
            .map(|(k, r)| {
                RuleFamily::finite(format!("irr{}", k + 1), r.left.clone(), r.right.clone())
            })
            .collect();
        ThueSystem::new(self.alphabet.clone(), rules)
    }
}

/// Enumerates every irreducible transformation between words of length at
/// most `max_len`, one rewrite class at a time.
pub fn derive_thue_system(
    prs: &ParikhRewritingSystem,
    max_len: usize,
    limits: &Limits,
) -> Result<DerivedSystem> {
    let (units, _) = audit_units(prs.alphabet().size(), max_len, limits)?;
    let per_unit = units
        .par_iter()
        .map(|v| -> Result<Vec<DerivedRule>> {
            let mut rules = Vec::new();
            let mut covered: HashSet<Word> = HashSet::new();
            for seed in anagrams(v, limits)? {
                if covered.contains(&seed) {
                    continue;
                }
                let class = PrsClass::build(prs, &seed, limits)?;
                covered.extend(class.graph.words().iter().cloned());
                let mut cells: BTreeMap<&[u64], Vec<u32>> = BTreeMap::new();
                for (i, c) in class.counters.iter().enumerate() {
                    cells.entry(c).or_default().push(i as u32);
                }
                for cell in cells.values().filter(|c| c.len() > 1) {
                    let rows: Vec<Rc<Vec<u32>>> = cell.iter().map(|&i| class.row(i)).collect();
                    for a in 0..cell.len() {
                        for b in a + 1..cell.len() {
                            let d = rows[a][cell[b] as usize];
                            let reducible = (0..cell.len()).any(|k| {
                                k != a
                                    && k != b
                                    && rows[a][cell[k] as usize] + rows[b][cell[k] as usize] == d
                            });
                            if !reducible {
                                rules.push(DerivedRule {
                                    left: class.graph.word(cell[a]).clone(),
                                    right: class.graph.word(cell[b]).clone(),
                                    order: d as usize,
                                });
                            }
                        }
                    }
                }
            }
            Ok(rules)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut rules: Vec<DerivedRule> = per_unit.into_iter().flatten().collect();
    rules.sort_by(|x, y| (x.left.len(), &x.left, &x.right).cmp(&(y.left.len(), &y.left, &y.right)));
    let mut histogram = BTreeMap::new();
    for r in &rules {
        *histogram.entry(r.order).or_insert(0) += 1;
    }
    Ok(DerivedSystem {
        alphabet: prs.alphabet().clone(),
        max_len,
        rules,
        histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use crate::thue::{audit_parikh_complete, audit_parikh_sound, dist};

    fn w(p: &ParikhRewritingSystem, s: &str) -> Word {
        p.alphabet().word(s).unwrap()
    }

    fn check(p: &ParikhRewritingSystem, a: &str, b: &str) -> Irreducibility {
        irreducible(p, &w(p, a), &w(p, b), &Limits::default()).unwrap()
    }

    #[test]
    fn salomaa_orders() {
        let s = presets::salomaa_abc();
        let r = check(&s, "ac", "ca");
        assert!(r.irreducible);
        assert_eq!(r.order, Some(1));
        let r = check(&s, "abbcacb", "bacabbc");
        assert_eq!((r.irreducible, r.order), (true, Some(2)));
        let r = check(&s, "aabcbaaaccab", "baacaaabccba");
        assert_eq!((r.irreducible, r.order), (true, Some(3)));
    }

    #[test]
    fn reducible_pair_reports_splitter() {
        let s = presets::salomaa_abc();
        let r = check(&s, "abbcacb", "baacbbc");
        assert!(!r.irreducible);
        assert_eq!(r.distance, 3);
        assert_eq!(r.order, None);
        let k = r.splitter.unwrap();
        let l = Limits::default();
        let t = s.thue();
        assert_eq!(
            dist(t, &w(&s, "abbcacb"), &k, &l).unwrap().unwrap()
                + dist(t, &k, &w(&s, "baacbbc"), &l).unwrap().unwrap(),
            3
        );
        assert_eq!(
            s.counter_values(&k).unwrap(),
            s.counter_values(&w(&s, "abbcacb")).unwrap()
        );
    }

    #[test]
    fn preconditions() {
        let s = presets::salomaa_abc();
        let l = Limits::default();
        assert!(matches!(
            irreducible(&s, &w(&s, "ac"), &w(&s, "ac"), &l),
            Err(Error::Precondition(_))
        ));
        // same vector, different abc count
        assert!(matches!(
            irreducible(&s, &w(&s, "abc"), &w(&s, "cba"), &l),
            Err(Error::NotRelated(..))
        ));
        assert!(matches!(
            decompose(&s, &w(&s, "ab"), &w(&s, "ba"), &l),
            Err(Error::NotRelated(..))
        ));
        assert!(irreducible_graph_path(&s, &w(&s, "ac"), &w(&s, "ca"), 0, &l).is_err());
    }

    #[test]
    fn binary_r1r2_order_three() {
        let p = presets::binary_r1r2_ab();
        let r = check(&p, "bbaaabaab", "abbabaaba");
        assert_eq!((r.irreducible, r.order), (true, Some(3)));
        let l = Limits::default();
        let path = irreducible_graph_path(&p, &w(&p, "bbaaabaab"), &w(&p, "abbabaaba"), 2, &l)
            .unwrap()
            .unwrap();
        assert_eq!(path.len(), 2);
        assert!(path.iter().all(|s| s.order == 2));
    }

    #[test]
    fn decomposition_is_additive() {
        let s = presets::salomaa_abc();
        let l = Limits::default();
        let (a, b) = (w(&s, "abbcacb"), w(&s, "baacbbc"));
        let chain = decompose(&s, &a, &b, &l).unwrap();
        assert!(chain.len() >= 2);
        assert_eq!(chain.first().unwrap().source, a);
        assert_eq!(chain.last().unwrap().target, b);
        assert!(chain.windows(2).all(|p| p[0].target == p[1].source));
        assert_eq!(chain.iter().map(|s| s.order).sum::<usize>(), 3);
        for step in &chain {
            let r = irreducible(&s, &step.source, &step.target, &l).unwrap();
            assert_eq!(r.order, Some(step.order));
        }
        assert!(decompose(&s, &a, &a, &l).unwrap().is_empty());
        let single = decompose(&s, &w(&s, "ac"), &w(&s, "ca"), &l).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn trivial_path() {
        let s = presets::salomaa_abc();
        let a = w(&s, "abcab");
        assert_eq!(
            irreducible_graph_path(&s, &a, &a, 2, &Limits::default()).unwrap(),
            Some(vec![])
        );
    }

    #[test]
    fn swap_system_derives_sandwich_rules() {
        let p = presets::binary_swap_ab();
        let d = derive_thue_system(&p, 6, &Limits::default()).unwrap();
        assert_eq!(d.histogram.keys().copied().collect::<Vec<_>>(), [2]);
        let sandwich = presets::binary_ex1506b();
        for r in &d.rules {
            assert!(sandwich.neighbors(&r.left).contains(&r.right));
        }
        // every instance abxba -> baxab with |abxba| <= 6 appears
        for len in 4..=6 {
            for x in crate::words::words_of_length(2, len - 4) {
                let left = w(&p, "ab").concat(&x).concat(&w(&p, "ba"));
                let right = w(&p, "ba").concat(&x).concat(&w(&p, "ab"));
                let (l, r) = if left < right {
                    (left, right)
                } else {
                    (right, left)
                };
                assert!(d.rules.iter().any(|d| d.left == l && d.right == r));
            }
        }
    }

    #[test]
    fn derived_system_reaudits() {
        let p = presets::binary_swap_ab();
        let l = Limits::default();
        let t = derive_thue_system(&p, 5, &l)
            .unwrap()
            .to_thue_system()
            .unwrap();
        assert!(audit_parikh_sound(&t, 5, &l).unwrap().holds);
        assert!(audit_parikh_complete(&t, 5, &l).unwrap().holds);
    }

    #[test]
    fn salomaa_derivation_contains_the_swap() {
        let s = presets::salomaa_abc();
        let d = derive_thue_system(&s, 6, &Limits::default()).unwrap();
        assert!(d.rules.contains(&DerivedRule {
            left: w(&s, "ac"),
            right: w(&s, "ca"),
            order: 1
        }));
        assert_eq!(d.histogram.values().sum::<usize>(), d.rules.len());
    }
}
