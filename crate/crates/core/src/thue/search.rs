//! Breadth-first searches over the rewriting graph: reachability, distance,
//! rewrite classes.
//!
//! Every search counts the words it holds and fails with
//! [`Error::CapExceeded`] once that exceeds `Limits::max_states`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::thue::{DirectStep, ThueSystem};
use crate::words::Word;

fn cap_error(limits: &Limits, context: &'static str) -> Error {
    Error::CapExceeded {
        limit: limits.max_states,
        context,
    }
}

fn check_inputs(system: &ThueSystem, words: &[&Word]) -> Result<()> {
    words.iter().try_for_each(|w| system.alphabet().check(w))
}

// Vector-preserving systems never leave the anagram class.
fn trivially_unreachable(system: &ThueSystem, w: &Word, target: &Word) -> bool {
    system.preserves_parikh_vector() && w.letter_histogram() != target.letter_histogram()
}

/// Distances from `start` to every word within `max_depth` steps (or the whole
/// class when `max_depth` is `None`).
pub fn distances_from(
    system: &ThueSystem,
    start: &Word,
    max_depth: Option<usize>,
    limits: &Limits,
) -> Result<HashMap<Word, usize>> {
    check_inputs(system, &[start])?;
    let mut dist = HashMap::from([(start.clone(), 0usize)]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if max_depth.is_some_and(|m| d >= m) {
            continue;
        }
        for n in system.neighbors(&w) {
            if !dist.contains_key(&n) {
                dist.insert(n.clone(), d + 1);
                if dist.len() > limits.max_states {
                    return Err(cap_error(limits, "exploring a rewrite class"));
                }
                queue.push_back(n);
            }
        }
    }
    Ok(dist)
}

/// Shortest rewriting path from `w` to `target`, as direct steps.
pub fn shortest_path(
    system: &ThueSystem,
    w: &Word,
    target: &Word,
    limits: &Limits,
) -> Result<Option<Vec<DirectStep>>> {
    check_inputs(system, &[w, target])?;
    if trivially_unreachable(system, w, target) {
        return Ok(None);
    }
    let mut parent: HashMap<Word, Option<Word>> = HashMap::from([(w.clone(), None)]);
    let mut queue = VecDeque::from([w.clone()]);
    let mut found = w == target;
    'search: while let Some(u) = queue.pop_front() {
        for n in system.neighbors(&u) {
            if parent.contains_key(&n) {
                continue;
            }
            parent.insert(n.clone(), Some(u.clone()));
            if parent.len() > limits.max_states {
                return Err(cap_error(limits, "searching for a rewriting path"));
            }
            if &n == target {
                found = true;
                break 'search;
            }
            queue.push_back(n);
        }
    }
    if !found {
        return Ok(None);
    }
    let mut chain = vec![target.clone()];
    while let Some(Some(p)) = parent.get(chain.last().unwrap()) {
        chain.push(p.clone());
    }
    chain.reverse();
    let steps = chain
        .windows(2)
        .map(|pair| {
            system
                .direct_steps(&pair[0])
                .into_iter()
                .find(|s| s.result == pair[1])
                .expect("BFS edge comes from a direct step")
        })
        .collect();
    Ok(Some(steps))
}

/// `dist_R(w, target)`, or `None` when `target` is unreachable. Plain BFS.
pub fn dist(
    system: &ThueSystem,
    w: &Word,
    target: &Word,
    limits: &Limits,
) -> Result<Option<usize>> {
    check_inputs(system, &[w, target])?;
    if w == target {
        return Ok(Some(0));
    }
    if trivially_unreachable(system, w, target) {
        return Ok(None);
    }
    let mut seen: HashMap<Word, usize> = HashMap::from([(w.clone(), 0)]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        let d = seen[&u];
        for n in system.neighbors(&u) {
            if &n == target {
                return Ok(Some(d + 1));
            }
            if !seen.contains_key(&n) {
                seen.insert(n.clone(), d + 1);
                if seen.len() > limits.max_states {
                    return Err(cap_error(limits, "computing a rewriting distance"));
                }
                queue.push_back(n);
            }
        }
    }
    Ok(None)
}

/// Same contract as [`dist`], searching from both ends one layer at a time.
pub fn dist_bidirectional(
    system: &ThueSystem,
    w: &Word,
    target: &Word,
    limits: &Limits,
) -> Result<Option<usize>> {
    check_inputs(system, &[w, target])?;
    if w == target {
        return Ok(Some(0));
    }
    if trivially_unreachable(system, w, target) {
        return Ok(None);
    }
    let mut sides = [
        (HashMap::from([(w.clone(), 0usize)]), vec![w.clone()]),
        (
            HashMap::from([(target.clone(), 0usize)]),
            vec![target.clone()],
        ),
    ];
    let mut depth = [0usize; 2];
    loop {
        // expand the smaller frontier
        let s = if sides[0].1.len() <= sides[1].1.len() {
            0
        } else {
            1
        };
        if sides[s].1.is_empty() {
            return Ok(None);
        }
        depth[s] += 1;
        let mut next = Vec::new();
        let mut best: Option<usize> = None;
        for u in std::mem::take(&mut sides[s].1) {
            for n in system.neighbors(&u) {
                if let Some(&other) = sides[1 - s].0.get(&n) {
                    let total = depth[s] + other;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                if !sides[s].0.contains_key(&n) {
                    sides[s].0.insert(n.clone(), depth[s]);
                    next.push(n);
                }
            }
        }
        if sides[0].0.len() + sides[1].0.len() > limits.max_states {
            return Err(cap_error(limits, "computing a rewriting distance"));
        }
        if best.is_some() {
            return Ok(best);
        }
        sides[s].1 = next;
    }
}

/// `w ⇒_R target`.
pub fn transforms(system: &ThueSystem, w: &Word, target: &Word, limits: &Limits) -> Result<bool> {
    Ok(dist(system, w, target, limits)?.is_some())
}

/// The rewrite class `[w]_R`, sorted.
pub fn r_class(system: &ThueSystem, w: &Word, limits: &Limits) -> Result<Vec<Word>> {
    let mut class: Vec<Word> = distances_from(system, w, None, limits)?
        .into_keys()
        .collect();
    class.sort_unstable();
    Ok(class)
}

/// Labels each of `members` with the index of its rewrite class, numbering
/// classes in order of their first member.
pub(crate) fn label_classes(
    system: &ThueSystem,
    members: &[Word],
    limits: &Limits,
) -> Result<Vec<u32>> {
    let position: HashMap<&Word, usize> = members.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut labels = vec![UNREACHED; members.len()];
    let mut next = 0;
    for i in 0..members.len() {
        if labels[i] != UNREACHED {
            continue;
        }
        for w in distances_from(system, &members[i], None, limits)?.keys() {
            if let Some(&j) = position.get(w) {
                labels[j] = next;
            }
        }
        next += 1;
    }
    Ok(labels)
}

/// A whole rewrite class as an indexed graph. Members are sorted, so index
/// order is word order.
#[derive(Debug, Clone)]
pub struct ClassGraph {
    words: Vec<Word>,
    index: HashMap<Word, u32>,
    adjacency: Vec<Vec<u32>>,
}

pub(crate) const UNREACHED: u32 = u32::MAX;

impl ClassGraph {
    pub fn build(system: &ThueSystem, seed: &Word, limits: &Limits) -> Result<ClassGraph> {
        check_inputs(system, &[seed])?;
        let mut order: Vec<Word> = vec![seed.clone()];
        let mut tmp: HashMap<Word, u32> = HashMap::from([(seed.clone(), 0)]);
        let mut edges: Vec<Vec<u32>> = Vec::new();
        let mut head = 0;
        while head < order.len() {
            let mut out = Vec::new();
            for n in system.neighbors(&order[head]) {
                let id = match tmp.get(&n) {
                    Some(&id) => id,
                    None => {
                        let id = order.len() as u32;
                        tmp.insert(n.clone(), id);
                        order.push(n);
                        if order.len() > limits.max_states {
                            return Err(cap_error(limits, "building a rewrite class"));
                        }
                        id
                    }
                };
                out.push(id);
            }
            edges.push(out);
            head += 1;
        }
        let mut perm: Vec<u32> = (0..order.len() as u32).collect();
        perm.sort_unstable_by(|&a, &b| order[a as usize].cmp(&order[b as usize]));
        let mut rank = vec![0u32; order.len()];
        for (r, &old) in perm.iter().enumerate() {
            rank[old as usize] = r as u32;
        }
        let adjacency = perm
            .iter()
            .map(|&old| {
                let mut adj: Vec<u32> = edges[old as usize]
                    .iter()
                    .map(|&e| rank[e as usize])
                    .collect();
                adj.sort_unstable();
                adj
            })
            .collect();
        let words: Vec<Word> = perm
            .iter()
            .map(|&old| order[old as usize].clone())
            .collect();
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        Ok(ClassGraph {
            words,
            index,
            adjacency,
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: u32) -> &Word {
        &self.words[i as usize]
    }

    pub fn index_of(&self, w: &Word) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn neighbors(&self, i: u32) -> &[u32] {
        &self.adjacency[i as usize]
    }

    /// Distance from `source` to every member.
    pub fn distances(&self, source: u32) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.len()];
        dist[source as usize] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u as usize];
            for &n in self.neighbors(u) {
                if dist[n as usize] == UNREACHED {
                    dist[n as usize] = d + 1;
                    queue.push_back(n);
                }
            }
        }
        dist
    }

    /// Members within `radius` steps of `source`, with their distances.
    pub fn ball(&self, source: u32, radius: u32) -> HashMap<u32, u32> {
        let mut dist = HashMap::from([(source, 0u32)]);
        let mut frontier = vec![source];
        for d in 1..=radius {
            let mut next = Vec::new();
            for u in frontier {
                for &n in self.neighbors(u) {
                    dist.entry(n).or_insert_with(|| {
                        next.push(n);
                        d
                    });
                }
            }
            frontier = next;
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use proptest::prelude::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn w(t: &ThueSystem, s: &str) -> Word {
        t.alphabet().word(s).unwrap()
    }

    #[test]
    fn reachability_examples() {
        let l = Limits::default();
        let t = presets::ternary_ex0701c();
        assert!(!transforms(&t, &w(&t, "abbcbacb"), &w(&t, "bacbabbc"), &l).unwrap());
        let b = presets::binary_ex1506b();
        assert!(transforms(&b, &w(&b, "abba"), &w(&b, "baab"), &l).unwrap());
        assert!(transforms(&b, &w(&b, "aab"), &w(&b, "aab"), &l).unwrap());
    }

    #[test]
    fn distance_examples() {
        let l = Limits::default();
        let s = presets::salomaa_thue();
        assert_eq!(
            dist(&s, &w(&s, "abbcacb"), &w(&s, "baacbbc"), &l).unwrap(),
            Some(3)
        );
        assert_eq!(dist(&s, &w(&s, "abc"), &w(&s, "abc"), &l).unwrap(), Some(0));
        let r = presets::binary_r1r2();
        assert_eq!(
            dist(&r, &w(&r, "bbaaabaab"), &w(&r, "abbabaaba"), &l).unwrap(),
            Some(3)
        );
        // different Parikh vectors
        assert_eq!(dist(&r, &w(&r, "ab"), &w(&r, "aa"), &l).unwrap(), None);
    }

    #[test]
    fn shortest_path_is_consistent() {
        let l = Limits::default();
        let s = presets::salomaa_thue();
        let path = shortest_path(&s, &w(&s, "abbcacb"), &w(&s, "baacbbc"), &l)
            .unwrap()
            .unwrap();
        assert_eq!(path.len(), 3);
        assert_eq!(path[0].source, w(&s, "abbcacb"));
        assert_eq!(path[2].result, w(&s, "baacbbc"));
        assert!(path.windows(2).all(|p| p[0].result == p[1].source));
        assert_eq!(
            shortest_path(&s, &w(&s, "ab"), &w(&s, "ab"), &l).unwrap(),
            Some(vec![])
        );
    }

    #[test]
    fn classes() {
        let l = Limits::default();
        let t = presets::binary_swap();
        assert_eq!(
            r_class(&t, &w(&t, "ab"), &l).unwrap(),
            [w(&t, "ab"), w(&t, "ba")]
        );
        let c = presets::ternary_ex0701c();
        let class = r_class(&c, &w(&c, "abbcbacb"), &l).unwrap();
        assert!(!class.contains(&w(&c, "bacbabbc")));
        // bounded by the anagram class 8!/(2!4!2!)
        assert!(class.len() <= 420);
        let g = ClassGraph::build(&c, &w(&c, "abbcbacb"), &l).unwrap();
        assert_eq!(g.words(), class.as_slice());
    }

    #[test]
    fn cap_is_enforced() {
        let s = presets::salomaa_thue();
        let tiny = Limits::with_max_states(10);
        let e = r_class(&s, &w(&s, "aabcbaaaccab"), &tiny).unwrap_err();
        assert!(e.is_resource_limit());
        assert!(dist(&s, &w(&s, "aabcbaaaccab"), &w(&s, "baacaaabccba"), &tiny).is_err());
        assert!(ClassGraph::build(&s, &w(&s, "aabcbaaaccab"), &tiny).is_err());
    }

    #[test]
    fn non_preserving_systems_need_the_cap() {
        // a <-> aa generates an infinite class
        let a = crate::words::Alphabet::parse("ab").unwrap();
        let t = ThueSystem::new(
            a.clone(),
            vec![crate::thue::RuleFamily::finite(
                "grow",
                a.word("a").unwrap(),
                a.word("aa").unwrap(),
            )],
        )
        .unwrap();
        assert!(!t.preserves_parikh_vector());
        let l = Limits::with_max_states(1000);
        assert_eq!(dist(&t, &w(&t, "a"), &w(&t, "aaaa"), &l).unwrap(), Some(3));
        assert!(dist(&t, &w(&t, "a"), &w(&t, "b"), &l)
            .unwrap_err()
            .is_resource_limit());
    }

    #[test]
    fn dist_is_a_metric_on_sampled_classes() {
        let l = Limits::default();
        let s = presets::salomaa_thue();
        let g = ClassGraph::build(&s, &w(&s, "abbcacb"), &l).unwrap();
        let rows: Vec<Vec<u32>> = (0..g.len() as u32).map(|i| g.distances(i)).collect();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..2000 {
            let (x, y, z) = (
                rng.gen_range(0..g.len()),
                rng.gen_range(0..g.len()),
                rng.gen_range(0..g.len()),
            );
            assert_eq!(rows[x][y] == 0, x == y);
            assert_eq!(rows[x][y], rows[y][x]);
            assert!(rows[x][z] <= rows[x][y] + rows[y][z]);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn bidirectional_agrees_with_bfs(
            a in proptest::collection::vec(0u8..3, 0..9),
            seed in any::<u64>(),
        ) {
            let s = presets::salomaa_thue();
            let l = Limits::default();
            let w = Word::from_letters(a.clone());
            // a random anagram of w, often in the same class
            let mut shuffled = a;
            let mut rng = StdRng::seed_from_u64(seed);
            for i in (1..shuffled.len()).rev() {
                shuffled.swap(i, rng.gen_range(0..=i));
            }
            let target = Word::from_letters(shuffled);
            let plain = dist(&s, &w, &target, &l).unwrap();
            prop_assert_eq!(plain, dist_bidirectional(&s, &w, &target, &l).unwrap());
            prop_assert_eq!(plain.is_some(), transforms(&s, &w, &target, &l).unwrap());
            let g = ClassGraph::build(&s, &w, &l).unwrap();
            let via_graph = g.index_of(&target).map(|t| g.distances(g.index_of(&w).unwrap())[t as usize] as usize);
            prop_assert_eq!(plain, via_graph);
        }
    }
}
