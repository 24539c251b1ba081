//! Word problem for arbitrary Coxeter groups by exploring braid-move orbits.
//!
//! A word is reduced iff no word reachable from it by braid moves contains
//! two equal adjacent letters, and the braid-move orbit of a reduced word is
//! the set of all reduced expressions of its element. The ShortLex normal
//! form is the lexicographic minimum of that orbit.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::RwLock;

use super::graph::{CoxeterGraph, CoxeterWord, GeneratorId};
use super::CoxeterError;

const CACHE_LIMIT: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Side {
    Left,
    Right,
}

#[derive(Debug)]
pub struct TitsEngine {
    rank: usize,
    /// `m_{s,t}` for `s != t`, `0` for infinity.
    labels: Vec<u32>,
    max_orbit: usize,
    cache: RwLock<HashMap<(CoxeterWord, GeneratorId, Side), CoxeterWord>>,
}

impl TitsEngine {
    pub fn new(graph: &CoxeterGraph, max_orbit: usize) -> Self {
        let rank = graph.rank();
        let mut labels = vec![0; rank * rank];
        for s in graph.generators() {
            for t in graph.generators() {
                labels[s.index() * rank + t.index()] = graph.label(s, t).finite().unwrap_or(0);
            }
        }
        TitsEngine {
            rank,
            labels,
            max_orbit,
            cache: RwLock::new(HashMap::new()),
        }
    }

    fn label(&self, s: GeneratorId, t: GeneratorId) -> usize {
        self.labels[s.index() * self.rank + t.index()] as usize
    }

    /// Calls `visit` on every word in the braid-move orbit of `start`, stopping
    /// early when it returns `true`. Returns the orbit explored so far.
    fn explore(
        &self,
        start: &[GeneratorId],
        mut visit: impl FnMut(&[GeneratorId]) -> bool,
    ) -> Result<(HashSet<Vec<GeneratorId>>, bool), CoxeterError> {
        let mut seen: HashSet<Vec<GeneratorId>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start.to_vec());
        if visit(start) {
            return Ok((seen, true));
        }
        queue.push_back(start.to_vec());
        while let Some(word) = queue.pop_front() {
            for i in 0..word.len().saturating_sub(1) {
                let (a, b) = (word[i], word[i + 1]);
                if a == b {
                    continue;
                }
                let m = self.label(a, b);
                if m < 2 || i + m > word.len() {
                    continue;
                }
                let alternates = word[i..i + m]
                    .iter()
                    .enumerate()
                    .all(|(k, &x)| x == if k % 2 == 0 { a } else { b });
                if !alternates {
                    continue;
                }
                let mut next = word.clone();
                for (k, x) in next[i..i + m].iter_mut().enumerate() {
                    *x = if k % 2 == 0 { b } else { a };
                }
                if seen.contains(&next) {
                    continue;
                }
                if seen.len() >= self.max_orbit {
                    return Err(CoxeterError::OrbitBound(self.max_orbit));
                }
                if visit(&next) {
                    seen.insert(next);
                    return Ok((seen, true));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        Ok((seen, false))
    }

    /// ShortLex normal form of a word already known to be reduced.
    pub fn canonical(&self, reduced: &[GeneratorId]) -> Result<CoxeterWord, CoxeterError> {
        let (orbit, _) = self.explore(reduced, |_| false)?;
        Ok(CoxeterWord(
            orbit.into_iter().min().expect("orbit contains its start"),
        ))
    }

    /// Normal form of `word` when `word` has at most one cancellation, i.e.
    /// `word` is a reduced word times one generator.
    fn reduce_once(&self, word: Vec<GeneratorId>) -> Result<CoxeterWord, CoxeterError> {
        let mut square_at = None;
        let (orbit, found) = self.explore(&word, |w| {
            square_at = w.windows(2).position(|p| p[0] == p[1]).map(|j| (w.to_vec(), j));
            square_at.is_some()
        })?;
        if found {
            let (mut w, j) = square_at.expect("set when found");
            w.drain(j..j + 2);
            self.canonical(&w)
        } else {
            Ok(CoxeterWord(orbit.into_iter().min().expect("non-empty orbit")))
        }
    }

    fn cached(
        &self,
        key: (CoxeterWord, GeneratorId, Side),
        compute: impl FnOnce() -> Result<CoxeterWord, CoxeterError>,
    ) -> Result<CoxeterWord, CoxeterError> {
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let value = compute()?;
        let mut cache = self.cache.write().expect("cache lock");
        if cache.len() >= CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, value.clone());
        Ok(value)
    }

    /// Normal form of `nf · s`.
    pub fn right_mul(&self, nf: &CoxeterWord, s: GeneratorId) -> Result<CoxeterWord, CoxeterError> {
        self.cached((nf.clone(), s, Side::Right), || {
            let mut word = nf.0.clone();
            word.push(s);
            self.reduce_once(word)
        })
    }

    /// Normal form of `s · nf`.
    pub fn left_mul(&self, s: GeneratorId, nf: &CoxeterWord) -> Result<CoxeterWord, CoxeterError> {
        self.cached((nf.clone(), s, Side::Left), || {
            let mut word = Vec::with_capacity(nf.len() + 1);
            word.push(s);
            word.extend_from_slice(&nf.0);
            self.reduce_once(word)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::graph::Label;

    fn g(i: u8) -> GeneratorId {
        GeneratorId(i)
    }

    #[test]
    fn dihedral_three_normal_forms() {
        let graph = CoxeterGraph::dihedral(Label::Finite(3)).unwrap();
        let e = TitsEngine::new(&graph, 1000);
        // s t s t = t s
        let mut w = CoxeterWord::empty();
        for s in [0, 1, 0, 1] {
            w = e.right_mul(&w, g(s)).unwrap();
        }
        assert_eq!(w.0, vec![g(1), g(0)]);
        // t s t -> s t s
        assert_eq!(e.canonical(&[g(1), g(0), g(1)]).unwrap().0, vec![g(0), g(1), g(0)]);
        assert_eq!(e.left_mul(g(0), &CoxeterWord(vec![g(0)])).unwrap(), CoxeterWord::empty());
    }

    #[test]
    fn orbit_bound_is_reported() {
        // (Z/2)^6: the word a b c d e f has 720 reduced expressions.
        let graph = CoxeterGraph::new(["a", "b", "c", "d", "e", "f"]).unwrap();
        let e = TitsEngine::new(&graph, 100);
        let word: Vec<GeneratorId> = (0..6).map(g).collect();
        assert!(matches!(e.canonical(&word), Err(CoxeterError::OrbitBound(100))));
        let e = TitsEngine::new(&graph, 1000);
        assert_eq!(e.canonical(&word).unwrap().0, word);
    }

    #[test]
    fn infinite_label_has_no_moves() {
        let graph = CoxeterGraph::dihedral(Label::Infinite).unwrap();
        let e = TitsEngine::new(&graph, 10);
        let word: Vec<GeneratorId> = [0, 1, 0, 1, 0, 1, 0, 1].into_iter().map(g).collect();
        assert_eq!(e.canonical(&word).unwrap().0, word);
        let mut nf = CoxeterWord(word.clone());
        nf = e.right_mul(&nf, g(1)).unwrap();
        assert_eq!(nf.len(), 7);
    }
}
