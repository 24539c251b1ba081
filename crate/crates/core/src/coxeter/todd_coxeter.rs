//! Coset enumeration of `W` over the trivial subgroup (HLT strategy with
//! coincidence processing), followed by a breadth-first walk of the resulting
//! Cayley graph that assigns ShortLex normal forms.

use std::collections::{HashMap, VecDeque};

use super::graph::{CoxeterGraph, CoxeterWord, GeneratorId};
use super::CoxeterError;

const UNDEFINED: u32 = u32::MAX;

/// Complete right and left multiplication tables of a finite Coxeter group.
#[derive(Debug)]
pub struct MultiplicationTable {
    rank: usize,
    /// Normal forms in breadth-first (ShortLex) order; index 0 is the identity.
    words: Vec<CoxeterWord>,
    index: HashMap<CoxeterWord, u32>,
    right: Vec<u32>,
    left: Vec<u32>,
}

impl MultiplicationTable {
    /// Enumerates `W`, failing once more than `max_elements` elements are found.
    pub fn build(graph: &CoxeterGraph, max_elements: usize) -> Result<Self, CoxeterError> {
        let rank = graph.rank();
        let mut relators: Vec<Vec<usize>> = Vec::new();
        for s in graph.generators() {
            for t in graph.generators().filter(|&t| t > s) {
                if let Some(m) = graph.label(s, t).finite() {
                    relators.push(
                        (0..2 * m as usize)
                            .map(|i| if i % 2 == 0 { s.index() } else { t.index() })
                            .collect(),
                    );
                }
            }
        }
        // Intermediate coset counts may exceed the final index.
        let work_limit = max_elements.saturating_mul(8).max(1024);
        let cosets = CosetTable::enumerate(rank, &relators, work_limit)
            .ok_or(CoxeterError::ElementBound(max_elements))?;
        if cosets.len() / rank.max(1) > max_elements {
            return Err(CoxeterError::ElementBound(max_elements));
        }
        Ok(Self::from_cayley_graph(rank, &cosets))
    }

    fn from_cayley_graph(rank: usize, cosets: &[u32]) -> Self {
        let count = cosets.len().checked_div(rank).unwrap_or(1);
        // Breadth-first from the identity, generators tried in declaration order:
        // the first discovery of each vertex spells its ShortLex-least geodesic.
        let mut order = vec![UNDEFINED; count];
        let mut words = Vec::with_capacity(count);
        let mut queue = VecDeque::from([0usize]);
        order[0] = 0;
        words.push(CoxeterWord::empty());
        while let Some(c) = queue.pop_front() {
            let base = words[order[c] as usize].clone();
            for g in 0..rank {
                let d = cosets[c * rank + g] as usize;
                if order[d] == UNDEFINED {
                    order[d] = words.len() as u32;
                    let mut w = base.clone();
                    w.0.push(GeneratorId(g as u8));
                    words.push(w);
                    queue.push_back(d);
                }
            }
        }
        let mut right = vec![0u32; count * rank];
        for c in 0..count {
            for g in 0..rank {
                right[order[c] as usize * rank + g] = order[cosets[c * rank + g] as usize];
            }
        }
        let index: HashMap<CoxeterWord, u32> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();
        // s·(w r) = (s·w)·r, filled in breadth-first order.
        let mut left = vec![0u32; count * rank];
        left[..rank].copy_from_slice(&right[..rank]);
        for i in 1..count {
            let word = &words[i];
            let (&last, prefix) = word.0.split_last().expect("non-identity");
            let p = index[&CoxeterWord(prefix.to_vec())] as usize;
            for g in 0..rank {
                let sp = left[p * rank + g] as usize;
                left[i * rank + g] = right[sp * rank + last.index()];
            }
        }
        MultiplicationTable {
            rank,
            words,
            index,
            right,
            left,
        }
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn word(&self, i: u32) -> &CoxeterWord {
        &self.words[i as usize]
    }

    pub fn words(&self) -> &[CoxeterWord] {
        &self.words
    }

    pub fn index_of(&self, word: &CoxeterWord) -> Option<u32> {
        self.index.get(word).copied()
    }

    pub fn right_mul(&self, i: u32, s: GeneratorId) -> u32 {
        self.right[i as usize * self.rank + s.index()]
    }

    pub fn left_mul(&self, s: GeneratorId, i: u32) -> u32 {
        self.left[i as usize * self.rank + s.index()]
    }
}

struct CosetTable {
    rank: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    queue: VecDeque<u32>,
    limit: usize,
}

impl CosetTable {
    /// Returns the compressed table (`len = index * rank`) or `None` past `limit`.
    fn enumerate(rank: usize, relators: &[Vec<usize>], limit: usize) -> Option<Vec<u32>> {
        let mut ct = CosetTable {
            rank,
            table: vec![UNDEFINED; rank],
            forward: vec![0],
            queue: VecDeque::new(),
            limit,
        };
        let mut c = 0;
        while c < ct.forward.len() {
            for rel in relators {
                if !ct.is_live(c) {
                    break;
                }
                ct.scan_and_fill(c as u32, rel)?;
            }
            for g in 0..rank {
                if !ct.is_live(c) {
                    break;
                }
                if ct.get(c as u32, g) == UNDEFINED {
                    ct.define(c as u32, g)?;
                }
            }
            c += 1;
        }
        Some(ct.compress())
    }

    fn is_live(&self, c: usize) -> bool {
        self.forward[c] == c as u32
    }

    fn get(&self, c: u32, g: usize) -> u32 {
        self.table[c as usize * self.rank + g]
    }

    fn set(&mut self, c: u32, g: usize, d: u32) {
        self.table[c as usize * self.rank + g] = d;
    }

    fn define(&mut self, c: u32, g: usize) -> Option<()> {
        let fresh = self.forward.len() as u32;
        if fresh as usize >= self.limit {
            return None;
        }
        self.forward.push(fresh);
        self.table.extend(std::iter::repeat_n(UNDEFINED, self.rank));
        self.set(c, g, fresh);
        self.set(fresh, g, c);
        Some(())
    }

    fn scan_and_fill(&mut self, c: u32, rel: &[usize]) -> Option<()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, rel.len() as isize - 1);
        loop {
            while i as isize <= j && self.get(f, rel[i]) != UNDEFINED {
                f = self.get(f, rel[i]);
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j >= i as isize && self.get(b, rel[j as usize]) != UNDEFINED {
                b = self.get(b, rel[j as usize]);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Some(());
            } else if j == i as isize {
                // Deduction; generators are involutions.
                self.set(f, rel[i], b);
                self.set(b, rel[i], f);
                return Some(());
            } else {
                self.define(f, rel[i])?;
            }
        }
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut cur = c;
        while self.forward[cur as usize] != root {
            let next = self.forward[cur as usize];
            self.forward[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.forward[hi as usize] = lo;
            self.queue.push_back(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop_front() {
            for g in 0..self.rank {
                let d = self.get(dead, g);
                if d == UNDEFINED {
                    continue;
                }
                if self.get(d, g) == dead {
                    self.set(d, g, UNDEFINED);
                }
                let (mu, nu) = (self.rep(dead), self.rep(d));
                let mu_g = self.get(mu, g);
                let nu_g = self.get(nu, g);
                if mu_g != UNDEFINED {
                    self.merge(nu, mu_g);
                } else if nu_g != UNDEFINED {
                    self.merge(mu, nu_g);
                } else {
                    self.set(mu, g, nu);
                    self.set(nu, g, mu);
                }
            }
        }
    }

    fn compress(mut self) -> Vec<u32> {
        let n = self.forward.len();
        let mut renumber = vec![UNDEFINED; n];
        let mut live = 0u32;
        for (c, slot) in renumber.iter_mut().enumerate() {
            if self.is_live(c) {
                *slot = live;
                live += 1;
            }
        }
        let mut out = Vec::with_capacity(live as usize * self.rank);
        for c in 0..n {
            if self.is_live(c) {
                for g in 0..self.rank {
                    let d = self.get(c as u32, g);
                    let d = self.rep(d);
                    out.push(renumber[d as usize]);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::graph::Label;

    fn order(text: &str) -> usize {
        let g = CoxeterGraph::parse(text).unwrap();
        MultiplicationTable::build(&g, 200_000).unwrap().len()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order("gens: s"), 2);
        assert_eq!(order("gens: s t"), 4);
        assert_eq!(order("gens: s t\nedge: s t 3"), 6);
        assert_eq!(order("gens: a b c\nedge: a b 3\nedge: b c 3"), 24);
        assert_eq!(order("gens: a b c\nedge: a b 4\nedge: b c 3"), 48);
        assert_eq!(order("gens: a b c\nedge: a b 5\nedge: b c 3"), 120);
        assert_eq!(order("gens: a b c d\nedge: a b 3\nedge: b c 4\nedge: c d 3"), 1152);
    }

    #[test]
    fn bound_is_enforced() {
        let g = CoxeterGraph::type_a(5).unwrap();
        assert!(matches!(
            MultiplicationTable::build(&g, 100),
            Err(CoxeterError::ElementBound(100))
        ));
    }

    #[test]
    fn left_and_right_tables_agree_with_words() {
        let g = CoxeterGraph::dihedral(Label::Finite(4)).unwrap();
        let t = MultiplicationTable::build(&g, 100).unwrap();
        for i in 0..t.len() as u32 {
            for s in g.generators() {
                let a = t.left_mul(s, t.right_mul(i, s));
                let b = t.right_mul(t.left_mul(s, i), s);
                assert_eq!(a, b);
                assert_eq!(t.right_mul(t.right_mul(i, s), s), i);
                assert_eq!(t.left_mul(s, t.left_mul(s, i)), i);
            }
        }
        assert_eq!(t.word(t.len() as u32 - 1).len(), 4);
    }
}
