use crate::braid::{words_equal, BraidWord};
use crate::coxeter::{CoxeterGraph, GeneratorId, GeneratorSet, Label};

use super::word::{free_reduce, ArtinWord};

/// Decides equality of words in one fixed Artin group.
pub trait EqualityOracle: Send + Sync {
    fn name(&self) -> &'static str;

    fn equal(&self, a: &ArtinWord, b: &ArtinWord) -> bool;

    /// Whether `w` represents an element of `A_T`, when the oracle can tell.
    fn member(&self, _w: &ArtinWord, _target: GeneratorSet) -> Option<bool> {
        None
    }
}

/// Free reduction; exact when every label is `∞`.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeGroupOracle;

impl FreeGroupOracle {
    pub fn new(graph: &CoxeterGraph) -> Option<Self> {
        graph.is_free().then_some(FreeGroupOracle)
    }
}

impl EqualityOracle for FreeGroupOracle {
    fn name(&self) -> &'static str {
        "free-reduce"
    }

    fn equal(&self, a: &ArtinWord, b: &ArtinWord) -> bool {
        free_reduce(&a.concat(&b.inverse())).is_empty()
    }

    fn member(&self, w: &ArtinWord, target: GeneratorSet) -> Option<bool> {
        Some(free_reduce(w).lies_in(target))
    }
}

/// Garside normal forms in `B_{n+1}`, for a graph that is a path of `3`s on `n`
/// generators (all other labels `2`).
#[derive(Clone, Debug)]
pub struct BraidOracle {
    /// 1-based braid generator index of each Coxeter generator.
    position: Vec<usize>,
}

impl BraidOracle {
    pub fn new(graph: &CoxeterGraph) -> Option<Self> {
        let n = graph.rank();
        let mut adjacent: Vec<Vec<GeneratorId>> = vec![Vec::new(); n];
        for s in graph.generators() {
            for t in graph.generators().filter(|&t| t > s) {
                match graph.label(s, t) {
                    Label::Finite(2) => {}
                    Label::Finite(3) => {
                        adjacent[s.index()].push(t);
                        adjacent[t.index()].push(s);
                    }
                    _ => return None,
                }
            }
        }
        if n == 0 {
            return Some(BraidOracle { position: Vec::new() });
        }
        let edges: usize = adjacent.iter().map(Vec::len).sum::<usize>() / 2;
        if edges != n - 1 || adjacent.iter().any(|a| a.len() > 2) {
            return None;
        }
        let start = graph.generators().find(|s| adjacent[s.index()].len() <= 1)?;
        let mut position = vec![0; n];
        let mut prev: Option<GeneratorId> = None;
        let mut cur = start;
        for k in 1..=n {
            position[cur.index()] = k;
            let next = adjacent[cur.index()].iter().copied().find(|&t| Some(t) != prev);
            match next {
                Some(t) => {
                    prev = Some(cur);
                    cur = t;
                }
                None if k == n => {}
                None => return None,
            }
        }
        Some(BraidOracle { position })
    }

    pub fn strands(&self) -> usize {
        self.position.len() + 1
    }

    /// Braid generator index assigned to `s`.
    pub fn index_of(&self, s: GeneratorId) -> usize {
        self.position[s.index()]
    }

    pub fn to_braid(&self, w: &ArtinWord) -> BraidWord {
        let letters = w.0.iter().map(|l| (self.position[l.generator.index()], l.sign)).collect();
        BraidWord::new(self.strands(), letters).expect("positions lie in 1..n")
    }
}

impl EqualityOracle for BraidOracle {
    fn name(&self) -> &'static str {
        "garside"
    }

    fn equal(&self, a: &ArtinWord, b: &ArtinWord) -> bool {
        words_equal(&self.to_braid(a), &self.to_braid(b))
    }
}

/// The exact oracle available for this graph, if any.
pub fn oracle_for(graph: &CoxeterGraph) -> Option<Box<dyn EqualityOracle>> {
    if let Some(o) = FreeGroupOracle::new(graph) {
        return Some(Box::new(o));
    }
    BraidOracle::new(graph).map(|o| Box::new(o) as Box<dyn EqualityOracle>)
}
