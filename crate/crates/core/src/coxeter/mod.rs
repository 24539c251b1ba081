//! Coxeter systems `(W, S)`: exact word problem, lengths, descents,
//! parabolic and double-coset decompositions.
//!
//! Elements are kept as ShortLex normal forms (least geodesic under the
//! declared generator order). Finite groups within the element bound are
//! enumerated once into complete multiplication tables; everything else goes
//! through a braid-move orbit search with a memo cache.

mod classify;
mod graph;
mod tits;
mod todd_coxeter;

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use classify::{classify, finite_order, is_finite_type, FiniteType};
pub use graph::{
    alternating_word, CoxeterGraph, CoxeterWord, GeneratorId, GeneratorSet, Label, MAX_GENERATORS,
};

use tits::TitsEngine;
use todd_coxeter::MultiplicationTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("invalid label `{0}`: expected an integer >= 2 or `inf`")]
    InvalidLabel(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("{0} generators declared, at most 64 are supported")]
    TooManyGenerators(usize),
    #[error("generator index {0} out of range")]
    UnknownGeneratorId(u8),
    #[error("the two generators must be distinct")]
    SameGenerator,
    #[error("elements belong to different Coxeter graphs")]
    MismatchedGraphs,
    #[error("the Coxeter group is infinite")]
    InfiniteType,
    #[error("more than {0} elements")]
    ElementBound(usize),
    #[error("braid-move orbit exceeds {0} words")]
    OrbitBound(usize),
}

/// Size limits for enumeration and orbit search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_elements: usize,
    pub max_orbit: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_elements: 200_000,
            max_orbit: 200_000,
        }
    }
}

/// An element of `W`, stored as its ShortLex normal form.
///
/// Ordering is ShortLex on the normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterElement {
    graph: u64,
    normal_form: CoxeterWord,
}

impl CoxeterElement {
    pub fn normal_form(&self) -> &CoxeterWord {
        &self.normal_form
    }

    pub fn length(&self) -> usize {
        self.normal_form.len()
    }

    pub fn is_identity(&self) -> bool {
        self.normal_form.is_empty()
    }

    /// Whether the element lies in `W_T` (every reduced expression has the same support).
    pub fn lies_in(&self, set: GeneratorSet) -> bool {
        self.normal_form.support().is_subset(set)
    }

    /// Fingerprint of the graph this element belongs to.
    pub fn graph_fingerprint(&self) -> u64 {
        self.graph
    }
}

impl Ord for CoxeterElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.normal_form
            .len()
            .cmp(&other.normal_form.len())
            .then_with(|| self.normal_form.cmp(&other.normal_form))
            .then_with(|| self.graph.cmp(&other.graph))
    }
}

impl PartialOrd for CoxeterElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

enum Engine {
    Table(MultiplicationTable),
    Tits(TitsEngine),
}

struct Inner {
    graph: CoxeterGraph,
    fingerprint: u64,
    bounds: Bounds,
    engine: Engine,
}

/// A Coxeter graph together with its word-problem engine. Cheap to clone and
/// safe to share between threads.
#[derive(Clone)]
pub struct CoxeterSystem {
    inner: Arc<Inner>,
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("graph", &self.inner.graph)
            .field("enumerated", &self.is_enumerated())
            .finish()
    }
}

impl CoxeterSystem {
    pub fn new(graph: CoxeterGraph) -> Result<Self, CoxeterError> {
        Self::with_bounds(graph, Bounds::default())
    }

    pub fn with_bounds(graph: CoxeterGraph, bounds: Bounds) -> Result<Self, CoxeterError> {
        let fits = finite_order(&graph, graph.all())
            .is_some_and(|order| order <= bounds.max_elements as u128);
        let engine = if fits {
            Engine::Table(MultiplicationTable::build(&graph, bounds.max_elements)?)
        } else {
            Engine::Tits(TitsEngine::new(&graph, bounds.max_orbit))
        };
        Ok(CoxeterSystem {
            inner: Arc::new(Inner {
                fingerprint: graph.fingerprint(),
                graph,
                bounds,
                engine,
            }),
        })
    }

    /// Same graph, word problem solved by orbit search even when finite.
    pub fn without_table(graph: CoxeterGraph, bounds: Bounds) -> Self {
        CoxeterSystem {
            inner: Arc::new(Inner {
                fingerprint: graph.fingerprint(),
                engine: Engine::Tits(TitsEngine::new(&graph, bounds.max_orbit)),
                graph,
                bounds,
            }),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CoxeterError> {
        Self::new(CoxeterGraph::parse(text)?)
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.inner.graph
    }

    pub fn bounds(&self) -> Bounds {
        self.inner.bounds
    }

    pub fn rank(&self) -> usize {
        self.inner.graph.rank()
    }

    pub fn all(&self) -> GeneratorSet {
        self.inner.graph.all()
    }

    /// Whether a complete multiplication table backs this system.
    pub fn is_enumerated(&self) -> bool {
        matches!(self.inner.engine, Engine::Table(_))
    }

    pub fn is_finite_type(&self, set: GeneratorSet) -> bool {
        is_finite_type(&self.inner.graph, set)
    }

    fn element(&self, normal_form: CoxeterWord) -> CoxeterElement {
        CoxeterElement {
            graph: self.inner.fingerprint,
            normal_form,
        }
    }

    fn check(&self, e: &CoxeterElement) -> Result<(), CoxeterError> {
        if e.graph == self.inner.fingerprint {
            Ok(())
        } else {
            Err(CoxeterError::MismatchedGraphs)
        }
    }

    fn check_generator(&self, s: GeneratorId) -> Result<(), CoxeterError> {
        if s.index() < self.rank() {
            Ok(())
        } else {
            Err(CoxeterError::UnknownGeneratorId(s.0))
        }
    }

    pub fn identity(&self) -> CoxeterElement {
        self.element(CoxeterWord::empty())
    }

    pub fn generator(&self, s: GeneratorId) -> Result<CoxeterElement, CoxeterError> {
        self.check_generator(s)?;
        Ok(self.element(CoxeterWord(vec![s])))
    }

    pub fn parse_word(&self, text: &str) -> Result<CoxeterWord, CoxeterError> {
        self.inner.graph.parse_word(text)
    }

    pub fn format(&self, e: &CoxeterElement) -> String {
        self.inner.graph.format_word(&e.normal_form)
    }

    /// `e · s`.
    pub fn mul_generator(&self, e: &CoxeterElement, s: GeneratorId) -> Result<CoxeterElement, CoxeterError> {
        self.check(e)?;
        self.check_generator(s)?;
        let nf = match &self.inner.engine {
            Engine::Table(table) => {
                let i = table.index_of(&e.normal_form).ok_or(CoxeterError::MismatchedGraphs)?;
                table.word(table.right_mul(i, s)).clone()
            }
            Engine::Tits(tits) => tits.right_mul(&e.normal_form, s)?,
        };
        Ok(self.element(nf))
    }

    /// `s · e`.
    pub fn generator_mul(&self, s: GeneratorId, e: &CoxeterElement) -> Result<CoxeterElement, CoxeterError> {
        self.check(e)?;
        self.check_generator(s)?;
        let nf = match &self.inner.engine {
            Engine::Table(table) => {
                let i = table.index_of(&e.normal_form).ok_or(CoxeterError::MismatchedGraphs)?;
                table.word(table.left_mul(s, i)).clone()
            }
            Engine::Tits(tits) => tits.left_mul(s, &e.normal_form)?,
        };
        Ok(self.element(nf))
    }

    /// The element represented by `word`.
    pub fn normalize(&self, word: &CoxeterWord) -> Result<CoxeterElement, CoxeterError> {
        self.inner.graph.check_word(word)?;
        word.0
            .iter()
            .try_fold(self.identity(), |acc, &s| self.mul_generator(&acc, s))
    }

    pub fn multiply(&self, a: &CoxeterElement, b: &CoxeterElement) -> Result<CoxeterElement, CoxeterError> {
        self.check(a)?;
        self.check(b)?;
        b.normal_form
            .0
            .iter()
            .try_fold(a.clone(), |acc, &s| self.mul_generator(&acc, s))
    }

    pub fn invert(&self, e: &CoxeterElement) -> Result<CoxeterElement, CoxeterError> {
        self.check(e)?;
        let reversed = e.normal_form.reversed();
        match &self.inner.engine {
            Engine::Table(_) => self.normalize(&reversed),
            // The reversed normal form is already reduced.
            Engine::Tits(tits) => Ok(self.element(tits.canonical(&reversed.0)?)),
        }
    }

    pub fn length(&self, e: &CoxeterElement) -> usize {
        e.length()
    }

    /// `u · s · u^{-1}`.
    pub fn conjugate(&self, u: &CoxeterElement, s: GeneratorId) -> Result<CoxeterElement, CoxeterError> {
        let us = self.mul_generator(u, s)?;
        self.multiply(&us, &self.invert(u)?)
    }

    /// Generators `s` with `lg(s·e) < lg(e)`.
    pub fn left_descents(&self, e: &CoxeterElement) -> Result<GeneratorSet, CoxeterError> {
        let mut out = GeneratorSet::EMPTY;
        for s in self.inner.graph.generators() {
            if self.generator_mul(s, e)?.length() < e.length() {
                out.insert(s);
            }
        }
        Ok(out)
    }

    /// Generators `s` with `lg(e·s) < lg(e)`.
    pub fn right_descents(&self, e: &CoxeterElement) -> Result<GeneratorSet, CoxeterError> {
        let mut out = GeneratorSet::EMPTY;
        for s in self.inner.graph.generators() {
            if self.mul_generator(e, s)?.length() < e.length() {
                out.insert(s);
            }
        }
        Ok(out)
    }

    fn first_left_descent_in(&self, e: &CoxeterElement, set: GeneratorSet) -> Result<Option<(GeneratorId, CoxeterElement)>, CoxeterError> {
        for s in set.iter() {
            let se = self.generator_mul(s, e)?;
            if se.length() < e.length() {
                return Ok(Some((s, se)));
            }
        }
        Ok(None)
    }

    fn first_right_descent_in(&self, e: &CoxeterElement, set: GeneratorSet) -> Result<Option<(GeneratorId, CoxeterElement)>, CoxeterError> {
        for s in set.iter() {
            let es = self.mul_generator(e, s)?;
            if es.length() < e.length() {
                return Ok(Some((s, es)));
            }
        }
        Ok(None)
    }

    /// Writes `e = u0 · u1` with `u0 ∈ W_T` and `u1` of minimal length in `W_T e`.
    pub fn parabolic_decompose(
        &self,
        e: &CoxeterElement,
        target: GeneratorSet,
    ) -> Result<(CoxeterElement, CoxeterElement), CoxeterError> {
        self.check(e)?;
        let target = target.intersection(self.all());
        let mut stripped = Vec::new();
        let mut rest = e.clone();
        while let Some((s, shorter)) = self.first_left_descent_in(&rest, target)? {
            stripped.push(s);
            rest = shorter;
        }
        let u0 = self.normalize(&CoxeterWord(stripped))?;
        Ok((u0, rest))
    }

    /// No left descent in `x` and no right descent in `y`.
    pub fn is_double_coset_minimal(
        &self,
        e: &CoxeterElement,
        x: GeneratorSet,
        y: GeneratorSet,
    ) -> Result<bool, CoxeterError> {
        self.check(e)?;
        Ok(self.first_left_descent_in(e, x)?.is_none()
            && self.first_right_descent_in(e, y)?.is_none())
    }

    /// The unique element of minimal length in `W_X · e · W_Y`.
    pub fn double_coset_minimal_rep(
        &self,
        e: &CoxeterElement,
        x: GeneratorSet,
        y: GeneratorSet,
    ) -> Result<CoxeterElement, CoxeterError> {
        self.check(e)?;
        let mut cur = e.clone();
        loop {
            if let Some((_, shorter)) = self.first_left_descent_in(&cur, x)? {
                cur = shorter;
            } else if let Some((_, shorter)) = self.first_right_descent_in(&cur, y)? {
                cur = shorter;
            } else {
                return Ok(cur);
            }
        }
    }

    /// The generator equal to `u · s · u^{-1}`, if that conjugate is a generator.
    pub fn conjugate_into_generators(
        &self,
        u: &CoxeterElement,
        s: GeneratorId,
    ) -> Result<Option<GeneratorId>, CoxeterError> {
        let c = self.conjugate(u, s)?;
        Ok(match c.normal_form.0[..] {
            [t] => Some(t),
            _ => None,
        })
    }

    /// Every element of `W` in breadth-first (ShortLex) order.
    pub fn enumerate(&self) -> Result<Vec<CoxeterElement>, CoxeterError> {
        if !self.is_finite_type(self.all()) {
            return Err(CoxeterError::InfiniteType);
        }
        match &self.inner.engine {
            Engine::Table(table) => Ok(table
                .words()
                .iter()
                .map(|w| self.element(w.clone()))
                .collect()),
            Engine::Tits(_) => self.parabolic_elements(self.all()),
        }
    }

    /// Every element of the finite parabolic subgroup `W_X`, breadth-first.
    pub fn parabolic_elements(&self, set: GeneratorSet) -> Result<Vec<CoxeterElement>, CoxeterError> {
        if !self.is_finite_type(set) {
            return Err(CoxeterError::InfiniteType);
        }
        self.breadth_first(set, usize::MAX)
    }

    /// Elements of length at most `radius`, breadth-first.
    pub fn ball(&self, radius: usize) -> Result<Vec<CoxeterElement>, CoxeterError> {
        self.breadth_first(self.all(), radius)
    }

    fn breadth_first(&self, set: GeneratorSet, radius: usize) -> Result<Vec<CoxeterElement>, CoxeterError> {
        let bound = self.inner.bounds.max_elements;
        let mut seen: HashSet<CoxeterElement> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(self.identity());
        queue.push_back(self.identity());
        while let Some(e) = queue.pop_front() {
            let grow = e.length() < radius;
            if grow {
                for s in set.iter() {
                    let es = self.mul_generator(&e, s)?;
                    if !seen.contains(&es) {
                        if seen.len() >= bound {
                            return Err(CoxeterError::ElementBound(bound));
                        }
                        seen.insert(es.clone());
                        queue.push_back(es);
                    }
                }
            }
            out.push(e);
        }
        Ok(out)
    }

    /// All spherical subsets `X ⊆ S` (those with `W_X` finite), by size then bits.
    pub fn spherical_subsets(&self) -> Vec<GeneratorSet> {
        let mut out: Vec<GeneratorSet> = self
            .all()
            .subsets()
            .filter(|&x| self.is_finite_type(x))
            .collect();
        out.sort_by_key(|x| (x.len(), x.0));
        out
    }
}
