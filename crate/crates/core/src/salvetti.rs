//! The Salvetti poset `(W × S^f, ⪯)` of a Coxeter graph and its cell
//! combinatorics, together with the inclusion of a standard parabolic
//! sub-poset and the retraction back onto it.
//!
//! A node `(u, X)` stands for the cell `B(u, X)`, a Coxeter cell of dimension
//! `|X|` whose faces are the nodes below it. Vertices are `x(u) = (u, ∅)` and
//! edges `a(u, s) = (u, {s})`, oriented from `x(u)` to `x(us)`.

use std::collections::BTreeSet;
use std::fmt::Write;

use thiserror::Error;

use crate::coxeter::{
    alternating_word, CoxeterElement, CoxeterError, CoxeterSystem, GeneratorId, GeneratorSet,
    Label,
};
use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SalvettiError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("W_X is infinite for X = {0:#b}")]
    NotSpherical(u64),
    #[error("m_{{s,t}} is infinite, there is no 2-cell")]
    InfiniteLabel,
    #[error("node is not in the parabolic sub-poset")]
    OutsideParabolic,
    #[error("W is infinite; give a length bound")]
    Unbounded,
}

/// A pair `(u, X)` with `W_X` finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetNode {
    pub u: CoxeterElement,
    pub x: GeneratorSet,
}

/// The edge `a(u, s)` from `x(u)` to `x(us)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedEdge {
    pub u: CoxeterElement,
    pub s: GeneratorId,
}

/// Image of an edge under the retraction: an edge or a collapsed vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeImage {
    Edge(OrientedEdge),
    Vertex(CoxeterElement),
}

/// Closed edge path, each edge traversed forwards (`Positive`) or backwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryLoop {
    pub steps: Vec<(OrientedEdge, Sign)>,
}

impl BoundaryLoop {
    /// The letters read along the loop: edge `a(v, r)` contributes `r^{±1}`.
    pub fn spelled(&self) -> Vec<(GeneratorId, Sign)> {
        self.steps.iter().map(|(e, sign)| (e.s, *sign)).collect()
    }
}

/// Cell counts by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSummary {
    pub cells: Vec<usize>,
    pub euler_characteristic: i64,
}

impl ComplexSummary {
    fn from_cells(cells: Vec<usize>) -> Self {
        let euler_characteristic = cells
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum();
        ComplexSummary {
            cells,
            euler_characteristic,
        }
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells.get(dim).copied().unwrap_or(0)
    }
}

/// Salvetti poset of the Coxeter system `sys`. All nodes are produced lazily.
#[derive(Clone, Debug)]
pub struct SalvettiPoset {
    sys: CoxeterSystem,
}

impl SalvettiPoset {
    pub fn new(sys: CoxeterSystem) -> Self {
        SalvettiPoset { sys }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn node(&self, u: CoxeterElement, x: GeneratorSet) -> Result<PosetNode, SalvettiError> {
        if !x.is_subset(self.sys.all()) || !self.sys.is_finite_type(x) {
            return Err(SalvettiError::NotSpherical(x.0));
        }
        self.sys.multiply(&u, &self.sys.identity())?;
        Ok(PosetNode { u, x })
    }

    pub fn vertex(&self, u: CoxeterElement) -> PosetNode {
        PosetNode {
            u,
            x: GeneratorSet::EMPTY,
        }
    }

    /// `(u, X) ⪯ (v, Y)`: `X ⊆ Y`, `v^{-1}u ∈ W_Y` and `v^{-1}u` has no right descent in `X`.
    pub fn leq(&self, a: &PosetNode, b: &PosetNode) -> Result<bool, SalvettiError> {
        if !a.x.is_subset(b.x) {
            return Ok(false);
        }
        let w = self.sys.multiply(&self.sys.invert(&b.u)?, &a.u)?;
        if !w.lies_in(b.x) {
            return Ok(false);
        }
        for s in a.x.iter() {
            if self.sys.mul_generator(&w, s)?.length() < w.length() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `C(u, X)`: every node below `n`, sorted.
    pub fn lower_set(&self, n: &PosetNode) -> Result<Vec<PosetNode>, SalvettiError> {
        let parabolic = self.sys.parabolic_elements(n.x)?;
        let mut out = BTreeSet::new();
        for y in n.x.subsets() {
            for w in &parabolic {
                let minimal = y
                    .iter()
                    .map(|s| Ok(self.sys.mul_generator(w, s)?.length() > w.length()))
                    .collect::<Result<Vec<bool>, CoxeterError>>()?
                    .into_iter()
                    .all(|b| b);
                if minimal {
                    out.insert(PosetNode {
                        u: self.sys.multiply(&n.u, w)?,
                        x: y,
                    });
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// The edge `a(u, s)` as its lower set `{(u,∅), (us,∅), (u,{s})}`.
    pub fn edge_node(&self, e: &OrientedEdge) -> PosetNode {
        PosetNode {
            u: e.u.clone(),
            x: GeneratorSet::singleton(e.s),
        }
    }

    /// Start and end vertices of the edge.
    pub fn endpoints(&self, e: &OrientedEdge) -> Result<(CoxeterElement, CoxeterElement), SalvettiError> {
        Ok((e.u.clone(), self.sys.mul_generator(&e.u, e.s)?))
    }

    /// Boundary of the 2-cell `B(u, {s,t})`:
    /// `a(u,s) a(us,t) ⋯ a(uΠ(s,t:m-1), r) a(uΠ(t,s:m-1), r')^{-1} ⋯ a(ut,s)^{-1} a(u,t)^{-1}`.
    pub fn two_cell_boundary(
        &self,
        u: &CoxeterElement,
        s: GeneratorId,
        t: GeneratorId,
    ) -> Result<BoundaryLoop, SalvettiError> {
        let m = match self.sys.graph().label(s, t) {
            Label::Finite(m) if s != t => m as usize,
            Label::Finite(_) => return Err(CoxeterError::SameGenerator.into()),
            Label::Infinite => return Err(SalvettiError::InfiniteLabel),
        };
        let forward = alternating_word(s, t, m)?;
        let backward = alternating_word(t, s, m)?;
        let mut steps = Vec::with_capacity(2 * m);
        let mut v = u.clone();
        for &r in forward.letters() {
            steps.push((OrientedEdge { u: v.clone(), s: r }, Sign::Positive));
            v = self.sys.mul_generator(&v, r)?;
        }
        let mut prefixes = Vec::with_capacity(m);
        let mut v = u.clone();
        for &r in backward.letters() {
            prefixes.push((v.clone(), r));
            v = self.sys.mul_generator(&v, r)?;
        }
        for (v, r) in prefixes.into_iter().rev() {
            steps.push((OrientedEdge { u: v, s: r }, Sign::Negative));
        }
        Ok(BoundaryLoop { steps })
    }

    /// Whether consecutive steps share endpoints and the path returns to its start.
    pub fn is_closed(&self, path: &BoundaryLoop) -> Result<bool, SalvettiError> {
        let mut ends = Vec::with_capacity(path.steps.len());
        for (edge, sign) in &path.steps {
            let (a, b) = self.endpoints(edge)?;
            ends.push(match sign {
                Sign::Positive => (a, b),
                Sign::Negative => (b, a),
            });
        }
        Ok(ends.is_empty()
            || (0..ends.len()).all(|i| ends[i].1 == ends[(i + 1) % ends.len()].0))
    }

    /// Elements `u` indexing the cells: all of `W`, or the ball of the given radius.
    pub fn vertices(&self, radius: Option<usize>) -> Result<Vec<CoxeterElement>, SalvettiError> {
        match radius {
            Some(r) => Ok(self.sys.ball(r)?),
            None if self.sys.is_finite_type(self.sys.all()) => Ok(self.sys.enumerate()?),
            None => Err(SalvettiError::Unbounded),
        }
    }

    /// Every node `(u, X)` with `u` among `vertices(radius)`.
    pub fn nodes(&self, radius: Option<usize>) -> Result<Vec<PosetNode>, SalvettiError> {
        let spherical = self.sys.spherical_subsets();
        Ok(self
            .vertices(radius)?
            .into_iter()
            .flat_map(|u| spherical.iter().map(move |&x| PosetNode { u: u.clone(), x }))
            .collect())
    }

    /// Cell census: one cell `B(u, X)` per node, counted by `|X|`.
    pub fn build_complex(&self, radius: Option<usize>) -> Result<ComplexSummary, SalvettiError> {
        let vertices = self.vertices(radius)?.len();
        let spherical = self.sys.spherical_subsets();
        let top = spherical.iter().map(|x| x.len()).max().unwrap_or(0);
        let mut cells = vec![0usize; top + 1];
        for x in spherical {
            cells[x.len()] += vertices;
        }
        Ok(ComplexSummary::from_cells(cells))
    }

    /// The 1-skeleton as lines `u s us`, elements written as dot-separated
    /// normal forms and the identity as `1`.
    pub fn one_skeleton(&self, radius: Option<usize>) -> Result<String, SalvettiError> {
        let graph = self.sys.graph();
        let fmt = |e: &CoxeterElement| {
            if e.is_identity() {
                "1".to_string()
            } else {
                e.normal_form()
                    .letters()
                    .iter()
                    .map(|&g| graph.name(g))
                    .collect::<Vec<_>>()
                    .join(".")
            }
        };
        let mut out = String::new();
        for u in self.vertices(radius)? {
            for s in graph.generators() {
                let us = self.sys.mul_generator(&u, s)?;
                writeln!(out, "{} {} {}", fmt(&u), graph.name(s), fmt(&us)).expect("string write");
            }
        }
        Ok(out)
    }

    /// `ι_T`: a node of the sub-poset for `Γ_T`, seen in the full poset.
    pub fn include_node(&self, n: &PosetNode, target: GeneratorSet) -> Result<PosetNode, SalvettiError> {
        if !n.u.lies_in(target) || !n.x.is_subset(target) {
            return Err(SalvettiError::OutsideParabolic);
        }
        self.node(n.u.clone(), n.x)
    }

    /// `π_T(u, X) = (u0, X0)` where `u = u0 u1`, `u0 ∈ W_T`, `u1` is `(T,∅)`-minimal
    /// and `X0` is the set of `t ∈ T` lying in `u1 W_X u1^{-1}`.
    ///
    /// Conjugating the generators of `X` one at a time is not enough once
    /// `|X| ≥ 2`: in `A3` with `T = {s2}`, `u1 = s3` sends no generator of
    /// `X = {s2, s3}` into `T`, yet `s2 = s3 (s3 s2 s3) s3` lies in
    /// `s3 W_X s3`, and the hexagon `B(s3, X)` has vertices over both `1` and `s2`.
    pub fn project_node(&self, n: &PosetNode, target: GeneratorSet) -> Result<PosetNode, SalvettiError> {
        let (u0, u1) = self.sys.parabolic_decompose(&n.u, target)?;
        let u1_inv = self.sys.invert(&u1)?;
        let mut x0 = GeneratorSet::EMPTY;
        for t in target.iter() {
            if self.sys.conjugate(&u1_inv, t)?.lies_in(n.x) {
                x0.insert(t);
            }
        }
        self.node(u0, x0)
    }

    /// Image of the edge `a(u, s)` under `π_T`.
    pub fn project_edge(
        &self,
        u: &CoxeterElement,
        s: GeneratorId,
        target: GeneratorSet,
    ) -> Result<EdgeImage, SalvettiError> {
        let (u0, u1) = self.sys.parabolic_decompose(u, target)?;
        Ok(match self.sys.conjugate_into_generators(&u1, s)? {
            Some(t) if target.contains(t) => EdgeImage::Edge(OrientedEdge { u: u0, s: t }),
            _ => EdgeImage::Vertex(u0),
        })
    }
}
