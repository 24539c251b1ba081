//! Recognition of finite (spherical) Coxeter graphs by the classification
//! A_n, B_n, D_n, E_6..E_8, F_4, H_3, H_4, I_2(m).

use super::graph::{CoxeterGraph, GeneratorId, GeneratorSet, Label};

/// Connected finite-type diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl FiniteType {
    /// Group order, `None` on `u128` overflow.
    pub fn order(self) -> Option<u128> {
        fn factorial(n: usize) -> Option<u128> {
            (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
        }
        match self {
            FiniteType::A(n) => factorial(n + 1),
            FiniteType::B(n) => factorial(n)?.checked_mul(1u128.checked_shl(n as u32)?),
            FiniteType::D(n) => factorial(n)?.checked_mul(1u128.checked_shl(n as u32 - 1)?),
            FiniteType::E(6) => Some(51_840),
            FiniteType::E(7) => Some(2_903_040),
            FiniteType::E(8) => Some(696_729_600),
            FiniteType::E(_) => None,
            FiniteType::F4 => Some(1152),
            FiniteType::H(3) => Some(120),
            FiniteType::H(4) => Some(14_400),
            FiniteType::H(_) => None,
            FiniteType::I2(m) => Some(2 * m as u128),
        }
    }
}

/// Classifies each connected component of `Γ_X`; `None` if some component is infinite.
pub fn classify(graph: &CoxeterGraph, set: GeneratorSet) -> Option<Vec<FiniteType>> {
    graph
        .components(set)
        .into_iter()
        .map(|comp| classify_connected(graph, comp))
        .collect()
}

/// Whether `W_X` is finite.
pub fn is_finite_type(graph: &CoxeterGraph, set: GeneratorSet) -> bool {
    classify(graph, set).is_some()
}

/// Order of `W_X` from the classification, `None` if infinite or too large for `u128`.
pub fn finite_order(graph: &CoxeterGraph, set: GeneratorSet) -> Option<u128> {
    classify(graph, set)?
        .into_iter()
        .try_fold(1u128, |acc, ty| acc.checked_mul(ty.order()?))
}

fn classify_connected(graph: &CoxeterGraph, comp: GeneratorSet) -> Option<FiniteType> {
    let n = comp.len();
    let verts: Vec<GeneratorId> = comp.iter().collect();
    let mut edges = Vec::new();
    for (i, &s) in verts.iter().enumerate() {
        for &t in &verts[i + 1..] {
            match graph.label(s, t) {
                Label::Finite(2) => {}
                Label::Infinite => return None,
                Label::Finite(m) => edges.push((s, t, m)),
            }
        }
    }
    if n == 1 {
        return Some(FiniteType::A(1));
    }
    if n == 2 {
        let m = edges[0].2;
        return Some(if m == 3 { FiniteType::A(2) } else { FiniteType::I2(m) });
    }
    // Connected with n vertices: a tree iff exactly n-1 edges.
    if edges.len() != n - 1 {
        return None;
    }
    let degree = |v: GeneratorId| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
    if verts.iter().any(|&v| degree(v) > 3) {
        return None;
    }
    let heavy: Vec<&(GeneratorId, GeneratorId, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<GeneratorId> = verts.iter().copied().filter(|&v| degree(v) == 3).collect();

    match (heavy.len(), branch.len()) {
        (0, 0) => Some(FiniteType::A(n)),
        (0, 1) => {
            let centre = branch[0];
            let mut legs: Vec<usize> = edges
                .iter()
                .filter_map(|e| match e {
                    (a, b, _) if *a == centre => Some(*b),
                    (a, b, _) if *b == centre => Some(*a),
                    _ => None,
                })
                .map(|start| leg_length(&edges, centre, start))
                .collect();
            legs.sort_unstable();
            match legs[..] {
                [1, 1, _] => Some(FiniteType::D(n)),
                [1, 2, 2..=4] => Some(FiniteType::E(n)),
                _ => None,
            }
        }
        (1, 0) => {
            let (a, b, m) = *heavy[0];
            let at_end = degree(a) == 1 || degree(b) == 1;
            match (m, n) {
                (4, _) if at_end => Some(FiniteType::B(n)),
                (4, 4) => Some(FiniteType::F4),
                (5, 3 | 4) if at_end => Some(FiniteType::H(n)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn leg_length(edges: &[(GeneratorId, GeneratorId, u32)], from: GeneratorId, start: GeneratorId) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next = edges.iter().find_map(|&(a, b, _)| {
            if a == cur && b != prev {
                Some(b)
            } else if b == cur && a != prev {
                Some(a)
            } else {
                None
            }
        });
        match next {
            Some(v) => {
                prev = cur;
                cur = v;
                len += 1;
            }
            None => return len,
        }
    }
}
