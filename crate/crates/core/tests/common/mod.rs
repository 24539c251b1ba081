#![allow(dead_code)]

use artin_convex::coxeter::{Bounds, CoxeterGraph, CoxeterSystem, Label};

pub fn graph(text: &str) -> CoxeterGraph {
    CoxeterGraph::parse(text).unwrap()
}

pub fn system(text: &str) -> CoxeterSystem {
    CoxeterSystem::new(graph(text)).unwrap()
}

pub fn dihedral(m: u32) -> CoxeterSystem {
    CoxeterSystem::new(CoxeterGraph::dihedral(Label::Finite(m)).unwrap()).unwrap()
}

pub const A3: &str = "gens: s1 s2 s3\nedge: s1 s2 3\nedge: s2 s3 3";
pub const B3: &str = "gens: s1 s2 s3\nedge: s1 s2 4\nedge: s2 s3 3";
pub const H3: &str = "gens: s1 s2 s3\nedge: s1 s2 5\nedge: s2 s3 3";
pub const A2_AFFINE: &str = "gens: s t u\nedge: s t 3\nedge: t u 3\nedge: s u 3";
pub const MIXED_INF: &str = "gens: a b c\nedge: a b inf\nedge: b c 4";
pub const I2_5_A1: &str = "gens: s t u\nedge: s t 5";
pub const FREE3: &str = "gens: a b c\nedge: a b inf\nedge: b c inf\nedge: a c inf";

pub fn a3() -> CoxeterSystem {
    system(A3)
}

pub fn b3() -> CoxeterSystem {
    system(B3)
}

pub fn h3() -> CoxeterSystem {
    system(H3)
}

/// Same graph, forced through the braid-move orbit search.
pub fn tits(text: &str) -> CoxeterSystem {
    CoxeterSystem::without_table(graph(text), Bounds::default())
}
