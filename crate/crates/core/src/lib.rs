//! Word algorithms for Coxeter and Artin groups built around standard
//! parabolic subgroups: exact Coxeter word problem, the Salvetti poset and its
//! retraction onto a parabolic sub-poset, projection of Artin words onto
//! parabolic subgroups, and type-A braid tools (Garside normal form, strand
//! deletion) used as exact equality oracles.

pub mod artin;
pub mod braid;
pub mod cli;
pub mod coxeter;
pub mod salvetti;
pub mod sign;

pub use sign::Sign;
