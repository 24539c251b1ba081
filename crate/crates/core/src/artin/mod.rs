//! Artin groups `A`: words, the epimorphism `θ: A → W`, the projection of a
//! word onto `(Σ_T ⊔ Σ_T^{-1})^*`, and convexity checks backed by exact
//! equality oracles.

mod oracle;
mod scramble;
mod word;

use thiserror::Error;

pub use oracle::{oracle_for, BraidOracle, EqualityOracle, FreeGroupOracle};
pub use scramble::{random_word, scramble};
pub use word::{abelianized_image, free_reduce, odd_components, ArtinLetter, ArtinWord};

use crate::coxeter::{CoxeterElement, CoxeterError, CoxeterSystem, GeneratorId, GeneratorSet};
use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArtinError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("no equality oracle is available for this graph")]
    OracleUnavailable,
    #[error("the witness word uses generators outside the target set")]
    WitnessOutsideTarget,
}

/// `θ(w)`, built one letter at a time.
pub fn theta(sys: &CoxeterSystem, w: &ArtinWord) -> Result<CoxeterElement, CoxeterError> {
    let mut e = sys.identity();
    for l in &w.0 {
        e = sys.mul_generator(&e, l.generator)?;
    }
    Ok(e)
}

/// One step of the projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// 1-based position in the input word.
    pub index: usize,
    pub letter: ArtinLetter,
    /// `u_i = θ(σ_1 ⋯ σ_i)`.
    pub prefix: CoxeterElement,
    /// `u_i = v_i · w_i` with `v_i ∈ W_T` and `w_i` having no left descent in `T`.
    pub v: CoxeterElement,
    pub w: CoxeterElement,
    /// `w_{i-1} s_i w_{i-1}^{-1}` for a positive letter, `w_i s_i w_i^{-1}` for a negative one.
    pub conjugate: CoxeterElement,
    /// The conjugate, when it is a generator.
    pub t: Option<GeneratorId>,
    pub emitted: Option<ArtinLetter>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProjectionTrace {
    pub steps: Vec<TraceStep>,
}

/// Projects `w` to a word over `Σ_T ⊔ Σ_T^{-1}` no longer than `w`.
pub fn project_word(
    sys: &CoxeterSystem,
    w: &ArtinWord,
    target: GeneratorSet,
) -> Result<(ArtinWord, ProjectionTrace), CoxeterError> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(w.len());
    let mut prefix = sys.identity();
    let mut prev_w = sys.identity();
    for (i, &letter) in w.0.iter().enumerate() {
        let s = letter.generator;
        prefix = sys.mul_generator(&prefix, s)?;
        let (v, wi) = sys.parabolic_decompose(&prefix, target)?;
        let conjugator = match letter.sign {
            Sign::Positive => &prev_w,
            Sign::Negative => &wi,
        };
        let conjugate = sys.conjugate(conjugator, s)?;
        let t = match conjugate.normal_form().letters() {
            [t] => Some(*t),
            _ => None,
        };
        let emitted = t
            .filter(|&t| target.contains(t))
            .map(|t| ArtinLetter::new(t, letter.sign));
        out.extend(emitted);
        steps.push(TraceStep {
            index: i + 1,
            letter,
            prefix: prefix.clone(),
            v,
            w: wi.clone(),
            conjugate,
            t,
            emitted,
        });
        prev_w = wi;
    }
    Ok((ArtinWord(out), ProjectionTrace { steps }))
}

/// Outcome of [`check_convexity`]. `None` marks a check that did not apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexityReport {
    pub projected: ArtinWord,
    pub input_len: usize,
    pub projected_len: usize,
    pub length_contract: bool,
    pub lengths_equal: bool,
    pub all_letters_in_target: bool,
    /// Equal lengths force every letter into the target.
    pub claim3: bool,
    /// A word over the target projects to itself.
    pub claim1: Option<bool>,
    pub theta_in_parabolic: bool,
    /// Whether `w` is known to lie in `A_T`, and how.
    pub membership: Membership,
    /// The projection represents the same element as `w`.
    pub claim2: Option<bool>,
    /// The supplied witness represents the same element as `w`.
    pub witness_matches: Option<bool>,
    pub theta_agrees: Option<bool>,
    pub abelian_agrees: Option<bool>,
    pub oracle: Option<&'static str>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `w` is itself a word over the target.
    Syntactic,
    /// A word over the target equal to `w` was supplied.
    Witness,
    /// The oracle decided membership.
    Oracle(bool),
    Unknown,
}

impl ConvexityReport {
    pub fn passes(&self) -> bool {
        self.length_contract
            && self.claim3
            && [
                self.claim1,
                self.claim2,
                self.witness_matches,
                self.theta_agrees,
                self.abelian_agrees,
            ]
            .iter()
            .all(|c| *c != Some(false))
    }
}

/// Runs the convexity checks on `w`.
///
/// The equality check against `τ̂` needs both an oracle and evidence that `w`
/// lies in `A_T`: `θ(w) ∈ W_T` alone does not suffice (`σ_t^2` with `T = {s}`
/// has `θ = 1` and projects to the empty word). Evidence is either `w` being a
/// word over `T`, a `witness` over `T` known to equal `w`, or the oracle
/// deciding membership itself.
pub fn check_convexity(
    sys: &CoxeterSystem,
    w: &ArtinWord,
    target: GeneratorSet,
    oracle: Option<&dyn EqualityOracle>,
    witness: Option<&ArtinWord>,
) -> Result<ConvexityReport, ArtinError> {
    if witness.is_some_and(|x| !x.lies_in(target)) {
        return Err(ArtinError::WitnessOutsideTarget);
    }
    let graph = sys.graph();
    let (projected, _) = project_word(sys, w, target)?;
    let input_len = w.len();
    let projected_len = projected.len();
    let lengths_equal = input_len == projected_len;
    let all_letters_in_target = w.lies_in(target);
    let claim1 = all_letters_in_target.then(|| projected == *w);

    let theta_w = theta(sys, w)?;
    let theta_in_parabolic = theta_w.lies_in(target);
    let theta_agrees = if theta_in_parabolic {
        Some(theta(sys, &projected)? == theta_w)
    } else {
        None
    };

    let membership = if all_letters_in_target {
        Membership::Syntactic
    } else if witness.is_some() {
        Membership::Witness
    } else {
        match oracle.and_then(|o| o.member(w, target)) {
            Some(m) => Membership::Oracle(m),
            None => Membership::Unknown,
        }
    };
    let reference = witness.unwrap_or(w);
    let member = matches!(
        membership,
        Membership::Syntactic | Membership::Witness | Membership::Oracle(true)
    );
    let claim2 = match oracle {
        Some(o) if member => Some(o.equal(&projected, reference)),
        _ => None,
    };
    let witness_matches = match (oracle, witness) {
        (Some(o), Some(x)) => Some(o.equal(w, x)),
        _ => None,
    };
    let abelian_agrees =
        member.then(|| abelianized_image(graph, &projected) == abelianized_image(graph, w));

    Ok(ConvexityReport {
        projected,
        input_len,
        projected_len,
        length_contract: projected_len <= input_len,
        lengths_equal,
        all_letters_in_target,
        claim3: !lengths_equal || all_letters_in_target,
        claim1,
        theta_in_parabolic,
        membership,
        claim2,
        witness_matches,
        theta_agrees,
        abelian_agrees,
        oracle: oracle.map(|o| o.name()),
    })
}
