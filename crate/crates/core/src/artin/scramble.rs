//! Seeded random rewriting of Artin words by defining relations, used to
//! build pairs of distinct words for the same element of `A`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::word::{ArtinLetter, ArtinWord};
use crate::coxeter::{CoxeterGraph, GeneratorId};
use crate::sign::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    /// Insert `σ^ε σ^{-ε}` before position `pos`.
    Insert { pos: usize, letter: ArtinLetter },
    /// Delete the inverse pair at `pos, pos+1`.
    Delete { pos: usize },
    /// Replace the alternating segment `a b a ⋯` (length `m`, common sign) at
    /// `pos` by `b a b ⋯`.
    Relation { pos: usize, m: usize, a: GeneratorId, b: GeneratorId, sign: Sign },
}

fn rewrites(graph: &CoxeterGraph, letters: &[ArtinLetter]) -> Vec<Move> {
    let mut out = Vec::new();
    for pos in 0..letters.len() {
        if pos + 1 < letters.len() && letters[pos + 1] == letters[pos].inverse() {
            out.push(Move::Delete { pos });
        }
        let ArtinLetter { generator: a, sign } = letters[pos];
        for b in graph.generators().filter(|&b| b != a) {
            let Some(m) = graph.label(a, b).finite() else {
                continue;
            };
            let m = m as usize;
            if pos + m > letters.len() {
                continue;
            }
            let alternates = letters[pos..pos + m].iter().enumerate().all(|(k, l)| {
                l.sign == sign && l.generator == if k % 2 == 0 { a } else { b }
            });
            if alternates {
                out.push(Move::Relation { pos, m, a, b, sign });
            }
        }
    }
    out
}

fn apply(w: &mut Vec<ArtinLetter>, mv: Move) {
    match mv {
        Move::Insert { pos, letter } => {
            w.splice(pos..pos, [letter, letter.inverse()]);
        }
        Move::Delete { pos } => {
            w.drain(pos..pos + 2);
        }
        Move::Relation { pos, m, a, b, sign } => {
            for (k, l) in w[pos..pos + m].iter_mut().enumerate() {
                *l = ArtinLetter::new(if k % 2 == 0 { b } else { a }, sign);
            }
        }
    }
}

/// Applies `steps` moves, each chosen uniformly among all applicable
/// insertions of an inverse pair, deletions of an inverse pair and braid
/// relation rewrites. Every move preserves the element of `A`.
pub fn scramble(graph: &CoxeterGraph, w: &ArtinWord, steps: usize, seed: u64) -> ArtinWord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut letters = w.0.clone();
    let rank = graph.rank();
    if rank == 0 {
        return w.clone();
    }
    for _ in 0..steps {
        let others = rewrites(graph, &letters);
        let inserts = (letters.len() + 1) * rank * 2;
        let pick = rng.gen_range(0..inserts + others.len());
        let mv = if pick < inserts {
            let pos = pick / (rank * 2);
            let rem = pick % (rank * 2);
            let sign = if rem.is_multiple_of(2) { Sign::Positive } else { Sign::Negative };
            Move::Insert {
                pos,
                letter: ArtinLetter::new(GeneratorId((rem / 2) as u8), sign),
            }
        } else {
            others[pick - inserts]
        };
        apply(&mut letters, mv);
    }
    ArtinWord(letters)
}

/// Uniformly random word of the given length over `Σ_T ⊔ Σ_T^{-1}`.
pub fn random_word(rng: &mut impl Rng, target: &[GeneratorId], len: usize) -> ArtinWord {
    if target.is_empty() {
        return ArtinWord::empty();
    }
    ArtinWord(
        (0..len)
            .map(|_| {
                let g = target[rng.gen_range(0..target.len())];
                let sign = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
                ArtinLetter::new(g, sign)
            })
            .collect(),
    )
}
