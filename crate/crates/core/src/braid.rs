//! Braid groups `B_n`: permutation images, Garside left normal form (an exact
//! solution to the word problem), strand deletion and the standard embedding
//! `B_m ↪ B_n`.
//!
//! Permutations are kept in one-line notation on positions `0..n`. The
//! generator `σ_i` (1-based) maps to the transposition of positions `i-1, i`,
//! and a word maps to the composite of its letters in reading order, so the
//! one-line array of a word also records which strand ends at each position.

use std::fmt;

use thiserror::Error;

use crate::sign::Sign;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("cannot parse braid token `{0}`")]
    BadToken(String),
    #[error("strand {0} is not a valid position")]
    BadStrand(usize),
    #[error("a kept strand ends at a deleted position")]
    StrandsLeaveKeepSet,
    #[error("cannot embed {from} strands into {to}")]
    BadEmbedding { from: usize, to: usize },
}

/// A word in `σ_1^{±1}, …, σ_{n-1}^{±1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, Sign)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, Sign)>) -> Result<Self, BraidError> {
        for &(index, _) in &letters {
            if index == 0 || index >= strands {
                return Err(BraidError::IndexOutOfRange { index, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Positive word from 1-based indices.
    pub fn positive(strands: usize, indices: &[usize]) -> Result<Self, BraidError> {
        Self::new(strands, indices.iter().map(|&i| (i, Sign::Positive)).collect())
    }

    /// Parses tokens `s1`, `s2^-1`, ….
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let bad = || BraidError::BadToken(tok.to_string());
                let (body, sign) = match tok.split_once('^') {
                    Some((body, "-1")) => (body, Sign::Negative),
                    Some((body, "1")) => (body, Sign::Positive),
                    Some(_) => return Err(bad()),
                    None => (tok, Sign::Positive),
                };
                let index = body
                    .strip_prefix('s')
                    .and_then(|n| n.parse::<usize>().ok())
                    .ok_or_else(bad)?;
                Ok((index, sign))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, Sign)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, (i, sign)) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match sign {
                Sign::Positive => write!(f, "s{i}")?,
                Sign::Negative => write!(f, "s{i}^-1")?,
            }
        }
        Ok(())
    }
}

/// A permutation of `0..n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    /// The half twist `Δ`: reversal.
    pub fn longest(n: usize) -> Self {
        Permutation((0..n as u8).rev().collect())
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// Number of inversions (length as a positive permutation braid).
    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len())
            .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
            .sum()
    }

    /// `self · s_i` for 0-based `i`: swaps positions `i, i+1`.
    fn mul_right(&mut self, i: usize) {
        self.0.swap(i, i + 1);
    }

    /// `s_i · self` for 0-based `i`: swaps values `i, i+1`.
    fn mul_left(&mut self, i: usize) {
        for v in self.0.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
    }

    fn has_right_descent(&self, i: usize) -> bool {
        self.0[i] > self.0[i + 1]
    }

    fn has_left_descent(&self, i: usize) -> bool {
        let pos_i = self.0.iter().position(|&v| v as usize == i);
        let pos_next = self.0.iter().position(|&v| v as usize == i + 1);
        pos_i > pos_next
    }

    fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Image of the braid in the symmetric group.
pub fn perm_of(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.strands);
    for &(i, _) in &w.letters {
        p.mul_right(i - 1);
    }
    p
}

/// `Δ^infimum · simples[0] ⋯ simples[r-1]`, left-weighted, with no factor
/// equal to `Δ` or to the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub infimum: i64,
    pub simples: Vec<Permutation>,
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for s in &self.simples {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

/// Garside left normal form.
pub fn garside_nf(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strands;
    if n <= 1 {
        return GarsideNormalForm {
            strands: n,
            infimum: 0,
            simples: Vec::new(),
        };
    }
    let delta = Permutation::longest(n);
    let mut infimum = 0i64;
    let mut simples: Vec<Permutation> = Vec::with_capacity(w.len());
    for &(i, sign) in &w.letters {
        match sign {
            Sign::Positive => {
                let mut s = Permutation::identity(n);
                s.mul_right(i - 1);
                simples.push(s);
            }
            Sign::Negative => {
                // β σ_i^{-1} = Δ^{k-1} τ(F_1)⋯τ(F_r) (Δ s_i), with τ(F) = Δ F Δ.
                for f in simples.iter_mut() {
                    *f = delta.compose(f).compose(&delta);
                }
                infimum -= 1;
                let mut x = delta.clone();
                x.mul_right(i - 1);
                simples.push(x);
            }
        }
    }
    left_weight(&mut simples, n);
    let leading = simples.iter().take_while(|s| **s == delta).count();
    simples.drain(..leading);
    infimum += leading as i64;
    simples.retain(|s| !s.is_identity());
    GarsideNormalForm {
        strands: n,
        infimum,
        simples,
    }
}

/// Moves generators leftwards between adjacent factors until every pair
/// `(A, B)` satisfies: each left descent of `B` is a right descent of `A`.
fn left_weight(simples: &mut [Permutation], n: usize) {
    let mut changed = true;
    while changed {
        changed = false;
        for k in 0..simples.len().saturating_sub(1) {
            let (head, tail) = simples.split_at_mut(k + 1);
            let (a, b) = (&mut head[k], &mut tail[0]);
            loop {
                let movable = (0..n - 1).find(|&i| b.has_left_descent(i) && !a.has_right_descent(i));
                match movable {
                    Some(i) => {
                        a.mul_right(i);
                        b.mul_left(i);
                        changed = true;
                    }
                    None => break,
                }
            }
        }
    }
}

/// Whether the two words represent the same braid.
pub fn words_equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands == b.strands && garside_nf(a) == garside_nf(b)
}

/// Removes every strand that does not start at one of the 1-based positions in
/// `keep`, re-indexing crossings among the kept strands by rank. The result
/// lives on `keep.len()` strands and has no more letters than `w`.
pub fn delete_strands(w: &BraidWord, keep: &[usize]) -> Result<BraidWord, BraidError> {
    let n = w.strands;
    let mut kept = vec![false; n];
    for &k in keep {
        if k == 0 || k > n {
            return Err(BraidError::BadStrand(k));
        }
        kept[k - 1] = true;
    }
    let perm = perm_of(w);
    if (0..n).any(|pos| kept[pos] != kept[perm.0[pos] as usize]) {
        return Err(BraidError::StrandsLeaveKeepSet);
    }
    let width = kept.iter().filter(|&&k| k).count();
    // occupant[pos] = initial position of the strand now at `pos`.
    let mut occupant: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    for &(i, sign) in &w.letters {
        let (left, right) = (occupant[i - 1], occupant[i]);
        if kept[left] && kept[right] {
            let rank = occupant[..i].iter().filter(|&&s| kept[s]).count();
            out.push((rank, sign));
        }
        occupant.swap(i - 1, i);
    }
    BraidWord::new(width, out)
}

/// The same letters read in `B_n`, `n ≥` the current strand count.
pub fn embed(w: &BraidWord, n: usize) -> Result<BraidWord, BraidError> {
    if n < w.strands {
        return Err(BraidError::BadEmbedding {
            from: w.strands,
            to: n,
        });
    }
    Ok(BraidWord {
        strands: n,
        letters: w.letters.clone(),
    })
}
