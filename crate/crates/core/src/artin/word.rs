use std::fmt;

use crate::coxeter::{CoxeterError, CoxeterGraph, GeneratorId, GeneratorSet};
use crate::sign::Sign;

/// `σ_s^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinLetter {
    pub generator: GeneratorId,
    pub sign: Sign,
}

impl ArtinLetter {
    pub fn new(generator: GeneratorId, sign: Sign) -> Self {
        ArtinLetter { generator, sign }
    }

    pub fn positive(generator: GeneratorId) -> Self {
        ArtinLetter::new(generator, Sign::Positive)
    }

    pub fn negative(generator: GeneratorId) -> Self {
        ArtinLetter::new(generator, Sign::Negative)
    }

    pub fn inverse(self) -> Self {
        ArtinLetter::new(self.generator, -self.sign)
    }
}

/// A word over `Σ ⊔ Σ^{-1}`. Words carry no canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ArtinWord(pub Vec<ArtinLetter>);

impl ArtinWord {
    pub fn empty() -> Self {
        ArtinWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.0
    }

    /// Generators occurring in the word.
    pub fn support(&self) -> GeneratorSet {
        self.0.iter().map(|l| l.generator).collect()
    }

    /// Whether the word lies in `(Σ_T ⊔ Σ_T^{-1})^*`.
    pub fn lies_in(&self, target: GeneratorSet) -> bool {
        self.support().is_subset(target)
    }

    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        ArtinWord(letters)
    }

    pub fn inverse(&self) -> ArtinWord {
        ArtinWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Parses whitespace-separated tokens `name` or `name^-1`.
    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<Self, CoxeterError> {
        text.split_whitespace()
            .map(|tok| {
                let (name, sign) = match tok.split_once('^') {
                    Some((name, "-1")) => (name, Sign::Negative),
                    Some((name, "1")) => (name, Sign::Positive),
                    Some(_) => {
                        return Err(CoxeterError::Parse {
                            line: 1,
                            message: format!("bad exponent in `{tok}`"),
                        })
                    }
                    None => (tok, Sign::Positive),
                };
                let generator = graph
                    .generator(name)
                    .ok_or_else(|| CoxeterError::UndeclaredGenerator(name.to_string()))?;
                Ok(ArtinLetter { generator, sign })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(ArtinWord)
    }

    pub fn display<'a>(&'a self, graph: &'a CoxeterGraph) -> impl fmt::Display + 'a {
        DisplayWord { word: self, graph }
    }
}

impl From<Vec<ArtinLetter>> for ArtinWord {
    fn from(letters: Vec<ArtinLetter>) -> Self {
        ArtinWord(letters)
    }
}

struct DisplayWord<'a> {
    word: &'a ArtinWord,
    graph: &'a CoxeterGraph,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.name(l.generator))?;
            if l.sign == Sign::Negative {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Cancels adjacent inverse pairs until none remain.
pub fn free_reduce(w: &ArtinWord) -> ArtinWord {
    let mut stack: Vec<ArtinLetter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if stack.last() == Some(&l.inverse()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    ArtinWord(stack)
}

/// Components of the graph whose edges are the odd labels, ordered by their
/// smallest generator. Generators in one component are conjugate in `A`.
pub fn odd_components(graph: &CoxeterGraph) -> Vec<GeneratorSet> {
    let mut component: Vec<Option<usize>> = vec![None; graph.rank()];
    let mut out: Vec<GeneratorSet> = Vec::new();
    for start in graph.generators() {
        if component[start.index()].is_some() {
            continue;
        }
        let id = out.len();
        let mut set = GeneratorSet::singleton(start);
        component[start.index()] = Some(id);
        let mut stack = vec![start];
        while let Some(s) = stack.pop() {
            for t in graph.generators() {
                if component[t.index()].is_none() && graph.label(s, t).is_odd() && s != t {
                    component[t.index()] = Some(id);
                    set.insert(t);
                    stack.push(t);
                }
            }
        }
        out.push(set);
    }
    out
}

/// Image in the abelianization of `A`: exponent sums per odd component.
pub fn abelianized_image(graph: &CoxeterGraph, w: &ArtinWord) -> Vec<i64> {
    let comps = odd_components(graph);
    let mut out = vec![0i64; comps.len()];
    for l in &w.0 {
        let c = comps
            .iter()
            .position(|c| c.contains(l.generator))
            .expect("every generator lies in a component");
        out[c] += l.sign.as_i8() as i64;
    }
    out
}
