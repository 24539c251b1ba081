//! Coxeter graphs, generator sets and words over the generators.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::CoxeterError;

/// Largest supported number of generators (generator sets are `u64` bitsets).
pub const MAX_GENERATORS: usize = 64;

/// Ordinal of a generator in the declaration order of its graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId(pub u8);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Edge label `m_{s,t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 1)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

/// A subset of the generators, stored as a bitset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(pub u64);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    /// The set `{0, .., rank-1}`.
    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            GeneratorSet(u64::MAX)
        } else {
            GeneratorSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(s: GeneratorId) -> Self {
        GeneratorSet(1 << s.0)
    }

    pub fn contains(self, s: GeneratorId) -> bool {
        self.0 >> s.0 & 1 == 1
    }

    pub fn insert(&mut self, s: GeneratorId) {
        self.0 |= 1 << s.0;
    }

    pub fn with(self, s: GeneratorId) -> Self {
        GeneratorSet(self.0 | 1 << s.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 & other.0)
    }

    pub fn difference(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 & !other.0)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = GeneratorId> {
        let bits = self.0;
        (0..64u8).filter(move |i| bits >> i & 1 == 1).map(GeneratorId)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<GeneratorId> {
        (self.0 != 0).then(|| GeneratorId(self.0.trailing_zeros() as u8))
    }

    /// All subsets of `self`, in increasing bit order.
    pub fn subsets(self) -> impl Iterator<Item = GeneratorSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(GeneratorSet(cur))
        })
    }
}

impl FromIterator<GeneratorId> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = GeneratorId>>(iter: I) -> Self {
        let mut set = GeneratorSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

/// A finite word over the generators of a Coxeter graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterWord(pub Vec<GeneratorId>);

impl CoxeterWord {
    pub fn empty() -> Self {
        CoxeterWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GeneratorId] {
        &self.0
    }

    pub fn support(&self) -> GeneratorSet {
        self.0.iter().copied().collect()
    }

    pub fn reversed(&self) -> Self {
        CoxeterWord(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<GeneratorId>> for CoxeterWord {
    fn from(letters: Vec<GeneratorId>) -> Self {
        CoxeterWord(letters)
    }
}

/// The alternating word `a b a b ...` of length `m`.
pub fn alternating_word(
    a: GeneratorId,
    b: GeneratorId,
    m: usize,
) -> Result<CoxeterWord, CoxeterError> {
    if a == b {
        return Err(CoxeterError::SameGenerator);
    }
    Ok(CoxeterWord(
        (0..m).map(|i| if i % 2 == 0 { a } else { b }).collect(),
    ))
}

/// Generator names plus the symmetric label matrix `m_{s,t}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    names: Vec<String>,
    labels: Vec<Label>,
}

impl CoxeterGraph {
    /// A graph with the given generators and no edges (all labels 2).
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self, CoxeterError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_GENERATORS {
            return Err(CoxeterError::TooManyGenerators(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(CoxeterError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(CoxeterError::DuplicateGenerator(name.clone()));
            }
        }
        let n = names.len();
        let mut labels = vec![Label::Finite(2); n * n];
        for i in 0..n {
            labels[i * n + i] = Label::Finite(1);
        }
        Ok(CoxeterGraph { names, labels })
    }

    /// Sets `m_{s,t} = m_{t,s}`.
    pub fn set_label(
        &mut self,
        s: GeneratorId,
        t: GeneratorId,
        label: Label,
    ) -> Result<(), CoxeterError> {
        if s == t {
            return Err(CoxeterError::SameGenerator);
        }
        if let Label::Finite(m) = label {
            if m < 2 {
                return Err(CoxeterError::InvalidLabel(m.to_string()));
            }
        }
        let n = self.rank();
        if s.index() >= n || t.index() >= n {
            return Err(CoxeterError::UnknownGeneratorId(s.0.max(t.0)));
        }
        self.labels[s.index() * n + t.index()] = label;
        self.labels[t.index() * n + s.index()] = label;
        Ok(())
    }

    /// Path graph `names[0] - names[1] - ...` with the given consecutive labels.
    pub fn path<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        labels: &[Label],
    ) -> Result<Self, CoxeterError> {
        let mut graph = CoxeterGraph::new(names)?;
        for (i, &label) in labels.iter().enumerate() {
            graph.set_label(GeneratorId(i as u8), GeneratorId(i as u8 + 1), label)?;
        }
        Ok(graph)
    }

    /// Dihedral graph `I2(m)` on generators `s`, `t`.
    pub fn dihedral(m: Label) -> Result<Self, CoxeterError> {
        CoxeterGraph::path(["s", "t"], &[m])
    }

    /// Type `A_n` on generators `s1 .. sn`.
    pub fn type_a(n: usize) -> Result<Self, CoxeterError> {
        let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        CoxeterGraph::path(names, &vec![Label::Finite(3); n.saturating_sub(1)])
    }

    /// Parses the line-based graph format:
    ///
    /// ```text
    /// gens: s t u
    /// edge: s t 3
    /// edge: t u inf   # comment
    /// ```
    pub fn parse(text: &str) -> Result<Self, CoxeterError> {
        let mut graph: Option<CoxeterGraph> = None;
        let mut seen_edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let lineno = lineno + 1;
            let malformed = |msg: &str| CoxeterError::Parse {
                line: lineno,
                message: msg.to_string(),
            };
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| malformed("expected `gens:` or `edge:`"))?;
            match key.trim() {
                "gens" => {
                    if graph.is_some() {
                        return Err(malformed("`gens:` declared more than once"));
                    }
                    let names: Vec<&str> = rest.split_whitespace().collect();
                    graph = Some(CoxeterGraph::new(names).map_err(|e| match e {
                        CoxeterError::DuplicateGenerator(_)
                        | CoxeterError::TooManyGenerators(_) => e,
                        other => malformed(&other.to_string()),
                    })?);
                }
                "edge" => {
                    let graph = graph
                        .as_mut()
                        .ok_or_else(|| malformed("`edge:` before `gens:`"))?;
                    let fields: Vec<&str> = rest.split_whitespace().collect();
                    let [a, b, label] = fields[..] else {
                        return Err(malformed("expected `edge: <name> <name> <label>`"));
                    };
                    let s = graph
                        .generator(a)
                        .ok_or_else(|| CoxeterError::UndeclaredGenerator(a.to_string()))?;
                    let t = graph
                        .generator(b)
                        .ok_or_else(|| CoxeterError::UndeclaredGenerator(b.to_string()))?;
                    if s == t {
                        return Err(malformed("edge joins a generator to itself"));
                    }
                    let key = (s.min(t), s.max(t));
                    if seen_edges.contains(&key) {
                        return Err(malformed("edge declared more than once"));
                    }
                    seen_edges.push(key);
                    let label = parse_label(label)?;
                    graph.set_label(s, t, label)?;
                }
                _ => return Err(malformed("expected `gens:` or `edge:`")),
            }
        }
        graph.ok_or(CoxeterError::Parse {
            line: 0,
            message: "missing `gens:` line".to_string(),
        })
    }

    /// Inverse of [`CoxeterGraph::parse`]: only edges with label other than 2 are written.
    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.names.join(" "));
        for s in self.generators() {
            for t in self.generators().filter(|t| *t > s) {
                let label = self.label(s, t);
                if label != Label::Finite(2) {
                    out.push_str(&format!("edge: {} {} {}\n", self.name(s), self.name(t), label));
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> {
        (0..self.rank() as u8).map(GeneratorId)
    }

    pub fn all(&self) -> GeneratorSet {
        GeneratorSet::full(self.rank())
    }

    pub fn name(&self, s: GeneratorId) -> &str {
        &self.names[s.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator(&self, name: &str) -> Option<GeneratorId> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| GeneratorId(i as u8))
    }

    pub fn label(&self, s: GeneratorId, t: GeneratorId) -> Label {
        self.labels[s.index() * self.rank() + t.index()]
    }

    /// Whether every off-diagonal label is `inf` (the Artin group is free).
    pub fn is_free(&self) -> bool {
        self.generators().all(|s| {
            self.generators()
                .all(|t| s == t || self.label(s, t) == Label::Infinite)
        })
    }

    /// Stable 64-bit digest of names and labels; equal graphs give equal digests.
    pub fn fingerprint(&self) -> u64 {
        let mut hasher = DefaultHasher::new();
        self.hash(&mut hasher);
        hasher.finish()
    }

    /// Generators `t` with `t != s` and `m_{s,t} >= 3`.
    pub fn neighbours(&self, s: GeneratorId, within: GeneratorSet) -> GeneratorSet {
        within
            .iter()
            .filter(|&t| t != s && self.label(s, t) != Label::Finite(2))
            .collect()
    }

    /// Connected components of the subgraph spanned by `set`.
    pub fn components(&self, set: GeneratorSet) -> Vec<GeneratorSet> {
        let mut remaining = set;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = GeneratorSet::singleton(start);
            let mut frontier = vec![start];
            while let Some(s) = frontier.pop() {
                for t in self.neighbours(s, set).iter() {
                    if !comp.contains(t) {
                        comp.insert(t);
                        frontier.push(t);
                    }
                }
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn check_word(&self, word: &CoxeterWord) -> Result<(), CoxeterError> {
        match word.0.iter().find(|s| s.index() >= self.rank()) {
            Some(s) => Err(CoxeterError::UnknownGeneratorId(s.0)),
            None => Ok(()),
        }
    }

    /// Whitespace-separated generator names.
    pub fn parse_word(&self, text: &str) -> Result<CoxeterWord, CoxeterError> {
        text.split_whitespace()
            .map(|tok| {
                self.generator(tok)
                    .ok_or_else(|| CoxeterError::UndeclaredGenerator(tok.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(CoxeterWord)
    }

    /// Comma- or whitespace-separated generator names.
    pub fn parse_set(&self, text: &str) -> Result<GeneratorSet, CoxeterError> {
        text.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                self.generator(tok)
                    .ok_or_else(|| CoxeterError::UndeclaredGenerator(tok.to_string()))
            })
            .collect()
    }

    /// Names separated by spaces; the empty word is rendered as `1`.
    pub fn format_word(&self, word: &CoxeterWord) -> String {
        if word.is_empty() {
            return "1".to_string();
        }
        word.0
            .iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_set(&self, set: GeneratorSet) -> String {
        let names: Vec<&str> = set.iter().map(|s| self.name(s)).collect();
        format!("{{{}}}", names.join(","))
    }
}

fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "1"
        && !name.contains('^')
        && name.chars().all(|c| c.is_alphanumeric() || c == '_')
}

fn parse_label(text: &str) -> Result<Label, CoxeterError> {
    if text == "inf" {
        return Ok(Label::Infinite);
    }
    match text.parse::<u32>() {
        Ok(m) if m >= 2 => Ok(Label::Finite(m)),
        _ => Err(CoxeterError::InvalidLabel(text.to_string())),
    }
}
