//! Neural codes of sampled coverings and their translation into nerves,
//! concept lattices and implication queries.

mod cover;

pub use cover::{Domain, Grid, Region, SampledCover};

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::fca::{concepts, ConceptLattice, FormalContext};
use crate::homology::{betti, betti_poset, BettiVector, Field};

/// A set of firing patterns over `m` neurons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeuralCode {
    m: usize,
    /// Deduplicated, in graded order.
    words: Vec<BitSet>,
}

impl NeuralCode {
    pub fn new(m: usize, words: impl IntoIterator<Item = BitSet>) -> Result<Self> {
        let set: BTreeSet<BitSet> = words.into_iter().collect();
        if let Some(w) = set.iter().find(|w| w.bound() > m) {
            return Err(Error::domain(format!("word {w:?} uses a neuron outside 1..={m}")));
        }
        let mut words: Vec<BitSet> = set.into_iter().collect();
        words.sort_by(|a, b| a.cmp_graded(b));
        Ok(Self { m, words })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn words(&self) -> &[BitSet] {
        &self.words
    }

    pub fn contains(&self, word: &BitSet) -> bool {
        self.words.contains(word)
    }

    /// Whether some sample point lies outside every region.
    pub fn has_zero_word(&self) -> bool {
        self.words.first().is_some_and(BitSet::is_empty)
    }

    pub fn nonzero_words(&self) -> impl Iterator<Item = &BitSet> {
        self.words.iter().filter(|w| !w.is_empty())
    }

    /// Renames neuron `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.m {
            return Err(Error::domain("permutation length must equal the neuron count"));
        }
        Self::new(self.m, self.words.iter().map(|w| w.iter().map(|i| perm[i]).collect()))
    }

    /// Objects are neurons, attributes are codewords.
    pub fn context(&self) -> FormalContext {
        let rows = (0..self.m)
            .map(|i| (0..self.words.len()).filter(|&w| self.words[w].contains(i)).collect())
            .collect();
        FormalContext::from_rows(self.words.len(), rows).expect("rows index codewords")
    }

    /// 0/1 string with character `i` for neuron `i + 1`.
    pub fn word_string(&self, word: &BitSet) -> String {
        (0..self.m).map(|i| if word.contains(i) { '1' } else { '0' }).collect()
    }

    /// Reads `m=<int>` followed by one 0/1 word per line; `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut m = None;
        let mut words = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some(m) = m else {
                let value = line
                    .strip_prefix("m=")
                    .ok_or_else(|| Error::parse(n + 1, "expected header `m=<int>`"))?;
                m = Some(value.trim().parse().map_err(|_| Error::parse(n + 1, "bad neuron count"))?);
                continue;
            };
            if line.chars().count() != m {
                return Err(Error::parse(n + 1, format!("expected a word of length {m}")));
            }
            let mut word = BitSet::new();
            for (i, c) in line.chars().enumerate() {
                match c {
                    '1' => word.insert(i),
                    '0' => {}
                    other => return Err(Error::parse(n + 1, format!("unexpected character `{other}`"))),
                }
            }
            words.push(word);
        }
        let m = m.ok_or_else(|| Error::parse(0, "missing header `m=<int>`"))?;
        Self::new(m, words)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("m={}\n", self.m);
        for w in &self.words {
            out.push_str(&self.word_string(w));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for NeuralCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The distinct words `{x}'` over all sample points.
pub fn code_from_cover(cover: &SampledCover) -> NeuralCode {
    NeuralCode::new(cover.m(), cover.membership()).expect("words index regions")
}

/// The lower ideal generated by the nonzero words.
pub fn nerve_from_code(code: &NeuralCode) -> Result<SimplicialComplex> {
    if code.nonzero_words().next().is_none() {
        return Err(Error::domain("the code has no nonzero word"));
    }
    SimplicialComplex::from_maximal_allow_ghosts(code.m(), code.nonzero_words().cloned())
}

/// Concept lattice of the neurons × codewords context. Its extents are the
/// neuron sets `A` such that every `i ∉ A` is missed by some word containing `A`.
pub fn lattice_from_code(code: &NeuralCode) -> Result<ConceptLattice> {
    concepts(&code.context())
}

/// Whether every word containing `premise` also contains `target`.
pub fn implication_query(code: &NeuralCode, premise: &BitSet, target: usize) -> bool {
    code.words()
        .iter()
        .filter(|w| premise.is_subset(w))
        .all(|w| w.contains(target))
}

/// Comparison of what the nerve and the concept lattice see of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeNerveReport {
    pub neurons: usize,
    pub words: usize,
    pub zero_word: bool,
    pub nerve_f_vector: Vec<usize>,
    pub lattice_size: usize,
    /// Extents of the lattice, 1-based, in graded order.
    pub extents: Vec<Vec<usize>>,
    pub nerve_betti: BettiVector,
    /// Betti numbers of the concepts with nonempty extent and intent.
    pub lattice_betti: BettiVector,
    pub betti_equal: bool,
}

pub fn lattice_vs_nerve_report(code: &NeuralCode, field: Field) -> Result<LatticeNerveReport> {
    let nerve = nerve_from_code(code)?;
    let lattice = lattice_from_code(code)?;
    let nerve_betti = betti(&nerve, field, false)?;
    let lattice_betti = betti_poset(&lattice.proper_part(), field, false)?;
    Ok(LatticeNerveReport {
        neurons: code.m(),
        words: code.words().len(),
        zero_word: code.has_zero_word(),
        nerve_f_vector: nerve.f_vector()?.counts,
        lattice_size: lattice.len(),
        extents: lattice.extents().map(|e| e.iter().map(|i| i + 1).collect()).collect(),
        betti_equal: nerve_betti == lattice_betti,
        nerve_betti,
        lattice_betti,
    })
}

impl fmt::Display for LatticeNerveReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "neurons: {}", self.neurons)?;
        writeln!(f, "words: {}{}", self.words, if self.zero_word { " (including 0)" } else { "" })?;
        writeln!(f, "nerve f-vector: {}", join(&self.nerve_f_vector))?;
        writeln!(f, "lattice size: {}", self.lattice_size)?;
        let extents: Vec<String> = self
            .extents
            .iter()
            .map(|e| if e.is_empty() { "∅".to_string() } else { format!("{{{}}}", join(e).replace(' ', ",")) })
            .collect();
        writeln!(f, "extents: {}", extents.join(" "))?;
        writeln!(f, "nerve {}", self.nerve_betti)?;
        writeln!(f, "lattice {}", self.lattice_betti)?;
        writeln!(f, "betti equal: {}", self.betti_equal)
    }
}
