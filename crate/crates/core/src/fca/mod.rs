//! Formal contexts, derivation operators and the passage between contexts
//! and simplicial complexes.

mod lattice;
mod reduce;
mod weeding;

pub use lattice::{concepts, concepts_with_cap, Concept, ConceptJson, ConceptLattice, LatticeJson};
pub use reduce::{bpp_reduce, BitMatrix, Reduction, ReductionStep};
pub use weeding::{
    dual_check, duality, maximal_cover_nerve, weeding, weeding_via_stong, weeding_via_stong_trace,
    Duality,
};

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Which side of a context a set lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Objects,
    Attributes,
}

/// A binary relation between `nv` objects and `nw` attributes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalContext {
    nw: usize,
    /// `rows[v]` is the intent `{v}'`.
    rows: Vec<BitSet>,
    /// `cols[w]` is the extent `{w}'`.
    cols: Vec<BitSet>,
    name: String,
    object_names: Vec<String>,
    attribute_names: Vec<String>,
}

impl FormalContext {
    /// Builds a context from object rows over `nw` attributes.
    pub fn from_rows(nw: usize, rows: Vec<BitSet>) -> Result<Self> {
        let object_names = (1..=rows.len()).map(|i| format!("o{i}")).collect();
        let attribute_names = (1..=nw).map(|i| format!("a{i}")).collect();
        Self::from_rows_named(rows, String::new(), object_names, attribute_names)
    }

    pub fn from_rows_named(
        rows: Vec<BitSet>,
        name: String,
        object_names: Vec<String>,
        attribute_names: Vec<String>,
    ) -> Result<Self> {
        let nw = attribute_names.len();
        if object_names.len() != rows.len() {
            return Err(Error::domain("one name per object is required"));
        }
        let mut cols = vec![BitSet::new(); nw];
        for (v, row) in rows.iter().enumerate() {
            if row.bound() > nw {
                return Err(Error::domain(format!("object {} has an attribute outside 1..={nw}", v + 1)));
            }
            for w in row {
                cols[w].insert(v);
            }
        }
        Ok(Self {
            nw,
            rows,
            cols,
            name,
            object_names,
            attribute_names,
        })
    }

    pub fn nv(&self) -> usize {
        self.rows.len()
    }

    pub fn nw(&self) -> usize {
        self.nw
    }

    pub fn incidence(&self, v: usize, w: usize) -> bool {
        self.rows[v].contains(w)
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    pub fn cols(&self) -> &[BitSet] {
        &self.cols
    }

    pub fn object_names(&self) -> &[String] {
        &self.object_names
    }

    pub fn attribute_names(&self) -> &[String] {
        &self.attribute_names
    }

    /// The context with objects and attributes exchanged.
    pub fn transpose(&self) -> Self {
        Self {
            nw: self.nv(),
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            name: self.name.clone(),
            object_names: self.attribute_names.clone(),
            attribute_names: self.object_names.clone(),
        }
    }

    /// `A' = {w : v I w for all v ∈ A}`; `∅' ` is every attribute.
    pub fn derive_attr(&self, objects: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.nw);
        for v in objects {
            if let Some(row) = self.rows.get(v) {
                out.intersect_with(row);
            } else {
                return BitSet::new();
            }
        }
        out
    }

    /// `B' = {v : v I w for all w ∈ B}`; `∅'` is every object.
    pub fn derive_obj(&self, attributes: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.nv());
        for w in attributes {
            if let Some(col) = self.cols.get(w) {
                out.intersect_with(col);
            } else {
                return BitSet::new();
            }
        }
        out
    }

    /// `A''` for a set of objects.
    pub fn closure(&self, objects: &BitSet) -> BitSet {
        self.derive_obj(&self.derive_attr(objects))
    }

    /// `B''` for a set of attributes.
    pub fn attribute_closure(&self, attributes: &BitSet) -> BitSet {
        self.derive_attr(&self.derive_obj(attributes))
    }

    pub fn closure_on(&self, side: Side, set: &BitSet) -> BitSet {
        match side {
            Side::Objects => self.closure(set),
            Side::Attributes => self.attribute_closure(set),
        }
    }

    /// Whether the implication `premise → target` holds, i.e. `target ∈ premise''`.
    pub fn implication_holds(&self, side: Side, premise: &BitSet, target: usize) -> bool {
        self.closure_on(side, premise).contains(target)
    }

    /// True if some row or column is all zeros or all ones.
    pub fn has_constant_line(&self) -> bool {
        let (nv, nw) = (self.nv(), self.nw);
        self.rows.iter().any(|r| r.is_empty() || r.len() == nw)
            || self.cols.iter().any(|c| c.is_empty() || c.len() == nv)
    }

    /// Objects are vertices, attributes are maximal simplices (in stored
    /// order), incidence is membership.
    pub fn of_complex(k: &SimplicialComplex) -> Self {
        let rows = (0..k.m())
            .map(|v| {
                k.maximal()
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| s.contains(v))
                    .map(|(w, _)| w)
                    .collect()
            })
            .collect();
        let object_names = (1..=k.m()).map(|v| v.to_string()).collect();
        let attribute_names = k
            .maximal()
            .iter()
            .map(|s| s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        Self::from_rows_named(rows, String::new(), object_names, attribute_names)
            .expect("membership rows are in range")
    }

    /// `(K_C, L_C)`: the complex on objects generated by attribute extents
    /// and the complex on attributes generated by object intents. In strict
    /// mode an all-zero row or column is rejected.
    pub fn complexes(&self, strict: bool) -> Result<(SimplicialComplex, SimplicialComplex)> {
        if strict {
            if let Some(v) = self.rows.iter().position(BitSet::is_empty) {
                return Err(Error::domain(format!("object {} has no attributes", v + 1)));
            }
            if let Some(w) = self.cols.iter().position(BitSet::is_empty) {
                return Err(Error::domain(format!("attribute {} has no objects", w + 1)));
            }
        }
        let k = SimplicialComplex::from_maximal_allow_ghosts(self.nv(), self.cols.iter().cloned())?;
        let l = SimplicialComplex::from_maximal_allow_ghosts(self.nw, self.rows.iter().cloned())?;
        Ok((k, l))
    }

    /// Parses the Burmeister `.cxt` format.
    pub fn parse_cxt(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
            .collect();
        let mut it = lines.into_iter().peekable();
        match it.next() {
            Some((_, l)) if l.trim() == "B" => {}
            Some((n, _)) => return Err(Error::parse(n, "expected header `B`")),
            None => return Err(Error::parse(0, "empty input")),
        }
        // optional context name; counts follow
        let mut name = String::new();
        let mut counts = Vec::new();
        while counts.len() < 2 {
            let (n, l) = it.next().ok_or_else(|| Error::parse(0, "missing object/attribute counts"))?;
            let t = l.trim();
            if t.is_empty() {
                continue;
            }
            match t.parse::<usize>() {
                Ok(c) => counts.push(c),
                Err(_) if counts.is_empty() && name.is_empty() => name = t.to_string(),
                Err(_) => return Err(Error::parse(n, format!("`{t}` is not a count"))),
            }
        }
        let (nv, nw) = (counts[0], counts[1]);
        while it.peek().is_some_and(|(_, l)| l.trim().is_empty()) {
            it.next();
        }
        let mut take = |what: &str| -> Result<(usize, String)> {
            it.next()
                .map(|(n, l)| (n, l.to_string()))
                .ok_or_else(|| Error::parse(0, format!("unexpected end of input while reading {what}")))
        };
        let mut object_names = Vec::with_capacity(nv);
        for _ in 0..nv {
            object_names.push(take("object names")?.1);
        }
        let mut attribute_names = Vec::with_capacity(nw);
        for _ in 0..nw {
            attribute_names.push(take("attribute names")?.1);
        }
        let mut rows = Vec::with_capacity(nv);
        for _ in 0..nv {
            let (n, line) = take("incidence rows")?;
            let row = line.trim();
            if row.chars().count() != nw {
                return Err(Error::parse(n, format!("expected {nw} entries, found {}", row.chars().count())));
            }
            let mut set = BitSet::new();
            for (w, c) in row.chars().enumerate() {
                match c {
                    'X' | 'x' => set.insert(w),
                    '.' => {}
                    other => return Err(Error::parse(n, format!("unexpected character `{other}`"))),
                }
            }
            rows.push(set);
        }
        Self::from_rows_named(rows, name, object_names, attribute_names)
    }

    /// Canonical `.cxt` text: `B`, name line, counts, blank line, names, rows.
    pub fn to_cxt(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "B\n{}\n{}\n{}\n\n", self.name, self.nv(), self.nw);
        for n in self.object_names.iter().chain(self.attribute_names.iter()) {
            out.push_str(n);
            out.push('\n');
        }
        for row in &self.rows {
            out.extend((0..self.nw).map(|w| if row.contains(w) { 'X' } else { '.' }));
            out.push('\n');
        }
        out
    }
}

pub fn context_of_complex(k: &SimplicialComplex) -> FormalContext {
    FormalContext::of_complex(k)
}

pub fn complexes_of_context(ctx: &FormalContext, strict: bool) -> Result<(SimplicialComplex, SimplicialComplex)> {
    ctx.complexes(strict)
}
