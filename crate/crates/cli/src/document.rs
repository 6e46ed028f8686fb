//! The JSON input document.
//!
//! ```json
//! {
//!   "elements": ["0", "a", "b", "1"],
//!   "le": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]],
//!   "bottom": "0",
//!   "top": "1",
//!   "complement": {"0": "1", "1": "0", "a": "b", "b": "a"}
//! }
//! ```
//!
//! `le` lists generating pairs; the order is their reflexive-transitive
//! closure. `bottom`, `top` and `complement` are optional. Unknown fields
//! are rejected.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use duality_core::involution::InvolutedPoset;
use duality_core::order::{validate_poset, BoundedPoset, OrthoPoset, Poset};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub elements: Vec<String>,
    pub le: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<BTreeMap<String, String>>,
}

/// Parses and structurally validates a document. Order-theoretic checks
/// (antisymmetry, bounds, complementation axioms) happen later.
pub fn parse_poset(text: &str) -> Result<PosetDocument, CliError> {
    let doc: PosetDocument = serde_json::from_str(text)?;
    doc.check_structure()?;
    Ok(doc)
}

impl PosetDocument {
    /// Labels distinct, every referenced label present, complement total
    /// and involutive.
    pub fn check_structure(&self) -> Result<(), CliError> {
        let mut known = HashSet::with_capacity(self.elements.len());
        for e in &self.elements {
            if !known.insert(e.as_str()) {
                return Err(CliError::DuplicateLabel(e.clone()));
            }
        }
        let dangling = |l: &String| -> Result<(), CliError> {
            if known.contains(l.as_str()) {
                Ok(())
            } else {
                Err(CliError::DanglingLabel(l.clone()))
            }
        };
        for (a, b) in &self.le {
            dangling(a)?;
            dangling(b)?;
        }
        if let Some(b) = &self.bottom {
            dangling(b)?;
        }
        if let Some(t) = &self.top {
            dangling(t)?;
        }
        if let Some(table) = &self.complement {
            for (k, v) in table {
                dangling(k)?;
                dangling(v)?;
            }
            if let Some(missing) = self.elements.iter().find(|e| !table.contains_key(*e)) {
                return Err(CliError::InvalidComplement(format!("no entry for `{missing}`")));
            }
            if let Some((k, v)) = table.iter().find(|(k, v)| table[*v] != **k) {
                return Err(CliError::InvalidComplement(format!(
                    "`{k}` -> `{v}` -> `{}` is not involutive",
                    table[v]
                )));
            }
        }
        Ok(())
    }

    pub fn poset(&self) -> Result<Poset, CliError> {
        Ok(validate_poset(&self.elements, &self.le)?)
    }

    /// Uses the declared bounds when present, the inferred ones otherwise.
    pub fn bounded(&self) -> Result<BoundedPoset, CliError> {
        let p = self.poset()?;
        let bottom = match &self.bottom {
            Some(l) => Some(p.index_of(l).ok_or_else(|| CliError::DanglingLabel(l.clone()))?),
            None => p.bottom(),
        };
        let top = match &self.top {
            Some(l) => Some(p.index_of(l).ok_or_else(|| CliError::DanglingLabel(l.clone()))?),
            None => p.top(),
        };
        match (bottom, top) {
            (Some(b), Some(t)) => Ok(BoundedPoset::with_bounds(p, b, t)?),
            (None, _) => Err(duality_core::Error::NotBounded("least").into()),
            (_, None) => Err(duality_core::Error::NotBounded("greatest").into()),
        }
    }

    /// The complement table as an index map over `p`'s element order.
    pub fn complement_indices(&self, p: &Poset) -> Result<Vec<usize>, CliError> {
        let table = self
            .complement
            .as_ref()
            .ok_or_else(|| CliError::Precondition("document has no complement table".into()))?;
        p.labels()
            .iter()
            .map(|l| {
                let target = table
                    .get(l)
                    .ok_or_else(|| CliError::InvalidComplement(format!("no entry for `{l}`")))?;
                p.index_of(target)
                    .ok_or_else(|| CliError::DanglingLabel(target.clone()))
            })
            .collect()
    }

    pub fn ortho(&self) -> Result<OrthoPoset, CliError> {
        let b = self.bounded()?;
        let c = self.complement_indices(b.poset())?;
        Ok(OrthoPoset::new(b, c)?)
    }

    pub fn involuted(&self) -> Result<InvolutedPoset, CliError> {
        let b = self.bounded()?;
        let c = self.complement_indices(b.poset())?;
        Ok(InvolutedPoset::new(b, c)?)
    }

    /// Document listing only the cover pairs of `p`.
    pub fn from_poset(p: &Poset) -> Self {
        PosetDocument {
            elements: p.labels().to_vec(),
            le: p
                .covers()
                .into_iter()
                .map(|(i, j)| (p.label(i).to_owned(), p.label(j).to_owned()))
                .collect(),
            bottom: None,
            top: None,
            complement: None,
        }
    }

    pub fn from_bounded(b: &BoundedPoset, comp: Option<&[usize]>) -> Self {
        let p = b.poset();
        let mut doc = PosetDocument::from_poset(p);
        doc.bottom = Some(p.label(b.bottom()).to_owned());
        doc.top = Some(p.label(b.top()).to_owned());
        doc.complement = comp.map(|c| {
            (0..p.len())
                .map(|i| (p.label(i).to_owned(), p.label(c[i]).to_owned()))
                .collect()
        });
        doc
    }

    pub fn from_ortho(e: &OrthoPoset) -> Self {
        PosetDocument::from_bounded(e.bounded(), Some(e.comp()))
    }
}
