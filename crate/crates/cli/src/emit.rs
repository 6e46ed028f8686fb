//! JSON and Graphviz DOT rendering.
//!
//! All output is deterministic: element order follows the input, families
//! follow the canonical set order of `PointSubset`, maps are sorted.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use duality_core::closure::{mixed_families, ClosureSpace, PointSubset, Side};
use duality_core::duplication::{duplicate, YSpace};
use duality_core::mayet::MayetDual;
use duality_core::order::Poset;
use duality_core::Caps;

use crate::{CliError, PosetDocument, VerificationReport};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram: one edge per cover pair, pointing upwards.
pub fn poset_dot(p: &Poset, name: &str) -> String {
    let mut out = format!("digraph {} {{\n  rankdir=BT;\n", quote(name));
    for l in p.labels() {
        writeln!(out, "  {};", quote(l)).unwrap();
    }
    for (i, j) in p.covers() {
        writeln!(out, "  {} -> {};", quote(p.label(i)), quote(p.label(j))).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a family of sets ordered by inclusion.
pub fn family_dot(family: &[PointSubset], point_labels: &[String], name: &str) -> String {
    let p = duality_core::closure::family_as_poset(family, point_labels)
        .expect("distinct sets form a poset");
    poset_dot(&p, name)
}

pub fn emit_document(doc: &PosetDocument, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json(doc)),
        Format::Dot => Ok(poset_dot(&doc.poset()?, "poset")),
    }
}

pub fn emit_documents(docs: &[PosetDocument], format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json(&docs)),
        Format::Dot => docs
            .iter()
            .enumerate()
            .map(|(i, d)| Ok(poset_dot(&d.poset()?, &format!("poset{i}"))))
            .collect(),
    }
}

#[derive(Serialize)]
struct SpaceJson<'a> {
    points: &'a [String],
    base: Vec<Vec<String>>,
}

fn space_json(s: &ClosureSpace) -> SpaceJson<'_> {
    SpaceJson {
        points: s.points(),
        base: s.base().iter().map(|k| k.labels(s.points())).collect(),
    }
}

pub fn emit_space(s: &ClosureSpace, cap: usize, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json(&space_json(s))),
        Format::Dot => Ok(family_dot(&s.closed_family(cap)?, s.points(), "closed")),
    }
}

pub fn emit_family(
    family: &[PointSubset],
    point_labels: &[String],
    format: Format,
) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let sets: Vec<Vec<String>> = family.iter().map(|a| a.labels(point_labels)).collect();
            Ok(json(&sets))
        }
        Format::Dot => Ok(family_dot(family, point_labels, "family")),
    }
}

pub fn emit_report(report: &VerificationReport, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json(report)),
        Format::Dot => Err(CliError::UnsupportedFormat("dot")),
    }
}

#[derive(Serialize)]
struct DualJson<'a> {
    source: PosetDocument,
    space: SpaceJson<'a>,
    sigma: BTreeMap<&'a str, Vec<String>>,
    closed_family: Vec<Vec<String>>,
    clopen_family: Vec<Vec<String>>,
}

/// JSON: points, `σ` table, closed and clopen families. DOT: the clopen
/// family ordered by inclusion.
pub fn emit_dual(d: &MayetDual, cap: usize, format: Format) -> Result<String, CliError> {
    let space = d.space();
    let points = space.points();
    let clopen = space.clopen_family(cap)?;
    match format {
        Format::Json => {
            let poset = d.source().poset();
            let closed = space.closed_family(cap)?;
            let out = DualJson {
                source: PosetDocument::from_ortho(d.source()),
                space: space_json(space),
                sigma: (0..poset.len())
                    .map(|e| (poset.label(e), d.sigma_table()[e].labels(points)))
                    .collect(),
                closed_family: closed.iter().map(|a| a.labels(points)).collect(),
                clopen_family: clopen.iter().map(|a| a.labels(points)).collect(),
            };
            Ok(json(&out))
        }
        Format::Dot => Ok(family_dot(&clopen, points, "clopen")),
    }
}

#[derive(Serialize)]
struct YJson<'a> {
    points: &'a [String],
    sigma1: BTreeMap<&'a str, Vec<String>>,
    sigma2: BTreeMap<&'a str, Vec<String>>,
    c1o2_proper: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct DuplicateJson<'a> {
    e: PosetDocument,
    y: YJson<'a>,
}

/// JSON: the duplicated orthoposet `E` as a document, and the `Y` space.
/// DOT: Hasse diagram of `E`.
pub fn emit_duplicate(p: &Poset, y: &YSpace, cap: usize, format: Format) -> Result<String, CliError> {
    let d = duplicate(p);
    match format {
        Format::Json => {
            let points = y.bi().points();
            let table = |t: &'_ [PointSubset]| {
                (0..p.len())
                    .map(|i| (p.label(i), t[i].labels(points)))
                    .collect::<BTreeMap<_, _>>()
            };
            let proper = mixed_families(y.bi(), Side::First, Side::Second, cap)?
                .into_iter()
                .filter(|a| !a.is_empty() && !a.is_full())
                .map(|a| a.labels(points))
                .collect();
            let out = DuplicateJson {
                e: PosetDocument::from_ortho(d.ortho()),
                y: YJson {
                    points,
                    sigma1: table(y.sigma1_table()),
                    sigma2: table(y.sigma2_table()),
                    c1o2_proper: proper,
                },
            };
            Ok(json(&out))
        }
        Format::Dot => Ok(poset_dot(d.ortho().poset(), "duplicate")),
    }
}

/// Default caps overridden by a single `--cap` value.
pub fn caps_from(cap: Option<usize>) -> Caps {
    cap.map(Caps::uniform).unwrap_or_default()
}
