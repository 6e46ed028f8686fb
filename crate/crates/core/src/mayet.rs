//! The dual closure space of an orthocomplemented poset.
//!
//! Points are the orthovaluations `E -> {0 < 1}`; each element `e` is sent
//! to `σ(e) = { x : x(e) = 1 }`, and the closure is generated by the sets
//! `σ(e)`.

use serde::Serialize;

use crate::closure::{ClosureSpace, PointSubset};
use crate::order::{enumerate_orthomonotone, OrthoPoset, TwoValuation};
use crate::report::{all_passed, Check, Witness};
use crate::{Caps, Error, Result};

#[derive(Debug, Clone)]
pub struct MayetDual {
    source: OrthoPoset,
    points: Vec<TwoValuation>,
    space: ClosureSpace,
    sigma_table: Vec<PointSubset>,
}

pub fn build_dual(e: &OrthoPoset, caps: Caps) -> Result<MayetDual> {
    let points = enumerate_orthomonotone(e, caps.valuations)?;
    let m = points.len();
    let sigma_table: Vec<PointSubset> = (0..e.len())
        .map(|el| PointSubset::from_fn(m, |x| points[x].get(el)))
        .collect();
    let space = ClosureSpace::new(
        points.iter().map(|x| x.to_string()).collect(),
        sigma_table.clone(),
    )?;
    Ok(MayetDual {
        source: e.clone(),
        points,
        space,
        sigma_table,
    })
}

impl MayetDual {
    pub fn source(&self) -> &OrthoPoset {
        &self.source
    }

    pub fn points(&self) -> &[TwoValuation] {
        &self.points
    }

    pub fn space(&self) -> &ClosureSpace {
        &self.space
    }

    pub fn sigma_table(&self) -> &[PointSubset] {
        &self.sigma_table
    }

    /// `σ(e)`.
    pub fn sigma(&self, e: usize) -> Result<&PointSubset> {
        self.sigma_table.get(e).ok_or(Error::UnknownElement(e))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MayetReport {
    pub x_size: usize,
    pub closed_family_size: usize,
    pub clopen_family: Vec<PointSubset>,
    /// injective, order embedding, complement preserving, clopen = image
    pub checks: Vec<Check>,
}

impl MayetReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Checks that `σ` is an ortho-isomorphism of `E` onto the clopen sets of
/// its dual, and that every clopen set is some `σ(e)`. The clopen family is
/// computed by full enumeration of the closed sets.
pub fn verify_mayet(e: &OrthoPoset, caps: Caps) -> Result<MayetReport> {
    let dual = build_dual(e, caps)?;
    let poset = e.poset();
    let n = e.len();
    let sigma = dual.sigma_table();
    let label = |i: usize| poset.label(i).to_owned();
    let pairs = || (0..n).flat_map(|i| (0..n).map(move |j| (i, j)));

    let injective = pairs()
        .find(|&(i, j)| i < j && sigma[i] == sigma[j])
        .map(|(i, j)| {
            Witness::new(
                format!("σ({}) = σ({})", label(i), label(j)),
                vec![label(i), label(j)],
            )
        });

    let order = pairs()
        .find(|&(i, j)| poset.le(i, j) != sigma[i].is_subset(&sigma[j]))
        .map(|(i, j)| {
            let msg = if poset.le(i, j) {
                format!("{0} <= {1} but σ({0}) ⊄ σ({1})", label(i), label(j))
            } else {
                format!("σ({0}) ⊆ σ({1}) but not {0} <= {1}", label(i), label(j))
            };
            Witness::new(msg, vec![label(i), label(j)])
        });

    let complement = (0..n)
        .find(|&i| sigma[e.complement(i)] != sigma[i].complement())
        .map(|i| {
            Witness::new(
                format!("σ(c({0})) is not the complement of σ({0})", label(i)),
                vec![label(i)],
            )
        });

    let closed = dual.space().closed_family(caps.family)?;
    let space = dual.space();
    let clopen: Vec<PointSubset> = closed
        .iter()
        .filter(|a| space.is_open(a).unwrap_or(false))
        .cloned()
        .collect();
    let points = space.points();
    let image = clopen
        .iter()
        .find(|a| !sigma.contains(a))
        .map(|a| {
            Witness::new(
                "clopen set is not of the form σ(e)",
                vec![a.render(points)],
            )
        })
        .or_else(|| {
            (0..n).find(|&i| !clopen.contains(&sigma[i])).map(|i| {
                Witness::new(
                    format!("σ({}) is not clopen", label(i)),
                    vec![label(i), sigma[i].render(points)],
                )
            })
        });

    Ok(MayetReport {
        x_size: dual.points().len(),
        closed_family_size: closed.len(),
        clopen_family: clopen,
        checks: vec![
            Check::from_counterexample("sigma-injective", injective),
            Check::from_counterexample("sigma-order-embedding", order),
            Check::from_counterexample("sigma-complement", complement),
            Check::from_counterexample("clopen-equals-image", image),
        ],
    })
}
