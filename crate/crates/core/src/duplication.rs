//! Representation of an arbitrary finite poset `P` through its duplication.
//!
//! `E = {0} + P + P^op + {1}` is a horizontal sum: copies of `P` and of its
//! opposite side by side, mutually incomparable, between a new bottom and
//! top, with `Left(p)⊥ = Right(p)`. Its dual space is homeomorphic to the
//! monotone valuations `Y` of `P` carrying the closures generated by
//! `σ₁(p) = { y : y(p) = 1 }` and `σ₂(p) = { y : y(p) = 0 }`, and `P` is
//! recovered as the proper subsets of `Y` that are `σ₁`-closed and
//! `σ₂`-open.

use serde::Serialize;

use crate::closure::{
    are_mutually_inverse, is_continuous, join_closures, mixed_families, preimage,
    BiclosureSpace, ClosureSpace, ContinuityMode, PointSubset, Side,
};
use crate::mayet::build_dual;
use crate::order::{enumerate_monotone, BoundedPoset, OrthoPoset, Poset, TwoValuation};
use crate::report::{all_passed, Check, Witness};
use crate::{Caps, Error, Result};

/// Which part of the duplicated carrier an element of `E` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Tag {
    Bot,
    Top,
    /// the copy of `p` in `P`
    Left(usize),
    /// the copy of `p` in `P^op`
    Right(usize),
}

#[derive(Debug, Clone)]
pub struct Duplication {
    source: Poset,
    tags: Vec<Tag>,
    e: OrthoPoset,
}

/// Builds `E`. Element order: bottom, `Left(p)` for each `p`, `Right(p)` for
/// each `p`, top. Labels are `0`, `L:p`, `R:p`, `1`, which cannot collide
/// whatever the labels of `P` are.
pub fn duplicate(p: &Poset) -> Duplication {
    let n = p.len();
    let size = 2 * n + 2;
    let mut tags = Vec::with_capacity(size);
    tags.push(Tag::Bot);
    tags.extend((0..n).map(Tag::Left));
    tags.extend((0..n).map(Tag::Right));
    tags.push(Tag::Top);

    let labels = tags
        .iter()
        .map(|t| match *t {
            Tag::Bot => "0".to_owned(),
            Tag::Top => "1".to_owned(),
            Tag::Left(i) => format!("L:{}", p.label(i)),
            Tag::Right(i) => format!("R:{}", p.label(i)),
        })
        .collect();

    let mut le = vec![false; size * size];
    for (a, ta) in tags.iter().enumerate() {
        for (b, tb) in tags.iter().enumerate() {
            le[a * size + b] = match (*ta, *tb) {
                (Tag::Bot, _) | (_, Tag::Top) => true,
                (Tag::Left(i), Tag::Left(j)) => p.le(i, j),
                (Tag::Right(i), Tag::Right(j)) => p.le(j, i),
                _ => false,
            };
        }
    }
    let comp = tags
        .iter()
        .map(|t| match *t {
            Tag::Bot => size - 1,
            Tag::Top => 0,
            Tag::Left(i) => 1 + n + i,
            Tag::Right(i) => 1 + i,
        })
        .collect();

    let poset = Poset::from_matrix(labels, le).expect("duplication is a partial order");
    let bounded = BoundedPoset::with_bounds(poset, 0, size - 1).expect("duplication is bounded");
    let e = OrthoPoset::new(bounded, comp).expect("duplication is orthocomplemented");
    Duplication {
        source: p.clone(),
        tags,
        e,
    }
}

impl Duplication {
    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn ortho(&self) -> &OrthoPoset {
        &self.e
    }

    pub fn tags(&self) -> &[Tag] {
        &self.tags
    }

    pub fn tag(&self, idx: usize) -> Tag {
        self.tags[idx]
    }

    pub fn bot(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.tags.len() - 1
    }

    pub fn left(&self, p: usize) -> usize {
        1 + p
    }

    pub fn right(&self, p: usize) -> usize {
        1 + self.source.len() + p
    }

    /// `ρ : P -> P^op` as a map into `E`.
    pub fn rho(&self, p: usize) -> usize {
        self.right(p)
    }
}

/// The monotone valuations of `P` with the closures generated by `σ₁(P)`,
/// `σ₂(P)` and their union.
#[derive(Debug, Clone)]
pub struct YSpace {
    source: Poset,
    points: Vec<TwoValuation>,
    sigma1_table: Vec<PointSubset>,
    sigma2_table: Vec<PointSubset>,
    bi: BiclosureSpace,
    joined: ClosureSpace,
}

pub fn build_y_space(p: &Poset, caps: Caps) -> Result<YSpace> {
    let points = enumerate_monotone(p, caps.valuations)?;
    let m = points.len();
    let labels: Vec<String> = points.iter().map(|y| y.to_string()).collect();
    let sigma1_table: Vec<PointSubset> = (0..p.len())
        .map(|el| PointSubset::from_fn(m, |y| points[y].get(el)))
        .collect();
    let sigma2_table: Vec<PointSubset> = sigma1_table.iter().map(PointSubset::complement).collect();
    let bi = BiclosureSpace::new(labels.clone(), sigma1_table.clone(), sigma2_table.clone())?;
    let joined = join_closures(labels, &sigma1_table, &sigma2_table)?;
    Ok(YSpace {
        source: p.clone(),
        points,
        sigma1_table,
        sigma2_table,
        bi,
        joined,
    })
}

impl YSpace {
    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn points(&self) -> &[TwoValuation] {
        &self.points
    }

    pub fn sigma1(&self, p: usize) -> &PointSubset {
        &self.sigma1_table[p]
    }

    pub fn sigma2(&self, p: usize) -> &PointSubset {
        &self.sigma2_table[p]
    }

    pub fn sigma1_table(&self) -> &[PointSubset] {
        &self.sigma1_table
    }

    pub fn sigma2_table(&self) -> &[PointSubset] {
        &self.sigma2_table
    }

    pub fn bi(&self) -> &BiclosureSpace {
        &self.bi
    }

    pub fn joined(&self) -> &ClosureSpace {
        &self.joined
    }

    pub fn index_of(&self, y: &TwoValuation) -> Option<usize> {
        self.points.binary_search(y).ok()
    }
}

/// `φ(x) = x|_P`, read off the `Left` copy.
pub fn restrict_phi(d: &Duplication, x: &TwoValuation) -> Result<TwoValuation> {
    let e = d.ortho();
    if x.len() != e.len() {
        return Err(Error::SizeMismatch {
            expected: e.len(),
            found: x.len(),
        });
    }
    if !x.is_orthovaluation(e.poset(), e.comp()) {
        return Err(Error::NotOrthovaluation);
    }
    Ok(TwoValuation::new(
        (0..d.source().len()).map(|p| x.get(d.left(p))).collect(),
    ))
}

/// `ψ(y) = y^E`: `0 -> 0`, `1 -> 1`, `Left(p) -> y(p)`, `Right(p) -> 1 - y(p)`.
pub fn extend_psi(d: &Duplication, y: &TwoValuation) -> Result<TwoValuation> {
    let p = d.source();
    if y.len() != p.len() {
        return Err(Error::SizeMismatch {
            expected: p.len(),
            found: y.len(),
        });
    }
    if !y.is_monotone(p) {
        return Err(Error::NotMonotone);
    }
    Ok(TwoValuation::new(
        d.tags()
            .iter()
            .map(|t| match *t {
                Tag::Bot => false,
                Tag::Top => true,
                Tag::Left(i) => y.get(i),
                Tag::Right(i) => !y.get(i),
            })
            .collect(),
    ))
}

/// `ψ^{-1}(σ(e))` for one element `e` of `E`.
#[derive(Debug, Clone, Serialize)]
pub struct PreimageRow {
    pub element: String,
    pub preimage: Vec<String>,
    /// closed in `(Y, C₁ ∨ C₂)`
    pub closed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HomeoReport {
    pub e_size: usize,
    pub x_size: usize,
    pub y_size: usize,
    pub mode: ContinuityMode,
    pub checks: Vec<Check>,
    pub preimage_table: Vec<PreimageRow>,
}

impl HomeoReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Checks that restriction and extension are mutually inverse bijections
/// between the dual of `duplicate(p)` and `Y`, continuous in both
/// directions for `(X, C)` and `(Y, C₁ ∨ C₂)`.
pub fn verify_homeo(p: &Poset, caps: Caps, mode: ContinuityMode) -> Result<HomeoReport> {
    let d = duplicate(p);
    let dual = build_dual(d.ortho(), caps)?;
    let y = build_y_space(p, caps)?;
    let xs = dual.points();
    let x_labels = dual.space().points();
    let y_labels = y.joined().points();

    let mut phi = Vec::with_capacity(xs.len());
    let mut bijection = None;
    for (i, x) in xs.iter().enumerate() {
        let img = restrict_phi(&d, x)?;
        match y.index_of(&img) {
            Some(j) => phi.push(j),
            None => {
                bijection.get_or_insert_with(|| {
                    Witness::new("φ(x) is not a monotone valuation", vec![x_labels[i].clone()])
                });
            }
        }
    }
    let mut psi = Vec::with_capacity(y.points().len());
    for (j, yv) in y.points().iter().enumerate() {
        let img = extend_psi(&d, yv)?;
        match xs.binary_search(&img) {
            Ok(i) => psi.push(i),
            Err(_) => {
                bijection.get_or_insert_with(|| {
                    Witness::new("ψ(y) is not an orthovaluation", vec![y_labels[j].clone()])
                });
            }
        }
    }
    if bijection.is_none() && !are_mutually_inverse(&phi, &psi) {
        bijection = Some(Witness::new(
            "φ and ψ are not mutually inverse",
            vec![format!("|X| = {}", xs.len()), format!("|Y| = {}", y.points().len())],
        ));
    }

    let mut checks = vec![Check::from_counterexample("bijection", bijection.clone())];
    if bijection.is_none() {
        let x_space = dual.space();
        let phi_ok = is_continuous(&phi, x_space, y.joined(), mode, caps.family)?;
        let psi_ok = is_continuous(&psi, y.joined(), x_space, mode, caps.family)?;
        checks.push(continuity_check("phi-continuous", phi_ok, mode));
        checks.push(continuity_check("psi-continuous", psi_ok, mode));
    }

    let sigma = dual.sigma_table();
    let mut preimage_table = Vec::with_capacity(d.ortho().len());
    let mut rows_mismatch = None;
    if bijection.is_none() {
        for (el, tag) in d.tags().iter().enumerate() {
            let pre = preimage(&psi, &sigma[el]);
            let expected = match *tag {
                Tag::Left(i) => Some(y.sigma1(i)),
                Tag::Right(i) => Some(y.sigma2(i)),
                _ => None,
            };
            let label = d.ortho().poset().label(el).to_owned();
            if let Some(exp) = expected {
                if *exp != pre && rows_mismatch.is_none() {
                    rows_mismatch = Some(Witness::new(
                        format!("ψ⁻¹(σ({label})) differs from the matching σ₁/σ₂ set"),
                        vec![label.clone(), pre.render(y_labels)],
                    ));
                }
            }
            preimage_table.push(PreimageRow {
                element: label,
                preimage: pre.labels(y_labels),
                closed: y.joined().is_closed(&pre)?,
            });
        }
        checks.push(Check::from_counterexample("preimage-rows", rows_mismatch));
    }

    Ok(HomeoReport {
        e_size: d.ortho().len(),
        x_size: xs.len(),
        y_size: y.points().len(),
        mode,
        checks,
        preimage_table,
    })
}

fn continuity_check(name: &'static str, ok: bool, mode: ContinuityMode) -> Check {
    if ok {
        Check::pass(name)
    } else {
        Check::fail(
            name,
            Witness::new(format!("map is not {mode:?} continuous"), vec![]),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MainLemmaReport {
    pub p_size: usize,
    pub y_size: usize,
    /// sets closed for the first closure and open for the second, minus ∅ and `Y`
    pub family: Vec<PointSubset>,
    pub checks: Vec<Check>,
}

impl MainLemmaReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Checks that `σ₁` is an order isomorphism from `P` onto the proper
/// subsets of `Y` that are closed in the first closure and open in the
/// second.
pub fn verify_main_lemma(p: &Poset, caps: Caps) -> Result<MainLemmaReport> {
    let y = build_y_space(p, caps)?;
    let family: Vec<PointSubset> = mixed_families(y.bi(), Side::First, Side::Second, caps.family)?
        .into_iter()
        .filter(|a| !a.is_empty() && !a.is_full())
        .collect();
    let labels = y.bi().points();
    let n = p.len();
    let s1 = y.sigma1_table();
    let label = |i: usize| p.label(i).to_owned();

    let bijection = (0..n)
        .find(|&i| !family.contains(&s1[i]))
        .map(|i| {
            Witness::new(
                format!("σ₁({}) is not in the family", label(i)),
                vec![label(i), s1[i].render(labels)],
            )
        })
        .or_else(|| {
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| s1[i] == s1[j])
                .map(|(i, j)| {
                    Witness::new(
                        format!("σ₁({}) = σ₁({})", label(i), label(j)),
                        vec![label(i), label(j)],
                    )
                })
        })
        .or_else(|| {
            family.iter().find(|a| !s1.contains(a)).map(|a| {
                Witness::new("family member is not of the form σ₁(p)", vec![a.render(labels)])
            })
        });

    let order = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| p.le(i, j) != s1[i].is_subset(&s1[j]))
        .map(|(i, j)| {
            Witness::new(
                format!("order of {} and {} is not reflected by σ₁", label(i), label(j)),
                vec![label(i), label(j)],
            )
        });

    Ok(MainLemmaReport {
        p_size: n,
        y_size: y.points().len(),
        family,
        checks: vec![
            Check::from_counterexample("sigma1-bijection", bijection),
            Check::from_counterexample("sigma1-order-isomorphism", order),
        ],
    })
}
