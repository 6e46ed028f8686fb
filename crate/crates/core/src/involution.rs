//! The involution `π(x)(p) = 1 - x(c(p))` on the monotone valuations of a
//! bounded poset with a candidate complementation `c`.
//!
//! `X` below is the set of monotone valuations of `P` with the two closures
//! generated by `σ₁(p) = { x : x(p) = 1 }` and `σ₂(p) = { x : x(p) = 0 }`
//! (the same construction as [`crate::duplication::YSpace`]).

use serde::Serialize;

use crate::closure::{
    first_discontinuity, is_bihomeomorphic_pair, preimage, ContinuityMode, PointSubset, Side,
};
use crate::duplication::{build_y_space, YSpace};
use crate::order::{
    check_ortho_axioms, enumerate_c_orthovaluations, AxiomReport, BoundedPoset, TwoValuation,
};
use crate::report::{all_passed, Check, Witness};
use crate::{Caps, Error, Result};

/// A bounded poset with an order-reversing involution `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutedPoset {
    base: BoundedPoset,
    c: Vec<usize>,
}

impl InvolutedPoset {
    pub fn new(base: BoundedPoset, c: Vec<usize>) -> Result<Self> {
        let p = base.poset();
        let n = p.len();
        if c.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: c.len(),
            });
        }
        if let Some(&m) = c.iter().find(|&&m| m >= n) {
            return Err(Error::UnknownElement(m));
        }
        if let Some(i) = (0..n).find(|&i| c[c[i]] != i) {
            return Err(Error::NotAntitoneInvolution(format!(
                "c(c({})) ≠ {}",
                p.label(i),
                p.label(i)
            )));
        }
        if let Some((i, j)) = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| p.le(i, j) && !p.le(c[j], c[i]))
        {
            return Err(Error::NotAntitoneInvolution(format!(
                "{} <= {} but not c({}) <= c({})",
                p.label(i),
                p.label(j),
                p.label(j),
                p.label(i)
            )));
        }
        Ok(InvolutedPoset { base, c })
    }

    pub fn bounded(&self) -> &BoundedPoset {
        &self.base
    }

    pub fn c(&self) -> &[usize] {
        &self.c
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    /// The brute-force orthocomplementation oracle for `(P, c)`.
    pub fn axioms(&self) -> AxiomReport {
        check_ortho_axioms(&self.base, &self.c).expect("c is a permutation")
    }
}

/// `π(x)(p) = 1 - x(c(p))`.
pub fn apply_pi(ip: &InvolutedPoset, x: &TwoValuation) -> Result<TwoValuation> {
    let p = ip.bounded().poset();
    if x.len() != p.len() {
        return Err(Error::SizeMismatch {
            expected: p.len(),
            found: x.len(),
        });
    }
    if !x.is_monotone(p) {
        return Err(Error::NotMonotone);
    }
    Ok(pi_unchecked(ip.c(), x))
}

fn pi_unchecked(c: &[usize], x: &TwoValuation) -> TwoValuation {
    TwoValuation::new(c.iter().map(|&cp| !x.get(cp)).collect())
}

/// `π` tabulated on the monotone valuations of `P`.
#[derive(Debug, Clone)]
pub struct PiMap {
    source: InvolutedPoset,
    space: YSpace,
    table: Vec<usize>,
}

pub fn build_pi(ip: &InvolutedPoset, caps: Caps) -> Result<PiMap> {
    let space = build_y_space(ip.bounded().poset(), caps)?;
    let table = space
        .points()
        .iter()
        .map(|x| {
            let img = pi_unchecked(ip.c(), x);
            space.index_of(&img).ok_or_else(|| {
                Error::NotAntitoneInvolution(format!("π({x}) = {img} is not monotone"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(i) = (0..table.len()).find(|&i| table[table[i]] != i) {
        return Err(Error::NotAntitoneInvolution(format!(
            "π(π({})) ≠ {}",
            space.points()[i],
            space.points()[i]
        )));
    }
    Ok(PiMap {
        source: ip.clone(),
        space,
        table,
    })
}

impl PiMap {
    pub fn source(&self) -> &InvolutedPoset {
        &self.source
    }

    /// Monotone valuations of `P` with `σ₁`, `σ₂` and their join.
    pub fn space(&self) -> &YSpace {
        &self.space
    }

    pub fn x_points(&self) -> &[TwoValuation] {
        self.space.points()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn fixed_points(&self) -> PointSubset {
        PointSubset::from_fn(self.table.len(), |i| self.table[i] == i)
    }

    fn point_labels(&self) -> &[String] {
        self.space.bi().points()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PiReport {
    pub x_size: usize,
    pub checks: Vec<Check>,
}

impl PiReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// Checks `π∘π = id`, `π⁻¹(σ₁(p)) = σ₂(c(p))` for every `p`, and weak
/// bicontinuity of `π : (X, C₁, C₂) -> (X, C₂, C₁)`.
pub fn verify_pi_bicontinuous(ip: &InvolutedPoset, caps: Caps) -> Result<PiReport> {
    let pi = build_pi(ip, caps)?;
    let y = pi.space();
    let p = ip.bounded().poset();
    let t = pi.table();

    let involution = (0..t.len()).find(|&i| t[t[i]] != i).map(|i| {
        Witness::new("π(π(x)) ≠ x", vec![pi.point_labels()[i].clone()])
    });

    let identity = (0..p.len())
        .find(|&i| preimage(t, y.sigma1(i)) != *y.sigma2(ip.c()[i]))
        .map(|i| {
            Witness::new(
                format!("π⁻¹(σ₁({})) ≠ σ₂(c({}))", p.label(i), p.label(i)),
                vec![p.label(i).to_owned()],
            )
        });

    let src = y.bi();
    let dst = src.swapped();
    let mut bicontinuous = None;
    for side in [Side::First, Side::Second] {
        if let Some(k) = first_discontinuity(
            t,
            src.space(side),
            dst.space(side),
            ContinuityMode::Weak,
            caps.family,
        )? {
            bicontinuous.get_or_insert_with(|| {
                Witness::new(
                    format!("preimage of a {side:?}-side closed set is not closed"),
                    vec![k.render(pi.point_labels())],
                )
            });
        }
    }

    Ok(PiReport {
        x_size: t.len(),
        checks: vec![
            Check::from_counterexample("pi-involution", involution),
            Check::from_counterexample("sigma1-preimage-identity", identity),
            Check::from_counterexample("weak-bicontinuous", bicontinuous),
        ],
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FixReport {
    pub x_size: usize,
    pub fix_size: usize,
    pub checks: Vec<Check>,
}

impl FixReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// `Fix(π)`, compared against the independently enumerated
/// c-orthovaluations (`x(c(p)) = 1 - x(p)` for all `p`).
pub fn ortho_fixed_points(
    ip: &InvolutedPoset,
    caps: Caps,
) -> Result<(Vec<TwoValuation>, FixReport)> {
    let pi = build_pi(ip, caps)?;
    let fixed: Vec<TwoValuation> = pi
        .fixed_points()
        .points()
        .map(|i| pi.x_points()[i].clone())
        .collect();
    let expected = enumerate_c_orthovaluations(ip.bounded().poset(), ip.c(), caps.valuations)?;
    let mismatch = fixed
        .iter()
        .find(|x| !expected.contains(x))
        .map(|x| Witness::new("fixed point is not a c-orthovaluation", vec![x.to_string()]))
        .or_else(|| {
            expected
                .iter()
                .find(|x| !fixed.contains(x))
                .map(|x| Witness::new("c-orthovaluation is not fixed", vec![x.to_string()]))
        });
    let report = FixReport {
        x_size: pi.x_points().len(),
        fix_size: fixed.len(),
        checks: vec![Check::from_counterexample("fix-equals-c-orthovaluations", mismatch)],
    };
    Ok((fixed, report))
}

#[derive(Debug, Clone, Serialize)]
pub struct CoIsoReport {
    pub x_size: usize,
    pub y_size: usize,
    pub clopen_family: Vec<PointSubset>,
    pub checks: Vec<Check>,
}

impl CoIsoReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

/// For an orthocomplemented `(P, c)`: on `Y = Fix(π)` with the closure
/// traced from `C₁ ∨ C₂`, checks `σ₂(p) ∩ Y = σ₁(c(p)) ∩ Y` and that
/// `p ↦ σ₁(p) ∩ Y` is an ortho-isomorphism onto the clopen sets of `Y`.
pub fn verify_co_iso(ip: &InvolutedPoset, caps: Caps) -> Result<CoIsoReport> {
    let axioms = ip.axioms();
    if let Some(c) = axioms.checks().into_iter().find(|c| !c.passed) {
        return Err(Error::NotAnEoc(format!(
            "{} axiom fails: {}",
            c.name,
            c.witness.as_ref().map(|w| w.message.as_str()).unwrap_or("")
        )));
    }
    let pi = build_pi(ip, caps)?;
    let space = pi.space();
    let p = ip.bounded().poset();
    let n = p.len();
    let c = ip.c();
    let fix = pi.fixed_points();
    let label = |i: usize| p.label(i).to_owned();

    let same_bases = (0..n)
        .find(|&i| space.sigma2(i).intersection(&fix) != space.sigma1(c[i]).intersection(&fix))
        .map(|i| {
            Witness::new(
                format!("σ₂({0}) ∩ Y ≠ σ₁(c({0})) ∩ Y", label(i)),
                vec![label(i)],
            )
        });

    let traced = space.joined().trace(&fix)?;
    let ylabels = traced.points().to_vec();
    let members: Vec<usize> = fix.points().collect();
    let restrict = |s: &PointSubset| PointSubset::from_fn(members.len(), |k| s.contains(members[k]));
    let image: Vec<PointSubset> = (0..n).map(|i| restrict(space.sigma1(i))).collect();
    let clopen = traced.clopen_family(caps.family)?;

    let bijection = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| image[i] == image[j])
        .map(|(i, j)| {
            Witness::new(
                format!("σ₁({}) ∩ Y = σ₁({}) ∩ Y", label(i), label(j)),
                vec![label(i), label(j)],
            )
        })
        .or_else(|| {
            clopen.iter().find(|a| !image.contains(a)).map(|a| {
                Witness::new("clopen set of Y is not an image", vec![a.render(&ylabels)])
            })
        })
        .or_else(|| {
            (0..n).find(|&i| !clopen.contains(&image[i])).map(|i| {
                Witness::new(
                    format!("σ₁({}) ∩ Y is not clopen", label(i)),
                    vec![label(i), image[i].render(&ylabels)],
                )
            })
        });

    let order = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| p.le(i, j) != image[i].is_subset(&image[j]))
        .map(|(i, j)| {
            Witness::new(
                format!("order of {} and {} is not reflected", label(i), label(j)),
                vec![label(i), label(j)],
            )
        });

    let complement = (0..n)
        .find(|&i| image[c[i]] != image[i].complement())
        .map(|i| {
            Witness::new(
                format!("image of c({0}) is not the complement of the image of {0}", label(i)),
                vec![label(i)],
            )
        });

    Ok(CoIsoReport {
        x_size: pi.x_points().len(),
        y_size: members.len(),
        clopen_family: clopen,
        checks: vec![
            Check::from_counterexample("same-bases", same_bases),
            Check::from_counterexample("bijection-onto-clopen", bijection),
            Check::from_counterexample("order-isomorphism", order),
            Check::from_counterexample("complement-preserving", complement),
        ],
    })
}

/// `π⁻¹` of one base member of the bi-closure space on `X`.
#[derive(Debug, Clone, Serialize)]
pub struct PiPreimageRow {
    pub base: String,
    pub preimage: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplementationEvidence {
    pub mode: ContinuityMode,
    /// `π` is a homeomorphism of `(X, C₁, C₂)` and `(X, C₂, C₁)`
    pub criterion: bool,
    /// the axioms hold for `(P, c)`
    pub oracle: bool,
    pub axioms: AxiomReport,
    /// a set of the target whose preimage breaks continuity
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_set: Option<Witness>,
    pub preimage_table: Vec<PiPreimageRow>,
    /// present when the criterion and the oracle disagree
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Witness>,
}

impl ComplementationEvidence {
    pub fn agrees(&self) -> bool {
        self.criterion == self.oracle
    }
}

/// Decides whether `c` is a complementation by testing whether `(π, π)` is
/// a homeomorphism between `(X, C₁, C₂)` and `(X, C₂, C₁)`, and runs the
/// axiom oracle alongside. Returns the criterion's verdict.
pub fn detect_complementation(
    ip: &InvolutedPoset,
    caps: Caps,
    mode: ContinuityMode,
) -> Result<(bool, ComplementationEvidence)> {
    let pi = build_pi(ip, caps)?;
    let y = pi.space();
    let t = pi.table();
    let src = y.bi();
    let dst = src.swapped();
    let labels = pi.point_labels();
    let p = ip.bounded().poset();

    let criterion = is_bihomeomorphic_pair(t, t, src, &dst, mode, caps.family)?;
    let mut failing_set = None;
    if !criterion {
        for side in [Side::First, Side::Second] {
            if let Some(k) =
                first_discontinuity(t, src.space(side), dst.space(side), mode, caps.family)?
            {
                failing_set = Some(Witness::new(
                    format!("{mode:?} continuity fails on the {side:?} closure"),
                    vec![k.render(labels)],
                ));
                break;
            }
        }
    }

    let mut preimage_table = Vec::with_capacity(2 * p.len());
    for i in 0..p.len() {
        preimage_table.push(PiPreimageRow {
            base: format!("σ₁({})", p.label(i)),
            preimage: preimage(t, y.sigma1(i)).labels(labels),
        });
        preimage_table.push(PiPreimageRow {
            base: format!("σ₂({})", p.label(i)),
            preimage: preimage(t, y.sigma2(i)).labels(labels),
        });
    }

    let axioms = ip.axioms();
    let oracle = axioms.passed();
    let counterexample = (criterion != oracle).then(|| {
        let why = axioms
            .checks()
            .into_iter()
            .find(|c| !c.passed)
            .and_then(|c| c.witness.as_ref())
            .map(|w| w.message.clone())
            .unwrap_or_else(|| "all axioms hold".to_owned());
        let c = ip.c();
        Witness::new(
            format!(
                "criterion says {criterion}, axioms say {oracle} ({why})"
            ),
            (0..p.len())
                .map(|i| format!("c({}) = {}", p.label(i), p.label(c[i])))
                .collect(),
        )
    });

    Ok((
        criterion,
        ComplementationEvidence {
            mode,
            criterion,
            oracle,
            axioms,
            failing_set,
            preimage_table,
            counterexample,
        },
    ))
}
