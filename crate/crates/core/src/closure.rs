//! Closure spaces generated by a base of subsets.
//!
//! A set is closed when it is an intersection of base members. The empty
//! intersection is allowed, so the full point set is always closed; the
//! empty set is closed only when some intersection of base members is empty.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::order::Poset;
use crate::{Error, Result};

/// A subset of a finite point set `{0, .., space_size - 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSubset {
    bits: FixedBitSet,
}

impl PointSubset {
    pub fn empty(space_size: usize) -> Self {
        PointSubset {
            bits: FixedBitSet::with_capacity(space_size),
        }
    }

    pub fn full(space_size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(space_size);
        bits.insert_range(..);
        PointSubset { bits }
    }

    pub fn from_points(space_size: usize, points: impl IntoIterator<Item = usize>) -> Self {
        let mut s = PointSubset::empty(space_size);
        for p in points {
            s.insert(p);
        }
        s
    }

    /// `{ i : pred(i) }`
    pub fn from_fn(space_size: usize, pred: impl Fn(usize) -> bool) -> Self {
        PointSubset::from_points(space_size, (0..space_size).filter(|&i| pred(i)))
    }

    pub fn space_size(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, point: usize) {
        self.bits.insert(point);
    }

    pub fn contains(&self, point: usize) -> bool {
        self.bits.contains(point)
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.space_size()
    }

    pub fn points(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn is_subset(&self, other: &PointSubset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn intersection(&self, other: &PointSubset) -> PointSubset {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        PointSubset { bits }
    }

    pub fn union(&self, other: &PointSubset) -> PointSubset {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        PointSubset { bits }
    }

    pub fn complement(&self) -> PointSubset {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        PointSubset { bits }
    }

    /// Renders as `{l1,l2,..}` using the given point labels.
    pub fn render(&self, labels: &[String]) -> String {
        let parts: Vec<&str> = self.points().map(|i| labels[i].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn labels(&self, labels: &[String]) -> Vec<String> {
        self.points().map(|i| labels[i].clone()).collect()
    }

    fn check_size(&self, expected: usize) -> Result<()> {
        if self.space_size() == expected {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected,
                found: self.space_size(),
            })
        }
    }
}

impl fmt::Debug for PointSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points()).finish()
    }
}

/// Larger sets first, then lexicographic on the sorted member lists.
impl Ord for PointSubset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .count()
            .cmp(&self.count())
            .then_with(|| self.points().cmp(other.points()))
            .then_with(|| self.space_size().cmp(&other.space_size()))
    }
}

impl PartialOrd for PointSubset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for PointSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.points())
    }
}

/// Sorts a family into the canonical order and drops duplicates.
pub fn normalize_family(mut family: Vec<PointSubset>) -> Vec<PointSubset> {
    family.sort();
    family.dedup();
    family
}

/// A finite point set with the closure generated by `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSpace {
    points: Vec<String>,
    base: Vec<PointSubset>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub closed: bool,
    pub open: bool,
    pub clopen: bool,
}

impl ClosureSpace {
    /// Base members are deduplicated, keeping first occurrences in order.
    pub fn new(points: Vec<String>, base: Vec<PointSubset>) -> Result<Self> {
        let n = points.len();
        let mut deduped: Vec<PointSubset> = Vec::with_capacity(base.len());
        for b in base {
            b.check_size(n)?;
            if !deduped.contains(&b) {
                deduped.push(b);
            }
        }
        Ok(ClosureSpace {
            points,
            base: deduped,
        })
    }

    /// Points labelled `0, 1, .., n-1`.
    pub fn unlabeled(n: usize, base: Vec<PointSubset>) -> Result<Self> {
        ClosureSpace::new((0..n).map(|i| i.to_string()).collect(), base)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn base(&self) -> &[PointSubset] {
        &self.base
    }

    /// Intersection of all base members containing `a` (the full set when
    /// none does).
    pub fn closure_of(&self, a: &PointSubset) -> Result<PointSubset> {
        a.check_size(self.len())?;
        Ok(self.closure_unchecked(a))
    }

    fn closure_unchecked(&self, a: &PointSubset) -> PointSubset {
        self.base
            .iter()
            .filter(|k| a.is_subset(k))
            .fold(PointSubset::full(self.len()), |acc, k| acc.intersection(k))
    }

    pub fn is_closed(&self, a: &PointSubset) -> Result<bool> {
        Ok(self.closure_of(a)? == *a)
    }

    pub fn is_open(&self, a: &PointSubset) -> Result<bool> {
        self.is_closed(&a.complement())
    }

    pub fn classify(&self, a: &PointSubset) -> Result<Classification> {
        let closed = self.is_closed(a)?;
        let open = self.is_open(a)?;
        Ok(Classification {
            closed,
            open,
            clopen: closed && open,
        })
    }

    /// Every closed set, i.e. the Moore family generated by the base, in
    /// canonical order.
    ///
    /// Worklist fixpoint starting from the full set: each discovered set is
    /// intersected with every base member. This reaches every finite
    /// intersection of base members.
    pub fn closed_family(&self, cap: usize) -> Result<Vec<PointSubset>> {
        let full = PointSubset::full(self.len());
        let mut seen = std::collections::HashSet::from([full.clone()]);
        let mut work = vec![full];
        if cap == 0 {
            return Err(Error::SizeCap {
                what: "closed family",
                cap,
            });
        }
        while let Some(s) = work.pop() {
            for k in &self.base {
                let t = s.intersection(k);
                if !seen.contains(&t) {
                    if seen.len() == cap {
                        return Err(Error::SizeCap {
                            what: "closed family",
                            cap,
                        });
                    }
                    seen.insert(t.clone());
                    work.push(t);
                }
            }
        }
        Ok(normalize_family(seen.into_iter().collect()))
    }

    /// Open sets: complements of closed sets.
    pub fn open_family(&self, cap: usize) -> Result<Vec<PointSubset>> {
        Ok(normalize_family(
            self.closed_family(cap)?
                .iter()
                .map(PointSubset::complement)
                .collect(),
        ))
    }

    /// Sets both closed and open.
    pub fn clopen_family(&self, cap: usize) -> Result<Vec<PointSubset>> {
        Ok(self
            .closed_family(cap)?
            .into_iter()
            .filter(|a| self.closure_unchecked(&a.complement()) == a.complement())
            .collect())
    }

    /// The subspace on `subset`, with base traced onto it. Point `i` of the
    /// result is the `i`-th member of `subset`.
    pub fn trace(&self, subset: &PointSubset) -> Result<ClosureSpace> {
        subset.check_size(self.len())?;
        let members: Vec<usize> = subset.points().collect();
        let m = members.len();
        let base = self
            .base
            .iter()
            .map(|k| PointSubset::from_fn(m, |i| k.contains(members[i])))
            .collect();
        ClosureSpace::new(
            members.iter().map(|&i| self.points[i].clone()).collect(),
            base,
        )
    }
}

/// A point set carrying two closures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiclosureSpace {
    first: ClosureSpace,
    second: ClosureSpace,
}

/// Which of the two closures of a [`BiclosureSpace`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    First,
    Second,
}

impl BiclosureSpace {
    pub fn new(points: Vec<String>, base1: Vec<PointSubset>, base2: Vec<PointSubset>) -> Result<Self> {
        Ok(BiclosureSpace {
            first: ClosureSpace::new(points.clone(), base1)?,
            second: ClosureSpace::new(points, base2)?,
        })
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty()
    }

    pub fn points(&self) -> &[String] {
        self.first.points()
    }

    pub fn space(&self, side: Side) -> &ClosureSpace {
        match side {
            Side::First => &self.first,
            Side::Second => &self.second,
        }
    }

    /// The same points with the two closures exchanged.
    pub fn swapped(&self) -> BiclosureSpace {
        BiclosureSpace {
            first: self.second.clone(),
            second: self.first.clone(),
        }
    }
}

/// Sets closed for closure `closed_in` whose complement is closed for
/// closure `open_in`.
pub fn mixed_families(
    b: &BiclosureSpace,
    closed_in: Side,
    open_in: Side,
    cap: usize,
) -> Result<Vec<PointSubset>> {
    let opener = b.space(open_in);
    Ok(b.space(closed_in)
        .closed_family(cap)?
        .into_iter()
        .filter(|a| {
            let c = a.complement();
            opener.closure_unchecked(&c) == c
        })
        .collect())
}

/// The join of two closures: the closure generated by the union of bases.
pub fn join_closures(
    points: Vec<String>,
    base1: &[PointSubset],
    base2: &[PointSubset],
) -> Result<ClosureSpace> {
    ClosureSpace::new(points, base1.iter().chain(base2).cloned().collect())
}

/// Two readings of continuity.
///
/// `Weak`: preimages of closed sets are closed. Checked on base members
/// only, which suffices because preimage commutes with intersection.
/// `Strict`: preimages of closed sets are clopen, checked over the whole
/// enumerated closed family of the target.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ContinuityMode {
    #[default]
    Weak,
    Strict,
}

/// `f^{-1}(target)` for a point map given as an index table.
pub fn preimage(f: &[usize], target: &PointSubset) -> PointSubset {
    PointSubset::from_fn(f.len(), |i| target.contains(f[i]))
}

fn check_map(f: &[usize], src: usize, dst: usize) -> Result<()> {
    if f.len() != src {
        return Err(Error::SizeMismatch {
            expected: src,
            found: f.len(),
        });
    }
    match f.iter().find(|&&y| y >= dst) {
        Some(&y) => Err(Error::UnknownElement(y)),
        None => Ok(()),
    }
}

pub fn is_continuous(
    f: &[usize],
    src: &ClosureSpace,
    dst: &ClosureSpace,
    mode: ContinuityMode,
    cap: usize,
) -> Result<bool> {
    Ok(first_discontinuity(f, src, dst, mode, cap)?.is_none())
}

/// The first closed set of `dst` (a base member in weak mode) whose
/// preimage under `f` is not closed (not clopen in strict mode).
pub fn first_discontinuity(
    f: &[usize],
    src: &ClosureSpace,
    dst: &ClosureSpace,
    mode: ContinuityMode,
    cap: usize,
) -> Result<Option<PointSubset>> {
    check_map(f, src.len(), dst.len())?;
    let closed = |a: &PointSubset| src.closure_unchecked(a) == *a;
    Ok(match mode {
        ContinuityMode::Weak => dst
            .base()
            .iter()
            .find(|k| !closed(&preimage(f, k)))
            .cloned(),
        ContinuityMode::Strict => dst.closed_family(cap)?.into_iter().find(|k| {
            let pre = preimage(f, k);
            !(closed(&pre) && closed(&pre.complement()))
        }),
    })
}

/// Whether `f` and `g` are mutually inverse bijections.
pub fn are_mutually_inverse(f: &[usize], g: &[usize]) -> bool {
    f.len() == g.len()
        && f.iter().all(|&y| y < g.len())
        && g.iter().all(|&x| x < f.len())
        && (0..f.len()).all(|x| g[f[x]] == x)
        && (0..g.len()).all(|y| f[g[y]] == y)
}

/// `f : a -> b` and `g : b -> a` are mutually inverse and both continuous.
pub fn is_homeomorphic_pair(
    f: &[usize],
    g: &[usize],
    a: &ClosureSpace,
    b: &ClosureSpace,
    mode: ContinuityMode,
    cap: usize,
) -> Result<bool> {
    if a.len() != b.len() || f.len() != a.len() || g.len() != b.len() {
        return Ok(false);
    }
    if !are_mutually_inverse(f, g) {
        return Ok(false);
    }
    Ok(is_continuous(f, a, b, mode, cap)? && is_continuous(g, b, a, mode, cap)?)
}

/// Homeomorphism of bi-closure spaces: the first closures and the second
/// closures are each homeomorphic via `(f, g)`.
pub fn is_bihomeomorphic_pair(
    f: &[usize],
    g: &[usize],
    a: &BiclosureSpace,
    b: &BiclosureSpace,
    mode: ContinuityMode,
    cap: usize,
) -> Result<bool> {
    Ok(
        is_homeomorphic_pair(f, g, a.space(Side::First), b.space(Side::First), mode, cap)?
            && is_homeomorphic_pair(f, g, a.space(Side::Second), b.space(Side::Second), mode, cap)?,
    )
}

/// Orders a family of distinct sets by inclusion. Labels are the sets
/// rendered with `point_labels`.
pub fn family_as_poset(family: &[PointSubset], point_labels: &[String]) -> Result<Poset> {
    let n = family.len();
    let labels = family.iter().map(|s| s.render(point_labels)).collect();
    let mut le = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            le[i * n + j] = family[i].is_subset(&family[j]);
        }
    }
    Poset::from_matrix(labels, le)
}
