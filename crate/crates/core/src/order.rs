//! Finite posets and their two-valued valuations.
//!
//! A [`Poset`] stores its order as a dense `n × n` boolean matrix indexed by
//! the position of each label in the element list. Valuations into the
//! two-element chain are stored as bit-vectors in that same order.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::report::{Check, Witness};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    le: Vec<bool>,
}

/// Builds a poset from labels and generating pairs `(a, b)` meaning `a <= b`.
///
/// The reflexive-transitive closure of the pairs is taken before
/// antisymmetry is checked, so cover relations alone are enough.
pub fn validate_poset<S: AsRef<str>>(elements: &[S], le_pairs: &[(S, S)]) -> Result<Poset> {
    let labels: Vec<String> = elements.iter().map(|s| s.as_ref().to_owned()).collect();
    let index = label_index(&labels)?;
    let pairs = le_pairs
        .iter()
        .map(|(a, b)| {
            let a = a.as_ref();
            let b = b.as_ref();
            let ia = *index.get(a).ok_or_else(|| Error::UnknownLabel(a.to_owned()))?;
            let ib = *index.get(b).ok_or_else(|| Error::UnknownLabel(b.to_owned()))?;
            Ok((ia, ib))
        })
        .collect::<Result<Vec<_>>>()?;
    Poset::from_generators(labels, &pairs)
}

fn label_index(labels: &[String]) -> Result<HashMap<&str, usize>> {
    if labels.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Index-based counterpart of [`validate_poset`].
    pub fn from_generators(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        label_index(&labels)?;
        let n = labels.len();
        let mut le = vec![false; n * n];
        for i in 0..n {
            le[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a >= n {
                return Err(Error::UnknownElement(a));
            }
            if b >= n {
                return Err(Error::UnknownElement(b));
            }
            le[a * n + b] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if le[i * n + k] {
                    for j in 0..n {
                        if le[k * n + j] {
                            le[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if le[i * n + j] && le[j * n + i] {
                    let cycle = witness_cycle(n, pairs, i, j)
                        .into_iter()
                        .map(|k| labels[k].clone())
                        .collect();
                    return Err(Error::AntisymmetryViolation { cycle });
                }
            }
        }
        Ok(Poset { labels, le })
    }

    /// Builds a poset from a full order matrix (`le[i * n + j]` is `i <= j`),
    /// rejecting matrices that are not partial orders.
    pub fn from_matrix(labels: Vec<String>, le: Vec<bool>) -> Result<Poset> {
        label_index(&labels)?;
        let n = labels.len();
        if le.len() != n * n {
            return Err(Error::SizeMismatch {
                expected: n * n,
                found: le.len(),
            });
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| le[i * n + j])
            .collect();
        let poset = Poset::from_generators(labels, &pairs)?;
        if let Some(k) = (0..n * n).find(|&k| poset.le[k] != le[k]) {
            return Err(Error::NotAnOrder(format!(
                "{} <= {} is implied but missing",
                poset.labels[k / n],
                poset.labels[k % n]
            )));
        }
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `i <= j`.
    #[inline]
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.le[i * self.len() + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.le(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.le(i, j) || self.le(j, i)
    }

    pub fn matrix(&self) -> &[bool] {
        &self.le
    }

    /// Cover pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The opposite poset together with the canonical anti-monotone
    /// bijection `rho`, given as an index table.
    pub fn opposite(&self) -> Opposite {
        let n = self.len();
        let mut le = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                le[i * n + j] = self.le(j, i);
            }
        }
        Opposite {
            poset: Poset {
                labels: self.labels.clone(),
                le,
            },
            rho: (0..n).collect(),
        }
    }

    /// Least upper bound (`Join`) or greatest lower bound (`Meet`) of `a` and
    /// `b`, or `None` when it does not exist.
    pub fn bound(&self, a: usize, b: usize, kind: BoundKind) -> Option<usize> {
        let n = self.len();
        let rel = |x: usize, y: usize| match kind {
            BoundKind::Join => self.le(x, y),
            BoundKind::Meet => self.le(y, x),
        };
        let candidates: Vec<usize> = (0..n).filter(|&u| rel(a, u) && rel(b, u)).collect();
        candidates
            .iter()
            .copied()
            .find(|&u| candidates.iter().all(|&v| rel(u, v)))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.bound(a, b, BoundKind::Join)
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.bound(a, b, BoundKind::Meet)
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&b| (0..self.len()).all(|e| self.le(b, e)))
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|e| self.le(e, t)))
    }

    /// Whether `bits` is the characteristic vector of an up-set.
    pub fn is_upset(&self, bits: &[bool]) -> bool {
        let n = self.len();
        bits.len() == n
            && (0..n).all(|i| !bits[i] || (0..n).all(|j| !self.le(i, j) || bits[j]))
    }

    /// Whether `map` is an order-reversing involution of the carrier.
    pub fn is_antitone_involution(&self, map: &[usize]) -> bool {
        let n = self.len();
        map.len() == n
            && map.iter().all(|&m| m < n)
            && (0..n).all(|i| map[map[i]] == i)
            && (0..n).all(|i| (0..n).all(|j| !self.le(i, j) || self.le(map[j], map[i])))
    }
}

/// Shortest path `from -> to -> from` through the generator graph.
fn witness_cycle(n: usize, pairs: &[(usize, usize)], from: usize, to: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        if a != b {
            adj[a].push(b);
        }
    }
    let path = |s: usize, t: usize| -> Vec<usize> {
        let mut prev = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut out = vec![t];
        let mut cur = t;
        while cur != s {
            cur = prev[cur];
            out.push(cur);
        }
        out.reverse();
        out
    };
    let mut cycle = path(from, to);
    cycle.extend(path(to, from).into_iter().skip(1));
    cycle
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Join,
    Meet,
}

/// `P^op` and `rho : P -> P^op`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Opposite {
    pub poset: Poset,
    pub rho: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundedPoset {
    base: Poset,
    bottom: usize,
    top: usize,
}

impl BoundedPoset {
    pub fn new(base: Poset) -> Result<Self> {
        let bottom = base.bottom().ok_or(Error::NotBounded("least"))?;
        let top = base.top().ok_or(Error::NotBounded("greatest"))?;
        Ok(BoundedPoset { base, bottom, top })
    }

    /// Like [`BoundedPoset::new`] but checks the caller's choice of bounds.
    pub fn with_bounds(base: Poset, bottom: usize, top: usize) -> Result<Self> {
        let n = base.len();
        if bottom >= n {
            return Err(Error::UnknownElement(bottom));
        }
        if top >= n {
            return Err(Error::UnknownElement(top));
        }
        if !(0..n).all(|e| base.le(bottom, e)) {
            return Err(Error::WrongBound {
                which: "least",
                label: base.label(bottom).to_owned(),
            });
        }
        if !(0..n).all(|e| base.le(e, top)) {
            return Err(Error::WrongBound {
                which: "greatest",
                label: base.label(top).to_owned(),
            });
        }
        Ok(BoundedPoset { base, bottom, top })
    }

    pub fn poset(&self) -> &Poset {
        &self.base
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }
}

/// Per-axiom outcome of [`check_ortho_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// `c(c(p)) = p`
    pub involution: Check,
    /// `p ∨ c(p)` exists and is the top, `p ∧ c(p)` exists and is the bottom
    pub complement: Check,
    /// `p <= q` implies `c(q) <= c(p)`
    pub antitone: Check,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.involution.passed && self.complement.passed && self.antitone.passed
    }

    pub fn checks(&self) -> [&Check; 3] {
        [&self.involution, &self.complement, &self.antitone]
    }

    fn first_failure(&self) -> Option<&Check> {
        self.checks().into_iter().find(|c| !c.passed)
    }
}

/// Brute-force check of the three orthocomplementation axioms for the
/// candidate complement `c` (given as an index permutation).
pub fn check_ortho_axioms(p: &BoundedPoset, c: &[usize]) -> Result<AxiomReport> {
    let poset = p.poset();
    let n = poset.len();
    if c.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: c.len(),
        });
    }
    let mut hit = vec![false; n];
    for &m in c {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return Err(Error::NotAPermutation);
        }
    }
    let label = |i: usize| poset.label(i).to_owned();

    let involution = (0..n).find(|&i| c[c[i]] != i).map(|i| {
        Witness::new(
            format!("c(c({})) = {}", label(i), label(c[c[i]])),
            vec![label(i)],
        )
    });

    let complement = (0..n).find_map(|i| {
        let join = poset.join(i, c[i]);
        let meet = poset.meet(i, c[i]);
        if join != Some(p.top()) {
            let msg = match join {
                Some(j) => format!("{0} ∨ c({0}) = {1}, not the top", label(i), label(j)),
                None => format!("{0} ∨ c({0}) does not exist", label(i)),
            };
            return Some(Witness::new(msg, vec![label(i)]));
        }
        if meet != Some(p.bottom()) {
            let msg = match meet {
                Some(m) => format!("{0} ∧ c({0}) = {1}, not the bottom", label(i), label(m)),
                None => format!("{0} ∧ c({0}) does not exist", label(i)),
            };
            return Some(Witness::new(msg, vec![label(i)]));
        }
        None
    });

    let antitone = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| poset.le(i, j) && !poset.le(c[j], c[i]))
        .map(|(i, j)| {
            Witness::new(
                format!("{} <= {} but not c({}) <= c({})", label(i), label(j), label(j), label(i)),
                vec![label(i), label(j)],
            )
        });

    Ok(AxiomReport {
        involution: Check::from_counterexample("involution", involution),
        complement: Check::from_counterexample("complement", complement),
        antitone: Check::from_counterexample("antitone", antitone),
    })
}

/// A bounded poset with an orthocomplementation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthoPoset {
    base: BoundedPoset,
    comp: Vec<usize>,
}

impl OrthoPoset {
    pub fn new(base: BoundedPoset, comp: Vec<usize>) -> Result<Self> {
        let report = check_ortho_axioms(&base, &comp)?;
        match report.first_failure() {
            None => Ok(OrthoPoset { base, comp }),
            Some(check) => Err(Error::NotAnEoc(format!(
                "{} axiom fails: {}",
                check.name,
                check.witness.as_ref().map(|w| w.message.as_str()).unwrap_or("")
            ))),
        }
    }

    /// The two-element orthocomplemented chain `0 < 1`, `0⊥ = 1`.
    pub fn two() -> Self {
        let p = validate_poset(&["0", "1"], &[("0", "1")]).expect("two-element chain");
        OrthoPoset {
            base: BoundedPoset::new(p).expect("bounded"),
            comp: vec![1, 0],
        }
    }

    pub fn bounded(&self) -> &BoundedPoset {
        &self.base
    }

    pub fn poset(&self) -> &Poset {
        self.base.poset()
    }

    pub fn comp(&self) -> &[usize] {
        &self.comp
    }

    pub fn complement(&self, i: usize) -> usize {
        self.comp[i]
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }
}

/// A map from a poset's carrier to `{0, 1}`, as a bit-vector in element
/// order. Ordering is lexicographic on the bits with `0 < 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoValuation {
    bits: Vec<bool>,
}

impl TwoValuation {
    pub fn new(bits: Vec<bool>) -> Self {
        TwoValuation { bits }
    }

    pub fn from_support(len: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![false; len];
        for i in support {
            bits[i] = true;
        }
        TwoValuation { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_monotone(&self, p: &Poset) -> bool {
        p.is_upset(&self.bits)
    }

    /// Monotone and `x(c(p)) = 1 - x(p)` for every `p`.
    pub fn is_orthovaluation(&self, p: &Poset, comp: &[usize]) -> bool {
        self.is_monotone(p) && (0..self.len()).all(|i| self.bits[comp[i]] != self.bits[i])
    }
}

impl fmt::Display for TwoValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// All monotone maps `P -> {0 < 1}`, i.e. characteristic vectors of the
/// up-sets of `P`, in lexicographic order.
pub fn enumerate_monotone(p: &Poset, cap: usize) -> Result<Vec<TwoValuation>> {
    enumerate_valuations(p, None, cap)
}

/// All monotone maps `E -> {0 < 1}` that send complements to complements.
pub fn enumerate_orthomonotone(e: &OrthoPoset, cap: usize) -> Result<Vec<TwoValuation>> {
    enumerate_valuations(e.poset(), Some(e.comp()), cap)
}

/// Monotone valuations with `x(c(p)) = 1 - x(p)` for an arbitrary index map
/// `c`; `c` need not be a complementation.
pub fn enumerate_c_orthovaluations(
    p: &Poset,
    c: &[usize],
    cap: usize,
) -> Result<Vec<TwoValuation>> {
    if c.len() != p.len() {
        return Err(Error::SizeMismatch {
            expected: p.len(),
            found: c.len(),
        });
    }
    enumerate_valuations(p, Some(c), cap)
}

/// Backtracking over elements in index order, trying `0` before `1` so the
/// output comes out lexicographically sorted. Every constraint between two
/// assigned elements is checked as soon as the later one is assigned.
fn enumerate_valuations(
    p: &Poset,
    comp: Option<&[usize]>,
    cap: usize,
) -> Result<Vec<TwoValuation>> {
    let n = p.len();
    let mut out = Vec::new();
    let mut bits = vec![false; n];

    fn consistent(p: &Poset, comp: Option<&[usize]>, bits: &[bool], i: usize) -> bool {
        let v = bits[i];
        for (j, &w) in bits.iter().enumerate().take(i + 1) {
            // j <= i with x(j) = 1 forces x(i) = 1, and symmetrically
            if p.le(j, i) && w && !v {
                return false;
            }
            if p.le(i, j) && v && !w {
                return false;
            }
        }
        if let Some(c) = comp {
            let k = c[i];
            if k == i {
                return false;
            }
            if k < i && bits[k] == v {
                return false;
            }
        }
        true
    }

    fn go(
        p: &Poset,
        comp: Option<&[usize]>,
        bits: &mut Vec<bool>,
        i: usize,
        out: &mut Vec<TwoValuation>,
        cap: usize,
    ) -> Result<()> {
        if i == bits.len() {
            if out.len() == cap {
                return Err(Error::SizeCap {
                    what: "valuation enumeration",
                    cap,
                });
            }
            out.push(TwoValuation::new(bits.clone()));
            return Ok(());
        }
        for v in [false, true] {
            bits[i] = v;
            if consistent(p, comp, bits, i) {
                go(p, comp, bits, i + 1, out, cap)?;
            }
        }
        bits[i] = false;
        Ok(())
    }

    go(p, comp, &mut bits, 0, &mut out, cap)?;
    Ok(out)
}

/// Small named posets used across tests and examples.
pub mod named {
    use super::*;

    /// `labels[0] < labels[1] < ...`
    pub fn chain(labels: &[&str]) -> Poset {
        let pairs: Vec<(&str, &str)> = labels.windows(2).map(|w| (w[0], w[1])).collect();
        validate_poset(labels, &pairs).expect("chain")
    }

    pub fn antichain(labels: &[&str]) -> Poset {
        validate_poset::<&str>(labels, &[]).expect("antichain")
    }

    /// `{0, a, a', 1}` with `a` and `a'` incomparable.
    pub fn boolean4() -> OrthoPoset {
        let p = validate_poset(
            &["0", "a", "a'", "1"],
            &[("0", "a"), ("0", "a'"), ("a", "1"), ("a'", "1")],
        )
        .expect("boolean lattice");
        OrthoPoset::new(BoundedPoset::new(p).unwrap(), vec![3, 2, 1, 0]).expect("ortho")
    }

    /// `0 < m < 1` with the involution `0 <-> 1`, `m -> m`. Not a
    /// complementation: `m ∨ m = m`.
    pub fn chain3_with_fixed_middle() -> (BoundedPoset, Vec<usize>) {
        let p = chain(&["0", "m", "1"]);
        (BoundedPoset::new(p).unwrap(), vec![2, 1, 0])
    }
}
