//! Poset corpora: every labeled poset of a given size, or seeded random ones.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use duality_core::order::Poset;

use crate::CliError;

pub const MAX_EXHAUSTIVE: usize = 6;
pub const MAX_RANDOM: usize = 12;

/// `a, b, c, ..` for up to 26 elements, `p0, p1, ..` beyond.
pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("p{i}")).collect()
    }
}

/// Every partial order on `n` labeled elements, each exactly once.
///
/// Built one element at a time: a poset on `k + 1` elements restricts to a
/// unique poset on the first `k`, and the new element is determined by its
/// strict down-set `D` (a down-set) and strict up-set `U` (an up-set) with
/// `D ∩ U = ∅` and every member of `D` below every member of `U`.
pub fn exhaustive(n: usize) -> Result<Vec<Poset>, CliError> {
    if n == 0 || n > MAX_EXHAUSTIVE {
        return Err(CliError::SizeCap {
            what: "exhaustive generation size",
            cap: MAX_EXHAUSTIVE,
        });
    }
    // matrices stored row-major, k × k
    let mut layer: Vec<Vec<bool>> = vec![vec![true]];
    for k in 1..n {
        let mut next = Vec::new();
        for m in &layer {
            let le = |i: usize, j: usize| m[i * k + j];
            let subsets: Vec<u32> = (0u32..1 << k).collect();
            let is_down = |s: u32| {
                (0..k).all(|j| s >> j & 1 == 0 || (0..k).all(|i| !le(i, j) || s >> i & 1 == 1))
            };
            let is_up = |s: u32| {
                (0..k).all(|i| s >> i & 1 == 0 || (0..k).all(|j| !le(i, j) || s >> j & 1 == 1))
            };
            let downs: Vec<u32> = subsets.iter().copied().filter(|&s| is_down(s)).collect();
            let ups: Vec<u32> = subsets.iter().copied().filter(|&s| is_up(s)).collect();
            for &d in &downs {
                for &u in &ups {
                    if d & u != 0 {
                        continue;
                    }
                    let compatible = (0..k).all(|i| {
                        d >> i & 1 == 0 || (0..k).all(|j| u >> j & 1 == 0 || le(i, j))
                    });
                    if !compatible {
                        continue;
                    }
                    let size = k + 1;
                    let mut grown = vec![false; size * size];
                    for i in 0..k {
                        for j in 0..k {
                            grown[i * size + j] = le(i, j);
                        }
                        grown[i * size + k] = d >> i & 1 == 1;
                        grown[k * size + i] = u >> i & 1 == 1;
                    }
                    grown[k * size + k] = true;
                    next.push(grown);
                }
            }
        }
        layer = next;
    }
    let labels = default_labels(n);
    layer
        .into_iter()
        .map(|m| Ok(Poset::from_matrix(labels.clone(), m)?))
        .collect()
}

/// One random poset on `n` elements: a strict upper-triangular relation
/// with the given edge density, relabelled by a random permutation, then
/// transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(density) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    Poset::from_generators(default_labels(n), &pairs).expect("upper-triangular relation is acyclic")
}

/// Seeded stream of random posets of size `n`; each draws its own edge
/// density uniformly from `[0, 1)`.
pub struct RandomPosets {
    rng: ChaCha8Rng,
    n: usize,
}

impl RandomPosets {
    pub fn new(n: usize, seed: u64) -> Result<Self, CliError> {
        if n == 0 || n > MAX_RANDOM {
            return Err(CliError::SizeCap {
                what: "random generation size",
                cap: MAX_RANDOM,
            });
        }
        Ok(RandomPosets {
            rng: ChaCha8Rng::seed_from_u64(seed),
            n,
        })
    }
}

impl Iterator for RandomPosets {
    type Item = Poset;

    fn next(&mut self) -> Option<Poset> {
        let density = self.rng.gen::<f64>();
        Some(random_poset(&mut self.rng, self.n, density))
    }
}

/// Every order-reversing involution of `p`, as index maps.
pub fn antitone_involutions(p: &Poset) -> Vec<Vec<usize>> {
    fn go(p: &Poset, c: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = c.iter().position(Option::is_none) else {
            let map: Vec<usize> = c.iter().map(|m| m.unwrap()).collect();
            if p.is_antitone_involution(&map) {
                out.push(map);
            }
            return;
        };
        for j in i..c.len() {
            if c[j].is_some() {
                continue;
            }
            c[i] = Some(j);
            c[j] = Some(i);
            go(p, c, out);
            c[i] = None;
            c[j] = None;
        }
    }
    let mut out = Vec::new();
    go(p, &mut vec![None; p.len()], &mut out);
    out
}
