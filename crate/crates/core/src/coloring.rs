//! Pairwise-disjoint axis sets capturing a guaranteed fraction of the
//! off-diagonal points.
//!
//! The underlying random construction colors the common coordinate universe
//! `[max_j n_j]` with `d` colors and takes `X_j` to be the values of color
//! `j`; a point with pairwise-distinct coordinates survives with probability
//! `1/d^d`. Here the coloring is chosen by the method of conditional
//! expectations: values are colored one at a time, each time maximizing the
//! exact conditional expectation of the number of captured points, so the
//! final (deterministic) count meets the expectation bound `|A \ E| / d^d`
//! pointwise. A seeded sampling mode is kept for comparison; it carries no
//! guarantee.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::{LatticeSubset, Restriction};

#[derive(Clone, Copy, Debug)]
pub enum ColoringStrategy {
    Derandomized,
    Seeded { seed: u64, trials: u32 },
}

#[derive(Clone, Debug)]
pub struct DisjointColoring {
    /// Pairwise-disjoint coordinate sets, `X_j = { v : color(v) = j } /\ [n_j]`.
    pub restriction: Restriction,
    /// `ceil(|A \ E| / d^d)`; met by the derandomized strategy.
    pub guarantee: u64,
    /// Color assigned to each universe value `v` (index `v - 1`), 0-based axis.
    pub colors: Vec<u8>,
}

impl DisjointColoring {
    pub fn captured(&self) -> &LatticeSubset {
        self.restriction.induced()
    }
}

/// Colors the coordinate universe and restricts `a` to the resulting
/// pairwise-disjoint product. Captured points automatically avoid `E`.
pub fn disjoint_coloring(a: &LatticeSubset, strategy: ColoringStrategy) -> DisjointColoring {
    let d = a.order();
    let n_max = (0..d).map(|j| a.shape().extent(j)).max().expect("order >= 1") as usize;
    let off = a.off_diagonal_part();
    let dd = (d as u64).pow(d as u32);
    let guarantee = (off.len() as u64).div_ceil(dd);

    let colors = match strategy {
        ColoringStrategy::Derandomized => derandomized_colors(&off, d, n_max),
        ColoringStrategy::Seeded { seed, trials } => seeded_colors(&off, d, n_max, seed, trials),
    };

    let axis_sets: Vec<BTreeSet<u32>> = (0..d)
        .map(|j| {
            (1..=a.shape().extent(j))
                .filter(|&v| colors[(v - 1) as usize] == j as u8)
                .collect()
        })
        .collect();
    let restriction = a.restrict(&axis_sets).expect("axis sets in range");
    debug_assert!(
        !matches!(strategy, ColoringStrategy::Derandomized)
            || restriction.induced().len() as u64 >= guarantee
    );
    debug_assert!(restriction.axis_sets_pairwise_disjoint());
    DisjointColoring { restriction, guarantee, colors }
}

/// Total captured weight scaled by `d^d`: an off-diagonal point contributes
/// `d^(number of its values already colored)` while all colored values match
/// the axis they appear on, and 0 once any value mismatches.
fn scaled_expectation(off: &LatticeSubset, d: usize, colors: &[Option<u8>]) -> u64 {
    let mut total = 0u64;
    'points: for p in off.iter() {
        let mut weight = 1u64;
        for (axis, &v) in p.coords().iter().enumerate() {
            match colors[(v - 1) as usize] {
                None => {}
                Some(c) if c == axis as u8 => weight *= d as u64,
                Some(_) => continue 'points,
            }
        }
        total += weight;
    }
    total
}

fn derandomized_colors(off: &LatticeSubset, d: usize, n_max: usize) -> Vec<u8> {
    let mut colors: Vec<Option<u8>> = vec![None; n_max];
    for v in 0..n_max {
        let mut best_color = 0u8;
        let mut best_weight = 0u64;
        for c in 0..d as u8 {
            colors[v] = Some(c);
            let w = scaled_expectation(off, d, &colors);
            if c == 0 || w > best_weight {
                best_color = c;
                best_weight = w;
            }
        }
        colors[v] = Some(best_color);
    }
    colors.into_iter().map(|c| c.expect("all values colored")).collect()
}

fn seeded_colors(off: &LatticeSubset, d: usize, n_max: usize, seed: u64, trials: u32) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(u64, Vec<u8>)> = None;
    for _ in 0..trials.max(1) {
        let colors: Vec<u8> = (0..n_max).map(|_| rng.gen_range(0..d as u8)).collect();
        let opts: Vec<Option<u8>> = colors.iter().map(|&c| Some(c)).collect();
        let captured = scaled_expectation(off, d, &opts) / (d as u64).pow(d as u32);
        if best.as_ref().is_none_or(|(b, _)| captured > *b) {
            best = Some((captured, colors));
        }
    }
    best.expect("at least one trial").1
}
