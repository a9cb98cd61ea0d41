//! `M`-independence numbers: the greedy construction that also certifies a
//! covering upper bound, and an exact maximum independent set over the
//! conflict graph (two points conflict iff they agree outside some `B` in `M`,
//! i.e. iff a common `M`-subspace contains both).

use crate::error::{Error, Result};
use crate::lattice::LatticeSubset;
use crate::pattern::PatternFamily;
use crate::solver::{SolverConfig, ABSOLUTE_EXACT_CAP};
use crate::subspace::share_subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndependenceMethod {
    Exact,
    Greedy,
}

#[derive(Clone, Debug)]
pub struct IndependenceResult {
    pub value: u32,
    pub witness: LatticeSubset,
    pub method: IndependenceMethod,
}

impl IndependenceResult {
    /// No two distinct witness points share an `M`-subspace.
    pub fn witness_is_independent(&self, family: &PatternFamily) -> bool {
        let pts = self.witness.points();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                if share_subspace(&pts[i], &pts[j], family) {
                    return false;
                }
            }
        }
        true
    }
}

/// Greedy independent subset in lexicographic scan order: take each point
/// not lying in `M(u)` for any point `u` taken before it.
///
/// On return the whole set is certified to lie in the union of the `M(u^i)`
/// over the chosen points, which is what drives the `t >= Mc(A)/|M|` bound.
pub fn independence_greedy(a: &LatticeSubset, family: &PatternFamily) -> IndependenceResult {
    let mut chosen: Vec<&crate::lattice::Point> = Vec::new();
    for p in a.iter() {
        if !chosen.iter().any(|u| share_subspace(p, u, family)) {
            chosen.push(p);
        }
    }
    // certification: every point of A conflicts with some chosen point
    debug_assert!(a
        .iter()
        .all(|p| chosen.iter().any(|u| share_subspace(p, u, family))));
    let witness = LatticeSubset::new(a.shape().clone(), chosen.into_iter().cloned())
        .expect("witness points in range");
    IndependenceResult { value: witness.len() as u32, witness, method: IndependenceMethod::Greedy }
}

/// Exact maximum independent set via branch and bound on the conflict graph.
pub fn independence_exact(
    a: &LatticeSubset,
    family: &PatternFamily,
    cfg: &SolverConfig,
) -> Result<IndependenceResult> {
    let cap = cfg.exact_cap.min(ABSOLUTE_EXACT_CAP);
    if a.len() > cap {
        return Err(Error::ExactCapExceeded {
            context: "independence_exact",
            cap,
            actual: a.len(),
        });
    }
    let n = a.len();
    let pts = a.points();
    let mut adj = vec![0u128; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if share_subspace(&pts[i], &pts[j], family) {
                adj[i] |= 1u128 << j;
                adj[j] |= 1u128 << i;
            }
        }
    }
    let full = if n == 0 { 0 } else { u128::MAX >> (128 - n) };
    let mut best_size = 0u32;
    let mut best_set = 0u128;
    mis_rec(&adj, full, 0, 0, &mut best_size, &mut best_set);
    let witness = LatticeSubset::new(
        a.shape().clone(),
        (0..n).filter(|i| best_set & (1u128 << i) != 0).map(|i| pts[i].clone()),
    )
    .expect("witness points in range");
    Ok(IndependenceResult { value: best_size, witness, method: IndependenceMethod::Exact })
}

fn mis_rec(adj: &[u128], cand: u128, cur: u128, cur_size: u32, best_size: &mut u32, best_set: &mut u128) {
    if cand == 0 {
        if cur_size > *best_size {
            *best_size = cur_size;
            *best_set = cur;
        }
        return;
    }
    if cur_size + cand.count_ones() <= *best_size {
        return;
    }
    // branch on the candidate of largest degree within the candidate set,
    // lowest index first on ties
    let mut v = usize::MAX;
    let mut v_deg = 0u32;
    let mut rest = cand;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (adj[i] & cand).count_ones();
        if v == usize::MAX || deg > v_deg {
            v = i;
            v_deg = deg;
        }
    }
    let bit = 1u128 << v;
    mis_rec(adj, cand & !adj[v] & !bit, cur | bit, cur_size + 1, best_size, best_set);
    // excluding an isolated candidate can never help
    if adj[v] & cand != 0 {
        mis_rec(adj, cand & !bit, cur, cur_size, best_size, best_set);
    }
}
