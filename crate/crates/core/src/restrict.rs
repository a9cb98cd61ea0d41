//! Constructive extraction of sub-boxes preserving covering-number lower
//! bounds: linear-size axis sets from an independent subset, pairwise-disjoint
//! axis sets through the derandomized coloring, and same-covering-number
//! restrictions via a descent tree over forced subspaces. Every certificate's
//! value is recomputed with the exact solver, never trusted from the
//! construction.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::coloring::{disjoint_coloring, ColoringStrategy};
use crate::error::{Error, Result};
use crate::independence::independence_greedy;
use crate::lattice::{LatticeSubset, Restriction};
use crate::pattern::PatternFamily;
use crate::solver::{covering_number_exact, forced_subspace_probe, SolverConfig};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremTag {
    Linear,
    OffDiagonal,
    SameCover,
}

/// A restriction with a solver-verified covering lower bound.
#[derive(Clone, Debug)]
pub struct RestrictionCertificate {
    pub restriction: Restriction,
    pub claimed_lower_bound: u32,
    /// Exact covering number of the induced set, recomputed with the solver
    /// rather than trusted from the construction.
    pub verified_value: u32,
    pub theorem: TheoremTag,
}

impl RestrictionCertificate {
    /// The verification stands: the recomputed value meets the claim. A
    /// `false` here would falsify the backing theorem and is treated by the
    /// harness as a build-failing event.
    pub fn is_valid(&self) -> bool {
        self.verified_value >= self.claimed_lower_bound
    }
}

/// Axis sets of size at most `l` whose restriction keeps covering number at
/// least `l`, provided `Mc(A) >= |M| l`: project a greedy independent subset
/// of size `l`.
pub fn restrict_linear(
    a: &LatticeSubset,
    family: &PatternFamily,
    l: u32,
    cfg: &SolverConfig,
) -> Result<RestrictionCertificate> {
    let mc = covering_number_exact(a, family, cfg)?.value;
    let required = family.len() as u64 * l as u64;
    if (mc as u64) < required {
        return Err(Error::HypothesisNotMet { required, computed: mc as u64 });
    }
    let d = a.order();
    let axis_sets: Vec<BTreeSet<u32>> = if l == 0 {
        vec![BTreeSet::new(); d]
    } else {
        let ind = independence_greedy(a, family);
        // the certified union gives t|M| >= Mc(A) >= |M| l
        assert!(ind.value >= l, "greedy independence fell short of the guaranteed size");
        let chosen = &ind.witness.points()[..l as usize];
        (0..d).map(|j| chosen.iter().map(|p| p.coord(j)).collect()).collect()
    };
    let restriction = a.restrict(&axis_sets)?;
    assert!(restriction.axis_set_sizes().iter().all(|&s| s <= l as usize));
    let verified_value = covering_number_exact(restriction.induced(), family, cfg)?.value;
    debug_assert!(verified_value >= l);
    Ok(RestrictionCertificate {
        restriction,
        claimed_lower_bound: l,
        verified_value,
        theorem: TheoremTag::Linear,
    })
}

/// Pairwise-disjoint axis sets whose restriction keeps covering number at
/// least `l`, provided `Mc(A \ E) >= d^d |M| l`: extract an independent
/// subset of size `d^d l` off the diagonal, then color coordinates.
pub fn restrict_offdiagonal(
    a: &LatticeSubset,
    family: &PatternFamily,
    l: u32,
    cfg: &SolverConfig,
) -> Result<RestrictionCertificate> {
    let d = a.order();
    let off = a.off_diagonal_part();
    let mc_off = covering_number_exact(&off, family, cfg)?.value;
    let dd = (d as u64).pow(d as u32);
    let required = dd * family.len() as u64 * l as u64;
    if (mc_off as u64) < required {
        return Err(Error::HypothesisNotMet { required, computed: mc_off as u64 });
    }
    let axis_sets: Vec<BTreeSet<u32>> = if l == 0 {
        vec![BTreeSet::new(); d]
    } else {
        let ind = independence_greedy(&off, family);
        let want = (dd * l as u64) as usize;
        assert!(ind.value as usize >= want, "greedy independence fell short");
        let a_prime = LatticeSubset::new(
            a.shape().clone(),
            ind.witness.points()[..want].iter().cloned(),
        )?;
        let coloring = disjoint_coloring(&a_prime, ColoringStrategy::Derandomized);
        debug_assert!(coloring.captured().len() as u64 >= l as u64);
        coloring.restriction.axis_sets().to_vec()
    };
    let restriction = a.restrict(&axis_sets)?;
    assert!(restriction.axis_sets_pairwise_disjoint());
    let verified_value = covering_number_exact(restriction.induced(), family, cfg)?.value;
    debug_assert!(verified_value >= l);
    Ok(RestrictionCertificate {
        restriction,
        claimed_lower_bound: l,
        verified_value,
        theorem: TheoremTag::OffDiagonal,
    })
}

/// Outcome of the bounded-size hypothesis scan and inequality check.
#[derive(Clone, Debug)]
pub struct BoundedSizeReport {
    pub tau: u32,
    pub l: u32,
    pub size: u64,
    pub covering: u32,
    pub hypothesis_ok: bool,
    /// First subspace whose trace exceeds the budget, with its value.
    pub hypothesis_violation: Option<(Subspace, u32)>,
    /// `l^tau * Mc(A)`, meaningful when the hypothesis holds.
    pub bound: u128,
    /// `None` when the hypothesis fails; a `Some(false)` would contradict
    /// the bounded-size proposition and is treated as a bug.
    pub bound_holds: Option<bool>,
}

/// Verifies by exhaustive scan that every `C`-subspace trace (`C` a non-empty
/// subset of a family member) has `C*`-covering number at most `l`, then
/// checks `|A| <= l^tau Mc(A)`.
pub fn bounded_size_check(
    a: &LatticeSubset,
    family: &PatternFamily,
    l: u32,
    cfg: &SolverConfig,
) -> Result<BoundedSizeReport> {
    let tau = family.max_order();
    let covering = covering_number_exact(a, family, cfg)?.value;
    let mut violation = None;
    'scan: for c in family.candidate_subpatterns() {
        let star = PatternFamily::star(&c)?;
        let mut seen = BTreeSet::new();
        for p in a.iter() {
            seen.insert(Subspace::through(p, c));
        }
        for s in seen {
            let trace = s.trace(a);
            let value = covering_number_exact(&trace, &star, cfg)?.value;
            if value > l {
                violation = Some((s, value));
                break 'scan;
            }
        }
    }
    let hypothesis_ok = violation.is_none();
    let bound = (l as u128).pow(tau) * covering as u128;
    let bound_holds = hypothesis_ok.then(|| a.len() as u128 <= bound);
    Ok(BoundedSizeReport {
        tau,
        l,
        size: a.len() as u64,
        covering,
        hypothesis_ok,
        hypothesis_violation: violation,
        bound,
        bound_holds,
    })
}

/// Largest `C*`-covering number over the traces in the bounded-size
/// hypothesis scope; the smallest budget `l` for which the hypothesis holds.
pub fn max_substar_covering(
    a: &LatticeSubset,
    family: &PatternFamily,
    cfg: &SolverConfig,
) -> Result<u32> {
    let mut best = 0u32;
    for c in family.candidate_subpatterns() {
        let star = PatternFamily::star(&c)?;
        let mut seen = BTreeSet::new();
        for p in a.iter() {
            seen.insert(Subspace::through(p, c));
        }
        for s in seen {
            let trace = s.trace(a);
            best = best.max(covering_number_exact(&trace, &star, cfg)?.value);
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafReason {
    CaseTwo,
    DepthLimit,
}

/// One vertex of the subspace-descent tree.
#[derive(Clone, Debug)]
pub struct DescentTreeNode {
    pub subset: LatticeSubset,
    pub chosen_subspace: Option<Subspace>,
    pub children: Vec<DescentTreeNode>,
    pub leaf_reason: Option<LeafReason>,
}

impl DescentTreeNode {
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.node_count()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(|c| c.depth()).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct SameCoverOutcome {
    pub certificate: RestrictionCertificate,
    pub tree: DescentTreeNode,
    /// The input trimmed pointwise to a minimal set of the same covering number.
    pub trimmed: LatticeSubset,
    /// The recurrence bound `J(d, l, |M|)` on axis-set sizes.
    pub axis_size_bound: u128,
}

/// Brings the covering number down to exactly `target` by removing points
/// one at a time (lexicographically last removable point first). Removing a
/// point decreases the value by at most one, so the loop cannot overshoot.
fn trim_to_covering(
    a: &LatticeSubset,
    family: &PatternFamily,
    target: u32,
    cfg: &SolverConfig,
) -> Result<LatticeSubset> {
    let mut cur = a.clone();
    'outer: while covering_number_exact(&cur, family, cfg)?.value > target {
        for p in cur.points().iter().rev() {
            let cand = cur.without(std::slice::from_ref(p));
            if covering_number_exact(&cand, family, cfg)?.value >= target {
                cur = cand;
                continue 'outer;
            }
        }
        unreachable!("some removal always keeps the value within one of the target");
    }
    Ok(cur)
}

struct SameCoverCore<'a> {
    cfg: &'a SolverConfig,
}

impl SameCoverCore<'_> {
    /// Axis sets preserving `Mc(A) = l` for the trimmed set; recurses into
    /// star families on forced traces.
    fn run(
        &self,
        a: &LatticeSubset,
        family: &PatternFamily,
    ) -> Result<(u32, LatticeSubset, Vec<BTreeSet<u32>>, DescentTreeNode)> {
        let l = covering_number_exact(a, family, self.cfg)?.value;
        let trimmed = trim_to_covering(a, family, l, self.cfg)?;
        let mut acc: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); a.order()];
        let tree = self.build(&trimmed, family, l, 0, &mut acc)?;
        Ok((l, trimmed, acc, tree))
    }

    fn enclose(subset: &LatticeSubset, acc: &mut [BTreeSet<u32>]) {
        for (j, set) in acc.iter_mut().enumerate() {
            set.extend(subset.axis_projection(j));
        }
    }

    fn build(
        &self,
        a_v: &LatticeSubset,
        family: &PatternFamily,
        l: u32,
        depth: u32,
        acc: &mut Vec<BTreeSet<u32>>,
    ) -> Result<DescentTreeNode> {
        if depth >= l {
            Self::enclose(a_v, acc);
            return Ok(DescentTreeNode {
                subset: a_v.clone(),
                chosen_subspace: None,
                children: Vec::new(),
                leaf_reason: Some(LeafReason::DepthLimit),
            });
        }
        let Some(forced) = forced_subspace_probe(a_v, family, l, self.cfg)? else {
            // no rich subspace: the set has bounded size, enclose it directly
            let d = a_v.order() as u32;
            debug_assert!(a_v.len() as u128 <= (l as u128).pow(d));
            Self::enclose(a_v, acc);
            return Ok(DescentTreeNode {
                subset: a_v.clone(),
                chosen_subspace: None,
                children: Vec::new(),
                leaf_reason: Some(LeafReason::CaseTwo),
            });
        };
        let s_v = forced.subspace;
        let c_v = *s_v.pattern();
        let star = PatternFamily::star(&c_v)?;
        let trace = s_v.trace(a_v);
        let trimmed_trace = trim_to_covering(&trace, &star, l + 1, self.cfg)?;
        // the trace stays too rich for any short cover even after restricting
        let (inner_l, _, inner_sets, _) = self.run(&trimmed_trace, &star)?;
        debug_assert_eq!(inner_l, l + 1);
        for (j, set) in acc.iter_mut().enumerate() {
            set.extend(inner_sets[j].iter().copied());
        }
        let mut children = Vec::new();
        for b in family.patterns() {
            if !c_v.is_subset_of(b) {
                continue;
            }
            // the unique B-subspace containing S_v
            let fixed: Vec<(usize, u32)> = s_v
                .fixed_coords()
                .iter()
                .filter(|(j, _)| !b.contains_axis(*j))
                .copied()
                .collect();
            let s_prime = Subspace::from_parts(*b, fixed);
            let child_subset = LatticeSubset::new(
                a_v.shape().clone(),
                a_v.iter().filter(|p| !s_prime.contains(p)).cloned(),
            )?;
            children.push(self.build(&child_subset, family, l, depth + 1, acc)?);
        }
        Ok(DescentTreeNode {
            subset: a_v.clone(),
            chosen_subspace: Some(s_v),
            children,
            leaf_reason: None,
        })
    }
}

/// Axis sets whose restriction has exactly the covering number of the input:
/// at least by the descent construction, at most by restriction monotonicity.
/// The value is verified post hoc with the exact solver.
pub fn restrict_same_cover(
    a: &LatticeSubset,
    family: &PatternFamily,
    cfg: &SolverConfig,
) -> Result<SameCoverOutcome> {
    let core = SameCoverCore { cfg };
    let (l, trimmed, axis_sets, tree) = core.run(a, family)?;
    let restriction = a.restrict(&axis_sets)?;
    // always verified post hoc; a mismatch is surfaced through the
    // certificate instead of trusted away
    let verified_value = covering_number_exact(restriction.induced(), family, cfg)?.value;
    let axis_size_bound = j_bound(a.order() as u32, l, family.len() as u64);
    debug_assert!(restriction.axis_set_sizes().iter().all(|&s| (s as u128) <= axis_size_bound));
    Ok(SameCoverOutcome {
        certificate: RestrictionCertificate {
            restriction,
            claimed_lower_bound: l,
            verified_value,
            theorem: TheoremTag::SameCover,
        },
        tree,
        trimmed,
        axis_size_bound,
    })
}

/// The recurrence bound on axis-set sizes:
/// `J(1, l, m) = l` and
/// `J(d, l, m) = (1 + m + ... + m^l) max_c J(d-1, l+1, c) + m^l l^d`,
/// the maximum over candidate pattern sizes `1 <= c <= d-1`. Saturating.
pub fn j_bound(d: u32, l: u32, m: u64) -> u128 {
    if d <= 1 {
        return l as u128;
    }
    let geom = (0..=l).fold(0u128, |acc, i| acc.saturating_add((m as u128).saturating_pow(i)));
    let inner = (1..d).map(|c| j_bound(d - 1, l + 1, c as u64)).max().unwrap_or(0);
    let leaf = (m as u128).saturating_pow(l).saturating_mul((l as u128).saturating_pow(d));
    geom.saturating_mul(inner).saturating_add(leaf)
}

/// The exhaustively best restriction under per-axis size caps.
#[derive(Clone, Debug)]
pub struct OptimalRestriction {
    pub restriction: Restriction,
    pub value: u32,
    pub examined: u64,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Exhaustive search over all products of axis subsets of size
/// `min(cap_j, n_j)`, maximizing the induced covering number. By restriction
/// monotonicity, maximal subset sizes dominate, so only those are examined.
pub fn optimal_restriction_search(
    a: &LatticeSubset,
    family: &PatternFamily,
    caps: &[usize],
    budget: u64,
    cfg: &SolverConfig,
) -> Result<OptimalRestriction> {
    let d = a.order();
    if caps.len() != d {
        return Err(Error::PointOrderMismatch { expected: d, got: caps.len() });
    }
    let sizes: Vec<u64> = (0..d)
        .map(|j| (caps[j] as u64).min(a.shape().extent(j) as u64))
        .collect();
    let work: u128 = (0..d)
        .map(|j| binomial(a.shape().extent(j) as u64, sizes[j]))
        .product();
    if work > budget as u128 {
        return Err(Error::BudgetExceeded {
            context: "optimal_restriction_search",
            budget,
            actual: work,
        });
    }
    let per_axis: Vec<Vec<BTreeSet<u32>>> = (0..d)
        .map(|j| {
            (1..=a.shape().extent(j))
                .combinations(sizes[j] as usize)
                .map(|c| c.into_iter().collect::<BTreeSet<u32>>())
                .collect()
        })
        .collect();
    let mut best: Option<OptimalRestriction> = None;
    let mut examined = 0u64;
    for combo in per_axis.iter().multi_cartesian_product() {
        let axis_sets: Vec<BTreeSet<u32>> = combo.into_iter().cloned().collect();
        let restriction = a.restrict(&axis_sets)?;
        let value = covering_number_exact(restriction.induced(), family, cfg)?.value;
        examined += 1;
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(OptimalRestriction { restriction, value, examined: 0 });
        }
    }
    let mut best = best.expect("at least one size combination");
    best.examined = examined;
    Ok(best)
}
