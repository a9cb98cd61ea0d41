//! Exact and greedy `M`-covering numbers, the closed form for `B`-subspaces,
//! the meet-family product bound, and enumeration of minimal-length covering
//! decompositions.
//!
//! The exact solver is a branch-and-bound over candidate subspaces: branching
//! on an uncovered point (fewest covering candidates first), with a greedy
//! initial upper bound and a lower bound from a greedy set of points no two
//! of which share a candidate subspace.

use crate::error::{Error, Result};
use crate::lattice::{LatticeShape, LatticeSubset};
use crate::pattern::{Pattern, PatternFamily};
use crate::subspace::{subspaces_meeting, Subspace};

/// Hard ceiling on exact-solver instance size (point masks are 128-bit).
pub const ABSOLUTE_EXACT_CAP: usize = 128;

/// Knobs for the exact solvers.
#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Largest instance the exact solvers accept, at most 128.
    pub exact_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { exact_cap: 64 }
    }
}

impl SolverConfig {
    pub fn with_cap(exact_cap: usize) -> Self {
        SolverConfig { exact_cap: exact_cap.min(ABSOLUTE_EXACT_CAP) }
    }
}

/// An ordered tuple of subspaces whose union contains a stated target set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDecomposition {
    subspaces: Vec<Subspace>,
}

impl CoverDecomposition {
    /// Validates that the union of `subspaces` contains `target`.
    pub fn new(subspaces: Vec<Subspace>, target: &LatticeSubset) -> Result<Self> {
        for p in target.iter() {
            if !subspaces.iter().any(|s| s.contains(p)) {
                return Err(Error::NotACover(p.coords().to_vec()));
            }
        }
        Ok(CoverDecomposition { subspaces })
    }

    pub fn length(&self) -> usize {
        self.subspaces.len()
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn covers(&self, target: &LatticeSubset) -> bool {
        target.iter().all(|p| self.subspaces.iter().any(|s| s.contains(p)))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Branch-and-bound nodes explored (0 for the greedy solver).
    pub nodes: u64,
    /// Length of the greedy cover used as the initial upper bound.
    pub greedy_upper: u32,
    /// Root lower bound from the independent-point heuristic.
    pub lower_bound: u32,
    /// `|M|` as given.
    pub family_size: usize,
    /// Size of the reduced (maximal-pattern) family actually searched.
    pub reduced_family_size: usize,
}

/// The value `Mc(A)` together with a witness decomposition and search stats.
#[derive(Clone, Debug)]
pub struct CoverResult {
    pub value: u32,
    pub witness: CoverDecomposition,
    pub stats: SolverStats,
}

/// Candidate subspaces with point-set bitmasks over a fixed instance.
struct CoverContext {
    cands: Vec<(Subspace, u128)>,
    /// Candidate indices covering each point.
    point_cands: Vec<Vec<usize>>,
    full: u128,
}

impl CoverContext {
    fn build(a: &LatticeSubset, patterns: &[Pattern]) -> Self {
        let family = PatternFamily::new(a.order(), patterns.iter().copied())
            .expect("non-empty pattern list");
        let cands: Vec<(Subspace, u128)> = subspaces_meeting(a, &family)
            .into_iter()
            .map(|(s, trace)| {
                let mut mask = 0u128;
                for p in trace.iter() {
                    let idx = a.points().binary_search(p).expect("trace point in set");
                    mask |= 1u128 << idx;
                }
                (s, mask)
            })
            .collect();
        let n = a.len();
        let mut point_cands = vec![Vec::new(); n];
        for (ci, (_, mask)) in cands.iter().enumerate() {
            let mut m = *mask;
            while m != 0 {
                let p = m.trailing_zeros() as usize;
                m &= m - 1;
                point_cands[p].push(ci);
            }
        }
        let full = if n == 0 { 0 } else { u128::MAX >> (128 - n) };
        CoverContext { cands, point_cands, full }
    }

    /// Greedy independent points among `uncovered`: no candidate covers two
    /// of them, so their count lower-bounds any cover of the uncovered part.
    fn lower_bound(&self, uncovered: u128) -> u32 {
        let mut blocked = 0u128;
        let mut count = 0;
        loop {
            let rest = uncovered & !blocked;
            if rest == 0 {
                return count;
            }
            let p = rest.trailing_zeros() as usize;
            count += 1;
            for &ci in &self.point_cands[p] {
                blocked |= self.cands[ci].1;
            }
            blocked |= 1u128 << p;
        }
    }

    /// Standard greedy cover; ties broken by canonical candidate order.
    fn greedy(&self) -> Vec<usize> {
        let mut covered = 0u128;
        let mut chosen = Vec::new();
        while covered != self.full {
            let mut best = usize::MAX;
            let mut best_gain = 0u32;
            for (ci, (_, mask)) in self.cands.iter().enumerate() {
                let gain = (mask & !covered).count_ones();
                if gain > best_gain {
                    best_gain = gain;
                    best = ci;
                }
            }
            debug_assert!(best != usize::MAX, "every point lies in some candidate");
            chosen.push(best);
            covered |= self.cands[best].1;
        }
        chosen
    }

    fn fewest_candidate_point(&self, uncovered: u128) -> usize {
        let mut best_p = usize::MAX;
        let mut best_c = usize::MAX;
        let mut rest = uncovered;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = self.point_cands[p].len();
            if c < best_c {
                best_c = c;
                best_p = p;
            }
        }
        best_p
    }
}

struct ExactSearch<'a> {
    ctx: &'a CoverContext,
    best_len: u32,
    best: Vec<usize>,
    nodes: u64,
}

impl ExactSearch<'_> {
    fn dfs(&mut self, covered: u128, chosen: &mut Vec<usize>) {
        self.nodes += 1;
        if covered == self.ctx.full {
            if (chosen.len() as u32) < self.best_len {
                self.best_len = chosen.len() as u32;
                self.best = chosen.clone();
            }
            return;
        }
        let uncovered = self.ctx.full & !covered;
        if chosen.len() as u32 + self.ctx.lower_bound(uncovered) >= self.best_len {
            return;
        }
        let p = self.ctx.fewest_candidate_point(uncovered);
        for ci in self.ctx.point_cands[p].clone() {
            chosen.push(ci);
            self.dfs(covered | self.ctx.cands[ci].1, chosen);
            chosen.pop();
        }
    }
}

fn check_cap(a: &LatticeSubset, cfg: &SolverConfig, context: &'static str) -> Result<()> {
    let cap = cfg.exact_cap.min(ABSOLUTE_EXACT_CAP);
    if a.len() > cap {
        return Err(Error::ExactCapExceeded { context, cap, actual: a.len() });
    }
    Ok(())
}

/// The exact `M`-covering number of `a`, with a canonical witness.
///
/// The value is 0 iff `a` is empty and never exceeds `|a|`. Deterministic:
/// the subset stores points canonically and the search order is fixed.
pub fn covering_number_exact(
    a: &LatticeSubset,
    family: &PatternFamily,
    cfg: &SolverConfig,
) -> Result<CoverResult> {
    check_cap(a, cfg, "covering_number_exact")?;
    let reduced = family.maximal_patterns();
    let mut stats = SolverStats {
        family_size: family.len(),
        reduced_family_size: reduced.len(),
        ..SolverStats::default()
    };
    if a.is_empty() {
        return Ok(CoverResult {
            value: 0,
            witness: CoverDecomposition { subspaces: Vec::new() },
            stats,
        });
    }
    let ctx = CoverContext::build(a, &reduced);
    let greedy = ctx.greedy();
    stats.greedy_upper = greedy.len() as u32;
    stats.lower_bound = ctx.lower_bound(ctx.full);
    let mut search = ExactSearch { ctx: &ctx, best_len: greedy.len() as u32, best: greedy, nodes: 0 };
    if stats.lower_bound < search.best_len {
        search.dfs(0, &mut Vec::new());
    }
    stats.nodes = search.nodes;
    let mut idxs = search.best;
    idxs.sort_unstable();
    let subspaces: Vec<Subspace> = idxs.iter().map(|&i| ctx.cands[i].0.clone()).collect();
    debug_assert!(search.best_len as usize <= a.len());
    Ok(CoverResult {
        value: search.best_len,
        witness: CoverDecomposition::new(subspaces, a)?,
        stats,
    })
}

/// Greedy upper bound for the `M`-covering number; valid for any size.
pub fn covering_number_greedy(a: &LatticeSubset, family: &PatternFamily) -> Result<CoverResult> {
    let reduced = family.maximal_patterns();
    let mut stats = SolverStats {
        family_size: family.len(),
        reduced_family_size: reduced.len(),
        ..SolverStats::default()
    };
    if a.is_empty() {
        return Ok(CoverResult {
            value: 0,
            witness: CoverDecomposition { subspaces: Vec::new() },
            stats,
        });
    }
    let ctx = CoverContext::build(a, &reduced);
    let chosen = ctx.greedy();
    stats.greedy_upper = chosen.len() as u32;
    stats.lower_bound = ctx.lower_bound(ctx.full);
    let mut idxs = chosen;
    idxs.sort_unstable();
    let subspaces: Vec<Subspace> = idxs.iter().map(|&i| ctx.cands[i].0.clone()).collect();
    Ok(CoverResult {
        value: subspaces.len() as u32,
        witness: CoverDecomposition::new(subspaces, a)?,
        stats,
    })
}

/// Closed form for the `M`-covering number of a `B`-subspace:
/// the minimum over `B'` in `M` of the product of `n_j` over `j in B \ B'`.
pub fn subspace_covering_closed_form(
    b: &Pattern,
    family: &PatternFamily,
    shape: &LatticeShape,
) -> u64 {
    family
        .patterns()
        .iter()
        .map(|bp| {
            b.axes()
                .filter(|&j| !bp.contains_axis(j))
                .map(|j| shape.extent(j) as u64)
                .product::<u64>()
        })
        .min()
        .expect("family is non-empty")
}

/// Outcome of checking the product bound for the meet family on one instance.
#[derive(Clone, Debug)]
pub struct MeetBoundReport {
    pub k1: u32,
    pub k2: u32,
    pub k_meet: u32,
    /// Constructive cover of `a` by pairwise intersections, length <= k1*k2.
    pub product_cover: CoverDecomposition,
    pub bound_holds: bool,
}

/// Computes `Mc` for `m1`, `m2` and their meet, checks `k <= k1*k2`, and
/// returns the constructive intersection cover from the two witnesses.
pub fn meet_bound_check(
    a: &LatticeSubset,
    m1: &PatternFamily,
    m2: &PatternFamily,
    cfg: &SolverConfig,
) -> Result<MeetBoundReport> {
    let r1 = covering_number_exact(a, m1, cfg)?;
    let r2 = covering_number_exact(a, m2, cfg)?;
    let meet = m1.meet(m2)?;
    let rm = covering_number_exact(a, &meet, cfg)?;

    let mut pieces = Vec::new();
    for s1 in r1.witness.subspaces() {
        for s2 in r2.witness.subspaces() {
            if let Some(s) = s1.intersect(s2)? {
                pieces.push(s);
            }
        }
    }
    let product_cover = CoverDecomposition::new(pieces, a)?;
    debug_assert!(product_cover.length() <= (r1.value as usize) * (r2.value as usize));
    Ok(MeetBoundReport {
        k1: r1.value,
        k2: r2.value,
        k_meet: rm.value,
        product_cover,
        bound_holds: (rm.value as u64) <= (r1.value as u64) * (r2.value as u64),
    })
}

/// Result of enumerating the minimal-length covering decompositions.
#[derive(Clone, Debug)]
pub struct MinDecompositions {
    /// `l = Mc(A)`, the length of every enumerated tuple.
    pub length: u32,
    /// Number of ordered `l`-tuples of `M`-subspaces meeting `A` whose union
    /// contains `A`. Exact when `count_exact` holds.
    pub count: u128,
    pub count_exact: bool,
    /// The first `cap` tuples in canonical order.
    pub tuples: Vec<CoverDecomposition>,
    pub truncated: bool,
    /// The theoretical ceiling `(|M| l^d)^l`.
    pub bound: u128,
}

const COUNT_LIMIT: u128 = 10_000_000;

/// Enumerates ordered `l`-tuples, `l = Mc(A)`, of not-necessarily-distinct
/// `M`-subspaces whose union contains `A`. Tuples are drawn from the
/// subspaces meeting `A`: with `l` minimal, a member with empty trace could
/// be dropped, contradicting minimality.
pub fn enumerate_min_decompositions(
    a: &LatticeSubset,
    family: &PatternFamily,
    cap: usize,
    cfg: &SolverConfig,
) -> Result<MinDecompositions> {
    let l = covering_number_exact(a, family, cfg)?.value;
    let d = a.order() as u32;
    let bound = ((family.len() as u128) * (l as u128).pow(d)).pow(l);
    if a.is_empty() {
        return Ok(MinDecompositions {
            length: 0,
            count: 1,
            count_exact: true,
            tuples: vec![CoverDecomposition { subspaces: Vec::new() }],
            truncated: cap < 1,
            bound: 1,
        });
    }
    // counting draws on the full family: dominated patterns still label
    // distinct subspaces of a tuple
    let ctx = CoverContext::build(a, family.patterns());
    let mut out = MinDecompositions {
        length: l,
        count: 0,
        count_exact: true,
        tuples: Vec::new(),
        truncated: false,
        bound,
    };
    let mut chosen: Vec<usize> = Vec::with_capacity(l as usize);
    enumerate_rec(&ctx, l, 0, &mut chosen, cap, &mut out);
    debug_assert!(!out.count_exact || out.count <= bound);
    Ok(out)
}

fn enumerate_rec(
    ctx: &CoverContext,
    l: u32,
    covered: u128,
    chosen: &mut Vec<usize>,
    cap: usize,
    out: &mut MinDecompositions,
) {
    if !out.count_exact {
        return;
    }
    let remaining = l as usize - chosen.len();
    if remaining == 0 {
        if covered == ctx.full {
            out.count += 1;
            if out.tuples.len() < cap {
                let subspaces = chosen.iter().map(|&i| ctx.cands[i].0.clone()).collect();
                out.tuples.push(CoverDecomposition { subspaces });
            } else {
                out.truncated = true;
            }
            if out.count >= COUNT_LIMIT {
                out.count_exact = false;
            }
        }
        return;
    }
    // sound pruning: the uncovered part provably needs more subspaces than
    // the remaining positions can provide
    if ctx.lower_bound(ctx.full & !covered) > remaining as u32 {
        return;
    }
    for ci in 0..ctx.cands.len() {
        chosen.push(ci);
        enumerate_rec(ctx, l, covered | ctx.cands[ci].1, chosen, cap, out);
        chosen.pop();
    }
}

/// A subspace whose trace on the instance is too rich to be covered within
/// the stated budget, forcing any minimal decomposition to pass through it.
#[derive(Clone, Debug)]
pub struct ForcedSubspace {
    pub subspace: Subspace,
    /// The `C*`-covering number of the trace (at least `l + 1`).
    pub star_covering: u32,
}

/// Scans, in canonical order, all `C`-subspaces with `C` a non-empty subset
/// of a family member, for one whose trace on `a` has `C*`-covering number
/// at least `l + 1`. Returns the first hit.
pub fn forced_subspace_probe(
    a: &LatticeSubset,
    family: &PatternFamily,
    l: u32,
    cfg: &SolverConfig,
) -> Result<Option<ForcedSubspace>> {
    for c in family.candidate_subpatterns() {
        let star = PatternFamily::star(&c)?;
        let mut seen = std::collections::BTreeSet::new();
        for p in a.iter() {
            seen.insert(Subspace::through(p, c));
        }
        for s in seen {
            let trace = s.trace(a);
            let value = covering_number_exact(&trace, &star, cfg)?.value;
            if value > l {
                return Ok(Some(ForcedSubspace { subspace: s, star_covering: value }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{subset_of, LatticeShape, Point};

    fn shape(dims: &[u32]) -> LatticeShape {
        LatticeShape::new(dims).unwrap()
    }

    fn diagonal(n: u32, len: u32, d: usize) -> LatticeSubset {
        let s = shape(&vec![n; d]);
        LatticeSubset::new(s, (1..=len).map(|i| Point::new(&vec![i; d]))).unwrap()
    }

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn diagonal_needs_one_slice_per_point() {
        let a = diagonal(4, 4, 2);
        let m = PatternFamily::slices(2).unwrap();
        let r = covering_number_exact(&a, &m, &cfg()).unwrap();
        assert_eq!(r.value, 4);
        assert!(r.witness.covers(&a));
        assert_eq!(r.witness.length(), 4);
    }

    #[test]
    fn empty_set_covers_with_zero() {
        let a = LatticeSubset::empty(shape(&[2, 2]));
        let m = PatternFamily::slices(2).unwrap();
        assert_eq!(covering_number_exact(&a, &m, &cfg()).unwrap().value, 0);
        assert_eq!(covering_number_greedy(&a, &m).unwrap().value, 0);
    }

    #[test]
    fn full_pattern_covers_anything_with_one() {
        let a = subset_of(&shape(&[3, 3]), &[&[1, 2], &[3, 1], &[2, 2]]);
        let m = PatternFamily::full(2).unwrap();
        assert_eq!(covering_number_exact(&a, &m, &cfg()).unwrap().value, 1);
    }

    #[test]
    fn box_covered_by_lines_of_one_direction() {
        // full [2] x [3] box with M = {{1}}: one horizontal line per column value
        let s = shape(&[2, 3]);
        let a = LatticeSubset::full_box(s.clone());
        let m = PatternFamily::new(2, [Pattern::from_axes(2, [0]).unwrap()]).unwrap();
        let r = covering_number_exact(&a, &m, &cfg()).unwrap();
        assert_eq!(r.value, 3);
        let b = Pattern::full(2);
        assert_eq!(subspace_covering_closed_form(&b, &m, &s), 3);
    }

    #[test]
    fn point_family_covering_number_is_size() {
        let a = subset_of(&shape(&[3, 3]), &[&[1, 1], &[1, 2], &[2, 1], &[3, 3]]);
        let m = PatternFamily::points(2).unwrap();
        assert_eq!(covering_number_exact(&a, &m, &cfg()).unwrap().value, 4);
    }

    #[test]
    fn cap_is_enforced() {
        let a = LatticeSubset::full_box(shape(&[9, 9]));
        let m = PatternFamily::slices(2).unwrap();
        let tight = SolverConfig::with_cap(16);
        assert!(matches!(
            covering_number_exact(&a, &m, &tight),
            Err(Error::ExactCapExceeded { .. })
        ));
        // greedy accepts the same instance
        assert!(covering_number_greedy(&a, &m).unwrap().value >= 9);
    }

    #[test]
    fn greedy_is_forced_on_diagonal() {
        let a = diagonal(4, 4, 2);
        let m = PatternFamily::slices(2).unwrap();
        let r = covering_number_greedy(&a, &m).unwrap();
        assert_eq!(r.value, 4);
        assert!(r.witness.covers(&a));
    }

    #[test]
    fn greedy_single_point() {
        let a = subset_of(&shape(&[2, 2]), &[&[2, 1]]);
        for m in [
            PatternFamily::slices(2).unwrap(),
            PatternFamily::points(2).unwrap(),
            PatternFamily::full(2).unwrap(),
        ] {
            assert_eq!(covering_number_greedy(&a, &m).unwrap().value, 1);
        }
    }

    #[test]
    fn closed_form_examples() {
        let s = shape(&[2, 3]);
        let m = PatternFamily::new(2, [Pattern::from_axes(2, [0]).unwrap()]).unwrap();
        assert_eq!(subspace_covering_closed_form(&Pattern::full(2), &m, &s), 3);

        // B contained in a family member: covering number 1
        let b = Pattern::from_axes(2, [0]).unwrap();
        assert_eq!(subspace_covering_closed_form(&b, &m, &s), 1);

        // slice family on a cube: n
        let s3 = shape(&[4, 4, 4]);
        let m3 = PatternFamily::slices(3).unwrap();
        assert_eq!(subspace_covering_closed_form(&Pattern::full(3), &m3, &s3), 4);
    }

    #[test]
    fn closed_form_matches_exact_on_materialized_subspaces() {
        // every (B, M) over d = 2, n = (3, 2); M drawn from all 15 families
        let s = shape(&[3, 2]);
        let all_patterns: Vec<Pattern> = (0u8..4).map(|m| Pattern::from_mask(2, m).unwrap()).collect();
        for fam_bits in 1u32..16 {
            let members = all_patterns
                .iter()
                .enumerate()
                .filter(|(i, _)| fam_bits & (1 << i) != 0)
                .map(|(_, p)| *p);
            let m = PatternFamily::new(2, members).unwrap();
            for b_mask in 0u8..4 {
                let b = Pattern::from_mask(2, b_mask).unwrap();
                let sub = Subspace::through(&Point::new(&[1, 1]), b).to_subset(&s);
                let exact = covering_number_exact(&sub, &m, &cfg()).unwrap().value as u64;
                assert_eq!(exact, subspace_covering_closed_form(&b, &m, &s), "B={b:?} M={m:?}");
            }
        }
    }

    #[test]
    fn closed_form_matches_exact_exhaustively_in_three_dims() {
        // every (B, M) over d = 3 on the (3, 2, 3) box
        let s = shape(&[3, 2, 3]);
        let anchor = Point::new(&[2, 1, 3]);
        for fam_bits in 1u32..256 {
            let members = (0u8..8)
                .filter(|mask| fam_bits & (1 << *mask as u32) != 0)
                .map(|mask| Pattern::from_mask(3, mask).unwrap());
            let m = PatternFamily::new(3, members).unwrap();
            for b_mask in 0u8..8 {
                let b = Pattern::from_mask(3, b_mask).unwrap();
                let sub = Subspace::through(&anchor, b).to_subset(&s);
                let exact = covering_number_exact(&sub, &m, &cfg()).unwrap().value as u64;
                assert_eq!(exact, subspace_covering_closed_form(&b, &m, &s), "B={b:?} M={m:?}");
            }
        }
    }

    #[test]
    fn meet_bound_on_diagonal() {
        let a = diagonal(2, 2, 2);
        let m1 = PatternFamily::new(2, [Pattern::from_axes(2, [0]).unwrap()]).unwrap();
        let m2 = PatternFamily::new(2, [Pattern::from_axes(2, [1]).unwrap()]).unwrap();
        let rep = meet_bound_check(&a, &m1, &m2, &cfg()).unwrap();
        assert_eq!((rep.k1, rep.k2, rep.k_meet), (2, 2, 2));
        assert!(rep.bound_holds);
        assert!(rep.product_cover.covers(&a));
        assert!(rep.product_cover.length() <= 4);
    }

    #[test]
    fn meet_bound_trivial_cases() {
        let s = shape(&[2, 2]);
        let empty = LatticeSubset::empty(s.clone());
        let m = PatternFamily::full(2).unwrap();
        let rep = meet_bound_check(&empty, &m, &m, &cfg()).unwrap();
        assert_eq!((rep.k1, rep.k2, rep.k_meet), (0, 0, 0));

        let full = LatticeSubset::full_box(s);
        let rep = meet_bound_check(&full, &m, &m, &cfg()).unwrap();
        assert_eq!((rep.k1, rep.k2, rep.k_meet), (1, 1, 1));
        assert!(rep.bound_holds);
    }

    #[test]
    fn decomposition_count_single_point() {
        let a = subset_of(&shape(&[2, 2]), &[&[1, 1]]);
        let m = PatternFamily::slices(2).unwrap();
        let e = enumerate_min_decompositions(&a, &m, 100, &cfg()).unwrap();
        assert_eq!(e.length, 1);
        assert_eq!(e.count, 2);
        assert!(e.count_exact && !e.truncated);
        assert_eq!(e.tuples.len(), 2);
    }

    #[test]
    fn decomposition_count_diagonal_two() {
        // Mc = 2; ordered tuples: 2! * |M|^2 = 8
        let a = diagonal(2, 2, 2);
        let m = PatternFamily::slices(2).unwrap();
        let e = enumerate_min_decompositions(&a, &m, 100, &cfg()).unwrap();
        assert_eq!(e.length, 2);
        assert_eq!(e.count, 8);
        assert!(e.count <= e.bound);
        for t in &e.tuples {
            assert!(t.covers(&a));
            assert_eq!(t.length(), 2);
        }
    }

    #[test]
    fn decomposition_count_empty_set() {
        let a = LatticeSubset::empty(shape(&[2, 2]));
        let m = PatternFamily::slices(2).unwrap();
        let e = enumerate_min_decompositions(&a, &m, 10, &cfg()).unwrap();
        assert_eq!(e.length, 0);
        assert_eq!(e.count, 1);
        assert_eq!(e.tuples.len(), 1);
        assert_eq!(e.tuples[0].length(), 0);
    }

    #[test]
    fn decomposition_cap_truncates_but_counts() {
        let a = diagonal(2, 2, 2);
        let m = PatternFamily::slices(2).unwrap();
        let e = enumerate_min_decompositions(&a, &m, 3, &cfg()).unwrap();
        assert_eq!(e.count, 8);
        assert_eq!(e.tuples.len(), 3);
        assert!(e.truncated);
        assert!(e.count_exact);
    }

    /// Oracle: count tuples over ALL subspaces of the box (not only those
    /// meeting A); must agree with the candidate-restricted enumeration when
    /// the tuple length is the exact covering number.
    #[test]
    fn restricting_candidates_to_meeting_subspaces_is_lossless() {
        let s = shape(&[2, 2]);
        let m = PatternFamily::slices(2).unwrap();
        for pts in [
            vec![vec![1u32, 1]],
            vec![vec![1, 1], vec![2, 2]],
            vec![vec![1, 1], vec![1, 2]],
            vec![vec![1, 1], vec![1, 2], vec![2, 1]],
        ] {
            let a = LatticeSubset::new(
                s.clone(),
                pts.iter().map(|c| Point::new(c)),
            )
            .unwrap();
            let e = enumerate_min_decompositions(&a, &m, 10_000, &cfg()).unwrap();
            // brute force over every M-subspace of the whole box
            let mut all: Vec<Subspace> = Vec::new();
            for b in m.patterns() {
                for p in s.points() {
                    let sub = Subspace::through(&p, *b);
                    if !all.contains(&sub) {
                        all.push(sub);
                    }
                }
            }
            let l = e.length as usize;
            let mut brute = 0u128;
            let mut stack = vec![0usize; l];
            'outer: loop {
                let chosen: Vec<&Subspace> = stack.iter().map(|&i| &all[i]).collect();
                if a.iter().all(|p| chosen.iter().any(|sub| sub.contains(p))) {
                    brute += 1;
                }
                for pos in (0..l).rev() {
                    stack[pos] += 1;
                    if stack[pos] < all.len() {
                        continue 'outer;
                    }
                    stack[pos] = 0;
                }
                break;
            }
            assert_eq!(e.count, brute, "A = {a:?}");
        }
    }

    #[test]
    fn probe_finds_rich_row() {
        // full row plus one extra point: the row's point-covering number is 3 >= l+1 = 2
        let s = shape(&[3, 2]);
        let a = subset_of(&s, &[&[1, 1], &[2, 1], &[3, 1], &[1, 2]]);
        let m = PatternFamily::slices(2).unwrap();
        let hit = forced_subspace_probe(&a, &m, 1, &cfg()).unwrap().unwrap();
        assert_eq!(hit.subspace.fixed_coords(), &[(1, 1)]);
        assert_eq!(hit.star_covering, 3);
    }

    #[test]
    fn probe_single_point_finds_nothing() {
        let a = subset_of(&shape(&[2, 2]), &[&[1, 2]]);
        let m = PatternFamily::slices(2).unwrap();
        assert!(forced_subspace_probe(&a, &m, 1, &cfg()).unwrap().is_none());
    }

    #[test]
    fn probe_diagonal_finds_nothing() {
        let a = diagonal(3, 3, 2);
        let m = PatternFamily::slices(2).unwrap();
        assert!(forced_subspace_probe(&a, &m, 3, &cfg()).unwrap().is_none());
    }

    #[test]
    fn exact_value_is_input_order_independent() {
        let s = shape(&[4, 4]);
        let m = PatternFamily::slices(2).unwrap();
        let pts = [&[1u32, 2], &[2, 2], &[3, 1], &[4, 4], &[2, 3]];
        let a1 = LatticeSubset::new(s.clone(), pts.iter().map(|c| Point::new(*c))).unwrap();
        let a2 = LatticeSubset::new(s, pts.iter().rev().map(|c| Point::new(*c))).unwrap();
        let r1 = covering_number_exact(&a1, &m, &cfg()).unwrap();
        let r2 = covering_number_exact(&a2, &m, &cfg()).unwrap();
        assert_eq!(r1.value, r2.value);
        assert_eq!(r1.witness, r2.witness);
    }
}
