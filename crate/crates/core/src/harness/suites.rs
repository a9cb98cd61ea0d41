//! Theorem-verification suites. Each suite re-derives both sides of its
//! relation from scratch on generated instances and reports violations; a
//! violation on a validated instance is a build-failing event.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coloring::{disjoint_coloring, ColoringStrategy};
use crate::error::{Error, Result};
use crate::harness::generate::{prune_to_antichain, random_diagonal_sum_pair, random_subset};
use crate::independence::independence_greedy;
use crate::lattice::{LatticeShape, LatticeSubset, Point};
use crate::pattern::{Pattern, PatternFamily};
use crate::restrict::{
    bounded_size_check, max_substar_covering, restrict_linear, restrict_offdiagonal,
    restrict_same_cover,
};
use crate::solver::{
    covering_number_exact, enumerate_min_decompositions, meet_bound_check,
    subspace_covering_closed_form, SolverConfig,
};
use crate::subspace::{share_subspace, Subspace};
use crate::tensor::{slice_rank_oracle, FieldTensor, OracleConfig};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Violation {
    pub instance: String,
    pub relation: String,
    pub observed: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub instances_checked: u64,
    pub violations: Vec<Violation>,
    pub runtime_secs: f64,
    pub seed: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    DiagonalAdditivity,
    ClosedForm,
    MeetBound,
    DecompositionCount,
    GreedyIndependence,
    LinearRestriction,
    OffdiagRestriction,
    SameCover,
    Coloring,
    BoundedSize,
    SawinTao,
}

impl SuiteName {
    pub fn all() -> [SuiteName; 11] {
        [
            SuiteName::DiagonalAdditivity,
            SuiteName::ClosedForm,
            SuiteName::MeetBound,
            SuiteName::DecompositionCount,
            SuiteName::GreedyIndependence,
            SuiteName::LinearRestriction,
            SuiteName::OffdiagRestriction,
            SuiteName::SameCover,
            SuiteName::Coloring,
            SuiteName::BoundedSize,
            SuiteName::SawinTao,
        ]
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SuiteName::DiagonalAdditivity => "diagonal-additivity",
            SuiteName::ClosedForm => "closed-form",
            SuiteName::MeetBound => "meet-bound",
            SuiteName::DecompositionCount => "decomposition-count",
            SuiteName::GreedyIndependence => "greedy-independence",
            SuiteName::LinearRestriction => "linear-restriction",
            SuiteName::OffdiagRestriction => "offdiag-restriction",
            SuiteName::SameCover => "same-cover",
            SuiteName::Coloring => "coloring",
            SuiteName::BoundedSize => "bounded-size",
            SuiteName::SawinTao => "sawin-tao",
        };
        f.write_str(s)
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::all()
            .into_iter()
            .find(|n| n.to_string() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Scales the instance count; each suite has its own default.
    pub budget: Option<u64>,
    /// Replaces the suite's default shapes where meaningful.
    pub shape: Option<LatticeShape>,
    /// Replaces the suite's default or sampled families where meaningful.
    pub family: Option<PatternFamily>,
}

impl SuiteConfig {
    fn solver(&self) -> SolverConfig {
        SolverConfig::with_cap(128)
    }

    fn shapes_or(&self, defaults: &[&[u32]]) -> Vec<LatticeShape> {
        match &self.shape {
            Some(s) => vec![s.clone()],
            None => defaults.iter().map(|d| LatticeShape::new(d).expect("valid shape")).collect(),
        }
    }
}

pub fn run_suite(name: SuiteName, cfg: &SuiteConfig) -> Result<VerificationReport> {
    match name {
        SuiteName::DiagonalAdditivity => suite_diagonal_additivity(cfg),
        SuiteName::ClosedForm => suite_closed_form(cfg),
        SuiteName::MeetBound => suite_meet_bound(cfg),
        SuiteName::DecompositionCount => suite_decomposition_count(cfg),
        SuiteName::GreedyIndependence => suite_greedy_independence(cfg),
        SuiteName::LinearRestriction => suite_linear_restriction(cfg),
        SuiteName::OffdiagRestriction => suite_offdiag_restriction(cfg),
        SuiteName::SameCover => suite_same_cover(cfg),
        SuiteName::Coloring => suite_coloring(cfg),
        SuiteName::BoundedSize => suite_bounded_size(cfg),
        SuiteName::SawinTao => suite_sawin_tao(cfg),
    }
}

pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    SuiteName::all().into_iter().map(|n| run_suite(n, cfg)).collect()
}

/// A uniformly random non-empty family over `[d]`, optionally excluding the
/// full pattern.
fn random_family(d: usize, allow_full: bool, rng: &mut ChaCha8Rng) -> PatternFamily {
    let full_mask = if d >= 8 { 0xff } else { (1u8 << d) - 1 };
    loop {
        let mut members = Vec::new();
        for mask in 0..=full_mask {
            if !allow_full && mask == full_mask {
                continue;
            }
            if rng.gen_bool(0.5) {
                members.push(Pattern::from_mask(d, mask).expect("mask in range"));
            }
        }
        if !members.is_empty() {
            return PatternFamily::new(d, members).expect("non-empty family");
        }
    }
}

fn report(
    suite: SuiteName,
    seed: u64,
    started: Instant,
    instances: u64,
    violations: Vec<Violation>,
) -> VerificationReport {
    VerificationReport {
        suite: suite.to_string(),
        instances_checked: instances,
        violations,
        runtime_secs: started.elapsed().as_secs_f64(),
        seed,
    }
}

/// Additivity of the covering number over diagonal sums, for families
/// without the full pattern.
fn suite_diagonal_additivity(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    if let Some(m) = &cfg.family {
        if m.contains_full_pattern() {
            return Err(Error::Parse(
                "diagonal-additivity requires a family without the full pattern".into(),
            ));
        }
    }
    let shapes = cfg.shapes_or(&[&[4, 4], &[3, 3, 3]]);
    let total = cfg.budget.unwrap_or(1000);
    let solver = cfg.solver();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    for i in 0..total {
        let shape = &shapes[(i % shapes.len() as u64) as usize];
        let d = shape.order();
        let (a1, a2) = random_diagonal_sum_pair(shape, 0.5, &mut rng);
        let m = match &cfg.family {
            Some(m) => m.clone(),
            None => random_family(d, false, &mut rng),
        };
        let union = a1.union(&a2)?;
        let k1 = covering_number_exact(&a1, &m, &solver)?.value;
        let k2 = covering_number_exact(&a2, &m, &solver)?.value;
        let k = covering_number_exact(&union, &m, &solver)?.value;
        if k != k1 + k2 {
            violations.push(Violation {
                instance: format!("A1={a1:?} A2={a2:?} M={m:?}"),
                relation: "Mc(A1 u A2) = Mc(A1) + Mc(A2)".into(),
                observed: format!("{k} vs {k1} + {k2}"),
            });
        }
    }
    Ok(report(SuiteName::DiagonalAdditivity, cfg.seed, started, total, violations))
}

/// The closed form for the covering number of a `B`-subspace against the
/// exact solver on the materialized subspace.
fn suite_closed_form(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let shapes = cfg.shapes_or(&[&[2, 3, 2]]);
    let samples = cfg.budget.unwrap_or(200);
    let solver = cfg.solver();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for i in 0..samples {
        let shape = &shapes[(i % shapes.len() as u64) as usize];
        let d = shape.order();
        let m = match &cfg.family {
            Some(m) => m.clone(),
            None => random_family(d, true, &mut rng),
        };
        let anchor = Point::new(
            &(0..d).map(|j| rng.gen_range(1..=shape.extent(j))).collect::<Vec<u32>>(),
        );
        let full_mask = if d >= 8 { 0xff } else { (1u8 << d) - 1 };
        for mask in 0..=full_mask {
            let b = Pattern::from_mask(d, mask)?;
            let materialized = Subspace::through(&anchor, b).to_subset(shape);
            let exact = covering_number_exact(&materialized, &m, &solver)?.value as u64;
            let closed = subspace_covering_closed_form(&b, &m, shape);
            checked += 1;
            if exact != closed {
                violations.push(Violation {
                    instance: format!("B={b:?} M={m:?} anchor={anchor:?} shape={shape:?}"),
                    relation: "exact = min over B' of prod n_j".into(),
                    observed: format!("{exact} vs {closed}"),
                });
            }
        }
    }
    Ok(report(SuiteName::ClosedForm, cfg.seed, started, checked, violations))
}

/// The product bound for the meet family, exhaustive on `[2]^2` and sampled
/// on `[3]^3`.
fn suite_meet_bound(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let solver = cfg.solver();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let random_count = cfg.budget.unwrap_or(500);
    let mut violations = Vec::new();
    let mut checked = 0u64;

    let small = LatticeShape::new(&[2, 2])?;
    let small_points: Vec<Point> = small.points().collect();
    let mut instances: Vec<LatticeSubset> = (0u32..16)
        .map(|mask| {
            LatticeSubset::new(
                small.clone(),
                small_points
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, p)| p.clone()),
            )
            .expect("points in range")
        })
        .collect();
    let big = LatticeShape::new(&[3, 3, 3])?;
    for _ in 0..random_count {
        instances.push(random_subset(&big, 0.5, &mut rng));
    }

    for a in &instances {
        let d = a.order();
        let pairs: Vec<(PatternFamily, PatternFamily)> = (0..20)
            .map(|_| (random_family(d, true, &mut rng), random_family(d, true, &mut rng)))
            .collect();
        for (m1, m2) in pairs {
            let rep = meet_bound_check(a, &m1, &m2, &solver)?;
            checked += 1;
            if !rep.bound_holds
                || !rep.product_cover.covers(a)
                || rep.product_cover.length() > (rep.k1 as usize) * (rep.k2 as usize)
            {
                violations.push(Violation {
                    instance: format!("A={a:?} M1={m1:?} M2={m2:?}"),
                    relation: "Mc_meet <= k1 * k2 with constructive cover".into(),
                    observed: format!("k={} k1={} k2={}", rep.k_meet, rep.k1, rep.k2),
                });
            }
        }
    }
    Ok(report(SuiteName::MeetBound, cfg.seed, started, checked, violations))
}

/// Minimal-decomposition counts on diagonals: exactly `l! |M|^l`, within
/// `(|M| l^d)^l`.
fn suite_decomposition_count(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let solver = cfg.solver();
    let lmax = cfg.budget.unwrap_or(3).clamp(1, 4) as u32;
    let mut violations = Vec::new();
    let mut checked = 0u64;
    for l in 1..=lmax {
        let n = l.max(2) + 1;
        let shape = LatticeShape::new(&[n, n])?;
        let a = LatticeSubset::new(shape, (1..=l).map(|i| Point::new(&[i, i])))?;
        let m = PatternFamily::slices(2)?;
        let e = enumerate_min_decompositions(&a, &m, 64, &solver)?;
        checked += 1;
        let factorial: u128 = (1..=l as u128).product();
        let expected = factorial * (m.len() as u128).pow(l);
        let ceiling = ((m.len() as u128) * (l as u128).pow(2)).pow(l);
        let tuples_cover = e.tuples.iter().all(|t| t.covers(&a));
        if e.length != l || e.count != expected || e.count > ceiling || !tuples_cover {
            violations.push(Violation {
                instance: format!("diagonal l={l} in [{n}]^2, slices"),
                relation: "count = l! |M|^l and count <= (|M| l^d)^l".into(),
                observed: format!("length={} count={} expected={expected}", e.length, e.count),
            });
        }
    }
    Ok(report(SuiteName::DecompositionCount, cfg.seed, started, checked, violations))
}

/// The greedy independent subset: independence, certified coverage by the
/// chosen unions, and the size bound `t >= ceil(Mc(A)/|M|)`.
fn suite_greedy_independence(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let shapes = cfg.shapes_or(&[&[5, 5], &[4, 4], &[5, 5, 5]]);
    let total = cfg.budget.unwrap_or(1000);
    let solver = cfg.solver();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    for i in 0..total {
        let shape = &shapes[(i % shapes.len() as u64) as usize];
        let d = shape.order();
        let density = if shape.volume() > 30 { 0.3 } else { 0.5 };
        let a = random_subset(shape, density, &mut rng);
        let m = match (&cfg.family, i % 3) {
            (Some(m), _) => m.clone(),
            (None, 0) => PatternFamily::slices(d)?,
            (None, 1) => PatternFamily::lines(d)?,
            (None, _) => PatternFamily::points(d)?,
        };
        let ind = independence_greedy(&a, &m);
        let mc = covering_number_exact(&a, &m, &solver)?.value as u64;
        let needed = mc.div_ceil(m.len() as u64);
        let covered = a
            .iter()
            .all(|p| ind.witness.iter().any(|u| share_subspace(p, u, &m)));
        if !ind.witness_is_independent(&m) || !covered || (ind.value as u64) < needed {
            violations.push(Violation {
                instance: format!("A={a:?} M={m:?}"),
                relation: "independent witness, certified cover, t >= ceil(Mc/|M|)".into(),
                observed: format!("t={} Mc={mc} |M|={}", ind.value, m.len()),
            });
        }
    }
    Ok(report(SuiteName::GreedyIndependence, cfg.seed, started, total, violations))
}

fn suite_linear_restriction(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let shapes = cfg.shapes_or(&[&[6, 6], &[4, 4, 4]]);
    let total = cfg.budget.unwrap_or(500);
    let solver = cfg.solver();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    for i in 0..total {
        let shape = &shapes[(i % shapes.len() as u64) as usize];
        let d = shape.order();
        let m = match &cfg.family {
            Some(m) => m.clone(),
            None => PatternFamily::slices(d)?,
        };
        let density = if shape.volume() > 40 { 0.3 } else { 0.4 };
        let mut a = random_subset(shape, density, &mut rng);
        let mut mc = covering_number_exact(&a, &m, &solver)?.value;
        for _ in 0..20 {
            if mc as usize >= m.len() {
                break;
            }
            a = random_subset(shape, density, &mut rng);
            mc = covering_number_exact(&a, &m, &solver)?.value;
        }
        let l = mc / m.len() as u32;
        let cert = restrict_linear(&a, &m, l, &solver)?;
        let sizes_ok = cert.restriction.axis_set_sizes().iter().all(|&s| s <= l as usize);
        if !cert.is_valid() || !sizes_ok || cert.verified_value < l {
            violations.push(Violation {
                instance: format!("A={a:?} M={m:?} l={l}"),
                relation: "|X_j| <= l and Mc(induced) >= l".into(),
                observed: format!(
                    "verified={} sizes={:?}",
                    cert.verified_value,
                    cert.restriction.axis_set_sizes()
                ),
            });
        }
    }
    Ok(report(SuiteName::LinearRestriction, cfg.seed, started, total, violations))
}

fn suite_offdiag_restriction(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let total = cfg.budget.unwrap_or(500);
    let solver = cfg.solver();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    let m = PatternFamily::slices(2)?;
    for i in 0..total {
        let n = 9 + (i % 4) as u32;
        let shape = LatticeShape::new(&[n, n])?;
        // permutation supports keep the off-diagonal covering number large
        let a = loop {
            let mut values: Vec<u32> = (1..=n).collect();
            values.shuffle(&mut rng);
            let cand = LatticeSubset::new(
                shape.clone(),
                values.iter().enumerate().map(|(i, &v)| Point::new(&[i as u32 + 1, v])),
            )?;
            let off = cand.off_diagonal_part();
            if covering_number_exact(&off, &m, &solver)?.value >= 8 {
                break cand;
            }
        };
        let off = a.off_diagonal_part();
        let mc0 = covering_number_exact(&off, &m, &solver)?.value;
        let l = mc0 / 8; // d^d |M| = 4 * 2
        let cert = restrict_offdiagonal(&a, &m, l, &solver)?;
        if !cert.is_valid()
            || !cert.restriction.axis_sets_pairwise_disjoint()
            || cert.verified_value < l
        {
            violations.push(Violation {
                instance: format!("A={a:?} l={l}"),
                relation: "pairwise-disjoint X_j with Mc(induced) >= l".into(),
                observed: format!("verified={}", cert.verified_value),
            });
        }
    }
    Ok(report(SuiteName::OffdiagRestriction, cfg.seed, started, total, violations))
}

fn suite_same_cover(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let shapes = cfg.shapes_or(&[&[4, 4], &[5, 5], &[3, 3, 3]]);
    let total = cfg.budget.unwrap_or(200);
    let solver = cfg.solver();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    for i in 0..total {
        let shape = &shapes[(i % shapes.len() as u64) as usize];
        let d = shape.order();
        let m = match &cfg.family {
            Some(m) => m.clone(),
            None => PatternFamily::slices(d)?,
        };
        let density = if shape.volume() > 20 { 0.3 } else { 0.4 };
        let mut a = random_subset(shape, density, &mut rng);
        if i % 4 == 3 {
            // splice a full axis line into a sparser background, so rich
            // traces (and hence actual tree descents) occur in the sample
            a = random_subset(shape, density / 2.0, &mut rng);
            let fixed: Vec<u32> =
                (1..d).map(|j| rng.gen_range(1..=shape.extent(j))).collect();
            let line = (1..=shape.extent(0)).map(|v| {
                let mut coords = vec![v];
                coords.extend(&fixed);
                Point::new(&coords)
            });
            a = a.union(&LatticeSubset::new(shape.clone(), line)?)?;
        }
        let out = restrict_same_cover(&a, &m, &solver)?;
        let l = out.certificate.claimed_lower_bound;
        let sizes_ok = out
            .certificate
            .restriction
            .axis_set_sizes()
            .iter()
            .all(|&s| (s as u128) <= out.axis_size_bound);
        if out.certificate.verified_value != l || !sizes_ok {
            violations.push(Violation {
                instance: format!("A={a:?} M={m:?}"),
                relation: "Mc(induced) = Mc(A) with |X_j| <= J(d,l,M)".into(),
                observed: format!("verified={} l={l}", out.certificate.verified_value),
            });
        }
    }
    Ok(report(SuiteName::SameCover, cfg.seed, started, total, violations))
}

fn suite_coloring(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let shapes = cfg.shapes_or(&[&[6, 6], &[8, 8], &[4, 4, 4], &[5, 5, 5]]);
    let total = cfg.budget.unwrap_or(500);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    for i in 0..total {
        let shape = &shapes[(i % shapes.len() as u64) as usize];
        let density = if shape.volume() > 40 { 0.3 } else { 0.5 };
        let a = random_subset(shape, density, &mut rng);
        let c1 = disjoint_coloring(&a, ColoringStrategy::Derandomized);
        let c2 = disjoint_coloring(&a, ColoringStrategy::Derandomized);
        let deterministic = c1.colors == c2.colors && c1.captured() == c2.captured();
        let disjoint = c1.restriction.axis_sets_pairwise_disjoint();
        if (c1.captured().len() as u64) < c1.guarantee || !disjoint || !deterministic {
            violations.push(Violation {
                instance: format!("A={a:?}"),
                relation: "captured >= ceil(|A \\ E| / d^d), disjoint, deterministic".into(),
                observed: format!("captured={} guarantee={}", c1.captured().len(), c1.guarantee),
            });
        }
    }
    Ok(report(SuiteName::Coloring, cfg.seed, started, total, violations))
}

fn suite_bounded_size(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let shapes = cfg.shapes_or(&[&[5, 5], &[4, 4, 4]]);
    let total = cfg.budget.unwrap_or(500);
    let solver = cfg.solver();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut violations = Vec::new();
    for i in 0..total {
        let shape = &shapes[(i % shapes.len() as u64) as usize];
        let d = shape.order();
        let m = match &cfg.family {
            Some(m) => m.clone(),
            None => random_family(d, true, &mut rng),
        };
        let density = if shape.volume() > 30 { 0.3 } else { 0.4 };
        let a = random_subset(shape, density, &mut rng);
        // the smallest budget that satisfies the hypothesis on this instance
        let l = max_substar_covering(&a, &m, &solver)?.max(1);
        let rep = bounded_size_check(&a, &m, l, &solver)?;
        if !rep.hypothesis_ok || rep.bound_holds != Some(true) {
            violations.push(Violation {
                instance: format!("A={a:?} M={m:?} l={l}"),
                relation: "|A| <= l^tau Mc(A)".into(),
                observed: format!(
                    "size={} bound={} hypothesis_ok={}",
                    rep.size, rep.bound, rep.hypothesis_ok
                ),
            });
        }
    }
    Ok(report(SuiteName::BoundedSize, cfg.seed, started, total, violations))
}

/// The rank-covering identity on antichain-supported tensors: exhaustive
/// over `2x2x2` tensors mod 2, then sampled tensors mod 3.
fn suite_sawin_tao(cfg: &SuiteConfig) -> Result<VerificationReport> {
    let started = Instant::now();
    let solver = cfg.solver();
    let oracle_cfg = OracleConfig::default();
    let mut violations = Vec::new();
    let mut qualifying = 0u64;

    let shape = LatticeShape::new(&[2, 2, 2])?;
    let slices = PatternFamily::slices(3)?;
    let f2 = crate::field::PrimeField::new(2)?;
    for raw in 0u32..256 {
        let entries: Vec<u8> = (0..8).map(|i| ((raw >> i) & 1) as u8).collect();
        let t = FieldTensor::new(shape.clone(), f2, entries)?;
        let support = t.support();
        if !support.is_antichain() {
            continue;
        }
        qualifying += 1;
        let sr = slice_rank_oracle(&t, &oracle_cfg)?.value;
        let cover = covering_number_exact(&support, &slices, &solver)?.value;
        if sr != cover {
            violations.push(Violation {
                instance: format!("F_2 tensor {raw:#010b}"),
                relation: "slice rank = slice covering number".into(),
                observed: format!("sr={sr} cover={cover}"),
            });
        }
    }

    let random_count = cfg.budget.unwrap_or(200);
    let f3 = crate::field::PrimeField::new(3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..random_count {
        let support = prune_to_antichain(&random_subset(&shape, 0.5, &mut rng));
        let mut t = FieldTensor::indicator(&support, f3);
        // random nonzero values on the support
        let entries: Vec<u8> = t
            .entries()
            .iter()
            .map(|&v| if v == 0 { 0 } else { rng.gen_range(1..3u8) })
            .collect();
        t = FieldTensor::new(shape.clone(), f3, entries)?;
        qualifying += 1;
        let sr = slice_rank_oracle(&t, &oracle_cfg)?.value;
        let cover = covering_number_exact(&t.support(), &slices, &solver)?.value;
        if sr != cover {
            violations.push(Violation {
                instance: format!("F_3 tensor entries={:?}", t.entries()),
                relation: "slice rank = slice covering number".into(),
                observed: format!("sr={sr} cover={cover}"),
            });
        }
    }
    Ok(report(SuiteName::SawinTao, cfg.seed, started, qualifying, violations))
}
