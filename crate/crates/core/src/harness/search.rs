//! Empirical searches: the smallest observed ratio between the independence
//! and covering numbers, and the hunt for sets whose every small restriction
//! loses covering number.

use num_integer::Integer;
use serde::Serialize;

use crate::error::Result;
use crate::harness::generate::GeneratorSpec;
use crate::independence::independence_exact;
use crate::lattice::LatticeSubset;
use crate::pattern::PatternFamily;
use crate::restrict::optimal_restriction_search;
use crate::solver::{covering_number_exact, SolverConfig};

/// The empirical lower envelope for `I_M(A) >= c Mc(A)`: the minimum of the
/// exact ratio over the frame, as a reduced rational.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantSearchOutcome {
    pub min_num: u64,
    pub min_den: u64,
    pub witness_points: Vec<Vec<u32>>,
    pub independence: u32,
    pub covering: u32,
    pub instances: u64,
    /// Whether the frame was exhaustive; otherwise the envelope is only an
    /// upper bound on the optimal constant.
    pub exhaustive: bool,
}

pub fn search_constant(
    family: &PatternFamily,
    frame: &GeneratorSpec,
    cfg: &SolverConfig,
) -> Result<Option<ConstantSearchOutcome>> {
    let exhaustive = matches!(frame.kind, crate::harness::generate::GeneratorKind::Exhaustive);
    let mut best: Option<(u64, u64, LatticeSubset, u32, u32)> = None;
    let mut instances = 0u64;
    for a in frame.instances()? {
        let mc = covering_number_exact(&a, family, cfg)?.value;
        if mc == 0 {
            continue;
        }
        instances += 1;
        let ind = independence_exact(&a, family, cfg)?.value;
        let (num, den) = (ind as u64, mc as u64);
        let better = match &best {
            None => true,
            // compare num/den < bn/bd by cross multiplication
            Some((bn, bd, ..)) => (num as u128) * (*bd as u128) < (*bn as u128) * (den as u128),
        };
        if better {
            best = Some((num, den, a, ind, mc));
        }
    }
    Ok(best.map(|(num, den, witness, independence, covering)| {
        let g = num.gcd(&den).max(1);
        ConstantSearchOutcome {
            min_num: num / g,
            min_den: den / g,
            witness_points: witness.iter().map(|p| p.coords().to_vec()).collect(),
            independence,
            covering,
            instances,
            exhaustive,
        }
    }))
}

#[derive(Clone, Copy, Debug)]
pub struct HuntTarget {
    /// Required covering number of the full set.
    pub full_value: u32,
    /// Per-axis size cap for the restrictions examined.
    pub cap_size: usize,
    /// The restricted covering number must not exceed this.
    pub restricted_cap: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct HuntOutcome {
    /// Point lists of the qualifying sets.
    pub findings: Vec<Vec<Vec<u32>>>,
    pub checked: u64,
    /// Instances that met the full-value requirement.
    pub qualifying: u64,
}

/// Searches the frame for sets with `Mc(A) >= full_value` all of whose
/// restrictions to products of `cap_size`-element axis sets have covering
/// number at most `restricted_cap`. Existence is not guaranteed; an empty
/// findings list is an honest outcome.
pub fn counterexample_hunt(
    family: &PatternFamily,
    frame: &GeneratorSpec,
    target: HuntTarget,
    restriction_budget: u64,
    cfg: &SolverConfig,
) -> Result<HuntOutcome> {
    let mut findings = Vec::new();
    let mut checked = 0u64;
    let mut qualifying = 0u64;
    let caps = vec![target.cap_size; frame.shape.order()];
    for a in frame.instances()? {
        checked += 1;
        let mc = covering_number_exact(&a, family, cfg)?.value;
        if mc < target.full_value {
            continue;
        }
        qualifying += 1;
        // by restriction monotonicity the maximal-size restrictions dominate
        let best = optimal_restriction_search(&a, family, &caps, restriction_budget, cfg)?;
        if best.value <= target.restricted_cap {
            findings.push(a.iter().map(|p| p.coords().to_vec()).collect());
        }
    }
    Ok(HuntOutcome { findings, checked, qualifying })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generate::GeneratorKind;
    use crate::lattice::LatticeShape;

    fn cfg() -> SolverConfig {
        SolverConfig::with_cap(128)
    }

    #[test]
    fn exhaustive_square_ratio() {
        // d = 2 slices: both I and Mc reduce to maximum matchings, so the
        // ratio is identically one over the whole frame
        let shape = LatticeShape::new(&[2, 2]).unwrap();
        let frame = GeneratorSpec { kind: GeneratorKind::Exhaustive, shape, seed: 0 };
        let m = PatternFamily::slices(2).unwrap();
        let out = search_constant(&m, &frame, &cfg()).unwrap().unwrap();
        assert_eq!((out.min_num, out.min_den), (1, 1));
        assert_eq!(out.instances, 15);
        assert!(out.exhaustive);
    }

    #[test]
    fn diagonal_ratio_is_one() {
        let shape = LatticeShape::new(&[4, 4, 4]).unwrap();
        let frame =
            GeneratorSpec { kind: GeneratorKind::Diagonal { length: 4 }, shape, seed: 0 };
        let m = PatternFamily::slices(3).unwrap();
        let out = search_constant(&m, &frame, &cfg()).unwrap().unwrap();
        assert_eq!((out.min_num, out.min_den), (1, 1));
        assert_eq!((out.independence, out.covering), (4, 4));
    }

    #[test]
    fn full_family_ratio_is_one() {
        let shape = LatticeShape::new(&[2, 2]).unwrap();
        let frame = GeneratorSpec { kind: GeneratorKind::Exhaustive, shape, seed: 0 };
        let m = PatternFamily::full(2).unwrap();
        let out = search_constant(&m, &frame, &cfg()).unwrap().unwrap();
        assert_eq!((out.min_num, out.min_den), (1, 1));
    }

    #[test]
    fn empty_frame_finds_nothing() {
        let shape = LatticeShape::new(&[2, 2]).unwrap();
        let frame = GeneratorSpec {
            kind: GeneratorKind::Custom { subsets: vec![] },
            shape,
            seed: 0,
        };
        let m = PatternFamily::slices(2).unwrap();
        assert!(search_constant(&m, &frame, &cfg()).unwrap().is_none());
        let hunt = counterexample_hunt(
            &m,
            &frame,
            HuntTarget { full_value: 1, cap_size: 1, restricted_cap: 0 },
            1_000,
            &cfg(),
        )
        .unwrap();
        assert!(hunt.findings.is_empty());
        assert_eq!(hunt.checked, 0);
    }

    #[test]
    fn trivial_hunt_succeeds_on_any_rich_set() {
        // value 2, caps 1, restricted cap 1: single points always cover with 1
        let shape = LatticeShape::new(&[3, 3]).unwrap();
        let frame = GeneratorSpec {
            kind: GeneratorKind::Random { density: 0.6, count: 10 },
            shape,
            seed: 5,
        };
        let m = PatternFamily::slices(2).unwrap();
        let target = HuntTarget { full_value: 2, cap_size: 1, restricted_cap: 1 };
        let out = counterexample_hunt(&m, &frame, target, 10_000, &cfg()).unwrap();
        assert_eq!(out.findings.len() as u64, out.qualifying);
        assert!(out.qualifying > 0);
    }

    #[test]
    fn order_three_target_hunt_runs() {
        // the known construction has covering number 4 with all 4x4x4
        // restrictions at 3; finding one by random search is not expected,
        // only that the pipeline handles the target honestly
        let shape = LatticeShape::new(&[5, 5, 5]).unwrap();
        let frame = GeneratorSpec {
            kind: GeneratorKind::Random { density: 0.35, count: 4 },
            shape,
            seed: 9,
        };
        let m = PatternFamily::slices(3).unwrap();
        let target = HuntTarget { full_value: 4, cap_size: 4, restricted_cap: 3 };
        let out = counterexample_hunt(&m, &frame, target, 1 << 20, &cfg()).unwrap();
        assert_eq!(out.checked, 4);
        assert!(out.findings.len() as u64 <= out.qualifying);
    }

    #[test]
    fn impossible_hunt_reports_empty() {
        // a 2x2 sub-box of the full [3]^2 box always keeps covering number 2
        let shape = LatticeShape::new(&[3, 3]).unwrap();
        let frame = GeneratorSpec {
            kind: GeneratorKind::Custom {
                subsets: vec![crate::lattice::LatticeSubset::full_box(
                    LatticeShape::new(&[3, 3]).unwrap(),
                )],
            },
            shape,
            seed: 0,
        };
        let m = PatternFamily::slices(2).unwrap();
        let target = HuntTarget { full_value: 3, cap_size: 2, restricted_cap: 1 };
        let out = counterexample_hunt(&m, &frame, target, 10_000, &cfg()).unwrap();
        assert_eq!(out.qualifying, 1);
        assert!(out.findings.is_empty());
    }
}
