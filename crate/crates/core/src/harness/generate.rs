//! Seeded instance generators feeding the verification suites and searches.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::{LatticeShape, LatticeSubset, Point};

/// Exhaustive frames are capped at this many subsets.
pub const EXHAUSTIVE_FRAME_CAP: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub enum GeneratorKind {
    /// Every subset of the box; the frame `2^volume` must stay within the cap.
    Exhaustive,
    /// `count` subsets by independent inclusion with probability `density`.
    Random { density: f64, count: usize },
    /// The single subset `{(i, ..., i) : i in [length]}`.
    Diagonal { length: u32 },
    /// `count` antichains: sample, then keep each point only if incomparable
    /// with every lexicographically smaller kept point.
    Antichain { density: f64, count: usize },
    /// Explicit instances.
    Custom { subsets: Vec<LatticeSubset> },
}

#[derive(Clone, Debug)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub shape: LatticeShape,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn instances(&self) -> Result<Box<dyn Iterator<Item = LatticeSubset> + '_>> {
        match &self.kind {
            GeneratorKind::Exhaustive => {
                let volume = self.shape.volume();
                if volume >= 64 || (1u64 << volume) > EXHAUSTIVE_FRAME_CAP {
                    return Err(Error::BudgetExceeded {
                        context: "exhaustive generator frame",
                        budget: EXHAUSTIVE_FRAME_CAP,
                        actual: 2u128.saturating_pow(volume.min(127) as u32),
                    });
                }
                let points: Vec<Point> = self.shape.points().collect();
                let shape = self.shape.clone();
                Ok(Box::new((0u64..(1u64 << volume)).map(move |mask| {
                    LatticeSubset::new(
                        shape.clone(),
                        points
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| mask & (1 << i) != 0)
                            .map(|(_, p)| p.clone()),
                    )
                    .expect("box points in range")
                })))
            }
            GeneratorKind::Random { density, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let density = *density;
                let shape = self.shape.clone();
                Ok(Box::new((0..*count).map(move |_| random_subset(&shape, density, &mut rng))))
            }
            GeneratorKind::Diagonal { length } => {
                let n_min = (0..self.shape.order())
                    .map(|j| self.shape.extent(j))
                    .min()
                    .expect("order >= 1");
                let len = (*length).min(n_min);
                let d = self.shape.order();
                let a = LatticeSubset::new(
                    self.shape.clone(),
                    (1..=len).map(|i| Point::new(&vec![i; d])),
                )?;
                Ok(Box::new(std::iter::once(a)))
            }
            GeneratorKind::Antichain { density, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                let density = *density;
                let shape = self.shape.clone();
                Ok(Box::new((0..*count).map(move |_| {
                    prune_to_antichain(&random_subset(&shape, density, &mut rng))
                })))
            }
            GeneratorKind::Custom { subsets } => Ok(Box::new(subsets.iter().cloned())),
        }
    }
}

pub fn random_subset(shape: &LatticeShape, density: f64, rng: &mut ChaCha8Rng) -> LatticeSubset {
    LatticeSubset::new(
        shape.clone(),
        shape.points().filter(|_| rng.gen_bool(density.clamp(0.0, 1.0))),
    )
    .expect("box points in range")
}

/// Keeps a point iff it is incomparable with every kept point before it in
/// lexicographic order, so comparable pairs resolve to the smaller point.
pub fn prune_to_antichain(a: &LatticeSubset) -> LatticeSubset {
    let mut kept: Vec<Point> = Vec::new();
    for p in a.iter() {
        let comparable =
            kept.iter().any(|q| q.dominated_by(p) || p.dominated_by(q));
        if !comparable {
            kept.push(p.clone());
        }
    }
    LatticeSubset::new(a.shape().clone(), kept).expect("kept points in range")
}

/// A seeded pair of subsets in diagonal sum: each axis universe is split
/// into two disjoint halves and one subset is sampled inside each product.
pub fn random_diagonal_sum_pair(
    shape: &LatticeShape,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> (LatticeSubset, LatticeSubset) {
    let d = shape.order();
    let mut sides: Vec<(Vec<u32>, Vec<u32>)> = Vec::with_capacity(d);
    for j in 0..d {
        let mut one = Vec::new();
        let mut two = Vec::new();
        for v in 1..=shape.extent(j) {
            if rng.gen_bool(0.5) {
                one.push(v);
            } else {
                two.push(v);
            }
        }
        sides.push((one, two));
    }
    let sample = |rng: &mut ChaCha8Rng, pick: &dyn Fn(usize) -> Vec<u32>| {
        let mut pts = Vec::new();
        let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == d {
                pts.push(Point::new(&prefix));
                continue;
            }
            for v in pick(prefix.len()) {
                let mut next = prefix.clone();
                next.push(v);
                stack.push(next);
            }
        }
        pts.sort();
        let chosen: Vec<Point> = pts.into_iter().filter(|_| rng.gen_bool(density)).collect();
        LatticeSubset::new(shape.clone(), chosen).expect("points in range")
    };
    let a1 = sample(rng, &|j| sides[j].0.clone());
    let a2 = sample(rng, &|j| sides[j].1.clone());
    (a1, a2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::in_diagonal_sum;

    fn shape(dims: &[u32]) -> LatticeShape {
        LatticeShape::new(dims).unwrap()
    }

    #[test]
    fn exhaustive_enumerates_all_subsets() {
        let spec = GeneratorSpec {
            kind: GeneratorKind::Exhaustive,
            shape: shape(&[2, 2]),
            seed: 0,
        };
        let all: Vec<LatticeSubset> = spec.instances().unwrap().collect();
        assert_eq!(all.len(), 16);
        assert!(all[0].is_empty());
        assert_eq!(all.last().unwrap().len(), 4);
    }

    #[test]
    fn exhaustive_respects_frame_cap() {
        let spec = GeneratorSpec {
            kind: GeneratorKind::Exhaustive,
            shape: shape(&[5, 5]),
            seed: 0,
        };
        assert!(matches!(spec.instances(), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn random_generator_is_seed_reproducible() {
        let mk = |seed| GeneratorSpec {
            kind: GeneratorKind::Random { density: 0.4, count: 5 },
            shape: shape(&[3, 3]),
            seed,
        };
        let a: Vec<_> = mk(7).instances().unwrap().collect();
        let b: Vec<_> = mk(7).instances().unwrap().collect();
        let c: Vec<_> = mk(8).instances().unwrap().collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn diagonal_generator() {
        let spec = GeneratorSpec {
            kind: GeneratorKind::Diagonal { length: 3 },
            shape: shape(&[4, 4]),
            seed: 0,
        };
        let only: Vec<_> = spec.instances().unwrap().collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].len(), 3);
        assert!(only[0].contains(&Point::new(&[2, 2])));
    }

    #[test]
    fn antichain_generator_yields_antichains() {
        let spec = GeneratorSpec {
            kind: GeneratorKind::Antichain { density: 0.5, count: 20 },
            shape: shape(&[3, 3, 3]),
            seed: 11,
        };
        for a in spec.instances().unwrap() {
            assert!(a.is_antichain());
        }
    }

    #[test]
    fn diagonal_sum_pairs_are_in_diagonal_sum() {
        let s = shape(&[4, 4]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let (a1, a2) = random_diagonal_sum_pair(&s, 0.5, &mut rng);
            assert!(in_diagonal_sum(&a1, &a2).unwrap());
        }
    }
}
