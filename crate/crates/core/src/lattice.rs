//! Ambient-box geometry: points of `[n_1] x ... x [n_d]`, finite point sets,
//! restriction to coordinate products, the repeated-coordinate set, antichains
//! and diagonal-sum detection.
//!
//! Coordinates are 1-based throughout, matching the usual `[n]` convention.
//! Axis indices are 0-based in code and converted at the file-format boundary.

use std::collections::BTreeSet;
use std::fmt;

use arrayvec::ArrayVec;

use crate::error::{Error, Result};

/// Largest supported order (number of axes).
pub const MAX_ORDER: usize = 8;
/// Largest supported box volume. Exhaustive oracles underpin the test suite,
/// so unbounded boxes cannot be honored.
pub const MAX_VOLUME: u64 = 1 << 24;

/// The ambient box `[n_1] x ... x [n_d]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeShape {
    dims: ArrayVec<u32, MAX_ORDER>,
}

impl LatticeShape {
    pub fn new(dims: &[u32]) -> Result<Self> {
        if dims.is_empty() || dims.len() > MAX_ORDER {
            return Err(Error::BadOrder(dims.len()));
        }
        let mut volume: u128 = 1;
        for (axis, &n) in dims.iter().enumerate() {
            if n == 0 {
                return Err(Error::BadExtent { axis, extent: n });
            }
            volume *= n as u128;
        }
        if volume > MAX_VOLUME as u128 {
            return Err(Error::VolumeTooLarge { volume, max: MAX_VOLUME });
        }
        Ok(LatticeShape { dims: dims.iter().copied().collect() })
    }

    /// The order `d`.
    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    /// Extent `n_j` of the given 0-based axis.
    pub fn extent(&self, axis: usize) -> u32 {
        self.dims[axis]
    }

    pub fn volume(&self) -> u64 {
        self.dims.iter().map(|&n| n as u64).product()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.coords.len() == self.order()
            && p.coords.iter().zip(self.dims.iter()).all(|(&c, &n)| 1 <= c && c <= n)
    }

    fn check_point(&self, p: &Point) -> Result<()> {
        if p.coords.len() != self.order() {
            return Err(Error::PointOrderMismatch { expected: self.order(), got: p.coords.len() });
        }
        for (axis, (&c, &n)) in p.coords.iter().zip(self.dims.iter()).enumerate() {
            if c < 1 || c > n {
                return Err(Error::CoordOutOfRange { axis, value: c, bound: n });
            }
        }
        Ok(())
    }

    /// All points of the box in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let d = self.order();
        let mut cur: Option<ArrayVec<u32, MAX_ORDER>> =
            Some(std::iter::repeat_n(1, d).collect());
        std::iter::from_fn(move || {
            let coords = cur.clone()?;
            // advance odometer, last axis fastest
            let mut next = coords.clone();
            let mut axis = d;
            loop {
                if axis == 0 {
                    cur = None;
                    break;
                }
                axis -= 1;
                if next[axis] < self.dims[axis] {
                    next[axis] += 1;
                    cur = Some(next);
                    break;
                }
                next[axis] = 1;
            }
            Some(Point { coords })
        })
    }
}

impl fmt::Debug for LatticeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeShape{:?}", self.dims.as_slice())
    }
}

/// A point of the ambient box, 1-based coordinates.
///
/// `Ord` is lexicographic, which is the iteration and output order everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    coords: ArrayVec<u32, MAX_ORDER>,
}

impl Point {
    pub fn new(coords: &[u32]) -> Self {
        assert!(coords.len() <= MAX_ORDER, "point order exceeds MAX_ORDER");
        Point { coords: coords.iter().copied().collect() }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn coord(&self, axis: usize) -> u32 {
        self.coords[axis]
    }

    pub fn order(&self) -> usize {
        self.coords.len()
    }

    /// True iff some coordinate value occurs twice, i.e. the point lies in `E`.
    pub fn has_repeated_coords(&self) -> bool {
        for i in 0..self.coords.len() {
            for j in (i + 1)..self.coords.len() {
                if self.coords[i] == self.coords[j] {
                    return true;
                }
            }
        }
        false
    }

    /// Componentwise `<=`.
    pub fn dominated_by(&self, other: &Point) -> bool {
        self.coords.len() == other.coords.len()
            && self.coords.iter().zip(other.coords.iter()).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A finite subset of an ambient box. Points are stored deduplicated in
/// lexicographic order; every set-valued result inherits that order.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeSubset {
    shape: LatticeShape,
    points: Vec<Point>,
}

impl LatticeSubset {
    pub fn new(shape: LatticeShape, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let mut pts: Vec<Point> = Vec::new();
        for p in points {
            shape.check_point(&p)?;
            pts.push(p);
        }
        pts.sort();
        pts.dedup();
        Ok(LatticeSubset { shape, points: pts })
    }

    pub fn empty(shape: LatticeShape) -> Self {
        LatticeSubset { shape, points: Vec::new() }
    }

    /// The full box as a subset.
    pub fn full_box(shape: LatticeShape) -> Self {
        let points = shape.points().collect();
        LatticeSubset { shape, points }
    }

    pub fn shape(&self) -> &LatticeShape {
        &self.shape
    }

    pub fn order(&self) -> usize {
        self.shape.order()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    fn check_same_shape(&self, other: &LatticeSubset) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(
                self.shape.dims().to_vec(),
                other.shape.dims().to_vec(),
            ));
        }
        Ok(())
    }

    pub fn union(&self, other: &LatticeSubset) -> Result<LatticeSubset> {
        self.check_same_shape(other)?;
        let mut pts = self.points.clone();
        pts.extend(other.points.iter().cloned());
        pts.sort();
        pts.dedup();
        Ok(LatticeSubset { shape: self.shape.clone(), points: pts })
    }

    pub fn difference(&self, other: &LatticeSubset) -> Result<LatticeSubset> {
        self.check_same_shape(other)?;
        let pts = self.points.iter().filter(|p| !other.contains(p)).cloned().collect();
        Ok(LatticeSubset { shape: self.shape.clone(), points: pts })
    }

    /// Remove the given points (all must belong to the same shape).
    pub fn without(&self, remove: &[Point]) -> LatticeSubset {
        let pts = self.points.iter().filter(|p| !remove.contains(p)).cloned().collect();
        LatticeSubset { shape: self.shape.clone(), points: pts }
    }

    pub fn is_subset_of(&self, other: &LatticeSubset) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    /// Values taken on the given axis, sorted.
    pub fn axis_projection(&self, axis: usize) -> BTreeSet<u32> {
        self.points.iter().map(|p| p.coord(axis)).collect()
    }

    /// The part of the set with all coordinates pairwise distinct, `A \ E`.
    pub fn off_diagonal_part(&self) -> LatticeSubset {
        let pts = self.points.iter().filter(|p| !p.has_repeated_coords()).cloned().collect();
        LatticeSubset { shape: self.shape.clone(), points: pts }
    }

    /// Restrict to the product of the given per-axis coordinate sets.
    pub fn restrict(&self, axis_sets: &[BTreeSet<u32>]) -> Result<Restriction> {
        if axis_sets.len() != self.order() {
            return Err(Error::PointOrderMismatch { expected: self.order(), got: axis_sets.len() });
        }
        for (axis, set) in axis_sets.iter().enumerate() {
            let bound = self.shape.extent(axis);
            for &v in set {
                if v < 1 || v > bound {
                    return Err(Error::CoordOutOfRange { axis, value: v, bound });
                }
            }
        }
        let pts: Vec<Point> = self
            .points
            .iter()
            .filter(|p| axis_sets.iter().enumerate().all(|(j, set)| set.contains(&p.coord(j))))
            .cloned()
            .collect();
        Ok(Restriction {
            axis_sets: axis_sets.to_vec(),
            induced: LatticeSubset { shape: self.shape.clone(), points: pts },
        })
    }

    /// True iff no two distinct points are componentwise comparable.
    pub fn is_antichain(&self) -> bool {
        self.find_comparable_pair().is_none()
    }

    /// A comparable pair `(p, q)` with `p <= q` componentwise, if one exists.
    pub fn find_comparable_pair(&self) -> Option<(&Point, &Point)> {
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                if self.points[i].dominated_by(&self.points[j]) {
                    return Some((&self.points[i], &self.points[j]));
                }
                if self.points[j].dominated_by(&self.points[i]) {
                    return Some((&self.points[j], &self.points[i]));
                }
            }
        }
        None
    }
}

impl fmt::Debug for LatticeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p:?}")?;
        }
        write!(f, "}}")
    }
}

/// A restriction `A(X_1 x ... x X_d)` together with the axis sets that induced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Restriction {
    axis_sets: Vec<BTreeSet<u32>>,
    induced: LatticeSubset,
}

impl Restriction {
    pub fn axis_sets(&self) -> &[BTreeSet<u32>] {
        &self.axis_sets
    }

    pub fn induced(&self) -> &LatticeSubset {
        &self.induced
    }

    pub fn axis_set_sizes(&self) -> Vec<usize> {
        self.axis_sets.iter().map(|s| s.len()).collect()
    }

    pub fn axis_sets_pairwise_disjoint(&self) -> bool {
        for i in 0..self.axis_sets.len() {
            for j in (i + 1)..self.axis_sets.len() {
                if self.axis_sets[i].intersection(&self.axis_sets[j]).next().is_some() {
                    return false;
                }
            }
        }
        true
    }
}

/// The set `E` of points with at least two equal coordinates, materialized.
///
/// For order 1 this is empty. Runs in `O(volume)`.
pub fn repeated_coordinate_set(shape: &LatticeShape) -> LatticeSubset {
    let points = shape.points().filter(|p| p.has_repeated_coords()).collect();
    LatticeSubset { shape: shape.clone(), points }
}

/// Diagonal-sum test: true iff for every axis the two projections are disjoint.
///
/// Projections are the smallest enclosing product sets, so this decides the
/// existential enclosure condition exactly.
pub fn in_diagonal_sum(a1: &LatticeSubset, a2: &LatticeSubset) -> Result<bool> {
    a1.check_same_shape(a2)?;
    for axis in 0..a1.order() {
        let p1 = a1.axis_projection(axis);
        let p2 = a2.axis_projection(axis);
        if p1.intersection(&p2).next().is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience constructor used throughout the test suites.
pub fn subset_of(shape: &LatticeShape, coords: &[&[u32]]) -> LatticeSubset {
    LatticeSubset::new(shape.clone(), coords.iter().map(|c| Point::new(c)))
        .expect("points in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(dims: &[u32]) -> LatticeShape {
        LatticeShape::new(dims).unwrap()
    }

    #[test]
    fn shape_rejects_bad_inputs() {
        assert!(matches!(LatticeShape::new(&[]), Err(Error::BadOrder(0))));
        assert!(matches!(LatticeShape::new(&[1; 9]), Err(Error::BadOrder(9))));
        assert!(matches!(LatticeShape::new(&[2, 0]), Err(Error::BadExtent { axis: 1, .. })));
        assert!(matches!(
            LatticeShape::new(&[4096, 4096, 4096]),
            Err(Error::VolumeTooLarge { .. })
        ));
    }

    #[test]
    fn subset_sorts_and_dedups() {
        let s = shape(&[3, 3]);
        let a = LatticeSubset::new(
            s,
            vec![Point::new(&[2, 1]), Point::new(&[1, 2]), Point::new(&[2, 1])],
        )
        .unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.points()[0], Point::new(&[1, 2]));
    }

    #[test]
    fn subset_rejects_out_of_range() {
        let s = shape(&[2, 2]);
        let r = LatticeSubset::new(s, vec![Point::new(&[1, 3])]);
        assert!(matches!(r, Err(Error::CoordOutOfRange { axis: 1, value: 3, bound: 2 })));
    }

    #[test]
    fn restrict_membership() {
        let s = shape(&[2, 2]);
        let a = subset_of(&s, &[&[1, 1], &[2, 2]]);
        let r = a
            .restrict(&[BTreeSet::from([1]), BTreeSet::from([1, 2])])
            .unwrap();
        assert_eq!(r.induced(), &subset_of(&s, &[&[1, 1]]));
    }

    #[test]
    fn restrict_identity_when_full() {
        let s = shape(&[3, 2]);
        let a = subset_of(&s, &[&[1, 2], &[3, 1], &[2, 2]]);
        let full: Vec<BTreeSet<u32>> =
            vec![BTreeSet::from([1, 2, 3]), BTreeSet::from([1, 2])];
        assert_eq!(a.restrict(&full).unwrap().induced(), &a);
    }

    #[test]
    fn restrict_order_three() {
        let s = shape(&[2, 2, 2]);
        let a = subset_of(&s, &[&[1, 2, 2], &[2, 1, 2]]);
        let r = a
            .restrict(&[BTreeSet::from([1]), BTreeSet::from([2]), BTreeSet::from([2])])
            .unwrap();
        assert_eq!(r.induced(), &subset_of(&s, &[&[1, 2, 2]]));
    }

    #[test]
    fn restrict_rejects_out_of_range_axis_value() {
        let s = shape(&[2, 2]);
        let a = subset_of(&s, &[&[1, 1]]);
        let r = a.restrict(&[BTreeSet::from([3]), BTreeSet::from([1])]);
        assert!(matches!(r, Err(Error::CoordOutOfRange { axis: 0, value: 3, bound: 2 })));
    }

    #[test]
    fn repeated_coordinates_order_two() {
        let s = shape(&[2, 2]);
        let e = repeated_coordinate_set(&s);
        assert_eq!(e, subset_of(&s, &[&[1, 1], &[2, 2]]));
    }

    #[test]
    fn repeated_coordinates_single_axis_is_empty() {
        let s = shape(&[2]);
        assert!(repeated_coordinate_set(&s).is_empty());
    }

    #[test]
    fn repeated_coordinates_pigeonhole() {
        // d = 3 with only two values available: every point repeats a coordinate.
        let s = shape(&[2, 2, 2]);
        let e = repeated_coordinate_set(&s);
        assert_eq!(e.len(), 8);
        // independent check by direct enumeration of distinct-value counts
        for p in s.points() {
            let distinct: BTreeSet<u32> = p.coords().iter().copied().collect();
            assert_eq!(distinct.len() < 3, e.contains(&p));
        }
    }

    #[test]
    fn antichain_detection() {
        let s = shape(&[2, 2]);
        assert!(subset_of(&s, &[&[1, 2], &[2, 1]]).is_antichain());
        let s3 = shape(&[2, 2, 2]);
        assert!(!subset_of(&s3, &[&[1, 1, 1], &[2, 2, 2]]).is_antichain());
        assert!(subset_of(&s3, &[&[1, 2, 2], &[2, 1, 2], &[2, 2, 1]]).is_antichain());
    }

    #[test]
    fn comparable_pair_is_reported_in_order() {
        let s = shape(&[3, 3]);
        let a = subset_of(&s, &[&[2, 3], &[1, 2]]);
        let (p, q) = a.find_comparable_pair().unwrap();
        assert!(p.dominated_by(q));
    }

    #[test]
    fn diagonal_sum_by_projections() {
        let s = shape(&[2, 2]);
        let a1 = subset_of(&s, &[&[1, 1]]);
        let a2 = subset_of(&s, &[&[2, 2]]);
        assert!(in_diagonal_sum(&a1, &a2).unwrap());
        let a3 = subset_of(&s, &[&[1, 2]]);
        assert!(!in_diagonal_sum(&a1, &a3).unwrap());

        let s3 = shape(&[3, 3]);
        let b1 = subset_of(&s3, &[&[1, 2], &[2, 1]]);
        let b2 = subset_of(&s3, &[&[3, 3]]);
        assert!(in_diagonal_sum(&b1, &b2).unwrap());
    }

    #[test]
    fn diagonal_sum_shape_mismatch_errors() {
        let a = subset_of(&shape(&[2, 2]), &[&[1, 1]]);
        let b = subset_of(&shape(&[3, 3]), &[&[1, 1]]);
        assert!(in_diagonal_sum(&a, &b).is_err());
    }

    #[test]
    fn box_points_are_lexicographic() {
        let s = shape(&[2, 3]);
        let pts: Vec<Point> = s.points().collect();
        assert_eq!(pts.len(), 6);
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
        assert_eq!(pts[0], Point::new(&[1, 1]));
        assert_eq!(pts[5], Point::new(&[2, 3]));
    }
}
