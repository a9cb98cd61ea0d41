//! Concrete axis-aligned subspaces: a pattern of free axes plus fixed
//! coordinates on the complementary axes. For every point `u` and pattern `B`
//! there is exactly one `B`-subspace through `u`, which is what makes
//! candidate generation finite.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Result;
use crate::lattice::{LatticeShape, LatticeSubset, Point};
use crate::pattern::{Pattern, PatternFamily};

/// A `B`-subspace: the set of points agreeing with `fixed` on every axis
/// outside `B`. Equality is structural (pattern plus fixed coordinates).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    pattern: Pattern,
    /// `(axis, value)` pairs for exactly the axes of `B^c`, ascending by axis.
    fixed: Vec<(usize, u32)>,
}

impl Subspace {
    /// The unique `B`-subspace through `u`.
    pub fn through(u: &Point, pattern: Pattern) -> Subspace {
        let fixed = pattern.complement_axes().map(|j| (j, u.coord(j))).collect();
        Subspace { pattern, fixed }
    }

    /// Assembles a subspace from a pattern and fixed coordinates, which must
    /// cover exactly the complementary axes.
    pub fn from_parts(pattern: Pattern, mut fixed: Vec<(usize, u32)>) -> Subspace {
        fixed.sort_unstable();
        let expected: Vec<usize> = pattern.complement_axes().collect();
        assert_eq!(
            fixed.iter().map(|&(j, _)| j).collect::<Vec<_>>(),
            expected,
            "fixed coordinates must cover exactly the complement of the pattern"
        );
        Subspace { pattern, fixed }
    }

    pub fn pattern(&self) -> &Pattern {
        &self.pattern
    }

    pub fn fixed_coords(&self) -> &[(usize, u32)] {
        &self.fixed
    }

    pub fn order(&self) -> u32 {
        self.pattern.order()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.fixed.iter().all(|&(j, v)| p.coord(j) == v)
    }

    /// Whether every point of this subspace lies in `other`. Holds iff the
    /// free axes grow and the remaining fixed coordinates agree.
    pub fn is_contained_in(&self, other: &Subspace) -> bool {
        self.pattern.is_subset_of(other.pattern())
            && other.fixed.iter().all(|fc| self.fixed.contains(fc))
    }

    /// Number of points of the subspace inside the given box.
    pub fn point_count(&self, shape: &LatticeShape) -> u64 {
        self.pattern.axes().map(|j| shape.extent(j) as u64).product()
    }

    /// All points of the subspace inside the given box, lexicographic.
    pub fn points(&self, shape: &LatticeShape) -> Vec<Point> {
        let d = shape.order();
        let free: Vec<usize> = self.pattern.axes().collect();
        let mut coords = vec![0u32; d];
        for &(j, v) in &self.fixed {
            coords[j] = v;
        }
        let mut out = Vec::with_capacity(self.point_count(shape) as usize);
        fill_free(&free, 0, &mut coords, shape, &mut out);
        out.sort();
        out
    }

    /// Materialize as a lattice subset.
    pub fn to_subset(&self, shape: &LatticeShape) -> LatticeSubset {
        LatticeSubset::new(shape.clone(), self.points(shape)).expect("subspace points in range")
    }

    /// The points of `a` lying in this subspace.
    pub fn trace(&self, a: &LatticeSubset) -> LatticeSubset {
        LatticeSubset::new(
            a.shape().clone(),
            a.iter().filter(|p| self.contains(p)).cloned(),
        )
        .expect("trace points in range")
    }

    /// Intersection of two subspaces, if non-empty. The result is a
    /// `B1 /\ B2`-subspace fixing the union of the fixed coordinates; it is
    /// empty exactly when the common fixed axes disagree.
    pub fn intersect(&self, other: &Subspace) -> Result<Option<Subspace>> {
        let pattern = self.pattern.intersection(other.pattern())?;
        let mut fixed: Vec<(usize, u32)> = self.fixed.clone();
        for &(j, v) in &other.fixed {
            match fixed.iter().find(|&&(j2, _)| j2 == j) {
                Some(&(_, v2)) if v2 != v => return Ok(None),
                Some(_) => {}
                None => fixed.push((j, v)),
            }
        }
        fixed.sort_unstable();
        Ok(Some(Subspace { pattern, fixed }))
    }
}

fn fill_free(
    free: &[usize],
    idx: usize,
    coords: &mut Vec<u32>,
    shape: &LatticeShape,
    out: &mut Vec<Point>,
) {
    if idx == free.len() {
        out.push(Point::new(coords));
        return;
    }
    let axis = free[idx];
    for v in 1..=shape.extent(axis) {
        coords[axis] = v;
        fill_free(free, idx + 1, coords, shape, out);
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{:?}", self.pattern)?;
        write!(f, "[")?;
        for (i, (j, v)) in self.fixed.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}={}", j + 1, v)?;
        }
        write!(f, "]")
    }
}

/// The `M`-subspaces through `u`: exactly one per pattern, in family order.
pub fn subspaces_through(u: &Point, family: &PatternFamily) -> Vec<Subspace> {
    family.patterns().iter().map(|&b| Subspace::through(u, b)).collect()
}

/// `M(u)`: the union of all `M`-subspaces through `u`, materialized.
pub fn union_through(
    u: &Point,
    family: &PatternFamily,
    shape: &LatticeShape,
) -> Result<LatticeSubset> {
    let mut acc = LatticeSubset::empty(shape.clone());
    for s in subspaces_through(u, family) {
        acc = acc.union(&s.to_subset(shape))?;
    }
    Ok(acc)
}

/// Membership in `M(u)` without materializing the union: `p` lies in some
/// `M`-subspace through `u` iff `p` and `u` agree outside some `B` in `M`.
pub fn share_subspace(p: &Point, u: &Point, family: &PatternFamily) -> bool {
    family
        .patterns()
        .iter()
        .any(|b| b.complement_axes().all(|j| p.coord(j) == u.coord(j)))
}

/// All distinct `M`-subspaces with non-empty trace on `a`, each paired with
/// its trace, ordered by pattern then fixed coordinates.
pub fn subspaces_meeting(a: &LatticeSubset, family: &PatternFamily) -> Vec<(Subspace, LatticeSubset)> {
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    for b in family.patterns() {
        for p in a.iter() {
            seen.insert(Subspace::through(p, *b));
        }
    }
    seen.into_iter().map(|s| { let t = s.trace(a); (s, t) }).collect()
}
