//! Pattern families `M` of axis subsets, stored as bitmasks over up to
//! eight axes, and the derived families: the slice family, the meet
//! `M1 /\ M2` and the star family `C*`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::MAX_ORDER;

/// A subset `B` of the axis set, i.e. the free directions of a subspace kind.
///
/// Stored as a bitmask (bit `j` set means 0-based axis `j` is free) together
/// with the ambient order, so the complement is well defined.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pattern {
    mask: u8,
    d: u8,
}

impl Pattern {
    pub fn from_axes(d: usize, axes: impl IntoIterator<Item = usize>) -> Result<Self> {
        if d == 0 || d > MAX_ORDER {
            return Err(Error::BadOrder(d));
        }
        let mut mask = 0u8;
        for axis in axes {
            if axis >= d {
                return Err(Error::AxisOutOfRange { axis, order: d });
            }
            mask |= 1 << axis;
        }
        Ok(Pattern { mask, d: d as u8 })
    }

    pub fn from_mask(d: usize, mask: u8) -> Result<Self> {
        if d == 0 || d > MAX_ORDER {
            return Err(Error::BadOrder(d));
        }
        if mask & !Self::full_mask(d) != 0 {
            return Err(Error::AxisOutOfRange { axis: 7 - mask.leading_zeros() as usize, order: d });
        }
        Ok(Pattern { mask, d: d as u8 })
    }

    fn full_mask(d: usize) -> u8 {
        if d >= 8 { 0xff } else { (1u8 << d) - 1 }
    }

    pub fn empty(d: usize) -> Self {
        Pattern { mask: 0, d: d as u8 }
    }

    pub fn full(d: usize) -> Self {
        Pattern { mask: Self::full_mask(d), d: d as u8 }
    }

    pub fn ambient_order(&self) -> usize {
        self.d as usize
    }

    pub fn mask(&self) -> u8 {
        self.mask
    }

    /// `|B|`, the order of the subspaces this pattern describes.
    pub fn order(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == Self::full_mask(self.d as usize)
    }

    pub fn contains_axis(&self, axis: usize) -> bool {
        axis < self.d as usize && self.mask & (1 << axis) != 0
    }

    /// Free axes, 0-based, ascending.
    pub fn axes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.d as usize).filter(|&j| self.mask & (1 << j) != 0)
    }

    /// Fixed axes `B^c`, 0-based, ascending.
    pub fn complement_axes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.d as usize).filter(|&j| self.mask & (1 << j) == 0)
    }

    pub fn complement(&self) -> Pattern {
        Pattern { mask: !self.mask & Self::full_mask(self.d as usize), d: self.d }
    }

    pub fn is_subset_of(&self, other: &Pattern) -> bool {
        self.d == other.d && self.mask & !other.mask == 0
    }

    pub fn intersection(&self, other: &Pattern) -> Result<Pattern> {
        if self.d != other.d {
            return Err(Error::OrderMismatch(self.d as usize, other.d as usize));
        }
        Ok(Pattern { mask: self.mask & other.mask, d: self.d })
    }

    /// Subsets of this pattern, the empty pattern included, ascending by mask.
    pub fn subsets(&self) -> impl Iterator<Item = Pattern> + '_ {
        let m = self.mask;
        let d = self.d;
        // enumerate submasks of m in increasing numeric order
        (0..=m).filter(move |s| s & !m == 0).map(move |s| Pattern { mask: s, d })
    }
}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pattern {
    /// Canonical pattern order: by order `|B|`, then by bitmask.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order().cmp(&other.order()).then(self.mask.cmp(&other.mask))
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based axes for display, matching the file format
        write!(f, "{{")?;
        for (i, axis) in self.axes().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", axis + 1)?;
        }
        write!(f, "}}")
    }
}

/// A non-empty family `M` of patterns over a common ambient order,
/// deduplicated and sorted by `(order, bitmask)`.
#[derive(Clone, PartialEq, Eq)]
pub struct PatternFamily {
    d: u8,
    patterns: Vec<Pattern>,
}

impl PatternFamily {
    pub fn new(d: usize, patterns: impl IntoIterator<Item = Pattern>) -> Result<Self> {
        let mut pats: Vec<Pattern> = Vec::new();
        for p in patterns {
            if p.ambient_order() != d {
                return Err(Error::OrderMismatch(d, p.ambient_order()));
            }
            pats.push(p);
        }
        if pats.is_empty() {
            return Err(Error::EmptyFamily);
        }
        pats.sort();
        pats.dedup();
        Ok(PatternFamily { d: d as u8, patterns: pats })
    }

    /// The slice family `{ [d] \ {j} : j in [d] }`.
    pub fn slices(d: usize) -> Result<Self> {
        let full = Pattern::full(d);
        Self::new(d, (0..d).map(|j| Pattern { mask: full.mask & !(1 << j), d: d as u8 }))
    }

    /// `{ {} }`: covering by points; the covering number is the size.
    pub fn points(d: usize) -> Result<Self> {
        Self::new(d, [Pattern::empty(d)])
    }

    /// `{ {j} : j in [d] }`: covering by axis-parallel lines.
    pub fn lines(d: usize) -> Result<Self> {
        Self::new(d, (0..d).map(|j| Pattern { mask: 1 << j, d: d as u8 }))
    }

    /// `{ [d] }`: the whole box covers everything.
    pub fn full(d: usize) -> Result<Self> {
        Self::new(d, [Pattern::full(d)])
    }

    /// The star family `C* = { C \ {j} : j in C }` of a non-empty pattern.
    pub fn star(c: &Pattern) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::EmptyPatternStar);
        }
        let d = c.ambient_order();
        Self::new(d, c.axes().map(|j| Pattern { mask: c.mask & !(1 << j), d: d as u8 }))
    }

    /// The meet `M1 /\ M2 = { B1 /\ B2 }` of pairwise intersections.
    pub fn meet(&self, other: &PatternFamily) -> Result<PatternFamily> {
        if self.d != other.d {
            return Err(Error::OrderMismatch(self.d as usize, other.d as usize));
        }
        let mut pats = Vec::with_capacity(self.patterns.len() * other.patterns.len());
        for b1 in &self.patterns {
            for b2 in &other.patterns {
                pats.push(b1.intersection(b2)?);
            }
        }
        PatternFamily::new(self.d as usize, pats)
    }

    pub fn ambient_order(&self) -> usize {
        self.d as usize
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        false // by construction
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn contains(&self, p: &Pattern) -> bool {
        self.patterns.binary_search(p).is_ok()
    }

    pub fn contains_full_pattern(&self) -> bool {
        self.contains(&Pattern::full(self.d as usize))
    }

    /// `tau`: the largest order of any pattern in the family.
    pub fn max_order(&self) -> u32 {
        self.patterns.iter().map(|p| p.order()).max().unwrap_or(0)
    }

    /// Patterns not strictly contained in another member. A dominated
    /// pattern's subspaces lie inside subspaces of the dominating pattern,
    /// so minimum covers only need the maximal ones; the raw family is kept
    /// because `|M|` enters the quantitative statements.
    pub fn maximal_patterns(&self) -> Vec<Pattern> {
        self.patterns
            .iter()
            .filter(|b| {
                !self
                    .patterns
                    .iter()
                    .any(|b2| b.mask != b2.mask && b.is_subset_of(b2))
            })
            .copied()
            .collect()
    }

    /// Deduplicated non-empty subsets of members, in canonical order. This is
    /// the scope of the descent arguments' candidate patterns `C`.
    pub fn candidate_subpatterns(&self) -> Vec<Pattern> {
        let mut out: Vec<Pattern> = self
            .patterns
            .iter()
            .flat_map(|b| b.subsets())
            .filter(|c| !c.is_empty())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Debug for PatternFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.patterns).finish()
    }
}
