//! External file formats and serializable report records.
//!
//! Instance files: `{"shape": [n1,...,nd], "points": [[x1,...,xd], ...]}`,
//! 1-based. Duplicate points are dropped with a warning; out-of-range values
//! are errors.
//!
//! Family files: `{"family": [[axes of B1], ...]}` with 1-based axis indices;
//! the empty pattern is `[]`. The shorthands `slices`, `points`, `lines` and
//! `full` are accepted wherever a family spec is expected.
//!
//! Tensor files: `{"shape": [...], "p": prime, "entries": [...]}` with
//! entries flat in row-major order, last axis fastest.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::lattice::{LatticeShape, LatticeSubset, Point, Restriction};
use crate::pattern::{Pattern, PatternFamily};
use crate::restrict::{DescentTreeNode, LeafReason, RestrictionCertificate};
use crate::solver::{CoverDecomposition, CoverResult};
use crate::subspace::Subspace;
use crate::tensor::FieldTensor;

#[derive(Serialize, Deserialize)]
struct InstanceFile {
    shape: Vec<u32>,
    points: Vec<Vec<u32>>,
}

/// Parses an instance, returning the subset and human-readable warnings
/// (currently only duplicate-point notices).
pub fn parse_instance(text: &str) -> Result<(LatticeSubset, Vec<String>)> {
    let file: InstanceFile = serde_json::from_str(text)?;
    let shape = LatticeShape::new(&file.shape)?;
    let raw = file.points.len();
    let subset = LatticeSubset::new(shape, file.points.iter().map(|c| Point::new(c)))?;
    let mut warnings = Vec::new();
    if subset.len() < raw {
        warnings.push(format!("dropped {} duplicate point(s)", raw - subset.len()));
    }
    Ok((subset, warnings))
}

pub fn read_instance(path: &Path) -> Result<(LatticeSubset, Vec<String>)> {
    parse_instance(&std::fs::read_to_string(path)?)
}

pub fn instance_to_json(a: &LatticeSubset) -> String {
    let file = InstanceFile {
        shape: a.shape().dims().to_vec(),
        points: a.iter().map(|p| p.coords().to_vec()).collect(),
    };
    serde_json::to_string_pretty(&file).expect("instance serializes")
}

#[derive(Serialize, Deserialize)]
struct FamilyFile {
    family: Vec<Vec<usize>>,
}

pub fn parse_family(text: &str, d: usize) -> Result<PatternFamily> {
    let file: FamilyFile = serde_json::from_str(text)?;
    let mut patterns = Vec::new();
    for axes in &file.family {
        for &axis in axes {
            if axis == 0 || axis > d {
                return Err(Error::AxisOutOfRange { axis, order: d });
            }
        }
        patterns.push(Pattern::from_axes(d, axes.iter().map(|&a| a - 1))?);
    }
    PatternFamily::new(d, patterns)
}

/// Resolves a family spec: one of the named shorthands, else a file path.
pub fn family_from_spec(spec: &str, d: usize) -> Result<PatternFamily> {
    match spec {
        "slices" => PatternFamily::slices(d),
        "points" => PatternFamily::points(d),
        "lines" => PatternFamily::lines(d),
        "full" => PatternFamily::full(d),
        path => {
            let p = Path::new(path);
            if !p.exists() {
                return Err(Error::UnknownFamilySpec(spec.to_string()));
            }
            parse_family(&std::fs::read_to_string(p)?, d)
        }
    }
}

pub fn family_to_json(m: &PatternFamily) -> String {
    let file = FamilyFile {
        family: m
            .patterns()
            .iter()
            .map(|b| b.axes().map(|j| j + 1).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("family serializes")
}

#[derive(Serialize, Deserialize)]
struct TensorFile {
    shape: Vec<u32>,
    p: u8,
    entries: Vec<u8>,
}

pub fn parse_tensor(text: &str) -> Result<FieldTensor> {
    let file: TensorFile = serde_json::from_str(text)?;
    let shape = LatticeShape::new(&file.shape)?;
    let field = PrimeField::new(file.p)?;
    FieldTensor::new(shape, field, file.entries)
}

pub fn read_tensor(path: &Path) -> Result<FieldTensor> {
    parse_tensor(&std::fs::read_to_string(path)?)
}

pub fn tensor_to_json(t: &FieldTensor) -> String {
    let file = TensorFile {
        shape: t.shape().dims().to_vec(),
        p: t.field().modulus(),
        entries: t.entries().to_vec(),
    };
    serde_json::to_string_pretty(&file).expect("tensor serializes")
}

// ---- report records (1-based at the boundary) ----

#[derive(Clone, Debug, Serialize)]
pub struct SubspaceRecord {
    pub free_axes: Vec<usize>,
    pub fixed_coords: BTreeMap<usize, u32>,
}

impl From<&Subspace> for SubspaceRecord {
    fn from(s: &Subspace) -> Self {
        SubspaceRecord {
            free_axes: s.pattern().axes().map(|j| j + 1).collect(),
            fixed_coords: s.fixed_coords().iter().map(|&(j, v)| (j + 1, v)).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionRecord {
    pub length: usize,
    pub subspaces: Vec<SubspaceRecord>,
}

impl From<&CoverDecomposition> for DecompositionRecord {
    fn from(d: &CoverDecomposition) -> Self {
        DecompositionRecord {
            length: d.length(),
            subspaces: d.subspaces().iter().map(SubspaceRecord::from).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverRecord {
    pub value: u32,
    pub witness: Vec<SubspaceRecord>,
    pub nodes: u64,
    pub greedy_upper: u32,
    pub lower_bound: u32,
    pub family_size: usize,
    pub reduced_family_size: usize,
}

impl From<&CoverResult> for CoverRecord {
    fn from(r: &CoverResult) -> Self {
        CoverRecord {
            value: r.value,
            witness: r.witness.subspaces().iter().map(SubspaceRecord::from).collect(),
            nodes: r.stats.nodes,
            greedy_upper: r.stats.greedy_upper,
            lower_bound: r.stats.lower_bound,
            family_size: r.stats.family_size,
            reduced_family_size: r.stats.reduced_family_size,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionRecord {
    pub axis_sets: Vec<Vec<u32>>,
    pub induced_points: Vec<Vec<u32>>,
}

impl From<&Restriction> for RestrictionRecord {
    fn from(r: &Restriction) -> Self {
        RestrictionRecord {
            axis_sets: r.axis_sets().iter().map(|s| s.iter().copied().collect()).collect(),
            induced_points: r.induced().iter().map(|p| p.coords().to_vec()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    pub theorem: String,
    pub claimed_lower_bound: u32,
    pub verified_value: u32,
    pub axis_set_sizes: Vec<usize>,
    pub restriction: RestrictionRecord,
}

impl From<&RestrictionCertificate> for CertificateRecord {
    fn from(c: &RestrictionCertificate) -> Self {
        CertificateRecord {
            theorem: format!("{:?}", c.theorem).to_lowercase(),
            claimed_lower_bound: c.claimed_lower_bound,
            verified_value: c.verified_value,
            axis_set_sizes: c.restriction.axis_set_sizes(),
            restriction: RestrictionRecord::from(&c.restriction),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeRecord {
    pub points: Vec<Vec<u32>>,
    pub chosen_subspace: Option<SubspaceRecord>,
    pub leaf_reason: Option<String>,
    pub children: Vec<TreeRecord>,
}

impl From<&DescentTreeNode> for TreeRecord {
    fn from(n: &DescentTreeNode) -> Self {
        TreeRecord {
            points: n.subset.iter().map(|p| p.coords().to_vec()).collect(),
            chosen_subspace: n.chosen_subspace.as_ref().map(SubspaceRecord::from),
            leaf_reason: n.leaf_reason.map(|r| {
                match r {
                    LeafReason::CaseTwo => "case-2",
                    LeafReason::DepthLimit => "depth-limit",
                }
                .to_string()
            }),
            children: n.children.iter().map(TreeRecord::from).collect(),
        }
    }
}
