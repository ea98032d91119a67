//! Machine-readable reports. Every report carries `"schema": "ellipcp/1"`
//! and a `kind` tag, and deserializes back to an identical value.

use ellipcp_core::algmodel::Splitting;
use ellipcp_core::divisor::{CohDims, Divisor};
use ellipcp_core::ellcoh::{GradedDims, LesTable};
use ellipcp_core::repr::Character;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "ellipcp/1";

/// One pairwise intersection number recomputed by enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub v: Character,
    pub w: Character,
    pub det_squared: u64,
    pub count: u64,
    pub agree: bool,
}

/// Shared divisor data for `cp` and `sphere`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorSummary {
    pub divisor: Divisor,
    pub intersection_matrix: Vec<Vec<i64>>,
    pub self_intersection: i64,
    pub ample: bool,
    /// `h^0, h^1, h^2` of `O(-D)`.
    pub coh_minus_d: CohDims,
    /// `h^0, h^1, h^2` of `O_X`.
    pub coh_structure_sheaf: CohDims,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpReport {
    pub schema: String,
    pub kind: String,
    pub input: String,
    pub representation: String,
    /// The torus representation `V ⊗ w` whose sphere is used.
    pub twisted: String,
    #[serde(flatten)]
    pub summary: DivisorSummary,
    pub les: LesTable,
    pub unreduced: GradedDims,
    /// Contribution of the disjoint basepoint, `EC_T^*(pt)`.
    pub point: GradedDims,
    pub reduced: GradedDims,
    pub d_invariant: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<Vec<OracleCheck>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereReport {
    pub schema: String,
    pub kind: String,
    pub input: String,
    pub representation: String,
    #[serde(flatten)]
    pub summary: DivisorSummary,
    pub value: GradedDims,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<Vec<OracleCheck>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectReport {
    pub schema: String,
    pub kind: String,
    #[serde(flatten)]
    pub check: OracleCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionReport {
    pub schema: String,
    pub kind: String,
    pub n: i64,
    pub points: u64,
    pub points_closed_form: u64,
    pub exact_order: u64,
    /// Jordan's totient `J_2(n) = n^2 Π_{p | n} (1 - p^-2)`.
    pub exact_order_closed_form: u64,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupsReport {
    pub schema: String,
    pub kind: String,
    pub input: String,
    pub subgroup: String,
    pub basis: [[i64; 2]; 2],
    pub invariant_factors: [u64; 2],
    pub subgroups: Vec<String>,
    pub count: u64,
    /// `Σ_{a | s1, b | s2} gcd(a, b)`.
    pub count_closed_form: u64,
    pub agree: bool,
}

/// One entry of a cell model: where it sits, its descriptor, and its
/// dimensions in the degrees listed by the enclosing report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellEntry {
    pub at: String,
    pub value: String,
    pub dims: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub schema: String,
    pub kind: String,
    pub cell: String,
    pub degrees: Vec<i64>,
    pub top: CellEntry,
    pub codim1: Vec<CellEntry>,
    pub other_codim1: CellEntry,
    pub bottom: Vec<CellEntry>,
    /// Total bottom-level dimension in each of `degrees`.
    pub bottom_dims: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub schema: String,
    pub kind: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub minus: Option<String>,
    pub subgroup: String,
    pub basis: [[i64; 2]; 2],
    pub splitting: Splitting,
    pub euler_class: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub euler_class_minus: Option<String>,
    /// Cohomological degree of `euler_class`, when it is homogeneous.
    pub grading: Option<i64>,
    /// `2 dim_C W^F`, the degree shift of `S^W` at `F`; for a virtual
    /// representation, the difference of the two shifts.
    pub suspension_shift: i64,
}
