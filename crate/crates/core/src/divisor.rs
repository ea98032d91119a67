//! Divisor classes on the abelian surface `X = E x E` spanned by the
//! fiber-type curves `C_v = { (P, Q) : λP + μQ = e }`, one for each canonical
//! primitive character `v = (λ, μ)`.
//!
//! Translates of `C_v` are identified with `C_v`: every quantity computed
//! here (intersection numbers, ampleness, Euler characteristic, cohomology
//! dimensions) depends only on the multiset of directions.
//!
//! Line bundles are taken as `O(-D)` for the cohomology of representation
//! spheres, matching the inclusion `O(-D) ↪ O_X` the long exact sequence is
//! built from.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repr::{Character, TorusRep};

/// A formal integer combination `Σ m_v C_v`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<DivisorTerm>", try_from = "Vec<DivisorTerm>")]
pub struct Divisor {
    coeffs: BTreeMap<Character, i64>,
}

/// Serialized form of one summand: `{"v": [λ, μ], "m": m}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorTerm {
    pub v: Character,
    pub m: i64,
}

impl From<Divisor> for Vec<DivisorTerm> {
    fn from(d: Divisor) -> Self {
        d.terms().map(|(v, m)| DivisorTerm { v, m }).collect()
    }
}

impl TryFrom<Vec<DivisorTerm>> for Divisor {
    type Error = Error;

    fn try_from(terms: Vec<DivisorTerm>) -> Result<Self> {
        let mut d = Divisor::zero();
        for t in terms {
            d.add(t.v, t.m)?;
        }
        Ok(d)
    }
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `m · C_v`.
    pub fn fiber(v: Character, m: i64) -> Result<Self> {
        let mut d = Self::zero();
        d.add(v, m)?;
        Ok(d)
    }

    pub fn from_terms<I: IntoIterator<Item = (Character, i64)>>(terms: I) -> Result<Self> {
        let mut d = Self::zero();
        for (v, m) in terms {
            d.add(v, m)?;
        }
        Ok(d)
    }

    /// Adds `m · C_v`; `v` must be canonical primitive.
    pub fn add(&mut self, v: Character, m: i64) -> Result<()> {
        if !v.is_canonical_primitive() {
            return Err(Error::NotPrimitive(v.lambda, v.mu));
        }
        let slot = self.coeffs.entry(v).or_insert(0);
        *slot += m;
        if *slot == 0 {
            self.coeffs.remove(&v);
        }
        Ok(())
    }

    pub fn coeff(&self, v: Character) -> i64 {
        self.coeffs.get(&v).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Character, i64)> + '_ {
        self.coeffs.iter().map(|(&v, &m)| (v, m))
    }

    pub fn directions(&self) -> impl Iterator<Item = Character> + '_ {
        self.coeffs.keys().copied()
    }

    /// Number of distinct directions with nonzero coefficient.
    pub fn num_directions(&self) -> usize {
        self.coeffs.len()
    }

    /// Sum of coefficients.
    pub fn total_multiplicity(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&m| m >= 0)
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        let mut out = Divisor::zero();
        for (v, m) in self.terms() {
            out.add(v, k * m).expect("keys are canonical");
        }
        out
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (v, m) in other.terms() {
            out.add(v, m).expect("keys are canonical");
        }
        out
    }

    fn require_effective(&self) -> Result<()> {
        match self.terms().find(|&(_, m)| m < 0) {
            Some((v, m)) => Err(Error::NotEffective { lambda: v.lambda, mu: v.mu, coeff: m }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Divisor {
    /// `C_(0,1) + 4C_(1,1)`; the zero divisor prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (v, m)) in self.terms().enumerate() {
            match (i, m < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.abs() != 1 {
                write!(f, "{}", m.abs())?;
            }
            write!(f, "C_{v}")?;
        }
        Ok(())
    }
}

/// The divisor `D_W = Σ α_z' X(ker z')` attached to a representation with no
/// trivial summand.
///
/// For a character `g · v` with `v` primitive, `X(ker z_v^g)` is the preimage
/// of `E[g]` under `(P, Q) ↦ λP + μQ`: `g^2` parallel translates of `C_v`,
/// numerically `g^2 C_v`.
pub fn divisor_of_rep(w: &TorusRep) -> Result<Divisor> {
    let mut d = Divisor::zero();
    for (c, mult) in w.terms() {
        let (g, v) = c.primitive_part().ok_or(Error::TrivialCharacter)?;
        d.add(v, mult as i64 * g * g)?;
    }
    Ok(d)
}

/// Intersection pairing, the bilinear extension of `C_v . C_w = det(v, w)^2`.
pub fn pairing(d1: &Divisor, d2: &Divisor) -> i64 {
    let mut total: i128 = 0;
    for (v, m) in d1.terms() {
        for (w, n) in d2.terms() {
            let det = v.det(w) as i128;
            total += m as i128 * n as i128 * det * det;
        }
    }
    i64::try_from(total).expect("intersection number overflows i64")
}

/// `C_v . C_w` for each pair of directions of `d`, in key order.
pub fn intersection_matrix(d: &Divisor) -> Vec<Vec<i64>> {
    let dirs: Vec<Character> = d.directions().collect();
    dirs.iter().map(|&v| dirs.iter().map(|&w| v.det(w) * v.det(w)).collect()).collect()
}

/// Ampleness of an effective divisor by Nakai-Moishezon: positive
/// self-intersection needs two non-parallel directions, and then every
/// irreducible curve meets one of them.
pub fn is_ample(d: &Divisor) -> Result<bool> {
    d.require_effective()?;
    let ample = d.num_directions() >= 2;
    debug_assert_eq!(ample, pairing(d, d) > 0);
    Ok(ample)
}

/// `χ(O(D)) = D.D / 2` (Riemann-Roch on an abelian surface).
pub fn euler_char(d: &Divisor) -> i64 {
    let self_int = pairing(d, d);
    // Each cross term appears twice and C_v.C_v = 0, so D.D is even.
    assert!(self_int % 2 == 0, "odd self-intersection {self_int}");
    self_int / 2
}

/// Which line bundle of the pair `O(D)`, `O(-D)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// `(h^0, h^1, h^2)` of a line bundle on `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CohDims {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
}

impl CohDims {
    pub const fn new(h0: u64, h1: u64, h2: u64) -> Self {
        CohDims { h0, h1, h2 }
    }

    pub fn get(&self, degree: usize) -> u64 {
        match degree {
            0 => self.h0,
            1 => self.h1,
            2 => self.h2,
            _ => 0,
        }
    }

    pub fn chi(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64
    }

    /// `(h^2, h^1, h^0)`: the Serre-dual bundle's dimensions.
    pub fn reversed(&self) -> Self {
        CohDims::new(self.h2, self.h1, self.h0)
    }
}

/// The structure sheaf: `h^q(O_X) = binom(2, q)`.
pub const STRUCTURE_SHEAF: CohDims = CohDims::new(1, 2, 1);

/// Cohomology dimensions of `O(D)` (`Plus`) or `O(-D)` (`Minus`) for an
/// effective `D`.
///
/// * `D = 0`: the structure sheaf.
/// * one direction, `D = α C`: pulling back `O_E(α·e)` along the projection
///   with fiber `C` gives `h^0(O(D)) = α`, and `χ = 0` forces `h^1 = α`.
/// * two or more directions: `D` is ample, Kodaira kills `h^1, h^2` of
///   `O(D)`, and `h^0 = χ = D.D/2`.
///
/// The `Minus` values follow by Serre duality (`K_X` trivial).
pub fn coh_dims(d: &Divisor, sign: Sign) -> Result<CohDims> {
    d.require_effective()?;
    let plus = match d.num_directions() {
        0 => return Ok(STRUCTURE_SHEAF),
        1 => {
            let alpha = d.total_multiplicity() as u64;
            CohDims::new(alpha, alpha, 0)
        }
        _ => CohDims::new(euler_char(d) as u64, 0, 0),
    };
    Ok(match sign {
        Sign::Plus => plus,
        Sign::Minus => plus.reversed(),
    })
}

/// Rank of `H^k(O(-D)) → H^k(O_X)` induced by `O(-D) ↪ O_X`.
///
/// * `k = 0`: zero unless `D = 0` (nonzero global sections of `O(-D)` would
///   be constants vanishing on `D`).
/// * `k = 1`: for `D = α C` the image is `H^1(O(-C)) ≅ C`; for ample `D` the
///   source is zero.
/// * `k = 2`: dual to the inclusion of constants `H^0(O_X) ↪ H^0(O(D))`,
///   hence rank one.
pub fn restriction_map_rank(d: &Divisor, degree: usize) -> Result<u64> {
    d.require_effective()?;
    let k = d.num_directions();
    Ok(match degree {
        0 => u64::from(k == 0),
        1 => match k {
            0 => 2,
            1 => 1,
            _ => 0,
        },
        2 => 1,
        _ => 0,
    })
}
