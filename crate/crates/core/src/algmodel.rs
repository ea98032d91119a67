//! Finite pieces of the algebraic model for rational `T^2`-spectra: the
//! splitting of a finite subgroup as an intersection of two codimension-one
//! subgroups, Euler classes in the coordinates that splitting provides,
//! suspension profiles of representation spheres, and the values of the
//! models of natural cells `G/H_+`.
//!
//! Nothing here materializes an element of the infinite product
//! `O_F = Π_F H^*(BG/F)`; every operation looks at one finite subgroup or
//! at an explicit finite family of them.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{codim1_contains, CodimOneSubgroup, FiniteSubgroup};
use crate::poly::EulerPolynomial;
use crate::repr::{Character, TorusRep};

/// `F = H_A^{n_A} ∩ H_B^{n_B}`, so that `H^*(BG/F) ≅ Q[x_A, x_B]` with
/// `x_A = e(z_A^{n_A})` and `x_B = e(z_B^{n_B})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Splitting {
    pub a_dir: Character,
    pub n_a: u64,
    pub b_dir: Character,
    pub n_b: u64,
}

impl Splitting {
    /// The characters `z_A^{n_A}` and `z_B^{n_B}`; together they span the
    /// lattice of characters trivial on `F`.
    pub fn characters(&self) -> (Character, Character) {
        (self.a_dir.scale(self.n_a as i64), self.b_dir.scale(self.n_b as i64))
    }

    /// The subgroup `H_A^{n_A} ∩ H_B^{n_B}`.
    pub fn subgroup(&self) -> FiniteSubgroup {
        let (u, v) = self.characters();
        FiniteSubgroup::from_annihilator(&[u, v]).expect("directions are not parallel")
    }

    /// Integer coordinates `(p, q)` with `c = p·z_A^{n_A} + q·z_B^{n_B}`, if any.
    pub fn coordinates(&self, c: Character) -> Option<(i64, i64)> {
        let (u, v) = self.characters();
        let det = u.det(v);
        let (p, q) = (c.det(v), u.det(c));
        (p % det == 0 && q % det == 0).then(|| (p / det, q / det))
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H_{}^{} ∩ H_{}^{}", self.a_dir, self.n_a, self.b_dir, self.n_b)
    }
}

/// Canonical primitive characters of L1 norm `r`, in tie-break order:
/// larger first coordinate first, then larger second coordinate.
fn primitives_of_norm(r: i64) -> impl Iterator<Item = Character> {
    (0..=r).rev().flat_map(move |l| {
        let m = r - l;
        let candidates = if l == 0 {
            vec![Character::new(0, m)]
        } else if m == 0 {
            vec![Character::new(l, 0)]
        } else {
            vec![Character::new(l, m), Character::new(l, -m)]
        };
        candidates.into_iter().filter(|c| c.is_canonical_primitive())
    })
}

/// Sort key of the tie-break order on canonical primitive characters.
fn direction_key(c: Character) -> (i64, i64, i64) {
    (c.lambda.abs() + c.mu.abs(), -c.lambda, -c.mu)
}

/// Splits `F` along a basis adapted to the Smith normal form of its
/// trivial-character lattice `Λ`: with invariant factors `s1 | s2`, choose a
/// basis `(A, B)` of `Z^2` with `Λ = s1·Z A ⊕ s2·Z B`, so `n_A = s1` and
/// `n_B = s2`.
///
/// Such bases are not unique. The chosen one minimizes `A`, then `B`, in the
/// order: smaller `|λ| + |μ|` first, then larger `λ`, then larger `μ`. So the
/// trivial subgroup splits as `H_(1,0) ∩ H_(0,1)`.
pub fn decompose(f: &FiniteSubgroup) -> Splitting {
    let (s1, s2) = f.invariant_factors();
    let (s1, s2) = (s1 as i64, s2 as i64);
    for r in 1.. {
        for a in primitives_of_norm(r) {
            if !f.kills(a.scale(s1)) {
                continue;
            }
            // det(A, B0) = 1
            let e = a.lambda.extended_gcd(&a.mu);
            let b0 = Character::new(-e.y, e.x);
            if !f.kills(b0.scale(s2)) {
                continue;
            }
            // Every B0 + tA, and its negative, completes A equally well.
            let reach = 2 * (b0.lambda.abs() + b0.mu.abs()) + 1;
            let b = (-reach..=reach)
                .map(|t| Character::new(b0.lambda + t * a.lambda, b0.mu + t * a.mu).canonical_sign())
                .min_by_key(|&c| direction_key(c))
                .expect("nonempty range");
            let split = Splitting { a_dir: a, n_a: s1 as u64, b_dir: b, n_b: s2 as u64 };
            assert_eq!(split.subgroup(), *f, "splitting does not reconstruct {f}");
            return split;
        }
    }
    unreachable!("every finite subgroup has an adapted basis")
}

/// Euler class `e(W)_F` in the coordinates `Q[x_A, x_B]` of [`decompose`].
///
/// Each character contributes `1` if it is nontrivial on `F`, and otherwise
/// the linear form `p x_A + q x_B` with `(λ, μ) = p·n_A A + q·n_B B`.
pub fn euler_class(w: &TorusRep, f: &FiniteSubgroup) -> EulerPolynomial {
    euler_class_in(w, f, &decompose(f))
}

/// [`euler_class`] with a precomputed splitting of `f`.
pub fn euler_class_in(w: &TorusRep, f: &FiniteSubgroup, split: &Splitting) -> EulerPolynomial {
    let mut out = EulerPolynomial::one();
    for (c, mult) in w.terms() {
        if !f.kills(c) {
            continue;
        }
        let (p, q) =
            split.coordinates(c).expect("a character trivial on F lies in the span of the splitting characters");
        out = &out * &EulerPolynomial::linear(p, q).pow(mult);
    }
    out
}

/// `e(W+ - W-) = e(W+) / e(W-)`, kept as an uncancelled pair.
pub fn euler_class_virtual(
    w_plus: &TorusRep,
    w_minus: &TorusRep,
    f: &FiniteSubgroup,
) -> (EulerPolynomial, EulerPolynomial) {
    let split = decompose(f);
    (euler_class_in(w_plus, f, &split), euler_class_in(w_minus, f, &split))
}

/// Degree shift `2·dim_C W^F` of `S^W` at each subgroup of `family`, in order.
pub fn suspension_profile(w: &TorusRep, family: &[FiniteSubgroup]) -> Vec<(FiniteSubgroup, u64)> {
    family.iter().map(|f| (*f, 2 * w.fixed_dim(f))).collect()
}

/// All subgroups of `f`, ordered by order and then Hermite basis.
///
/// A subgroup `F' ⊆ F` corresponds to a lattice `Λ' ⊇ Λ(F)`; its Hermite
/// basis `[[a', b'], [0, d']]` has `a' | a` and `d' | d`.
pub fn enumerate_subgroups(f: &FiniteSubgroup) -> Vec<FiniteSubgroup> {
    let [[a, _], [_, d]] = f.basis();
    let divisors = |n: i64| (1..=n).filter(move |k| n % k == 0);
    let mut out = Vec::new();
    for a2 in divisors(a) {
        for d2 in divisors(d) {
            for b2 in 0..d2 {
                let sub = FiniteSubgroup::from_annihilator(&[Character::new(a2, b2), Character::new(0, d2)])
                    .expect("full rank");
                if f.contains(&sub) {
                    out.push(sub);
                }
            }
        }
    }
    out.sort();
    out
}

/// Value of a natural-cell model at one level or component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellValue {
    Zero,
    /// `ΣQ`, concentrated in degree 1.
    SigmaQ,
    /// `Σ²Q`, concentrated in degree 2.
    SigmaSquaredQ,
    /// `Σ Q[x_A, x_B]/(ℓ)` for a nonzero linear form `ℓ`; a suspended
    /// polynomial ring in one variable of degree -2.
    SuspendedPolynomial {
        relation: EulerPolynomial,
    },
}

impl CellValue {
    /// Rational dimension in homological degree `k`.
    pub fn dim(&self, k: i64) -> u64 {
        match self {
            CellValue::Zero => 0,
            CellValue::SigmaQ => u64::from(k == 1),
            CellValue::SigmaSquaredQ => u64::from(k == 2),
            CellValue::SuspendedPolynomial { .. } => u64::from(k <= 1 && (1 - k) % 2 == 0),
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == CellValue::Zero
    }
}

impl fmt::Display for CellValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellValue::Zero => f.write_str("0"),
            CellValue::SigmaQ => f.write_str("ΣQ"),
            CellValue::SigmaSquaredQ => f.write_str("Σ²Q"),
            CellValue::SuspendedPolynomial { relation } => write!(f, "ΣQ[x_A,x_B]/({relation})"),
        }
    }
}

/// Values of a natural-cell model on a finite working family of subgroups.
///
/// Connected levels: the whole group `G`, the named codimension-one
/// subgroups, and one aggregate entry for every other codimension-one
/// subgroup. The bottom level (trivial connected subgroup) is a module over
/// `O_F`, listed by its components at finite subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellModelTable {
    pub top: CellValue,
    pub codim1: Vec<(Character, CellValue)>,
    pub other_codim1: CellValue,
    pub bottom: Vec<(FiniteSubgroup, CellValue)>,
}

impl CellModelTable {
    /// Total bottom-level dimension in degree `k`.
    pub fn bottom_dim(&self, k: i64) -> u64 {
        self.bottom.iter().map(|(_, v)| v.dim(k)).sum()
    }

    pub fn bottom_nonzero(&self) -> usize {
        self.bottom.iter().filter(|(_, v)| !v.is_zero()).count()
    }
}

/// Model of `G/H_+` for `H = ker z_v`: `ΣQ` at `H`, and at the bottom
/// `Σ H^*(BG/F)/e(z_v)` for each `F ⊆ H` of the family; zero elsewhere.
pub fn cell_model_codim1(v: Character, family: &[FiniteSubgroup]) -> Result<CellModelTable> {
    let h = CodimOneSubgroup::new(v, 1)?;
    let zv = TorusRep::from_terms([(v, 1)]);
    let bottom = family
        .iter()
        .map(|f| {
            let value = if codim1_contains(f, &h) {
                CellValue::SuspendedPolynomial { relation: euler_class(&zv, f) }
            } else {
                CellValue::Zero
            };
            (*f, value)
        })
        .collect();
    Ok(CellModelTable {
        top: CellValue::Zero,
        codim1: vec![(v, CellValue::SigmaQ)],
        other_codim1: CellValue::Zero,
        bottom,
    })
}

/// Model of `G/F_+` for finite `F`: zero at every connected level except the
/// bottom, where it is the suspended rationalized Burnside ring
/// `⊕_{F' ⊆ F} Σ²Q`.
pub fn cell_model_finite(f: &FiniteSubgroup) -> CellModelTable {
    CellModelTable {
        top: CellValue::Zero,
        codim1: Vec::new(),
        other_codim1: CellValue::Zero,
        bottom: enumerate_subgroups(f).into_iter().map(|s| (s, CellValue::SigmaSquaredQ)).collect(),
    }
}
