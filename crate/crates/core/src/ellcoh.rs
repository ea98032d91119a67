//! Rational equivariant elliptic cohomology as 2-periodic graded dimensions.
//!
//! For a circle representation `V`, `CP(V) ≅ S(V ⊗ w)/H1`, and the `T^2`
//! theory of the free `T^2`-space `S(V ⊗ w)` agrees with the circle theory
//! of its `H1`-quotient. The cofibre sequence `S(V⊗w)_+ → S^0 → S^{V⊗w}`
//! then gives a long exact sequence whose first map, on sheaf cohomology, is
//! `H^*(X, O(-D)) → H^*(X, O_X)` for `D = D_{V⊗w}`. Even degrees of the
//! answer collect `coker_0 ⊕ ker_1`, odd degrees `coker_1 ⊕ ker_2`.

use serde::{Deserialize, Serialize};

use crate::divisor::{coh_dims, divisor_of_rep, restriction_map_rank, Divisor, Sign, STRUCTURE_SHEAF};
use crate::error::{Error, Result};
use crate::repr::{tensor_with_w, CircleRep, TorusRep};

/// Complex dimensions of a 2-periodic graded vector space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GradedDims {
    pub even: u64,
    pub odd: u64,
}

impl GradedDims {
    pub const fn new(even: u64, odd: u64) -> Self {
        GradedDims { even, odd }
    }

    /// Dimension in degree `k`.
    pub fn degree(&self, k: i64) -> u64 {
        if k.rem_euclid(2) == 0 {
            self.even
        } else {
            self.odd
        }
    }

    /// `even - odd`.
    pub fn euler_char(&self) -> i64 {
        self.even as i64 - self.odd as i64
    }

    pub fn checked_sub(&self, other: GradedDims) -> Option<GradedDims> {
        Some(GradedDims::new(self.even.checked_sub(other.even)?, self.odd.checked_sub(other.odd)?))
    }
}

/// One degree of the map `H^k(O(-D)) → H^k(O_X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LesRow {
    pub source: u64,
    pub target: u64,
    pub rank: u64,
    pub kernel: u64,
    pub cokernel: u64,
}

impl LesRow {
    fn new(source: u64, target: u64, rank: u64) -> Self {
        assert!(rank <= source.min(target), "rank {rank} exceeds min({source}, {target})");
        LesRow { source, target, rank, kernel: source - rank, cokernel: target - rank }
    }
}

/// The map `H^*(X, O(-D)) → H^*(X, O_X)` in degrees 0, 1, 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LesTable {
    pub degrees: [LesRow; 3],
}

impl LesTable {
    pub fn ranks(&self) -> [u64; 3] {
        self.degrees.map(|r| r.rank)
    }

    pub fn kernels(&self) -> [u64; 3] {
        self.degrees.map(|r| r.kernel)
    }

    pub fn cokernels(&self) -> [u64; 3] {
        self.degrees.map(|r| r.cokernel)
    }

    /// `EC^*(S(V⊗w)_+)`: even = `coker_0 + ker_1`, odd = `coker_1 + ker_2`.
    pub fn unreduced(&self) -> GradedDims {
        let [d0, d1, d2] = self.degrees;
        GradedDims::new(d0.cokernel + d1.kernel, d1.cokernel + d2.kernel)
    }
}

/// Value of the `T^2` theory on `S^W` for `W` without trivial summands:
/// `H^0 ⊕ H^2` of `O(-D_W)` in even degrees, `H^1` in odd degrees.
pub fn ec_t2_sphere(w: &TorusRep) -> Result<GradedDims> {
    let d = divisor_of_rep(w)?;
    let c = coh_dims(&d, Sign::Minus)?;
    Ok(GradedDims::new(c.h0 + c.h2, c.h1))
}

/// The circle theory on a point: `H^0(E, O_E) ≅ C` even, `H^1(E, O_E) ≅ C` odd.
pub fn ec_t_point() -> GradedDims {
    GradedDims::new(1, 1)
}

/// Long exact sequence data for an effective divisor.
pub fn les_table_for_divisor(d: &Divisor) -> Result<LesTable> {
    let source = coh_dims(d, Sign::Minus)?;
    let mut degrees = [LesRow::new(0, 0, 0); 3];
    for (k, row) in degrees.iter_mut().enumerate() {
        *row = LesRow::new(source.get(k), STRUCTURE_SHEAF.get(k), restriction_map_rank(d, k)?);
    }
    Ok(LesTable { degrees })
}

/// Long exact sequence data for `CP(V)`, via `D = D_{V⊗w}`.
pub fn les_table(v: &CircleRep) -> Result<LesTable> {
    if v.is_zero() {
        return Err(Error::ZeroRepresentation);
    }
    les_table_for_divisor(&divisor_of_rep(&tensor_with_w(v))?)
}

/// `EC_T^*(CP(V))`, reduced by default; `reduced = false` gives `CP(V)_+`.
pub fn ec_cp(v: &CircleRep, reduced: bool) -> Result<GradedDims> {
    let unreduced = les_table(v)?.unreduced();
    if !reduced {
        return Ok(unreduced);
    }
    // CP(V)_+ ≃ CP(V) ∨ S^0 stably.
    Ok(unreduced.checked_sub(ec_t_point()).expect("unreduced value contains the S^0 summand"))
}

/// `d = Σ_{i<j} α_i α_j (i - j)^2`.
pub fn d_invariant(v: &CircleRep) -> u64 {
    let terms: Vec<(i64, u64)> = v.terms().collect();
    let mut d: u128 = 0;
    for (a, &(i, ai)) in terms.iter().enumerate() {
        for &(j, aj) in &terms[a + 1..] {
            let gap = (i - j).unsigned_abs() as u128;
            d += ai as u128 * aj as u128 * gap * gap;
        }
    }
    u64::try_from(d).expect("d overflows u64")
}

/// The closed form for reduced `EC_T^*(CP(V))`: `(α-1, α-1)` for
/// `V = α z^n`, and `(0, d)` with more than one isotypic component.
pub fn cp_closed_form(v: &CircleRep) -> Result<GradedDims> {
    match v.num_components() {
        0 => Err(Error::ZeroRepresentation),
        1 => {
            let alpha = v.dim();
            Ok(GradedDims::new(alpha - 1, alpha - 1))
        }
        _ => Ok(GradedDims::new(0, d_invariant(v))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::euler_char;
    use crate::repr::{parse_circle_rep, parse_torus_rep};
    use proptest::prelude::*;

    fn cp(text: &str) -> GradedDims {
        ec_cp(&parse_circle_rep(text).unwrap(), true).unwrap()
    }

    #[test]
    fn sphere_examples() {
        let s = |t: &str| ec_t2_sphere(&parse_torus_rep(t).unwrap());
        assert_eq!(s("x^0y^1 + 4x^1y^1").unwrap(), GradedDims::new(4, 0));
        assert_eq!(s("2x^1y^1").unwrap(), GradedDims::new(2, 2));
        assert_eq!(s("x^1y^1").unwrap(), GradedDims::new(1, 1));
        assert_eq!(s("x^0y^0 + x^1y^1"), Err(Error::TrivialCharacter));
    }

    #[test]
    fn point_value() {
        assert_eq!(ec_t_point(), GradedDims::new(1, 1));
        assert_eq!(ec_t_point(), ec_t_point());
    }

    #[test]
    fn les_examples() {
        let t = les_table(&parse_circle_rep("eps + 4z").unwrap()).unwrap();
        assert_eq!(t.ranks(), [0, 0, 1]);
        assert_eq!(t.kernels(), [0, 0, 3]);
        assert_eq!(t.cokernels(), [1, 2, 0]);

        let t = les_table(&parse_circle_rep("3z^5").unwrap()).unwrap();
        assert_eq!(t.ranks(), [0, 1, 1]);
        assert_eq!(t.kernels(), [0, 2, 2]);
        assert_eq!(t.cokernels(), [1, 1, 0]);

        let t = les_table(&parse_circle_rep("z").unwrap()).unwrap();
        assert_eq!(t.ranks(), [0, 1, 1]);
        assert_eq!(t.kernels(), [0, 0, 0]);
        assert_eq!(t.cokernels(), [1, 1, 0]);

        assert_eq!(les_table(&CircleRep::new()), Err(Error::ZeroRepresentation));
    }

    #[test]
    fn cp_examples() {
        assert_eq!(cp("eps + 4z"), GradedDims::new(0, 4));
        assert_eq!(cp("eps + z + 3z^2"), GradedDims::new(0, 16));
        assert_eq!(cp("3z^5"), GradedDims::new(2, 2));
        assert_eq!(cp("z"), GradedDims::new(0, 0));
        assert_eq!(ec_cp(&parse_circle_rep("eps+4z").unwrap(), false).unwrap(), GradedDims::new(1, 5));
        assert_eq!(ec_cp(&CircleRep::new(), true), Err(Error::ZeroRepresentation));
    }

    #[test]
    fn collisions() {
        assert_eq!(cp("eps + 4z"), cp("eps + z^2"));
        assert_eq!(cp("eps + 16z"), cp("eps + z^4"));
        assert_eq!(cp("eps + z^4"), cp("eps + z + 3z^2"));
    }

    #[test]
    fn d_invariant_examples() {
        let d = |t: &str| d_invariant(&parse_circle_rep(t).unwrap());
        assert_eq!(d("eps + 16z"), 16);
        assert_eq!(d("eps + z^4"), 16);
        assert_eq!(d("7z^-3"), 0);
        assert_eq!(d("0"), 0);
    }

    #[test]
    fn graded_degree_access() {
        let g = GradedDims::new(3, 5);
        assert_eq!(g.degree(-2), 3);
        assert_eq!(g.degree(-1), 5);
        assert_eq!(g.degree(7), 5);
    }

    fn arb_rep() -> impl Strategy<Value = CircleRep> {
        prop::collection::vec((-6i64..=6, 1u64..=5), 1..5).prop_map(CircleRep::from_terms)
    }

    proptest! {
        #[test]
        fn pipeline_matches_closed_form(v in arb_rep()) {
            prop_assert_eq!(ec_cp(&v, true).unwrap(), cp_closed_form(&v).unwrap());
        }

        #[test]
        fn les_is_exact_dimensionwise(v in arb_rep()) {
            for row in les_table(&v).unwrap().degrees {
                prop_assert_eq!(row.kernel + row.rank, row.source);
                prop_assert_eq!(row.rank + row.cokernel, row.target);
            }
        }

        #[test]
        fn unreduced_euler_characteristic(v in arb_rep()) {
            let chi = ec_cp(&v, false).unwrap().euler_char();
            if v.num_components() >= 2 {
                prop_assert_eq!(chi, -(d_invariant(&v) as i64));
            } else {
                prop_assert_eq!(chi, 0);
            }
        }

        #[test]
        fn d_is_half_self_intersection(v in arb_rep()) {
            let d = divisor_of_rep(&tensor_with_w(&v)).unwrap();
            prop_assert_eq!(euler_char(&d), d_invariant(&v) as i64);
        }

        #[test]
        fn sphere_euler_characteristic(terms in prop::collection::vec(((-5i64..=5, -5i64..=5), 1u64..=4), 0..5)) {
            let w = TorusRep::from_terms(terms.into_iter()
                .filter(|((l, m), _)| (*l, *m) != (0, 0))
                .map(|((l, m), k)| (crate::repr::Character::new(l, m), k)));
            let d = divisor_of_rep(&w).unwrap();
            prop_assert_eq!(ec_t2_sphere(&w).unwrap().euler_char(), euler_char(&d));
        }
    }
}
