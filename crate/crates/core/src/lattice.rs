//! Finite subgroups of `T^2 = (R/Z)^2`, codimension-one subgroups, and
//! torsion points of the real-torus model of `E` and `E x E`.
//!
//! A finite subgroup `F` is stored through its lattice of trivial characters
//!
//! ```text
//! Λ(F) = { (λ, μ) ∈ Z^2 : λa + μb ∈ Z for all (a, b) ∈ F },
//! ```
//!
//! a full-rank sublattice of `Z^2` of index `|F|`. Its rows in Hermite normal
//! form `M = [[a, b], [0, d]]` (`a, d > 0`, `0 <= b < d`) are unique, and the
//! subgroup itself is `L / Z^2` with `L = M^{-1} Z^2`. Inclusions reverse:
//! `F ⊆ F'` iff `Λ(F') ⊆ Λ(F)`, the meet of subgroups is the sum of lattices
//! and the join is their intersection.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repr::Character;

/// A point of `(R/Z)^2` of finite order, written `(a/n, b/n)` with the common
/// denominator `n` minimal and representatives in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorsionPoint {
    num: [i64; 2],
    den: i64,
}

impl TorsionPoint {
    pub fn new(a: i64, b: i64, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidPoint { num: a, den: n });
        }
        let (a, b) = (a.rem_euclid(n), b.rem_euclid(n));
        let g = a.gcd(&b).gcd(&n);
        Ok(TorsionPoint { num: [a / g, b / g], den: n / g })
    }

    pub fn zero() -> Self {
        TorsionPoint { num: [0, 0], den: 1 }
    }

    pub fn numerators(self) -> [i64; 2] {
        self.num
    }

    pub fn denominator(self) -> i64 {
        self.den
    }

    /// Exact order in `(R/Z)^2`.
    pub fn order(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.den == 1
    }

    pub fn scale(self, k: i64) -> TorsionPoint {
        TorsionPoint::new(self.num[0] * k, self.num[1] * k, self.den).expect("positive denominator")
    }

    /// Whether the character `c` is trivial at this point: `λa + μb ≡ 0 (mod n)`.
    pub fn killed_by(self, c: Character) -> bool {
        (c.lambda * self.num[0] + c.mu * self.num[1]).rem_euclid(self.den) == 0
    }
}

impl std::ops::Add for TorsionPoint {
    type Output = TorsionPoint;

    fn add(self, other: TorsionPoint) -> TorsionPoint {
        let n = self.den.lcm(&other.den);
        let (s, t) = (n / self.den, n / other.den);
        TorsionPoint::new(self.num[0] * s + other.num[0] * t, self.num[1] * s + other.num[1] * t, n)
            .expect("positive denominator")
    }
}

impl fmt::Display for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coord = |n: i64| -> String {
            let g = n.gcd(&self.den);
            if n == 0 {
                "0".into()
            } else if self.den / g == 1 {
                format!("{}", n / g)
            } else {
                format!("{}/{}", n / g, self.den / g)
            }
        };
        write!(f, "({},{})", coord(self.num[0]), coord(self.num[1]))
    }
}

/// Row Hermite normal form of the lattice spanned by `vectors`, or `None` if
/// they do not span a rank-2 lattice.
pub(crate) fn hnf(vectors: &[[i64; 2]]) -> Option<[[i64; 2]; 2]> {
    let mut rows: Vec<[i128; 2]> = vectors.iter().map(|v| [v[0] as i128, v[1] as i128]).collect();
    // Euclid on the first column until a single row has a nonzero entry there.
    let pivot = loop {
        let idx = rows.iter().enumerate().filter(|(_, r)| r[0] != 0).min_by_key(|(_, r)| r[0].abs()).map(|(i, _)| i)?;
        let p = rows[idx];
        let mut done = true;
        for (i, r) in rows.iter_mut().enumerate() {
            if i != idx && r[0] != 0 {
                let q = r[0] / p[0];
                r[0] -= q * p[0];
                r[1] -= q * p[1];
                done &= r[0] == 0;
            }
        }
        if done {
            break rows.remove(idx);
        }
    };
    let d = rows.iter().fold(0i128, |g, r| g.gcd(&r[1]));
    if d == 0 {
        return None;
    }
    let (a, b) = if pivot[0] < 0 { (-pivot[0], -pivot[1]) } else { (pivot[0], pivot[1]) };
    let b = b.rem_euclid(d);
    let narrow = |x: i128| i64::try_from(x).expect("lattice entry overflows i64");
    Some([[narrow(a), narrow(b)], [0, narrow(d)]])
}

/// `{ v ∈ Z^2 : C v ∈ n Z^2 }` for a nonsingular integer matrix `C` with
/// rows `c`, which must contain `n Z^2`-dual data so the result is integral.
fn dual_lattice(c: [[i64; 2]; 2], n: i64) -> [[i64; 2]; 2] {
    let det = c[0][0] as i128 * c[1][1] as i128 - c[0][1] as i128 * c[1][0] as i128;
    assert!(det != 0, "singular lattice basis");
    let n = n as i128;
    // Columns of n * C^{-1} = n * adj(C) / det(C).
    let adj = [[c[1][1] as i128, -(c[0][1] as i128)], [-(c[1][0] as i128), c[0][0] as i128]];
    let col = |j: usize| -> [i64; 2] {
        let x = n * adj[0][j];
        let y = n * adj[1][j];
        assert!(x % det == 0 && y % det == 0, "dual lattice is not integral");
        [i64::try_from(x / det).expect("overflow"), i64::try_from(y / det).expect("overflow")]
    };
    hnf(&[col(0), col(1)]).expect("dual of a full-rank lattice has full rank")
}

/// A finite subgroup of `T^2`, stored as the Hermite normal form of its
/// lattice of trivial characters. Equal subgroups have equal representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[[i64; 2]; 2]", try_from = "[[i64; 2]; 2]")]
pub struct FiniteSubgroup {
    basis: [[i64; 2]; 2],
}

impl From<FiniteSubgroup> for [[i64; 2]; 2] {
    fn from(f: FiniteSubgroup) -> Self {
        f.basis
    }
}

impl TryFrom<[[i64; 2]; 2]> for FiniteSubgroup {
    type Error = Error;

    fn try_from(basis: [[i64; 2]; 2]) -> Result<Self> {
        match hnf(&basis) {
            Some(h) if h == basis => Ok(FiniteSubgroup { basis }),
            _ => Err(Error::NotHermite(basis)),
        }
    }
}

impl FiniteSubgroup {
    pub fn trivial() -> Self {
        FiniteSubgroup { basis: [[1, 0], [0, 1]] }
    }

    /// The full `n`-torsion subgroup `T^2[n] ≅ (Z/n)^2`.
    pub fn full_torsion(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder(n));
        }
        Ok(FiniteSubgroup { basis: [[n, 0], [0, n]] })
    }

    /// The cyclic subgroup `<(1/n, 0)>` of `H2 = T x 1`.
    pub fn cyclic(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder(n));
        }
        Ok(FiniteSubgroup { basis: [[n, 0], [0, 1]] })
    }

    /// Subgroup generated by the given torsion points.
    pub fn from_generators(gens: &[TorsionPoint]) -> Self {
        let n = gens.iter().fold(1i64, |acc, g| acc.lcm(&g.den));
        let mut vectors = vec![[n, 0], [0, n]];
        vectors.extend(gens.iter().map(|g| {
            let s = n / g.den;
            [g.num[0] * s, g.num[1] * s]
        }));
        let scaled = hnf(&vectors).expect("contains n Z^2");
        FiniteSubgroup { basis: dual_lattice(scaled, n) }
    }

    /// The common kernel of a set of characters, if it is finite.
    pub fn from_annihilator(chars: &[Character]) -> Option<Self> {
        let vectors: Vec<[i64; 2]> = chars.iter().map(|c| [c.lambda, c.mu]).collect();
        hnf(&vectors).map(|basis| FiniteSubgroup { basis })
    }

    /// `ker z_v ∩ T^2[m]`.
    pub fn kernel_torsion(v: Character, m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::InvalidOrder(m));
        }
        Ok(Self::from_annihilator(&[v, Character::new(m, 0), Character::new(0, m)]).expect("full rank"))
    }

    /// Hermite basis `[[a, b], [0, d]]` of the trivial-character lattice.
    pub fn basis(&self) -> [[i64; 2]; 2] {
        self.basis
    }

    pub fn order(&self) -> u64 {
        (self.basis[0][0] * self.basis[1][1]) as u64
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    /// Whether the character `c` is trivial on every element.
    pub fn kills(&self, c: Character) -> bool {
        let [[a, b], [_, d]] = self.basis;
        if c.lambda % a != 0 {
            return false;
        }
        (c.mu - (c.lambda / a) * b) % d == 0
    }

    pub fn contains_point(&self, p: TorsionPoint) -> bool {
        let [[a, b], [_, d]] = self.basis;
        p.killed_by(Character::new(a, b)) && p.killed_by(Character::new(0, d))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &FiniteSubgroup) -> bool {
        let [[a, b], [_, d]] = self.basis;
        other.kills(Character::new(a, b)) && other.kills(Character::new(0, d))
    }

    /// Intersection of subgroups.
    pub fn meet(&self, other: &FiniteSubgroup) -> FiniteSubgroup {
        let [r0, r1] = self.basis;
        let [s0, s1] = other.basis;
        FiniteSubgroup { basis: hnf(&[r0, r1, s0, s1]).expect("full rank") }
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &FiniteSubgroup) -> FiniteSubgroup {
        let mut gens = self.generators();
        gens.extend(other.generators());
        FiniteSubgroup::from_generators(&gens)
    }

    /// Invariant factors `(s1, s2)` with `s1 | s2` and `F ≅ Z/s1 x Z/s2`.
    pub fn invariant_factors(&self) -> (u64, u64) {
        let [[a, b], [_, d]] = self.basis;
        let s1 = a.gcd(&b).gcd(&d);
        (s1 as u64, (a * d / s1) as u64)
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors().0 == 1
    }

    /// Whether `F ∩ H1 = {1}` for `H1 = 1 x T`. `F ∩ H1` is the finite
    /// subgroup with trivial-character lattice `Λ(F) + Z(1,0)`, which is all
    /// of `Z^2` exactly when `gcd(b, d) = 1`.
    pub fn meets_h1_trivially(&self) -> bool {
        let [[_, b], [_, d]] = self.basis;
        b.gcd(&d) == 1
    }

    /// At most two generators, read off the columns of `M^{-1}`.
    pub fn generators(&self) -> Vec<TorsionPoint> {
        let [[a, b], [_, d]] = self.basis;
        [TorsionPoint::new(1, 0, a), TorsionPoint::new(-b, a, a * d)]
            .into_iter()
            .map(|p| p.expect("positive"))
            .filter(|p| !p.is_zero())
            .collect()
    }

    /// All elements, `|F|` of them.
    pub fn elements(&self) -> Vec<TorsionPoint> {
        let [[a, b], [_, d]] = self.basis;
        let mut out = Vec::with_capacity((a * d) as usize);
        for i in 0..a {
            for j in 0..d {
                // i (1/a, 0) + j (-b/(ad), 1/d)
                out.push(TorsionPoint::new(i * d - j * b, j * a, a * d).expect("positive"));
            }
        }
        out.sort();
        out
    }

    /// Some element of order `|F|`, if `F` is cyclic.
    pub fn cyclic_generator(&self) -> Option<TorsionPoint> {
        if !self.is_cyclic() {
            return None;
        }
        let n = self.order() as i64;
        let [[a, _], _] = self.basis;
        let [g1, g2] = [
            TorsionPoint::new(1, 0, a).expect("positive"),
            TorsionPoint::new(-self.basis[0][1], a, n).expect("positive"),
        ];
        // The coset g2 + <g1> always contains a generator of a cyclic group
        // generated by g1 and g2.
        (0..a.max(2)).map(|t| g2 + g1.scale(t)).find(|p| p.order() == n)
    }
}

impl PartialOrd for FiniteSubgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by subgroup order first, then by Hermite basis.
impl Ord for FiniteSubgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order()).then_with(|| self.basis.cmp(&other.basis))
    }
}

impl fmt::Display for FiniteSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.generators();
        if gens.is_empty() {
            return f.write_str("trivial");
        }
        f.write_str("<")?;
        for (i, g) in gens.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// The subgroup `H_v^j = ker z_v^j` with identity component `H_v = ker z_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodimOneSubgroup {
    v: Character,
    components: u64,
}

impl CodimOneSubgroup {
    pub fn new(v: Character, components: u64) -> Result<Self> {
        if !v.is_canonical_primitive() {
            return Err(Error::NotPrimitive(v.lambda, v.mu));
        }
        if components == 0 {
            return Err(Error::InvalidOrder(0));
        }
        Ok(CodimOneSubgroup { v, components })
    }

    /// `H1 = 1 x T = ker z_(1,0)`.
    pub fn h1() -> Self {
        CodimOneSubgroup { v: Character::new(1, 0), components: 1 }
    }

    /// `H2 = T x 1 = ker z_(0,1)`.
    pub fn h2() -> Self {
        CodimOneSubgroup { v: Character::new(0, 1), components: 1 }
    }

    pub fn direction(&self) -> Character {
        self.v
    }

    pub fn components(&self) -> u64 {
        self.components
    }

    /// The character `z_v^j` whose kernel this is.
    pub fn character(&self) -> Character {
        self.v.scale(self.components as i64)
    }
}

/// `F ⊆ H_v^j`.
pub fn codim1_contains(f: &FiniteSubgroup, h: &CodimOneSubgroup) -> bool {
    f.kills(h.character())
}

/// `n_v(F)`: the least `n` with `F ⊆ H_v^n`, i.e. `<F, H_v> = H_v^n`.
pub fn n_index(f: &FiniteSubgroup, v: Character) -> Result<u64> {
    if v.content() != 1 {
        return Err(Error::NotPrimitive(v.lambda, v.mu));
    }
    let n = (1..=f.order()).find(|&n| f.kills(v.scale(n as i64))).expect("|F| v is trivial on F");
    Ok(n)
}

/// For a finite `F` with `F ∩ H1 = 1`, a connected codimension-one subgroup
/// `H ⊇ F` with `H ∩ H1 = 1`.
///
/// Pick a generator `Q = (p/n, q/n)`; `p` is prime to `n`, so Bézout gives
/// `rn + sp = 1` and `sQ = (1/n, c/n)` with `c = sq mod n`. `H` is the image
/// of the line through `(1, c)`, i.e. the kernel of the character `(c, -1)`.
pub fn enclosing_codim1(f: &FiniteSubgroup) -> Result<CodimOneSubgroup> {
    if !f.is_cyclic() {
        return Err(Error::NotCyclic);
    }
    if !f.meets_h1_trivially() {
        return Err(Error::MeetsH1);
    }
    let n = f.order() as i64;
    let q = f.cyclic_generator().expect("cyclic");
    let s = n / q.denominator();
    let [p, qy] = q.numerators().map(|x| x * s);
    let bezout = n.extended_gcd(&p);
    debug_assert_eq!(bezout.gcd, 1);
    let c = (bezout.y * qy).rem_euclid(n);
    let v = Character::new(c, -1).canonical_sign();
    let h = CodimOneSubgroup::new(v, 1)?;
    debug_assert!(codim1_contains(f, &h));
    Ok(h)
}

/// All points of `E[n]`, reduced.
pub fn torsion_points(n: i64) -> Result<Vec<TorsionPoint>> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    let mut out = Vec::with_capacity((n * n) as usize);
    for a in 0..n {
        for b in 0..n {
            out.push(TorsionPoint::new(a, b, n)?);
        }
    }
    Ok(out)
}

/// `|E<n>|`, the number of points of exact order `n`, by enumeration.
pub fn exact_order_count(n: i64) -> Result<u64> {
    Ok(torsion_points(n)?.into_iter().filter(|p| p.order() == n).count() as u64)
}

/// Number of points of `C_v1 ∩ C_v2` on `E x E = (R/Z)^4`, where
/// `C_v = { (P, Q) : λP + μQ = e }`, counted by brute force.
///
/// With `D = |det(v1, v2)|` the intersection is the kernel of an integer
/// matrix whose adjugate multiplies it to `D·I`, so every solution is
/// `D`-torsion and only `D^4` candidates need checking.
pub fn intersection_count_oracle(v1: Character, v2: Character) -> Result<u64> {
    let d = v1.det(v2).abs();
    if d == 0 {
        return Err(Error::Parallel(v1.lambda, v1.mu, v2.lambda, v2.mu));
    }
    let vanishes = |c: Character, p: i64, q: i64| (c.lambda * p + c.mu * q).rem_euclid(d) == 0;
    let mut count = 0u64;
    for p1 in 0..d {
        for q1 in 0..d {
            if !(vanishes(v1, p1, q1) && vanishes(v2, p1, q1)) {
                continue;
            }
            for p2 in 0..d {
                for q2 in 0..d {
                    if vanishes(v1, p2, q2) && vanishes(v2, p2, q2) {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn pt(a: i64, b: i64, n: i64) -> TorsionPoint {
        TorsionPoint::new(a, b, n).unwrap()
    }

    fn gen(points: &[(i64, i64, i64)]) -> FiniteSubgroup {
        let gens: Vec<_> = points.iter().map(|&(a, b, n)| pt(a, b, n)).collect();
        FiniteSubgroup::from_generators(&gens)
    }

    /// Closure of the generators under addition, without any lattice algebra.
    fn closure(gens: &[TorsionPoint]) -> BTreeSet<TorsionPoint> {
        let mut set = BTreeSet::from([TorsionPoint::zero()]);
        loop {
            let mut grown = set.clone();
            for x in &set {
                for g in gens {
                    grown.insert(*x + *g);
                }
            }
            if grown.len() == set.len() {
                return set;
            }
            set = grown;
        }
    }

    fn element_set(f: &FiniteSubgroup) -> BTreeSet<TorsionPoint> {
        f.elements().into_iter().collect()
    }

    #[test]
    fn hermite_basis_validation() {
        let f = FiniteSubgroup::full_torsion(2).unwrap();
        assert_eq!(FiniteSubgroup::try_from(<[[i64; 2]; 2]>::from(f)), Ok(f));
        assert!(FiniteSubgroup::try_from([[2, 3], [0, 2]]).is_err());
        assert!(FiniteSubgroup::try_from([[0, 0], [0, 1]]).is_err());
        assert!(FiniteSubgroup::try_from([[-1, 0], [0, 1]]).is_err());
    }

    #[test]
    fn generator_examples() {
        assert_eq!(gen(&[(1, 1, 2)]).order(), 2);
        assert_eq!(FiniteSubgroup::from_generators(&[]), FiniteSubgroup::trivial());
        let full = gen(&[(1, 0, 2), (0, 1, 2)]);
        assert_eq!(full.order(), 4);
        assert_eq!(closure(&[pt(1, 0, 2), pt(0, 1, 2)]).len(), 4);
        assert_eq!(full, FiniteSubgroup::full_torsion(2).unwrap());
    }

    #[test]
    fn meet_join_examples() {
        let a = gen(&[(1, 0, 2)]);
        let b = gen(&[(0, 1, 2)]);
        assert_eq!(a.join(&b), FiniteSubgroup::full_torsion(2).unwrap());
        assert_eq!(a.meet(&b), FiniteSubgroup::trivial());
        let f = gen(&[(1, 2, 6)]);
        assert_eq!(f.meet(&FiniteSubgroup::trivial()), FiniteSubgroup::trivial());
        assert!(!FiniteSubgroup::full_torsion(2).unwrap().is_cyclic());
        assert!(gen(&[(1, 2, 6)]).is_cyclic());
        assert!(f.contains(&FiniteSubgroup::trivial()));
        assert!(FiniteSubgroup::full_torsion(6).unwrap().contains(&f));
        assert!(!a.contains(&b));
    }

    #[test]
    fn codim1_examples() {
        let f = gen(&[(1, 1, 2)]);
        assert!(codim1_contains(&f, &CodimOneSubgroup::new(Character::new(1, 1), 1).unwrap()));
        assert!(!codim1_contains(&f, &CodimOneSubgroup::h1()));
        assert!(codim1_contains(&FiniteSubgroup::trivial(), &CodimOneSubgroup::h1()));
        assert!(CodimOneSubgroup::new(Character::new(-1, 0), 1).is_err());
        assert!(CodimOneSubgroup::new(Character::new(1, 0), 0).is_err());
    }

    #[test]
    fn n_index_examples() {
        assert_eq!(n_index(&gen(&[(1, 1, 2)]), Character::new(1, 0)).unwrap(), 2);
        assert_eq!(n_index(&FiniteSubgroup::trivial(), Character::new(3, 7)).unwrap(), 1);
        assert_eq!(n_index(&gen(&[(1, 2, 3)]), Character::new(2, -1)).unwrap(), 1);
        assert!(n_index(&FiniteSubgroup::trivial(), Character::new(2, 2)).is_err());
    }

    #[test]
    fn enclosing_codim1_examples() {
        let h = enclosing_codim1(&gen(&[(1, 2, 3)])).unwrap();
        assert_eq!(h.direction(), Character::new(2, -1));
        assert_eq!(enclosing_codim1(&FiniteSubgroup::trivial()).unwrap().direction(), Character::new(0, 1));
        assert_eq!(enclosing_codim1(&gen(&[(1, 0, 2)])).unwrap().direction(), Character::new(0, 1));
        assert_eq!(enclosing_codim1(&FiniteSubgroup::full_torsion(2).unwrap()), Err(Error::NotCyclic));
        assert_eq!(enclosing_codim1(&gen(&[(0, 1, 3)])), Err(Error::MeetsH1));
    }

    #[test]
    fn torsion_examples() {
        assert_eq!(exact_order_count(1).unwrap(), 1);
        assert_eq!(torsion_points(2).unwrap().len(), 4);
        assert_eq!(exact_order_count(2).unwrap(), 3);
        assert_eq!(exact_order_count(6).unwrap(), 24);
        assert!(torsion_points(0).is_err());
    }

    #[test]
    fn oracle_examples() {
        let c = Character::new;
        assert_eq!(intersection_count_oracle(c(1, 1), c(0, 1)).unwrap(), 1);
        assert_eq!(intersection_count_oracle(c(2, 1), c(0, 1)).unwrap(), 4);
        assert_eq!(intersection_count_oracle(c(3, 1), c(1, 1)).unwrap(), 4);
        assert!(intersection_count_oracle(c(1, 1), c(2, 2)).is_err());
    }

    #[test]
    fn oracle_matches_det_squared_small() {
        let prims: Vec<Character> = (-4..=4)
            .flat_map(|l| (-4..=4).map(move |m| Character::new(l, m)))
            .filter(|c| c.is_canonical_primitive())
            .collect();
        for &v in &prims {
            for &w in &prims {
                let d = v.det(w);
                if d != 0 && d.abs() <= 5 {
                    assert_eq!(intersection_count_oracle(v, w).unwrap(), (d * d) as u64, "{v} {w}");
                }
            }
        }
    }

    #[test]
    fn h1_check_matches_elements() {
        for f in FiniteSubgroup::full_torsion(12).unwrap().elements() {
            let sub = FiniteSubgroup::from_generators(&[f]);
            let by_elements = sub.elements().iter().all(|p| p.numerators()[0] != 0 || p.is_zero());
            assert_eq!(sub.meets_h1_trivially(), by_elements, "{sub}");
        }
    }

    fn arb_points() -> impl Strategy<Value = Vec<TorsionPoint>> {
        prop::collection::vec((0i64..12, 0i64..12, 1i64..=12), 0..3)
            .prop_map(|v| v.into_iter().map(|(a, b, n)| pt(a, b, n)).collect())
    }

    proptest! {
        #[test]
        fn lattice_form_matches_closure(gens in arb_points()) {
            let f = FiniteSubgroup::from_generators(&gens);
            let elems = element_set(&f);
            prop_assert_eq!(elems.len() as u64, f.order());
            prop_assert_eq!(&elems, &closure(&gens));
            for p in &elems {
                prop_assert!(f.contains_point(*p));
            }
            for g in f.generators() {
                prop_assert!(elems.contains(&g));
            }
        }

        #[test]
        fn meet_and_join_match_sets(g1 in arb_points(), g2 in arb_points()) {
            let (f1, f2) = (FiniteSubgroup::from_generators(&g1), FiniteSubgroup::from_generators(&g2));
            let (s1, s2) = (element_set(&f1), element_set(&f2));
            let inter: BTreeSet<_> = s1.intersection(&s2).copied().collect();
            prop_assert_eq!(element_set(&f1.meet(&f2)), inter);
            let both: Vec<_> = g1.iter().chain(g2.iter()).copied().collect();
            prop_assert_eq!(element_set(&f1.join(&f2)), closure(&both));
            prop_assert_eq!(f1.contains(&f2), s2.is_subset(&s1));
        }

        #[test]
        fn cyclicity_matches_max_order(gens in arb_points()) {
            let f = FiniteSubgroup::from_generators(&gens);
            let max_order = f.elements().iter().map(|p| p.order()).max().unwrap() as u64;
            prop_assert_eq!(f.is_cyclic(), max_order == f.order());
            if let Some(g) = f.cyclic_generator() {
                prop_assert_eq!(g.order() as u64, f.order());
            }
        }

        #[test]
        fn n_index_is_minimal(gens in arb_points(), l in -6i64..=6, m in -6i64..=6) {
            let v = Character::new(l, m);
            prop_assume!(v.is_canonical_primitive());
            let f = FiniteSubgroup::from_generators(&gens);
            let n = n_index(&f, v).unwrap();
            prop_assert!(codim1_contains(&f, &CodimOneSubgroup::new(v, n).unwrap()));
            for k in 1..n {
                prop_assert!(!codim1_contains(&f, &CodimOneSubgroup::new(v, k).unwrap()));
            }
        }

        #[test]
        fn fixed_dim_shrinks_as_subgroup_grows(g1 in arb_points(), g2 in arb_points(),
                terms in prop::collection::vec(((-6i64..=6, -6i64..=6), 1u64..=3), 0..5)) {
            use crate::repr::TorusRep;
            let w = TorusRep::from_terms(terms.into_iter().map(|((l, m), k)| (Character::new(l, m), k)));
            let f = FiniteSubgroup::from_generators(&g1);
            let bigger = f.join(&FiniteSubgroup::from_generators(&g2));
            prop_assert!(w.fixed_dim(&bigger) <= w.fixed_dim(&f));
        }
    }
}
