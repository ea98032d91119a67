//! Exact computations of rational circle-equivariant elliptic cohomology of
//! complex projective spaces `CP(V)`, and of torus-equivariant elliptic
//! cohomology of representation spheres.
//!
//! The pipeline runs entirely on integer data:
//!
//! 1. a circle representation `V` is tensored with the natural character `w`
//!    of `H1 = 1 x T`, giving a representation of `T^2` ([`repr`]);
//! 2. its characters define a divisor on `X = E x E` spanned by fiber-type
//!    curves `C_v`, with intersection numbers `C_v . C_w = det(v, w)^2`
//!    ([`divisor`]);
//! 3. Riemann-Roch, Kodaira vanishing and Serre duality give the cohomology
//!    dimensions of `O(-D)`, and a long exact sequence turns those into the
//!    answer for `CP(V)` ([`ellcoh`]).
//!
//! Supporting pieces: the lattice of finite subgroups of `T^2` and a
//! brute-force torsion-point oracle ([`lattice`]), and the combinatorics of
//! Euler classes and natural-cell models ([`algmodel`]).

pub mod algmodel;
pub mod divisor;
pub mod ellcoh;
pub mod error;
pub mod lattice;
pub mod poly;
pub mod repr;

pub use error::{Error, Result};
