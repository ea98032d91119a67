use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("zero multiplicity at position {pos}")]
    ZeroMultiplicity { pos: usize },

    #[error(
        "representation contains the trivial character; the sphere value needs a representation with no fixed points"
    )]
    TrivialCharacter,

    #[error("the zero representation is not allowed here")]
    ZeroRepresentation,

    #[error("divisor is not effective (coefficient {coeff} on direction ({lambda},{mu}))")]
    NotEffective { lambda: i64, mu: i64, coeff: i64 },

    #[error("characters ({0},{1}) and ({2},{3}) are parallel; their curves meet in infinitely many points")]
    Parallel(i64, i64, i64, i64),

    #[error("character ({0},{1}) is not a canonical primitive character")]
    NotPrimitive(i64, i64),

    #[error("finite subgroup is not cyclic")]
    NotCyclic,

    #[error("finite subgroup meets H1 nontrivially")]
    MeetsH1,

    #[error("torsion order must be at least 1, got {0}")]
    InvalidOrder(i64),

    #[error("{0:?} is not a Hermite basis of a full-rank lattice")]
    NotHermite([[i64; 2]; 2]),

    #[error("invalid torsion point {num}/{den}")]
    InvalidPoint { num: i64, den: i64 },
}
