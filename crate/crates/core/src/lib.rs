//! Cohomological representations of `U(p,q)`, `O(p,q)` and `Sp(p,q)`:
//! parametrisation by partitions, `(g, K)`-cohomology, isolation in the
//! automorphic spectrum and the accompanying numerical bounds.

pub mod autdegrees;
pub mod characters;
pub mod cohomreps;
pub mod glrestrict;
pub mod isolation;
pub mod partitions;
pub mod poly;

pub use cohomreps::{CohRep, Family, FamilyKind};
pub use partitions::Partition;
pub use poly::Poly;

/// Any error raised by the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Partition(#[from] partitions::PartitionError),
    #[error(transparent)]
    Character(#[from] characters::CharacterError),
    #[error(transparent)]
    CohRep(#[from] cohomreps::CohRepError),
    #[error(transparent)]
    AutDegree(#[from] autdegrees::AutDegreeError),
    #[error(transparent)]
    GL(#[from] glrestrict::GLError),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        use autdegrees::AutDegreeError as A;
        use characters::CharacterError as C;
        use cohomreps::CohRepError as R;
        use glrestrict::GLError as G;
        use partitions::PartitionError as P;
        fn partition(e: &P) -> &'static str {
            match e {
                P::NotDecreasing(_) => "NotDecreasing",
                P::BoxOverflow { .. } => "BoxOverflow",
                P::NotNested { .. } => "NotNested",
                P::NotCompatible { .. } => "NotCompatible",
                P::NotOrthogonal { .. } => "NotOrthogonal",
                P::PalindromeViolation { .. } => "PalindromeViolation",
                P::Parse(_) => "ParseError",
            }
        }
        fn character(e: &C) -> &'static str {
            match e {
                C::InexactDivision { .. } => "InexactDivision",
                C::RankMismatch { .. } => "RankMismatch",
                C::NotARepresentation => "NotARepresentation",
                C::Overflow(_) => "Overflow",
            }
        }
        match self {
            Error::Partition(e) => partition(e),
            Error::Character(e) => character(e),
            Error::CohRep(e) => match e {
                R::Partition(e) => partition(e),
                R::Character(e) => character(e),
                R::BadSignature { .. } => "BadSignature",
                R::WrongFamily { .. } => "WrongFamily",
                R::FlagNotAllowed { .. } => "FlagNotAllowed",
                R::UnknownFamily(_) => "UnknownFamily",
            },
            Error::AutDegree(e) => match e {
                A::NotADivisor { .. } => "NotADivisor",
                A::OutOfRange { .. } => "OutOfRange",
                A::SignatureMismatch { .. } => "SignatureMismatch",
                A::BadSignature { .. } => "BadSignature",
            },
            Error::GL(e) => match e {
                G::BadBlockSize(_) => "BadBlockSize",
                G::ZeroLength => "ZeroLength",
                G::BadAlpha(_) => "BadAlpha",
                G::BadRank { .. } => "BadRank",
                G::DomainError { .. } => "DomainError",
                G::Parse(_) => "ParseError",
            },
        }
    }
}
