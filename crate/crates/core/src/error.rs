use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group order {order} exceeds the capacity bound {bound}")]
    Capacity { order: usize, bound: usize },
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("dihedral parameter must be at least 2, got {0}")]
    DihedralParam(usize),
    #[error("swap extension needs an odd m >= 3, got {0}")]
    SwapExtensionParam(usize),
    #[error("operation requires a dihedral group")]
    NotDihedral,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("generating set is not inverse-closed ({0} lacks its inverse)")]
    NotInverseClosed(String),
    #[error("identity element may not appear in the generating set")]
    IdentityInGeneratingSet,
    #[error("set does not generate the group")]
    NotGenerating,
    #[error("rotation is not a single full cycle on the generating set")]
    NotACycle,
    #[error("map is not regular")]
    NotRegular,
    #[error("cosets of {0} do not form a block system")]
    NotBlockSystem(String),
    #[error("generating set meets the normal subgroup at {0}")]
    GeneratorInSubgroup(String),
    #[error("quadruple axiom violated: {0}")]
    NotAdmissible(String),
    #[error("family parameter out of range: {0}")]
    FamilyParam(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
