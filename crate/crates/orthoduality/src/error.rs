use thiserror::Error;

/// The first law a candidate structure violates, with the offending elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("empty carrier")]
    EmptyCarrier,
    #[error("size cap exceeded: {size} elements, cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("not a poset: {law} fails at ({})", .witness.join(", "))]
    NotAPoset { law: &'static str, witness: Vec<String> },
    #[error("not a lattice: {a} and {b} have no {missing}")]
    NotALattice { a: String, b: String, missing: &'static str },
    #[error("malformed orthocomplement table: {0}")]
    MalformedOcomp(String),
    #[error("NotInvolutive({0}): {0}⊥⊥ ≠ {0}")]
    NotInvolutive(String),
    #[error("ComplementLawFails({0}): {0} ∧ {0}⊥ ≠ 0")]
    ComplementLawFails(String),
    #[error("NotOrderReversing({0}, {1}): {0} ≤ {1} but {1}⊥ ≰ {0}⊥")]
    NotOrderReversing(String, String),
    #[error("DeMorganFails({0}, {1})")]
    DeMorganFails(String, String),
}

impl ValidationError {
    /// Short law identifier used in reports.
    pub fn law(&self) -> &'static str {
        match self {
            ValidationError::EmptyCarrier => "EmptyCarrier",
            ValidationError::SizeCapExceeded { .. } => "SizeCapExceeded",
            ValidationError::NotAPoset { .. } => "NotAPoset",
            ValidationError::NotALattice { .. } => "NotALattice",
            ValidationError::MalformedOcomp(_) => "MalformedOcomp",
            ValidationError::NotInvolutive(_) => "NotInvolutive",
            ValidationError::ComplementLawFails(_) => "ComplementLawFails",
            ValidationError::NotOrderReversing(..) => "NotOrderReversing",
            ValidationError::DeMorganFails(..) => "DeMorganFails",
        }
    }

    pub fn witness(&self) -> Vec<String> {
        match self {
            ValidationError::NotAPoset { witness, .. } => witness.clone(),
            ValidationError::NotALattice { a, b, .. } => vec![a.clone(), b.clone()],
            ValidationError::NotInvolutive(a) | ValidationError::ComplementLawFails(a) => {
                vec![a.clone()]
            }
            ValidationError::NotOrderReversing(a, b) | ValidationError::DeMorganFails(a, b) => {
                vec![a.clone(), b.clone()]
            }
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("size cap exceeded for {what}: {size} > {cap}")]
    SizeCapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("not orthomodular: witness ({0}, {1})")]
    NotOrthomodular(String, String),
    #[error("not a UVO-space: {0}")]
    NotUvo(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error(transparent)]
    Space(#[from] SpaceError),
}

/// Malformed candidate spaces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("specialization order is not a partial order: {law} fails at ({})", .witness.join(", "))]
    NotAPartialOrder { law: &'static str, witness: Vec<String> },
    #[error("IrreflexivityViolated: {0} ⊥ {0}")]
    IrreflexivityViolated(String),
    #[error("orthogonality is not symmetric: {0} ⊥ {1} but not {1} ⊥ {0}")]
    NotSymmetric(String, String),
    #[error("malformed space data: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn cap_check(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::SizeCapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}
