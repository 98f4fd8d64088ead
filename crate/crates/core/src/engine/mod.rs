//! Congruence verification, Sturm-bound certificates and empirical search.

mod certificate;
mod claim;
mod prove;
mod search;
mod theorems;

use thiserror::Error;

use crate::arith::ArithError;
use crate::modform::ModformError;
use crate::partitions::PartitionError;
use crate::series::SeriesError;

pub use certificate::{CertificateVerdict, FailedStage, SturmCertificate};
pub use claim::{verify_claim, CongruenceClaim, Verdict, VerificationResult};
pub use prove::{certify, prove_isolated, IsolatedCase, IsolatedId};
pub use search::search_congruences;
pub use theorems::{theorem_claims, verify_theorem_family, TheoremId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("invalid claim: {0}")]
    InvalidClaim(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("malformed certificate: {0}")]
    Certificate(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Modform(#[from] ModformError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
