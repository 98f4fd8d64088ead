use std::fmt;

use num_traits::{ToPrimitive, Zero};

use super::EngineError;
use crate::partitions::{generating_series, FamilyKind, PartitionFamily};
use crate::series::{Ring, TruncatedSeries};

/// The statement `count(family, pn + r) ≡ 0 (mod m)` for all `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CongruenceClaim {
    family: PartitionFamily,
    modulus: u64,
    progression: u64,
    residue: u64,
}

impl CongruenceClaim {
    pub fn new(
        family: PartitionFamily,
        modulus: u64,
        progression: u64,
        residue: u64,
    ) -> Result<Self, EngineError> {
        if modulus < 2 {
            return Err(EngineError::InvalidClaim(format!(
                "modulus {modulus} is below 2"
            )));
        }
        if progression == 0 || residue >= progression {
            return Err(EngineError::InvalidClaim(format!(
                "residue {residue} is not in [0, {progression})"
            )));
        }
        Ok(CongruenceClaim {
            family,
            modulus,
            progression,
            residue,
        })
    }

    pub fn family(&self) -> PartitionFamily {
        self.family
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn progression(&self) -> u64 {
        self.progression
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    /// Arguments `pn + r <= n_max`.
    pub fn indices(&self, n_max: usize) -> impl Iterator<Item = usize> {
        (self.residue as usize..=n_max).step_by(self.progression as usize)
    }
}

impl fmt::Display for CongruenceClaim {
    /// `a_3(7n+4) ≡ 0 (mod 7)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arg = match (self.progression, self.residue) {
            (1, 0) => "n".to_string(),
            (p, 0) => format!("{p}n"),
            (1, r) => format!("n+{r}"),
            (p, r) => format!("{p}n+{r}"),
        };
        write!(f, "{}({arg}) ≡ 0 (mod {})", self.family, self.modulus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    HoldsUpToBound,
    /// Least argument `pn + r` whose count is nonzero modulo `m`.
    Refuted {
        index: usize,
        value: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub claim: CongruenceClaim,
    pub n_max: usize,
    /// Number of progression values examined.
    pub checked: usize,
    pub verdict: Verdict,
}

impl VerificationResult {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::HoldsUpToBound
    }
}

impl fmt::Display for VerificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::HoldsUpToBound => write!(
                f,
                "{}: holds for all arguments <= {} ({} values)",
                self.claim, self.n_max, self.checked
            ),
            Verdict::Refuted { index, value } => {
                let bar = if self.claim.family.kind() == FamilyKind::Overcubic {
                    "ā"
                } else {
                    "a"
                };
                write!(
                    f,
                    "{}: refuted, {bar}_{}({index}) ≡ {value} (mod {})",
                    self.claim,
                    self.claim.family.colors(),
                    self.claim.modulus
                )
            }
        }
    }
}

/// Scans the progression of an already expanded series (reduced mod `m`).
pub(crate) fn scan(
    claim: &CongruenceClaim,
    series: &TruncatedSeries,
    n_max: usize,
) -> VerificationResult {
    let mut checked = 0;
    let mut verdict = Verdict::HoldsUpToBound;
    for idx in claim.indices(n_max) {
        checked += 1;
        let c = series.coeff(idx).expect("series expanded past n_max");
        if !c.is_zero() {
            verdict = Verdict::Refuted {
                index: idx,
                value: c.to_u64().unwrap(),
            };
            break;
        }
    }
    VerificationResult {
        claim: *claim,
        n_max,
        checked,
        verdict,
    }
}

/// Checks the claim for every argument `pn + r <= n_max`.
pub fn verify_claim(
    claim: &CongruenceClaim,
    n_max: usize,
) -> Result<VerificationResult, EngineError> {
    if (n_max as u64) < claim.residue {
        return Err(EngineError::InvalidClaim(format!(
            "n_max {n_max} is below the residue {}",
            claim.residue
        )));
    }
    let ring = Ring::modulo(claim.modulus)?;
    let series = generating_series(claim.family, n_max + 1, ring);
    Ok(scan(claim, &series, n_max))
}
