use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{verify_claim, CongruenceClaim, EngineError, VerificationResult};
use crate::arith::{self, admissible_residues, mod_inverse, ResidueCriterion};
use crate::partitions::PartitionFamily;

/// The congruence families that can be instantiated and checked numerically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// `a_2(5^j n + d_j) ≡ 0 (mod 5^⌊j/2⌋)`, `d_j = 8⁻¹ mod 5^j`; `j ∈ {1, 2}`.
    PowersOfFive,
    /// `a_{p-1}(pn + r) ≡ 0 (mod p)` when `8r + 1` is a nonresidue mod `p`.
    NonresidueCubic,
    /// `a_{kp-1}(pn + r) ≡ 0 (mod p)` on the same residues.
    ColorMultiples,
    /// `a_3(7n+4) ≡ 0 (mod 7)` and `a_5(11n+10) ≡ 0 (mod 11)`.
    Isolated,
    /// `ā_{kp-1}(pn + r) ≡ 0 (mod p)` when `r` is a nonresidue mod `p`.
    NonresidueOvercubic,
    /// `a_{pj+1}` inherits Ramanujan's congruence mod `p ∈ {5, 7, 11}`.
    Inherited,
}

impl FromStr for TheoremId {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "1.1" => TheoremId::PowersOfFive,
            "1.2" => TheoremId::NonresidueCubic,
            "cor1.3" | "cor-1.3" | "1.3" => TheoremId::ColorMultiples,
            "1.5" => TheoremId::Isolated,
            "4.1" => TheoremId::NonresidueOvercubic,
            "remarks" => TheoremId::Inherited,
            other => {
                return Err(EngineError::Unsupported(format!(
                    "unknown theorem id `{other}`"
                )))
            }
        })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremId::PowersOfFive => "1.1",
            TheoremId::NonresidueCubic => "1.2",
            TheoremId::ColorMultiples => "cor1.3",
            TheoremId::Isolated => "1.5",
            TheoremId::NonresidueOvercubic => "4.1",
            TheoremId::Inherited => "remarks",
        })
    }
}

fn need_prime(p: Option<u64>, id: TheoremId) -> Result<u64, EngineError> {
    let p = p.ok_or_else(|| EngineError::Unsupported(format!("theorem {id} needs a prime p")))?;
    arith::require_odd_prime(p)?;
    Ok(p)
}

fn colors(c: u64) -> Result<PartitionFamily, EngineError> {
    let c = u32::try_from(c).map_err(|_| EngineError::Unsupported(format!("{c} colors")))?;
    Ok(PartitionFamily::cubic(c)?)
}

/// Instantiates the claims of a theorem for the given parameters.
///
/// `k` is the color multiplier for `cor1.3` and `4.1`, the level `j` for
/// `1.1` and `remarks`; it is ignored by `1.2` and `1.5`.
pub fn theorem_claims(
    id: TheoremId,
    p: Option<u64>,
    k: u64,
) -> Result<Vec<CongruenceClaim>, EngineError> {
    match id {
        TheoremId::PowersOfFive => match k {
            // 5^⌊1/2⌋ = 1: nothing to check.
            1 => Ok(Vec::new()),
            2 => {
                let d2 = mod_inverse(8, 25)?;
                Ok(vec![CongruenceClaim::new(colors(2)?, 5, 25, d2)?])
            }
            j => Err(EngineError::Unsupported(format!(
                "level j = {j} is not supported; only j in {{1, 2}}"
            ))),
        },
        TheoremId::NonresidueCubic | TheoremId::ColorMultiples => {
            let p = need_prime(p, id)?;
            let mult = if id == TheoremId::NonresidueCubic {
                1
            } else {
                k
            };
            if mult == 0 {
                return Err(EngineError::Unsupported("k must be positive".into()));
            }
            let fam = colors(mult * p - 1)?;
            admissible_residues(p, ResidueCriterion::Cubic)?
                .admissible
                .into_iter()
                .map(|r| CongruenceClaim::new(fam, p, p, r))
                .collect()
        }
        TheoremId::Isolated => Ok(vec![
            CongruenceClaim::new(colors(3)?, 7, 7, 4)?,
            CongruenceClaim::new(colors(5)?, 11, 11, 10)?,
        ]),
        TheoremId::NonresidueOvercubic => {
            let p = need_prime(p, id)?;
            if k == 0 {
                return Err(EngineError::Unsupported("k must be positive".into()));
            }
            let c = u32::try_from(k * p - 1)
                .map_err(|_| EngineError::Unsupported("too many colors".into()))?;
            let fam = PartitionFamily::overcubic(c)?;
            admissible_residues(p, ResidueCriterion::Overcubic)?
                .admissible
                .into_iter()
                .map(|r| CongruenceClaim::new(fam, p, p, r))
                .collect()
        }
        TheoremId::Inherited => {
            let p =
                p.ok_or_else(|| EngineError::Unsupported("remarks need p in {5, 7, 11}".into()))?;
            let r = match p {
                5 => 4,
                7 => 5,
                11 => 6,
                _ => {
                    return Err(EngineError::Unsupported(format!(
                        "remarks cover p in {{5, 7, 11}}, got {p}"
                    )))
                }
            };
            Ok(vec![CongruenceClaim::new(colors(p * k + 1)?, p, p, r)?])
        }
    }
}

/// Instantiates and verifies every claim of a theorem up to `n_max`.
pub fn verify_theorem_family(
    id: TheoremId,
    p: Option<u64>,
    k: u64,
    n_max: usize,
) -> Result<Vec<VerificationResult>, EngineError> {
    theorem_claims(id, p, k)?
        .par_iter()
        .map(|c| verify_claim(c, n_max))
        .collect()
}
