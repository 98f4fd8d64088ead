use rayon::prelude::*;

use super::claim::scan;
use super::{CongruenceClaim, EngineError};
use crate::arith::is_prime;
use crate::partitions::{generating_series, FamilyKind, PartitionFamily};
use crate::series::Ring;

/// Empirical scan for `count(family, pn + r) ≡ 0 (mod p)` over both family
/// kinds, `1 <= c <= c_max`, `p` in `primes` and every `r` in `[0, p)`.
///
/// A claim is emitted when every argument `<= n_max` in the progression
/// vanishes and at least `min_confirmations` arguments were checked. The
/// results are empirical; none is proven by this search. Output is sorted.
pub fn search_congruences(
    c_max: u32,
    primes: &[u64],
    n_max: usize,
    min_confirmations: usize,
) -> Result<Vec<CongruenceClaim>, EngineError> {
    for &p in primes {
        if !is_prime(p) {
            return Err(EngineError::InvalidClaim(format!("{p} is not prime")));
        }
        if (n_max as u64) < p * min_confirmations as u64 {
            return Err(EngineError::InvalidClaim(format!(
                "n_max {n_max} is below {p} * {min_confirmations}"
            )));
        }
    }
    let mut jobs = Vec::new();
    for kind in [FamilyKind::Cubic, FamilyKind::Overcubic] {
        for c in 1..=c_max {
            for &p in primes {
                jobs.push((PartitionFamily::new(kind, c)?, p));
            }
        }
    }
    let found: Result<Vec<Vec<CongruenceClaim>>, EngineError> = jobs
        .par_iter()
        .map(|&(family, p)| {
            let series = generating_series(family, n_max + 1, Ring::modulo(p)?);
            let mut hits = Vec::new();
            for r in 0..p {
                let claim = CongruenceClaim::new(family, p, p, r)?;
                let res = scan(&claim, &series, n_max);
                if res.holds() && res.checked >= min_confirmations {
                    hits.push(claim);
                }
            }
            Ok(hits)
        })
        .collect();
    let mut claims: Vec<CongruenceClaim> = found?.into_iter().flatten().collect();
    claims.sort();
    claims.dedup();
    Ok(claims)
}
