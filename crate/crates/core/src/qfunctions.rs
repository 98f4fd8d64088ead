//! Standard q-series: Euler products `f_k = (q^k; q^k)_∞`, Ramanujan's ψ and
//! φ, and expansions of eta-quotients `Π η(δz)^{r_δ}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::series::{Ring, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EtaError {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("{delta} does not divide the level {level}")]
    NotADivisor { delta: u64, level: u64 },
    #[error("eta-quotient has no nonzero exponent")]
    Trivial,
    #[error(
        "sum of delta*r_delta is {sum} ≡ {residue} (mod 24); the leading exponent is not integral"
    )]
    FractionalOffset { sum: i64, residue: i64 },
    #[error("leading exponent {0} is negative")]
    NegativeOffset(i64),
}

/// `(q; q)_∞` to `order`, from the pentagonal number theorem.
fn pentagonal(order: usize, ring: Ring) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::from(0); order];
    if order > 0 {
        coeffs[0] = BigInt::from(1);
    }
    for j in 1usize.. {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let lower = j * (3 * j - 1) / 2;
        let upper = j * (3 * j + 1) / 2;
        if lower >= order {
            break;
        }
        coeffs[lower] = BigInt::from(sign);
        if upper < order {
            coeffs[upper] = BigInt::from(sign);
        }
    }
    TruncatedSeries::from_coeffs(ring, 0, coeffs)
}

/// `f_k = Π_{j≥1} (1 - q^{kj})` to `order`.
pub fn euler_product(k: usize, order: usize, ring: Ring) -> TruncatedSeries {
    assert!(k >= 1, "euler_product needs k >= 1");
    pentagonal(order.div_ceil(k), ring)
        .substitute_power(k)
        .expect("k >= 1")
        .truncate(order)
}

/// `Π f_k^{e_k}` to `order`. Each factor is applied by a sparse multiply or
/// divide, so the cost is `O(Σ|e_k| · order · sqrt(order / k))`.
pub fn euler_quotient(factors: &[(usize, i64)], order: usize, ring: Ring) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(ring, order);
    for &(k, e) in factors.iter().filter(|(_, e)| *e > 0) {
        let f = euler_product(k, order, ring);
        for _ in 0..e {
            acc = acc.mul(&f).expect("same ring");
        }
    }
    for &(k, e) in factors.iter().filter(|(_, e)| *e < 0) {
        let f = euler_product(k, order, ring);
        for _ in 0..e.unsigned_abs() {
            acc = acc.div(&f).expect("f_k has unit constant term");
        }
    }
    acc
}

/// `ψ(q) = Σ_{k≥0} q^{k(k+1)/2}`.
pub fn psi(order: usize, ring: Ring) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::from(0); order];
    for t in (0..)
        .map(|k: usize| k * (k + 1) / 2)
        .take_while(|&t| t < order)
    {
        coeffs[t] = BigInt::from(1);
    }
    TruncatedSeries::from_coeffs(ring, 0, coeffs)
}

/// `φ(q) = 1 + 2 Σ_{j≥1} q^{j²}`.
pub fn phi(order: usize, ring: Ring) -> TruncatedSeries {
    let mut coeffs = vec![BigInt::from(0); order];
    for s in (1..).map(|j: usize| j * j).take_while(|&s| s < order) {
        coeffs[s] = BigInt::from(2);
    }
    if order > 0 {
        coeffs[0] = BigInt::from(1);
    }
    TruncatedSeries::from_coeffs(ring, 0, coeffs)
}

/// Request to expand `Π_{δ|N} η(δz)^{r_δ}` to a given absolute order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaExpansionRequest {
    pub level: u64,
    pub exponents: BTreeMap<u64, i64>,
    pub order: usize,
    pub ring: Ring,
}

impl EtaExpansionRequest {
    /// The integral leading exponent `Σ δ r_δ / 24`.
    pub fn leading_exponent(&self) -> Result<usize, EtaError> {
        if self.level == 0 {
            return Err(EtaError::ZeroLevel);
        }
        if let Some(&delta) = self
            .exponents
            .keys()
            .find(|&&d| d == 0 || !self.level.is_multiple_of(d))
        {
            return Err(EtaError::NotADivisor {
                delta,
                level: self.level,
            });
        }
        if self.exponents.values().all(|&r| r == 0) {
            return Err(EtaError::Trivial);
        }
        let sum: i64 = self.exponents.iter().map(|(&d, &r)| d as i64 * r).sum();
        if sum.rem_euclid(24) != 0 {
            return Err(EtaError::FractionalOffset {
                sum,
                residue: sum.rem_euclid(24),
            });
        }
        if sum < 0 {
            return Err(EtaError::NegativeOffset(sum / 24));
        }
        Ok((sum / 24) as usize)
    }
}

/// Expands the eta-quotient as `q^{Σδr_δ/24} Π f_δ^{r_δ}`, known to `req.order`.
pub fn eta_expansion(req: &EtaExpansionRequest) -> Result<TruncatedSeries, EtaError> {
    let offset = req.leading_exponent()?;
    let factors: Vec<(usize, i64)> = req
        .exponents
        .iter()
        .map(|(&d, &r)| (d as usize, r))
        .collect();
    let body = euler_quotient(&factors, req.order.saturating_sub(offset), req.ring);
    Ok(body.shift(offset))
}
