//! Elementary number theory: primality for small moduli, quadratic
//! (non)residues, the Kronecker symbol and modular inverses.

use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{a} has no inverse modulo {m} (gcd {gcd})")]
    NotInvertible { a: i64, m: u64, gcd: u64 },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

pub fn require_odd_prime(p: u64) -> Result<(), ArithError> {
    if p != 2 && is_prime(p) {
        Ok(())
    } else {
        Err(ArithError::NotOddPrime(p))
    }
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol by Euler's criterion, `a^((p-1)/2) mod p`.
fn euler_criterion(a: i64, p: u64) -> i8 {
    let a = a.rem_euclid(p as i64) as u64;
    match pow_mod(a, (p - 1) / 2, p) {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// True iff `a mod p` is nonzero and not a square modulo the odd prime `p`.
pub fn is_quadratic_nonresidue(a: i64, p: u64) -> Result<bool, ArithError> {
    require_odd_prime(p)?;
    Ok(euler_criterion(a, p) == -1)
}

/// The Kronecker symbol `(a | n)`, defined for all integers.
pub fn kronecker(a: i64, n: i64) -> i8 {
    let mut a = a as i128;
    let mut n = n as i128;
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let mut sign: i8 = 1;
    let twos = n.trailing_zeros();
    n >>= twos;
    // (a|2) = 1 for a ≡ ±1 (mod 8), -1 for a ≡ ±3 (mod 8).
    if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
        sign = -sign;
    }
    if n < 0 {
        n = -n;
        if a < 0 {
            sign = -sign;
        }
    }
    // n is now odd and positive: Jacobi symbol.
    a = a.rem_euclid(n);
    while a != 0 {
        let tz = a.trailing_zeros();
        a >>= tz;
        if tz % 2 == 1 && matches!(n % 8, 3 | 5) {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Inverse of `a` modulo `m`, in `[0, m)`.
pub fn mod_inverse(a: i64, m: u64) -> Result<u64, ArithError> {
    if m < 2 {
        return Err(ArithError::InvalidModulus(m));
    }
    let mi = m as i128;
    let e = (a as i128).rem_euclid(mi).extended_gcd(&mi);
    if e.gcd != 1 {
        return Err(ArithError::NotInvertible {
            a,
            m,
            gcd: e.gcd as u64,
        });
    }
    Ok(e.x.rem_euclid(mi) as u64)
}

/// Which residue criterion selects the progressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ResidueCriterion {
    /// `8r + 1` must be a quadratic nonresidue (generalized cubic partitions).
    Cubic,
    /// `r` itself must be a quadratic nonresidue (generalized overcubic partitions).
    Overcubic,
}

impl ResidueCriterion {
    /// The quantity whose quadratic character is tested for residue `r`.
    pub fn tested_value(self, r: u64) -> i64 {
        match self {
            ResidueCriterion::Cubic => 8 * r as i64 + 1,
            ResidueCriterion::Overcubic => r as i64,
        }
    }
}

impl fmt::Display for ResidueCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidueCriterion::Cubic => write!(f, "8r+1"),
            ResidueCriterion::Overcubic => write!(f, "r"),
        }
    }
}

/// Outcome of testing one residue `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueJustification {
    pub residue: u64,
    /// The tested value reduced modulo `p`.
    pub tested: u64,
    /// Its Legendre symbol modulo `p`.
    pub character: i8,
}

impl ResidueJustification {
    pub fn admitted(&self) -> bool {
        self.character == -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassReport {
    pub prime: u64,
    pub criterion: ResidueCriterion,
    pub admissible: Vec<u64>,
    /// One entry per `r` in `[1, p-1]`.
    pub justification: Vec<ResidueJustification>,
}

/// Residues `r` in `[1, p-1]` passing the criterion's nonresidue test.
pub fn admissible_residues(
    p: u64,
    criterion: ResidueCriterion,
) -> Result<ResidueClassReport, ArithError> {
    require_odd_prime(p)?;
    let justification: Vec<ResidueJustification> = (1..p)
        .map(|r| {
            let v = criterion.tested_value(r);
            ResidueJustification {
                residue: r,
                tested: v.rem_euclid(p as i64) as u64,
                character: euler_criterion(v, p),
            }
        })
        .collect();
    let admissible = justification
        .iter()
        .filter(|j| j.admitted())
        .map(|j| j.residue)
        .collect();
    Ok(ResidueClassReport {
        prime: p,
        criterion,
        admissible,
        justification,
    })
}
