//! Generalized cubic partitions `a_c(n)` and generalized overcubic partitions
//! `ā_c(n)`.
//!
//! Counts are available two independent ways: from the generating function
//! (a quotient of Euler products, see [`generating_series`]) and from a
//! combinatorial dynamic program over part kinds ([`counts_direct`]). The
//! identity checks below compare q-series built from different factorizations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arith::{self, ArithError};
use crate::qfunctions::{euler_quotient, psi};
use crate::series::{Ring, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("number of colors must be at least 1")]
    NoColors,
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown family `{0}` (expected cubic or overcubic)")]
    UnknownFamily(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Partitions whose even parts come in `c` colors.
    Cubic,
    /// As [`FamilyKind::Cubic`], and the first occurrence of each kind of part
    /// may be overlined.
    Overcubic,
}

impl FromStr for FamilyKind {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cubic" => Ok(FamilyKind::Cubic),
            "overcubic" => Ok(FamilyKind::Overcubic),
            other => Err(PartitionError::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyKind::Cubic => "cubic",
            FamilyKind::Overcubic => "overcubic",
        })
    }
}

/// A counting function: `a_c` for [`FamilyKind::Cubic`], `ā_c` for
/// [`FamilyKind::Overcubic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionFamily {
    kind: FamilyKind,
    colors: u32,
}

impl PartitionFamily {
    pub fn new(kind: FamilyKind, colors: u32) -> Result<Self, PartitionError> {
        if colors == 0 {
            return Err(PartitionError::NoColors);
        }
        Ok(PartitionFamily { kind, colors })
    }

    pub fn cubic(colors: u32) -> Result<Self, PartitionError> {
        Self::new(FamilyKind::Cubic, colors)
    }

    pub fn overcubic(colors: u32) -> Result<Self, PartitionError> {
        Self::new(FamilyKind::Overcubic, colors)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    /// Exponents `(k, e)` of the Euler-product form `Π f_k^e`.
    pub fn eta_factors(&self) -> Vec<(usize, i64)> {
        let c = self.colors as i64;
        match self.kind {
            // 1 / (f1 f2^(c-1))
            FamilyKind::Cubic => vec![(1, -1), (2, 1 - c)],
            // f4^(c-1) / (f1^2 f2^(2c-3))
            FamilyKind::Overcubic => vec![(1, -2), (2, 3 - 2 * c), (4, c - 1)],
        }
    }
}

impl fmt::Display for PartitionFamily {
    /// `a_3` or `ā_3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Cubic => write!(f, "a_{}", self.colors),
            FamilyKind::Overcubic => write!(f, "ā_{}", self.colors),
        }
    }
}

/// The generating function of the family, known to `order`.
pub fn generating_series(fam: PartitionFamily, order: usize, ring: Ring) -> TruncatedSeries {
    euler_quotient(&fam.eta_factors(), order, ring)
}

/// Exact counts for `0..=n_max` by dynamic programming over kinds of parts.
///
/// An odd part size is one kind; an even part size is `c` kinds (one per
/// color). Each kind may be used any number of times; for overcubic
/// partitions each kind additionally has one optional overlined copy.
pub fn counts_direct(fam: PartitionFamily, n_max: usize) -> Vec<BigInt> {
    let mut dp = vec![BigInt::zero(); n_max + 1];
    dp[0] = BigInt::one();
    for part in 1..=n_max {
        let kinds = if part % 2 == 0 { fam.colors } else { 1 };
        for _ in 0..kinds {
            for i in part..=n_max {
                let (lo, hi) = dp.split_at_mut(i);
                hi[0] += &lo[i - part];
            }
            if fam.kind == FamilyKind::Overcubic {
                for i in (part..=n_max).rev() {
                    let (lo, hi) = dp.split_at_mut(i);
                    hi[0] += &lo[i - part];
                }
            }
        }
    }
    dp
}

/// The single count `a_c(n)` or `ā_c(n)`.
pub fn count_direct(fam: PartitionFamily, n: usize) -> BigInt {
    counts_direct(fam, n).pop().unwrap()
}

/// Result of comparing two q-series coefficient by coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesComparison {
    /// Number of coefficients compared.
    pub order: usize,
    /// First exponent where the sides differ, with the left and right values.
    pub mismatch: Option<(usize, BigInt, BigInt)>,
}

impl SeriesComparison {
    pub fn compare(lhs: &TruncatedSeries, rhs: &TruncatedSeries, order: usize) -> Self {
        let order = order.min(lhs.order()).min(rhs.order());
        let mismatch = (0..order).find_map(|n| {
            let (l, r) = (lhs.coeff(n).unwrap(), rhs.coeff(n).unwrap());
            (l != r).then_some((n, l, r))
        });
        SeriesComparison { order, mismatch }
    }

    pub fn holds(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.mismatch.as_ref().map(|m| m.0)
    }
}

impl fmt::Display for SeriesComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "equal through q^{}", self.order.saturating_sub(1)),
            Some((n, l, r)) => write!(f, "differ at q^{n}: {l} vs {r}"),
        }
    }
}

/// `F(q²)`-style helper: expands `s(order')` at reduced order, substitutes
/// `q ↦ q^k` and trims back to `order`.
fn dilated(
    order: usize,
    k: usize,
    build: impl FnOnce(usize) -> TruncatedSeries,
) -> TruncatedSeries {
    build(order.div_ceil(k))
        .substitute_power(k)
        .expect("k >= 1")
        .truncate(order)
}

fn functional_equation_comparison(c: u32, psi_sq_exponent: i64, order: usize) -> SeriesComparison {
    let ring = Ring::Integers;
    let fam = PartitionFamily::cubic(c).expect("c >= 1");
    let lhs = generating_series(fam, order, ring);
    let psi_sq = dilated(order, 2, |o| psi(o, ring).pow(psi_sq_exponent).unwrap());
    let f_sq = dilated(order, 2, |o| {
        generating_series(fam, o, ring).pow(2).unwrap()
    });
    let rhs = psi(order, ring)
        .mul(&psi_sq)
        .and_then(|s| s.mul(&f_sq))
        .expect("same ring");
    SeriesComparison::compare(&lhs, &rhs, order)
}

/// Checks `F_c(q) = ψ(q) ψ(q²)^{c-1} F_c(q²)²` through `q^{order-1}`.
pub fn check_functional_equation(c: u32, order: usize) -> Result<SeriesComparison, PartitionError> {
    if c == 0 {
        return Err(PartitionError::NoColors);
    }
    Ok(functional_equation_comparison(c, c as i64 - 1, order))
}

/// Checks `F_{p-1}(q) = ψ(q) Π_{i≥1} ψ(q^{2^i})^{p·2^{i-1}}` through
/// `q^{order-1}`. Factors with `2^i >= order` are `1 + O(q^order)` and are
/// dropped.
pub fn check_lemma_product(p: u64, order: usize) -> Result<SeriesComparison, PartitionError> {
    arith::require_odd_prime(p)?;
    let ring = Ring::Integers;
    let lhs = generating_series(PartitionFamily::cubic(p as u32 - 1)?, order, ring);
    let mut rhs = psi(order, ring);
    let mut step = 2usize;
    let mut exponent = p as i64;
    while step / 2 < order {
        let factor = dilated(order, step, |o| psi(o, ring).pow(exponent).unwrap());
        rhs = rhs.mul(&factor).expect("same ring");
        step *= 2;
        exponent *= 2;
    }
    Ok(SeriesComparison::compare(&lhs, &rhs, order))
}

/// Named closed-form identities for progressions of counting functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedIdentity {
    /// `Σ p(5n+4) qⁿ = 5 f5⁵ / f1⁶`.
    RamanujanP5n4,
    /// `Σ a₂(3n+2) qⁿ = 3 f3³ f6³ / (f1⁴ f2⁴)`.
    ChanA2_3n2,
}

impl FromStr for NamedIdentity {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ramanujan-p5n4" => Ok(NamedIdentity::RamanujanP5n4),
            "chan-a2-3n2" => Ok(NamedIdentity::ChanA2_3n2),
            other => Err(PartitionError::UnknownIdentity(other.to_string())),
        }
    }
}

impl fmt::Display for NamedIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedIdentity::RamanujanP5n4 => "ramanujan-p5n4",
            NamedIdentity::ChanA2_3n2 => "chan-a2-3n2",
        })
    }
}

/// Compares both sides of the identity through `q^{order-1}`.
pub fn check_named_identity(id: NamedIdentity, order: usize) -> SeriesComparison {
    let ring = Ring::Integers;
    let (colors, p, r, scalar, factors): (u32, usize, usize, i64, Vec<(usize, i64)>) = match id {
        NamedIdentity::RamanujanP5n4 => (1, 5, 4, 5, vec![(1, -6), (5, 5)]),
        NamedIdentity::ChanA2_3n2 => (2, 3, 2, 3, vec![(1, -4), (2, -4), (3, 3), (6, 3)]),
    };
    let fam = PartitionFamily::cubic(colors).expect("colors >= 1");
    let lhs = generating_series(fam, p * order + r, ring)
        .extract_progression(p, r)
        .expect("valid progression");
    let rhs = euler_quotient(&factors, order, ring).scale(&BigInt::from(scalar));
    SeriesComparison::compare(&lhs, &rhs, order)
}
