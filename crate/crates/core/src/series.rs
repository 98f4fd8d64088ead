//! Truncated formal power series with exact coefficients.
//!
//! A [`TruncatedSeries`] stores the coefficients of `q^offset .. q^(order-1)`
//! densely. Coefficients below `offset` are zero; coefficients at exponents
//! `>= order` are unknown. Every binary operation propagates the truncation
//! order pessimistically, so nothing is ever reported beyond what the inputs
//! determine.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(Ring, Ring),
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("leading coefficient {coefficient} is not a unit in {ring}")]
    NonUnit { coefficient: BigInt, ring: Ring },
    #[error("series has a nonzero offset {0}; expected a series starting at q^0")]
    NonzeroOffset(usize),
    #[error("cannot reduce a series over {from} modulo {to}")]
    IncompatibleReduction { from: Ring, to: u64 },
    #[error("invalid progression {p}n+{r}")]
    InvalidProgression { p: usize, r: usize },
    #[error("substitution exponent must be positive")]
    ZeroSubstitution,
}

/// A modulus `m >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self, SeriesError> {
        if m < 2 {
            Err(SeriesError::InvalidModulus(m))
        } else {
            Ok(Modulus(m))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Coefficient ring of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    /// Arbitrary-precision integers.
    Integers,
    /// Integers modulo `m`, with representatives in `[0, m)`.
    Mod(Modulus),
}

impl Ring {
    pub fn modulo(m: u64) -> Result<Self, SeriesError> {
        Modulus::new(m).map(Ring::Mod)
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            Ring::Integers => None,
            Ring::Mod(m) => Some(m.get()),
        }
    }

    /// Reduces an integer into this ring's canonical representative.
    pub fn reduce(self, x: &BigInt) -> BigInt {
        match self {
            Ring::Integers => x.clone(),
            Ring::Mod(m) => x.mod_floor(&BigInt::from(m.get())),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Mod(m) => write!(f, "Z/{}Z", m.get()),
        }
    }
}

// Coefficient kernels. Each ring gets one implementation of this trait and the
// convolution/division loops are written once against it.
trait Kernel {
    type Elem: Clone + PartialEq;
    type Acc;

    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn neg(&self, x: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn unit_inverse(&self, x: &Self::Elem) -> Option<Self::Elem>;
    fn acc_new(&self) -> Self::Acc;
    fn acc_add_mul(&self, acc: &mut Self::Acc, x: &Self::Elem, y: &Self::Elem);
    fn acc_finish(&self, acc: Self::Acc) -> Self::Elem;
}

struct IntKernel;

impl Kernel for IntKernel {
    type Elem = BigInt;
    type Acc = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn is_zero(&self, x: &BigInt) -> bool {
        x.is_zero()
    }
    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }
    fn neg(&self, x: &BigInt) -> BigInt {
        -x
    }
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }
    fn unit_inverse(&self, x: &BigInt) -> Option<BigInt> {
        if x.abs().is_one() {
            Some(x.clone())
        } else {
            None
        }
    }
    fn acc_new(&self) -> BigInt {
        BigInt::zero()
    }
    fn acc_add_mul(&self, acc: &mut BigInt, x: &BigInt, y: &BigInt) {
        // Euler products have ±1 coefficients; skip the multiplication there.
        if x.is_one() {
            *acc += y;
        } else if y.is_one() {
            *acc += x;
        } else if (-x).is_one() {
            *acc -= y;
        } else {
            *acc += x * y;
        }
    }
    fn acc_finish(&self, acc: BigInt) -> BigInt {
        acc
    }
}

struct ModKernel {
    m: u64,
    // Products of residues fit in 64 bits, so sums can be deferred in a u128.
    narrow: bool,
}

impl ModKernel {
    fn new(m: Modulus) -> Self {
        ModKernel {
            m: m.get(),
            narrow: m.get() <= u32::MAX as u64,
        }
    }
}

impl Kernel for ModKernel {
    type Elem = u64;
    type Acc = u128;

    fn zero(&self) -> u64 {
        0
    }
    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }
    fn add(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 + *y as u128) % self.m as u128) as u64
    }
    fn neg(&self, x: &u64) -> u64 {
        if *x == 0 {
            0
        } else {
            self.m - x
        }
    }
    fn mul(&self, x: &u64, y: &u64) -> u64 {
        ((*x as u128 * *y as u128) % self.m as u128) as u64
    }
    fn unit_inverse(&self, x: &u64) -> Option<u64> {
        let e = BigInt::from(*x).extended_gcd(&BigInt::from(self.m));
        if e.gcd.is_one() {
            e.x.mod_floor(&BigInt::from(self.m)).to_u64()
        } else {
            None
        }
    }
    fn acc_new(&self) -> u128 {
        0
    }
    fn acc_add_mul(&self, acc: &mut u128, x: &u64, y: &u64) {
        *acc += *x as u128 * *y as u128;
        if !self.narrow {
            *acc %= self.m as u128;
        }
    }
    fn acc_finish(&self, acc: u128) -> u64 {
        (acc % self.m as u128) as u64
    }
}

fn nonzero_terms<K: Kernel>(k: &K, xs: &[K::Elem]) -> Vec<(usize, K::Elem)> {
    xs.iter()
        .enumerate()
        .filter(|(_, x)| !k.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Schoolbook convolution truncated to `len` terms. The sparser operand
/// drives the outer loop.
fn convolve<K: Kernel>(k: &K, a: &[K::Elem], b: &[K::Elem], len: usize) -> Vec<K::Elem> {
    let (sparse, dense) = {
        let za = a.iter().filter(|x| !k.is_zero(x)).count();
        let zb = b.iter().filter(|x| !k.is_zero(x)).count();
        if za <= zb {
            (a, b)
        } else {
            (b, a)
        }
    };
    let mut acc: Vec<K::Acc> = (0..len).map(|_| k.acc_new()).collect();
    for (i, x) in nonzero_terms(k, sparse) {
        if i >= len {
            break;
        }
        for (j, y) in dense.iter().take(len - i).enumerate() {
            if !k.is_zero(y) {
                k.acc_add_mul(&mut acc[i + j], &x, y);
            }
        }
    }
    acc.into_iter().map(|s| k.acc_finish(s)).collect()
}

/// Solves `quot * den = num` for the first `len` coefficients. Returns `None`
/// when `den[0]` is not a unit.
fn divide<K: Kernel>(k: &K, num: &[K::Elem], den: &[K::Elem], len: usize) -> Option<Vec<K::Elem>> {
    let lead_inv = k.unit_inverse(den.first()?)?;
    let tail: Vec<(usize, K::Elem)> = nonzero_terms(k, den)
        .into_iter()
        .filter(|(i, _)| *i > 0)
        .collect();
    let mut quot: Vec<K::Elem> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = k.acc_new();
        for (i, d) in &tail {
            if *i > n {
                break;
            }
            k.acc_add_mul(&mut acc, d, &quot[n - i]);
        }
        let s = k.acc_finish(acc);
        let a_n = num.get(n).cloned().unwrap_or_else(|| k.zero());
        quot.push(k.mul(&lead_inv, &k.add(&a_n, &k.neg(&s))));
    }
    Some(quot)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Coeffs {
    Int(Vec<BigInt>),
    Mod(Vec<u64>),
}

impl Coeffs {
    fn len(&self) -> usize {
        match self {
            Coeffs::Int(v) => v.len(),
            Coeffs::Mod(v) => v.len(),
        }
    }

    fn zeros(ring: Ring, len: usize) -> Self {
        match ring {
            Ring::Integers => Coeffs::Int(vec![BigInt::zero(); len]),
            Ring::Mod(_) => Coeffs::Mod(vec![0; len]),
        }
    }
}

/// Runs `$body` with `$k` bound to the ring's kernel and `$x`, `$y` bound to
/// the coefficient slices of the two operands. The rings must already agree.
macro_rules! with_kernel2 {
    ($ring:expr, $a:expr, $b:expr, |$k:ident, $x:ident, $y:ident| $body:expr) => {
        match ($ring, $a, $b) {
            (Ring::Integers, Coeffs::Int($x), Coeffs::Int($y)) => {
                let $k = IntKernel;
                $body.map(Coeffs::Int)
            }
            (Ring::Mod(m), Coeffs::Mod($x), Coeffs::Mod($y)) => {
                let $k = ModKernel::new(m);
                $body.map(Coeffs::Mod)
            }
            _ => unreachable!("coefficient storage does not match ring"),
        }
    };
}

/// A power series `Σ c_n q^n` known exactly for `n < order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    ring: Ring,
    offset: usize,
    order: usize,
    coeffs: Coeffs,
}

impl TruncatedSeries {
    /// The zero series, known to `order`.
    pub fn zero(ring: Ring, order: usize) -> Self {
        TruncatedSeries {
            ring,
            offset: 0,
            order,
            coeffs: Coeffs::zeros(ring, order),
        }
    }

    /// The constant series 1, known to `order`.
    pub fn one(ring: Ring, order: usize) -> Self {
        Self::monomial(ring, 0, order)
    }

    /// `q^exponent`, known to `order`.
    pub fn monomial(ring: Ring, exponent: usize, order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order];
        if exponent < order {
            coeffs[exponent] = BigInt::one();
        }
        Self::from_coeffs(ring, 0, coeffs)
    }

    /// Builds `q^offset · Σ coeffs[i] q^i`, known to `offset + coeffs.len()`.
    /// Coefficients are reduced into the ring.
    pub fn from_coeffs<I, T>(ring: Ring, offset: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs: Coeffs = match ring {
            Ring::Integers => Coeffs::Int(coeffs.into_iter().map(Into::into).collect()),
            Ring::Mod(m) => {
                let m = BigInt::from(m.get());
                Coeffs::Mod(
                    coeffs
                        .into_iter()
                        .map(|c| c.into().mod_floor(&m).to_u64().unwrap())
                        .collect(),
                )
            }
        };
        TruncatedSeries {
            ring,
            offset,
            order: offset + coeffs.len(),
            coeffs,
        }
    }

    /// Builds a series from a coefficient function on exponents `0..order`.
    pub fn from_fn(ring: Ring, order: usize, f: impl FnMut(usize) -> BigInt) -> Self {
        Self::from_coeffs(ring, 0, (0..order).map(f))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// The least exponent stored; every lower coefficient is zero.
    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Truncation exponent: coefficients at `n >= order` are unknown.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of stored coefficients, `order - offset` (or zero).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The coefficient of `q^n`, or `None` when `n` is beyond the known order.
    pub fn coeff(&self, n: usize) -> Option<BigInt> {
        if n >= self.order {
            return None;
        }
        if n < self.offset {
            return Some(BigInt::zero());
        }
        Some(match &self.coeffs {
            Coeffs::Int(v) => v[n - self.offset].clone(),
            Coeffs::Mod(v) => BigInt::from(v[n - self.offset]),
        })
    }

    fn is_zero_at(&self, n: usize) -> bool {
        if n < self.offset || n >= self.order {
            return true;
        }
        match &self.coeffs {
            Coeffs::Int(v) => v[n - self.offset].is_zero(),
            Coeffs::Mod(v) => v[n - self.offset] == 0,
        }
    }

    /// All known coefficients `0..order`, including leading zeros.
    pub fn coefficients(&self) -> Vec<BigInt> {
        (0..self.order).map(|n| self.coeff(n).unwrap()).collect()
    }

    /// Exponents below `order` carrying a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (self.offset..self.order).filter(move |&n| !self.is_zero_at(n))
    }

    /// Least exponent with a nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.support().next()
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }

    /// Discards knowledge beyond `order` (no-op if already shorter).
    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let keep = order.saturating_sub(self.offset);
        let coeffs = match &self.coeffs {
            Coeffs::Int(v) => Coeffs::Int(v[..keep].to_vec()),
            Coeffs::Mod(v) => Coeffs::Mod(v[..keep].to_vec()),
        };
        TruncatedSeries {
            ring: self.ring,
            offset: self.offset.min(order),
            order,
            coeffs,
        }
    }

    /// Same series with the leading zeros stored explicitly, so `offset == 0`.
    pub fn pad_offset(&self) -> Self {
        if self.offset == 0 {
            return self.clone();
        }
        let pad = self.offset.min(self.order);
        let coeffs = match &self.coeffs {
            Coeffs::Int(v) => {
                let mut out = vec![BigInt::zero(); pad];
                out.extend(v.iter().cloned());
                Coeffs::Int(out)
            }
            Coeffs::Mod(v) => {
                let mut out = vec![0; pad];
                out.extend(v.iter().copied());
                Coeffs::Mod(out)
            }
        };
        TruncatedSeries {
            ring: self.ring,
            offset: 0,
            order: self.order,
            coeffs,
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        TruncatedSeries {
            ring: self.ring,
            offset: self.offset + k,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
        }
    }

    fn same_ring(&self, other: &Self) -> Result<(), SeriesError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(SeriesError::RingMismatch(self.ring, other.ring))
        }
    }

    /// Coefficients on `from..self.order` with explicit zeros for `n < offset`.
    fn window(&self, from: usize) -> Coeffs {
        let padded = self.pad_offset();
        match padded.coeffs {
            Coeffs::Int(v) => Coeffs::Int(v.into_iter().skip(from).collect()),
            Coeffs::Mod(v) => Coeffs::Mod(v.into_iter().skip(from).collect()),
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Result<Self, SeriesError> {
        self.same_ring(other)?;
        let offset = self.offset.min(other.offset);
        let order = self.order.min(other.order);
        let offset = offset.min(order);
        let len = order - offset;
        let a = self.truncate(order).window(offset);
        let b = other.truncate(order).window(offset);
        let wrap = |c: Coeffs| TruncatedSeries {
            ring: self.ring,
            offset,
            order,
            coeffs: c,
        };
        let coeffs = with_kernel2!(self.ring, &a, &b, |k, x, y| {
            Some::<Vec<_>>(
                (0..len)
                    .map(|i| {
                        let yi = y.get(i).cloned().unwrap_or_else(|| k.zero());
                        let yi = if negate { k.neg(&yi) } else { yi };
                        k.add(x.get(i).unwrap_or(&k.zero()), &yi)
                    })
                    .collect(),
            )
        })
        .unwrap();
        Ok(wrap(coeffs))
    }

    /// Coefficient-wise sum, known to the smaller of the two orders.
    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add_impl(other, false)
    }

    /// Coefficient-wise difference, known to the smaller of the two orders.
    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.add_impl(other, true)
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries::zero(self.ring, self.order)
            .sub(self)
            .expect("same ring")
    }

    /// Multiplies every coefficient by an integer scalar.
    pub fn scale(&self, s: &BigInt) -> Self {
        let coeffs = match &self.coeffs {
            Coeffs::Int(v) => Coeffs::Int(v.iter().map(|c| c * s).collect()),
            Coeffs::Mod(v) => {
                let k = match self.ring {
                    Ring::Mod(m) => ModKernel::new(m),
                    Ring::Integers => unreachable!(),
                };
                let s = self.ring.reduce(s).to_u64().unwrap();
                Coeffs::Mod(v.iter().map(|c| k.mul(c, &s)).collect())
            }
        };
        TruncatedSeries {
            coeffs,
            ..self.clone()
        }
    }

    /// Truncated product. The result starts at `a.offset + b.offset` and is
    /// known to `min(a.order + b.offset, b.order + a.offset)`.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.same_ring(other)?;
        let offset = self.offset + other.offset;
        let order = (self.order + other.offset).min(other.order + self.offset);
        let len = order.saturating_sub(offset);
        let coeffs = with_kernel2!(self.ring, &self.coeffs, &other.coeffs, |k, x, y| {
            Some(convolve(&k, x, y, len))
        })
        .unwrap();
        Ok(TruncatedSeries {
            ring: self.ring,
            offset: offset.min(order),
            order,
            coeffs,
        })
    }

    fn non_unit(&self) -> SeriesError {
        SeriesError::NonUnit {
            coefficient: self.coeff(0).unwrap_or_else(BigInt::zero),
            ring: self.ring,
        }
    }

    /// Quotient `self / den`. The denominator must start at `q^0` with a unit
    /// constant term; the result is known to `min(self.order, den.order + self.offset)`.
    pub fn div(&self, den: &Self) -> Result<Self, SeriesError> {
        self.same_ring(den)?;
        if den.offset != 0 {
            return Err(SeriesError::NonzeroOffset(den.offset));
        }
        let order = self.order.min(den.order + self.offset);
        let len = order.saturating_sub(self.offset);
        let coeffs = with_kernel2!(self.ring, &self.coeffs, &den.coeffs, |k, x, y| divide(
            &k, x, y, len
        ))
        .ok_or_else(|| den.non_unit())?;
        Ok(TruncatedSeries {
            ring: self.ring,
            offset: self.offset.min(order),
            order,
            coeffs,
        })
    }

    /// Multiplicative inverse via `b_0 = a_0⁻¹`, `b_n = -a_0⁻¹ Σ_{i≥1} a_i b_{n-i}`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.offset != 0 {
            return Err(SeriesError::NonzeroOffset(self.offset));
        }
        if self.is_empty() {
            return Err(self.non_unit());
        }
        TruncatedSeries::one(self.ring, self.order).div(self)
    }

    /// Integer power by repeated squaring; negative exponents go through
    /// [`inverse`](Self::inverse).
    pub fn pow(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        // x^0 = 1 carries the relative precision of x.
        let mut acc = TruncatedSeries::one(base.ring, base.order - base.offset.min(base.order));
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Substitutes `q ↦ q^k`.
    pub fn substitute_power(&self, k: usize) -> Result<Self, SeriesError> {
        if k == 0 {
            return Err(SeriesError::ZeroSubstitution);
        }
        let len = (self.order * k).saturating_sub(self.offset * k);
        let coeffs = match &self.coeffs {
            Coeffs::Int(v) => {
                let mut out = vec![BigInt::zero(); len];
                for (i, c) in v.iter().enumerate() {
                    out[i * k] = c.clone();
                }
                Coeffs::Int(out)
            }
            Coeffs::Mod(v) => {
                let mut out = vec![0; len];
                for (i, c) in v.iter().enumerate() {
                    out[i * k] = *c;
                }
                Coeffs::Mod(out)
            }
        };
        Ok(TruncatedSeries {
            ring: self.ring,
            offset: self.offset * k,
            order: self.order * k,
            coeffs,
        })
    }

    /// Reduces into `ℤ/mℤ`. Allowed from the integers, or from `ℤ/m'ℤ` when
    /// `m` divides `m'`.
    pub fn reduce_mod(&self, m: u64) -> Result<Self, SeriesError> {
        let target = Modulus::new(m)?;
        if let Ring::Mod(from) = self.ring {
            if from.get() % m != 0 {
                return Err(SeriesError::IncompatibleReduction {
                    from: self.ring,
                    to: m,
                });
            }
        }
        let coeffs = match &self.coeffs {
            Coeffs::Int(v) => {
                let mb = BigInt::from(m);
                Coeffs::Mod(
                    v.iter()
                        .map(|c| c.mod_floor(&mb).to_u64().unwrap())
                        .collect(),
                )
            }
            Coeffs::Mod(v) => Coeffs::Mod(v.iter().map(|c| c % m).collect()),
        };
        Ok(TruncatedSeries {
            ring: Ring::Mod(target),
            offset: self.offset,
            order: self.order,
            coeffs,
        })
    }

    /// The series `Σ c_{pn+r} q^n`, known to `ceil((order - r) / p)`.
    pub fn extract_progression(&self, p: usize, r: usize) -> Result<Self, SeriesError> {
        if p == 0 || r >= p {
            return Err(SeriesError::InvalidProgression { p, r });
        }
        let order = if self.order > r {
            (self.order - r).div_ceil(p)
        } else {
            0
        };
        let coeffs = (0..order).map(|n| self.coeff(p * n + r).unwrap());
        Ok(TruncatedSeries::from_coeffs(self.ring, 0, coeffs))
    }
}

impl fmt::Display for TruncatedSeries {
    /// Renders as `1 + 2q + q^3 + O(q^5)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for n in self.support() {
            let c = self.coeff(n).unwrap();
            let (neg, mag) = if c.is_negative() {
                (true, -c)
            } else {
                (false, c)
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_mag = !mag.is_one() || n == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match n {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order)
    }
}
