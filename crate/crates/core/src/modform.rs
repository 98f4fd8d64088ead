//! Eta-quotients as modular forms on `Γ₀(N)`: weight, the level conditions
//! and Nebentypus character, orders of vanishing at cusps, the Sturm bound
//! and the Hecke operator `T_p` on q-expansions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Pow, Zero};
use thiserror::Error;

use crate::arith::{self, kronecker};
use crate::qfunctions::{eta_expansion, EtaError, EtaExpansionRequest};
use crate::series::{Ring, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModformError {
    #[error("level must be positive")]
    ZeroLevel,
    #[error("{delta} does not divide the level {level}")]
    NotADivisor { delta: u64, level: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Hecke operators need a series starting at q^0, got offset {0}")]
    NonzeroOffset(usize),
    #[error("series has no known coefficients")]
    EmptySeries,
    #[error("weight {0} is below 1")]
    WeightTooSmall(i64),
    #[error("factor is not a series in q^{p}: coefficient at q^{exponent} is nonzero")]
    NotInSubring { p: u64, exponent: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Eta(#[from] EtaError),
}

/// `Π_{δ|N} η(δz)^{r_δ}` at level `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaQuotient {
    level: u64,
    exponents: BTreeMap<u64, i64>,
}

impl EtaQuotient {
    pub fn new(
        level: u64,
        exponents: impl IntoIterator<Item = (u64, i64)>,
    ) -> Result<Self, ModformError> {
        if level == 0 {
            return Err(ModformError::ZeroLevel);
        }
        let exponents: BTreeMap<u64, i64> =
            exponents.into_iter().filter(|&(_, r)| r != 0).collect();
        if let Some(&delta) = exponents
            .keys()
            .find(|&&d| d == 0 || !level.is_multiple_of(d))
        {
            return Err(ModformError::NotADivisor { delta, level });
        }
        Ok(EtaQuotient { level, exponents })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    /// `r_δ`, zero for divisors not listed.
    pub fn exponent(&self, delta: u64) -> i64 {
        self.exponents.get(&delta).copied().unwrap_or(0)
    }

    /// `ℓ = ½ Σ r_δ`.
    pub fn weight(&self) -> Ratio<i64> {
        Ratio::new(self.exponents.values().sum(), 2)
    }

    /// q-expansion to absolute order `order`.
    pub fn expand(&self, order: usize, ring: Ring) -> Result<TruncatedSeries, ModformError> {
        let req = EtaExpansionRequest {
            level: self.level,
            exponents: self.exponents.clone(),
            order,
            ring,
        };
        Ok(eta_expansion(&req)?)
    }
}

impl fmt::Display for EtaQuotient {
    /// `η(z)^76 η(2z)^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&d, &r) in &self.exponents {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match d {
                1 => write!(f, "η(z)^{r}")?,
                _ => write!(f, "η({d}z)^{r}")?,
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// The character `χ(d) = ((-1)^ℓ s / d)` with `s = Π δ^{r_δ}`.
///
/// `s` is a rational; square factors of its numerator and denominator are
/// cleared and the Kronecker symbol is taken of the remaining squarefree
/// integer `kernel` (sign included). This agrees with the full symbol at
/// every `d` coprime to `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterDescriptor {
    weight: i64,
    s_numerator: BigUint,
    s_denominator: BigUint,
    kernel: i64,
}

impl CharacterDescriptor {
    fn from_quotient(eq: &EtaQuotient, weight: i64) -> Self {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&d, &r) in &eq.exponents {
            let factor = BigUint::from(d).pow(r.unsigned_abs());
            if r > 0 {
                num *= factor;
            } else {
                den *= factor;
            }
        }
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
        let mut kernel: i64 = if weight % 2 == 0 { 1 } else { -1 };
        for q in arith::prime_divisors(eq.level) {
            let valuation: i64 = eq
                .exponents
                .iter()
                .map(|(&d, &r)| {
                    let mut d = d;
                    let mut v = 0i64;
                    while d % q == 0 {
                        d /= q;
                        v += 1;
                    }
                    v * r
                })
                .sum();
            if valuation % 2 != 0 {
                kernel *= q as i64;
            }
        }
        CharacterDescriptor {
            weight,
            s_numerator: num,
            s_denominator: den,
            kernel,
        }
    }

    /// Builds a descriptor from explicit parts. The kernel is recomputed from
    /// `s` by trial division, so this is meant for small `s`.
    pub fn from_parts(weight: i64, s_numerator: BigUint, s_denominator: BigUint) -> Self {
        let mut kernel: i64 = if weight % 2 == 0 { 1 } else { -1 };
        let mut rest = &s_numerator * &s_denominator;
        let mut q = BigUint::from(2u32);
        while &q * &q <= rest {
            let mut v = 0u32;
            while (&rest % &q).is_zero() {
                rest /= &q;
                v += 1;
            }
            if v % 2 == 1 {
                kernel *= i64::try_from(&q).expect("small prime");
            }
            q += 1u32;
        }
        if !rest.is_one() {
            kernel *= i64::try_from(&rest).expect("kernel fits in i64");
        }
        CharacterDescriptor {
            weight,
            s_numerator,
            s_denominator,
            kernel,
        }
    }

    /// The trivial character at weight `weight` (even weights only make
    /// this the principal character).
    pub fn trivial(weight: i64) -> Self {
        Self::from_parts(weight, BigUint::one(), BigUint::one())
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn s_numerator(&self) -> &BigUint {
        &self.s_numerator
    }

    pub fn s_denominator(&self) -> &BigUint {
        &self.s_denominator
    }

    /// Squarefree signed integer `D` with `χ(d) = (D / d)` for `d` coprime to `s`.
    pub fn kernel(&self) -> i64 {
        self.kernel
    }

    pub fn eval(&self, d: i64) -> i8 {
        kronecker(self.kernel, d)
    }
}

impl fmt::Display for CharacterDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "weight={} s={}/{} kernel={}",
            self.weight, self.s_numerator, self.s_denominator, self.kernel
        )
    }
}

/// `χ(d)`.
pub fn character_eval(ch: &CharacterDescriptor, d: i64) -> i8 {
    ch.eval(d)
}

/// The level conditions for an eta-quotient to transform like a form on `Γ₀(N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidacyReport {
    pub weight: Ratio<i64>,
    /// `Σ δ r_δ`.
    pub delta_sum: i64,
    /// `Σ (N/δ) r_δ`.
    pub codelta_sum: i64,
    /// Present when the weight is integral.
    pub character: Option<CharacterDescriptor>,
}

impl CandidacyReport {
    pub fn weight_integral(&self) -> bool {
        self.weight.is_integer()
    }

    pub fn delta_residue(&self) -> i64 {
        self.delta_sum.rem_euclid(24)
    }

    pub fn codelta_residue(&self) -> i64 {
        self.codelta_sum.rem_euclid(24)
    }

    pub fn passes(&self) -> bool {
        self.weight_integral() && self.delta_residue() == 0 && self.codelta_residue() == 0
    }
}

pub fn check_candidacy(eq: &EtaQuotient) -> CandidacyReport {
    let weight = eq.weight();
    let delta_sum = eq.exponents.iter().map(|(&d, &r)| d as i64 * r).sum();
    let codelta_sum = eq
        .exponents
        .iter()
        .map(|(&d, &r)| (eq.level / d) as i64 * r)
        .sum();
    let character = weight
        .is_integer()
        .then(|| CharacterDescriptor::from_quotient(eq, weight.to_integer()));
    CandidacyReport {
        weight,
        delta_sum,
        codelta_sum,
        character,
    }
}

/// Orders of vanishing at the cusps `c/d`, one per divisor `d | N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CuspOrderTable {
    pub entries: Vec<(u64, Ratio<i64>)>,
}

impl CuspOrderTable {
    pub fn is_holomorphic(&self) -> bool {
        self.entries.iter().all(|(_, v)| *v >= Ratio::zero())
    }

    pub fn get(&self, d: u64) -> Option<Ratio<i64>> {
        self.entries.iter().find(|(e, _)| *e == d).map(|(_, v)| *v)
    }
}

impl fmt::Display for CuspOrderTable {
    /// `1:25,2:6,4:3,8:3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(d, v)| format!("{d}:{v}"))
            .collect();
        f.write_str(&parts.join(","))
    }
}

/// `(N/24) Σ_δ gcd(d,δ)² r_δ / (gcd(d, N/d) d δ)` for each `d | N`. The value
/// does not depend on the numerator `c` of the cusp. Meaningful when
/// [`check_candidacy`] passes.
pub fn cusp_orders(eq: &EtaQuotient) -> CuspOrderTable {
    let n = eq.level as i64;
    let entries = arith::divisors(eq.level)
        .into_iter()
        .map(|d| {
            let d = d as i64;
            let sum: Ratio<i64> = eq
                .exponents
                .iter()
                .map(|(&delta, &r)| {
                    let delta = delta as i64;
                    let g = d.gcd(&delta);
                    Ratio::new(g * g * r, d.gcd(&(n / d)) * d * delta)
                })
                .sum();
            (d as u64, Ratio::new(n, 24) * sum)
        })
        .collect();
    CuspOrderTable { entries }
}

/// `⌊(ℓN/12) Π_{p|N} (1 + 1/p)⌋`.
pub fn sturm_bound(weight: u64, level: u64) -> u64 {
    let mut b = Ratio::new(weight as u128 * level as u128, 12u128);
    for p in arith::prime_divisors(level) {
        b *= Ratio::new(p as u128 + 1, p as u128);
    }
    b.to_integer() as u64
}

/// `f | T_p = Σ (a(pn) + χ(p) p^{ℓ-1} a(n/p)) qⁿ`, with `a(n/p) = 0` when
/// `p ∤ n`. Known to `⌊(order-1)/p⌋ + 1`.
pub fn hecke_tp(
    f: &TruncatedSeries,
    p: u64,
    weight: i64,
    ch: &CharacterDescriptor,
) -> Result<TruncatedSeries, ModformError> {
    if !arith::is_prime(p) {
        return Err(ModformError::NotPrime(p));
    }
    if weight < 1 {
        return Err(ModformError::WeightTooSmall(weight));
    }
    if f.offset() != 0 {
        return Err(ModformError::NonzeroOffset(f.offset()));
    }
    if f.order() == 0 {
        return Err(ModformError::EmptySeries);
    }
    let p_us = p as usize;
    let factor = f
        .ring()
        .reduce(&(BigInt::from(ch.eval(p as i64)) * BigInt::from(p).pow((weight - 1) as u32)));
    let order = (f.order() - 1) / p_us + 1;
    Ok(TruncatedSeries::from_fn(f.ring(), order, |n| {
        let mut b = f.coeff(p_us * n).unwrap();
        if n % p_us == 0 && !factor.is_zero() {
            b += &factor * f.coeff(n / p_us).unwrap();
        }
        b
    }))
}

/// Computes `(g h) | T_p` as `(g | T_p) · h(z/p)` for `h ∈ R[[q^p]]`. Modulo
/// `p` (and for `ℓ > 1`) this agrees with [`hecke_tp`] of the product.
pub fn hecke_tp_factored(
    g: &TruncatedSeries,
    h_of_qp: &TruncatedSeries,
    p: u64,
    weight: i64,
    ch: &CharacterDescriptor,
) -> Result<TruncatedSeries, ModformError> {
    if g.ring() != h_of_qp.ring() {
        return Err(SeriesError::RingMismatch(g.ring(), h_of_qp.ring()).into());
    }
    let p_us = p as usize;
    if let Some(exponent) = h_of_qp.support().find(|e| e % p_us != 0) {
        return Err(ModformError::NotInSubring { p, exponent });
    }
    let tg = hecke_tp(g, p, weight, ch)?;
    let h_contracted = h_of_qp.extract_progression(p_us, 0)?;
    Ok(tg.mul(&h_contracted)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfunctions::euler_product;
    use crate::series::Ring;
    use proptest::prelude::*;

    fn h() -> EtaQuotient {
        EtaQuotient::new(8, [(1, 76), (2, -2)]).unwrap()
    }

    fn g() -> EtaQuotient {
        EtaQuotient::new(4, [(1, 32), (2, -4)]).unwrap()
    }

    fn r(n: i64) -> Ratio<i64> {
        Ratio::from_integer(n)
    }

    #[test]
    fn construction() {
        assert_eq!(EtaQuotient::new(0, []), Err(ModformError::ZeroLevel));
        assert_eq!(
            EtaQuotient::new(8, [(3, 1)]),
            Err(ModformError::NotADivisor { delta: 3, level: 8 })
        );
        assert_eq!(h().to_string(), "η(z)^76 η(2z)^-2");
    }

    #[test]
    fn weights() {
        assert_eq!(h().weight(), r(37));
        assert_eq!(g().weight(), r(14));
        assert_eq!(EtaQuotient::new(1, [(1, 0)]).unwrap().weight(), r(0));
        assert_eq!(
            EtaQuotient::new(1, [(1, 1)]).unwrap().weight(),
            Ratio::new(1, 2)
        );
    }

    #[test]
    fn candidacy() {
        let rep = check_candidacy(&h());
        assert_eq!((rep.delta_sum, rep.codelta_sum), (72, 600));
        assert!(rep.passes());
        let ch = rep.character.unwrap();
        assert_eq!(ch.s_numerator(), &BigUint::from(1u32));
        assert_eq!(ch.s_denominator(), &BigUint::from(4u32));
        assert_eq!(ch.kernel(), -1);

        let rep = check_candidacy(&g());
        assert_eq!((rep.delta_sum, rep.codelta_sum), (24, 120));
        assert!(rep.passes());
        assert_eq!(rep.character.unwrap().kernel(), 1);

        let rep = check_candidacy(&EtaQuotient::new(1, [(1, 1)]).unwrap());
        assert!(!rep.passes());
        assert!(!rep.weight_integral());
        assert_eq!(rep.delta_residue(), 1);
        assert!(rep.character.is_none());
    }

    #[test]
    fn character_values() {
        let chi1 = check_candidacy(&h()).character.unwrap();
        let chi0 = check_candidacy(&g()).character.unwrap();
        assert_eq!(character_eval(&chi1, 3), -1);
        assert_eq!(character_eval(&chi1, 7), -1);
        assert_eq!(character_eval(&chi1, 5), 1);
        assert_eq!(character_eval(&chi0, 3), 1);
        assert_eq!(character_eval(&chi0, 11), 1);
        assert_eq!(character_eval(&chi1, 1), 1);
        assert_eq!(character_eval(&chi0, 1), 1);
        let from_parts =
            CharacterDescriptor::from_parts(37, BigUint::from(1u32), BigUint::from(4u32));
        assert_eq!(from_parts, chi1);
        // 12 = 2²·3: only the odd power of 3 survives.
        let ch = CharacterDescriptor::from_parts(2, BigUint::from(12u32), BigUint::from(1u32));
        assert_eq!(ch.kernel(), 3);
    }

    #[test]
    fn cusp_order_tables() {
        let t = cusp_orders(&h());
        assert_eq!(t.entries, vec![(1, r(25)), (2, r(6)), (4, r(3)), (8, r(3))]);
        assert!(t.is_holomorphic());
        assert_eq!(t.to_string(), "1:25,2:6,4:3,8:3");
        let t = cusp_orders(&g());
        assert!(t.is_holomorphic());
        // d=1: (4/24)(32 - 2) = 5; d=2: (1/6)(8 - 2) = 1; d=4: (1/6)(8 - 2) = 1.
        assert_eq!(t.entries, vec![(1, r(5)), (2, r(1)), (4, r(1))]);
        let delta = EtaQuotient::new(1, [(1, 24)]).unwrap();
        assert_eq!(cusp_orders(&delta).entries, vec![(1, r(1))]);
        let bad = EtaQuotient::new(2, [(1, -24), (2, 24)]).unwrap();
        assert!(!cusp_orders(&bad).is_holomorphic());
    }

    #[test]
    fn sturm_bounds() {
        assert_eq!(sturm_bound(37, 8), 37);
        assert_eq!(sturm_bound(14, 4), 7);
        assert_eq!(sturm_bound(12, 1), 1);
        assert_eq!(sturm_bound(12, 12), 24);
        assert_eq!(sturm_bound(2, 11), 2);
    }

    #[test]
    fn hecke_on_all_ones() {
        let f = TruncatedSeries::from_coeffs(Ring::Integers, 0, vec![1; 10]);
        let t = hecke_tp(&f, 2, 2, &CharacterDescriptor::trivial(2)).unwrap();
        assert_eq!(t.order(), 5);
        let cs: Vec<i64> = t
            .coefficients()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(cs, vec![3, 1, 3, 1, 3]);
    }

    #[test]
    fn hecke_preconditions() {
        let ch = CharacterDescriptor::trivial(2);
        let f = TruncatedSeries::from_coeffs(Ring::Integers, 1, vec![1; 4]);
        assert_eq!(hecke_tp(&f, 2, 2, &ch), Err(ModformError::NonzeroOffset(1)));
        assert!(hecke_tp(&f.pad_offset(), 2, 2, &ch).is_ok());
        assert_eq!(
            hecke_tp(&f.pad_offset(), 4, 2, &ch),
            Err(ModformError::NotPrime(4))
        );
        let empty = TruncatedSeries::zero(Ring::Integers, 0);
        assert_eq!(hecke_tp(&empty, 2, 2, &ch), Err(ModformError::EmptySeries));
        let h = TruncatedSeries::from_coeffs(Ring::Integers, 0, [1, 0, 1]);
        assert!(hecke_tp_factored(&f.pad_offset(), &h, 2, 2, &ch).is_ok());
        let h3 = TruncatedSeries::from_coeffs(Ring::Integers, 0, [1, 0, 0, 1]);
        assert_eq!(
            hecke_tp_factored(&f.pad_offset(), &h3, 2, 2, &ch),
            Err(ModformError::NotInSubring { p: 2, exponent: 3 })
        );
    }

    #[test]
    fn hecke_mod_p_collapses_to_progression() {
        let ring = Ring::modulo(7).unwrap();
        let f = h().expand(100, ring).unwrap().pad_offset();
        let ch = check_candidacy(&h()).character.unwrap();
        let t = hecke_tp(&f, 7, 37, &ch).unwrap();
        assert_eq!(t, f.extract_progression(7, 0).unwrap());
    }

    #[test]
    fn factored_route_with_frobenius_factor() {
        let ring = Ring::modulo(7).unwrap();
        let ch = CharacterDescriptor::trivial(2);
        let g = TruncatedSeries::from_fn(ring, 200, |n| BigInt::from((n * n + 3 * n + 1) % 11));
        let f7 = euler_product(7, 200, ring);
        let h = f7.pow(11).unwrap();
        let direct = hecke_tp(&g.mul(&h).unwrap(), 7, 2, &ch).unwrap();
        let factored = hecke_tp_factored(&g, &h, 7, 2, &ch).unwrap();
        assert_eq!(direct, factored);
        let one = TruncatedSeries::one(ring, 200);
        assert_eq!(
            hecke_tp_factored(&g, &one, 7, 2, &ch).unwrap(),
            hecke_tp(&g, 7, 2, &ch).unwrap()
        );
    }

    proptest! {
        #[test]
        fn cusp_order_denominators_divide_24n(
            level_idx in 0usize..6,
            exps in proptest::collection::vec(-30i64..30, 6),
        ) {
            let level = [1u64, 2, 4, 6, 8, 12][level_idx];
            let divs = arith::divisors(level);
            let eq = EtaQuotient::new(level, divs.iter().copied().zip(exps)).unwrap();
            for (_, v) in cusp_orders(&eq).entries {
                prop_assert_eq!((24 * level as i64) % v.denom(), 0);
            }
        }

        #[test]
        fn character_multiplicative(d1 in 1i64..400, d2 in 1i64..400, which in 0usize..2) {
            let eq = if which == 0 { h() } else { g() };
            let ch = check_candidacy(&eq).character.unwrap();
            let d1 = 2 * d1 + 1;
            let d2 = 2 * d2 + 1;
            prop_assert_eq!(ch.eval(d1 * d2), ch.eval(d1) * ch.eval(d2));
        }
    }
}
