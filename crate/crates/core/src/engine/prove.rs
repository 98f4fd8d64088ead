use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::{CertificateVerdict, EngineError, FailedStage, SturmCertificate};
use crate::modform::{check_candidacy, cusp_orders, hecke_tp, sturm_bound, EtaQuotient};
use crate::partitions::{counts_direct, PartitionFamily};
use crate::series::Ring;

/// Number of progression values cross-checked against the combinatorial count.
const CROSS_CHECK_VALUES: usize = 10;

/// The two congruences proved with a Sturm certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsolatedId {
    /// `a_3(7n+4) ≡ 0 (mod 7)` via `η(z)^76 / η(2z)^2` and `T_7`.
    A3Mod7,
    /// `a_5(11n+10) ≡ 0 (mod 11)` via `η(z)^32 / η(2z)^4` and `T_11`.
    A5Mod11,
}

impl FromStr for IsolatedId {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a3-mod7" => Ok(IsolatedId::A3Mod7),
            "a5-mod11" => Ok(IsolatedId::A5Mod11),
            other => Err(EngineError::Unsupported(format!(
                "unknown certificate id `{other}`"
            ))),
        }
    }
}

impl fmt::Display for IsolatedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsolatedId::A3Mod7 => "a3-mod7",
            IsolatedId::A5Mod11 => "a5-mod11",
        })
    }
}

/// Inputs of the certificate pipeline: an eta-quotient whose `T_p` image
/// should vanish mod `p`, and the progression `family(pn + residue)` that the
/// vanishing encodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedCase {
    pub id: String,
    pub quotient: EtaQuotient,
    pub prime: u64,
    pub family: PartitionFamily,
    pub residue: u64,
}

impl IsolatedCase {
    pub fn for_id(which: IsolatedId) -> Self {
        let (quotient, prime, colors, residue) = match which {
            IsolatedId::A3Mod7 => (EtaQuotient::new(8, [(1, 76), (2, -2)]), 7, 3, 4),
            IsolatedId::A5Mod11 => (EtaQuotient::new(4, [(1, 32), (2, -4)]), 11, 5, 10),
        };
        IsolatedCase {
            id: which.to_string(),
            quotient: quotient.expect("divisors of the level"),
            prime,
            family: PartitionFamily::cubic(colors).expect("colors >= 1"),
            residue,
        }
    }
}

pub fn prove_isolated(which: IsolatedId) -> SturmCertificate {
    certify(&IsolatedCase::for_id(which))
}

/// Runs the certificate pipeline:
///
/// 1. level conditions and integral weight;
/// 2. nonnegative order at every cusp `1/d`, `d | N`;
/// 3. expansion mod `p` through `q^{p(B+1)}`, `B` the Sturm bound;
/// 4. `T_p` and a check that coefficients `0..=B` vanish;
/// 5. the first progression values, counted combinatorially, vanish mod `p`.
pub fn certify(case: &IsolatedCase) -> SturmCertificate {
    let p = case.prime;
    let candidacy = check_candidacy(&case.quotient);
    let mut cert = SturmCertificate {
        id: case.id.clone(),
        quotient: case.quotient.clone(),
        weight: candidacy.weight,
        character: candidacy.character.clone(),
        cusp_orders: cusp_orders(&case.quotient),
        sturm_bound: 0,
        prime: p,
        modulus: p,
        coefficients: Vec::new(),
        verdict: CertificateVerdict::Proven,
    };
    let fail = |mut cert: SturmCertificate, stage, witness| {
        cert.verdict = CertificateVerdict::Failed { stage, witness };
        cert
    };

    let (weight, character) = match (&candidacy.character, candidacy.passes()) {
        (Some(ch), true) if candidacy.weight >= Ratio::from_integer(1) => {
            (candidacy.weight.to_integer(), ch.clone())
        }
        _ => return fail(cert, FailedStage::Candidacy, None),
    };
    if !cert.cusp_orders.is_holomorphic() {
        return fail(cert, FailedStage::Holomorphy, None);
    }
    let bound = sturm_bound(weight as u64, case.quotient.level());
    cert.sturm_bound = bound;

    let order = p as usize * (bound as usize + 1) + 1;
    let image = Ring::modulo(p)
        .map_err(EngineError::from)
        .and_then(|ring| Ok(case.quotient.expand(order, ring)?.pad_offset()))
        .and_then(|f| Ok(hecke_tp(&f, p, weight, &character)?));
    let image = match image {
        Ok(s) => s,
        Err(_) => return fail(cert, FailedStage::Expansion, None),
    };
    cert.coefficients = (0..=bound as usize)
        .map(|n| {
            image
                .coeff(n)
                .expect("expanded past the bound")
                .to_u64()
                .unwrap()
        })
        .collect();
    if let Some((n, &v)) = cert.coefficients.iter().enumerate().find(|(_, &v)| v != 0) {
        return fail(cert, FailedStage::Hecke, Some((n, v)));
    }

    let step = p as usize;
    let last = step * (CROSS_CHECK_VALUES - 1) + case.residue as usize;
    let counts = counts_direct(case.family, last);
    for idx in (case.residue as usize..=last).step_by(step) {
        let v = &counts[idx] % p;
        if !v.is_zero() {
            return fail(
                cert,
                FailedStage::CrossCheck,
                Some((idx, v.to_u64().unwrap())),
            );
        }
    }
    cert
}
