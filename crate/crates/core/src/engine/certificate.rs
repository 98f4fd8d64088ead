use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;

use super::EngineError;
use crate::modform::{CharacterDescriptor, CuspOrderTable, EtaQuotient};

/// Pipeline stage at which a certificate failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailedStage {
    Candidacy,
    Holomorphy,
    Expansion,
    Hecke,
    CrossCheck,
}

impl fmt::Display for FailedStage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailedStage::Candidacy => "candidacy",
            FailedStage::Holomorphy => "holomorphy",
            FailedStage::Expansion => "expansion",
            FailedStage::Hecke => "hecke",
            FailedStage::CrossCheck => "cross-check",
        })
    }
}

impl FromStr for FailedStage {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "candidacy" => FailedStage::Candidacy,
            "holomorphy" => FailedStage::Holomorphy,
            "expansion" => FailedStage::Expansion,
            "hecke" => FailedStage::Hecke,
            "cross-check" => FailedStage::CrossCheck,
            other => return Err(EngineError::Certificate(format!("unknown stage `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateVerdict {
    Proven,
    /// `witness` is `(exponent or argument, value mod m)` when one exists.
    Failed {
        stage: FailedStage,
        witness: Option<(usize, u64)>,
    },
}

/// A Sturm-bound proof that `f | T_p ≡ 0 (mod m)` for an eta-quotient `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmCertificate {
    pub id: String,
    pub quotient: EtaQuotient,
    pub weight: Ratio<i64>,
    pub character: Option<CharacterDescriptor>,
    pub cusp_orders: CuspOrderTable,
    pub sturm_bound: u64,
    pub prime: u64,
    pub modulus: u64,
    /// Coefficients `0..=sturm_bound` of the `T_p` image, reduced mod `m`.
    /// Shorter (or empty) when the pipeline stopped before the Hecke stage.
    pub coefficients: Vec<u64>,
    pub verdict: CertificateVerdict,
}

const KEYS: [&str; 11] = [
    "id",
    "level",
    "weight",
    "exponents",
    "character",
    "cusp-orders",
    "sturm-bound",
    "prime",
    "modulus",
    "coefficients-checked",
    "verdict",
];

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl SturmCertificate {
    pub fn is_proven(&self) -> bool {
        self.verdict == CertificateVerdict::Proven
    }

    /// Renders the certificate as `key: value` lines in a fixed key order.
    pub fn to_text(&self) -> String {
        let exponents = join(
            self.quotient
                .exponents()
                .iter()
                .map(|(d, r)| format!("{d}:{r}")),
        );
        let character = self
            .character
            .as_ref()
            .map_or_else(|| "none".to_string(), |c| c.to_string());
        let verdict = match &self.verdict {
            CertificateVerdict::Proven => "proven".to_string(),
            CertificateVerdict::Failed {
                stage,
                witness: None,
            } => format!("failed stage={stage}"),
            CertificateVerdict::Failed {
                stage,
                witness: Some((n, v)),
            } => {
                format!("failed stage={stage} witness={n}:{v}")
            }
        };
        let values = [
            self.id.clone(),
            self.quotient.level().to_string(),
            self.weight.to_string(),
            exponents,
            character,
            self.cusp_orders.to_string(),
            self.sturm_bound.to_string(),
            self.prime.to_string(),
            self.modulus.to_string(),
            join(&self.coefficients),
            verdict,
        ];
        KEYS.iter()
            .zip(values)
            .map(|(k, v)| format!("{k}: {v}\n"))
            .collect()
    }

    /// Parses the output of [`to_text`](Self::to_text).
    pub fn from_text(text: &str) -> Result<Self, EngineError> {
        let bad = |msg: String| EngineError::Certificate(msg);
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        if lines.len() != KEYS.len() {
            return Err(bad(format!(
                "expected {} lines, found {}",
                KEYS.len(),
                lines.len()
            )));
        }
        let mut values = Vec::with_capacity(KEYS.len());
        for (line, key) in lines.iter().zip(KEYS) {
            let (k, v) = line
                .split_once(": ")
                .or_else(|| line.split_once(':'))
                .ok_or_else(|| bad(format!("no key in `{line}`")))?;
            if k != key {
                return Err(bad(format!("expected key `{key}`, found `{k}`")));
            }
            values.push(v.trim());
        }
        let int = |s: &str| -> Result<i64, EngineError> {
            s.parse().map_err(|_| bad(format!("not an integer: `{s}`")))
        };
        let ratio = |s: &str| -> Result<Ratio<i64>, EngineError> {
            match s.split_once('/') {
                Some((n, d)) => Ok(Ratio::new(int(n)?, int(d)?)),
                None => Ok(Ratio::from_integer(int(s)?)),
            }
        };
        let pairs = |s: &str| -> Result<Vec<(i64, String)>, EngineError> {
            if s.is_empty() {
                return Ok(Vec::new());
            }
            s.split(',')
                .map(|p| {
                    let (a, b) = p
                        .split_once(':')
                        .ok_or_else(|| bad(format!("bad pair `{p}`")))?;
                    Ok((int(a)?, b.to_string()))
                })
                .collect()
        };

        let level = int(values[1])? as u64;
        let exponents = pairs(values[3])?
            .into_iter()
            .map(|(d, r)| Ok((d as u64, int(&r)?)))
            .collect::<Result<Vec<_>, EngineError>>()?;
        let quotient = EtaQuotient::new(level, exponents)?;
        let character = match values[4] {
            "none" => None,
            s => Some(parse_character(s).ok_or_else(|| bad(format!("bad character `{s}`")))?),
        };
        let cusp_orders = CuspOrderTable {
            entries: pairs(values[5])?
                .into_iter()
                .map(|(d, v)| Ok((d as u64, ratio(&v)?)))
                .collect::<Result<_, EngineError>>()?,
        };
        let coefficients = if values[9].is_empty() {
            Vec::new()
        } else {
            values[9]
                .split(',')
                .map(|c| int(c).map(|c| c as u64))
                .collect::<Result<_, _>>()?
        };
        let verdict = match values[10].split_whitespace().collect::<Vec<_>>().as_slice() {
            ["proven"] => CertificateVerdict::Proven,
            ["failed", rest @ ..] => {
                let mut stage = None;
                let mut witness = None;
                for field in rest {
                    match field.split_once('=') {
                        Some(("stage", s)) => stage = Some(s.parse()?),
                        Some(("witness", w)) => {
                            let (n, v) = w.split_once(':').ok_or_else(|| bad(w.to_string()))?;
                            witness = Some((int(n)? as usize, int(v)? as u64));
                        }
                        _ => return Err(bad(format!("unknown verdict field `{field}`"))),
                    }
                }
                let stage = stage.ok_or_else(|| bad("failed verdict without stage".into()))?;
                CertificateVerdict::Failed { stage, witness }
            }
            _ => return Err(bad(format!("bad verdict `{}`", values[10]))),
        };
        Ok(SturmCertificate {
            id: values[0].to_string(),
            quotient,
            weight: ratio(values[2])?,
            character,
            cusp_orders,
            sturm_bound: int(values[6])? as u64,
            prime: int(values[7])? as u64,
            modulus: int(values[8])? as u64,
            coefficients,
            verdict,
        })
    }
}

/// `weight=37 s=1/4 kernel=-1`
fn parse_character(s: &str) -> Option<CharacterDescriptor> {
    let mut weight = None;
    let mut s_frac = None;
    let mut kernel = None;
    for field in s.split_whitespace() {
        match field.split_once('=')? {
            ("weight", w) => weight = w.parse::<i64>().ok(),
            ("s", v) => {
                let (n, d) = v.split_once('/')?;
                s_frac = Some((n.parse::<BigUint>().ok()?, d.parse::<BigUint>().ok()?));
            }
            ("kernel", k) => kernel = k.parse::<i64>().ok(),
            _ => return None,
        }
    }
    let (num, den) = s_frac?;
    let ch = CharacterDescriptor::from_parts(weight?, num, den);
    (ch.kernel() == kernel?).then_some(ch)
}

impl fmt::Display for SturmCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
