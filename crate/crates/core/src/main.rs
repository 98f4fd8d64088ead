use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cubic_congruences::engine::{
    prove_isolated, search_congruences, verify_claim, verify_theorem_family, CertificateVerdict,
    CongruenceClaim, SturmCertificate, TheoremId, Verdict, VerificationResult,
};
use cubic_congruences::partitions::{
    check_named_identity, counts_direct, generating_series, FamilyKind, NamedIdentity,
    PartitionFamily,
};
use cubic_congruences::Ring;

#[derive(Parser)]
#[command(
    name = "cubic-congruences",
    version,
    about = "Generalized cubic partition congruences"
)]
struct Cli {
    /// Machine-readable output; integers are printed as decimal strings.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for verification and search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact counts by direct enumeration, one per line.
    Count {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        colors: u32,
        #[arg(required = true)]
        n: Vec<usize>,
    },
    /// Coefficients of the generating function through q^(order-1).
    Series {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        colors: u32,
        #[arg(long, default_value_t = 2000)]
        order: usize,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Check count(family, Pn+R) ≡ 0 (mod M) for all arguments up to nmax.
    Verify {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        colors: u32,
        #[arg(long = "mod")]
        modulus: u64,
        #[arg(long)]
        progression: u64,
        #[arg(long)]
        residue: u64,
        #[arg(long)]
        nmax: usize,
    },
    /// Instantiate and check a congruence family: 1.1, 1.2, cor1.3, 1.5, 4.1, remarks.
    Theorem {
        #[arg(long)]
        id: TheoremId,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 1)]
        k: u64,
        #[arg(long)]
        nmax: usize,
    },
    /// Build a Sturm-bound certificate: a3-mod7 or a5-mod11.
    Prove {
        #[arg(long)]
        id: cubic_congruences::engine::IsolatedId,
        /// Also write the certificate to this file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Empirical scan for congruences count(pn+r) ≡ 0 (mod p).
    Search {
        #[arg(long)]
        cmax: u32,
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,11")]
        primes: Vec<u64>,
        #[arg(long)]
        nmax: usize,
        /// Minimum number of vanishing values before a claim is reported.
        #[arg(long, default_value_t = 10)]
        min_confirmations: usize,
    },
    /// Check a closed-form identity: ramanujan-p5n4 or chan-a2-3n2.
    Identity {
        #[arg(long)]
        id: NamedIdentity,
        #[arg(long)]
        order: usize,
    },
}

enum Outcome {
    Success,
    Negative,
}

fn usage(err: impl Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn claim_json(c: &CongruenceClaim) -> Value {
    json!({
        "claim": c.to_string(),
        "family": c.family().kind().to_string(),
        "colors": c.family().colors().to_string(),
        "modulus": c.modulus().to_string(),
        "progression": c.progression().to_string(),
        "residue": c.residue().to_string(),
    })
}

fn result_json(r: &VerificationResult) -> Value {
    let mut v = claim_json(&r.claim);
    v["nmax"] = json!(r.n_max.to_string());
    v["checked"] = json!(r.checked.to_string());
    match &r.verdict {
        Verdict::HoldsUpToBound => {
            v["verdict"] = json!("holds");
            v["witness"] = Value::Null;
        }
        Verdict::Refuted { index, value } => {
            v["verdict"] = json!("refuted");
            v["witness"] = json!({ "n": index.to_string(), "value": value.to_string() });
        }
    }
    v
}

fn certificate_json(c: &SturmCertificate) -> Value {
    let (verdict, stage, witness) = match &c.verdict {
        CertificateVerdict::Proven => ("proven", Value::Null, Value::Null),
        CertificateVerdict::Failed { stage, witness } => (
            "failed",
            json!(stage.to_string()),
            witness.map_or(
                Value::Null,
                |(n, v)| json!({ "n": n.to_string(), "value": v.to_string() }),
            ),
        ),
    };
    json!({
        "id": c.id,
        "level": c.quotient.level().to_string(),
        "weight": c.weight.to_string(),
        "exponents": c.quotient.exponents().iter()
            .map(|(d, r)| json!({ "delta": d.to_string(), "r": r.to_string() }))
            .collect::<Vec<_>>(),
        "character": c.character.as_ref().map(|ch| ch.to_string()),
        "cusp_orders": c.cusp_orders.entries.iter()
            .map(|(d, o)| json!({ "d": d.to_string(), "order": o.to_string() }))
            .collect::<Vec<_>>(),
        "sturm_bound": c.sturm_bound.to_string(),
        "prime": c.prime.to_string(),
        "modulus": c.modulus.to_string(),
        "coefficients_checked": strings(&c.coefficients),
        "verdict": verdict,
        "failed_stage": stage,
        "witness": witness,
    })
}

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Success
    } else {
        Outcome::Negative
    }
}

fn run(cmd: Command, as_json: bool) -> Result<Outcome, String> {
    let emit = |v: Value, text: String| {
        if as_json {
            println!("{}", serde_json::to_string_pretty(&v).expect("valid json"));
        } else {
            print!("{text}");
        }
    };
    match cmd {
        Command::Count { family, colors, n } => {
            let fam = PartitionFamily::new(family, colors).map_err(|e| e.to_string())?;
            let n_max = n.iter().copied().max().unwrap_or(0);
            let counts = counts_direct(fam, n_max);
            let values: Vec<_> = n.iter().map(|&i| counts[i].clone()).collect();
            let text = values.iter().map(|v| format!("{v}\n")).collect();
            emit(
                json!({
                    "family": family.to_string(),
                    "colors": colors.to_string(),
                    "n": strings(&n),
                    "counts": strings(&values),
                }),
                text,
            );
            Ok(Outcome::Success)
        }
        Command::Series {
            family,
            colors,
            order,
            modulus,
        } => {
            let fam = PartitionFamily::new(family, colors).map_err(|e| e.to_string())?;
            let ring = match modulus {
                Some(m) => Ring::modulo(m).map_err(|e| e.to_string())?,
                None => Ring::Integers,
            };
            let s = generating_series(fam, order, ring);
            let coeffs = strings(s.coefficients());
            let text = format!(
                "family: {fam}\nring: {ring}\norder: {order}\ncoefficients: {}\n",
                coeffs.join(",")
            );
            emit(
                json!({
                    "family": family.to_string(),
                    "colors": colors.to_string(),
                    "ring": ring.to_string(),
                    "order": order.to_string(),
                    "coefficients": coeffs,
                }),
                text,
            );
            Ok(Outcome::Success)
        }
        Command::Verify {
            family,
            colors,
            modulus,
            progression,
            residue,
            nmax,
        } => {
            let fam = PartitionFamily::new(family, colors).map_err(|e| e.to_string())?;
            let claim = CongruenceClaim::new(fam, modulus, progression, residue)
                .map_err(|e| e.to_string())?;
            let res = verify_claim(&claim, nmax).map_err(|e| e.to_string())?;
            emit(result_json(&res), format!("{res}\n"));
            Ok(outcome(res.holds()))
        }
        Command::Theorem { id, p, k, nmax } => {
            let results = verify_theorem_family(id, p, k, nmax).map_err(|e| e.to_string())?;
            let mut text = String::new();
            for r in &results {
                let verdict = match r.verdict {
                    Verdict::HoldsUpToBound => "holds".to_string(),
                    Verdict::Refuted { index, value } => format!("refuted at n={index} ({value})"),
                };
                text += &format!(
                    "{:<32} {:>8} checked  {verdict}\n",
                    r.claim.to_string(),
                    r.checked
                );
            }
            if results.is_empty() {
                text += "no claims (vacuous)\n";
            }
            emit(
                json!({
                    "theorem": id.to_string(),
                    "results": results.iter().map(result_json).collect::<Vec<_>>(),
                }),
                text,
            );
            Ok(outcome(results.iter().all(VerificationResult::holds)))
        }
        Command::Prove { id, emit: path } => {
            let cert = prove_isolated(id);
            if let Some(path) = path {
                std::fs::write(&path, cert.to_text())
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            emit(certificate_json(&cert), cert.to_text());
            Ok(outcome(cert.is_proven()))
        }
        Command::Search {
            cmax,
            primes,
            nmax,
            min_confirmations,
        } => {
            let claims = search_congruences(cmax, &primes, nmax, min_confirmations)
                .map_err(|e| e.to_string())?;
            let text = claims
                .iter()
                .map(|c| format!("{c}  [empirical, n <= {nmax}]\n"))
                .collect();
            emit(
                json!({
                    "nmax": nmax.to_string(),
                    "status": "empirical",
                    "claims": claims.iter().map(claim_json).collect::<Vec<_>>(),
                }),
                text,
            );
            Ok(Outcome::Success)
        }
        Command::Identity { id, order } => {
            let cmp = check_named_identity(id, order);
            emit(
                json!({
                    "id": id.to_string(),
                    "order": cmp.order.to_string(),
                    "holds": cmp.holds(),
                    "first_mismatch": cmp.first_mismatch().map(|n| n.to_string()),
                }),
                format!("{id}: {cmp}\n"),
            );
            Ok(outcome(cmp.holds()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            return usage(e);
        }
    }
    match run(cli.command, cli.json) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => usage(e),
    }
}
