//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubic_congruences::arith::{
    admissible_residues, kronecker, mod_inverse, pow_mod, ResidueCriterion,
};
use cubic_congruences::engine::{
    prove_isolated, verify_claim, verify_theorem_family, CongruenceClaim, IsolatedId, TheoremId,
    Verdict,
};
use cubic_congruences::modform::{hecke_tp, hecke_tp_factored, CharacterDescriptor};
use cubic_congruences::partitions::{
    check_functional_equation, check_lemma_product, check_named_identity, counts_direct,
    generating_series, FamilyKind, NamedIdentity, PartitionFamily,
};
use cubic_congruences::{Ring, TruncatedSeries};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cubic(c: u32) -> PartitionFamily {
    PartitionFamily::cubic(c).unwrap()
}

fn overcubic(c: u32) -> PartitionFamily {
    PartitionFamily::overcubic(c).unwrap()
}

fn check(claim: CongruenceClaim, n_max: usize) -> Result<usize, String> {
    let res = verify_claim(&claim, n_max).map_err(|e| e.to_string())?;
    ensure(res.holds(), || res.to_string())?;
    Ok(res.checked)
}

fn known_values() -> Outcome {
    let cases = [
        (cubic(2), 3, 4),
        (cubic(2), 4, 9),
        (cubic(1), 4, 5),
        (overcubic(2), 3, 12),
    ];
    for (fam, n, expected) in cases {
        let series = generating_series(fam, n + 1, Ring::Integers)
            .coeff(n)
            .unwrap();
        let direct = counts_direct(fam, n)[n].clone();
        ensure(
            series == BigInt::from(expected) && direct == BigInt::from(expected),
            || format!("{fam}({n}): series {series}, direct {direct}, expected {expected}"),
        )?;
    }
    Ok("a_2(3)=4, a_2(4)=9, p(4)=5, ā_2(3)=12".into())
}

fn oracle_equivalence() -> Outcome {
    let mut cells = 0;
    for kind in [FamilyKind::Cubic, FamilyKind::Overcubic] {
        for c in 1..=6 {
            let fam = PartitionFamily::new(kind, c).unwrap();
            let series = generating_series(fam, 61, Ring::Integers);
            let direct = counts_direct(fam, 60);
            for (n, d) in direct.iter().enumerate() {
                let s = series.coeff(n).unwrap();
                ensure(&s == d, || format!("{fam}({n}): series {s}, direct {d}"))?;
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} cells agree"))
}

fn ramanujan_congruences() -> Outcome {
    let mut total = 0;
    for (p, r) in [(5, 4), (7, 5), (11, 6)] {
        total += check(CongruenceClaim::new(cubic(1), p, p, r).unwrap(), 10_000)?;
    }
    Ok(format!("{total} values of p(n) up to n = 10000"))
}

fn identities() -> Outcome {
    for id in [NamedIdentity::RamanujanP5n4, NamedIdentity::ChanA2_3n2] {
        let cmp = check_named_identity(id, 300);
        ensure(cmp.holds() && cmp.order == 300, || format!("{id}: {cmp}"))?;
    }
    Ok("both identities equal through q^299".into())
}

fn functional_machinery() -> Outcome {
    for c in 1..=6 {
        let cmp = check_functional_equation(c, 200).map_err(|e| e.to_string())?;
        ensure(cmp.holds() && cmp.order == 200, || format!("c={c}: {cmp}"))?;
    }
    for p in [3, 5, 7] {
        let cmp = check_lemma_product(p, 128).map_err(|e| e.to_string())?;
        ensure(cmp.holds() && cmp.order == 128, || format!("p={p}: {cmp}"))?;
    }
    Ok("functional equation c<=6 to 200, product formula p in {3,5,7} to 128".into())
}

fn nonresidue_cubic() -> Outcome {
    let mut held = 0;
    let mut refuted = 0;
    let mut flagged = Vec::new();
    for p in [3u64, 5, 7, 11, 13] {
        let results = verify_theorem_family(TheoremId::NonresidueCubic, Some(p), 1, 2000)
            .map_err(|e| e.to_string())?;
        let report = admissible_residues(p, ResidueCriterion::Cubic).unwrap();
        ensure(results.len() == report.admissible.len(), || {
            format!("p={p}: claim count")
        })?;
        for r in &results {
            ensure(r.holds(), || r.to_string())?;
            held += 1;
        }
        for j in report.justification.iter().filter(|j| j.character == 1) {
            let claim = CongruenceClaim::new(cubic(p as u32 - 1), p, p, j.residue).unwrap();
            match verify_claim(&claim, 2000)
                .map_err(|e| e.to_string())?
                .verdict
            {
                Verdict::Refuted { index, value } => {
                    ensure(value != 0 && index as u64 % p == j.residue, || {
                        format!("bad witness for {claim}")
                    })?;
                    refuted += 1;
                }
                Verdict::HoldsUpToBound => flagged.push(claim.to_string()),
            }
        }
    }
    let mut msg = format!("{held} claims hold; {refuted} residue classes refuted");
    if !flagged.is_empty() {
        msg += &format!("; REVIEW: survived to 2000: {}", flagged.join(", "));
    }
    Ok(msg)
}

fn color_multiples() -> Outcome {
    let mut n = 0;
    for k in [2, 3] {
        for p in [3, 5] {
            for r in verify_theorem_family(TheoremId::ColorMultiples, Some(p), k, 2000)
                .map_err(|e| e.to_string())?
            {
                ensure(r.holds(), || r.to_string())?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} claims hold"))
}

fn second_level() -> Outcome {
    let d2 = mod_inverse(8, 25).map_err(|e| e.to_string())?;
    ensure(d2 == 22, || format!("8^-1 mod 25 = {d2}"))?;
    let checked = check(CongruenceClaim::new(cubic(2), 5, 25, d2).unwrap(), 10_000)?;
    Ok(format!("a_2(25n+22) ≡ 0 (mod 5), {checked} values"))
}

fn isolated_numeric() -> Outcome {
    let a = check(CongruenceClaim::new(cubic(3), 7, 7, 4).unwrap(), 10_000)?;
    let b = check(CongruenceClaim::new(cubic(5), 11, 11, 10).unwrap(), 10_000)?;
    Ok(format!("{a} + {b} values"))
}

/// Order at the cusp `1/d` from the Ligozat formula, evaluated directly.
fn cusp_order_oracle(level: i64, exps: &[(i64, i64)], d: i64) -> Ratio<i64> {
    let sum: Ratio<i64> = exps
        .iter()
        .map(|&(delta, r)| Ratio::new(d.gcd(&delta).pow(2) * r, delta))
        .sum();
    sum * Ratio::new(level, 24 * d.gcd(&(level / d)) * d)
}

fn certificates() -> Outcome {
    let expected = [
        (IsolatedId::A3Mod7, 37, 8, 37, vec![(1, 76), (2, -2)]),
        (IsolatedId::A5Mod11, 14, 4, 7, vec![(1, 32), (2, -4)]),
    ];
    for (id, weight, level, bound, exps) in expected {
        let cert = prove_isolated(id);
        ensure(cert.is_proven(), || format!("{id}: {:?}", cert.verdict))?;
        ensure(cert.weight == Ratio::from_integer(weight), || {
            format!("{id}: weight")
        })?;
        ensure(cert.quotient.level() == level, || format!("{id}: level"))?;
        ensure(cert.sturm_bound == bound, || {
            format!("{id}: bound {}", cert.sturm_bound)
        })?;
        ensure(cert.coefficients.len() == bound as usize + 1, || {
            format!("{id}: window")
        })?;
        let divisors: Vec<i64> = (1..=level as i64)
            .filter(|d| level as i64 % d == 0)
            .collect();
        ensure(cert.cusp_orders.entries.len() == divisors.len(), || {
            format!("{id}: cusps")
        })?;
        for d in divisors {
            let oracle = cusp_order_oracle(level as i64, &exps, d);
            ensure(cert.cusp_orders.get(d as u64) == Some(oracle), || {
                format!(
                    "{id}: cusp 1/{d} is {:?}, oracle {oracle}",
                    cert.cusp_orders.get(d as u64)
                )
            })?;
        }
    }
    let h = prove_isolated(IsolatedId::A3Mod7);
    let orders: Vec<Ratio<i64>> = h.cusp_orders.entries.iter().map(|e| e.1).collect();
    let want: Vec<Ratio<i64>> = [25, 6, 3, 3].map(Ratio::from_integer).to_vec();
    ensure(orders == want, || {
        format!("H cusp orders {}", h.cusp_orders)
    })?;
    Ok("H: weight 37, level 8, cusps {25,6,3,3}, bound 37; G: weight 14, level 4, bound 7".into())
}

fn nonresidue_overcubic() -> Outcome {
    let mut n = 0;
    for p in [3, 5, 7] {
        for k in [1, 2] {
            for r in verify_theorem_family(TheoremId::NonresidueOvercubic, Some(p), k, 2000)
                .map_err(|e| e.to_string())?
            {
                ensure(r.holds(), || r.to_string())?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} claims hold"))
}

fn inherited() -> Outcome {
    for (c, p, r) in [(6, 5, 4), (8, 7, 5), (12, 11, 6)] {
        check(CongruenceClaim::new(cubic(c), p, p, r).unwrap(), 2000)?;
    }
    Ok("a_6(5n+4), a_8(7n+5), a_12(11n+6)".into())
}

const CASES: usize = 128;
const PRIMES: [u64; 6] = [3, 5, 7, 11, 13, 17];

fn random_series(rng: &mut ChaCha8Rng, ring: Ring, order: usize) -> TruncatedSeries {
    let offset = rng.gen_range(0..3.min(order));
    let coeffs: Vec<i64> = (offset..order).map(|_| rng.gen_range(-50..=50)).collect();
    TruncatedSeries::from_coeffs(ring, offset, coeffs)
}

fn random_ring(rng: &mut ChaCha8Rng) -> Ring {
    if rng.gen_bool(0.3) {
        Ring::Integers
    } else {
        let m = [2u64, 3, 7, 10, 97, 65_537, 4_294_967_311][rng.gen_range(0..7)];
        Ring::modulo(m).unwrap()
    }
}

fn random_character(rng: &mut ChaCha8Rng, weight: i64) -> CharacterDescriptor {
    let num = BigInt::from(rng.gen_range(1u32..40)).to_biguint().unwrap();
    let den = BigInt::from(rng.gen_range(1u32..40)).to_biguint().unwrap();
    CharacterDescriptor::from_parts(weight, num, den)
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let mut tally = BTreeMap::new();

    for _ in 0..CASES {
        let ring = random_ring(&mut rng);
        let order = rng.gen_range(1..40);
        let [a, b, c] = [0; 3].map(|_| random_series(&mut rng, ring, order));
        let ab_c = a.mul(&b).and_then(|x| x.mul(&c)).unwrap();
        let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
        ensure(ab_c == a_bc, || format!("associativity over {ring}"))?;
        ensure(a.mul(&b).unwrap() == b.mul(&a).unwrap(), || {
            "commutativity".into()
        })?;
        ensure(a.add(&b).unwrap() == b.add(&a).unwrap(), || {
            "additive commutativity".into()
        })?;
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        ensure(lhs == rhs, || format!("distributivity over {ring}"))?;
        let one = TruncatedSeries::one(ring, order);
        ensure(a.mul(&one).unwrap() == a, || {
            "multiplicative identity".into()
        })?;
        let diff = a.add(&a.neg()).unwrap();
        ensure(diff.is_zero() && diff.order() == a.order(), || {
            "additive inverse".into()
        })?;
        let unit = one.add(&a.shift(1).truncate(order)).unwrap();
        let inv = unit.inverse().map_err(|e| e.to_string())?;
        ensure(unit.mul(&inv).unwrap() == one, || "inverse".into())?;
    }
    tally.insert("ring axioms", CASES);

    for _ in 0..CASES {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let ring = if rng.gen_bool(0.5) {
            Ring::Integers
        } else {
            Ring::modulo(p * 7).unwrap()
        };
        let weight = rng.gen_range(1..12);
        let ch = random_character(&mut rng, weight);
        let order = p as usize * rng.gen_range(2..12);
        let f = random_series(&mut rng, ring, order).pad_offset();
        let g = random_series(&mut rng, ring, order).pad_offset();
        let (s, t) = (
            BigInt::from(rng.gen_range(-9..10)),
            BigInt::from(rng.gen_range(-9..10)),
        );
        let comb = f.scale(&s).add(&g.scale(&t)).unwrap();
        let lhs = hecke_tp(&comb, p, weight, &ch).unwrap();
        let rhs = hecke_tp(&f, p, weight, &ch)
            .unwrap()
            .scale(&s)
            .add(&hecke_tp(&g, p, weight, &ch).unwrap().scale(&t))
            .unwrap();
        ensure(lhs == rhs, || {
            format!("linearity p={p} weight={weight} over {ring}")
        })?;
    }
    tally.insert("Hecke linearity", CASES);

    for _ in 0..CASES {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let ring = Ring::modulo(p).unwrap();
        let weight = rng.gen_range(2..40);
        let ch = random_character(&mut rng, weight);
        let order = p as usize * rng.gen_range(2..15);
        let f = random_series(&mut rng, ring, order).pad_offset();
        let image = hecke_tp(&f, p, weight, &ch).unwrap();
        let progression = f.extract_progression(p as usize, 0).unwrap();
        ensure(image == progression, || {
            format!("mod-p collapse p={p} weight={weight}")
        })?;
    }
    tally.insert("mod-p collapse", CASES);

    for _ in 0..CASES {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        let ring = Ring::modulo(p).unwrap();
        let weight = rng.gen_range(2..40);
        let ch = random_character(&mut rng, weight);
        let order = p as usize * rng.gen_range(2..10);
        let g = random_series(&mut rng, ring, order).pad_offset();
        let h = random_series(&mut rng, ring, order.div_ceil(p as usize)).pad_offset();
        let h_qp = h.substitute_power(p as usize).unwrap().truncate(order);
        let direct = hecke_tp(&g.mul(&h_qp).unwrap(), p, weight, &ch).unwrap();
        let factored = hecke_tp_factored(&g, &h_qp, p, weight, &ch).unwrap();
        let n = direct.order().min(factored.order());
        ensure(n >= 1 && direct.truncate(n) == factored.truncate(n), || {
            format!("factored route p={p} weight={weight}")
        })?;
    }
    tally.insert("factored Hecke", CASES);

    for _ in 0..CASES {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())] as i64;
        let a = rng.gen_range(-10_000i64..10_000);
        let euler = pow_mod(a.rem_euclid(p) as u64, (p as u64 - 1) / 2, p as u64);
        let expected = match euler {
            0 => 0,
            1 => 1,
            e if e == p as u64 - 1 => -1,
            e => return Err(format!("a^((p-1)/2) = {e} mod {p}")),
        };
        ensure(kronecker(a, p) == expected, || format!("({a}/{p})"))?;
    }
    tally.insert("Kronecker-Euler", CASES);

    Ok(tally
        .iter()
        .map(|(k, v)| format!("{k}: {v}"))
        .collect::<Vec<_>>()
        .join(", "))
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("known values", 1, known_values),
        ("series/DP oracle equivalence", 30, oracle_equivalence),
        ("Ramanujan congruences to 10^4", 10, ramanujan_congruences),
        ("progression identities to order 300", 5, identities),
        (
            "functional equation and product formula",
            10,
            functional_machinery,
        ),
        (
            "nonresidue cubic congruences and sharpness",
            60,
            nonresidue_cubic,
        ),
        ("color-multiple congruences", 30, color_multiples),
        ("a_2(25n+22) mod 5 to 10^4", 10, second_level),
        (
            "a_3(7n+4) mod 7, a_5(11n+10) mod 11 to 10^4",
            10,
            isolated_numeric,
        ),
        ("Sturm certificates", 60, certificates),
        ("nonresidue overcubic congruences", 60, nonresidue_overcubic),
        ("inherited Ramanujan congruences", 30, inherited),
        ("randomized property suites", 120, property_suites),
    ];
    let mut failures = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{msg}; exceeded {limit} s limit"))
            }
            other => other,
        };
        let (tag, msg) = match &outcome {
            Ok(msg) => ("PASS", msg),
            Err(msg) => ("FAIL", msg),
        };
        println!(
            "{tag} [{:>2}] {name} ({:.2} s): {msg}",
            i + 1,
            elapsed.as_secs_f64()
        );
        if outcome.is_err() {
            failures += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
