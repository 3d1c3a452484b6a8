//! One PASS/FAIL line per acceptance criterion. Run with
//! `cargo test -p qsp4 --test acceptance`; exits non-zero if any fails.

use std::path::PathBuf;
use std::time::Instant;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsp4::algebras::{relation_catalog, Family, GeneratorSet};
use qsp4::fock::{FockSpace, Parity};
use qsp4::render::{pyramid, LabelStyle};
use qsp4::verify::basis::{check_basis_construction, BasisCheck};
use qsp4::verify::ladder::check_ladder_actions;
use qsp4::verify::series::check_series_expansions;
use qsp4::verify::spectra::{check_spectra, named_table, TABLE_NAMES};
use qsp4::verify::structure::{check_classical_limit, check_structure};
use qsp4::verify::{check_all, check_casimirs, check_relations, exit_code, Report, Verdict, SAMPLE_QS};

const CUTOFF: u32 = 12;

type Outcome = Result<String, String>;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../golden").join(name)
}

fn all_hold(reports: &[Report]) -> Outcome {
    match reports.iter().find(|r| !r.holds()) {
        None => Ok(format!("{} checks hold", reports.len())),
        Some(r) => Err(format!("{} of {} fail, first: {r}", reports.iter().filter(|r| !r.holds()).count(), reports.len())),
    }
}

fn matches_golden(text: &str, file: &str) -> Result<(), String> {
    let want = std::fs::read_to_string(golden(file)).map_err(|e| format!("{file}: {e}"))?;
    if want == text {
        Ok(())
    } else {
        let line = want.lines().zip(text.lines()).position(|(a, b)| a != b).unwrap_or(want.lines().count().min(text.lines().count()));
        Err(format!("{file} differs at line {}", line + 1))
    }
}

fn catalog() -> Outcome {
    let t = Instant::now();
    let mut reports = Vec::new();
    let mut names = 0;
    for f in Family::ALL {
        names += relation_catalog(f).len();
        reports.extend(check_all(f, CUTOFF, &SAMPLE_QS).map_err(|e| e.to_string())?);
    }
    let secs = t.elapsed().as_secs_f64();
    if names < 54 {
        return Err(format!("only {names} relations"));
    }
    let summary = all_hold(&reports)?;
    if secs > 120.0 {
        return Err(format!("{summary}, but took {secs:.1} s"));
    }
    Ok(format!("{names} relations, {summary} in {secs:.1} s"))
}

fn random_s2_tuples(n: usize) -> Vec<[BigRational; 4]> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5_2);
    (0..n)
        .map(|_| std::array::from_fn(|_| BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=9).into())))
        .collect()
}

fn casimirs() -> Outcome {
    all_hold(&check_casimirs(CUTOFF, &random_s2_tuples(5)).map_err(|e| e.to_string())?)
}

fn spectra() -> Outcome {
    for name in TABLE_NAMES {
        let t = named_table(name, CUTOFF, &SAMPLE_QS).map_err(|e| e.to_string())?;
        matches_golden(&t.render(), &format!("spectrum_{name}.txt"))?;
    }
    let s = all_hold(&check_spectra(CUTOFF, &SAMPLE_QS).map_err(|e| e.to_string())?)?;
    Ok(format!("{} tables match, {s}", TABLE_NAMES.len()))
}

fn ladder() -> Outcome {
    let mut r = check_ladder_actions(CUTOFF).map_err(|e| e.to_string())?;
    for b in BasisCheck::ALL {
        r.extend(check_basis_construction(b, CUTOFF).map_err(|e| e.to_string())?);
    }
    all_hold(&r)
}

fn classical_limit() -> Outcome {
    all_hold(&check_classical_limit(CUTOFF).map_err(|e| e.to_string())?)
}

fn structure() -> Outcome {
    let mut r = Vec::new();
    for f in Family::ALL {
        r.extend(check_structure(f, CUTOFF, &SAMPLE_QS).map_err(|e| e.to_string())?);
    }
    all_hold(&r)
}

fn figures() -> Outcome {
    for (style, parity, file) in [
        (LabelStyle::Pair, Parity::Even, "figure1_pair_even.txt"),
        (LabelStyle::Pair, Parity::Odd, "figure2_pair_odd.txt"),
        (LabelStyle::TripleMin, Parity::Even, "figure3_triple_min.txt"),
        (LabelStyle::TripleMax, Parity::Even, "figure4_triple_max.txt"),
    ] {
        matches_golden(&pyramid(style, parity, 4).map_err(|e| e.to_string())?, file)?;
    }
    Ok("4 pyramids match".into())
}

fn series() -> Outcome {
    all_hold(&check_series_expansions())
}

/// Each catalog entry, sign-flipped on its own, must fail with a witness.
fn mutation() -> Outcome {
    let mut n = 0;
    for f in Family::ALL {
        let gens = GeneratorSet::build(f, FockSpace::full(CUTOFF)).map_err(|e| e.to_string())?;
        for rel in relation_catalog(f) {
            let reports = check_relations(&[rel.mutated()], &gens, &SAMPLE_QS).map_err(|e| e.to_string())?;
            if exit_code(&reports) != 1 {
                return Err(format!("mutated '{}' still holds", rel.name));
            }
            if !reports.iter().any(|r| matches!(r.verdict, Verdict::Fails { .. })) {
                return Err(format!("mutated '{}' fails without a witness", rel.name));
            }
            n += 1;
        }
    }
    Ok(format!("{n} single-entry mutations all caught"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("relation catalog at cutoff 12", catalog),
        ("Casimir closed forms", casimirs),
        ("spectra tables", spectra),
        ("ladder endpoints and k-formulas", ladder),
        ("classical limit", classical_limit),
        ("structural invariants", structure),
        ("pyramid figures", figures),
        ("small-tau series", series),
        ("mutation self-test", mutation),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("criterion {}: PASS  {name}: {msg} [{secs:.1} s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg} [{secs:.1} s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
