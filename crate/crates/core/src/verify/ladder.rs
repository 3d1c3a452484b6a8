//! Ladder actions of `L_{+-1}` along the rows of the even pyramid and the
//! spectrum of `L_0`.

use std::time::Instant;

use crate::algebras::{Family, GeneratorSet};
use crate::fock::{FockSpace, FockState, Parity, Sector};
use crate::ops::{gram, QOperator, SafeSubspace};
use crate::qnum::{Deformation, QRationalFn, Quarter};
use crate::Error;

use super::relations::{MATRIX_TOL, SAMPLE_QS};
use super::report::{Mode, Report, Verdict, Witness};

const D: Deformation = Deformation::Quantum;

/// Highest `n` (row `nu = 2n`) the ladder formulas are checked on.
pub const MAX_N: u32 = 5;

/// `(L)^k |src> = q^{quarters/4} sqrt(prod num! / prod den!) |dst>` in the
/// orthonormal basis.
struct Formula {
    name: &'static str,
    op: &'static str,
    /// Admissible `k` for row `n`.
    ks: fn(u32) -> std::ops::RangeInclusive<u32>,
    src: fn(u32) -> FockState,
    dst: fn(u32, u32) -> FockState,
    quarters: fn(i64, i64) -> i64,
    num: fn(i64, i64) -> Vec<i64>,
    den: fn(i64, i64) -> Vec<i64>,
}

fn st(a: i64, b: i64) -> FockState {
    FockState::new(a as u32, b as u32)
}

fn formulas() -> Vec<Formula> {
    vec![
        Formula {
            name: "(L_-1)^k |n,0,0>",
            op: "L_-1",
            ks: |n| 1..=2 * n,
            src: |n| FockState::new(2 * n, 0),
            dst: |n, k| FockState::new(2 * n - k, k),
            quarters: |n, k| -2 * k * (2 * n - k),
            num: |n, k| vec![2 * n, k],
            den: |n, k| vec![2 * n - k],
        },
        Formula {
            name: "(L_-1)^k |0,n,0>",
            op: "L_-1",
            ks: |n| 1..=n,
            src: |n| FockState::new(n, n),
            dst: |n, k| FockState::new(n - k, n + k),
            quarters: |_, k| 2 * k * k,
            num: |n, k| vec![n + k],
            den: |n, k| vec![n - k],
        },
        Formula {
            name: "(L_1)^k |0,0,n>",
            op: "L_1",
            ks: |n| 1..=2 * n,
            src: |n| FockState::new(0, 2 * n),
            dst: |n, k| FockState::new(k, 2 * n - k),
            quarters: |n, k| 2 * k * (2 * n - k),
            num: |n, k| vec![k, 2 * n],
            den: |n, k| vec![2 * n - k],
        },
        Formula {
            name: "(L_1)^k |0,n,0>",
            op: "L_1",
            ks: |n| 1..=n,
            src: |n| FockState::new(n, n),
            dst: |n, k| FockState::new(n + k, n - k),
            quarters: |_, k| -2 * k * k,
            num: |n, k| vec![n + k],
            den: |n, k| vec![n - k],
        },
    ]
}

fn report(name: String, mode: Mode, cutoff: u32, t: Instant, fail: Option<(FockState, FockState, String)>) -> Report {
    Report {
        relation: name,
        family: Some(Family::TensorSp4),
        anchor: "su_t(2) ladder".to_string(),
        mode,
        cutoff,
        safe_nu: cutoff as i64,
        verdict: match fail {
            None => Verdict::Holds,
            Some((src, dst, residual)) => Verdict::Fails { witness: Witness { src, dst }, residual },
        },
        wall_ms: t.elapsed().as_secs_f64() * 1e3,
    }
}

/// `op^k` applied to a basis vector, which must stay a single vector.
fn power_on(op: &QOperator, k: u32, src: FockState) -> Result<(FockState, QRationalFn), String> {
    let mut cur = (src, QRationalFn::one());
    for _ in 0..k {
        match op.apply(cur.0).as_slice() {
            [(d, v)] => cur = (*d, &cur.1 * v),
            [] => return Err("annihilated".into()),
            _ => return Err("not a single vector".into()),
        }
    }
    Ok(cur)
}

fn factorials(ns: &[i64]) -> QRationalFn {
    ns.iter().fold(QRationalFn::one(), |acc, &n| &acc * &D.factorial(n))
}

fn check_formula(gens: &GeneratorSet, f: &Formula, max_n: u32, cutoff: u32) -> Result<Vec<Report>, Error> {
    let op = gens.get(f.op)?;
    let t = Instant::now();
    let mut exact = None;
    let mut numeric: Vec<Option<(FockState, FockState, String)>> = vec![None; SAMPLE_QS.len()];
    'rows: for n in 1..=max_n {
        for k in (f.ks)(n) {
            let (src, want_dst) = ((f.src)(n), (f.dst)(n, k));
            let (dst, c) = match power_on(op, k, src) {
                Ok(x) => x,
                Err(e) => {
                    exact = Some((src, want_dst, format!("k={k}: {e}")));
                    break 'rows;
                }
            };
            if dst != want_dst {
                exact = Some((src, dst, format!("k={k}: landed on {dst}, expected {want_dst}")));
                break 'rows;
            }
            let (ni, ki) = (n as i64, k as i64);
            let ratio = factorials(&(f.num)(ni, ki)).div(&factorials(&(f.den)(ni, ki)))?;
            let want_sq = &D.pow(Quarter(2 * (f.quarters)(ni, ki) as i32)) * &ratio;
            let got_sq = (&(&c * &c) * &gram(dst, D)).div(&gram(src, D))?;
            if exact.is_none() && got_sq != want_sq {
                exact = Some((src, dst, format!("k={k}: squared {got_sq} vs {want_sq}")));
            }
            for (slot, &q) in numeric.iter_mut().zip(SAMPLE_QS.iter()) {
                if slot.is_some() {
                    continue;
                }
                let got = c.eval(q)? * (gram(dst, D).eval(q)? / gram(src, D).eval(q)?).sqrt();
                let want = D.pow(Quarter((f.quarters)(ni, ki) as i32)).eval(q)? * ratio.eval(q)?.sqrt();
                if (got - want).abs() > MATRIX_TOL * (1.0 + want.abs()) {
                    *slot = Some((src, dst, format!("k={k}: {got} vs {want} at q={q}")));
                }
            }
        }
    }
    let ms = t;
    let mut out = vec![report(f.name.to_string(), Mode::SquaredExact, cutoff, ms, exact)];
    for (fail, &q) in numeric.into_iter().zip(SAMPLE_QS.iter()) {
        out.push(report(f.name.to_string(), Mode::NumericAt(q), cutoff, ms, fail));
    }
    Ok(out)
}

/// Endpoints of a full row: `(L_-1)^{2n}|n,0,0> = [2n]! |0,0,n>` and the
/// mirror, exactly in the monomial basis (both ends have equal norm).
fn check_endpoints(gens: &GeneratorSet, max_n: u32, cutoff: u32) -> Result<Vec<Report>, Error> {
    let mut out = Vec::new();
    for (name, op, src, dst) in [
        ("(L_-1)^2n |n,0,0> = [2n]! |0,0,n>", "L_-1", (1, 0), (0, 1)),
        ("(L_1)^2n |0,0,n> = [2n]! |n,0,0>", "L_1", (0, 1), (1, 0)),
    ] {
        let t = Instant::now();
        let g = gens.get(op)?;
        let mut fail = None;
        for n in 1..=max_n {
            let s = st(2 * n as i64 * src.0, 2 * n as i64 * src.1);
            let d = st(2 * n as i64 * dst.0, 2 * n as i64 * dst.1);
            let want = D.factorial(2 * n as i64);
            match power_on(g, 2 * n, s) {
                Ok((at, c)) if at == d && c == want => {}
                Ok((at, c)) => {
                    fail = Some((s, at, format!("{c} vs {want}")));
                    break;
                }
                Err(e) => {
                    fail = Some((s, d, e));
                    break;
                }
            }
        }
        out.push(report(name.to_string(), Mode::ExactMonomial, cutoff, t, fail));
    }
    Ok(out)
}

/// `(q[nu1][nu_-1 + 1] - q^-1[nu_-1][nu1 + 1]) / [2]`.
pub fn l0_eigenvalue(s: FockState) -> QRationalFn {
    let (a, b) = (s.nu1 as i64, s.num1 as i64);
    let x = &(&D.pow(Quarter(4)) * &D.int(a)) * &D.int(b + 1);
    let y = &(&D.pow(Quarter(-4)) * &D.int(b)) * &D.int(a + 1);
    (&x - &y).div(&D.two()).expect("[2] != 0")
}

fn check_l0(gens: &GeneratorSet, cutoff: u32) -> Result<Vec<Report>, Error> {
    let sub = SafeSubspace::whole(gens.space()).with_sector(Sector::Even);
    let t = Instant::now();
    let spectrum = gens.get("L_0")?.diagonal_spectrum(&sub)?;
    let fail = spectrum
        .iter()
        .find(|(s, v)| *v != l0_eigenvalue(*s))
        .map(|(s, v)| (*s, *s, format!("{v} vs {}", l0_eigenvalue(*s))));
    let mut out = vec![report("L_0 eigenvalue on H+".into(), Mode::ExactMonomial, cutoff, t, fail)];
    let t = Instant::now();
    let mut fail = None;
    for nu in (0..=cutoff).filter(|nu| nu % 2 == 0) {
        let row: Vec<&(FockState, QRationalFn)> = spectrum.iter().filter(|(s, _)| s.nu() == nu).collect();
        for (i, a) in row.iter().enumerate() {
            if let Some(b) = row[i + 1..].iter().find(|b| b.1 == a.1) {
                fail = Some((a.0, b.0, format!("shared eigenvalue {}", a.1)));
            }
        }
    }
    out.push(report("L_0 separates each row of H+".into(), Mode::ExactMonomial, cutoff, t, fail));
    debug_assert!(spectrum.iter().all(|(s, _)| s.parity() == Parity::Even));
    Ok(out)
}

/// Every ladder formula for rows `nu = 2n <= min(2 MAX_N, cutoff)`.
pub fn check_ladder_actions(cutoff: u32) -> Result<Vec<Report>, Error> {
    let gens = GeneratorSet::build(Family::TensorSp4, FockSpace::full(cutoff))?;
    let max_n = MAX_N.min(cutoff / 2);
    let mut out = Vec::new();
    for f in formulas() {
        out.extend(check_formula(&gens, &f, max_n, cutoff)?);
    }
    out.extend(check_endpoints(&gens, max_n, cutoff)?);
    out.extend(check_l0(&gens, cutoff)?);
    Ok(out)
}
