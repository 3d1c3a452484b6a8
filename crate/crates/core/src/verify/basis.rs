//! Basis states written as tensor-operator monomials on the vacuum.
//!
//! Every construction `X|0>` lands on a single monomial vector
//! `c e(nu1, nu_-1)`, so a displayed normalization reduces to an exact
//! statement about the q-power `c`; the square roots of factorials are the
//! Gram norms and the `sqrt([2])` factors of `T_0` cancel against the
//! `[2]^(n0/2)` of the normalization.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::algebras::{Family, GeneratorSet};
use crate::fock::{triple_from_pair, Convention, FockSpace, FockState, Sector, TripleLabel};
use crate::ops::{gram, QOperator, SafeSubspace};
use crate::qnum::{Deformation, QRationalFn, QScalar, Quarter};
use crate::Error;

use super::relations::MATRIX_TOL;
use super::report::{Mode, Report, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisCheck {
    /// `|nu1, nu_-1>` from powers of `t_k^+`.
    Ts,
    /// Triple-label states with minimal `n0`.
    SpbMinN0,
    /// Triple-label states with maximal `n0`.
    SpbMaxN0,
    /// The general normalization factor on every admissible triple.
    Eta,
    /// `(T_0)^2` against `T_1 T_-1`.
    Rtt,
}

impl BasisCheck {
    pub const ALL: [BasisCheck; 5] = [BasisCheck::Ts, BasisCheck::SpbMinN0, BasisCheck::SpbMaxN0, BasisCheck::Eta, BasisCheck::Rtt];

    pub fn as_str(self) -> &'static str {
        match self {
            BasisCheck::Ts => "ts",
            BasisCheck::SpbMinN0 => "spb_minN0",
            BasisCheck::SpbMaxN0 => "spb_maxN0",
            BasisCheck::Eta => "eta",
            BasisCheck::Rtt => "rtt",
        }
    }
}

impl fmt::Display for BasisCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BasisCheck {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        BasisCheck::ALL
            .into_iter()
            .find(|b| b.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown basis check '{s}'")))
    }
}

/// Sparse vector in the monomial basis.
pub type Vector = Vec<(FockState, QRationalFn)>;

/// `ops[0] ops[1] ... ops[n-1] v`, rightmost factor first.
pub fn apply_word(ops: &[&QOperator], v: Vector) -> Vector {
    let mut cur = v;
    for op in ops.iter().rev() {
        let mut next: Vec<(FockState, QRationalFn)> = Vec::new();
        for (s, c) in &cur {
            for (t, e) in op.apply(*s) {
                let x = c * &e;
                match next.iter_mut().find(|(u, _)| *u == t) {
                    Some((_, acc)) => *acc = &*acc + &x,
                    None => next.push((t, x)),
                }
            }
        }
        next.retain(|(_, c)| !c.is_zero());
        cur = next;
    }
    cur
}

fn vacuum() -> Vector {
    vec![(FockState::new(0, 0), QRationalFn::one())]
}

/// The single coefficient of `v`, which must sit on `at`.
fn single(v: &Vector, at: FockState) -> Result<QRationalFn, String> {
    match v.as_slice() {
        [(s, c)] if *s == at => Ok(c.clone()),
        [] => Err("vector vanished".into()),
        _ => Err(format!("expected a multiple of e{at}, got {} components", v.len())),
    }
}

fn q(quarters: i32) -> QRationalFn {
    Deformation::Quantum.pow(Quarter(quarters))
}

/// `(T_1)^n1 (T_0)^n0 (T_-1)^nm1 |0>`.
pub fn tensor_monomial(gens: &GeneratorSet, t: TripleLabel) -> Result<Vector, Error> {
    let mut word = Vec::new();
    for _ in 0..t.n1 {
        word.push(gens.get("T_1")?);
    }
    for _ in 0..t.n0 {
        word.push(gens.get("T_0")?);
    }
    for _ in 0..t.nm1 {
        word.push(gens.get("T_-1")?);
    }
    Ok(apply_word(&word, vacuum()))
}

/// A displayed q-power prefactor, as a function of the labels, in quarters.
#[derive(Clone, Copy)]
pub struct Prefactor {
    pub name: &'static str,
    /// Whether the form applies to a triple.
    pub applies: fn(TripleLabel) -> bool,
    pub quarters: fn(TripleLabel, FockState) -> i64,
}

fn ni(t: TripleLabel) -> (i64, i64, i64) {
    (t.n1 as i64, t.n0 as i64, t.nm1 as i64)
}

fn nus(s: FockState) -> (i64, i64) {
    (s.nu1 as i64, s.num1 as i64)
}

/// Prefactors as constructed: the general normalization and its special
/// cases in both labelings.
pub fn prefactors() -> Vec<Prefactor> {
    vec![
        Prefactor {
            name: "eta",
            applies: |_| true,
            quarters: |t, _| {
                let (a, b, c) = ni(t);
                -2 * (a - c) - 4 * a * (b + c) - 4 * c * (b + a)
            },
        },
        Prefactor {
            name: "even n0=0 (triple form)",
            applies: |t| t.n0 == 0,
            quarters: |t, _| {
                let (a, _, c) = ni(t);
                -2 * (a - c) - 8 * a * c
            },
        },
        Prefactor {
            name: "even n0=0 (pair form)",
            applies: |t| t.n0 == 0,
            quarters: |_, s| {
                let (x, y) = nus(s);
                -(x - y) - 2 * x * y
            },
        },
        Prefactor {
            name: "odd n0=1 (triple form)",
            applies: |t| t.n0 == 1,
            quarters: |t, _| {
                let (a, _, c) = ni(t);
                -2 * (3 * a + c) - 8 * a * c
            },
        },
        Prefactor {
            name: "odd n0=1 (pair form)",
            applies: |t| t.n0 == 1,
            quarters: |_, s| {
                let (x, y) = nus(s);
                -(x - y - 2) - 2 * x * y
            },
        },
        Prefactor {
            name: "left n_-1=0 (triple form)",
            applies: |t| t.nm1 == 0,
            quarters: |t, _| {
                let (a, b, _) = ni(t);
                -2 * a - 4 * a * b
            },
        },
        Prefactor {
            name: "left n_-1=0 (pair form)",
            applies: |t| t.nm1 == 0,
            quarters: |_, s| {
                let (x, y) = nus(s);
                -(x - y) - 2 * (x - y) * y
            },
        },
        Prefactor {
            name: "right n_1=0 (triple form)",
            applies: |t| t.n1 == 0,
            quarters: |t, _| {
                let (_, b, c) = ni(t);
                2 * c - 4 * c * b
            },
        },
        Prefactor {
            name: "right n_1=0 (pair form)",
            applies: |t| t.n1 == 0,
            quarters: |_, s| {
                let (x, y) = nus(s);
                -(x - y) + 2 * x * (x - y)
            },
        },
    ]
}

/// The same special cases exactly as displayed, where they differ from the
/// constructed ones.
pub fn printed_prefactors() -> Vec<Prefactor> {
    vec![
        Prefactor {
            name: "left n_-1=0 (pair form, printed)",
            applies: |t| t.nm1 == 0,
            quarters: |_, s| {
                let (x, y) = nus(s);
                -(x - y) - 2 * (x - y) * x
            },
        },
        Prefactor {
            name: "right n_1=0 (triple form, printed)",
            applies: |t| t.n1 == 0,
            quarters: |t, _| {
                let (_, b, c) = ni(t);
                -2 * c - 4 * c * b
            },
        },
    ]
}

fn basis_report(name: String, anchor: &str, mode: Mode, cutoff: u32, t: Instant, fail: Option<(FockState, FockState, String)>) -> Report {
    Report {
        relation: name,
        family: Some(Family::TensorSp4),
        anchor: anchor.to_string(),
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

fn all_triples(cutoff: u32) -> Vec<(TripleLabel, FockState)> {
    let mut v = Vec::new();
    for s in FockSpace::new(cutoff, Sector::Even).enumerate() {
        for n0 in (s.nu1 % 2..=s.nu1.min(s.num1)).step_by(2) {
            let t = TripleLabel::new((s.nu1 - n0) / 2, n0, (s.num1 - n0) / 2, Convention::MinN0);
            v.push((t, s));
        }
    }
    v
}

/// Checks a prefactor on a set of triples: `q^(form) * c = 1`.
fn check_prefactor(gens: &GeneratorSet, p: &Prefactor, triples: &[(TripleLabel, FockState)]) -> Result<Option<(FockState, FockState, String)>, Error> {
    for &(t, s) in triples.iter().filter(|(t, _)| (p.applies)(*t)) {
        let v = tensor_monomial(gens, t)?;
        let c = match single(&v, s) {
            Ok(c) => c,
            Err(e) => return Ok(Some((FockState::new(0, 0), s, e))),
        };
        let got = &c * &q((p.quarters)(t, s) as i32);
        if got != QRationalFn::one() {
            return Ok(Some((FockState::new(0, 0), s, format!("{t}: prefactor * coefficient = {got}"))));
        }
    }
    Ok(None)
}

/// Numeric check in the orthonormal basis: `eta X|0>` is the unit vector
/// at its pair label.
fn check_normalized(gens: &GeneratorSet, triples: &[(TripleLabel, FockState)], qv: f64) -> Result<Option<(FockState, FockState, String)>, Error> {
    let num = |name: &str| gens.get(name).and_then(|g| g.to_numeric(qv));
    let (t1, t0, tm1) = (num("T_1")?, num("T_0")?, num("T_-1")?);
    let dim = t1.dim();
    let r2 = Deformation::Quantum.bracket_f64(2.0, qv);
    for &(t, s) in triples {
        let mut v = vec![0.0; dim];
        v[FockState::new(0, 0).index()] = 1.0;
        for _ in 0..t.nm1 {
            v = tm1.apply_vec(&v);
        }
        for _ in 0..t.n0 {
            v = t0.apply_vec(&v);
        }
        for _ in 0..t.n1 {
            v = t1.apply_vec(&v);
        }
        let (a, b, c) = ni(t);
        let p = -2 * (a - c) - 4 * a * (b + c) - 4 * c * (b + a);
        let g = gram(s, Deformation::Quantum).eval(qv)?;
        let eta = q(p as i32).eval(qv)? / (r2.powi(b as i32) * g).sqrt();
        let err = v
            .iter()
            .enumerate()
            .map(|(i, x)| (eta * x - if i == s.index() { 1.0 } else { 0.0 }).abs())
            .fold(0.0, f64::max);
        if err > MATRIX_TOL {
            return Ok(Some((FockState::new(0, 0), s, format!("{t}: |eta X|0> - e| = {err:.3e} at q={qv}"))));
        }
    }
    Ok(None)
}

/// Reports for one basis construction.
pub fn check_basis_construction(which: BasisCheck, cutoff: u32) -> Result<Vec<Report>, Error> {
    if cutoff < 6 {
        return Err(Error::CutoffTooSmall { cutoff, required: 6 });
    }
    let gens = GeneratorSet::build(Family::TensorSp4, FockSpace::full(cutoff))?;
    let mut out = Vec::new();
    let anchor = "tensor basis states";
    match which {
        BasisCheck::Ts => {
            let t = Instant::now();
            let mut fail = None;
            for s in FockSpace::full(cutoff).enumerate() {
                let mut word = vec![gens.get("td_1")?; s.nu1 as usize];
                word.extend(vec![gens.get("td_-1")?; s.num1 as usize]);
                let v = apply_word(&word, vacuum());
                let (x, y) = nus(s);
                let pre = q((-(x - y) - 2 * x * y) as i32);
                match single(&v, s) {
                    Ok(c) if &c * &pre == QRationalFn::one() => {}
                    Ok(c) => {
                        fail = Some((FockState::new(0, 0), s, format!("prefactor * coefficient = {}", &c * &pre)));
                        break;
                    }
                    Err(e) => {
                        fail = Some((FockState::new(0, 0), s, e));
                        break;
                    }
                }
            }
            out.push(basis_report("ts: |nu1,nu_-1> from t^+ powers".into(), anchor, Mode::ExactMonomial, cutoff, t, fail));
        }
        BasisCheck::SpbMinN0 | BasisCheck::SpbMaxN0 | BasisCheck::Eta => {
            let triples: Vec<(TripleLabel, FockState)> = match which {
                BasisCheck::Eta => all_triples(cutoff),
                _ => {
                    let conv = if which == BasisCheck::SpbMinN0 { Convention::MinN0 } else { Convention::MaxN0 };
                    FockSpace::new(cutoff, Sector::Even)
                        .enumerate()
                        .into_iter()
                        .map(|s| (triple_from_pair(s, conv).expect("even state"), s))
                        .collect()
                }
            };
            let forms: Vec<Prefactor> = match which {
                BasisCheck::Eta => prefactors().into_iter().take(1).collect(),
                BasisCheck::SpbMinN0 => prefactors().into_iter().filter(|p| p.name == "eta" || p.name.starts_with("even") || p.name.starts_with("odd")).collect(),
                _ => prefactors().into_iter().filter(|p| p.name == "eta" || p.name.starts_with("left") || p.name.starts_with("right")).collect(),
            };
            for p in &forms {
                let t = Instant::now();
                let fail = check_prefactor(&gens, p, &triples)?;
                out.push(basis_report(format!("{which}: {}", p.name), anchor, Mode::ExactMonomial, cutoff, t, fail));
            }
            for qv in super::relations::SAMPLE_QS {
                let t = Instant::now();
                let fail = check_normalized(&gens, &triples, qv)?;
                out.push(basis_report(format!("{which}: normalized state"), anchor, Mode::NumericAt(qv), cutoff, t, fail));
            }
        }
        BasisCheck::Rtt => {
            let t = Instant::now();
            let fail = rtt_failure(&gens, -8)?;
            out.push(basis_report("rtt: (T_0)^2 = q^-2 [2] T_1 T_-1".into(), anchor, Mode::ExactMonomial, cutoff, t, fail));
        }
    }
    Ok(out)
}

/// First nonzero entry of `(T_0)^2 - q^{quarters/4} [2] T_1 T_-1`.
fn rtt_failure(gens: &GeneratorSet, quarters: i32) -> Result<Option<(FockState, FockState, String)>, Error> {
    let t0 = gens.get("T_0")?;
    let rhs = gens.get("T_1")?.compose(gens.get("T_-1")?)?.scale(&QScalar::new(&Deformation::Quantum.two() * &q(quarters)));
    let sub = SafeSubspace::new(gens.space(), 4);
    Ok(t0.compose(t0)?.try_sub(&rhs)?.first_nonzero_on(&sub).map(|(s, d, v)| (s, d, v.to_string())))
}

/// The displayed basis-state forms that the construction does not
/// reproduce, each expected to fail.
pub fn check_printed_basis_forms(cutoff: u32) -> Result<Vec<Report>, Error> {
    if cutoff < 6 {
        return Err(Error::CutoffTooSmall { cutoff, required: 6 });
    }
    let gens = GeneratorSet::build(Family::TensorSp4, FockSpace::full(cutoff))?;
    let triples = all_triples(cutoff);
    let mut out = Vec::new();
    let t = Instant::now();
    let fail = rtt_failure(&gens, -4)?;
    out.push(basis_report("rtt: (T_0)^2 = q^-1 [2] T_1 T_-1 (printed)".into(), "tensor basis states", Mode::ExactMonomial, cutoff, t, fail));
    for p in printed_prefactors() {
        let t = Instant::now();
        let fail = check_prefactor(&gens, &p, &triples)?;
        out.push(basis_report(format!("spb_maxN0: {}", p.name), "tensor basis states", Mode::ExactMonomial, cutoff, t, fail));
    }
    Ok(out)
}
