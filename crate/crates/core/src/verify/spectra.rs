//! Casimir spectra and the discrete-series labels derived from them.
//!
//! A discrete-series label `phi` solves `phi(phi + 2c) = lambda` for a
//! Casimir eigenvalue `lambda`, with `c = 1/2` classically, `[1/2]` for
//! su_q^0(1,1) and `[1/2]_2` for su_q^{+/-}(1,1). Of the two roots
//! `-c +/- sqrt(lambda + c^2)` the negative one is taken.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::Signed;

use crate::algebras::{casimir, Casimir, Family, GeneratorSet};
use crate::fock::{FockSpace, FockState, Sector};
use crate::ops::SafeSubspace;
use crate::qnum::{bracket_sqrt, q_number, ratio, rational_sqrt, Deformation, Half, QRationalFn, Quarter};
use crate::Error;

use super::report::{Mode, Report, Verdict, Witness};
use super::relations::SCALAR_TOL;

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumRow {
    /// Quantum label of the row (`m`, `nu`, `nu_1`, ...).
    pub key: String,
    /// Display form of the row value.
    pub value: String,
    pub exact: QRationalFn,
    /// Values at the table's sample points.
    pub numeric: Vec<f64>,
    /// Derived series label, when the table has one.
    pub series: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumTable {
    pub label: String,
    pub key_name: String,
    pub value_name: String,
    pub qs: Vec<f64>,
    pub rows: Vec<SpectrumRow>,
}

impl SpectrumTable {
    pub fn render(&self) -> String {
        let mut out = format!("# {}\n", self.label);
        let has_series = self.rows.iter().any(|r| r.series.is_some());
        let _ = write!(out, "{:<8} {:<20}", self.key_name, self.value_name);
        if has_series {
            let _ = write!(out, " {:<20}", "series");
        }
        for q in &self.qs {
            let _ = write!(out, " {:>16}", format!("q={q}"));
        }
        out = out.trim_end().to_string();
        out.push('\n');
        for r in &self.rows {
            let mut line = format!("{:<8} {:<20}", r.key, r.value);
            if has_series {
                let _ = write!(line, " {:<20}", r.series.as_deref().unwrap_or("-"));
            }
            for v in &r.numeric {
                let _ = write!(line, " {v:>16.12}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Which table of the su_q^0(1,1) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhiQLabel {
    /// `phi_1^q = [m] - [1/2]`.
    First,
    /// `phi_2^q = -[m] - [1/2]`.
    Second,
}

impl PhiQLabel {
    pub fn name(self) -> &'static str {
        match self {
            PhiQLabel::First => "phi_1^q",
            PhiQLabel::Second => "phi_2^q",
        }
    }
}

fn bracket(x: Quarter, m: u32) -> QRationalFn {
    q_number(x, m).expect("m >= 1")
}

/// `-[x] - [1/2]`, written the way the tables print it.
fn phi_q_label(x: Quarter) -> String {
    match x.0 {
        0 => "-[1/2]".to_string(),
        2 => "-2[1/2]".to_string(),
        _ => format!("-[{x}]-[1/2]"),
    }
}

fn eigen_by_shell(c: &Casimir, cutoff: u32, sector: Sector) -> Result<Vec<(i64, FockState, QRationalFn)>, Error> {
    let gens = GeneratorSet::build(c.family(), FockSpace::full(cutoff))?;
    let op = casimir(c, &gens)?;
    let reach = c.defining().reach(&gens)?;
    let sub = SafeSubspace::new(gens.space(), reach).with_sector(sector);
    let mut seen: BTreeMap<i64, QRationalFn> = BTreeMap::new();
    let mut rows = Vec::new();
    for (s, v) in op.diagonal_spectrum(&sub)? {
        let key = c.shell(s);
        match seen.get(&key) {
            Some(prev) if *prev != v => {
                return Err(Error::InvalidArgument(format!("{c} eigenvalue is not constant on {} = {key} (at {s})", c.shell_name())));
            }
            Some(_) => {}
            None => {
                seen.insert(key, v.clone());
                rows.push((key, s, v));
            }
        }
    }
    Ok(rows)
}

fn numeric_row(v: &QRationalFn, qs: &[f64]) -> Result<Vec<f64>, Error> {
    qs.iter().map(|&q| v.eval(q).map(|x| x + 0.0)).collect()
}

fn shell_key(c: &Casimir, key: i64) -> String {
    match c.shell_name() {
        "m" => Half(key as i32).to_string(),
        _ => key.to_string(),
    }
}

/// Negative root of `phi(phi + 1) = lambda` for rational `lambda`.
fn classical_phi(lambda: &BigRational) -> Option<BigRational> {
    let disc = lambda + ratio(1, 4);
    rational_sqrt(&disc).map(|r| ratio(-1, 2) - r)
}

/// Both roots of `phi(phi + 1) = lambda`, negative ones only.
fn classical_phis(lambda: &BigRational) -> Vec<BigRational> {
    let Some(r) = rational_sqrt(&(lambda + ratio(1, 4))) else { return Vec::new() };
    let mut v = vec![ratio(-1, 2) + &r, ratio(-1, 2) - &r];
    v.retain(|x| x.is_negative());
    v.dedup();
    v
}

/// Table of a Casimir's eigenvalues, one row per shell of its quantum
/// label, in enumeration order of `sector`.
pub fn casimir_table(c: &Casimir, cutoff: u32, sector: Sector, qs: &[f64]) -> Result<SpectrumTable, Error> {
    let d = c.family().deformation();
    let qs: Vec<f64> = if d == Deformation::Classical { Vec::new() } else { qs.to_vec() };
    let mut rows = Vec::new();
    for (key, _, v) in eigen_by_shell(c, cutoff, sector)? {
        let series = match c {
            Casimir::C2Su0 | Casimir::C2SuPm(_) => {
                let lam = v.at_one()?;
                let phis = classical_phis(&lam);
                Some(phis.iter().map(|p| format!("phi={p}")).collect::<Vec<_>>().join(","))
            }
            Casimir::K0Sq => {
                let h = Deformation::Quantum.bracket(Quarter(2));
                bracket_sqrt(&(&v + &(&h * &h)), 1, Quarter(4 * cutoff as i32)).map(|x| format!("phi^q={}", phi_q_label(x)))
            }
            Casimir::C2SuqPm(_) => {
                let h = bracket(Quarter(2), 2);
                bracket_sqrt(&(&v + &(&h * &h)), 2, Quarter(4)).map(|x| format!("qphi=+/-[{x}]_2-[1/2]_2"))
            }
            _ => None,
        };
        let value = match v.as_poly().and_then(|p| p.as_constant()) {
            Some(r) => r.to_string(),
            None => v.to_string(),
        };
        rows.push(SpectrumRow { key: shell_key(c, key), value, numeric: numeric_row(&v, &qs)?, exact: v, series });
    }
    Ok(SpectrumTable {
        label: format!("{c} by {}", c.shell_name()),
        key_name: c.shell_name().to_string(),
        value_name: "eigenvalue".to_string(),
        qs,
        rows,
    })
}

/// Classical `phi_1` (for `i0 <= 0`) or `phi_2` (for `i0 >= 0`) read off
/// the su^0(1,1) Casimir.
pub fn phi_classical_table(which: u8, cutoff: u32) -> Result<SpectrumTable, Error> {
    let sign: i64 = if which == 1 { -1 } else { 1 };
    let mut rows = Vec::new();
    let mut by_m: Vec<_> = eigen_by_shell(&Casimir::C2Su0, cutoff, Sector::All)?
        .into_iter()
        .filter(|(k, _, _)| k * sign >= 0)
        .collect();
    by_m.sort_by_key(|(k, _, _)| k.abs());
    for (k, s, v) in by_m {
        let lam = v.at_one()?;
        let phi = classical_phi(&lam).ok_or_else(|| Error::InvalidArgument(format!("no rational phi at {s}")))?;
        rows.push(SpectrumRow {
            key: Half(k as i32).to_string(),
            value: phi.to_string(),
            exact: QRationalFn::from_rational(phi),
            numeric: Vec::new(),
            series: None,
        });
    }
    Ok(SpectrumTable {
        label: format!("phi_{which} vs i_0 (i_0 {} 0)", if which == 1 { "<=" } else { ">=" }),
        key_name: "i_0".into(),
        value_name: format!("phi_{which}"),
        qs: Vec::new(),
        rows,
    })
}

/// Eigenvalues of `A_{mode}` on the shells `nu_{mode}` of the given parity,
/// the ladders of the su^{+/-}(1,1) series `phi = -1/4` (even) and
/// `phi = -3/4` (odd).
pub fn alpha_table(mode: i32, odd: bool, cutoff: u32) -> Result<SpectrumTable, Error> {
    let gens = GeneratorSet::build(Family::ClassicalSp4, FockSpace::full(cutoff))?;
    let p = if mode > 0 { "+" } else { "-" };
    let a = gens.get(&format!("A_{p}"))?;
    let mut rows = Vec::new();
    for n in (u32::from(odd)..=cutoff).step_by(2) {
        let s = if mode > 0 { FockState::new(n, 0) } else { FockState::new(0, n) };
        let v = a.entry(s, s);
        rows.push(SpectrumRow { key: n.to_string(), value: v.at_one()?.to_string(), exact: v, numeric: Vec::new(), series: None });
    }
    let phi = if odd { "-3/4" } else { "-1/4" };
    Ok(SpectrumTable {
        label: format!("alpha_{p} for phi = {phi}"),
        key_name: format!("nu_{}", if mode > 0 { "1" } else { "-1" }),
        value_name: format!("alpha_{p}"),
        qs: Vec::new(),
        rows,
    })
}

/// One of the two su_q^0(1,1) tables: `which = 1` runs over `m <= 0`,
/// `which = 2` over `m >= 0`. Values come from the negative root of the
/// deformed quadratic; `label` only names the column.
pub fn phi_q_table(which: u8, label: PhiQLabel, cutoff: u32, qs: &[f64]) -> Result<SpectrumTable, Error> {
    let sign: i64 = if which == 1 { -1 } else { 1 };
    let h = Deformation::Quantum.bracket(Quarter(2));
    let mut by_m: Vec<_> = eigen_by_shell(&Casimir::K0Sq, cutoff, Sector::All)?
        .into_iter()
        .filter(|(k, _, _)| k * sign >= 0)
        .collect();
    by_m.sort_by_key(|(k, _, _)| k.abs());
    let mut rows = Vec::new();
    for (k, s, v) in by_m {
        let x = bracket_sqrt(&(&v + &(&h * &h)), 1, Quarter(4 * cutoff as i32))
            .ok_or_else(|| Error::InvalidArgument(format!("no bracket root at {s}")))?;
        let phi = &(-&bracket(x, 1)) - &h;
        rows.push(SpectrumRow {
            key: Half(k as i32).to_string(),
            value: phi_q_label(x),
            numeric: numeric_row(&phi, qs)?,
            exact: phi,
            series: None,
        });
    }
    Ok(SpectrumTable {
        label: format!("{} vs m (m {} 0)", label.name(), if which == 1 { "<=" } else { ">=" }),
        key_name: "m".into(),
        value_name: label.name().into(),
        qs: qs.to_vec(),
        rows,
    })
}

/// `K^{+/-}_0` spectrum beside `A_{+/-}`, each row assigned to the deformed
/// series label whose `q -> 1` limit it continues.
pub fn qphi_table(mode: i32, cutoff: u32) -> Result<SpectrumTable, Error> {
    let qg = GeneratorSet::build(Family::QBosonSp4, FockSpace::full(cutoff))?;
    let cg = GeneratorSet::build(Family::ClassicalSp4, FockSpace::full(cutoff))?;
    let p = if mode > 0 { "+" } else { "-" };
    let k0 = qg.get(&format!("K{p}_0"))?;
    let a = cg.get(&format!("A_{p}"))?;
    let mut rows = Vec::new();
    for n in 0..=cutoff {
        let s = if mode > 0 { FockState::new(n, 0) } else { FockState::new(0, n) };
        let kv = k0.entry(s, s);
        let av = a.entry(s, s);
        if kv != av {
            return Err(Error::InvalidArgument(format!("K{p}_0 and A_{p} differ at {s}")));
        }
        let (label, limit) = if n % 2 == 0 { ("[1/4]_2-[1/2]_2", "-1/4") } else { ("-[1/4]_2-[1/2]_2", "-3/4") };
        rows.push(SpectrumRow {
            key: n.to_string(),
            value: kv.at_one()?.to_string(),
            exact: kv,
            numeric: Vec::new(),
            series: Some(format!("{label} -> {limit}")),
        });
    }
    Ok(SpectrumTable {
        label: format!("K{p}_0 spectrum and deformed series (A_{p} identical)"),
        key_name: format!("nu_{}", if mode > 0 { "1" } else { "-1" }),
        value_name: format!("K{p}_0 = A_{p}"),
        qs: Vec::new(),
        rows,
    })
}

/// Names accepted by [`named_table`], in the order the tables appear.
pub const TABLE_NAMES: [&str; 10] =
    ["phi1", "phi2", "alpha+even", "alpha+odd", "alpha-even", "alpha-odd", "phiq1", "phiq2", "qphi+", "qphi-"];

/// A table by short name; `qs` applies to the deformed tables.
pub fn named_table(name: &str, cutoff: u32, qs: &[f64]) -> Result<SpectrumTable, Error> {
    match name {
        "phi1" => phi_classical_table(1, cutoff),
        "phi2" => phi_classical_table(2, cutoff),
        "alpha+even" => alpha_table(1, false, cutoff),
        "alpha+odd" => alpha_table(1, true, cutoff),
        "alpha-even" => alpha_table(-1, false, cutoff),
        "alpha-odd" => alpha_table(-1, true, cutoff),
        "phiq1" => phi_q_table(1, PhiQLabel::First, cutoff, qs),
        "phiq2" => phi_q_table(2, PhiQLabel::Second, cutoff, qs),
        "qphi+" => qphi_table(1, cutoff),
        "qphi-" => qphi_table(-1, cutoff),
        _ => Err(Error::InvalidArgument(format!("unknown table '{name}' (one of {})", TABLE_NAMES.join(", ")))),
    }
}

/// The two roots `+/-[1/4]_2 - [1/2]_2` of the su_q^{+/-}(1,1) equation.
pub fn qphi_roots() -> (QRationalFn, QRationalFn) {
    let a = bracket(Quarter(1), 2);
    let h = bracket(Quarter(2), 2);
    (&a - &h, &(-&a) - &h)
}

fn table_report(name: &str, family: Family, anchor: &str, cutoff: u32, t: Instant, failure: Option<(FockState, String)>) -> Report {
    Report {
        relation: name.to_string(),
        family: Some(family),
        anchor: anchor.to_string(),
        mode: Mode::ExactMonomial,
        cutoff,
        safe_nu: cutoff as i64 - 2,
        verdict: match failure {
            None => Verdict::Holds,
            Some((s, r)) => Verdict::Fails { witness: Witness { src: s, dst: s }, residual: r },
        },
        wall_ms: t.elapsed().as_secs_f64() * 1e3,
    }
}

fn m_state(k: i64) -> FockState {
    if k >= 0 {
        FockState::new(k as u32, 0)
    } else {
        FockState::new(0, (-k) as u32)
    }
}

/// The closed-form rule a table column is compared against.
fn phi_q_rule(label: PhiQLabel, m: Half) -> QRationalFn {
    let h = Deformation::Quantum.bracket(Quarter(2));
    let bm = Deformation::Quantum.bracket(m.to_quarter());
    match label {
        PhiQLabel::First => &bm - &h,
        PhiQLabel::Second => &(-&bm) - &h,
    }
}

/// Checks the second su_q^0(1,1) table (`m >= 0`) under a column label.
pub fn check_phi_q_label(label: PhiQLabel, cutoff: u32, qs: &[f64]) -> Result<Report, Error> {
    let t = Instant::now();
    let table = phi_q_table(2, label, cutoff, qs)?;
    let mut failure = None;
    for (k, row) in table.rows.iter().enumerate() {
        let rule = phi_q_rule(label, Half(k as i32));
        if rule != row.exact {
            failure = Some((m_state(k as i64), format!("{} - ({}) != 0", row.value, rule)));
            break;
        }
    }
    let name = format!("phi^q table m >= 0 as {}", label.name());
    Ok(table_report(&name, Family::QBosonSp4, "su_q^0(1,1) discrete series", cutoff, t, failure))
}

/// All spectrum consistency checks that are expected to hold.
pub fn check_spectra(cutoff: u32, qs: &[f64]) -> Result<Vec<Report>, Error> {
    let mut out = Vec::new();

    // Classical phi tables: negative root equals the closed-form branch.
    for which in [1u8, 2] {
        let t = Instant::now();
        let table = phi_classical_table(which, cutoff)?;
        let sign = if which == 1 { -1 } else { 1 };
        let mut failure = None;
        for (k, row) in table.rows.iter().enumerate() {
            let i0 = ratio(sign * k as i64, 2);
            let rule = if which == 1 { &i0 - ratio(1, 2) } else { -&i0 - ratio(1, 2) };
            let lam = (&i0 + ratio(1, 2)) * (&i0 - ratio(1, 2));
            let phi = row.exact.at_one()?;
            if phi != rule || &phi * (&phi + ratio(1, 1)) != lam || !phi.is_negative() {
                failure = Some((m_state(sign * k as i64), format!("phi {phi} vs branch {rule}")));
                break;
            }
        }
        out.push(table_report(&format!("phi_{which} table"), Family::ClassicalSp4, "su0(1,1) discrete series", cutoff, t, failure));
    }

    // alpha ladders: A_{+/-} on the phi = -1/4 and -3/4 series.
    for mode in [1, -1] {
        let t = Instant::now();
        let c = Casimir::C2SuPm(mode);
        let mut failure = None;
        let lam = eigen_by_shell(&c, cutoff, Sector::All)?;
        let expect = ratio(-3, 16);
        if let Some((_, s, v)) = lam.iter().find(|(_, _, v)| v.at_one().map(|x| x != expect).unwrap_or(true)) {
            failure = Some((*s, format!("C2 = {v}")));
        }
        let phis = classical_phis(&expect);
        if phis != vec![ratio(-1, 4), ratio(-3, 4)] {
            failure = Some((FockState::new(0, 0), format!("roots {phis:?}")));
        }
        for odd in [false, true] {
            let table = alpha_table(mode, odd, cutoff)?;
            let phi = if odd { ratio(-3, 4) } else { ratio(-1, 4) };
            for (i, row) in table.rows.iter().enumerate() {
                let want = -&phi + BigRational::from_integer((i as i64).into());
                if row.exact.at_one()? != want {
                    failure.get_or_insert((FockState::new(0, 0), format!("alpha row {i}: {} != {want}", row.value)));
                }
            }
        }
        let p = if mode > 0 { "+" } else { "-" };
        out.push(table_report(&format!("alpha_{p} tables"), Family::ClassicalSp4, "su+/-(1,1) discrete series", cutoff, t, failure));
    }

    // Deformed phi^q tables: quadratic satisfied exactly, value negative,
    // numeric agreement with an independent float evaluation.
    for which in [1u8, 2] {
        let t = Instant::now();
        let label = if which == 1 { PhiQLabel::First } else { PhiQLabel::Second };
        let table = phi_q_table(which, label, cutoff, qs)?;
        let h = Deformation::Quantum.bracket(Quarter(2));
        let rows = eigen_by_shell(&Casimir::K0Sq, cutoff, Sector::All)?;
        let sign: i64 = if which == 1 { -1 } else { 1 };
        let mut failure = None;
        for (k, row) in table.rows.iter().enumerate() {
            let key = sign * k as i64;
            let m = Half(key as i32);
            let (_, s, lam) = rows.iter().find(|(kk, _, _)| *kk == key).expect("shell present");
            let phi = &row.exact;
            let lhs = phi * &(phi + &(&h + &h));
            if lhs != *lam || *phi != phi_q_rule(label, m) {
                failure = Some((*s, format!("phi^q {} fails the quadratic", row.value)));
                break;
            }
            for (&q, &v) in qs.iter().zip(&row.numeric) {
                let d = Deformation::Quantum;
                let f = -d.bracket_f64(m.to_f64().abs(), q) - d.bracket_f64(0.5, q);
                if (f - v).abs() > SCALAR_TOL || v >= 0.0 {
                    failure = Some((*s, format!("numeric {v} vs {f} at q={q}")));
                }
            }
        }
        out.push(table_report(&format!("{} table", label.name()), Family::QBosonSp4, "su_q^0(1,1) discrete series", cutoff, t, failure));
    }

    // Degeneracy in +/-m, removed by J_0.
    for c in [Casimir::C2Su0, Casimir::K0Sq] {
        let t = Instant::now();
        let rows = eigen_by_shell(&c, cutoff, Sector::All)?;
        let mut failure = None;
        for (k, s, v) in &rows {
            if *k > 0 {
                match rows.iter().find(|(kk, _, _)| *kk == -*k) {
                    Some((_, _, w)) if w == v => {}
                    _ => failure = Some((*s, format!("eigenvalue at m = {} not shared with -m", Half(*k as i32)))),
                }
            }
        }
        // Within each nu shell the pair (Casimir, J_0) must separate states.
        let gens = GeneratorSet::build(c.family(), FockSpace::full(cutoff))?;
        let j0 = gens.get(if c.family() == Family::ClassicalSp4 { "I_0" } else { "J_0" })?;
        let op = casimir(&c, &gens)?;
        let sub = SafeSubspace::new(gens.space(), c.defining().reach(&gens)?);
        let mut seen: BTreeMap<(u32, String, String), FockState> = BTreeMap::new();
        for s in sub.states() {
            let key = (s.nu(), op.entry(s, s).to_string(), j0.entry(s, s).to_string());
            if let Some(prev) = seen.insert(key, s) {
                failure.get_or_insert((s, format!("(Casimir, J_0) does not separate {prev} and {s}")));
            }
        }
        let name = format!("{c} degeneracy in +/-m, lifted by J_0");
        out.push(table_report(&name, c.family(), "degeneracy removal", cutoff, t, failure));
    }

    // su_q^{+/-}(1,1): constant Casimir, both deformed roots, limits and
    // the identification of K_0 with A.
    for mode in [1, -1] {
        let t = Instant::now();
        let c = Casimir::C2SuqPm(mode);
        let lam_expected = crate::algebras::casimir::c2_suq_pm_value();
        let mut failure = None;
        for (_, s, v) in eigen_by_shell(&c, cutoff, Sector::All)? {
            if v != lam_expected {
                failure = Some((s, format!("C2 = {v}")));
            }
        }
        let h = bracket(Quarter(2), 2);
        let (r1, r2) = qphi_roots();
        for (r, lim) in [(&r1, ratio(-1, 4)), (&r2, ratio(-3, 4))] {
            if &(r * &(r + &(&h + &h))) != &lam_expected || r.at_one()? != lim {
                failure.get_or_insert((FockState::new(0, 0), format!("root {r}")));
            }
            for &q in qs {
                if r.eval(q)? >= 0.0 {
                    failure.get_or_insert((FockState::new(0, 0), format!("root {r} not negative at q={q}")));
                }
            }
        }
        if let Err(e) = qphi_table(mode, cutoff) {
            failure.get_or_insert((FockState::new(0, 0), e.to_string()));
        }
        let p = if mode > 0 { "+" } else { "-" };
        out.push(table_report(&format!("qphi^{p} solutions and K{p}_0 = A_{p}"), Family::QBosonSp4, "su_q+/-(1,1) discrete series", cutoff, t, failure));
    }
    Ok(out)
}
