use std::time::Instant;

use rayon::prelude::*;

use num_rational::BigRational;

use crate::algebras::{casimir_relation, named_casimirs, relation_catalog, Casimir, Expr, Family, GeneratorSet, NumericGens, Relation};
use crate::fock::FockSpace;
use crate::ops::{QOperator, SafeSubspace};
use crate::Error;

use super::report::{Mode, Report, Verdict, Witness};

/// Default numeric sample points: one either side of `q = 1`.
pub const SAMPLE_QS: [f64; 2] = [0.7, 1.3];
/// Relative tolerance for numeric matrix residuals.
pub const MATRIX_TOL: f64 = 1e-10;
/// Absolute tolerance for scalar table comparisons.
pub const SCALAR_TOL: f64 = 1e-12;

/// Cutoff margin required above a relation's reach.
const MARGIN: u32 = 2;

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn report(rel: &Relation, gens: &GeneratorSet, mode: Mode, safe: &SafeSubspace, verdict: Verdict, t: Instant) -> Report {
    Report {
        relation: rel.name.clone(),
        family: Some(rel.family),
        anchor: rel.anchor.to_string(),
        mode,
        cutoff: gens.space().cutoff,
        safe_nu: safe.max_nu,
        verdict,
        wall_ms: ms(t),
    }
}

fn exact_zero(diff: &QOperator, safe: &SafeSubspace) -> Verdict {
    match diff.first_nonzero_on(safe) {
        None => Verdict::Holds,
        Some((src, dst, v)) => {
            let r = if diff.root2() { format!("sqrt([2]) ({v})") } else { v.to_string() };
            Verdict::Fails { witness: Witness { src, dst }, residual: r }
        }
    }
}

/// Checks one relation on `gens` in the given mode.
///
/// Exact mode fails with [`Error::Root2Mismatch`] when the two sides
/// carry different powers of `sqrt([2])`; use [`check_strongest`] to pick
/// the right mode automatically.
pub fn check_relation(rel: &Relation, gens: &GeneratorSet, mode: Mode) -> Result<Report, Error> {
    let t = Instant::now();
    let reach = rel.reach(gens)?;
    let cutoff = gens.space().cutoff;
    if cutoff < reach + MARGIN {
        return Err(Error::CutoffTooSmall { cutoff, required: reach + MARGIN });
    }
    let safe = SafeSubspace::new(gens.space(), reach);
    let verdict = match mode {
        Mode::ExactMonomial => exact_zero(&rel.difference().eval(gens)?, &safe),
        Mode::SquaredExact => squared_verdict(&rel.lhs.eval(gens)?, &rel.rhs.eval(gens)?, &safe),
        Mode::NumericAt(q) => {
            let ng = NumericGens::new(gens, q)?;
            numeric_verdict(&rel.lhs, &rel.rhs, &ng, &safe, MATRIX_TOL)?
        }
        Mode::Series => return Err(Error::InvalidArgument("relations have no series mode".into())),
    };
    Ok(report(rel, gens, mode, &safe, verdict, t))
}

/// Numeric residual check with pre-built numeric generators.
pub(crate) fn numeric_verdict(lhs: &Expr, rhs: &Expr, ng: &NumericGens, safe: &SafeSubspace, tol: f64) -> Result<Verdict, Error> {
    let l = lhs.eval_numeric(ng)?;
    let r = rhs.eval_numeric(ng)?;
    let scale = 1.0 + l.max_abs_on(safe).0.max(r.max_abs_on(safe).0);
    let (res, at) = l.add(&r.scale(-1.0)).max_abs_on(safe);
    if res <= tol * scale {
        Ok(Verdict::Holds)
    } else {
        let (src, dst) = at.expect("nonzero residual has a position");
        Ok(Verdict::Fails { witness: Witness { src, dst }, residual: format!("{res:.3e}") })
    }
}

/// Compares squared orthonormal matrix elements of the two sides exactly.
pub(crate) fn squared_verdict(lhs: &QOperator, rhs: &QOperator, safe: &SafeSubspace) -> Verdict {
    let mut positions: Vec<_> = lhs
        .entries()
        .chain(rhs.entries())
        .filter(|(s, _, _)| safe.contains(*s))
        .map(|(s, d, _)| (s, d))
        .collect();
    positions.sort();
    positions.dedup();
    for (src, dst) in positions {
        let a = lhs.gram_squared_element(src, dst);
        let b = rhs.gram_squared_element(src, dst);
        if a != b {
            return Verdict::Fails { witness: Witness { src, dst }, residual: (&a - &b).to_string() };
        }
    }
    Verdict::Holds
}

/// Exact check, falling back to squares plus numeric signs when the sides
/// differ by an odd power of `sqrt([2])`.
pub fn check_strongest(rel: &Relation, gens: &GeneratorSet) -> Result<Vec<Report>, Error> {
    match check_relation(rel, gens, Mode::ExactMonomial) {
        Ok(r) => Ok(vec![r]),
        Err(Error::Root2Mismatch) => {
            let mut out = vec![check_relation(rel, gens, Mode::SquaredExact)?];
            for q in SAMPLE_QS {
                out.push(check_relation(rel, gens, Mode::NumericAt(q))?);
            }
            Ok(out)
        }
        Err(e) => Err(e),
    }
}

/// Every relation of `rels` in its strongest mode, plus a numeric check at
/// each `q`. Reports come back sorted by relation name.
pub fn check_relations(rels: &[Relation], gens: &GeneratorSet, qs: &[f64]) -> Result<Vec<Report>, Error> {
    check_relations_tol(rels, gens, qs, MATRIX_TOL)
}

/// As [`check_relations`], with relative tolerance `tol` for the numeric checks.
pub fn check_relations_tol(rels: &[Relation], gens: &GeneratorSet, qs: &[f64], tol: f64) -> Result<Vec<Report>, Error> {
    let numeric: Vec<NumericGens> = qs.iter().map(|&q| NumericGens::new(gens, q)).collect::<Result<_, _>>()?;
    let per: Vec<Result<Vec<Report>, Error>> = rels
        .par_iter()
        .map(|rel| {
            let mut out = check_strongest(rel, gens)?;
            let reach = rel.reach(gens)?;
            let safe = SafeSubspace::new(gens.space(), reach);
            for ng in &numeric {
                let t = Instant::now();
                let v = numeric_verdict(&rel.lhs, &rel.rhs, ng, &safe, tol)?;
                out.push(report(rel, gens, Mode::NumericAt(ng.q), &safe, v, t));
            }
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in per {
        all.extend(r?);
    }
    all.sort_by(|a, b| a.relation.cmp(&b.relation).then(a.mode.to_string().cmp(&b.mode.to_string())));
    Ok(all)
}

/// The whole catalog of `family` at cutoff `cutoff`.
pub fn check_all(family: Family, cutoff: u32, qs: &[f64]) -> Result<Vec<Report>, Error> {
    if cutoff < 8 {
        return Err(Error::CutoffTooSmall { cutoff, required: 8 });
    }
    let gens = GeneratorSet::build(family, crate::fock::FockSpace::full(cutoff))?;
    check_relations(&relation_catalog(family), &gens, qs)
}

/// The catalog of `family` with the relation named `name` sign-flipped.
pub fn mutated_catalog(family: Family, name: &str) -> Result<Vec<Relation>, Error> {
    let mut rels = relation_catalog(family);
    let r = rels.iter_mut().find(|r| r.name == name).ok_or_else(|| Error::UnknownRelation(name.to_string()))?;
    *r = r.mutated();
    Ok(rels)
}

/// Every named Casimir and the general invariant for each coefficient tuple,
/// each against its closed form in the strongest mode.
pub fn check_casimirs(cutoff: u32, s2: &[[BigRational; 4]]) -> Result<Vec<Report>, Error> {
    let mut cs = named_casimirs();
    cs.extend(s2.iter().cloned().map(Casimir::S2));
    let mut out = Vec::new();
    for fam in Family::ALL {
        let rels: Vec<Relation> = cs.iter().filter(|c| c.family() == fam).map(casimir_relation).collect();
        let gens = GeneratorSet::build(fam, FockSpace::full(cutoff))?;
        for rel in &rels {
            out.extend(check_strongest(rel, &gens)?);
        }
    }
    Ok(out)
}
