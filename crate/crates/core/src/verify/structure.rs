//! Structural invariants of the generator sets and their `q -> 1` limits.

use std::time::Instant;

use rayon::prelude::*;

use crate::algebras::{adjoint_pairs, counterpart, relation_catalog, Family, GeneratorSet};
use crate::fock::{FockSpace, FockState};
use crate::ops::{QOperator, SafeSubspace};
use crate::qnum::{QScalar, Quarter};
use crate::Error;

use super::relations::{check_relations, SCALAR_TOL};
use super::report::{Mode, Report, Verdict, Witness};

fn report(name: String, family: Family, anchor: &str, mode: Mode, cutoff: u32, safe_nu: i64, t: Instant, fail: Option<(FockState, FockState, String)>) -> Report {
    Report {
        relation: name,
        family: Some(family),
        anchor: anchor.to_string(),
        mode,
        cutoff,
        safe_nu,
        verdict: match fail {
            None => Verdict::Holds,
            Some((src, dst, residual)) => Verdict::Fails { witness: Witness { src, dst }, residual },
        },
        wall_ms: t.elapsed().as_secs_f64() * 1e3,
    }
}

fn first_entry(op: &QOperator, sub: &SafeSubspace) -> Option<(FockState, FockState, String)> {
    op.first_nonzero_on(sub).map(|(s, d, v)| (s, d, v.to_string()))
}

/// Net change of `nu` along the entries of `g` (zero for an empty one).
fn degree(g: &QOperator) -> i64 {
    g.entries().next().map(|(s, d, _)| d.nu() as i64 - s.nu() as i64).unwrap_or(0)
}

/// `[P, g] = 0` for every bilinear generator; the single oscillators
/// anticommute with `P` instead.
pub fn check_parity_commutation(gens: &GeneratorSet) -> Result<Vec<Report>, Error> {
    let p = gens.get("P")?;
    let cutoff = gens.space().cutoff;
    let mut out = Vec::new();
    for (name, g) in gens.iter() {
        let t = Instant::now();
        let odd = degree(g) % 2 != 0;
        let rho = if odd { -1 } else { 1 };
        // AB - rho BA with rho = -1 is the anticommutator.
        let c = p.compose(g)?.try_sub(&g.compose(p)?.scale(&QScalar::int(rho)))?;
        let sub = SafeSubspace::new(gens.space(), g.raise());
        let fail = first_entry(&c, &sub);
        let label = if odd { format!("{{P, {name}}} = 0") } else { format!("[P, {name}] = 0") };
        out.push(report(label, gens.family(), "parity invariance", Mode::ExactMonomial, cutoff, sub.max_nu, t, fail));
    }
    Ok(out)
}

/// Bilinear generators preserve `H+` and `H-`; single oscillators swap them.
pub fn check_block_diagonal(gens: &GeneratorSet) -> Vec<Report> {
    let cutoff = gens.space().cutoff;
    gens.iter()
        .map(|(name, g)| {
            let t = Instant::now();
            let odd = degree(g) % 2 != 0;
            let fail = g
                .entries()
                .find(|(s, d, _)| (s.parity() != d.parity()) != odd)
                .map(|(s, d, v)| (s, d, v.to_string()));
            let label = if odd { format!("{name} swaps H+ and H-") } else { format!("{name} block-diagonal in H+ + H-") };
            report(label, gens.family(), "parity decomposition", Mode::ExactMonomial, cutoff, cutoff as i64, t, fail)
        })
        .collect()
}

/// `[g, N] = -k g`, where `k` is the net number of quanta `g` adds.
pub fn check_n_grading(gens: &GeneratorSet) -> Result<Vec<Report>, Error> {
    let n = gens.get("N")?;
    let cutoff = gens.space().cutoff;
    let mut out = Vec::new();
    for (name, g) in gens.iter() {
        let t = Instant::now();
        let k = degree(g);
        let lhs = g.q_commutator(n, Quarter(0))?;
        let diff = lhs.try_add(&g.scale(&QScalar::int(k)))?;
        let sub = SafeSubspace::new(gens.space(), g.raise());
        let mut fail = first_entry(&diff, &sub);
        if fail.is_none() {
            fail = g.entries().find(|(s, d, _)| d.nu() as i64 - s.nu() as i64 != k).map(|(s, d, _)| (s, d, format!("mixed N-degree in {name}")));
        }
        out.push(report(format!("[{name}, N] = {}{name}", -k), gens.family(), "N-grading", Mode::ExactMonomial, cutoff, sub.max_nu, t, fail));
    }
    Ok(out)
}

/// Declared conjugate pairs are transposes of each other in the
/// orthonormal basis at each `q`.
pub fn check_adjoints(gens: &GeneratorSet, qs: &[f64]) -> Result<Vec<Report>, Error> {
    let cutoff = gens.space().cutoff;
    let mut out = Vec::new();
    for (a, b) in adjoint_pairs(gens.family()) {
        for &q in qs {
            let t = Instant::now();
            let x = gens.get(a)?.to_numeric(q)?;
            let y = gens.get(b)?.to_numeric(q)?.transpose();
            let (res, at) = x.add(&y.scale(-1.0)).max_abs_on(&SafeSubspace::whole(gens.space()));
            let fail = (res > SCALAR_TOL).then(|| {
                let (s, d) = at.expect("nonzero residual has a position");
                (s, d, format!("{res:.3e}"))
            });
            out.push(report(format!("{a}^+ = {b}"), gens.family(), "conjugation", Mode::NumericAt(q), cutoff, cutoff as i64, t, fail));
        }
    }
    Ok(out)
}

/// Every structural check of one family at one cutoff.
pub fn check_structure(family: Family, cutoff: u32, qs: &[f64]) -> Result<Vec<Report>, Error> {
    let gens = GeneratorSet::build(family, FockSpace::full(cutoff))?;
    let mut out = check_parity_commutation(&gens)?;
    out.extend(check_block_diagonal(&gens));
    out.extend(check_n_grading(&gens)?);
    out.extend(check_adjoints(&gens, qs)?);
    Ok(out)
}

/// `s = 1` specialization of each deformed generator against its
/// classical counterpart, entry by entry.
pub fn check_specialization(family: Family, cutoff: u32) -> Result<Vec<Report>, Error> {
    let space = FockSpace::full(cutoff);
    let gens = GeneratorSet::build(family, space)?;
    let classical = GeneratorSet::build(Family::ClassicalSp4, space)?;
    let mut out = Vec::new();
    for (name, g) in gens.iter() {
        let t = Instant::now();
        let (cname, root2) =
            counterpart(family, name).ok_or_else(|| Error::UnknownGenerator(format!("{name} has no classical counterpart")))?;
        let want = classical.get(cname)?.clone().with_root2(root2);
        let got = g.specialize()?;
        let fail = if got.same_matrix(&want) {
            None
        } else {
            let pos = got
                .entries()
                .chain(want.entries())
                .map(|(s, d, _)| (s, d))
                .find(|(s, d)| got.entry(*d, *s) != want.entry(*d, *s))
                .unwrap_or((FockState::new(0, 0), FockState::new(0, 0)));
            let r = format!("{} vs {}", got.entry(pos.1, pos.0), want.entry(pos.1, pos.0));
            Some((pos.0, pos.1, r))
        };
        out.push(report(format!("{name} at q=1 equals {cname}"), family, "classical limit", Mode::ExactMonomial, cutoff, cutoff as i64, t, fail));
    }
    Ok(out)
}

/// Deformed catalog evaluated on the classical counterparts with every
/// scalar and bracket taken at `q = 1`.
pub fn check_degeneration(family: Family, cutoff: u32) -> Result<Vec<Report>, Error> {
    let gens = GeneratorSet::build(family, FockSpace::full(cutoff))?;
    let view = gens.classical_view()?;
    let mut reps = check_relations(&relation_catalog(family), &view, &[])?;
    for r in &mut reps {
        r.relation = format!("{} at q=1", r.relation);
        r.anchor = "classical limit".to_string();
    }
    Ok(reps)
}

/// Specialization and degeneration for both deformed families.
pub fn check_classical_limit(cutoff: u32) -> Result<Vec<Report>, Error> {
    let fams = [Family::QBosonSp4, Family::TensorSp4];
    let parts: Vec<Result<Vec<Report>, Error>> = fams
        .par_iter()
        .map(|&f| {
            let mut v = check_specialization(f, cutoff)?;
            v.extend(check_degeneration(f, cutoff)?);
            Ok(v)
        })
        .collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}
