//! The named relation catalog, one module per family.
//!
//! A relation `lhs = rhs` is checked as `lhs - rhs = 0` on the safe
//! subspace of its reach. Where a displayed formula does not hold for the
//! generators as constructed, the catalog carries the form that does and
//! [`printed_variants`] keeps the displayed one, expected to fail.

mod classical;
mod qboson;
mod tensor;

use serde::{Deserialize, Serialize};

use super::expr::Expr;
use super::{Family, GeneratorSet};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModeHint {
    ExactMonomial,
    NumericOnly,
}

#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub family: Family,
    pub anchor: &'static str,
    pub lhs: Expr,
    pub rhs: Expr,
    pub mode_hint: ModeHint,
    pub note: Option<&'static str>,
}

/// Serializable summary of a catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationInfo {
    pub name: String,
    pub family: Family,
    pub anchor: String,
    pub reach: u32,
    pub mode_hint: ModeHint,
    pub statement: String,
}

impl Relation {
    pub(crate) fn new(name: impl Into<String>, family: Family, anchor: &'static str, lhs: Expr, rhs: Expr) -> Self {
        Self { name: name.into(), family, anchor, lhs, rhs, mode_hint: ModeHint::ExactMonomial, note: None }
    }

    pub(crate) fn with_note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    /// Maximal total raise of any product term in `lhs - rhs`.
    pub fn reach(&self, gens: &GeneratorSet) -> Result<u32, Error> {
        Ok(self.lhs.reach(gens)?.max(self.rhs.reach(gens)?))
    }

    pub fn difference(&self) -> Expr {
        self.lhs.clone() - self.rhs.clone()
    }

    /// The same relation with exactly one sign flipped.
    pub fn mutated(&self) -> Relation {
        let mut r = self.clone();
        if self.rhs.is_zero_expr() {
            r.lhs = self.lhs.flip_first_sign();
        } else {
            r.rhs = -self.rhs.clone();
        }
        r.name = format!("{} [mutated]", self.name);
        r
    }

    pub fn statement(&self) -> String {
        format!("{} = {}", self.lhs, self.rhs)
    }

    pub fn info(&self, gens: &GeneratorSet) -> Result<RelationInfo, Error> {
        Ok(RelationInfo {
            name: self.name.clone(),
            family: self.family,
            anchor: self.anchor.to_string(),
            reach: self.reach(gens)?,
            mode_hint: self.mode_hint,
            statement: self.statement(),
        })
    }
}

pub fn relation_catalog(family: Family) -> Vec<Relation> {
    match family {
        Family::ClassicalSp4 => classical::catalog(),
        Family::QBosonSp4 => qboson::catalog(),
        Family::TensorSp4 => tensor::catalog(),
    }
}

/// Displayed forms that the constructed generators do not satisfy.
pub fn printed_variants(family: Family) -> Vec<Relation> {
    match family {
        Family::TensorSp4 => tensor::printed(),
        _ => Vec::new(),
    }
}

/// Building blocks shared by the catalog and the Casimir definitions.
pub(crate) mod terms {
    use crate::algebras::expr::{diag, Expr};
    use crate::fock::FockState;
    use crate::qnum::{ratio, Deformation, QRationalFn, QScalar, Quarter};

    /// `2 J_0 = nu_1 - nu_-1`.
    pub fn m2(s: FockState) -> i32 {
        s.nu1 as i32 - s.num1 as i32
    }

    pub fn half() -> QScalar {
        QScalar::new(QRationalFn::from_rational(ratio(1, 2)))
    }

    pub fn two() -> QScalar {
        QScalar::new(Deformation::Quantum.two())
    }

    pub fn inv_two() -> QScalar {
        QScalar::new(QRationalFn::one().div(&Deformation::Quantum.two()).expect("[2] != 0"))
    }

    /// `q^(x/4)`.
    pub fn q_sc(quarters: i32) -> QScalar {
        QScalar::new(Deformation::Quantum.pow(Quarter(quarters)))
    }

    /// Diagonal `q^(k J_0)`.
    pub fn qj0(k: i32) -> Expr {
        let label = match k {
            1 => "q^(J_0)".to_string(),
            -1 => "q^(-J_0)".to_string(),
            k => format!("q^({k}J_0)"),
        };
        diag(&label, move |s, d| d.pow(Quarter(2 * k * m2(s))))
    }

    /// `q^(-2 J_0)`, the factor closing every tensor commutator.
    pub fn qm2j0() -> Expr {
        qj0(-2)
    }

    /// `[N + shift]`.
    pub fn nbr(label: &str, shift: i64) -> Expr {
        diag(label, move |s, d| d.int(s.nu() as i64 + shift))
    }

    /// `[N_k + shift]`.
    pub fn nk_br(k: i32, shift: i64) -> Expr {
        let label = if shift == 0 { format!("[N_{k}]") } else { format!("[N_{k}{shift:+}]") };
        diag(&label, move |s, d| d.int(occ(s, k) as i64 + shift))
    }

    /// `q^(c N_k)` with `c` in quarters.
    pub fn q_nk(k: i32, quarters: i32) -> Expr {
        let label = format!("q^({}N_{k})", crate::qnum::Quarter(quarters));
        diag(&label, move |s, d| d.pow(Quarter(quarters * occ(s, k) as i32)))
    }

    pub fn occ(s: FockState, k: i32) -> u32 {
        if k == 1 {
            s.nu1
        } else {
            s.num1
        }
    }

    /// Identity times `[2J_0]`.
    pub fn two_j0_br() -> Expr {
        diag("[2J_0]", |s, d| d.int(m2(s) as i64))
    }
}
