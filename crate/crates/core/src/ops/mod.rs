//! Sparse operators over exact scalars on the truncated Fock space.
//!
//! Matrices are stored in the unnormalized monomial basis
//! `e(nu1, nu_-1) = (a_1^+)^nu1 (a_-1^+)^nu_-1 |0>`, where every generator
//! has Laurent-polynomial entries. Normalized matrix elements are only
//! reached through [`QOperator::gram_squared_element`] (exactly, squared)
//! or [`QOperator::to_numeric`] (in floating point).
//!
//! Truncation: an operator built on cutoff `L` silently drops components
//! that would leave the space. `raise` records how far above its source a
//! product can travel; a relation is only meaningful on sources with
//! `nu <= L - reach` ([`SafeSubspace`]).

mod numeric;

pub use numeric::NumericOperator;

use serde::{Deserialize, Serialize};

use crate::fock::{FockSpace, FockState, Sector};
use crate::qnum::{Deformation, QRationalFn, QScalar, Quarter};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisTag {
    Monomial,
    NormalizedNumeric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SafeSubspace {
    pub space: FockSpace,
    /// Largest source `nu` checked; negative means empty.
    pub max_nu: i64,
}

impl SafeSubspace {
    pub fn new(space: FockSpace, reach: u32) -> Self {
        Self { space, max_nu: space.cutoff as i64 - reach as i64 }
    }

    pub fn whole(space: FockSpace) -> Self {
        Self::new(space, 0)
    }

    pub fn contains(&self, s: FockState) -> bool {
        (s.nu() as i64) <= self.max_nu && self.space.contains(s)
    }

    pub fn with_sector(mut self, sector: Sector) -> Self {
        self.space.sector = sector;
        self
    }

    pub fn states(&self) -> Vec<FockState> {
        self.space.enumerate().into_iter().filter(|s| self.contains(*s)).collect()
    }
}

/// Column entry: (target index, value).
type Column = Vec<(usize, QRationalFn)>;

#[derive(Clone, Debug)]
pub struct QOperator {
    space: FockSpace,
    cols: Vec<Column>,
    raise: u32,
    lower: u32,
    root2: bool,
    deformation: Deformation,
    diagonal: bool,
}

/// `<e|e> = [nu1]! [nu_-1]!` (or `nu1! nu_-1!` classically).
pub fn gram(state: FockState, d: Deformation) -> QRationalFn {
    &d.factorial(state.nu1 as i64) * &d.factorial(state.num1 as i64)
}

/// [`gram`] at `q` in double precision, without building the exact product.
pub fn gram_f64(state: FockState, d: Deformation, q: f64) -> f64 {
    let fact = |n: u32| (1..=n).map(|k| d.bracket_f64(k as f64, q)).product::<f64>();
    fact(state.nu1) * fact(state.num1)
}

fn push_sorted(col: &mut Column, idx: usize, v: QRationalFn) {
    if v.is_zero() {
        return;
    }
    match col.binary_search_by_key(&idx, |(i, _)| *i) {
        Ok(p) => {
            let s = &col[p].1 + &v;
            if s.is_zero() {
                col.remove(p);
            } else {
                col[p].1 = s;
            }
        }
        Err(p) => col.insert(p, (idx, v)),
    }
}

impl QOperator {
    /// Builds an operator column by column. Targets above the cutoff are
    /// dropped; targets violating the declared `raise`/`lower` panic, since
    /// that is a construction bug rather than an input error.
    pub fn from_fn<F>(space: FockSpace, d: Deformation, raise: u32, lower: u32, f: F) -> Self
    where
        F: Fn(FockState) -> Vec<(FockState, QRationalFn)>,
    {
        let space = FockSpace::full(space.cutoff);
        let dim = space.full_dim();
        let mut cols = vec![Vec::new(); dim];
        for (j, col) in cols.iter_mut().enumerate() {
            let src = FockState::from_index(j);
            for (dst, v) in f(src) {
                let dnu = dst.nu() as i64 - src.nu() as i64;
                assert!(
                    dnu <= raise as i64 && -dnu <= lower as i64,
                    "entry {src} -> {dst} violates declared reach (+{raise}/-{lower})"
                );
                if dst.nu() <= space.cutoff {
                    push_sorted(col, dst.index(), v);
                }
            }
        }
        Self { space, cols, raise, lower, root2: false, deformation: d, diagonal: false }
    }

    pub fn diagonal<F>(space: FockSpace, d: Deformation, f: F) -> Self
    where
        F: Fn(FockState) -> QRationalFn,
    {
        let mut op = Self::from_fn(space, d, 0, 0, |s| vec![(s, f(s))]);
        op.diagonal = true;
        op
    }

    pub fn identity(space: FockSpace, d: Deformation) -> Self {
        Self::diagonal(space, d, |_| QRationalFn::one())
    }

    pub fn zero(space: FockSpace, d: Deformation) -> Self {
        let mut op = Self::from_fn(space, d, 0, 0, |_| Vec::new());
        op.diagonal = true;
        op
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn raise(&self) -> u32 {
        self.raise
    }

    pub fn lower(&self) -> u32 {
        self.lower
    }

    pub fn root2(&self) -> bool {
        self.root2
    }

    pub fn deformation(&self) -> Deformation {
        self.deformation
    }

    pub fn basis_tag(&self) -> BasisTag {
        BasisTag::Monomial
    }

    pub fn is_flagged_diagonal(&self) -> bool {
        self.diagonal
    }

    pub fn with_root2(mut self, on: bool) -> Self {
        self.root2 = on;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Image of a basis vector: `A e(src) = sum entry * e(dst)`.
    pub fn apply(&self, src: FockState) -> Vec<(FockState, QRationalFn)> {
        if src.nu() > self.space.cutoff {
            return Vec::new();
        }
        self.cols[src.index()].iter().map(|(i, v)| (FockState::from_index(*i), v.clone())).collect()
    }

    pub fn entry(&self, dst: FockState, src: FockState) -> QRationalFn {
        if src.nu() > self.space.cutoff || dst.nu() > self.space.cutoff {
            return QRationalFn::zero();
        }
        let col = &self.cols[src.index()];
        match col.binary_search_by_key(&dst.index(), |(i, _)| *i) {
            Ok(p) => col[p].1.clone(),
            Err(_) => QRationalFn::zero(),
        }
    }

    /// All nonzero entries as `(src, dst, value)`, sources in enumeration order.
    pub fn entries(&self) -> impl Iterator<Item = (FockState, FockState, &QRationalFn)> {
        self.cols.iter().enumerate().flat_map(|(j, col)| {
            col.iter().map(move |(i, v)| (FockState::from_index(j), FockState::from_index(*i), v))
        })
    }

    fn check_compatible(&self, other: &QOperator) -> Result<(), Error> {
        if self.space.cutoff != other.space.cutoff {
            return Err(Error::SpaceMismatch);
        }
        if self.deformation != other.deformation {
            return Err(Error::DeformationMismatch);
        }
        Ok(())
    }

    /// Matrix product `self * other`.
    pub fn compose(&self, other: &QOperator) -> Result<QOperator, Error> {
        self.check_compatible(other)?;
        let both = self.root2 && other.root2;
        let two = self.deformation.two();
        let cols = other
            .cols
            .iter()
            .map(|bcol| {
                let mut out = Vec::new();
                for (k, b) in bcol {
                    for (i, a) in &self.cols[*k] {
                        let v = a * b;
                        push_sorted(&mut out, *i, if both { &v * &two } else { v });
                    }
                }
                out
            })
            .collect();
        Ok(QOperator {
            space: self.space,
            cols,
            raise: self.raise + other.raise,
            lower: self.lower + other.lower,
            root2: self.root2 ^ other.root2,
            deformation: self.deformation,
            diagonal: self.diagonal && other.diagonal,
        })
    }

    /// Sum; the zero operator is compatible with either `sqrt([2])` flag.
    pub fn try_add(&self, other: &QOperator) -> Result<QOperator, Error> {
        self.check_compatible(other)?;
        let root2 = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.root2,
            (_, true) => self.root2,
            _ if self.root2 != other.root2 => return Err(Error::Root2Mismatch),
            _ => self.root2,
        };
        let mut cols = self.cols.clone();
        for (col, ocol) in cols.iter_mut().zip(&other.cols) {
            for (i, v) in ocol {
                push_sorted(col, *i, v.clone());
            }
        }
        Ok(QOperator {
            space: self.space,
            cols,
            raise: self.raise.max(other.raise),
            lower: self.lower.max(other.lower),
            root2,
            deformation: self.deformation,
            diagonal: self.diagonal && other.diagonal,
        })
    }

    pub fn try_sub(&self, other: &QOperator) -> Result<QOperator, Error> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> QOperator {
        self.map_entries(|v| -v)
    }

    fn map_entries<F: Fn(&QRationalFn) -> QRationalFn>(&self, f: F) -> QOperator {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, v)| (*i, f(v))).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        QOperator { cols, ..self.clone_meta() }
    }

    fn clone_meta(&self) -> QOperator {
        QOperator {
            space: self.space,
            cols: Vec::new(),
            raise: self.raise,
            lower: self.lower,
            root2: self.root2,
            deformation: self.deformation,
            diagonal: self.diagonal,
        }
    }

    pub fn scale(&self, c: &QScalar) -> QOperator {
        let factor = if c.root2 && self.root2 { &c.value * &self.deformation.two() } else { c.value.clone() };
        let mut out = self.map_entries(|v| v * &factor);
        out.root2 = self.root2 ^ c.root2;
        out
    }

    /// `[A, B]_{q^rho} = AB - q^rho BA`.
    pub fn q_commutator(&self, other: &QOperator, rho: Quarter) -> Result<QOperator, Error> {
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        let qr = QScalar::new(self.deformation.pow(rho));
        ab.try_sub(&ba.scale(&qr))
    }

    /// First nonzero entry with source in `sub`: `(src, dst, value)`.
    pub fn first_nonzero_on(&self, sub: &SafeSubspace) -> Option<(FockState, FockState, QRationalFn)> {
        self.entries().find(|(s, _, _)| sub.contains(*s)).map(|(s, d, v)| (s, d, v.clone()))
    }

    pub fn is_zero_on(&self, sub: &SafeSubspace) -> bool {
        self.first_nonzero_on(sub).is_none()
    }

    /// Diagonal entries on `sub`, failing at the first off-diagonal entry.
    pub fn diagonal_spectrum(&self, sub: &SafeSubspace) -> Result<Vec<(FockState, QRationalFn)>, Error> {
        if let Some((src, dst, _)) = self.entries().find(|(s, d, _)| sub.contains(*s) && s != d) {
            return Err(Error::NotDiagonal { src, dst });
        }
        Ok(sub.states().into_iter().map(|s| (s, self.entry(s, s))).collect())
    }

    /// Exact square of the orthonormal-basis matrix element
    /// `<dst|A|src>^2 = entry^2 * G(dst) / G(src)`.
    pub fn gram_squared_element(&self, src: FockState, dst: FockState) -> QRationalFn {
        let d = self.deformation;
        let e = self.entry(dst, src);
        if e.is_zero() {
            return e;
        }
        let sq = QScalar { value: e, root2: self.root2 }.squared(d);
        let ratio = gram(dst, d).div(&gram(src, d)).expect("Gram entries are nonzero");
        &sq * &ratio
    }

    /// Orthonormal-basis matrix at `q`, `sqrt([2])` folded in.
    pub fn to_numeric(&self, q: f64) -> Result<NumericOperator, Error> {
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::NonPositiveQ(q));
        }
        let d = self.deformation;
        let dim = self.space.full_dim();
        let norms: Vec<f64> = (0..dim).map(|i| gram_f64(FockState::from_index(i), d, q)).collect();
        let r2 = if self.root2 { d.bracket_f64(2.0, q).sqrt() } else { 1.0 };
        let mut m = NumericOperator::zeros(self.space, q);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                let x = match d {
                    Deformation::Quantum => v.eval(q)?,
                    Deformation::Classical => v.eval(1.0)?,
                };
                m.set(*i, j, x * r2 * (norms[*i] / norms[j]).sqrt());
            }
        }
        Ok(m)
    }

    /// The `s = 1` specialization: entries replaced by their classical
    /// values, brackets becoming integers.
    pub fn specialize(&self) -> Result<QOperator, Error> {
        let mut cols = Vec::with_capacity(self.cols.len());
        for c in &self.cols {
            let mut out = Vec::with_capacity(c.len());
            for (i, v) in c {
                let x = v.at_one()?;
                push_sorted(&mut out, *i, QRationalFn::from_rational(x));
            }
            cols.push(out);
        }
        Ok(QOperator { cols, deformation: Deformation::Classical, ..self.clone_meta() })
    }

    /// Entrywise equality of matrices and flags.
    pub fn same_matrix(&self, other: &QOperator) -> bool {
        self.space.cutoff == other.space.cutoff
            && self.root2 == other.root2
            && self.cols.len() == other.cols.len()
            && self.cols.iter().zip(&other.cols).all(|(a, b)| a == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnum::{qi, LaurentPoly};

    fn creation(space: FockSpace) -> QOperator {
        QOperator::from_fn(space, Deformation::Quantum, 1, 0, |s| {
            vec![(FockState::new(s.nu1 + 1, s.num1), QRationalFn::one())]
        })
    }

    fn annihilation(space: FockSpace) -> QOperator {
        QOperator::from_fn(space, Deformation::Quantum, 0, 1, |s| match s.shifted(-1, 0) {
            Some(t) => vec![(t, qi(s.nu1 as i64).into())],
            None => vec![],
        })
    }

    #[test]
    fn compose_examples() {
        let sp = FockSpace::full(6);
        let ad = creation(sp);
        let a = annihilation(sp);
        let id = QOperator::identity(sp, Deformation::Quantum);
        assert!(id.compose(&ad).unwrap().same_matrix(&ad));
        let n = ad.compose(&a).unwrap();
        assert_eq!(n.apply(FockState::new(1, 0)), vec![(FockState::new(1, 0), QRationalFn::one())]);
        let m = a.compose(&ad).unwrap();
        assert_eq!(m.entry(FockState::VACUUM, FockState::VACUUM), QRationalFn::one());
        assert_eq!((m.raise(), m.lower()), (1, 1));
    }

    #[test]
    fn commutator_of_a_and_ad() {
        let sp = FockSpace::full(8);
        let c = annihilation(sp).q_commutator(&creation(sp), Quarter(0)).unwrap();
        let sub = SafeSubspace::new(sp, 2);
        for (s, v) in c.diagonal_spectrum(&sub).unwrap() {
            let n = s.nu1 as i64;
            assert_eq!(v, QRationalFn::from(&qi(n + 1) - &qi(n)));
        }
        assert!(creation(sp).q_commutator(&creation(sp), Quarter(0)).unwrap().is_zero());
        assert!(!creation(sp).is_zero_on(&sub));
    }

    #[test]
    fn gram_and_numeric() {
        let sp = FockSpace::full(4);
        let ad = creation(sp);
        let id = QOperator::identity(sp, Deformation::Quantum);
        assert_eq!(id.gram_squared_element(FockState::new(2, 1), FockState::new(2, 1)), QRationalFn::one());
        let m = ad.to_numeric(2.0).unwrap();
        assert!((m.get(FockState::new(2, 0), FockState::new(1, 0)) - 2.5f64.sqrt()).abs() < 1e-14);
        let m1 = ad.to_numeric(1.0).unwrap();
        assert_eq!(m1.get(FockState::new(1, 0), FockState::VACUUM), 1.0);
        assert!(ad.to_numeric(0.0).is_err());
    }

    #[test]
    fn root2_bookkeeping() {
        let sp = FockSpace::full(4);
        let id = QOperator::identity(sp, Deformation::Quantum);
        let r = id.clone().with_root2(true);
        let rr = r.compose(&r).unwrap();
        assert!(!rr.root2());
        assert_eq!(rr.entry(FockState::VACUUM, FockState::VACUUM), QRationalFn::from(qi(2)));
        assert!(matches!(r.try_add(&id), Err(Error::Root2Mismatch)));
        assert!(r.try_add(&QOperator::zero(sp, Deformation::Quantum)).unwrap().root2());
        let sq = r.gram_squared_element(FockState::VACUUM, FockState::VACUUM);
        assert_eq!(sq, QRationalFn::from(qi(2)));
        let _ = LaurentPoly::one();
    }

    #[test]
    #[should_panic(expected = "violates declared reach")]
    fn reach_is_enforced() {
        let sp = FockSpace::full(4);
        let _ = QOperator::from_fn(sp, Deformation::Quantum, 0, 0, |s| {
            vec![(FockState::new(s.nu1 + 1, s.num1), QRationalFn::one())]
        });
    }
}
