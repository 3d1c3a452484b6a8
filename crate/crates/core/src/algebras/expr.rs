//! Operator expressions over named generators.
//!
//! Products compose left to right as written, so `X * Y` acts with `Y`
//! first. Diagonal leaves carry a closure evaluated per basis state and per
//! bracket arithmetic, which is how the classical specialization reuses the
//! deformed relation text unchanged.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::fock::FockState;
use crate::ops::{NumericOperator, QOperator};
use crate::qnum::{fmt_q_power, Deformation, QRationalFn, QScalar, Quarter};
use crate::Error;

use super::GeneratorSet;

type DiagClosure = dyn Fn(FockState, Deformation) -> QRationalFn + Send + Sync;

#[derive(Clone)]
pub struct DiagFn {
    pub label: String,
    f: Arc<DiagClosure>,
}

impl DiagFn {
    pub fn value(&self, s: FockState, d: Deformation) -> QRationalFn {
        (self.f)(s, d)
    }
}

#[derive(Clone)]
pub enum Expr {
    Zero,
    Gen(String),
    Diag(DiagFn),
    /// Scalar multiple of the identity.
    Scalar(QScalar, String),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
    Scale(QScalar, String, Box<Expr>),
    /// `[A, B]_{q^rho}`.
    QComm(Box<Expr>, Box<Expr>, Quarter),
}

pub fn g(name: &str) -> Expr {
    Expr::Gen(name.to_string())
}

pub fn diag<F>(label: &str, f: F) -> Expr
where
    F: Fn(FockState, Deformation) -> QRationalFn + Send + Sync + 'static,
{
    Expr::Diag(DiagFn { label: label.to_string(), f: Arc::new(f) })
}

pub fn scalar(c: impl Into<QScalar>, label: &str) -> Expr {
    Expr::Scalar(c.into(), label.to_string())
}

pub fn int(n: i64) -> Expr {
    Expr::Scalar(QScalar::int(n), n.to_string())
}

pub fn qcomm(a: Expr, b: Expr, rho: Quarter) -> Expr {
    Expr::QComm(Box::new(a), Box::new(b), rho)
}

pub fn comm(a: Expr, b: Expr) -> Expr {
    qcomm(a, b, Quarter::ZERO)
}

/// `c * e` with a display label for `c`.
pub fn sc(c: impl Into<QScalar>, label: &str, e: Expr) -> Expr {
    Expr::Scale(c.into(), label.to_string(), Box::new(e))
}

impl Expr {
    /// Maximal total raise of any product term, given the generators.
    pub fn reach(&self, gens: &GeneratorSet) -> Result<u32, Error> {
        Ok(match self {
            Expr::Zero | Expr::Diag(_) | Expr::Scalar(..) => 0,
            Expr::Gen(n) => gens.get(n)?.raise(),
            Expr::Sum(v) => v.iter().map(|e| e.reach(gens)).collect::<Result<Vec<_>, _>>()?.into_iter().max().unwrap_or(0),
            Expr::Prod(v) => v.iter().map(|e| e.reach(gens)).sum::<Result<u32, _>>()?,
            Expr::Scale(_, _, e) => e.reach(gens)?,
            Expr::QComm(a, b, _) => a.reach(gens)? + b.reach(gens)?,
        })
    }

    pub fn generators(&self, out: &mut Vec<String>) {
        match self {
            Expr::Gen(n) => {
                if !out.contains(n) {
                    out.push(n.clone())
                }
            }
            Expr::Sum(v) | Expr::Prod(v) => v.iter().for_each(|e| e.generators(out)),
            Expr::Scale(_, _, e) => e.generators(out),
            Expr::QComm(a, b, _) => {
                a.generators(out);
                b.generators(out)
            }
            _ => {}
        }
    }

    pub fn is_zero_expr(&self) -> bool {
        matches!(self, Expr::Zero)
    }

    /// Exact evaluation in the monomial basis. With a classical generator
    /// set, every scalar and diagonal is taken at `s = 1`.
    pub fn eval(&self, gens: &GeneratorSet) -> Result<QOperator, Error> {
        let d = gens.deformation();
        let space = gens.space();
        let fix = |c: &QScalar| -> Result<QScalar, Error> {
            match d {
                Deformation::Quantum => Ok(c.clone()),
                Deformation::Classical => c.at_one(),
            }
        };
        match self {
            Expr::Zero => Ok(QOperator::zero(space, d)),
            Expr::Gen(n) => Ok(gens.get(n)?.clone()),
            Expr::Diag(f) => Ok(QOperator::diagonal(space, d, |s| f.value(s, d))),
            Expr::Scalar(c, _) => Ok(QOperator::identity(space, d).scale(&fix(c)?)),
            Expr::Sum(v) => {
                let mut acc = QOperator::zero(space, d);
                for e in v {
                    acc = acc.try_add(&e.eval(gens)?)?;
                }
                Ok(acc)
            }
            Expr::Prod(v) => {
                let mut acc: Option<QOperator> = None;
                for e in v {
                    let x = e.eval(gens)?;
                    acc = Some(match acc {
                        None => x,
                        Some(a) => a.compose(&x)?,
                    });
                }
                Ok(acc.unwrap_or_else(|| QOperator::identity(space, d)))
            }
            Expr::Scale(c, _, e) => Ok(e.eval(gens)?.scale(&fix(c)?)),
            Expr::QComm(a, b, rho) => a.eval(gens)?.q_commutator(&b.eval(gens)?, *rho),
        }
    }

    /// Orthonormal-basis evaluation at `q` from pre-normalized generators.
    pub fn eval_numeric(&self, gens: &NumericGens) -> Result<NumericOperator, Error> {
        let (space, q, d) = (gens.space, gens.q, gens.deformation);
        let qq = if d == Deformation::Classical { 1.0 } else { q };
        Ok(match self {
            Expr::Zero => NumericOperator::zeros(space, q),
            Expr::Gen(n) => gens.get(n)?.clone(),
            Expr::Diag(f) => {
                let mut err = None;
                let m = NumericOperator::diagonal(space, q, |s| match f.value(s, d).eval(qq) {
                    Ok(v) => v,
                    Err(e) => {
                        err = Some(e);
                        f64::NAN
                    }
                });
                if let Some(e) = err {
                    return Err(e);
                }
                m
            }
            Expr::Scalar(c, _) => NumericOperator::identity(space, q).scale(c.eval(q, d)?),
            Expr::Sum(v) => {
                let mut acc = NumericOperator::zeros(space, q);
                for e in v {
                    acc = acc.add(&e.eval_numeric(gens)?);
                }
                acc
            }
            Expr::Prod(v) => {
                let mut acc: Option<NumericOperator> = None;
                for e in v {
                    let x = e.eval_numeric(gens)?;
                    acc = Some(match acc {
                        None => x,
                        Some(a) => a.matmul(&x),
                    });
                }
                acc.unwrap_or_else(|| NumericOperator::identity(space, q))
            }
            Expr::Scale(c, _, e) => e.eval_numeric(gens)?.scale(c.eval(q, d)?),
            Expr::QComm(a, b, rho) => {
                let (x, y) = (a.eval_numeric(gens)?, b.eval_numeric(gens)?);
                let f = if d == Deformation::Classical { 1.0 } else { q.powf(rho.to_f64()) };
                x.matmul(&y).add(&y.matmul(&x).scale(-f))
            }
        })
    }

    /// Flips one sign: the first term of the outermost sum or product, or a
    /// commutator into an anticommutator. Used by the mutation self-test.
    pub fn flip_first_sign(&self) -> Expr {
        match self {
            Expr::Sum(v) if !v.is_empty() => {
                let mut v = v.clone();
                v[0] = -v[0].clone();
                Expr::Sum(v)
            }
            Expr::QComm(a, b, rho) => {
                let ab = Expr::Prod(vec![(**a).clone(), (**b).clone()]);
                // AB + q^rho BA
                let ba = sc(QScalar::new(crate::qnum::q_power(*rho).into()), &fmt_q_power(rho.0), Expr::Prod(vec![(**b).clone(), (**a).clone()]));
                Expr::Sum(vec![ab, ba])
            }
            other => -other.clone(),
        }
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        match self {
            Expr::Zero => Expr::Zero,
            Expr::Scale(c, l, e) => Expr::Scale(c.neg(), neg_label(&l), e),
            Expr::Scalar(c, l) => Expr::Scalar(c.neg(), neg_label(&l)),
            e => Expr::Scale(QScalar::int(-1), "-1".into(), Box::new(e)),
        }
    }
}

fn neg_label(l: &str) -> String {
    match l.strip_prefix('-') {
        Some(rest) => rest.to_string(),
        None => format!("-{l}"),
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        match (self, rhs) {
            (Expr::Zero, e) | (e, Expr::Zero) => e,
            (Expr::Sum(mut a), Expr::Sum(b)) => {
                a.extend(b);
                Expr::Sum(a)
            }
            (Expr::Sum(mut a), e) => {
                a.push(e);
                Expr::Sum(a)
            }
            (a, b) => Expr::Sum(vec![a, b]),
        }
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        self + (-rhs)
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        match (self, rhs) {
            (Expr::Prod(mut a), Expr::Prod(b)) => {
                a.extend(b);
                Expr::Prod(a)
            }
            (Expr::Prod(mut a), e) => {
                a.push(e);
                Expr::Prod(a)
            }
            (e, Expr::Prod(mut b)) => {
                b.insert(0, e);
                Expr::Prod(b)
            }
            (a, b) => Expr::Prod(vec![a, b]),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Zero => write!(f, "0"),
            Expr::Gen(n) => write!(f, "{n}"),
            Expr::Diag(d) => write!(f, "{}", d.label),
            Expr::Scalar(_, l) => write!(f, "{l}"),
            Expr::Sum(v) => {
                for (i, e) in v.iter().enumerate() {
                    let s = e.to_string();
                    if i == 0 {
                        write!(f, "{s}")?;
                    } else if let Some(rest) = s.strip_prefix('-') {
                        write!(f, " - {rest}")?;
                    } else {
                        write!(f, " + {s}")?;
                    }
                }
                Ok(())
            }
            Expr::Prod(v) => {
                let parts: Vec<String> = v
                    .iter()
                    .map(|e| match e {
                        Expr::Sum(_) => format!("({e})"),
                        _ => e.to_string(),
                    })
                    .collect();
                write!(f, "{}", parts.join(" "))
            }
            Expr::Scale(_, l, e) => match (l.as_str(), &**e) {
                ("-1", e) => write!(f, "-{}", paren(e)),
                (l, e) => write!(f, "{l} {}", paren(e)),
            },
            Expr::QComm(a, b, rho) => {
                if rho.0 == 0 {
                    write!(f, "[{a}, {b}]")
                } else {
                    write!(f, "[{a}, {b}]_{}", fmt_q_power(rho.0))
                }
            }
        }
    }
}

fn paren(e: &Expr) -> String {
    match e {
        Expr::Sum(_) => format!("({e})"),
        _ => e.to_string(),
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Generators pre-converted to the orthonormal basis at one `q`.
pub struct NumericGens {
    pub space: crate::fock::FockSpace,
    pub q: f64,
    pub deformation: Deformation,
    map: std::collections::BTreeMap<String, NumericOperator>,
}

impl NumericGens {
    pub fn new(gens: &GeneratorSet, q: f64) -> Result<Self, Error> {
        let mut map = std::collections::BTreeMap::new();
        for (name, op) in gens.iter() {
            map.insert(name.to_string(), op.to_numeric(q)?);
        }
        Ok(Self { space: gens.space(), q, deformation: gens.deformation(), map })
    }

    pub fn get(&self, name: &str) -> Result<&NumericOperator, Error> {
        self.map.get(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}
