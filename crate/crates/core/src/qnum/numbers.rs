//! q-numbers `[X]_m`, q-factorials and quarter-integer powers of `q`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{rat, ratio, LaurentPoly};
use super::rational::QRationalFn;
use crate::Error;

/// A multiple of 1/4, stored as its numerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Quarter(pub i32);

impl Quarter {
    pub const ZERO: Quarter = Quarter(0);

    pub fn int(n: i32) -> Self {
        Quarter(4 * n)
    }

    pub fn half(twice: i32) -> Self {
        Quarter(2 * twice)
    }

    /// `num/den`, rejected unless it is a multiple of 1/4.
    pub fn from_ratio(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::InvalidArgument("zero denominator in exponent".into()));
        }
        let r = ratio(num, den) * rat(4);
        if !r.is_integer() {
            return Err(Error::NotQuarterInteger(format!("{num}/{den}")));
        }
        r.to_integer()
            .to_i32()
            .map(Quarter)
            .ok_or_else(|| Error::InvalidArgument("exponent out of range".into()))
    }

    pub fn from_rational(r: &BigRational) -> Result<Self, Error> {
        let x = r * rat(4);
        if !x.is_integer() {
            return Err(Error::NotQuarterInteger(r.to_string()));
        }
        x.to_integer()
            .to_i32()
            .map(Quarter)
            .ok_or_else(|| Error::InvalidArgument("exponent out of range".into()))
    }

    pub fn to_rational(self) -> BigRational {
        ratio(self.0 as i64, 4)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 4.0
    }

    pub fn abs(self) -> Self {
        Quarter(self.0.abs())
    }

    pub fn is_integer(self) -> bool {
        self.0 % 4 == 0
    }
}

impl std::ops::Add for Quarter {
    type Output = Quarter;
    fn add(self, rhs: Quarter) -> Quarter {
        Quarter(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Quarter {
    type Output = Quarter;
    fn sub(self, rhs: Quarter) -> Quarter {
        Quarter(self.0 - rhs.0)
    }
}

impl std::ops::Neg for Quarter {
    type Output = Quarter;
    fn neg(self) -> Quarter {
        Quarter(-self.0)
    }
}

impl std::ops::Mul<i32> for Quarter {
    type Output = Quarter;
    fn mul(self, rhs: i32) -> Quarter {
        Quarter(self.0 * rhs)
    }
}

impl fmt::Display for Quarter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_rational())
    }
}

/// A multiple of 1/2 (angular-momentum style labels `j`, `m`, `i0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Half(pub i32);

impl Half {
    pub fn to_quarter(self) -> Quarter {
        Quarter(2 * self.0)
    }

    pub fn to_rational(self) -> BigRational {
        ratio(self.0 as i64, 2)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }

    pub fn abs(self) -> Half {
        Half(self.0.abs())
    }
}

impl From<Half> for Quarter {
    fn from(h: Half) -> Quarter {
        h.to_quarter()
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `[n]_m` as an exact Laurent polynomial. `m = 0` is rejected.
pub fn q_int(n: i64, m: u32) -> Result<LaurentPoly, Error> {
    if m == 0 {
        return Err(Error::InvalidArgument("q-number base index m must be >= 1".into()));
    }
    Ok(q_int_m(n, m as i32))
}

/// `[n]` with `m = 1`.
pub fn qi(n: i64) -> LaurentPoly {
    q_int_m(n, 1)
}

fn q_int_m(n: i64, m: i32) -> LaurentPoly {
    // [n]_m = sum_{j=0}^{n-1} q^{m(n-1-2j)}, odd in n
    let sign = if n < 0 { -1 } else { 1 };
    let k = n.unsigned_abs() as i32;
    LaurentPoly::from_terms((0..k).map(|j| (4 * m * (k - 1 - 2 * j), rat(sign))))
}

/// `[x]_m` for quarter-integer `x`; a genuine rational function unless
/// `m x` is an integer multiple of `m`.
pub fn q_number(x: Quarter, m: u32) -> Result<QRationalFn, Error> {
    if m == 0 {
        return Err(Error::InvalidArgument("q-number base index m must be >= 1".into()));
    }
    if x.is_integer() {
        return Ok(q_int_m((x.0 / 4) as i64, m as i32).into());
    }
    let m = m as i32;
    let num = &LaurentPoly::s_pow(m * x.0) - &LaurentPoly::s_pow(-m * x.0);
    let den = &LaurentPoly::s_pow(4 * m) - &LaurentPoly::s_pow(-4 * m);
    QRationalFn::new(num, den)
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial(n: i64) -> Result<LaurentPoly, Error> {
    if n < 0 {
        return Err(Error::NegativeFactorial(n));
    }
    Ok((1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &qi(k)))
}

/// `q^x = s^(4x)`.
pub fn q_power(x: Quarter) -> LaurentPoly {
    LaurentPoly::s_pow(x.0)
}

pub fn eval(p: &LaurentPoly, q: f64) -> Result<f64, Error> {
    p.eval(q)
}

pub fn limit_q1(p: &LaurentPoly) -> BigRational {
    p.at_one()
}

/// Deformed (`q` generic) or classical (`s = 1`) bracket arithmetic. The two
/// families of generators share one construction path parameterised by this.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Deformation {
    Quantum,
    Classical,
}

impl Deformation {
    pub fn bracket(self, x: Quarter) -> QRationalFn {
        self.bracket_m(x, 1)
    }

    pub fn bracket_m(self, x: Quarter, m: u32) -> QRationalFn {
        match self {
            Deformation::Quantum => q_number(x, m.max(1)).expect("m >= 1"),
            Deformation::Classical => QRationalFn::from_rational(x.to_rational()),
        }
    }

    pub fn int(self, n: i64) -> QRationalFn {
        match self {
            Deformation::Quantum => qi(n).into(),
            Deformation::Classical => QRationalFn::from_int(n),
        }
    }

    pub fn pow(self, x: Quarter) -> QRationalFn {
        match self {
            Deformation::Quantum => q_power(x).into(),
            Deformation::Classical => QRationalFn::one(),
        }
    }

    pub fn factorial(self, n: i64) -> QRationalFn {
        match self {
            Deformation::Quantum => q_factorial(n).expect("nonnegative").into(),
            Deformation::Classical => {
                QRationalFn::from_rational(BigRational::from_integer(
                    (1..=n.max(0)).fold(BigInt::one(), |a, k| a * BigInt::from(k)),
                ))
            }
        }
    }

    /// `[2]`, the square of the one irrational scalar `sqrt([2])`.
    pub fn two(self) -> QRationalFn {
        self.int(2)
    }

    /// Double-precision `[x]` at `q`; classical ignores `q`.
    pub fn bracket_f64(self, x: f64, q: f64) -> f64 {
        match self {
            Deformation::Classical => x,
            Deformation::Quantum if (q - 1.0).abs() < 1e-300 => x,
            Deformation::Quantum => (q.powf(x) - q.powf(-x)) / (q - 1.0 / q),
        }
    }
}

/// An exact scalar optionally multiplied by `sqrt([2])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QScalar {
    pub value: QRationalFn,
    pub root2: bool,
}

impl QScalar {
    pub fn new(value: QRationalFn) -> Self {
        Self { value, root2: false }
    }

    pub fn with_root2(value: QRationalFn) -> Self {
        Self { value, root2: true }
    }

    pub fn int(n: i64) -> Self {
        Self::new(QRationalFn::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self { value: -&self.value, root2: self.root2 }
    }

    /// Square, an element of the exact ring.
    pub fn squared(&self, d: Deformation) -> QRationalFn {
        let v = &self.value * &self.value;
        if self.root2 {
            &v * &d.two()
        } else {
            v
        }
    }

    pub fn eval(&self, q: f64, d: Deformation) -> Result<f64, Error> {
        let v = match d {
            Deformation::Quantum => self.value.eval(q)?,
            Deformation::Classical => self.value.eval(1.0)?,
        };
        Ok(if self.root2 { v * d.bracket_f64(2.0, q).sqrt() } else { v })
    }

    pub fn at_one(&self) -> Result<QScalar, Error> {
        Ok(QScalar { value: QRationalFn::from_rational(self.value.at_one()?), root2: self.root2 })
    }
}

impl From<QRationalFn> for QScalar {
    fn from(v: QRationalFn) -> Self {
        QScalar::new(v)
    }
}

impl From<LaurentPoly> for QScalar {
    fn from(v: LaurentPoly) -> Self {
        QScalar::new(v.into())
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root2 {
            write!(f, "sqrt([2])*({})", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Searches `x` in `0, 1/4, 1/2, ...` up to `max` with `[x]_m^2 == target`.
pub fn bracket_sqrt(target: &QRationalFn, m: u32, max: Quarter) -> Option<Quarter> {
    (0..=max.0.max(0)).map(Quarter).find(|&x| {
        let b = q_number(x, m).expect("m >= 1");
        &b * &b == *target
    })
}

pub(crate) fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, rat(*c))))
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int(0, 1).unwrap().is_zero());
        assert_eq!(q_int(2, 1).unwrap(), p(&[(4, 1), (-4, 1)]));
        assert_eq!(q_int(3, 1).unwrap(), p(&[(8, 1), (0, 1), (-8, 1)]));
        assert_eq!(q_int(2, 2).unwrap(), p(&[(8, 1), (-8, 1)]));
        assert_eq!(q_int(-3, 2).unwrap(), -q_int(3, 2).unwrap());
        assert!(q_int(1, 0).is_err());
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(q_factorial(0).unwrap(), LaurentPoly::one());
        assert_eq!(q_factorial(2).unwrap(), qi(2));
        assert_eq!(q_factorial(3).unwrap(), &qi(2) * &qi(3));
        assert!(q_factorial(-1).is_err());
    }

    #[test]
    fn powers_and_limits() {
        assert_eq!(q_power(Quarter(0)), LaurentPoly::one());
        assert_eq!(q_power(Quarter(1)), LaurentPoly::s_pow(1));
        assert_eq!(q_power(Quarter(-2)), LaurentPoly::s_pow(-2));
        assert!(Quarter::from_ratio(1, 3).is_err());
        assert_eq!(Quarter::from_ratio(-1, 2).unwrap(), Quarter(-2));
        for n in 0..10 {
            assert_eq!(limit_q1(&qi(n)), rat(n));
        }
        assert_eq!(limit_q1(&q_power(Quarter(2))), rat(1));
        assert_eq!(limit_q1(&q_int(3, 2).unwrap()), rat(3));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval(&qi(2), 1.0).unwrap(), 2.0);
        assert_eq!(eval(&qi(3), 1.0).unwrap(), 3.0);
        assert_eq!(eval(&qi(2), 2.0).unwrap(), 2.5);
        assert!(eval(&qi(2), 0.0).is_err());
    }

    #[test]
    fn half_integer_brackets() {
        // [1/2] = 1/(q^(1/2) + q^(-1/2))
        let h = q_number(Quarter(2), 1).unwrap();
        assert_eq!(h, QRationalFn::new(LaurentPoly::one(), p(&[(2, 1), (-2, 1)])).unwrap());
        let x = (1.3f64.sqrt() - 1.3f64.sqrt().recip()) / (1.3 - 1.0 / 1.3);
        assert!((h.eval(1.3).unwrap() - x).abs() < 1e-14);
        assert_eq!(h.at_one().unwrap(), ratio(1, 2));
    }

    #[test]
    fn bracket_sqrt_finds_root() {
        let b = q_number(Quarter(6), 1).unwrap();
        assert_eq!(bracket_sqrt(&(&b * &b), 1, Quarter(40)), Some(Quarter(6)));
        assert_eq!(bracket_sqrt(&QRationalFn::from_int(2), 1, Quarter(40)), None);
    }
}
