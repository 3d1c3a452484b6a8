//! Laurent polynomials in `s = q^(1/4)` with arbitrary-precision rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// Exact Laurent polynomial `sum_k c_k s^k`, `s = q^(1/4)`.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// `c * s^exp`.
    pub fn monomial(c: BigRational, exp: i32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        Self { coeffs }
    }

    /// `s^exp`, i.e. `q^(exp/4)`.
    pub fn s_pow(exp: i32) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Returns `(c, k)` when the polynomial is the single term `c s^k`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i32)> {
        if self.coeffs.len() == 1 {
            self.coeffs.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Returns the constant when the polynomial has no `s` dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Substitutes `s -> s^-1`, i.e. `q -> q^-1`.
    pub fn invert_variable(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `s = 1`, the classical limit `q -> 1`.
    pub fn at_one(&self) -> BigRational {
        self.coeffs.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Evaluates at a given `s` in double precision.
    pub fn eval_s(&self, s: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * s.powi(*e))
            .sum()
    }

    /// Evaluates at `q > 0`.
    pub fn eval(&self, q: f64) -> Result<f64, Error> {
        if !(q > 0.0 && q.is_finite()) {
            return Err(Error::NonPositiveQ(q));
        }
        // Whole powers of q first, so integer exponents evaluate exactly.
        let s = q.powf(0.25);
        Ok(self
            .coeffs
            .iter()
            .map(|(e, c)| c.to_f64().unwrap_or(f64::NAN) * q.powi(e.div_euclid(4)) * s.powi(e.rem_euclid(4)))
            .sum())
    }

    /// Exact quotient `self / divisor` when the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dlead_exp, dlead) = divisor.coeffs.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let dlow = divisor.min_exp()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division on the top degree; the remainder's span shrinks each step.
        while let Some(top) = rem.max_exp() {
            let low = rem.min_exp().unwrap_or(top);
            if top - low < dlead_exp - dlow {
                return None;
            }
            let c = rem.coeff(top) / &dlead;
            let k = top - dlead_exp;
            quot.add_term(k, c.clone());
            rem -= &divisor.shift(k).scale(&c);
        }
        Some(quot)
    }

    /// Sign of the leading (highest-exponent) coefficient.
    pub fn leading_sign(&self) -> i32 {
        match self.coeffs.values().next_back() {
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders `q^(k/4)` as `q`, `q^-2`, `q^(1/2)` and so on.
pub(crate) fn fmt_q_power(exp: i32) -> String {
    let num = exp;
    let g = num_integer::gcd(num.abs(), 4).max(1);
    let (n, d) = (num / g, 4 / g);
    match (n, d) {
        (0, _) => String::new(),
        (1, 1) => "q".to_string(),
        (n, 1) => format!("q^{n}"),
        (n, d) => format!("q^({n}/{d})"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let qp = fmt_q_power(*e);
            match (mag.is_one(), qp.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{qp}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{qp}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, rat(*c))))
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = p(&[(4, 1), (-4, 1)]);
        let b = p(&[(4, -1)]);
        let sum = &a + &b;
        assert_eq!(sum, p(&[(-4, 1)]));
        assert_eq!(sum.len(), 1);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        // (s^8 - s^-8) / (s^4 - s^-4) = s^4 + s^-4
        let num = p(&[(8, 1), (-8, -1)]);
        let den = p(&[(4, 1), (-4, -1)]);
        assert_eq!(num.div_exact(&den), Some(p(&[(4, 1), (-4, 1)])));
        // s^4 + 1 is not divisible by s^4 + s^-4 ... (span too small after one step)
        assert_eq!(p(&[(4, 1), (0, 1)]).div_exact(&den), None);
    }

    #[test]
    fn display_uses_q_powers() {
        assert_eq!(p(&[(4, 1), (-4, 1)]).to_string(), "q + q^-1");
        assert_eq!(p(&[(2, 1)]).to_string(), "q^(1/2)");
        assert_eq!(p(&[(1, -3), (0, 2)]).to_string(), "-3*q^(1/4) + 2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn eval_rejects_nonpositive_q() {
        assert!(p(&[(0, 1)]).eval(0.0).is_err());
        assert!(p(&[(0, 1)]).eval(-1.0).is_err());
        assert_eq!(p(&[(4, 1), (-4, 1)]).eval(2.0).unwrap(), 2.5);
    }
}
