//! Quotients of Laurent polynomials.
//!
//! Every denominator that occurs in practice is a product of `[2] = s^4 + s^-4`,
//! `s^2 + s^-2` and monomials, so after each operation those factors are
//! cancelled by trial division. Equality never depends on that: it is decided
//! by cross-multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{rat, LaurentPoly};
use crate::Error;

#[derive(Clone)]
pub struct QRationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

fn atoms() -> &'static [LaurentPoly; 2] {
    static ATOMS: OnceLock<[LaurentPoly; 2]> = OnceLock::new();
    ATOMS.get_or_init(|| {
        [
            LaurentPoly::from_terms([(4, rat(1)), (-4, rat(1))]),
            LaurentPoly::from_terms([(2, rat(1)), (-2, rat(1))]),
        ]
    })
}

impl QRationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self { num, den }.reduced())
    }

    pub fn zero() -> Self {
        LaurentPoly::zero().into()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn from_int(n: i64) -> Self {
        LaurentPoly::from_int(n).into()
    }

    pub fn from_rational(c: BigRational) -> Self {
        LaurentPoly::constant(c).into()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, when the denominator has cancelled.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return self;
        }
        if self.den.is_one() {
            return self;
        }
        if let Some((c, k)) = self.den.as_monomial() {
            let inv = BigRational::one() / c;
            self.num = self.num.shift(-k).scale(&inv);
            self.den = LaurentPoly::one();
            return self;
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return Self { num: q, den: LaurentPoly::one() };
        }
        for atom in atoms() {
            while let Some(dq) = self.den.div_exact(atom) {
                match self.num.div_exact(atom) {
                    Some(nq) => {
                        self.num = nq;
                        self.den = dq;
                    }
                    None => break,
                }
            }
        }
        if let Some((c, k)) = self.den.as_monomial() {
            let inv = BigRational::one() / c;
            self.num = self.num.shift(-k).scale(&inv);
            self.den = LaurentPoly::one();
        }
        self
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, n: u32) -> Self {
        Self { num: self.num.pow(n), den: self.den.pow(n) }.reduced()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }.reduced()
    }

    /// Multiplies by `s^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { num: self.num.shift(k), den: self.den.clone() }
    }

    /// Value at `s = 1`, as the limit when numerator and denominator both
    /// vanish there (common factors `s - 1` are divided out).
    pub fn at_one(&self) -> Result<BigRational, Error> {
        let root = LaurentPoly::from_terms([(1, rat(1)), (0, rat(-1))]);
        let (mut n, mut d) = (self.num.clone(), self.den.clone());
        while d.at_one().is_zero() {
            if !n.at_one().is_zero() {
                return Err(Error::ZeroDenominator);
            }
            match (n.div_exact(&root), d.div_exact(&root)) {
                (Some(a), Some(b)) => (n, d) = (a, b),
                _ => return Err(Error::ZeroDenominator),
            }
        }
        Ok(n.at_one() / d.at_one())
    }

    pub fn eval(&self, q: f64) -> Result<f64, Error> {
        Ok(self.num.eval(q)? / self.den.eval(q)?)
    }

    pub fn eval_s(&self, s: f64) -> f64 {
        self.num.eval_s(s) / self.den.eval_s(s)
    }

    /// Sign for large `s`, i.e. the sign of the value as `q -> infinity`.
    pub fn leading_sign(&self) -> i32 {
        self.num.leading_sign() * self.den.leading_sign()
    }
}

impl From<LaurentPoly> for QRationalFn {
    fn from(num: LaurentPoly) -> Self {
        Self { num, den: LaurentPoly::one() }
    }
}

impl PartialEq for QRationalFn {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for QRationalFn {}

impl fmt::Debug for QRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QRationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &LaurentPoly| {
                if p.len() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl Add<&QRationalFn> for &QRationalFn {
    type Output = QRationalFn;
    fn add(self, rhs: &QRationalFn) -> QRationalFn {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return QRationalFn { num: &self.num + &rhs.num, den: self.den.clone() }.reduced();
        }
        if self.den.is_one() {
            return QRationalFn { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() }
                .reduced();
        }
        if rhs.den.is_one() {
            return QRationalFn { num: &self.num + &(&rhs.num * &self.den), den: self.den.clone() }
                .reduced();
        }
        if let Some(k) = rhs.den.div_exact(&self.den) {
            return QRationalFn { num: &(&self.num * &k) + &rhs.num, den: rhs.den.clone() }.reduced();
        }
        if let Some(k) = self.den.div_exact(&rhs.den) {
            return QRationalFn { num: &self.num + &(&rhs.num * &k), den: self.den.clone() }.reduced();
        }
        QRationalFn {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .reduced()
    }
}

impl Neg for &QRationalFn {
    type Output = QRationalFn;
    fn neg(self) -> QRationalFn {
        QRationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRationalFn {
    type Output = QRationalFn;
    fn neg(self) -> QRationalFn {
        -&self
    }
}

impl Sub<&QRationalFn> for &QRationalFn {
    type Output = QRationalFn;
    fn sub(self, rhs: &QRationalFn) -> QRationalFn {
        self + &(-rhs)
    }
}

impl Mul<&QRationalFn> for &QRationalFn {
    type Output = QRationalFn;
    fn mul(self, rhs: &QRationalFn) -> QRationalFn {
        if self.is_zero() || rhs.is_zero() {
            return QRationalFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        QRationalFn { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.reduced()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<QRationalFn> for QRationalFn {
            type Output = QRationalFn;
            fn $m(self, rhs: QRationalFn) -> QRationalFn { (&self).$m(&rhs) }
        }
        impl $tr<&QRationalFn> for QRationalFn {
            type Output = QRationalFn;
            fn $m(self, rhs: &QRationalFn) -> QRationalFn { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Zero for QRationalFn {
    fn zero() -> Self {
        QRationalFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(e, c)| (*e, rat(*c))))
    }

    #[test]
    fn cross_multiplication_equality() {
        let two = p(&[(4, 1), (-4, 1)]);
        let a = QRationalFn::new(LaurentPoly::one(), two.clone()).unwrap();
        // (s^4+s^-4)/(s^4+s^-4)^2 is the same function
        let b = QRationalFn { num: two.clone(), den: &two * &two };
        assert_eq!(a, b);
        assert_ne!(a, QRationalFn::one());
    }

    #[test]
    fn atoms_cancel() {
        let h = p(&[(2, 1), (-2, 1)]);
        let two = p(&[(4, 1), (-4, 1)]);
        let x = QRationalFn::new(&h * &p(&[(1, 3)]), &h * &two).unwrap();
        assert_eq!(x.denominator(), &two);
        let y = &x * &QRationalFn::from(two.clone());
        assert!(y.as_poly().is_some());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(QRationalFn::new(LaurentPoly::one(), LaurentPoly::zero()).is_err());
        assert!(QRationalFn::one().div(&QRationalFn::zero()).is_err());
    }

    #[test]
    fn sums_with_related_denominators() {
        let two = p(&[(4, 1), (-4, 1)]);
        let h = p(&[(2, 1), (-2, 1)]);
        let a = QRationalFn::new(LaurentPoly::one(), two.clone()).unwrap();
        let b = QRationalFn::new(LaurentPoly::one(), &two * &h).unwrap();
        let s = &(&a + &b) - &b;
        assert_eq!(s, a);
        assert!((&a - &a).is_zero());
    }
}
