//! High-precision evaluation at `q = e^tau` for small rational `tau`.
//!
//! Used by the expansion checks, where the quantities of interest are of
//! order `tau^6 ~ 1e-18` and double precision cannot resolve them.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{rat, LaurentPoly};

/// `e^x` by Taylor series, truncated once a term falls below `10^-digits`.
pub fn exp_rational(x: &BigRational, digits: u32) -> BigRational {
    let eps = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(digits));
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut k = 1i64;
    while term.abs() > eps || k < 3 {
        term = term * x / rat(k);
        sum += &term;
        k += 1;
        if k > 400 {
            break;
        }
    }
    sum
}

/// Evaluates `p` at `s = e^(tau/4)`, i.e. `q = e^tau`.
pub fn eval_at_exp(p: &LaurentPoly, tau: &BigRational, digits: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for (e, c) in p.terms() {
        let x = tau * rat(e as i64) / rat(4);
        acc += c * exp_rational(&x, digits);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn exp_matches_f64() {
        let x = BigRational::new(1.into(), 100.into());
        let v = exp_rational(&x, 40).to_f64().unwrap();
        assert!((v - 0.01f64.exp()).abs() < 1e-15);
    }

    #[test]
    fn bracket_two_near_one() {
        // [2] = q + 1/q = 2 cosh(tau)
        let tau = BigRational::new(1.into(), 1000.into());
        let p = LaurentPoly::from_terms([(4, rat(1)), (-4, rat(1))]);
        let v = eval_at_exp(&p, &tau, 40).to_f64().unwrap();
        assert!((v - 2.0 * 0.001f64.cosh()).abs() < 1e-15);
    }
}
