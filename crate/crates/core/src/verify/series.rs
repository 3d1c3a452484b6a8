//! Small-`tau` expansions at `q = e^tau`, checked by two-point scaling.
//!
//! A residual `r(tau) = O(tau^p)` passes when `C = |r(tau1)| / tau1^p`
//! bounds it again at `tau2 = tau1 / 10`: `|r(tau2)| <= 1.1 C tau2^p`.
//! Evaluation is in exact rationals with 50-digit exponentials.

use std::time::Instant;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebras::Family;
use crate::fock::FockState;
use crate::qnum::{qi, rat, LaurentPoly};
use crate::qnum::series::eval_at_exp;

use super::report::{Mode, Report, Verdict, Witness};

const DIGITS: u32 = 50;
/// Slack on the fitted constant between the two points.
pub const SCALING_SLACK: f64 = 1.1;

pub fn taus() -> [BigRational; 2] {
    [BigRational::new(1.into(), 100.into()), BigRational::new(1.into(), 1000.into())]
}

fn pow(x: &BigRational, n: i32) -> BigRational {
    num_traits::pow(x.clone(), n as usize)
}

/// Outcome of the scaling test on a residual function.
#[derive(Clone, Debug)]
pub struct Scaling {
    pub residuals: [f64; 2],
    pub constant: f64,
    pub holds: bool,
}

pub fn two_point<F: Fn(&BigRational) -> BigRational>(residual: F, order: i32) -> Scaling {
    let [t1, t2] = taus();
    let (r1, r2) = (residual(&t1).abs(), residual(&t2).abs());
    let f = |x: &BigRational| x.to_f64().unwrap_or(f64::INFINITY);
    let c = f(&(&r1 / pow(&t1, order)));
    let bound = SCALING_SLACK * c * f(&pow(&t2, order));
    let holds = if r1.is_zero() { r2.is_zero() } else { f(&r2) <= bound };
    Scaling { residuals: [f(&r1), f(&r2)], constant: c, holds }
}

/// `[N]/N - (1 + (N^2-1) tau^2/6 + (N^4/10 - N^2/3 + 7/30) tau^4/12)`.
pub fn exn_residual(n: i64, tau: &BigRational) -> BigRational {
    let b = eval_at_exp(&qi(n), tau, DIGITS) / rat(n);
    let n2 = rat(n * n);
    let c2 = (&n2 - rat(1)) / rat(6);
    let c4 = (&n2 * &n2 / rat(10) - &n2 / rat(3) + BigRational::new(7.into(), 30.into())) / rat(12);
    b - (rat(1) + c2 * pow(tau, 2) + c4 * pow(tau, 4))
}

/// `[a] q^{+-b} - (a +- ab tau + a(3b^2+a^2-1) tau^2/6 +- ab(a^2-1+b^2) tau^3/6)`.
pub fn qnm_residual(a: i64, b: i64, sign: i64, tau: &BigRational) -> BigRational {
    let p: LaurentPoly = qi(a).shift(4 * sign as i32 * b as i32);
    let v = eval_at_exp(&p, tau, DIGITS);
    let (ar, br) = (rat(a), rat(b));
    let c1 = rat(sign) * &ar * &br;
    let c2 = &ar * (rat(3) * &br * &br + &ar * &ar - rat(1)) / rat(6);
    let c3 = rat(sign) * &ar * &br * (&ar * &ar - rat(1) + &br * &br) / rat(6);
    v - (ar + c1 * tau + c2 * pow(tau, 2) + c3 * pow(tau, 3))
}

fn report(name: String, family: Family, at: FockState, s: &Scaling, t: Instant) -> Report {
    Report {
        relation: name,
        family: Some(family),
        anchor: "small-tau expansion".to_string(),
        mode: Mode::Series,
        cutoff: 0,
        safe_nu: 0,
        verdict: if s.holds {
            Verdict::Holds
        } else {
            Verdict::Fails {
                witness: Witness { src: at, dst: at },
                residual: format!("r = {:.3e}, {:.3e}; C = {:.3e}", s.residuals[0], s.residuals[1], s.constant),
            }
        },
        wall_ms: t.elapsed().as_secs_f64() * 1e3,
    }
}

pub const MAX_N: i64 = 6;
pub const MAX_OCC: i64 = 4;

pub fn check_series_expansions() -> Vec<Report> {
    let mut out = Vec::new();
    for n in 1..=MAX_N {
        let t = Instant::now();
        let s = two_point(|tau| exn_residual(n, tau), 6);
        out.push(report(format!("[N]/N to tau^4 (N={n})"), Family::QBosonSp4, FockState::new(n as u32, 0), &s, t));
    }
    for a in 0..=MAX_OCC {
        for b in 0..=MAX_OCC {
            for (sign, label) in [(1, "+"), (-1, "-")] {
                let t = Instant::now();
                let s = two_point(|tau| qnm_residual(a, b, sign, tau), 4);
                out.push(report(
                    format!("[N_k]q^({label}N_-k) to tau^3 (N_k={a}, N_-k={b})"),
                    Family::TensorSp4,
                    FockState::new(a as u32, b as u32),
                    &s,
                    t,
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_one_is_exact() {
        assert!(exn_residual(1, &taus()[0]).is_zero());
    }

    #[test]
    fn dropping_a_term_breaks_scaling() {
        // Without the tau^4 term the residual is O(tau^4), not O(tau^6).
        let s = two_point(|tau| exn_residual(3, tau) + pow(tau, 4), 6);
        assert!(!s.holds);
    }

    #[test]
    fn missing_cubic_term_breaks_scaling() {
        let s = two_point(|tau| qnm_residual(2, 1, 1, tau) + pow(tau, 3), 4);
        assert!(!s.holds);
    }
}
