//! Exact scalars: Laurent polynomials in `s = q^(1/4)`, their quotients,
//! q-numbers and the `sqrt([2])`-flagged scalar used by the tensor generators.

mod laurent;
mod numbers;
mod rational;
pub mod series;

pub use laurent::LaurentPoly;
pub(crate) use laurent::{fmt_q_power, rat, ratio};
pub use numbers::{
    bracket_sqrt, eval, limit_q1, q_factorial, q_int, q_number, q_power, qi, Deformation, Half,
    QScalar, Quarter,
};
pub(crate) use numbers::rational_sqrt;
pub use rational::QRationalFn;
