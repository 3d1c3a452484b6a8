//! Casimir operators, each built from its defining combination. The closed
//! forms live alongside as separate expressions so that their equality is
//! something to check, not an assumption.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::fock::FockState;
use crate::ops::QOperator;
use crate::qnum::{q_number, Deformation, QRationalFn, QScalar, Quarter};
use crate::Error;

use super::catalog::terms::{half, inv_two, nbr, q_sc};
use super::expr::{diag, g, sc, scalar, Expr};
use super::catalog::Relation;
use super::{Family, GeneratorSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Casimir {
    /// su(2) Casimir of the classical family.
    I2,
    /// su^0(1,1) (classical).
    C2Su0,
    /// su^+(1,1) for `+1`, su^-(1,1) for `-1` (classical).
    C2SuPm(i32),
    /// su_q(2).
    J2,
    /// su_q^0(1,1).
    K0Sq,
    /// su_q^{+/-}(1,1).
    C2SuqPm(i32),
    /// su_t(2) scalar product.
    L2,
    /// General invariant `s1 T.T~ + s2 T~.T + s3 L.L + s4 [N]^2`.
    S2([BigRational; 4]),
}

impl fmt::Display for Casimir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Casimir::I2 => write!(f, "I2"),
            Casimir::C2Su0 => write!(f, "C2_SU0"),
            Casimir::C2SuPm(1) => write!(f, "C2_SU+"),
            Casimir::C2SuPm(_) => write!(f, "C2_SU-"),
            Casimir::J2 => write!(f, "J2"),
            Casimir::K0Sq => write!(f, "K0_2"),
            Casimir::C2SuqPm(1) => write!(f, "C2_SUq+"),
            Casimir::C2SuqPm(_) => write!(f, "C2_SUq-"),
            Casimir::L2 => write!(f, "L2"),
            Casimir::S2(s) => write!(f, "S2({},{},{},{})", s[0], s[1], s[2], s[3]),
        }
    }
}

impl FromStr for Casimir {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "I2" => Casimir::I2,
            "C2_SU0" | "C2_SU0_classical" => Casimir::C2Su0,
            "C2_SU+" | "C2_SUpm_classical" => Casimir::C2SuPm(1),
            "C2_SU-" => Casimir::C2SuPm(-1),
            "J2" => Casimir::J2,
            "K0_2" | "C2_SUq0" => Casimir::K0Sq,
            "C2_SUq+" | "C2_SUqpm" => Casimir::C2SuqPm(1),
            "C2_SUq-" => Casimir::C2SuqPm(-1),
            "L2" => Casimir::L2,
            _ => {
                let inner = s
                    .strip_prefix("S2(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown Casimir '{s}'")))?;
                let parts = inner
                    .split(',')
                    .map(|p| p.trim().parse::<BigRational>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Error::InvalidArgument(format!("S2 coefficient: {e}")))?;
                let arr: [BigRational; 4] = parts
                    .try_into()
                    .map_err(|_| Error::InvalidArgument("S2 takes four coefficients".into()))?;
                Casimir::S2(arr)
            }
        })
    }
}

/// The closed-form statement `defining = closed_form` as a catalog entry.
pub fn casimir_relation(c: &Casimir) -> Relation {
    Relation::new(format!("{c} closed form"), c.family(), "Casimir closed forms", c.defining(), c.closed_form())
}

/// Every named Casimir, both signs where there are two.
pub fn named_casimirs() -> Vec<Casimir> {
    vec![
        Casimir::I2,
        Casimir::C2Su0,
        Casimir::C2SuPm(1),
        Casimir::C2SuPm(-1),
        Casimir::J2,
        Casimir::K0Sq,
        Casimir::C2SuqPm(1),
        Casimir::C2SuqPm(-1),
        Casimir::L2,
    ]
}

/// `[x(s) + shift]_m` where `x` is in quarters.
fn bracket_of<F>(label: &str, m: u32, x: F) -> Expr
where
    F: Fn(FockState) -> i32 + Send + Sync + 'static,
{
    diag(label, move |s, d| d.bracket_m(Quarter(x(s)), m))
}

fn sym(a: Expr, b: Expr) -> Expr {
    sc(half(), "1/2", a.clone() * b.clone() + b * a)
}

/// `T.T~`, `T~.T` and `L.L` as products of the tensor components.
pub(crate) fn scalar_products() -> (Expr, Expr, Expr) {
    let tt = sc(q_sc(-4), "q^-1", g("T_1") * g("Tt_-1")) + g("T_0") * g("Tt_0") + sc(q_sc(4), "q", g("T_-1") * g("Tt_1"));
    let ttt = sc(q_sc(-4), "q^-1", g("Tt_1") * g("T_-1")) + g("Tt_0") * g("T_0") + sc(q_sc(4), "q", g("Tt_-1") * g("T_1"));
    let two = QScalar::new(Deformation::Quantum.two());
    let ll = sc(
        two.clone(),
        "[2]",
        sc(q_sc(-4), "q^-1", g("L_1") * g("L_-1")) + sc(two, "[2]", g("L_0") * g("L_0")) + sc(q_sc(4), "q", g("L_-1") * g("L_1")),
    );
    (tt, ttt, ll)
}

impl Casimir {
    pub fn family(&self) -> Family {
        match self {
            Casimir::I2 | Casimir::C2Su0 | Casimir::C2SuPm(_) => Family::ClassicalSp4,
            Casimir::J2 | Casimir::K0Sq | Casimir::C2SuqPm(_) => Family::QBosonSp4,
            Casimir::L2 | Casimir::S2(_) => Family::TensorSp4,
        }
    }

    /// Suffix selecting the `+1` or `-1` mode generators.
    fn pm(sign: i32) -> (&'static str, bool) {
        if sign >= 0 {
            ("+", true)
        } else {
            ("-", false)
        }
    }

    /// The defining combination.
    pub fn defining(&self) -> Expr {
        match self {
            Casimir::I2 => sym(g("I_+"), g("I_-")) + g("I_0") * g("I_0"),
            Casimir::C2Su0 => g("A_0") * g("A_0") - sym(g("F_0"), g("G_0")),
            Casimir::C2SuPm(sign) => {
                let (p, _) = Self::pm(*sign);
                let (a, f, gg) = (format!("A_{p}"), format!("F_{p}"), format!("G_{p}"));
                g(&a) * g(&a) - sym(g(&f), g(&gg))
            }
            Casimir::J2 => {
                let j0 = |sh: i32| bracket_of(&format!("[J_0{}]", shift_label(sh)), 1, move |s| 2 * (s.nu1 as i32 - s.num1 as i32) + 4 * sh);
                sym(g("J_+"), g("J_-")) + sc(half(), "1/2", j0(0) * j0(1) + j0(0) * j0(-1))
            }
            Casimir::K0Sq => {
                let k0 = |sh: i32| bracket_of(&format!("[K0_0{}]", shift_label(sh)), 1, move |s| 2 * (s.nu() as i32 + 1) + 4 * sh);
                sc(half(), "1/2", k0(0) * k0(1) + k0(0) * k0(-1)) - sym(g("K0_+"), g("K0_-"))
            }
            Casimir::C2SuqPm(sign) => {
                let (p, plus) = Self::pm(*sign);
                let k0 = move |sh: i32| {
                    bracket_of(&format!("[K{p}_0{}]_2", shift_label(sh)), 2, move |s| {
                        let n = if plus { s.nu1 } else { s.num1 } as i32;
                        2 * n + 1 + 4 * sh
                    })
                };
                k0(0) * k0(1) - g(&format!("K{p}_-")) * g(&format!("K{p}_+"))
            }
            Casimir::L2 => {
                sc(q_sc(4), "q", g("L_-1") * g("L_1"))
                    + sc(q_sc(-4), "q^-1", g("L_1") * g("L_-1"))
                    + sc(QScalar::new(Deformation::Quantum.two()), "[2]", g("L_0") * g("L_0"))
            }
            Casimir::S2(s) => {
                let (tt, ttt, ll) = scalar_products();
                let c = |r: &BigRational| QScalar::new(QRationalFn::from_rational(r.clone()));
                let n = nbr("[N]", 0);
                sc(c(&s[0]), &s[0].to_string(), tt)
                    + sc(c(&s[1]), &s[1].to_string(), ttt)
                    + sc(c(&s[2]), &s[2].to_string(), ll)
                    + sc(c(&s[3]), &s[3].to_string(), n.clone() * n)
            }
        }
    }

    /// The closed form the defining combination should reduce to.
    pub fn closed_form(&self) -> Expr {
        match self {
            Casimir::I2 => diag("N/2(N/2+1)", |s, _| {
                let n = s.nu() as i64;
                QRationalFn::from_rational(BigRational::new((n * (n + 2)).into(), 4.into()))
            }),
            Casimir::C2Su0 => diag("(I_0+1/2)(I_0-1/2)", |s, _| {
                let m = s.nu1 as i64 - s.num1 as i64;
                QRationalFn::from_rational(BigRational::new((m * m - 1).into(), 4.into()))
            }),
            Casimir::C2SuPm(_) => scalar(QRationalFn::from_rational(BigRational::new((-3).into(), 16.into())), "-3/16"),
            Casimir::J2 => diag("[N/2][N/2+1]", |s, d| {
                let n = s.nu() as i32;
                &d.bracket(Quarter(2 * n)) * &d.bracket(Quarter(2 * n + 4))
            }),
            Casimir::K0Sq => diag("[J_0]^2-[1/2]^2", |s, d| {
                let j = d.bracket(Quarter(2 * (s.nu1 as i32 - s.num1 as i32)));
                let h = d.bracket(Quarter(2));
                &(&j * &j) - &(&h * &h)
            }),
            Casimir::C2SuqPm(_) => scalar(c2_suq_pm_value(), "([1/2]^2-1)/[2]^2"),
            Casimir::L2 => diag("[N][N+2]/[2]", |s, d| {
                let n = s.nu() as i64;
                (&d.int(n) * &d.int(n + 2)).div(&d.two()).expect("[2] != 0")
            }),
            Casimir::S2(c) => {
                let c = c.clone();
                diag("s1[N][N-1]+s2[N+2][N+3]+s3[N][N+2]+s4[N]^2", move |s, d| {
                    let n = s.nu() as i64;
                    let b = |k: i64| d.int(n + k);
                    let terms = [
                        &b(0) * &b(-1),
                        &b(2) * &b(3),
                        &b(0) * &b(2),
                        &b(0) * &b(0),
                    ];
                    terms.iter().zip(&c).fold(QRationalFn::zero(), |acc, (t, k)| &acc + &t.scale(k))
                })
            }
        }
    }

    /// Quantum label the eigenvalue depends on: `nu`, `2m` or `nu_{+/-1}`.
    pub fn shell(&self, s: FockState) -> i64 {
        match self {
            Casimir::C2Su0 | Casimir::K0Sq => s.nu1 as i64 - s.num1 as i64,
            Casimir::C2SuPm(1) | Casimir::C2SuqPm(1) => s.nu1 as i64,
            Casimir::C2SuPm(_) | Casimir::C2SuqPm(_) => s.num1 as i64,
            _ => s.nu() as i64,
        }
    }

    pub fn shell_name(&self) -> &'static str {
        match self {
            Casimir::C2Su0 | Casimir::K0Sq => "m",
            Casimir::C2SuPm(1) | Casimir::C2SuqPm(1) => "nu_1",
            Casimir::C2SuPm(_) | Casimir::C2SuqPm(_) => "nu_-1",
            _ => "nu",
        }
    }
}

fn shift_label(sh: i32) -> String {
    match sh {
        0 => String::new(),
        s if s > 0 => format!("+{s}"),
        s => s.to_string(),
    }
}

/// `([1/2]^2 - 1)/[2]^2`.
pub fn c2_suq_pm_value() -> QRationalFn {
    let h = q_number(Quarter(2), 1).expect("m = 1");
    let two = inv_two().value;
    &(&(&h * &h) - &QRationalFn::one()) * &(&two * &two)
}

/// Builds the Casimir operator on `gens` from its defining combination.
pub fn casimir(c: &Casimir, gens: &GeneratorSet) -> Result<QOperator, Error> {
    if gens.family() != c.family() {
        return Err(Error::FamilyMismatch { expected: c.family().to_string(), got: gens.family().to_string() });
    }
    c.defining().eval(gens)
}
