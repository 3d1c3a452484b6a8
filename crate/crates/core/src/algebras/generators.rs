use std::collections::BTreeMap;

use crate::fock::{FockSpace, FockState};
use crate::ops::QOperator;
use crate::qnum::{Deformation, QRationalFn, QScalar, Quarter};
use crate::Error;

use super::Family;

/// Named generator matrices of one family on one truncated space.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    family: Family,
    space: FockSpace,
    deformation: Deformation,
    gens: BTreeMap<String, QOperator>,
}

pub const MIN_CUTOFF: u32 = 4;

struct Builder {
    space: FockSpace,
    d: Deformation,
}

impl Builder {
    fn creation(&self, mode: i32) -> QOperator {
        QOperator::from_fn(self.space, self.d, 1, 0, |s| {
            let t = if mode == 1 { s.shifted(1, 0) } else { s.shifted(0, 1) };
            vec![(t.expect("raising never underflows"), QRationalFn::one())]
        })
    }

    fn annihilation(&self, mode: i32) -> QOperator {
        let d = self.d;
        QOperator::from_fn(self.space, d, 0, 1, |s| {
            let (n, t) = if mode == 1 { (s.nu1, s.shifted(-1, 0)) } else { (s.num1, s.shifted(0, -1)) };
            match t {
                Some(t) => vec![(t, d.int(n as i64))],
                None => vec![],
            }
        })
    }

    fn diag<F: Fn(FockState) -> QRationalFn>(&self, f: F) -> QOperator {
        QOperator::diagonal(self.space, self.d, f)
    }

    fn rational_diag<F: Fn(FockState) -> (i64, i64)>(&self, f: F) -> QOperator {
        self.diag(|s| {
            let (n, den) = f(s);
            QRationalFn::from_rational(crate::qnum::ratio(n, den))
        })
    }

    /// `q^{f(state)}`, exponent in quarters.
    fn qpow<F: Fn(FockState) -> i32>(&self, f: F) -> QOperator {
        let d = self.d;
        self.diag(|s| d.pow(Quarter(f(s))))
    }

    fn parity(&self) -> QOperator {
        self.diag(|s| QRationalFn::from_int(if s.nu() % 2 == 0 { 1 } else { -1 }))
    }
}

fn c(r: QRationalFn) -> QScalar {
    QScalar::new(r)
}

fn mul(a: &QOperator, b: &QOperator) -> QOperator {
    a.compose(b).expect("same space")
}

fn add(a: &QOperator, b: &QOperator) -> QOperator {
    a.try_add(b).expect("compatible")
}

fn half() -> QScalar {
    QScalar::new(QRationalFn::from_rational(crate::qnum::ratio(1, 2)))
}

fn boson_common(b: &Builder, names: [&str; 4], out: &mut BTreeMap<String, QOperator>) -> [QOperator; 4] {
    let ops = [b.creation(1), b.creation(-1), b.annihilation(1), b.annihilation(-1)];
    for (n, o) in names.iter().zip(&ops) {
        out.insert(n.to_string(), o.clone());
    }
    out.insert("N_1".into(), b.diag(|s| QRationalFn::from_int(s.nu1 as i64)));
    out.insert("N_-1".into(), b.diag(|s| QRationalFn::from_int(s.num1 as i64)));
    out.insert("N".into(), b.diag(|s| QRationalFn::from_int(s.nu() as i64)));
    out.insert("P".into(), b.parity());
    ops
}

fn classical(space: FockSpace) -> BTreeMap<String, QOperator> {
    let b = Builder { space, d: Deformation::Classical };
    let mut m = BTreeMap::new();
    let [bd1, bdm1, b1, bm1] = boson_common(&b, ["bd_1", "bd_-1", "b_1", "b_-1"], &mut m);
    let f11 = mul(&bd1, &bd1);
    let f1m1 = mul(&bd1, &bdm1);
    let fm1m1 = mul(&bdm1, &bdm1);
    let g11 = mul(&b1, &b1);
    let g1m1 = mul(&b1, &bm1);
    let gm1m1 = mul(&bm1, &bm1);
    let i_plus = mul(&bd1, &bm1);
    let i_minus = mul(&bdm1, &b1);
    m.insert("A_11".into(), b.rational_diag(|s| (2 * s.nu1 as i64 + 1, 2)));
    m.insert("A_1-1".into(), i_plus.clone());
    m.insert("A_-11".into(), i_minus.clone());
    m.insert("A_-1-1".into(), b.rational_diag(|s| (2 * s.num1 as i64 + 1, 2)));
    m.insert("I_+".into(), i_plus);
    m.insert("I_-".into(), i_minus);
    m.insert("I_0".into(), b.rational_diag(|s| (s.nu1 as i64 - s.num1 as i64, 2)));
    m.insert("F_0".into(), f1m1.clone());
    m.insert("G_0".into(), g1m1.clone());
    m.insert("A_0".into(), b.rational_diag(|s| (s.nu() as i64 + 1, 2)));
    m.insert("F_+".into(), f11.scale(&half()));
    m.insert("G_+".into(), g11.scale(&half()));
    m.insert("A_+".into(), b.rational_diag(|s| (2 * s.nu1 as i64 + 1, 4)));
    m.insert("F_-".into(), fm1m1.scale(&half()));
    m.insert("G_-".into(), gm1m1.scale(&half()));
    m.insert("A_-".into(), b.rational_diag(|s| (2 * s.num1 as i64 + 1, 4)));
    m.insert("F".into(), add(&f11, &fm1m1).scale(&half()));
    m.insert("G".into(), add(&g11, &gm1m1).scale(&half()));
    m.insert("A".into(), b.rational_diag(|s| (s.nu() as i64 + 1, 2)));
    for (n, o) in [("F_11", f11), ("F_1-1", f1m1), ("F_-1-1", fm1m1), ("G_11", g11), ("G_1-1", g1m1), ("G_-1-1", gm1m1)] {
        m.insert(n.into(), o);
    }
    m
}

fn qboson(space: FockSpace) -> BTreeMap<String, QOperator> {
    let d = Deformation::Quantum;
    let b = Builder { space, d };
    let mut m = BTreeMap::new();
    let [ad1, adm1, a1, am1] = boson_common(&b, ["ad_1", "ad_-1", "a_1", "a_-1"], &mut m);
    let inv2 = c(QRationalFn::one().div(&d.two()).expect("[2] != 0"));
    let f11 = mul(&ad1, &ad1);
    let f1m1 = mul(&ad1, &adm1);
    let fm1m1 = mul(&adm1, &adm1);
    let g11 = mul(&a1, &a1);
    let g1m1 = mul(&a1, &am1);
    let gm1m1 = mul(&am1, &am1);
    m.insert("J_+".into(), mul(&ad1, &am1));
    m.insert("J_-".into(), mul(&adm1, &a1));
    m.insert("J_0".into(), b.rational_diag(|s| (s.nu1 as i64 - s.num1 as i64, 2)));
    m.insert("K0_+".into(), f1m1.clone());
    m.insert("K0_-".into(), g1m1.clone());
    m.insert("K0_0".into(), b.rational_diag(|s| (s.nu() as i64 + 1, 2)));
    m.insert("K+_+".into(), f11.scale(&inv2));
    m.insert("K+_-".into(), g11.scale(&inv2));
    m.insert("K+_0".into(), b.rational_diag(|s| (2 * s.nu1 as i64 + 1, 4)));
    m.insert("K-_+".into(), fm1m1.scale(&inv2));
    m.insert("K-_-".into(), gm1m1.scale(&inv2));
    m.insert("K-_0".into(), b.rational_diag(|s| (2 * s.num1 as i64 + 1, 4)));
    for (n, o) in [("Fq_11", f11), ("Fq_1-1", f1m1), ("Fq_-1-1", fm1m1), ("Gq_11", g11), ("Gq_1-1", g1m1), ("Gq_-1-1", gm1m1)] {
        m.insert(n.into(), o);
    }
    m
}

/// `L0 = (q[N1]q^{N-1} - q^-1[N-1]q^{-N1}) / [2]` as a diagonal value.
pub(crate) fn l0_value(s: FockState, d: Deformation) -> QRationalFn {
    let (a, b) = (s.nu1 as i64, s.num1 as i64);
    let x = &(&d.pow(Quarter(4)) * &d.int(a)) * &d.pow(Quarter::int(b as i32));
    let y = &(&d.pow(Quarter(-4)) * &d.int(b)) * &d.pow(Quarter::int(-(a as i32)));
    (&x - &y).div(&d.two()).expect("[2] != 0")
}

fn tensor(space: FockSpace) -> BTreeMap<String, QOperator> {
    let d = Deformation::Quantum;
    let b = Builder { space, d };
    let ad1 = b.creation(1);
    let adm1 = b.creation(-1);
    let a1 = b.annihilation(1);
    let am1 = b.annihilation(-1);
    let mut m = BTreeMap::new();
    let qs = |x: i32| c(d.pow(Quarter(x)));
    // exponents in quarters: q^{N_-1/2} = s^{2 N_-1}
    let qn_m1_half = b.qpow(|s| 2 * s.num1 as i32);
    let qn_1_mhalf = b.qpow(|s| -2 * (s.nu1 as i32));
    let td1 = mul(&ad1, &qn_m1_half).scale(&qs(1));
    let tdm1 = mul(&adm1, &qn_1_mhalf).scale(&qs(-1));
    let t1 = mul(&am1, &qn_1_mhalf).scale(&qs(-1));
    let tm1 = mul(&a1, &qn_m1_half).scale(&qs(1));
    let r2 = QScalar::with_root2(d.pow(Quarter(-2)));
    m.insert("T_1".into(), mul(&td1, &td1));
    m.insert("T_-1".into(), mul(&tdm1, &tdm1));
    m.insert("T_0".into(), mul(&td1, &tdm1).scale(&r2));
    m.insert("Tt_1".into(), mul(&t1, &t1));
    m.insert("Tt_-1".into(), mul(&tm1, &tm1));
    m.insert("Tt_0".into(), mul(&t1, &tm1).scale(&r2));
    m.insert("L_1".into(), mul(&td1, &t1));
    m.insert("L_-1".into(), mul(&tdm1, &tm1));
    m.insert("L_0".into(), b.diag(|s| l0_value(s, d)));
    m.insert("L0_0".into(), b.diag(|s| {
        let (a, bb) = (s.nu1 as i64, s.num1 as i64);
        &(&d.int(a) * &d.pow(Quarter::int(bb as i32))) + &(&d.int(bb) * &d.pow(Quarter::int(-(a as i32))))
    }));
    let nn1 = mul(&td1, &tm1);
    let nnm1 = mul(&tdm1, &t1);
    m.insert("NN_1".into(), nn1);
    m.insert("NN_-1".into(), nnm1);
    m.insert("J_+".into(), mul(&ad1, &am1));
    m.insert("J_-".into(), mul(&adm1, &a1));
    m.insert("J_0".into(), b.rational_diag(|s| (s.nu1 as i64 - s.num1 as i64, 2)));
    m.insert("N_1".into(), b.diag(|s| QRationalFn::from_int(s.nu1 as i64)));
    m.insert("N_-1".into(), b.diag(|s| QRationalFn::from_int(s.num1 as i64)));
    m.insert("N".into(), b.diag(|s| QRationalFn::from_int(s.nu() as i64)));
    m.insert("P".into(), b.parity());
    m.insert("td_1".into(), td1);
    m.insert("td_-1".into(), tdm1);
    m.insert("t_1".into(), t1);
    m.insert("t_-1".into(), tm1);
    m
}

impl GeneratorSet {
    pub fn build(family: Family, space: FockSpace) -> Result<Self, Error> {
        if space.cutoff < MIN_CUTOFF {
            return Err(Error::CutoffTooSmall { cutoff: space.cutoff, required: MIN_CUTOFF });
        }
        let space = FockSpace::full(space.cutoff);
        let gens = match family {
            Family::ClassicalSp4 => classical(space),
            Family::QBosonSp4 => qboson(space),
            Family::TensorSp4 => tensor(space),
        };
        Ok(Self { family, space, deformation: family.deformation(), gens })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn space(&self) -> FockSpace {
        self.space
    }

    pub fn deformation(&self) -> Deformation {
        self.deformation
    }

    pub fn get(&self, name: &str) -> Result<&QOperator, Error> {
        self.gens.get(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &QOperator)> {
        self.gens.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn names(&self) -> Vec<&str> {
        self.gens.keys().map(|k| k.as_str()).collect()
    }

    /// Names of the generators that are diagonal in the occupation basis.
    pub fn diagonal_names(&self) -> Vec<&str> {
        self.iter().filter(|(_, o)| o.is_flagged_diagonal()).map(|(n, _)| n).collect()
    }

    /// The deformed generator names bound to their classical counterparts,
    /// so that a deformed relation can be evaluated at `q = 1`.
    pub fn classical_view(&self) -> Result<GeneratorSet, Error> {
        let classical = GeneratorSet::build(Family::ClassicalSp4, self.space)?;
        if self.family == Family::ClassicalSp4 {
            return Ok(classical);
        }
        let mut gens = BTreeMap::new();
        for name in self.gens.keys() {
            let (cname, root2) = counterpart(self.family, name)
                .ok_or_else(|| Error::UnknownGenerator(format!("{name} has no classical counterpart")))?;
            gens.insert(name.clone(), classical.get(cname)?.clone().with_root2(root2));
        }
        Ok(GeneratorSet { family: self.family, space: self.space, deformation: Deformation::Classical, gens })
    }
}

/// Classical generator a deformed one reduces to at `q = 1`, and whether a
/// `sqrt(2)` factor accompanies it.
pub fn counterpart(family: Family, name: &str) -> Option<(&'static str, bool)> {
    let common = match name {
        "N_1" => Some("N_1"),
        "N_-1" => Some("N_-1"),
        "N" => Some("N"),
        "P" => Some("P"),
        "J_+" => Some("I_+"),
        "J_-" => Some("I_-"),
        "J_0" => Some("I_0"),
        _ => None,
    };
    if let Some(c) = common {
        return Some((c, false));
    }
    let plain = |c: &'static str| Some((c, false));
    match family {
        Family::ClassicalSp4 => None,
        Family::QBosonSp4 => match name {
            "ad_1" => plain("bd_1"),
            "ad_-1" => plain("bd_-1"),
            "a_1" => plain("b_1"),
            "a_-1" => plain("b_-1"),
            "Fq_11" => plain("F_11"),
            "Fq_1-1" => plain("F_1-1"),
            "Fq_-1-1" => plain("F_-1-1"),
            "Gq_11" => plain("G_11"),
            "Gq_1-1" => plain("G_1-1"),
            "Gq_-1-1" => plain("G_-1-1"),
            "K0_+" => plain("F_0"),
            "K0_-" => plain("G_0"),
            "K0_0" => plain("A_0"),
            "K+_+" => plain("F_+"),
            "K+_-" => plain("G_+"),
            "K+_0" => plain("A_+"),
            "K-_+" => plain("F_-"),
            "K-_-" => plain("G_-"),
            "K-_0" => plain("A_-"),
            _ => None,
        },
        Family::TensorSp4 => match name {
            "td_1" => plain("bd_1"),
            "td_-1" => plain("bd_-1"),
            "t_1" => plain("b_-1"),
            "t_-1" => plain("b_1"),
            "T_1" => plain("F_11"),
            "T_-1" => plain("F_-1-1"),
            "T_0" => Some(("F_1-1", true)),
            "Tt_1" => plain("G_-1-1"),
            "Tt_-1" => plain("G_11"),
            "Tt_0" => Some(("G_1-1", true)),
            "L_1" => plain("I_+"),
            "L_-1" => plain("I_-"),
            "L_0" => plain("I_0"),
            "L0_0" => plain("N"),
            "NN_1" => plain("N_1"),
            "NN_-1" => plain("N_-1"),
            _ => None,
        },
    }
}

/// Conjugate pairs `(X, X*)` declared by the construction; self-adjoint
/// generators appear paired with themselves.
pub fn adjoint_pairs(family: Family) -> Vec<(&'static str, &'static str)> {
    let mut v = vec![("N_1", "N_1"), ("N_-1", "N_-1"), ("N", "N"), ("P", "P")];
    match family {
        Family::ClassicalSp4 => v.extend([
            ("bd_1", "b_1"),
            ("bd_-1", "b_-1"),
            ("F_11", "G_11"),
            ("F_1-1", "G_1-1"),
            ("F_-1-1", "G_-1-1"),
            ("A_1-1", "A_-11"),
            ("A_11", "A_11"),
            ("A_-1-1", "A_-1-1"),
            ("I_+", "I_-"),
            ("I_0", "I_0"),
            ("F_0", "G_0"),
            ("F_+", "G_+"),
            ("F_-", "G_-"),
            ("F", "G"),
            ("A_0", "A_0"),
            ("A_+", "A_+"),
            ("A_-", "A_-"),
            ("A", "A"),
        ]),
        Family::QBosonSp4 => v.extend([
            ("ad_1", "a_1"),
            ("ad_-1", "a_-1"),
            ("Fq_11", "Gq_11"),
            ("Fq_1-1", "Gq_1-1"),
            ("Fq_-1-1", "Gq_-1-1"),
            ("J_+", "J_-"),
            ("J_0", "J_0"),
            ("K0_+", "K0_-"),
            ("K+_+", "K+_-"),
            ("K-_+", "K-_-"),
            ("K0_0", "K0_0"),
            ("K+_0", "K+_0"),
            ("K-_0", "K-_0"),
        ]),
        Family::TensorSp4 => v.extend([
            ("td_1", "t_-1"),
            ("td_-1", "t_1"),
            ("T_1", "Tt_-1"),
            ("T_0", "Tt_0"),
            ("T_-1", "Tt_1"),
            ("L_1", "L_-1"),
            ("L_0", "L_0"),
            ("L0_0", "L0_0"),
            ("NN_1", "NN_1"),
            ("NN_-1", "NN_-1"),
            ("J_+", "J_-"),
            ("J_0", "J_0"),
        ]),
    }
    v
}
