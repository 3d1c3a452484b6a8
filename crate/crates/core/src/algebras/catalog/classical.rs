use crate::algebras::casimir::Casimir;
use crate::algebras::expr::{comm, g, int, sc, Expr};
use crate::algebras::Family;
use crate::qnum::QScalar;

use super::terms::half;
use super::Relation;

const F: Family = Family::ClassicalSp4;

fn rel(name: impl Into<String>, anchor: &'static str, lhs: Expr, rhs: Expr) -> Relation {
    Relation::new(name, F, anchor, lhs, rhs)
}

pub(super) fn catalog() -> Vec<Relation> {
    let mut v = Vec::new();
    let modes = [1, -1];

    for i in modes {
        for k in modes {
            let rhs = if i == k { int(1) } else { Expr::Zero };
            v.push(rel(format!("Bose-cc (i={i},k={k})"), "Bose commutators", comm(g(&format!("b_{i}")), g(&format!("bd_{k}"))), rhs));
        }
    }
    v.push(rel("Bose-cc creators", "Bose commutators", comm(g("bd_1"), g("bd_-1")), Expr::Zero));
    v.push(rel("Bose-cc annihilators", "Bose commutators", comm(g("b_1"), g("b_-1")), Expr::Zero));

    for i in modes {
        let (n, bd, b) = (format!("N_{i}"), format!("bd_{i}"), format!("b_{i}"));
        v.push(rel(format!("number-creator (i={i})"), "number operators", comm(g(&n), g(&bd)), g(&bd)));
        v.push(rel(format!("number-annihilator (i={i})"), "number operators", comm(g(&n), g(&b)), -g(&b)));
    }

    let a = "u(2) commutators";
    v.push(rel("I0-I+", a, comm(g("I_0"), g("I_+")), g("I_+")));
    v.push(rel("I0-I-", a, comm(g("I_0"), g("I_-")), -g("I_-")));
    v.push(rel("I+-I-", a, comm(g("I_+"), g("I_-")), sc(QScalar::int(2), "2", g("I_0"))));
    v.push(rel("N-I+", a, comm(g("N"), g("I_+")), Expr::Zero));
    v.push(rel("N-I-", a, comm(g("N"), g("I_-")), Expr::Zero));
    v.push(rel("N-I0", a, comm(g("N"), g("I_0")), Expr::Zero));

    let a = "su0(1,1) ladder series";
    v.push(rel("su0: A0-F0", a, comm(g("A_0"), g("F_0")), g("F_0")));
    v.push(rel("su0: A0-G0", a, comm(g("A_0"), g("G_0")), -g("G_0")));
    v.push(rel("su0: F0-G0", a, comm(g("F_0"), g("G_0")), sc(QScalar::int(-2), "-2", g("A_0"))));
    v.push(rel("su0: first-order Casimir", a, g("N_1") - g("b_-1") * g("bd_-1"), sc(QScalar::int(2), "2", g("I_0")) - int(1)));
    for x in ["F_0", "G_0", "A_0"] {
        v.push(rel(format!("u0 extension: I0-{x}"), a, comm(g("I_0"), g(x)), Expr::Zero));
    }

    let a = "su+/-(1,1)";
    for p in ["+", "-"] {
        let (aa, f, gg) = (format!("A_{p}"), format!("F_{p}"), format!("G_{p}"));
        v.push(rel(format!("su{p}: A-F"), a, comm(g(&aa), g(&f)), g(&f)));
        v.push(rel(format!("su{p}: A-G"), a, comm(g(&aa), g(&gg)), -g(&gg)));
        v.push(rel(format!("su{p}: F-G"), a, comm(g(&f), g(&gg)), sc(QScalar::int(-2), "-2", g(&aa))));
    }
    for x in ["F_+", "G_+", "A_+"] {
        for y in ["F_-", "G_-", "A_-"] {
            v.push(rel(format!("su+ vs su-: {x}-{y}"), a, comm(g(x), g(y)), Expr::Zero));
        }
    }
    for (n, xs) in [("N_-1", ["F_+", "G_+", "A_+"]), ("N_1", ["F_-", "G_-", "A_-"])] {
        for x in xs {
            v.push(rel(format!("u+/- extension: {n}-{x}"), a, comm(g(n), g(x)), Expr::Zero));
        }
    }

    let a = "summed su(1,1)";
    v.push(rel("sum: A-F", a, comm(g("A"), g("F")), g("F")));
    v.push(rel("sum: A-G", a, comm(g("A"), g("G")), -g("G")));
    v.push(rel("sum: F-G", a, comm(g("F"), g("G")), sc(QScalar::int(-2), "-2", g("A"))));

    for (i, j) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let mut rhs = g(&format!("bd_{i}")) * g(&format!("b_{j}"));
        if i == j {
            rhs = rhs + sc(half(), "1/2", int(1));
        }
        v.push(rel(format!("Weyl generator A_({i},{j})"), "Weyl generators", g(&format!("A_{i}{j}")), rhs));
    }

    let a = "second-order Casimirs";
    for (name, c) in [
        ("su(2) Casimir", Casimir::I2),
        ("su0(1,1) Casimir", Casimir::C2Su0),
        ("su+(1,1) Casimir", Casimir::C2SuPm(1)),
        ("su-(1,1) Casimir", Casimir::C2SuPm(-1)),
    ] {
        v.push(rel(name, a, c.defining(), c.closed_form()));
    }
    v
}
