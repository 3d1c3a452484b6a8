use crate::algebras::casimir::{c2_suq_pm_value, Casimir};
use crate::algebras::expr::{comm, diag, g, qcomm, sc, scalar, Expr};
use crate::algebras::Family;
use crate::qnum::{q_number, Deformation, QRationalFn, QScalar, Quarter};

use super::terms::{inv_two, m2, nk_br, occ, q_nk, two_j0_br};
use super::Relation;

const F: Family = Family::QBosonSp4;

fn rel(name: impl Into<String>, anchor: &'static str, lhs: Expr, rhs: Expr) -> Relation {
    Relation::new(name, F, anchor, lhs, rhs)
}

/// `[x(s)]_m` with `x` in quarters.
fn br<X>(label: &str, m: u32, x: X) -> Expr
where
    X: Fn(crate::fock::FockState) -> i32 + Send + Sync + 'static,
{
    diag(label, move |s, d| d.bracket_m(Quarter(x(s)), m))
}

fn over_two_sq(e: Expr) -> Expr {
    let i = inv_two();
    let i2 = QScalar::new(&i.value * &i.value);
    sc(i2, "1/[2]^2", e)
}

pub(super) fn catalog() -> Vec<Relation> {
    let mut v = Vec::new();
    let modes = [1, -1];

    let a = "deformed oscillators";
    for i in modes {
        let (ad, an) = (format!("ad_{i}"), format!("a_{i}"));
        v.push(rel(format!("q-oscillator q^+1 (i={i})"), a, qcomm(g(&an), g(&ad), Quarter(4)), q_nk(i, -4)));
        v.push(rel(format!("q-oscillator q^-1 (i={i})"), a, qcomm(g(&an), g(&ad), Quarter(-4)), q_nk(i, 4)));
    }
    v.push(rel("q-oscillator cross a_1-ad_-1", a, comm(g("a_1"), g("ad_-1")), Expr::Zero));
    v.push(rel("q-oscillator cross a_-1-ad_1", a, comm(g("a_-1"), g("ad_1")), Expr::Zero));
    v.push(rel("q-oscillator cross creators", a, comm(g("ad_1"), g("ad_-1")), Expr::Zero));
    v.push(rel("q-oscillator cross annihilators", a, comm(g("a_1"), g("a_-1")), Expr::Zero));
    for i in modes {
        let (n, ad, an) = (format!("N_{i}"), format!("ad_{i}"), format!("a_{i}"));
        v.push(rel(format!("number-annihilator (i={i})"), a, comm(g(&n), g(&an)), -g(&an)));
        v.push(rel(format!("number-creator (i={i})"), a, comm(g(&n), g(&ad)), g(&ad)));
    }

    let a = "N-grading";
    v.push(rel("grading J+-N", a, comm(g("J_+"), g("N")), Expr::Zero));
    v.push(rel("grading J--N", a, comm(g("J_-"), g("N")), Expr::Zero));
    v.push(rel("grading J0-N", a, comm(g("J_0"), g("N")), Expr::Zero));
    for ij in ["11", "1-1", "-1-1"] {
        let (f, gg) = (format!("Fq_{ij}"), format!("Gq_{ij}"));
        v.push(rel(format!("grading F^q_{ij}-N"), a, comm(g(&f), g("N")), sc(QScalar::int(-2), "-2", g(&f))));
        v.push(rel(format!("grading G^q_{ij}-N"), a, comm(g(&gg), g("N")), sc(QScalar::int(2), "2", g(&gg))));
    }

    let a = "su_q(2)";
    v.push(rel("J0-J+", a, comm(g("J_0"), g("J_+")), g("J_+")));
    v.push(rel("J0-J-", a, comm(g("J_0"), g("J_-")), -g("J_-")));
    v.push(rel("J-commutator", a, comm(g("J_+"), g("J_-")), two_j0_br()));

    let j2 = Casimir::J2;
    let j0s = |sh: i32| br(&format!("[J_0{}]", shift(sh)), 1, move |s| 2 * m2(s) + 4 * sh);
    let j0 = br("[J_0]", 1, |s| 2 * m2(s));
    v.push(rel("J^2 symmetric form", a, j2.defining(), j2.closed_form()));
    v.push(rel("J^2 form J+J-", a, g("J_+") * g("J_-") + j0.clone() * j0s(-1), j2.closed_form()));
    v.push(rel("J^2 form J-J+", a, g("J_-") * g("J_+") + j0 * j0s(1), j2.closed_form()));

    let a = "u_q0(1,1)";
    let k0 = |sh: i32| br(&format!("[K0_0{}]", shift(sh)), 1, move |s| 2 * (s.nu() as i32 + 1) + 4 * sh);
    v.push(rel("K0: K0_0-K0_+", a, comm(g("K0_0"), g("K0_+")), g("K0_+")));
    v.push(rel("K0: K0_0-K0_-", a, comm(g("K0_0"), g("K0_-")), -g("K0_-")));
    v.push(rel("K0: K0_+-K0_-", a, comm(g("K0_+"), g("K0_-")), -br("[2K0_0]", 1, |s| 4 * (s.nu() as i32 + 1))));
    v.push(rel("K0: K0_0-J0", a, comm(g("K0_0"), g("J_0")), Expr::Zero));
    v.push(rel("K0: K0_+-J0", a, comm(g("K0_+"), g("J_0")), Expr::Zero));
    v.push(rel("K0: K0_--J0", a, comm(g("K0_-"), g("J_0")), Expr::Zero));
    let ksq = Casimir::K0Sq;
    v.push(rel("K0^2 symmetric form", a, ksq.defining(), ksq.closed_form()));
    v.push(rel("K0^2 form K-K+", a, k0(0) * k0(1) - g("K0_-") * g("K0_+"), ksq.closed_form()));
    v.push(rel("K0^2 form K+K-", a, k0(0) * k0(-1) - g("K0_+") * g("K0_-"), ksq.closed_form()));
    let n_half = |label: &str| br(label, 1, |s| 2 * s.nu() as i32);
    let j0sq = br("[J_0]", 1, |s| 2 * m2(s));
    v.push(rel("K0_+K0_- closed form", a, g("K0_+") * g("K0_-"), n_half("[N/2]") * n_half("[N/2]") - j0sq.clone() * j0sq));
    v.push(rel("[K0_0][K0_0-1] closed form", a, k0(0) * k0(-1), n_half("[N/2]") * n_half("[N/2]") - half_sq()));

    let a = "u_q+/-(1,1)";
    for (p, k) in [("+", 1), ("-", -1)] {
        let kk = move |sh: i32| br(&format!("[K{p}_0{}]_2", shift(sh)), 2, move |s| 2 * occ(s, k) as i32 + 1 + 4 * sh);
        let (kp, km, k0n) = (format!("K{p}_+"), format!("K{p}_-"), format!("K{p}_0"));
        let other = format!("N_{}", -k);
        v.push(rel(format!("K{p}: K0-K+"), a, comm(g(&k0n), g(&kp)), g(&kp)));
        v.push(rel(format!("K{p}: K0-K-"), a, comm(g(&k0n), g(&km)), -g(&km)));
        v.push(rel(
            format!("K{p}: K+-K-"),
            a,
            comm(g(&kp), g(&km)),
            -br(&format!("[2K{p}_0]_2"), 2, move |s| 4 * occ(s, k) as i32 + 2),
        ));
        for x in [&k0n, &kp, &km] {
            v.push(rel(format!("K{p}: {x}-{other}"), a, comm(g(x), g(&other)), Expr::Zero));
        }
        let c2 = Casimir::C2SuqPm(k);
        v.push(rel(format!("C2(SUq{p}) form K-K+"), a, c2.defining(), c2.closed_form()));
        v.push(rel(format!("C2(SUq{p}) form K+K-"), a, kk(0) * kk(-1) - g(&kp) * g(&km), c2.closed_form()));
        v.push(rel(format!("K{p}_-K{p}_+ closed form"), a, g(&km) * g(&kp), over_two_sq(nk_br(k, 1) * nk_br(k, 2))));
        v.push(rel(format!("K{p}_+K{p}_- closed form"), a, g(&kp) * g(&km), over_two_sq(nk_br(k, 0) * nk_br(k, -1))));
        let shifted = move || br(&format!("[(2N_{k}-1)/2]"), 1, move |s| 4 * occ(s, k) as i32 - 2);
        v.push(rel(
            format!("K{p}_+K{p}_- half-integer form"),
            a,
            g(&kp) * g(&km),
            over_two_sq(shifted() * shifted() - half_sq()),
        ));
        v.push(rel(
            format!("[K{p}_0]_2[K{p}_0-1]_2 closed form"),
            a,
            kk(0) * kk(-1),
            over_two_sq(shifted() * shifted() - scalar(QRationalFn::one(), "1")),
        ));
        let b = |x: i32| q_number(Quarter(x), 2).expect("m = 2");
        let factored = &(&b(1) - &b(2)) * &(&b(1) + &b(2));
        v.push(rel(
            format!("C2(SUq{p}) factored value"),
            a,
            scalar(c2_suq_pm_value(), "([1/2]^2-1)/[2]^2"),
            scalar(factored, "([1/4]_2-[1/2]_2)([1/4]_2+[1/2]_2)"),
        ));
    }
    v
}

/// `[1/2]^2` as a scalar.
fn half_sq() -> Expr {
    let h = Deformation::Quantum.bracket(Quarter(2));
    scalar(&h * &h, "[1/2]^2")
}

fn shift(sh: i32) -> String {
    if sh == 0 {
        String::new()
    } else {
        format!("{sh:+}")
    }
}
