use crate::algebras::casimir::{scalar_products, Casimir};
use crate::algebras::expr::{comm, diag, g, qcomm, sc, Expr};
use crate::algebras::Family;
use crate::qnum::{fmt_q_power, QRationalFn, QScalar, Quarter};

use super::terms::{nbr, q_sc, qj0, qm2j0, two};
use super::Relation;

const F: Family = Family::TensorSp4;

fn rel(name: impl Into<String>, anchor: &'static str, lhs: Expr, rhs: Expr) -> Relation {
    Relation::new(name, F, anchor, lhs, rhs)
}

fn t(m: i32) -> Expr {
    g(&format!("T_{m}"))
}

fn tt(m: i32) -> Expr {
    g(&format!("Tt_{m}"))
}

fn l(m: i32) -> Expr {
    g(&format!("L_{m}"))
}

fn nn(k: i32) -> Expr {
    g(&format!("NN_{k}"))
}

/// `c * q^(x/4)` with a readable label.
fn cq(c: i64, quarters: i32) -> QScalar {
    let q = q_sc(quarters);
    QScalar::new(q.value.scale(&crate::qnum::ratio(c, 1)))
}

fn cq_label(c: i64, quarters: i32) -> String {
    let q = fmt_q_power(quarters);
    match (c, quarters) {
        (c, 0) => c.to_string(),
        (1, _) => q,
        (-1, _) => format!("-{q}"),
        (c, _) => format!("{c} {q}"),
    }
}

fn scaled(c: i64, quarters: i32, e: Expr) -> Expr {
    if c == 1 && quarters == 0 {
        e
    } else {
        sc(cq(c, quarters), &cq_label(c, quarters), e)
    }
}

/// `c q^(x/4) sqrt([2]) e`.
fn scaled_root2(c: i64, quarters: i32, e: Expr) -> Expr {
    let s = QScalar { value: cq(c, quarters).value, root2: true };
    sc(s, &format!("{} sqrt([2])", cq_label(c, quarters)), e)
}

/// `[2] e`.
fn times_two(e: Expr) -> Expr {
    sc(two(), "[2]", e)
}

/// `q^(x/4) [N_k + a] q^(c N_-k)` as a diagonal.
fn wcg_diag(label: &str, pre: i32, k: i32, a: i64, c: i32) -> Expr {
    diag(label, move |s, d| {
        let nk = if k == 1 { s.nu1 } else { s.num1 } as i64;
        let nmk = if k == 1 { s.num1 } else { s.nu1 } as i32;
        &(&d.pow(Quarter(pre)) * &d.int(nk + a)) * &d.pow(Quarter(4 * c * nmk))
    })
}

/// `(q[N_1][N_-1+1] - q^-1[N_-1][N_1+1]) / [2]`.
fn l0_second_form() -> Expr {
    diag("(q[N_1][N_-1+1] - q^-1[N_-1][N_1+1])/[2]", |s, d| {
        let (a, b) = (s.nu1 as i64, s.num1 as i64);
        let x = &(&d.pow(Quarter(4)) * &d.int(a)) * &d.int(b + 1);
        let y = &(&d.pow(Quarter(-4)) * &d.int(b)) * &d.int(a + 1);
        (&x - &y).div(&d.two()).expect("[2] != 0")
    })
}

/// Coefficient of `[L_sigma, X_m]` in terms of `X_{m+sigma}`: zero, or
/// `+/- q^-(m+sigma) sqrt([1 - sigma m][2 + sigma m])` with both brackets
/// in `{[1], [2]}`.
fn ntp_rhs(sign: i64, sigma: i32, m: i32, target: fn(i32) -> Expr, exponent: i32) -> Expr {
    if (m + sigma).abs() > 1 {
        return Expr::Zero;
    }
    scaled_root2(sign, -4 * exponent, target(m + sigma) * qm2j0())
}

pub(super) fn catalog() -> Vec<Relation> {
    let mut v = Vec::new();
    let ks = [1, -1];

    let a = "q-spinor commutators";
    for k in ks {
        for lidx in ks {
            // rho = (l - k)/2 in powers of q
            let rho = Quarter(2 * (lidx - k));
            let rhs = if k == -lidx { scaled(1, -2 * k, qm2j0()) } else { Expr::Zero };
            v.push(rel(
                format!("t-t-dagger (k={k},l={lidx})"),
                a,
                qcomm(g(&format!("t_{k}")), g(&format!("td_{lidx}")), rho),
                rhs,
            ));
        }
    }
    for (k, lidx) in [(1, -1), (-1, 1)] {
        let sigma = Quarter(-2 * (lidx - k));
        v.push(rel(format!("t-dagger-t-dagger (k={k},l={lidx})"), a, qcomm(g(&format!("td_{k}")), g(&format!("td_{lidx}")), sigma), Expr::Zero));
        v.push(rel(format!("t-t (k={k},l={lidx})"), a, qcomm(g(&format!("t_{k}")), g(&format!("t_{lidx}")), sigma), Expr::Zero));
    }

    let a = "q-spinor tensor properties";
    for k in ks {
        let nk = g(&format!("N_{k}"));
        let (td_k, t_mk, td_mk, t_k) =
            (g(&format!("td_{k}")), g(&format!("t_{}", -k)), g(&format!("td_{}", -k)), g(&format!("t_{k}")));
        v.push(rel(format!("N_{k}-td_{k}"), a, comm(nk.clone(), td_k.clone()), td_k));
        v.push(rel(format!("N_{k}-t_{}", -k), a, comm(nk.clone(), t_mk.clone()), -t_mk));
        v.push(rel(format!("N_{k}-td_{}", -k), a, comm(nk.clone(), td_mk), Expr::Zero));
        v.push(rel(format!("N_{k}-t_{k}"), a, comm(nk, t_k), Expr::Zero));
    }
    for k in ks {
        let c = QScalar::new(QRationalFn::from_rational(crate::qnum::ratio(k as i64, 2)));
        let lab = if k == 1 { "1/2" } else { "-1/2" };
        for x in [format!("td_{k}"), format!("t_{k}")] {
            v.push(rel(format!("J0-{x}"), a, comm(g("J_0"), g(&x)), sc(c.clone(), lab, g(&x))));
        }
    }

    let a = "tensor components";
    v.push(rel("L_1 from J+", a, l(1), scaled(1, -2, g("J_+") * qj0(-1))));
    v.push(rel("L_-1 from J-", a, l(-1), scaled(1, 2, g("J_-") * qj0(-1))));
    v.push(rel("NN_1 diagonal form", a, nn(1), wcg_diag("q^(1/2)[N_1]q^(N_-1)", 2, 1, 0, 1)));
    v.push(rel("NN_-1 diagonal form", a, nn(-1), wcg_diag("q^(-1/2)[N_-1]q^(-N_1)", -2, -1, 0, -1)));
    v.push(rel("t_-1 td_1 diagonal form", a, g("t_-1") * g("td_1"), wcg_diag("q^(1/2)[N_1+1]q^(N_-1)", 2, 1, 1, 1)));
    v.push(rel("t_1 td_-1 diagonal form", a, g("t_1") * g("td_-1"), wcg_diag("q^(-1/2)[N_-1+1]q^(-N_1)", -2, -1, 1, -1)));
    v.push(rel("L_0 two forms", a, l(0), l0_second_form()));
    v.push(rel("L0_0 = [N]", a, g("L0_0"), nbr("[N]", 0)));

    let a = "su_t(2)";
    v.push(rel("L_1-L_-1", a, comm(l(1), l(-1)), times_two(l(0) * qm2j0())));
    v.push(rel("L_0-L_1", a, comm(l(0), l(1)), scaled(1, -4, l(1) * qm2j0())));
    v.push(rel("L_0-L_-1", a, comm(l(0), l(-1)), scaled(-1, 4, l(-1) * qm2j0())));
    for m in [1, 0, -1] {
        v.push(rel(format!("[N]-L_{m}"), a, comm(nbr("[N]", 0), l(m)), Expr::Zero));
    }
    for m in [1, 0, -1] {
        v.push(rel(format!("L_{m}-N"), a, comm(l(m), g("N")), Expr::Zero));
    }
    let l2 = Casimir::L2;
    v.push(rel("L.L scalar product", a, l2.defining(), l2.closed_form()).with_note("L_0 L_0 sign and weight corrected"));

    let a = "tensor transformation";
    for sigma in [1, -1] {
        for m in [1, 0, -1] {
            v.push(rel(
                format!("L_{sigma}-Tt_{m}"),
                a,
                comm(l(sigma), tt(m)),
                ntp_rhs(-1, sigma, m, tt, m + sigma),
            ));
            v.push(rel(
                format!("L_{sigma}-T_{m}"),
                a,
                comm(l(sigma), t(m)),
                ntp_rhs(1, sigma, m, t, m + sigma),
            ));
        }
    }

    let a = "pair-number q-commutators";
    for k in ks {
        let rho = Quarter(8 * k);
        let target_tt = times_two(tt(-k) * qm2j0());
        v.push(rel(format!("Tt_{}-NN_{k}", -k), a, qcomm(tt(-k), nn(k), rho), scaled(1, 10 * k, target_tt)));
        v.push(rel(format!("Tt_{k}-NN_{k}"), a, qcomm(tt(k), nn(k), rho), Expr::Zero));
        v.push(rel(format!("NN_{k}-T_{k}"), a, qcomm(nn(k), t(k), rho), scaled(1, 2 * k, times_two(t(k) * qm2j0()))));
        v.push(rel(format!("NN_{k}-T_{}", -k), a, qcomm(nn(k), t(-k), rho), Expr::Zero));
        v.push(rel(format!("Tt_0-NN_{k}"), a, qcomm(tt(0), nn(k), rho), scaled(1, 6 * k, tt(0) * qm2j0())));
        v.push(rel(format!("NN_{k}-T_0"), a, qcomm(nn(k), t(0), rho), scaled(1, 6 * k, t(0) * qm2j0())));
    }

    let a = "q-nilpotent subalgebras";
    for m1 in [1, 0, -1] {
        for m2v in [1, 0, -1] {
            if m1 == m2v {
                continue;
            }
            let rho = Quarter(8 * (m1 - m2v));
            v.push(rel(format!("T_{m1}-T_{m2v}"), a, qcomm(t(m1), t(m2v), rho), Expr::Zero));
            v.push(rel(format!("Tt_{m1}-Tt_{m2v}"), a, qcomm(tt(m1), tt(m2v), rho), Expr::Zero));
        }
    }

    let a = "raising-lowering closure";
    for (m1, m2v) in [(1, 0), (0, 1), (0, -1), (-1, 0), (1, 1), (-1, -1)] {
        let rho = Quarter(8 * (m2v - m1));
        let rhs = if m1 == m2v {
            Expr::Zero
        } else {
            scaled_root2(-1, -8 * m1, times_two(l(m1 + m2v) * qm2j0()))
        };
        v.push(rel(format!("T_{m1}-Tt_{m2v}"), a, qcomm(t(m1), tt(m2v), rho), rhs));
    }
    v.push(rel(
        "T-tilde-T m1+m2=0, top",
        a,
        qcomm(t(1), tt(-1), Quarter(-16)),
        -times_two((scaled(1, -12, qm2j0()) + scaled(1, -6, times_two(nn(1)))) * qm2j0()),
    ));
    v.push(rel(
        "T-tilde-T m1+m2=0, middle",
        a,
        comm(t(0), tt(0)),
        -times_two(nbr("[N+1]", 1) * qm2j0()),
    ));
    v.push(rel(
        "T-tilde-T m1+m2=0, bottom",
        a,
        qcomm(t(-1), tt(1), Quarter(16)),
        -times_two((scaled(1, 12, qm2j0()) + scaled(1, 6, times_two(nn(-1)))) * qm2j0()),
    ));

    let a = "pair-operator relations";
    v.push(rel("T_0 squared", a, t(0) * t(0), scaled(1, -8, times_two(t(1) * t(-1)))));
    let (tdot, ttdot, ldot) = scalar_products();
    v.push(rel("scalar product T.Tt", a, tdot, nbr("[N]", 0) * nbr("[N-1]", -1)));
    v.push(rel("scalar product Tt.T", a, ttdot, nbr("[N+2]", 2) * nbr("[N+3]", 3)));
    v.push(rel("scalar product L.L", a, ldot, nbr("[N]", 0) * nbr("[N+2]", 2)));
    v
}

/// The displayed forms that differ from the catalog entries above.
pub(super) fn printed() -> Vec<Relation> {
    let mut v = Vec::new();
    let a = "printed forms";
    let note = "displayed form; fails for the constructed generators";
    let push = |v: &mut Vec<Relation>, name: String, lhs: Expr, rhs: Expr| v.push(rel(name, a, lhs, rhs).with_note(note));

    push(
        &mut v,
        "L.L scalar product (printed)".into(),
        scaled(1, 4, l(-1) * l(1)) + scaled(1, -4, l(1) * l(-1)) - l(0) * l(0),
        Casimir::L2.closed_form(),
    );
    push(&mut v, "T_0 squared (printed)".into(), t(0) * t(0), scaled(1, -4, times_two(t(1) * t(-1))));

    for (sigma, m) in [(1, -1), (1, 0)] {
        push(&mut v, format!("L_{sigma}-Tt_{m} (printed)"), comm(l(sigma), tt(m)), ntp_rhs(1, sigma, m, tt, m + sigma));
    }
    for (sigma, m) in [(1, -1), (1, 0), (-1, 0), (-1, 1)] {
        push(&mut v, format!("L_{sigma}-T_{m} (printed)"), comm(l(sigma), t(m)), ntp_rhs(1, sigma, m, t, m + 2 * sigma));
    }

    for k in [1, -1] {
        let rho = Quarter(8 * k);
        push(&mut v, format!("Tt_{}-NN_{k} (printed)", -k), qcomm(tt(-k), nn(k), rho), scaled(1, 6 * k, times_two(tt(-k) * qm2j0())));
        push(&mut v, format!("NN_{k}-T_{k} (printed)"), qcomm(nn(k), t(k), rho), scaled(1, -2 * k, times_two(t(k) * qm2j0())));
        push(&mut v, format!("Tt_0-NN_{k} (printed)"), qcomm(tt(0), nn(k), rho), scaled(1, 2 * k, tt(0) * qm2j0()));
        push(&mut v, format!("NN_{k}-T_0 (printed)"), qcomm(nn(k), t(0), rho), scaled(1, 2 * k, t(0) * qm2j0()));
    }

    // -q^{-m1} sqrt([2]) [2(m2 - m1)] L_{m1+m2} q^{-2J_0}
    for (m1, m2v) in [(1, 0), (0, -1), (-1, 0)] {
        let rho = Quarter(8 * (m2v - m1));
        let br = crate::qnum::qi(2 * (m2v - m1) as i64);
        let c = QScalar { value: &QRationalFn::from(br) * &q_sc(-4 * m1).value, root2: true };
        let c = c.neg();
        push(
            &mut v,
            format!("T_{m1}-Tt_{m2v} (printed)"),
            qcomm(t(m1), tt(m2v), rho),
            sc(c, &format!("-q^({}) sqrt([2]) [{}]", -m1, 2 * (m2v - m1)), l(m1 + m2v) * qm2j0()),
        );
    }

    for (sigma, suffix) in [(1, "top"), (-1, "bottom")] {
        let rho = Quarter(-16 * sigma);
        let inner = |with_j0: bool| {
            let first = if with_j0 { scaled(1, -8 * sigma, qm2j0()) } else { scaled(1, -8 * sigma, crate::algebras::expr::int(1)) };
            first + scaled(1, 2 * sigma, times_two(nn(sigma)))
        };
        push(
            &mut v,
            format!("T-tilde-T m1+m2=0, {suffix} (printed, reading A)"),
            qcomm(t(sigma), tt(-sigma), rho),
            -times_two(inner(true) * qm2j0()),
        );
        push(
            &mut v,
            format!("T-tilde-T m1+m2=0, {suffix} (printed, reading B)"),
            qcomm(t(sigma), tt(-sigma), rho),
            -times_two(inner(false) * qm2j0()),
        );
    }
    push(&mut v, "T-tilde-T m1+m2=0, middle (printed)".into(), comm(t(0), tt(0)), times_two(nbr("[N+1]", 1) * qm2j0()));
    v
}
