use num_rational::BigRational;
use proptest::prelude::*;

use qsp4::algebras::{casimir, printed_variants, relation_catalog, Casimir, Family, GeneratorSet};
use qsp4::fock::{enumerate, labels, pair_from_triple, triple_from_pair, Convention, FockSpace, FockState, Parity, Sector};
use qsp4::ops::SafeSubspace;
use qsp4::qnum::{Deformation, QRationalFn, Quarter};
use qsp4::verify::check_relations;

const Q: Deformation = Deformation::Quantum;

fn st(a: u32, b: u32) -> FockState {
    FockState::new(a, b)
}

fn gens(f: Family, cutoff: u32) -> GeneratorSet {
    GeneratorSet::build(f, FockSpace::full(cutoff)).unwrap()
}

fn rat(n: i64, d: i64) -> QRationalFn {
    QRationalFn::from_rational(BigRational::new(n.into(), d.into()))
}

#[test]
fn generator_entries() {
    let c = gens(Family::ClassicalSp4, 8);
    assert_eq!(c.get("I_0").unwrap().entry(st(3, 1), st(3, 1)), QRationalFn::one());
    // I_+ |i=1,i0=0> -> |1,1>: (i - i0)(i + i0 + 1) = 2
    assert_eq!(c.get("I_+").unwrap().gram_squared_element(st(1, 1), st(2, 0)), QRationalFn::from_int(2));

    let b = gens(Family::QBosonSp4, 8);
    assert_eq!(b.get("K0_+").unwrap().entry(st(1, 1), st(0, 0)), QRationalFn::one());
    // J_+ on |j=1,m=-1>: [j-m][j+m+1] = [2][1]
    assert_eq!(b.get("J_+").unwrap().gram_squared_element(st(0, 2), st(1, 1)), Q.int(2));

    let t = gens(Family::TensorSp4, 8);
    for s in enumerate(&FockSpace::full(3)).into_iter().filter(|s| s.nu() == 3) {
        assert_eq!(t.get("L0_0").unwrap().entry(s, s), Q.int(3));
    }
    let t0 = t.get("T_0").unwrap();
    assert!(t0.root2());
    // q^-1/2 from T_0, q^-1/4 from td_-1, q^(1/4 + 1/2) from td_1 on |0,1>: only [2] survives.
    assert_eq!(t0.gram_squared_element(st(0, 0), st(1, 1)), Q.int(2));
}

#[test]
fn number_like_diagonals() {
    let t = gens(Family::TensorSp4, 8);
    let nn1 = t.get("NN_1").unwrap();
    for s in enumerate(&FockSpace::full(6)) {
        let want = &(&Q.pow(Quarter(2)) * &Q.int(s.nu1 as i64)) * &Q.pow(Quarter::int(s.num1 as i32));
        assert_eq!(nn1.entry(s, s), want, "{s}");
    }
    let b = gens(Family::QBosonSp4, 6);
    assert_eq!(b.get("N").unwrap().entry(st(2, 1), st(2, 1)), QRationalFn::from_int(3));
}

#[test]
fn casimir_values() {
    let c = gens(Family::ClassicalSp4, 8);
    let i2 = casimir(&Casimir::I2, &c).unwrap();
    assert_eq!(i2.entry(st(3, 1), st(3, 1)), QRationalFn::from_int(6));
    let sub = SafeSubspace::new(c.space(), 2);
    for pm in [1, -1] {
        let k = casimir(&Casimir::C2SuPm(pm), &c).unwrap();
        for (_, v) in k.diagonal_spectrum(&sub).unwrap() {
            assert_eq!(v, rat(-3, 16));
        }
    }

    let b = gens(Family::QBosonSp4, 8);
    let j2 = casimir(&Casimir::J2, &b).unwrap();
    for s in [st(4, 0), st(2, 2), st(1, 3)] {
        assert_eq!(j2.entry(s, s), &Q.int(2) * &Q.int(3));
    }

    let t = gens(Family::TensorSp4, 8);
    let l2 = casimir(&Casimir::L2, &t).unwrap();
    let s2 = casimir(&Casimir::S2(std::array::from_fn(|i| BigRational::from_integer(i64::from(i == 0).into()))), &t).unwrap();
    for s in [st(2, 0), st(1, 1), st(0, 2)] {
        assert_eq!(l2.entry(s, s), Q.int(4));
        assert_eq!(s2.entry(s, s), Q.int(2));
    }
}

#[test]
fn catalog_contents() {
    for (f, min) in [(Family::ClassicalSp4, 18), (Family::QBosonSp4, 16), (Family::TensorSp4, 20)] {
        assert!(relation_catalog(f).len() >= min, "{f}");
    }
    let find = |f: Family, name: &str| relation_catalog(f).into_iter().find(|r| r.name == name).unwrap();
    let g = gens(Family::QBosonSp4, 8);
    let j = find(Family::QBosonSp4, "J-commutator");
    assert_eq!(j.statement(), "[J_+, J_-] = [2J_0]");
    assert_eq!(j.reach(&g).unwrap(), 2);
    let t = gens(Family::TensorSp4, 8);
    assert_eq!(find(Family::TensorSp4, "T-tilde-T m1+m2=0, top").reach(&t).unwrap(), 2);
    assert_eq!(find(Family::ClassicalSp4, "Bose-cc (i=1,k=1)").statement(), "[b_1, bd_1] = 1");
}

#[test]
fn printed_variants_fail() {
    let t = gens(Family::TensorSp4, 10);
    let printed = printed_variants(Family::TensorSp4);
    assert!(!printed.is_empty());
    for rel in &printed {
        let r = check_relations(std::slice::from_ref(rel), &t, &[]).unwrap();
        assert!(r.iter().any(|r| !r.holds()), "{} unexpectedly holds", rel.name);
    }
}

#[test]
fn enumeration_counts() {
    for cutoff in 0..=20u32 {
        let n = (cutoff as usize + 1) * (cutoff as usize + 2) / 2;
        let even = enumerate(&FockSpace::new(cutoff, Sector::Even)).len();
        let odd = enumerate(&FockSpace::new(cutoff, Sector::Odd)).len();
        assert_eq!(even + odd, n);
        assert_eq!(FockSpace::full(cutoff).full_dim(), n);
    }
}

proptest! {
    #[test]
    fn index_round_trip(a in 0u32..=20, b in 0u32..=20) {
        let s = st(a, b);
        prop_assert_eq!(FockState::from_index(s.index()), s);
    }

    #[test]
    fn labels_are_consistent(a in 0u32..=20, b in 0u32..=20) {
        let l = labels(st(a, b));
        prop_assert_eq!(l.nu, a + b);
        prop_assert_eq!(l.parity == Parity::Even, (a + b) % 2 == 0);
        prop_assert_eq!(l.j.0 as u32, a + b);
        prop_assert_eq!(l.m.0, a as i32 - b as i32);
    }

    #[test]
    fn triples_round_trip(a in 0u32..=20, b in 0u32..=20) {
        let s = st(a, b);
        for c in [Convention::MinN0, Convention::MaxN0] {
            match triple_from_pair(s, c) {
                Ok(t) => prop_assert_eq!(pair_from_triple(t).unwrap(), s),
                Err(_) => prop_assert_eq!(s.parity(), Parity::Odd),
            }
        }
    }
}
