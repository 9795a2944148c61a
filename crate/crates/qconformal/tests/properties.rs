//! Property tests for the algebraic core: field axioms for the scalars,
//! the anti-involution, normal-ordering structure, and operator linearity.

use proptest::prelude::*;

use qconformal::algebra::{normal_order, Gen, Kind, NCPoly, Word};
use qconformal::fields::ops::{bracket, d, m, t};
use qconformal::fields::{op_product, op_sum, FieldState, Var};
use qconformal::scalar::{qint, QScalar};
use qconformal::Basis;

fn arb_scalar() -> impl Strategy<Value = QScalar> {
    (
        proptest::collection::vec((-6i64..=6, -4i64..=4), 1..4),
        proptest::collection::vec((1i64..=5, 0i64..=3), 1..3),
    )
        .prop_map(|(num, den)| {
            let mut n = QScalar::zero();
            for (c, e) in num {
                n = &n + &(&QScalar::from_int(c) * &QScalar::q_pow(e));
            }
            let mut dd = QScalar::zero();
            for (c, e) in den {
                dd = &dd + &(&QScalar::from_int(c) * &QScalar::q_pow(e));
            }
            if dd.is_zero() {
                dd = QScalar::one();
            }
            &n / &dd
        })
}

fn arb_word() -> impl Strategy<Value = Vec<Gen>> {
    proptest::collection::vec(
        prop_oneof![
            Just(Gen::V),
            Just(Gen::Minus),
            Just(Gen::Plus),
            Just(Gen::Vbar)
        ],
        0..6,
    )
}

fn arb_ncpoly(kind: Kind, tag: Basis) -> impl Strategy<Value = NCPoly> {
    proptest::collection::vec((arb_word(), -3i64..=3), 1..3).prop_map(move |terms| {
        let mut acc = NCPoly::zero(kind, tag);
        for (letters, c) in terms {
            let p = normal_order(&Word::new(kind, letters), QScalar::from_int(c), tag).unwrap();
            acc = acc.add(&p).unwrap();
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a - &a) * &c, QScalar::zero());
        if !b.is_zero() {
            let q = &a / &b;
            prop_assert_eq!(&q * &b, a);
        }
    }

    #[test]
    fn scalar_conjugation_is_a_field_morphism(a in arb_scalar(), b in arb_scalar()) {
        prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn omega_anti_involution(
        wa in arb_ncpoly(Kind::Momentum, Basis::Hat),
        wb in arb_ncpoly(Kind::Momentum, Basis::Hat),
    ) {
        prop_assert_eq!(wa.omega().omega(), wa.clone());
        let lhs = wa.mul(&wb).unwrap().omega();
        let rhs = wb.omega().mul(&wa.omega()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_order_preserves_degree(letters in arb_word()) {
        let n = letters.len() as u32;
        let p = normal_order(&Word::new(Kind::Coord, letters), QScalar::one(), Basis::Tilde).unwrap();
        for (k, _) in p.terms() {
            prop_assert_eq!(k.iter().sum::<u32>(), n);
        }
    }

    #[test]
    fn multiplication_associative(
        a in arb_ncpoly(Kind::Coord, Basis::Hat),
        b in arb_ncpoly(Kind::Coord, Basis::Hat),
        c in arb_ncpoly(Kind::Coord, Basis::Hat),
    ) {
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cone_reduction_idempotent(p in arb_ncpoly(Kind::Momentum, Basis::Tilde)) {
        let once = p.cone_reduce().unwrap();
        prop_assert_eq!(once.cone_reduce().unwrap(), once);
    }

    #[test]
    fn operator_linearity(
        e1 in proptest::array::uniform6(0u32..3),
        e2 in proptest::array::uniform6(0u32..3),
        c in 1i64..5,
    ) {
        let op = op_product(vec![
            op_sum(vec![d(Var::Plus), op_product(vec![m(Var::Z), d(Var::V)])]),
            t(Var::Minus),
            bracket(1, &[(Var::Z, 1), (Var::Vbar, -1)]),
        ]);
        let a = FieldState::scalar_monomial(Basis::Hat, e1, QScalar::one());
        let b = FieldState::scalar_monomial(Basis::Hat, e2, QScalar::one());
        let k = qint(c);
        let lhs = op.apply(&a.add(&b.scale(&k))).unwrap();
        let rhs = op.apply(&a).unwrap().add(&op.apply(&b).unwrap().scale(&k));
        prop_assert_eq!(lhs, rhs);
    }
}
