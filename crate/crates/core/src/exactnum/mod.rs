//! Exact arithmetic in Q(ω) and in the split-quaternion subalgebra
//! `Q(ω) ⊕ Q(ω)β`.

mod eisenstein;
mod splitquat;

pub use eisenstein::{eis_add, eis_conj, eis_mul, EisensteinRational};
pub use splitquat::{sq_mul, SplitQuaternion};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn eis() -> impl Strategy<Value = EisensteinRational> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6)
            .prop_map(|(an, ad, bn, bd)| EisensteinRational::from_ratios((an, ad), (bn, bd)))
    }

    fn sq() -> impl Strategy<Value = SplitQuaternion> {
        (eis(), eis()).prop_map(|(z, w)| SplitQuaternion::new(z, w))
    }

    proptest! {
        #[test]
        fn field_axioms(x in eis(), y in eis(), z in eis()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            if let Some(inv) = x.inverse() {
                prop_assert!((&x * &inv).is_one());
            }
        }

        #[test]
        fn conjugation_is_a_field_automorphism(x in eis(), y in eis()) {
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
            prop_assert_eq!((&x + &y).conj(), &x.conj() + &y.conj());
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn split_quaternion_ring_axioms(p in sq(), q in sq(), r in sq()) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert_eq!(&SplitQuaternion::one() * &p, p.clone());
            prop_assert_eq!(&p * &SplitQuaternion::one(), p);
        }

        #[test]
        fn complex_subfield_embeds(x in eis(), y in eis()) {
            let px = SplitQuaternion::from_complex(x.clone());
            let py = SplitQuaternion::from_complex(y.clone());
            prop_assert_eq!(&px * &py, SplitQuaternion::from_complex(&x * &y));
            let b = SplitQuaternion::beta();
            prop_assert_eq!(&b * &px, &SplitQuaternion::from_complex(x.conj()) * &b);
        }
    }
}
