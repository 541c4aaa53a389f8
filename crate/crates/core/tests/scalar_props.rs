//! Property tests for the exact scalar arithmetic.

use proptest::prelude::*;

use qalg_core::{FieldDescriptor, Scalar};

fn fields() -> Vec<FieldDescriptor> {
    vec![
        FieldDescriptor::Rationals,
        FieldDescriptor::prime(5).unwrap(),
        FieldDescriptor::prime(101).unwrap(),
        FieldDescriptor::cyclotomic(3).unwrap(),
        FieldDescriptor::cyclotomic(8).unwrap(),
    ]
}

fn scalar_in(field: FieldDescriptor, seeds: &[i64]) -> Scalar {
    match field {
        FieldDescriptor::CyclotomicRationals(_) => {
            let z = Scalar::zeta(field).unwrap();
            let mut acc = Scalar::zero(field);
            for (e, &c) in seeds.iter().enumerate() {
                acc = acc.add(&Scalar::from_integer(c, field).mul(&z.pow(e as u64)));
            }
            acc
        }
        _ => {
            let num = seeds[0];
            let den = seeds[1].unsigned_abs().max(1) as i64;
            Scalar::from_rational(num.into(), den.into(), field)
                .unwrap_or_else(|_| Scalar::from_integer(num, field))
        }
    }
}

proptest! {
    #[test]
    fn field_axioms(a in prop::array::uniform4(-50i64..50),
                    b in prop::array::uniform4(-50i64..50),
                    c in prop::array::uniform4(-50i64..50)) {
        for field in fields() {
            let x = scalar_in(field, &a);
            let y = scalar_in(field, &b);
            let z = scalar_in(field, &c);
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(x.sub(&x), Scalar::zero(field));
            if !x.is_zero() {
                prop_assert!(x.mul(&x.inverse().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn print_parse_round_trip(a in prop::array::uniform4(-200i64..200)) {
        for field in fields() {
            let x = scalar_in(field, &a);
            let printed = x.to_string();
            let back = Scalar::parse(&printed, field).unwrap();
            prop_assert_eq!(back, x, "failed for `{}`", printed);
        }
    }

    #[test]
    fn powers_respect_orders(k in 1u64..40) {
        // any claimed root-of-unity order divides the exponent lattice
        for field in fields() {
            let candidates = match field {
                FieldDescriptor::CyclotomicRationals(_) => {
                    let z = Scalar::zeta(field).unwrap();
                    vec![z.clone(), z.neg(), z.pow(2)]
                }
                FieldDescriptor::PrimeField(_) => {
                    vec![Scalar::from_integer(2, field), Scalar::from_integer(3, field)]
                }
                _ => vec![Scalar::one(field).neg()],
            };
            for s in candidates {
                if s.is_zero() {
                    continue;
                }
                if let qalg_core::scalar::RootOfUnity::Finite(n) =
                    s.root_of_unity_order().unwrap()
                {
                    prop_assert_eq!(s.pow(k).is_one(), k % n == 0);
                }
            }
        }
    }
}
