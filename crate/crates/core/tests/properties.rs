//! Property-based invariants over randomized inputs.

use std::sync::Arc;

use proptest::prelude::*;

use nt_codes::code::{self, LinearCode};
use nt_codes::curve::Curve;
use nt_codes::gf::{Felt, Field};
use nt_codes::matrix::FMatrix;
use nt_codes::spaces;

fn f8() -> Arc<Field> {
    Arc::new(Field::from_q(2, 3).unwrap())
}

fn f27() -> Arc<Field> {
    Arc::new(Field::from_q(3, 3).unwrap())
}

proptest! {
    #[test]
    fn field_laws_hold(a in 0u32..27, b in 0u32..27, c in 0u32..27) {
        for f in [f8(), f27()] {
            let m = f.order as u32;
            let (a, b, c) = (Felt(a % m), Felt(b % m), Felt(c % m));
            // distributivity and associativity
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            // inverses
            if !a.is_zero() {
                prop_assert_eq!(f.mul(a, f.inv(a)), Felt::ONE);
            }
            prop_assert_eq!(f.add(a, f.neg(a)), Felt::ZERO);
            // Frobenius-invariance of the trace
            prop_assert_eq!(f.trace_to_base(f.pow(a, f.q)), f.trace_to_base(a));
        }
    }

    #[test]
    fn dual_of_dual_is_identity(seed in 0u64..5000, k in 1usize..6) {
        use rand::{Rng, SeedableRng};
        let f = f8();
        let curve = Curve::build(f.clone()).unwrap();
        let n = curve.affine_points.len();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let rows: Vec<Vec<Felt>> = (0..k)
            .map(|_| (0..n).map(|_| Felt(rng.gen_range(0..f.order) as u32)).collect())
            .collect();
        let code = LinearCode::from_matrix(
            FMatrix::from_rows(f.clone(), rows),
            curve.affine_points.clone(),
        );
        let dd = code::dual(&code::dual(&code));
        prop_assert!(dd.same_code(&code));
        // generator and dual generator are orthogonal
        prop_assert!(code.gen.matmul(&code::dual(&code).gen.transpose()).is_zero());
    }

    #[test]
    fn riemann_roch_dimension_monotone(s in 0i64..56) {
        let curve = Curve::build(f8()).unwrap();
        let n1 = spaces::dim_l_infinity(&curve, s).unwrap();
        let n2 = spaces::dim_l_infinity(&curve, s + 1).unwrap();
        prop_assert!(n2 == n1 || n2 == n1 + 1);
    }
}
