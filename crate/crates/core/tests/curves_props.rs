use hitbox_core::arith::rat;
use hitbox_core::curves::{eval_map, PlaneCurve, RationalMap, UniRatFn};
use hitbox_core::poly::parse::{parse_bipoly, parse_ratfn};
use hitbox_core::{Rational, UniPoly};
use num_traits::Zero;
use proptest::prelude::*;

/// V -> (T, X) onto the cubic auxiliary curve of the A4 example.
fn psi() -> RationalMap {
    let t = UniRatFn::new(UniPoly::from_ints(&[0, -9, 0, 1]), UniPoly::from_ints(&[9, 0, -9])).unwrap();
    let x = UniRatFn::new(UniPoly::from_ints(&[-40, 0, 8]), UniPoly::from_ints(&[1, 0, -1])).unwrap();
    RationalMap::new(vec![t, x]).unwrap()
}

fn cubic() -> PlaneCurve {
    PlaneCurve::new(parse_bipoly("X^3 + 48*X^2 + (336 - 1296*T^2)*X - 10368*T^2 + 640").unwrap()).unwrap()
}

fn param() -> impl Strategy<Value = Rational> {
    (-500i64..=500, 1i64..=500).prop_map(|(a, b)| rat(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn parametrized_points_lie_on_the_cubic(v in param()) {
        prop_assume!(v != rat(1, 1) && v != rat(-1, 1));
        let tx = eval_map(&psi(), &v).unwrap();
        prop_assert!(cubic().contains(&tx[0], &tx[1]));
        // the inverse map recovers the parameter away from T = 0
        if !tx[0].is_zero() {
            let phi = parse_ratfn("(X^2 - 1296*T^2 + 44*X + 160)/(144*T)", "T", "X").unwrap();
            let back = phi.num.eval2(&tx[0], &tx[1]) / phi.den.eval2(&tx[0], &tx[1]);
            prop_assert_eq!(back, v);
        }
    }
}
