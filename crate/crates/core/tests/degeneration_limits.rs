use proptest::prelude::*;
use strata_core::degeneration::{
    central_gram, central_pairing, in_radical, limit_class, permutation_weyl_iso, root_shape,
    sign_swap, v0_constants_consistent, CentralFiberClass, IntersectionRule, LimitMap, RootShape,
};
use strata_core::delpezzo::{
    build_picard, epsilon_character, label_exceptionals, root_system_of_x, BLabel, Sign,
};
use strata_core::rational::{rat, ratio};

#[test]
fn central_gram_has_eight_dimensional_radical() {
    let g = central_gram();
    assert!(g.is_symmetric());
    assert_eq!(g.rank(), 8);
    let r = CentralFiberClass::generator(0, Sign::Plus)
        .add(&CentralFiberClass::generator(0, Sign::Minus))
        .sub(&CentralFiberClass::generator(3, Sign::Plus))
        .sub(&CentralFiberClass::generator(3, Sign::Minus));
    assert!(in_radical(&r));
    assert!(!in_radical(&CentralFiberClass::generator(0, Sign::Plus)));
}

#[test]
fn limit_classes_follow_the_rules() {
    let labels = BLabel::all();
    assert_eq!(labels.len(), 56);
    for a in &labels {
        let la = limit_class(*a).unwrap();
        for b in &labels {
            let lb = limit_class(*b).unwrap();
            let rule = IntersectionRule::of(a, b);
            assert_eq!(
                central_pairing(&la.class, &lb.class),
                rat(rule.expected()),
                "{a} {b}"
            );
        }
    }
}

#[test]
fn v0_constants() {
    assert!(v0_constants_consistent());
    let x = CentralFiberClass::generator(2, Sign::Minus);
    assert_eq!(central_pairing(&x, &x), ratio(-3, 4));
}

#[test]
fn limit_map_is_linear_modulo_radical() {
    let pic = build_picard();
    let map = LimitMap::new().unwrap();
    let dict = label_exceptionals(&pic).unwrap();
    for (c, l) in dict.classes().iter().zip(dict.labels()) {
        let diff = map.apply(&c.vec).sub(&limit_class(*l).unwrap().class);
        assert!(in_radical(&diff), "{l}");
    }
}

#[test]
fn root_shapes_match_epsilon() {
    let pic = build_picard();
    let dict = label_exceptionals(&pic).unwrap();
    let eps = epsilon_character(&dict).unwrap();
    let sys = root_system_of_x(&pic).unwrap();
    let mut same = 0;
    for r in sys.roots() {
        let w = root_shape(&dict, &eps, r).unwrap();
        if w.shape == RootShape::SameSignSingleton {
            same += 1;
            assert_eq!(w.epsilon, 1);
        } else {
            assert_eq!(w.epsilon, -1);
        }
    }
    assert_eq!(same, 56);
}

#[test]
fn permutations_embed_in_weyl_group() {
    let pic = build_picard();
    let rep = permutation_weyl_iso(&pic).unwrap();
    assert!(rep.passed());
    assert_eq!(rep.image_order, 40320);
    let iota = sign_swap(&pic);
    assert!(iota.compose(&iota).is_identity());
}

proptest! {
    #[test]
    fn pairing_is_symmetric(a in prop::collection::vec(-5i64..5, 16), b in prop::collection::vec(-5i64..5, 16)) {
        let x = CentralFiberClass::from_coeffs(a.into_iter().map(rat).collect()).unwrap();
        let y = CentralFiberClass::from_coeffs(b.into_iter().map(rat).collect()).unwrap();
        prop_assert_eq!(central_pairing(&x, &y), central_pairing(&y, &x));
    }
}
