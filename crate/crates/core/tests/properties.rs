use proptest::prelude::*;

use realknot::forms::{isolate_roots, resultant, BinaryForm, GaussRat, Poly, Rat};
use realknot::sphere::{circle, lift, project, proportional, LiftContract, ProjectionFrame};

fn rq(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn form(max_deg: usize) -> impl Strategy<Value = BinaryForm> {
    (1..=max_deg).prop_flat_map(|d| prop::collection::vec(-20i64..=20, d + 1)).prop_map(|c| BinaryForm::from_ints(&c))
}

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| rq(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_evaluates_to_product(a in form(5), b in form(5), s in rat(), t in rat()) {
        prop_assert_eq!(a.mul(&b).eval(&s, &t), a.eval(&s, &t) * b.eval(&s, &t));
    }

    #[test]
    fn shared_factor_kills_resultant(a in form(4), b in form(4), p in -9i64..=9, q in -9i64..=9) {
        prop_assume!(p != 0 || q != 0);
        let l = BinaryForm::from_ints(&[p, q]);
        prop_assert_eq!(resultant(&a.mul(&l), &b.mul(&l)), Rat::from_integer(0.into()));
    }

    #[test]
    fn resultant_scales(a in form(4), b in form(4), c in 1i64..=7) {
        let c = Rat::from_integer(c.into());
        let mut expect = resultant(&a, &b);
        for _ in 0..b.degree() {
            expect *= &c;
        }
        prop_assert_eq!(resultant(&a.scale(&c), &b), expect);
    }

    #[test]
    fn roots_of_known_factorizations(
        real in prop::collection::btree_set(-30i64..=30, 0..5),
        pairs in prop::collection::btree_set((-6i64..=6, 1i64..=6), 0..3),
    ) {
        prop_assume!(!real.is_empty() || !pairs.is_empty());
        let mut p = Poly::one();
        for r in &real {
            p = &p * &Poly::linear_root(&rq(*r, 3));
        }
        for (a, b) in &pairs {
            // (x - a)^2 + b^2
            let (a, b) = (rq(*a, 2), rq(*b, 2));
            let quad = Poly::new(vec![&a * &a + &b * &b, -(&a + &a), Rat::from_integer(1.into())]);
            p = &p * &quad;
        }
        let (ivs, rects) = isolate_roots(&p);
        prop_assert_eq!(ivs.len(), real.len());
        prop_assert_eq!(rects.len(), pairs.len());
        for r in &real {
            let x = rq(*r, 3);
            prop_assert_eq!(ivs.iter().filter(|iv| iv.contains(&x)).count(), 1);
        }
        for (a, b) in &pairs {
            let z = GaussRat::new(rq(*a, 2), rq(*b, 2));
            prop_assert_eq!(rects.iter().filter(|r| r.contains(&z)).count(), 1);
        }
    }

    #[test]
    fn circles_lift_and_project_back(
        c in prop::array::uniform3(-10i64..=10),
        q in prop::array::uniform4(-4i64..=4),
        r in 1i64..=6,
    ) {
        prop_assume!(q.iter().any(|x| *x != 0));
        let [a, b, cc, d] = q;
        let n = a * a + b * b + cc * cc + d * d;
        let r = Rat::from_integer(r.into());
        let e1 = [a * a + b * b - cc * cc - d * d, 2 * (b * cc - a * d), 2 * (b * d + a * cc)].map(|x| rq(x, n) * &r);
        let e2 = [2 * (b * cc + a * d), a * a - b * b + cc * cc - d * d, 2 * (cc * d - a * b)].map(|x| rq(x, n) * &r);
        let center = c.map(|x| rq(x, 1));
        let k = circle(&center, &e1, &e2).unwrap();
        let frame = ProjectionFrame::north();
        let up = lift(&k, &frame, LiftContract::Preserving).unwrap();
        prop_assert!(up.is_on_sphere());
        prop_assert_eq!(up.degree(), 2);
        let down = project(&up, &frame).unwrap();
        prop_assert!(down.trace.all_on_conic());
        prop_assert!(proportional(down.curve.forms(), k.forms()));
    }
}
