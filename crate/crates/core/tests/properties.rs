use plane_auto::amalgam::{AmalgamWord, Engine, Verdict};
use plane_auto::cli::{parse_map, parse_poly};
use plane_auto::exactnum::{BiPoly, GaussianRational, UniPoly};
use plane_auto::paperlab::{conjugator_bounds, random_word, WordBounds};
use plane_auto::planeauto::{split_right, AffineMap, CosetRep, PolyMap, UElement};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-20i64..=20, 1i64..=12, -20i64..=20, 1i64..=12)
        .prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
}

fn nonzero() -> impl Strategy<Value = GaussianRational> {
    scalar().prop_filter("nonzero", |s| s != &GaussianRational::int(0))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..=3, 0u32..=3), scalar()), 0..6).prop_map(BiPoly::from_terms)
}

fn small_words() -> WordBounds {
    WordBounds {
        max_len: 5,
        max_deg: 3,
        max_height: 6,
        max_total_degree: 9,
    }
}

fn word() -> impl Strategy<Value = AmalgamWord> {
    any::<u64>().prop_map(|s| random_word(s, &small_words()))
}

fn element() -> impl Strategy<Value = PolyMap> {
    word().prop_map(|w| w.realize(512).unwrap())
}

/// Elements of degree at most 4, for laws that multiply several of them.
fn small_element() -> impl Strategy<Value = PolyMap> {
    let bounds = WordBounds {
        max_len: 4,
        max_deg: 2,
        max_height: 4,
        max_total_degree: 4,
    };
    any::<u64>().prop_map(move |s| random_word(s, &bounds).realize(512).unwrap())
}

fn affine() -> impl Strategy<Value = AffineMap> {
    (nonzero(), scalar(), scalar(), scalar(), scalar()).prop_map(|(a, b, c, e, f)| {
        let d = (&GaussianRational::int(1) + &(&b * &c))
            .checked_div(&a)
            .unwrap();
        AffineMap::new(a, b, c, d, e, f).unwrap()
    })
}

fn e() -> Engine {
    Engine::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), GaussianRational::int(0));
        if a != GaussianRational::int(0) {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussianRational::int(1));
        }
    }

    #[test]
    fn scalar_literal_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<GaussianRational>().unwrap(), a);
    }

    #[test]
    fn polynomial_ring_axioms(p in bipoly(), q in bipoly(), r in bipoly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn degree_is_additive(p in bipoly(), q in bipoly()) {
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assert_eq!((&p * &q).total_degree(), p.total_degree() + q.total_degree());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(p in bipoly(), q in bipoly(), x in bipoly(), y in bipoly()) {
        let s = |f: &BiPoly| f.subst(&x, &y, 512).unwrap();
        prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
        prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
    }

    #[test]
    fn substitution_commutes_with_evaluation(p in bipoly(), x in bipoly(), y in bipoly(), a in scalar(), b in scalar()) {
        let composed = p.subst(&x, &y, 512).unwrap();
        prop_assert_eq!(composed.eval(&a, &b), p.eval(&x.eval(&a, &b), &y.eval(&a, &b)));
    }

    #[test]
    fn polynomial_print_parse(p in bipoly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn map_print_parse(g in element()) {
        let s = g.to_string();
        let back = parse_map(&s).unwrap();
        prop_assert_eq!(back.to_string(), s);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn product_is_associative(g in small_element(), h in small_element(), k in small_element()) {
        let e = e();
        let left = e.mul(&e.mul(&g, &h).unwrap(), &k).unwrap();
        let right = e.mul(&g, &e.mul(&h, &k).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_laws(g in small_element(), h in small_element()) {
        let e = e();
        let gi = e.invert(&g).unwrap();
        prop_assert!(e.mul(&g, &gi).unwrap().is_identity());
        prop_assert!(e.mul(&gi, &g).unwrap().is_identity());
        let gh_inv = e.invert(&e.mul(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(gh_inv, e.mul(&e.invert(&h).unwrap(), &gi).unwrap());
    }

    #[test]
    fn normal_form_round_trip(w in word()) {
        let e = e();
        let g = e.realize(&w).unwrap();
        prop_assert_eq!(e.normal_form(&g).unwrap(), w);
    }

    #[test]
    fn degree_is_product_of_letter_degrees(w in word()) {
        let g = e().realize(&w).unwrap();
        let expected: u32 = w.reps.iter().map(CosetRep::degree).product();
        prop_assert_eq!(g.degree(), expected);
    }

    #[test]
    fn factor_recomposition(g in element()) {
        let e = e();
        let maps: Vec<PolyMap> = e.factorize(&g).unwrap().iter().map(|f| f.to_map()).collect();
        prop_assert_eq!(e.product(&maps).unwrap(), g);
    }

    #[test]
    fn length_laws(g in element(), h in small_element()) {
        let e = e();
        let (lg, lh) = (e.length(&g).unwrap(), e.length(&h).unwrap());
        prop_assert_eq!(e.length(&e.invert(&g).unwrap()).unwrap(), lg);
        prop_assert!(e.length(&e.mul(&g, &h).unwrap()).unwrap() <= lg + lh);
    }

    #[test]
    fn split_right_is_unique(a in affine(), u in (nonzero(), scalar(), scalar(), scalar())) {
        let e = e();
        let (v, r) = split_right(&a.to_map()).unwrap();
        prop_assert_eq!(e.mul(&v.to_map(), &r.to_map()).unwrap(), a.to_map());
        // the representative depends only on the coset U·a
        let u = UElement::new(u.0, u.1, u.2, u.3).unwrap();
        let ua = e.mul(&u.to_map(), &a.to_map()).unwrap();
        let (_, r2) = split_right(&ua).unwrap();
        prop_assert_eq!(r2, r);
    }

    #[test]
    fn classification_is_conjugation_invariant(g in element(), s in any::<u64>()) {
        let e = e();
        let bounds = WordBounds { max_total_degree: 3, ..conjugator_bounds() };
        let s = e.realize(&random_word(s, &bounds)).unwrap();
        let c = e.conjugate(&g, &s).unwrap();
        let cg = e.classify(&g).unwrap();
        prop_assert_eq!(cg.verdict, e.classify(&c).unwrap().verdict);
        prop_assert_eq!(cg.verdict == Verdict::Henon, cg.witness.len() >= 2);
    }
}

#[test]
fn polynomial_literal_forms() {
    let p = parse_poly("(1/2+i)*x^2*y - 3*y + 7/3").unwrap();
    assert_eq!(p.to_string(), "(1/2+i)*x^2*y - 3*y + 7/3");
    let u = UniPoly::from_ints(&[0, 0, 1]);
    assert_eq!(BiPoly::from_uni_y(&u), parse_poly("y^2").unwrap());
}
