use plane_auto::amalgam::{Engine, Verdict};
use plane_auto::cli::{parse_map, parse_poly};
use plane_auto::exactnum::UniPoly;
use plane_auto::paperlab::{antidifference, check_degree_lowering, length8_element};
use plane_auto::planeauto::PolyMap;

fn m(s: &str) -> PolyMap {
    parse_map(s).unwrap()
}

#[test]
fn jacobians() {
    assert_eq!(m("(x + y^3 - 2*y, y)").jacobian().to_string(), "1");
    assert_eq!(m("(y, x)").jacobian().to_string(), "-1");
    assert_eq!(m("((2+i)*x + y, -x)").jacobian().to_string(), "1");
}

#[test]
fn products_and_inverses() {
    let e = Engine::default();
    assert_eq!(e.invert(&m("(y, -x)")).unwrap(), m("(-y, x)"));
    assert_eq!(e.invert(&m("(y, -x + y^2)")).unwrap(), m("(x^2 - y, x)"));
    assert_eq!(
        e.power(&m("(x + y^2, y)"), -2).unwrap(),
        m("(x - 2*y^2, y)")
    );
    assert!(e.power(&m("(y, -x + y^2)"), 0).unwrap().is_identity());
    assert_eq!(e.power(&m("(y, -x + y^2)"), 3).unwrap().degree(), 8);
}

#[test]
fn commutators() {
    let e = Engine::default();
    assert_eq!(
        e.commutator(&m("(x, y + 1)"), &m("(x + y^3, y)")).unwrap(),
        m("(x + 3*y^2 + 3*y + 1, y)")
    );
    assert_eq!(
        e.commutator(&m("(-x, -y)"), &m("(x + y^2, y)")).unwrap(),
        m("(x - 2*y^2, y)")
    );
}

#[test]
fn lengths() {
    let e = Engine::default();
    assert_eq!(e.length(&m("(3*x + y, -x)")).unwrap(), 1);
    assert_eq!(e.length(&m("(x + y^2, y)")).unwrap(), 1);
    let g = e.conjugate(&m("(x + y^2, y)"), &m("(-y, x)")).unwrap();
    assert_eq!(e.length(&g).unwrap(), 3);
    assert_eq!(e.length(&length8_element(&e).unwrap()).unwrap(), 8);
}

#[test]
fn normal_forms() {
    let e = Engine::default();
    let w = e.normal_form(&m("(-x, -y)")).unwrap();
    assert!(w.reps.is_empty());
    let w = e.normal_form(&m("(y, -x + y^2)")).unwrap();
    assert_eq!(w.len(), 2);
    assert_eq!(e.realize(&w).unwrap(), m("(y, -x + y^2)"));
}

#[test]
fn factorization_recomposes() {
    let e = Engine::default();
    let g = m("(y, -x + y^2)");
    let f = e.factorize(&g).unwrap();
    assert_eq!(f.len(), 2);
    let maps: Vec<PolyMap> = f.iter().map(|f| f.to_map()).collect();
    assert_eq!(e.product(&maps).unwrap(), g);
}

#[test]
fn classification() {
    let e = Engine::default();
    assert_eq!(
        e.classify(&m("(x + y^2, y)")).unwrap().verdict,
        Verdict::Elementary
    );
    assert_eq!(
        e.classify(&m("(y, -x + y^2)")).unwrap().verdict,
        Verdict::Henon
    );
    let c = e.conjugate(&m("(x + y^2, y)"), &m("(-y, x)")).unwrap();
    assert_eq!(e.classify(&c).unwrap().verdict, Verdict::Elementary);
}

#[test]
fn henon_form_of_square() {
    let e = Engine::default();
    let g = e.power(&m("(y, -x + y^2)"), 2).unwrap();
    let form = e.henon_form(&g).unwrap();
    assert!(e.verify_henon_form(&g, &form).unwrap());
}

#[test]
fn degree_lowering_and_antidifference() {
    let e = Engine::default();
    assert!(check_degree_lowering(&e, &UniPoly::from_ints(&[0, 0, 0, 1]), 1).pass);
    assert!(check_degree_lowering(&e, &UniPoly::from_ints(&[0, 0, 1, 0, 0, 1]), 3).pass);
    let p = antidifference(&UniPoly::from_ints(&[0, 0, 1]));
    let y = parse_poly("y").unwrap();
    let shifted = plane_auto::exactnum::BiPoly::from_uni_y(&p)
        .subst(&parse_poly("x").unwrap(), &parse_poly("y + 1").unwrap(), 64)
        .unwrap();
    let diff = &shifted - &plane_auto::exactnum::BiPoly::from_uni_y(&p);
    assert_eq!(diff, &y * &y);
}
