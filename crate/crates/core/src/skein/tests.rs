use std::sync::Arc;

use super::*;
use crate::root_data::RootDatum;
use crate::tangle::{Diagram, Generator};

fn delta() -> Scalar {
    loop_value()
}

#[test]
fn e_squared_is_delta_e() {
    let e = SkeinElement::from_diagram(PlanarDiagram::e(2, 0), Scalar::one());
    let ee = tl_compose(&e, &e).unwrap();
    let expect = SkeinElement::from_diagram(PlanarDiagram::e(2, 0), delta());
    assert_eq!(ee, expect);
}

#[test]
fn identity_is_neutral() {
    let p = SkeinElement::from_diagram(PlanarDiagram::e(3, 1), Scalar::q_int(2));
    assert_eq!(tl_compose(&SkeinElement::identity(3), &p).unwrap(), p);
    assert_eq!(tl_compose(&p, &SkeinElement::identity(3)).unwrap(), p);
    assert!(matches!(
        tl_compose(&p, &SkeinElement::identity(2)),
        Err(SkeinError::WidthMismatch(3, 2))
    ));
}

#[test]
fn circle_value() {
    let cup = SkeinElement::from_diagram(PlanarDiagram::cup(0, 0), Scalar::one());
    let cap = SkeinElement::from_diagram(PlanarDiagram::cap(2, 0), Scalar::one());
    let circle = tl_compose(&cup, &cap).unwrap();
    assert_eq!(circle.scalar(), delta());
}

#[test]
fn temperley_lieb_relations() {
    // e1 e2 e1 = e1 on three strands
    let e1 = SkeinElement::from_diagram(PlanarDiagram::e(3, 0), Scalar::one());
    let e2 = SkeinElement::from_diagram(PlanarDiagram::e(3, 1), Scalar::one());
    let lhs = tl_compose(&tl_compose(&e1, &e2).unwrap(), &e1).unwrap();
    assert_eq!(lhs, e1);
    let a = tl_compose(&tl_compose(&e1, &e2).unwrap(), &e2).unwrap();
    let b = tl_compose(&e1, &tl_compose(&e2, &e2).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn rejects_nonplanar() {
    // bottom 0-2 and 1-3 cross
    assert!(matches!(
        PlanarDiagram::new(4, 0, vec![2, 3, 0, 1]),
        Err(SkeinError::NotPlanar)
    ));
    assert!(PlanarDiagram::new(4, 0, vec![3, 2, 1, 0]).is_ok());
}

#[test]
fn single_strand_is_self_dual() {
    // the rotated strand is the strand itself
    let id = PlanarDiagram::identity(1);
    assert_eq!(id.rotated(), id);
    assert_eq!(PlanarDiagram::e(2, 0).rotated(), PlanarDiagram::e(2, 0));
}

fn unknot() -> Diagram {
    braid_closure(1, &[], "V").unwrap()
}

#[test]
fn bracket_small_links() {
    assert_eq!(kauffman_bracket(&unknot()).unwrap(), delta());
    let unlink = braid_closure(2, &[], "V").unwrap();
    assert_eq!(kauffman_bracket(&unlink).unwrap(), delta().pow(2));
    assert_eq!(kauffman_bracket(&Diagram::empty()).unwrap(), Scalar::one());
}

/// Brute-force trefoil bracket from its eight states: `A^{a-b} δ^{loops}`
/// with loops counted by hand for the standard closed-braid picture.
#[test]
fn trefoil_by_hand() {
    let a = half_power(1, 1);
    let ai = a.pow(-1);
    let d = delta();
    // closure of s1^3 on two strands with k horizontal smoothings:
    // k = 0, 1, 2, 3 leave 2, 1, 2, 3 loops
    let mut expect = Scalar::zero();
    for k in 0..=3i64 {
        let states = [1, 3, 3, 1][k as usize];
        let loops = match k {
            0 => 2,
            1 => 1,
            2 => 2,
            _ => 3,
        };
        let c = &a.pow(3 - k) * &ai.pow(k);
        expect = &expect + &(&Scalar::from_int(states) * &(&c * &d.pow(loops)));
    }
    let tref = braid_closure(2, &[(1, true); 3], "V").unwrap();
    assert_eq!(kauffman_bracket(&tref).unwrap(), expect);
}

#[test]
fn kink_ratio_is_monomial() {
    let kinked = Diagram::from_slices(
        Default::default(),
        vec![
            Generator::default_cup(0),
            Generator::default_cup(1),
            Generator::Crossing { at: 0, positive: true },
            Generator::Cap { at: 1 },
            Generator::Cap { at: 0 },
        ],
    )
    .unwrap();
    let ratio = &kauffman_bracket(&kinked).unwrap() / &kauffman_bracket(&unknot()).unwrap();
    assert_eq!(ratio, -&half_power(1, 3));
    let c = Convention::preferred();
    assert_eq!(c.normalized(&kinked).unwrap(), c.normalized(&unknot()).unwrap());
}

#[test]
fn rejects_half_twists() {
    let d = Diagram::from_slices(
        Default::default(),
        vec![
            Generator::default_cup(0),
            Generator::HalfTwist { at: 0, n: 1, positive: true },
            Generator::HalfTwist { at: 0, n: 1, positive: true },
            Generator::Cap { at: 0 },
        ],
    )
    .unwrap();
    assert!(matches!(kauffman_bracket(&d), Err(SkeinError::HalfTwist)));
}

#[test]
fn differential_against_functor() {
    let d = Arc::new(RootDatum::build('A', 1).unwrap());
    let reg = LabelRegistry::standard(&d).unwrap();
    let held = vec![
        ("trefoil".to_string(), braid_closure(2, &[(1, true); 3], "V").unwrap()),
        (
            "figure-8".to_string(),
            braid_closure(3, &[(1, true), (2, false), (1, true), (2, false)], "V").unwrap(),
        ),
    ];
    let rep = differential_test(&reg, &held).unwrap();
    assert!(rep.passed(), "{rep:#?}");
    assert_eq!(rep.chosen, Convention::preferred());
    assert!(rep.underdetermined());
    assert!(rep.consistent_after_holdout.contains(&Convention::preferred()));
}
