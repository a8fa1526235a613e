//! Temperley-Lieb diagrams and the Kauffman bracket as an oracle.
use std::sync::Arc;

use halfrib::root_data::RootDatum;
use halfrib::skein::{differential_test, kauffman_bracket, tl_compose, PlanarDiagram, SkeinElement};
use halfrib::tangle::{braid_closure, LabelRegistry};
use halfrib::Scalar;

fn main() {
    let e1 = SkeinElement::from_diagram(PlanarDiagram::e(3, 0), Scalar::one());
    let e2 = SkeinElement::from_diagram(PlanarDiagram::e(3, 1), Scalar::one());
    let e1e2e1 = tl_compose(&tl_compose(&e1, &e2).unwrap(), &e1).unwrap();
    println!("e1 e2 e1 = e1: {}", e1e2e1 == e1);
    let ee = tl_compose(&e1, &e1).unwrap();
    for (_, c) in ee.terms() {
        println!("e1 e1 = ({c}) e1");
    }

    let trefoil = braid_closure(2, &[(1, true); 3], "V").unwrap();
    println!("<trefoil> = {}", kauffman_bracket(&trefoil).unwrap());

    let d = Arc::new(RootDatum::parse("A1").unwrap());
    let reg = LabelRegistry::standard(&d).unwrap();
    let held = vec![
        ("trefoil".to_string(), trefoil),
        (
            "figure-8".to_string(),
            braid_closure(3, &[(1, true), (2, false), (1, true), (2, false)], "V").unwrap(),
        ),
    ];
    let rep = differential_test(&reg, &held).unwrap();
    println!("{} of {} conventions survive calibration:", rep.survivors.len(), rep.candidates);
    for c in &rep.survivors {
        println!("  {c}");
    }
    println!("{} remain after the held-out links:", rep.consistent_after_holdout.len());
    for c in &rep.consistent_after_holdout {
        println!("  {c}");
    }
    for r in rep.calibration.iter().chain(&rep.held_out) {
        println!("{}: functor {}  bracket {}  match {}", r.name, r.functor, r.bracket, r.matches);
    }
}
