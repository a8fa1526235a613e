//! Evaluating ribbon tangles, half-twists included.
use std::sync::Arc;

use halfrib::halftwist::RibbonChoice;
use halfrib::root_data::RootDatum;
use halfrib::tangle::{
    braid_closure, evaluate, link_invariant, BoundaryObject, Diagram, Generator, Interval, LabelRegistry,
};

fn main() {
    let d = Arc::new(RootDatum::parse("A1").unwrap());
    let reg = LabelRegistry::standard(&d).unwrap();
    let x2 = RibbonChoice::x_squared_inverse(&d);
    let c = RibbonChoice::standard(&d).unwrap();

    // I2 followed by a negative half-twist on each strand is a crossing
    let up = Interval::up("V");
    let via = Diagram::from_slices(
        BoundaryObject(vec![up.clone(), up.clone()]),
        vec![
            Generator::HalfTwist { at: 0, n: 2, positive: true },
            Generator::HalfTwist { at: 0, n: 1, positive: false },
            Generator::HalfTwist { at: 1, n: 1, positive: false },
        ],
    )
    .unwrap();
    let cross = Diagram::from_slices(
        BoundaryObject(vec![up.clone(), up]),
        vec![Generator::Crossing { at: 0, positive: true }],
    )
    .unwrap();
    let a = evaluate(&via, &x2, &reg).unwrap().operator.matrix;
    let b = evaluate(&cross, &x2, &reg).unwrap().operator.matrix;
    println!("crossing from half-twists: {}", a == b);

    for (name, n, word) in [
        ("unknot", 1, vec![]),
        ("hopf", 2, vec![(1, true); 2]),
        ("trefoil", 2, vec![(1, true); 3]),
    ] {
        let l = braid_closure(n, &word, "V").unwrap();
        println!(
            "{name}: X^-2 {}   C {}",
            link_invariant(&l, &x2, &reg, true).unwrap(),
            link_invariant(&l, &c, &reg, true).unwrap()
        );
    }
}
