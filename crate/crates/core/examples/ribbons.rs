//! Ribbon elements s(phi) X^-2, the standard one C, pivotal elements and
//! Frobenius-Schur indicators.
use std::sync::Arc;

use halfrib::halftwist::{classify_ribbons, fs_indicator, grouplike_g, RibbonChoice};
use halfrib::qmodule::{fundamental, irrep};
use halfrib::root_data::{RootDatum, Weight};

fn main() {
    for name in ["A1", "A2", "A3"] {
        let d = Arc::new(RootDatum::parse(name).unwrap());
        println!("{name}:");
        for c in classify_ribbons(&d).unwrap() {
            println!(
                "  {}  axioms {}  standard {}  half-ribbon {}",
                c.choice,
                c.axioms.all(),
                c.is_standard,
                c.half_ribbon
            );
        }
    }
    let d = Arc::new(RootDatum::parse("A1").unwrap());
    let v = fundamental(&d, 0).unwrap();
    let c = RibbonChoice::standard(&d).unwrap();
    let x2 = RibbonChoice::x_squared_inverse(&d);
    println!("pivotal g for C on V: {:?}", grouplike_g(&c, &v).entries().map(|e| e.2.to_string()).collect::<Vec<_>>());
    for n in 1..=4 {
        let m = irrep(&d, &Weight(vec![n])).unwrap();
        println!("V({n}): FS_C = {:+}, FS_X^-2 = {:+}", fs_indicator(&c, &m), fs_indicator(&x2, &m));
    }
}
