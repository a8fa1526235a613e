//! The half-twist X = J T_w0 and the lemma it satisfies.
use std::sync::Arc;

use halfrib::halftwist::{check_half_twist_lemma, half_twist, x_squared_scalar};
use halfrib::qmodule::irrep;
use halfrib::root_data::{RootDatum, Weight};

fn main() {
    let d = Arc::new(RootDatum::parse("A1").unwrap());
    let v = irrep(&d, &Weight(vec![1])).unwrap();
    println!("X on the sl2 standard module:");
    for (r, c, s) in half_twist(&v).entries() {
        println!("  X[{r},{c}] = {s}");
    }
    for (name, lam) in [("A1", vec![3]), ("A2", vec![1, 1]), ("A3", vec![0, 1, 0])] {
        let d = Arc::new(RootDatum::parse(name).unwrap());
        let w = Weight(lam);
        let m = irrep(&d, &w).unwrap();
        let rep = check_half_twist_lemma(&m, &w);
        println!("{name} V{w}: X^2 = {} on V, lemma holds: {}", x_squared_scalar(&d, &w), rep.all());
    }
}
