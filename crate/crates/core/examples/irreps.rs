//! Highest-weight modules, tensor products and singular vectors.
use std::sync::Arc;

use halfrib::qmodule::{irrep, singular_vectors, tensor};
use halfrib::root_data::{RootDatum, Weight};

fn main() {
    let d = Arc::new(RootDatum::parse("A2").unwrap());
    let m = irrep(&d, &Weight(vec![1, 1])).unwrap();
    println!("{} has dimension {}", m.label(), m.dim());
    for (w, idx) in m.weight_spaces() {
        println!("  weight {w}: multiplicity {}", idx.len());
    }
    m.check_relations().unwrap();

    let v = irrep(&d, &Weight(vec![1, 0])).unwrap();
    let vv = tensor(&v, &v).unwrap();
    println!("{} decomposes with highest weights:", vv.label());
    for (w, _) in singular_vectors(&vv) {
        println!("  {w}");
    }
}
