//! Cartan data, longest words and the characters of P/Q.
use halfrib::root_data::{RootDatum, Weight};

fn main() {
    for name in ["A1", "A2", "A3", "D4"] {
        let d = RootDatum::parse(name).unwrap();
        println!("{}: rank {}, |P/Q| = {}, w0 = {:?}", d.name(), d.rank(), d.pq_order(), d.longest_word());
        println!("  positive roots: {}", d.positive_roots().len());
        let rho = d.rho();
        println!("  dim V(rho) = {}", d.weyl_dimension(rho));
        for ch in d.order2_characters() {
            println!("  order <= 2 character {ch}");
        }
    }
    let d = RootDatum::parse("A2").unwrap();
    let w = Weight(vec![2, 1]);
    println!("A2: w0{w} = {}, (w,w) = {}", d.w0(&w), d.form(&w, &w));
}
