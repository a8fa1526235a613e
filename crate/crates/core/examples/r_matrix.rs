//! R = (X^-1 x X^-1) Delta(X) and the braiding it induces.
use std::sync::Arc;

use halfrib::halftwist::braiding;
use halfrib::linalg::Matrix;
use halfrib::qmodule::{commutes, fundamental};
use halfrib::root_data::RootDatum;

fn main() {
    let d = Arc::new(RootDatum::parse("A1").unwrap());
    let v = fundamental(&d, 0).unwrap();
    let b = braiding(&v, &v).unwrap();
    println!("R on V x V:");
    for (r, c, s) in b.r.entries() {
        println!("  R[{r},{c}] = {s}");
    }
    println!("sigma is an intertwiner: {}", commutes(&b.source, &b.target, &b.sigma));

    let d2 = Arc::new(RootDatum::parse("A2").unwrap());
    let v = fundamental(&d2, 0).unwrap();
    let s = braiding(&v, &v).unwrap().sigma;
    let id = Matrix::identity(3);
    let (s12, s23) = (s.kron(&id), id.kron(&s));
    println!("A2 Yang-Baxter: {}", s12.mul(&s23).mul(&s12) == s23.mul(&s12).mul(&s23));
}
