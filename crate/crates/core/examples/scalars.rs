//! Exact arithmetic in Q(i)(q^{1/L}).
use halfrib::Scalar;
use num_rational::Ratio;

fn main() {
    let q = Scalar::q_int(1);
    let qi = Scalar::q_int(-1);
    let delta = -&(&q + &qi);
    println!("delta = {delta}");

    // [3]_q = (q^3 - q^-3)/(q - q^-1) reduces to a Laurent polynomial
    let three = &(&Scalar::q_int(3) - &Scalar::q_int(-3)) / &(&q - &qi);
    println!("[3]_q = {three}");

    let half = Scalar::q_power(Ratio::new(1, 2), 4).unwrap();
    println!("q^(1/2) * q^(1/2) = {}", &half * &half);
    println!("1/(1 + q) = {}", &Scalar::one() / &(&Scalar::one() + &q));
    println!("i^2 = {}", &Scalar::i() * &Scalar::i());

    let j = three.to_json();
    println!("json: {j}");
    assert_eq!(Scalar::from_json(&j).unwrap(), three);
}
