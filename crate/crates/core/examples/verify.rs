//! The numbered verification checks, as run by `halfrib verify`.
fn main() {
    let checks = halfrib::suite::run_all();
    for c in &checks {
        print!("{}", c.render());
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    println!("{passed}/{} passed", checks.len());
}
