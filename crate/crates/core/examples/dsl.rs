//! The tangle language, braid words and invariant reports.
use std::sync::Arc;

use halfrib::dsl::{emit, parse_link, parse_tangle, print, Format, InvariantReport};
use halfrib::halftwist::RibbonChoice;
use halfrib::root_data::RootDatum;
use halfrib::tangle::LabelRegistry;

fn main() {
    let program = "// a ribbon loop with a full twist\nobject:\nslice: cup@0\nslice: h+(1)@0\nslice: h+(1)@0\nslice: cap@0\n";
    let d = parse_tangle(program).unwrap();
    print!("{}", print(&d));

    match parse_tangle("object: V^ V_v\nslice: cap@5") {
        Err(e) => println!("error: {e}"),
        Ok(_) => unreachable!(),
    }

    let datum = Arc::new(RootDatum::parse("A1").unwrap());
    let reg = LabelRegistry::standard(&datum).unwrap();
    let choice = RibbonChoice::x_squared_inverse(&datum);
    for src in [program, "braid 2: s1 s1 s1 ; close"] {
        let diag = parse_link(src, None).unwrap();
        let r = InvariantReport::compute(src.lines().last().unwrap(), "A1:1", &diag, &choice, &reg, true).unwrap();
        print!("{}", emit(&r, Format::Text));
    }
}
