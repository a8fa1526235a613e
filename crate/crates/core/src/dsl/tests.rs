use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::halftwist::RibbonChoice;
use crate::root_data::RootDatum;
use crate::tangle::{BoundaryObject, LabelRegistry};

#[test]
fn cap_program() {
    let d = parse_tangle("object: V^ V_v\nslice: cap@0").unwrap();
    assert_eq!(d.source().width(), 2);
    assert!(d.target().is_empty());
    assert_eq!(d.slices(), &[Generator::Cap { at: 0 }]);
}

#[test]
fn half_twist_program() {
    let d = parse_tangle("object: V^ V^\nslice: h+(2)@0").unwrap();
    assert_eq!(
        d.slices(),
        &[Generator::HalfTwist {
            at: 0,
            n: 2,
            positive: true
        }]
    );
    assert_eq!(d.target().intervals()[0].shading, Shading::Dark);
}

#[test]
fn boundary_error_location() {
    let e = parse_tangle("object: V^ V_v\nslice: cap@5").unwrap_err();
    assert_eq!(e.line, 2);
    assert_eq!(e.col, 8);
    assert_eq!(e.kind, ParseErrorKind::Boundary);
}

#[test]
fn lexical_and_label_errors() {
    let e = parse_tangle("object: V^ V?").unwrap_err();
    assert_eq!((e.line, e.kind), (1, ParseErrorKind::Lexical));
    assert_eq!(e.col, 13);
    let known = vec!["V".to_string()];
    let e = parse_tangle_with("object: W^", Some(&known)).unwrap_err();
    assert_eq!((e.line, e.col, e.kind), (1, 9, ParseErrorKind::UnknownLabel));
    let e = parse_tangle("// header\n  bogus").unwrap_err();
    assert_eq!((e.line, e.col), (2, 3));
    let e = parse_tangle("slice: x*@0").unwrap_err();
    assert_eq!(e.col, 9);
}

#[test]
fn comments_and_extended_cups() {
    let src = "// unknot with a shaded loop\nslice: cup(V#_v V#^)@0 // dark\nslice: cap@0\n";
    let d = parse_tangle(src).unwrap();
    assert!(d.is_closed());
    assert_eq!(d.slices().len(), 2);
}

#[test]
fn braids() {
    let t = parse_braid("braid 2: s1 s1 s1 ; close", "V").unwrap();
    assert_eq!(t.writhe().unwrap(), 3);
    assert_eq!(t.components(), 1);
    let u = parse_braid("braid 2: ; close", "V").unwrap();
    assert_eq!(u.components(), 2);
    let z = parse_braid("braid 2: s1 s1^-1 ; close", "V").unwrap();
    assert_eq!(z.writhe().unwrap(), 0);
    let e = parse_braid("braid 2: s2 ; close", "V").unwrap_err();
    assert_eq!((e.col, e.kind), (10, ParseErrorKind::Boundary));
    assert!(parse_braid("braid 2: s1", "V").is_err());
    assert!(is_braid("// x\nbraid 1: ; close"));
}

fn report_for(src: &str) -> InvariantReport {
    let d = Arc::new(RootDatum::build('A', 1).unwrap());
    let reg = LabelRegistry::standard(&d).unwrap();
    let c = RibbonChoice::x_squared_inverse(&d);
    let diag = parse_link(src, None).unwrap();
    InvariantReport::compute(src, "A1:1", &diag, &c, &reg, true).unwrap()
}

#[test]
fn emitted_reports() {
    let r = report_for("braid 1: ; close");
    let text = emit(&r, Format::Text);
    assert!(text.contains("invariant: -q - q^-1\n"), "{text}");
    let json: serde_json::Value = serde_json::from_str(&emit(&r, Format::Json)).unwrap();
    let back = crate::scalar::Scalar::from_json(&json["invariant"]).unwrap();
    assert_eq!(back, r.normalized);
    let empty = report_for("");
    assert!(emit(&empty, Format::Text).contains("invariant: 1\n"));
    assert_eq!(emit(&r, Format::Json), emit(&report_for("braid 1: ; close"), Format::Json));
}

fn arb_interval() -> impl Strategy<Value = Interval> {
    (prop::sample::select(vec!["V", "W", "Ab2"]), any::<bool>(), any::<bool>()).prop_map(
        |(l, up, dark)| {
            let dir = if up { Direction::Up } else { Direction::Down };
            let sh = if dark { Shading::Dark } else { Shading::Light };
            Interval::new(l, dir, sh)
        },
    )
}

fn arb_diagram() -> impl Strategy<Value = Diagram> {
    (
        prop::collection::vec(arb_interval(), 0..4),
        prop::collection::vec((0u8..6, 0usize..6, 1usize..4, any::<bool>(), arb_interval()), 0..12),
    )
        .prop_map(|(start, ops)| {
            let mut d = Diagram::identity(BoundaryObject(start));
            for (kind, at, n, s, iv) in ops {
                let mut rev = iv.clone();
                rev.dir = rev.dir.reversed();
                let g = match kind {
                    0 => Generator::Identity,
                    1 => Generator::Cap { at },
                    2 => Generator::Cup { at, left: iv, right: rev },
                    3 => Generator::default_cup(at),
                    4 => Generator::Crossing { at, positive: s },
                    _ => Generator::HalfTwist { at, n, positive: s },
                };
                let _ = d.push(g);
            }
            d
        })
}

proptest! {
    #[test]
    fn print_parse_round_trip(d in arb_diagram()) {
        let text = print(&d);
        prop_assert_eq!(parse_tangle(&text).unwrap(), d);
    }

    #[test]
    fn arbitrary_bytes_never_panic(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let text = String::from_utf8_lossy(&bytes);
        let _ = parse_tangle(&text);
        let _ = parse_braid(&text, "V");
    }

    #[test]
    fn near_miss_programs_never_panic(
        words in prop::collection::vec(prop::sample::select(vec![
            "object:", "slice:", "V^", "V_v", "V#^", "cap@", "cup(", ")@", "h+(", "x-@",
            "99999999999999999999999", "0", "1", " ", "\n", "braid", "s1^-1", ";", "close", "//",
        ]), 0..30)
    ) {
        let text: String = words.concat();
        let _ = parse_tangle(&text);
        let _ = parse_braid(&text, "V");
    }
}
