//! One PASS/FAIL line per acceptance criterion. Each criterion runs the
//! library check and, where a value is known in closed form, compares
//! against a literal computed here without the library's helpers.

use std::sync::Arc;
use std::time::{Duration, Instant};

use halfrib::dsl::{emit, parse_link, Format, InvariantReport};
use halfrib::halftwist::{braiding, fs_indicator, half_twist, ribbon_scalar, RibbonChoice};
use halfrib::qmodule::fundamental;
use halfrib::root_data::{RootDatum, Weight};
use halfrib::skein::kauffman_bracket_with;
use halfrib::suite::{self, Check};
use halfrib::tangle::{braid_closure, link_invariant, LabelRegistry};
use halfrib::{Coefficient, LaurentPoly, Scalar};

/// `c·v^e` at `L = 4` built from raw coefficients, bypassing `q_power`.
fn mono(c: i64, e: i64) -> Scalar {
    Scalar::from_fraction(
        LaurentPoly::from_terms(4, [(e, Coefficient::from_int(c))]),
        LaurentPoly::one(4),
    )
    .unwrap()
}

fn sum(terms: &[(i64, i64)]) -> Scalar {
    terms.iter().map(|&(c, e)| mono(c, e)).sum()
}

fn a1() -> Arc<RootDatum> {
    Arc::new(RootDatum::build('A', 1).unwrap())
}

/// Oracle results appended to the library check as extra items.
fn with_oracles(mut c: Check, extra: Vec<(&str, bool)>) -> Check {
    for (name, ok) in extra {
        c.items.push(halfrib::suite::Item {
            name: format!("oracle: {name}"),
            passed: ok,
        });
    }
    c
}

fn oracle_2() -> Vec<(&'static str, bool)> {
    // v = q^{1/4}
    let d = a1();
    let v = fundamental(&d, 0).unwrap();
    let r = braiding(&v, &v).unwrap().r;
    let off = sum(&[(1, 2), (-1, -6)]);
    vec![
        ("R diagonal q^(1/2), q^(-1/2), q^(-1/2), q^(1/2)",
            r.get(0, 0) == mono(1, 2) && r.get(1, 1) == mono(1, -2) && r.get(2, 2) == mono(1, -2) && r.get(3, 3) == mono(1, 2)),
        ("R off-diagonal v^2 - v^-6", r.get(1, 2) == off),
    ]
}

fn oracle_1() -> Vec<(&'static str, bool)> {
    // X on the sl2 standard module: lowest ↦ q^{3/4}·highest, highest ↦ -q^{3/4}·lowest
    let d = a1();
    let v = fundamental(&d, 0).unwrap();
    let x = half_twist(&v);
    vec![("X on sl2 V", x.get(0, 1) == mono(1, 3) && x.get(1, 0) == mono(-1, 3) && x.nnz() == 2)]
}

fn oracle_5() -> Vec<(&'static str, bool)> {
    // sl2 V_n is symplectic for odd n, orthogonal for even n; C carries that
    // sign and X^-2 does not
    let d = a1();
    let c = RibbonChoice::standard(&d).unwrap();
    let x2 = RibbonChoice::x_squared_inverse(&d);
    let ok = (1..=4).all(|n| {
        let m = halfrib::qmodule::irrep(&d, &Weight(vec![n])).unwrap();
        let sign = if n % 2 == 1 { -1 } else { 1 };
        fs_indicator(&c, &m) == sign && fs_indicator(&x2, &m) == 1
    });
    vec![("sl2 FS_C(V_n) = (-1)^n, FS_X^-2 = +1 for n <= 4", ok)]
}

fn oracle_6() -> Vec<(&'static str, bool)> {
    // C acts on V_ω as q^{-(ω,ω)-2(ω,ρ)}; for sl2 that is q^{-3/2}, the
    // twisted choice -q^{-3/2}
    let d = a1();
    let c = RibbonChoice::standard(&d).unwrap();
    let x2 = RibbonChoice::x_squared_inverse(&d);
    let w = Weight(vec![1]);
    vec![(
        "sl2 ribbon scalars on V",
        ribbon_scalar(&c, &d, &w) == mono(1, -6) && ribbon_scalar(&x2, &d, &w) == mono(-1, -6),
    )]
}

/// Literal values in `v = q^{1/4}`.
fn oracle_9() -> Vec<(&'static str, bool)> {
    let d = a1();
    let reg = LabelRegistry::standard(&d).unwrap();
    let x2 = RibbonChoice::x_squared_inverse(&d);
    let delta = sum(&[(-1, 4), (-1, -4)]);
    let unknot = braid_closure(1, &[], "V").unwrap();
    let hopf = braid_closure(2, &[(1, true), (1, true)], "V").unwrap();
    let hopf_val = link_invariant(&hopf, &x2, &reg, true).unwrap();
    vec![
        ("unknot = -v^4 - v^-4", link_invariant(&unknot, &x2, &reg, false).unwrap() == delta),
        ("unlink of two = delta^2", link_invariant(&braid_closure(2, &[], "V").unwrap(), &x2, &reg, true).unwrap() == &delta * &delta),
        ("hopf differs from the unlink", hopf_val != &delta * &delta),
    ]
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut x = x;
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

fn union(p: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(p, a), find(p, b));
    p[ra] = rb;
}

/// Closed 2- and 3-braids resolved state by state with an explicit
/// permutation-cycle loop count, independent of the planar-diagram code.
fn brute_bracket(n: usize, word: &[(usize, bool)], a: &Scalar) -> Scalar {
    let delta = -&(&a.pow(2) + &a.pow(-2));
    let mut total = Scalar::zero();
    for mask in 0..(1u32 << word.len()) {
        // strands 0..n on each level, plus the closure arcs; union-find over
        // (level, position) endpoints
        let levels = word.len() + 1;
        let mut parent: Vec<usize> = (0..levels * n).collect();
        let id = |lvl: usize, pos: usize| lvl * n + pos;
        let mut coeff = Scalar::one();
        for (k, &(i, positive)) in word.iter().enumerate() {
            let i = i - 1;
            // A-smoothing of a positive crossing is vertical (identity), of a
            // negative crossing horizontal
            let a_smoothing = mask & (1 << k) == 0;
            coeff = &coeff * &if a_smoothing { a.clone() } else { a.pow(-1) };
            let vertical = a_smoothing == positive;
            for p in 0..n {
                if p != i && p != i + 1 {
                    union(&mut parent, id(k, p), id(k + 1, p));
                }
            }
            if vertical {
                union(&mut parent, id(k, i), id(k + 1, i));
                union(&mut parent, id(k, i + 1), id(k + 1, i + 1));
            } else {
                union(&mut parent, id(k, i), id(k, i + 1));
                union(&mut parent, id(k + 1, i), id(k + 1, i + 1));
            }
        }
        for p in 0..n {
            union(&mut parent, id(0, p), id(word.len(), p));
        }
        let mut roots: Vec<usize> = (0..levels * n).map(|x| find(&mut parent, x)).collect();
        roots.sort_unstable();
        roots.dedup();
        total = &total + &(&coeff * &delta.pow(roots.len() as i64 - 1));
    }
    total
}

fn oracle_10() -> Vec<(&'static str, bool)> {
    let a = mono(1, 2);
    let mut out = Vec::new();
    for (name, n, word) in [
        ("trefoil bracket by brute force", 2usize, vec![(1usize, true); 3]),
        ("figure-8 bracket by brute force", 3, vec![(1, true), (2, false), (1, true), (2, false)]),
        ("hopf bracket by brute force", 2, vec![(1, true); 2]),
    ] {
        let d = braid_closure(n, &word, "V").unwrap();
        let delta = -&(&a.pow(2) + &a.pow(-2));
        // the library bracket counts the empty diagram as 1 and each loop as δ
        let lib = kauffman_bracket_with(&d, &a).unwrap();
        out.push((name, lib == &brute_bracket(n, &word, &a) * &delta));
    }
    out
}

fn report_bytes() -> String {
    let d = a1();
    let reg = LabelRegistry::standard(&d).unwrap();
    let c = RibbonChoice::standard(&d).unwrap();
    let mut s = String::new();
    for src in ["braid 1: ; close", "braid 2: s1 s1 ; close", "braid 2: s1 s1 s1 ; close"] {
        let diag = parse_link(src, None).unwrap();
        let r = InvariantReport::compute(src, "A1:1", &diag, &c, &reg, true).unwrap();
        s.push_str(&emit(&r, Format::Json));
        s.push_str(&emit(&r, Format::Text));
    }
    s
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let mut checks: Vec<Check> = Vec::new();
    for id in 1..suite::CRITERIA {
        let c = suite::criterion(id).unwrap();
        let extra = match id {
            1 => oracle_1(),
            2 => oracle_2(),
            5 => oracle_5(),
            6 => oracle_6(),
            9 => oracle_9(),
            10 => oracle_10(),
            _ => Vec::new(),
        };
        checks.push(with_oracles(c, extra));
    }
    let mut det = suite::determinism(suite::CRITERIA, &checks);
    det.items.push(halfrib::suite::Item {
        name: "oracle: emitted reports byte-identical".into(),
        passed: report_bytes() == report_bytes(),
    });
    det.items.push(halfrib::suite::Item {
        name: "oracle: acceptance run under 5 minutes".into(),
        passed: start.elapsed() < Duration::from_secs(300),
    });
    checks.push(det);

    for c in &checks {
        println!("{}", c.summary());
        for i in c.items.iter().filter(|i| !i.passed) {
            println!("    failed: {}", i.name);
        }
    }
    let failed: Vec<u8> = checks.iter().filter(|c| !c.passed()).map(|c| c.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
