//! The numbered verification checks run by `halfrib verify` and by the
//! acceptance tests. Every comparison is exact. A check never errors: a
//! failing computation becomes a failing item carrying the message.

use std::fmt::Display;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::dsl::{emit, parse_link, Format, InvariantReport};
use crate::halftwist::{
    braid_op, braiding, check_conjugation, check_half_twist_lemma, classify_ribbons, flip,
    fs_indicator, grouplike_g, half_twist, half_twist_direct, half_twist_inverse, ribbon_on,
    sl2_uniqueness_check, verify_ribbon_axioms, Candidate, RibbonChoice,
};
use crate::linalg::Matrix;
use crate::qmodule::{commutes, fundamental, irrep, tensor, tensor_all};
use crate::root_data::{RootDatum, Weight};
use crate::scalar::Scalar;
use crate::skein::differential_test;
use crate::tangle::{
    braid_closure, evaluate, link_invariant, rev_permutation, BoundaryObject, Diagram, Generator,
    Interval, LabelRegistry, Shading,
};

pub const CRITERIA: u8 = 11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: u8,
    pub title: &'static str,
    pub items: Vec<Item>,
    pub elapsed: Duration,
}

impl Check {
    pub fn passed(&self) -> bool {
        !self.items.is_empty() && self.items.iter().all(|i| i.passed)
    }

    /// `PASS  3 ribbon axioms`.
    pub fn summary(&self) -> String {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        format!("{tag} {:>2} {}", self.id, self.title)
    }

    /// The summary followed by one indented line per item; no timings.
    pub fn render(&self) -> String {
        let mut s = self.summary();
        s.push('\n');
        for i in &self.items {
            s.push_str(&format!("    [{}] {}\n", if i.passed { "ok" } else { "FAIL" }, i.name));
        }
        s
    }
}

struct Builder {
    items: Vec<Item>,
}

impl Builder {
    fn new() -> Self {
        Self { items: Vec::new() }
    }

    fn ok(&mut self, name: impl Into<String>, passed: bool) {
        self.items.push(Item {
            name: name.into(),
            passed,
        });
    }

    fn res<E: Display>(&mut self, name: impl Into<String>, r: Result<bool, E>) {
        match r {
            Ok(b) => self.ok(name, b),
            Err(e) => self.ok(format!("{} (error: {e})", name.into()), false),
        }
    }
}

fn timed(id: u8, title: &'static str, f: impl FnOnce(&mut Builder)) -> Check {
    let start = Instant::now();
    let mut b = Builder::new();
    f(&mut b);
    Check {
        id,
        title,
        items: b.items,
        elapsed: start.elapsed(),
    }
}

fn datum(rank: usize) -> Arc<RootDatum> {
    Arc::new(RootDatum::build('A', rank).expect("type A is always valid"))
}

/// A1 with `λ = ω … 6ω`, A2 with `λ₁+λ₂ ≤ 3`, A3 fundamentals.
pub fn calibration_families() -> Vec<(Arc<RootDatum>, Vec<Weight>)> {
    let a1 = (1..=6).map(|n| Weight(vec![n])).collect();
    let mut a2 = Vec::new();
    for total in 0..=3 {
        for a in (0..=total).rev() {
            a2.push(Weight(vec![a, total - a]));
        }
    }
    let a3 = (0..3).map(|k| Weight::fundamental(3, k)).collect();
    vec![(datum(1), a1), (datum(2), a2), (datum(3), a3)]
}

fn qp(n: i64, d: i64) -> Scalar {
    Scalar::q_power(num_rational::Ratio::new(n, d), 4).expect("quarter powers exist at L = 4")
}

fn lemma(id: u8) -> Check {
    timed(id, "half-twist lemma on calibration modules", |b| {
        let start = Instant::now();
        for (d, fam) in calibration_families() {
            for lam in fam {
                let name = format!("{} {}", d.name(), lam);
                match irrep(&d, &lam) {
                    Ok(m) => {
                        let r = check_half_twist_lemma(&m, &lam);
                        b.ok(format!("{name}: X lowest = highest"), r.lowest_to_highest);
                        b.ok(format!("{name}: X highest = lowest"), r.highest_to_lowest);
                        b.ok(format!("{name}: X^2 central scalar"), r.square_central);
                    }
                    Err(e) => b.ok(format!("{name} (error: {e})"), false),
                }
            }
        }
        b.ok("within 2 minutes", start.elapsed() < Duration::from_secs(120));
    })
}

fn yang_baxter(v: &Arc<crate::qmodule::Module>) -> Result<bool, crate::qmodule::ModuleError> {
    let s = braiding(v, v)?.sigma;
    let id = Matrix::identity(v.dim());
    let (s12, s23) = (s.kron(&id), id.kron(&s));
    Ok(s12.mul(&s23).mul(&s12) == s23.mul(&s12).mul(&s23))
}

fn r_matrix(id: u8) -> Check {
    timed(id, "R-matrix entries, intertwiner, Yang-Baxter", |b| {
        let start = Instant::now();
        let d1 = datum(1);
        let v = fundamental(&d1, 0).expect("standard module");
        match braiding(&v, &v) {
            Ok(br) => {
                let r = &br.r;
                let off = &qp(-1, 2) * &(&Scalar::q_int(1) - &Scalar::q_int(-1));
                b.ok("R(++,++) = q^(1/2)", r.get(0, 0) == qp(1, 2));
                b.ok("R(--,--) = q^(1/2)", r.get(3, 3) == qp(1, 2));
                b.ok("R(+-,+-) = q^(-1/2)", r.get(1, 1) == qp(-1, 2));
                b.ok("R(-+,-+) = q^(-1/2)", r.get(2, 2) == qp(-1, 2));
                b.ok("R(+-,-+) = q^(-1/2)(q - q^-1)", r.get(1, 2) == off);
                b.ok("no other entries", r.nnz() == 5);
                b.ok("A1 V x V intertwiner", commutes(&br.source, &br.target, &br.sigma));
            }
            Err(e) => b.ok(format!("A1 braiding (error: {e})"), false),
        }
        let d2 = datum(2);
        let a = fundamental(&d2, 0).expect("standard module");
        let a_bar = fundamental(&d2, 1).expect("dual standard module");
        for (name, m, n) in [("A2 V x V", &a, &a), ("A2 V x V*", &a, &a_bar)] {
            b.res(
                format!("{name} intertwiner"),
                braiding(m, n).map(|br| commutes(&br.source, &br.target, &br.sigma)),
            );
        }
        b.res("A1 Yang-Baxter on V^3", yang_baxter(&v));
        b.res("A2 Yang-Baxter on V^3", yang_baxter(&a));
        for r in [2usize, 3] {
            let d = datum(r);
            let v = fundamental(&d, 0).expect("standard module");
            let ok = (0..r - 1).all(|i| {
                let (x, y) = (braid_op(&v, i), braid_op(&v, i + 1));
                x.mul(&y).mul(&x) == y.mul(&x).mul(&y)
            });
            b.ok(format!("A{r} braid relations of T_i"), ok);
        }
        b.ok("within 1 minute", start.elapsed() < Duration::from_secs(60));
    })
}

fn ribbon_axioms(id: u8) -> Check {
    timed(id, "ribbon axioms and negative control", |b| {
        let d1 = datum(1);
        let w = |c: &[i64]| Weight(c.to_vec());
        let fam1 = [w(&[1]), w(&[2])];
        let pairs1 = vec![(w(&[1]), w(&[1])), (w(&[1]), w(&[2]))];
        let d2 = datum(2);
        let fam2 = [w(&[1, 0])];
        let pairs2 = vec![(w(&[1, 0]), w(&[1, 0]))];
        let mut cases: Vec<(String, Candidate, &Arc<RootDatum>, &[Weight], &[(Weight, Weight)])> =
            Vec::new();
        for d in [&d1, &d2] {
            let (fam, pairs): (&[Weight], &[(Weight, Weight)]) =
                if d.rank() == 1 { (&fam1, &pairs1) } else { (&fam2, &pairs2) };
            match RibbonChoice::standard(d) {
                Ok(c) => cases.push((format!("{} C", d.name()), Candidate::Choice(c), d, fam, pairs)),
                Err(e) => b.ok(format!("{} C (error: {e})", d.name()), false),
            }
            let x2 = RibbonChoice::x_squared_inverse(d);
            cases.push((format!("{} X^-2", d.name()), Candidate::Choice(x2), d, fam, pairs));
        }
        for (name, cand, d, fam, pairs) in cases {
            match verify_ribbon_axioms(&cand, d, fam, pairs) {
                Ok(rep) => {
                    for (axiom, ok) in rep.lines() {
                        b.ok(format!("{name}: {axiom}"), ok);
                    }
                }
                Err(e) => b.ok(format!("{name} (error: {e})"), false),
            }
        }
        b.res(
            "A1 X^-1 fails centrality",
            verify_ribbon_axioms(&Candidate::XInverse, &d1, &fam1[..1], &pairs1[..1]).map(|r| !r.central),
        );
    })
}

fn conjugation(id: u8) -> Check {
    timed(id, "conjugation by X on calibration modules", |b| {
        for (d, fam) in calibration_families() {
            for lam in fam {
                b.res(
                    format!("{} {}: X E X^-1 = -F, X F X^-1 = -E, X K X^-1 = K^-1", d.name(), lam),
                    irrep(&d, &lam).map(|m| check_conjugation(&m)),
                );
            }
        }
    })
}

fn frobenius_schur(id: u8) -> Check {
    timed(id, "Frobenius-Schur indicators", |b| {
        let d1 = datum(1);
        let v = fundamental(&d1, 0).expect("standard module");
        match RibbonChoice::standard(&d1) {
            Ok(c) => b.ok("A1 FS_C(V) = -1", fs_indicator(&c, &v) == -1),
            Err(e) => b.ok(format!("A1 C (error: {e})"), false),
        }
        b.ok(
            "A1 FS_X^-2(V) = +1",
            fs_indicator(&RibbonChoice::x_squared_inverse(&d1), &v) == 1,
        );
        for (d, fam) in calibration_families() {
            for lam in fam {
                if d.w0(&lam) != -&lam {
                    continue;
                }
                let m = match irrep(&d, &lam) {
                    Ok(m) => m,
                    Err(e) => {
                        b.ok(format!("{} {} (error: {e})", d.name(), lam), false);
                        continue;
                    }
                };
                for ch in d.order2_characters() {
                    let expect: i8 = if ch.value(&lam).is_one() { 1 } else { -1 };
                    let c = RibbonChoice::twisted(&d, ch.clone());
                    let got = fs_indicator(&c, &m);
                    let label = if ch.is_trivial() { "X^-2".to_string() } else { format!("s{ch} X^-2") };
                    b.ok(
                        format!("{} {}: FS_{label} = {expect:+}", d.name(), lam),
                        got == expect,
                    );
                }
            }
        }
    })
}

fn classification(id: u8) -> Check {
    timed(id, "ribbon classification and the sl4 witness", |b| {
        for (rank, expected) in [(1usize, 2usize), (2, 1), (3, 2)] {
            let d = datum(rank);
            let list = match classify_ribbons(&d) {
                Ok(l) => l,
                Err(e) => {
                    b.ok(format!("{} (error: {e})", d.name()), false);
                    continue;
                }
            };
            b.ok(format!("{}: {} ribbon elements", d.name(), expected), list.len() == expected);
            b.ok(
                format!("{}: every candidate satisfies the axioms", d.name()),
                list.iter().all(|c| c.axioms.all()),
            );
            let std: Vec<_> = list.iter().filter(|c| c.is_standard).collect();
            b.ok(format!("{}: exactly one is C", d.name()), std.len() == 1);
            let Some(s) = std.first() else { continue };
            match rank {
                1 => b.ok("A1: C is not X^-2 and has no half-ribbon root", !s.choice.character.is_trivial() && !s.half_ribbon),
                2 => b.ok("A2: C = X^-2", s.choice.character.is_trivial()),
                _ => {
                    b.ok("A3: C is the nontrivial twist of X^-2", !s.choice.character.is_trivial());
                    b.ok("A3: both ribbon elements are half-ribbon", list.iter().all(|c| c.half_ribbon));
                    let v = fundamental(&d, 0).expect("standard module");
                    let omega = Weight::fundamental(3, 0);
                    let witness = d.characters().into_iter().find(|psi| {
                        psi.value(&omega) == -Scalar::i() && psi.mul(psi) == s.choice.character
                    });
                    b.ok("A3: s acts by -i on V with s^2 the twist of C", witness.is_some());
                    if let Some(psi) = witness {
                        let t = v.weight_diagonal(|w| psi.value(w)).mul(half_twist(&v));
                        let t_inv_sq = t.mul(&t).inverse().expect("invertible");
                        b.ok("A3: (sX)^-2 = C on V", t_inv_sq == ribbon_on(&s.choice, &v));
                        let xi = half_twist_inverse(&v);
                        b.ok("A3: X^-2 differs from C on V", xi.mul(xi) != ribbon_on(&s.choice, &v));
                    }
                }
            }
        }
    })
}

fn uniqueness(id: u8) -> Check {
    timed(id, "sl2: no half-ribbon element gives C", |b| {
        let d = datum(1);
        let samples = [Scalar::one(), Scalar::q_int(1), Scalar::from_ratio(3, 7)];
        match sl2_uniqueness_check(&d, &samples) {
            Ok(rep) => {
                for (label, ok) in &rep.formal {
                    b.ok(format!("(X K_a)^-2 = X^-2 on {label}, a formal"), *ok);
                }
                b.ok(
                    "(X K_a)^-2 = X^-2 at sampled a",
                    !rep.samples.is_empty() && rep.samples.iter().all(|s| s.2),
                );
                b.ok("K_a grouplike, a formal", rep.grouplike_formal);
                b.ok("K_a grouplike at sampled a", rep.grouplike_samples);
                b.ok("X^-2 differs from C on V", rep.x_inv_sq_on_v != rep.c_on_v);
            }
            Err(e) => b.ok(format!("uniqueness (error: {e})"), false),
        }
    })
}

struct Coherence {
    reg: LabelRegistry,
    choice: RibbonChoice,
}

impl Coherence {
    fn eval(&self, src: &[Interval], gens: Vec<Generator>) -> Result<Matrix, String> {
        let d = Diagram::from_slices(BoundaryObject(src.to_vec()), gens).map_err(|e| e.to_string())?;
        evaluate(&d, &self.choice, &self.reg)
            .map(|r| r.operator.matrix)
            .map_err(|e| e.to_string())
    }
}

fn coherence(id: u8) -> Check {
    timed(id, "tangle functor coherence on the A1 standard module", |b| {
        let d = datum(1);
        let reg = match LabelRegistry::standard(&d) {
            Ok(r) => r,
            Err(e) => return b.ok(format!("registry (error: {e})"), false),
        };
        let x2 = RibbonChoice::x_squared_inverse(&d);
        let c = Coherence { reg, choice: x2.clone() };
        let v = fundamental(&d, 0).expect("standard module");
        let u = Interval::up("V");
        let dn = Interval::down("V");
        let (su, sd) = (u.clone().shaded(), dn.clone().shaded());
        let cup = |at, l: &Interval, r: &Interval| Generator::Cup { at, left: l.clone(), right: r.clone() };
        let cap = |at| Generator::Cap { at };
        let x = |at, positive| Generator::Crossing { at, positive };
        let h = |at, n, positive| Generator::HalfTwist { at, n, positive };
        let eq = |a: Result<Matrix, String>, b: Result<Matrix, String>| -> Result<bool, String> { Ok(a? == b?) };

        b.res(
            "crossing = (I1^-1 x I1^-1) I2",
            eq(
                c.eval(&[u.clone(), u.clone()], vec![h(0, 2, true), h(0, 1, false), h(1, 1, false)]),
                c.eval(&[u.clone(), u.clone()], vec![x(0, true)]),
            ),
        );
        for base in [&u, &dn, &su, &sd] {
            let mut rev = base.clone();
            rev.dir = rev.dir.reversed();
            for (side, gens) in [
                ("right", vec![cup(1, &rev, base), cap(0)]),
                ("left", vec![cup(0, base, &rev), cap(1)]),
            ] {
                b.res(
                    format!("zigzag {side} on {base}"),
                    c.eval(std::slice::from_ref(base), gens).map(|m| m.is_identity()),
                );
            }
        }
        for (p, q) in [(&u, &u), (&u, &dn), (&dn, &su)] {
            for first in [true, false] {
                b.res(
                    format!("R2 on {p} {q}, {} first", if first { "x+" } else { "x-" }),
                    c.eval(&[p.clone(), q.clone()], vec![x(0, first), x(0, !first)]).map(|m| m.is_identity()),
                );
            }
        }
        for src in [vec![u.clone(), u.clone(), u.clone()], vec![u.clone(), dn.clone(), u.clone()]] {
            let names: Vec<String> = src.iter().map(|i| i.to_string()).collect();
            b.res(
                format!("R3 on {}", names.join(" ")),
                eq(
                    c.eval(&src, vec![x(0, true), x(1, true), x(0, true)]),
                    c.eval(&src, vec![x(1, true), x(0, true), x(1, true)]),
                ),
            );
        }
        let twice = c.eval(std::slice::from_ref(&u), vec![h(0, 1, true), h(0, 1, true)]);
        let kink = c.eval(std::slice::from_ref(&u), vec![cup(1, &u, &dn), x(0, true), cap(1)]);
        let v_inv = ribbon_on(&x2, &v).inverse().expect("invertible");
        b.res("I1 I1 = positive kink", eq(twice.clone(), kink));
        b.res("I1 I1 = v^-1", twice.map(|m| m == v_inv));
        for n in [2usize, 3] {
            let mods = vec![v.clone(); n];
            let expect = tensor_all(&mods).map(|t| {
                let direct = half_twist_direct(&t);
                (rev_permutation(&vec![2; n]).mul(half_twist(&t)), direct == *half_twist(&t))
            });
            match expect {
                Ok((rev_x, routes_agree)) => {
                    b.ok(format!("X on V^{n}: decomposed = direct"), routes_agree);
                    b.res(
                        format!("F(I{n}) = rev X on V^{n}"),
                        c.eval(&vec![u.clone(); n], vec![h(0, n, true)]).map(|m| m == rev_x),
                    );
                }
                Err(e) => b.ok(format!("V^{n} (error: {e})"), false),
            }
        }
        let g = grouplike_g(&x2, &v);
        let gi = g.inverse().expect("invertible");
        let pairing = |m: &Matrix, diag: &Matrix| {
            m.nnz() == 2 && m.get(0, 0) == diag.get(0, 0) && m.get(0, 3) == diag.get(1, 1)
        };
        let copairing = |m: &Matrix, diag: &Matrix| {
            m.nnz() == 2 && m.get(0, 0) == diag.get(0, 0) && m.get(3, 0) == diag.get(1, 1)
        };
        let id2 = Matrix::identity(2);
        b.res(
            "shaded cap (up, down) = evaluation",
            c.eval(&[su.clone(), sd.clone()], vec![cap(0)]).map(|m| pairing(&m, &id2)),
        );
        b.res(
            "shaded cap (down, up) = f(gv)",
            c.eval(&[sd.clone(), su.clone()], vec![cap(0)]).map(|m| pairing(&m, &g)),
        );
        b.res(
            "shaded cup (up, down) = sum g^-1 v x v*",
            c.eval(&[], vec![cup(0, &su, &sd)]).map(|m| copairing(&m, &gi)),
        );
        b.res(
            "shaded cup (down, up) = coevaluation",
            c.eval(&[], vec![cup(0, &sd, &su)]).map(|m| copairing(&m, &id2)),
        );
        for (p, q) in [(&su, &sd), (&sd, &su)] {
            let light = |i: &Interval| {
                let mut i = i.clone();
                i.shading = Shading::Light;
                i
            };
            for first in [true, false] {
                b.res(
                    format!("shaded cap ({p}, {q}) = dressed light cap"),
                    eq(
                        c.eval(&[p.clone(), q.clone()], vec![cap(0)]),
                        c.eval(&[p.clone(), q.clone()], vec![h(0, 1, first), h(1, 1, !first), cap(0)]),
                    ),
                );
                b.res(
                    format!("shaded cup ({p}, {q}) = dressed light cup"),
                    eq(
                        c.eval(&[], vec![cup(0, p, q)]),
                        c.eval(&[], vec![cup(0, &light(p), &light(q)), h(0, 1, first), h(1, 1, !first)]),
                    ),
                );
            }
        }
        let vv = tensor(&v, &v).expect("same datum");
        b.ok("I2 = Flip X on V x V", {
            let m = c.eval(&[u.clone(), u.clone()], vec![h(0, 2, true)]);
            m.map(|m| m == flip(2, 2).mul(half_twist(&vv))).unwrap_or(false)
        });
    })
}

/// Unknot, Hopf link, trefoil and figure-8 as closed braids.
pub fn standard_links() -> Vec<(&'static str, Diagram)> {
    let l = |n, w: &[(usize, bool)]| braid_closure(n, w, "V").expect("valid braid");
    vec![
        ("unknot", l(1, &[])),
        ("hopf", l(2, &[(1, true), (1, true)])),
        ("trefoil", l(2, &[(1, true); 3])),
        ("figure-8", l(3, &[(1, true), (2, false), (1, true), (2, false)])),
    ]
}

fn kinked_unknots() -> Vec<(&'static str, Vec<Generator>)> {
    let (u, dn) = (Interval::up("V"), Interval::down("V"));
    let cup = |at| Generator::Cup { at, left: u.clone(), right: dn.clone() };
    let cap = |at| Generator::Cap { at };
    let h = |positive| Generator::HalfTwist { at: 0, n: 1, positive };
    vec![
        ("positive kink", vec![cup(0), cup(1), Generator::Crossing { at: 0, positive: true }, cap(1), cap(0)]),
        ("negative kink", vec![cup(0), cup(1), Generator::Crossing { at: 0, positive: false }, cap(1), cap(0)]),
        ("full twist", vec![cup(0), h(true), h(true), cap(0)]),
        ("inverse full twist", vec![cup(0), h(false), h(false), cap(0)]),
        ("half-twists cancelling", vec![cup(0), h(true), h(false), cap(0)]),
    ]
}

fn links(id: u8) -> Check {
    timed(id, "link invariants", |b| {
        let d = datum(1);
        let reg = match LabelRegistry::standard(&d) {
            Ok(r) => r,
            Err(e) => return b.ok(format!("registry (error: {e})"), false),
        };
        let x2 = RibbonChoice::x_squared_inverse(&d);
        let delta = -&(&Scalar::q_int(1) + &Scalar::q_int(-1));
        let links = standard_links();
        b.res(
            "unknot under X^-2 = -q - q^-1",
            link_invariant(&links[0].1, &x2, &reg, false).map(|s| s == delta),
        );
        for (name, gens) in kinked_unknots() {
            b.res(
                format!("{name}: normalized = unknot"),
                Diagram::from_slices(BoundaryObject::empty(), gens)
                    .and_then(|k| link_invariant(&k, &x2, &reg, true))
                    .map(|s| s == delta),
            );
        }
        let l = |n, w: &[(usize, bool)]| braid_closure(n, w, "V");
        for (name, stabilized) in [
            ("trefoil, positive stabilization", l(3, &[(1, true), (1, true), (1, true), (2, true)])),
            ("trefoil, negative stabilization", l(3, &[(1, true), (1, true), (1, true), (2, false)])),
        ] {
            b.res(
                format!("{name}: normalized invariant unchanged"),
                stabilized.and_then(|s| {
                    Ok(link_invariant(&s, &x2, &reg, true)? == link_invariant(&links[2].1, &x2, &reg, true)?)
                }),
            );
        }
        match RibbonChoice::standard(&d) {
            Ok(c) => {
                for (name, link) in &links {
                    let n = link.components();
                    let sign = Scalar::from_int(if n % 2 == 0 { 1 } else { -1 });
                    b.res(
                        format!("{name}: C / X^-2 = (-1)^{n}"),
                        link_invariant(link, &c, &reg, true)
                            .and_then(|a| Ok(&a / &link_invariant(link, &x2, &reg, true)? == sign)),
                    );
                }
            }
            Err(e) => b.ok(format!("C (error: {e})"), false),
        }
    })
}

fn differential(id: u8) -> Check {
    timed(id, "functor against the Kauffman bracket", |b| {
        let d = datum(1);
        let reg = match LabelRegistry::standard(&d) {
            Ok(r) => r,
            Err(e) => return b.ok(format!("registry (error: {e})"), false),
        };
        let held: Vec<(String, Diagram)> = standard_links()
            .into_iter()
            .skip(2)
            .map(|(n, l)| (n.to_string(), l))
            .collect();
        match differential_test(&reg, &held) {
            Ok(rep) => {
                b.ok(
                    format!(
                        "calibration keeps {} of {} conventions; using {}",
                        rep.survivors.len(),
                        rep.candidates,
                        rep.chosen
                    ),
                    !rep.survivors.is_empty(),
                );
                for row in rep.calibration.iter().chain(&rep.held_out) {
                    b.ok(format!("{}: functor = bracket", row.name), row.matches);
                }
                b.ok(
                    "chosen convention consistent after hold-out",
                    rep.consistent_after_holdout.contains(&rep.chosen),
                );
            }
            Err(e) => b.ok(format!("differential (error: {e})"), false),
        }
    })
}

/// Byte-identical reruns of a deterministic subset, and the elapsed total
/// of the preceding checks under five minutes.
pub fn determinism(id: u8, earlier: &[Check]) -> Check {
    timed(id, "determinism and total time", |b| {
        let render = || -> String {
            let mut s = r_matrix(0).render();
            s.push_str(&links(0).render());
            let d = datum(1);
            if let Ok(reg) = LabelRegistry::standard(&d) {
                let c = RibbonChoice::x_squared_inverse(&d);
                for src in ["braid 2: s1 s1 s1 ; close", "braid 3: s1 s2^-1 s1 s2^-1 ; close"] {
                    if let Ok(diag) = parse_link(src, None) {
                        if let Ok(r) = InvariantReport::compute(src, "A1:1", &diag, &c, &reg, true) {
                            s.push_str(&emit(&r, Format::Json));
                            s.push_str(&emit(&r, Format::Text));
                        }
                    }
                }
            }
            s
        };
        let first = render();
        b.ok("rerun output byte-identical", first == render());
        let total: Duration = earlier.iter().map(|c| c.elapsed).sum();
        b.ok("checks complete within 5 minutes", total < Duration::from_secs(300));
    })
}

/// Runs criterion `id` in `1..=10`; 11 needs the others, see [`run_all`].
pub fn criterion(id: u8) -> Option<Check> {
    Some(match id {
        1 => lemma(id),
        2 => r_matrix(id),
        3 => ribbon_axioms(id),
        4 => conjugation(id),
        5 => frobenius_schur(id),
        6 => classification(id),
        7 => uniqueness(id),
        8 => coherence(id),
        9 => links(id),
        10 => differential(id),
        _ => return None,
    })
}

pub fn run_all() -> Vec<Check> {
    let mut out: Vec<Check> = (1..CRITERIA).filter_map(criterion).collect();
    out.push(determinism(CRITERIA, &out));
    out
}

/// The startup self-test: the half-twist lemma on the 2- and
/// 3-dimensional sl2 modules.
pub fn startup_selftest() -> Result<(), String> {
    let d = datum(1);
    for n in [1, 2] {
        let lam = Weight(vec![n]);
        let m = irrep(&d, &lam).map_err(|e| e.to_string())?;
        let r = check_half_twist_lemma(&m, &lam);
        if !r.all() {
            return Err(format!("half-twist lemma fails on V({n}): {r:?}"));
        }
    }
    Ok(())
}
