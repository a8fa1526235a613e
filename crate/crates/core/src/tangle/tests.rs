use std::sync::Arc;

use num_rational::Ratio;

use super::*;
use crate::halftwist::{braiding, half_twist, ribbon_on, twisted, RibbonChoice};
use crate::linalg::Matrix;
use crate::qmodule::{dual, fundamental, tensor, DualSide};
use crate::root_data::RootDatum;
use crate::scalar::Scalar;

struct Ctx {
    d: Arc<RootDatum>,
    reg: LabelRegistry,
    x2: RibbonChoice,
    c: RibbonChoice,
}

fn ctx() -> Ctx {
    let d = Arc::new(RootDatum::build('A', 1).unwrap());
    Ctx {
        reg: LabelRegistry::standard(&d).unwrap(),
        x2: RibbonChoice::x_squared_inverse(&d),
        c: RibbonChoice::standard(&d).unwrap(),
        d,
    }
}

fn obj(ivs: &[Interval]) -> BoundaryObject {
    BoundaryObject(ivs.to_vec())
}

fn diag(src: &[Interval], gens: Vec<Generator>) -> Diagram {
    Diagram::from_slices(obj(src), gens).unwrap()
}

impl Ctx {
    fn eval(&self, d: &Diagram) -> Matrix {
        evaluate(d, &self.x2, &self.reg).unwrap().operator.matrix
    }
}

fn u() -> Interval {
    Interval::up("V")
}
fn dn() -> Interval {
    Interval::down("V")
}
fn cup(at: usize, l: Interval, r: Interval) -> Generator {
    Generator::Cup { at, left: l, right: r }
}
fn cap(at: usize) -> Generator {
    Generator::Cap { at }
}
fn x(at: usize, positive: bool) -> Generator {
    Generator::Crossing { at, positive }
}
fn h(at: usize, n: usize, positive: bool) -> Generator {
    Generator::HalfTwist { at, n, positive }
}

fn qp(n: i64, d: i64) -> Scalar {
    Scalar::q_power(Ratio::new(n, d), 4).unwrap()
}

fn delta() -> Scalar {
    -&(&Scalar::q_int(1) + &Scalar::q_int(-1))
}

#[test]
fn boundary_bookkeeping() {
    let d = diag(&[u(), dn()], vec![cap(0)]);
    assert!(d.is_closed() || d.target().is_empty());
    let bad = Diagram::from_slices(obj(&[u(), u()]), vec![cap(0)]);
    assert!(matches!(bad, Err(TangleError::CapMismatch { .. })));
    let out = Diagram::from_slices(obj(&[u(), dn()]), vec![cap(5)]);
    assert!(matches!(out, Err(TangleError::OutOfRange { .. })));
    let t = diag(&[u(), u()], vec![h(0, 2, true)]);
    assert_eq!(t.target(), &obj(&[u().shaded(), u().shaded()]));
}

#[test]
fn compose_and_tensor() {
    let id = Diagram::identity(obj(&[u()]));
    assert_eq!(compose(&id, &id).unwrap(), id);
    let down = Diagram::identity(obj(&[dn()]));
    assert!(matches!(
        compose(&id, &down),
        Err(TangleError::BoundaryMismatch { index: 0, .. })
    ));
    let capd = diag(&[u(), dn()], vec![cap(0)]);
    assert_eq!(tensor_diag(&capd, &id).source().width(), 3);
    let two = tensor_diag(&id, &id);
    assert_eq!(two, Diagram::identity(obj(&[u(), u()])));
    let tref = braid_closure(2, &[(1, true); 3], "V").unwrap();
    let hopf = braid_closure(2, &[(1, true); 2], "V").unwrap();
    assert_eq!(tensor_diag(&tref, &hopf).writhe().unwrap(), 5);
}

#[test]
fn crossing_from_half_twists() {
    let c = ctx();
    let via = diag(&[u(), u()], vec![h(0, 2, true), h(0, 1, false), h(1, 1, false)]);
    assert_eq!(via.target(), &obj(&[u(), u()]));
    let cross = diag(&[u(), u()], vec![x(0, true)]);
    assert_eq!(c.eval(&via), c.eval(&cross));
}

#[test]
fn zigzags_all_kinds() {
    let c = ctx();
    for base in [u(), dn(), u().shaded(), dn().shaded()] {
        let mut rev = base.clone();
        rev.dir = rev.dir.reversed();
        let id = Matrix::identity(2);
        // cup on the right, cap on the left
        let z1 = diag(&[base.clone()], vec![cup(1, rev.clone(), base.clone()), cap(0)]);
        // cup on the left, cap on the right
        let z2 = diag(&[base.clone()], vec![cup(0, base.clone(), rev.clone()), cap(1)]);
        assert_eq!(c.eval(&z1), id, "{base}");
        assert_eq!(c.eval(&z2), id, "{base}");
    }
}

#[test]
fn reidemeister_two_and_three() {
    let c = ctx();
    for (a, b) in [(u(), u()), (u(), dn()), (dn(), u().shaded())] {
        let r2 = diag(&[a.clone(), b.clone()], vec![x(0, true), x(0, false)]);
        assert!(c.eval(&r2).is_identity());
        let r2b = diag(&[a.clone(), b.clone()], vec![x(0, false), x(0, true)]);
        assert!(c.eval(&r2b).is_identity());
    }
    for src in [vec![u(), u(), u()], vec![u(), dn(), u()]] {
        let l = diag(&src, vec![x(0, true), x(1, true), x(0, true)]);
        let r = diag(&src, vec![x(1, true), x(0, true), x(1, true)]);
        assert_eq!(c.eval(&l), c.eval(&r));
    }
}

#[test]
fn full_twist_is_inverse_ribbon() {
    let c = ctx();
    let v = fundamental(&c.d, 0).unwrap();
    let twice = diag(&[u()], vec![h(0, 1, true), h(0, 1, true)]);
    let m = c.eval(&twice);
    assert_eq!(m, ribbon_on(&c.x2, &v).inverse().unwrap());
    assert_eq!(m, Matrix::identity(2).scale(&-qp(3, 2)));
    // the positive kink agrees with the full twist
    let kink = diag(&[u()], vec![cup(1, u(), dn()), x(0, true), cap(1)]);
    assert_eq!(c.eval(&kink), m);
    assert_eq!(c.eval(&diag(&[u()], vec![h(0, 1, true)])), *half_twist(&v));
}

#[test]
fn half_twist_on_n_strands_via_slices() {
    let c = ctx();
    for n in [2usize, 3] {
        let src = vec![u(); n];
        let direct = diag(&src, vec![h(0, n, true)]);
        // I_n = (I_{n-1} ⊗ I_1) ∘ (first strand braided past the rest)
        let mut gens: Vec<Generator> = (0..n - 1).map(|k| x(k, true)).collect();
        gens.push(h(0, n - 1, true));
        gens.push(h(n - 1, 1, true));
        let sliced = diag(&src, gens);
        assert_eq!(direct.target(), sliced.target());
        assert_eq!(c.eval(&direct), c.eval(&sliced), "n = {n}");
    }
    // I_2 is Flip∘X on V⊗V
    let v = fundamental(&c.d, 0).unwrap();
    let vv = tensor(&v, &v).unwrap();
    let i2 = c.eval(&diag(&[u(), u()], vec![h(0, 2, true)]));
    assert_eq!(i2, crate::halftwist::flip(2, 2).mul(half_twist(&vv)));
}

#[test]
fn shaded_caps_and_cups() {
    let c = ctx();
    let v = fundamental(&c.d, 0).unwrap();
    let g = crate::halftwist::grouplike_g(&c.x2, &v);
    let gi = g.inverse().unwrap();
    let su = u().shaded();
    let sd = dn().shaded();
    // shaded cap (up, down): v⊗f ↦ f(v)
    let m = c.eval(&diag(&[su.clone(), sd.clone()], vec![cap(0)]));
    assert_eq!(m.get(0, 0), Scalar::one());
    assert_eq!(m.get(0, 3), Scalar::one());
    assert_eq!(m.nnz(), 2);
    // shaded cap (down, up): f⊗v ↦ f(gv)
    let m = c.eval(&diag(&[sd.clone(), su.clone()], vec![cap(0)]));
    assert_eq!(m.get(0, 0), g.get(0, 0));
    assert_eq!(m.get(0, 3), g.get(1, 1));
    // shaded cups
    let m = c.eval(&diag(&[], vec![cup(0, su.clone(), sd.clone())]));
    assert_eq!(m.get(0, 0), gi.get(0, 0));
    assert_eq!(m.get(3, 0), gi.get(1, 1));
    let m = c.eval(&diag(&[], vec![cup(0, sd.clone(), su.clone())]));
    assert!(m.get(0, 0).is_one() && m.get(3, 0).is_one());

    // each agrees with the light generator dressed by opposite half-twists
    for (a, b) in [(su.clone(), sd.clone()), (sd.clone(), su.clone())] {
        let direct = c.eval(&diag(&[a.clone(), b.clone()], vec![cap(0)]));
        for first_positive in [true, false] {
            let dressed = diag(
                &[a.clone(), b.clone()],
                vec![h(0, 1, first_positive), h(1, 1, !first_positive), cap(0)],
            );
            assert_eq!(c.eval(&dressed), direct);
        }
        let mut la = a.clone();
        la.shading = Shading::Light;
        let mut lb = b.clone();
        lb.shading = Shading::Light;
        let direct = c.eval(&diag(&[], vec![cup(0, a.clone(), b.clone())]));
        for first_positive in [true, false] {
            let dressed = diag(
                &[],
                vec![cup(0, la.clone(), lb.clone()), h(0, 1, first_positive), h(1, 1, !first_positive)],
            );
            assert_eq!(c.eval(&dressed), direct);
        }
    }
}

#[test]
fn twisted_module_carries_same_x() {
    let c = ctx();
    let v = fundamental(&c.d, 0).unwrap();
    let t = twisted(&v);
    assert_eq!(half_twist(&t), half_twist(&v));
    let vd = dual(&v, DualSide::Left);
    assert_eq!(half_twist(&twisted(&vd)), half_twist(&vd));
}

#[test]
fn braiding_natural_in_half_twist() {
    let c = ctx();
    let v = fundamental(&c.d, 0).unwrap();
    let t = twisted(&v);
    let x = half_twist(&v);
    let id = Matrix::identity(2);
    let lhs = x
        .kron(&id)
        .mul(&braiding(&v, &v).unwrap().sigma)
        .mul(&id.kron(&x.inverse().unwrap()));
    assert_eq!(lhs, braiding(&v, &t).unwrap().sigma);
}

#[test]
fn writhe_and_components() {
    let unknot = diag(&[], vec![cup(0, u(), dn()), cap(0)]);
    assert_eq!(unknot.writhe().unwrap(), 0);
    assert_eq!(unknot.components(), 1);
    let kinked = diag(&[], vec![cup(0, u(), dn()), cup(1, u(), dn()), x(0, true), cap(1), cap(0)]);
    assert_eq!(kinked.writhe().unwrap(), 1);
    assert_eq!(kinked.components(), 1);
    let tref = braid_closure(2, &[(1, true); 3], "V").unwrap();
    assert_eq!(tref.writhe().unwrap(), 3);
    assert_eq!(tref.components(), 1);
    let hopf = braid_closure(2, &[(1, true); 2], "V").unwrap();
    assert_eq!(hopf.components(), 2);
    assert_eq!(braid_closure(2, &[], "V").unwrap().components(), 2);
    assert!(matches!(
        Diagram::identity(obj(&[u()])).writhe(),
        Err(TangleError::NotClosed)
    ));
}

#[test]
fn unknot_and_kink_invariants() {
    let c = ctx();
    let unknot = diag(&[], vec![cup(0, u(), dn()), cap(0)]);
    assert_eq!(link_invariant(&unknot, &c.x2, &c.reg, false).unwrap(), delta());
    let kinked = diag(&[], vec![cup(0, u(), dn()), cup(1, u(), dn()), x(0, true), cap(1), cap(0)]);
    assert_eq!(link_invariant(&kinked, &c.x2, &c.reg, true).unwrap(), delta());
    let neg = diag(&[], vec![cup(0, u(), dn()), cup(1, u(), dn()), x(0, false), cap(1), cap(0)]);
    assert_eq!(neg.writhe().unwrap(), -1);
    assert_eq!(link_invariant(&neg, &c.x2, &c.reg, true).unwrap(), delta());
    // a closed ribbon carrying a full twist
    let twisted_loop = diag(&[], vec![cup(0, u(), dn()), h(0, 1, true), h(0, 1, true), cap(0)]);
    assert_eq!(twisted_loop.writhe().unwrap(), 1);
    assert_eq!(link_invariant(&twisted_loop, &c.x2, &c.reg, true).unwrap(), delta());
    assert_eq!(link_invariant(&unknot, &c.c, &c.reg, false).unwrap(), -delta());
    assert_eq!(link_invariant(&Diagram::empty(), &c.x2, &c.reg, true).unwrap(), Scalar::one());
}

#[test]
fn ratio_between_ribbons_counts_components() {
    let c = ctx();
    let links = [
        braid_closure(1, &[], "V").unwrap(),
        braid_closure(2, &[(1, true); 2], "V").unwrap(),
        braid_closure(2, &[(1, true); 3], "V").unwrap(),
        braid_closure(3, &[(1, true), (2, false), (1, true), (2, false)], "V").unwrap(),
    ];
    for l in &links {
        let a = link_invariant(l, &c.c, &c.reg, true).unwrap();
        let b = link_invariant(l, &c.x2, &c.reg, true).unwrap();
        let sign = if l.components() % 2 == 0 { 1 } else { -1 };
        assert_eq!(&a / &b, Scalar::from_int(sign));
    }
}

#[test]
fn half_twists_rejected_without_half_ribbon() {
    let c = ctx();
    let d = diag(&[u()], vec![h(0, 1, true), h(0, 1, false)]);
    assert!(matches!(evaluate(&d, &c.c, &c.reg), Err(TangleError::Unsupported(_))));
}

#[test]
fn sl4_standard_ribbon_from_twisted_half_twist() {
    let d = Arc::new(RootDatum::build('A', 3).unwrap());
    let reg = LabelRegistry::standard(&d).unwrap();
    let c = RibbonChoice::standard(&d).unwrap();
    assert!(!c.character.is_trivial());
    let v = fundamental(&d, 0).unwrap();
    let twice = diag(&[u()], vec![h(0, 1, true), h(0, 1, true)]);
    let m = evaluate(&twice, &c, &reg).unwrap().operator.matrix;
    assert_eq!(m, ribbon_on(&c, &v).inverse().unwrap());
    let via = diag(&[u(), u()], vec![h(0, 2, true), h(0, 1, false), h(1, 1, false)]);
    let cross = diag(&[u(), u()], vec![x(0, true)]);
    assert_eq!(
        evaluate(&via, &c, &reg).unwrap().operator.matrix,
        evaluate(&cross, &c, &reg).unwrap().operator.matrix
    );
    let su = u().shaded();
    let sd = dn().shaded();
    let z = diag(&[su.clone()], vec![cup(1, sd, su), cap(0)]);
    assert!(evaluate(&z, &c, &reg).unwrap().operator.matrix.is_identity());
}
