use super::*;

fn datum(r: usize) -> Arc<RootDatum> {
    Arc::new(RootDatum::build('A', r).unwrap())
}

fn q(n: i64) -> Scalar {
    Scalar::q_int(n)
}

#[test]
fn sl2_standard_action() {
    let d = datum(1);
    let v = fundamental(&d, 0).unwrap();
    assert_eq!(v.dim(), 2);
    // basis: v+ then v-
    assert_eq!(v.e(0).get(0, 1), Scalar::one());
    assert_eq!(v.f(0).get(1, 0), Scalar::one());
    assert_eq!(v.k(0, 1).get(0, 0), q(1));
    v.check_relations().unwrap();
}

#[test]
fn fundamental_dimensions() {
    assert_eq!(fundamental(&datum(2), 1).unwrap().dim(), 3);
    let a3 = fundamental(&datum(3), 1).unwrap();
    assert_eq!(a3.dim(), 6);
    a3.check_relations().unwrap();
}

#[test]
fn irrep_dimensions() {
    let a1 = datum(1);
    assert_eq!(irrep(&a1, &Weight(vec![2])).unwrap().dim(), 3);
    assert_eq!(irrep(&a1, &Weight(vec![1])).unwrap().dim(), 2);
    let adj = irrep(&datum(2), &Weight(vec![1, 1])).unwrap();
    assert_eq!(adj.dim(), 8);
    adj.check_relations().unwrap();
    assert!(matches!(
        irrep(&a1, &Weight(vec![-1])),
        Err(ModuleError::NotDominant(_))
    ));
}

#[test]
fn tensor_coproduct() {
    let d = datum(1);
    let v = fundamental(&d, 0).unwrap();
    let vv = tensor(&v, &v).unwrap();
    assert_eq!(vv.dim(), 4);
    let ws: Vec<i64> = vv.weights().iter().map(|w| w.0[0]).collect();
    assert_eq!(ws, vec![2, 0, 0, -2]);
    // E(v+ ⊗ v-) = v+ ⊗ v+
    let x = ModuleVector::basis(&vv, 1).apply(vv.e(0));
    assert_eq!(x.entries, ModuleVector::basis(&vv, 0).entries);
    // K acts grouplike
    assert_eq!(vv.k(0, 1), v.k(0, 1).kron(&v.k(0, 1)));
    vv.check_relations().unwrap();
}

#[test]
fn tensor_associativity() {
    let d = datum(2);
    let a = fundamental(&d, 0).unwrap();
    let b = fundamental(&d, 1).unwrap();
    let left = tensor(&tensor(&a, &b).unwrap(), &a).unwrap();
    let right = tensor(&a, &tensor(&b, &a).unwrap()).unwrap();
    // index a*9 + b*3 + c in both nestings
    assert_eq!(left.weights(), right.weights());
    for i in 0..2 {
        assert_eq!(left.e(i), right.e(i));
        assert_eq!(left.f(i), right.f(i));
    }
}

#[test]
fn left_dual_sl2() {
    let d = datum(1);
    let v = fundamental(&d, 0).unwrap();
    let vs = dual(&v, DualSide::Left);
    // f+ is index 0 with weight -ω; E f+ = -q f-
    assert_eq!(vs.e(0).get(1, 0), -q(1));
    vs.check_relations().unwrap();
    let t = trivial(&d);
    assert_eq!(*dual(&t, DualSide::Left), *t);
}

#[test]
fn double_dual_round_trip() {
    let d = datum(2);
    let v = irrep(&d, &Weight(vec![1, 1])).unwrap();
    let back = dual(&dual(&v, DualSide::Right), DualSide::Left);
    assert_eq!(*back, *v);
    let back = dual(&dual(&v, DualSide::Left), DualSide::Right);
    assert_eq!(*back, *v);
}

#[test]
fn singular_vectors_sl2_square() {
    let d = datum(1);
    let v = fundamental(&d, 0).unwrap();
    let vv = tensor(&v, &v).unwrap();
    let sing = singular_vectors(&vv);
    assert_eq!(sing.len(), 2);
    assert_eq!(sing[0].0, Weight(vec![2]));
    let (w, u) = &sing[1];
    assert_eq!(*w, Weight(vec![0]));
    // proportional to v+⊗v- - q^{-1} v-⊗v+
    let ratio = &u.entries[2] / &u.entries[1];
    assert_eq!(ratio, -q(-1));
}

#[test]
fn singular_vectors_a2_invariant() {
    let d = datum(2);
    let m = tensor(&fundamental(&d, 0).unwrap(), &fundamental(&d, 1).unwrap()).unwrap();
    let zero: Vec<_> = singular_vectors(&m)
        .into_iter()
        .filter(|(w, _)| w.is_zero())
        .collect();
    assert_eq!(zero.len(), 1);
}

#[test]
fn hom_spaces() {
    let a1 = datum(1);
    let v = fundamental(&a1, 0).unwrap();
    let homs = hom_space(&v, &v).unwrap();
    assert_eq!(homs.len(), 1);
    assert!(homs[0].is_intertwiner());
    let to_dual = hom_space(&v, &dual(&v, DualSide::Left)).unwrap();
    assert_eq!(to_dual.len(), 1);
    assert!(to_dual[0].is_intertwiner());
    let a2 = datum(2);
    let w = fundamental(&a2, 0).unwrap();
    assert!(hom_space(&w, &dual(&w, DualSide::Left)).unwrap().is_empty());
}

#[test]
fn json_round_trip() {
    let d = datum(2);
    let m = irrep(&d, &Weight(vec![1, 1])).unwrap();
    let back = Module::from_json(d.clone(), m.label().clone(), &m.to_json()).unwrap();
    assert_eq!(*back, *m);
}
