//! Quantum Weyl group operators, the half-twist `X = J·T_{w0}`, and
//! everything derived from it: braidings, ribbon elements, pivotal
//! elements and Frobenius-Schur indicators.

mod braiding;
mod ribbon;
mod uniqueness;

use std::collections::HashMap;
use std::sync::Arc;

use crate::linalg::{rank, Matrix};
use crate::qmodule::{singular_vectors, Module, ModuleLabel};
use crate::root_data::Weight;
use crate::scalar::Scalar;
use serde_json::{json, Value};

pub use braiding::{braiding, flip, Braiding};
pub use ribbon::{
    classify_ribbons, fs_indicator, grouplike_g, grouplike_g_from_x, ribbon_on, ribbon_scalar,
    drinfeld_u, drinfeld_u_from_x, verify_ribbon_axioms, AxiomReport, Candidate, ClassifiedRibbon,
    RibbonChoice, RibbonKind,
};
pub use uniqueness::{sl2_uniqueness_check, LaurentInA, UniquenessReport};

/// An exact operator between two modules.
#[derive(Clone, Debug)]
pub struct Operator {
    pub source: Arc<Module>,
    pub target: Arc<Module>,
    pub matrix: Matrix,
}

impl Operator {
    /// Whether every nonzero entry sends a vector of weight `μ` to weight `map(μ)`.
    pub fn respects_weights(&self, map: impl Fn(&Weight) -> Weight) -> bool {
        self.matrix
            .entries()
            .all(|(r, c, _)| *self.target.weight(r) == map(self.source.weight(c)))
    }

    /// Basis metadata for both sides and the nonzero entries as
    /// `[row, col, scalar]` in the exact scalar serialization.
    pub fn to_json(&self) -> Value {
        let basis = |m: &Module| -> Value {
            (0..m.dim())
                .map(|k| json!({"weight": m.weight(k).coords(), "ordinal": m.ordinal(k)}))
                .collect()
        };
        json!({
            "type": self.source.datum().name(),
            "source": {"module": self.source.label().to_string(), "basis": basis(&self.source)},
            "target": {"module": self.target.label().to_string(), "basis": basis(&self.target)},
            "rows": self.matrix.rows(),
            "cols": self.matrix.cols(),
            "entries": self.matrix.entries()
                .map(|(r, c, s)| json!([r, c, s.to_json()]))
                .collect::<Vec<_>>(),
        })
    }
}

/// Divided power `g^{(n)} v = gⁿ v / [n]_{q_i}!` applied to a vector.
fn divided_power(g: &Matrix, n: i64, d: i64, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = v.to_vec();
    for k in 1..=n {
        if out.iter().all(Scalar::is_zero) {
            return out;
        }
        out = g.apply(&out);
        let inv = Scalar::quantum_int(k, d).pow(-1);
        for x in out.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
    }
    out
}

/// `g^{(k)} v` from `g^{(k-1)} v`.
fn divided_step(g: &Matrix, k: i64, d: i64, v: &[Scalar]) -> Vec<Scalar> {
    let inv = Scalar::quantum_int(k, d).pow(-1);
    g.apply(v)
        .into_iter()
        .map(|x| if x.is_zero() { x } else { &x * &inv })
        .collect()
}

fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn add_scaled(acc: &mut [Scalar], v: &[Scalar], c: &Scalar) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(x * c);
        }
    }
}

/// The quantum Weyl group operator
/// `T_i v = Σ_{a-b+c = -⟨wt v, α_i^∨⟩} (-1)^b q_i^{b-ac} E_i^{(a)} F_i^{(b)} E_i^{(c)} v`.
pub fn braid_op(m: &Module, i: usize) -> Matrix {
    let d = m.datum();
    let di = d.d(i);
    let (e, f) = (m.e(i), m.f(i));
    let cols: Vec<Vec<Scalar>> = (0..m.dim())
        .map(|k| {
            let n = m.weight(k).0[i];
            let mut basis = vec![Scalar::zero(); m.dim()];
            basis[k] = Scalar::one();
            let mut acc = vec![Scalar::zero(); m.dim()];
            let mut ec = basis;
            let mut c = 0i64;
            while !is_zero_vec(&ec) {
                let mut fb = ec.clone();
                let mut b = 0i64;
                while !is_zero_vec(&fb) {
                    let a = b - c - n;
                    if a >= 0 {
                        let term = divided_power(e, a, di, &fb);
                        let sign = if b % 2 == 0 { 1 } else { -1 };
                        let coeff = &Scalar::from_int(sign) * &Scalar::q_int(di * (b - a * c));
                        add_scaled(&mut acc, &term, &coeff);
                    }
                    b += 1;
                    fb = divided_step(f, b, di, &fb);
                }
                c += 1;
                ec = divided_step(e, c, di, &ec);
            }
            acc
        })
        .collect();
    Matrix::from_columns(m.dim(), &cols)
}

/// `T_{w0} = T_{i_1} ⋯ T_{i_N}` for the datum's reduced word of `w0`.
pub fn t_w0(m: &Module) -> Matrix {
    m.datum()
        .longest_word()
        .iter()
        .fold(Matrix::identity(m.dim()), |acc, &i| acc.mul(&braid_op(m, i)))
}

/// `q^{(λ,λ)/2 + (λ,ρ)}` for a weight `λ`.
pub fn j_scalar(m: &Module, w: &Weight) -> Scalar {
    let d = m.datum();
    Scalar::q_power(d.j_exponent(w), d.root_order()).expect("root order resolves J")
}

/// The diagonal operator `J`.
pub fn j_operator(m: &Module) -> Matrix {
    m.weight_diagonal(|w| j_scalar(m, w))
}

/// `X = J·T_{w0}` computed directly from the braid operators.
pub fn half_twist_direct(m: &Module) -> Matrix {
    j_operator(m).mul(&t_w0(m))
}

/// `T_{w0} v` for a highest-weight vector, via the extremal-vector chain
/// `T_i z = (-1)^n q_i^n F_i^{(n)} z` (valid since `E_i z = 0` at each step).
pub fn t_w0_on_highest(m: &Module, v: &[Scalar], lambda: &Weight) -> Vec<Scalar> {
    let d = m.datum();
    let mut cur = v.to_vec();
    let mut mu = lambda.clone();
    for &i in d.longest_word().iter().rev() {
        let n = mu.0[i];
        assert!(n >= 0, "non-extremal step in the longest word chain");
        assert!(
            is_zero_vec(&m.e(i).apply(&cur)),
            "vector is not extremal for node {}",
            i + 1
        );
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let coeff = &Scalar::from_int(sign) * &Scalar::q_int(d.d(i) * n);
        cur = divided_power(m.f(i), n, d.d(i), &cur)
            .into_iter()
            .map(|x| &x * &coeff)
            .collect();
        mu = d.reflect(i, &mu);
    }
    cur
}

/// `X` computed summand by summand: on each singular vector `v_λ` from the
/// longest-word chain, then transported along `F`-words with
/// `X F_i = -E_{θ(i)} X`.
pub fn half_twist_decomposed(m: &Arc<Module>) -> Matrix {
    let d = m.datum().clone();
    let spaces: HashMap<Weight, Vec<usize>> = m.weight_spaces().into_iter().collect();
    let restrict =
        |v: &[Scalar], w: &Weight| -> Vec<Scalar> { spaces[w].iter().map(|&k| v[k].clone()).collect() };

    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    let mut images: Vec<Vec<Scalar>> = Vec::new();
    let mut weights: Vec<Weight> = Vec::new();
    let mut by_weight: HashMap<Weight, Vec<usize>> = HashMap::new();

    for (lambda, s) in singular_vectors(m) {
        let low = d.w0(&lambda);
        let j = j_scalar(m, &low);
        let xs: Vec<Scalar> = t_w0_on_highest(m, &s.entries, &lambda)
            .into_iter()
            .map(|x| &x * &j)
            .collect();
        let start = basis.len();
        by_weight.entry(lambda.clone()).or_default().push(start);
        basis.push(s.entries);
        images.push(xs);
        weights.push(lambda);
        let mut k = start;
        while k < basis.len() {
            for i in 0..d.rank() {
                let b = m.f(i).apply(&basis[k]);
                if is_zero_vec(&b) {
                    continue;
                }
                let w = &weights[k] - &d.simple_root(i);
                let members = by_weight.entry(w.clone()).or_default();
                let mut rows: Vec<Vec<Scalar>> =
                    members.iter().map(|&p| restrict(&basis[p], &w)).collect();
                rows.push(restrict(&b, &w));
                if rank(&rows) < rows.len() {
                    continue;
                }
                let xb: Vec<Scalar> = m
                    .e(d.theta(i))
                    .apply(&images[k])
                    .into_iter()
                    .map(|x| -x)
                    .collect();
                members.push(basis.len());
                basis.push(b);
                images.push(xb);
                weights.push(w);
            }
            k += 1;
        }
    }
    assert_eq!(basis.len(), m.dim(), "singular vectors do not generate the module");
    let b = Matrix::from_columns(m.dim(), &basis);
    let y = Matrix::from_columns(m.dim(), &images);
    y.mul(&b.inverse().expect("generated basis is invertible"))
}

/// `X` on `m`, cached. Tensor products go through the summand
/// decomposition; everything else through `J·T_{w0}`.
pub fn half_twist(m: &Arc<Module>) -> &Matrix {
    m.cache.x.get_or_init(|| match m.label() {
        ModuleLabel::Tensor(..) => half_twist_decomposed(m),
        _ => half_twist_direct(m),
    })
}

pub fn half_twist_inverse(m: &Arc<Module>) -> &Matrix {
    m.cache
        .x_inv
        .get_or_init(|| half_twist(m).inverse().expect("X is invertible"))
}

pub fn half_twist_operator(m: &Arc<Module>) -> Operator {
    Operator {
        source: m.clone(),
        target: m.clone(),
        matrix: half_twist(m).clone(),
    }
}

/// `V^{C_X}`: the same space with `x` acting as `X x X⁻¹`.
pub fn twisted(m: &Arc<Module>) -> Arc<Module> {
    m.cache
        .twisted
        .get_or_init(|| {
            let x = half_twist(m);
            let xi = half_twist_inverse(m);
            let d = m.datum().clone();
            let conj = |g: &Matrix| x.mul(g).mul(xi);
            let e = (0..d.rank()).map(|i| conj(m.e(i))).collect();
            let f = (0..d.rank()).map(|i| conj(m.f(i))).collect();
            let weights = m.weights().iter().map(|w| d.w0(w)).collect();
            Module::new(
                d,
                weights,
                e,
                f,
                ModuleLabel::Twisted(Box::new(m.label().clone())),
            )
        })
        .clone()
}

/// Outcome of checking the four parts of the half-twist lemma on one irrep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub lowest_to_highest: bool,
    pub highest_to_lowest: bool,
    pub square_central: bool,
    pub conjugation: bool,
}

impl LemmaReport {
    pub fn all(&self) -> bool {
        self.lowest_to_highest && self.highest_to_lowest && self.square_central && self.conjugation
    }
}

/// `(-1)^{⟨2λ,ρ∨⟩} q^{(λ,λ)+2(λ,ρ)}`, the scalar of `X²` on `V_λ`.
pub fn x_squared_scalar(d: &crate::root_data::RootDatum, lambda: &Weight) -> Scalar {
    let sign = if d.two_rho_check(lambda).rem_euclid(2) == 0 { 1 } else { -1 };
    &Scalar::from_int(sign)
        * &Scalar::q_power(d.casimir_exponent(lambda), d.root_order()).expect("exponent resolves")
}

/// Checks the half-twist lemma on an irreducible module whose basis vector
/// 0 is the highest-weight vector.
pub fn check_half_twist_lemma(m: &Arc<Module>, lambda: &Weight) -> LemmaReport {
    let d = m.datum().clone();
    let x = half_twist(m);
    let t = t_w0(m);
    let dim = m.dim();
    let mut top = vec![Scalar::zero(); dim];
    top[0] = Scalar::one();
    let j = j_scalar(m, lambda);
    let low_index = (0..dim)
        .find(|&k| *m.weight(k) == d.w0(lambda))
        .expect("lowest weight present");
    // v_low is defined by T_{w0} v_low = v_λ; the lowest space is a line
    let t_low = t.apply(&{
        let mut e = vec![Scalar::zero(); dim];
        e[low_index] = Scalar::one();
        e
    });
    let c = t_low[0].clone();
    let v_low: Vec<Scalar> = (0..dim)
        .map(|k| {
            if k == low_index {
                c.pow(-1)
            } else {
                Scalar::zero()
            }
        })
        .collect();
    let scaled = |v: &[Scalar], s: &Scalar| -> Vec<Scalar> { v.iter().map(|x| x * s).collect() };

    let lowest_to_highest = !c.is_zero() && x.apply(&v_low) == scaled(&top, &j);
    let sign = if d.two_rho_check(lambda).rem_euclid(2) == 0 { 1 } else { -1 };
    let highest_to_lowest = x.apply(&top) == scaled(&v_low, &(&Scalar::from_int(sign) * &j));
    let x2 = x.mul(x);
    let square_central = (0..d.rank()).all(|i| x2.commutes_with(m.e(i)) && x2.commutes_with(m.f(i)))
        && x2 == Matrix::identity(dim).scale(&x_squared_scalar(&d, lambda));
    LemmaReport {
        lowest_to_highest,
        highest_to_lowest,
        square_central,
        conjugation: check_conjugation(m),
    }
}

/// `X E_i X⁻¹ = -F_{θ(i)}`, `X F_i X⁻¹ = -E_{θ(i)}`, `X K_i X⁻¹ = K_{θ(i)}⁻¹`.
pub fn check_conjugation(m: &Arc<Module>) -> bool {
    let d = m.datum().clone();
    let x = half_twist(m);
    let xi = half_twist_inverse(m);
    let minus = Scalar::from_int(-1);
    (0..d.rank()).all(|i| {
        let th = d.theta(i);
        x.mul(m.e(i)).mul(xi) == m.f(th).scale(&minus)
            && x.mul(m.f(i)).mul(xi) == m.e(th).scale(&minus)
            && x.mul(&m.k(i, 1)).mul(xi) == m.k(th, -1)
    })
}

#[cfg(test)]
mod tests;
