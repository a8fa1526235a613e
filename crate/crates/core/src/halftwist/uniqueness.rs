use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::linalg::Matrix;
use crate::qmodule::{irrep, tensor, Module, ModuleError};
use crate::root_data::{RootDatum, Weight};
use crate::scalar::Scalar;

use super::half_twist_inverse;

/// A Laurent polynomial in an extra formal variable `a` with scalar
/// coefficients. Enough structure to multiply matrices whose entries
/// involve `a`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentInA(BTreeMap<i64, Scalar>);

impl LaurentInA {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(s: Scalar) -> Self {
        Self::monomial(0, s)
    }

    pub fn monomial(exp: i64, s: Scalar) -> Self {
        let mut m = BTreeMap::new();
        if !s.is_zero() {
            m.insert(exp, s);
        }
        Self(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.0.iter().map(|(e, s)| (*e, s))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.0.clone();
        for (e, s) in &other.0 {
            let v = match out.get(e) {
                Some(x) => x + s,
                None => s.clone(),
            };
            if v.is_zero() {
                out.remove(e);
            } else {
                out.insert(*e, v);
            }
        }
        Self(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for (e1, s1) in &self.0 {
            for (e2, s2) in &other.0 {
                acc = acc.add(&Self::monomial(e1 + e2, s1 * s2));
            }
        }
        acc
    }

    /// Substitutes a concrete nonzero value for `a`.
    pub fn substitute(&self, a: &Scalar) -> Scalar {
        self.0
            .iter()
            .map(|(e, s)| s * &a.pow(*e))
            .fold(Scalar::zero(), |x, y| &x + &y)
    }
}

impl fmt::Display for LaurentInA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(e, s)| match e {
                0 => format!("({s})"),
                _ => format!("({s}) a^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

type AMatrix = Vec<Vec<LaurentInA>>;

fn lift(m: &Matrix) -> AMatrix {
    let mut out = vec![vec![LaurentInA::zero(); m.cols()]; m.rows()];
    for (r, c, s) in m.entries() {
        out[r][c] = LaurentInA::constant(s.clone());
    }
    out
}

fn amul(x: &AMatrix, y: &AMatrix) -> AMatrix {
    let n = x.len();
    let k = y.len();
    let m = y.first().map_or(0, Vec::len);
    let mut out = vec![vec![LaurentInA::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if x[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !y[l][j].is_zero() {
                    out[i][j] = out[i][j].add(&x[i][l].mul(&y[l][j]));
                }
            }
        }
    }
    out
}

/// `K_a`, acting on a weight vector of weight `μ` by `a^{μ}`.
fn k_formal(m: &Module, sign: i64) -> AMatrix {
    let n = m.dim();
    let mut out = vec![vec![LaurentInA::zero(); n]; n];
    for k in 0..n {
        out[k][k] = LaurentInA::monomial(sign * m.weight(k).0[0], Scalar::one());
    }
    out
}

fn k_sample(m: &Module, a: &Scalar) -> Matrix {
    m.weight_diagonal(|w| a.pow(w.0[0]))
}

#[derive(Clone, Debug, Default)]
pub struct UniquenessReport {
    /// `(label, holds)` for the formal variable on each `V_{nω}`.
    pub formal: Vec<(String, bool)>,
    /// `(sample, label, holds)` for each substituted value.
    pub samples: Vec<(String, String, bool)>,
    pub grouplike_formal: bool,
    pub grouplike_samples: bool,
    /// The scalars of `X⁻²` and of `C` on `V_ω`, which differ.
    pub x_inv_sq_on_v: Scalar,
    pub c_on_v: Scalar,
}

impl UniquenessReport {
    /// Every half-ribbon `X·K_a` squares to `X⁻²`, which is not `C`.
    pub fn no_half_ribbon_gives_c(&self) -> bool {
        self.formal.iter().all(|x| x.1)
            && self.samples.iter().all(|x| x.2)
            && self.grouplike_formal
            && self.grouplike_samples
            && self.x_inv_sq_on_v != self.c_on_v
    }
}

/// For sl2: `(X·K_a)⁻² = K_a⁻¹X⁻¹K_a⁻¹X⁻¹ = X⁻²` on `V_ω, V_{2ω}, V_{3ω}`,
/// both with `a` formal and with the given sample values substituted.
pub fn sl2_uniqueness_check(
    d: &Arc<RootDatum>,
    samples: &[Scalar],
) -> Result<UniquenessReport, ModuleError> {
    if d.letter() != 'A' || d.rank() != 1 {
        return Err(ModuleError::Unsupported(format!(
            "uniqueness check needs A1, got {}",
            d.name()
        )));
    }
    let mut report = UniquenessReport::default();
    for n in 1..=3 {
        let m = irrep(d, &Weight(vec![n]))?;
        let label = format!("V({n})");
        let xi = half_twist_inverse(&m);
        let target = lift(&xi.mul(xi));
        let ka_inv = k_formal(&m, -1);
        let step = amul(&ka_inv, &lift(xi));
        report.formal.push((label.clone(), amul(&step, &step) == target));
        let x_inv_sq = xi.mul(xi);
        for a in samples {
            let kinv = k_sample(&m, &a.pow(-1));
            let s = kinv.mul(xi);
            report
                .samples
                .push((a.to_string(), label.clone(), s.mul(&s) == x_inv_sq));
        }
    }
    let v = irrep(d, &Weight(vec![1]))?;
    let vv = tensor(&v, &v)?;
    let ka = k_formal(&v, 1);
    let mut kron = vec![vec![LaurentInA::zero(); vv.dim()]; vv.dim()];
    for i in 0..v.dim() {
        for j in 0..v.dim() {
            kron[i * v.dim() + j][i * v.dim() + j] = ka[i][i].mul(&ka[j][j]);
        }
    }
    report.grouplike_formal = k_formal(&vv, 1) == kron;
    report.grouplike_samples = samples
        .iter()
        .all(|a| k_sample(&vv, a) == k_sample(&v, a).kron(&k_sample(&v, a)));
    let xi = half_twist_inverse(&v);
    report.x_inv_sq_on_v = xi.mul(xi).get(0, 0);
    report.c_on_v = Scalar::q_power(-d.casimir_exponent(&Weight(vec![1])), d.root_order())
        .expect("exponent resolves");
    Ok(report)
}
