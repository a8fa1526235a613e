//! Finite-dimensional type-1 modules with exact generator matrices.
//!
//! Coproduct: `ΔE = E⊗K + 1⊗E`, `ΔF = F⊗1 + K⁻¹⊗F`, `ΔK = K⊗K`.
//! Antipode: `S(E) = -EK⁻¹`, `S(F) = -KF`, `S(K) = K⁻¹`.

mod build;
mod cache;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde_json::{json, Value};

use crate::linalg::{nullspace, Matrix};
use crate::root_data::{RootDatum, Weight};
use crate::scalar::Scalar;

pub use build::{fundamental, irrep, trivial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("weight {0} has the wrong rank")]
    BadRank(Weight),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("modules belong to different root data")]
    DatumMismatch,
    #[error("malformed module data: {0}")]
    Malformed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualSide {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleLabel {
    Trivial,
    Fundamental(usize),
    Irrep(Weight),
    Tensor(Box<ModuleLabel>, Box<ModuleLabel>),
    Dual(Box<ModuleLabel>, DualSide),
    /// The module pulled back along conjugation by the half-twist.
    Twisted(Box<ModuleLabel>),
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleLabel::Trivial => write!(f, "1"),
            ModuleLabel::Fundamental(k) => write!(f, "V_w{}", k + 1),
            ModuleLabel::Irrep(w) => write!(f, "V{w}"),
            ModuleLabel::Tensor(a, b) => write!(f, "({a} x {b})"),
            ModuleLabel::Dual(a, DualSide::Left) => write!(f, "{a}*"),
            ModuleLabel::Dual(a, DualSide::Right) => write!(f, "*{a}"),
            ModuleLabel::Twisted(a) => write!(f, "{a}#"),
        }
    }
}

/// Lazily computed operators attached to a module.
#[derive(Default)]
pub(crate) struct ModuleCache {
    pub(crate) x: OnceLock<Matrix>,
    pub(crate) x_inv: OnceLock<Matrix>,
    pub(crate) left_dual: OnceLock<Arc<Module>>,
    pub(crate) right_dual: OnceLock<Arc<Module>>,
    pub(crate) twisted: OnceLock<Arc<Module>>,
}

pub struct Module {
    datum: Arc<RootDatum>,
    weights: Vec<Weight>,
    ordinals: Vec<usize>,
    e: Vec<Matrix>,
    f: Vec<Matrix>,
    label: ModuleLabel,
    pub(crate) cache: ModuleCache,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Module")
            .field("label", &self.label)
            .field("dim", &self.dim())
            .finish()
    }
}

/// Structural equality: same datum, basis weights and generator matrices.
impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.weights == other.weights
            && self.e == other.e
            && self.f == other.f
            && *self.datum == *other.datum
    }
}

impl Module {
    pub fn new(
        datum: Arc<RootDatum>,
        weights: Vec<Weight>,
        e: Vec<Matrix>,
        f: Vec<Matrix>,
        label: ModuleLabel,
    ) -> Arc<Self> {
        let mut seen: HashMap<&Weight, usize> = HashMap::new();
        let ordinals = weights
            .iter()
            .map(|w| {
                let c = seen.entry(w).or_insert(0);
                *c += 1;
                *c - 1
            })
            .collect();
        Arc::new(Self {
            datum,
            weights,
            ordinals,
            e,
            f,
            label,
            cache: ModuleCache::default(),
        })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, k: usize) -> &Weight {
        &self.weights[k]
    }

    /// Position of basis vector `k` within its weight space.
    pub fn ordinal(&self, k: usize) -> usize {
        self.ordinals[k]
    }

    pub fn label(&self) -> &ModuleLabel {
        &self.label
    }

    pub fn e(&self, i: usize) -> &Matrix {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &Matrix {
        &self.f[i]
    }

    pub fn relabeled(&self, label: ModuleLabel) -> Arc<Module> {
        Module::new(
            self.datum.clone(),
            self.weights.clone(),
            self.e.clone(),
            self.f.clone(),
            label,
        )
    }

    /// `K_i^power` as a diagonal matrix.
    pub fn k(&self, i: usize, power: i64) -> Matrix {
        Matrix::diagonal(
            self.weights
                .iter()
                .map(|w| Scalar::q_int(power * self.datum.k_exponent(i, w))),
        )
    }

    /// Diagonal operator `q^{f(wt)}` for a rational exponent function.
    pub fn weight_diagonal(&self, f: impl Fn(&Weight) -> Scalar) -> Matrix {
        Matrix::diagonal(self.weights.iter().map(f))
    }

    /// Indices grouped by weight, in order of first appearance.
    pub fn weight_spaces(&self) -> Vec<(Weight, Vec<usize>)> {
        let mut order: Vec<(Weight, Vec<usize>)> = Vec::new();
        let mut pos: HashMap<&Weight, usize> = HashMap::new();
        for (k, w) in self.weights.iter().enumerate() {
            match pos.get(w) {
                Some(&p) => order[p].1.push(k),
                None => {
                    pos.insert(w, order.len());
                    order.push((w.clone(), vec![k]));
                }
            }
        }
        order
    }

    pub fn is_trivial(&self) -> bool {
        self.dim() == 1 && self.weights[0].is_zero()
    }

    /// Checks weight behavior, the `[E_i, F_j]` relations and the quantum
    /// Serre relations as exact matrix identities.
    pub fn check_relations(&self) -> Result<(), String> {
        let d = &self.datum;
        let r = d.rank();
        for i in 0..r {
            let alpha = d.simple_root(i);
            for (row, col, _) in self.e[i].entries() {
                if self.weights[row] != &self.weights[col] + &alpha {
                    return Err(format!("E_{} breaks weights at ({row},{col})", i + 1));
                }
            }
            for (row, col, _) in self.f[i].entries() {
                if self.weights[row] != &self.weights[col] - &alpha {
                    return Err(format!("F_{} breaks weights at ({row},{col})", i + 1));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                let comm = self.e[i].mul(&self.f[j]).sub(&self.f[j].mul(&self.e[i]));
                let expected = if i == j {
                    let qi = Scalar::q_int(d.d(i));
                    let denom = &qi - &qi.pow(-1);
                    self.k(i, 1).sub(&self.k(i, -1)).scale(&denom.pow(-1))
                } else {
                    Matrix::zeros(self.dim(), self.dim())
                };
                if comm != expected {
                    return Err(format!("[E_{}, F_{}] relation fails", i + 1, j + 1));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let n = 1 - d.cartan()[i][j];
                for (gens, name) in [(&self.e, "E"), (&self.f, "F")] {
                    let mut acc = Matrix::zeros(self.dim(), self.dim());
                    for k in 0..=n {
                        let coeff = q_binomial(n, k, d.d(i));
                        let coeff = if k % 2 == 1 { -coeff } else { coeff };
                        let term = gens[i]
                            .pow((n - k) as u32)
                            .mul(&gens[j])
                            .mul(&gens[i].pow(k as u32));
                        acc = acc.add(&term.scale(&coeff));
                    }
                    if !acc.is_zero() {
                        return Err(format!("Serre relation for {name}_{}, {name}_{}", i + 1, j + 1));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mat = |m: &Matrix| -> Value {
            Value::Array(
                m.entries()
                    .map(|(r, c, s)| json!([r, c, s.to_json()]))
                    .collect(),
            )
        };
        json!({
            "type": self.datum.name(),
            "label": self.label.to_string(),
            "dim": self.dim(),
            "basis": self.weights.iter().zip(&self.ordinals)
                .map(|(w, o)| json!({"weight": w.coords(), "ordinal": o}))
                .collect::<Vec<_>>(),
            "E": self.e.iter().map(mat).collect::<Vec<_>>(),
            "F": self.f.iter().map(mat).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(
        datum: Arc<RootDatum>,
        label: ModuleLabel,
        v: &Value,
    ) -> Result<Arc<Module>, ModuleError> {
        let bad = |m: &str| ModuleError::Malformed(m.to_string());
        if v["type"].as_str() != Some(datum.name().as_str()) {
            return Err(bad("type mismatch"));
        }
        let basis = v["basis"].as_array().ok_or_else(|| bad("basis"))?;
        let weights: Vec<Weight> = basis
            .iter()
            .map(|b| {
                b["weight"]
                    .as_array()
                    .and_then(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                    .map(Weight)
                    .ok_or_else(|| bad("weight"))
            })
            .collect::<Result<_, _>>()?;
        let dim = weights.len();
        let mats = |key: &str| -> Result<Vec<Matrix>, ModuleError> {
            let arr = v[key].as_array().ok_or_else(|| bad(key))?;
            if arr.len() != datum.rank() {
                return Err(bad("generator count"));
            }
            arr.iter()
                .map(|m| {
                    let mut out = Matrix::zeros(dim, dim);
                    for t in m.as_array().ok_or_else(|| bad("matrix"))? {
                        let r = t[0].as_u64().ok_or_else(|| bad("row"))? as usize;
                        let c = t[1].as_u64().ok_or_else(|| bad("col"))? as usize;
                        if r >= dim || c >= dim {
                            return Err(bad("index out of range"));
                        }
                        let s = Scalar::from_json(&t[2]).map_err(|e| bad(&e.to_string()))?;
                        out.set(r, c, s);
                    }
                    Ok(out)
                })
                .collect()
        };
        let e = mats("E")?;
        let f = mats("F")?;
        Ok(Module::new(datum, weights, e, f, label))
    }
}

/// Gaussian binomial `[n choose k]` in `q^d`.
fn q_binomial(n: i64, k: i64, d: i64) -> Scalar {
    &Scalar::quantum_factorial(n, d)
        / &(&Scalar::quantum_factorial(k, d) * &Scalar::quantum_factorial(n - k, d))
}

/// A vector in a specific module.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector {
    pub module: Arc<Module>,
    pub entries: Vec<Scalar>,
}

impl ModuleVector {
    pub fn basis(module: &Arc<Module>, k: usize) -> Self {
        let mut entries = vec![Scalar::zero(); module.dim()];
        entries[k] = Scalar::one();
        Self {
            module: module.clone(),
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, m: &Matrix) -> ModuleVector {
        ModuleVector {
            module: self.module.clone(),
            entries: m.apply(&self.entries),
        }
    }
}

/// A module map; [`Intertwiner::is_intertwiner`] checks equivariance.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    pub source: Arc<Module>,
    pub target: Arc<Module>,
    pub matrix: Matrix,
}

impl Intertwiner {
    pub fn is_intertwiner(&self) -> bool {
        commutes(&self.source, &self.target, &self.matrix)
    }
}

/// Whether `m: source → target` preserves weights and commutes with all `E_i`, `F_i`.
pub fn commutes(source: &Module, target: &Module, m: &Matrix) -> bool {
    if m.rows() != target.dim() || m.cols() != source.dim() {
        return false;
    }
    if m
        .entries()
        .any(|(r, c, _)| target.weight(r) != source.weight(c))
    {
        return false;
    }
    (0..source.datum.rank()).all(|i| {
        target.e(i).mul(m) == m.mul(source.e(i)) && target.f(i).mul(m) == m.mul(source.f(i))
    })
}

pub fn tensor(m: &Arc<Module>, n: &Arc<Module>) -> Result<Arc<Module>, ModuleError> {
    if *m.datum != *n.datum {
        return Err(ModuleError::DatumMismatch);
    }
    let rank = m.datum.rank();
    let id_m = Matrix::identity(m.dim());
    let id_n = Matrix::identity(n.dim());
    let e = (0..rank)
        .map(|i| m.e(i).kron(&n.k(i, 1)).add(&id_m.kron(n.e(i))))
        .collect();
    let f = (0..rank)
        .map(|i| m.f(i).kron(&id_n).add(&m.k(i, -1).kron(n.f(i))))
        .collect();
    let weights = m
        .weights
        .iter()
        .flat_map(|a| n.weights.iter().map(move |b| a + b))
        .collect();
    Ok(Module::new(
        m.datum.clone(),
        weights,
        e,
        f,
        ModuleLabel::Tensor(Box::new(m.label.clone()), Box::new(n.label.clone())),
    ))
}

/// Left-nested tensor product `((M₁⊗M₂)⊗M₃)⊗…`.
pub fn tensor_all(mods: &[Arc<Module>]) -> Result<Arc<Module>, ModuleError> {
    let (first, rest) = mods
        .split_first()
        .ok_or_else(|| ModuleError::Unsupported("empty tensor product".into()))?;
    rest.iter().try_fold(first.clone(), |acc, m| tensor(&acc, m))
}

/// Left dual (`x·f = f∘S(x)`) or right dual (`x·f = f∘S⁻¹(x)`), on the dual basis.
pub fn dual(m: &Arc<Module>, side: DualSide) -> Arc<Module> {
    let slot = match side {
        DualSide::Left => &m.cache.left_dual,
        DualSide::Right => &m.cache.right_dual,
    };
    slot.get_or_init(|| {
        let rank = m.datum.rank();
        let minus = Scalar::from_int(-1);
        let (e, f): (Vec<Matrix>, Vec<Matrix>) = (0..rank)
            .map(|i| {
                let (se, sf) = match side {
                    DualSide::Left => (m.e(i).mul(&m.k(i, -1)), m.k(i, 1).mul(m.f(i))),
                    DualSide::Right => (m.k(i, -1).mul(m.e(i)), m.f(i).mul(&m.k(i, 1))),
                };
                (se.transpose().scale(&minus), sf.transpose().scale(&minus))
            })
            .unzip();
        let weights = m.weights.iter().map(|w| -w).collect();
        Module::new(
            m.datum.clone(),
            weights,
            e,
            f,
            ModuleLabel::Dual(Box::new(m.label.clone()), side),
        )
    })
    .clone()
}

/// Basis of the joint kernel of all `E_i`, grouped by weight.
pub fn singular_vectors(m: &Arc<Module>) -> Vec<(Weight, ModuleVector)> {
    let d = m.datum.clone();
    let mut out = Vec::new();
    let index: HashMap<Weight, Vec<usize>> = m.weight_spaces().into_iter().collect();
    for (w, cols) in m.weight_spaces() {
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..d.rank() {
            let up = &w + &d.simple_root(i);
            if let Some(targets) = index.get(&up) {
                for &t in targets {
                    rows.push(cols.iter().map(|&c| m.e(i).get(t, c)).collect());
                }
            }
        }
        for v in nullspace(&rows, cols.len()) {
            let mut entries = vec![Scalar::zero(); m.dim()];
            for (&c, s) in cols.iter().zip(v) {
                entries[c] = s;
            }
            out.push((
                w.clone(),
                ModuleVector {
                    module: m.clone(),
                    entries,
                },
            ));
        }
    }
    out
}

/// Basis of `Hom(M, N)` as module maps.
pub fn hom_space(m: &Arc<Module>, n: &Arc<Module>) -> Result<Vec<Intertwiner>, ModuleError> {
    if *m.datum != *n.datum {
        return Err(ModuleError::DatumMismatch);
    }
    let d = m.datum.clone();
    // unknowns: Φ[r][c] with wt(r) = wt(c)
    let mut unknown: HashMap<(usize, usize), usize> = HashMap::new();
    let mut cells = Vec::new();
    let n_spaces: HashMap<Weight, Vec<usize>> = n.weight_spaces().into_iter().collect();
    for c in 0..m.dim() {
        if let Some(rows) = n_spaces.get(m.weight(c)) {
            for &r in rows {
                unknown.insert((r, c), cells.len());
                cells.push((r, c));
            }
        }
    }
    let nvars = cells.len();
    if nvars == 0 {
        return Ok(Vec::new());
    }
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..d.rank() {
        for (gn, gm) in [(n.e(i), m.e(i)), (n.f(i), m.f(i))] {
            // (gN Φ - Φ gM)[r][c] = 0
            let mut rows: HashMap<(usize, usize), Vec<(usize, Scalar)>> = HashMap::new();
            for (r, k, s) in gn.entries() {
                for c in 0..m.dim() {
                    if let Some(&x) = unknown.get(&(k, c)) {
                        rows.entry((r, c)).or_default().push((x, s.clone()));
                    }
                }
            }
            for (k, c, s) in gm.entries() {
                for r in 0..n.dim() {
                    if let Some(&x) = unknown.get(&(r, k)) {
                        rows.entry((r, c)).or_default().push((x, -s));
                    }
                }
            }
            let mut keys: Vec<_> = rows.keys().copied().collect();
            keys.sort();
            for key in keys {
                let mut row = vec![Scalar::zero(); nvars];
                for (x, s) in &rows[&key] {
                    row[*x] = &row[*x] + s;
                }
                if row.iter().any(|s| !s.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    Ok(nullspace(&eqs, nvars)
        .into_iter()
        .map(|sol| {
            let mut mat = Matrix::zeros(n.dim(), m.dim());
            for (&(r, c), s) in cells.iter().zip(sol) {
                mat.set(r, c, s);
            }
            Intertwiner {
                source: m.clone(),
                target: n.clone(),
                matrix: mat,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests;
