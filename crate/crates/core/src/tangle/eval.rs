use std::collections::HashMap;
use std::sync::Arc;

use crate::halftwist::{
    braiding, grouplike_g, half_twist, ribbon_scalar, twisted, Operator, RibbonChoice,
};
use crate::linalg::Matrix;
use crate::qmodule::{dual, fundamental, tensor_all, trivial, DualSide, Module};
use crate::root_data::{Character, RootDatum, Weight};
use crate::scalar::Scalar;

use super::{BoundaryObject, Diagram, Direction, Generator, Interval, Shading, TangleError};

/// Resolves interval labels to modules over one root datum.
#[derive(Clone, Debug)]
pub struct LabelRegistry {
    datum: Arc<RootDatum>,
    modules: HashMap<String, (Weight, Arc<Module>)>,
}

impl LabelRegistry {
    pub fn new(datum: Arc<RootDatum>) -> Self {
        Self {
            datum,
            modules: HashMap::new(),
        }
    }

    /// `V` bound to the first fundamental module.
    pub fn standard(datum: &Arc<RootDatum>) -> Result<Self, TangleError> {
        let mut reg = Self::new(datum.clone());
        let v = fundamental(datum, 0)?;
        reg.insert("V", Weight::fundamental(datum.rank(), 0), v);
        Ok(reg)
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = self.modules.keys().cloned().collect();
        out.sort();
        out
    }

    pub fn insert(&mut self, label: &str, weight: Weight, m: Arc<Module>) {
        self.modules.insert(label.to_string(), (weight, m));
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn get(&self, label: &str) -> Result<&Arc<Module>, TangleError> {
        self.modules
            .get(label)
            .map(|x| &x.1)
            .ok_or_else(|| TangleError::UnknownLabel(label.to_string()))
    }

    pub fn weight(&self, label: &str) -> Result<&Weight, TangleError> {
        self.modules
            .get(label)
            .map(|x| &x.0)
            .ok_or_else(|| TangleError::UnknownLabel(label.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct EvaluationResult {
    pub operator: Operator,
    /// Set when the diagram is closed.
    pub scalar: Option<Scalar>,
    pub ribbon: RibbonChoice,
    pub writhe: Option<i64>,
}

struct Evaluator<'a> {
    reg: &'a LabelRegistry,
    choice: &'a RibbonChoice,
    /// `ψ` with the half-twist realised as `ψX`.
    root: Character,
    modules: HashMap<Interval, Arc<Module>>,
    pivotal: HashMap<String, (Matrix, Matrix)>,
    crossings: HashMap<(Interval, Interval, bool), Matrix>,
}

impl<'a> Evaluator<'a> {
    fn module(&mut self, iv: &Interval) -> Result<Arc<Module>, TangleError> {
        if let Some(m) = self.modules.get(iv) {
            return Ok(m.clone());
        }
        let base = self.reg.get(&iv.label)?;
        let m = match iv.dir {
            Direction::Up => base.clone(),
            Direction::Down => dual(base, DualSide::Left),
        };
        let m = match iv.shading {
            Shading::Light => m,
            Shading::Dark => twisted(&m),
        };
        self.modules.insert(iv.clone(), m.clone());
        Ok(m)
    }

    fn tensor_of(&mut self, ivs: &[Interval]) -> Result<Arc<Module>, TangleError> {
        if ivs.is_empty() {
            return Ok(trivial(self.reg.datum()));
        }
        let mods = ivs
            .iter()
            .map(|iv| self.module(iv))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(tensor_all(&mods)?)
    }

    /// `(g, g⁻¹)` on the label's own module.
    fn pivotal(&mut self, label: &str) -> Result<(Matrix, Matrix), TangleError> {
        if let Some(p) = self.pivotal.get(label) {
            return Ok(p.clone());
        }
        let base = self.reg.get(label)?.clone();
        let g = grouplike_g(self.choice, &base);
        let gi = g.inverse().expect("pivotal element is invertible");
        self.pivotal.insert(label.to_string(), (g.clone(), gi.clone()));
        Ok((g, gi))
    }

    fn crossing(&mut self, a: &Interval, b: &Interval, positive: bool) -> Result<Matrix, TangleError> {
        let key = (a.clone(), b.clone(), positive);
        if let Some(m) = self.crossings.get(&key) {
            return Ok(m.clone());
        }
        let (ma, mb) = (self.module(a)?, self.module(b)?);
        let m = if positive {
            braiding(&ma, &mb)?.sigma
        } else {
            braiding(&mb, &ma)?
                .sigma
                .inverse()
                .expect("braiding is invertible")
        };
        self.crossings.insert(key, m.clone());
        Ok(m)
    }

    /// `rev ∘ Δⁿ(X)` on the tensor product of the given intervals.
    fn rev_x(&mut self, ivs: &[Interval]) -> Result<Matrix, TangleError> {
        let mods = ivs
            .iter()
            .map(|iv| self.module(iv))
            .collect::<Result<Vec<_>, _>>()?;
        let total = tensor_all(&mods)?;
        let mut x = half_twist(&total).clone();
        if !self.root.is_trivial() {
            x = total.weight_diagonal(|w| self.root.value(w)).mul(&x);
        }
        Ok(rev_permutation(&mods.iter().map(|m| m.dim()).collect::<Vec<_>>()).mul(&x))
    }

    fn cap(&mut self, l: &Interval) -> Result<Matrix, TangleError> {
        let d = self.reg.get(&l.label)?.dim();
        let mut out = Matrix::zeros(1, d * d);
        let twisted_pairing = matches!(
            (l.shading, l.dir),
            (Shading::Light, Direction::Up) | (Shading::Dark, Direction::Down)
        );
        if twisted_pairing {
            let (g, _) = self.pivotal(&l.label)?;
            for (i, j, s) in g.entries() {
                // light v⊗f ↦ f(gv); dark f⊗v ↦ f(gv)
                let idx = if l.dir == Direction::Up { j * d + i } else { i * d + j };
                out.set(0, idx, s.clone());
            }
        } else {
            for i in 0..d {
                out.set(0, i * d + i, Scalar::one());
            }
        }
        Ok(out)
    }

    fn cup(&mut self, l: &Interval) -> Result<Matrix, TangleError> {
        let d = self.reg.get(&l.label)?.dim();
        let mut out = Matrix::zeros(d * d, 1);
        let twisted_copairing = matches!(
            (l.shading, l.dir),
            (Shading::Light, Direction::Down) | (Shading::Dark, Direction::Up)
        );
        if twisted_copairing {
            let (_, gi) = self.pivotal(&l.label)?;
            for (j, i, s) in gi.entries() {
                // light Σ eⁱ⊗g⁻¹eᵢ; dark Σ g⁻¹vᵢ⊗vⁱ
                let idx = if l.dir == Direction::Down { i * d + j } else { j * d + i };
                out.set(idx, 0, s.clone());
            }
        } else {
            for i in 0..d {
                out.set(i * d + i, 0, Scalar::one());
            }
        }
        Ok(out)
    }

    fn dims(&mut self, ivs: &[Interval]) -> Result<usize, TangleError> {
        let mut n = 1;
        for iv in ivs {
            n *= self.module(iv)?.dim();
        }
        Ok(n)
    }

    fn slice(&mut self, g: &Generator, obj: &BoundaryObject) -> Result<Matrix, TangleError> {
        let v = &obj.0;
        let (at, span) = match g {
            Generator::Identity => {
                let n = self.dims(v)?;
                return Ok(Matrix::identity(n));
            }
            Generator::Cap { at } => (*at, 2),
            Generator::Cup { at, .. } => (*at, 0),
            Generator::Crossing { at, .. } => (*at, 2),
            Generator::HalfTwist { at, n, .. } => (*at, *n),
        };
        let local = match g {
            Generator::Identity => unreachable!(),
            Generator::Cap { at } => self.cap(&v[*at])?,
            Generator::Cup { left, .. } => self.cup(left)?,
            Generator::Crossing { at, positive } => self.crossing(&v[*at], &v[at + 1], *positive)?,
            Generator::HalfTwist { at, n, positive } => {
                if *positive {
                    self.rev_x(&v[*at..at + n])?
                } else {
                    // inverse of the positive half-twist ending here
                    let after = g.apply(obj)?;
                    self.rev_x(&after.0[*at..at + n])?
                        .inverse()
                        .expect("half-twist is invertible")
                }
            }
        };
        let left = self.dims(&v[..at])?;
        let right = self.dims(&v[at + span..])?;
        Ok(Matrix::identity(left)
            .kron(&local)
            .kron(&Matrix::identity(right)))
    }
}

/// Permutation `v₁⊗⋯⊗vₙ ↦ vₙ⊗⋯⊗v₁` for factor dimensions `dims`.
pub fn rev_permutation(dims: &[usize]) -> Matrix {
    let total: usize = dims.iter().product();
    let mut out = Matrix::zeros(total, total);
    let rdims: Vec<usize> = dims.iter().rev().copied().collect();
    for idx in 0..total {
        let mut digits = vec![0; dims.len()];
        let mut rest = idx;
        for k in (0..dims.len()).rev() {
            digits[k] = rest % dims[k];
            rest /= dims[k];
        }
        let target = digits
            .iter()
            .rev()
            .zip(&rdims)
            .fold(0, |acc, (d, n)| acc * n + d);
        out.set(target, idx, Scalar::one());
    }
    out
}

/// The functor applied to a diagram: caps and cups use the pivotal
/// element of `choice`, crossings `Flip∘R`, half-twists `rev∘Δⁿ(X)`.
pub fn evaluate(
    d: &Diagram,
    choice: &RibbonChoice,
    reg: &LabelRegistry,
) -> Result<EvaluationResult, TangleError> {
    let bounds = d.boundaries();
    let shaded = bounds
        .iter()
        .any(|b| b.0.iter().any(|iv| iv.shading == Shading::Dark));
    let root = match choice.half_ribbon_root(reg.datum()) {
        Some(r) => r,
        None if d.has_half_twists() || shaded => {
            return Err(TangleError::Unsupported(format!(
                "half-twists and shaded ribbons need a half-ribbon choice, not {choice}"
            )))
        }
        None => Character::trivial(reg.datum().rank()),
    };
    let mut ev = Evaluator {
        reg,
        choice,
        root,
        modules: HashMap::new(),
        pivotal: HashMap::new(),
        crossings: HashMap::new(),
    };
    let n = ev.dims(&d.source().0)?;
    let mut acc = Matrix::identity(n);
    for (g, obj) in d.slices().iter().zip(&bounds) {
        acc = ev.slice(g, obj)?.mul(&acc);
    }
    let source = ev.tensor_of(&d.source().0)?;
    let target = ev.tensor_of(&d.target().0)?;
    let closed = d.is_closed();
    Ok(EvaluationResult {
        scalar: closed.then(|| acc.get(0, 0)),
        writhe: if closed { Some(d.writhe()?) } else { None },
        operator: Operator {
            source,
            target,
            matrix: acc,
        },
        ribbon: choice.clone(),
    })
}

/// `𝓕(L)`, or `θ^{w(L)}·𝓕(L)` when normalizing, for a closed diagram with
/// a single label.
pub fn link_invariant(
    d: &Diagram,
    choice: &RibbonChoice,
    reg: &LabelRegistry,
    normalize: bool,
) -> Result<Scalar, TangleError> {
    if !d.is_closed() {
        return Err(TangleError::NotClosed);
    }
    let labels = d.labels();
    if labels.len() > 1 {
        return Err(TangleError::Unsupported(format!(
            "link invariants need a single label, found {}",
            labels.join(", ")
        )));
    }
    let res = evaluate(d, choice, reg)?;
    let value = res.scalar.expect("closed diagram");
    if !normalize || labels.is_empty() {
        return Ok(value);
    }
    let theta = ribbon_scalar(choice, reg.datum(), reg.weight(&labels[0])?);
    Ok(&value * &theta.pow(res.writhe.expect("closed diagram")))
}
