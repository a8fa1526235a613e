use std::collections::HashMap;
use std::sync::Arc;

use crate::linalg::{rank, Matrix, SpanSolver};
use crate::root_data::{RootDatum, Weight};
use crate::scalar::Scalar;

use super::cache;
use super::{tensor_all, Module, ModuleError, ModuleLabel};

pub fn trivial(datum: &Arc<RootDatum>) -> Arc<Module> {
    let r = datum.rank();
    Module::new(
        datum.clone(),
        vec![Weight::zero(r)],
        vec![Matrix::zeros(1, 1); r],
        vec![Matrix::zeros(1, 1); r],
        ModuleLabel::Trivial,
    )
}

/// The `k`-th fundamental module of type A as the q-wedge power of the
/// standard module, basis indexed by `k`-subsets in lexicographic order.
pub fn fundamental(datum: &Arc<RootDatum>, k: usize) -> Result<Arc<Module>, ModuleError> {
    let n = datum.rank();
    if datum.letter() != 'A' {
        return Err(ModuleError::Unsupported(format!(
            "explicit fundamentals only for type A, not {}",
            datum.name()
        )));
    }
    if k >= n {
        return Err(ModuleError::Unsupported(format!("node {} out of range", k + 1)));
    }
    let subsets = k_subsets(n + 1, k + 1);
    let index: HashMap<&Vec<usize>, usize> =
        subsets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let dim = subsets.len();
    let weights: Vec<Weight> = subsets
        .iter()
        .map(|s| {
            Weight(
                (0..n)
                    .map(|i| i64::from(s.contains(&i)) - i64::from(s.contains(&(i + 1))))
                    .collect(),
            )
        })
        .collect();
    let mut e = vec![Matrix::zeros(dim, dim); n];
    let mut f = vec![Matrix::zeros(dim, dim); n];
    for (col, s) in subsets.iter().enumerate() {
        for i in 0..n {
            if s.contains(&(i + 1)) && !s.contains(&i) {
                let t = replace_sorted(s, i + 1, i);
                e[i].set(index[&t], col, Scalar::one());
            }
            if s.contains(&i) && !s.contains(&(i + 1)) {
                let t = replace_sorted(s, i, i + 1);
                f[i].set(index[&t], col, Scalar::one());
            }
        }
    }
    Ok(Module::new(
        datum.clone(),
        weights,
        e,
        f,
        ModuleLabel::Fundamental(k),
    ))
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn replace_sorted(s: &[usize], from: usize, to: usize) -> Vec<usize> {
    let mut t: Vec<usize> = s.iter().map(|&x| if x == from { to } else { x }).collect();
    t.sort_unstable();
    t
}

/// The irreducible module of highest weight `λ`, memoized per process and
/// optionally on disk (see `HALFRIB_CACHE_DIR`).
pub fn irrep(datum: &Arc<RootDatum>, lambda: &Weight) -> Result<Arc<Module>, ModuleError> {
    if lambda.rank() != datum.rank() {
        return Err(ModuleError::BadRank(lambda.clone()));
    }
    if !lambda.is_dominant() {
        return Err(ModuleError::NotDominant(lambda.clone()));
    }
    cache::lookup_or_build(datum, lambda, || build_irrep(datum, lambda))
}

fn build_irrep(datum: &Arc<RootDatum>, lambda: &Weight) -> Result<Arc<Module>, ModuleError> {
    let label = ModuleLabel::Irrep(lambda.clone());
    if lambda.is_zero() {
        return Ok(super::trivial(datum).relabeled(label));
    }
    let nonzero: Vec<usize> = (0..datum.rank()).filter(|&k| lambda.0[k] != 0).collect();
    if nonzero.len() == 1 && lambda.0[nonzero[0]] == 1 {
        return Ok(fundamental(datum, nonzero[0])?.relabeled(label));
    }
    let mut factors = Vec::new();
    for k in 0..datum.rank() {
        for _ in 0..lambda.0[k] {
            factors.push(fundamental(datum, k)?);
        }
    }
    let big = tensor_all(&factors)?;
    let module = generate(datum, lambda, &big, label);
    let expected = datum.weyl_dimension(lambda) as usize;
    assert_eq!(
        module.dim(),
        expected,
        "irrep {lambda} has dimension {} but the Weyl formula gives {expected}",
        module.dim()
    );
    Ok(module)
}

/// Submodule of `big` generated by its top basis vector under the `F_i`,
/// with basis the independent `F`-words in breadth-first discovery order.
fn generate(datum: &Arc<RootDatum>, lambda: &Weight, big: &Module, label: ModuleLabel) -> Arc<Module> {
    assert_eq!(big.weight(0), lambda, "top vector must carry the highest weight");
    let r = datum.rank();
    let spaces: HashMap<Weight, Vec<usize>> = big.weight_spaces().into_iter().collect();
    let restrict = |v: &[Scalar], w: &Weight| -> Vec<Scalar> {
        spaces[w].iter().map(|&k| v[k].clone()).collect()
    };

    let mut top = vec![Scalar::zero(); big.dim()];
    top[0] = Scalar::one();
    let mut vectors: Vec<Vec<Scalar>> = vec![top];
    let mut weights: Vec<Weight> = vec![lambda.clone()];
    let mut by_weight: HashMap<Weight, Vec<usize>> = HashMap::from([(lambda.clone(), vec![0])]);

    let mut k = 0;
    while k < vectors.len() {
        for i in 0..r {
            let img = big.f(i).apply(&vectors[k]);
            if img.iter().all(Scalar::is_zero) {
                continue;
            }
            let w = &weights[k] - &datum.simple_root(i);
            let members = by_weight.entry(w.clone()).or_default();
            let mut rows: Vec<Vec<Scalar>> =
                members.iter().map(|&m| restrict(&vectors[m], &w)).collect();
            rows.push(restrict(&img, &w));
            if rank(&rows) == rows.len() {
                members.push(vectors.len());
                vectors.push(img);
                weights.push(w);
            }
        }
        k += 1;
    }

    let dim = vectors.len();
    let solvers: HashMap<Weight, SpanSolver> = by_weight
        .iter()
        .map(|(w, members)| {
            let basis = members.iter().map(|&m| restrict(&vectors[m], w)).collect();
            (w.clone(), SpanSolver::new(basis))
        })
        .collect();

    let act = |gens: &dyn Fn(usize) -> (Matrix, Weight)| -> Vec<Matrix> {
        (0..r)
            .map(|i| {
                let (g, shift) = gens(i);
                let mut m = Matrix::zeros(dim, dim);
                for col in 0..dim {
                    let img = g.apply(&vectors[col]);
                    if img.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    let w = &weights[col] + &shift;
                    let solver = solvers
                        .get(&w)
                        .unwrap_or_else(|| panic!("image left the generated submodule"));
                    let coords = solver
                        .solve(&restrict(&img, &w))
                        .expect("image left the generated submodule");
                    for (p, c) in coords.into_iter().enumerate() {
                        m.set(by_weight[&w][p], col, c);
                    }
                }
                m
            })
            .collect()
    };
    let e = act(&|i| (big.e(i).clone(), datum.simple_root(i)));
    let f = act(&|i| (big.f(i).clone(), -&datum.simple_root(i)));
    Module::new(datum.clone(), weights, e, f, label)
}
