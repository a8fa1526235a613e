use std::sync::Arc;

use crate::linalg::Matrix;
use crate::qmodule::{tensor, Module, ModuleError};

use super::{half_twist, half_twist_inverse};

/// `R = (X⁻¹⊗X⁻¹)Δ(X)` on `M⊗N` and `σ = Flip∘R : M⊗N → N⊗M`.
#[derive(Clone, Debug)]
pub struct Braiding {
    pub source: Arc<Module>,
    pub target: Arc<Module>,
    pub r: Matrix,
    pub sigma: Matrix,
}

/// The swap `M⊗N → N⊗M` for factor dimensions `dm`, `dn`.
pub fn flip(dm: usize, dn: usize) -> Matrix {
    let mut out = Matrix::zeros(dm * dn, dm * dn);
    for a in 0..dm {
        for b in 0..dn {
            out.set(b * dm + a, a * dn + b, crate::scalar::Scalar::one());
        }
    }
    out
}

pub fn braiding(m: &Arc<Module>, n: &Arc<Module>) -> Result<Braiding, ModuleError> {
    let mn = tensor(m, n)?;
    let nm = tensor(n, m)?;
    let r = half_twist_inverse(m)
        .kron(half_twist_inverse(n))
        .mul(half_twist(&mn));
    let sigma = flip(m.dim(), n.dim()).mul(&r);
    Ok(Braiding {
        source: mn,
        target: nm,
        r,
        sigma,
    })
}
