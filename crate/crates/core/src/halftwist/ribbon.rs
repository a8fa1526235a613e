use std::fmt;
use std::sync::Arc;

use crate::linalg::Matrix;
use crate::qmodule::{dual, hom_space, irrep, tensor, trivial, DualSide, Module, ModuleError};
use crate::root_data::{Character, RootDatum, Weight};
use crate::scalar::Scalar;

use super::{braiding, half_twist, half_twist_inverse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RibbonKind {
    /// `X⁻²` itself (trivial character).
    XSquaredInverse,
    /// The standard ribbon element `C`.
    StandardC,
    /// `s(φ)X⁻²` for some other character.
    Twisted,
}

/// A ribbon element `s(φ)X⁻²`, where `s(φ)` acts on weight `μ` by `φ(μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonChoice {
    pub character: Character,
    pub kind: RibbonKind,
}

impl RibbonChoice {
    pub fn x_squared_inverse(d: &RootDatum) -> Self {
        Self {
            character: Character::trivial(d.rank()),
            kind: RibbonKind::XSquaredInverse,
        }
    }

    /// `s(φ)X⁻²`, labeled as `C` when it acts like the standard ribbon
    /// element on every fundamental module.
    pub fn twisted(d: &RootDatum, character: Character) -> Self {
        let kind = if character.is_trivial() {
            RibbonKind::XSquaredInverse
        } else {
            RibbonKind::Twisted
        };
        let mut c = Self { character, kind };
        if c.matches_standard(d) {
            c.kind = RibbonKind::StandardC;
        }
        c
    }

    /// The standard ribbon element, located by comparing `q^{-(λ,λ)-2(λ,ρ)}`
    /// against the computed action of `X⁻²` on each fundamental module.
    pub fn standard(d: &Arc<RootDatum>) -> Result<Self, ModuleError> {
        let mut exps = Vec::with_capacity(d.rank());
        for k in 0..d.rank() {
            let w = Weight::fundamental(d.rank(), k);
            let m = irrep(d, &w)?;
            let x = half_twist(&m);
            let x2 = x.mul(x);
            let s = x2.get(0, 0);
            assert!(
                x2 == Matrix::identity(m.dim()).scale(&s),
                "X² is not scalar on a fundamental module"
            );
            let c = Scalar::q_power(-d.casimir_exponent(&w), d.root_order()).unwrap();
            // c = φ(ω_k)·s⁻¹
            let ratio = &c * &s;
            let e = [Scalar::one(), Scalar::i(), Scalar::from_int(-1), -Scalar::i()]
                .iter()
                .position(|r| *r == ratio)
                .ok_or_else(|| {
                    ModuleError::Unsupported("C/X⁻² ratio is not a fourth root of unity".into())
                })?;
            exps.push(e as u8);
        }
        Ok(Self {
            character: Character::from_exponents(exps),
            kind: RibbonKind::StandardC,
        })
    }

    /// `phi:k` indexes the order-≤2 characters in enumeration order.
    pub fn from_index(d: &RootDatum, k: usize) -> Option<Self> {
        d.order2_characters()
            .into_iter()
            .nth(k)
            .map(|c| Self::twisted(d, c))
    }

    /// A character `ψ` with `ψ² = φ`, so that `ψX` is a half-ribbon element
    /// whose inverse square is this ribbon element. Trivial when `φ` is.
    pub fn half_ribbon_root(&self, d: &RootDatum) -> Option<Character> {
        if self.character.is_trivial() {
            return Some(self.character.clone());
        }
        d.characters()
            .into_iter()
            .find(|psi| psi.mul(psi) == self.character)
    }

    pub fn is_half_ribbon(&self, d: &RootDatum) -> bool {
        self.half_ribbon_root(d).is_some()
    }

    fn matches_standard(&self, d: &RootDatum) -> bool {
        (0..d.rank()).all(|k| {
            let w = Weight::fundamental(d.rank(), k);
            ribbon_scalar(self, d, &w)
                == Scalar::q_power(-d.casimir_exponent(&w), d.root_order()).unwrap()
        })
    }
}

impl fmt::Display for RibbonChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RibbonKind::XSquaredInverse => write!(f, "X^-2"),
            RibbonKind::StandardC => write!(f, "C = s{} X^-2", self.character),
            RibbonKind::Twisted => write!(f, "s{} X^-2", self.character),
        }
    }
}

/// The scalar by which the ribbon element acts on `V_λ`:
/// `φ(λ)·(-1)^{⟨2λ,ρ∨⟩}·q^{-(λ,λ)-2(λ,ρ)}`.
pub fn ribbon_scalar(c: &RibbonChoice, d: &RootDatum, lambda: &Weight) -> Scalar {
    let sign = if d.two_rho_check(lambda).rem_euclid(2) == 0 { 1 } else { -1 };
    let q = Scalar::q_power(-d.casimir_exponent(lambda), d.root_order()).unwrap();
    &(&c.character.value(lambda) * &Scalar::from_int(sign)) * &q
}

fn character_diagonal(ch: &Character, m: &Module) -> Matrix {
    m.weight_diagonal(|w| ch.value(w))
}

/// The ribbon element on an arbitrary module: `diag(φ(wt))·X⁻²`.
pub fn ribbon_on(c: &RibbonChoice, m: &Arc<Module>) -> Matrix {
    let xi = half_twist_inverse(m);
    character_diagonal(&c.character, m).mul(&xi.mul(xi))
}

/// Drinfeld element `u = μ(S⊗id)R₂₁` on `M`, read off from `R` on `M⊗M*`:
/// `u_{ij} = Σ_m R_{(m,m),(j,i)}`.
pub fn drinfeld_u(m: &Arc<Module>) -> Matrix {
    let md = dual(m, DualSide::Left);
    let b = braiding(m, &md).expect("same datum");
    let n = m.dim();
    let mut u = Matrix::zeros(n, n);
    for k in 0..n {
        for (col, s) in b.r.row(k * n + k) {
            let (j, i) = (col / n, col % n);
            u.add_to(i, j, s);
        }
    }
    u
}

/// `u = S(X⁻¹)X⁻¹`, with `S(y)` on `M` the transpose of `y` on `M*`.
pub fn drinfeld_u_from_x(m: &Arc<Module>) -> Matrix {
    let md = dual(m, DualSide::Left);
    half_twist_inverse(&md).transpose().mul(half_twist_inverse(m))
}

/// `g = S(X)X⁻¹`, the pivotal element of `X⁻²`.
pub fn grouplike_g_from_x(m: &Arc<Module>) -> Matrix {
    let md = dual(m, DualSide::Left);
    half_twist(&md).transpose().mul(half_twist_inverse(m))
}

/// `g = v⁻¹u` for the chosen ribbon element. For `X⁻²` the result is
/// asserted equal to `S(X)X⁻¹`.
pub fn grouplike_g(c: &RibbonChoice, m: &Arc<Module>) -> Matrix {
    let v = ribbon_on(c, m);
    let g = v.inverse().expect("ribbon element is invertible").mul(&drinfeld_u(m));
    let via_x = character_diagonal(&c.character, m)
        .inverse()
        .unwrap()
        .mul(&grouplike_g_from_x(m));
    assert!(g == via_x, "pivotal element disagrees between v⁻¹u and S(X)X⁻¹");
    g
}

/// Frobenius-Schur indicator of an irreducible module: `0` when not
/// self-dual, otherwise the sign with `F = FS·Fᵀ·G` for any `f: V → V*`.
pub fn fs_indicator(c: &RibbonChoice, m: &Arc<Module>) -> i8 {
    let md = dual(m, DualSide::Left);
    let homs = hom_space(m, &md).expect("same datum");
    let Some(f) = homs.first() else {
        return 0;
    };
    let fm = &f.matrix;
    let rhs = fm.transpose().mul(&grouplike_g(c, m));
    let (r, col, a) = fm.entries().next().expect("nonzero intertwiner");
    let ratio = a / &rhs.get(r, col);
    assert!(
        rhs.scale(&ratio) == *fm,
        "intertwiner is not proportional to its pivotal dual"
    );
    if ratio.is_one() {
        1
    } else if ratio == Scalar::from_int(-1) {
        -1
    } else {
        panic!("Frobenius-Schur ratio {ratio} is not a sign")
    }
}

/// A candidate ribbon element to test against the axioms.
#[derive(Clone, Debug)]
pub enum Candidate {
    Choice(RibbonChoice),
    /// `X⁻¹`, which is not central and serves as a negative control.
    XInverse,
}

impl Candidate {
    fn on(&self, m: &Arc<Module>) -> Matrix {
        match self {
            Candidate::Choice(c) => ribbon_on(c, m),
            Candidate::XInverse => half_twist_inverse(m).clone(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub central: bool,
    pub v_squared_is_u_su: bool,
    pub antipode_fixed: bool,
    pub counit: bool,
    pub coproduct: bool,
}

impl AxiomReport {
    pub fn all(&self) -> bool {
        self.central && self.v_squared_is_u_su && self.antipode_fixed && self.counit && self.coproduct
    }

    pub fn lines(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("central", self.central),
            ("v^2 = u S(u)", self.v_squared_is_u_su),
            ("S(v) = v", self.antipode_fixed),
            ("eps(v) = 1", self.counit),
            ("Delta(v) = (v x v)(R21 R12)^-1", self.coproduct),
        ]
    }
}

/// Checks the ribbon axioms on each `V_λ` of the family and on each
/// `V_λ⊗V_μ` for pairs drawn from it.
pub fn verify_ribbon_axioms(
    cand: &Candidate,
    d: &Arc<RootDatum>,
    family: &[Weight],
    pairs: &[(Weight, Weight)],
) -> Result<AxiomReport, ModuleError> {
    let mut report = AxiomReport {
        central: true,
        v_squared_is_u_su: true,
        antipode_fixed: true,
        counit: true,
        coproduct: true,
    };
    let central_on = |m: &Arc<Module>, v: &Matrix| {
        (0..d.rank()).all(|i| v.commutes_with(m.e(i)) && v.commutes_with(m.f(i)))
            && v.entries().all(|(r, c, _)| m.weight(r) == m.weight(c))
    };
    for lambda in family {
        let m = irrep(d, lambda)?;
        let v = cand.on(&m);
        report.central &= central_on(&m, &v);
        let md = dual(&m, DualSide::Left);
        let u = drinfeld_u(&m);
        let su = drinfeld_u(&md).transpose();
        report.v_squared_is_u_su &= v.mul(&v) == u.mul(&su);
        report.antipode_fixed &= cand.on(&md).transpose() == v;
    }
    let one = trivial(d);
    report.counit &= cand.on(&one).is_identity();
    for (a, b) in pairs {
        let ma = irrep(d, a)?;
        let mb = irrep(d, b)?;
        let mab = tensor(&ma, &mb)?;
        let v = cand.on(&mab);
        report.central &= central_on(&mab, &v);
        let s_ab = braiding(&ma, &mb)?.sigma;
        let s_ba = braiding(&mb, &ma)?.sigma;
        let double = s_ba.mul(&s_ab);
        let expected = cand
            .on(&ma)
            .kron(&cand.on(&mb))
            .mul(&double.inverse().expect("double braiding is invertible"));
        report.coproduct &= v == expected;
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ClassifiedRibbon {
    pub choice: RibbonChoice,
    pub axioms: AxiomReport,
    pub is_standard: bool,
    pub half_ribbon: bool,
}

/// One ribbon element per character of `P/Q` of order ≤ 2, each verified on
/// the fundamental modules and the square of the first fundamental.
pub fn classify_ribbons(d: &Arc<RootDatum>) -> Result<Vec<ClassifiedRibbon>, ModuleError> {
    let standard = RibbonChoice::standard(d)?;
    let r = d.rank();
    let family: Vec<Weight> = (0..r).map(|k| Weight::fundamental(r, k)).collect();
    let pairs = vec![(family[0].clone(), family[0].clone())];
    d.order2_characters()
        .into_iter()
        .map(|ch| {
            let choice = RibbonChoice::twisted(d, ch);
            let axioms = verify_ribbon_axioms(&Candidate::Choice(choice.clone()), d, &family, &pairs)?;
            Ok(ClassifiedRibbon {
                is_standard: choice.character == standard.character,
                half_ribbon: choice.is_half_ribbon(d),
                choice,
                axioms,
            })
        })
        .collect()
}
