//! Temperley-Lieb planar diagrams and the Kauffman bracket, an oracle
//! independent of the representation-theoretic pipeline.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::halftwist::RibbonChoice;
use crate::scalar::Scalar;
use crate::tangle::{braid_closure, link_invariant, Diagram, Generator, LabelRegistry, TangleError};

pub const MAX_CROSSINGS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("width mismatch: {0} points meet {1}")]
    WidthMismatch(usize, usize),
    #[error("pairing is not a planar perfect matching")]
    NotPlanar,
    #[error("{0} crossings exceeds the state-sum cap of {MAX_CROSSINGS}")]
    TooManyCrossings(usize),
    #[error("half-twists have no Temperley-Lieb image")]
    HalfTwist,
    #[error("calibration left no candidate")]
    NoCandidate,
    #[error(transparent)]
    Tangle(#[from] TangleError),
}

/// A planar matching on `n_bottom` bottom points and `n_top` top points.
/// Bottom points are `0..n_bottom` from the left, top points follow from
/// the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanarDiagram {
    n_bottom: usize,
    n_top: usize,
    pairing: Vec<usize>,
    loops: usize,
}

impl PlanarDiagram {
    pub fn new(n_bottom: usize, n_top: usize, pairing: Vec<usize>) -> Result<Self, SkeinError> {
        let n = n_bottom + n_top;
        if pairing.len() != n
            || (0..n).any(|p| pairing[p] >= n || pairing[p] == p || pairing[pairing[p]] != p)
        {
            return Err(SkeinError::NotPlanar);
        }
        let d = Self {
            n_bottom,
            n_top,
            pairing,
            loops: 0,
        };
        if !d.is_planar() {
            return Err(SkeinError::NotPlanar);
        }
        Ok(d)
    }

    pub fn identity(n: usize) -> Self {
        let pairing = (0..2 * n).map(|p| if p < n { p + n } else { p - n }).collect();
        Self::new(n, n, pairing).unwrap()
    }

    /// Joins bottom points `at` and `at + 1`; the others pass straight up.
    pub fn cap(n_bottom: usize, at: usize) -> Self {
        let nt = n_bottom - 2;
        let mut pairing = vec![0; n_bottom + nt];
        pairing[at] = at + 1;
        pairing[at + 1] = at;
        let mut t = 0;
        for b in (0..n_bottom).filter(|&b| b != at && b != at + 1) {
            pairing[b] = n_bottom + t;
            pairing[n_bottom + t] = b;
            t += 1;
        }
        Self::new(n_bottom, nt, pairing).unwrap()
    }

    /// Creates top points `at` and `at + 1` joined to each other.
    pub fn cup(n_bottom: usize, at: usize) -> Self {
        Self::cap(n_bottom + 2, at).rotated().mirrored()
    }

    /// `e_i = cup ∘ cap` at position `at`.
    pub fn e(n: usize, at: usize) -> Self {
        compose_planar(&Self::cap(n, at), &Self::cup(n - 2, at)).unwrap()
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn partner(&self, p: usize) -> usize {
        self.pairing[p]
    }

    /// Position around the boundary circle: bottom left to right, then top
    /// right to left.
    fn cyclic(&self, p: usize) -> usize {
        if p < self.n_bottom {
            p
        } else {
            self.n_bottom + (self.n_top - 1 - (p - self.n_bottom))
        }
    }

    fn is_planar(&self) -> bool {
        let n = self.pairing.len();
        let arcs: Vec<(usize, usize)> = (0..n)
            .filter(|&p| p < self.pairing[p])
            .map(|p| {
                let (a, b) = (self.cyclic(p), self.cyclic(self.pairing[p]));
                (a.min(b), a.max(b))
            })
            .collect();
        arcs.iter().all(|&(a, b)| {
            arcs.iter()
                .all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// Rotation by 180 degrees in the plane.
    pub fn rotated(&self) -> Self {
        let (nb, nt) = (self.n_bottom, self.n_top);
        // bottom i ↦ top (nb-1-i); top j ↦ bottom (nt-1-j)
        let map = |p: usize| {
            if p < nb {
                nt + (nb - 1 - p)
            } else {
                nt - 1 - (p - nb)
            }
        };
        let mut pairing = vec![0; nb + nt];
        for p in 0..nb + nt {
            pairing[map(p)] = map(self.pairing[p]);
        }
        Self {
            n_bottom: nt,
            n_top: nb,
            pairing,
            loops: self.loops,
        }
    }

    /// Reflection in a vertical line.
    pub fn mirrored(&self) -> Self {
        let (nb, nt) = (self.n_bottom, self.n_top);
        let map = |p: usize| if p < nb { nb - 1 - p } else { nb + (nt - 1 - (p - nb)) };
        let mut pairing = vec![0; nb + nt];
        for p in 0..nb + nt {
            pairing[map(p)] = map(self.pairing[p]);
        }
        Self {
            n_bottom: nb,
            n_top: nt,
            pairing,
            loops: self.loops,
        }
    }

    fn without_loops(&self) -> Self {
        Self {
            loops: 0,
            ..self.clone()
        }
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = (0..self.pairing.len())
            .filter(|&p| p < self.pairing[p])
            .map(|p| format!("{}-{}", p, self.pairing[p]))
            .collect();
        write!(f, "[{}->{}: {}]", self.n_bottom, self.n_top, arcs.join(" "))?;
        if self.loops > 0 {
            write!(f, " + {} loops", self.loops)?;
        }
        Ok(())
    }
}

/// Stacks `upper` on top of `lower`, counting closed loops formed in the
/// middle.
pub fn compose_planar(lower: &PlanarDiagram, upper: &PlanarDiagram) -> Result<PlanarDiagram, SkeinError> {
    let m = lower.n_top;
    if m != upper.n_bottom {
        return Err(SkeinError::WidthMismatch(m, upper.n_bottom));
    }
    let nb = lower.n_bottom;
    let nt = upper.n_top;
    // outer points: 0..nb lower bottom, nb..nb+nt upper top
    let mut pairing = vec![usize::MAX; nb + nt];
    let mut seen_mid = vec![false; m];
    // walk from an outer point until reaching another
    let walk = |start_lower: bool, p: usize, seen: &mut Vec<bool>| -> usize {
        let (mut in_lower, mut q) = (start_lower, p);
        loop {
            if in_lower {
                let r = lower.pairing[q];
                if r < nb {
                    return r;
                }
                let k = r - nb;
                seen[k] = true;
                in_lower = false;
                q = k;
            } else {
                let r = upper.pairing[q];
                if r >= m {
                    return nb + (r - m);
                }
                seen[r] = true;
                in_lower = true;
                q = nb + r;
            }
        }
    };
    for p in 0..nb {
        if pairing[p] == usize::MAX {
            let r = walk(true, p, &mut seen_mid);
            pairing[p] = r;
            pairing[r] = p;
        }
    }
    for t in 0..nt {
        let p = nb + t;
        if pairing[p] == usize::MAX {
            let r = walk(false, m + t, &mut seen_mid);
            pairing[p] = r;
            pairing[r] = p;
        }
    }
    let mut loops = lower.loops + upper.loops;
    for k in 0..m {
        if seen_mid[k] {
            continue;
        }
        loops += 1;
        // closed cycle: through the upper diagram, then back through the lower
        let mut cur = k;
        loop {
            seen_mid[cur] = true;
            let up = upper.pairing[cur];
            seen_mid[up] = true;
            cur = lower.pairing[nb + up] - nb;
            if cur == k {
                break;
            }
        }
    }
    Ok(PlanarDiagram {
        n_bottom: nb,
        n_top: nt,
        pairing,
        loops,
    })
}

/// `−q − q⁻¹`.
pub fn loop_value() -> Scalar {
    -&(&Scalar::q_int(1) + &Scalar::q_int(-1))
}

/// A linear combination of loop-free planar diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SkeinElement {
    terms: BTreeMap<PlanarDiagram, Scalar>,
}

impl SkeinElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// A single diagram, with its loops already turned into `δ` factors.
    pub fn from_diagram(p: PlanarDiagram, coeff: Scalar) -> Self {
        let c = &coeff * &loop_value().pow(p.loops as i64);
        let mut out = Self::zero();
        out.add_term(p.without_loops(), c);
        out
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(PlanarDiagram::identity(n), Scalar::one())
    }

    fn add_term(&mut self, p: PlanarDiagram, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&p) {
            Some(x) => &x + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(p, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PlanarDiagram, &Scalar)> {
        self.terms.iter()
    }

    /// The coefficient of the empty diagram.
    pub fn scalar(&self) -> Scalar {
        self.terms
            .get(&PlanarDiagram::identity(0))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }
}

/// `upper ∘ lower`, bilinearly, with loops replaced by `δ`.
pub fn tl_compose(lower: &SkeinElement, upper: &SkeinElement) -> Result<SkeinElement, SkeinError> {
    let mut out = SkeinElement::zero();
    for (p1, c1) in &lower.terms {
        for (p2, c2) in &upper.terms {
            let p = compose_planar(p1, p2)?;
            let part = SkeinElement::from_diagram(p, c1 * c2);
            out = out.add(&part);
        }
    }
    Ok(out)
}

/// `q^{1/2}` and friends.
fn half_power(sign: i64, exp: i64) -> Scalar {
    &Scalar::from_int(sign) * &Scalar::q_power(Ratio::new(exp, 2), 2).unwrap()
}

/// Kauffman bracket by exhaustive smoothing: a positive crossing resolves
/// to `A·id + A⁻¹·e`, a negative one to `A⁻¹·id + A·e`; each loop counts
/// `δ = −q − q⁻¹`. The empty diagram is `1`.
pub fn kauffman_bracket_with(d: &Diagram, a: &Scalar) -> Result<Scalar, SkeinError> {
    if d.has_half_twists() {
        return Err(SkeinError::HalfTwist);
    }
    if !d.is_closed() {
        return Err(TangleError::NotClosed.into());
    }
    let bounds = d.boundaries();
    let crossings: Vec<usize> = d
        .slices()
        .iter()
        .enumerate()
        .filter(|(_, g)| matches!(g, Generator::Crossing { .. }))
        .map(|(k, _)| k)
        .collect();
    if crossings.len() > MAX_CROSSINGS {
        return Err(SkeinError::TooManyCrossings(crossings.len()));
    }
    let a_inv = a.pow(-1);
    let mut total = Scalar::zero();
    for state in 0u32..(1 << crossings.len()) {
        let mut acc = PlanarDiagram::identity(0);
        let mut coeff = Scalar::one();
        let mut k = 0;
        for (g, obj) in d.slices().iter().zip(&bounds) {
            let w = obj.width();
            let p = match g {
                Generator::Identity => continue,
                Generator::Cap { at } => PlanarDiagram::cap(w, *at),
                Generator::Cup { at, .. } => PlanarDiagram::cup(w, *at),
                Generator::Crossing { at, positive } => {
                    let horizontal = state >> k & 1 == 1;
                    k += 1;
                    let a_side = *positive != horizontal;
                    coeff = &coeff * if a_side { a } else { &a_inv };
                    if horizontal {
                        PlanarDiagram::e(w, *at)
                    } else {
                        PlanarDiagram::identity(w)
                    }
                }
                Generator::HalfTwist { .. } => unreachable!(),
            };
            acc = compose_planar(&acc, &p)?;
        }
        total = &total + &(&coeff * &loop_value().pow(acc.loops as i64));
    }
    Ok(total)
}

/// The bracket with `A = q^{1/2}`.
pub fn kauffman_bracket(d: &Diagram) -> Result<Scalar, SkeinError> {
    kauffman_bracket_with(d, &half_power(1, 1))
}

/// One convention for turning the bracket into an oriented invariant:
/// `β^{-w}⟨L⟩_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convention {
    pub a: Scalar,
    pub a_text: String,
    pub framing: Scalar,
    pub framing_text: String,
}

impl Convention {
    pub fn all() -> Vec<Convention> {
        let mut out = Vec::new();
        for (a_sign, a_exp) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
            let a = half_power(a_sign, a_exp);
            let a_text = format!("A = {}", a);
            for (f_sign, f_exp) in [(-1, 3), (1, 3), (-1, -3), (1, -3)] {
                let framing = &Scalar::from_int(f_sign) * &a.pow(f_exp);
                let framing_text = format!("beta = {}A^{}", if f_sign < 0 { "-" } else { "" }, f_exp);
                out.push(Convention {
                    a: a.clone(),
                    a_text: a_text.clone(),
                    framing,
                    framing_text,
                });
            }
        }
        out
    }

    /// `A = q^{1/2}`, `β = −A³`.
    pub fn preferred() -> Convention {
        Self::all().remove(0)
    }

    pub fn normalized(&self, d: &Diagram) -> Result<Scalar, SkeinError> {
        let w = d.writhe()?;
        Ok(&self.framing.pow(-w) * &kauffman_bracket_with(d, &self.a)?)
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.a_text, self.framing_text)
    }
}

#[derive(Clone, Debug)]
pub struct DifferentialRow {
    pub name: String,
    pub functor: Scalar,
    pub bracket: Scalar,
    pub matches: bool,
}

#[derive(Clone, Debug)]
pub struct DifferentialReport {
    pub candidates: usize,
    /// Conventions agreeing with the functor on the calibration links.
    pub survivors: Vec<Convention>,
    pub chosen: Convention,
    pub calibration: Vec<DifferentialRow>,
    pub held_out: Vec<DifferentialRow>,
    /// Survivors that also agree on every held-out link.
    pub consistent_after_holdout: Vec<Convention>,
}

impl DifferentialReport {
    pub fn underdetermined(&self) -> bool {
        self.survivors.len() > 1
    }

    pub fn passed(&self) -> bool {
        self.calibration.iter().all(|r| r.matches) && self.held_out.iter().all(|r| r.matches)
    }
}

/// The normalized functor invariant under `X⁻²` against the bracket.
/// Conventions are calibrated on the unknot and the Hopf link; the
/// preferred one is used when it survives, otherwise the first survivor.
pub fn differential_test(
    reg: &LabelRegistry,
    held_out: &[(String, Diagram)],
) -> Result<DifferentialReport, SkeinError> {
    let choice = RibbonChoice::x_squared_inverse(reg.datum());
    let calib = vec![
        ("unknot".to_string(), braid_closure(1, &[], "V")?),
        ("hopf".to_string(), braid_closure(2, &[(1, true), (1, true)], "V")?),
    ];
    let functor = |d: &Diagram| link_invariant(d, &choice, reg, true);
    let calib_values: Vec<Scalar> = calib
        .iter()
        .map(|(_, d)| functor(d))
        .collect::<Result<_, _>>()?;
    let held_values: Vec<Scalar> = held_out
        .iter()
        .map(|(_, d)| functor(d))
        .collect::<Result<_, _>>()?;
    let agrees = |c: &Convention, links: &[(String, Diagram)], vals: &[Scalar]| -> Result<bool, SkeinError> {
        for ((_, d), v) in links.iter().zip(vals) {
            if c.normalized(d)? != *v {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let all = Convention::all();
    let mut survivors = Vec::new();
    for c in &all {
        if agrees(c, &calib, &calib_values)? {
            survivors.push(c.clone());
        }
    }
    let preferred = Convention::preferred();
    let chosen = if survivors.contains(&preferred) {
        preferred
    } else {
        survivors.first().cloned().ok_or(SkeinError::NoCandidate)?
    };
    let rows = |links: &[(String, Diagram)], vals: &[Scalar]| -> Result<Vec<DifferentialRow>, SkeinError> {
        links
            .iter()
            .zip(vals)
            .map(|((name, d), v)| {
                let b = chosen.normalized(d)?;
                Ok(DifferentialRow {
                    name: name.clone(),
                    matches: b == *v,
                    functor: v.clone(),
                    bracket: b,
                })
            })
            .collect()
    };
    let mut consistent = Vec::new();
    for c in &survivors {
        if agrees(c, held_out, &held_values)? {
            consistent.push(c.clone());
        }
    }
    Ok(DifferentialReport {
        candidates: all.len(),
        calibration: rows(&calib, &calib_values)?,
        held_out: rows(held_out, &held_values)?,
        survivors,
        chosen,
        consistent_after_holdout: consistent,
    })
}

#[cfg(test)]
mod tests;
