use std::cmp::Ordering;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::coeff::Coefficient;

/// A Laurent polynomial in the formal root `v`, where `v^root = q`.
///
/// Terms are kept sorted by exponent with no zero coefficients, so derived
/// equality is equality of polynomials at a fixed root order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    root: u32,
    terms: Vec<(i64, Coefficient)>,
}

impl LaurentPoly {
    pub fn zero(root: u32) -> Self {
        Self {
            root,
            terms: Vec::new(),
        }
    }

    pub fn one(root: u32) -> Self {
        Self::monomial(0, Coefficient::one(), root)
    }

    pub fn monomial(exp: i64, c: Coefficient, root: u32) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(exp, c)] };
        Self { root, terms }
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms(root: u32, terms: impl IntoIterator<Item = (i64, Coefficient)>) -> Self {
        let mut v: Vec<(i64, Coefficient)> = terms.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, Coefficient)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = &*lc + &c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { root, terms: out }
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn terms(&self) -> &[(i64, Coefficient)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn leading(&self) -> Option<&Coefficient> {
        self.terms.last().map(|t| &t.1)
    }

    /// Re-expresses the polynomial in terms of a finer root `v' = v^(1/k)`.
    pub fn lift(&self, new_root: u32) -> Self {
        if new_root == self.root {
            return self.clone();
        }
        assert!(
            new_root.is_multiple_of(self.root),
            "root order {} does not refine {}",
            new_root,
            self.root
        );
        let k = (new_root / self.root) as i64;
        Self {
            root: new_root,
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Divides all exponents by `g`; caller guarantees divisibility.
    pub(crate) fn coarsen(&self, g: u32) -> Self {
        let k = g as i64;
        Self {
            root: self.root / g,
            terms: self.terms.iter().map(|(e, c)| (e / k, c.clone())).collect(),
        }
    }

    /// Gcd of the root order and every exponent.
    pub(crate) fn exponent_gcd(&self, acc: u64) -> u64 {
        self.terms
            .iter()
            .fold(acc, |g, (e, _)| g.gcd(&e.unsigned_abs()))
    }

    pub fn shift(&self, k: i64) -> Self {
        Self {
            root: self.root,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero(self.root);
        }
        Self {
            root: self.root,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            root: self.root,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.root, other.root);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((*eb, cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ca + cb;
                    if !s.is_zero() {
                        out.push((*ea, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Self {
            root: self.root,
            terms: out,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.root, other.root);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.root);
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.scale(c).shift(*e);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.scale(c).shift(*e);
        }
        let lo = self.terms[0].0 + other.terms[0].0;
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let mut dense = vec![Coefficient::zero(); (hi - lo + 1) as usize];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let slot = &mut dense[(ea + eb - lo) as usize];
                *slot = &*slot + &(ca * cb);
            }
        }
        Self::from_dense(self.root, lo, dense)
    }

    /// Dense coefficients from the lowest exponent upward.
    pub(crate) fn to_dense(&self) -> (i64, Vec<Coefficient>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut dense = vec![Coefficient::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    pub(crate) fn from_dense(root: u32, lo: i64, dense: Vec<Coefficient>) -> Self {
        Self {
            root,
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (lo + k as i64, c))
                .collect(),
        }
    }

    pub fn eval(&self, v: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_complex() * v.powi(*e as i32))
            .sum()
    }
}

/// Dense polynomial helpers (index = degree) used for gcd-based reduction.
pub(crate) mod dense {
    use super::Coefficient;
    use num_traits::{One, Zero};

    pub fn trim(p: &mut Vec<Coefficient>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }

    /// Quotient and remainder of `a / b` with `b` nonzero.
    pub fn divrem(a: &[Coefficient], b: &[Coefficient]) -> (Vec<Coefficient>, Vec<Coefficient>) {
        let mut r: Vec<Coefficient> = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = b[db].inv().expect("divisor must be nonzero");
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![Coefficient::zero(); r.len() - db];
        while r.len() >= b.len() {
            let k = r.len() - 1 - db;
            let c = &r[r.len() - 1] * &lead_inv;
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    r[k + j] = &r[k + j] - &(&c * bj);
                }
            }
            q[k] = c;
            r.pop();
            trim(&mut r);
        }
        (q, r)
    }

    pub fn monic(mut p: Vec<Coefficient>) -> Vec<Coefficient> {
        trim(&mut p);
        if let Some(l) = p.last().cloned() {
            if !l.is_one() {
                let inv = l.inv().unwrap();
                for c in p.iter_mut() {
                    *c = &*c * &inv;
                }
            }
        }
        p
    }

    /// Monic gcd; both inputs nonzero.
    pub fn gcd(a: &[Coefficient], b: &[Coefficient]) -> Vec<Coefficient> {
        let mut x = monic(a.to_vec());
        let mut y = monic(b.to_vec());
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = monic(r);
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(root: u32, t: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(root, t.iter().map(|&(e, c)| (e, Coefficient::from_int(c))))
    }

    #[test]
    fn multiply_and_cancel() {
        let a = p(1, &[(1, 1), (-1, 1)]);
        let sq = a.mul(&a);
        assert_eq!(sq, p(1, &[(2, 1), (0, 2), (-2, 1)]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn dense_gcd() {
        // (x-1)(x+1) and (x-1)(x+2)
        let a = p(1, &[(2, 1), (0, -1)]).to_dense().1;
        let b = p(1, &[(2, 1), (1, 1), (0, -2)]).to_dense().1;
        let g = dense::gcd(&a, &b);
        assert_eq!(g, vec![Coefficient::from_int(-1), Coefficient::from_int(1)]);
    }

    #[test]
    fn lift_refines_exponents() {
        let a = p(2, &[(1, 3)]);
        assert_eq!(a.lift(4), p(4, &[(2, 3)]));
    }
}
