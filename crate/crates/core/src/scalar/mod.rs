//! Exact coefficient field: rational functions in a formal root `v` of `q`
//! (`v^L = q`) over the Gaussian rationals.
//!
//! Every [`Scalar`] is stored in a canonical reduced form, so `==` is
//! equality in the field. The root order `L` is carried per value and
//! shrunk to the smallest order that can express the value; mixed-order
//! arithmetic lifts both sides to the least common multiple.

mod coeff;
mod laurent;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

pub use coeff::Coefficient;
pub use laurent::LaurentPoly;

use laurent::dense;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent {exponent} is not a multiple of 1/{root}")]
    Exponent { exponent: String, root: u32 },
    #[error("denominator vanishes at sample point {0}")]
    Pole(String),
    #[error("malformed scalar json: {0}")]
    Json(String),
}

/// Canonical element of the fraction field of Laurent polynomials in `v`.
///
/// Invariants: the denominator has a nonzero constant term and leading
/// coefficient one; numerator and denominator are coprime; the root order
/// is minimal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(1),
            den: LaurentPoly::one(1),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_coeff(Coefficient::from_int(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_coeff(Coefficient::from_ratio(n, d))
    }

    pub fn from_coeff(c: Coefficient) -> Self {
        Self {
            num: LaurentPoly::monomial(0, c, 1),
            den: LaurentPoly::one(1),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_coeff(Coefficient::i())
    }

    /// `v^exp` where `v^root = q`.
    pub fn v_power(exp: i64, root: u32) -> Self {
        Self::from_poly(LaurentPoly::monomial(exp, Coefficient::one(), root))
    }

    /// `q^n` for an integer `n`.
    pub fn q_int(n: i64) -> Self {
        Self::v_power(n, 1)
    }

    /// `q^r` realized as `v^(r·root)`.
    pub fn q_power(r: Ratio<i64>, root: u32) -> Result<Self, ScalarError> {
        let scaled = r * Ratio::from_integer(root as i64);
        if !scaled.is_integer() {
            return Err(ScalarError::Exponent {
                exponent: r.to_string(),
                root,
            });
        }
        Ok(Self::v_power(scaled.to_integer(), root))
    }

    /// Balanced quantum integer `[n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d})`.
    pub fn quantum_int(n: i64, d: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let sign = n.signum();
        let m = n.abs();
        let terms = (0..m).map(|k| (d * (m - 1 - 2 * k), Coefficient::from_int(sign)));
        Self::from_poly(LaurentPoly::from_terms(1, terms))
    }

    /// `[n]_{q^d}!`
    pub fn quantum_factorial(n: i64, d: i64) -> Self {
        (1..=n).fold(Self::one(), |acc, k| &acc * &Self::quantum_int(k, d))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let root = p.root();
        Self::reduce_root(p, LaurentPoly::one(root))
    }

    /// Builds `num/den` and brings it to canonical form.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let root = lcm(num.root(), den.root());
        Ok(Self::canonical(num.lift(root), den.lift(root)))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// Root order `L` of the canonical representation.
    pub fn root(&self) -> u32 {
        self.num.root()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Single term `c·v^e` with trivial denominator.
    pub fn as_monomial(&self) -> Option<(i64, &Coefficient)> {
        if self.den.is_one() && self.num.is_monomial() {
            let (e, c) = &self.num.terms()[0];
            Some((*e, c))
        } else {
            None
        }
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let root = num.root();
        let k = den.min_exp().unwrap();
        let den = den.shift(-k);
        let num = num.shift(-k);
        if den.is_monomial() {
            let inv = den.leading().unwrap().inv().unwrap();
            return Self::reduce_root(num.scale(&inv), LaurentPoly::one(root));
        }
        let m = num.min_exp().unwrap();
        let (_, p) = num.shift(-m).to_dense();
        let (_, d) = den.to_dense();
        let g = dense::gcd(&p, &d);
        let (mut p, mut d) = if g.len() > 1 {
            let (qp, rp) = dense::divrem(&p, &g);
            let (qd, rd) = dense::divrem(&d, &g);
            debug_assert!(rp.is_empty() && rd.is_empty());
            (qp, qd)
        } else {
            (p, d)
        };
        dense::trim(&mut d);
        let lc_inv = d.last().unwrap().inv().unwrap();
        if !d.last().unwrap().is_one() {
            for c in p.iter_mut().chain(d.iter_mut()) {
                *c = &*c * &lc_inv;
            }
        }
        let num = LaurentPoly::from_dense(root, m, p);
        let den = LaurentPoly::from_dense(root, 0, d);
        Self::reduce_root(num, den)
    }

    fn reduce_root(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = den.exponent_gcd(num.exponent_gcd(num.root() as u64));
        if g > 1 {
            let g = g as u32;
            Self {
                num: num.coarsen(g),
                den: den.coarsen(g),
            }
        } else {
            Self { num, den }
        }
    }

    fn lifted(&self, root: u32) -> (LaurentPoly, LaurentPoly) {
        (self.num.lift(root), self.den.lift(root))
    }

    pub fn checked_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.checked_inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, n: i64) -> Self {
        if n < 0 {
            return self
                .checked_inv()
                .expect("negative power of zero")
                .pow(-n);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        result
    }

    /// Substitutes `v = sample` for the formal root of order `root`
    /// (so `q = sample^root`). When `root` is not a multiple of this value's
    /// own root order, fractional powers use the principal branch.
    pub fn eval_numeric(&self, sample: Complex64, root: u32) -> Result<Complex64, ScalarError> {
        let own = self.root();
        let eval = |p: &LaurentPoly| -> Complex64 {
            if root.is_multiple_of(own) {
                p.eval(sample.powi((root / own) as i32))
            } else {
                let ln = sample.ln();
                p.terms()
                    .iter()
                    .map(|(e, c)| c.to_complex() * (ln * (*e as f64 * root as f64 / own as f64)).exp())
                    .sum()
            }
        };
        let d = eval(&self.den);
        if !d.is_finite() || d.norm() < 1e-12 {
            return Err(ScalarError::Pole(sample.to_string()));
        }
        Ok(eval(&self.num) / d)
    }

    /// `{"L": int, "num": [[exp, [re_n, re_d, im_n, im_d]], ...], "den": [...]}`
    pub fn to_json(&self) -> Value {
        let poly = |p: &LaurentPoly| -> Value {
            Value::Array(
                p.terms()
                    .iter()
                    .map(|(e, c)| {
                        json!([
                            e,
                            [
                                int_json(c.re().numer()),
                                int_json(c.re().denom()),
                                int_json(c.im().numer()),
                                int_json(c.im().denom())
                            ]
                        ])
                    })
                    .collect(),
            )
        };
        json!({ "L": self.root(), "num": poly(&self.num), "den": poly(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self, ScalarError> {
        let err = |m: &str| ScalarError::Json(m.to_string());
        let root = v
            .get("L")
            .and_then(Value::as_u64)
            .filter(|&l| l > 0)
            .ok_or_else(|| err("missing L"))? as u32;
        let poly = |key: &str| -> Result<LaurentPoly, ScalarError> {
            let arr = v
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| err(key))?;
            let mut terms = Vec::new();
            for t in arr {
                let e = t.get(0).and_then(Value::as_i64).ok_or_else(|| err("exp"))?;
                let c = t.get(1).and_then(Value::as_array).ok_or_else(|| err("coef"))?;
                if c.len() != 4 {
                    return Err(err("coefficient needs four integers"));
                }
                let n: Vec<BigInt> = c.iter().map(int_from_json).collect::<Result<_, _>>()?;
                if n[1].is_zero() || n[3].is_zero() {
                    return Err(err("zero denominator"));
                }
                let re = BigRational::new(n[0].clone(), n[1].clone());
                let im = BigRational::new(n[2].clone(), n[3].clone());
                terms.push((e, Coefficient::new(re, im)));
            }
            Ok(LaurentPoly::from_terms(root, terms))
        };
        Self::from_fraction(poly("num")?, poly("den")?)
    }

    fn fmt_poly(p: &LaurentPoly, root: u32, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if p.is_zero() {
            return write!(f, "0");
        }
        let var = if root == 1 { "q" } else { "v" };
        for (k, (e, c)) in p.terms().iter().rev().enumerate() {
            let (neg, mag) = if c.is_negative_real() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let unit = mag.is_one();
            if *e == 0 {
                write!(f, "{}", mag)?;
                continue;
            }
            if !unit {
                write!(f, "{}", mag)?;
            }
            if *e == 1 {
                write!(f, "{}", var)?;
            } else {
                write!(f, "{}^{}", var, e)?;
            }
        }
        Ok(())
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

fn int_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(x) => json!(x),
        None => Value::String(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt, ScalarError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| ScalarError::Json(format!("non-integer {}", n))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| ScalarError::Json(format!("bad integer {}", s))),
        _ => Err(ScalarError::Json("expected integer".into())),
    }
}

impl fmt::Display for Scalar {
    /// Laurent string in descending powers, e.g. `-q - q^-1`; values that
    /// need a fractional power of `q` are printed in `v` with `[v^L = q]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = self.root();
        if self.den.is_one() {
            Self::fmt_poly(&self.num, root, f)?;
        } else {
            write!(f, "(")?;
            Self::fmt_poly(&self.num, root, f)?;
            write!(f, ") / (")?;
            Self::fmt_poly(&self.den, root, f)?;
            write!(f, ")")?;
        }
        if root != 1 {
            write!(f, " [v^{} = q]", root)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let root = lcm(self.root(), rhs.root());
        let (an, ad) = self.lifted(root);
        let (bn, bd) = rhs.lifted(root);
        if ad.is_one() && bd.is_one() {
            return Scalar::reduce_root(an.add(&bn), ad);
        }
        if ad == bd {
            return Scalar::canonical(an.add(&bn), ad);
        }
        Scalar::canonical(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let root = lcm(self.root(), rhs.root());
        let (an, ad) = self.lifted(root);
        let (bn, bd) = rhs.lifted(root);
        if ad.is_one() && bd.is_one() {
            return Scalar::reduce_root(an.mul(&bn), ad);
        }
        Scalar::canonical(an.mul(&bn), ad.mul(&bd))
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] to recover.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("scalar division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| &a * &b)
    }
}
