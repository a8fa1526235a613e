//! Cartan data and weight-lattice combinatorics for finite simple types.
//!
//! Weights are integer vectors in the fundamental-weight basis. The simple
//! root `α_j` has coordinates `(a_1j, …, a_rj)` (column `j` of the Cartan
//! matrix, with `a_ij = ⟨H_i, α_j⟩`).

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::scalar::Scalar;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootDataError {
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),
    #[error("matrix is not a Cartan matrix of finite type: {0}")]
    NotFiniteType(String),
    #[error("malformed type string {0:?}")]
    Parse(String),
}

/// Integer coordinates in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank])
    }

    pub fn fundamental(rank: usize, k: usize) -> Self {
        let mut w = vec![0; rank];
        w[k] = 1;
        Self(w)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Parses `"1,0,2"`.
    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        s.split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(Self)
            .map_err(|_| RootDataError::Parse(s.to_string()))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// A character of `P/Q` with values among the fourth roots of unity;
/// `exps[k]` is the power of `i` taken at the fundamental weight `ω_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Character {
    exps: Vec<u8>,
}

impl Character {
    pub fn trivial(rank: usize) -> Self {
        Self {
            exps: vec![0; rank],
        }
    }

    pub fn from_exponents(exps: Vec<u8>) -> Self {
        Self {
            exps: exps.into_iter().map(|e| e % 4).collect(),
        }
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Power of `i` giving `φ(λ)`.
    pub fn exponent_at(&self, w: &Weight) -> u8 {
        let s: i64 = self
            .exps
            .iter()
            .zip(w.coords())
            .map(|(&e, &c)| e as i64 * c)
            .sum();
        s.rem_euclid(4) as u8
    }

    pub fn value(&self, w: &Weight) -> Scalar {
        match self.exponent_at(w) {
            0 => Scalar::one(),
            1 => Scalar::i(),
            2 => Scalar::from_int(-1),
            _ => -Scalar::i(),
        }
    }

    pub fn order(&self) -> u8 {
        (1..=4)
            .find(|m| self.exps.iter().all(|&e| (e as u32 * *m as u32).is_multiple_of(4)))
            .unwrap()
    }

    pub fn mul(&self, other: &Character) -> Character {
        Character::from_exponents(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["1", "i", "-1", "-i"];
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .map(|(k, &e)| format!("w{}->{}", k + 1, names[e as usize]))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    letter: char,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    d: Vec<i64>,
    fw_form: Vec<Vec<Rational>>,
    rho: Weight,
    two_rho_check: Vec<i64>,
    longest_word: Vec<usize>,
    theta: Vec<usize>,
    positive_roots: Vec<Vec<i64>>,
    pq_invariants: Vec<i64>,
    root_order: u32,
}

impl RootDatum {
    /// Builds the datum for a finite simple type, e.g. `('A', 2)`.
    pub fn build(letter: char, rank: usize) -> Result<Self, RootDataError> {
        let cartan = cartan_matrix(letter, rank)?;
        Self::from_cartan(letter, cartan)
    }

    /// Parses `"A2"`, `"B3"`, ….
    pub fn parse(s: &str) -> Result<Self, RootDataError> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| RootDataError::Parse(s.to_string()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| RootDataError::Parse(s.to_string()))?;
        Self::build(letter, rank)
    }

    /// Validates an arbitrary matrix as a finite-type Cartan matrix.
    pub fn from_cartan(letter: char, cartan: Vec<Vec<i64>>) -> Result<Self, RootDataError> {
        let rank = cartan.len();
        if rank == 0 || cartan.iter().any(|r| r.len() != rank) {
            return Err(RootDataError::NotFiniteType("not a square matrix".into()));
        }
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(RootDataError::NotFiniteType("diagonal must be 2".into()));
            }
            for j in 0..rank {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(RootDataError::NotFiniteType(format!(
                        "bad off-diagonal entry at ({i},{j})"
                    )));
                }
            }
        }
        let d = symmetrizer(&cartan)?;
        // positive definiteness of D·A via leading principal minors
        let sym: Vec<Vec<Rational>> = (0..rank)
            .map(|i| (0..rank).map(|j| Rational::from(d[i] * cartan[i][j])).collect())
            .collect();
        for k in 1..=rank {
            let minor: Vec<Vec<Rational>> = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
            if determinant(&minor) <= Rational::zero() {
                return Err(RootDataError::NotFiniteType(
                    "symmetrized matrix is not positive definite".into(),
                ));
            }
        }
        let a_rat: Vec<Vec<Rational>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        let a_inv = rational_inverse(&a_rat).expect("finite-type Cartan matrix is invertible");
        let fw_form: Vec<Vec<Rational>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| a_inv[i][j] * Rational::from(d[i]))
                    .collect()
            })
            .collect();
        let two_rho_check: Vec<i64> = (0..rank)
            .map(|k| {
                let s: Rational = (0..rank).map(|j| a_inv[j][k]).sum::<Rational>() * 2;
                assert!(s.is_integer(), "<2ω, ρ∨> must be integral");
                s.to_integer()
            })
            .collect();
        let lcd = fw_form
            .iter()
            .flatten()
            .fold(1i64, |acc, r| acc.lcm(r.denom()));
        let mut datum = RootDatum {
            letter,
            rank,
            cartan,
            d,
            fw_form,
            rho: Weight(vec![1; rank]),
            two_rho_check,
            longest_word: Vec::new(),
            theta: Vec::new(),
            positive_roots: Vec::new(),
            pq_invariants: Vec::new(),
            root_order: (2 * lcd) as u32,
        };
        datum.positive_roots = datum.compute_positive_roots();
        datum.longest_word = match (letter, rank) {
            ('A', 1) => vec![0],
            ('A', 2) => vec![0, 1, 0],
            ('A', 3) => vec![0, 1, 0, 2, 1, 0],
            _ => datum.search_longest_word(),
        };
        if datum.longest_word.len() != datum.positive_roots.len() {
            return Err(RootDataError::NotFiniteType(
                "longest word length differs from number of positive roots".into(),
            ));
        }
        datum.theta = datum.compute_theta()?;
        datum.pq_invariants = smith_invariants(&datum.cartan);
        Ok(datum)
    }

    pub fn letter(&self) -> char {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn fw_form(&self) -> &[Vec<Rational>] {
        &self.fw_form
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn longest_word(&self) -> &[usize] {
        &self.longest_word
    }

    pub fn theta(&self, i: usize) -> usize {
        self.theta[i]
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Root order `L` with `v^L = q` for every scalar this datum produces.
    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    /// Invariant factors of `P/Q` (trivial factors dropped).
    pub fn pq_invariants(&self) -> &[i64] {
        &self.pq_invariants
    }

    pub fn pq_order(&self) -> i64 {
        self.pq_invariants.iter().product()
    }

    /// `α_j` in fundamental-weight coordinates.
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight((0..self.rank).map(|i| self.cartan[i][j]).collect())
    }

    /// Fundamental-weight coordinates of a root given in simple-root coordinates.
    pub fn root_to_weight(&self, c: &[i64]) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| c[j] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    pub fn form(&self, a: &Weight, b: &Weight) -> Rational {
        let mut s = Rational::zero();
        for i in 0..self.rank {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += self.fw_form[i][j] * (a.0[i] * b.0[j]);
            }
        }
        s
    }

    /// `(α_i, μ) = d_i ⟨μ, α_i^∨⟩`, the exponent of `K_i` on weight `μ`.
    pub fn k_exponent(&self, i: usize, mu: &Weight) -> i64 {
        self.d[i] * mu.0[i]
    }

    /// `⟨2λ, ρ∨⟩`.
    pub fn two_rho_check(&self, w: &Weight) -> i64 {
        w.0.iter().zip(&self.two_rho_check).map(|(a, b)| a * b).sum()
    }

    /// `(λ,λ)/2 + (λ,ρ)`, the exponent of `q` in the half-twist diagonal.
    pub fn j_exponent(&self, w: &Weight) -> Rational {
        self.form(w, w) / 2 + self.form(w, &self.rho)
    }

    /// `(λ,λ) + 2(λ,ρ)`, the Casimir exponent.
    pub fn casimir_exponent(&self, w: &Weight) -> Rational {
        self.form(w, w) + self.form(w, &self.rho) * 2
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let n = w.0[i];
        Weight((0..self.rank).map(|k| w.0[k] - n * self.cartan[k][i]).collect())
    }

    /// `w_0(λ)`, applying the longest word right to left.
    pub fn w0(&self, w: &Weight) -> Weight {
        self.longest_word
            .iter()
            .rev()
            .fold(w.clone(), |acc, &i| self.reflect(i, &acc))
    }

    /// Whether `w` lies in the root lattice.
    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        // coordinates in the simple-root basis are A^{-1} w
        let a: Vec<Vec<Rational>> = self
            .cartan
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
            .collect();
        let inv = rational_inverse(&a).unwrap();
        (0..self.rank).all(|j| {
            (0..self.rank)
                .map(|i| inv[j][i] * w.0[i])
                .sum::<Rational>()
                .is_integer()
        })
    }

    pub fn weyl_dimension(&self, lambda: &Weight) -> u64 {
        let lr = lambda + &self.rho;
        let mut num = Rational::one();
        for beta in &self.positive_roots {
            let bw = self.root_to_weight(beta);
            num *= self.form(&lr, &bw) / self.form(&self.rho, &bw);
        }
        assert!(num.is_integer());
        num.to_integer() as u64
    }

    /// All characters of `P/Q` with values in `{±1, ±i}`.
    pub fn characters(&self) -> Vec<Character> {
        let mut out = Vec::new();
        let total = 4usize.pow(self.rank as u32);
        for code in 0..total {
            let exps: Vec<u8> = (0..self.rank)
                .map(|k| ((code >> (2 * k)) & 3) as u8)
                .collect();
            let ch = Character::from_exponents(exps);
            if (0..self.rank).all(|j| ch.exponent_at(&self.simple_root(j)) == 0) {
                out.push(ch);
            }
        }
        out
    }

    /// Characters `φ` of `P/Q` with `φ²` trivial, trivial character first.
    pub fn order2_characters(&self) -> Vec<Character> {
        self.characters()
            .into_iter()
            .filter(|c| c.order() <= 2)
            .collect()
    }

    /// `λ ↦ (-1)^{⟨2λ, ρ∨⟩}`, the character relating `C` and `X^{-2}`.
    pub fn rho_check_sign_character(&self) -> Character {
        Character::from_exponents(
            self.two_rho_check
                .iter()
                .map(|&n| if n.rem_euclid(2) == 0 { 0 } else { 2 })
                .collect(),
        )
    }

    fn compute_positive_roots(&self) -> Vec<Vec<i64>> {
        let r = self.rank;
        let mut roots: Vec<Vec<i64>> = (0..r)
            .map(|j| (0..r).map(|k| i64::from(k == j)).collect())
            .collect();
        let mut k = 0;
        while k < roots.len() {
            let beta = roots[k].clone();
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| beta[j] * self.cartan[i][j]).sum();
                let mut img = beta.clone();
                img[i] -= pairing;
                if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && !roots.contains(&img)
                {
                    roots.push(img);
                }
            }
            k += 1;
        }
        roots.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum()).then(a.cmp(b)));
        roots
    }

    fn search_longest_word(&self) -> Vec<usize> {
        let mut mu = self.rho.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| mu.0[i] > 0) {
            mu = self.reflect(i, &mu);
            word.push(i);
        }
        word.reverse();
        word
    }

    fn compute_theta(&self) -> Result<Vec<usize>, RootDataError> {
        (0..self.rank)
            .map(|i| {
                let img = self.w0(&self.simple_root(i));
                (0..self.rank)
                    .find(|&j| img == -&self.simple_root(j))
                    .ok_or_else(|| {
                        RootDataError::NotFiniteType("w0 does not negate simple roots".into())
                    })
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let rat = |r: &Rational| -> Value {
            if r.is_integer() {
                json!(r.to_integer())
            } else {
                json!(format!("{}/{}", r.numer(), r.denom()))
            }
        };
        json!({
            "type": self.name(),
            "cartan": self.cartan,
            "d": self.d,
            "fw_form": self.fw_form.iter().map(|r| r.iter().map(rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "rho": self.rho.0,
            "two_rho_check": self.two_rho_check,
            "longest_word": self.longest_word.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "theta": self.theta.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "positive_roots": self.positive_roots,
            "pq_invariants": self.pq_invariants,
            "L": self.root_order,
        })
    }
}

fn cartan_matrix(letter: char, n: usize) -> Result<Vec<Vec<i64>>, RootDataError> {
    let bad = || RootDataError::UnsupportedType(format!("{letter}{n}"));
    let chain = |n: usize| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    };
    let mut a = match letter {
        'A' if n >= 1 => chain(n),
        'B' if n >= 2 => {
            let mut a = chain(n);
            a[n - 1][n - 2] = -2;
            a
        }
        'C' if n >= 2 => {
            let mut a = chain(n);
            a[n - 2][n - 1] = -2;
            a
        }
        'D' if n >= 4 => {
            let mut a = chain(n);
            a[n - 1][n - 2] = 0;
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 3] = -1;
            a[n - 3][n - 1] = -1;
            a
        }
        'E' if (6..=8).contains(&n) => {
            // Bourbaki numbering: 1-3-4-5-6-(7-8), 2 attached to 4
            let mut a = vec![vec![0; n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut edges = vec![(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
            for k in 6..n {
                edges.push((k - 1, k));
            }
            for (i, j) in edges {
                a[i][j] = -1;
                a[j][i] = -1;
            }
            a
        }
        'F' if n == 4 => {
            let mut a = chain(4);
            a[2][1] = -2;
            a
        }
        'G' if n == 2 => vec![vec![2, -1], vec![-3, 2]],
        _ => return Err(bad()),
    };
    if letter == 'A' && n == 1 {
        a = vec![vec![2]];
    }
    Ok(a)
}

/// Positive integers `d_i` with `d_i a_ij` symmetric, normalized so the
/// short roots have `d = 1`.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<i64>, RootDataError> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                let dj = d[i].unwrap() * Rational::new(a[i][j], a[j][i]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(x) if x != dj => {
                        return Err(RootDataError::NotFiniteType("not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(Option::unwrap).collect();
    let min = *d.iter().min().unwrap();
    let scaled: Vec<Rational> = d.iter().map(|x| x / min).collect();
    let l = scaled.iter().fold(1i64, |acc, x| acc.lcm(x.denom()));
    Ok(scaled.iter().map(|x| (x * l).to_integer()).collect())
}

fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                let t = a[c][k] * f;
                a[r][k] -= t;
            }
        }
    }
    det
}

fn rational_inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                for k in 0..2 * n {
                    let t = a[c][k] * f;
                    a[r][k] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Nontrivial invariant factors of the cokernel of an integer matrix.
fn smith_invariants(m: &[Vec<i64>]) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let n = a.len();
    let mut diag = Vec::new();
    for t in 0..n {
        loop {
            // smallest nonzero entry in the trailing block as pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if a[i][j] != 0
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                diag.push(0);
                break;
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..n {
                let f = a[i][t] / p;
                for k in t..n {
                    a[i][k] -= f * a[t][k];
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let f = a[t][j] / p;
                for row in a.iter_mut().skip(t) {
                    let v = row[t];
                    row[j] -= f * v;
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            if let Some((i, _)) = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % p != 0)
            {
                for k in t..n {
                    a[t][k] += a[i][k];
                }
                continue;
            }
            diag.push(p.abs());
            break;
        }
    }
    diag.into_iter().filter(|&x| x != 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_basics() {
        let d = RootDatum::build('A', 1).unwrap();
        assert_eq!(d.cartan(), &[vec![2]]);
        assert_eq!(d.root_order(), 4);
        let w = Weight(vec![1]);
        assert_eq!(d.form(&w, &w), Rational::new(1, 2));
        let alpha = d.simple_root(0);
        assert_eq!(d.form(&alpha, &alpha), Rational::from(2));
    }

    #[test]
    fn a2_form_and_rho_check() {
        let d = RootDatum::build('A', 2).unwrap();
        assert_eq!(
            d.form(&Weight(vec![1, 0]), &Weight(vec![0, 1])),
            Rational::new(1, 3)
        );
        for i in 0..2 {
            // ⟨α_i, ρ∨⟩ = 1 means ⟨2α_i, ρ∨⟩ = 2
            assert_eq!(d.two_rho_check(&d.simple_root(i)), 2);
        }
        assert_eq!(d.root_order(), 6);
    }

    #[test]
    fn a3_longest_word() {
        let d = RootDatum::build('A', 3).unwrap();
        assert_eq!(d.longest_word().len(), 6);
        assert_eq!(d.positive_roots().len(), 6);
        for i in 0..3 {
            assert_eq!(d.w0(&d.simple_root(i)), -&d.simple_root(d.theta(i)));
            assert_eq!(d.theta(i), 2 - i);
        }
        assert_eq!(d.root_order(), 8);
        assert_eq!(d.pq_invariants(), &[4]);
    }

    #[test]
    fn order_two_character_counts() {
        let counts: Vec<usize> = (1..=3)
            .map(|r| RootDatum::build('A', r).unwrap().order2_characters().len())
            .collect();
        assert_eq!(counts, vec![2, 1, 2]);
    }

    #[test]
    fn other_types_build() {
        for (l, n, roots, pq) in [
            ('B', 2, 4, 2),
            ('C', 3, 9, 2),
            ('D', 4, 12, 4),
            ('G', 2, 6, 1),
            ('F', 4, 24, 1),
            ('E', 6, 36, 3),
        ] {
            let d = RootDatum::build(l, n).unwrap();
            assert_eq!(d.positive_roots().len(), roots, "{l}{n}");
            assert_eq!(d.pq_order(), pq, "{l}{n}");
        }
        assert_eq!(RootDatum::build('D', 4).unwrap().pq_invariants(), &[2, 2]);
    }

    #[test]
    fn affine_matrix_rejected() {
        let err = RootDatum::from_cartan('X', vec![vec![2, -2], vec![-2, 2]]);
        assert!(matches!(err, Err(RootDataError::NotFiniteType(_))));
        assert!(RootDatum::build('Q', 2).is_err());
        assert!(RootDatum::build('D', 3).is_err());
    }

    #[test]
    fn weyl_dimensions() {
        let a2 = RootDatum::build('A', 2).unwrap();
        assert_eq!(a2.weyl_dimension(&Weight(vec![1, 1])), 8);
        let a3 = RootDatum::build('A', 3).unwrap();
        assert_eq!(a3.weyl_dimension(&Weight(vec![0, 1, 0])), 6);
        let g2 = RootDatum::build('G', 2).unwrap();
        let dims: Vec<u64> = [vec![1, 0], vec![0, 1]]
            .into_iter()
            .map(|w| g2.weyl_dimension(&Weight(w)))
            .collect();
        assert!(dims.contains(&7) && dims.contains(&14));
    }
}
