//! Half-ribbon tangle diagrams as stacks of elementary slices, and their
//! evaluation to exact operators.

mod eval;

use std::fmt;

use thiserror::Error;

pub use eval::{evaluate, link_invariant, rev_permutation, EvaluationResult, LabelRegistry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn reversed(self) -> Self {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shading {
    Light,
    Dark,
}

impl Shading {
    pub fn flipped(self) -> Self {
        match self {
            Shading::Light => Shading::Dark,
            Shading::Dark => Shading::Light,
        }
    }
}

/// One labeled, directed, shaded interval of a boundary object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub label: String,
    pub dir: Direction,
    pub shading: Shading,
}

impl Interval {
    pub fn new(label: &str, dir: Direction, shading: Shading) -> Self {
        Self {
            label: label.to_string(),
            dir,
            shading,
        }
    }

    pub fn up(label: &str) -> Self {
        Self::new(label, Direction::Up, Shading::Light)
    }

    pub fn down(label: &str) -> Self {
        Self::new(label, Direction::Down, Shading::Light)
    }

    pub fn shaded(mut self) -> Self {
        self.shading = Shading::Dark;
        self
    }

    fn pairs_with(&self, other: &Interval) -> bool {
        self.label == other.label && self.shading == other.shading && self.dir != other.dir
    }
}

/// `V^`, `V_v`, `V#^`, `V#_v`.
impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shade = if self.shading == Shading::Dark { "#" } else { "" };
        let dir = if self.dir == Direction::Up { "^" } else { "_v" };
        write!(f, "{}{shade}{dir}", self.label)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BoundaryObject(pub Vec<Interval>);

impl BoundaryObject {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.0
    }
}

impl fmt::Display for BoundaryObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A single elementary slice. Positions count intervals from the left.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Identity,
    /// Closes the intervals at `at` and `at + 1`.
    Cap { at: usize },
    /// Opens a new pair of intervals at position `at`.
    Cup {
        at: usize,
        left: Interval,
        right: Interval,
    },
    /// `at` and `at + 1` swap; positive means `Flip∘R`.
    Crossing { at: usize, positive: bool },
    /// `n` ribbons twisted together by 180 degrees.
    HalfTwist { at: usize, n: usize, positive: bool },
}

impl Generator {
    pub fn default_cup(at: usize) -> Self {
        Generator::Cup {
            at,
            left: Interval::up("V"),
            right: Interval::down("V"),
        }
    }

    fn shifted(&self, by: usize) -> Self {
        let mut g = self.clone();
        match &mut g {
            Generator::Identity => {}
            Generator::Cap { at }
            | Generator::Cup { at, .. }
            | Generator::Crossing { at, .. }
            | Generator::HalfTwist { at, .. } => *at += by,
        }
        g
    }

    /// Image of the boundary under this slice.
    pub fn apply(&self, obj: &BoundaryObject) -> Result<BoundaryObject, TangleError> {
        let w = obj.width();
        let mut v = obj.0.clone();
        match self {
            Generator::Identity => {}
            Generator::Cap { at } => {
                let at = *at;
                if at.saturating_add(1) >= w {
                    return Err(TangleError::OutOfRange { at, needed: 2, width: w });
                }
                if !v[at].pairs_with(&v[at + 1]) {
                    return Err(TangleError::CapMismatch {
                        at,
                        left: v[at].clone(),
                        right: v[at + 1].clone(),
                    });
                }
                v.drain(at..at + 2);
            }
            Generator::Cup { at, left, right } => {
                if *at > w {
                    return Err(TangleError::OutOfRange { at: *at, needed: 0, width: w });
                }
                if !left.pairs_with(right) {
                    return Err(TangleError::CapMismatch {
                        at: *at,
                        left: left.clone(),
                        right: right.clone(),
                    });
                }
                v.insert(*at, right.clone());
                v.insert(*at, left.clone());
            }
            Generator::Crossing { at, .. } => {
                if at.saturating_add(1) >= w {
                    return Err(TangleError::OutOfRange { at: *at, needed: 2, width: w });
                }
                v.swap(*at, at + 1);
            }
            Generator::HalfTwist { at, n, .. } => {
                if *n == 0 || at.saturating_add(*n) > w {
                    return Err(TangleError::OutOfRange { at: *at, needed: (*n).max(1), width: w });
                }
                v[*at..at + n].reverse();
                for iv in &mut v[*at..at + n] {
                    iv.shading = iv.shading.flipped();
                }
            }
        }
        Ok(BoundaryObject(v))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Identity => write!(f, "id"),
            Generator::Cap { at } => write!(f, "cap@{at}"),
            Generator::Cup { at, left, right } => {
                if *self == Generator::default_cup(*at) {
                    write!(f, "cup@{at}")
                } else {
                    write!(f, "cup({left} {right})@{at}")
                }
            }
            Generator::Crossing { at, positive } => {
                write!(f, "x{}@{at}", if *positive { '+' } else { '-' })
            }
            Generator::HalfTwist { at, n, positive } => {
                write!(f, "h{}({n})@{at}", if *positive { '+' } else { '-' })
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangleError {
    #[error("generator at {at} needs {needed} intervals but the object has width {width}")]
    OutOfRange { at: usize, needed: usize, width: usize },
    #[error("intervals {left} and {right} at {at} cannot be joined by a cap or cup")]
    CapMismatch {
        at: usize,
        left: Interval,
        right: Interval,
    },
    #[error("boundary mismatch at interval {index}: {found} does not match {expected}")]
    BoundaryMismatch {
        index: usize,
        expected: String,
        found: String,
    },
    #[error("diagram is not closed")]
    NotClosed,
    #[error("unknown label {0}")]
    UnknownLabel(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Module(#[from] crate::qmodule::ModuleError),
}

/// A diagram from `source` to `target`, read bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    source: BoundaryObject,
    target: BoundaryObject,
    slices: Vec<Generator>,
}

impl Diagram {
    pub fn identity(obj: BoundaryObject) -> Self {
        Self {
            target: obj.clone(),
            source: obj,
            slices: Vec::new(),
        }
    }

    pub fn empty() -> Self {
        Self::identity(BoundaryObject::empty())
    }

    pub fn from_slices(
        source: BoundaryObject,
        slices: impl IntoIterator<Item = Generator>,
    ) -> Result<Self, TangleError> {
        let mut d = Self::identity(source);
        for g in slices {
            d.push(g)?;
        }
        Ok(d)
    }

    pub fn push(&mut self, g: Generator) -> Result<(), TangleError> {
        self.target = g.apply(&self.target)?;
        self.slices.push(g);
        Ok(())
    }

    pub fn source(&self) -> &BoundaryObject {
        &self.source
    }

    pub fn target(&self) -> &BoundaryObject {
        &self.target
    }

    pub fn slices(&self) -> &[Generator] {
        &self.slices
    }

    pub fn is_closed(&self) -> bool {
        self.source.is_empty() && self.target.is_empty()
    }

    /// Intermediate boundary objects, `source` first and `target` last.
    pub fn boundaries(&self) -> Vec<BoundaryObject> {
        let mut out = vec![self.source.clone()];
        for g in &self.slices {
            let next = g.apply(out.last().unwrap()).expect("checked on push");
            out.push(next);
        }
        out
    }

    pub fn has_half_twists(&self) -> bool {
        self.slices
            .iter()
            .any(|g| matches!(g, Generator::HalfTwist { .. }))
    }

    /// Every label used anywhere in the diagram.
    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .boundaries()
            .iter()
            .flat_map(|b| b.0.iter().map(|i| i.label.clone()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Signed framing count in half-units: crossings count ±2 according to
    /// the relative orientation of their strands, and a half-twist on `n`
    /// ribbons counts its `n(n-1)/2` crossings plus `±1` per ribbon.
    fn framing_halves(&self) -> i64 {
        let mut total = 0;
        let mut obj = self.source.clone();
        for g in &self.slices {
            match g {
                Generator::Crossing { at, positive } => {
                    let s = if *positive { 1 } else { -1 };
                    let same = obj.0[*at].dir == obj.0[at + 1].dir;
                    total += 2 * s * if same { 1 } else { -1 };
                }
                Generator::HalfTwist { at, n, positive } => {
                    let s = if *positive { 1 } else { -1 };
                    let strands = &obj.0[*at..at + n];
                    for a in 0..*n {
                        for b in a + 1..*n {
                            let same = strands[a].dir == strands[b].dir;
                            total += 2 * s * if same { 1 } else { -1 };
                        }
                    }
                    total += s * *n as i64;
                }
                _ => {}
            }
            obj = g.apply(&obj).expect("checked on push");
        }
        total
    }

    /// Writhe of a closed diagram, with single-ribbon half-twists counted
    /// as half a unit of framing each.
    pub fn writhe(&self) -> Result<i64, TangleError> {
        if !self.is_closed() {
            return Err(TangleError::NotClosed);
        }
        let h = self.framing_halves();
        assert!(h % 2 == 0, "closed diagram with an odd number of half-twists");
        Ok(h / 2)
    }

    /// Number of connected components: closed loops plus open arcs.
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = Vec::new();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let n = p[c];
                p[c] = r;
                c = n;
            }
            r
        }
        let fresh = |p: &mut Vec<usize>| {
            p.push(p.len());
            p.len() - 1
        };
        let mut ids: Vec<usize> = (0..self.source.width()).map(|_| fresh(&mut parent)).collect();
        for g in &self.slices {
            match g {
                Generator::Identity => {}
                Generator::Cap { at } => {
                    let (a, b) = (find(&mut parent, ids[*at]), find(&mut parent, ids[at + 1]));
                    parent[a] = b;
                    ids.drain(*at..at + 2);
                }
                Generator::Cup { at, .. } => {
                    let id = fresh(&mut parent);
                    ids.insert(*at, id);
                    ids.insert(*at, id);
                }
                Generator::Crossing { at, .. } => ids.swap(*at, at + 1),
                Generator::HalfTwist { at, n, .. } => ids[*at..at + n].reverse(),
            }
        }
        let mut roots: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
        roots.sort();
        roots.dedup();
        roots.len()
    }
}

/// `d2 ∘ d1`: `d1` below, `d2` stacked on top.
pub fn compose(d1: &Diagram, d2: &Diagram) -> Result<Diagram, TangleError> {
    let (t, s) = (d1.target(), d2.source());
    for k in 0..t.width().max(s.width()) {
        let (a, b) = (t.0.get(k), s.0.get(k));
        if a != b {
            let show = |x: Option<&Interval>| x.map_or("nothing".to_string(), ToString::to_string);
            return Err(TangleError::BoundaryMismatch {
                index: k,
                expected: show(a),
                found: show(b),
            });
        }
    }
    let mut out = d1.clone();
    for g in &d2.slices {
        out.push(g.clone())?;
    }
    Ok(out)
}

/// Horizontal juxtaposition: `d1`'s slices run first beside the identity on
/// `d2`'s source, then `d2`'s slices run shifted past `d1`'s target.
pub fn tensor_diag(d1: &Diagram, d2: &Diagram) -> Diagram {
    let mut src = d1.source.0.clone();
    src.extend(d2.source.0.iter().cloned());
    let mut out = Diagram::identity(BoundaryObject(src));
    for g in &d1.slices {
        out.push(g.clone()).expect("left factor stays well formed");
    }
    let shift = d1.target.width();
    for g in &d2.slices {
        out.push(g.shifted(shift)).expect("right factor stays well formed");
    }
    out
}

/// The closure of a braid word on `n` upward strands. Letters are
/// `(generator index from 1, positive)`.
pub fn braid_closure(n: usize, word: &[(usize, bool)], label: &str) -> Result<Diagram, TangleError> {
    let mut d = Diagram::empty();
    for _ in 0..n {
        d.push(Generator::Cup {
            at: d.target().width() / 2,
            left: Interval::up(label),
            right: Interval::down(label),
        })?;
    }
    for &(i, positive) in word {
        if i == 0 || i >= n {
            return Err(TangleError::OutOfRange {
                at: i,
                needed: 2,
                width: n,
            });
        }
        d.push(Generator::Crossing { at: i - 1, positive })?;
    }
    for _ in 0..n {
        d.push(Generator::Cap {
            at: d.target().width() / 2 - 1,
        })?;
    }
    Ok(d)
}

#[cfg(test)]
mod tests;
