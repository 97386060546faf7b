//! Colored host graphs: r-edge-colorings of `K_{m,n}` and `K_n`.
//!
//! Color ids are 1-based integers in `1..=r`; for two colors the aliases
//! [`RED`]`= 1` and [`BLUE`]`= 2` are fixed project-wide. Vertices are
//! 0-based contiguous integers per class; class membership is positional.
//! Constructors accept raw tables so enumeration loops stay allocation-free;
//! [`ColoringMatrix::validate`] is a separate pass that reports violations
//! instead of aborting.

use serde::{Deserialize, Serialize};
use std::fmt;

/// 1-based color id.
pub type Color = u8;

pub const RED: Color = 1;
pub const BLUE: Color = 2;

/// The two vertex classes of a bipartite host. `Left` is the class of size
/// `m`, `Right` the class of size `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A structural defect found by a validation pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Entry at the named cell is 0 or exceeds `r`.
    ColorOutOfRange { u: usize, v: usize, color: Color },
    /// `colors(u,v) != colors(v,u)` in a complete coloring.
    Asymmetric { u: usize, v: usize },
    /// Diagonal entry of a complete coloring is nonzero.
    SelfLoop { v: usize },
    /// A class is empty or `r < 2`.
    BadDimensions { detail: String },
    /// A code word has the wrong length.
    RaggedWord {
        word: usize,
        len: usize,
        expected: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ColorOutOfRange { u, v, color } => {
                write!(f, "color {color} at cell ({u},{v}) is outside the palette")
            }
            Violation::Asymmetric { u, v } => {
                write!(f, "colors({u},{v}) != colors({v},{u})")
            }
            Violation::SelfLoop { v } => write!(f, "nonzero diagonal entry at vertex {v}"),
            Violation::BadDimensions { detail } => write!(f, "{detail}"),
            Violation::RaggedWord {
                word,
                len,
                expected,
            } => {
                write!(f, "word {word} has length {len}, expected {expected}")
            }
        }
    }
}

/// An r-edge-coloring of the complete bipartite graph `K_{m,n}`.
///
/// Colors are stored in a dense row-major table keyed (left vertex, right
/// vertex), so edge lookup is O(1). Every entry must lie in `1..=r` and the
/// table is fully populated. Instances are immutable in normal use; all
/// operations take shared references.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoringMatrix {
    m: usize,
    n: usize,
    r: Color,
    colors: Vec<Color>,
}

impl ColoringMatrix {
    /// Wraps a raw row-major table. Only the shape is checked; run
    /// [`validate`](Self::validate) to check entries.
    pub fn from_raw(m: usize, n: usize, r: Color, colors: Vec<Color>) -> Self {
        assert_eq!(colors.len(), m * n, "color table must have m*n entries");
        ColoringMatrix { m, n, r, colors }
    }

    /// The monochromatic coloring.
    pub fn filled(m: usize, n: usize, r: Color, color: Color) -> Self {
        ColoringMatrix {
            m,
            n,
            r,
            colors: vec![color; m * n],
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> Color {
        self.r
    }

    pub fn class_size(&self, side: Side) -> usize {
        match side {
            Side::Left => self.m,
            Side::Right => self.n,
        }
    }

    /// Color of the edge between left vertex `u` and right vertex `v`.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        self.colors[u * self.n + v]
    }

    #[inline]
    pub fn set_color(&mut self, u: usize, v: usize, c: Color) {
        self.colors[u * self.n + v] = c;
    }

    /// Row `u` of the table: colors of all edges at left vertex `u`.
    pub fn row(&self, u: usize) -> &[Color] {
        &self.colors[u * self.n..(u + 1) * self.n]
    }

    /// Number of edges at `v` (a vertex of `side`) that carry `color`.
    pub fn degree(&self, side: Side, v: usize, color: Color) -> u64 {
        match side {
            Side::Left => self.row(v).iter().filter(|&&c| c == color).count() as u64,
            Side::Right => (0..self.m).filter(|&u| self.color(u, v) == color).count() as u64,
        }
    }

    /// Per-color degree vector of `v`; index `i` holds the degree in color
    /// `i + 1`. Sums to the opposite class size.
    pub fn degrees(&self, side: Side, v: usize) -> Vec<u64> {
        let mut deg = vec![0u64; self.r as usize];
        match side {
            Side::Left => {
                for &c in self.row(v) {
                    deg[(c - 1) as usize] += 1;
                }
            }
            Side::Right => {
                for u in 0..self.m {
                    deg[(self.color(u, v) - 1) as usize] += 1;
                }
            }
        }
        deg
    }

    /// Reports every invariant violation; empty iff the coloring is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.m == 0 || self.n == 0 || self.r < 2 {
            out.push(Violation::BadDimensions {
                detail: format!(
                    "need m >= 1, n >= 1, r >= 2 (got m={}, n={}, r={})",
                    self.m, self.n, self.r
                ),
            });
        }
        for u in 0..self.m {
            for v in 0..self.n {
                let c = self.color(u, v);
                if c == 0 || c > self.r {
                    out.push(Violation::ColorOutOfRange { u, v, color: c });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

impl fmt::Debug for ColoringMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ColoringMatrix {}x{} r={}", self.m, self.n, self.r)?;
        for u in 0..self.m {
            for v in 0..self.n {
                write!(f, "{} ", self.color(u, v))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// An r-edge-coloring of the complete graph `K_n`, stored as a full
/// symmetric table with an unused zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompleteColoring {
    n: usize,
    r: Color,
    colors: Vec<Color>,
}

impl CompleteColoring {
    /// Wraps a raw full table (must be `n*n` entries). Symmetry and range are
    /// checked by [`validate`](Self::validate), not here.
    pub fn from_raw(n: usize, r: Color, colors: Vec<Color>) -> Self {
        assert_eq!(colors.len(), n * n, "color table must have n*n entries");
        CompleteColoring { n, r, colors }
    }

    pub fn filled(n: usize, r: Color, color: Color) -> Self {
        let mut colors = vec![color; n * n];
        for v in 0..n {
            colors[v * n + v] = 0;
        }
        CompleteColoring { n, r, colors }
    }

    /// Builds from one closure call per unordered pair `u < v`.
    pub fn from_fn(n: usize, r: Color, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let mut cc = CompleteColoring::filled(n, r, 0);
        for u in 0..n {
            for v in (u + 1)..n {
                cc.set_color(u, v, f(u, v));
            }
        }
        cc
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> Color {
        self.r
    }

    /// Color of the edge `{u,v}`, `u != v`.
    #[inline]
    pub fn color(&self, u: usize, v: usize) -> Color {
        debug_assert_ne!(u, v);
        self.colors[u * self.n + v]
    }

    /// Sets both mirrored entries.
    pub fn set_color(&mut self, u: usize, v: usize, c: Color) {
        assert_ne!(u, v, "no self-loops in a complete coloring");
        self.colors[u * self.n + v] = c;
        self.colors[v * self.n + u] = c;
    }

    pub fn degree(&self, v: usize, color: Color) -> u64 {
        (0..self.n)
            .filter(|&w| w != v && self.color(v, w) == color)
            .count() as u64
    }

    /// Per-color degree vector of `v`; sums to `n - 1`.
    pub fn degrees(&self, v: usize) -> Vec<u64> {
        let mut deg = vec![0u64; self.r as usize];
        for w in 0..self.n {
            if w != v {
                let c = self.color(v, w);
                if c >= 1 && (c as usize) <= deg.len() {
                    deg[(c - 1) as usize] += 1;
                }
            }
        }
        deg
    }

    /// Reports every invariant violation: asymmetry, nonzero diagonal,
    /// out-of-range entries, bad dimensions.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.n == 0 || self.r < 2 {
            out.push(Violation::BadDimensions {
                detail: format!("need n >= 1, r >= 2 (got n={}, r={})", self.n, self.r),
            });
        }
        for v in 0..self.n {
            if self.colors[v * self.n + v] != 0 {
                out.push(Violation::SelfLoop { v });
            }
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                let cuv = self.colors[u * self.n + v];
                let cvu = self.colors[v * self.n + u];
                if cuv != cvu {
                    out.push(Violation::Asymmetric { u, v });
                }
                if cuv == 0 || cuv > self.r {
                    out.push(Violation::ColorOutOfRange { u, v, color: cuv });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }
}

impl fmt::Debug for CompleteColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CompleteColoring n={} r={}", self.n, self.r)?;
        for u in 0..self.n {
            for v in 0..self.n {
                write!(f, "{} ", self.colors[u * self.n + v])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
