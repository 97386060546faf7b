//! Degree/codegree statistics for a fixed same-class vertex pair.
//!
//! For vertices `u, v` in one class, `codeg(x, y)` counts the opposite-class
//! vertices `w` whose edge to `u` has color `x` and whose edge to `v` has
//! color `y`. These counts, together with the per-color degrees of `u` and
//! `v`, are the variables of the closed-form path counters.

use crate::coloring::{Color, ColoringMatrix, CompleteColoring, Side, BLUE, RED};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CodegreeError {
    #[error("codegree pair must be two distinct vertices (got {0} twice)")]
    EqualVertices(usize),
    #[error("vertex {v} out of range for class of size {size}")]
    VertexOutOfRange { v: usize, size: usize },
}

/// Exact codegree counts and endpoint degrees for one same-class pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodegreeTable {
    u: usize,
    v: usize,
    r: Color,
    /// Row-major `r x r`: entry `(x-1)*r + (y-1)` is `codeg_{xy}(u,v)`.
    codeg: Vec<u64>,
    deg_u: Vec<u64>,
    deg_v: Vec<u64>,
    opposite_size: u64,
}

impl CodegreeTable {
    pub fn pair(&self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn r(&self) -> Color {
        self.r
    }

    /// `codeg_{xy}(u,v)`: count of `w` with color `x` to `u` and `y` to `v`.
    #[inline]
    pub fn codeg(&self, x: Color, y: Color) -> u64 {
        self.codeg[(x as usize - 1) * self.r as usize + (y as usize - 1)]
    }

    /// Degree of `u` in `color`.
    pub fn deg_u(&self, color: Color) -> u64 {
        self.deg_u[color as usize - 1]
    }

    /// Degree of `v` in `color`.
    pub fn deg_v(&self, color: Color) -> u64 {
        self.deg_v[color as usize - 1]
    }

    /// Size of the opposite class (the common-neighbor pool).
    pub fn opposite_size(&self) -> u64 {
        self.opposite_size
    }

    /// Sum of all codegree entries; equals [`opposite_size`](Self::opposite_size).
    pub fn total(&self) -> u64 {
        self.codeg.iter().sum()
    }

    /// Number of common neighbors joined to `u` and `v` by equal colors.
    pub fn agreeing(&self) -> u64 {
        (1..=self.r).map(|x| self.codeg(x, x)).sum()
    }

    /// Two-color mixed codegree `codeg_RB + codeg_BR`, the `c(u,v)` of the
    /// closed-form counters.
    pub fn mixed(&self) -> u64 {
        self.codeg(RED, BLUE) + self.codeg(BLUE, RED)
    }

    fn from_scan(
        u: usize,
        v: usize,
        r: Color,
        pool: impl Iterator<Item = (Color, Color)>,
    ) -> CodegreeTable {
        let rr = r as usize;
        let mut codeg = vec![0u64; rr * rr];
        let mut deg_u = vec![0u64; rr];
        let mut deg_v = vec![0u64; rr];
        let mut opposite_size = 0u64;
        for (cu, cv) in pool {
            codeg[(cu as usize - 1) * rr + (cv as usize - 1)] += 1;
            deg_u[cu as usize - 1] += 1;
            deg_v[cv as usize - 1] += 1;
            opposite_size += 1;
        }
        CodegreeTable {
            u,
            v,
            r,
            codeg,
            deg_u,
            deg_v,
            opposite_size,
        }
    }
}

/// Scans the whole opposite class of a bipartite coloring for the pair
/// `u, v`, both in `side`.
pub fn codegree_table(
    coloring: &ColoringMatrix,
    side: Side,
    u: usize,
    v: usize,
) -> Result<CodegreeTable, CodegreeError> {
    if u == v {
        return Err(CodegreeError::EqualVertices(u));
    }
    let size = coloring.class_size(side);
    for &x in &[u, v] {
        if x >= size {
            return Err(CodegreeError::VertexOutOfRange { v: x, size });
        }
    }
    let r = coloring.r();
    let table = match side {
        Side::Right => CodegreeTable::from_scan(
            u,
            v,
            r,
            (0..coloring.m()).map(|w| (coloring.color(w, u), coloring.color(w, v))),
        ),
        Side::Left => CodegreeTable::from_scan(
            u,
            v,
            r,
            (0..coloring.n()).map(|w| (coloring.color(u, w), coloring.color(v, w))),
        ),
    };
    Ok(table)
}

/// Complete-graph variant: the pool is every vertex other than `u` and `v`.
pub fn codegree_table_complete(
    cc: &CompleteColoring,
    u: usize,
    v: usize,
) -> Result<CodegreeTable, CodegreeError> {
    if u == v {
        return Err(CodegreeError::EqualVertices(u));
    }
    for &x in &[u, v] {
        if x >= cc.n() {
            return Err(CodegreeError::VertexOutOfRange { v: x, size: cc.n() });
        }
    }
    Ok(CodegreeTable::from_scan(
        u,
        v,
        cc.r(),
        (0..cc.n())
            .filter(|&w| w != u && w != v)
            .map(|w| (cc.color(w, u), cc.color(w, v))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{code_from_coloring, hamming};
    use crate::constructions::random_coloring;

    #[test]
    fn all_red_coloring_concentrates_on_rr() {
        let c = ColoringMatrix::filled(3, 4, 2, RED);
        let t = codegree_table(&c, Side::Right, 0, 2).unwrap();
        assert_eq!(t.codeg(RED, RED), 3);
        assert_eq!(t.codeg(RED, BLUE), 0);
        assert_eq!(t.codeg(BLUE, RED), 0);
        assert_eq!(t.codeg(BLUE, BLUE), 0);
        assert_eq!(t.total(), 3);
    }

    #[test]
    fn complementary_columns_have_pure_mixed_codegrees() {
        // Columns (R,B) and (B,R) on K_{2,2}.
        let c = ColoringMatrix::from_raw(2, 2, 2, vec![RED, BLUE, BLUE, RED]);
        let t = codegree_table(&c, Side::Right, 0, 1).unwrap();
        assert_eq!(t.codeg(RED, BLUE), 1);
        assert_eq!(t.codeg(BLUE, RED), 1);
        assert_eq!(t.codeg(RED, RED), 0);
        assert_eq!(t.codeg(BLUE, BLUE), 0);
        assert_eq!(t.mixed(), 2);
    }

    #[test]
    fn equal_vertices_are_rejected() {
        let c = ColoringMatrix::filled(2, 2, 2, RED);
        assert!(matches!(
            codegree_table(&c, Side::Right, 1, 1),
            Err(CodegreeError::EqualVertices(1))
        ));
    }

    /// Random colorings: row sums, the difference identity
    /// `codeg_BR - codeg_RB = deg_B(u) - deg_B(v)`, and the Hamming link
    /// `dist(c_u, c_v) = m - sum_x codeg_xx`.
    #[test]
    fn random_colorings_satisfy_the_scan_identities() {
        for seed in 0..200 {
            let m = 1 + (seed as usize % 6);
            let n = 2 + (seed as usize % 5);
            let c = random_coloring(m, n, 2, 1000 + seed);
            let code = code_from_coloring(&c);
            for u in 0..n {
                for v in (u + 1)..n {
                    let t = codegree_table(&c, Side::Right, u, v).unwrap();
                    assert_eq!(t.total(), m as u64);
                    let lhs = t.codeg(BLUE, RED) as i64 - t.codeg(RED, BLUE) as i64;
                    let rhs = t.deg_u(BLUE) as i64 - t.deg_v(BLUE) as i64;
                    assert_eq!(lhs, rhs, "seed {seed} pair ({u},{v})");
                    let d = hamming(code.word(u), code.word(v)).unwrap();
                    assert_eq!(d, m as u64 - t.agreeing(), "seed {seed} pair ({u},{v})");
                }
            }
        }
    }

    #[test]
    fn complete_codegree_pool_is_n_minus_two() {
        let cc = CompleteColoring::from_fn(6, 2, |u, v| if (u + v) % 2 == 0 { RED } else { BLUE });
        let t = codegree_table_complete(&cc, 1, 4).unwrap();
        assert_eq!(t.total(), 4);
        let lhs = t.codeg(BLUE, RED) as i64 - t.codeg(RED, BLUE) as i64;
        // Degrees here exclude the edge between u and v itself, so the
        // difference identity picks up a correction from that edge.
        let deg_b_u = t.deg_u(BLUE) as i64;
        let deg_b_v = t.deg_v(BLUE) as i64;
        assert_eq!(lhs, deg_b_u - deg_b_v);
    }
}
