//! Exact counters for alternating paths and walks.
//!
//! Closed-form counters cover lengths 2-4 and the length-5 objective; a
//! transfer dynamic program counts alternating walks of any length for any
//! number of colors; a depth-first enumerator counts (and optionally lists)
//! distinct-vertex paths under an explicit work budget; and for two colors
//! the whole problem reduces to directed walks in an orientation of the
//! host.
//!
//! Counter outputs are 128-bit: walk counts grow like `(mn)^(len/2)` and
//! overflow 64 bits at desk scale. The closed-form length-3 and length-4
//! counters follow a fixed repetition convention: length 3 forces all four
//! vertices distinct automatically, while length 4 allows the two outer
//! right-class vertices to coincide. The distinct-vertex flavor is a
//! separate operation, never silently substituted.

use crate::codegree::{codegree_table, CodegreeTable};
use crate::coloring::{Color, ColoringMatrix, CompleteColoring, Side, BLUE, RED};
use crate::paths::{BiVertex, Flavor, PathKind, PathRecord};
use num::rational::Ratio;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("vertices must be distinct (got {0} twice)")]
    EqualVertices(usize),
    #[error("vertex {v} out of range for class of size {size}")]
    VertexOutOfRange { v: usize, size: usize },
    #[error("operation requires exactly 2 colors, coloring has {0}")]
    TwoColorsOnly(Color),
    #[error("operation requires at least {need} left-class vertices, got {got}")]
    TooFewLeftVertices { need: usize, got: usize },
    #[error("bound requires n >= 2, got {0}")]
    DegenerateRightClass(usize),
    #[error("walk length must be at least 1")]
    ZeroLength,
    #[error("endpoint classes do not match the parity of length {len}")]
    ParityMismatch { len: usize },
    #[error("distinct-vertex enumeration cannot join a vertex to itself")]
    EqualEndpoints,
    #[error("work budget of {budget} extension steps exceeded")]
    BudgetExceeded { budget: u64 },
}

/// Extension-step allowance for exhaustive path enumeration. The number of
/// alternating paths grows exponentially in the length, so running out of
/// budget is an explicit error, never a silent zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorkBudget(pub u64);

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget(100_000_000)
    }
}

fn check_right_pair(c: &ColoringMatrix, u: usize, v: usize) -> Result<(), CountError> {
    if u == v {
        return Err(CountError::EqualVertices(u));
    }
    for &x in &[u, v] {
        if x >= c.n() {
            return Err(CountError::VertexOutOfRange { v: x, size: c.n() });
        }
    }
    Ok(())
}

/// Number of alternating 2-paths between right-class vertices `u` and `v`:
/// the middles `w` with `color(w,u) != color(w,v)`. Equals the Hamming
/// distance of the two code words.
pub fn count_alt_2paths(c: &ColoringMatrix, u: usize, v: usize) -> Result<u64, CountError> {
    check_right_pair(c, u, v)?;
    Ok((0..c.m())
        .filter(|&w| c.color(w, u) != c.color(w, v))
        .count() as u64)
}

/// Complete-graph variant: middles range over all vertices other than the
/// endpoints.
pub fn count_alt_2paths_complete(
    cc: &CompleteColoring,
    u: usize,
    v: usize,
) -> Result<u64, CountError> {
    if u == v {
        return Err(CountError::EqualVertices(u));
    }
    for &x in &[u, v] {
        if x >= cc.n() {
            return Err(CountError::VertexOutOfRange { v: x, size: cc.n() });
        }
    }
    Ok((0..cc.n())
        .filter(|&w| w != u && w != v && cc.color(w, u) != cc.color(w, v))
        .count() as u64)
}

fn pairs_product(deg: &[u64]) -> u128 {
    // sum_{i<j} deg_i deg_j = ((sum deg)^2 - sum deg^2) / 2
    let total: u128 = deg.iter().map(|&d| d as u128).sum();
    let squares: u128 = deg.iter().map(|&d| (d as u128) * (d as u128)).sum();
    (total * total - squares) / 2
}

/// Alternating 2-paths whose middle vertex is the left-class vertex `w`:
/// the number of differently-colored edge pairs at `w`.
pub fn middle_vertex_2path_count(c: &ColoringMatrix, w: usize) -> u128 {
    pairs_product(&c.degrees(Side::Left, w))
}

/// Complete-graph variant of [`middle_vertex_2path_count`].
pub fn middle_vertex_2path_count_complete(cc: &CompleteColoring, w: usize) -> u128 {
    pairs_product(&cc.degrees(w))
}

/// Exact rational cap on the minimum pair 2-path count over any r-coloring
/// of `K_{m,n}`: `(1 - 1/r)(1 + 1/(n-1)) m`. Callers floor it for an
/// integer bound.
pub fn kappa2_upper_bound(m: usize, n: usize, r: Color) -> Result<Ratio<u64>, CountError> {
    if n < 2 {
        return Err(CountError::DegenerateRightClass(n));
    }
    let num = m as u64 * n as u64 * (r as u64 - 1);
    let den = r as u64 * (n as u64 - 1);
    Ok(Ratio::new(num, den))
}

fn require_two_colors(c: &ColoringMatrix) -> Result<(), CountError> {
    if c.r() != 2 {
        return Err(CountError::TwoColorsOnly(c.r()));
    }
    Ok(())
}

fn p3_from_table(t: &CodegreeTable) -> u128 {
    let rb = t.codeg(RED, BLUE) as u128;
    let br = t.codeg(BLUE, RED) as u128;
    let (ru, bu) = (t.deg_u(RED) as u128, t.deg_u(BLUE) as u128);
    let (rv, bv) = (t.deg_v(RED) as u128, t.deg_v(BLUE) as u128);
    // red-blue-red through the ordered pair, plus blue-red-blue.
    rb * rv + ru * br + br * bv + bu * rb
}

/// Alternating 3-paths through the fixed left-class pair `u < v`, from the
/// closed form in degrees and codegrees. With two colors the alternation
/// constraints force all four vertices distinct, so this equals the
/// distinct-vertex count for the pair.
pub fn p3_through(c: &ColoringMatrix, u: usize, v: usize) -> Result<u128, CountError> {
    require_two_colors(c)?;
    if u == v {
        return Err(CountError::EqualVertices(u));
    }
    let t = codegree_table(c, Side::Left, u, v).map_err(|_| CountError::VertexOutOfRange {
        v: u.max(v),
        size: c.m(),
    })?;
    Ok(p3_from_table(&t))
}

/// Total alternating 3-paths of a 2-coloring, summed over left-class pairs.
pub fn total_alt_p3(c: &ColoringMatrix) -> Result<u128, CountError> {
    require_two_colors(c)?;
    let mut total = 0u128;
    for u in 0..c.m() {
        for v in (u + 1)..c.m() {
            let t = codegree_table(c, Side::Left, u, v).expect("valid pair");
            total += p3_from_table(&t);
        }
    }
    Ok(total)
}

/// Total alternating 4-walks with both endpoints in the right class, from
/// the closed form. The two outer right-class vertices may coincide; the
/// two color patterns are red-blue-red-blue and blue-red-blue-red read from
/// the lower-indexed left vertex.
pub fn total_alt_p4(c: &ColoringMatrix) -> Result<u128, CountError> {
    require_two_colors(c)?;
    let mut total = 0u128;
    for u in 0..c.m() {
        for v in (u + 1)..c.m() {
            let t = codegree_table(c, Side::Left, u, v).expect("valid pair");
            let rb = t.codeg(RED, BLUE) as u128;
            let br = t.codeg(BLUE, RED) as u128;
            total += t.deg_u(RED) as u128 * br * t.deg_v(BLUE) as u128
                + t.deg_u(BLUE) as u128 * rb * t.deg_v(RED) as u128;
        }
    }
    Ok(total)
}

/// The six-term objective bounding alternating 5-paths, evaluated on the
/// coloring's actual degrees and codegrees and summed over ordered triples
/// `u < w < v` of left-class vertices. It dominates the distinct-vertex
/// 5-path count: the only repetition it admits is the two outermost
/// right-class vertices coinciding.
pub fn alt5_objective(c: &ColoringMatrix) -> Result<u128, CountError> {
    require_two_colors(c)?;
    let m = c.m();
    if m < 3 {
        return Err(CountError::TooFewLeftVertices { need: 3, got: m });
    }
    // Precompute one table per ordered-by-index pair.
    let mut tables: Vec<Vec<Option<CodegreeTable>>> = vec![vec![None; m]; m];
    for a in 0..m {
        for b in (a + 1)..m {
            tables[a][b] = Some(codegree_table(c, Side::Left, a, b).expect("valid pair"));
        }
    }
    let deg_r: Vec<u128> = (0..m)
        .map(|w| c.degree(Side::Left, w, RED) as u128)
        .collect();
    let deg_b: Vec<u128> = (0..m)
        .map(|w| c.degree(Side::Left, w, BLUE) as u128)
        .collect();
    let codeg = |a: usize, b: usize, x: Color, y: Color| -> u128 {
        // codeg_{xy}(a,b) with the first color at the lower-indexed vertex.
        if a < b {
            tables[a][b].as_ref().unwrap().codeg(x, y) as u128
        } else {
            tables[b][a].as_ref().unwrap().codeg(y, x) as u128
        }
    };
    let mut total = 0u128;
    for u in 0..m {
        for w in (u + 1)..m {
            for v in (w + 1)..m {
                let term = codeg(u, w, BLUE, RED) * codeg(w, v, BLUE, RED) * (deg_r[u] + deg_b[v])
                    + codeg(u, w, RED, BLUE) * codeg(w, v, RED, BLUE) * (deg_b[u] + deg_r[v])
                    + codeg(u, w, RED, BLUE) * codeg(u, v, BLUE, RED) * (deg_r[w] + deg_b[v])
                    + codeg(u, w, BLUE, RED) * codeg(u, v, RED, BLUE) * (deg_b[w] + deg_r[v])
                    + codeg(u, v, BLUE, RED) * codeg(w, v, RED, BLUE) * (deg_r[u] + deg_b[w])
                    + codeg(u, v, RED, BLUE) * codeg(w, v, BLUE, RED) * (deg_b[u] + deg_r[w]);
                total += term;
            }
        }
    }
    Ok(total)
}

fn check_bivertex(c: &ColoringMatrix, x: BiVertex) -> Result<(), CountError> {
    let size = c.class_size(x.side);
    if x.id >= size {
        return Err(CountError::VertexOutOfRange { v: x.id, size });
    }
    Ok(())
}

fn check_parity(a: BiVertex, b: BiVertex, len: usize) -> Result<(), CountError> {
    if len == 0 {
        return Err(CountError::ZeroLength);
    }
    let same_side = a.side == b.side;
    if same_side != (len % 2 == 0) {
        return Err(CountError::ParityMismatch { len });
    }
    Ok(())
}

/// Number of alternating walks with exactly `len` edges from `a` to `b`,
/// by dynamic programming over (vertex, color of last edge). Works for any
/// number of colors; vertices may repeat.
pub fn count_alt_walks(
    c: &ColoringMatrix,
    a: BiVertex,
    b: BiVertex,
    len: usize,
) -> Result<u128, CountError> {
    check_bivertex(c, a)?;
    check_bivertex(c, b)?;
    check_parity(a, b, len)?;
    let r = c.r() as usize;
    // state[v][col-1]: walks ending at v (on the current side) whose last
    // edge has color col.
    let mut side = a.side.opposite();
    let mut state = vec![vec![0u128; r]; c.class_size(side)];
    for (w, row) in state.iter_mut().enumerate() {
        let col = match side {
            Side::Left => c.color(w, a.id),
            Side::Right => c.color(a.id, w),
        };
        row[(col - 1) as usize] = 1;
    }
    for _ in 1..len {
        let next_side = side.opposite();
        let mut next = vec![vec![0u128; r]; c.class_size(next_side)];
        let totals: Vec<u128> = state.iter().map(|row| row.iter().sum()).collect();
        for (x, next_row) in next.iter_mut().enumerate() {
            for (w, row) in state.iter().enumerate() {
                let col = match side {
                    Side::Left => c.color(w, x),
                    Side::Right => c.color(x, w),
                };
                let idx = (col - 1) as usize;
                next_row[idx] += totals[w] - row[idx];
            }
        }
        state = next;
        side = next_side;
    }
    debug_assert_eq!(side, b.side);
    Ok(state[b.id].iter().sum())
}

/// Complete-graph variant of [`count_alt_walks`].
pub fn count_alt_walks_complete(
    cc: &CompleteColoring,
    a: usize,
    b: usize,
    len: usize,
) -> Result<u128, CountError> {
    if len == 0 {
        return Err(CountError::ZeroLength);
    }
    for &x in &[a, b] {
        if x >= cc.n() {
            return Err(CountError::VertexOutOfRange { v: x, size: cc.n() });
        }
    }
    let r = cc.r() as usize;
    let n = cc.n();
    let mut state = vec![vec![0u128; r]; n];
    for w in 0..n {
        if w != a {
            state[w][(cc.color(a, w) - 1) as usize] = 1;
        }
    }
    for _ in 1..len {
        let mut next = vec![vec![0u128; r]; n];
        let totals: Vec<u128> = state.iter().map(|row| row.iter().sum()).collect();
        for (x, next_row) in next.iter_mut().enumerate() {
            for (w, row) in state.iter().enumerate() {
                if w == x {
                    continue;
                }
                let idx = (cc.color(w, x) - 1) as usize;
                next_row[idx] += totals[w] - row[idx];
            }
        }
        state = next;
    }
    Ok(state[b].iter().sum())
}

struct BipartiteDfs<'a> {
    c: &'a ColoringMatrix,
    target: BiVertex,
    len: usize,
    used_left: Vec<bool>,
    used_right: Vec<bool>,
    verts: Vec<usize>,
    cols: Vec<Color>,
    count: u128,
    steps: u64,
    budget: u64,
    out: Option<Vec<PathRecord>>,
    start: Side,
}

impl BipartiteDfs<'_> {
    fn record(&mut self) {
        self.count += 1;
        if let Some(out) = self.out.as_mut() {
            out.push(PathRecord {
                vertices: self.verts.clone(),
                colors: self.cols.clone(),
                flavor: Flavor::Path,
                kind: PathKind::Bipartite { start: self.start },
            });
        }
    }

    fn extend(&mut self, side: Side, v: usize, depth: usize) -> Result<(), CountError> {
        let next_side = side.opposite();
        let last = self.cols.last().copied();
        let host = self.c;
        let color_to = move |w: usize| match side {
            Side::Left => host.color(v, w),
            Side::Right => host.color(w, v),
        };
        if depth + 1 == self.len {
            // Final step: only the target is admissible.
            self.steps += 1;
            if self.steps > self.budget {
                return Err(CountError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            debug_assert_eq!(next_side, self.target.side);
            let w = self.target.id;
            let col = color_to(w);
            if Some(col) != last {
                self.verts.push(w);
                self.cols.push(col);
                self.record();
                self.verts.pop();
                self.cols.pop();
            }
            return Ok(());
        }
        let opp_size = self.c.class_size(next_side);
        for w in 0..opp_size {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(CountError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            let used = match next_side {
                Side::Left => self.used_left[w],
                Side::Right => self.used_right[w],
            };
            if used {
                continue;
            }
            let col = color_to(w);
            if Some(col) == last {
                continue;
            }
            match next_side {
                Side::Left => self.used_left[w] = true,
                Side::Right => self.used_right[w] = true,
            }
            self.verts.push(w);
            self.cols.push(col);
            let res = self.extend(next_side, w, depth + 1);
            self.verts.pop();
            self.cols.pop();
            match next_side {
                Side::Left => self.used_left[w] = false,
                Side::Right => self.used_right[w] = false,
            }
            res?;
        }
        Ok(())
    }
}

fn run_bipartite_dfs(
    c: &ColoringMatrix,
    a: BiVertex,
    b: BiVertex,
    len: usize,
    budget: WorkBudget,
    collect: bool,
) -> Result<(u128, Vec<PathRecord>), CountError> {
    check_bivertex(c, a)?;
    check_bivertex(c, b)?;
    check_parity(a, b, len)?;
    if a.side == b.side && a.id == b.id {
        return Err(CountError::EqualEndpoints);
    }
    let mut used_left = vec![false; c.m()];
    let mut used_right = vec![false; c.n()];
    for x in [a, b] {
        match x.side {
            Side::Left => used_left[x.id] = true,
            Side::Right => used_right[x.id] = true,
        }
    }
    let mut dfs = BipartiteDfs {
        c,
        target: b,
        len,
        used_left,
        used_right,
        verts: vec![a.id],
        cols: Vec::new(),
        count: 0,
        steps: 0,
        budget: budget.0,
        out: collect.then(Vec::new),
        start: a.side,
    };
    dfs.extend(a.side, a.id, 0)?;
    Ok((dfs.count, dfs.out.unwrap_or_default()))
}

/// Exact count of distinct-vertex alternating paths with `len` edges from
/// `a` to `b`, by depth-first enumeration. Exceeding the work budget is an
/// explicit error, distinguishable from a zero count.
pub fn count_alt_paths_exact(
    c: &ColoringMatrix,
    a: BiVertex,
    b: BiVertex,
    len: usize,
    budget: WorkBudget,
) -> Result<u128, CountError> {
    run_bipartite_dfs(c, a, b, len, budget, false).map(|(count, _)| count)
}

/// As [`count_alt_paths_exact`], returning the paths themselves. Every
/// record validates against the host.
pub fn enumerate_alt_paths(
    c: &ColoringMatrix,
    a: BiVertex,
    b: BiVertex,
    len: usize,
    budget: WorkBudget,
) -> Result<Vec<PathRecord>, CountError> {
    run_bipartite_dfs(c, a, b, len, budget, true).map(|(_, paths)| paths)
}

struct CompleteDfs<'a> {
    cc: &'a CompleteColoring,
    target: usize,
    len: usize,
    used: Vec<bool>,
    verts: Vec<usize>,
    cols: Vec<Color>,
    count: u128,
    steps: u64,
    budget: u64,
    out: Option<Vec<PathRecord>>,
}

impl CompleteDfs<'_> {
    fn extend(&mut self, v: usize, depth: usize) -> Result<(), CountError> {
        let last = self.cols.last().copied();
        if depth + 1 == self.len {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(CountError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            let w = self.target;
            let col = self.cc.color(v, w);
            if Some(col) != last {
                self.verts.push(w);
                self.cols.push(col);
                self.count += 1;
                if let Some(out) = self.out.as_mut() {
                    out.push(PathRecord {
                        vertices: self.verts.clone(),
                        colors: self.cols.clone(),
                        flavor: Flavor::Path,
                        kind: PathKind::Complete,
                    });
                }
                self.verts.pop();
                self.cols.pop();
            }
            return Ok(());
        }
        for w in 0..self.cc.n() {
            self.steps += 1;
            if self.steps > self.budget {
                return Err(CountError::BudgetExceeded {
                    budget: self.budget,
                });
            }
            if self.used[w] || w == v {
                continue;
            }
            let col = self.cc.color(v, w);
            if Some(col) == last {
                continue;
            }
            self.used[w] = true;
            self.verts.push(w);
            self.cols.push(col);
            let res = self.extend(w, depth + 1);
            self.verts.pop();
            self.cols.pop();
            self.used[w] = false;
            res?;
        }
        Ok(())
    }
}

fn run_complete_dfs(
    cc: &CompleteColoring,
    a: usize,
    b: usize,
    len: usize,
    budget: WorkBudget,
    collect: bool,
) -> Result<(u128, Vec<PathRecord>), CountError> {
    if len == 0 {
        return Err(CountError::ZeroLength);
    }
    if a == b {
        return Err(CountError::EqualEndpoints);
    }
    for &x in &[a, b] {
        if x >= cc.n() {
            return Err(CountError::VertexOutOfRange { v: x, size: cc.n() });
        }
    }
    let mut used = vec![false; cc.n()];
    used[a] = true;
    used[b] = true;
    let mut dfs = CompleteDfs {
        cc,
        target: b,
        len,
        used,
        verts: vec![a],
        cols: Vec::new(),
        count: 0,
        steps: 0,
        budget: budget.0,
        out: collect.then(Vec::new),
    };
    dfs.extend(a, 0)?;
    Ok((dfs.count, dfs.out.unwrap_or_default()))
}

/// Complete-graph variant of [`count_alt_paths_exact`].
pub fn count_alt_paths_exact_complete(
    cc: &CompleteColoring,
    a: usize,
    b: usize,
    len: usize,
    budget: WorkBudget,
) -> Result<u128, CountError> {
    run_complete_dfs(cc, a, b, len, budget, false).map(|(count, _)| count)
}

/// Complete-graph variant of [`enumerate_alt_paths`].
pub fn enumerate_alt_paths_complete(
    cc: &CompleteColoring,
    a: usize,
    b: usize,
    len: usize,
    budget: WorkBudget,
) -> Result<Vec<PathRecord>, CountError> {
    run_complete_dfs(cc, a, b, len, budget, true).map(|(_, paths)| paths)
}

/// The orientation of a 2-colored `K_{m,n}`: red edges point from the right
/// class to the left class, blue edges the other way. Alternating walks
/// between two vertices correspond to directed walks between them, one
/// orientation per traversal direction.
#[derive(Clone, Debug)]
pub struct OrientedBipartiteDigraph {
    m: usize,
    n: usize,
    /// `to_left[u * n + v]`: the arc between left `u` and right `v` points
    /// right-to-left (the edge is red).
    to_left: Vec<bool>,
}

impl OrientedBipartiteDigraph {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether the arc between left `u` and right `v` points into the left
    /// class.
    pub fn points_left(&self, u: usize, v: usize) -> bool {
        self.to_left[u * self.n + v]
    }

    /// Directed walks with exactly `len` arcs from `a` to `b`, by repeated
    /// application of the adjacency map to a unit vector.
    pub fn directed_walk_count(&self, a: BiVertex, b: BiVertex, len: usize) -> u128 {
        let mut left = vec![0u128; self.m];
        let mut right = vec![0u128; self.n];
        match a.side {
            Side::Left => left[a.id] = 1,
            Side::Right => right[a.id] = 1,
        }
        for _ in 0..len {
            let mut next_left = vec![0u128; self.m];
            let mut next_right = vec![0u128; self.n];
            for u in 0..self.m {
                for v in 0..self.n {
                    if self.to_left[u * self.n + v] {
                        next_left[u] += right[v];
                    } else {
                        next_right[v] += left[u];
                    }
                }
            }
            left = next_left;
            right = next_right;
        }
        match b.side {
            Side::Left => left[b.id],
            Side::Right => right[b.id],
        }
    }
}

/// Orients a 2-coloring: red right-to-left, blue left-to-right.
pub fn to_digraph(c: &ColoringMatrix) -> Result<OrientedBipartiteDigraph, CountError> {
    require_two_colors(c)?;
    let mut to_left = vec![false; c.m() * c.n()];
    for u in 0..c.m() {
        for v in 0..c.n() {
            to_left[u * c.n() + v] = c.color(u, v) == RED;
        }
    }
    Ok(OrientedBipartiteDigraph {
        m: c.m(),
        n: c.n(),
        to_left,
    })
}

/// One pair's count in a [`WalkCountTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairCount {
    pub a: BiVertex,
    pub b: BiVertex,
    pub count: u128,
}

/// Per-pair counts of alternating walks or paths of one length, over the
/// relevant pairs for that length's parity: right-class pairs for even
/// lengths, cross-class pairs for odd ones.
#[derive(Clone, Debug)]
pub struct WalkCountTable {
    pub len: usize,
    pub flavor: Flavor,
    pub entries: Vec<PairCount>,
}

impl WalkCountTable {
    pub fn min_count(&self) -> Option<u128> {
        self.entries.iter().map(|e| e.count).min()
    }

    pub fn max_count(&self) -> Option<u128> {
        self.entries.iter().map(|e| e.count).max()
    }
}

/// Builds the per-pair count table for a bipartite coloring.
pub fn pair_count_table(
    c: &ColoringMatrix,
    len: usize,
    flavor: Flavor,
    budget: WorkBudget,
) -> Result<WalkCountTable, CountError> {
    if len == 0 {
        return Err(CountError::ZeroLength);
    }
    let mut entries = Vec::new();
    if len % 2 == 0 {
        for u in 0..c.n() {
            for v in (u + 1)..c.n() {
                let (a, b) = (BiVertex::right(u), BiVertex::right(v));
                let count = match flavor {
                    Flavor::Walk => count_alt_walks(c, a, b, len)?,
                    Flavor::Path => count_alt_paths_exact(c, a, b, len, budget)?,
                };
                entries.push(PairCount { a, b, count });
            }
        }
    } else {
        for u in 0..c.m() {
            for v in 0..c.n() {
                let (a, b) = (BiVertex::left(u), BiVertex::right(v));
                let count = match flavor {
                    Flavor::Walk => count_alt_walks(c, a, b, len)?,
                    Flavor::Path => count_alt_paths_exact(c, a, b, len, budget)?,
                };
                entries.push(PairCount { a, b, count });
            }
        }
    }
    Ok(WalkCountTable {
        len,
        flavor,
        entries,
    })
}
