//! Explicit colorings and the matching-chain builder for internally
//! disjoint alternating path families.
//!
//! The chain builder takes a path pattern as a [`BlockSpec`]: an ordered
//! list of pairwise disjoint internal-vertex blocks, plus the required
//! colors of the two endpoint edges. Consecutive blocks are joined by
//! maximum matchings of alternating colors, computed left to right; each
//! matching is restricted to the survivors of the previous stage, so the
//! family size equals the size of the last (and smallest) matching and the
//! emitted paths are internally disjoint by construction.

use crate::coloring::{Color, ColoringMatrix, CompleteColoring, Side, BLUE, RED};
use crate::matching::{max_matching, BipartiteSubgraphView, MatchError};
use crate::paths::{Flavor, PathKind, PathRecord};
use crate::rng::stream_rng;
use rand::Rng;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("left class must be even, got m={0}")]
    OddLeftClass(usize),
    #[error("need n >= m >= 2k (got m={m}, n={n}, k={k})")]
    SplitTooSmall { m: usize, n: usize, k: usize },
    #[error("red matching needs n >= m, got m={m}, n={n}")]
    NotEnoughRightVertices { m: usize, n: usize },
    #[error("path length {len} needs {expected} blocks, spec has {got}")]
    WrongBlockCount {
        len: usize,
        expected: usize,
        got: usize,
    },
    #[error(
        "endpoint colors {first} and {last} are inconsistent with alternation over length {len}"
    )]
    IncompatiblePattern {
        first: Color,
        last: Color,
        len: usize,
    },
    #[error("blocks {i} and {j} share vertex {vertex}")]
    BlocksOverlap { i: usize, j: usize, vertex: usize },
    #[error("block {block} contains an endpoint vertex {vertex}")]
    BlockHitsEndpoint { block: usize, vertex: usize },
    #[error(
        "vertex {vertex} in block {block} is not joined to the endpoint by the required color"
    )]
    BlockColorMismatch { block: usize, vertex: usize },
    #[error("vertex {vertex} out of range for class of size {size}")]
    VertexOutOfRange { vertex: usize, size: usize },
    #[error("chain length must be at least 2, got {0}")]
    LengthTooShort(usize),
    #[error(transparent)]
    Match(#[from] MatchError),
}

/// Uniform i.i.d. r-coloring of `K_{m,n}`. Identical seeds give identical
/// matrices.
pub fn random_coloring(m: usize, n: usize, r: Color, seed: u64) -> ColoringMatrix {
    random_coloring_rng(m, n, r, &mut stream_rng(seed, 0))
}

/// As [`random_coloring`] but drawing from a caller-provided stream.
pub fn random_coloring_rng(m: usize, n: usize, r: Color, rng: &mut impl Rng) -> ColoringMatrix {
    let colors = (0..m * n).map(|_| rng.random_range(1..=r)).collect();
    ColoringMatrix::from_raw(m, n, r, colors)
}

/// Uniform i.i.d. symmetric r-coloring of `K_n`.
pub fn random_complete_coloring(n: usize, r: Color, seed: u64) -> CompleteColoring {
    random_complete_coloring_rng(n, r, &mut stream_rng(seed, 0))
}

pub fn random_complete_coloring_rng(n: usize, r: Color, rng: &mut impl Rng) -> CompleteColoring {
    CompleteColoring::from_fn(n, r, |_, _| rng.random_range(1..=r))
}

/// The two-block coloring: halve both classes, color matched halves red and
/// crossing pairs blue. Odd sizes put the extra vertex in the first half.
pub fn block_coloring(m: usize, n: usize) -> ColoringMatrix {
    let m1 = m.div_ceil(2);
    let n1 = n.div_ceil(2);
    let mut c = ColoringMatrix::filled(m, n, 2, BLUE);
    for u in 0..m {
        for v in 0..n {
            if (u < m1) == (v < n1) {
                c.set_color(u, v, RED);
            }
        }
    }
    c
}

/// A 2-coloring whose right class splits into a random zone and a constant
/// balanced tail.
#[derive(Clone, Debug)]
pub struct BalancedSplitColoring {
    pub coloring: ColoringMatrix,
    /// Right-class vertices `0..random_cols` carry i.i.d. uniform columns;
    /// vertices from `random_cols` on all share one balanced column.
    pub random_cols: usize,
}

/// Colors `M x {0..m}` i.i.d. uniform red/blue and gives every remaining
/// right vertex the same balanced column (first half red, second half
/// blue), so those vertices have equal red and blue degrees.
///
/// Requires `n >= m >= 2k` and even `m`; a balanced column is impossible
/// otherwise.
pub fn balanced_split_coloring(
    m: usize,
    n: usize,
    k: usize,
    seed: u64,
) -> Result<BalancedSplitColoring, ConstructError> {
    if m % 2 != 0 {
        return Err(ConstructError::OddLeftClass(m));
    }
    if k == 0 || m < 2 * k || n < m {
        return Err(ConstructError::SplitTooSmall { m, n, k });
    }
    let mut rng = stream_rng(seed, 0);
    let mut c = ColoringMatrix::filled(m, n, 2, RED);
    for u in 0..m {
        for v in 0..m {
            c.set_color(u, v, rng.random_range(1..=2));
        }
        let shared = if u < m / 2 { RED } else { BLUE };
        for v in m..n {
            c.set_color(u, v, shared);
        }
    }
    Ok(BalancedSplitColoring {
        coloring: c,
        random_cols: m,
    })
}

/// Red on one matching saturating the left class, blue everywhere else.
pub fn odd_path_coloring(m: usize, n: usize) -> Result<ColoringMatrix, ConstructError> {
    if n < m {
        return Err(ConstructError::NotEnoughRightVertices { m, n });
    }
    let mut c = ColoringMatrix::filled(m, n, 2, BLUE);
    for u in 0..m {
        c.set_color(u, u, RED);
    }
    Ok(c)
}

/// Ordered internal-vertex blocks for one chain, with the required colors
/// of the first and last path edges. For a bipartite chain of length `2k`
/// the `2k - 1` blocks alternate left, right, left, ..., left; for a
/// complete-host chain of length `len` all `len - 1` blocks live in the one
/// vertex class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSpec {
    pub blocks: Vec<Vec<usize>>,
    pub first_color: Color,
    pub last_color: Color,
}

impl BlockSpec {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// The chain can never yield more paths than its smallest block.
    pub fn min_block_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).min().unwrap_or(0)
    }
}

/// The two complementary endpoint patterns for one vertex pair. Either may
/// be absent when the host has no vertices of the required colors.
#[derive(Clone, Debug, Default)]
pub struct BlockSpecPair {
    pub unprimed: Option<BlockSpec>,
    pub primed: Option<BlockSpec>,
}

impl BlockSpecPair {
    pub fn iter(&self) -> impl Iterator<Item = &BlockSpec> {
        self.unprimed.iter().chain(self.primed.iter())
    }
}

fn flip(c: Color) -> Color {
    if c == RED {
        BLUE
    } else {
        RED
    }
}

/// Takes up to `want` vertices from `pool`, consuming them.
fn carve(pool: &mut Vec<usize>, want: usize) -> Vec<usize> {
    let take = want.min(pool.len());
    pool.drain(..take).collect()
}

fn assemble(
    x_blocks: Vec<Vec<usize>>,
    y_blocks: Vec<Vec<usize>>,
    first_color: Color,
    last_color: Color,
) -> Option<BlockSpec> {
    let mut blocks = Vec::with_capacity(x_blocks.len() + y_blocks.len());
    let mut ys = y_blocks.into_iter();
    for (i, x) in x_blocks.into_iter().enumerate() {
        if i > 0 {
            blocks.push(ys.next()?);
        }
        blocks.push(x);
    }
    if blocks.iter().any(Vec::is_empty) {
        return None;
    }
    Some(BlockSpec {
        blocks,
        first_color,
        last_color,
    })
}

/// Greedily carves chain blocks for the right-class pair `u, v` of a
/// 2-colored bipartite host, for paths of length `2k`.
///
/// When `random_cols` marks a balanced-tail host and both endpoints sit in
/// the tail (so they share one color column), a single pattern with blocks
/// of size `m/k` is carved: the first block from the vertices blue to `u`,
/// the last from those red to `v`, middles from the rest of the left class.
/// Otherwise both complementary patterns are carved with blocks of size
/// `m/(2k)`: endpoint blocks from the matching codegree classes, middles
/// from what remains of those classes. Cross-class blocks come from the
/// random zone (all of the right class when `random_cols` is `None`),
/// excluding the endpoints. A pattern whose blocks cannot all be made
/// nonempty is reported as absent rather than an error.
pub fn auto_blockspec(
    c: &ColoringMatrix,
    u: usize,
    v: usize,
    k: usize,
    random_cols: Option<usize>,
) -> BlockSpecPair {
    if k == 0 || u == v || u >= c.n() || v >= c.n() {
        return BlockSpecPair::default();
    }
    let m = c.m();
    let y_limit = random_cols.unwrap_or(c.n());
    let mut y_pool: Vec<usize> = (0..y_limit).filter(|&y| y != u && y != v).collect();

    let shared_tail = random_cols.is_some_and(|nc| u >= nc && v >= nc);
    if shared_tail {
        let s = m / k;
        if s == 0 {
            return BlockSpecPair::default();
        }
        let mut blue_at_u: Vec<usize> = (0..m).filter(|&w| c.color(w, u) == BLUE).collect();
        let x_start = carve(&mut blue_at_u, s);
        let mut red_at_v: Vec<usize> = (0..m)
            .filter(|&w| c.color(w, v) == RED && !x_start.contains(&w))
            .collect();
        let x_end = carve(&mut red_at_v, s);
        let mut rest: Vec<usize> = (0..m)
            .filter(|&w| !x_start.contains(&w) && !x_end.contains(&w))
            .collect();
        let mut x_blocks = vec![x_start];
        for _ in 0..k.saturating_sub(2) {
            x_blocks.push(carve(&mut rest, s));
        }
        x_blocks.push(x_end);
        let y_blocks: Vec<Vec<usize>> = (0..k - 1).map(|_| carve(&mut y_pool, s)).collect();
        return BlockSpecPair {
            unprimed: assemble(x_blocks, y_blocks, BLUE, RED),
            primed: None,
        };
    }

    let s = m / (2 * k);
    if s == 0 {
        return BlockSpecPair::default();
    }
    let class = |cu: Color, cv: Color| -> Vec<usize> {
        (0..m)
            .filter(|&w| c.color(w, u) == cu && c.color(w, v) == cv)
            .collect()
    };
    let (mut br, mut rr, mut rb, mut bb) = (
        class(BLUE, RED),
        class(RED, RED),
        class(RED, BLUE),
        class(BLUE, BLUE),
    );

    let family = |start_pool: &mut Vec<usize>,
                  end_pool: &mut Vec<usize>,
                  y_pool: &mut Vec<usize>,
                  first: Color,
                  last: Color|
     -> Option<BlockSpec> {
        let x_start = carve(start_pool, s);
        let x_end = carve(end_pool, s);
        let mut mids_pool: Vec<usize> = start_pool.drain(..).chain(end_pool.drain(..)).collect();
        mids_pool.sort_unstable();
        let mut x_blocks = vec![x_start];
        for _ in 0..k.saturating_sub(2) {
            x_blocks.push(carve(&mut mids_pool, s));
        }
        x_blocks.push(x_end);
        let y_blocks: Vec<Vec<usize>> = (0..k - 1).map(|_| carve(y_pool, s)).collect();
        assemble(x_blocks, y_blocks, first, last)
    };

    let unprimed = family(&mut br, &mut rr, &mut y_pool, BLUE, RED);
    let primed = family(&mut rb, &mut bb, &mut y_pool, RED, BLUE);
    BlockSpecPair { unprimed, primed }
}

/// Complete-host variant of [`auto_blockspec`] for paths of length `len`.
/// The endpoint-block color pattern follows the parity of `len`: blue/red
/// and red/blue for even lengths, blue/blue and red/red for odd ones.
pub fn auto_blockspec_complete(
    cc: &CompleteColoring,
    u: usize,
    v: usize,
    len: usize,
) -> BlockSpecPair {
    if len < 2 || u == v || u >= cc.n() || v >= cc.n() {
        return BlockSpecPair::default();
    }
    let s = cc.n() / (2 * (len - 1));
    if s == 0 {
        return BlockSpecPair::default();
    }
    let class = |cu: Color, cv: Color| -> Vec<usize> {
        (0..cc.n())
            .filter(|&w| w != u && w != v && cc.color(w, u) == cu && cc.color(w, v) == cv)
            .collect()
    };
    let (mut br, mut rr, mut rb, mut bb) = (
        class(BLUE, RED),
        class(RED, RED),
        class(RED, BLUE),
        class(BLUE, BLUE),
    );

    let family = |start_pool: &mut Vec<usize>,
                  end_pool: &mut Vec<usize>,
                  first: Color,
                  last: Color|
     -> Option<BlockSpec> {
        let x_start = carve(start_pool, s);
        let x_end = carve(end_pool, s);
        let mut mids_pool: Vec<usize> = start_pool.drain(..).chain(end_pool.drain(..)).collect();
        mids_pool.sort_unstable();
        let mut blocks = vec![x_start];
        for _ in 0..len.saturating_sub(3) {
            blocks.push(carve(&mut mids_pool, s));
        }
        blocks.push(x_end);
        if blocks.iter().any(Vec::is_empty) {
            return None;
        }
        Some(BlockSpec {
            blocks,
            first_color: first,
            last_color: last,
        })
    };

    if len % 2 == 0 {
        BlockSpecPair {
            unprimed: family(&mut br, &mut rr, BLUE, RED),
            primed: family(&mut rb, &mut bb, RED, BLUE),
        }
    } else {
        BlockSpecPair {
            unprimed: family(&mut br, &mut bb, BLUE, BLUE),
            primed: family(&mut rb, &mut rr, RED, RED),
        }
    }
}

/// Expected color of path edge `idx` (0-based) under strict alternation.
fn edge_color(first: Color, idx: usize) -> Color {
    if idx % 2 == 0 {
        first
    } else {
        flip(first)
    }
}

fn check_pattern(spec: &BlockSpec, len: usize) -> Result<(), ConstructError> {
    if len < 2 {
        return Err(ConstructError::LengthTooShort(len));
    }
    if spec.blocks.len() != len - 1 {
        return Err(ConstructError::WrongBlockCount {
            len,
            expected: len - 1,
            got: spec.blocks.len(),
        });
    }
    if edge_color(spec.first_color, len - 1) != spec.last_color {
        return Err(ConstructError::IncompatiblePattern {
            first: spec.first_color,
            last: spec.last_color,
            len,
        });
    }
    Ok(())
}

fn check_disjoint<'a>(
    blocks: impl Iterator<Item = (usize, &'a Vec<usize>)> + Clone,
) -> Result<(), ConstructError> {
    let list: Vec<(usize, &Vec<usize>)> = blocks.collect();
    for (pos_a, (i, block_a)) in list.iter().enumerate() {
        for (j, block_b) in list.iter().skip(pos_a + 1).map(|&(j, b)| (j, b)) {
            if let Some(&vertex) = block_a.iter().find(|w| block_b.contains(w)) {
                return Err(ConstructError::BlocksOverlap { i: *i, j, vertex });
            }
        }
    }
    Ok(())
}

/// Composes the stage matchings of one validated chain. `view_for(i, from)`
/// builds the color-filtered view between the stage-`i-1` survivors `from`
/// and block `i`. Returns, per completed chain, the internal vertices in
/// path order.
fn run_chain(
    spec: &BlockSpec,
    mut view_for: impl FnMut(usize, &[usize]) -> Result<BipartiteSubgraphView, MatchError>,
) -> Result<Vec<Vec<usize>>, ConstructError> {
    let stages = spec.blocks.len() - 1;
    let mut survivors: Vec<usize> = spec.blocks[0].clone();
    let mut links: Vec<std::collections::HashMap<usize, usize>> = Vec::with_capacity(stages);
    for i in 1..=stages {
        let view = view_for(i, &survivors)?;
        let matching = max_matching(&view);
        let mut back = std::collections::HashMap::with_capacity(matching.edges.len());
        let mut next = Vec::with_capacity(matching.edges.len());
        for (a, b) in matching.edges {
            back.insert(b, a);
            next.push(b);
        }
        next.sort_unstable();
        links.push(back);
        survivors = next;
        if survivors.is_empty() {
            break;
        }
    }
    if links.len() < stages {
        return Ok(Vec::new());
    }
    // Restricting each stage to the previous survivors makes stage sizes
    // non-increasing, so the family size is their minimum.
    debug_assert_eq!(
        Some(survivors.len()),
        links
            .iter()
            .map(|m| m.len())
            .min()
            .or(Some(survivors.len()))
    );
    let mut chains = Vec::with_capacity(survivors.len());
    for &last in &survivors {
        let mut chain = vec![last];
        let mut cur = last;
        for back in links.iter().rev() {
            cur = back[&cur];
            chain.push(cur);
        }
        chain.reverse();
        chains.push(chain);
    }
    Ok(chains)
}

/// Materializes a family of internally disjoint alternating paths of length
/// `2k` between right-class vertices `u` and `v`, by composing color
/// matchings along the block chain. The family size is the minimum of the
/// chained matching sizes; every returned record validates against the
/// host.
pub fn matching_chain_paths(
    c: &ColoringMatrix,
    u: usize,
    v: usize,
    k: usize,
    spec: &BlockSpec,
) -> Result<Vec<PathRecord>, ConstructError> {
    let len = 2 * k;
    check_pattern(spec, len)?;
    for &x in &[u, v] {
        if x >= c.n() {
            return Err(ConstructError::VertexOutOfRange {
                vertex: x,
                size: c.n(),
            });
        }
    }
    // Blocks at even positions are left-class, odd positions right-class.
    for (i, block) in spec.blocks.iter().enumerate() {
        let side = if i % 2 == 0 { Side::Left } else { Side::Right };
        let size = c.class_size(side);
        for &w in block {
            if w >= size {
                return Err(ConstructError::VertexOutOfRange { vertex: w, size });
            }
            if side == Side::Right && (w == u || w == v) {
                return Err(ConstructError::BlockHitsEndpoint {
                    block: i,
                    vertex: w,
                });
            }
        }
    }
    check_disjoint(spec.blocks.iter().enumerate().filter(|(i, _)| i % 2 == 0))?;
    check_disjoint(spec.blocks.iter().enumerate().filter(|(i, _)| i % 2 == 1))?;
    for &w in &spec.blocks[0] {
        if c.color(w, u) != spec.first_color {
            return Err(ConstructError::BlockColorMismatch {
                block: 0,
                vertex: w,
            });
        }
    }
    let last_idx = spec.blocks.len() - 1;
    for &w in &spec.blocks[last_idx] {
        if c.color(w, v) != spec.last_color {
            return Err(ConstructError::BlockColorMismatch {
                block: last_idx,
                vertex: w,
            });
        }
    }

    let chains = run_chain(spec, |i, from| {
        let want = edge_color(spec.first_color, i);
        let from_side = if (i - 1) % 2 == 0 {
            Side::Left
        } else {
            Side::Right
        };
        BipartiteSubgraphView::from_coloring(
            c,
            from_side,
            from.to_vec(),
            spec.blocks[i].clone(),
            Some(want),
        )
    })?;

    let records = chains
        .into_iter()
        .map(|internals| {
            let mut vertices = Vec::with_capacity(len + 1);
            vertices.push(u);
            vertices.extend(&internals);
            vertices.push(v);
            let mut colors = Vec::with_capacity(len);
            for e in 0..len {
                let a = vertices[e];
                let b = vertices[e + 1];
                // Even path positions sit in the right class (u is right).
                let col = if e % 2 == 0 {
                    c.color(b, a)
                } else {
                    c.color(a, b)
                };
                colors.push(col);
            }
            PathRecord {
                vertices,
                colors,
                flavor: Flavor::Path,
                kind: PathKind::Bipartite { start: Side::Right },
            }
        })
        .collect();
    Ok(records)
}

/// Complete-host chain builder for paths of length `len` between `u` and
/// `v`.
pub fn matching_chain_paths_complete(
    cc: &CompleteColoring,
    u: usize,
    v: usize,
    len: usize,
    spec: &BlockSpec,
) -> Result<Vec<PathRecord>, ConstructError> {
    check_pattern(spec, len)?;
    for &x in &[u, v] {
        if x >= cc.n() {
            return Err(ConstructError::VertexOutOfRange {
                vertex: x,
                size: cc.n(),
            });
        }
    }
    for (i, block) in spec.blocks.iter().enumerate() {
        for &w in block {
            if w >= cc.n() {
                return Err(ConstructError::VertexOutOfRange {
                    vertex: w,
                    size: cc.n(),
                });
            }
            if w == u || w == v {
                return Err(ConstructError::BlockHitsEndpoint {
                    block: i,
                    vertex: w,
                });
            }
        }
    }
    check_disjoint(spec.blocks.iter().enumerate())?;
    for &w in &spec.blocks[0] {
        if cc.color(w, u) != spec.first_color {
            return Err(ConstructError::BlockColorMismatch {
                block: 0,
                vertex: w,
            });
        }
    }
    let last_idx = spec.blocks.len() - 1;
    for &w in &spec.blocks[last_idx] {
        if cc.color(w, v) != spec.last_color {
            return Err(ConstructError::BlockColorMismatch {
                block: last_idx,
                vertex: w,
            });
        }
    }

    let chains = run_chain(spec, |i, from| {
        let want = edge_color(spec.first_color, i);
        BipartiteSubgraphView::from_complete(cc, from.to_vec(), spec.blocks[i].clone(), Some(want))
    })?;

    let records = chains
        .into_iter()
        .map(|internals| {
            let mut vertices = Vec::with_capacity(len + 1);
            vertices.push(u);
            vertices.extend(&internals);
            vertices.push(v);
            let colors = (0..len)
                .map(|e| cc.color(vertices[e], vertices[e + 1]))
                .collect();
            PathRecord {
                vertices,
                colors,
                flavor: Flavor::Path,
                kind: PathKind::Complete,
            }
        })
        .collect();
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_alt_paths_exact;
    use crate::counting::WorkBudget;
    use crate::paths::BiVertex;
    use std::collections::HashSet;

    #[test]
    fn random_coloring_is_seed_deterministic() {
        let a = random_coloring(5, 7, 3, 42);
        let b = random_coloring(5, 7, 3, 42);
        assert_eq!(a, b);
        assert_ne!(a, random_coloring(5, 7, 3, 43));
        assert!(a.is_valid());
    }

    #[test]
    fn random_coloring_color_frequencies_concentrate() {
        // 3-sigma binomial check at mn = 10^6, r = 2.
        let c = random_coloring(1000, 1000, 2, 7);
        let reds: u64 = (0..1000).map(|u| c.degree(Side::Left, u, RED)).sum();
        let mean = 500_000.0;
        let sigma = (1_000_000.0f64 * 0.25).sqrt();
        assert!((reds as f64 - mean).abs() <= 3.0 * sigma, "reds = {reds}");
    }

    #[test]
    fn block_coloring_smallest_instance() {
        let c = block_coloring(2, 2);
        assert_eq!(
            (c.color(0, 0), c.color(0, 1), c.color(1, 0), c.color(1, 1)),
            (RED, BLUE, BLUE, RED)
        );
        // Color classes partition all mn edges.
        let c = block_coloring(5, 6);
        let reds: u64 = (0..5).map(|u| c.degree(Side::Left, u, RED)).sum();
        let blues: u64 = (0..5).map(|u| c.degree(Side::Left, u, BLUE)).sum();
        assert_eq!(reds + blues, 30);
    }

    #[test]
    fn block_coloring_cross_pairs_get_quarter_mn_three_paths() {
        let (m, n) = (8, 8);
        let c = block_coloring(m, n);
        let target = (m / 2) * (n / 2);
        for v in 0..n {
            for u in 0..m {
                let count = count_alt_paths_exact(
                    &c,
                    BiVertex::right(v),
                    BiVertex::left(u),
                    3,
                    WorkBudget::default(),
                )
                .unwrap();
                assert!(
                    count >= target as u128,
                    "pair ({u},{v}): {count} < {target}"
                );
            }
        }
    }

    #[test]
    fn balanced_split_shape() {
        let split = balanced_split_coloring(6, 10, 2, 9).unwrap();
        let c = &split.coloring;
        assert_eq!(split.random_cols, 6);
        // Tail columns share one balanced vector.
        for v in 6..10 {
            assert_eq!(c.degree(Side::Right, v, RED), 3);
            assert_eq!(c.degree(Side::Right, v, BLUE), 3);
            for u in 0..6 {
                assert_eq!(c.color(u, v), c.color(u, 6));
            }
        }
        assert!(matches!(
            balanced_split_coloring(5, 10, 2, 1),
            Err(ConstructError::OddLeftClass(5))
        ));
        assert!(matches!(
            balanced_split_coloring(4, 10, 3, 1),
            Err(ConstructError::SplitTooSmall { .. })
        ));
    }

    #[test]
    fn balanced_split_random_zone_concentrates() {
        let split = balanced_split_coloring(200, 300, 2, 11).unwrap();
        let c = &split.coloring;
        let red_edges: u64 = (0..200)
            .map(|u| (0..200).filter(|&v| c.color(u, v) == RED).count() as u64)
            .sum();
        let mean = 20_000.0;
        let sigma = (40_000.0f64 * 0.25).sqrt();
        assert!(
            (red_edges as f64 - mean).abs() <= 3.0 * sigma,
            "red zone edges {red_edges}"
        );
    }

    #[test]
    fn odd_path_coloring_is_a_red_matching() {
        let c = odd_path_coloring(3, 4).unwrap();
        let mut total_red = 0;
        for u in 0..3 {
            assert_eq!(c.degree(Side::Left, u, RED), 1);
            total_red += c.degree(Side::Left, u, RED);
        }
        for v in 0..4 {
            assert!(c.degree(Side::Right, v, RED) <= 1);
        }
        assert_eq!(total_red, 3);
        // Alternating 3-paths exist between every cross pair.
        for u in 0..3 {
            for v in 0..4 {
                let count = count_alt_paths_exact(
                    &c,
                    BiVertex::left(u),
                    BiVertex::right(v),
                    3,
                    WorkBudget::default(),
                )
                .unwrap();
                assert!(count >= 1, "pair ({u},{v})");
            }
        }
        assert!(odd_path_coloring(4, 3).is_err());
    }

    #[test]
    fn complete_coloring_determinism() {
        let a = random_complete_coloring(30, 3, 5);
        assert_eq!(a, random_complete_coloring(30, 3, 5));
        assert!(a.is_valid());
    }

    #[test]
    fn complete_codegree_classes_concentrate() {
        use crate::codegree::codegree_table_complete;
        let n = 200usize;
        let cc = random_complete_coloring(n, 2, 13);
        let slack = 5.0 * (n as f64).sqrt();
        let center = 0.25 * n as f64;
        for (u, v) in [(0usize, 1usize), (5, 140), (80, 81), (3, 199), (60, 61)] {
            let t = codegree_table_complete(&cc, u, v).unwrap();
            for x in [RED, BLUE] {
                for y in [RED, BLUE] {
                    let size = t.codeg(x, y) as f64;
                    assert!(
                        (size - center).abs() <= slack,
                        "pair ({u},{v}) class ({x},{y}): {size}"
                    );
                }
            }
        }
    }

    #[test]
    fn degenerate_chain_takes_all_compatible_middles() {
        let split = balanced_split_coloring(8, 12, 2, 3).unwrap();
        let c = &split.coloring;
        let (u, v) = (0usize, 1usize);
        // k = 1: one block of middles, blue to u and red to v.
        let block: Vec<usize> = (0..8)
            .filter(|&w| c.color(w, u) == BLUE && c.color(w, v) == RED)
            .collect();
        let expected = block.len();
        let spec = BlockSpec {
            blocks: vec![block],
            first_color: BLUE,
            last_color: RED,
        };
        let paths = matching_chain_paths(c, u, v, 1, &spec).unwrap();
        assert_eq!(paths.len(), expected);
        for p in &paths {
            p.check_bipartite(c).unwrap();
            assert_eq!(p.len(), 2);
        }
    }

    #[test]
    fn incompatible_patterns_are_rejected() {
        let c = random_coloring(4, 6, 2, 1);
        // Length 2 forces first != last.
        let spec = BlockSpec {
            blocks: vec![vec![0]],
            first_color: RED,
            last_color: RED,
        };
        assert!(matches!(
            matching_chain_paths(&c, 0, 1, 1, &spec),
            Err(ConstructError::IncompatiblePattern { .. })
        ));
        // Wrong block count for k = 2.
        let spec = BlockSpec {
            blocks: vec![vec![0]],
            first_color: BLUE,
            last_color: RED,
        };
        assert!(matches!(
            matching_chain_paths(&c, 0, 1, 2, &spec),
            Err(ConstructError::WrongBlockCount { .. })
        ));
    }

    #[test]
    fn overlapping_blocks_are_rejected() {
        let c = random_coloring(6, 8, 2, 2);
        let pair = auto_blockspec(&c, 0, 1, 2, None);
        if let Some(mut spec) = pair.unprimed {
            // Force an overlap between the two left-class blocks.
            if let Some(&w) = spec.blocks[0].first() {
                spec.blocks[2] = vec![w];
                assert!(matches!(
                    matching_chain_paths(&c, 0, 1, 2, &spec),
                    Err(ConstructError::BlocksOverlap { .. })
                        | Err(ConstructError::BlockColorMismatch { .. })
                ));
            }
        }
    }

    #[test]
    fn auto_blockspec_on_all_red_has_no_unprimed_family() {
        let c = ColoringMatrix::filled(6, 6, 2, RED);
        let pair = auto_blockspec(&c, 0, 1, 2, None);
        assert!(pair.unprimed.is_none());
        assert!(pair.primed.is_none()); // blue-to-v block is empty too
    }

    #[test]
    fn auto_blockspec_blocks_are_disjoint_and_sized() {
        let c = random_coloring(64, 64, 2, 17);
        let pair = auto_blockspec(&c, 0, 1, 2, None);
        let mut seen_left = HashSet::new();
        let mut seen_right = HashSet::new();
        for spec in pair.iter() {
            for (i, block) in spec.blocks.iter().enumerate() {
                for &w in block {
                    let fresh = if i % 2 == 0 {
                        seen_left.insert(w)
                    } else {
                        seen_right.insert(w)
                    };
                    assert!(fresh, "vertex {w} reused across blocks");
                }
            }
        }
        // Target size m/(2k) = 16 per block, reachable at this scale for
        // most classes; at minimum every block is nonempty.
        for spec in pair.iter() {
            assert!(spec.min_block_size() >= 1);
            assert!(spec.blocks.iter().all(|b| b.len() <= 16));
        }
    }

    #[test]
    fn chain_families_are_internally_disjoint_and_validate() {
        let split = balanced_split_coloring(40, 60, 2, 21).unwrap();
        let c = &split.coloring;
        for (u, v) in [(50usize, 55usize), (0, 1), (2, 52)] {
            let pair = auto_blockspec(c, u, v, 2, Some(split.random_cols));
            let mut family = Vec::new();
            for spec in pair.iter() {
                let paths = matching_chain_paths(c, u, v, 2, spec).unwrap();
                // Chain-size law: yield equals the last-stage matching size,
                // which is the minimum over stages.
                assert!(paths.len() <= spec.min_block_size());
                family.extend(paths);
            }
            let mut internal_left = HashSet::new();
            let mut internal_right = HashSet::new();
            let mut internal_count = 0;
            for p in &family {
                p.check_bipartite(c).unwrap();
                assert_eq!(p.len(), 4);
                assert_eq!(p.endpoints(), Some((u, v)));
                for (side, w) in p.internal_vertices() {
                    internal_count += 1;
                    let fresh = match side.unwrap() {
                        Side::Left => internal_left.insert(w),
                        Side::Right => internal_right.insert(w),
                    };
                    assert!(fresh, "shared internal vertex {w}");
                }
            }
            assert_eq!(internal_count, family.len() * 3);
        }
    }

    #[test]
    fn complete_chain_families_validate_for_both_parities() {
        let cc = random_complete_coloring(60, 2, 31);
        for len in [4usize, 5] {
            let pair = auto_blockspec_complete(&cc, 0, 1, len);
            let mut family = Vec::new();
            for spec in pair.iter() {
                let paths = matching_chain_paths_complete(&cc, 0, 1, len, spec).unwrap();
                family.extend(paths);
            }
            assert!(!family.is_empty(), "len {len}");
            let mut internals = HashSet::new();
            for p in &family {
                p.check_complete(&cc).unwrap();
                assert_eq!(p.len(), len);
                for (_, w) in p.internal_vertices() {
                    assert!(internals.insert(w), "len {len}: shared internal {w}");
                }
            }
        }
    }
}
