//! Maximum bipartite matching with Hall-violation certificates.
//!
//! Views carve an `A x B` subgraph out of a host (by color, by arbitrary
//! predicate, or complete) and materialize its adjacency. The matcher is
//! Hopcroft-Karp with deterministic lowest-index tie-breaking; when the
//! matching does not saturate `A` it also returns a Hall certificate: a set
//! `S` of `A`-vertices with `|N(S)| < |S|`.

use crate::coloring::{Color, ColoringMatrix, CompleteColoring, Side};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MatchError {
    #[error("duplicate vertex {label} in subset")]
    DuplicateVertex { label: usize },
    #[error("vertex {label} out of range for class of size {size}")]
    VertexOutOfRange { label: usize, size: usize },
    #[error("color {color} outside palette 1..={r}")]
    UnknownColor { color: Color, r: Color },
}

/// A bipartite subgraph on labeled vertex subsets `A` and `B`, with
/// materialized adjacency. Labels are opaque; the matcher reports edges in
/// label space.
#[derive(Clone, Debug)]
pub struct BipartiteSubgraphView {
    a_labels: Vec<usize>,
    b_labels: Vec<usize>,
    /// adj[i] = ascending b-indices adjacent to a-index i.
    adj: Vec<Vec<usize>>,
}

fn check_distinct(labels: &[usize]) -> Result<(), MatchError> {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(MatchError::DuplicateVertex { label: w[0] });
        }
    }
    Ok(())
}

impl BipartiteSubgraphView {
    /// Builds a view from an edge predicate over labels.
    pub fn new(
        a: Vec<usize>,
        b: Vec<usize>,
        mut edge: impl FnMut(usize, usize) -> bool,
    ) -> Result<Self, MatchError> {
        check_distinct(&a)?;
        check_distinct(&b)?;
        let adj = a
            .iter()
            .map(|&al| {
                b.iter()
                    .enumerate()
                    .filter(|(_, &bl)| edge(al, bl))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Ok(BipartiteSubgraphView {
            a_labels: a,
            b_labels: b,
            adj,
        })
    }

    /// The complete bipartite view on the given subsets.
    pub fn complete(a: Vec<usize>, b: Vec<usize>) -> Result<Self, MatchError> {
        BipartiteSubgraphView::new(a, b, |_, _| true)
    }

    /// Restriction of a bipartite host to `a` (in `a_side`) and `b` in the
    /// opposite class. With `color: Some(x)`, only edges of color `x` count;
    /// with `None` the host is complete bipartite, so every pair is an edge.
    pub fn from_coloring(
        c: &ColoringMatrix,
        a_side: Side,
        a: Vec<usize>,
        b: Vec<usize>,
        color: Option<Color>,
    ) -> Result<Self, MatchError> {
        if let Some(col) = color {
            if col == 0 || col > c.r() {
                return Err(MatchError::UnknownColor {
                    color: col,
                    r: c.r(),
                });
            }
        }
        for &al in &a {
            if al >= c.class_size(a_side) {
                return Err(MatchError::VertexOutOfRange {
                    label: al,
                    size: c.class_size(a_side),
                });
            }
        }
        let b_size = c.class_size(a_side.opposite());
        for &bl in &b {
            if bl >= b_size {
                return Err(MatchError::VertexOutOfRange {
                    label: bl,
                    size: b_size,
                });
            }
        }
        BipartiteSubgraphView::new(a, b, |al, bl| {
            let edge_color = match a_side {
                Side::Left => c.color(al, bl),
                Side::Right => c.color(bl, al),
            };
            color.map_or(true, |col| edge_color == col)
        })
    }

    /// Restriction of a complete host to two disjoint vertex subsets.
    pub fn from_complete(
        cc: &CompleteColoring,
        a: Vec<usize>,
        b: Vec<usize>,
        color: Option<Color>,
    ) -> Result<Self, MatchError> {
        if let Some(col) = color {
            if col == 0 || col > cc.r() {
                return Err(MatchError::UnknownColor {
                    color: col,
                    r: cc.r(),
                });
            }
        }
        for &x in a.iter().chain(&b) {
            if x >= cc.n() {
                return Err(MatchError::VertexOutOfRange {
                    label: x,
                    size: cc.n(),
                });
            }
        }
        BipartiteSubgraphView::new(a, b, |al, bl| {
            al != bl && color.map_or(true, |col| cc.color(al, bl) == col)
        })
    }

    pub fn a_labels(&self) -> &[usize] {
        &self.a_labels
    }

    pub fn b_labels(&self) -> &[usize] {
        &self.b_labels
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn has_edge_indices(&self, ai: usize, bi: usize) -> bool {
        self.adj[ai].binary_search(&bi).is_ok()
    }
}

/// A Hall witness: `|neighborhood| < |set|` under the view's predicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallCertificate {
    /// Labels of the violating subset of `A`.
    pub set: Vec<usize>,
    /// Labels of its entire neighborhood in `B`.
    pub neighborhood: Vec<usize>,
}

/// A maximum matching, in label space, with a certificate when `A` is not
/// saturated.
#[derive(Clone, Debug)]
pub struct MatchingResult {
    pub edges: Vec<(usize, usize)>,
    pub certificate: Option<HallCertificate>,
}

impl MatchingResult {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

const UNREACHED: usize = usize::MAX;

struct HopcroftKarp<'v> {
    view: &'v BipartiteSubgraphView,
    match_a: Vec<Option<usize>>,
    match_b: Vec<Option<usize>>,
    dist: Vec<usize>,
}

impl HopcroftKarp<'_> {
    fn bfs(&mut self) -> bool {
        let mut queue = std::collections::VecDeque::new();
        for (a, d) in self.dist.iter_mut().enumerate() {
            if self.match_a[a].is_none() {
                *d = 0;
                queue.push_back(a);
            } else {
                *d = UNREACHED;
            }
        }
        let mut found = false;
        while let Some(a) = queue.pop_front() {
            for &b in &self.view.adj[a] {
                match self.match_b[b] {
                    None => found = true,
                    Some(a2) => {
                        if self.dist[a2] == UNREACHED {
                            self.dist[a2] = self.dist[a] + 1;
                            queue.push_back(a2);
                        }
                    }
                }
            }
        }
        found
    }

    fn dfs(&mut self, a: usize) -> bool {
        for idx in 0..self.view.adj[a].len() {
            let b = self.view.adj[a][idx];
            let ok = match self.match_b[b] {
                None => true,
                Some(a2) => self.dist[a2] == self.dist[a] + 1 && self.dfs(a2),
            };
            if ok {
                self.match_a[a] = Some(b);
                self.match_b[b] = Some(a);
                return true;
            }
        }
        self.dist[a] = UNREACHED;
        false
    }
}

/// Maximum-cardinality matching of a view. Deterministic: augmentations are
/// explored in ascending index order, so equal inputs give equal outputs.
pub fn max_matching(view: &BipartiteSubgraphView) -> MatchingResult {
    let na = view.a_labels.len();
    let nb = view.b_labels.len();
    let mut hk = HopcroftKarp {
        view,
        match_a: vec![None; na],
        match_b: vec![None; nb],
        dist: vec![UNREACHED; na],
    };
    while hk.bfs() {
        for a in 0..na {
            if hk.match_a[a].is_none() {
                hk.dfs(a);
            }
        }
    }
    let edges: Vec<(usize, usize)> = hk
        .match_a
        .iter()
        .enumerate()
        .filter_map(|(a, mb)| mb.map(|b| (view.a_labels[a], view.b_labels[b])))
        .collect();
    let certificate = if edges.len() < na {
        Some(hall_certificate(view, &hk.match_a, &hk.match_b))
    } else {
        None
    };
    MatchingResult { edges, certificate }
}

/// Alternating reachability from the unmatched `A`-vertices: free edges
/// forward, matching edges back. The reached `A`-set violates Hall by
/// exactly the deficiency.
fn hall_certificate(
    view: &BipartiteSubgraphView,
    match_a: &[Option<usize>],
    match_b: &[Option<usize>],
) -> HallCertificate {
    let na = view.a_labels.len();
    let nb = view.b_labels.len();
    let mut in_s = vec![false; na];
    let mut in_nbhd = vec![false; nb];
    let mut queue: std::collections::VecDeque<usize> = (0..na)
        .filter(|&a| match_a[a].is_none())
        .inspect(|&a| in_s[a] = true)
        .collect();
    while let Some(a) = queue.pop_front() {
        for &b in &view.adj[a] {
            if !in_nbhd[b] {
                in_nbhd[b] = true;
                if let Some(a2) = match_b[b] {
                    if !in_s[a2] {
                        in_s[a2] = true;
                        queue.push_back(a2);
                    }
                }
            }
        }
    }
    HallCertificate {
        set: (0..na)
            .filter(|&a| in_s[a])
            .map(|a| view.a_labels[a])
            .collect(),
        neighborhood: (0..nb)
            .filter(|&b| in_nbhd[b])
            .map(|b| view.b_labels[b])
            .collect(),
    }
}

/// Maximum matching using only edges of one color.
pub fn color_matching(
    c: &ColoringMatrix,
    a_side: Side,
    a: &[usize],
    b: &[usize],
    color: Color,
) -> Result<MatchingResult, MatchError> {
    let view =
        BipartiteSubgraphView::from_coloring(c, a_side, a.to_vec(), b.to_vec(), Some(color))?;
    Ok(max_matching(&view))
}

/// A view padded with `s` universally-joined vertices on each side. Pads use
/// fresh labels above every original label; a perfect matching of the padded
/// graph restricts to a matching of size at least `|A| - s` on the original.
#[derive(Clone, Debug)]
pub struct PaddedGraph {
    pub view: BipartiteSubgraphView,
    pub pad_size: usize,
    first_pad_label: usize,
}

impl PaddedGraph {
    /// The matching edges that live entirely in the original view.
    pub fn original_edges(&self, result: &MatchingResult) -> Vec<(usize, usize)> {
        result
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| a < self.first_pad_label && b < self.first_pad_label)
            .collect()
    }

    pub fn is_pad_label(&self, label: usize) -> bool {
        label >= self.first_pad_label
    }
}

/// Default pad size for an `m`-vertex host: `ceil(ln m)`.
pub fn default_pad_size(m: usize) -> usize {
    (m.max(1) as f64).ln().ceil() as usize
}

/// Builds the padded auxiliary graph: original edges, plus `s` new
/// `A`-vertices joined to all of `B` and its pads, plus `s` new `B`-vertices
/// joined to all of `A` and its pads. With `s = 0` the view is unchanged.
pub fn padded_graph(view: &BipartiteSubgraphView, s: usize) -> PaddedGraph {
    let first_pad_label = view
        .a_labels
        .iter()
        .chain(&view.b_labels)
        .copied()
        .max()
        .map_or(0, |x| x + 1);
    let mut a = view.a_labels.clone();
    let mut b = view.b_labels.clone();
    a.extend((0..s).map(|i| first_pad_label + i));
    b.extend((0..s).map(|i| first_pad_label + i));
    let na = view.a_labels.len();
    let nb = view.b_labels.len();
    let mut adj: Vec<Vec<usize>> = Vec::with_capacity(a.len());
    for ai in 0..na {
        let mut row = view.adj[ai].clone();
        row.extend(nb..nb + s);
        adj.push(row);
    }
    for _ in 0..s {
        adj.push((0..nb + s).collect());
    }
    PaddedGraph {
        view: BipartiteSubgraphView {
            a_labels: a,
            b_labels: b,
            adj,
        },
        pad_size: s,
        first_pad_label,
    }
}
