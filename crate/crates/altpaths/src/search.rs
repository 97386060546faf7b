//! Exhaustive extremal search on small instances.
//!
//! The searches enumerate every coloring (or every coloring up to a sound
//! symmetry reduction), evaluate an exact per-coloring objective, and return
//! the maximum with a witness. Budgets are explicit: an instance cap checked
//! before enumeration starts and a step counter for the per-pair path
//! machinery. Every over-budget outcome is a distinct error, never an
//! approximate answer.
//!
//! The column reduction enumerates one representative per orbit of the
//! right-class permutation action (colorings with sorted column words);
//! every objective here is invariant under that action, and the reduction is
//! validated against raw enumeration in the tests.

use crate::code::Code;
use crate::codegree::codegree_table;
use crate::coloring::{Color, ColoringMatrix, Side};
use crate::counting::{
    count_alt_2paths, count_alt_paths_exact, count_alt_walks, enumerate_alt_paths, total_alt_p3,
    total_alt_p4, CountError, WorkBudget,
};
use crate::paths::{BiVertex, Flavor, PathRecord};
use num::rational::Ratio;
use rayon::prelude::*;
use std::sync::atomic::{AtomicU64, Ordering};
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("instance requires {instances} enumerations, over the cap of {cap}")]
    InstanceCapExceeded { instances: u128, cap: u128 },
    #[error("step budget of {budget} exceeded")]
    StepBudgetExceeded { budget: u64 },
    #[error("{0}")]
    Degenerate(String),
    #[error("search requires exactly 2 colors, got {0}")]
    TwoColorsOnly(Color),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// Explicit instance-size cap plus a step allowance for path enumeration
/// and packing nodes.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub max_instances: u128,
    pub max_steps: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_instances: 1 << 26,
            max_steps: 100_000_000,
        }
    }
}

/// How the coloring space is enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryMode {
    /// All `r^(mn)` assignments.
    Raw,
    /// One coloring per multiset of column words (sorted columns). Sound
    /// for objectives invariant under right-class permutations.
    ColumnCanonical,
}

/// Maximum of an exact objective over a coloring space, with a witness.
#[derive(Clone, Debug)]
pub struct ExtremalResult<W> {
    pub value: u128,
    pub witness: W,
    pub instances_scanned: u64,
}

/// An optimal family of pairwise internally disjoint alternating paths.
#[derive(Clone, Debug)]
pub struct PackingResult {
    pub size: usize,
    pub paths: Vec<PathRecord>,
}

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq)]
struct VertexSet {
    bits: Vec<u64>,
}

impl VertexSet {
    fn empty(universe: usize) -> VertexSet {
        VertexSet {
            bits: vec![0; universe.div_ceil(WORD_BITS)],
        }
    }

    fn insert(&mut self, x: usize) {
        self.bits[x / WORD_BITS] |= 1 << (x % WORD_BITS);
    }

    fn intersects(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    fn difference_count(&self, minus: &VertexSet) -> usize {
        self.bits
            .iter()
            .zip(&minus.bits)
            .map(|(a, b)| (a & !b).count_ones() as usize)
            .sum()
    }
}

struct PackingSearch<'a> {
    internals: &'a [VertexSet],
    universe: usize,
    per_path: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
    steps: u64,
    max_steps: u64,
}

impl PackingSearch<'_> {
    fn run(&mut self, from: usize, used: &VertexSet, count: usize) -> Result<(), SearchError> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(SearchError::StepBudgetExceeded {
                budget: self.max_steps,
            });
        }
        if count > self.best.len() {
            self.best = self.chosen.clone();
        }
        // Candidates still compatible with the current selection.
        let compatible: Vec<usize> = (from..self.internals.len())
            .filter(|&i| !self.internals[i].intersects(used))
            .collect();
        if compatible.is_empty() {
            return Ok(());
        }
        // Counting bound: remaining capacity of unused internal vertices.
        let mut free = VertexSet::empty(self.universe);
        for &i in &compatible {
            free.union_with(&self.internals[i]);
        }
        let capacity = free.difference_count(used) / self.per_path.max(1);
        if count + compatible.len().min(capacity) <= self.best.len() {
            return Ok(());
        }
        for (pos, &i) in compatible.iter().enumerate() {
            // Bound shrinks as we skip candidates.
            if count + (compatible.len() - pos) <= self.best.len() {
                break;
            }
            let mut next_used = used.clone();
            next_used.union_with(&self.internals[i]);
            self.chosen.push(i);
            self.run(i + 1, &next_used, count + 1)?;
            self.chosen.pop();
        }
        Ok(())
    }
}

/// Exact maximum packing of internally disjoint alternating `len`-paths
/// between `a` and `b`: enumerates all such paths, then branch-and-bound
/// set packing with a greedy incumbent and an internal-vertex capacity
/// bound.
pub fn max_disjoint_paths(
    c: &ColoringMatrix,
    a: BiVertex,
    b: BiVertex,
    len: usize,
    budget: &SearchBudget,
) -> Result<PackingResult, SearchError> {
    let paths = enumerate_alt_paths(c, a, b, len, WorkBudget(budget.max_steps))?;
    let universe = c.m() + c.n();
    let internals: Vec<VertexSet> = paths
        .iter()
        .map(|p| {
            let mut set = VertexSet::empty(universe);
            for (side, w) in p.internal_vertices() {
                let id = match side.expect("bipartite record") {
                    Side::Left => w,
                    Side::Right => c.m() + w,
                };
                set.insert(id);
            }
            set
        })
        .collect();

    // Greedy incumbent in enumeration order.
    let mut greedy = Vec::new();
    let mut used = VertexSet::empty(universe);
    for (i, set) in internals.iter().enumerate() {
        if !set.intersects(&used) {
            used.union_with(set);
            greedy.push(i);
        }
    }
    let mut search = PackingSearch {
        internals: &internals,
        universe,
        per_path: len.saturating_sub(1),
        best: greedy,
        chosen: Vec::new(),
        steps: 0,
        max_steps: budget.max_steps,
    };
    search.run(0, &VertexSet::empty(universe), 0)?;
    let chosen = search.best;
    Ok(PackingResult {
        size: chosen.len(),
        paths: chosen.into_iter().map(|i| paths[i].clone()).collect(),
    })
}

fn checked_pow(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = match acc.checked_mul(base as u128) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}

fn multiset_count(q: u128, n: usize) -> u128 {
    // C(q + n - 1, n), saturating.
    let mut acc: u128 = 1;
    for i in 0..n {
        let factor = match q.checked_add(i as u128) {
            Some(v) => v,
            None => return u128::MAX,
        };
        acc = match acc.checked_mul(factor) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn coloring_from_index(mut idx: u128, m: usize, n: usize, r: Color) -> ColoringMatrix {
    let mut colors = vec![0 as Color; m * n];
    for slot in colors.iter_mut() {
        *slot = (idx % r as u128) as Color + 1;
        idx /= r as u128;
    }
    ColoringMatrix::from_raw(m, n, r, colors)
}

fn coloring_from_columns(cols: &[u64], m: usize, r: Color) -> ColoringMatrix {
    let n = cols.len();
    let mut colors = vec![0 as Color; m * n];
    for (v, &id) in cols.iter().enumerate() {
        let mut rest = id;
        for u in 0..m {
            colors[u * n + v] = (rest % r as u64) as Color + 1;
            rest /= r as u64;
        }
    }
    ColoringMatrix::from_raw(m, n, r, colors)
}

struct BranchBest {
    value: u128,
    /// (branch, position within branch): lexicographic enumeration order.
    pos: (u64, u64),
    witness: ColoringMatrix,
}

/// Maximizes `eval` over the coloring space. `eval` receives a prune floor
/// and may return any value strictly below it instead of the true objective
/// when the true objective is below the floor; ties at or above the floor
/// must be exact. The witness is the first maximizer in enumeration order
/// (branch-major), independent of thread scheduling.
fn maximize_over_colorings<F>(
    m: usize,
    n: usize,
    r: Color,
    mode: SymmetryMode,
    budget: &SearchBudget,
    eval: F,
) -> Result<ExtremalResult<ColoringMatrix>, SearchError>
where
    F: Fn(&ColoringMatrix, u128) -> Result<u128, SearchError> + Sync,
{
    let instances = match mode {
        SymmetryMode::Raw => checked_pow(r as u64, m * n),
        SymmetryMode::ColumnCanonical => multiset_count(checked_pow(r as u64, m), n),
    };
    if instances > budget.max_instances {
        return Err(SearchError::InstanceCapExceeded {
            instances,
            cap: budget.max_instances,
        });
    }
    let hint = AtomicU64::new(0);
    let bump = |value: u128| {
        hint.fetch_max(u64::try_from(value).unwrap_or(u64::MAX), Ordering::Relaxed);
    };

    // Per-branch scan in ascending position order.
    let scan_branch = |branch: u64,
                       colorings: Vec<(u64, ColoringMatrix)>|
     -> Result<Option<BranchBest>, SearchError> {
        let mut best: Option<BranchBest> = None;
        for (pos, coloring) in colorings {
            let floor = hint.load(Ordering::Relaxed) as u128;
            let value = eval(&coloring, floor)?;
            bump(value);
            let better = match &best {
                None => true,
                Some(b) => value > b.value,
            };
            if better {
                best = Some(BranchBest {
                    value,
                    pos: (branch, pos),
                    witness: coloring,
                });
            }
        }
        Ok(best)
    };

    let branch_results: Vec<Result<Option<BranchBest>, SearchError>> = match mode {
        SymmetryMode::Raw => {
            let total = instances as u64;
            let chunk = total.div_ceil(64).max(1);
            let ranges: Vec<(u64, u64)> = (0..total)
                .step_by(chunk as usize)
                .map(|s| (s, (s + chunk).min(total)))
                .collect();
            ranges
                .into_par_iter()
                .map(|(start, end)| {
                    let colorings: Vec<(u64, ColoringMatrix)> = (start..end)
                        .map(|idx| (idx, coloring_from_index(idx as u128, m, n, r)))
                        .collect();
                    scan_branch(0, colorings)
                })
                .collect()
        }
        SymmetryMode::ColumnCanonical => {
            let q = checked_pow(r as u64, m) as u64;
            (0..q)
                .into_par_iter()
                .map(|first| {
                    // Enumerate non-decreasing column sequences starting at
                    // `first`; position encodes branch-major order.
                    let mut colorings = Vec::new();
                    let mut cols = vec![first];
                    let mut pos = 0u64;
                    fn grow(
                        cols: &mut Vec<u64>,
                        n: usize,
                        q: u64,
                        m: usize,
                        r: Color,
                        pos: &mut u64,
                        out: &mut Vec<(u64, ColoringMatrix)>,
                    ) {
                        if cols.len() == n {
                            out.push((*pos, coloring_from_columns(cols, m, r)));
                            *pos += 1;
                            return;
                        }
                        let lo = *cols.last().expect("non-empty");
                        for next in lo..q {
                            cols.push(next);
                            grow(cols, n, q, m, r, pos, out);
                            cols.pop();
                        }
                    }
                    grow(&mut cols, n, q, m, r, &mut pos, &mut colorings);
                    scan_branch(first, colorings)
                })
                .collect()
        }
    };

    let mut best: Option<BranchBest> = None;
    for item in branch_results {
        let item = item?;
        if let Some(cand) = item {
            let better = match &best {
                None => true,
                Some(b) => cand.value > b.value || (cand.value == b.value && cand.pos < b.pos),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    let best = best.ok_or_else(|| SearchError::Degenerate("empty coloring space".into()))?;
    Ok(ExtremalResult {
        value: best.value,
        witness: best.witness,
        instances_scanned: instances as u64,
    })
}

fn relevant_pairs(m: usize, n: usize, len: usize) -> Vec<(BiVertex, BiVertex)> {
    if len % 2 == 0 {
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                pairs.push((BiVertex::right(u), BiVertex::right(v)));
            }
        }
        pairs
    } else {
        let mut pairs = Vec::with_capacity(m * n);
        for u in 0..m {
            for v in 0..n {
                pairs.push((BiVertex::left(u), BiVertex::right(v)));
            }
        }
        pairs
    }
}

fn check_pairs_exist(_m: usize, n: usize, len: usize) -> Result<(), SearchError> {
    if len < 2 {
        return Err(SearchError::Degenerate(format!("length {len} is below 2")));
    }
    if len % 2 == 0 && n < 2 {
        return Err(SearchError::Degenerate(
            "even lengths need two right-class vertices".into(),
        ));
    }
    Ok(())
}

/// Largest `t` such that some r-coloring of `K_{m,n}` joins every relevant
/// pair (right-class pairs for even `len`, cross pairs for odd) by `t`
/// internally disjoint alternating `len`-paths. Exhaustive up to the chosen
/// symmetry mode; the witness attains the value.
pub fn exact_kappa(
    m: usize,
    n: usize,
    r: Color,
    len: usize,
    mode: SymmetryMode,
    budget: &SearchBudget,
) -> Result<ExtremalResult<ColoringMatrix>, SearchError> {
    check_pairs_exist(m, n, len)?;
    let pairs = relevant_pairs(m, n, len);
    maximize_over_colorings(m, n, r, mode, budget, |c, floor| {
        let mut min: u128 = u128::MAX;
        for &(a, b) in &pairs {
            let size = max_disjoint_paths(c, a, b, len, budget)?.size as u128;
            min = min.min(size);
            if min < floor {
                break;
            }
        }
        Ok(min)
    })
}

/// Largest `t` such that some 2-coloring joins every relevant pair by `t`
/// alternating `len`-walks (`Flavor::Walk`, repeats allowed) or `len`-paths
/// (`Flavor::Path`, distinct vertices).
pub fn exact_lambda(
    m: usize,
    n: usize,
    len: usize,
    flavor: Flavor,
    mode: SymmetryMode,
    budget: &SearchBudget,
) -> Result<ExtremalResult<ColoringMatrix>, SearchError> {
    check_pairs_exist(m, n, len)?;
    let pairs = relevant_pairs(m, n, len);
    maximize_over_colorings(m, n, 2, mode, budget, |c, floor| {
        let mut min: u128 = u128::MAX;
        for &(a, b) in &pairs {
            let count = match flavor {
                Flavor::Walk => count_alt_walks(c, a, b, len)?,
                Flavor::Path => count_alt_paths_exact(c, a, b, len, WorkBudget(budget.max_steps))?,
            };
            min = min.min(count);
            if min < floor {
                break;
            }
        }
        Ok(min)
    })
}

fn word_from_id(mut id: u64, m: usize, r: Color) -> Vec<Color> {
    let mut word = Vec::with_capacity(m);
    for _ in 0..m {
        word.push((id % r as u64) as Color + 1);
        id /= r as u64;
    }
    word
}

fn word_distance(a: u64, b: u64, m: usize, r: Color) -> usize {
    let (mut a, mut b) = (a, b);
    let mut diff = 0;
    for _ in 0..m {
        if a % r as u64 != b % r as u64 {
            diff += 1;
        }
        a /= r as u64;
        b /= r as u64;
    }
    diff
}

struct AlphaSearch {
    adj: Vec<Vec<u64>>,
    best: Vec<u64>,
    chosen: Vec<u64>,
    steps: u64,
    max_steps: u64,
}

impl AlphaSearch {
    fn candidates_after(&self, cand: &[u64], w: u64) -> Vec<u64> {
        let row = &self.adj[w as usize];
        cand.iter()
            .copied()
            .filter(|&x| x > w && row[(x / 64) as usize] >> (x % 64) & 1 == 1)
            .collect()
    }

    fn run(&mut self, cand: &[u64]) -> Result<(), SearchError> {
        self.steps += 1;
        if self.steps > self.max_steps {
            return Err(SearchError::StepBudgetExceeded {
                budget: self.max_steps,
            });
        }
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.chosen.len() + cand.len() <= self.best.len() {
            return Ok(());
        }
        for (pos, &w) in cand.iter().enumerate() {
            if self.chosen.len() + (cand.len() - pos) <= self.best.len() {
                break;
            }
            let next = self.candidates_after(cand, w);
            self.chosen.push(w);
            self.run(&next)?;
            self.chosen.pop();
        }
        Ok(())
    }
}

/// Maximum size of a code in `[r]^m` with pairwise Hamming distance at
/// least `t`, by backtracking over words in ascending numeric order.
/// Distances are invariant under per-coordinate alphabet permutations, so
/// the all-ones word is fixed into the code without loss of generality.
pub fn exact_alpha(
    m: usize,
    t: usize,
    r: Color,
    budget: &SearchBudget,
) -> Result<ExtremalResult<Code>, SearchError> {
    let words = checked_pow(r as u64, m);
    if words > budget.max_instances {
        return Err(SearchError::InstanceCapExceeded {
            instances: words,
            cap: budget.max_instances,
        });
    }
    let q = words as u64;
    let blocks = (q as usize).div_ceil(64);
    let mut adj = vec![vec![0u64; blocks]; q as usize];
    for a in 0..q {
        for b in (a + 1)..q {
            if word_distance(a, b, m, r) >= t {
                adj[a as usize][(b / 64) as usize] |= 1 << (b % 64);
                adj[b as usize][(a / 64) as usize] |= 1 << (a % 64);
            }
        }
    }
    let mut search = AlphaSearch {
        adj,
        best: vec![0],
        chosen: vec![0],
        steps: 0,
        max_steps: budget.max_steps,
    };
    let first_cands: Vec<u64> = (1..q)
        .filter(|&x| search.adj[0][(x / 64) as usize] >> (x % 64) & 1 == 1)
        .collect();
    search.run(&first_cands)?;
    let steps = search.steps;
    let words: Vec<Vec<Color>> = search
        .best
        .iter()
        .map(|&id| word_from_id(id, m, r))
        .collect();
    let code = Code::from_raw(r, words);
    Ok(ExtremalResult {
        value: code.len() as u128,
        witness: code,
        instances_scanned: steps,
    })
}

/// The closed-form inequalities that can be checked against every coloring
/// of a small instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFamily {
    /// Minimum pair 2-path count is at most `(1 - 1/r)(1 + 1/(n-1)) m`.
    TwoPathMin,
    /// Total alternating 3-paths at most `m^2 n^2 / 4` (two colors).
    ThreePathTotal,
    /// Total alternating 4-walks at most `m^2 n^3 / 16` (two colors).
    FourWalkTotal,
    /// Summed mixed codegrees at most `m^2 n / 4` (two colors).
    CodegreeSum,
}

impl BoundFamily {
    pub fn name(self) -> &'static str {
        match self {
            BoundFamily::TwoPathMin => "two-path-min",
            BoundFamily::ThreePathTotal => "three-path-total",
            BoundFamily::FourWalkTotal => "four-walk-total",
            BoundFamily::CodegreeSum => "codegree-sum",
        }
    }
}

/// Outcome of checking one bound family against every coloring.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub family: BoundFamily,
    pub m: usize,
    pub n: usize,
    pub r: Color,
    pub instances: u64,
    pub violations: u64,
    /// Largest observed value of the bounded quantity.
    pub max_value: u128,
    /// The bound itself, exact.
    pub bound: Ratio<u64>,
    /// A coloring attaining `max_value` (the first in enumeration order).
    pub witness: ColoringMatrix,
}

impl BoundReport {
    /// Bound minus extremal value; nonnegative exactly when no violation
    /// occurred.
    pub fn gap(&self) -> Ratio<i64> {
        let bound = Ratio::new(*self.bound.numer() as i64, *self.bound.denom() as i64);
        bound - Ratio::from_integer(self.max_value as i64)
    }
}

/// Checks one inequality on every r-coloring of `K_{m,n}` (raw enumeration)
/// and reports the extremal coloring and the violation count, which is zero
/// whenever the closed form is correct.
pub fn verify_bounds(
    family: BoundFamily,
    m: usize,
    n: usize,
    r: Color,
    budget: &SearchBudget,
) -> Result<BoundReport, SearchError> {
    let r = match family {
        BoundFamily::TwoPathMin => r,
        _ => {
            if r != 2 {
                return Err(SearchError::TwoColorsOnly(r));
            }
            2
        }
    };
    if family == BoundFamily::TwoPathMin && n < 2 {
        return Err(SearchError::Degenerate(
            "need n >= 2 for pair minima".into(),
        ));
    }
    let instances = checked_pow(r as u64, m * n);
    if instances > budget.max_instances {
        return Err(SearchError::InstanceCapExceeded {
            instances,
            cap: budget.max_instances,
        });
    }
    // (value * scale <= limit) encodes the rational bound exactly.
    let (scale, limit, bound): (u128, u128, Ratio<u64>) = {
        let (m128, n128, r128) = (m as u128, n as u128, r as u128);
        match family {
            BoundFamily::TwoPathMin => (
                r128 * (n128 - 1),
                m128 * n128 * (r128 - 1),
                Ratio::new(
                    m as u64 * n as u64 * (r as u64 - 1),
                    r as u64 * (n as u64 - 1),
                ),
            ),
            BoundFamily::ThreePathTotal => (
                4,
                m128 * m128 * n128 * n128,
                Ratio::new(m as u64 * m as u64 * n as u64 * n as u64, 4),
            ),
            BoundFamily::FourWalkTotal => (
                16,
                m128 * m128 * n128 * n128 * n128,
                Ratio::new(m as u64 * m as u64 * n as u64 * n as u64 * n as u64, 16),
            ),
            BoundFamily::CodegreeSum => (
                4,
                m128 * m128 * n128,
                Ratio::new(m as u64 * m as u64 * n as u64, 4),
            ),
        }
    };

    let evaluate = |c: &ColoringMatrix| -> Result<u128, SearchError> {
        match family {
            BoundFamily::TwoPathMin => {
                let mut min = u128::MAX;
                for u in 0..n {
                    for v in (u + 1)..n {
                        min = min.min(count_alt_2paths(c, u, v)? as u128);
                    }
                }
                Ok(min)
            }
            BoundFamily::ThreePathTotal => Ok(total_alt_p3(c)?),
            BoundFamily::FourWalkTotal => Ok(total_alt_p4(c)?),
            BoundFamily::CodegreeSum => {
                let mut sum = 0u128;
                for u in 0..m {
                    for v in (u + 1)..m {
                        let t = codegree_table(c, Side::Left, u, v).expect("valid pair");
                        sum += t.mixed() as u128;
                    }
                }
                Ok(sum)
            }
        }
    };

    let total = instances as u64;
    let chunk = total.div_ceil(64).max(1);
    let ranges: Vec<(u64, u64)> = (0..total)
        .step_by(chunk as usize)
        .map(|s| (s, (s + chunk).min(total)))
        .collect();
    let partials: Vec<Result<(u128, u64, ColoringMatrix, u64), SearchError>> = ranges
        .into_par_iter()
        .map(|(start, end)| {
            let mut max_value = 0u128;
            let mut violations = 0u64;
            let mut witness: Option<(u64, ColoringMatrix)> = None;
            for idx in start..end {
                let c = coloring_from_index(idx as u128, m, n, r);
                let value = evaluate(&c)?;
                if value * scale > limit {
                    violations += 1;
                }
                if witness.is_none() || value > max_value {
                    max_value = value;
                    witness = Some((idx, c));
                }
            }
            let (pos, w) = witness.expect("nonempty range");
            Ok((max_value, violations, w, pos))
        })
        .collect();

    let mut max_value = 0u128;
    let mut violations = 0u64;
    let mut witness: Option<(u64, ColoringMatrix)> = None;
    for part in partials {
        let (value, viol, w, pos) = part?;
        violations += viol;
        let better = match &witness {
            None => true,
            Some((best_pos, _)) => value > max_value || (value == max_value && pos < *best_pos),
        };
        if better {
            max_value = value;
            witness = Some((pos, w));
        }
    }
    let (_, witness) = witness.expect("nonempty space");
    Ok(BoundReport {
        family,
        m,
        n,
        r,
        instances: total,
        violations,
        max_value,
        bound,
        witness,
    })
}

/// Re-evaluates the objective an extremal search reported for its witness.
pub fn replay_kappa_witness(
    witness: &ColoringMatrix,
    len: usize,
    budget: &SearchBudget,
) -> Result<u128, SearchError> {
    let pairs = relevant_pairs(witness.m(), witness.n(), len);
    let mut min = u128::MAX;
    for &(a, b) in &pairs {
        min = min.min(max_disjoint_paths(witness, a, b, len, budget)?.size as u128);
    }
    Ok(min)
}

/// As [`replay_kappa_witness`] for the non-disjoint counts.
pub fn replay_lambda_witness(
    witness: &ColoringMatrix,
    len: usize,
    flavor: Flavor,
    budget: &SearchBudget,
) -> Result<u128, SearchError> {
    let pairs = relevant_pairs(witness.m(), witness.n(), len);
    let mut min = u128::MAX;
    for &(a, b) in &pairs {
        let count = match flavor {
            Flavor::Walk => count_alt_walks(witness, a, b, len)?,
            Flavor::Path => {
                count_alt_paths_exact(witness, a, b, len, WorkBudget(budget.max_steps))?
            }
        };
        min = min.min(count);
    }
    Ok(min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{ColoringMatrix, RED};
    use crate::constructions::random_coloring;

    #[test]
    fn packing_of_2paths_is_the_pair_count() {
        for seed in 0..40 {
            let c = random_coloring(4, 4, 2, 60_000 + seed);
            for u in 0..4 {
                for v in (u + 1)..4 {
                    let packing = max_disjoint_paths(
                        &c,
                        BiVertex::right(u),
                        BiVertex::right(v),
                        2,
                        &SearchBudget::default(),
                    )
                    .unwrap();
                    assert_eq!(packing.size as u64, count_alt_2paths(&c, u, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn packing_on_monochromatic_is_zero() {
        let c = ColoringMatrix::filled(4, 4, 2, RED);
        for len in [2usize, 4] {
            let packing = max_disjoint_paths(
                &c,
                BiVertex::right(0),
                BiVertex::right(1),
                len,
                &SearchBudget::default(),
            )
            .unwrap();
            assert_eq!(packing.size, 0);
        }
    }

    /// Independent packing oracle: enumerate paths recursively, then try
    /// every subset.
    fn oracle_pack(c: &ColoringMatrix, u: usize, v: usize, len: usize) -> usize {
        let paths = enumerate_alt_paths(
            c,
            BiVertex::right(u),
            BiVertex::right(v),
            len,
            WorkBudget(1 << 30),
        )
        .unwrap();
        let sets: Vec<Vec<(bool, usize)>> = paths
            .iter()
            .map(|p| {
                p.internal_vertices()
                    .map(|(side, w)| (side.unwrap() == Side::Left, w))
                    .collect()
            })
            .collect();
        let p = sets.len();
        assert!(p <= 20, "oracle instance too big");
        let mut best = 0usize;
        for mask in 0u32..(1 << p) {
            let chosen: Vec<usize> = (0..p).filter(|&i| mask >> i & 1 == 1).collect();
            let mut seen = std::collections::HashSet::new();
            let mut ok = true;
            'outer: for &i in &chosen {
                for &key in &sets[i] {
                    if !seen.insert(key) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            if ok {
                best = best.max(chosen.len());
            }
        }
        best
    }

    #[test]
    fn packing_matches_subset_oracle_on_k44() {
        for seed in 0..30 {
            let c = random_coloring(4, 4, 2, 61_000 + seed);
            let packing = max_disjoint_paths(
                &c,
                BiVertex::right(0),
                BiVertex::right(1),
                4,
                &SearchBudget::default(),
            )
            .unwrap();
            assert_eq!(packing.size, oracle_pack(&c, 0, 1, 4), "seed {seed}");
            // The witness family really is disjoint and valid.
            let mut seen = std::collections::HashSet::new();
            for p in &packing.paths {
                p.check_bipartite(&c).unwrap();
                for (side, w) in p.internal_vertices() {
                    assert!(seen.insert((side.unwrap() == Side::Left, w)));
                }
            }
        }
    }

    #[test]
    fn kappa_2222_is_two() {
        let result = exact_kappa(2, 2, 2, 2, SymmetryMode::Raw, &SearchBudget::default()).unwrap();
        assert_eq!(result.value, 2);
        assert_eq!(result.instances_scanned, 16);
        assert_eq!(
            replay_kappa_witness(&result.witness, 2, &SearchBudget::default()).unwrap(),
            2
        );
    }

    #[test]
    fn canonical_mode_agrees_with_raw_on_small_instances() {
        for (m, n, len) in [
            (2usize, 2usize, 2usize),
            (2, 3, 2),
            (3, 2, 2),
            (2, 2, 3),
            (2, 3, 4),
        ] {
            let raw =
                exact_kappa(m, n, 2, len, SymmetryMode::Raw, &SearchBudget::default()).unwrap();
            let canon = exact_kappa(
                m,
                n,
                2,
                len,
                SymmetryMode::ColumnCanonical,
                &SearchBudget::default(),
            )
            .unwrap();
            assert_eq!(raw.value, canon.value, "kappa {m} {n} len {len}");
            assert!(canon.instances_scanned <= raw.instances_scanned);
            for flavor in [Flavor::Walk, Flavor::Path] {
                let raw = exact_lambda(
                    m,
                    n,
                    len,
                    flavor,
                    SymmetryMode::Raw,
                    &SearchBudget::default(),
                )
                .unwrap();
                let canon = exact_lambda(
                    m,
                    n,
                    len,
                    flavor,
                    SymmetryMode::ColumnCanonical,
                    &SearchBudget::default(),
                )
                .unwrap();
                assert_eq!(
                    raw.value, canon.value,
                    "lambda {m} {n} len {len} {flavor:?}"
                );
            }
        }
    }

    #[test]
    fn lambda_small_values() {
        // Length 3 on K_{2,2} is capped by floor(mn/4) = 1.
        for flavor in [Flavor::Walk, Flavor::Path] {
            let res =
                exact_lambda(2, 2, 3, flavor, SymmetryMode::Raw, &SearchBudget::default()).unwrap();
            assert!(res.value <= 1, "{flavor:?}");
            assert_eq!(res.value, 1);
            let replay =
                replay_lambda_witness(&res.witness, 3, flavor, &SearchBudget::default()).unwrap();
            assert_eq!(replay, res.value);
            // A positive value rules out monochromatic witnesses.
            let first = res.witness.color(0, 0);
            assert!((0..2).any(|u| (0..2).any(|v| res.witness.color(u, v) != first)));
        }
        // Length 2 lambda coincides with kappa.
        for (m, n) in [(2usize, 2usize), (2, 3)] {
            let lambda = exact_lambda(
                m,
                n,
                2,
                Flavor::Path,
                SymmetryMode::Raw,
                &SearchBudget::default(),
            )
            .unwrap();
            let kappa =
                exact_kappa(m, n, 2, 2, SymmetryMode::Raw, &SearchBudget::default()).unwrap();
            assert_eq!(lambda.value, kappa.value);
        }
    }

    #[test]
    fn alpha_known_values() {
        let budget = SearchBudget::default();
        assert_eq!(exact_alpha(3, 2, 2, &budget).unwrap().value, 4);
        for m in 1..=4 {
            assert_eq!(
                exact_alpha(m, 1, 2, &budget).unwrap().value,
                1 << m,
                "m {m}"
            );
            assert_eq!(exact_alpha(m, m, 2, &budget).unwrap().value, 2, "m {m}");
        }
        // Witness replay: the returned code really has the claimed distance.
        let res = exact_alpha(3, 2, 2, &budget).unwrap();
        assert_eq!(res.witness.len() as u128, res.value);
        assert!(res.witness.min_distance().unwrap() >= 2);
    }

    #[test]
    fn budget_errors_are_distinct() {
        let tiny = SearchBudget {
            max_instances: 4,
            max_steps: 1_000,
        };
        assert!(matches!(
            exact_kappa(2, 2, 2, 2, SymmetryMode::Raw, &tiny),
            Err(SearchError::InstanceCapExceeded {
                instances: 16,
                cap: 4
            })
        ));
        let starved = SearchBudget {
            max_instances: 1 << 26,
            max_steps: 3,
        };
        assert!(matches!(
            exact_kappa(2, 2, 2, 2, SymmetryMode::Raw, &starved),
            Err(SearchError::StepBudgetExceeded { .. }) | Err(SearchError::Count(_))
        ));
    }

    #[test]
    fn bound_reports_hold_on_tiny_instances() {
        let budget = SearchBudget::default();
        let p3 = verify_bounds(BoundFamily::ThreePathTotal, 2, 2, 2, &budget).unwrap();
        assert_eq!(p3.violations, 0);
        assert_eq!(p3.instances, 16);
        assert_eq!(p3.max_value, 4);
        assert!(p3.gap() >= Ratio::from_integer(0));
        let eq = verify_bounds(BoundFamily::CodegreeSum, 2, 3, 2, &budget).unwrap();
        assert_eq!(eq.violations, 0);
        assert_eq!(eq.bound, Ratio::new(3, 1));
        let two = verify_bounds(BoundFamily::TwoPathMin, 2, 2, 2, &budget).unwrap();
        assert_eq!(two.violations, 0);
        assert_eq!(two.max_value, 2);
        // More colors loosen the cap but never break it.
        for r in [3u8, 4] {
            let multi = verify_bounds(BoundFamily::TwoPathMin, 2, 2, r, &budget).unwrap();
            assert_eq!(multi.violations, 0, "r = {r}");
            assert_eq!(multi.instances, (r as u64).pow(4));
        }
        assert!(matches!(
            verify_bounds(BoundFamily::FourWalkTotal, 2, 2, 3, &budget),
            Err(SearchError::TwoColorsOnly(3))
        ));
    }

    /// Recoloring an edge and checking that the path set shrank gives a
    /// sound monotone edit; packing must not grow under it.
    #[test]
    fn packing_is_monotone_under_path_set_shrinkage() {
        use rand::Rng;
        let mut rng = crate::rng::stream_rng(62_000, 0);
        let mut checked = 0;
        while checked < 25 {
            let c = random_coloring(4, 4, 2, rng.random());
            let before = enumerate_alt_paths(
                &c,
                BiVertex::right(0),
                BiVertex::right(1),
                4,
                WorkBudget(1 << 30),
            )
            .unwrap();
            let mut edited = c.clone();
            let (u, v) = (rng.random_range(0..4), rng.random_range(0..4));
            edited.set_color(u, v, RED);
            let after = enumerate_alt_paths(
                &edited,
                BiVertex::right(0),
                BiVertex::right(1),
                4,
                WorkBudget(1 << 30),
            )
            .unwrap();
            let shrank = after.iter().all(|p| before.contains(p));
            if !shrank {
                continue;
            }
            checked += 1;
            let pack_before = max_disjoint_paths(
                &c,
                BiVertex::right(0),
                BiVertex::right(1),
                4,
                &SearchBudget::default(),
            )
            .unwrap();
            let pack_after = max_disjoint_paths(
                &edited,
                BiVertex::right(0),
                BiVertex::right(1),
                4,
                &SearchBudget::default(),
            )
            .unwrap();
            assert!(pack_after.size <= pack_before.size);
        }
    }
}
