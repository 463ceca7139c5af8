//! Core data types and cyclic-index arithmetic.
//!
//! Everything here is an immutable value; operations elsewhere in the crate
//! are pure functions over these types. Lengths are positive integers: the
//! constructions only ever compare lengths, so integer ranks are fully
//! general and keep every test exact. Canonical distinct-length instances
//! are permutations of `1..=n`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A stack of semi-bars in the plane, all with their left endpoint on a
/// common vertical axis. Index 0 is the bottommost bar. `k` is the
/// visibility parameter carried alongside: a sightline may cross up to `k`
/// intermediate bars.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlatArrangement {
    pub k: usize,
    pub lengths: Vec<usize>,
}

/// Semi-bars around a cylinder, all parallel to its axis, with left
/// endpoints on a common circle. `lengths[i]` is the bar at cyclic position
/// `i`; index arithmetic is modulo `n`. Rotating the sequence yields an
/// isomorphic arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CylArrangement {
    pub k: usize,
    pub lengths: Vec<usize>,
}

/// Either kind of arrangement, tagged for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Arrangement {
    Flat(FlatArrangement),
    Cyl(CylArrangement),
}

/// Which of the two kinds to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrangementKind {
    Flat,
    Cyl,
}

/// `n` points in convex position, identified with cyclic indices
/// `0..n-1`, plus a set of chords. Only the cyclic order matters for
/// crossing questions; coordinates are never materialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexDrawing {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

/// A simple undirected graph on vertices `0..n-1`, stored as a sorted set
/// of normalized pairs `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

/// One step of a peeling construction: which vertex was removed, the length
/// its semi-bar received, its degree in the residual drawing at removal, and
/// whether it was the only vertex of degree at most `2k+2` at that point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelStep {
    pub vertex: usize,
    pub length: usize,
    pub degree: usize,
    pub forced: bool,
}

/// Full record of a peeling run, together with the arrangement it produced.
/// The assigned lengths over the whole trace are a permutation of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelTrace {
    pub steps: Vec<PeelStep>,
    pub output: Arrangement,
}

impl FlatArrangement {
    pub fn new(lengths: Vec<usize>, k: usize) -> Self {
        Self { k, lengths }
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    /// True iff no two bars share a length. The constructive theorems all
    /// require this; ties stay representable and are gated per operation.
    pub fn has_distinct_lengths(&self) -> bool {
        distinct(&self.lengths)
    }
}

impl CylArrangement {
    pub fn new(lengths: Vec<usize>, k: usize) -> Self {
        Self { k, lengths }
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn has_distinct_lengths(&self) -> bool {
        distinct(&self.lengths)
    }

    /// The same bars at rotated cyclic positions: position `i` of the result
    /// holds the bar formerly at position `(i + by) mod n`.
    pub fn rotated(&self, by: usize) -> CylArrangement {
        let n = self.lengths.len();
        if n == 0 {
            return self.clone();
        }
        let lengths = (0..n).map(|i| self.lengths[(i + by) % n]).collect();
        CylArrangement { k: self.k, lengths }
    }
}

fn distinct(lengths: &[usize]) -> bool {
    let set: BTreeSet<_> = lengths.iter().collect();
    set.len() == lengths.len()
}

impl Arrangement {
    pub fn k(&self) -> usize {
        match self {
            Arrangement::Flat(a) => a.k,
            Arrangement::Cyl(a) => a.k,
        }
    }

    pub fn lengths(&self) -> &[usize] {
        match self {
            Arrangement::Flat(a) => &a.lengths,
            Arrangement::Cyl(a) => &a.lengths,
        }
    }

    pub fn len(&self) -> usize {
        self.lengths().len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths().is_empty()
    }

    pub fn kind(&self) -> ArrangementKind {
        match self {
            Arrangement::Flat(_) => ArrangementKind::Flat,
            Arrangement::Cyl(_) => ArrangementKind::Cyl,
        }
    }
}

/// Normalize an unordered pair to `(min, max)`.
pub fn normalize_pair(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

impl ConvexDrawing {
    pub fn empty(n: usize) -> Self {
        Self { n, edges: BTreeSet::new() }
    }

    /// Build a drawing from unordered pairs; pairs are normalized to
    /// `(min, max)`.
    pub fn with_edges(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = pairs.into_iter().map(|(i, j)| normalize_pair(i, j)).collect();
        Self { n, edges }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&normalize_pair(i, j))
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.edges.insert(normalize_pair(i, j));
    }

    /// The abstract graph of this drawing (same labels, same edges).
    pub fn graph(&self) -> Graph {
        Graph { n: self.n, edges: self.edges.clone() }
    }

    /// Per-vertex neighbor sets.
    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        adjacency_sets(self.n, &self.edges)
    }

    /// Pairs of vertices not joined by an edge.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if !self.edges.contains(&(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self { n, edges: BTreeSet::new() }
    }

    pub fn from_edges(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let edges = pairs.into_iter().map(|(i, j)| normalize_pair(i, j)).collect();
        Self { n, edges }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.insert((i, j));
            }
        }
        Self { n, edges }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&normalize_pair(i, j))
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.edges.insert(normalize_pair(i, j));
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        adjacency_sets(self.n, &self.edges)
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| normalize_pair(perm[a], perm[b]))
            .collect();
        Graph { n: self.n, edges }
    }
}

fn adjacency_sets(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); n];
    for &(a, b) in edges {
        if a < n && b < n && a != b {
            adj[a].insert(b);
            adj[b].insert(a);
        }
    }
    adj
}

/// Structural validation. `violations` is total and never aborts on
/// malformed data: each violation names the field and the rule broken, and
/// an empty list means every invariant holds.
pub trait Validate {
    fn violations(&self) -> Vec<String>;

    fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }
}

fn length_violations(lengths: &[usize]) -> Vec<String> {
    let mut out = Vec::new();
    if lengths.is_empty() {
        out.push("lengths: must contain at least one bar (n >= 1)".to_string());
    }
    for (i, &l) in lengths.iter().enumerate() {
        if l == 0 {
            out.push(format!("lengths[{i}]: bar length must be >= 1"));
        }
    }
    out
}

impl Validate for FlatArrangement {
    fn violations(&self) -> Vec<String> {
        length_violations(&self.lengths)
    }
}

impl Validate for CylArrangement {
    fn violations(&self) -> Vec<String> {
        length_violations(&self.lengths)
    }
}

impl Validate for Arrangement {
    fn violations(&self) -> Vec<String> {
        match self {
            Arrangement::Flat(a) => a.violations(),
            Arrangement::Cyl(a) => a.violations(),
        }
    }
}

fn edge_set_violations(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<String> {
    let mut out = Vec::new();
    for &(a, b) in edges {
        if a == b {
            out.push(format!("edges: self-loop at {a}"));
            continue;
        }
        if a >= n || b >= n {
            out.push(format!("edges: index out of range in ({a}, {b}) with n = {n}"));
            continue;
        }
        if a > b {
            // (b, a) may also be present, which would be a duplicate edge.
            out.push(format!("edges: pair ({a}, {b}) not normalized (expected i < j)"));
        }
    }
    out
}

impl Validate for ConvexDrawing {
    fn violations(&self) -> Vec<String> {
        edge_set_violations(self.n, &self.edges)
    }
}

impl Validate for Graph {
    fn violations(&self) -> Vec<String> {
        edge_set_violations(self.n, &self.edges)
    }
}

impl Validate for PeelTrace {
    fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n = self.output.len();
        let k = self.output.k();
        if self.steps.len() != n {
            out.push(format!(
                "steps: expected one step per bar ({} bars, {} steps)",
                n,
                self.steps.len()
            ));
        }
        let mut lengths: Vec<usize> = self.steps.iter().map(|s| s.length).collect();
        lengths.sort_unstable();
        if lengths != (1..=self.steps.len()).collect::<Vec<_>>() {
            out.push("steps: assigned lengths are not a permutation of 1..=n".to_string());
        }
        for (i, s) in self.steps.iter().enumerate() {
            if s.degree > 2 * k + 2 {
                out.push(format!(
                    "steps[{i}]: degree_at_peel {} exceeds 2k+2 = {}",
                    s.degree,
                    2 * k + 2
                ));
            }
            if s.vertex >= n {
                out.push(format!("steps[{i}]: vertex {} out of range (n = {n})", s.vertex));
            }
        }
        out.extend(self.output.violations());
        out
    }
}

/// Which way around the circle to walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcSide {
    /// Increasing cyclic indices from `a` up to `b`.
    Ccw,
    /// The complementary arc, listed in increasing cyclic direction from `b`
    /// back around to `a`.
    Cw,
}

/// The indices strictly between `a` and `b` on the given side, in walking
/// order. The two sides partition the remaining `n - 2` indices.
pub fn cyclic_between(n: usize, a: usize, b: usize, side: ArcSide) -> Result<Vec<usize>> {
    if n < 2 || a == b || a >= n || b >= n {
        return Err(Error::DegeneratePair);
    }
    let (from, to) = match side {
        ArcSide::Ccw => (a, b),
        ArcSide::Cw => (b, a),
    };
    let mut out = Vec::new();
    let mut i = (from + 1) % n;
    while i != to {
        out.push(i);
        i = (i + 1) % n;
    }
    Ok(out)
}

/// Cyclic distance between two indices: the length of the shorter arc.
pub fn cyclic_distance(n: usize, a: usize, b: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}
