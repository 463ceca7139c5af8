//! Crossing analysis of convex geometric drawings.
//!
//! Chords of a convex polygon cross exactly when their endpoints
//! interleave in cyclic order, so after cutting the circle between `n-1`
//! and `0` a crossing is a proper overlap of index intervals. Any family of
//! pairwise crossing chords, ordered by left endpoint, then satisfies
//! `a_1 < a_2 < ... < a_m < b_1 < b_2 < ... < b_m`. The clique search in
//! [`find_pairwise_crossing`] exploits this: it anchors on the chord with
//! the smallest left endpoint and looks for a chain of chords, increasing
//! in both endpoints, among the chords crossing the anchor to its right.
//! This is exact; module tests compare it against exhaustive subset
//! enumeration.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{cyclic_distance, normalize_pair, ConvexDrawing, Graph};

/// Do two chords of an `n`-gon cross? Chords sharing an endpoint do not
/// cross. Returns false for degenerate pairs (loops, out-of-range indices).
pub fn chords_cross(n: usize, e1: (usize, usize), e2: (usize, usize)) -> bool {
    let (i, j) = normalize_pair(e1.0, e1.1);
    let (a, b) = normalize_pair(e2.0, e2.1);
    if i == j || a == b || j >= n || b >= n {
        return false;
    }
    if a == i || a == j || b == i || b == j {
        return false;
    }
    let inside_a = i < a && a < j;
    let inside_b = i < b && b < j;
    inside_a != inside_b
}

/// Some set of `m` pairwise crossing edges of the drawing, or `None` if no
/// such set exists. Exact; deterministic (the witness is the
/// lexicographically first anchor's first chain).
pub fn find_pairwise_crossing(d: &ConvexDrawing, m: usize) -> Option<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = d.edges.iter().copied().collect();
    find_crossing_family(&edges, m)
}

/// Core search over an explicit normalized edge list.
fn find_crossing_family(edges: &[(usize, usize)], m: usize) -> Option<Vec<(usize, usize)>> {
    if m == 0 {
        return Some(Vec::new());
    }
    for &(a, b) in edges {
        if m == 1 {
            return Some(vec![(a, b)]);
        }
        // Chords crossing (a, b) whose left endpoint lies inside (a, b).
        // Every pairwise crossing family containing (a, b) as its
        // smallest-left-endpoint chord lives in this set, and within it
        // pairwise crossing is equivalent to both endpoints increasing.
        let mut rights: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(c, e)| a < c && c < b && b < e)
            .collect();
        if rights.len() + 1 < m {
            continue;
        }
        // Sort by left endpoint; ties ordered by descending right endpoint
        // so a strictly increasing chain in the right endpoint is strictly
        // increasing in the left endpoint too.
        rights.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        if let Some(chain) = increasing_chain(&rights, m - 1) {
            let mut family = vec![(a, b)];
            family.extend(chain);
            family.sort_unstable();
            return Some(family);
        }
    }
    None
}

/// First chain of `target` chords with strictly increasing right endpoints,
/// in a list sorted as above. Longest-chain DP with parent links.
fn increasing_chain(sorted: &[(usize, usize)], target: usize) -> Option<Vec<(usize, usize)>> {
    if target == 0 {
        return Some(Vec::new());
    }
    let mut best = vec![1usize; sorted.len()];
    let mut parent = vec![usize::MAX; sorted.len()];
    for i in 0..sorted.len() {
        for j in 0..i {
            if sorted[j].1 < sorted[i].1 && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
                parent[i] = j;
            }
        }
        if best[i] >= target {
            let mut chain = Vec::with_capacity(target);
            let mut at = i;
            while at != usize::MAX {
                chain.push(sorted[at]);
                at = parent[at];
            }
            chain.reverse();
            chain.truncate(target);
            return Some(chain);
        }
    }
    None
}

/// No `k + 2` edges of the drawing pairwise cross.
pub fn is_quasiplanar(d: &ConvexDrawing, k: usize) -> bool {
    find_pairwise_crossing(d, k + 2).is_none()
}

/// Would inserting `candidate` complete a family of `k + 2` pairwise
/// crossing edges? Only chords crossing the candidate matter.
fn insertion_blocked(d: &ConvexDrawing, candidate: (usize, usize), k: usize) -> bool {
    let crossing: Vec<(usize, usize)> = d
        .edges
        .iter()
        .copied()
        .filter(|&e| chords_cross(d.n, candidate, e))
        .collect();
    find_crossing_family(&crossing, k + 1).is_some()
}

/// Is the drawing edge-maximal among `(k+2)`-quasiplanar convex geometric
/// drawings? Errors if the drawing is not quasiplanar to begin with.
///
/// A quasiplanar drawing that already carries [`max_edges`] edges is
/// maximal outright, since no convex geometric drawing without `k + 2`
/// pairwise crossing edges can exceed that count; otherwise every non-edge
/// is tried.
pub fn is_maximal(d: &ConvexDrawing, k: usize) -> Result<bool> {
    if !is_quasiplanar(d, k) {
        return Err(Error::NotQuasiplanar);
    }
    if d.edge_count() == max_edges(d.n, k) {
        return Ok(true);
    }
    Ok(d.non_edges().iter().all(|&e| insertion_blocked(d, e, k)))
}

/// Greedily extend a quasiplanar drawing to a maximal one. Candidate
/// non-edges are tried once, in increasing chord span (points on the
/// smaller side), ties broken lexicographically; inserting an edge never
/// unblocks a previously rejected one, so a single pass suffices.
pub fn maximal_completion(d: &ConvexDrawing, k: usize) -> Result<ConvexDrawing> {
    if !is_quasiplanar(d, k) {
        return Err(Error::NotQuasiplanar);
    }
    let mut candidates = d.non_edges();
    candidates.sort_by_key(|&(i, j)| (cyclic_distance(d.n, i, j) - 1, i, j));
    let mut out = d.clone();
    for e in candidates {
        if !insertion_blocked(&out, e, k) {
            out.edges.insert(e);
        }
    }
    Ok(out)
}

/// All vertex pairs whose smaller cyclic side holds exactly `j` points.
/// At the diameter both sides tie and the pair counts once. Values of `j`
/// above `n - 2` yield the empty set.
pub fn j_pairs(d: &ConvexDrawing, j: usize) -> BTreeSet<(usize, usize)> {
    let n = d.n;
    let mut out = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if cyclic_distance(n, a, b) == j + 1 {
                out.insert((a, b));
            }
        }
    }
    out
}

/// Maximum edge count of a `(k+2)`-quasiplanar convex geometric drawing on
/// `n` points: `(k+1)(2n - 2k - 3)` for `n >= 2k + 2`, else `C(n, 2)`.
/// The two branches agree at `n = 2k + 2`.
pub fn max_edges(n: usize, k: usize) -> usize {
    if n <= 2 * k + 2 {
        n * n.saturating_sub(1) / 2
    } else {
        (k + 1) * (2 * n - 2 * k - 3)
    }
}

/// Degeneracy of a graph and a witnessing elimination order: repeatedly
/// remove a minimum-degree vertex (lowest label on ties); the value is the
/// largest degree seen at removal.
pub fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n;
    let mut adj = g.adjacency();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut value = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (adj[v].len(), v))
            .expect("an alive vertex remains");
        value = value.max(adj[v].len());
        order.push(v);
        alive[v] = false;
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        for u in nbrs {
            adj[u].remove(&v);
        }
        adj[v].clear();
    }
    (value, order)
}

/// Proper coloring obtained by coloring vertices in reverse elimination
/// order with the smallest color unused on already-colored neighbors.
/// On a degeneracy order this uses at most `degeneracy + 1` colors.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Result<Vec<usize>> {
    let n = g.n;
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::NotAPermutation);
    }
    let adj = g.adjacency();
    let mut colors = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        let used: BTreeSet<usize> = adj[v]
            .iter()
            .filter(|&&u| colors[u] != usize::MAX)
            .map(|&u| colors[u])
            .collect();
        colors[v] = (0..).find(|c| !used.contains(c)).expect("some color is free");
    }
    Ok(colors)
}

/// Number of distinct colors in a coloring.
pub fn color_count(colors: &[usize]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}
