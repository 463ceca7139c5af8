//! Constructive conversions between arrangements and convex drawings:
//! embedding a cylindrical arrangement as a convex drawing, peeling a
//! maximal drawing back into an arrangement, and curling/cutting between
//! the flat and cylindrical settings.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{
    Arrangement, ConvexDrawing, CylArrangement, FlatArrangement, PeelStep, PeelTrace,
};
use crate::quasiplanar::is_maximal;
use crate::visibility::{cyl_visibility, flat_visibility};

/// Place the bars of a cylindrical arrangement as points in convex
/// position, in the same cyclic order, and connect exactly the visible
/// pairs. The result never contains `k + 2` pairwise crossing edges.
pub fn embed(arr: &CylArrangement) -> ConvexDrawing {
    let g = cyl_visibility(arr);
    ConvexDrawing { n: g.n, edges: g.edges }
}

/// Peel a maximal `(k+2)`-quasiplanar convex drawing into a cylindrical
/// arrangement with distinct lengths `1..=n`: at each step remove a vertex
/// of residual degree at most `2k + 2` (lowest cyclic index on ties) and
/// assign it the next length, shortest first. The visibility graph of the
/// result is recomputed and compared against the input before returning.
pub fn peel(d: &ConvexDrawing, k: usize) -> Result<(CylArrangement, PeelTrace)> {
    if !is_maximal(d, k)? {
        return Err(Error::NotMaximal);
    }
    let (arr, trace) = peel_unchecked(d, k)?;
    if cyl_visibility(&arr) != d.graph() {
        return Err(Error::VisibilityMismatch);
    }
    Ok((arr, trace))
}

/// Outcome of a forced peel: the round-trip guarantee only holds for
/// maximal inputs, so `verified` records whether the recomputed visibility
/// graph matches the input drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelOutcome {
    pub arrangement: CylArrangement,
    pub trace: PeelTrace,
    pub verified: bool,
}

/// Peel without the maximality precondition. The degeneracy requirement
/// still applies; the postcondition is reported instead of enforced.
pub fn peel_force(d: &ConvexDrawing, k: usize) -> Result<PeelOutcome> {
    let (arrangement, trace) = peel_unchecked(d, k)?;
    let verified = cyl_visibility(&arrangement) == d.graph();
    Ok(PeelOutcome { arrangement, trace, verified })
}

fn peel_unchecked(d: &ConvexDrawing, k: usize) -> Result<(CylArrangement, PeelTrace)> {
    let n = d.n;
    let bound = 2 * k + 2;
    let mut adj = d.adjacency();
    let mut alive = vec![true; n];
    let mut lengths = vec![0usize; n];
    let mut steps = Vec::with_capacity(n);
    for step in 0..n {
        let eligible: Vec<usize> = (0..n)
            .filter(|&v| alive[v] && adj[v].len() <= bound)
            .collect();
        let Some(&v) = eligible.first() else {
            return Err(Error::NotDegenerate { step, bound });
        };
        steps.push(PeelStep {
            vertex: v,
            length: step + 1,
            degree: adj[v].len(),
            forced: eligible.len() == 1,
        });
        lengths[v] = step + 1;
        remove_vertex(&mut adj, &mut alive, v);
    }
    let arr = CylArrangement { k, lengths };
    let trace = PeelTrace { steps, output: Arrangement::Cyl(arr.clone()) };
    Ok((arr, trace))
}

fn remove_vertex(adj: &mut [BTreeSet<usize>], alive: &mut [bool], v: usize) {
    alive[v] = false;
    let nbrs: Vec<usize> = adj[v].iter().copied().collect();
    for u in nbrs {
        adj[u].remove(&v);
    }
    adj[v].clear();
}

/// Peel a maximal planar convex drawing (every interior face a triangle)
/// into a flat arrangement for `k = 0`. The vertex at cyclic index 0
/// becomes the topmost bar with length `n` and the vertex at index `n - 1`
/// the bottommost with length `n - 1`; interior vertices are peeled at
/// residual degree two and receive lengths `1..=n-2`, shortest first. Bar
/// `b` of the output, bottom to top, corresponds to cyclic index
/// `n - 1 - b`, and the trace lists steps in length order.
pub fn flat_peel(d: &ConvexDrawing) -> Result<(FlatArrangement, PeelTrace)> {
    let n = d.n;
    match is_maximal(d, 0) {
        Ok(true) => {}
        Ok(false) => return Err(Error::NotMaximalPlanar),
        Err(Error::NotQuasiplanar) => return Err(Error::NotMaximalPlanar),
        Err(e) => return Err(e),
    }
    if n == 0 {
        return Err(Error::NoPeelableVertex);
    }

    let top = 0;
    let bottom = n - 1;
    let mut adj = d.adjacency();
    let mut alive = vec![true; n];
    let mut lengths = vec![0usize; n];
    let mut steps = Vec::with_capacity(n);
    lengths[top] = n;
    if n >= 2 {
        lengths[bottom] = n - 1;
    }

    let forced_now = |adj: &[BTreeSet<usize>], alive: &[bool]| {
        (0..n).filter(|&v| alive[v] && adj[v].len() <= 2).count() == 1
    };

    for step in 0..n.saturating_sub(2) {
        let eligible: Vec<usize> = (0..n)
            .filter(|&v| alive[v] && v != top && v != bottom && adj[v].len() == 2)
            .collect();
        let Some(&v) = eligible.first() else {
            return Err(Error::NoPeelableVertex);
        };
        steps.push(PeelStep {
            vertex: v,
            length: step + 1,
            degree: adj[v].len(),
            forced: forced_now(&adj, &alive),
        });
        lengths[v] = step + 1;
        remove_vertex(&mut adj, &mut alive, v);
    }
    if n >= 2 {
        steps.push(PeelStep {
            vertex: bottom,
            length: n - 1,
            degree: adj[bottom].len(),
            forced: forced_now(&adj, &alive),
        });
        remove_vertex(&mut adj, &mut alive, bottom);
    }
    steps.push(PeelStep { vertex: top, length: n, degree: adj[top].len(), forced: true });

    // Flatten by cutting between the two longest bars (cyclic indices 0 and
    // n-1): bottom-to-top bar order is cyclic index n-1 down to 0.
    let flat_lengths: Vec<usize> = (0..n).map(|b| lengths[n - 1 - b]).collect();
    let arr = FlatArrangement { k: 0, lengths: flat_lengths };

    let mapping: Vec<usize> = (0..n).map(|v| n - 1 - v).collect();
    if flat_visibility(&arr) != d.graph().relabel(&mapping) {
        return Err(Error::VisibilityMismatch);
    }
    let trace = PeelTrace { steps, output: Arrangement::Flat(arr.clone()) };
    Ok((arr, trace))
}

/// Reinterpret a flat arrangement cyclically: the bottom-to-top order
/// becomes the cyclic order. Curling never deletes sightlines, but the two
/// new arcs past the former top and bottom may add some.
pub fn curl(r: &FlatArrangement) -> CylArrangement {
    CylArrangement { k: r.k, lengths: r.lengths.clone() }
}

/// Does curling preserve the graph exactly? True iff the top `k + 1` and
/// bottom `k + 1` bars comprise the `2k + 2` longest and those longest bars
/// are pairwise visible. For `n < 2k + 2` the top and bottom groups cover
/// every bar, so the first condition holds vacuously and the test reduces
/// to all bars being pairwise visible.
pub fn curl_preserves(r: &FlatArrangement) -> Result<bool> {
    if !r.has_distinct_lengths() {
        return Err(Error::TiedLengths);
    }
    let n = r.lengths.len();
    let k = r.k;
    let group = (k + 1).min(n);
    let ends: BTreeSet<usize> = (0..group).chain(n - group..n).collect();

    let mut by_length: Vec<usize> = (0..n).collect();
    by_length.sort_by_key(|&i| std::cmp::Reverse(r.lengths[i]));
    let longest: BTreeSet<usize> = by_length.iter().copied().take((2 * k + 2).min(n)).collect();

    if ends != longest {
        return Ok(false);
    }
    let g = flat_visibility(r);
    let longest: Vec<usize> = longest.into_iter().collect();
    for (idx, &a) in longest.iter().enumerate() {
        for &b in &longest[idx + 1..] {
            if !g.has_edge(a, b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Flatten a cylindrical arrangement by cutting between its two longest
/// bars, placing the longest topmost and the second longest bottommost.
/// Requires distinct lengths and the two longest bars cyclically adjacent.
/// The unrolling direction follows which side of the longest bar the
/// second longest sits on, so the cut is a rigid motion of the cylinder.
pub fn cut(arr: &CylArrangement) -> Result<FlatArrangement> {
    if !arr.has_distinct_lengths() {
        return Err(Error::TiedLengths);
    }
    let n = arr.lengths.len();
    if n == 1 {
        return Ok(FlatArrangement { k: arr.k, lengths: arr.lengths.clone() });
    }
    let mut by_length: Vec<usize> = (0..n).collect();
    by_length.sort_by_key(|&i| std::cmp::Reverse(arr.lengths[i]));
    let (longest, second) = (by_length[0], by_length[1]);

    let lengths: Vec<usize> = if (longest + 1) % n == second {
        // second longest just after the longest: unroll forward from it
        (0..n).map(|b| arr.lengths[(second + b) % n]).collect()
    } else if (second + 1) % n == longest {
        // second longest just before the longest: unroll backward
        (0..n).map(|b| arr.lengths[(second + n - b) % n]).collect()
    } else {
        return Err(Error::LongestNotAdjacent);
    };
    Ok(FlatArrangement { k: arr.k, lengths })
}
