//! Instance generators: seeded random arrangements, the complete-graph
//! arrangement, the quasiplanar family that no cylindrical arrangement
//! contains, and the interleaved family whose peeling order is forced.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Arrangement, ArrangementKind, ConvexDrawing, CylArrangement, FlatArrangement, PeelTrace};
use crate::transform::peel;

/// A uniformly random permutation of `1..=n` as an arrangement of the given
/// kind. Deterministic in `(n, seed)`.
pub fn random_arrangement(n: usize, k: usize, seed: u64, kind: ArrangementKind) -> Arrangement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lengths: Vec<usize> = (1..=n).collect();
    lengths.shuffle(&mut rng);
    match kind {
        ArrangementKind::Flat => Arrangement::Flat(FlatArrangement { k, lengths }),
        ArrangementKind::Cyl => Arrangement::Cyl(CylArrangement { k, lengths }),
    }
}

/// `2k + 3` bars with lengths `1..=2k+3` in increasing cyclic order; its
/// cylindrical visibility graph is the complete graph `K_{2k+3}`, the
/// largest clique any semi-bar `k`-visibility graph attains.
pub fn complete_graph_arrangement(k: usize) -> CylArrangement {
    CylArrangement { k, lengths: (1..=2 * k + 3).collect() }
}

/// A `(k+2)`-quasiplanar convex drawing on `4(k+1)` vertices that is not a
/// subgraph of any cylindrical semi-bar `k`-visibility graph: `2(k+1)` long
/// chords arranged so that every maximal completion has minimum degree
/// `2k + 3`, one more than the degeneracy of any visibility graph.
pub fn quasiplanar_counterexample(k: usize) -> Result<ConvexDrawing> {
    if k < 1 {
        return Err(Error::KTooSmall);
    }
    let n = 4 * (k + 1);
    let mut edges = Vec::with_capacity(2 * (k + 1));
    for i in 1..=k + 1 {
        edges.push((i - 1, 3 * (k + 1) - i));
        edges.push((k + i, 4 * (k + 1) - i));
    }
    Ok(ConvexDrawing::with_edges(n, edges))
}

/// `(2k+3)(k+1)` bars in `2k + 3` interleaved blocks: block `b` (1-indexed)
/// carries lengths `b, b + (2k+3), ..., b + k(2k+3)`. Peeling its embedding
/// is forced for the first `(2k+3)k - 1` steps; at the next step exactly
/// two vertices reach degree `2k + 2` together, and the choice there
/// decides whether any two of the `2k + 3` longest bars of the result end
/// up cyclically adjacent. The arrangement itself realizes the
/// non-adjacent outcome.
pub fn forced_peel_family(k: usize) -> Result<CylArrangement> {
    if k < 1 {
        return Err(Error::KTooSmall);
    }
    let block_count = 2 * k + 3;
    let mut lengths = Vec::with_capacity(block_count * (k + 1));
    for b in 1..=block_count {
        for t in 0..=k {
            lengths.push(b + t * block_count);
        }
    }
    Ok(CylArrangement { k, lengths })
}

/// Report of a deterministic peel run: per-step forcedness for the first
/// `requested` steps, and whether any two of the `2k + 3` longest bars sit
/// at cyclically adjacent positions in the completed arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelAnalysis {
    pub requested: usize,
    pub forced: Vec<bool>,
    pub all_forced: bool,
    pub adjacent_longest_pair: Option<(usize, usize)>,
    pub trace: PeelTrace,
}

/// Simulate the peel of a maximal drawing and report which of the first
/// `steps` removals were forced (exactly one eligible vertex).
pub fn forced_peel_analysis(d: &ConvexDrawing, k: usize, steps: usize) -> Result<PeelAnalysis> {
    let (arr, trace) = peel(d, k)?;
    let requested = steps.min(trace.steps.len());
    let forced: Vec<bool> = trace.steps[..requested].iter().map(|s| s.forced).collect();
    let all_forced = forced.iter().all(|&f| f);
    Ok(PeelAnalysis {
        requested,
        forced,
        all_forced,
        adjacent_longest_pair: adjacent_among_longest(&arr, 2 * k + 3),
        trace,
    })
}

/// First cyclically adjacent pair of positions among the `count` longest
/// bars, if any.
fn adjacent_among_longest(arr: &CylArrangement, count: usize) -> Option<(usize, usize)> {
    let n = arr.lengths.len();
    if n < 2 {
        return None;
    }
    let mut by_length: Vec<usize> = (0..n).collect();
    by_length.sort_by_key(|&i| std::cmp::Reverse(arr.lengths[i]));
    let longest: Vec<bool> = {
        let mut mark = vec![false; n];
        for &i in by_length.iter().take(count.min(n)) {
            mark[i] = true;
        }
        mark
    };
    (0..n)
        .filter(|&i| longest[i] && longest[(i + 1) % n])
        .map(|i| {
            let j = (i + 1) % n;
            (i.min(j), i.max(j))
        })
        .next()
}
