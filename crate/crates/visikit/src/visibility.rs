//! Visibility graphs of semi-bar arrangements.
//!
//! Two bars see each other when some sightline (a vertical segment in the
//! flat setting, a circular arc in the cylindrical one) meets both while
//! crossing at most `k` other bars. An intermediate bar blocks a sightline
//! between bars of lengths `a` and `b` exactly when its length is at least
//! `min(a, b)`: the sightline sits at height `t <= min(a, b)` and lowering
//! `t` only adds blockers, so the best height is `min(a, b)` itself. With
//! distinct lengths this reduces to the usual strict comparison.
//!
//! [`sightline_oracle`] deliberately skips that observation and quantifies
//! over all candidate heights and sides, so the fast routines can be checked
//! against a direct simulation of the definition.

use crate::error::{Error, Result};
use crate::model::{Arrangement, CylArrangement, FlatArrangement, Graph};

/// Visibility graph of a flat arrangement. Vertex labels are bar indices,
/// bottom to top.
pub fn flat_visibility(arr: &FlatArrangement) -> Graph {
    let n = arr.lengths.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let sill = arr.lengths[i].min(arr.lengths[j]);
            let blockers = arr.lengths[i + 1..j].iter().filter(|&&l| l >= sill).count();
            if blockers <= arr.k {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Visibility graph of a cylindrical arrangement. Two bars see each other
/// when either of the two arcs between them carries at most `k` blockers.
pub fn cyl_visibility(arr: &CylArrangement) -> Graph {
    let n = arr.lengths.len();
    let mut g = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            let sill = arr.lengths[i].min(arr.lengths[j]);
            let inner = arr.lengths[i + 1..j].iter().filter(|&&l| l >= sill).count();
            let outer = arr.lengths[j + 1..]
                .iter()
                .chain(arr.lengths[..i].iter())
                .filter(|&&l| l >= sill)
                .count();
            if inner.min(outer) <= arr.k {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Brute-force sightline existence between bars `i` and `j`: tries every
/// candidate height and every side. Candidate heights need only be bar
/// lengths, because the blocking count is a step function of the height.
pub fn sightline_oracle(arr: &Arrangement, i: usize, j: usize) -> Result<bool> {
    let lengths = arr.lengths();
    let n = lengths.len();
    if i >= n || j >= n || i == j {
        return Err(Error::DegeneratePair);
    }
    let k = arr.k();
    let (a, b) = (i.min(j), i.max(j));
    let sill = lengths[a].min(lengths[b]);

    let mut sides: Vec<Vec<usize>> = vec![lengths[a + 1..b].to_vec()];
    if matches!(arr, Arrangement::Cyl(_)) {
        let outer: Vec<usize> = lengths[b + 1..]
            .iter()
            .chain(lengths[..a].iter())
            .copied()
            .collect();
        sides.push(outer);
    }

    for &t in lengths.iter().filter(|&&t| t <= sill) {
        for side in &sides {
            if side.iter().filter(|&&l| l >= t).count() <= k {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Number of edges at bar `i` whose other endpoint is strictly longer.
/// Summed over all bars this counts every edge exactly once.
pub fn shorter_bar_edge_count(arr: &CylArrangement, i: usize) -> Result<usize> {
    if !arr.has_distinct_lengths() {
        return Err(Error::TiedLengths);
    }
    let n = arr.lengths.len();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let g = cyl_visibility(arr);
    let count = g
        .edges
        .iter()
        .filter(|&&(a, b)| {
            (a == i && arr.lengths[b] > arr.lengths[i])
                || (b == i && arr.lengths[a] > arr.lengths[i])
        })
        .count();
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ArrangementKind;

    fn flat(lengths: &[usize], k: usize) -> FlatArrangement {
        FlatArrangement::new(lengths.to_vec(), k)
    }

    fn cyl(lengths: &[usize], k: usize) -> CylArrangement {
        CylArrangement::new(lengths.to_vec(), k)
    }

    fn edges(g: &Graph) -> Vec<(usize, usize)> {
        g.edges.iter().copied().collect()
    }

    /// Checks a fast visibility graph pair-by-pair against the oracle.
    fn agrees_with_oracle(arrangement: &Arrangement, g: &Graph) {
        let n = arrangement.len();
        for i in 0..n {
            for j in i + 1..n {
                let slow = sightline_oracle(arrangement, i, j).unwrap();
                assert_eq!(
                    g.has_edge(i, j),
                    slow,
                    "disagreement at pair ({i}, {j}) in {arrangement:?}"
                );
            }
        }
    }

    #[test]
    fn flat_staircase_k0() {
        let g = flat_visibility(&flat(&[1, 2, 3], 0));
        assert_eq!(edges(&g), vec![(0, 1), (1, 2)]);
        agrees_with_oracle(&Arrangement::Flat(flat(&[1, 2, 3], 0)), &g);
    }

    #[test]
    fn flat_short_bar_blocks_nothing() {
        let g = flat_visibility(&flat(&[2, 1, 3], 0));
        assert_eq!(edges(&g), vec![(0, 1), (0, 2), (1, 2)]);
        agrees_with_oracle(&Arrangement::Flat(flat(&[2, 1, 3], 0)), &g);
    }

    #[test]
    fn flat_staircase_k1() {
        let g = flat_visibility(&flat(&[1, 2, 3, 4], 1));
        assert_eq!(edges(&g), vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(g.edge_count(), 5);
        agrees_with_oracle(&Arrangement::Flat(flat(&[1, 2, 3, 4], 1)), &g);
    }

    #[test]
    fn cyl_triangle_is_complete() {
        let g = cyl_visibility(&cyl(&[3, 1, 2], 0));
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn cyl_staircase_k0() {
        let g = cyl_visibility(&cyl(&[1, 2, 3, 4], 0));
        assert_eq!(edges(&g), vec![(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]);
        agrees_with_oracle(&Arrangement::Cyl(cyl(&[1, 2, 3, 4], 0)), &g);
    }

    #[test]
    fn cyl_interleaved_family_hits_the_edge_maximum() {
        let g = cyl_visibility(&cyl(&[1, 6, 2, 7, 3, 8, 4, 9, 5, 10], 1));
        assert_eq!(g.edge_count(), 30);
    }

    #[test]
    fn oracle_spot_checks() {
        let f = Arrangement::Flat(flat(&[1, 2, 3], 0));
        assert!(!sightline_oracle(&f, 0, 2).unwrap());
        let f = Arrangement::Flat(flat(&[2, 1, 3], 0));
        assert!(sightline_oracle(&f, 0, 2).unwrap());
        let c = Arrangement::Cyl(cyl(&[1, 2, 3, 4], 0));
        assert!(sightline_oracle(&c, 1, 3).unwrap());
        assert!(!sightline_oracle(&c, 0, 2).unwrap());
    }

    #[test]
    fn oracle_rejects_degenerate_pairs() {
        let c = Arrangement::Cyl(cyl(&[1, 2, 3], 0));
        assert_eq!(sightline_oracle(&c, 1, 1), Err(Error::DegeneratePair));
        assert_eq!(sightline_oracle(&c, 0, 3), Err(Error::DegeneratePair));
    }

    #[test]
    fn shorter_bar_counts_follow_rank() {
        let arr = cyl(&[1, 6, 2, 7, 3, 8, 4, 9, 5, 10], 1);
        // shortest bar: 2k+2 edges as the shorter endpoint
        assert_eq!(shorter_bar_edge_count(&arr, 0).unwrap(), 4);
        // longest bar: none
        assert_eq!(shorter_bar_edge_count(&arr, 9).unwrap(), 0);
        // third longest (length 8 at position 5): rank - 1 = 2
        assert_eq!(shorter_bar_edge_count(&arr, 5).unwrap(), 2);
    }

    #[test]
    fn shorter_bar_count_requires_distinct_lengths() {
        let arr = cyl(&[2, 2, 1], 0);
        assert_eq!(shorter_bar_edge_count(&arr, 0), Err(Error::TiedLengths));
    }

    #[test]
    fn shorter_bar_counts_sum_to_edge_count() {
        let arr = cyl(&[4, 1, 7, 3, 6, 2, 5], 1);
        let total: usize = (0..7).map(|i| shorter_bar_edge_count(&arr, i).unwrap()).sum();
        assert_eq!(total, cyl_visibility(&arr).edge_count());
    }

    mod props {
        use super::*;
        use crate::generate::random_arrangement;
        use proptest::prelude::*;

        fn perm_arrangement(kind: ArrangementKind) -> impl Strategy<Value = Arrangement> {
            (1usize..9, 0usize..4, any::<u64>())
                .prop_map(move |(n, k, seed)| random_arrangement(n, k, seed, kind))
        }

        proptest! {
            #[test]
            fn fast_flat_matches_oracle(arr in perm_arrangement(ArrangementKind::Flat)) {
                let Arrangement::Flat(f) = &arr else { unreachable!() };
                let g = flat_visibility(f);
                agrees_with_oracle(&arr, &g);
            }

            #[test]
            fn fast_cyl_matches_oracle(arr in perm_arrangement(ArrangementKind::Cyl)) {
                let Arrangement::Cyl(c) = &arr else { unreachable!() };
                let g = cyl_visibility(c);
                agrees_with_oracle(&arr, &g);
            }

            #[test]
            fn edges_grow_with_k(n in 1usize..9, k in 0usize..3, seed in any::<u64>()) {
                let Arrangement::Cyl(c) = random_arrangement(n, k, seed, ArrangementKind::Cyl)
                    else { unreachable!() };
                let mut wider = c.clone();
                wider.k = k + 1;
                let g = cyl_visibility(&c);
                let h = cyl_visibility(&wider);
                prop_assert!(g.edges.is_subset(&h.edges));
                let f = FlatArrangement::new(c.lengths.clone(), c.k);
                let mut fw = f.clone();
                fw.k = k + 1;
                prop_assert!(flat_visibility(&f).edges.is_subset(&flat_visibility(&fw).edges));
            }

            #[test]
            fn rotation_relabels_the_graph(n in 1usize..9, k in 0usize..3, seed in any::<u64>(), by in 0usize..9) {
                let Arrangement::Cyl(c) = random_arrangement(n, k, seed, ArrangementKind::Cyl)
                    else { unreachable!() };
                let by = by % n;
                let rotated = c.rotated(by);
                // position i of `rotated` holds old position (i + by) % n,
                // so old vertex v maps to new vertex (v + n - by) % n.
                let perm: Vec<usize> = (0..n).map(|v| (v + n - by) % n).collect();
                prop_assert_eq!(cyl_visibility(&c).relabel(&perm), cyl_visibility(&rotated));
            }

            #[test]
            fn shortest_bar_in_any_subset_sees_at_most_2k_plus_2(
                n in 2usize..9, k in 0usize..3, seed in any::<u64>(), mask in any::<u16>()
            ) {
                let Arrangement::Cyl(c) = random_arrangement(n, k, seed, ArrangementKind::Cyl)
                    else { unreachable!() };
                let kept: Vec<usize> =
                    (0..n).filter(|i| mask & (1 << i) != 0).collect();
                prop_assume!(!kept.is_empty());
                let sub = CylArrangement::new(kept.iter().map(|&i| c.lengths[i]).collect(), k);
                let g = cyl_visibility(&sub);
                let shortest = (0..sub.len())
                    .min_by_key(|&i| sub.lengths[i])
                    .unwrap();
                prop_assert!(g.degree(shortest) <= 2 * k + 2);
            }

            #[test]
            fn shorter_bar_sum_identity(n in 1usize..9, k in 0usize..3, seed in any::<u64>()) {
                let Arrangement::Cyl(c) = random_arrangement(n, k, seed, ArrangementKind::Cyl)
                    else { unreachable!() };
                let total: usize =
                    (0..n).map(|i| shorter_bar_edge_count(&c, i).unwrap()).sum();
                prop_assert_eq!(total, cyl_visibility(&c).edge_count());
            }
        }
    }
}
