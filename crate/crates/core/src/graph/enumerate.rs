//! Exhaustive enumeration of small structures on a fixed vertex set.

use alloc::vec::Vec;

use super::{Edge, End, EndSym, Label, MultiHyperGraph};

fn pairs(vertices: &[Label], loops: bool) -> Vec<(Label, Label)> {
    let mut out = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        let start = if loops { i } else { i + 1 };
        for &v in &vertices[start..] {
            out.push((u, v));
        }
    }
    out
}

/// Calls `f` on every multiset of size `k` drawn from `0..m`, as a
/// non-decreasing index list.
fn multisets<F: FnMut(&[usize])>(m: usize, k: usize, mut f: F) {
    if k == 0 {
        f(&[]);
        return;
    }
    if m == 0 {
        return;
    }
    let mut idx = alloc::vec![0usize; k];
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] + 1 < m {
                let v = idx[i] + 1;
                for slot in &mut idx[i..] {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// All simple graphs on `vertices`.
pub fn all_graphs(vertices: &[Label]) -> Vec<MultiHyperGraph> {
    let ps = pairs(vertices, false);
    let mut out = Vec::with_capacity(1 << ps.len());
    for mask in 0u64..(1u64 << ps.len()) {
        let edges = ps
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &(u, v))| Edge::pair(u, v))
            .collect();
        out.push(MultiHyperGraph::from_parts(vertices.to_vec(), edges));
    }
    out.sort();
    out
}

/// All plain multigraphs (loops allowed) on `vertices` with exactly `k` edges.
pub fn multigraphs_with_edges(vertices: &[Label], k: usize) -> Vec<MultiHyperGraph> {
    let ps = pairs(vertices, true);
    let mut out = Vec::new();
    multisets(ps.len(), k, |idx| {
        let edges = idx.iter().map(|&i| Edge::pair(ps[i].0, ps[i].1)).collect();
        out.push(MultiHyperGraph::from_parts(vertices.to_vec(), edges));
    });
    out.sort();
    out
}

/// All plain multigraphs with at most `max_edges` edges.
pub fn all_multigraphs(vertices: &[Label], max_edges: usize) -> Vec<MultiHyperGraph> {
    (0..=max_edges)
        .flat_map(|k| multigraphs_with_edges(vertices, k))
        .collect()
}

/// All multigraphs with end labels from `{_, >}` and at most `max_edges` edges.
pub fn all_oriented_multigraphs(vertices: &[Label], max_edges: usize) -> Vec<MultiHyperGraph> {
    use EndSym::{Arrow, Plain};
    let mut kinds: Vec<Edge> = Vec::new();
    for (u, v) in pairs(vertices, true) {
        let combos: &[(EndSym, EndSym)] = if u == v {
            &[(Plain, Plain), (Plain, Arrow), (Arrow, Arrow)]
        } else {
            &[
                (Plain, Plain),
                (Plain, Arrow),
                (Arrow, Plain),
                (Arrow, Arrow),
            ]
        };
        for &(a, b) in combos {
            kinds.push(Edge::new([End::new(u, a), End::new(v, b)]));
        }
    }
    let mut out = Vec::new();
    for k in 0..=max_edges {
        multisets(kinds.len(), k, |idx| {
            let edges = idx.iter().map(|&i| kinds[i].clone()).collect();
            out.push(MultiHyperGraph::from_parts(vertices.to_vec(), edges));
        });
    }
    out.sort();
    out
}

/// All trees on `vertices`, via Prüfer sequences.
pub fn all_trees(vertices: &[Label]) -> Vec<MultiHyperGraph> {
    let n = vertices.len();
    match n {
        0 => return Vec::new(),
        1 => return alloc::vec![MultiHyperGraph::empty(vertices.iter().copied())],
        _ => {}
    }
    let mut out = Vec::new();
    let mut seq = alloc::vec![0usize; n - 2];
    loop {
        out.push(prufer_decode(vertices, &seq));
        let mut i = seq.len();
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

fn prufer_decode(vertices: &[Label], seq: &[usize]) -> MultiHyperGraph {
    let n = vertices.len();
    let mut degree = alloc::vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).expect("leaf");
        edges.push(Edge::pair(vertices[leaf], vertices[s]));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&i| degree[i] == 1).collect();
    edges.push(Edge::pair(vertices[rest[0]], vertices[rest[1]]));
    MultiHyperGraph::from_parts(vertices.to_vec(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: u32) -> Vec<Label> {
        (1..=n).map(Label).collect()
    }

    #[test]
    fn graph_counts() {
        for (n, c) in [(1, 1), (2, 2), (3, 8), (4, 64), (5, 1024)] {
            let gs = all_graphs(&labels(n));
            assert_eq!(gs.len(), c);
            assert!(gs.iter().all(|g| g.is_graph()));
        }
    }

    #[test]
    fn tree_counts_are_cayley() {
        for n in 1..=6u32 {
            let ts = all_trees(&labels(n));
            assert_eq!(ts.len(), (n as usize).pow(n.saturating_sub(2)));
            assert!(ts.iter().all(|t| t.is_tree()));
            let mut d = ts.clone();
            d.dedup();
            assert_eq!(d.len(), ts.len());
        }
    }

    #[test]
    fn multigraph_counts() {
        // C(p + k - 1, k) with p = n(n+1)/2 edge kinds
        let vs = labels(3);
        assert_eq!(multigraphs_with_edges(&vs, 0).len(), 1);
        assert_eq!(multigraphs_with_edges(&vs, 1).len(), 6);
        assert_eq!(multigraphs_with_edges(&vs, 2).len(), 21);
        assert_eq!(all_multigraphs(&vs, 2).len(), 28);
        // 2 vertices: two loops with 3 labelings each, one pair with 4
        assert_eq!(all_oriented_multigraphs(&labels(2), 1).len(), 11);
        assert_eq!(all_oriented_multigraphs(&labels(2), 2).len(), 11 + 55);
    }
}
