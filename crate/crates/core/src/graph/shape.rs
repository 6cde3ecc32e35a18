//! Byte keys: exact keys on concrete labels and isomorphism-invariant shape keys.

use alloc::vec::Vec;

use super::{EndSym, Label, MultiHyperGraph};
use crate::error::{Error, Result};
use crate::perm::next_permutation;

/// Largest vertex count accepted by [`shape_key`].
pub const SHAPE_BOUND: usize = 8;

/// Isomorphism class key: the least canonical encoding over all relabelings
/// onto `0..n`.
pub type ShapeKey = Vec<u8>;

const NO_ROOT: u32 = u32::MAX;

fn sym_byte(s: EndSym) -> u8 {
    match s {
        EndSym::Plain => 0,
        EndSym::Arrow => 1,
    }
}

/// Deterministic encoding of a (possibly rooted) graph on its own labels.
/// Two structures have equal bytes iff they are equal.
pub fn canonical_bytes(g: &MultiHyperGraph, root: Option<Label>) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + 4 * g.order() + 10 * g.edge_count());
    out.extend_from_slice(&(g.order() as u32).to_be_bytes());
    for v in g.vertices() {
        out.extend_from_slice(&v.0.to_be_bytes());
    }
    out.extend_from_slice(&root.map_or(NO_ROOT, |r| r.0).to_be_bytes());
    out.extend_from_slice(&(g.edge_count() as u32).to_be_bytes());
    for e in g.edges() {
        out.push(e.degree() as u8);
        for end in e.ends() {
            out.extend_from_slice(&end.vertex.0.to_be_bytes());
            out.push(sym_byte(end.sym));
        }
    }
    out
}

/// Shape key of a (possibly rooted) graph. Graphs get equal keys iff they are
/// isomorphic (as rooted structures when a root is given).
pub fn shape_key(g: &MultiHyperGraph, root: Option<Label>) -> Result<ShapeKey> {
    let n = g.order();
    if n > SHAPE_BOUND {
        return Err(Error::TooManyVertices(n, SHAPE_BOUND));
    }
    let index = |l: Label| g.vertices().binary_search(&l).expect("vertex") as u8;
    let edges: Vec<Vec<(u8, u8)>> = g
        .edges()
        .iter()
        .map(|e| {
            e.ends()
                .iter()
                .map(|x| (index(x.vertex), sym_byte(x.sym)))
                .collect()
        })
        .collect();
    let root_idx = match root {
        Some(r) if !g.has_vertex(r) => return Err(Error::MissingLabel(r)),
        Some(r) => Some(index(r)),
        None => None,
    };

    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u8>> = None;
    let mut mapped: Vec<Vec<(u8, u8)>> = edges.clone();
    let mut buf = Vec::new();
    loop {
        for (m, e) in mapped.iter_mut().zip(&edges) {
            for (slot, &(v, s)) in m.iter_mut().zip(e) {
                *slot = (perm[v as usize] as u8, s);
            }
            m.sort_unstable();
        }
        mapped.sort_unstable();
        buf.clear();
        buf.push(n as u8);
        buf.push(root_idx.map_or(u8::MAX, |r| perm[r as usize] as u8));
        for m in &mapped {
            buf.push(m.len() as u8);
            for &(v, s) in m {
                buf.push(v);
                buf.push(s);
            }
        }
        if best.as_ref().is_none_or(|b| buf < *b) {
            best = Some(buf.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(best.unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, MultiHyperGraph};

    fn mg(v: &[u32], e: &[(u32, u32)]) -> MultiHyperGraph {
        MultiHyperGraph::multigraph(v, e).unwrap()
    }

    #[test]
    fn isomorphic_paths_share_a_key() {
        let p1 = mg(&[1, 2, 3], &[(1, 2), (2, 3)]);
        let p2 = mg(&[1, 2, 3], &[(2, 1), (1, 3)]);
        assert_eq!(shape_key(&p1, None).unwrap(), shape_key(&p2, None).unwrap());
        let tri = mg(&[1, 2, 3], &[(1, 2), (2, 3), (1, 3)]);
        assert_ne!(
            shape_key(&p1, None).unwrap(),
            shape_key(&tri, None).unwrap()
        );
    }

    #[test]
    fn root_and_orientation_matter() {
        let p = mg(&[1, 2, 3], &[(1, 2), (2, 3)]);
        let end = shape_key(&p, Some(Label(1))).unwrap();
        let mid = shape_key(&p, Some(Label(2))).unwrap();
        assert_ne!(end, mid);
        assert_eq!(end, shape_key(&p, Some(Label(3))).unwrap());
        let a =
            MultiHyperGraph::new([Label(1), Label(2)], [Edge::arc(Label(1), Label(2))]).unwrap();
        let b =
            MultiHyperGraph::new([Label(1), Label(2)], [Edge::arc(Label(2), Label(1))]).unwrap();
        assert_eq!(shape_key(&a, None).unwrap(), shape_key(&b, None).unwrap());
        assert_ne!(
            shape_key(&a, Some(Label(1))).unwrap(),
            shape_key(&b, Some(Label(1))).unwrap()
        );
    }

    #[test]
    fn five_vertex_five_edge_generators_differ() {
        // bull and banner (4-cycle with a pendant vertex)
        let bull = mg(&[1, 2, 3, 4, 5], &[(1, 2), (1, 3), (1, 5), (2, 4), (2, 5)]);
        let banner = mg(&[1, 2, 3, 4, 5], &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5)]);
        assert_ne!(
            shape_key(&bull, None).unwrap(),
            shape_key(&banner, None).unwrap()
        );
        let relabeled = mg(&[1, 2, 3, 4, 5], &[(5, 4), (5, 3), (5, 1), (4, 2), (4, 1)]);
        assert_eq!(
            shape_key(&bull, None).unwrap(),
            shape_key(&relabeled, None).unwrap()
        );
    }

    #[test]
    fn bound_enforced() {
        let g = MultiHyperGraph::empty((0..9).map(Label));
        assert_eq!(shape_key(&g, None), Err(Error::TooManyVertices(9, 8)));
    }

    #[test]
    fn canonical_bytes_separate_labels() {
        let a = mg(&[1, 2], &[(1, 2)]);
        let b = mg(&[1, 3], &[(1, 3)]);
        assert_ne!(canonical_bytes(&a, None), canonical_bytes(&b, None));
        assert_ne!(
            canonical_bytes(&a, None),
            canonical_bytes(&a, Some(Label(1)))
        );
        assert_eq!(canonical_bytes(&a, None), canonical_bytes(&a.clone(), None));
    }
}
