//! Spanning trees, rooted trees and orientations.

use alloc::collections::VecDeque;
use alloc::vec::Vec;

use super::{Edge, End, EndSym, Label, MultiHyperGraph};
use crate::error::{Error, Result};
use crate::perm::subsets;

/// A structure with a distinguished vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootedGraph {
    pub graph: MultiHyperGraph,
    pub root: Label,
}

impl RootedGraph {
    pub fn new(graph: MultiHyperGraph, root: Label) -> Result<Self> {
        if !graph.has_vertex(root) {
            return Err(Error::MissingLabel(root));
        }
        Ok(Self { graph, root })
    }
}

/// All spanning trees of a connected multigraph, as sorted lists of edge
/// indices. Parallel edges give distinct trees; loops are never used.
pub fn spanning_trees(g: &MultiHyperGraph) -> Result<Vec<Vec<usize>>> {
    if !g.is_multigraph() {
        return Err(Error::Invalid("spanning trees need a multigraph".into()));
    }
    if !g.is_connected() || g.order() == 0 {
        return Err(Error::Disconnected);
    }
    let candidates: Vec<usize> = (0..g.edge_count())
        .filter(|&i| !g.edges()[i].is_loop())
        .collect();
    let need = g.order() - 1;
    let mut out = Vec::new();
    for pick in subsets(candidates.len(), need) {
        let chosen: Vec<usize> = pick.iter().map(|&i| candidates[i]).collect();
        if is_spanning_tree(g, &chosen) {
            out.push(chosen);
        }
    }
    Ok(out)
}

fn is_spanning_tree(g: &MultiHyperGraph, chosen: &[usize]) -> bool {
    if chosen.len() + 1 != g.order() {
        return false;
    }
    let mut seen = Vec::with_capacity(chosen.len());
    for &i in chosen {
        if i >= g.edge_count() || seen.contains(&i) {
            return false;
        }
        seen.push(i);
    }
    let sub = MultiHyperGraph::from_parts(
        g.vertices().to_vec(),
        chosen.iter().map(|&i| g.edges()[i].forget()).collect(),
    );
    sub.is_tree()
}

/// Parent of each vertex in a tree hanging from `root`, as `(child, parent)`
/// pairs in breadth-first order.
fn parents(vertices: &[Label], edges: &[&Edge], root: Label) -> Vec<(Label, Label)> {
    let mut done = alloc::vec![false; vertices.len()];
    let idx = |l: Label| vertices.binary_search(&l).expect("vertex");
    done[idx(root)] = true;
    let mut queue = VecDeque::from([root]);
    let mut out = Vec::new();
    while let Some(p) = queue.pop_front() {
        for e in edges {
            let (a, b) = (e.ends()[0].vertex, e.ends()[1].vertex);
            let child = if a == p {
                b
            } else if b == p {
                a
            } else {
                continue;
            };
            if !done[idx(child)] {
                done[idx(child)] = true;
                out.push((child, p));
                queue.push_back(child);
            }
        }
    }
    out
}

/// Tree edges of `g` at `tree` hung from `r`: the parent end of every edge
/// is labelled, the child end is not. Other edges get both ends labelled.
pub fn orient_by_tree(g: &MultiHyperGraph, tree: &[usize], r: Label) -> Result<MultiHyperGraph> {
    if !g.has_vertex(r) {
        return Err(Error::MissingLabel(r));
    }
    if !g.is_multigraph() || !is_spanning_tree(g, tree) {
        return Err(Error::NotSpanningTree);
    }
    let tree_edges: Vec<&Edge> = tree.iter().map(|&i| &g.edges()[i]).collect();
    let mut edges: Vec<Edge> = parents(g.vertices(), &tree_edges, r)
        .into_iter()
        .map(|(child, parent)| Edge::new([End::plain(child), End::new(parent, EndSym::Arrow)]))
        .collect();
    for (i, e) in g.edges().iter().enumerate() {
        if !tree.contains(&i) {
            edges.push(label_all(e));
        }
    }
    Ok(MultiHyperGraph::from_parts(g.vertices().to_vec(), edges))
}

/// A rooted tree with parent ends labelled.
pub fn orient_tree(t: &MultiHyperGraph, r: Label) -> Result<MultiHyperGraph> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    let all: Vec<usize> = (0..t.edge_count()).collect();
    orient_by_tree(t, &all, r)
}

fn label_all(e: &Edge) -> Edge {
    Edge::new(e.ends().iter().map(|x| End::new(x.vertex, EndSym::Arrow)))
}

/// Labels every end of every edge.
pub fn iota(g: &MultiHyperGraph) -> MultiHyperGraph {
    MultiHyperGraph::from_parts(
        g.vertices().to_vec(),
        g.edges().iter().map(label_all).collect(),
    )
}

/// Drops every end label.
pub fn forget_orientation(g: &MultiHyperGraph) -> MultiHyperGraph {
    g.forget_symbols()
}
