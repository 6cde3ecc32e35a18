//! Exhaustive and random carrier elements.

use alloc::vec::Vec;

use rand::Rng;

use super::{Carrier, Instance, Structure};
use crate::graph::{
    all_graphs, all_multigraphs, all_oriented_multigraphs, all_trees, Edge, End, EndSym, Label,
    MultiHyperGraph,
};

fn with_roots(graphs: Vec<MultiHyperGraph>, rooted: bool) -> Vec<Structure> {
    let mut out = Vec::new();
    for g in graphs {
        if rooted {
            for &r in g.vertices() {
                out.push(Structure {
                    graph: g.clone(),
                    root: Some(r),
                });
            }
        } else {
            out.push(Structure::unrooted(g));
        }
    }
    out
}

/// Every element of the carrier on `vertices`, with at most `edge_cap`
/// edges for the carriers that allow unboundedly many.
pub fn carrier_elements(inst: &Instance, vertices: &[Label], edge_cap: usize) -> Vec<Structure> {
    if vertices.is_empty() {
        return Vec::new();
    }
    let graphs: Vec<MultiHyperGraph> = match inst.carrier {
        Carrier::Sets => alloc::vec![MultiHyperGraph::empty(vertices.iter().copied())],
        Carrier::Identity if vertices.len() == 1 => {
            alloc::vec![MultiHyperGraph::empty(vertices.iter().copied())]
        }
        Carrier::Identity => Vec::new(),
        Carrier::MultiGraphs => all_multigraphs(vertices, edge_cap),
        Carrier::ConnectedMultiGraphs => all_multigraphs(vertices, edge_cap)
            .into_iter()
            .filter(MultiHyperGraph::is_connected)
            .collect(),
        Carrier::Graphs | Carrier::RootedGraphs => all_graphs(vertices),
        Carrier::ConnectedGraphs => all_graphs(vertices)
            .into_iter()
            .filter(MultiHyperGraph::is_connected)
            .collect(),
        Carrier::Trees | Carrier::RootedTrees => all_trees(vertices),
        Carrier::RootedOrientedMultiGraphs => all_oriented_multigraphs(vertices, edge_cap),
        Carrier::RootedConnectedOrientedMultiGraphs => all_oriented_multigraphs(vertices, edge_cap)
            .into_iter()
            .filter(MultiHyperGraph::is_connected)
            .collect(),
    };
    with_roots(graphs, inst.rooted())
}

fn random_tree<R: Rng>(vertices: &[Label], rng: &mut R) -> Vec<Edge> {
    // random recursive attachment over a shuffled order covers every tree
    let mut order = vertices.to_vec();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    (1..order.len())
        .map(|i| Edge::pair(order[i], order[rng.gen_range(0..i)]))
        .collect()
}

fn random_pair<R: Rng>(vertices: &[Label], loops: bool, rng: &mut R) -> Option<(Label, Label)> {
    let n = vertices.len();
    if n < 2 && !loops {
        return None;
    }
    loop {
        let (a, b) = (vertices[rng.gen_range(0..n)], vertices[rng.gen_range(0..n)]);
        if loops || a != b {
            return Some((a, b));
        }
    }
}

fn random_sym<R: Rng>(rng: &mut R) -> EndSym {
    if rng.gen_bool(0.5) {
        EndSym::Arrow
    } else {
        EndSym::Plain
    }
}

/// A random element of the carrier on `vertices` (nonempty).
pub fn random_element<R: Rng>(inst: &Instance, vertices: &[Label], rng: &mut R) -> Structure {
    let vs = || vertices.iter().copied();
    let extra = |rng: &mut R, loops: bool| -> Vec<Edge> {
        let k = rng.gen_range(0..=2);
        (0..k)
            .filter_map(|_| random_pair(vertices, loops, rng))
            .map(|(a, b)| Edge::pair(a, b))
            .collect()
    };
    let simple = |rng: &mut R, mut edges: Vec<Edge>| -> Vec<Edge> {
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                let e = Edge::pair(a, b);
                if !edges.contains(&e) && rng.gen_bool(0.35) {
                    edges.push(e);
                }
            }
        }
        edges
    };
    let orient = |rng: &mut R, edges: Vec<Edge>| -> Vec<Edge> {
        edges
            .into_iter()
            .map(|e| {
                Edge::new(
                    e.ends()
                        .iter()
                        .map(|x| End::new(x.vertex, random_sym(rng)))
                        .collect::<Vec<_>>(),
                )
            })
            .collect()
    };
    let edges: Vec<Edge> = match inst.carrier {
        Carrier::Sets | Carrier::Identity => Vec::new(),
        Carrier::MultiGraphs => extra(rng, true)
            .into_iter()
            .chain(extra(rng, true))
            .collect(),
        Carrier::ConnectedMultiGraphs => {
            let mut e = random_tree(vertices, rng);
            e.extend(extra(rng, true));
            e
        }
        Carrier::Graphs | Carrier::RootedGraphs => simple(rng, Vec::new()),
        Carrier::ConnectedGraphs => {
            let t = random_tree(vertices, rng);
            simple(rng, t)
        }
        Carrier::Trees | Carrier::RootedTrees => random_tree(vertices, rng),
        Carrier::RootedOrientedMultiGraphs => {
            let e: Vec<Edge> = extra(rng, true)
                .into_iter()
                .chain(extra(rng, true))
                .collect();
            orient(rng, e)
        }
        Carrier::RootedConnectedOrientedMultiGraphs => {
            let mut e = random_tree(vertices, rng);
            e.extend(extra(rng, true));
            orient(rng, e)
        }
    };
    let graph = MultiHyperGraph::new(vs(), edges).expect("edges on vertices");
    let root = inst
        .rooted()
        .then(|| vertices[rng.gen_range(0..vertices.len())]);
    Structure { graph, root }
}
