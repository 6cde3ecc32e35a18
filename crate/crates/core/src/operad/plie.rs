//! Rooted trees: insertion by grafting, and the map from unrooted trees.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use num_traits::One;

use super::{forget_ends, Structure, MG_OR, PLIE};
use crate::error::{Error, Result};
use crate::graph::{orient_tree, Edge, Label, MultiHyperGraph};
use crate::linalg::{LinComb, Rational};

fn parent_map(t: &MultiHyperGraph, root: Label) -> BTreeMap<Label, Label> {
    let mut parent = BTreeMap::new();
    let mut queue = VecDeque::from([root]);
    let mut seen = alloc::vec![root];
    while let Some(p) = queue.pop_front() {
        for e in t.edges() {
            let (a, b) = (e.ends()[0].vertex, e.ends()[1].vertex);
            let c = if a == p {
                b
            } else if b == p {
                a
            } else {
                continue;
            };
            if !seen.contains(&c) {
                seen.push(c);
                parent.insert(c, p);
                queue.push_back(c);
            }
        }
    }
    parent
}

/// The parent of `∗` is joined to the root of `y`; every child of `∗` is
/// joined to some vertex of `y`, summed over all choices.
pub(super) fn direct(x: &Structure, star: Label, y: &Structure) -> Result<LinComb<Structure>> {
    let (r1, r2) = (x.root.expect("rooted"), y.root.expect("rooted"));
    let parent = parent_map(&x.graph, r1);
    let children: Vec<Label> = parent
        .iter()
        .filter(|(_, &p)| p == star)
        .map(|(&c, _)| c)
        .collect();

    let mut vertices: Vec<Label> = x
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != star)
        .collect();
    vertices.extend_from_slice(y.vertices());
    let mut base: Vec<Edge> = y.graph.edges().to_vec();
    base.extend(x.graph.edges().iter().filter(|e| !e.touches(star)).cloned());
    if let Some(&p) = parent.get(&star) {
        base.push(Edge::pair(p, r2));
    }
    let root = if r1 == star { r2 } else { r1 };

    let targets = y.vertices();
    let mut pick = alloc::vec![0usize; children.len()];
    let mut counts: BTreeMap<Structure, u64> = BTreeMap::new();
    'outer: loop {
        let mut edges = base.clone();
        for (c, &i) in children.iter().zip(&pick) {
            edges.push(Edge::pair(*c, targets[i]));
        }
        let g = MultiHyperGraph::new(vertices.iter().copied(), edges)?;
        *counts
            .entry(Structure {
                graph: g,
                root: Some(root),
            })
            .or_insert(0) += 1;
        for slot in pick.iter_mut() {
            *slot += 1;
            if *slot < targets.len() {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    Ok(counts
        .into_iter()
        .map(|(s, n)| (s, Rational::from_integer(n.into())))
        .collect())
}

/// Insertion of rooted trees by the grafting rule.
pub fn plie_compose(x: &Structure, star: Label, y: &Structure) -> Result<LinComb<Structure>> {
    PLIE.compose_basis(x, star, y)
}

/// The same insertion computed inside rooted oriented multigraphs: each tree
/// is oriented towards its root, composed there, and the labels forgotten.
pub fn plie_compose_embedded(
    x: &Structure,
    star: Label,
    y: &Structure,
) -> Result<LinComb<Structure>> {
    PLIE.check(x)?;
    PLIE.check(y)?;
    let embed = |s: &Structure| -> Result<Structure> {
        let r = s.root.expect("rooted");
        Structure::rooted(orient_tree(&s.graph, r)?, r)
    };
    let composed = MG_OR.compose_basis(&embed(x)?, star, &embed(y)?)?;
    for (s, _) in composed.iter() {
        let r = s.root.expect("rooted");
        let plain = s.graph.forget_symbols();
        if !plain.is_tree() || orient_tree(&plain, r)? != s.graph {
            return Err(Error::Invalid(
                "embedded composite is not an oriented rooted tree".into(),
            ));
        }
    }
    Ok(forget_ends(&composed))
}

/// Sum of a tree rooted at each of its vertices.
pub fn psi(t: &MultiHyperGraph) -> Result<LinComb<Structure>> {
    if !t.is_tree() {
        return Err(Error::NotTree);
    }
    Ok(t.vertices()
        .iter()
        .map(|&r| {
            (
                Structure {
                    graph: t.clone(),
                    root: Some(r),
                },
                Rational::one(),
            )
        })
        .collect())
}
