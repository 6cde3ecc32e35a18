//! Multigraphs oriented by a rooted spanning tree.

use alloc::vec::Vec;

use num_traits::One;

use super::{forget_ends, Structure};
use crate::error::{Error, Result};
use crate::graph::{orient_by_tree, spanning_trees, Label, MultiHyperGraph};
use crate::linalg::{LinComb, Rational};

fn check_connected(g: &MultiHyperGraph) -> Result<()> {
    if !g.is_multigraph() || !g.is_plain() {
        return Err(Error::Invalid("expected a plain multigraph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `g` oriented by the spanning tree `tree` hung from `r`, rooted at `r`.
pub fn st_element(g: &MultiHyperGraph, tree: &[usize], r: Label) -> Result<Structure> {
    check_connected(g)?;
    Structure::rooted(orient_by_tree(g, tree, r)?, r)
}

/// Sum over all roots `r` of `g` oriented by the tree `tree_for(r)`.
pub fn o1_element<F>(g: &MultiHyperGraph, mut tree_for: F) -> Result<LinComb<Structure>>
where
    F: FnMut(Label) -> Vec<usize>,
{
    check_connected(g)?;
    let mut out = LinComb::zero();
    for &r in g.vertices() {
        out.add_term(st_element(g, &tree_for(r), r)?, Rational::one());
    }
    Ok(out)
}

/// Difference of two orientations of `g` sharing the root `r`.
pub fn o2_element(
    g: &MultiHyperGraph,
    t1: &[usize],
    t2: &[usize],
    r: Label,
) -> Result<LinComb<Structure>> {
    Ok(LinComb::basis(st_element(g, t1, r)?) - LinComb::basis(st_element(g, t2, r)?))
}

/// Forgets orientations, keeping roots.
pub fn forget_oriented(x: &LinComb<Structure>) -> LinComb<Structure> {
    forget_ends(x)
}

/// Whether `s` is some connected multigraph oriented by one of its rooted
/// spanning trees.
pub fn is_st(s: &Structure) -> bool {
    let Some(r) = s.root else { return false };
    let plain = s.graph.forget_symbols();
    if !plain.is_multigraph() || !plain.is_connected() {
        return false;
    }
    let Ok(trees) = spanning_trees(&plain) else {
        return false;
    };
    trees
        .iter()
        .any(|t| orient_by_tree(&plain, t, r).is_ok_and(|o| o == s.graph))
}
