//! Free trees, the ideal generated by arity-three relations, and evaluation
//! into simple graphs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{relation_space, EnrichedTree, Gen, GRAFT};
use crate::error::{Error, Result};
use crate::graph::{Label, MultiHyperGraph};
use crate::linalg::{LinComb, RowSpace};
use crate::operad::{Structure, G};
use crate::span::standard_labels;

/// Every tree on `leaves` with internal nodes labelled from `gens`.
pub fn free_basis(leaves: &[Label], gens: &[Gen]) -> Vec<EnrichedTree> {
    let mut out = Vec::new();
    match leaves.len() {
        0 => {}
        1 => out.push(EnrichedTree::Leaf(leaves[0])),
        n => {
            // the block holding the first leaf is enumerated on the left
            let rest = &leaves[1..];
            for mask in 0..(1u64 << (n - 1)) - 1 {
                let mut left = alloc::vec![leaves[0]];
                let mut right = Vec::new();
                for (i, &l) in rest.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        left.push(l);
                    } else {
                        right.push(l);
                    }
                }
                let lt = free_basis(&left, gens);
                let rt = free_basis(&right, gens);
                for &g in gens {
                    for a in &lt {
                        for b in &rt {
                            out.push(EnrichedTree::node(g, a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

type Context = (EnrichedTree, [EnrichedTree; 3]);

/// Every way of cutting out a node together with one internal child: the
/// tree with that piece replaced by the graft leaf, and the piece's three
/// inputs (sorted).
fn contexts(t: &EnrichedTree) -> Vec<Context> {
    let EnrichedTree::Node(g, c) = t else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for i in 0..2 {
        let (child, other) = (&c[i], &c[1 - i]);
        if let EnrichedTree::Node(_, d) = child {
            let mut inputs = [other.clone(), d[0].clone(), d[1].clone()];
            inputs.sort();
            out.push((EnrichedTree::Leaf(GRAFT), inputs));
        }
        for (ctx, inputs) in contexts(child) {
            out.push((EnrichedTree::node(*g, ctx, other.clone()), inputs));
        }
    }
    out
}

/// The part of the ideal generated by `relations` (on three leaves, closed
/// under relabeling) that lies over `leaves`.
pub fn ideal_space(
    leaves: &[Label],
    relations: &[LinComb<EnrichedTree>],
) -> Result<RowSpace<EnrichedTree>> {
    let mut seen = BTreeSet::new();
    for t in free_basis(leaves, &[Gen::P, Gen::S]) {
        for ctx in contexts(&t) {
            seen.insert(ctx);
        }
    }
    let mut space = RowSpace::new();
    for (ctx, inputs) in &seen {
        for r in relations {
            let Some(first) = r.first_key() else { continue };
            let rl = first.leaves();
            if rl.len() != 3 {
                return Err(Error::Invalid("relations must have three leaves".into()));
            }
            let v = r.map_keys(|piece| {
                let filled = piece.substitute_leaves(&mut |l| {
                    inputs[rl.binary_search(&l).expect("relation leaf")].clone()
                });
                ctx.substitute_leaves(&mut |l| {
                    if l == GRAFT {
                        filled.clone()
                    } else {
                        EnrichedTree::Leaf(l)
                    }
                })
            });
            space.insert(&v);
        }
    }
    Ok(space)
}

/// Dimensions of the free operad modulo the ideal of `relations`, for
/// arities `1..=n_max`.
pub fn quotient_dims(relations: &[LinComb<EnrichedTree>], n_max: usize) -> Result<Vec<usize>> {
    let closed = relation_space(relations)?.basis();
    (1..=n_max)
        .map(|n| {
            let leaves = standard_labels(n);
            let free = free_basis(&leaves, &[Gen::P, Gen::S]).len();
            Ok(free - ideal_space(&leaves, &closed)?.rank())
        })
        .collect()
}

const H1: Label = Label(u32::MAX - 1);
const H2: Label = Label(u32::MAX - 2);

/// Image of a primal tree in simple graphs: `p` is two isolated vertices,
/// `s` an edge, and grafting is graph insertion.
pub fn evaluate(t: &EnrichedTree) -> Result<LinComb<Structure>> {
    match t {
        EnrichedTree::Leaf(l) => Ok(LinComb::basis(Structure::unit(*l, false))),
        EnrichedTree::Node(g, c) => {
            let edges: &[(u32, u32)] = match g {
                Gen::P => &[],
                Gen::S => &[(H1.0, H2.0)],
                _ => return Err(Error::Invalid("dual generators have no graph image".into())),
            };
            let corolla = MultiHyperGraph::multigraph(&[H1.0, H2.0], edges)?;
            let x = LinComb::basis(Structure::unrooted(corolla));
            let x = G.compose(&x, H1, &evaluate(&c[0])?)?;
            G.compose(&x, H2, &evaluate(&c[1])?)
        }
    }
}
