//! The free operad on two symmetric binary generators and its quotients.
//!
//! `p` stands for the two-vertex edgeless graph and `s` for the single edge.
//! Their duals `p*` and `s*` live in the dual species, on which bijections
//! act with an extra `sign(σ)`.
//!
//! Sign convention: dual trees carry no per-node sign. Transport of a dual
//! combination along `σ` relabels the leaves and multiplies the whole
//! combination by the sign of `σ` (read through the order of the labels).
//! The pairing between a dual tree and a tree is 1 when the dual tree is the
//! tree with every generator dualized and 0 otherwise.

mod koszul;
mod quotient;

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Label;
use crate::linalg::{LinComb, Rational};
use crate::perm::sign;

pub use koszul::{dual_relations, koszul_pairing, orthogonal, relation_space, sp_relations, ABC};
pub use quotient::{evaluate, free_basis, ideal_space, quotient_dims};

/// Leaf used as the grafting point.
pub const GRAFT: Label = Label(u32::MAX);

/// Binary generators and their duals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    P,
    S,
    PDual,
    SDual,
}

impl Gen {
    pub fn is_dual(self) -> bool {
        matches!(self, Gen::PDual | Gen::SDual)
    }

    pub fn dual(self) -> Gen {
        match self {
            Gen::P => Gen::PDual,
            Gen::S => Gen::SDual,
            Gen::PDual => Gen::P,
            Gen::SDual => Gen::S,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::P => "p",
            Gen::S => "s",
            Gen::PDual => "p*",
            Gen::SDual => "s*",
        }
    }

    pub fn from_name(s: &str) -> Option<Gen> {
        Some(match s {
            "p" => Gen::P,
            "s" => Gen::S,
            "p*" => Gen::PDual,
            "s*" => Gen::SDual,
            _ => return None,
        })
    }
}

/// A tree whose leaves are labels and whose internal nodes carry a binary
/// generator. Children are kept sorted, so equal trees compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EnrichedTree {
    Leaf(Label),
    Node(Gen, Box<[EnrichedTree; 2]>),
}

impl fmt::Debug for EnrichedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnrichedTree::Leaf(l) => write!(f, "{l}"),
            EnrichedTree::Node(g, c) => write!(f, "{}({:?},{:?})", g.name(), c[0], c[1]),
        }
    }
}

impl EnrichedTree {
    pub fn leaf(v: u32) -> Self {
        EnrichedTree::Leaf(Label(v))
    }

    pub fn node(gen: Gen, a: EnrichedTree, b: EnrichedTree) -> Self {
        let children = if b < a { [b, a] } else { [a, b] };
        EnrichedTree::Node(gen, Box::new(children))
    }

    /// Sorted leaf labels.
    pub fn leaves(&self) -> Vec<Label> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Label>) {
        match self {
            EnrichedTree::Leaf(l) => out.push(*l),
            EnrichedTree::Node(_, c) => {
                c[0].collect_leaves(out);
                c[1].collect_leaves(out);
            }
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            EnrichedTree::Leaf(_) => 0,
            EnrichedTree::Node(_, c) => 1 + c[0].internal_nodes() + c[1].internal_nodes(),
        }
    }

    /// Every generator is primal, or every generator is dual.
    pub fn polarity(&self) -> Option<bool> {
        match self {
            EnrichedTree::Leaf(_) => None,
            EnrichedTree::Node(g, c) => {
                let d = g.is_dual();
                for child in c.iter() {
                    if let Some(x) = child.polarity() {
                        if x != d {
                            return None;
                        }
                    }
                }
                Some(d)
            }
        }
    }

    pub fn relabel_with<F: FnMut(Label) -> Label + ?Sized>(&self, f: &mut F) -> Self {
        match self {
            EnrichedTree::Leaf(l) => EnrichedTree::Leaf(f(*l)),
            EnrichedTree::Node(g, c) => {
                EnrichedTree::node(*g, c[0].relabel_with(f), c[1].relabel_with(f))
            }
        }
    }

    /// Replaces leaves by trees.
    pub fn substitute_leaves<F: FnMut(Label) -> EnrichedTree + ?Sized>(&self, f: &mut F) -> Self {
        match self {
            EnrichedTree::Leaf(l) => f(*l),
            EnrichedTree::Node(g, c) => {
                EnrichedTree::node(*g, c[0].substitute_leaves(f), c[1].substitute_leaves(f))
            }
        }
    }

    /// Swaps every generator for its dual.
    pub fn dualize(&self) -> Self {
        match self {
            EnrichedTree::Leaf(l) => EnrichedTree::Leaf(*l),
            EnrichedTree::Node(g, c) => {
                EnrichedTree::node(g.dual(), c[0].dualize(), c[1].dualize())
            }
        }
    }
}

/// Grafts `t2` at the leaf `star` of `t1`.
pub fn free_compose(t1: &EnrichedTree, star: Label, t2: &EnrichedTree) -> Result<EnrichedTree> {
    let l1 = t1.leaves();
    if l1.binary_search(&star).is_err() {
        return Err(Error::MissingLabel(star));
    }
    for l in t2.leaves() {
        if l != star && l1.binary_search(&l).is_ok() {
            return Err(Error::Overlap(l));
        }
    }
    Ok(t1.substitute_leaves(&mut |l| {
        if l == star {
            t2.clone()
        } else {
            EnrichedTree::Leaf(l)
        }
    }))
}

/// Bilinear grafting.
pub fn free_compose_lin(
    x: &LinComb<EnrichedTree>,
    star: Label,
    y: &LinComb<EnrichedTree>,
) -> Result<LinComb<EnrichedTree>> {
    x.bilinear(y, |a, b| free_compose(a, star, b).map(LinComb::basis))
}

/// Sign of a bijection between two sets of labels, read through their
/// orders: the sign of the permutation sending the rank of `v` to the rank
/// of `sigma(v)`.
pub fn bijection_sign(domain: &[Label], sigma: &mut dyn FnMut(Label) -> Label) -> i32 {
    let images: Vec<Label> = domain.iter().map(|&l| sigma(l)).collect();
    let mut sorted = images.clone();
    sorted.sort_unstable();
    let perm: Vec<usize> = images
        .iter()
        .map(|x| sorted.binary_search(x).expect("image"))
        .collect();
    sign(&perm)
}

/// Transport of a combination along a leaf bijection. Dual trees pick up
/// the sign of the bijection.
pub fn act(
    x: &LinComb<EnrichedTree>,
    sigma: &mut dyn FnMut(Label) -> Label,
) -> Result<LinComb<EnrichedTree>> {
    let Some(first) = x.first_key() else {
        return Ok(LinComb::zero());
    };
    let leaves = first.leaves();
    let dual = first.polarity() == Some(true);
    for t in x.support() {
        if t.leaves() != leaves {
            return Err(Error::LeafMismatch);
        }
    }
    let moved = x.map_keys(|t| t.relabel_with(&mut *sigma));
    if dual && bijection_sign(&leaves, sigma) < 0 {
        Ok(moved.scale(&Rational::from_integer((-1).into())))
    } else {
        Ok(moved)
    }
}

#[cfg(test)]
mod tests;
