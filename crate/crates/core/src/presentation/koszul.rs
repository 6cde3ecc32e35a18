//! Quadratic relations, the pairing with the dual species, and annihilators.

use num_traits::Zero;

use super::{act, EnrichedTree, Gen};
use crate::error::{Error, Result};
use crate::graph::Label;
use crate::linalg::{qi, LinComb, Rational, RowSpace};
use crate::perm::permutations;

/// The leaf set `{a, b, c}` used by the relations.
pub const ABC: [Label; 3] = [Label(1), Label(2), Label(3)];

fn t(g: Gen, x: u32, (h, y, z): (Gen, u32, u32)) -> EnrichedTree {
    EnrichedTree::node(
        g,
        EnrichedTree::leaf(x),
        EnrichedTree::node(h, EnrichedTree::leaf(y), EnrichedTree::leaf(z)),
    )
}

fn comb(terms: &[(i64, EnrichedTree)]) -> LinComb<EnrichedTree> {
    terms.iter().map(|(c, t)| (t.clone(), qi(*c))).collect()
}

/// The two relations presenting the suboperad generated by an edge and two
/// isolated points.
pub fn sp_relations() -> [LinComb<EnrichedTree>; 2] {
    use Gen::{P, S};
    let (a, b, c) = (1, 2, 3);
    [
        comb(&[(1, t(P, c, (P, a, b))), (-1, t(P, a, (P, b, c)))]),
        comb(&[
            (1, t(S, a, (P, b, c))),
            (-1, t(P, c, (S, a, b))),
            (-1, t(P, b, (S, a, c))),
        ]),
    ]
}

/// The three relations expected to present the Koszul dual.
pub fn dual_relations() -> [LinComb<EnrichedTree>; 3] {
    use Gen::{PDual as P, SDual as S};
    let (a, b, c) = (1, 2, 3);
    [
        comb(&[(1, t(S, a, (S, b, c)))]),
        comb(&[
            (1, t(P, a, (S, b, c))),
            (1, t(S, c, (P, a, b))),
            (1, t(S, b, (P, a, c))),
        ]),
        comb(&[
            (1, t(P, a, (P, b, c))),
            (1, t(P, c, (P, a, b))),
            (1, t(P, b, (P, c, a))),
        ]),
    ]
}

/// Span of all translates of the relations under bijections of their leaves.
pub fn relation_space(rels: &[LinComb<EnrichedTree>]) -> Result<RowSpace<EnrichedTree>> {
    let mut space = RowSpace::new();
    for r in rels {
        let Some(first) = r.first_key() else { continue };
        let leaves = first.leaves();
        for p in permutations(leaves.len()) {
            let mut sigma = |l: Label| leaves[p[leaves.binary_search(&l).expect("leaf")]];
            space.insert(&act(r, &mut sigma)?);
        }
    }
    Ok(space)
}

/// `<f, x>` for a dual combination `f` and a primal combination `x` on the
/// same leaves.
pub fn koszul_pairing(f: &LinComb<EnrichedTree>, x: &LinComb<EnrichedTree>) -> Result<Rational> {
    let leaves = f.first_key().or(x.first_key()).map(EnrichedTree::leaves);
    for (tree, dual) in f
        .support()
        .map(|t| (t, true))
        .chain(x.support().map(|t| (t, false)))
    {
        if Some(tree.leaves()) != leaves {
            return Err(Error::LeafMismatch);
        }
        if tree.polarity() != Some(dual) {
            return Err(Error::Invalid(
                "pairing takes a dual and a primal combination".into(),
            ));
        }
    }
    let mut total = Rational::zero();
    for (tree, c) in f.iter() {
        let d = x.coeff(&tree.dualize());
        if !d.is_zero() {
            total += c * d;
        }
    }
    Ok(total)
}

/// Annihilator of a primal space, as a space of dual trees, inside the span
/// of `ambient` (primal trees).
pub fn orthogonal(
    space: &RowSpace<EnrichedTree>,
    ambient: &[EnrichedTree],
) -> RowSpace<EnrichedTree> {
    let mut out = RowSpace::new();
    for v in space.null_space(ambient) {
        out.insert(&v.map_keys(EnrichedTree::dualize));
    }
    out
}
