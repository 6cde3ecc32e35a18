//! Distributive substitution of a vertex by linear combinations of vertices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::One;

use super::{Edge, End, EndSym, Label, MultiHyperGraph};
use crate::error::{Error, Result};
use crate::linalg::{LinComb, Rational};

/// What each end at the substituted vertex becomes, chosen by its symbol.
#[derive(Clone, Debug)]
pub struct Replacement {
    plain: LinComb<Label>,
    arrow: LinComb<Label>,
}

impl Replacement {
    pub fn new(plain: LinComb<Label>, arrow: LinComb<Label>) -> Self {
        Self { plain, arrow }
    }

    /// Same combination for both symbols.
    pub fn uniform(comb: LinComb<Label>) -> Self {
        Self::new(comb.clone(), comb)
    }

    /// Every end goes to the sum of the given vertices.
    pub fn sum_of(vertices: &[Label]) -> Self {
        Self::uniform(vertices.iter().map(|&v| (v, Rational::one())).collect())
    }

    pub fn for_sym(&self, s: EndSym) -> &LinComb<Label> {
        match s {
            EndSym::Plain => &self.plain,
            EndSym::Arrow => &self.arrow,
        }
    }
}

/// Replaces every end at `star` independently by a term of the matching
/// replacement, multiplying coefficients, then adds the edges of `tail`.
///
/// The result lives on `(V(g) - star) + V(tail)`.
pub fn substitute(
    g: &MultiHyperGraph,
    star: Label,
    replacement: &Replacement,
    tail: &MultiHyperGraph,
) -> Result<LinComb<MultiHyperGraph>> {
    if !g.has_vertex(star) {
        return Err(Error::MissingLabel(star));
    }
    for &v in tail.vertices() {
        if v != star && g.has_vertex(v) {
            return Err(Error::Overlap(v));
        }
    }
    for s in [EndSym::Plain, EndSym::Arrow] {
        for v in replacement.for_sym(s).support() {
            if !tail.has_vertex(*v) {
                return Err(Error::MissingLabel(*v));
            }
        }
    }

    let mut vertices: Vec<Label> = g
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != star)
        .collect();
    vertices.extend_from_slice(tail.vertices());

    let mut fixed: Vec<Edge> = tail.edges().to_vec();
    let mut touched: Vec<&Edge> = Vec::new();
    for e in g.edges() {
        if e.touches(star) {
            touched.push(e);
        } else {
            fixed.push(e.clone());
        }
    }

    // one slot per end at `star`
    let mut slots: Vec<&[(Label, Rational)]> = Vec::new();
    let choices_plain: Vec<(Label, Rational)> = replacement
        .plain
        .iter()
        .map(|(k, c)| (*k, c.clone()))
        .collect();
    let choices_arrow: Vec<(Label, Rational)> = replacement
        .arrow
        .iter()
        .map(|(k, c)| (*k, c.clone()))
        .collect();
    for e in &touched {
        for end in e.ends() {
            if end.vertex == star {
                slots.push(match end.sym {
                    EndSym::Plain => &choices_plain,
                    EndSym::Arrow => &choices_arrow,
                });
            }
        }
    }
    if slots.iter().any(|s| s.is_empty()) {
        return Ok(LinComb::zero());
    }
    let unit = slots.iter().all(|s| s.iter().all(|(_, c)| c.is_one()));

    // only the rebuilt edges vary between choices; they key the tally
    let build = |pick: &[usize]| -> Vec<Edge> {
        let mut k = 0;
        let mut edges: Vec<Edge> = touched
            .iter()
            .map(|e| {
                let ends = e.ends().iter().map(|end| {
                    if end.vertex == star {
                        let v = slots[k][pick[k]].0;
                        k += 1;
                        End::new(v, end.sym)
                    } else {
                        *end
                    }
                });
                Edge::new(ends.collect::<Vec<_>>())
            })
            .collect();
        edges.sort_unstable();
        edges
    };

    let mut pick = alloc::vec![0usize; slots.len()];
    let mut counts: BTreeMap<Vec<Edge>, u64> = BTreeMap::new();
    let mut weighted: BTreeMap<Vec<Edge>, Rational> = BTreeMap::new();
    'outer: loop {
        let key = build(&pick);
        if unit {
            *counts.entry(key).or_insert(0) += 1;
        } else {
            let mut c = Rational::one();
            for (k, &i) in pick.iter().enumerate() {
                c *= &slots[k][i].1;
            }
            *weighted.entry(key).or_default() += c;
        }
        for (k, slot) in pick.iter_mut().enumerate() {
            *slot += 1;
            if *slot < slots[k].len() {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    let assemble = |rebuilt: Vec<Edge>| {
        let mut edges = fixed.clone();
        edges.extend(rebuilt);
        MultiHyperGraph::from_parts(vertices.clone(), edges)
    };
    if unit {
        Ok(counts
            .into_iter()
            .map(|(e, n)| (assemble(e), Rational::from_integer(n.into())))
            .collect())
    } else {
        Ok(weighted
            .into_iter()
            .map(|(e, c)| (assemble(e), c))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;
    use alloc::vec;

    const A: u32 = 1;
    const B: u32 = 2;
    const C: u32 = 3;
    const D: u32 = 4;
    const STAR: u32 = 99;

    fn mg(v: &[u32], e: &[(u32, u32)]) -> MultiHyperGraph {
        MultiHyperGraph::multigraph(v, e).unwrap()
    }

    #[test]
    fn nine_term_multigraph_example() {
        let g1 = mg(&[A, STAR], &[(A, STAR), (A, STAR), (STAR, STAR)]);
        let g2 = mg(&[B, C], &[(B, C), (C, C)]);
        let r = Replacement::sum_of(&[Label(B), Label(C)]);
        let out = substitute(&g1, Label(STAR), &r, &g2).unwrap();
        let v = [A, B, C];
        // independent count: choose targets for the two a–* ends and the loop ends
        let expect: Vec<(MultiHyperGraph, i64)> = vec![
            (mg(&v, &[(A, B), (A, B), (B, B), (B, C), (C, C)]), 1),
            (mg(&v, &[(A, C), (A, C), (B, B), (B, C), (C, C)]), 1),
            (mg(&v, &[(A, B), (A, C), (B, B), (B, C), (C, C)]), 2),
            (mg(&v, &[(A, B), (A, B), (B, C), (B, C), (C, C)]), 2),
            (mg(&v, &[(A, C), (A, C), (B, C), (B, C), (C, C)]), 2),
            (mg(&v, &[(A, B), (A, C), (B, C), (B, C), (C, C)]), 4),
            (mg(&v, &[(A, B), (A, B), (B, C), (C, C), (C, C)]), 1),
            (mg(&v, &[(A, C), (A, C), (B, C), (C, C), (C, C)]), 1),
            (mg(&v, &[(A, B), (A, C), (B, C), (C, C), (C, C)]), 2),
        ];
        assert_eq!(out.len(), 9);
        for (g, c) in expect {
            assert_eq!(out.coeff(&g), qi(c), "{g:?}");
        }
    }

    #[test]
    fn path_into_edge_has_unit_coefficients() {
        let g1 = mg(&[A, STAR, B], &[(A, STAR), (STAR, B)]);
        let g2 = mg(&[C, D], &[(C, D)]);
        let out = substitute(
            &g1,
            Label(STAR),
            &Replacement::sum_of(&[Label(C), Label(D)]),
            &g2,
        )
        .unwrap();
        assert_eq!(out.len(), 4);
        assert!(out.iter().all(|(_, c)| *c == qi(1)));
    }

    #[test]
    fn isolated_star_just_adds_tail() {
        let g1 = mg(&[A, STAR], &[]);
        let g2 = mg(&[C, D], &[(C, D)]);
        let out = substitute(
            &g1,
            Label(STAR),
            &Replacement::sum_of(&[Label(C), Label(D)]),
            &g2,
        )
        .unwrap();
        assert_eq!(out, LinComb::basis(mg(&[A, C, D], &[(C, D)])));
    }

    #[test]
    fn errors() {
        let g1 = mg(&[A, STAR], &[(A, STAR)]);
        let g2 = mg(&[A, D], &[]);
        let r = Replacement::sum_of(&[Label(A), Label(D)]);
        assert_eq!(
            substitute(&g1, Label(7), &r, &g2),
            Err(Error::MissingLabel(Label(7)))
        );
        assert_eq!(
            substitute(&g1, Label(STAR), &r, &g2),
            Err(Error::Overlap(Label(A)))
        );
    }

    #[test]
    fn weighted_replacement_multiplies() {
        let g1 = mg(&[A, STAR], &[(A, STAR), (A, STAR)]);
        let g2 = mg(&[C], &[]);
        let r = Replacement::uniform(LinComb::term(Label(C), qi(3)));
        let out = substitute(&g1, Label(STAR), &r, &g2).unwrap();
        assert_eq!(out, LinComb::term(mg(&[A, C], &[(A, C), (A, C)]), qi(9)));
    }
}
