use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::linalg::qi;
use crate::perm::permutations;

fn lf(v: u32) -> EnrichedTree {
    EnrichedTree::leaf(v)
}

fn n(g: Gen, a: EnrichedTree, b: EnrichedTree) -> EnrichedTree {
    EnrichedTree::node(g, a, b)
}

const STAR: u32 = 99;

#[test]
fn grafting_builds_relation_terms() {
    let (a, b, c) = (1, 2, 3);
    let outer = n(Gen::P, lf(c), lf(STAR));
    let inner = n(Gen::P, lf(a), lf(b));
    let g = free_compose(&outer, Label(STAR), &inner).unwrap();
    assert_eq!(g, n(Gen::P, lf(c), n(Gen::P, lf(a), lf(b))));
    assert_eq!(g.internal_nodes(), 2);
    let s = free_compose(
        &n(Gen::S, lf(a), lf(STAR)),
        Label(STAR),
        &n(Gen::P, lf(b), lf(c)),
    )
    .unwrap();
    assert_eq!(sp_relations()[1].coeff(&s), qi(1));
    assert_eq!(
        free_compose(&outer, Label(7), &inner),
        Err(Error::MissingLabel(Label(7)))
    );
    assert_eq!(
        free_compose(&outer, Label(STAR), &n(Gen::P, lf(c), lf(b))),
        Err(Error::Overlap(Label(c)))
    );
}

#[test]
fn free_dimensions() {
    let abc = free_basis(&ABC, &[Gen::P, Gen::S]);
    assert_eq!(abc.len(), 12);
    let dims: Vec<usize> = (1..=5)
        .map(|k| free_basis(&crate::span::standard_labels(k), &[Gen::P, Gen::S]).len())
        .collect();
    assert_eq!(dims, vec![1, 2, 12, 120, 1680]);
}

#[test]
fn grafting_is_associative() {
    let x = n(Gen::S, lf(1), n(Gen::P, lf(STAR), lf(2)));
    let y = n(Gen::P, lf(3), lf(50));
    let z = n(Gen::S, lf(4), lf(5));
    let lhs = free_compose(&free_compose(&x, Label(STAR), &y).unwrap(), Label(50), &z).unwrap();
    let rhs = free_compose(&x, Label(STAR), &free_compose(&y, Label(50), &z).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    let w = n(Gen::P, lf(STAR), lf(60));
    let a = free_compose(&free_compose(&w, Label(STAR), &y).unwrap(), Label(60), &z).unwrap();
    let b = free_compose(&free_compose(&w, Label(60), &z).unwrap(), Label(STAR), &y).unwrap();
    assert_eq!(a, b);
}

#[test]
fn relation_dimensions() {
    assert_eq!(relation_space(&sp_relations()).unwrap().rank(), 5);
    assert_eq!(relation_space(&dual_relations()).unwrap().rank(), 7);
    assert_eq!(relation_space(&[]).unwrap().rank(), 0);
}

#[test]
fn worked_pairings() {
    let [r1, r2] = sp_relations();
    let [r1d, r2d, _] = dual_relations();
    assert_eq!(koszul_pairing(&r1d, &r1).unwrap(), qi(0));
    // (abc): a -> b -> c -> a
    let cyc = |l: Label| Label(l.0 % 3 + 1);
    let moved = act(&r2d, &mut { cyc }).unwrap();
    assert_eq!(koszul_pairing(&moved, &r2).unwrap(), qi(0));
    // the two surviving products are -1 and +1
    let mut parts: Vec<Rational> = moved
        .iter()
        .map(|(t, c)| koszul_pairing(&LinComb::term(t.clone(), c.clone()), &r2).unwrap())
        .filter(|x| *x != qi(0))
        .collect();
    parts.sort();
    assert_eq!(parts, vec![qi(-1), qi(1)]);
    let sd = n(Gen::SDual, lf(1), n(Gen::SDual, lf(2), lf(3)));
    assert_eq!(
        koszul_pairing(&LinComb::basis(sd.clone()), &LinComb::basis(sd.dualize())).unwrap(),
        qi(1)
    );
    let other = LinComb::basis(n(Gen::S, lf(1), n(Gen::S, lf(2), lf(4))));
    assert_eq!(
        koszul_pairing(&LinComb::basis(sd), &other),
        Err(Error::LeafMismatch)
    );
}

#[test]
fn annihilator_is_the_dual_span() {
    let i = relation_space(&sp_relations()).unwrap();
    let j = relation_space(&dual_relations()).unwrap();
    let ambient = free_basis(&ABC, &[Gen::P, Gen::S]);
    for f in j.basis() {
        for x in i.basis() {
            assert_eq!(koszul_pairing(&f, &x).unwrap(), qi(0));
        }
    }
    let perp = orthogonal(&i, &ambient);
    assert_eq!(perp.rank() + i.rank(), 12);
    for v in j.basis() {
        assert!(perp.contains(&v));
    }
    for v in perp.basis() {
        assert!(j.contains(&v));
    }
    let mut full = RowSpaceOf::new();
    for t in &ambient {
        full.insert(&LinComb::basis(t.clone()));
    }
    assert_eq!(orthogonal(&full, &ambient).rank(), 0);
}

type RowSpaceOf = crate::linalg::RowSpace<EnrichedTree>;

#[test]
fn signed_action_is_compatible_with_pairing() {
    let ambient = free_basis(&ABC, &[Gen::P, Gen::S]);
    for p in permutations(3) {
        let s = crate::perm::sign(&p);
        let mut sigma = |l: Label| Label(p[l.0 as usize - 1] as u32 + 1);
        for x in &ambient {
            for y in &ambient {
                let f = LinComb::basis(x.dualize());
                let v = LinComb::basis(y.clone());
                let before = koszul_pairing(&f, &v).unwrap();
                let fa = act(&f, &mut sigma).unwrap();
                let va = act(&v, &mut sigma).unwrap();
                assert_eq!(koszul_pairing(&fa, &va).unwrap(), before * qi(s.into()));
            }
        }
    }
    // a transposition flips a dual generator
    let f = LinComb::basis(n(Gen::PDual, lf(1), lf(2)));
    let swapped = act(&f, &mut |l: Label| Label(3 - l.0)).unwrap();
    assert_eq!(swapped, f.scale(&qi(-1)));
}

#[test]
fn relations_vanish_in_graphs() {
    for r in sp_relations() {
        let img = r.flat_map(evaluate).unwrap();
        assert!(img.is_zero(), "{img:?}");
    }
}

#[test]
fn quotient_matches_small_closures() {
    assert_eq!(
        quotient_dims(&sp_relations(), 5).unwrap(),
        vec![1, 2, 7, 37, 266]
    );
}

#[test]
fn graph_image_has_quotient_dimensions() {
    for (k, want) in [(1, 1), (2, 2), (3, 7), (4, 37)] {
        let mut image = crate::linalg::RowSpace::new();
        for t in free_basis(&crate::span::standard_labels(k), &[Gen::P, Gen::S]) {
            image.insert(&evaluate(&t).unwrap());
        }
        assert_eq!(image.rank(), want, "arity {k}");
    }
}
