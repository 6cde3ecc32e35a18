use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::graph::{all_trees, spanning_trees, Edge, Label, MultiHyperGraph};
use crate::linalg::qi;

const A: u32 = 1;
const B: u32 = 2;
const C: u32 = 3;
const D: u32 = 4;
const STAR: u32 = 99;

fn l(v: u32) -> Label {
    Label(v)
}

fn mg(v: &[u32], e: &[(u32, u32)]) -> MultiHyperGraph {
    MultiHyperGraph::multigraph(v, e).unwrap()
}

fn plain(v: &[u32], e: &[(u32, u32)]) -> LinComb<Structure> {
    LinComb::basis(Structure::unrooted(mg(v, e)))
}

fn rooted(v: &[u32], e: &[(u32, u32)], r: u32) -> Structure {
    Structure::rooted(mg(v, e), l(r)).unwrap()
}

fn arcs(v: &[u32], arcs: &[(u32, u32)], r: u32) -> Structure {
    let g = MultiHyperGraph::new(
        v.iter().map(|&x| l(x)),
        arcs.iter().map(|&(x, y)| Edge::arc(l(x), l(y))),
    )
    .unwrap();
    Structure::rooted(g, l(r)).unwrap()
}

#[test]
fn simple_graph_path_into_edge() {
    let x = plain(&[A, STAR, B], &[(A, STAR), (STAR, B)]);
    let y = plain(&[C, D], &[(C, D)]);
    let out = G.compose(&x, l(STAR), &y).unwrap();
    let v = [A, B, C, D];
    let mut expect = LinComb::zero();
    for (p, q) in [(C, C), (C, D), (D, C), (D, D)] {
        expect += &plain(&v, &[(A, p), (q, B), (C, D)]);
    }
    assert_eq!(out, expect);
    assert_eq!(out.len(), 4);
    assert!(out.iter().all(|(_, c)| *c == qi(1)));
}

#[test]
fn multigraph_nine_terms() {
    let x = plain(&[A, STAR], &[(A, STAR), (A, STAR), (STAR, STAR)]);
    let y = plain(&[B, C], &[(B, C), (C, C)]);
    let out = MG.compose(&x, l(STAR), &y).unwrap();
    let coeffs: Vec<i64> = out
        .iter()
        .map(|(_, c)| c.to_integer().try_into().unwrap())
        .collect();
    assert_eq!(out.len(), 9);
    assert_eq!(coeffs.iter().sum::<i64>(), 16);
    let mut sorted = coeffs.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 1, 1, 1, 2, 2, 2, 2, 4]);
}

#[test]
fn pointed_graph_single_term() {
    let x = LinComb::basis(rooted(&[A, STAR, B], &[(A, STAR), (STAR, B)], A));
    let y = LinComb::basis(rooted(&[C, D], &[(C, D)], C));
    let out = G_POINTED.compose(&x, l(STAR), &y).unwrap();
    assert_eq!(
        out,
        LinComb::basis(rooted(&[A, B, C, D], &[(A, C), (C, B), (C, D)], A))
    );
}

#[test]
fn oriented_path_two_terms() {
    let x = LinComb::basis(arcs(&[A, STAR, B], &[(A, STAR), (STAR, B)], A));
    let y = LinComb::basis(arcs(&[C, D], &[(C, D)], C));
    let out = MG_OR.compose(&x, l(STAR), &y).unwrap();
    let v = [A, B, C, D];
    let expect = LinComb::basis(arcs(&v, &[(A, C), (C, B), (C, D)], A))
        + LinComb::basis(arcs(&v, &[(A, D), (C, B), (C, D)], A));
    assert_eq!(out, expect);
}

#[test]
fn non_freeness_relation_vanishes() {
    let e = |u, v| plain(&[u, v], &[(u, v)]);
    let hole = |u| plain(&[u, STAR], &[(u, STAR)]);
    let s = l(STAR);
    let mut total = GC.compose(&hole(A), s, &e(B, C)).unwrap();
    total += &GC.compose(&hole(C), s, &e(B, A)).unwrap();
    total -= &GC.compose(&hole(B), s, &e(A, C)).unwrap();
    total -= &plain(&[A, B, C], &[(A, B), (B, C)]).scale(&qi(2));
    assert!(total.is_zero(), "{total:?}");
}

#[test]
fn carrier_violations_are_rejected() {
    let x = plain(&[A, STAR], &[(A, STAR), (A, STAR)]);
    let y = plain(&[C], &[]);
    assert!(matches!(
        G.compose(&x, l(STAR), &y),
        Err(Error::Carrier { .. })
    ));
    let x = plain(&[A, STAR], &[(A, STAR)]);
    assert_eq!(G.compose(&x, l(7), &y), Err(Error::MissingLabel(l(7))));
    let y = plain(&[A], &[]);
    assert_eq!(G.compose(&x, l(STAR), &y), Err(Error::Overlap(l(A))));
    let rooted_y = LinComb::basis(rooted(&[C], &[], C));
    assert!(matches!(
        G.compose(&x, l(STAR), &rooted_y),
        Err(Error::Carrier { .. })
    ));
}

#[test]
fn axioms_hold_on_small_carriers() {
    for inst in Instance::all() {
        let suite = AxiomSuite::new(*inst, 2);
        let report = suite.run();
        assert!(
            report.passed(),
            "{:?}",
            &report.violations[..report.violations.len().min(3)]
        );
        assert!(report.exhaustive_cases > 0 || inst.carrier == Carrier::Identity);
    }
}

#[test]
fn axioms_hold_on_random_cases() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for inst in Instance::all() {
        for _ in 0..40 {
            let v = random_case(inst, 5, &mut rng);
            assert!(v.is_empty(), "{v:?}");
        }
    }
}

#[test]
fn grafting_matches_the_oriented_embedding() {
    for n1 in 1..=4u32 {
        for n2 in 1..=(5 - n1) {
            let v1: Vec<Label> = (0..n1).map(|i| l(10 + i)).collect();
            let v2: Vec<Label> = (0..n2).map(|i| l(20 + i)).collect();
            for t1 in all_trees(&v1) {
                for t2 in all_trees(&v2) {
                    for &r1 in &v1 {
                        for &r2 in &v2 {
                            for &s in &v1 {
                                let x = Structure::rooted(t1.clone(), r1).unwrap();
                                let y = Structure::rooted(t2.clone(), r2).unwrap();
                                assert_eq!(
                                    plie_compose(&x, s, &y).unwrap(),
                                    plie_compose_embedded(&x, s, &y).unwrap()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn grafting_counts_choice_functions() {
    // root * with two children, inserted tree with three vertices: 3^2 choices
    let x = rooted(&[STAR, A, B], &[(STAR, A), (STAR, B)], STAR);
    let y = rooted(&[C, D, 5], &[(C, D), (D, 5)], C);
    let out = plie_compose(&x, l(STAR), &y).unwrap();
    let total: i64 = out
        .iter()
        .map(|(_, c)| i64::try_from(c.to_integer()).unwrap())
        .sum();
    assert_eq!(total, 9);
    // * a leaf: one term
    let x = rooted(&[A, STAR], &[(A, STAR)], A);
    let out = plie_compose(&x, l(STAR), &y).unwrap();
    assert_eq!(
        out,
        LinComb::basis(rooted(&[A, C, D, 5], &[(A, C), (C, D), (D, 5)], A))
    );
}

#[test]
fn psi_is_a_morphism() {
    let e = mg(&[A, STAR], &[(A, STAR)]);
    assert_eq!(psi(&e).unwrap().len(), 2);
    for n1 in 1..=3u32 {
        for n2 in 1..=3u32 {
            let v1: Vec<Label> = (0..n1).map(|i| l(10 + i)).collect();
            let v2: Vec<Label> = (0..n2).map(|i| l(20 + i)).collect();
            for t1 in all_trees(&v1) {
                for t2 in all_trees(&v2) {
                    let s = v1[0];
                    let lhs = T
                        .compose(
                            &LinComb::basis(Structure::unrooted(t1.clone())),
                            s,
                            &LinComb::basis(Structure::unrooted(t2.clone())),
                        )
                        .unwrap()
                        .flat_map(|t| psi(&t.graph))
                        .unwrap();
                    let rhs = PLIE
                        .compose(&psi(&t1).unwrap(), s, &psi(&t2).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
    let three: Vec<_> = all_trees(&[l(A), l(B), l(C)])
        .iter()
        .map(|t| psi(t).unwrap())
        .collect();
    assert!(three[0] != three[1] && three[1] != three[2] && three[0] != three[2]);
    assert_eq!(psi(&mg(&[A, B], &[])), Err(Error::NotTree));
}

fn first_tree_rooted(g: &MultiHyperGraph) -> impl FnMut(Label) -> Vec<usize> + '_ {
    move |_| spanning_trees(g).unwrap()[0].clone()
}

#[test]
fn forgetting_orientation_after_insertion() {
    let graphs = [
        (mg(&[A, STAR], &[(A, STAR)]), mg(&[B, C], &[(B, C)])),
        (
            mg(&[A, B, STAR], &[(A, STAR), (B, STAR), (A, B), (STAR, STAR)]),
            mg(&[C, D], &[(C, D), (C, D)]),
        ),
        (
            mg(&[A, STAR], &[(A, STAR), (A, STAR)]),
            mg(&[C, D, 5], &[(C, D), (D, 5), (C, 5)]),
        ),
    ];
    for (g1, g2) in &graphs {
        let plain_comp = MG
            .compose(
                &LinComb::basis(Structure::unrooted(g1.clone())),
                l(STAR),
                &LinComb::basis(Structure::unrooted(g2.clone())),
            )
            .unwrap();
        for t1 in spanning_trees(g1).unwrap() {
            // root at the hole, inserted structure rooted at r
            for t2 in spanning_trees(g2).unwrap() {
                for &r in g2.vertices() {
                    let x = LinComb::basis(st_element(g1, &t1, l(STAR)).unwrap());
                    let y = LinComb::basis(st_element(g2, &t2, r).unwrap());
                    let out = MG_ORC.compose(&x, l(STAR), &y).unwrap();
                    assert!(out.iter().all(|(s, _)| is_st(s)));
                    assert_eq!(forget_oriented(&out), with_root(&plain_comp, r));
                }
            }
            // root away from the hole, inserted sum over roots
            for &r in g1.vertices().iter().filter(|&&v| v != l(STAR)) {
                let x = LinComb::basis(st_element(g1, &t1, r).unwrap());
                let y = o1_element(g2, first_tree_rooted(g2)).unwrap();
                let out = MG_ORC.compose(&x, l(STAR), &y).unwrap();
                assert!(out.iter().all(|(s, _)| is_st(s)));
                assert_eq!(forget_oriented(&out), with_root(&plain_comp, r));
            }
        }
    }
}

#[test]
fn orientation_differences_are_forgotten() {
    let tri = mg(&[A, B, C], &[(A, B), (B, C), (A, C)]);
    let trees = spanning_trees(&tri).unwrap();
    for &r in tri.vertices() {
        let d = o2_element(&tri, &trees[0], &trees[1], r).unwrap();
        assert!(!d.is_zero());
        assert!(forget_oriented(&d).is_zero());
    }
    // a tree's O1 element is the image of psi
    let t = mg(&[A, B, C], &[(A, B), (B, C)]);
    let o1 = o1_element(&t, |_| vec![0, 1]).unwrap();
    assert_eq!(forget_oriented(&o1), psi(&t).unwrap());
    assert_eq!(
        st_element(&mg(&[A, B], &[]), &[], l(A)),
        Err(Error::Disconnected)
    );
}

#[test]
fn names_resolve() {
    for n in ["mg", "g", "gc", "mgc", "t", "gpointed", "mgor", "plie"] {
        assert_eq!(Instance::by_name(n).unwrap().name, n);
    }
    assert!(Instance::by_name("nope").is_none());
    let _: BTreeMap<&str, usize> = names().into_iter().map(|n| (n, 0)).collect();
}
