use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::graph::{shape_key, MultiHyperGraph};
use crate::linalg::qi;
use crate::operad::{G, MG, T};

fn graph(v: &[u32], e: &[(u32, u32)]) -> LinComb<Structure> {
    LinComb::basis(Structure::unrooted(
        MultiHyperGraph::multigraph(v, e).unwrap(),
    ))
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// (2k-3)!! for k >= 1, with (-1)!! = 1.
fn double_factorial_odd(k: u64) -> u64 {
    (1..k).map(|i| 2 * i - 1).product()
}

/// Dimensions of a set-partition composite of the ComMag dimensions.
fn sp_dims(n_max: usize) -> Vec<u64> {
    let mut a = vec![1u64];
    for n in 1..=n_max as u64 {
        let s = (1..=n)
            .map(|k| binom(n - 1, k - 1) * double_factorial_odd(k) * a[(n - k) as usize])
            .sum();
        a.push(s);
    }
    a[1..].to_vec()
}

#[test]
fn two_points_generate_a_line_per_arity() {
    let t = ClosureTable::closure(G, &[graph(&[1, 2], &[])], 6, ClosureOptions::default()).unwrap();
    assert_eq!(t.dims(), vec![1; 6]);
}

#[test]
fn single_edge_generates_trees_only() {
    let t = ClosureTable::closure(
        G,
        &[graph(&[1, 2], &[(1, 2)])],
        5,
        ClosureOptions::default(),
    )
    .unwrap();
    let dims: Vec<u64> = t.dims().into_iter().map(|d| d as u64).collect();
    assert_eq!(dims, (1..=5).map(double_factorial_odd).collect::<Vec<_>>());
    for n in 1..=5 {
        for row in t.basis(n) {
            assert!(row.support().all(|s| s.graph.is_tree()));
        }
    }
}

#[test]
fn edge_and_points_match_the_composite_oracle() {
    let gens = [graph(&[1, 2], &[]), graph(&[1, 2], &[(1, 2)])];
    let t = ClosureTable::closure(G, &gens, 5, ClosureOptions::default()).unwrap();
    let dims: Vec<u64> = t.dims().into_iter().map(|d| d as u64).collect();
    assert_eq!(dims, sp_dims(5));
    assert_eq!(sp_dims(5), vec![1, 2, 7, 37, 266]);
}

#[test]
fn dims_ignore_order_and_scaling() {
    let a = graph(&[1, 2], &[]);
    let b = graph(&[5, 7], &[(5, 7)]);
    let t1 =
        ClosureTable::closure(G, &[a.clone(), b.clone()], 4, ClosureOptions::default()).unwrap();
    let t2 =
        ClosureTable::closure(G, &[b.scale(&qi(-3)), a], 4, ClosureOptions::default()).unwrap();
    assert_eq!(t1.dims(), t2.dims());
}

#[test]
fn loop_and_points_membership() {
    let gens = [graph(&[1], &[(1, 1)]), graph(&[1, 2], &[])];
    let t = ClosureTable::closure(MG, &gens, 3, ClosureOptions::with_edge_cap(3)).unwrap();
    assert!(t
        .contains(&graph(&[1, 2], &[(1, 2)]).scale(&qi(2)))
        .unwrap());
    assert!(t.contains(&graph(&[8, 9], &[(8, 9)])).unwrap());
    assert!(!t
        .contains(&graph(&[1, 2, 3], &[(1, 2), (2, 3), (2, 3)]))
        .unwrap());
    for g in &gens {
        assert!(t.contains(g).unwrap());
    }
    assert!(matches!(
        t.contains(&graph(&[1, 2, 3, 4], &[])),
        Err(Error::ArityBound { got: 4, max: 3 })
    ));
}

#[test]
fn arity_bound_and_carrier_checks() {
    let e = graph(&[1, 2], &[(1, 2)]);
    assert!(matches!(
        ClosureTable::closure(G, core::slice::from_ref(&e), 7, ClosureOptions::default()),
        Err(Error::ArityBound { got: 7, max: 6 })
    ));
    let double = graph(&[1, 2], &[(1, 2), (1, 2)]);
    assert!(matches!(
        ClosureTable::closure(G, &[double], 3, ClosureOptions::default()),
        Err(Error::Carrier { .. })
    ));
    let loop_only = [graph(&[1], &[(1, 1)])];
    assert!(ClosureTable::closure(MG, &loop_only, 1, ClosureOptions::default()).is_err());
}

fn shapes_of(v: &[(u32, u32)], n: u32) -> ShapeKeyOf {
    let g = MultiHyperGraph::multigraph(&(1..=n).collect::<Vec<_>>(), v).unwrap();
    shape_key(&g, None).unwrap()
}

type ShapeKeyOf = crate::graph::ShapeKey;

#[test]
fn simple_graph_generators_through_arity_four() {
    let (table, reports) = generator_tower(G, 4, ClosureOptions::default(), &Sequential).unwrap();
    assert_eq!(table.dims(), vec![1, 2, 8, 64]);
    assert!(reports[0].representatives.is_empty());
    let mut two = reports[1].shapes.clone();
    two.sort();
    let mut expect2 = vec![shapes_of(&[], 2), shapes_of(&[(1, 2)], 2)];
    expect2.sort();
    assert_eq!(two, expect2);
    assert_eq!(
        reports[2].shapes,
        vec![shapes_of(&[(1, 2), (2, 3), (1, 3)], 3)]
    );
    let mut four = reports[3].shapes.clone();
    four.sort();
    let mut expect4 = vec![
        shapes_of(&[(1, 2), (2, 3), (3, 4)], 4),
        shapes_of(&[(1, 2), (1, 3), (1, 4), (2, 4)], 4),
        shapes_of(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)], 4),
        shapes_of(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], 4),
    ];
    expect4.sort();
    assert_eq!(four, expect4);
    assert!(reports.iter().all(GeneratorReport::all_minimal));
    assert_eq!(reports[3].composable_rank, 51);
}

#[test]
fn tree_generators_through_arity_five() {
    let (_, reports) = generator_tower(T, 5, ClosureOptions::default(), &Sequential).unwrap();
    let counts: Vec<usize> = reports.iter().map(|r| r.shapes.len()).collect();
    assert_eq!(counts, vec![0, 1, 0, 1, 1]);
    assert_eq!(
        reports[3].shapes,
        vec![shapes_of(&[(1, 2), (2, 3), (3, 4)], 4)]
    );
    assert_eq!(
        reports[4].shapes,
        vec![shapes_of(&[(1, 2), (1, 3), (1, 4), (4, 5)], 5)]
    );
}

#[test]
fn composite_supports_stay_below_the_complete_bound() {
    for n in 3..=5u64 {
        let stats = support_grades(&G, n as usize, 0).unwrap();
        let bound = binom(n - 1, 2) as usize;
        assert_eq!(stats.max_grade(), Some(bound + 1));
        assert_eq!(stats.at_least(bound + 2), 0);
    }
}
