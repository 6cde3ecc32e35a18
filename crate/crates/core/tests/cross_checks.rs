use num_bigint::BigInt;
use operad_forge_core::operad::{Structure, G};
use operad_forge_core::presentation::{quotient_dims, sp_relations};
use operad_forge_core::series::{hilbert_commag, hilbert_sp};
use operad_forge_core::span::{ClosureOptions, ClosureTable};
use operad_forge_core::{LinComb, MultiHyperGraph};

fn graph(e: &[(u32, u32)]) -> LinComb<Structure> {
    LinComb::basis(Structure::unrooted(
        MultiHyperGraph::multigraph(&[1, 2], e).unwrap(),
    ))
}

fn as_big(v: Vec<usize>) -> Vec<BigInt> {
    v.into_iter().map(BigInt::from).collect()
}

#[test]
fn closures_match_series() {
    let commag =
        ClosureTable::closure(G, &[graph(&[(1, 2)])], 5, ClosureOptions::default()).unwrap();
    assert_eq!(as_big(commag.dims()), hilbert_commag(5).dims().unwrap());
    let sp = ClosureTable::closure(
        G,
        &[graph(&[]), graph(&[(1, 2)])],
        5,
        ClosureOptions::default(),
    )
    .unwrap();
    assert_eq!(as_big(sp.dims()), hilbert_sp(5).dims().unwrap());
}

#[test]
fn presentation_matches_series() {
    let dims = quotient_dims(&sp_relations(), 5).unwrap();
    assert_eq!(as_big(dims), hilbert_sp(5).dims().unwrap());
}
