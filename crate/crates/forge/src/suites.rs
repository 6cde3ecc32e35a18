//! Verification suites behind `verify`. Every check carries the number of
//! the acceptance criterion it certifies.

use std::collections::BTreeSet;

use operad_forge_core::graph::{
    all_trees, shape_key, spanning_trees, Label, MultiHyperGraph, ShapeKey,
};
use operad_forge_core::linalg::qi;
use operad_forge_core::operad::{
    carrier_elements, forget_oriented, is_st, o1_element, o2_element, plie_compose,
    plie_compose_embedded, psi, random_case, random_element, st_element, with_root, AxiomSuite,
    Instance, Structure, G, GC, MG, MGC, MG_ORC, PLIE, T,
};
use operad_forge_core::presentation::{
    act, dual_relations, free_basis, koszul_pairing, orthogonal, quotient_dims, relation_space,
    sp_relations, Gen, ABC,
};
use operad_forge_core::series::{
    duality_residual, hilbert_commag, hilbert_sp, hilbert_sp_assembled, hilbert_sp_dual,
};
use operad_forge_core::span::{
    generator_tower, orbit, standard_labels, support_grades, ClosureOptions, ClosureTable,
    Executor, Sequential,
};
use operad_forge_core::{LinComb, RowSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::{compose_texts, render_comb};
use crate::report::{Check, Format, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Axioms,
    Compositions,
    Nonfree,
    Threshold,
    Prelie,
    Lemmfond,
    Closures,
    Generators,
    Koszul,
    Hilbert,
    Lp,
    Determinism,
    All,
}

impl Suite {
    /// Every suite except `All`, in criterion order.
    pub const EACH: [Suite; 12] = [
        Suite::Axioms,
        Suite::Compositions,
        Suite::Nonfree,
        Suite::Threshold,
        Suite::Prelie,
        Suite::Lemmfond,
        Suite::Closures,
        Suite::Generators,
        Suite::Koszul,
        Suite::Hilbert,
        Suite::Lp,
        Suite::Determinism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Compositions => "compositions",
            Suite::Nonfree => "nonfree",
            Suite::Threshold => "threshold",
            Suite::Prelie => "prelie",
            Suite::Lemmfond => "lemmfond",
            Suite::Closures => "closures",
            Suite::Generators => "generators",
            Suite::Koszul => "koszul",
            Suite::Hilbert => "hilbert",
            Suite::Lp => "lp",
            Suite::Determinism => "determinism",
            Suite::All => "all",
        }
    }
}

pub struct Context<'a> {
    pub seed: u64,
    pub exec: &'a dyn Executor,
}

pub const RANDOM_AXIOM_CASES: usize = 500;
pub const LEMMFOND_PAIRS: usize = 100;

pub fn run(suite: Suite, ctx: &Context) -> Report {
    Report::new(suite.name(), ctx.seed, checks(suite, ctx))
}

pub fn checks(suite: Suite, ctx: &Context) -> Vec<Check> {
    match suite {
        Suite::Axioms => axioms(ctx),
        Suite::Compositions => compositions(),
        Suite::Nonfree => nonfree(),
        Suite::Threshold => threshold(ctx),
        Suite::Prelie => prelie(),
        Suite::Lemmfond => lemmfond(ctx),
        Suite::Closures => closures(ctx),
        Suite::Generators => generators(ctx),
        Suite::Koszul => koszul(),
        Suite::Hilbert => hilbert(),
        Suite::Lp => lp(ctx),
        Suite::Determinism => determinism(ctx),
        Suite::All => Suite::EACH.iter().flat_map(|&s| checks(s, ctx)).collect(),
    }
}

fn failure(criterion: u8, name: &str, e: impl std::fmt::Display) -> Check {
    Check::new(criterion, name, false, format!("error: {e}"))
}

fn basis(g: MultiHyperGraph) -> LinComb<Structure> {
    LinComb::basis(Structure::unrooted(g))
}

fn graph(v: &[u32], e: &[(u32, u32)]) -> MultiHyperGraph {
    MultiHyperGraph::multigraph(v, e).expect("valid graph")
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn axioms(ctx: &Context) -> Vec<Check> {
    let mut out = Vec::new();
    for (i, name) in ["mg", "g", "gpointed", "mgor", "plie"]
        .into_iter()
        .enumerate()
    {
        let inst = Instance::by_name(name).expect("built in");
        let report = AxiomSuite::new(inst, 3).run();
        out.push(Check::new(
            1,
            format!("{name}: both diagrams and both unit laws on every case up to 3 vertices"),
            report.passed(),
            format!(
                "{} cases, {} violations{}",
                report.exhaustive_cases,
                report.violations.len(),
                first(&report.violations)
            ),
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(
            ctx.seed ^ (i as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15),
        );
        let violations: Vec<String> = (0..RANDOM_AXIOM_CASES)
            .flat_map(|_| random_case(&inst, 5, &mut rng))
            .collect();
        out.push(Check::new(
            1,
            format!("{name}: both diagrams and both unit laws on random cases up to 5 vertices"),
            violations.is_empty(),
            format!(
                "{RANDOM_AXIOM_CASES} cases, {} violations{}",
                violations.len(),
                first(&violations)
            ),
        ));
    }
    out
}

fn first(v: &[String]) -> String {
    v.first()
        .map(|s| format!("; first: {s}"))
        .unwrap_or_default()
}

pub mod fixtures {
    pub const KG_PATH: &str = include_str!("../fixtures/kg_path.json");
    pub const KG_EDGE: &str = include_str!("../fixtures/kg_edge.json");
    pub const KMG_LEFT: &str = include_str!("../fixtures/kmg_left.json");
    pub const KMG_RIGHT: &str = include_str!("../fixtures/kmg_right.json");
    pub const POINTED_PATH: &str = include_str!("../fixtures/pointed_path.json");
    pub const POINTED_EDGE: &str = include_str!("../fixtures/pointed_edge.json");
    pub const ORIENTED_PATH: &str = include_str!("../fixtures/oriented_path.json");
    pub const ORIENTED_EDGE: &str = include_str!("../fixtures/oriented_edge.json");
    pub const UNIT: &str = include_str!("../fixtures/unit.json");

    /// Operad, left operand, hole, right operand, expected output.
    pub const GOLDEN: [(&str, &str, &str, &str, &str, &str); 5] = [
        (
            "g",
            "path into edge",
            KG_PATH,
            KG_EDGE,
            include_str!("../fixtures/golden/kg_path_edge.json"),
            "*",
        ),
        (
            "mg",
            "double edge and loop into edge with loop",
            KMG_LEFT,
            KMG_RIGHT,
            include_str!("../fixtures/golden/kmg_loops.json"),
            "*",
        ),
        (
            "gpointed",
            "pointed path into pointed edge",
            POINTED_PATH,
            POINTED_EDGE,
            include_str!("../fixtures/golden/pointed_path_edge.json"),
            "*",
        ),
        (
            "mgor",
            "oriented path into oriented edge",
            ORIENTED_PATH,
            ORIENTED_EDGE,
            include_str!("../fixtures/golden/oriented_path_edge.json"),
            "*",
        ),
        (
            "g",
            "unit inserted into a path",
            KG_PATH,
            UNIT,
            include_str!("../fixtures/golden/unit.json"),
            "*",
        ),
    ];
}

fn compositions() -> Vec<Check> {
    let mut out = Vec::new();
    for (op, what, left, right, golden, star) in fixtures::GOLDEN {
        let name = format!("{op}: {what} matches the golden file");
        let inst = Instance::by_name(op).expect("built in");
        match compose_texts(&inst, left, star, right) {
            Err(e) => out.push(failure(2, &name, e)),
            Ok(c) => {
                let text = render_comb(&c.result, &c.names, Format::Json);
                let n = c.result.len();
                out.push(Check::new(
                    2,
                    name,
                    text == golden,
                    format!("{n} term{}", if n == 1 { "" } else { "s" }),
                ));
                if op == "mg" {
                    let mut coeffs: Vec<String> =
                        c.result.iter().map(|(_, k)| k.to_string()).collect();
                    coeffs.sort();
                    let expect = ["1", "1", "1", "1", "2", "2", "2", "2", "4"];
                    out.push(Check::new(
                        2,
                        "mg: coefficients are 1,1,2,2,2,4,1,1,2 as a multiset",
                        coeffs == expect,
                        coeffs.join(","),
                    ));
                }
            }
        }
    }
    out
}

fn nonfree() -> Vec<Check> {
    let name = "connected graphs: the three-term relation among edge insertions vanishes";
    let (a, b, c, star) = (1, 2, 3, 99);
    let e = |u, v| basis(graph(&[u, v], &[(u, v)]));
    let hole = |u| basis(graph(&[u, star], &[(u, star)]));
    let s = Label(star);
    let total = (|| -> operad_forge_core::Result<LinComb<Structure>> {
        let mut t = GC.compose(&hole(a), s, &e(b, c))?;
        t += &GC.compose(&hole(c), s, &e(b, a))?;
        t -= &GC.compose(&hole(b), s, &e(a, c))?;
        t -= &basis(graph(&[a, b, c], &[(a, b), (b, c)])).scale(&qi(2));
        Ok(t)
    })();
    vec![match total {
        Ok(t) => Check::new(3, name, t.is_zero(), format!("{} surviving terms", t.len())),
        Err(e) => failure(3, name, e),
    }]
}

fn threshold(ctx: &Context) -> Vec<Check> {
    let (table, _) = match generator_tower(G, 5, ClosureOptions::default(), ctx.exec) {
        Ok(t) => t,
        Err(e) => return vec![failure(4, "simple graph tower through arity 5", e)],
    };
    let mut out = Vec::new();
    for (shift, label) in [(1, "as stated"), (2, "shifted by one")] {
        for n in 3..=5 {
            let bound = binom(n - 1, 2) + shift;
            let stats = match support_grades(&G, n, 0) {
                Ok(s) => s,
                Err(e) => {
                    out.push(failure(4, "composition sweep", e));
                    continue;
                }
            };
            out.push(Check::new(
                4,
                format!("{label}: no composite in arity {n} has a support graph with at least {bound} edges"),
                stats.at_least(bound) == 0,
                format!(
                    "{} compositions, largest support has {} edges, {} support terms at or above the bound",
                    stats.compositions,
                    stats.max_grade().unwrap_or(0),
                    stats.at_least(bound)
                ),
            ));
            let composable = match table.composable_span(n, ctx.exec) {
                Ok(s) => s,
                Err(e) => {
                    out.push(failure(4, "composable span", e));
                    continue;
                }
            };
            let heavy: Vec<Structure> = carrier_elements(&G, &standard_labels(n), 0)
                .into_iter()
                .filter(|s| s.grade() >= bound)
                .collect();
            let reachable = heavy
                .iter()
                .filter(|s| composable.contains(&LinComb::basis((*s).clone())))
                .count();
            out.push(Check::new(
                4,
                format!("{label}: every graph on {n} vertices with at least {bound} edges is a generator"),
                reachable == 0,
                format!("{} such graphs, {reachable} lie in the span of composites", heavy.len()),
            ));
        }
    }
    out
}

fn labels(base: u32, n: u32) -> Vec<Label> {
    (0..n).map(|i| Label(base + i)).collect()
}

fn prelie() -> Vec<Check> {
    let mut out = Vec::new();
    let (mut cases, mut bad) = (0, 0);
    let mut errors = Vec::new();
    for n1 in 1..=4 {
        for n2 in 1..=3 {
            let (v1, v2) = (labels(10, n1), labels(20, n2));
            for t1 in all_trees(&v1) {
                for t2 in all_trees(&v2) {
                    for &s in &v1 {
                        let r = (|| -> operad_forge_core::Result<bool> {
                            let lhs = T
                                .compose(&basis(t1.clone()), s, &basis(t2.clone()))?
                                .flat_map(|t| psi(&t.graph))?;
                            let rhs = PLIE.compose(&psi(&t1)?, s, &psi(&t2)?)?;
                            Ok(lhs == rhs)
                        })();
                        cases += 1;
                        match r {
                            Ok(true) => {}
                            Ok(false) => bad += 1,
                            Err(e) => errors.push(e.to_string()),
                        }
                    }
                }
            }
        }
    }
    out.push(Check::new(
        5,
        "rooting at every vertex commutes with insertion, trees up to 4 into trees up to 3",
        bad == 0 && errors.is_empty(),
        format!(
            "{cases} cases, {bad} mismatches, {} errors{}",
            errors.len(),
            first(&errors)
        ),
    ));
    let mut image = RowSpace::new();
    let four = all_trees(&labels(1, 4));
    for t in &four {
        image.insert(&psi(t).expect("tree"));
    }
    out.push(Check::new(
        5,
        "rooting at every vertex is injective on trees with 4 vertices",
        image.rank() == four.len(),
        format!("rank {} of {}", image.rank(), four.len()),
    ));
    let (mut cases, mut bad) = (0, 0);
    for n1 in 1..=4 {
        for n2 in 1..=(5 - n1) {
            let (v1, v2) = (labels(10, n1), labels(20, n2));
            for t1 in all_trees(&v1) {
                for t2 in all_trees(&v2) {
                    for (&r1, &r2) in v1.iter().flat_map(|a| v2.iter().map(move |b| (a, b))) {
                        let x = Structure::rooted(t1.clone(), r1).expect("root");
                        let y = Structure::rooted(t2.clone(), r2).expect("root");
                        for &s in &v1 {
                            cases += 1;
                            if plie_compose(&x, s, &y).ok() != plie_compose_embedded(&x, s, &y).ok()
                            {
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    out.push(Check::new(
        5,
        "rooted tree grafting agrees with the oriented multigraph insertion, up to 5 vertices",
        bad == 0,
        format!("{cases} cases, {bad} mismatches"),
    ));
    out
}

fn lemmfond(ctx: &Context) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let star = Label(1);
    let (mut at_hole, mut away, mut diffs) = ([0usize; 2], [0usize; 2], [0usize; 2]);
    let mut errors = Vec::new();
    for _ in 0..LEMMFOND_PAIRS {
        let p = rng.gen_range(1..=4);
        let q = rng.gen_range(1..=4);
        let g1 = random_element(&MGC, &labels(1, p), &mut rng).graph;
        let g2 = random_element(&MGC, &labels(11, q), &mut rng).graph;
        let r = (|| -> operad_forge_core::Result<()> {
            let plain = MG.compose(&basis(g1.clone()), star, &basis(g2.clone()))?;
            let trees1 = spanning_trees(&g1)?;
            let trees2 = spanning_trees(&g2)?;
            let t1 = &trees1[rng.gen_range(0..trees1.len())];
            let t2 = &trees2[rng.gen_range(0..trees2.len())];
            let r2 = g2.vertices()[rng.gen_range(0..q as usize)];
            let x = LinComb::basis(st_element(&g1, t1, star)?);
            let y = LinComb::basis(st_element(&g2, t2, r2)?);
            let comp = MG_ORC.compose(&x, star, &y)?;
            at_hole[0] += 1;
            if comp.support().all(is_st) && forget_oriented(&comp) == with_root(&plain, r2) {
                at_hole[1] += 1;
            }
            if p >= 2 {
                let r1 = g1.vertices()[rng.gen_range(1..p as usize)];
                let x = LinComb::basis(st_element(&g1, t1, r1)?);
                let picks: Vec<usize> = g2
                    .vertices()
                    .iter()
                    .map(|_| rng.gen_range(0..trees2.len()))
                    .collect();
                let y = o1_element(&g2, |r| {
                    let i = g2.vertices().binary_search(&r).expect("vertex");
                    trees2[picks[i]].clone()
                })?;
                let comp = MG_ORC.compose(&x, star, &y)?;
                away[0] += 1;
                if comp.support().all(is_st) && forget_oriented(&comp) == with_root(&plain, r1) {
                    away[1] += 1;
                }
            }
            if trees1.len() >= 2 {
                let (a, b) = (
                    rng.gen_range(0..trees1.len()),
                    rng.gen_range(0..trees1.len()),
                );
                let r = g1.vertices()[rng.gen_range(0..p as usize)];
                let d = o2_element(&g1, &trees1[a], &trees1[b], r)?;
                diffs[0] += 1;
                if forget_oriented(&d).is_zero() {
                    diffs[1] += 1;
                }
            }
            Ok(())
        })();
        if let Err(e) = r {
            errors.push(e.to_string());
        }
    }
    let detail = |c: [usize; 2]| format!("{} of {} cases{}", c[1], c[0], first(&errors));
    vec![
        Check::new(
            6,
            "oriented insertion rooted at the hole forgets to the plain composite rooted in the inserted graph",
            at_hole[0] == LEMMFOND_PAIRS && at_hole[1] == at_hole[0] && errors.is_empty(),
            detail(at_hole),
        ),
        Check::new(
            6,
            "oriented insertion rooted away from the hole, summed over inner roots, forgets to the plain composite",
            away[1] == away[0] && errors.is_empty(),
            detail(away),
        ),
        Check::new(
            6,
            "differences of two orientations of the same graph forget to zero",
            diffs[1] == diffs[0] && errors.is_empty(),
            detail(diffs),
        ),
    ]
}

fn as_u64(v: &[usize]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn closures(ctx: &Context) -> Vec<Check> {
    let points = basis(graph(&[1, 2], &[]));
    let edge = basis(graph(&[1, 2], &[(1, 2)]));
    let opts = ClosureOptions::default();
    let mut out = Vec::new();
    let mut dims_check =
        |name: &str, gens: &[LinComb<Structure>], n: usize, expect: Vec<String>| {
            match ClosureTable::closure_with(G, gens, n, opts, ctx.exec) {
                Ok(t) => {
                    let got = as_u64(&t.dims());
                    out.push(Check::new(
                        7,
                        name,
                        got == expect,
                        format!("dims {}", got.join(",")),
                    ));
                }
                Err(e) => out.push(failure(7, name, e)),
            }
        };
    dims_check(
        "two isolated vertices generate one dimension per arity up to 6",
        std::slice::from_ref(&points),
        6,
        vec!["1".into(); 6],
    );
    let commag: Vec<String> = hilbert_commag(5)
        .dims()
        .expect("integral")
        .iter()
        .map(ToString::to_string)
        .collect();
    dims_check(
        "a single edge generates dims 1,1,3,15,105, the series 1-sqrt(1-2x)",
        std::slice::from_ref(&edge),
        5,
        commag,
    );
    let sp: Vec<String> = hilbert_sp(5)
        .dims()
        .expect("integral")
        .iter()
        .map(ToString::to_string)
        .collect();
    dims_check(
        "edge and isolated vertices generate the dims of exp(1-sqrt(1-2x))-1",
        &[points, edge],
        5,
        sp.clone(),
    );
    let name = "free operad on p and s modulo the two relations has the same dims";
    match quotient_dims(&sp_relations(), 5) {
        Ok(d) => {
            let got = as_u64(&d);
            out.push(Check::new(
                7,
                name,
                got == sp,
                format!("dims {}", got.join(",")),
            ));
        }
        Err(e) => out.push(failure(7, name, e)),
    }
    out
}

fn shape(n: u32, edges: &[(u32, u32)]) -> ShapeKey {
    let vs: Vec<u32> = (1..=n).collect();
    shape_key(&graph(&vs, edges), None).expect("small")
}

fn sorted(mut v: Vec<ShapeKey>) -> Vec<ShapeKey> {
    v.sort();
    v
}

fn generators(ctx: &Context) -> Vec<Check> {
    let mut out = Vec::new();
    match generator_tower(G, 4, ClosureOptions::default(), ctx.exec) {
        Err(e) => out.push(failure(8, "simple graph generator search", e)),
        Ok((_, reports)) => {
            let listed = [
                sorted(vec![shape(2, &[]), shape(2, &[(1, 2)])]),
                vec![shape(3, &[(1, 2), (2, 3), (1, 3)])],
                sorted(vec![
                    shape(4, &[(1, 2), (2, 3), (3, 4)]),
                    shape(4, &[(1, 2), (1, 3), (1, 4), (2, 4)]),
                    shape(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
                    shape(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
                ]),
            ];
            for (i, expect) in listed.iter().enumerate() {
                let r = &reports[i + 1];
                let counts: Vec<String> = r
                    .representatives
                    .iter()
                    .map(|s| s.grade().to_string())
                    .collect();
                out.push(Check::new(
                    8,
                    format!(
                        "simple graphs: generator shapes at arity {} match the published list",
                        i + 2
                    ),
                    &sorted(r.shapes.clone()) == expect,
                    format!(
                        "{} shapes with edge counts {}",
                        r.shapes.len(),
                        counts.join(",")
                    ),
                ));
            }
            let minimal = reports[1..].iter().all(|r| r.all_minimal());
            out.push(Check::new(
                8,
                "simple graphs: removing any generator orbit at arities 2 to 4 loses rank",
                minimal,
                format!(
                    "{} generator orbits tested",
                    reports[1..]
                        .iter()
                        .map(|r| r.representatives.len())
                        .sum::<usize>()
                ),
            ));
        }
    }
    out.extend(tree_generators(ctx));
    out
}

fn tree_generators(ctx: &Context) -> Vec<Check> {
    let listed: [(usize, Vec<ShapeKey>); 4] = [
        (2, vec![shape(2, &[(1, 2)])]),
        (4, vec![shape(4, &[(1, 2), (2, 3), (3, 4)])]),
        (5, vec![shape(5, &[(1, 2), (1, 3), (1, 4), (2, 5)])]),
        (
            6,
            sorted(vec![
                shape(6, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 6)]),
                shape(6, &[(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)]),
                shape(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]),
            ]),
        ),
    ];
    let listed_at = |n: usize| {
        listed
            .iter()
            .find(|(k, _)| *k == n)
            .map(|(_, v)| v.clone())
            .unwrap_or_default()
    };
    let (table, reports) = match generator_tower(T, 6, ClosureOptions::default(), ctx.exec) {
        Ok(t) => t,
        Err(e) => return vec![failure(8, "tree generator search", e)],
    };
    let mut out = Vec::new();
    let agree: Vec<bool> = (1..=5)
        .map(|n| sorted(reports[n - 1].shapes.clone()) == listed_at(n))
        .collect();
    let found: Vec<String> = reports.iter().map(|r| r.shapes.len().to_string()).collect();
    out.push(Check::new(
        8,
        "trees: generator shapes at arities up to 5 match the published list",
        agree.iter().all(|&a| a),
        format!("shapes per arity 1..6: {}", found.join(",")),
    ));
    // Six-vertex trees appear in a list headed "arity less than 6": compare, do not assert.
    let six = listed_at(6);
    let detail = match table.composable_span(6, ctx.exec) {
        Err(e) => format!("error: {e}"),
        Ok(composable) => {
            let ambient = carrier_elements(&T, &standard_labels(6), 0);
            let reps: Vec<Structure> = ambient
                .iter()
                .filter(|s| six.contains(&shape_key(&s.graph, None).expect("small")))
                .fold(Vec::<Structure>::new(), |mut acc, s| {
                    let k = shape_key(&s.graph, None).expect("small");
                    if acc
                        .iter()
                        .all(|a| shape_key(&a.graph, None).expect("small") != k)
                    {
                        acc.push(s.clone());
                    }
                    acc
                });
            let outside = reps
                .iter()
                .filter(|s| !composable.contains(&LinComb::basis((*s).clone())))
                .count();
            let mut span = composable.clone();
            for s in &reps {
                for v in orbit(&LinComb::basis(s.clone()), 6) {
                    span.insert(&v);
                }
            }
            let chosen: BTreeSet<&ShapeKey> = reports[5].shapes.iter().collect();
            let shared = six.iter().filter(|k| chosen.contains(k)).count();
            format!(
                "flagged: the list shows 3 six-vertex trees; search needs {} orbit(s) of rank {} to {}; \
                 {outside} of the 3 lie outside the composites; together they {} the ambient space; {shared} coincide with the search's choice",
                reports[5].shapes.len(),
                ambient.len() - composable.rank(),
                ambient.len(),
                if span.rank() == ambient.len() { "complete" } else { "do not complete" },
            )
        }
    };
    out.push(Check::new(
        8,
        "trees: six-vertex shapes compared with the published list",
        true,
        detail,
    ));
    out
}

fn koszul() -> Vec<Check> {
    let mut out = Vec::new();
    let (i, j) = match (
        relation_space(&sp_relations()),
        relation_space(&dual_relations()),
    ) {
        (Ok(i), Ok(j)) => (i, j),
        (Err(e), _) | (_, Err(e)) => return vec![failure(9, "relation spans", e)],
    };
    out.push(Check::new(
        9,
        "relations of p and s on three leaves span 5 dimensions",
        i.rank() == 5,
        format!("rank {}", i.rank()),
    ));
    out.push(Check::new(
        9,
        "dual relations on three leaves span 7 dimensions",
        j.rank() == 7,
        format!("rank {}", j.rank()),
    ));
    let zero = qi(0);
    let mut pairs = 0;
    let mut nonzero = 0;
    for f in j.basis() {
        for x in i.basis() {
            pairs += 1;
            if koszul_pairing(&f, &x).map(|v| v != zero).unwrap_or(true) {
                nonzero += 1;
            }
        }
    }
    out.push(Check::new(
        9,
        "every dual relation pairs to zero with every relation",
        nonzero == 0,
        format!("{pairs} pairings, {nonzero} nonzero"),
    ));
    let ambient = free_basis(&ABC, &[Gen::P, Gen::S]);
    let perp = orthogonal(&i, &ambient);
    let equal = perp.rank() == j.rank()
        && j.basis().iter().all(|v| perp.contains(v))
        && perp.basis().iter().all(|v| j.contains(v));
    out.push(Check::new(
        9,
        "the annihilator of the relations is exactly the dual relation span",
        equal,
        format!(
            "annihilator rank {} in an ambient of {}",
            perp.rank(),
            ambient.len()
        ),
    ));
    let [r1, r2] = sp_relations();
    let [d1, d2, _] = dual_relations();
    let worked = (|| -> operad_forge_core::Result<bool> {
        let moved = act(&d2, &mut |l: Label| Label(l.0 % 3 + 1))?;
        Ok(koszul_pairing(&d1, &r1)? == zero && koszul_pairing(&moved, &r2)? == zero)
    })();
    out.push(match worked {
        Ok(ok) => Check::new(9, "the two worked pairings vanish", ok, "s*s* against the associativity relation, cycled mixed relation against the mixed relation"),
        Err(e) => failure(9, "the two worked pairings vanish", e),
    });
    out
}

fn hilbert() -> Vec<Check> {
    let expect = ["1", "2", "5", "17", "74", "394", "2484", "18108", "149904"];
    let dual = hilbert_sp_dual(9);
    let got: Vec<String> = dual
        .dims()
        .map(|d| d.iter().map(ToString::to_string).collect())
        .unwrap_or_default();
    let residual = duality_residual(&hilbert_sp(9), &dual);
    vec![
        Check::new(
            10,
            "dims of ((1-log(1-x))^2-1)/2 for n = 1..9",
            got == expect,
            got.join(","),
        ),
        match residual {
            Ok(r) => Check::new(
                10,
                "H_SP(-H_dual(-t)) - t vanishes through order 9",
                r.is_zero(),
                format!(
                    "{} nonzero coefficients",
                    r.coeffs().iter().filter(|c| **c != qi(0)).count()
                ),
            ),
            Err(e) => failure(10, "duality residual", e),
        },
        Check::new(
            10,
            "exp(1-sqrt(1-2x))-1 agrees with term-by-term assembly through order 12",
            hilbert_sp(12) == hilbert_sp_assembled(12),
            "order 12",
        ),
    ]
}

fn lp(ctx: &Context) -> Vec<Check> {
    let mut out = Vec::new();
    let (a, b, star) = (1, 2, 99);
    let loop_at = |v: u32, others: &[u32]| {
        let mut vs = vec![v];
        vs.extend_from_slice(others);
        vs.sort();
        basis(graph(&vs, &[(v, v)]))
    };
    let points = basis(graph(&[a, b], &[]));
    let segment = basis(graph(&[a, b], &[(a, b)]));
    let identity = MG
        .compose(&loop_at(star, &[]), Label(star), &points)
        .map(|c| c - loop_at(a, &[b]) - loop_at(b, &[a]));
    out.push(match identity {
        Ok(v) => Check::new(
            11,
            "loop into two points, minus both loops, is twice the segment",
            v == segment.scale(&qi(2)),
            format!("{} term(s) left", v.len()),
        ),
        Err(e) => failure(11, "loop identity", e),
    });
    let gens = [basis(graph(&[1], &[(1, 1)])), basis(graph(&[1, 2], &[]))];
    let table = match ClosureTable::closure_with(
        MG,
        &gens,
        3,
        ClosureOptions::with_edge_cap(3),
        ctx.exec,
    ) {
        Ok(t) => t,
        Err(e) => return vec![failure(11, "closure of loop and points", e)],
    };
    let member = |name: &str, v: &LinComb<Structure>, want: bool| match table.contains(v) {
        Ok(m) => Check::new(11, name, m == want, format!("member: {m}")),
        Err(e) => failure(11, name, e),
    };
    out.push(member(
        "twice the segment lies in the closure at arity 2",
        &segment.scale(&qi(2)),
        true,
    ));
    out.push(member(
        "a path with one doubled edge on 3 vertices is outside the closure",
        &basis(graph(&[1, 2, 3], &[(1, 2), (2, 3), (2, 3)])),
        false,
    ));
    let sp = [basis(graph(&[1, 2], &[])), basis(graph(&[1, 2], &[(1, 2)]))];
    out.push(Check::new(
        11,
        "both generators of edge-and-points lie in the closure",
        sp.iter().all(|g| table.contains(g).unwrap_or(false)),
        "isolated vertices and segment",
    ));
    out
}

fn determinism(ctx: &Context) -> Vec<Check> {
    let repeat = [
        Suite::Compositions,
        Suite::Nonfree,
        Suite::Lemmfond,
        Suite::Koszul,
        Suite::Hilbert,
        Suite::Lp,
    ];
    let render = || {
        repeat
            .iter()
            .map(|&s| run(s, ctx).render(Format::Json))
            .collect::<Vec<_>>()
            .concat()
    };
    let (first, second) = (render(), render());
    let gens = [basis(graph(&[1, 2], &[])), basis(graph(&[1, 2], &[(1, 2)]))];
    let same_tables = match (
        ClosureTable::closure_with(G, &gens, 4, ClosureOptions::default(), ctx.exec),
        ClosureTable::closure_with(G, &gens, 4, ClosureOptions::default(), &Sequential),
    ) {
        (Ok(x), Ok(y)) => (1..=4).all(|n| x.basis(n) == y.basis(n)),
        _ => false,
    };
    vec![
        Check::new(
            12,
            "repeated runs with one seed render identical reports",
            first == second,
            format!("{} bytes", first.len()),
        ),
        Check::new(
            12,
            "the configured executor and a sequential run build identical closure bases",
            same_tables,
            "edge and points through arity 4",
        ),
    ]
}
