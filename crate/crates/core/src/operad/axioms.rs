//! Checks of the associativity diagrams and unit laws.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use alloc::collections::BTreeSet;

use super::{carrier_elements, random_element, Carrier, Instance, Structure};
use crate::graph::{canonical_bytes, Label};
use crate::linalg::LinComb;
use crate::perm::permutations;

const X0: u32 = 10;
const Y0: u32 = 20;
const Z0: u32 = 30;
const UNIT_HOLE: u32 = 99;
const UNIT_TARGET: u32 = 50;

/// Indices into the three operand pools of an [`AxiomSuite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triple(pub usize, pub usize, pub usize);

/// Outcome of an axiom run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub exhaustive_cases: usize,
    pub random_cases: usize,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every carrier element with a bounded number of vertices, placed on three
/// disjoint label ranges so that any triple can be composed. Each pool keeps
/// one element per orbit of the relabelings fixing its hole labels.
#[derive(Clone, Debug)]
pub struct AxiomSuite {
    inst: Instance,
    pools: [Vec<Structure>; 3],
}

fn labels(base: u32, n: usize) -> Vec<Label> {
    (0..n as u32).map(|i| Label(base + i)).collect()
}

/// Edge cap used for carriers with infinitely many elements per vertex set.
pub fn default_edge_cap(inst: &Instance) -> usize {
    if inst.carrier.oriented() {
        1
    } else {
        2
    }
}

impl AxiomSuite {
    pub fn new(inst: Instance, max_vertices: usize) -> Self {
        let cap = default_edge_cap(&inst);
        let pool = |base, fixed: usize| {
            let mut seen = BTreeSet::new();
            (1..=max_vertices)
                .flat_map(|n| carrier_elements(&inst, &labels(base, n), cap))
                .filter(|s| seen.insert(orbit_key(s, fixed)))
                .collect::<Vec<_>>()
        };
        Self {
            inst,
            pools: [pool(X0, 2), pool(Y0, 1), pool(Z0, 0)],
        }
    }

    pub fn instance(&self) -> &Instance {
        &self.inst
    }

    /// Number of operand triples.
    pub fn len(&self) -> usize {
        self.pools.iter().map(Vec::len).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn triple(&self, mut i: usize) -> Triple {
        let (a, b) = (self.pools[0].len(), self.pools[1].len());
        let x = i % a;
        i /= a;
        Triple(x, i % b, i / b)
    }

    /// Both associativity diagrams on one triple.
    pub fn check_triple(&self, t: Triple) -> Vec<String> {
        let (x, y, z) = (
            &self.pools[0][t.0],
            &self.pools[1][t.1],
            &self.pools[2][t.2],
        );
        check_diagrams(&self.inst, x, y, z)
    }

    /// Both unit laws on every element of the first pool.
    pub fn check_units(&self) -> Vec<String> {
        self.pools[0]
            .iter()
            .flat_map(|x| check_units(&self.inst, x))
            .collect()
    }

    /// Runs every triple sequentially.
    pub fn run(&self) -> AxiomReport {
        let mut report = AxiomReport::default();
        for i in 0..self.len() {
            report.violations.extend(self.check_triple(self.triple(i)));
        }
        report.violations.extend(self.check_units());
        report.exhaustive_cases = self.len() + self.pools[0].len();
        report
    }
}

/// Least encoding over relabelings fixing the first `fixed` vertices.
fn orbit_key(s: &Structure, fixed: usize) -> Vec<u8> {
    let vs = s.vertices();
    let fixed = fixed.min(vs.len());
    let free = vs.len() - fixed;
    permutations(free)
        .into_iter()
        .map(|p| {
            let t = s.relabel_with(|l| {
                let i = vs.binary_search(&l).expect("vertex");
                if i < fixed {
                    l
                } else {
                    vs[fixed + p[i - fixed]]
                }
            });
            canonical_bytes(&t.graph, t.root)
        })
        .min()
        .unwrap_or_default()
}

fn compose(
    inst: &Instance,
    x: &LinComb<Structure>,
    s: u32,
    y: &LinComb<Structure>,
) -> Result<LinComb<Structure>, String> {
    inst.compose(x, Label(s), y)
        .map_err(|e| format!("{}: {e}", inst.name))
}

/// Sequential associativity at (`X0`, `Y0`) and, when `x` has a second
/// vertex, parallel associativity at (`X0`, `X0 + 1`).
pub fn check_diagrams(inst: &Instance, x: &Structure, y: &Structure, z: &Structure) -> Vec<String> {
    let mut out = Vec::new();
    let (lx, ly, lz) = (
        LinComb::basis(x.clone()),
        LinComb::basis(y.clone()),
        LinComb::basis(z.clone()),
    );
    let seq = || -> Result<bool, String> {
        let lhs = compose(inst, &compose(inst, &lx, X0, &ly)?, Y0, &lz)?;
        let rhs = compose(inst, &lx, X0, &compose(inst, &ly, Y0, &lz)?)?;
        Ok(lhs == rhs)
    };
    match seq() {
        Ok(true) => {}
        Ok(false) => out.push(format!(
            "{}: sequential associativity fails for {x:?}, {y:?}, {z:?}",
            inst.name
        )),
        Err(e) => out.push(e),
    }
    if x.graph.has_vertex(Label(X0 + 1)) {
        let par = || -> Result<bool, String> {
            let lhs = compose(inst, &compose(inst, &lx, X0, &ly)?, X0 + 1, &lz)?;
            let rhs = compose(inst, &compose(inst, &lx, X0 + 1, &lz)?, X0, &ly)?;
            Ok(lhs == rhs)
        };
        match par() {
            Ok(true) => {}
            Ok(false) => out.push(format!(
                "{}: parallel associativity fails for {x:?}, {y:?}, {z:?}",
                inst.name
            )),
            Err(e) => out.push(e),
        }
    }
    out
}

/// Left and right unit laws for `x` (whose first vertex is `X0`).
pub fn check_units(inst: &Instance, x: &Structure) -> Vec<String> {
    let mut out = Vec::new();
    let lx = LinComb::basis(x.clone());
    let left = LinComb::basis(inst.unit(Label(UNIT_HOLE)));
    match compose(inst, &left, UNIT_HOLE, &lx) {
        Ok(r) if r == lx => {}
        Ok(_) => out.push(format!("{}: left unit fails for {x:?}", inst.name)),
        Err(e) => out.push(e),
    }
    let right = LinComb::basis(inst.unit(Label(UNIT_TARGET)));
    let moved = LinComb::basis(x.relabel_with(|l| {
        if l == Label(X0) {
            Label(UNIT_TARGET)
        } else {
            l
        }
    }));
    match compose(inst, &lx, X0, &right) {
        Ok(r) if r == moved => {}
        Ok(_) => out.push(format!("{}: right unit fails for {x:?}", inst.name)),
        Err(e) => out.push(e),
    }
    out
}

/// One random case: a triple with composite arity at most `n_max`, checked
/// against both diagrams and both unit laws.
pub fn random_case<R: Rng>(inst: &Instance, n_max: usize, rng: &mut R) -> Vec<String> {
    let n_max = n_max.max(3);
    if inst.carrier == Carrier::Identity {
        let x = inst.unit(Label(X0));
        let mut v = check_diagrams(inst, &x, &inst.unit(Label(Y0)), &inst.unit(Label(Z0)));
        v.extend(check_units(inst, &x));
        return v;
    }
    // a + b + c - 2 <= n_max with a >= 2
    let a = rng.gen_range(2..=n_max - 1);
    let b = rng.gen_range(1..=n_max - a);
    let c = rng.gen_range(1..=n_max + 2 - a - b);
    let x = random_element(inst, &labels(X0, a), rng);
    let y = random_element(inst, &labels(Y0, b), rng);
    let z = random_element(inst, &labels(Z0, c), rng);
    let mut v = check_diagrams(inst, &x, &y, &z);
    v.extend(check_units(inst, &x));
    v
}
