//! Minimal generator search against an ambient basis.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{grade_of, orbit, standard_labels, ClosureOptions, ClosureTable, Executor};
use crate::error::{Error, Result};
use crate::graph::{shape_key, Label, ShapeKey};
use crate::linalg::{LinComb, RowSpace};
use crate::operad::{carrier_elements, Carrier, Instance, Structure};

/// What one grade (edge count) of an arity needs beyond compositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradeReport {
    pub grade: usize,
    pub ambient: usize,
    pub composable: usize,
    /// Chosen representatives with the rank each orbit added.
    pub added: Vec<(Structure, usize)>,
}

/// Generators needed at one arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    pub arity: usize,
    pub ambient_dim: usize,
    pub composable_rank: usize,
    pub grades: Vec<GradeReport>,
    pub representatives: Vec<Structure>,
    pub shapes: Vec<ShapeKey>,
    /// Per representative: dropping its orbit loses rank.
    pub minimal: Vec<bool>,
}

impl GeneratorReport {
    /// Dimension of the space of new generators.
    pub fn deficiency(&self) -> usize {
        self.ambient_dim - self.composable_rank
    }

    pub fn all_minimal(&self) -> bool {
        self.minimal.iter().all(|&m| m)
    }
}

fn orbit_set(s: &Structure, n: usize) -> Vec<LinComb<Structure>> {
    let set: BTreeSet<LinComb<Structure>> =
        orbit(&LinComb::basis(s.clone()), n).into_iter().collect();
    set.into_iter().collect()
}

fn gain(space: &RowSpace<Structure>, orbit: &[LinComb<Structure>]) -> (usize, RowSpace<Structure>) {
    let mut trial = space.clone();
    let before = trial.rank();
    for v in orbit {
        trial.insert(v);
    }
    (trial.rank() - before, trial)
}

/// Compares the compositions landing in arity `n` with the ambient basis
/// (structures on `{1..n}`) and picks generator representatives.
///
/// Grades are handled in ascending order. Inside a grade, the shape whose
/// orbit adds the most rank is taken first, ties broken by shape key.
pub fn generator_search(
    table: &ClosureTable,
    n: usize,
    ambient: &[Structure],
    exec: &dyn Executor,
) -> Result<GeneratorReport> {
    if n == 0 || table.depth() + 1 < n {
        return Err(Error::IncompleteTable(n.saturating_sub(1)));
    }
    let composable: Vec<LinComb<Structure>> = if n == 1 {
        alloc::vec![LinComb::basis(table.instance().unit(Label(1)))]
    } else {
        table.composable_span(n, exec)?.basis()
    };
    let mut by_grade: BTreeMap<usize, Vec<&Structure>> = BTreeMap::new();
    for s in ambient {
        by_grade.entry(s.grade()).or_default().push(s);
    }
    let mut grades = Vec::new();
    let mut representatives = Vec::new();
    let mut shapes = Vec::new();
    let mut minimal = Vec::new();
    let mut composable_rank = 0;
    for (&grade, members) in &by_grade {
        let mut space = RowSpace::new();
        for row in composable.iter().filter(|r| grade_of(r) == grade) {
            space.insert(row);
        }
        let base = space.clone();
        composable_rank += space.rank();
        let mut candidates: BTreeMap<ShapeKey, Structure> = BTreeMap::new();
        for s in members {
            if !space.contains(&LinComb::basis((*s).clone())) {
                candidates
                    .entry(shape_key(&s.graph, s.root)?)
                    .or_insert_with(|| (*s).clone());
            }
        }
        let mut added = Vec::new();
        let mut orbits = Vec::new();
        while space.rank() < members.len() {
            let mut best: Option<(usize, ShapeKey, RowSpace<Structure>)> = None;
            for (key, rep) in &candidates {
                let (g, trial) = gain(&space, &orbit_set(rep, n));
                if g > 0 && best.as_ref().is_none_or(|b| g > b.0) {
                    best = Some((g, key.clone(), trial));
                }
            }
            let Some((g, key, trial)) = best else { break };
            let rep = candidates.remove(&key).expect("candidate");
            space = trial;
            orbits.push(orbit_set(&rep, n));
            added.push((rep.clone(), g));
            representatives.push(rep);
            shapes.push(key);
        }
        for i in 0..added.len() {
            let mut without = base.clone();
            for (j, o) in orbits.iter().enumerate() {
                if j != i {
                    for v in o {
                        without.insert(v);
                    }
                }
            }
            minimal.push(without.rank() < space.rank());
        }
        grades.push(GradeReport {
            grade,
            ambient: members.len(),
            composable: base.rank(),
            added,
        });
    }
    Ok(GeneratorReport {
        arity: n,
        ambient_dim: ambient.len(),
        composable_rank,
        grades,
        representatives,
        shapes,
        minimal,
    })
}

/// Generator reports for arities `1..=n_max`, the table being filled with
/// the whole ambient operad as it goes.
pub fn generator_tower(
    inst: Instance,
    n_max: usize,
    options: ClosureOptions,
    exec: &dyn Executor,
) -> Result<(ClosureTable, Vec<GeneratorReport>)> {
    options.check_arity(n_max)?;
    let unbounded = matches!(
        inst.carrier,
        Carrier::MultiGraphs
            | Carrier::ConnectedMultiGraphs
            | Carrier::RootedOrientedMultiGraphs
            | Carrier::RootedConnectedOrientedMultiGraphs
    );
    let cap = match options.edge_cap {
        Some(c) => c,
        None if unbounded => {
            return Err(Error::Invalid(
                "multigraph carriers need an edge cap".into(),
            ))
        }
        None => usize::MAX,
    };
    let mut table = ClosureTable::empty(inst, options);
    let mut reports = Vec::new();
    for n in 1..=n_max {
        let ambient = carrier_elements(&inst, &standard_labels(n), cap);
        let report = generator_search(&table, n, &ambient, exec)?;
        let mut space = if n == 1 {
            let mut s = RowSpace::new();
            s.insert(&LinComb::basis(inst.unit(Label(1))));
            s
        } else {
            table.composable_span(n, exec)?
        };
        for r in &report.representatives {
            for v in orbit_set(r, n) {
                space.insert(&v);
            }
        }
        if space.rank() != ambient.len() {
            return Err(Error::Invalid(
                "generator search did not reach the ambient span".into(),
            ));
        }
        table.push_space(n, space);
        reports.push(report);
    }
    Ok((table, reports))
}
