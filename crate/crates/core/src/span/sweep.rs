//! Exhaustive composition sweeps over an ambient basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{all_composites, standard_labels};
use crate::error::Result;
use crate::linalg::LinComb;
use crate::operad::{carrier_elements, Instance};

/// Grades met in the supports of all composites landing in one arity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepStats {
    pub arity: usize,
    pub compositions: usize,
    /// Number of support terms seen at each grade.
    pub grade_counts: BTreeMap<usize, usize>,
}

impl SweepStats {
    pub fn max_grade(&self) -> Option<usize> {
        self.grade_counts.keys().next_back().copied()
    }

    /// Support terms with at least `threshold` edges.
    pub fn at_least(&self, threshold: usize) -> usize {
        self.grade_counts.range(threshold..).map(|(_, c)| c).sum()
    }
}

/// Composes every pair of ambient elements of arities `p, q >= 2` with
/// `p + q - 1 = n`, at every hole and target subset.
pub fn support_grades(inst: &Instance, n: usize, edge_cap: usize) -> Result<SweepStats> {
    let mut stats = SweepStats {
        arity: n,
        compositions: 0,
        grade_counts: BTreeMap::new(),
    };
    let ambient: Vec<Vec<_>> = (0..=n)
        .map(|k| carrier_elements(inst, &standard_labels(k), edge_cap))
        .collect();
    for p in 2..n {
        let q = n + 1 - p;
        for x in &ambient[p] {
            for y in &ambient[q] {
                let lx = LinComb::basis(x.clone());
                let ly = LinComb::basis(y.clone());
                for v in all_composites(inst, &lx, p, &ly, q)? {
                    stats.compositions += 1;
                    for s in v.support() {
                        *stats.grade_counts.entry(s.grade()).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    Ok(stats)
}
