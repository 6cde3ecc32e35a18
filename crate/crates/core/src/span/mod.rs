//! Suboperads generated by a family of elements, arity by arity.
//!
//! Every arity `n` is stored as a row space over structures on the vertex
//! set `{1..n}`. Spans are kept closed under relabeling, so each pair of
//! basis rows only needs to be composed at every hole and every target
//! subset with order-preserving bijections.

mod generators;
mod sweep;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Label;
use crate::linalg::{LinComb, RowSpace};
use crate::operad::{Instance, Structure};
use crate::perm::{permutations, subsets};

pub use generators::{generator_search, generator_tower, GeneratorReport, GradeReport};
pub use sweep::{support_grades, SweepStats};

/// Default largest arity a table may be built to.
pub const DEFAULT_ARITY_BOUND: usize = 6;

const HOLE: Label = Label(u32::MAX);

/// Limits on a closure computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOptions {
    /// Compositions whose grade would exceed this are skipped.
    pub edge_cap: Option<usize>,
    /// Largest arity accepted without `unsafe_arity`.
    pub arity_bound: usize,
    pub unsafe_arity: bool,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        Self {
            edge_cap: None,
            arity_bound: DEFAULT_ARITY_BOUND,
            unsafe_arity: false,
        }
    }
}

impl ClosureOptions {
    pub fn with_edge_cap(cap: usize) -> Self {
        Self {
            edge_cap: Some(cap),
            ..Self::default()
        }
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        if n > self.arity_bound && !self.unsafe_arity {
            return Err(Error::ArityBound {
                got: n,
                max: self.arity_bound,
            });
        }
        Ok(())
    }
}

/// Output of one composition task.
pub type TaskOutput = Result<Vec<LinComb<Structure>>>;

/// Runs independent tasks; results must come back in task order.
pub trait Executor {
    fn map(&self, tasks: usize, f: &(dyn Fn(usize) -> TaskOutput + Sync)) -> Vec<TaskOutput>;
}

/// Runs tasks one after another.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map(&self, tasks: usize, f: &(dyn Fn(usize) -> TaskOutput + Sync)) -> Vec<TaskOutput> {
        (0..tasks).map(f).collect()
    }
}

/// Labels `1..=n`.
pub fn standard_labels(n: usize) -> Vec<Label> {
    (1..=n as u32).map(Label).collect()
}

/// Arity of a homogeneous-arity combination, with its terms moved onto
/// `{1..n}` by the order-preserving bijection.
pub fn standardize(v: &LinComb<Structure>) -> Result<(usize, LinComb<Structure>)> {
    let Some(first) = v.first_key() else {
        return Err(Error::Invalid("zero vector has no arity".into()));
    };
    let vs = first.vertices().to_vec();
    if v.support().any(|s| s.vertices() != &vs[..]) {
        return Err(Error::Invalid("terms live on different vertex sets".into()));
    }
    let out =
        v.map_keys(|s| s.relabel_with(|l| Label(vs.binary_search(&l).expect("vertex") as u32 + 1)));
    Ok((vs.len(), out))
}

/// All relabelings of a combination on `{1..n}`.
pub fn orbit(v: &LinComb<Structure>, n: usize) -> Vec<LinComb<Structure>> {
    permutations(n)
        .into_iter()
        .map(|p| v.map_keys(|s| s.relabel_with(|l| Label(p[l.0 as usize - 1] as u32 + 1))))
        .collect()
}

/// Largest grade among the terms of `v`.
pub fn grade_of(v: &LinComb<Structure>) -> usize {
    v.support().map(Structure::grade).max().unwrap_or(0)
}

/// Every composite of `x` (on `{1..p}`) with `y` (on `{1..q}`) over all holes
/// and all target subsets of `{1..p+q-1}`.
pub fn all_composites(
    inst: &Instance,
    x: &LinComb<Structure>,
    p: usize,
    y: &LinComb<Structure>,
    q: usize,
) -> TaskOutput {
    let n = p + q - 1;
    let mut out = Vec::new();
    for w in subsets(n, q) {
        let rest: Vec<u32> = (0..n as u32)
            .filter(|i| !w.contains(&(*i as usize)))
            .collect();
        let y2 = y.map_keys(|s| s.relabel_with(|l| Label(w[l.0 as usize - 1] as u32 + 1)));
        for h in 1..=p as u32 {
            let x2 = x.map_keys(|s| {
                s.relabel_with(|l| {
                    use core::cmp::Ordering::*;
                    match l.0.cmp(&h) {
                        Equal => HOLE,
                        Less => Label(rest[l.0 as usize - 1] + 1),
                        Greater => Label(rest[l.0 as usize - 2] + 1),
                    }
                })
            });
            out.push(inst.compose(&x2, HOLE, &y2)?);
        }
    }
    Ok(out)
}

/// A suboperad, stored arity by arity up to its depth.
#[derive(Clone, Debug)]
pub struct ClosureTable {
    inst: Instance,
    options: ClosureOptions,
    spaces: Vec<RowSpace<Structure>>,
    bases: Vec<Vec<LinComb<Structure>>>,
}

impl ClosureTable {
    /// An empty table for `inst`.
    pub fn empty(inst: Instance, options: ClosureOptions) -> Self {
        Self {
            inst,
            options,
            spaces: Vec::new(),
            bases: Vec::new(),
        }
    }

    /// The suboperad generated by `generators`, through arity `n_max`.
    pub fn closure(
        inst: Instance,
        generators: &[LinComb<Structure>],
        n_max: usize,
        options: ClosureOptions,
    ) -> Result<Self> {
        Self::closure_with(inst, generators, n_max, options, &Sequential)
    }

    pub fn closure_with(
        inst: Instance,
        generators: &[LinComb<Structure>],
        n_max: usize,
        options: ClosureOptions,
        exec: &dyn Executor,
    ) -> Result<Self> {
        options.check_arity(n_max)?;
        let mut seeds: Vec<Vec<LinComb<Structure>>> = alloc::vec![Vec::new(); n_max + 1];
        for g in generators {
            for s in g.support() {
                inst.check(s)?;
            }
            let (n, v) = standardize(g)?;
            if n <= n_max && options.edge_cap.is_none_or(|c| grade_of(&v) <= c) {
                seeds[n].push(v);
            }
        }
        let mut table = Self::empty(inst, options);
        for (n, seed) in seeds.iter().enumerate().skip(1) {
            table.extend_arity(n, seed, exec)?;
        }
        Ok(table)
    }

    pub fn instance(&self) -> &Instance {
        &self.inst
    }

    pub fn options(&self) -> &ClosureOptions {
        &self.options
    }

    /// Largest arity present.
    pub fn depth(&self) -> usize {
        self.spaces.len()
    }

    /// Dimensions for arities `1..=depth`.
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(RowSpace::rank).collect()
    }

    /// Dimension of each grade at arity `n` (rows are homogeneous when the
    /// generators are).
    pub fn dims_by_grade(&self, n: usize) -> Vec<(usize, usize)> {
        let mut counts: alloc::collections::BTreeMap<usize, usize> = Default::default();
        for row in self.basis(n) {
            *counts.entry(grade_of(row)).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    pub fn space(&self, n: usize) -> &RowSpace<Structure> {
        &self.spaces[n - 1]
    }

    /// Reduced basis at arity `n`.
    pub fn basis(&self, n: usize) -> &[LinComb<Structure>] {
        &self.bases[n - 1]
    }

    /// Whether `v` lies in the span at its arity.
    pub fn contains(&self, v: &LinComb<Structure>) -> Result<bool> {
        if v.is_zero() {
            return Ok(true);
        }
        let (n, w) = standardize(v)?;
        if n > self.depth() {
            return Err(Error::ArityBound {
                got: n,
                max: self.depth(),
            });
        }
        Ok(self.spaces[n - 1].contains(&w))
    }

    fn unit_row(&self) -> LinComb<Structure> {
        LinComb::basis(self.inst.unit(Label(1)))
    }

    /// Sets arity `n` (which must be the next one) to a given space.
    pub(crate) fn push_space(&mut self, n: usize, space: RowSpace<Structure>) {
        assert_eq!(n, self.depth() + 1);
        self.bases.push(space.basis());
        self.spaces.push(space);
    }

    /// Pairs of basis rows `(p, i, q, j)` for the given splits, skipping the
    /// unit and compositions beyond the edge cap.
    fn pairs(
        &self,
        splits: &[(usize, usize)],
        extra: Option<&[LinComb<Structure>]>,
        n: usize,
    ) -> Vec<(usize, usize, usize, usize)> {
        let unit = self.unit_row();
        let row = |a: usize, i: usize| -> &LinComb<Structure> {
            if a == n {
                &extra.expect("current arity rows")[i]
            } else {
                &self.bases[a - 1][i]
            }
        };
        let len = |a: usize| {
            if a == n {
                extra.map_or(0, <[_]>::len)
            } else {
                self.bases[a - 1].len()
            }
        };
        let mut out = Vec::new();
        for &(p, q) in splits {
            for i in 0..len(p) {
                let x = row(p, i);
                if *x == unit {
                    continue;
                }
                for j in 0..len(q) {
                    let y = row(q, j);
                    if *y == unit {
                        continue;
                    }
                    if let Some(c) = self.options.edge_cap {
                        if grade_of(x) + grade_of(y) > c {
                            continue;
                        }
                    }
                    out.push((p, i, q, j));
                }
            }
        }
        out
    }

    fn run_pairs(
        &self,
        pairs: &[(usize, usize, usize, usize)],
        current: &[LinComb<Structure>],
        n: usize,
        exec: &dyn Executor,
        space: &mut RowSpace<Structure>,
    ) -> Result<bool> {
        let row = |a: usize, i: usize| -> &LinComb<Structure> {
            if a == n {
                &current[i]
            } else {
                &self.bases[a - 1][i]
            }
        };
        let inst = self.inst;
        let task = |t: usize| {
            let (p, i, q, j) = pairs[t];
            all_composites(&inst, row(p, i), p, row(q, j), q)
        };
        let mut grew = false;
        for out in exec.map(pairs.len(), &task) {
            for v in out? {
                grew |= space.insert(&v);
            }
        }
        Ok(grew)
    }

    /// Space spanned by all compositions of rows of arities `< n` landing in
    /// arity `n` (both operands of arity at least two).
    pub fn composable_span(&self, n: usize, exec: &dyn Executor) -> Result<RowSpace<Structure>> {
        if self.depth() + 1 < n {
            return Err(Error::IncompleteTable(n - 1));
        }
        let splits: Vec<(usize, usize)> = (2..n)
            .map(|p| (p, n + 1 - p))
            .filter(|&(_, q)| q >= 2)
            .collect();
        let pairs = self.pairs(&splits, None, n);
        let mut space = RowSpace::new();
        self.run_pairs(&pairs, &[], n, exec, &mut space)?;
        Ok(space)
    }

    /// Closes arity `n` given seeds on `{1..n}`.
    fn extend_arity(
        &mut self,
        n: usize,
        seeds: &[LinComb<Structure>],
        exec: &dyn Executor,
    ) -> Result<()> {
        if n != self.depth() + 1 {
            return Err(Error::IncompleteTable(self.depth()));
        }
        let mut space = RowSpace::new();
        if n == 1 {
            space.insert(&self.unit_row());
        }
        for s in seeds {
            for v in orbit(s, n) {
                space.insert(&v);
            }
        }
        // lower arities only
        let lower: Vec<(usize, usize)> = (2..n).map(|p| (p, n + 1 - p)).collect();
        let pairs = self.pairs(&lower, None, n);
        self.run_pairs(&pairs, &[], n, exec, &mut space)?;
        // arity-one operands against the current arity, until stable
        let splits = if n == 1 {
            alloc::vec![(1, 1)]
        } else {
            alloc::vec![(1, n), (n, 1)]
        };
        loop {
            let current = space.basis();
            let pairs = self.pairs(&splits, Some(&current), n);
            if n == 1 && !pairs.is_empty() && self.options.edge_cap.is_none() {
                // non-unit elements of arity one generate without bound
                return Err(Error::Invalid(
                    "closure does not stabilise; set an edge cap".into(),
                ));
            }
            if pairs.is_empty() || !self.run_pairs(&pairs, &current, n, exec, &mut space)? {
                break;
            }
        }
        self.push_space(n, space);
        Ok(())
    }
}

#[cfg(test)]
mod tests;
