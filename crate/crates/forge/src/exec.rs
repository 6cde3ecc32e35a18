use operad_forge_core::span::{Executor, TaskOutput};
use rayon::prelude::*;

use crate::error::{CliError, CliResult};

/// Environment variable capping the worker count.
pub const THREADS_VAR: &str = "OPERAD_FORGE_THREADS";

/// Runs composition tasks on a rayon pool. Results keep task order, so
/// output does not depend on the worker count.
pub struct Parallel {
    pool: rayon::ThreadPool,
}

impl Parallel {
    pub fn new(threads: Option<usize>) -> CliResult<Self> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            builder = builder.num_threads(n);
        }
        let pool = builder
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(Self { pool })
    }

    /// A pool sized by `OPERAD_FORGE_THREADS`, or by rayon's default.
    pub fn from_env() -> CliResult<Self> {
        match std::env::var(THREADS_VAR) {
            Err(_) => Self::new(None),
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(n) if n > 0 => Self::new(Some(n)),
                _ => Err(CliError::parse(format!(
                    "{THREADS_VAR} must be a positive integer, got {v:?}"
                ))),
            },
        }
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Parallel {
    fn map(&self, tasks: usize, f: &(dyn Fn(usize) -> TaskOutput + Sync)) -> Vec<TaskOutput> {
        self.pool
            .install(|| (0..tasks).into_par_iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use operad_forge_core::operad::{Structure, G};
    use operad_forge_core::span::{ClosureOptions, ClosureTable, Sequential};
    use operad_forge_core::{LinComb, MultiHyperGraph};

    use super::*;

    #[test]
    fn matches_sequential() {
        let gens: Vec<LinComb<Structure>> = [&[][..], &[(1, 2)][..]]
            .iter()
            .map(|e| {
                LinComb::basis(Structure::unrooted(
                    MultiHyperGraph::multigraph(&[1, 2], e).unwrap(),
                ))
            })
            .collect();
        let par = Parallel::new(Some(3)).unwrap();
        assert_eq!(par.threads(), 3);
        let a = ClosureTable::closure_with(G, &gens, 4, ClosureOptions::default(), &par).unwrap();
        let b = ClosureTable::closure_with(G, &gens, 4, ClosureOptions::default(), &Sequential)
            .unwrap();
        assert_eq!(a.dims(), b.dims());
        for n in 1..=4 {
            assert_eq!(a.basis(n), b.basis(n));
        }
    }
}
