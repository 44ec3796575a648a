//! Execution strategy for the brute-force loops.
//!
//! Every search in the crate is phrased over a dense index space `0..len`
//! and asks for the *first* index satisfying a predicate, so parallel and
//! sequential runs always agree on which witness is reported.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How exhaustive loops are driven.
///
/// Without the `parallel` feature, [`Execution::Parallel`] silently runs
/// sequentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Least index in `0..len` for which `pred` holds.
    pub fn find_first<F>(self, len: usize, pred: F) -> Option<usize>
    where
        F: Fn(usize) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().find_first(|&i| pred(i)),
            _ => (0..len).find(|&i| pred(i)),
        }
    }

    /// `f` applied to every index, results in index order.
    pub fn map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// Least pair `(i, j)` in `0..rows x 0..cols`, row-major, for which `pred` holds.
    pub fn find_first_pair<F>(self, rows: usize, cols: usize, pred: F) -> Option<(usize, usize)>
    where
        F: Fn(usize, usize) -> bool + Sync + Send,
    {
        if cols == 0 {
            return None;
        }
        self.find_first(rows * cols, |idx| pred(idx / cols, idx % cols)).map(|idx| (idx / cols, idx % cols))
    }
}
