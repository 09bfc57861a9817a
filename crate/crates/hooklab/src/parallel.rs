//! Switch between rayon-backed and sequential execution of the bulk
//! partition sweeps.
//!
//! With the `parallel` feature (the default) the mode is picked at runtime:
//! `HOOKLAB_THREADS=1` forces sequential execution, anything else uses the
//! global rayon pool. Without the feature the crate compiles without rayon
//! and everything runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution mode for map/reduce sweeps over partition lists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Decide from `HOOKLAB_THREADS` (sequential iff it is set to `1`).
    #[default]
    Auto,
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Mode {
    fn is_parallel(self) -> bool {
        match self {
            Mode::Sequential => false,
            #[cfg(feature = "parallel")]
            Mode::Parallel => true,
            Mode::Auto => {
                #[cfg(feature = "parallel")]
                {
                    std::env::var("HOOKLAB_THREADS").map_or(true, |v| v.trim() != "1")
                }
                #[cfg(not(feature = "parallel"))]
                false
            }
        }
    }
}

/// Map every item and fold the results with an associative, commutative
/// combine. Exact rational accumulation makes the result independent of the
/// schedule.
pub fn map_reduce<T, R, M, C>(mode: Mode, items: Vec<T>, identity: R, map: M, combine: C) -> R
where
    T: Send + Sync,
    R: Send + Sync + Clone,
    M: Fn(&T) -> R + Send + Sync,
    C: Fn(R, R) -> R + Send + Sync,
{
    if mode.is_parallel() {
        #[cfg(feature = "parallel")]
        {
            return items
                .par_iter()
                .map(&map)
                .reduce(|| identity.clone(), &combine);
        }
    }
    items.iter().map(&map).fold(identity, &combine)
}

/// Run a check over every item, returning the first failure message.
pub fn find_failure<T, F>(mode: Mode, items: Vec<T>, check: F) -> Option<String>
where
    T: Send + Sync,
    F: Fn(&T) -> Result<(), String> + Send + Sync,
{
    if mode.is_parallel() {
        #[cfg(feature = "parallel")]
        {
            return items.par_iter().find_map_any(|t| check(t).err());
        }
    }
    items.iter().find_map(|t| check(t).err())
}
