//! Batch evaluation over independent inputs.
//!
//! Every engine operation is a pure function of immutable data, so sweeps
//! over genera, pencil degrees or scenario lists split cleanly across
//! threads. With the `parallel` feature (on by default) [`map`] fans out over
//! the rayon pool; without it, it runs the sequential loop. Both paths are
//! always available as [`map_sequential`] and, with the feature,
//! [`map_parallel`], so results can be compared directly.

use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::enumerative::{hyperflex_count, sw_class, EnumerativeError, SwClassBreakdown};
use crate::localring::SingularPointModel;
use crate::wronskian::{point_weight, LocalLinearSystem, WeightReport, WronskianError};

/// Applies `f` to every item in order, on the current thread.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Applies `f` to every item on the rayon pool. Output order matches input.
#[cfg(feature = "parallel")]
pub fn map_parallel<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Parallel when the `parallel` feature is enabled, sequential otherwise.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_parallel(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_sequential(items, f)
    }
}

pub fn sw_class_sweep(
    genera: RangeInclusive<u64>,
) -> Vec<Result<SwClassBreakdown, EnumerativeError>> {
    let gs: Vec<u64> = genera.collect();
    map(&gs, |&g| sw_class(g))
}

pub fn hyperflex_sweep(degrees: RangeInclusive<u64>) -> Vec<Result<BigInt, EnumerativeError>> {
    let ds: Vec<u64> = degrees.collect();
    map(&ds, |&d| hyperflex_count(d))
}

pub fn point_weights(
    cases: &[(SingularPointModel, LocalLinearSystem)],
) -> Vec<Result<WeightReport, WronskianError>> {
    map(cases, |(p, s)| point_weight(p, s))
}
