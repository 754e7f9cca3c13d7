//! Order-preserving maps over parameter grids.
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! pool; results always come back in input order.

use std::ops::RangeInclusive;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::classify::{knm_report, KnmReport};
use crate::error::Result;

pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_sequential(items, f)
}

/// Row-major `(m, n)` grid.
pub fn grid(m: RangeInclusive<i64>, n: RangeInclusive<i64>) -> Vec<(i64, i64)> {
    m.flat_map(|a| n.clone().map(move |b| (a, b))).collect()
}

pub fn knm_grid(m: RangeInclusive<i64>, n: RangeInclusive<i64>) -> Result<Vec<KnmReport>> {
    map_ordered(&grid(m, n), |&(a, b)| knm_report(a, b))
        .into_iter()
        .collect()
}

pub fn knm_grid_sequential(
    m: RangeInclusive<i64>,
    n: RangeInclusive<i64>,
) -> Result<Vec<KnmReport>> {
    map_sequential(&grid(m, n), |&(a, b)| knm_report(a, b))
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_order() {
        assert_eq!(grid(0..=1, 5..=6), vec![(0, 5), (0, 6), (1, 5), (1, 6)]);
        let (lo, hi) = (1, 0);
        assert!(grid(lo..=hi, 0..=3).is_empty());
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = knm_grid(-8..=8, -8..=8).unwrap();
        let b = knm_grid_sequential(-8..=8, -8..=8).unwrap();
        assert_eq!(a, b);
    }
}
