//! Data-parallel sweeps over index tuples and random probes.
//!
//! With the `parallel` feature (default) [`ExecMode::Parallel`] fans out on
//! rayon's global pool; without it every mode runs sequentially. Results
//! come back in index order either way, so reports are identical.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

/// `f(0..n)` collected in order.
pub fn map_indices<R, F>(n: usize, mode: ExecMode, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

/// Maximum of `f(0..n)`; NaN anywhere yields NaN.
pub fn max_over<F>(n: usize, mode: ExecMode, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    crate::numerics::max_residual(map_indices(n, mode, f))
}

/// All ordered index tuples in `1..=8` of the given arity, as a flat list.
pub fn tuples(arity: u32) -> Vec<Vec<usize>> {
    let total = 8usize.pow(arity);
    (0..total)
        .map(|mut n| {
            let mut t = vec![0; arity as usize];
            for slot in t.iter_mut().rev() {
                *slot = n % 8 + 1;
                n /= 8;
            }
            t
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let seq = map_indices(1000, ExecMode::Sequential, |i| i * i);
        let par = map_indices(1000, ExecMode::Parallel, |i| i * i);
        assert_eq!(seq, par);
    }

    #[test]
    fn nan_propagates() {
        assert!(max_over(10, ExecMode::Sequential, |i| if i == 3 { f64::NAN } else { 1.0 }).is_nan());
    }

    #[test]
    fn tuple_enumeration() {
        let t = tuples(4);
        assert_eq!(t.len(), 4096);
        assert_eq!(t[0], vec![1, 1, 1, 1]);
        assert_eq!(t[4095], vec![8, 8, 8, 8]);
    }
}
