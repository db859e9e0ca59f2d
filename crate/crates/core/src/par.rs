//! Execution strategy for the embarrassingly parallel loops.
//!
//! Every loop goes through [`map_reduce`], whose reduction operator must be
//! associative and commutative. Callers use total orders with index
//! tie-breaks, so both paths produce bit-identical results.

/// How configuration and grid loops are executed.
///
/// `Parallel` silently degrades to `Sequential` when the crate is built
/// without the `parallel` feature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

pub(crate) fn map_reduce<T, M, R>(exec: Exec, len: usize, identity: T, map: M, reduce: R) -> T
where
    T: Send + Sync + Clone,
    M: Fn(usize) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            (0..len)
                .into_par_iter()
                .map(map)
                .reduce(|| identity.clone(), reduce)
        }
        _ => (0..len).map(map).fold(identity, reduce),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_paths_agree() {
        let seq = map_reduce(
            Exec::Sequential,
            1000,
            0u64,
            |i| (i * i) as u64,
            |a, b| a + b,
        );
        let par = map_reduce(Exec::Parallel, 1000, 0u64, |i| (i * i) as u64, |a, b| a + b);
        assert_eq!(seq, par);
        assert_eq!(seq, 332_833_500);
    }

    #[test]
    fn empty_range_is_identity() {
        let r = map_reduce(Exec::default(), 0, 7i32, |_| 1, |a, b| a.max(b));
        assert_eq!(r, 7);
    }
}
