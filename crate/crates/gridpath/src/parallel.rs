//! Data-parallel evaluation of independent instances. The equivalence and
//! validation sweeps run thousands of unrelated searches; with the
//! `parallel` feature (default) they fan out over rayon, otherwise they run
//! sequentially with identical results.

/// Map `f` over the instances, in parallel when the feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_instances<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(&f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_instances<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(&f).collect()
}

/// Always-sequential variant, kept for direct comparison in the benches.
pub fn map_instances_seq<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(&f).collect()
}
