//! Row-major expansion of multi-axis grids. Cells are independent pure
//! evaluations, so sweeps run in parallel and are buffered back in grid
//! order before anything is written.

use rayon::prelude::*;

/// Decomposes a flat row-major index into per-axis indices
/// (first axis outermost).
pub fn decompose(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &dim) in out.iter_mut().zip(dims).rev() {
        *slot = index % dim;
        index /= dim;
    }
    out
}

/// Evaluates `f` over the row-major product of the axis value lists,
/// in parallel, returning rows in grid order.
pub fn map_cells<T, F>(axes: &[Vec<f64>], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[f64]) -> T + Sync,
{
    let dims: Vec<usize> = axes.iter().map(Vec::len).collect();
    let total: usize = dims.iter().product();
    (0..total)
        .into_par_iter()
        .map(|k| {
            let idx = decompose(k, &dims);
            let point: Vec<f64> = idx.iter().zip(axes).map(|(&i, ax)| ax[i]).collect();
            f(&point)
        })
        .collect()
}
