//! Small dense Hermitian eigenproblem helpers shared by the operator-level
//! first-law decomposition and the dark-state model tests.

use crate::thermo::HermitianOperator;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Eigenvalues (ascending) and matching eigenvector columns of a Hermitian
/// operator, with each column phase-aligned so its largest-magnitude
/// component is real and positive.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

impl Eigensystem {
    /// Smallest adjacent eigenvalue gap; `None` for a single level.
    pub fn min_gap(&self) -> Option<f64> {
        self.values.windows(2).map(|w| w[1] - w[0]).fold(None, |acc, g| {
            Some(acc.map_or(g, |m: f64| m.min(g)))
        })
    }

    /// Full eigenvalue span `E_max - E_min`.
    pub fn span(&self) -> f64 {
        self.values[self.values.len() - 1] - self.values[0]
    }
}

/// Diagonalizes a Hermitian operator, sorting eigenpairs by ascending
/// eigenvalue and fixing the phase gauge of every eigenvector.
pub fn hermitian_eigensystem(op: &HermitianOperator) -> Eigensystem {
    let eig = op.matrix().clone().symmetric_eigen();
    let n = eig.eigenvalues.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let values: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let mut vectors = DMatrix::<Complex64>::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        let col = align_phase(&eig.eigenvectors.column(src).into_owned());
        vectors.set_column(dst, &col);
    }
    Eigensystem { values, vectors }
}

/// Rotates a vector's global phase so its largest-magnitude component is
/// real and positive. The eigenbasis comparisons across nearby parameter
/// points are gauge-dependent; this pins the gauge.
pub fn align_phase(v: &DVector<Complex64>) -> DVector<Complex64> {
    let mut idx = 0;
    let mut best = 0.0f64;
    for (i, z) in v.iter().enumerate() {
        let m = z.norm_sqr();
        if m > best {
            best = m;
            idx = i;
        }
    }
    if best == 0.0 {
        return v.clone();
    }
    let phase = v[idx] / v[idx].norm();
    v.map(|z| z / phase)
}
