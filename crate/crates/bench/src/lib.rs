//! Deterministic inputs for the benchmarks.

use num_complex::Complex64;
use qcorr::{BipartiteState, ComplexMatrix};

/// Dense Hermitian matrix with complex off-diagonal entries.
pub fn dense_hermitian(dim: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |i, j| {
        let (lo, hi) = (i.min(j) as f64, i.max(j) as f64);
        let re = ((lo + 1.0) * (hi + 2.0)).sin();
        let im = if i == j { 0.0 } else { (3.0 * lo + hi).cos() };
        if i <= j {
            Complex64::new(re, im)
        } else {
            Complex64::new(re, -im)
        }
    })
}

/// Full-rank state `H·H† / Tr(H·H†)` on a `dim_a × dim_b` space.
pub fn dense_state(dim_a: usize, dim_b: usize) -> BipartiteState {
    let h = dense_hermitian(dim_a * dim_b);
    let m = &h * &h.adjoint();
    let tr = m.trace().re;
    BipartiteState::new(dim_a, dim_b, m.scale(1.0 / tr)).expect("valid dense state")
}
