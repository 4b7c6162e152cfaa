//! Seeded random ensembles shared by the property and acceptance suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use qcorr::{
    make_classical_mixture, BipartiteState, Complex64, ComplexMatrix, MixtureTerm, ProjectiveBasis,
};
use rand::Rng;

pub fn random_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_hermitian<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, |_, _| random_complex(rng));
    ComplexMatrix::from_fn(n, |i, j| (g[(i, j)] + g[(j, i)].conj()) * 0.5)
}

/// Columns of a Gram–Schmidt orthonormalised random complex matrix.
pub fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex64> = (0..n).map(|_| random_complex(rng)).collect();
        for u in &cols {
            let dot: Complex64 = u.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (vk, uk) in v.iter_mut().zip(u) {
                *vk -= dot * uk;
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-6 {
            continue;
        }
        cols.push(v.iter().map(|z| z / norm).collect());
    }
    ComplexMatrix::from_columns(&cols).unwrap()
}

pub fn random_basis<R: Rng>(rng: &mut R, n: usize) -> ProjectiveBasis {
    ProjectiveBasis::from_unitary(&random_unitary(rng, n)).unwrap()
}

/// `G·G† / Tr(G·G†)` for a random complex `G`.
pub fn random_density<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, |_, _| random_complex(rng));
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    m.scale(1.0 / tr)
}

/// Diagonal mixture over a random non-empty subset of product basis states.
pub fn random_classical_mixture<R: Rng>(rng: &mut R, max_dim: usize) -> BipartiteState {
    let dim_a = rng.gen_range(1..=max_dim);
    let dim_b = rng.gen_range(1..=max_dim);
    let n_terms = rng.gen_range(1..=dim_a * dim_b);
    let mut pairs = BTreeSet::new();
    while pairs.len() < n_terms {
        pairs.insert((rng.gen_range(0..dim_a), rng.gen_range(0..dim_b)));
    }
    let raw: Vec<f64> = (0..n_terms).map(|_| rng.gen_range(0.01..1.0)).collect();
    let total: f64 = raw.iter().sum();
    let mut terms: Vec<MixtureTerm> = pairs
        .iter()
        .zip(&raw)
        .map(|(&(i, j), w)| MixtureTerm::new(w / total, i, j))
        .collect();
    // Absorb rounding so the weights sum to 1 to machine precision.
    let sum: f64 = terms.iter().map(|t| t.weight).sum();
    terms[0].weight += 1.0 - sum;
    make_classical_mixture(dim_a, dim_b, &terms).unwrap()
}

pub fn computational_bases(s: &BipartiteState) -> (ProjectiveBasis, ProjectiveBasis) {
    (
        ProjectiveBasis::computational(s.dim_a()),
        ProjectiveBasis::computational(s.dim_b()),
    )
}

/// Brute-force `Σ p_ij log₂(p_ij / (p_i p_j))` straight from a table.
pub fn mutual_information_oracle(table: &[Vec<f64>]) -> f64 {
    let pa: Vec<f64> = table.iter().map(|r| r.iter().sum()).collect();
    let pb: Vec<f64> = (0..table[0].len())
        .map(|j| table.iter().map(|r| r[j]).sum())
        .collect();
    let mut acc = 0.0;
    for (i, row) in table.iter().enumerate() {
        for (j, &p) in row.iter().enumerate() {
            if p > 0.0 {
                acc += p * (p / (pa[i] * pb[j])).log2();
            }
        }
    }
    acc
}

pub fn entropy_oracle(p: &[f64]) -> f64 {
    p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum()
}
