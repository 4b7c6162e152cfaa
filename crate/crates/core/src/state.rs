//! Validated density matrices and bipartite states.
//!
//! A bipartite state lives on `C^{dim_a} ⊗ C^{dim_b}`. The product basis
//! vector `|i⟩⊗|j⟩` sits at flat index `i·dim_b + j`, i.e. row-major over
//! subsystem A, matching the ket ordering `|ij⟩`.

use std::collections::HashSet;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eigen::hermitian_eigen;
use crate::error::{Error, Result, StateInvariant};
use crate::matrix::{tensor_product, ComplexMatrix};
use crate::{MAX_SUBSYSTEM_DIM, STATE_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Subsystem {
    A,
    B,
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subsystem::A => "A",
            Subsystem::B => "B",
        })
    }
}

/// Hermitian, unit-trace, positive-semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    /// Spectrum sorted descending, computed once at validation.
    spectrum: Vec<f64>,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let deviation = matrix.hermiticity_deviation();
        if deviation > STATE_TOL {
            return Err(Error::InvalidState {
                invariant: StateInvariant::Hermitian,
                violation: deviation,
            });
        }
        let trace_err = (matrix.trace() - Complex64::new(1.0, 0.0)).norm();
        if trace_err > STATE_TOL {
            return Err(Error::InvalidState {
                invariant: StateInvariant::UnitTrace,
                violation: trace_err,
            });
        }
        let spectrum = hermitian_eigen(&matrix)?.eigenvalues;
        let min = spectrum.last().copied().unwrap_or(0.0);
        if min < -STATE_TOL {
            return Err(Error::InvalidState {
                invariant: StateInvariant::PositiveSemidefinite,
                violation: -min,
            });
        }
        Ok(Self { matrix, spectrum })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    /// Eigenvalues sorted descending, with numerical negatives in `[-1e-9, 0)` clamped to 0.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.spectrum.iter().map(|&l| l.clamp(0.0, 1.0)).collect()
    }

    pub fn is_pure(&self) -> bool {
        (self.spectrum[0] - 1.0).abs() <= STATE_TOL
    }
}

/// Density matrix on a `dim_a × dim_b` product space.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartiteState {
    dim_a: usize,
    dim_b: usize,
    rho: DensityMatrix,
}

fn check_subsystem_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::EmptyMatrix);
    }
    if dim > MAX_SUBSYSTEM_DIM {
        return Err(Error::DimensionTooLarge {
            dim,
            max: MAX_SUBSYSTEM_DIM,
        });
    }
    Ok(())
}

impl BipartiteState {
    pub fn new(dim_a: usize, dim_b: usize, matrix: ComplexMatrix) -> Result<Self> {
        check_subsystem_dim(dim_a)?;
        check_subsystem_dim(dim_b)?;
        if matrix.dim() != dim_a * dim_b {
            return Err(Error::DimensionMismatch {
                expected: dim_a * dim_b,
                found: matrix.dim(),
            });
        }
        Ok(Self {
            dim_a,
            dim_b,
            rho: DensityMatrix::new(matrix)?,
        })
    }

    pub fn from_density(dim_a: usize, dim_b: usize, rho: DensityMatrix) -> Result<Self> {
        check_subsystem_dim(dim_a)?;
        check_subsystem_dim(dim_b)?;
        if rho.dim() != dim_a * dim_b {
            return Err(Error::DimensionMismatch {
                expected: dim_a * dim_b,
                found: rho.dim(),
            });
        }
        Ok(Self { dim_a, dim_b, rho })
    }

    /// `ρ^A ⊗ ρ^B`.
    pub fn product(rho_a: &DensityMatrix, rho_b: &DensityMatrix) -> Result<Self> {
        let m = tensor_product(rho_a.matrix(), rho_b.matrix());
        Self::new(rho_a.dim(), rho_b.dim(), m)
    }

    /// Pure state `|ψ⟩⟨ψ|` from an (unnormalised) amplitude vector.
    pub fn pure(dim_a: usize, dim_b: usize, amplitudes: &[Complex64]) -> Result<Self> {
        if amplitudes.len() != dim_a * dim_b {
            return Err(Error::DimensionMismatch {
                expected: dim_a * dim_b,
                found: amplitudes.len(),
            });
        }
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let psi: Vec<Complex64> = amplitudes.iter().map(|z| z / norm).collect();
        Self::new(dim_a, dim_b, ComplexMatrix::outer(&psi))
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dim(&self, side: Subsystem) -> usize {
        match side {
            Subsystem::A => self.dim_a,
            Subsystem::B => self.dim_b,
        }
    }

    pub fn rho(&self) -> &DensityMatrix {
        &self.rho
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        self.rho.matrix()
    }

    pub fn flat_index(&self, i: usize, j: usize) -> usize {
        i * self.dim_b + j
    }

    /// Reduced state of the kept subsystem.
    pub fn partial_trace(&self, keep: Subsystem) -> DensityMatrix {
        let m = self.rho.matrix();
        let (da, db) = (self.dim_a, self.dim_b);
        let reduced = match keep {
            Subsystem::A => ComplexMatrix::from_fn(da, |i, k| {
                (0..db).map(|j| m[(i * db + j, k * db + j)]).sum()
            }),
            Subsystem::B => ComplexMatrix::from_fn(db, |j, l| {
                (0..da).map(|i| m[(i * db + j, i * db + l)]).sum()
            }),
        };
        // Partial trace of a valid state is a valid state.
        DensityMatrix::new(reduced).expect("partial trace preserves density-matrix invariants")
    }
}

/// One term `weight·|ij⟩⟨ij|` of a classical mixture.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixtureTerm {
    #[serde(rename = "w")]
    pub weight: f64,
    pub i: usize,
    pub j: usize,
}

impl MixtureTerm {
    pub fn new(weight: f64, i: usize, j: usize) -> Self {
        Self { weight, i, j }
    }
}

/// Diagonal state `Σ w·|ij⟩⟨ij|` over distinct product basis states.
pub fn make_classical_mixture(
    dim_a: usize,
    dim_b: usize,
    terms: &[MixtureTerm],
) -> Result<BipartiteState> {
    check_subsystem_dim(dim_a)?;
    check_subsystem_dim(dim_b)?;
    let mut seen = HashSet::new();
    let mut diag = vec![0.0; dim_a * dim_b];
    for (term, t) in terms.iter().enumerate() {
        if !(t.weight > 0.0) || !t.weight.is_finite() {
            return Err(Error::NonPositiveWeight {
                term,
                weight: t.weight,
            });
        }
        if t.i >= dim_a || t.j >= dim_b {
            return Err(Error::IndexOutOfRange {
                term,
                i: t.i,
                j: t.j,
                dim_a,
                dim_b,
            });
        }
        if !seen.insert((t.i, t.j)) {
            return Err(Error::DuplicateTerm { i: t.i, j: t.j });
        }
        diag[t.i * dim_b + t.j] = t.weight;
    }
    let sum: f64 = terms.iter().map(|t| t.weight).sum();
    if (sum - 1.0).abs() > STATE_TOL {
        return Err(Error::WeightSum { sum });
    }
    BipartiteState::new(dim_a, dim_b, ComplexMatrix::from_real_diagonal(&diag))
}
