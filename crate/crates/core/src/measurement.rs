//! Local projective measurements on bipartite states.
//!
//! Outcome `i` of a basis is the rank-one projector onto its `i`-th vector.
//! Labels (the observable's eigenvalues) are carried for reporting and never
//! enter a probability.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{tensor_product, ComplexMatrix};
use crate::state::{BipartiteState, Subsystem};
use crate::{PROB_EPS, STATE_TOL};

/// Orthonormal measurement basis for one subsystem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveBasis {
    vectors: Vec<Vec<Complex64>>,
    labels: Option<Vec<f64>>,
}

impl ProjectiveBasis {
    /// The computational basis `|0⟩, …, |dim−1⟩`.
    pub fn computational(dim: usize) -> Self {
        let vectors = (0..dim)
            .map(|k| {
                let mut v = vec![Complex64::new(0.0, 0.0); dim];
                v[k] = Complex64::new(1.0, 0.0);
                v
            })
            .collect();
        Self {
            vectors,
            labels: None,
        }
    }

    pub fn from_vectors(vectors: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = vectors.len();
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != dim) {
            return Err(Error::ShapeMismatch {
                expected: dim,
                found: v.len(),
            });
        }
        for i in 0..dim {
            for j in i..dim {
                let inner: Complex64 = vectors[i]
                    .iter()
                    .zip(&vectors[j])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let target = if i == j { 1.0 } else { 0.0 };
                let deviation = (inner - target).norm();
                if !(deviation <= STATE_TOL) {
                    return Err(Error::NotOrthonormal { i, j, deviation });
                }
            }
        }
        Ok(Self {
            vectors,
            labels: None,
        })
    }

    /// Basis given by the columns of a unitary matrix.
    pub fn from_unitary(u: &ComplexMatrix) -> Result<Self> {
        Self::from_vectors((0..u.dim()).map(|j| u.column(j)).collect())
    }

    pub fn with_labels(mut self, labels: Vec<f64>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        for (k, a) in labels.iter().enumerate() {
            if labels[k + 1..].contains(a) {
                return Err(Error::DuplicateLabels);
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vector(&self, outcome: usize) -> &[Complex64] {
        &self.vectors[outcome]
    }

    pub fn labels(&self) -> Option<&[f64]> {
        self.labels.as_deref()
    }

    pub fn projector(&self, outcome: usize) -> ComplexMatrix {
        ComplexMatrix::outer(&self.vectors[outcome])
    }

    /// `P_outcome ⊗ I` or `I ⊗ P_outcome` on the joint space.
    fn embedded_projector(
        &self,
        outcome: usize,
        side: Subsystem,
        s: &BipartiteState,
    ) -> ComplexMatrix {
        let p = self.projector(outcome);
        match side {
            Subsystem::A => tensor_product(&p, &ComplexMatrix::identity(s.dim_b())),
            Subsystem::B => tensor_product(&ComplexMatrix::identity(s.dim_a()), &p),
        }
    }
}

/// Which party measures first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeasurementOrder {
    #[default]
    AFirst,
    BFirst,
}

fn check_dims(
    s: &BipartiteState,
    basis_a: &ProjectiveBasis,
    basis_b: &ProjectiveBasis,
) -> Result<()> {
    if basis_a.dim() != s.dim_a() {
        return Err(Error::DimensionMismatch {
            expected: s.dim_a(),
            found: basis_a.dim(),
        });
    }
    if basis_b.dim() != s.dim_b() {
        return Err(Error::DimensionMismatch {
            expected: s.dim_b(),
            found: basis_b.dim(),
        });
    }
    Ok(())
}

/// `(p^A, p^B)` with `p^A_i = Tr(P_i ρ^A)` and `p^B_j = Tr(Q_j ρ^B)`.
pub fn outcome_marginals(
    s: &BipartiteState,
    basis_a: &ProjectiveBasis,
    basis_b: &ProjectiveBasis,
) -> Result<(Vec<f64>, Vec<f64>)> {
    check_dims(s, basis_a, basis_b)?;
    let probs = |side: Subsystem, basis: &ProjectiveBasis| -> Vec<f64> {
        let reduced = s.partial_trace(side);
        (0..basis.dim())
            .map(|k| reduced.matrix().expectation(basis.vector(k)).re.max(0.0))
            .collect()
    };
    Ok((probs(Subsystem::A, basis_a), probs(Subsystem::B, basis_b)))
}

/// Unnormalised Lüders projection `(P ⊗ I) ρ (P ⊗ I)` (or the B-side analogue).
fn project(
    s: &BipartiteState,
    side: Subsystem,
    basis: &ProjectiveBasis,
    outcome: usize,
) -> ComplexMatrix {
    let p = basis.embedded_projector(outcome, side, s);
    &(&p * s.matrix()) * &p
}

/// State after observing `outcome` on `side`, renormalised by its probability.
pub fn post_measurement_state(
    s: &BipartiteState,
    side: Subsystem,
    basis: &ProjectiveBasis,
    outcome: usize,
) -> Result<BipartiteState> {
    if basis.dim() != s.dim(side) {
        return Err(Error::DimensionMismatch {
            expected: s.dim(side),
            found: basis.dim(),
        });
    }
    if outcome >= basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: outcome + 1,
        });
    }
    let projected = project(s, side, basis, outcome);
    let probability = projected.trace().re;
    if probability <= PROB_EPS {
        return Err(Error::ZeroProbabilityOutcome {
            side,
            outcome,
            probability,
        });
    }
    BipartiteState::new(s.dim_a(), s.dim_b(), projected.scale(1.0 / probability))
}

/// `Tr_side[(P ⊗ I) ρ (P ⊗ I)]` for `P = |v⟩⟨v|` on `side`: the other
/// subsystem's state after `side` observed `v`, scaled by that outcome's probability.
fn collapsed_partner_state(s: &BipartiteState, side: Subsystem, v: &[Complex64]) -> ComplexMatrix {
    let m = s.matrix();
    let (da, db) = (s.dim_a(), s.dim_b());
    match side {
        Subsystem::A => ComplexMatrix::from_fn(db, |j, l| {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..da {
                for k in 0..da {
                    acc += v[i].conj() * m[(i * db + j, k * db + l)] * v[k];
                }
            }
            acc
        }),
        Subsystem::B => ComplexMatrix::from_fn(da, |i, k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..db {
                for l in 0..db {
                    acc += v[j].conj() * m[(i * db + j, k * db + l)] * v[l];
                }
            }
            acc
        }),
    }
}

/// Classical table `p^{AB}` with marginals `p^A` (row sums) and `p^B` (column sums).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointDistribution {
    p_joint: Vec<Vec<f64>>,
    p_a: Vec<f64>,
    p_b: Vec<f64>,
}

impl JointDistribution {
    /// Validates a table: entries ≥ −1e-12 (then clamped to 0) summing to 1 within 1e-9.
    pub fn new(table: Vec<Vec<f64>>) -> Result<Self> {
        let n_a = table.len();
        if n_a == 0 {
            return Err(Error::NotADistribution("empty table".into()));
        }
        let n_b = table[0].len();
        if n_b == 0 || table.iter().any(|r| r.len() != n_b) {
            return Err(Error::NotADistribution("ragged or empty rows".into()));
        }
        let mut p_joint = table;
        for (i, row) in p_joint.iter_mut().enumerate() {
            for (j, p) in row.iter_mut().enumerate() {
                if !p.is_finite() || *p < -PROB_EPS {
                    return Err(Error::NotADistribution(format!("entry ({i}, {j}) = {p}")));
                }
                *p = p.max(0.0);
            }
        }
        let total: f64 = p_joint.iter().flatten().sum();
        if (total - 1.0).abs() > STATE_TOL {
            return Err(Error::NotADistribution(format!("entries sum to {total}")));
        }
        let p_a = p_joint.iter().map(|r| r.iter().sum()).collect();
        let p_b = (0..n_b)
            .map(|j| p_joint.iter().map(|r| r[j]).sum())
            .collect();
        Ok(Self { p_joint, p_a, p_b })
    }

    pub fn n_a(&self) -> usize {
        self.p_a.len()
    }

    pub fn n_b(&self) -> usize {
        self.p_b.len()
    }

    pub fn p(&self, i: usize, j: usize) -> f64 {
        self.p_joint[i][j]
    }

    pub fn table(&self) -> &[Vec<f64>] {
        &self.p_joint
    }

    pub fn p_a(&self) -> &[f64] {
        &self.p_a
    }

    pub fn p_b(&self) -> &[f64] {
        &self.p_b
    }

    /// Same distribution with the roles of A and B exchanged.
    pub fn transpose(&self) -> Self {
        let table = (0..self.n_b())
            .map(|j| self.p_joint.iter().map(|r| r[j]).collect())
            .collect();
        Self {
            p_joint: table,
            p_a: self.p_b.clone(),
            p_b: self.p_a.clone(),
        }
    }
}

/// `p^{AB}_{ij} = Tr[(P_i ⊗ Q_j) ρ]` evaluated in one shot.
pub fn joint_one_shot(
    s: &BipartiteState,
    basis_a: &ProjectiveBasis,
    basis_b: &ProjectiveBasis,
) -> Result<JointDistribution> {
    check_dims(s, basis_a, basis_b)?;
    let table = (0..basis_a.dim())
        .map(|i| {
            (0..basis_b.dim())
                .map(|j| {
                    let v: Vec<Complex64> = basis_a
                        .vector(i)
                        .iter()
                        .flat_map(|a| basis_b.vector(j).iter().map(move |b| a * b))
                        .collect();
                    s.matrix().expectation(&v).re
                })
                .collect()
        })
        .collect();
    JointDistribution::new(table)
}

/// Joint outcome distribution from the two-step protocol: the first party
/// measures, the state collapses by the Lüders rule, then the second party
/// measures the collapsed state. Both orders yield the same table because
/// local projectors on different subsystems commute.
pub fn joint_distribution(
    s: &BipartiteState,
    basis_a: &ProjectiveBasis,
    basis_b: &ProjectiveBasis,
    order: MeasurementOrder,
) -> Result<JointDistribution> {
    check_dims(s, basis_a, basis_b)?;
    let (first, first_basis, second_basis) = match order {
        MeasurementOrder::AFirst => (Subsystem::A, basis_a, basis_b),
        MeasurementOrder::BFirst => (Subsystem::B, basis_b, basis_a),
    };
    let mut table = vec![vec![0.0; basis_b.dim()]; basis_a.dim()];
    for k in 0..first_basis.dim() {
        // Second party's unnormalised reduced state after the first party saw k.
        let collapsed = collapsed_partner_state(s, first, first_basis.vector(k));
        let p_k = collapsed.trace().re;
        if p_k <= PROB_EPS {
            continue;
        }
        for l in 0..second_basis.dim() {
            // p_k · Tr[Q_l ρ_k] where ρ_k = collapsed / p_k.
            let p = collapsed.expectation(second_basis.vector(l)).re;
            match order {
                MeasurementOrder::AFirst => table[k][l] = p,
                MeasurementOrder::BFirst => table[l][k] = p,
            }
        }
    }
    JointDistribution::new(table)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionalDirection {
    /// `p^{B|A}`: rows indexed by A's outcome.
    BGivenA,
    /// `p^{A|B}`: rows indexed by B's outcome.
    AGivenB,
}

/// Conditional distributions, one row per conditioning outcome. A row is
/// `None` when its conditioning outcome has probability ≤ 1e-12.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionalTable {
    pub direction: ConditionalDirection,
    pub rows: Vec<Option<Vec<f64>>>,
}

impl ConditionalTable {
    pub fn row(&self, conditioning: usize) -> Option<&[f64]> {
        self.rows[conditioning].as_deref()
    }
}

pub fn conditional_table(
    j: &JointDistribution,
    direction: ConditionalDirection,
) -> ConditionalTable {
    let oriented = match direction {
        ConditionalDirection::BGivenA => j.clone(),
        ConditionalDirection::AGivenB => j.transpose(),
    };
    let rows = oriented
        .table()
        .iter()
        .zip(oriented.p_a())
        .map(|(row, &marginal)| {
            (marginal > PROB_EPS).then(|| row.iter().map(|p| p / marginal).collect())
        })
        .collect();
    ConditionalTable { direction, rows }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionalDirection {
    /// `B = f(A)`.
    BOfA,
    /// `A = f(B)`.
    AOfB,
}

/// A conditional row counts as deterministic when its largest entry is at least this.
pub const DETERMINISTIC_THRESHOLD: f64 = 1.0 - 1e-9;

/// True when every defined conditional row puts (numerically) all its mass on one outcome.
pub fn is_functional(j: &JointDistribution, direction: FunctionalDirection) -> bool {
    let cond = match direction {
        FunctionalDirection::BOfA => ConditionalDirection::BGivenA,
        FunctionalDirection::AOfB => ConditionalDirection::AGivenB,
    };
    conditional_table(j, cond).rows.iter().flatten().all(|row| {
        row.iter()
            .filter(|&&p| p >= DETERMINISTIC_THRESHOLD)
            .count()
            == 1
    })
}
