//! Entropies (in bits) and the correlation measures built from them.

use crate::error::{Error, Result};
use crate::measurement::{conditional_table, ConditionalDirection, JointDistribution};
use crate::state::{BipartiteState, DensityMatrix, Subsystem};
use crate::{PROB_EPS, STATE_TOL};

/// `−Σ p log₂ p` skipping entries ≤ 1e-12 (0·log 0 = 0). No validation.
pub(crate) fn entropy_bits<'a>(p: impl IntoIterator<Item = &'a f64>) -> f64 {
    -p.into_iter()
        .filter(|&&x| x > PROB_EPS)
        .map(|&x| x * x.log2())
        .sum::<f64>()
}

/// Shannon entropy of a probability vector.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    if p.is_empty() {
        return Err(Error::NotADistribution("empty vector".into()));
    }
    if let Some((k, x)) = p
        .iter()
        .enumerate()
        .find(|(_, x)| !x.is_finite() || **x < -PROB_EPS)
    {
        return Err(Error::NotADistribution(format!("entry {k} = {x}")));
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > STATE_TOL {
        return Err(Error::NotADistribution(format!("entries sum to {sum}")));
    }
    Ok(entropy_bits(p).max(0.0))
}

/// `H(B|A)` or `H(A|B)`: conditioning-probability-weighted entropy of the
/// defined conditional rows. Undefined rows carry zero weight.
pub fn conditional_entropy(j: &JointDistribution, direction: ConditionalDirection) -> f64 {
    let weights = match direction {
        ConditionalDirection::BGivenA => j.p_a(),
        ConditionalDirection::AGivenB => j.p_b(),
    };
    let table = conditional_table(j, direction);
    table
        .rows
        .iter()
        .zip(weights)
        .filter_map(|(row, &w)| row.as_ref().map(|r| w * entropy_bits(r)))
        .sum::<f64>()
        .max(0.0)
}

/// `I(A:B) = Σ p_ij log₂(p_ij / (p_i p_j))` over entries with `p_ij > 1e-12`.
pub fn classical_mutual_information(j: &JointDistribution) -> f64 {
    let mut acc = 0.0;
    for (i, row) in j.table().iter().enumerate() {
        for (k, &p) in row.iter().enumerate() {
            if p > PROB_EPS {
                acc += p * (p / (j.p_a()[i] * j.p_b()[k])).log2();
            }
        }
    }
    acc
}

/// `S(ρ) = −Σ λ log₂ λ` over the clamped spectrum.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> f64 {
    entropy_bits(&rho.eigenvalues()).max(0.0)
}

/// `I(ρ) = S(ρ^A) + S(ρ^B) − S(ρ^{AB})`.
pub fn quantum_mutual_information(s: &BipartiteState) -> f64 {
    von_neumann_entropy(&s.partial_trace(Subsystem::A))
        + von_neumann_entropy(&s.partial_trace(Subsystem::B))
        - von_neumann_entropy(s.rho())
}

fn ratio(numerator: f64, denominator: f64) -> Option<f64> {
    (denominator > PROB_EPS).then(|| numerator / denominator)
}

/// `I(A:B) / H(A)` for identically distributed marginals.
///
/// Returns [`Error::MarginalsNotIdentical`] when `p^A` and `p^B` differ
/// (including in length) and `Ok(None)` when `H(A)` vanishes.
pub fn cover_thomas_measure(j: &JointDistribution) -> Result<Option<f64>> {
    if !marginals_identical(j) {
        return Err(Error::MarginalsNotIdentical);
    }
    Ok(ratio(
        classical_mutual_information(j),
        entropy_bits(j.p_a()),
    ))
}

pub(crate) fn marginals_identical(j: &JointDistribution) -> bool {
    j.n_a() == j.n_b()
        && j.p_a()
            .iter()
            .zip(j.p_b())
            .all(|(a, b)| (a - b).abs() <= STATE_TOL)
}

/// `I(A:B) / min(H(A), H(B))`, equivalently the larger directional ratio.
pub fn correlation_measure(j: &JointDistribution) -> Option<f64> {
    let h = entropy_bits(j.p_a()).min(entropy_bits(j.p_b()));
    ratio(classical_mutual_information(j), h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatioDirection {
    /// `I(A:B) / H(A)`: 1 exactly when `A = f(B)`.
    OverHA,
    /// `I(A:B) / H(B)`: 1 exactly when `B = f(A)`.
    OverHB,
}

pub fn directional_ratio(j: &JointDistribution, direction: RatioDirection) -> Option<f64> {
    let h = match direction {
        RatioDirection::OverHA => entropy_bits(j.p_a()),
        RatioDirection::OverHB => entropy_bits(j.p_b()),
    };
    ratio(classical_mutual_information(j), h)
}

/// `T(ρ) = I(ρ) / min(S(ρ^A), S(ρ^B))`.
///
/// Bounded by 1 for classically correlated states; entangled states can
/// exceed it (a Bell pair gives 2).
pub fn total_correlation(s: &BipartiteState) -> Option<f64> {
    let s_a = von_neumann_entropy(&s.partial_trace(Subsystem::A));
    let s_b = von_neumann_entropy(&s.partial_trace(Subsystem::B));
    ratio(quantum_mutual_information(s), s_a.min(s_b))
}
