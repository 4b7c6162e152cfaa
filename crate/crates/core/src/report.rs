//! Aggregated correlation report for one state and one pair of local bases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::info::{
    classical_mutual_information, conditional_entropy, correlation_measure, cover_thomas_measure,
    directional_ratio, entropy_bits, marginals_identical, quantum_mutual_information,
    total_correlation, von_neumann_entropy, RatioDirection,
};
use crate::measurement::{
    conditional_table, is_functional, joint_distribution, ConditionalDirection, ConditionalTable,
    FunctionalDirection, MeasurementOrder, ProjectiveBasis,
};
use crate::state::{BipartiteState, Subsystem};

/// Tolerance of the `I(A:B) = H(B) − H(B|A) = H(A) − H(A|B)` cross-check.
pub const CROSS_CHECK_TOL: f64 = 1e-9;

/// Everything computed for one state. Entropies and informations are in
/// bits; `None` marks a ratio whose denominator entropy vanishes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationReport {
    pub dims: (usize, usize),
    pub order: MeasurementOrder,
    pub labels_a: Option<Vec<f64>>,
    pub labels_b: Option<Vec<f64>>,
    pub p_a: Vec<f64>,
    pub p_b: Vec<f64>,
    pub p_joint: Vec<Vec<f64>>,
    pub b_given_a: ConditionalTable,
    pub a_given_b: ConditionalTable,
    pub h_a: f64,
    pub h_b: f64,
    pub h_b_given_a: f64,
    pub h_a_given_b: f64,
    pub mi_classical: f64,
    pub s_a: f64,
    pub s_b: f64,
    pub s_ab: f64,
    pub mi_quantum: f64,
    /// `I(A:B) / H(A)`.
    pub ratio_a: Option<f64>,
    /// `I(A:B) / H(B)`.
    pub ratio_b: Option<f64>,
    pub marginals_identical: bool,
    /// `I(A:B) / H(A)` when the marginals coincide; `None` otherwise.
    pub cover_thomas: Option<f64>,
    /// `I(A:B) / min(H(A), H(B))`.
    pub c_measure: Option<f64>,
    /// `I(ρ) / min(S(ρ^A), S(ρ^B))`.
    pub t_measure: Option<f64>,
    /// `t_measure > 1 + 1e-9`: outside the classically correlated regime.
    pub non_classical_regime: bool,
    pub functional_b_of_a: bool,
    pub functional_a_of_b: bool,
}

pub fn build_report(
    s: &BipartiteState,
    basis_a: &ProjectiveBasis,
    basis_b: &ProjectiveBasis,
) -> Result<CorrelationReport> {
    build_report_with_order(s, basis_a, basis_b, MeasurementOrder::AFirst)
}

pub fn build_report_with_order(
    s: &BipartiteState,
    basis_a: &ProjectiveBasis,
    basis_b: &ProjectiveBasis,
    order: MeasurementOrder,
) -> Result<CorrelationReport> {
    let joint = joint_distribution(s, basis_a, basis_b, order)?;

    let h_a = entropy_bits(joint.p_a()).max(0.0);
    let h_b = entropy_bits(joint.p_b()).max(0.0);
    let h_b_given_a = conditional_entropy(&joint, ConditionalDirection::BGivenA);
    let h_a_given_b = conditional_entropy(&joint, ConditionalDirection::AGivenB);
    let mi_classical = classical_mutual_information(&joint);

    let gain_b = h_b - h_b_given_a;
    let gain_a = h_a - h_a_given_b;
    if (mi_classical - gain_b).abs() > CROSS_CHECK_TOL
        || (mi_classical - gain_a).abs() > CROSS_CHECK_TOL
    {
        return Err(Error::CrossCheckFailure(format!(
            "I(A:B) = {mi_classical}, H(B) - H(B|A) = {gain_b}, H(A) - H(A|B) = {gain_a}"
        )));
    }

    let s_a = von_neumann_entropy(&s.partial_trace(Subsystem::A));
    let s_b = von_neumann_entropy(&s.partial_trace(Subsystem::B));
    let s_ab = von_neumann_entropy(s.rho());
    let mi_quantum = quantum_mutual_information(s);
    let t_measure = total_correlation(s);

    let identical = marginals_identical(&joint);
    let cover_thomas = if identical {
        cover_thomas_measure(&joint)?
    } else {
        None
    };

    Ok(CorrelationReport {
        dims: (s.dim_a(), s.dim_b()),
        order,
        labels_a: basis_a.labels().map(<[f64]>::to_vec),
        labels_b: basis_b.labels().map(<[f64]>::to_vec),
        b_given_a: conditional_table(&joint, ConditionalDirection::BGivenA),
        a_given_b: conditional_table(&joint, ConditionalDirection::AGivenB),
        functional_b_of_a: is_functional(&joint, FunctionalDirection::BOfA),
        functional_a_of_b: is_functional(&joint, FunctionalDirection::AOfB),
        ratio_a: directional_ratio(&joint, RatioDirection::OverHA),
        ratio_b: directional_ratio(&joint, RatioDirection::OverHB),
        c_measure: correlation_measure(&joint),
        p_a: joint.p_a().to_vec(),
        p_b: joint.p_b().to_vec(),
        p_joint: joint.table().to_vec(),
        h_a,
        h_b,
        h_b_given_a,
        h_a_given_b,
        mi_classical,
        s_a,
        s_b,
        s_ab,
        mi_quantum,
        marginals_identical: identical,
        cover_thomas,
        non_classical_regime: t_measure.is_some_and(|t| t > 1.0 + CROSS_CHECK_TOL),
        t_measure,
    })
}
