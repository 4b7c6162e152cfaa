//! Correlation measures for bipartite quantum states under local projective
//! measurements.
//!
//! The crate covers the full pipeline from a density matrix to a
//! [`CorrelationReport`]: reduced states and von Neumann entropies, the
//! classical outcome table produced by measuring each subsystem in a chosen
//! basis, conditional tables for both measurement orders, classical and
//! quantum mutual information, and the normalised measures
//!
//! * `I(A:B) / H(A)` and `I(A:B) / H(B)`,
//! * `C(A,B) = I(A:B) / min(H(A), H(B))`,
//! * `T(ρ) = I(ρ) / min(S(ρ^A), S(ρ^B))`.
//!
//! All entropies are in bits. Quantities that would divide by a zero entropy
//! are `None`.
//!
//! ```
//! use qcorr::{build_report, fixtures, ProjectiveBasis};
//!
//! let state = fixtures::qutrit_pair();
//! let basis = ProjectiveBasis::computational(3);
//! let report = build_report(&state, &basis, &basis).unwrap();
//! assert!((report.ratio_a.unwrap() - 1.0).abs() < 1e-9);
//! assert!(report.functional_a_of_b && !report.functional_b_of_a);
//! ```

pub mod eigen;
pub mod error;
pub mod fixtures;
pub mod info;
pub mod matrix;
pub mod measurement;
pub mod report;
pub mod state;

pub use num_complex::Complex64;

pub use eigen::{hermitian_eigen, EigenDecomposition};
pub use error::{Error, Result, StateInvariant};
pub use info::{
    classical_mutual_information, conditional_entropy, correlation_measure, cover_thomas_measure,
    directional_ratio, quantum_mutual_information, shannon_entropy, total_correlation,
    von_neumann_entropy, RatioDirection,
};
pub use matrix::{tensor_product, ComplexMatrix};
pub use measurement::{
    conditional_table, is_functional, joint_distribution, joint_one_shot, outcome_marginals,
    post_measurement_state, ConditionalDirection, ConditionalTable, FunctionalDirection,
    JointDistribution, MeasurementOrder, ProjectiveBasis,
};
pub use report::{build_report, build_report_with_order, CorrelationReport};
pub use state::{make_classical_mixture, BipartiteState, DensityMatrix, MixtureTerm, Subsystem};

/// Absolute tolerance for Hermiticity, unit trace and PSD checks on states.
pub const STATE_TOL: f64 = 1e-9;
/// Hermiticity tolerance accepted by the eigensolver.
pub const HERMITIAN_TOL: f64 = 1e-9;
/// Probabilities at or below this are treated as zero.
pub const PROB_EPS: f64 = 1e-12;
/// Largest supported subsystem dimension.
pub const MAX_SUBSYSTEM_DIM: usize = 16;
