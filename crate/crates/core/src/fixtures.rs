//! The two classically correlated reference states and a Bell state.

use num_complex::Complex64;

use crate::error::Result;
use crate::state::{make_classical_mixture, BipartiteState, MixtureTerm};

/// Terms of `α|00⟩⟨00| + (1−α)|11⟩⟨11|`.
pub fn qubit_terms(alpha: f64) -> Vec<MixtureTerm> {
    vec![
        MixtureTerm::new(alpha, 0, 0),
        MixtureTerm::new(1.0 - alpha, 1, 1),
    ]
}

/// Two qubits in `α|00⟩⟨00| + (1−α)|11⟩⟨11|`; `alpha` must lie in `(0, 1)`.
pub fn qubit_pair(alpha: f64) -> Result<BipartiteState> {
    make_classical_mixture(2, 2, &qubit_terms(alpha))
}

/// Terms of `⅓|11⟩⟨11| + ⅓|20⟩⟨20| + ⅓|22⟩⟨22|`.
pub fn qutrit_terms() -> Vec<MixtureTerm> {
    let third = 1.0 / 3.0;
    vec![
        MixtureTerm::new(third, 1, 1),
        MixtureTerm::new(third, 2, 0),
        MixtureTerm::new(third, 2, 2),
    ]
}

/// Two qutrits whose correlations depend on which party measures first.
pub fn qutrit_pair() -> BipartiteState {
    make_classical_mixture(3, 3, &qutrit_terms()).expect("qutrit fixture is a valid mixture")
}

/// `(|00⟩ + |11⟩)/√2`.
pub fn bell_state() -> BipartiteState {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    BipartiteState::pure(2, 2, &[one, zero, zero, one]).expect("Bell state is valid")
}
