//! Classical mechanics: phase-space geometric algebra, the
//! Kustaanheimo-Stiefel transformation and a regularized Kepler integrator.

pub mod kepler;
pub mod ks;
pub mod phase;

pub use kepler::{kepler_integrate, Method, OrbitParams, OrbitState};
pub use ks::{ks_map, ks_position, regularize_hamiltonian, KsMap, KsPosition, KsRegularization, KsValue};
pub use phase::{hamilton_field, oscillator_orbit, poisson_ga, symplectic_bivector, PhaseSpace};

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::scalars::Symbol;

    #[test]
    fn h4_flow_conserves_h4() {
        let reg = regularize_hamiltonian().unwrap();
        let u = (1..=4).map(|i| Symbol::new(&format!("u{i}"))).collect();
        let w = (1..=4).map(|i| Symbol::new(&format!("w{i}"))).collect();
        let ps = PhaseSpace::with_coordinates(u, w);
        let params: HashMap<Symbol, f64> = [("m", 1.0), ("k", 1.0), ("Eabs", 0.5)]
            .into_iter()
            .map(|(n, v)| (Symbol::new(n), v))
            .collect();
        // ω = 1/2, period 4π
        let dt = 4.0 * std::f64::consts::PI / 1000.0;
        let start = [1.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.3, 0.2];
        let drift = ps.flow_energy_drift(&reg.h4, &params, &start, dt, 2000).unwrap();
        assert!(drift < 1e-9, "drift {drift}");
    }
}
