//! Kepler command: integrate with both methods, stream one as CSV and
//! summarize the energy drift of each.

use std::fmt;
use std::io::{self, Write};

use stargeo::mechanics::kepler::{kepler_integrate, max_energy_drift, write_csv, Method, OrbitParams};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KeplerError {
    #[error("{0}")]
    Params(#[from] stargeo::Error),
    #[error("writing CSV: {0}")]
    Io(#[from] io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DriftSummary {
    pub method: Method,
    pub final_drift: f64,
    pub max_drift: f64,
}

impl fmt::Display for DriftSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: final E_rel_drift {:.3e}, max {:.3e}",
            self.method, self.final_drift, self.max_drift
        )
    }
}

/// Writes the CSV of `method` and returns drift summaries for KS and Newton.
pub fn run<W: Write>(params: &OrbitParams, method: Method, every: usize, out: &mut W) -> Result<Vec<DriftSummary>, KeplerError> {
    params.validate()?;
    let mut summaries = Vec::with_capacity(2);
    for m in [Method::Ks, Method::Newton] {
        let states = kepler_integrate(m, params)?;
        if m == method {
            write_csv(out, &states, every)?;
        }
        summaries.push(DriftSummary {
            method: m,
            final_drift: states.last().map_or(0.0, |s| s.energy_drift),
            max_drift: max_energy_drift(&states),
        });
    }
    Ok(summaries)
}

pub fn summary_line(params: &OrbitParams, summaries: &[DriftSummary]) -> String {
    let parts: Vec<String> = summaries.iter().map(ToString::to_string).collect();
    format!(
        "kepler e={} a={} orbits={} steps/orbit={} | {}",
        params.eccentricity,
        params.semi_major_axis,
        params.orbits,
        params.steps_per_orbit,
        parts.join(" | ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_summary() {
        let p = OrbitParams::new(0.3, 1.0, 1, 200).unwrap();
        let mut buf = Vec::new();
        let s = run(&p, Method::Newton, 50, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "s,t,x1,x2,x3,v1,v2,v3,E_rel_drift");
        assert_eq!(lines.len(), 1 + 5);
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|d| d.max_drift < 1e-6));
        assert!(summary_line(&p, &s).contains("ks: final E_rel_drift"));
    }

    #[test]
    fn invalid_params() {
        let p = OrbitParams {
            eccentricity: 1.5,
            semi_major_axis: 1.0,
            orbits: 1,
            steps_per_orbit: 10,
        };
        assert!(matches!(run(&p, Method::Ks, 1, &mut Vec::new()), Err(KeplerError::Params(_))));
    }
}
