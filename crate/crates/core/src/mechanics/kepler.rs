//! Fixed-step RK4 integration of the Kepler problem, directly in physical
//! time and through the KS oscillator in fictitious time. Units: `m = k = 1`.

use std::f64::consts::PI;
use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use super::ks::{ks_matrix, ks_position_matrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Spinor oscillator `d²u/ds² = (E/2)u` with `dt/ds = |u|²`.
    Ks,
    /// `r̈ = -r/|r|³`.
    Newton,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ks" => Ok(Method::Ks),
            "newton" => Ok(Method::Newton),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Ks => "ks",
            Method::Newton => "newton",
        })
    }
}

/// Orbit shape and step budget. The orbit starts at apoapsis on the first
/// axis, moving along the second.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitParams {
    pub eccentricity: f64,
    pub semi_major_axis: f64,
    pub orbits: u32,
    pub steps_per_orbit: u32,
}

impl OrbitParams {
    pub fn new(eccentricity: f64, semi_major_axis: f64, orbits: u32, steps_per_orbit: u32) -> Result<Self> {
        let p = Self {
            eccentricity,
            semi_major_axis,
            orbits,
            steps_per_orbit,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eccentricity >= 0.0 && self.eccentricity < 1.0) {
            return Err(Error::InvalidOrbitParams(format!(
                "eccentricity must lie in [0, 1), got {}",
                self.eccentricity
            )));
        }
        if !(self.semi_major_axis > 0.0 && self.semi_major_axis.is_finite()) {
            return Err(Error::InvalidOrbitParams(format!(
                "semi-major axis must be positive, got {}",
                self.semi_major_axis
            )));
        }
        if self.steps_per_orbit < 1 {
            return Err(Error::InvalidOrbitParams("steps per orbit must be at least 1".into()));
        }
        Ok(())
    }

    /// `E = -1/2a`.
    pub fn energy(&self) -> f64 {
        -0.5 / self.semi_major_axis
    }

    /// `T = 2π a^{3/2}`.
    pub fn period(&self) -> f64 {
        2.0 * PI * self.semi_major_axis.powf(1.5)
    }

    pub fn apoapsis(&self) -> f64 {
        self.semi_major_axis * (1.0 + self.eccentricity)
    }

    /// Speed at apoapsis from the vis-viva relation.
    pub fn apoapsis_speed(&self) -> f64 {
        ((1.0 - self.eccentricity) / self.apoapsis()).sqrt()
    }

    fn total_steps(&self) -> usize {
        self.orbits as usize * self.steps_per_orbit as usize
    }
}

/// One sample of a trajectory.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrbitState {
    /// Fictitious time; equals `t` for the Newton integrator.
    pub s: f64,
    pub t: f64,
    pub position: [f64; 3],
    pub velocity: [f64; 3],
    pub energy: f64,
    /// `(E - E₀)/|E₀|`.
    pub energy_drift: f64,
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn rk4<const N: usize>(y: &[f64; N], h: f64, f: impl Fn(&[f64; N]) -> [f64; N]) -> [f64; N] {
    let shift = |y: &[f64; N], k: &[f64; N], c: f64| -> [f64; N] { std::array::from_fn(|i| y[i] + c * k[i]) };
    let k1 = f(y);
    let k2 = f(&shift(y, &k1, 0.5 * h));
    let k3 = f(&shift(y, &k2, 0.5 * h));
    let k4 = f(&shift(y, &k3, h));
    std::array::from_fn(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

fn newton_rate(y: &[f64; 6]) -> [f64; 6] {
    let r = norm(&y[..3]);
    let r3 = r * r * r;
    [y[3], y[4], y[5], -y[0] / r3, -y[1] / r3, -y[2] / r3]
}

fn newton_state(y: &[f64; 6], t: f64, e0: f64) -> OrbitState {
    let r = norm(&y[..3]);
    let v = [y[3], y[4], y[5]];
    let energy = 0.5 * norm(&v).powi(2) - 1.0 / r;
    OrbitState {
        s: t,
        t,
        position: [y[0], y[1], y[2]],
        velocity: v,
        energy,
        energy_drift: (energy - e0) / e0.abs(),
    }
}

fn newton_initial(p: &OrbitParams) -> [f64; 6] {
    [p.apoapsis(), 0.0, 0.0, 0.0, p.apoapsis_speed(), 0.0]
}

// State: u (4), u' = du/ds (4), t.
fn ks_rate(energy: f64) -> impl Fn(&[f64; 9]) -> [f64; 9] {
    move |y| {
        let r: f64 = y[..4].iter().map(|x| x * x).sum();
        let h = 0.5 * energy;
        [y[4], y[5], y[6], y[7], h * y[0], h * y[1], h * y[2], h * y[3], r]
    }
}

fn ks_state(y: &[f64; 9], s: f64, e0: f64) -> OrbitState {
    let u = [y[0], y[1], y[2], y[3]];
    let du = [y[4], y[5], y[6], y[7]];
    let r: f64 = u.iter().map(|x| x * x).sum();
    let x = ks_position_matrix(&u);
    let l = ks_matrix(&u);
    let v: [f64; 3] = std::array::from_fn(|i| 2.0 * (0..4).map(|j| l[i][j] * du[j]).sum::<f64>() / r);
    let energy = (2.0 * du.iter().map(|x| x * x).sum::<f64>() - 1.0) / r;
    OrbitState {
        s,
        t: y[8],
        position: [x[0], x[1], x[2]],
        velocity: v,
        energy,
        energy_drift: (energy - e0) / e0.abs(),
    }
}

fn ks_initial(p: &OrbitParams) -> [f64; 9] {
    let root = p.apoapsis().sqrt();
    [root, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5 * root * p.apoapsis_speed(), 0.0]
}

/// Fictitious-time span of one orbit, `π/ω` with `ω = (|E|/2)^{1/2}`.
pub fn ks_period(p: &OrbitParams) -> f64 {
    PI / (0.5 * p.energy().abs()).sqrt()
}

/// Integrates `orbits · steps_per_orbit` RK4 steps and returns every state,
/// starting with the initial one.
pub fn kepler_integrate(method: Method, params: &OrbitParams) -> Result<Vec<OrbitState>> {
    params.validate()?;
    let e0 = params.energy();
    let n = params.total_steps();
    let mut out = Vec::with_capacity(n + 1);
    match method {
        Method::Newton => {
            let h = params.period() / params.steps_per_orbit as f64;
            let mut y = newton_initial(params);
            out.push(newton_state(&y, 0.0, e0));
            for k in 1..=n {
                y = rk4(&y, h, newton_rate);
                out.push(newton_state(&y, k as f64 * h, e0));
            }
        }
        Method::Ks => {
            let h = ks_period(params) / params.steps_per_orbit as f64;
            let rate = ks_rate(e0);
            let mut y = ks_initial(params);
            out.push(ks_state(&y, 0.0, e0));
            for k in 1..=n {
                y = rk4(&y, h, &rate);
                out.push(ks_state(&y, k as f64 * h, e0));
            }
        }
    }
    Ok(out)
}

/// Newton positions at the requested (ascending) times, reached by full steps
/// of the standard size followed by one partial step.
pub fn newton_positions_at(params: &OrbitParams, times: &[f64]) -> Result<Vec<[f64; 3]>> {
    params.validate()?;
    let h = params.period() / params.steps_per_orbit as f64;
    let mut y = newton_initial(params);
    let mut t = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        while t + h <= target {
            y = rk4(&y, h, newton_rate);
            t += h;
        }
        let rest = target - t;
        let z = if rest > 0.0 { rk4(&y, rest, newton_rate) } else { y };
        out.push([z[0], z[1], z[2]]);
    }
    Ok(out)
}

/// Largest relative position difference between the KS and Newton
/// trajectories, compared at the times of the KS samples.
pub fn cross_method_deviation(params: &OrbitParams) -> Result<f64> {
    let ks = kepler_integrate(Method::Ks, params)?;
    let times: Vec<f64> = ks.iter().map(|s| s.t).collect();
    let newton = newton_positions_at(params, &times)?;
    Ok(ks
        .iter()
        .zip(&newton)
        .map(|(a, b)| {
            let d: Vec<f64> = (0..3).map(|i| a.position[i] - b[i]).collect();
            norm(&d) / norm(&a.position)
        })
        .fold(0.0, f64::max))
}

/// Largest `|E - E₀|/|E₀|` along a trajectory.
pub fn max_energy_drift(states: &[OrbitState]) -> f64 {
    states.iter().map(|s| s.energy_drift.abs()).fold(0.0, f64::max)
}

/// Largest `||r| - a|/a` along a trajectory, for circular orbits.
pub fn max_radius_deviation(states: &[OrbitState], radius: f64) -> f64 {
    states
        .iter()
        .map(|s| (norm(&s.position) - radius).abs() / radius)
        .fold(0.0, f64::max)
}

pub const CSV_HEADER: &str = "s,t,x1,x2,x3,v1,v2,v3,E_rel_drift";

/// Writes the header and every `every`-th state (always including the last).
pub fn write_csv<W: Write>(out: &mut W, states: &[OrbitState], every: usize) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    let every = every.max(1);
    let last = states.len().saturating_sub(1);
    for (k, st) in states.iter().enumerate() {
        if k % every != 0 && k != last {
            continue;
        }
        writeln!(
            out,
            "{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.6e}",
            st.s,
            st.t,
            st.position[0],
            st.position[1],
            st.position[2],
            st.velocity[0],
            st.velocity[1],
            st.velocity[2],
            st.energy_drift
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_params() {
        assert!(matches!(OrbitParams::new(1.5, 1.0, 1, 10), Err(Error::InvalidOrbitParams(_))));
        assert!(matches!(OrbitParams::new(0.5, -1.0, 1, 10), Err(Error::InvalidOrbitParams(_))));
        assert!(matches!(OrbitParams::new(0.5, 1.0, 1, 0), Err(Error::InvalidOrbitParams(_))));
        assert!(matches!(OrbitParams::new(f64::NAN, 1.0, 1, 1), Err(Error::InvalidOrbitParams(_))));
        assert_eq!("bogus".parse::<Method>().unwrap_err(), Error::UnknownKind("bogus".into()));
    }

    #[test]
    fn initial_states_match() {
        let p = OrbitParams::new(0.6, 1.0, 1, 10).unwrap();
        let e0 = p.energy();
        let a = newton_state(&newton_initial(&p), 0.0, e0);
        let b = ks_state(&ks_initial(&p), 0.0, e0);
        for i in 0..3 {
            assert!((a.position[i] - b.position[i]).abs() < 1e-14);
            assert!((a.velocity[i] - b.velocity[i]).abs() < 1e-14);
        }
        assert!(a.energy_drift.abs() < 1e-14 && b.energy_drift.abs() < 1e-14);
    }

    #[test]
    fn ks_period_recovers_time() {
        let p = OrbitParams::new(0.3, 2.0, 1, 2000).unwrap();
        let traj = kepler_integrate(Method::Ks, &p).unwrap();
        let last = traj.last().unwrap();
        assert!((last.t - p.period()).abs() / p.period() < 1e-9);
        assert!((last.position[0] - p.apoapsis()).abs() < 1e-8);
    }

    #[test]
    fn circular_orbit() {
        let p = OrbitParams::new(0.0, 1.0, 2, 1000).unwrap();
        for m in [Method::Newton, Method::Ks] {
            let traj = kepler_integrate(m, &p).unwrap();
            assert!(max_radius_deviation(&traj, 1.0) < 1e-9, "{m}");
        }
    }

    #[test]
    fn csv_rows() {
        let p = OrbitParams::new(0.1, 1.0, 1, 10).unwrap();
        let traj = kepler_integrate(Method::Newton, &p).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &traj, 4).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        // states 0, 4, 8 and the last (10)
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[1].split(',').count(), 9);
    }
}
