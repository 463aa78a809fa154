//! Acceptance criteria 1-13. Prints one line per criterion and exits
//! non-zero when any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stargeo::mechanics::kepler::{cross_method_deviation, kepler_integrate, max_energy_drift};
use stargeo::mechanics::{Method, OrbitParams};
use stargeo_cli::expr::{parse, BinOp, Expr, Func};
use stargeo_cli::verify::{self, Check, Report, Status, Suite};

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<String, String>,
}

fn select<'a>(report: &'a Report, prefixes: &[&str]) -> Vec<&'a Check> {
    report
        .checks
        .iter()
        .filter(|c| prefixes.iter().any(|p| c.id.starts_with(p)))
        .collect()
}

/// Every selected check passes and at least `min` were selected.
fn all_pass(report: &Report, prefixes: &[&str], min: usize) -> Result<String, String> {
    let chosen = select(report, prefixes);
    if chosen.len() < min {
        return Err(format!("expected at least {min} checks, found {}", chosen.len()));
    }
    match chosen.iter().find(|c| c.status != Status::Pass) {
        Some(c) => Err(format!("{} {}: {}", c.status, c.id, c.residual)),
        None => Ok(format!("{} checks exact", chosen.len())),
    }
}

fn pauli_brackets() -> Result<String, String> {
    all_pass(&verify::run(Suite::Pauli), &["pauli.commutator.", "pauli.anticommutator."], 18)
}

fn traces() -> Result<String, String> {
    all_pass(&verify::run(Suite::Pauli), &["pauli.trace."], 14)
}

fn fermionic_wigner() -> Result<String, String> {
    all_pass(&verify::run(Suite::Wigner), &["wigner."], 20)
}

fn oscillator() -> Result<String, String> {
    all_pass(&verify::run(Suite::Oscillator), &["oscillator.genvalue.", "oscillator.normalization."], 22)
}

fn correspondence() -> Result<String, String> {
    let r = verify::run(Suite::Oscillator);
    all_pass(&r, &["oscillator.correspondence", "oscillator.poisson-ga"], 2)?;
    let residuals: Vec<&str> = select(&r, &["oscillator.correspondence", "oscillator.poisson-ga"])
        .iter()
        .map(|c| c.residual.as_str())
        .collect();
    if residuals.iter().all(|s| *s == "200/200 pairs") {
        Ok(residuals.join(", "))
    } else {
        Err(residuals.join(", "))
    }
}

fn hydrogen() -> Result<String, String> {
    let r = verify::run(Suite::Hydrogen);
    all_pass(&r, &["hydrogen.level.", "hydrogen.invalid-n"], 6)?;
    let flag = select(&r, &["hydrogen.hbar-power-variant"]);
    match flag.first() {
        Some(c) if c.status == Status::Flagged => Ok("E_1..E_5 exact, hbar-power variant flagged".into()),
        other => Err(format!("hbar-power variant check not flagged: {other:?}")),
    }
}

fn spin_term() -> Result<String, String> {
    all_pass(&verify::run(Suite::Pauli), &["pauli.spin-term", "pauli.split."], 3)
}

fn ks_transformation() -> Result<String, String> {
    all_pass(
        &verify::run(Suite::Ks),
        &["ks.position.", "ks.constraint", "ks.regularization."],
        7,
    )
}

fn kepler_numerics() -> Result<String, String> {
    let reference = OrbitParams::new(0.6, 1.0, 10, 10_000).map_err(|e| e.to_string())?;
    let dev = cross_method_deviation(&reference).map_err(|e| e.to_string())?;
    let eccentric = OrbitParams::new(0.99, 1.0, 10, 10_000).map_err(|e| e.to_string())?;
    let drift = |m| kepler_integrate(m, &eccentric).map(|s| max_energy_drift(&s)).map_err(|e| e.to_string());
    let (ks, newton) = (drift(Method::Ks)?, drift(Method::Newton)?);
    let line = format!("deviation {dev:.2e}; e=0.99 drift ks {ks:.2e} < newton {newton:.2e}");
    if dev < 1e-6 && ks < newton {
        Ok(line)
    } else {
        Err(line)
    }
}

fn wick() -> Result<String, String> {
    all_pass(&verify::run(Suite::Rotors), &["rotors.wick"], 1)
}

fn sta_dirac() -> Result<String, String> {
    let sta = all_pass(
        &verify::run(Suite::Sta),
        &["sta.anticommutator.", "sta.trace.one", "sta.boost.1", "sta.boost.2", "sta.boost.3", "sta.generators."],
        16 + 1 + 3 + 27,
    )?;
    let dirac = all_pass(&verify::run(Suite::Dirac), &["dirac."], 16)?;
    Ok(format!("sta {sta}, dirac {dirac}"))
}

fn rotation_matrix() -> Result<String, String> {
    all_pass(
        &verify::run(Suite::Rotors),
        &["rotors.rotation-z", "rotors.determinant", "rotors.orthogonal"],
        3,
    )
}

const IDENTS: [&str; 8] = ["sigma1", "theta2", "gamma0", "q1", "p1", "hbar", "i", "I4"];
const OPS: [BinOp; 6] = [BinOp::Add, BinOp::Sub, BinOp::Star, BinOp::Outer, BinOp::Inner, BinOp::Dot];

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.5) {
            Expr::num(rng.gen_range(0..40), rng.gen_range(1..6))
        } else {
            Expr::ident(IDENTS[rng.gen_range(0..IDENTS.len())])
        };
    }
    match rng.gen_range(0..4) {
        0 => Expr::neg(random_expr(rng, depth - 1)),
        1 => Expr::pow(random_expr(rng, depth - 1), rng.gen_range(0..5)),
        2 => {
            let f = Func::ALL[rng.gen_range(0..Func::ALL.len())];
            let args = (0..f.arity()).map(|_| random_expr(rng, depth - 1)).collect();
            Expr::call(f, args)
        }
        _ => {
            let op = OPS[rng.gen_range(0..OPS.len())];
            Expr::binary(op, random_expr(rng, depth - 1), random_expr(rng, depth - 1))
        }
    }
}

fn parser_and_exit_codes() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let e = random_expr(&mut rng, 5);
        let text = e.to_string();
        match parse(&text) {
            Ok(back) if back == e && back.to_string() == text => {}
            other => return Err(format!("round trip failed for `{text}`: {other:?}")),
        }
    }
    let failing = Report::new(
        "synthetic",
        vec![Check {
            id: "x".into(),
            anchor: "a".into(),
            status: Status::Fail,
            residual: String::new(),
        }],
    );
    if failing.exit_code() == 0 {
        return Err("report with a failure exits 0".into());
    }
    for suite in ["pauli", "hydrogen"] {
        let out = Command::new(env!("CARGO_BIN_EXE_stargeo"))
            .args(["verify", suite, "--json"])
            .output()
            .map_err(|e| e.to_string())?;
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let fails = report["summary"]["fail"].as_u64().unwrap_or(u64::MAX);
        let expect = if fails == 0 { Some(0) } else { Some(1) };
        if out.status.code() != expect || fails != 0 {
            return Err(format!("verify {suite}: exit {:?} with {fails} failures", out.status.code()));
        }
    }
    Ok("500 expressions round trip; exit codes 0/1 as reported".into())
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion { number: 1, title: "Pauli algebra", limit: secs(1), run: pauli_brackets },
        Criterion { number: 2, title: "trace rules", limit: None, run: traces },
        Criterion { number: 3, title: "fermionic Wigner suite", limit: None, run: fermionic_wigner },
        Criterion { number: 4, title: "bosonic oscillator", limit: secs(5), run: oscillator },
        Criterion { number: 5, title: "correspondence principle", limit: None, run: correspondence },
        Criterion { number: 6, title: "hydrogen", limit: secs(1), run: hydrogen },
        Criterion { number: 7, title: "spin term", limit: None, run: spin_term },
        Criterion { number: 8, title: "KS transformation", limit: None, run: ks_transformation },
        Criterion { number: 9, title: "Kepler numerics", limit: secs(30), run: kepler_numerics },
        Criterion { number: 10, title: "Wick expansion", limit: None, run: wick },
        Criterion { number: 11, title: "STA/Dirac", limit: secs(5), run: sta_dirac },
        Criterion { number: 12, title: "rotation matrix", limit: None, run: rotation_matrix },
        Criterion { number: 13, title: "parser and exit codes", limit: None, run: parser_and_exit_codes },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let result = match (result, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            (r, _) => r,
        };
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += result.is_err() as u32;
        println!("{tag} criterion {:>2} {}: {detail} ({elapsed:.2?})", c.number, c.title);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() as u32 - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
