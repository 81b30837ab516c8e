use confined_hydrogen::info::{direct_fisher_oracle, evaluate_solved, z_scale};
use confined_hydrogen::radial::count_nodes;
use confined_hydrogen::{evaluate, solve_state, transform, Evaluation, MomentumConfig, QuantumState, SolverConfig};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Format, VerifyArgs, VerifyLevel};
use crate::commands::{emit, load_config, positive_list};
use crate::error::CliError;
use crate::row::{float, quote, to_json};
use crate::table::RADII;

const PARSEVAL_TOL: f64 = 1e-8;
const CROSS_SPACE_TOL: f64 = 1e-7;
const SCALING_TOL: f64 = 1e-7;
const ORACLE_TOL: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(check: String, passed: bool, detail: String) -> Self {
        Self { check, passed, detail }
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn tag(st: &QuantumState) -> String {
    format!("n={} l={} m={} Z={} r_c={}", st.n, st.l, st.m, st.z, st.r_c)
}

/// Every check on one `(n, l, r_c)` and all `0 <= m <= l`.
fn point_checks(n: u32, l: u32, rc: f64, level: VerifyLevel, cfg: &SolverConfig) -> Vec<Check> {
    let base = match QuantumState::hydrogen(n, l, 0, rc) {
        Ok(st) => st,
        Err(e) => return vec![Check::new(format!("state n={n} l={l} r_c={rc}"), false, e.to_string())],
    };
    let solved = solve_state(&base, cfg).and_then(|sol| {
        let msol = transform(&sol, &MomentumConfig { tail_tol: cfg.quadrature_rtol, ..MomentumConfig::default() })?;
        Ok((sol, msol))
    });
    let (sol, msol) = match solved {
        Ok(s) => s,
        Err(e) => return vec![Check::new(format!("solve {}", tag(&base)), false, e.to_string())],
    };
    let mut out = Vec::new();
    let nodes = count_nodes(&sol);
    out.push(Check::new(
        format!("nodes {}", tag(&base)),
        nodes == base.radial_nodes(),
        format!("{nodes} nodes, expected {}", base.radial_nodes()),
    ));
    out.push(Check::new(
        format!("parseval {}", tag(&base)),
        msol.norm_deficit < PARSEVAL_TOL,
        format!("norm deficit {:e}", msol.norm_deficit),
    ));
    for m in 0..=l as i32 {
        let st = QuantumState { m, ..base };
        let ev = match evaluate_solved(&sol, &msol, &st) {
            Ok(ev) => ev,
            Err(e) => {
                out.push(Check::new(format!("evaluate {}", tag(&st)), false, e.to_string()));
                continue;
            }
        };
        let r = &ev.report;
        out.push(Check::new(
            format!("bounds {}", tag(&st)),
            r.lower_satisfied() && r.upper_satisfied(),
            format!("{} <= {} <= {}", float(r.lower_bound), float(r.i_t), float(r.upper_bound)),
        ));
        if m == 0 {
            out.push(Check::new(
                format!("m0-collapse {}", tag(&st)),
                r.i_t == r.upper_bound,
                format!("I_t {} upper {}", float(r.i_t), float(r.upper_bound)),
            ));
            let d = rel(ev.momentum_p2, r.expectations.p_p2);
            out.push(Check::new(
                format!("cross-space-p2 {}", tag(&st)),
                d < CROSS_SPACE_TOL,
                format!("relative difference {d:e}"),
            ));
        }
        if level == VerifyLevel::Full || m == l as i32 {
            let check = format!("oracle {}", tag(&st));
            out.push(match direct_fisher_oracle(&sol, &st) {
                Ok(v) => {
                    let d = rel(v, r.i_r);
                    Check::new(check, d < ORACLE_TOL, format!("oracle {} moments {} ({d:e})", float(v), float(r.i_r)))
                }
                Err(e) => Check::new(check, false, e.to_string()),
            });
        }
    }
    out
}

/// `(Z = 3, r_c = 1)` solved directly against `(Z = 1, r_c = 3)` rescaled.
fn scaling_checks(n: u32, l: u32, cfg: &SolverConfig) -> Vec<Check> {
    (0..=l as i32)
        .map(|m| {
            let name = format!("scaling n={n} l={l} m={m} Z=3 r_c=1");
            let pair = || -> confined_hydrogen::Result<(Evaluation, Evaluation)> {
                Ok((
                    evaluate(&QuantumState::new(n, l, m, 3.0, 1.0)?, cfg)?,
                    evaluate(&QuantumState::new(n, l, m, 1.0, 3.0)?, cfg)?,
                ))
            };
            match pair().and_then(|(direct, base)| Ok((direct, z_scale(&base.report, 3.0)?))) {
                Ok((direct, scaled)) => {
                    let d = rel(scaled.i_r, direct.report.i_r).max(rel(scaled.i_p, direct.report.i_p));
                    Check::new(name, d < SCALING_TOL, format!("largest relative difference {d:e}"))
                }
                Err(e) => Check::new(name, false, e.to_string()),
            }
        })
        .collect()
}

pub fn run_checks(targets: &[(u32, u32)], radii: &[f64], level: VerifyLevel, cfg: &SolverConfig) -> Vec<Check> {
    let points: Vec<(u32, u32, f64)> =
        targets.iter().flat_map(|&(n, l)| radii.iter().map(move |&rc| (n, l, rc))).collect();
    let mut checks: Vec<Check> =
        points.par_iter().map(|&(n, l, rc)| point_checks(n, l, rc, level, cfg)).flatten().collect();
    checks.extend(targets.par_iter().map(|&(n, l)| scaling_checks(n, l, cfg)).flatten().collect::<Vec<_>>());
    checks
}

pub fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let cfg = load_config(args.output.config.as_deref())?;
    let targets = match (args.n, args.l) {
        (Some(n), Some(l)) => {
            QuantumState::hydrogen(n, l, 0, 1.0)?;
            vec![(n, l)]
        }
        _ => vec![(2, 1), (3, 2)],
    };
    let radii = if !args.rc_list.is_empty() {
        positive_list(&args.rc_list, "r_c")?
    } else if args.level == VerifyLevel::Full {
        RADII.to_vec()
    } else {
        vec![0.1, 1.0, 10.0]
    };
    let checks = run_checks(&targets, &radii, args.level, &cfg);
    let text = match args.output.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut t = String::from("check,passed,detail\n");
            for c in &checks {
                t.push_str(&format!("{},{},{}\n", quote(&c.check), c.passed, quote(&c.detail)));
            }
            t
        }
        Format::Json => to_json(&checks, &cfg),
    };
    emit(&text, args.output.out.as_deref())?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    eprintln!("{} checks, {failed} failed", checks.len());
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(())
}
