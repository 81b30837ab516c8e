use std::fs;
use std::io::Write;
use std::path::Path;

use confined_hydrogen::info::free_atom_fisher;
use confined_hydrogen::{
    evaluate, evaluate_m_family, solve_state, transform, MomentumConfig, QuantumState, SolverConfig,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{DumpArgs, Format, FreeArgs, ScanArgs, SolveArgs, StateArgs};
use crate::error::CliError;
use crate::row::{float, render, to_json, ResultRow};

pub fn load_config(path: Option<&Path>) -> Result<SolverConfig, CliError> {
    match path {
        None => Ok(SolverConfig::default()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(CliError::io(p))?;
            Ok(text.parse()?)
        }
    }
}

/// Sorted, deduplicated, strictly positive values.
pub fn positive_list(values: &[f64], what: &str) -> Result<Vec<f64>, CliError> {
    if values.is_empty() {
        return Err(CliError::Usage(format!("{what} list is empty")));
    }
    if let Some(bad) = values.iter().find(|v| !(**v > 0.0) || !v.is_finite()) {
        return Err(CliError::Usage(format!("{what} must be positive and finite, got {bad}")));
    }
    let mut out = values.to_vec();
    out.sort_by(f64::total_cmp);
    out.dedup();
    Ok(out)
}

/// `[m]` when given, else every `m` in `0..=l`.
pub fn m_values(state: &StateArgs) -> Vec<i32> {
    match state.m {
        Some(m) => vec![m],
        None => (0..=state.l as i32).collect(),
    }
}

/// Print `text` and, when asked, write the same bytes to `out`.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    if let Some(p) = out {
        fs::write(p, text).map_err(CliError::io(p))?;
    }
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(text.as_bytes()).map_err(CliError::io("<stdout>"))?;
    stdout.flush().map_err(CliError::io("<stdout>"))
}

pub fn solve(args: &SolveArgs) -> Result<(), CliError> {
    let cfg = load_config(args.output.config.as_deref())?;
    let s = &args.state;
    let state = QuantumState::new(s.n, s.l, s.m.unwrap_or(0), s.z, args.rc)?;
    let row = ResultRow::from_evaluation(&evaluate(&state, &cfg)?);
    let format = args.output.format.unwrap_or(Format::Csv);
    emit(&render(&[row], format, &cfg), args.output.out.as_deref())
}

/// Rows ordered by `(Z, r_c, m)`. A point that fails to solve yields
/// error rows and the sweep carries on.
pub fn scan_rows(
    state: &StateArgs,
    radii: &[f64],
    charges: &[f64],
    cfg: &SolverConfig,
) -> Result<Vec<ResultRow>, CliError> {
    let ms = m_values(state);
    let mut points = Vec::new();
    for &z in charges {
        for &rc in radii {
            for &m in &ms {
                QuantumState::new(state.n, state.l, m, z, rc)?;
            }
            points.push(QuantumState::new(state.n, state.l, ms[0], z, rc)?);
        }
    }
    let rows: Vec<Vec<ResultRow>> = points
        .par_iter()
        .map(|st| match evaluate_m_family(st, &ms, cfg) {
            Ok(evs) => evs.iter().map(ResultRow::from_evaluation).collect(),
            Err(e) => ms.iter().map(|&m| ResultRow::failed(&QuantumState { m, ..*st }, &e)).collect(),
        })
        .collect();
    Ok(rows.into_iter().flatten().collect())
}

pub fn scan(args: &ScanArgs) -> Result<(), CliError> {
    let cfg = load_config(args.output.config.as_deref())?;
    let radii = positive_list(&args.rc_list, "r_c")?;
    let charges = if args.z_list.is_empty() { vec![args.state.z] } else { positive_list(&args.z_list, "Z")? };
    let rows = scan_rows(&args.state, &radii, &charges, &cfg)?;
    let format = args.output.format.unwrap_or(Format::Csv);
    emit(&render(&rows, format, &cfg), args.output.out.as_deref())
}

#[derive(Debug, Serialize)]
pub struct FreeRow {
    pub n: u32,
    pub l: u32,
    pub m: i32,
    #[serde(rename = "Z")]
    pub z: f64,
    #[serde(rename = "I_r")]
    pub i_r: f64,
    #[serde(rename = "I_p")]
    pub i_p: f64,
    #[serde(rename = "I_t")]
    pub i_t: f64,
}

pub fn free(args: &FreeArgs) -> Result<(), CliError> {
    let s = &args.state;
    let mut rows = Vec::new();
    for m in m_values(s) {
        let st = QuantumState::free(s.n, s.l, m, s.z)?;
        let (i_r, i_p) = free_atom_fisher(&st);
        rows.push(FreeRow { n: s.n, l: s.l, m, z: s.z, i_r, i_p, i_t: i_r * i_p });
    }
    let text = match args.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut t = String::from("n,l,m,Z,I_r,I_p,I_t\n");
            for r in &rows {
                t.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    r.n,
                    r.l,
                    r.m,
                    float(r.z),
                    float(r.i_r),
                    float(r.i_p),
                    float(r.i_t)
                ));
            }
            t
        }
        Format::Json => to_json(&rows, &SolverConfig::default()),
    };
    emit(&text, args.out.as_deref())
}

fn two_columns(header: &str, xs: &[f64], ys: &[f64]) -> String {
    let mut t = format!("{header}\n");
    for (x, y) in xs.iter().zip(ys) {
        t.push_str(&format!("{},{}\n", float(*x), float(*y)));
    }
    t
}

pub fn dump(args: &DumpArgs) -> Result<(), CliError> {
    let cfg = load_config(args.config.as_deref())?;
    let s = &args.state;
    let state = QuantumState::new(s.n, s.l, s.m.unwrap_or(0), s.z, args.rc)?;
    let sol = solve_state(&state, &cfg)?;
    let msol = transform(&sol, &MomentumConfig { tail_tol: cfg.quadrature_rtol, ..MomentumConfig::default() })?;
    fs::create_dir_all(&args.out).map_err(CliError::io(&args.out))?;
    let radial = args.out.join("radial.csv");
    let momentum = args.out.join("momentum.csv");
    fs::write(&radial, two_columns("r,u", sol.radii(), &sol.u_values)).map_err(CliError::io(&radial))?;
    fs::write(&momentum, two_columns("p,P", &msol.p_grid, &msol.p_values)).map_err(CliError::io(&momentum))?;
    emit(&format!("{}\n{}\n", radial.display(), momentum.display()), None)
}
