use confined_hydrogen::{evaluate_m_family, Evaluation, QuantumState, SolverConfig};
use rayon::prelude::*;

use crate::args::{Format, Preset, TableArgs};
use crate::commands::{emit, load_config};
use crate::error::CliError;
use crate::row::{render, ResultRow};

pub const RADII: [f64; 7] = [0.1, 0.3, 0.5, 1.0, 2.5, 5.0, 10.0];

/// Significant digits kept by the rendered table.
const DIGITS: usize = 10;

/// Principal quantum number and the `(l, [m])` rows of a preset.
fn layout(preset: Preset) -> (u32, Vec<(u32, Vec<i32>)>) {
    let family = |n: u32| (n, vec![(n - 1, (0..n as i32).collect())]);
    match preset {
        Preset::P2 => family(2),
        Preset::D3 => family(3),
        Preset::F4 => family(4),
        Preset::G5 => family(5),
        Preset::N10M1 => (10, (1..=9).map(|l| (l, vec![1])).collect()),
    }
}

fn title(preset: Preset) -> &'static str {
    match preset {
        Preset::P2 => "2p",
        Preset::D3 => "3d",
        Preset::F4 => "4f",
        Preset::G5 => "5g",
        Preset::N10M1 => "n = 10, |m| = 1",
    }
}

/// `evals[row][radius]`, rows in layout order.
fn compute(preset: Preset, cfg: &SolverConfig) -> Result<Vec<Vec<Evaluation>>, CliError> {
    let (n, rows) = layout(preset);
    let points: Vec<(u32, &[i32], f64)> =
        rows.iter().flat_map(|(l, ms)| RADII.iter().map(move |&rc| (*l, ms.as_slice(), rc))).collect();
    let solved: Vec<Vec<Evaluation>> = points
        .par_iter()
        .map(|&(l, ms, rc)| evaluate_m_family(&QuantumState::hydrogen(n, l, ms[0], rc)?, ms, cfg))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for (chunk, (_, ms)) in solved.chunks(RADII.len()).zip(&rows) {
        for k in 0..ms.len() {
            out.push(chunk.iter().map(|evs| evs[k].clone()).collect());
        }
    }
    Ok(out)
}

/// `x` cut (not rounded) to `digits` significant digits, positional notation.
pub fn truncate(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.20e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    let kept: String = mantissa.chars().filter(|c| c.is_ascii_digit()).take(digits).collect();
    let body = if exp >= 0 {
        let int_len = exp as usize + 1;
        if kept.len() <= int_len {
            format!("{kept}{}", "0".repeat(int_len - kept.len()))
        } else {
            format!("{}.{}", &kept[..int_len], &kept[int_len..])
        }
    } else {
        format!("0.{}{kept}", "0".repeat((-exp - 1) as usize))
    };
    if x < 0.0 {
        format!("-{body}")
    } else {
        body
    }
}

/// Caption and accessor of one table block.
type Block = (&'static str, fn(&Evaluation) -> f64);

fn line(label: &str, cells: impl Iterator<Item = String>) -> String {
    let mut s = format!("{label:<10}");
    for c in cells {
        s.push_str(&format!("{c:>18}"));
    }
    s.push('\n');
    s
}

pub fn render_text(preset: Preset, evals: &[Vec<Evaluation>]) -> String {
    let label = |ev: &Evaluation| {
        let s = &ev.report.state;
        if preset == Preset::N10M1 {
            format!("l={}", s.l)
        } else {
            format!("|m|={}", s.abs_m())
        }
    };
    let mut out = format!("# {}, Z = 1\n", title(preset));
    out.push_str(&line("r_c", RADII.iter().map(|r| r.to_string())));
    let blocks: [Block; 3] = [("I_r", |e| e.report.i_r), ("I_p", |e| e.report.i_p), ("I_t", |e| e.report.i_t)];
    for (name, get) in blocks {
        out.push_str(&format!("\n{name}\n"));
        for row in evals {
            out.push_str(&line(&label(&row[0]), row.iter().map(|e| truncate(get(e), DIGITS))));
        }
    }
    // Bounds do not depend on m; one row per l.
    let mut per_l: Vec<&Vec<Evaluation>> = Vec::new();
    for row in evals {
        if per_l.iter().all(|r| r[0].report.state.l != row[0].report.state.l) {
            per_l.push(row);
        }
    }
    let bounds: [Block; 2] = [("lower bound", |e| e.report.lower_bound), ("upper bound", |e| e.report.upper_bound)];
    for (name, get) in bounds {
        out.push_str(&format!("\n{name}\n"));
        for row in &per_l {
            let tag = if per_l.len() > 1 { format!("l={}", row[0].report.state.l) } else { String::new() };
            out.push_str(&line(&tag, row.iter().map(|e| truncate(get(e), DIGITS))));
        }
    }
    out
}

/// Machine rows ordered as the table reads: by row, then by radius.
pub fn rows(evals: &[Vec<Evaluation>]) -> Vec<ResultRow> {
    evals.iter().flatten().map(ResultRow::from_evaluation).collect()
}

pub fn table(args: &TableArgs) -> Result<(), CliError> {
    let cfg = load_config(args.output.config.as_deref())?;
    let evals = compute(args.preset, &cfg)?;
    let text = match args.output.format {
        None => render_text(args.preset, &evals),
        Some(f @ (Format::Csv | Format::Json)) => render(&rows(&evals), f, &cfg),
    };
    emit(&text, args.output.out.as_deref())
}
