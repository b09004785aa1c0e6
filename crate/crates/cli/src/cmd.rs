//! Command handlers: validate arguments, call the library, render output.
//!
//! Error discipline: malformed or inapplicable flags are usage errors
//! (exit 1); values the math layer rejects are domain errors (exit 2); a
//! failed verification is its own condition (exit 3) so CI can tell
//! regressions from misuse.

use crate::args::{Cli, Command, OutputFormat};
use crate::output::{bfile, csv_line, digest, rational_str};
use lattice_paths::asymptotics::{asymptotic_error_profile, central_asymptotic};
use lattice_paths::ballot::{
    ballot_number, dyck_prefix_count, verify_against_enumeration, verify_square_identity_range,
    BallotPoint,
};
use lattice_paths::delannoy::{
    central_sequence, delannoy_table, verify_central_gf, verify_legendre, verify_p_recurrence,
    CentralAlgorithm,
};
use lattice_paths::exactnum::ExactInteger;
use lattice_paths::ruin::{
    duration_distribution, expected_abs_lead, ruin_prob_binomial, ruin_prob_trig,
    verify_agreement, RuinSpec,
};
use lattice_paths::walks::{
    count_paths, schroeder_numbers, verify_bridge_decomposition, verify_schroeder_algebraic,
    Jump, JumpSystem, PathClass, StripBounds,
};
use lattice_paths::VerificationReport;
use num_traits::ToPrimitive;
use serde_json::json;
use std::fmt::Write as _;
use std::time::Instant;

const TRIG_TOLERANCE: f64 = 1e-9;

#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Domain(String),
    Mismatch(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 1,
            AppError::Domain(_) => 2,
            AppError::Mismatch(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::Domain(m) | AppError::Mismatch(m) => m,
        }
    }
}

/// Rendered stdout plus the process exit code (0, or 3 for a verification
/// run that found a mismatch but still produced a report).
pub struct CmdOutput {
    pub stdout: String,
    pub exit: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput { stdout, exit: 0 }
    }
}

fn bfile_not_applicable() -> AppError {
    AppError::Usage("bfile format only applies to integer-sequence commands (central, schroeder)".into())
}

pub fn run(cli: Cli) -> Result<CmdOutput, AppError> {
    let format = cli.format;
    match cli.command {
        Command::Table { rows, cols } => cmd_table(rows, cols, format),
        Command::Central { n, algorithm } => cmd_central(n, &algorithm, format),
        Command::Schroeder { n } => cmd_schroeder(n, format),
        Command::Walks {
            class,
            jumps,
            length,
            end,
            lower,
            upper,
        } => cmd_walks(&class, &jumps, length, end, lower, upper, format),
        Command::Ballot { x, y } => cmd_ballot(x, y, format),
        Command::DyckPrefix { n, k } => cmd_dyck_prefix(n, k, format),
        Command::Ruin { n, horizon, method } => cmd_ruin(n, horizon, &method, format),
        Command::Lead { n } => cmd_lead(n, format),
        Command::Asym { n, terms, profile } => cmd_asym(&n, terms, profile, format),
        Command::Verify { identity, order } => cmd_verify(&identity, order, format),
        Command::Bench {
            target,
            n,
            repetitions,
        } => cmd_bench(&target, n, repetitions, format),
    }
}

fn cmd_table(rows: usize, cols: usize, format: OutputFormat) -> Result<CmdOutput, AppError> {
    if rows == 0 || cols == 0 {
        return Err(AppError::Usage("rows and cols must be >= 1".into()));
    }
    let table = delannoy_table(cols - 1, rows - 1);
    let out = match format {
        OutputFormat::Text => {
            // k increases upward, so the row of ones at k = 0 prints last
            let widths: Vec<usize> = (0..cols)
                .map(|n| {
                    (0..rows)
                        .map(|k| table.entry(n, k).to_string().len())
                        .max()
                        .unwrap_or(1)
                })
                .collect();
            let mut s = String::new();
            for k in (0..rows).rev() {
                let line: Vec<String> = (0..cols)
                    .map(|n| format!("{:>w$}", table.entry(n, k), w = widths[n]))
                    .collect();
                writeln!(s, "{}", line.join(" ")).unwrap();
            }
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,k,value\n");
            for k in 0..rows {
                for n in 0..cols {
                    writeln!(s, "{},{},{}", n, k, table.entry(n, k)).unwrap();
                }
            }
            s
        }
        OutputFormat::Json => {
            let entries: Vec<_> = (0..rows)
                .flat_map(|k| {
                    (0..cols).map(move |n| (n, k))
                })
                .map(|(n, k)| json!({"n": n, "k": k, "value": table.entry(n, k).to_string()}))
                .collect();
            let doc = json!({"command": "table", "rows": rows, "cols": cols, "entries": entries});
            format!("{}\n", doc)
        }
        OutputFormat::Bfile => return Err(bfile_not_applicable()),
    };
    Ok(CmdOutput::ok(out))
}

fn parse_algorithm(name: &str) -> Result<CentralAlgorithm, AppError> {
    match name {
        "dp" => Ok(CentralAlgorithm::GridDp),
        "sum" => Ok(CentralAlgorithm::BinomialSum),
        "rec" => Ok(CentralAlgorithm::PRecurrence),
        "series" => Ok(CentralAlgorithm::SeriesExtraction),
        "legendre" => Ok(CentralAlgorithm::Legendre),
        other => Err(AppError::Domain(format!(
            "unknown algorithm '{}' (expected dp, sum, rec, series, legendre or all)",
            other
        ))),
    }
}

fn render_sequence(
    command: &str,
    extra: Option<(&str, &str)>,
    values: &[ExactInteger],
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Text => {
            let line: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            format!("{}\n", line.join(" "))
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,value\n");
            for (i, v) in values.iter().enumerate() {
                writeln!(s, "{},{}", i, v).unwrap();
            }
            s
        }
        OutputFormat::Json => {
            let strings: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            let mut doc = json!({"command": command, "values": strings});
            if let Some((key, value)) = extra {
                doc[key] = json!(value);
            }
            format!("{}\n", doc)
        }
        OutputFormat::Bfile => bfile(values.iter()),
    }
}

fn cmd_central(n: usize, algorithm: &str, format: OutputFormat) -> Result<CmdOutput, AppError> {
    if algorithm != "all" {
        let algo = parse_algorithm(algorithm)?;
        let seq = central_sequence(n, algo);
        return Ok(CmdOutput::ok(render_sequence(
            "central",
            Some(("algorithm", algorithm)),
            &seq,
            format,
        )));
    }

    let sequences: Vec<(CentralAlgorithm, Vec<ExactInteger>)> = CentralAlgorithm::ALL
        .iter()
        .map(|&algo| (algo, central_sequence(n, algo)))
        .collect();
    let reference = &sequences[0].1;
    let disagreement = sequences.iter().find_map(|(algo, seq)| {
        seq.iter()
            .zip(reference.iter())
            .position(|(a, b)| a != b)
            .map(|at| (*algo, at))
    });
    let verdict = if disagreement.is_none() { "pass" } else { "fail" };

    let out = match format {
        OutputFormat::Text => {
            let mut s = String::new();
            for (algo, seq) in &sequences {
                let line: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
                writeln!(s, "{}: {}", algo.name(), line.join(" ")).unwrap();
            }
            writeln!(s, "agreement: {}", verdict).unwrap();
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,dp,sum,rec,series,legendre\n");
            for i in 0..=n {
                let cells: Vec<String> = std::iter::once(i.to_string())
                    .chain(sequences.iter().map(|(_, seq)| seq[i].to_string()))
                    .collect();
                writeln!(s, "{}", csv_line(cells)).unwrap();
            }
            s
        }
        OutputFormat::Json => {
            let mut algos = serde_json::Map::new();
            for (algo, seq) in &sequences {
                let strings: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
                algos.insert(algo.name().to_string(), json!(strings));
            }
            let doc = json!({"command": "central", "algorithms": algos, "agreement": verdict});
            format!("{}\n", doc)
        }
        // all algorithms agree (or we exit 3 below); emit the common sequence
        OutputFormat::Bfile => bfile(reference.iter()),
    };

    if let Some((algo, at)) = disagreement {
        return Ok(CmdOutput {
            stdout: out,
            exit: AppError::Mismatch(format!(
                "algorithm {} disagrees with dp at n = {}",
                algo.name(),
                at
            ))
            .exit_code(),
        });
    }
    Ok(CmdOutput::ok(out))
}

fn cmd_schroeder(n: usize, format: OutputFormat) -> Result<CmdOutput, AppError> {
    let seq = schroeder_numbers(n);
    Ok(CmdOutput::ok(render_sequence("schroeder", None, &seq, format)))
}

fn parse_class(name: &str) -> Result<PathClass, AppError> {
    match name {
        "walk" => Ok(PathClass::Walk),
        "bridge" => Ok(PathClass::Bridge),
        "meander" => Ok(PathClass::Meander),
        "excursion" => Ok(PathClass::Excursion),
        other => Err(AppError::Domain(format!(
            "unknown class '{}' (expected walk, bridge, meander or excursion)",
            other
        ))),
    }
}

fn parse_jumps(text: &str) -> Result<JumpSystem, AppError> {
    let mut jumps = Vec::new();
    for part in text.split(',') {
        let (t, dh) = part.split_once(':').ok_or_else(|| {
            AppError::Domain(format!("invalid jump '{}': expected t:dh", part))
        })?;
        let time_len: usize = t
            .trim()
            .parse()
            .map_err(|_| AppError::Domain(format!("invalid jump time length '{}'", t)))?;
        let dh: i64 = dh
            .trim()
            .parse()
            .map_err(|_| AppError::Domain(format!("invalid jump height change '{}'", dh)))?;
        jumps.push(Jump::new(time_len, dh));
    }
    JumpSystem::new(jumps).map_err(|e| AppError::Domain(e.to_string()))
}

#[allow(clippy::too_many_arguments)]
fn cmd_walks(
    class: &str,
    jumps: &str,
    length: usize,
    end: Option<i64>,
    lower: Option<i64>,
    upper: Option<i64>,
    format: OutputFormat,
) -> Result<CmdOutput, AppError> {
    let path_class = parse_class(class)?;
    let system = parse_jumps(jumps)?;
    let bounds = if lower.is_some() || upper.is_some() {
        Some(StripBounds { lower, upper })
    } else {
        None
    };
    let count = count_paths(&system, path_class, length, end, bounds)
        .map_err(|e| AppError::Domain(e.to_string()))?;
    let out = match format {
        OutputFormat::Text => format!("{}\n", count),
        OutputFormat::Csv => {
            let opt = |v: Option<i64>| v.map_or(String::new(), |x| x.to_string());
            format!(
                "class,jumps,length,end,lower,upper,count\n{}\n",
                csv_line([
                    class.to_string(),
                    jumps.to_string(),
                    length.to_string(),
                    opt(end),
                    opt(lower),
                    opt(upper),
                    count.to_string(),
                ])
            )
        }
        OutputFormat::Json => {
            let doc = json!({
                "command": "walks",
                "class": class,
                "jumps": jumps,
                "length": length,
                "end": end,
                "lower": lower,
                "upper": upper,
                "count": count.to_string(),
            });
            format!("{}\n", doc)
        }
        OutputFormat::Bfile => return Err(bfile_not_applicable()),
    };
    Ok(CmdOutput::ok(out))
}

fn cmd_ballot(x: usize, y: usize, format: OutputFormat) -> Result<CmdOutput, AppError> {
    let point = BallotPoint::new(x, y).map_err(|e| AppError::Domain(e.to_string()))?;
    let value = ballot_number(point);
    let out = match format {
        OutputFormat::Text => format!("{}\n", value),
        OutputFormat::Csv => format!("x,y,value\n{},{},{}\n", x, y, value),
        OutputFormat::Json => format!(
            "{}\n",
            json!({"command": "ballot", "x": x, "y": y, "value": value.to_string()})
        ),
        OutputFormat::Bfile => return Err(bfile_not_applicable()),
    };
    Ok(CmdOutput::ok(out))
}

fn cmd_dyck_prefix(n: usize, k: usize, format: OutputFormat) -> Result<CmdOutput, AppError> {
    let value = dyck_prefix_count(n, k).map_err(|e| AppError::Domain(e.to_string()))?;
    let out = match format {
        OutputFormat::Text => format!("{}\n", value),
        OutputFormat::Csv => format!("n,k,value\n{},{},{}\n", n, k, value),
        OutputFormat::Json => format!(
            "{}\n",
            json!({"command": "dyck-prefix", "n": n, "k": k, "value": value.to_string()})
        ),
        OutputFormat::Bfile => return Err(bfile_not_applicable()),
    };
    Ok(CmdOutput::ok(out))
}

fn cmd_ruin(n: u32, horizon: u64, method: &str, format: OutputFormat) -> Result<CmdOutput, AppError> {
    if n == 0 {
        return Err(AppError::Domain("strip half-width must be >= 1".into()));
    }
    if horizon < n as u64 {
        return Err(AppError::Domain(format!(
            "horizon {} is below the first possible absorption round {}",
            horizon, n
        )));
    }
    if !matches!(method, "dp" | "binomial" | "trig" | "all") {
        return Err(AppError::Domain(format!(
            "unknown method '{}' (expected dp, binomial, trig or all)",
            method
        )));
    }

    let dist = duration_distribution(n, horizon);
    let spec = |m| RuinSpec::new(n, m).expect("validated above");

    let mut exit = 0;
    let out = if method == "all" {
        let mut max_dev: f64 = 0.0;
        let mut binomial_agrees = true;
        let mut rows = Vec::new();
        for m in 1..=horizon {
            let dp = dist.prob_at(m);
            let by_sum = ruin_prob_binomial(spec(m));
            let agrees = by_sum == dp;
            binomial_agrees &= agrees;
            let trig = ruin_prob_trig(spec(m));
            let dev = (trig - dp.to_f64().expect("probability fits f64")).abs();
            max_dev = max_dev.max(dev);
            rows.push((m, dp, by_sum, agrees, trig, dev));
        }
        if !binomial_agrees || max_dev > TRIG_TOLERANCE {
            exit = AppError::Mismatch("ruin methods disagree".into()).exit_code();
        }
        match format {
            OutputFormat::Text => {
                let mut s = String::from("m dp binomial agree trig deviation\n");
                for (m, dp, by_sum, agrees, trig, dev) in &rows {
                    writeln!(
                        s,
                        "{} {} {} {} {:.12} {:.3e}",
                        m,
                        rational_str(dp),
                        rational_str(by_sum),
                        if *agrees { "yes" } else { "NO" },
                        trig,
                        dev
                    )
                    .unwrap();
                }
                writeln!(s, "binomial agreement: {}", if binomial_agrees { "pass" } else { "fail" }).unwrap();
                writeln!(s, "max trig deviation: {:.3e}", max_dev).unwrap();
                s
            }
            OutputFormat::Csv => {
                let mut s = String::from("m,dp,binomial,binomial_agrees,trig,trig_deviation\n");
                for (m, dp, by_sum, agrees, trig, dev) in &rows {
                    writeln!(
                        s,
                        "{},{},{},{},{},{}",
                        m,
                        rational_str(dp),
                        rational_str(by_sum),
                        agrees,
                        trig,
                        dev
                    )
                    .unwrap();
                }
                s
            }
            OutputFormat::Json => {
                let json_rows: Vec<_> = rows
                    .iter()
                    .map(|(m, dp, by_sum, agrees, trig, dev)| {
                        json!({
                            "m": m,
                            "dp": rational_str(dp),
                            "binomial": rational_str(by_sum),
                            "binomial_agrees": agrees,
                            "trig": trig,
                            "trig_deviation": dev,
                        })
                    })
                    .collect();
                let doc = json!({
                    "command": "ruin",
                    "n": n,
                    "horizon": horizon,
                    "method": "all",
                    "rows": json_rows,
                    "binomial_agrees": binomial_agrees,
                    "max_trig_deviation": max_dev,
                    "survival": rational_str(dist.survival()),
                });
                format!("{}\n", doc)
            }
            OutputFormat::Bfile => return Err(bfile_not_applicable()),
        }
    } else {
        enum Row {
            Exact(String),
            Float(f64),
        }
        let rows: Vec<(u64, Row)> = (1..=horizon)
            .map(|m| {
                let row = match method {
                    "dp" => Row::Exact(rational_str(&dist.prob_at(m))),
                    "binomial" => Row::Exact(rational_str(&ruin_prob_binomial(spec(m)))),
                    _ => Row::Float(ruin_prob_trig(spec(m))),
                };
                (m, row)
            })
            .collect();
        match format {
            OutputFormat::Text | OutputFormat::Csv => {
                let mut s = if format == OutputFormat::Csv {
                    String::from("m,prob\n")
                } else {
                    String::from("m prob\n")
                };
                let sep = if format == OutputFormat::Csv { "," } else { " " };
                for (m, row) in &rows {
                    match row {
                        Row::Exact(p) => writeln!(s, "{}{}{}", m, sep, p).unwrap(),
                        Row::Float(p) => writeln!(s, "{}{}{:.12}", m, sep, p).unwrap(),
                    }
                }
                if format == OutputFormat::Text && method == "dp" {
                    writeln!(s, "survival after {}: {}", horizon, rational_str(dist.survival()))
                        .unwrap();
                    writeln!(s, "partial mean: {}", rational_str(&dist.partial_mean())).unwrap();
                }
                s
            }
            OutputFormat::Json => {
                let json_rows: Vec<_> = rows
                    .iter()
                    .map(|(m, row)| match row {
                        Row::Exact(p) => json!({"m": m, "prob": p}),
                        Row::Float(p) => json!({"m": m, "prob": p}),
                    })
                    .collect();
                let mut doc = json!({
                    "command": "ruin",
                    "n": n,
                    "horizon": horizon,
                    "method": method,
                    "rows": json_rows,
                });
                if method == "dp" {
                    doc["survival"] = json!(rational_str(dist.survival()));
                    doc["partial_mean"] = json!(rational_str(&dist.partial_mean()));
                }
                format!("{}\n", doc)
            }
            OutputFormat::Bfile => return Err(bfile_not_applicable()),
        }
    };
    Ok(CmdOutput { stdout: out, exit })
}

fn cmd_lead(n: u64, format: OutputFormat) -> Result<CmdOutput, AppError> {
    if n == 0 {
        return Err(AppError::Domain("need at least one pair of games (n >= 1)".into()));
    }
    let value = expected_abs_lead(n);
    let out = match format {
        OutputFormat::Text => format!("{}\n", rational_str(&value)),
        OutputFormat::Csv => format!("n,lead\n{},{}\n", n, rational_str(&value)),
        OutputFormat::Json => format!(
            "{}\n",
            json!({"command": "lead", "n": n, "value": rational_str(&value)})
        ),
        OutputFormat::Bfile => return Err(bfile_not_applicable()),
    };
    Ok(CmdOutput::ok(out))
}

fn cmd_asym(ns: &[u64], terms: u8, profile: bool, format: OutputFormat) -> Result<CmdOutput, AppError> {
    if !(1..=3).contains(&terms) {
        return Err(AppError::Domain("terms must be 1, 2 or 3".into()));
    }
    if ns.contains(&0) {
        return Err(AppError::Domain("the expansion needs n >= 1".into()));
    }
    let out = if profile {
        let rows = asymptotic_error_profile(ns);
        match format {
            OutputFormat::Text | OutputFormat::Csv => {
                let csv = format == OutputFormat::Csv;
                let mut s = if csv {
                    String::from("n,approximation,relative_error,error_times_n_cubed\n")
                } else {
                    String::from("n approximation relative_error error*n^3\n")
                };
                let sep = if csv { "," } else { " " };
                for row in &rows {
                    writeln!(
                        s,
                        "{}{}{:e}{}{:e}{}{:e}",
                        row.n, sep, row.approximation, sep, row.relative_error, sep, row.error_times_n_cubed
                    )
                    .unwrap();
                }
                s
            }
            OutputFormat::Json => {
                let json_rows: Vec<_> = rows
                    .iter()
                    .map(|row| {
                        json!({
                            "n": row.n,
                            "approximation": row.approximation,
                            "relative_error": row.relative_error,
                            "error_times_n_cubed": row.error_times_n_cubed,
                        })
                    })
                    .collect();
                format!("{}\n", json!({"command": "asym", "profile": true, "rows": json_rows}))
            }
            OutputFormat::Bfile => return Err(bfile_not_applicable()),
        }
    } else {
        match format {
            OutputFormat::Text | OutputFormat::Csv => {
                let csv = format == OutputFormat::Csv;
                let mut s = if csv {
                    String::from("n,approximation\n")
                } else {
                    String::new()
                };
                let sep = if csv { "," } else { " " };
                for &n in ns {
                    writeln!(s, "{}{}{:e}", n, sep, central_asymptotic(n, terms)).unwrap();
                }
                s
            }
            OutputFormat::Json => {
                let json_rows: Vec<_> = ns
                    .iter()
                    .map(|&n| json!({"n": n, "approximation": central_asymptotic(n, terms)}))
                    .collect();
                format!(
                    "{}\n",
                    json!({"command": "asym", "terms": terms, "rows": json_rows})
                )
            }
            OutputFormat::Bfile => return Err(bfile_not_applicable()),
        }
    };
    Ok(CmdOutput::ok(out))
}

fn cmd_verify(identity: &str, order: Option<u64>, format: OutputFormat) -> Result<CmdOutput, AppError> {
    let report = run_identity(identity, order)?;
    let out = render_report(&report, format)?;
    let exit = if report.passed() {
        0
    } else {
        AppError::Mismatch(format!("identity '{}' failed", identity)).exit_code()
    };
    Ok(CmdOutput { stdout: out, exit })
}

fn run_identity(identity: &str, order: Option<u64>) -> Result<VerificationReport, AppError> {
    let order_or = |default: u64| order.unwrap_or(default) as usize;
    Ok(match identity {
        "gf-central" => verify_central_gf(order_or(64)),
        "schroeder-algebraic" => verify_schroeder_algebraic(order_or(40)),
        "bridge-decomposition" => {
            let order = order_or(40);
            if order < 2 {
                return Err(AppError::Domain(
                    "bridge-decomposition needs order >= 2".into(),
                ));
            }
            verify_bridge_decomposition(order)
        }
        "p-recurrence" => verify_p_recurrence(order_or(200)),
        "legendre" => verify_legendre(order_or(100)),
        "square-identity" => verify_square_identity_range(0, order_or(200)),
        "ruin-agreement" => verify_agreement(6, order.unwrap_or(60), TRIG_TOLERANCE),
        "ballot-oracle" => {
            let y_max = order_or(10);
            verify_against_enumeration(y_max, y_max + 6)
        }
        other => {
            return Err(AppError::Domain(format!(
                "unknown identity '{}' (see --help for the list)",
                other
            )))
        }
    })
}

fn render_report(report: &VerificationReport, format: OutputFormat) -> Result<String, AppError> {
    Ok(match format {
        OutputFormat::Text => format!("{}\n", report),
        OutputFormat::Csv => {
            let (location, expected, actual) = report
                .first_mismatch()
                .map(|m| (m.location.clone(), m.expected.clone(), m.actual.clone()))
                .unwrap_or_default();
            format!(
                "identity,checked,status,location,expected,actual\n{}\n",
                csv_line([
                    report.identity().to_string(),
                    report.checked().to_string(),
                    if report.passed() { "pass".into() } else { "fail".into() },
                    location,
                    expected,
                    actual,
                ])
            )
        }
        OutputFormat::Json => {
            let mismatch = report.first_mismatch().map(|m| {
                json!({"location": m.location, "expected": m.expected, "actual": m.actual})
            });
            let doc = json!({
                "command": "verify",
                "identity": report.identity(),
                "checked": report.checked(),
                "status": if report.passed() { "pass" } else { "fail" },
                "first_mismatch": mismatch,
            });
            format!("{}\n", doc)
        }
        OutputFormat::Bfile => return Err(bfile_not_applicable()),
    })
}

fn cmd_bench(target: &str, n: usize, repetitions: u32, format: OutputFormat) -> Result<CmdOutput, AppError> {
    if repetitions == 0 {
        return Err(AppError::Usage("repetitions must be >= 1".into()));
    }
    if n == 0 {
        return Err(AppError::Usage("n must be >= 1".into()));
    }
    let algo = match target {
        "central-dp" => CentralAlgorithm::GridDp,
        "central-sum" => CentralAlgorithm::BinomialSum,
        "central-rec" => CentralAlgorithm::PRecurrence,
        "central-series" => CentralAlgorithm::SeriesExtraction,
        other => {
            return Err(AppError::Domain(format!(
                "unknown target '{}' (expected central-dp, central-sum, central-rec or central-series)",
                other
            )))
        }
    };

    let mut durations = Vec::with_capacity(repetitions as usize);
    let mut value = None;
    for _ in 0..repetitions {
        let start = Instant::now();
        let v = lattice_paths::delannoy::central_delannoy(n, algo);
        durations.push(start.elapsed());
        value = Some(v);
    }
    durations.sort();
    let median = durations[durations.len() / 2];
    let value = value.expect("at least one repetition");
    let fingerprint = digest(&value);

    let out = match format {
        OutputFormat::Text => format!(
            "target={} n={} repetitions={} median={:?} value={}\n",
            target, n, repetitions, median, fingerprint
        ),
        OutputFormat::Csv => format!(
            "target,n,repetitions,median_ns,digest\n{},{},{},{},{}\n",
            target,
            n,
            repetitions,
            median.as_nanos(),
            fingerprint
        ),
        OutputFormat::Json => format!(
            "{}\n",
            json!({
                "command": "bench",
                "target": target,
                "n": n,
                "repetitions": repetitions,
                "median_ns": median.as_nanos() as u64,
                "digest": fingerprint,
            })
        ),
        OutputFormat::Bfile => return Err(bfile_not_applicable()),
    };
    Ok(CmdOutput::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_the_contract() {
        assert_eq!(AppError::Usage("x".into()).exit_code(), 1);
        assert_eq!(AppError::Domain("x".into()).exit_code(), 2);
        assert_eq!(AppError::Mismatch("x".into()).exit_code(), 3);
    }

    #[test]
    fn verify_exit_is_three_on_failed_report() {
        // no built-in identity can fail honestly, so pin the mapping on a
        // synthetic report
        let report = VerificationReport::fail(
            "synthetic",
            "nothing",
            lattice_paths::Mismatch {
                location: "z^0".into(),
                expected: "1".into(),
                actual: "0".into(),
            },
        );
        let exit = if report.passed() { 0 } else { 3 };
        assert_eq!(exit, 3);
        let rendered = render_report(&report, OutputFormat::Json).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&rendered).unwrap();
        assert_eq!(doc["status"], "fail");
        assert_eq!(doc["first_mismatch"]["location"], "z^0");
    }

    #[test]
    fn unknown_selectors_are_domain_errors() {
        assert!(matches!(parse_algorithm("fast"), Err(AppError::Domain(_))));
        assert!(matches!(parse_class("loop"), Err(AppError::Domain(_))));
        assert!(matches!(run_identity("nope", None), Err(AppError::Domain(_))));
    }

    #[test]
    fn jump_parsing() {
        let js = parse_jumps("1:1,1:-1,2:0").unwrap();
        assert_eq!(js.jumps().len(), 3);
        assert!(matches!(parse_jumps("1;1"), Err(AppError::Domain(_))));
        assert!(matches!(parse_jumps("0:1"), Err(AppError::Domain(_))));
        assert!(matches!(parse_jumps("1:1,1:1"), Err(AppError::Domain(_))));
    }
}
