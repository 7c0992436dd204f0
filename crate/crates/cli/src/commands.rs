use std::fs;
use std::io::{self, Write};
use std::path::Path;

use granulab::calculi::{check_axioms, AxiomReport};
use granulab::closure::{diff_count, ExperimentConfig};
use granulab::fuzznum::extend_binary;
use granulab::plot::termset_svg;
use granulab::report::{csv_record, fmt_sig, markdown_table, round_sig};
use granulab::{
    approximate, closure_table, equivalence_classes, run_experiment, CalculusSpec, FuzzyNumber,
    HasFeatures, Negation, TNorm, TermSet, UnitFuzzyNumber,
};
use serde_json::json;

use crate::args::*;
use crate::config::{FileConfig, Settings};
use crate::failure::{CmdResult, Context, Failure};

pub fn run(cli: Cli) -> CmdResult {
    let file = FileConfig::load(cli.config.as_deref())?;
    match cli.command {
        Command::Termset(TermsetCommand::List) => termset_list(),
        Command::Termset(TermsetCommand::Show { name, output }) => termset_show(&name, &output),
        Command::Eval(args) => eval(&file, &args),
        Command::Closure(args) => closure(&file, &args),
        Command::Compare(args) => compare(&file, &args),
        Command::Classes(args) => classes(&file, &args),
        Command::Experiment(args) => experiment(&file, &args),
        Command::Axioms(args) => axioms(&args),
    }
}

fn emit(text: &str, out: Option<&Path>) -> CmdResult {
    match out {
        Some(path) => fs::write(path, text).context(format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
            {
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                r => r.context("writing to standard output"),
            }
        }
    }
}

fn format_of(output: &Output, default: Format, allowed: &[Format]) -> CmdResult<Format> {
    let f = output.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::usage(
            format!("format {f:?} is not available here").to_lowercase(),
        ))
    }
}

fn tnorm(selector: &str) -> CmdResult<TNorm> {
    selector
        .parse::<TNorm>()
        .context(format!("selector {selector:?}"))
}

fn json_text(value: &impl serde::Serialize) -> CmdResult<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn termset_list() -> CmdResult {
    let rows = TermSet::BUILTIN_NAMES
        .iter()
        .map(|name| {
            let ts = TermSet::builtin(name)?;
            Ok(vec![
                name.to_string(),
                ts.len().to_string(),
                ts.labels().collect::<Vec<_>>().join(", "),
            ])
        })
        .collect::<CmdResult<Vec<_>>>()?;
    emit(&markdown_table(&["name", "terms", "labels"], &rows), None)
}

fn termset_show(name: &str, output: &Output) -> CmdResult {
    let ts = TermSet::resolve(name)?;
    let format = format_of(
        output,
        Format::Md,
        &[Format::Md, Format::Csv, Format::Json, Format::Svg],
    )?;
    let header = ["label", "a", "b", "alpha", "beta", "centroid", "area"];
    let rows: Vec<Vec<String>> = ts
        .terms()
        .iter()
        .map(|t| {
            let (a, b, alpha, beta) = t.semantics.get().tuple();
            let f = t.semantics.features();
            let mut row = vec![t.label.clone()];
            row.extend([a, b, alpha, beta, f.centroid, f.area].map(fmt_sig));
            row
        })
        .collect();
    let text = match format {
        Format::Md => format!("{}\n\n{}", ts.name(), markdown_table(&header, &rows)),
        Format::Csv => std::iter::once(csv_record(&header))
            .chain(rows.iter().map(|r| csv_record(r)))
            .map(|line| line + "\n")
            .collect(),
        Format::Json => {
            let mut buf = Vec::new();
            ts.to_writer(&mut buf)?;
            String::from_utf8(buf).expect("serde_json writes UTF-8") + "\n"
        }
        Format::Svg => termset_svg(&ts),
    };
    emit(&text, output.out.as_deref())
}

/// A term label, or `a,b,alpha,beta` with optional parentheses.
fn operand(arg: &str, ts: &TermSet) -> CmdResult<FuzzyNumber> {
    if !arg.contains(',') {
        return Ok(ts.lookup(arg)?.semantics.get());
    }
    let inner = arg.trim().trim_start_matches('(').trim_end_matches(')');
    let nums = inner
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Failure::usage(format!("{arg:?} is neither a label nor a,b,alpha,beta")))?;
    let [a, b, alpha, beta] = nums[..] else {
        return Err(Failure::usage(format!(
            "{arg:?} needs exactly four numbers"
        )));
    };
    Ok(UnitFuzzyNumber::from_tuple(a, b, alpha, beta)
        .context(format!("operand {arg:?}"))?
        .get())
}

fn eval(file: &FileConfig, args: &EvalArgs) -> CmdResult {
    let t = tnorm(&args.selector)?;
    if let Some(ab) = &args.scalar {
        let v = t.eval_checked(ab[0], ab[1])?;
        return emit(&format!("{}\n", fmt_sig(v)), args.output.out.as_deref());
    }
    let [x, y] = args.args.as_slice() else {
        return Err(Failure::usage("eval needs two operands or --scalar A B"));
    };
    let format = format_of(
        &args.output,
        Format::Md,
        &[Format::Md, Format::Csv, Format::Json],
    )?;
    let settings = Settings::new(file, &args.approx)?;
    let ts = &settings.termset;
    let (xn, yn) = (operand(x, ts)?, operand(y, ts)?);
    if !t.is_continuous() {
        return Err(Failure::validation(format!(
            "{t} is discontinuous and cannot be applied to fuzzy operands"
        )));
    }
    let f = |u: f64, v: f64| t.eval(u.clamp(0.0, 1.0), v.clamp(0.0, 1.0));
    let result = extend_binary(f, &xn, &yn, settings.resolution)?;
    let features = result.features();
    let approx = approximate(&result, ts, &settings.approx);
    let (support, core) = (result.support(), result.core());
    let interval = |i: granulab::Interval| format!("[{}, {}]", fmt_sig(i.lo), fmt_sig(i.hi));
    let text = match format {
        Format::Md => {
            let rows = vec![
                vec!["label".into(), approx.term.label.clone()],
                vec!["distance".into(), fmt_sig(approx.distance)],
                vec!["centroid".into(), fmt_sig(features.centroid)],
                vec!["area".into(), fmt_sig(features.area)],
                vec!["support".into(), interval(support)],
                vec!["core".into(), interval(core)],
            ];
            format!(
                "{t}({x}, {y}) on {}\n\n{}",
                ts.name(),
                markdown_table(&["", "value"], &rows)
            )
        }
        Format::Csv => {
            let mut buf = Vec::new();
            result.write_csv(&mut buf)?;
            String::from_utf8(buf).expect("CSV output is UTF-8")
        }
        _ => json_text(&json!({
            "tnorm": t.to_string(),
            "termset": ts.name(),
            "operands": [x, y],
            "label": approx.term.label,
            "index": approx.index,
            "distance": round_sig(approx.distance),
            "features": {"centroid": round_sig(features.centroid), "area": round_sig(features.area)},
            "support": [round_sig(support.lo), round_sig(support.hi)],
            "core": [round_sig(core.lo), round_sig(core.hi)],
        }))?,
    };
    emit(&text, args.output.out.as_deref())
}

fn closure(file: &FileConfig, args: &ClosureArgs) -> CmdResult {
    let t = tnorm(&args.tnorm)?;
    let format = format_of(
        &args.output,
        Format::Md,
        &[Format::Md, Format::Csv, Format::Json],
    )?;
    let s = Settings::new(file, &args.approx)?;
    let table = closure_table(&t, &s.termset, &s.approx, s.resolution)?;
    let text = match format {
        Format::Md => table.to_markdown(),
        Format::Csv => table.to_csv(),
        _ => json_text(&table)?,
    };
    emit(&text, args.output.out.as_deref())
}

fn compare(file: &FileConfig, args: &CompareArgs) -> CmdResult {
    let [a, b] = args.tnorm.as_slice() else {
        return Err(Failure::usage(
            "compare needs exactly two --tnorm selectors",
        ));
    };
    let (ta, tb) = (tnorm(a)?, tnorm(b)?);
    let format = format_of(
        &args.output,
        Format::Json,
        &[Format::Md, Format::Csv, Format::Json],
    )?;
    let s = Settings::new(file, &args.approx)?;
    let first = closure_table(&ta, &s.termset, &s.approx, s.resolution)?;
    let second = closure_table(&tb, &s.termset, &s.approx, s.resolution)?;
    let diff = diff_count(&first, &second)?;
    let cells = first.comparable_cells();
    let percent = fmt_sig(100.0 * diff.percent);
    let text = match format {
        Format::Md => format!(
            "{} vs {} on {}: {} of {cells} cells differ ({percent}%)\n",
            diff.pair[0],
            diff.pair[1],
            s.termset.name(),
            diff.count
        ),
        Format::Csv => format!(
            "{}\n{}\n",
            csv_record(&["a", "b", "termset", "count", "cells", "percent"]),
            csv_record(&[
                diff.pair[0].clone(),
                diff.pair[1].clone(),
                s.termset.name().to_string(),
                diff.count.to_string(),
                cells.to_string(),
                percent,
            ])
        ),
        _ => json_text(&json!({
            "pair": diff.pair,
            "termset": s.termset.name(),
            "count": diff.count,
            "cells": cells,
            "percent": round_sig(diff.percent),
        }))?,
    };
    emit(&text, args.output.out.as_deref())
}

/// `0.155` or `15.5%`.
fn parse_threshold(s: &str) -> CmdResult<f64> {
    let (num, scale) = match s.trim().strip_suffix('%') {
        Some(p) => (p, 100.0),
        None => (s.trim(), 1.0),
    };
    num.trim()
        .parse::<f64>()
        .map(|v| v / scale)
        .map_err(|_| Failure::usage(format!("threshold {s:?} is not a number or percentage")))
}

fn classes(file: &FileConfig, args: &ClassesArgs) -> CmdResult {
    let threshold = parse_threshold(&args.threshold)?;
    let tnorms = if args.tnorm.is_empty() {
        ExperimentConfig::paper().tnorms
    } else {
        args.tnorm
            .iter()
            .map(|s| tnorm(s))
            .collect::<CmdResult<_>>()?
    };
    let format = format_of(&args.output, Format::Md, &[Format::Md, Format::Json])?;
    let s = Settings::new(file, &args.approx)?;
    let partition = equivalence_classes(&tnorms, &s.termset, &s.approx, s.resolution, threshold)?;
    let text = match format {
        Format::Md => {
            let noun = if partition.len() == 1 {
                "class"
            } else {
                "classes"
            };
            let mut out = format!(
                "{} {noun} on {} at threshold {}\n\n",
                partition.len(),
                s.termset.name(),
                fmt_sig(threshold)
            );
            for (i, class) in partition.classes.iter().enumerate() {
                out += &format!("{}. {{{}}}\n", i + 1, class.join(", "));
            }
            out
        }
        _ => json_text(&json!({
            "termset": s.termset.name(),
            "threshold": round_sig(partition.threshold),
            "classes": partition.classes,
        }))?,
    };
    emit(&text, args.output.out.as_deref())
}

fn experiment(file: &FileConfig, args: &ExperimentArgs) -> CmdResult {
    let mut cfg = ExperimentConfig::preset(&args.preset).ok_or_else(|| {
        Failure::usage(format!(
            "unknown preset {:?} (available: paper)",
            args.preset
        ))
    })?;
    cfg.approx = file.approx(args.weights.as_deref())?;
    cfg.resolution = file.resolution(args.resolution);
    let report = run_experiment(&cfg)?;
    fs::create_dir_all(&args.out).context(format!("creating {}", args.out.display()))?;
    let written = report.write_dir(&args.out)?;
    eprintln!("wrote {} files to {}", written.len(), args.out.display());
    emit(&report.summary_markdown(), None)
}

fn grid_points(n: usize) -> Vec<f64> {
    (0..n).map(|i| i as f64 / (n - 1) as f64).collect()
}

/// Ladder rungs the selector coincides with on the grid.
fn ladder_matches(t: &TNorm, grid: usize) -> Vec<String> {
    let pts = grid_points(grid);
    TNorm::LADDER
        .iter()
        .filter(|rung| {
            pts.iter().all(|&a| {
                pts.iter()
                    .all(|&b| (rung.eval(a, b) - t.eval(a, b)).abs() <= 1e-12)
            })
        })
        .map(ToString::to_string)
        .collect()
}

fn axioms(args: &AxiomsArgs) -> CmdResult {
    if args.grid < 3 {
        return Err(Failure::usage(format!(
            "--grid needs at least 3 points (got {})",
            args.grid
        )));
    }
    if !(args.tolerance >= 0.0) {
        return Err(Failure::usage("--tolerance must be nonnegative"));
    }
    let t = tnorm(&args.selector)?;
    let format = format_of(&args.output, Format::Md, &[Format::Md, Format::Json])?;
    let spec = CalculusSpec::demorgan(t, Negation::Standard);
    let tr = check_axioms(&spec.tnorm, args.grid)?;
    let sr = check_axioms(&spec.tconorm, args.grid)?;
    let gap = spec.duality_gap(args.grid);
    let matches = ladder_matches(&t, args.grid);
    let ok = tr.passes(args.tolerance) && sr.passes(args.tolerance) && gap <= args.tolerance;

    let text = match format {
        Format::Md => {
            let verdict = |r: &AxiomReport| {
                if r.passes(args.tolerance) {
                    "pass"
                } else {
                    "FAIL"
                }
            };
            let row = |name: String, r: &AxiomReport| {
                let mut row = vec![name];
                row.extend(
                    [r.boundary, r.commutativity, r.monotonicity, r.associativity].map(fmt_sig),
                );
                row.push(verdict(r).to_string());
                row
            };
            let table = markdown_table(
                &[
                    "operator",
                    "boundary",
                    "commutativity",
                    "monotonicity",
                    "associativity",
                    "verdict",
                ],
                &[
                    row(spec.tnorm.to_string(), &tr),
                    row(spec.tconorm.to_string(), &sr),
                ],
            );
            let mut out = format!("Axioms of {t} on a {0}x{0} grid\n\n{table}\n", args.grid);
            out += &format!("duality gap under {}: {}\n", spec.negation, fmt_sig(gap));
            if !matches.is_empty() {
                out += &format!("equals {} on the grid\n", matches.join(", "));
            }
            out += if ok {
                "result: pass\n"
            } else {
                "result: FAIL\n"
            };
            out
        }
        _ => json_text(&json!({
            "tnorm": t.to_string(),
            "tconorm": spec.tconorm.to_string(),
            "grid": args.grid,
            "tolerance": round_sig(args.tolerance),
            "tnorm_report": tr,
            "tconorm_report": sr,
            "duality_gap": round_sig(gap),
            "equals": matches,
            "passes": ok,
        }))?,
    };
    emit(&text, args.output.out.as_deref())?;
    if ok {
        Ok(())
    } else {
        Err(Failure::axioms(format!(
            "{t} violates the axioms beyond {}",
            args.tolerance
        )))
    }
}
