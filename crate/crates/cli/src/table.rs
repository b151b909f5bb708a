//! Plain-text rendering of reports for the terminal.

use std::fmt::Write;

use faircut::format::Frac;

use crate::report::{CheckRecord, Report, RunRecord, SummaryRecord};

/// Left-aligned columns padded to the widest cell.
fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell:<w$}  ");
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    line(widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>().iter().map(String::as_str).collect());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn heading(report: &Report) -> String {
    let mut s = String::new();
    if let Some(inst) = &report.instance {
        let _ = writeln!(
            s,
            "{}: {} vertices, {} edges, {} {} groups, {} utilities",
            inst.label,
            inst.vertices,
            inst.edges.len(),
            inst.groups.len(),
            inst.partition,
            inst.model
        );
    }
    s
}

fn summary_line(summary: &Option<SummaryRecord>) -> String {
    match summary {
        Some(s) => format!("{} passed, {} failed, {} skipped\n", s.passed, s.failed, s.skipped),
        None => String::new(),
    }
}

/// Fractions that came from floating-point data have enormous denominators;
/// those read better as decimals.
fn short(f: &Frac) -> String {
    if f.0.denom().bits() > 40 {
        format!("~{:.6}", faircut::rational::to_f64(&f.0))
    } else {
        f.to_string()
    }
}

fn checks_block(checks: &[CheckRecord], failures_only: bool) -> String {
    let rows: Vec<Vec<String>> = checks
        .iter()
        .filter(|c| !failures_only || c.verdict != "pass")
        .map(|c| {
            vec![
                c.verdict.to_uppercase(),
                c.claim.clone(),
                c.context.clone(),
                c.statement.clone(),
                c.lhs.as_ref().map_or("-".into(), short),
                c.relation.clone(),
                c.rhs.as_ref().map_or("-".into(), short),
            ]
        })
        .collect();
    if rows.is_empty() {
        return String::new();
    }
    grid(&["verdict", "claim", "context", "statement", "lhs", "rel", "rhs"], &rows)
}

pub fn solve(report: &Report, approx: bool) -> String {
    let mut out = heading(report);
    let rows: Vec<Vec<String>> = report
        .objectives
        .iter()
        .map(|o| {
            let mut row = vec![o.name.clone(), o.value.to_string()];
            if approx {
                row.push(o.approx.map_or(String::new(), |x| format!("{x:.6}")));
            }
            let how = match &o.witness {
                Some(w) => format!("cut {w}"),
                None => {
                    o.lottery.iter().map(|e| format!("{} w.p. {}", e.cut, e.probability)).collect::<Vec<_>>().join("; ")
                }
            };
            row.push(how);
            row
        })
        .collect();
    let header: &[&str] =
        if approx { &["objective", "value", "approx", "attained by"] } else { &["objective", "value", "attained by"] };
    out.push_str(&grid(header, &rows));
    if !report.checks.is_empty() {
        out.push('\n');
        out.push_str(&checks_block(&report.checks, false));
        out.push_str(&summary_line(&report.summary));
    }
    out
}

pub fn run(report: &Report, approx: bool) -> String {
    let mut out = heading(report);
    let dec = |f: &faircut::format::Frac| {
        if approx {
            format!("{f} (~{:.6})", faircut::rational::to_f64(&f.0))
        } else {
            f.to_string()
        }
    };
    match &report.run {
        Some(RunRecord::SeparateSolve { oracle_cuts, alpha, groups, guarantee, per_group, minimum }) => {
            let _ = writeln!(out, "separate-solve: uniform lottery over {} oracle cuts", oracle_cuts.len());
            let rows: Vec<Vec<String>> = oracle_cuts
                .iter()
                .zip(per_group)
                .enumerate()
                .map(|(i, (c, p))| vec![i.to_string(), c.clone(), dec(p)])
                .collect();
            out.push_str(&grid(&["group", "oracle cut", "expected proportion"], &rows));
            let _ = writeln!(out, "alpha = {}, groups = {groups}, alpha/groups = {}", dec(alpha), dec(guarantee));
            let _ = writeln!(out, "worst group = {}", dec(minimum));
        }
        Some(RunRecord::NaiveRandom { trials, groups }) => {
            let _ = writeln!(out, "naive random cuts: {trials} trials");
            let rows: Vec<Vec<String>> = groups
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    vec![
                        i.to_string(),
                        g.size.to_string(),
                        dec(&g.mean),
                        dec(&g.variance),
                        format!("{:.6}", g.sample_mean),
                        format!("{:.6}", g.sample_variance),
                    ]
                })
                .collect();
            out.push_str(&grid(&["group", "size", "mean", "variance", "sample mean", "sample variance"], &rows));
        }
        Some(RunRecord::LocalSearch { cut, cut_value, per_group, minimum, degree_floor }) => {
            let _ = writeln!(out, "local search from the empty cut: {cut} (value {cut_value})");
            let rows: Vec<Vec<String>> =
                per_group.iter().enumerate().map(|(i, p)| vec![i.to_string(), dec(p)]).collect();
            out.push_str(&grid(&["group", "proportion"], &rows));
            let _ = writeln!(out, "worst group = {}", dec(minimum));
            if let Some(f) = degree_floor {
                let _ = writeln!(out, "degree floor = {}", dec(f));
            }
        }
        Some(RunRecord::Gw {
            source,
            samples,
            sdp_objective,
            edges,
            expected_per_group,
            sampled_per_group,
            sampled_minimum,
            best_sampled_cut,
            best_sampled_value,
        }) => {
            let _ = writeln!(out, "hyperplane rounding: {samples} samples, embedding from {source}");
            let _ = writeln!(out, "relaxation objective = {sdp_objective:.6}");
            let rows: Vec<Vec<String>> = edges
                .iter()
                .map(|e| {
                    vec![
                        format!("({},{})", e.edge.0, e.edge.1),
                        e.exact.as_ref().map_or_else(|| format!("{:.6}", e.analytic_probability), ToString::to_string),
                        format!("{:.6}", e.sampled_frequency),
                    ]
                })
                .collect();
            out.push_str(&grid(&["edge", "crossing probability", "sampled frequency"], &rows));
            let rows: Vec<Vec<String>> = expected_per_group
                .iter()
                .zip(sampled_per_group)
                .enumerate()
                .map(|(i, (x, s))| vec![i.to_string(), format!("{x:.6}"), dec(s)])
                .collect();
            out.push_str(&grid(&["group", "expected proportion", "sampled proportion"], &rows));
            let _ = writeln!(out, "worst sampled group = {}", dec(sampled_minimum));
            let _ = writeln!(out, "best sampled cut = {best_sampled_cut} (value {best_sampled_value})");
        }
        None => {}
    }
    if !report.checks.is_empty() {
        out.push('\n');
        out.push_str(&checks_block(&report.checks, false));
        out.push_str(&summary_line(&report.summary));
    }
    out
}

/// Only failures are listed; passing suites reduce to a count.
pub fn verify(report: &Report) -> String {
    let mut out = checks_block(&report.checks, true);
    out.push_str(&summary_line(&report.summary));
    out
}

pub fn reproduce(report: &Report) -> String {
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            vec![r.key.clone(), r.measured.clone(), r.relation.clone(), r.reference.clone(), r.verdict.to_uppercase()]
        })
        .collect();
    let mut out = grid(&["quantity", "measured", "rel", "reference", "verdict"], &rows);
    out.push_str(&summary_line(&report.summary));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_pads_to_widest_cell() {
        let text = grid(&["a", "bb"], &[vec!["long".into(), "x".into()]]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines, ["a     bb", "----  --", "long  x"]);
    }

    #[test]
    fn float_derived_fractions_print_as_decimals() {
        let f = Frac(faircut::rational::rat(1, 3));
        assert_eq!(short(&f), "1/3");
        let tiny = Frac(faircut::Rational::new(1.into(), (1i64 << 50).into()));
        assert!(short(&tiny).starts_with('~'));
    }
}
