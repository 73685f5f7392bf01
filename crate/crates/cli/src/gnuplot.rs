//! Plotting scripts for figure sweeps.

use std::fmt::Write;

/// One plotted series: a column against purity, filtered by family.
struct Series<'a> {
    column: usize,
    family: &'a str,
    filters: Vec<(usize, String)>,
    title: String,
}

fn family_guard(family: &str) -> String {
    format!("strcol(2) eq \"{family}\"")
}

fn render(
    data: &str,
    title: &str,
    ylabel: &str,
    log: bool,
    purity_col: usize,
    series: &[Series],
) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "set datafile separator ','");
    let _ = writeln!(s, "set title '{title}'");
    let _ = writeln!(s, "set xlabel 'purity P'");
    let _ = writeln!(s, "set ylabel '{ylabel}'");
    if log {
        let _ = writeln!(s, "set logscale xy");
        let _ = writeln!(s, "set format y '10^{{%L}}'");
    }
    let plots: Vec<String> = series
        .iter()
        .map(|p| {
            let mut guard = family_guard(p.family);
            for (col, value) in &p.filters {
                let _ = write!(guard, " && strcol({col}) eq \"{value}\"");
            }
            let style = if p.family == "uniform" { "points pt 7" } else { "lines lw 2" };
            format!(
                "'{data}' skip 1 using {purity_col}:(({guard}) ? ${} : 1/0) with {style} title '{}'",
                p.column, p.title
            )
        })
        .collect();
    let _ = writeln!(s, "plot {}", plots.join(", \\\n     "));
    s
}

pub fn figure3(data: &str, log: bool) -> String {
    let series: Vec<Series> = ["peaked", "uniform"]
        .into_iter()
        .map(|family| Series {
            column: 4,
            family,
            filters: Vec::new(),
            title: format!("Fock component, {family}"),
        })
        .collect();
    render(
        data,
        "coboson component after splitting",
        "population",
        log,
        3,
        &series,
    )
}

/// One curve per `(M, n2)` and family. Column layout follows the fig 4/5 CSV.
pub fn postselection(data: &str, n: usize, ms: &[usize], log: bool) -> String {
    let mut series = Vec::new();
    for &m in ms {
        for n2 in 0..=n - m + 1 {
            for family in ["peaked", "uniform"] {
                series.push(Series {
                    column: 7,
                    family,
                    filters: vec![(4, m.to_string()), (5, n2.to_string())],
                    title: format!("M={m} ({n2},{}) {family}", n - m + 1 - n2),
                });
            }
        }
    }
    render(
        data,
        &format!("post-selected interference, N={n}"),
        "post-selected probability",
        log,
        3,
        &series,
    )
}

pub fn figure6(data: &str, ns: &[usize], log: bool) -> String {
    let mut series = Vec::new();
    for n in ns {
        for family in ["peaked", "uniform"] {
            series.push(Series {
                column: 4,
                family,
                filters: vec![(1, n.to_string())],
                title: format!("N={n} {family}"),
            });
        }
    }
    render(
        data,
        "coincidence after post-selection",
        "coincidence probability",
        log,
        3,
        &series,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn script_reads_the_data_file() {
        let s = figure6("dip.csv", &[2, 50], true);
        assert!(s.contains("strcol(1) eq \"50\""));
        assert!(s.contains("'dip.csv'"));
        assert!(s.contains("set logscale xy"));
        assert!(s.contains("strcol(2) eq \"uniform\""));
    }
}
