//! One function per subcommand, each producing a CSV table.

use std::fs;
use std::path::PathBuf;

use coboson::cascade::{
    bosonic_limit, distinguishable_limit, postselected_distribution, q_int, q_spl,
    triple_distribution, BunchingComparison,
};
use coboson::figures::{dip_sweep, postselect_sweep, split_sweep, PurityGrid, Spacing};
use coboson::interference::{pair_interference, superposition_weights};
use coboson::ladder::{commutator_expectation, delta_expectation, epsilon_norm};
use coboson::splitting::{p_bif, p_hom_split, split_decomposition};
use coboson::validate::{default_matrix, run_suite, worst, Case, FAILURE_THRESHOLD};

use crate::dist::{DistSpec, Source};
use crate::failure::Failure;
use crate::table::{float, opt_count, opt_float, Table};
use crate::{gnuplot, FigureArgs, Which};

/// A rendered table plus diagnostics for standard error.
pub struct Outcome {
    pub table: Table,
    pub notes: Vec<String>,
    pub failure: Option<Failure>,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Self {
            table,
            notes: Vec::new(),
            failure: None,
        }
    }
}

pub fn chi(spec: &DistSpec, nmax: usize) -> Result<Outcome, Failure> {
    let t = Source::resolve(spec)?.table(nmax + 1)?;
    let mut out = Table::new(&["N", "chi", "ratio"]);
    for n in 0..=nmax {
        let ratio = t.ratio(n).ok().map(|r| r.value());
        out.push(vec![n.to_string(), float(t.chi(n)?), opt_float(ratio)]);
    }
    Ok(out.into())
}

pub fn ladder(spec: &DistSpec, nmax: usize) -> Result<Outcome, Failure> {
    let t = Source::resolve(spec)?.table(nmax + 1)?;
    let mut out = Table::new(&["N", "commutator", "delta", "epsilon_norm"]);
    for n in 0..=nmax {
        if t.require_positive(n).is_err() {
            break;
        }
        let eps = if n == 0 {
            None
        } else {
            Some(epsilon_norm(&t, n)?)
        };
        out.push(vec![
            n.to_string(),
            float(commutator_expectation(&t, n)?),
            float(delta_expectation(&t, n)?),
            opt_float(eps),
        ]);
    }
    Ok(out.into())
}

pub fn split(spec: &DistSpec, n: usize, sites: Option<&[usize]>) -> Result<Outcome, Failure> {
    let source = Source::resolve(spec)?;
    let t = source.table(n + 1)?;
    let decomposition = split_decomposition(&t, n)?;
    let bif = match sites {
        None => None,
        Some(sites) => {
            if sites.contains(&0) {
                return Err(Failure::Usage("--sites are numbered from 1".into()));
            }
            if sites.len() > n {
                return Err(Failure::Usage(format!(
                    "{} sites given for N = {n} bifermions",
                    sites.len()
                )));
            }
            let zero_based: Vec<usize> = sites.iter().map(|s| s - 1).collect();
            Some((sites.len(), p_bif(&source.distribution()?, n, &zero_based)?))
        }
    };
    let mut header = vec!["M", "fock_weight", "orth_weight", "binomial"];
    if bif.is_some() {
        header.push("p_bif");
    }
    let mut out = Table::new(&header);
    for m in 0..=n {
        let mut row = vec![
            m.to_string(),
            float(decomposition.fock_weight[m]),
            float(decomposition.orth_weight[m]),
            float(p_hom_split(n, m)?),
        ];
        if let Some((size, p)) = bif {
            row.push(if size == m { float(p) } else { String::new() });
        }
        out.push(row);
    }
    Ok(out.into())
}

pub fn interfere(spec: &DistSpec, n1: usize, n2: usize, weights: bool) -> Result<Outcome, Failure> {
    let d = Source::resolve(spec)?.distribution()?;
    if weights {
        let w = superposition_weights(&d, n1, n2)?;
        let mut out = Table::new(&["p", "weight"]);
        for (p, value) in w.w.iter().enumerate() {
            out.push(vec![p.to_string(), float(*value)]);
        }
        return Ok(out.into());
    }
    let dist = pair_interference(&d, n1, n2)?;
    let mut out = Table::new(&["m", "probability"]);
    for (m, p) in dist.iter() {
        out.push(vec![m.to_string(), float(p)]);
    }
    Ok(out.into())
}

pub fn cascade(
    spec: &DistSpec,
    n: usize,
    postselect: Option<usize>,
    show_published: bool,
) -> Result<Outcome, Failure> {
    let t = Source::resolve(spec)?.table(n + 1)?;
    let Some(m) = postselect else {
        let ratio = t.ratio(n)?;
        let mut out = Table::new(&["n1", "n2", "n3", "q_spl", "q_int", "probability"]);
        for (o, p) in triple_distribution(&t, n)?.iter() {
            out.push(vec![
                o.n1.to_string(),
                o.n2.to_string(),
                o.n3.to_string(),
                float(q_spl(&t, n, *o)?),
                float(q_int(n, *o, ratio)?),
                float(p),
            ]);
        }
        return Ok(out.into());
    };

    let post = postselected_distribution(&t, n, m)?;
    let bunching = BunchingComparison::new(t.ratio(n)?);
    let comparable = n == 2 && m == 1;
    let mut header = vec!["n2", "n3", "probability", "bosonic", "distinguishable"];
    if show_published {
        header.push("published");
    }
    let mut out = Table::new(&header);
    for ((n2, n3), p) in post.iter() {
        let mut row = vec![
            n2.to_string(),
            n3.to_string(),
            float(p),
            float(bosonic_limit(n, m, *n2)),
            float(distinguishable_limit(n, m, *n2)),
        ];
        if show_published {
            let published = comparable.then_some(if *n2 == 1 { p } else { bunching.published });
            row.push(opt_float(published));
        }
        out.push(row);
    }
    let mut outcome = Outcome::from(out);
    if show_published {
        outcome.notes.push(if comparable {
            bunching.to_string()
        } else {
            "published values exist only for N = 2, M = 1".to_string()
        });
    }
    Ok(outcome)
}

fn single_n(args: &FigureArgs, default: usize) -> Result<usize, Failure> {
    match args.n.as_deref() {
        None => Ok(default),
        Some([n]) => Ok(*n),
        Some(_) => Err(Failure::Usage("this figure takes a single --n".into())),
    }
}

fn grid(args: &FigureArgs, default_stop: f64) -> Result<PurityGrid, Failure> {
    let spacing = if args.log {
        Spacing::Log
    } else {
        Spacing::Linear
    };
    let start = match (args.p_start, args.log) {
        (None, true) => Some(1e-12),
        (start, _) => start,
    };
    PurityGrid::new(
        start,
        args.p_stop.unwrap_or(default_stop),
        args.points,
        spacing,
    )
    .map_err(|e| Failure::Usage(e.to_string()))
}

pub fn figure(args: &FigureArgs, output: Option<&PathBuf>) -> Result<Outcome, Failure> {
    let data_name = output
        .map(|p| p.display().to_string())
        .unwrap_or_else(|| format!("figure{}.csv", figure_number(args.which)));
    let (out, script) = match args.which {
        Which::Three => {
            let n = single_n(args, 6)?;
            let mut out = Table::new(&["N", "family", "P", "fock_total", "orth_total", "S"]);
            for row in split_sweep(n, &grid(args, 1.0)?)? {
                out.push(vec![
                    row.n.to_string(),
                    row.family.to_string(),
                    float(row.purity),
                    float(row.fock_total),
                    float(row.orth_total),
                    opt_count(row.modes),
                ]);
            }
            (out, gnuplot::figure3(&data_name, args.log))
        }
        Which::Four | Which::Five => {
            let (n, ms) = if args.which == Which::Four {
                (single_n(args, 2)?, vec![1])
            } else {
                let n = single_n(args, 4)?;
                (n, (1..=3.min(n)).collect())
            };
            let mut header = vec![
                "N",
                "family",
                "P",
                "M",
                "n2",
                "n3",
                "postselected",
                "usual",
                "bosonic",
                "distinguishable",
            ];
            if args.show_published_values {
                header.push("published");
            }
            header.push("S");
            let mut out = Table::new(&header);
            for row in postselect_sweep(n, &ms, &grid(args, 1.0)?)? {
                let mut fields = vec![
                    row.n.to_string(),
                    row.family.to_string(),
                    float(row.purity),
                    row.m.to_string(),
                    row.n2.to_string(),
                    row.n3.to_string(),
                    float(row.postselected),
                    float(row.usual),
                    float(row.bosonic),
                    float(row.distinguishable),
                ];
                if args.show_published_values {
                    fields.push(opt_float(row.published));
                }
                fields.push(opt_count(row.modes));
                out.push(fields);
            }
            (out, gnuplot::postselection(&data_name, n, &ms, args.log))
        }
        Which::Six => {
            let ns = args.n.clone().unwrap_or_else(|| vec![2, 6, 50, 1000]);
            let mut out = Table::new(&["N", "family", "P", "dip", "one_one", "S"]);
            for row in dip_sweep(&ns, &grid(args, 0.2)?)? {
                out.push(vec![
                    row.n.to_string(),
                    row.family.to_string(),
                    float(row.purity),
                    float(row.dip),
                    float(row.one_one),
                    opt_count(row.modes),
                ]);
            }
            (out, gnuplot::figure6(&data_name, &ns, args.log))
        }
    };
    if let Some(path) = &args.gnuplot {
        fs::write(path, script)?;
    }
    Ok(out.into())
}

fn figure_number(which: Which) -> u8 {
    match which {
        Which::Three => 3,
        Which::Four => 4,
        Which::Five => 5,
        Which::Six => 6,
    }
}

pub fn oracle_validate(spec: Option<&DistSpec>) -> Result<Outcome, Failure> {
    let cases = match spec {
        None => default_matrix(),
        Some(spec) => vec![Case {
            label: "custom".into(),
            distribution: Source::resolve(spec)?.distribution()?,
        }],
    };
    let results = run_suite(&cases)?;
    let mut out = Table::new(&["check", "comparisons", "max_deviation"]);
    for r in &results {
        out.push(vec![
            r.name.to_string(),
            r.comparisons.to_string(),
            float(r.max_deviation),
        ]);
    }
    let mut outcome = Outcome::from(out);
    let max = worst(&results);
    if max > FAILURE_THRESHOLD {
        outcome.failure = Some(Failure::Validation(format!(
            "max deviation {max:e} exceeds {FAILURE_THRESHOLD:e}"
        )));
    }
    Ok(outcome)
}
