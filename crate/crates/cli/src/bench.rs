//! Method-versus-optimum tables.
//!
//! Each instance row holds a method's value, the exact optimum and their ratio. For the
//! heuristics the ratio is `value / exact`; for `lp` it is `exact / lp`, the integrality gap
//! of that instance. `ratio_exact` repeats the ratio as a reduced fraction whenever both
//! sides are known exactly. One summary row per method follows, with the minimum and mean
//! ratio.

use std::fs::File;
use std::io::Write;
use std::time::Instant;

use mwbis_core::generators::{random_bipartite_corpus, GenSpec};
use mwbis_core::lp::{build_lp, solve_lp, LpStatus, DEFAULT_CLIQUE_CAP};
use mwbis_core::solvers::{
    color_class_approx, exact_mwbis, greedy_bipartite, mwis_truncation, SearchConfig,
};
use mwbis_core::{Bipartition, Coloring, Solution, WeightedInstance};
use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::{BenchArgs, BenchMethod, Corpus};
use crate::error::CliError;
use crate::generate::gen_error;
use crate::solve::search_config;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    /// `instance` or `summary`.
    pub row: String,
    pub instance: Option<usize>,
    pub family: String,
    pub params: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub method: String,
    pub value: Option<f64>,
    pub exact: Option<f64>,
    pub ratio: Option<f64>,
    pub ratio_exact: Option<String>,
    pub min_ratio: Option<f64>,
    pub mean_ratio: Option<f64>,
    pub time_ms: Option<f64>,
    pub status: String,
}

struct Task {
    id: usize,
    spec: GenSpec,
    instance: WeightedInstance,
    bipartition: Option<Bipartition>,
}

fn method_name(m: BenchMethod) -> &'static str {
    match m {
        BenchMethod::Greedy => "greedy",
        BenchMethod::Color => "color",
        BenchMethod::Truncate => "truncate",
        BenchMethod::Lp => "lp",
    }
}

fn build_tasks(args: &BenchArgs) -> Result<Vec<Task>, CliError> {
    let specs: Vec<GenSpec> = match args.corpus {
        Corpus::Bipartite => random_bipartite_corpus(args.seed, args.count),
        Corpus::Tight => [2, 4, 6, 8]
            .into_iter()
            .flat_map(|k| {
                [5, 10, 50]
                    .into_iter()
                    .map(move |x| GenSpec::Tight { k, x })
            })
            .collect(),
        Corpus::Gap => (2..=5).map(|k| GenSpec::Gap { k }).collect(),
    };
    let mut tasks = Vec::new();
    for spec in specs {
        let g = spec.generate().map_err(gen_error)?;
        let budgets: Vec<usize> = match (args.corpus, args.k) {
            (Corpus::Bipartite, Some(k)) => vec![k],
            (Corpus::Bipartite, None) => (1..=g.instance.graph().n()).collect(),
            _ => vec![g.instance.k()],
        };
        for k in budgets {
            tasks.push(Task {
                id: tasks.len(),
                spec,
                instance: g.instance.with_budget(k),
                bipartition: g.bipartition.clone(),
            });
        }
    }
    Ok(tasks)
}

fn exact_fraction(num: i64, den: i64) -> Option<String> {
    (den != 0).then(|| Ratio::new(num, den).to_string())
}

fn heuristic_row(
    base: &BenchRow,
    task: &Task,
    exact: Option<&Solution>,
    solution: Solution,
    ms: f64,
) -> BenchRow {
    let inst = &task.instance;
    let mut row = BenchRow {
        value: Some(solution.value),
        time_ms: Some(ms),
        ..base.clone()
    };
    if let Err(e) = solution.verify(inst) {
        row.status = format!("invalid solution: {e}");
        return row;
    }
    if let Some(opt) = exact {
        row.ratio = Some(if opt.value > 0.0 {
            solution.value / opt.value
        } else {
            1.0
        });
        row.ratio_exact = match (
            inst.integral_weight(&solution.vertices),
            inst.integral_weight(&opt.vertices),
        ) {
            (Some(v), Some(e)) => exact_fraction(v, e),
            _ => None,
        };
    }
    row
}

fn lp_row(base: &BenchRow, task: &Task, exact: Option<&Solution>) -> BenchRow {
    let start = Instant::now();
    let solved = build_lp(&task.instance, DEFAULT_CLIQUE_CAP).and_then(|model| {
        let lp = solve_lp(&model)?;
        Ok((model.max_violation(&lp.values), lp))
    });
    let mut row = BenchRow {
        time_ms: Some(start.elapsed().as_secs_f64() * 1e3),
        ..base.clone()
    };
    let (violation, lp) = match solved {
        Ok(s) => s,
        Err(e) => {
            row.status = format!("error: {e}");
            return row;
        }
    };
    if lp.status != LpStatus::Optimal {
        row.status = format!("error: LP {:?}", lp.status);
        return row;
    }
    row.value = Some(lp.objective);
    if violation > 1e-9 {
        row.status = format!("infeasible point, violation {violation:e}");
        return row;
    }
    if let Some(opt) = exact {
        row.ratio = Some(if lp.objective > 0.0 {
            opt.value / lp.objective
        } else {
            1.0
        });
        let ip = task.instance.integral_weight(&opt.vertices);
        row.ratio_exact = match (lp.certified, &lp.exact_objective, ip) {
            (true, Some(q), Some(ip)) if *q.numer() != BigInt::from(0) => {
                Some((BigRational::from_integer(ip.into()) / q).to_string())
            }
            _ => None,
        };
    }
    row
}

fn run_task(task: &Task, methods: &[BenchMethod], config: &SearchConfig) -> Vec<BenchRow> {
    let g = task.instance.graph();
    let start = Instant::now();
    let opt = exact_mwbis(&task.instance, config);
    let exact_ms = start.elapsed().as_secs_f64() * 1e3;
    let proven = opt.proven_optimal && opt.verify(&task.instance).is_ok();
    let exact = proven.then_some(&opt);
    let base = BenchRow {
        row: "instance".into(),
        instance: Some(task.id),
        family: task.spec.family().into(),
        params: task.spec.describe(),
        n: Some(g.n()),
        m: Some(g.m()),
        k: Some(task.instance.k()),
        exact: exact.map(|s| s.value),
        status: if proven {
            "ok".into()
        } else {
            "exact search incomplete".into()
        },
        ..BenchRow::default()
    };
    let mut rows = vec![BenchRow {
        method: "exact".into(),
        value: Some(opt.value),
        time_ms: Some(exact_ms),
        ..base.clone()
    }];
    for &m in methods {
        let base = BenchRow {
            method: method_name(m).into(),
            ..base.clone()
        };
        let timed = |f: &dyn Fn() -> Solution| {
            let start = Instant::now();
            let s = f();
            (s, start.elapsed().as_secs_f64() * 1e3)
        };
        let row = match (m, &task.bipartition) {
            (BenchMethod::Lp, _) => lp_row(&base, task, exact),
            (BenchMethod::Color, _) => {
                let (s, ms) = timed(&|| color_class_approx(&task.instance, &Coloring::natural(g)));
                heuristic_row(&base, task, exact, s, ms)
            }
            (BenchMethod::Greedy, Some(bip)) => {
                let (s, ms) = timed(&|| greedy_bipartite(&task.instance, bip));
                heuristic_row(&base, task, exact, s, ms)
            }
            (BenchMethod::Truncate, Some(bip)) => {
                let (s, ms) = timed(&|| mwis_truncation(&task.instance, bip));
                heuristic_row(&base, task, exact, s, ms)
            }
            (_, None) => BenchRow {
                status: "error: needs a bipartite instance".into(),
                ..base
            },
        };
        rows.push(row);
    }
    rows
}

fn summaries(rows: &[BenchRow], methods: &[BenchMethod], family: &str) -> Vec<BenchRow> {
    methods
        .iter()
        .map(|&m| {
            let name = method_name(m);
            let ratios: Vec<f64> = rows
                .iter()
                .filter(|r| r.method == name)
                .filter_map(|r| r.ratio)
                .collect();
            let count = ratios.len();
            BenchRow {
                row: "summary".into(),
                family: family.into(),
                method: name.into(),
                min_ratio: ratios.iter().copied().reduce(f64::min),
                mean_ratio: (count > 0).then(|| ratios.iter().sum::<f64>() / count as f64),
                status: format!("{count} ratios"),
                ..BenchRow::default()
            }
        })
        .collect()
}

/// Instance rows in corpus order followed by the summary rows.
pub fn bench_rows(args: &BenchArgs) -> Result<Vec<BenchRow>, CliError> {
    if args.jobs == 0 {
        return Err(CliError::user("--jobs must be at least 1"));
    }
    let mut methods: Vec<BenchMethod> = Vec::new();
    for m in &args.methods {
        if !methods.contains(m) {
            methods.push(*m);
        }
    }
    let tasks = build_tasks(args)?;
    let config = search_config(args.node_limit, None);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| CliError::user(e.to_string()))?;
    let per_task: Vec<Vec<BenchRow>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|t| run_task(t, &methods, &config))
            .collect()
    });
    let mut rows: Vec<BenchRow> = per_task.into_iter().flatten().collect();
    let family = match args.corpus {
        Corpus::Bipartite => "bipartite",
        Corpus::Tight => "tight",
        Corpus::Gap => "gap",
    };
    let summary = summaries(&rows, &methods, family);
    rows.extend(summary);
    Ok(rows)
}

pub fn run_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let rows = bench_rows(args)?;
    let sink: Box<dyn Write + '_> = match &args.output {
        Some(path) => Box::new(File::create(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?),
        None => Box::new(stdout),
    };
    let mut w = csv::Writer::from_writer(sink);
    for row in &rows {
        w.serialize(row).map_err(|e| CliError::Output(e.into()))?;
    }
    w.flush()?;
    Ok(())
}
