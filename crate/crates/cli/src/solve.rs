use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use mwbis_core::lp::{build_lp, solve_lp, LpError, LpStatus};
use mwbis_core::solvers::{
    color_class_approx, exact_mwbis, greedy_bipartite, mwis_truncation, truncate_to_budget,
    SearchConfig,
};
use mwbis_core::{bipartition, is_independent, Coloring, OddCycle, WeightedInstance};

use crate::args::{ColoringKind, SolveArgs, SolveMethod};
use crate::error::CliError;
use crate::format::{parse_graph, GraphFile};
use crate::lpformat::write_lp;
use crate::record::RunRecord;

pub fn read_graph_file(path: &Path) -> Result<GraphFile, CliError> {
    let io_err = |source| CliError::Io {
        path: path.to_owned(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err)?
    };
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// The cycle with 1-based ids, as in graph files.
pub fn describe_odd_cycle(c: &OddCycle) -> String {
    let ids: Vec<String> = c.cycle.iter().map(|v| (v + 1).to_string()).collect();
    format!("graph is not bipartite: odd cycle {}", ids.join(" - "))
}

fn lp_error(e: LpError) -> CliError {
    match e {
        LpError::CliqueCap { .. } | LpError::IterationCap { .. } => {
            CliError::ResourceCap(e.to_string())
        }
        other => CliError::Mismatch(other.to_string()),
    }
}

pub fn search_config(
    node_limit: Option<std::num::NonZeroU64>,
    time_limit_ms: Option<std::num::NonZeroU64>,
) -> SearchConfig {
    let mut config = SearchConfig::unlimited();
    if let Some(n) = node_limit {
        config = config.with_node_limit(n);
    }
    if let Some(ms) = time_limit_ms {
        config = config.with_time_limit(Duration::from_millis(ms.get()));
    }
    config
}

fn emit(out: &mut dyn Write, record: &RunRecord) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, record).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

pub fn run_solve(args: &SolveArgs, command: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let file = read_graph_file(&args.input)?;
    let instance = file
        .into_instance(args.k)
        .map_err(|e| CliError::user(e.to_string()))?;

    if let Some(path) = &args.lp_dump {
        let model = build_lp(&instance, args.clique_cap).map_err(lp_error)?;
        let mut buf = Vec::new();
        write_lp(
            &mut buf,
            &model,
            &format!("{} k={}", args.input.display(), args.k),
        )?;
        fs::write(path, buf).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }

    let start = Instant::now();
    if args.method == SolveMethod::Lp {
        let model = build_lp(&instance, args.clique_cap).map_err(lp_error)?;
        let lp = solve_lp(&model).map_err(lp_error)?;
        if lp.status != LpStatus::Optimal {
            return Err(CliError::Mismatch(format!("LP reported {:?}", lp.status)));
        }
        let record =
            RunRecord::from_lp(command.to_owned(), &instance, &model, &lp, start.elapsed())?;
        return emit(out, &record);
    }

    let solution = match args.method {
        SolveMethod::Exact => exact_mwbis(
            &instance,
            &search_config(args.node_limit, args.time_limit_ms),
        ),
        SolveMethod::Greedy => {
            let bip = bipartition(instance.graph())
                .map_err(|c| CliError::user(describe_odd_cycle(&c)))?;
            greedy_bipartite(&instance, &bip)
        }
        SolveMethod::Color => {
            let g = instance.graph();
            let coloring = match args.coloring {
                ColoringKind::Natural => Coloring::natural(g),
                ColoringKind::Degeneracy => Coloring::degeneracy(g),
            };
            color_class_approx(&instance, &coloring)
        }
        SolveMethod::Truncate => truncate(&instance, args.set.as_deref())?,
        SolveMethod::Lp => unreachable!("handled above"),
    };
    let record =
        RunRecord::from_solution(command.to_owned(), &instance, &solution, start.elapsed())?;
    emit(out, &record)?;
    if args.method == SolveMethod::Exact && !solution.proven_optimal {
        return Err(CliError::ResourceCap(
            "exact search stopped at its limit; the record holds the best set found".into(),
        ));
    }
    Ok(())
}

fn truncate(
    instance: &WeightedInstance,
    set: Option<&[usize]>,
) -> Result<mwbis_core::Solution, CliError> {
    let g = instance.graph();
    match set {
        Some(ids) => {
            let mut set = Vec::with_capacity(ids.len());
            for &id in ids {
                if id == 0 || id > g.n() {
                    return Err(CliError::user(format!(
                        "--set vertex {id} outside 1..={}",
                        g.n()
                    )));
                }
                set.push(id - 1);
            }
            set.sort_unstable();
            set.dedup();
            if !is_independent(g, &set) {
                return Err(CliError::user("--set is not an independent set"));
            }
            Ok(truncate_to_budget(&set, instance.weights(), instance.k()))
        }
        None => {
            let bip = bipartition(g).map_err(|c| {
                CliError::user(format!(
                    "{}; pass an independent set with --set",
                    describe_odd_cycle(&c)
                ))
            })?;
            Ok(mwis_truncation(instance, &bip))
        }
    }
}
