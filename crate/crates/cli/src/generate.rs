use std::fs::File;
use std::io::{BufWriter, Write};

use mwbis_core::generators::{GenError, GenSpec, WeightSpec};

use crate::args::{Family, GenerateArgs, WeightKind};
use crate::error::CliError;
use crate::format::write_graph;

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::user(format!("{family} needs --{flag}")))
}

pub fn spec_from_args(args: &GenerateArgs) -> Result<GenSpec, CliError> {
    Ok(match args.family {
        Family::Tight => GenSpec::Tight {
            k: need(args.k, "k", "tight")?,
            x: need(args.x, "x", "tight")?,
        },
        Family::Gap => GenSpec::Gap {
            k: need(args.k, "k", "gap")?,
        },
        Family::Regular => GenSpec::Regular {
            n: need(args.n, "n", "regular")?,
            r: need(args.r, "r", "regular")?,
            seed: args.seed,
        },
        Family::Bipartite => GenSpec::Bipartite {
            n_a: need(args.n_a, "n-a", "bipartite")?,
            n_b: need(args.n_b, "n-b", "bipartite")?,
            edge_prob: args.edge_prob,
            seed: args.seed,
            stream: 0,
            weights: match args.weights {
                WeightKind::Degree => WeightSpec::Degree,
                WeightKind::Uniform => WeightSpec::Uniform { lo: 1.0, hi: 10.0 },
            },
        },
    })
}

pub fn gen_error(e: GenError) -> CliError {
    match e {
        GenError::RetriesExhausted { .. } => CliError::ResourceCap(e.to_string()),
        other => CliError::user(other.to_string()),
    }
}

pub fn run_generate(
    args: &GenerateArgs,
    command: &str,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let spec = spec_from_args(args)?;
    let generated = spec.generate().map_err(gen_error)?;
    let mut comments = vec![format!("generated by: {command}"), spec.describe()];
    if let Some(bip) = &generated.bipartition {
        let ids: Vec<String> = bip.side_a().iter().map(|v| (v + 1).to_string()).collect();
        comments.push(format!("side A: {}", ids.join(" ")));
    }
    match &args.output {
        Some(path) => {
            let io_err = |source| CliError::Io {
                path: path.clone(),
                source,
            };
            let mut w = BufWriter::new(File::create(path).map_err(io_err)?);
            write_graph(&mut w, &generated.instance, &comments).map_err(io_err)?;
            w.flush().map_err(io_err)?;
        }
        None => write_graph(stdout, &generated.instance, &comments)?,
    }
    Ok(())
}
