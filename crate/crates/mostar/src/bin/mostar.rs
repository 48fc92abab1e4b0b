//! Batch front door: compute indices, generate families, build products,
//! run claim verification, and benchmark, over the canonical edge-list
//! format.
//!
//! Exit codes: 0 success; 1 a proven claim was violated during `verify`;
//! 2 usage or parse errors; 3 the requested index is undefined because the
//! input graph is disconnected.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use mostar::edgelist;
use mostar::families::{generate, Family, FamilySpec};
use mostar::formulas;
use mostar::graph::{Graph, GraphError};
use mostar::invariants::{
    albertson_irregularity, edge_contribution_table, mostar, total_irregularity, EdgeContribution,
};
use mostar::operators;
use mostar::verify::{run_suite, SuiteSelect};

/// Largest graph the CLI will touch.
const MAX_ORDER: u32 = 1 << 16;

const EXIT_USAGE: u8 = 2;
const EXIT_DISCONNECTED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mostar",
    version,
    about = "Mostar index toolkit: exact invariants, graph products, and claim verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexKind {
    Mostar,
    Irr,
    #[value(name = "irr-t")]
    IrrT,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute indices (and optionally the per-edge table) of a graph file.
    Compute {
        /// Edge-list input file.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = IndexKind::Mostar)]
        index: IndexKind,
        /// Also emit the per-edge contribution table.
        #[arg(long)]
        edges: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a named family member and write it in edge-list format.
    Generate {
        /// Family name (e.g. path, cycle, wheel, hypercube, bridge-cycle).
        #[arg(long)]
        family: String,
        /// Comma-separated positive integer parameters, e.g. "3,4".
        #[arg(long)]
        params: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a product of graphs read from edge-list files.
    Product {
        /// One of: corona, cartesian, join, lexicographic, indu-bala,
        /// subdivision, sve.
        #[arg(long)]
        op: String,
        #[arg(long)]
        lhs: PathBuf,
        #[arg(long)]
        rhs: Option<PathBuf>,
        /// Third factor (sve only).
        #[arg(long)]
        third: Option<PathBuf>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep registered claims against the brute-force oracle and write the
    /// claims ledger.
    Verify {
        /// One of: exact, bounds, examples, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Corpus size budget (largest operand order).
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: u32,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Report path; stdout when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Time the oracle (and the closed form, where one exists) per size.
    Bench {
        #[arg(long)]
        family: String,
        /// Comma-separated sizes, e.g. "10,50,100".
        #[arg(long)]
        sizes: String,
    },
    /// Print the claim registry as JSON.
    Registry,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Compute {
            input,
            index,
            edges,
            format,
        } => compute(&input, index, edges, format),
        Command::Generate {
            family,
            params,
            out,
        } => generate_cmd(&family, &params, out.as_deref()),
        Command::Product {
            op,
            lhs,
            rhs,
            third,
            out,
        } => product(&op, &lhs, rhs.as_deref(), third.as_deref(), out.as_deref()),
        Command::Verify {
            suite,
            max_n,
            seed,
            report,
        } => verify(&suite, max_n, seed, report.as_deref()),
        Command::Bench { family, sizes } => bench(&family, &sizes),
        Command::Registry => {
            println!("{}", formulas::registry_json());
            ExitCode::SUCCESS
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn read_graph(path: &Path) -> Result<Graph, ExitCode> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage_error(format_args!("{}: {e}", path.display())))?;
    let g =
        edgelist::parse(&text).map_err(|e| usage_error(format_args!("{}: {e}", path.display())))?;
    if g.order() > MAX_ORDER {
        return Err(usage_error(format_args!(
            "{}: order {} exceeds the CLI cap of {MAX_ORDER}",
            path.display(),
            g.order()
        )));
    }
    Ok(g)
}

fn write_graph(g: &Graph, out: Option<&Path>) -> ExitCode {
    let text = edgelist::render(g);
    match out {
        Some(path) => match fs::write(path, text) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => usage_error(format_args!("{}: {e}", path.display())),
        },
        None => {
            print!("{text}");
            ExitCode::SUCCESS
        }
    }
}

fn compute(input: &Path, index: IndexKind, edges: bool, format: Format) -> ExitCode {
    let g = match read_graph(input) {
        Ok(g) => g,
        Err(code) => return code,
    };

    let needs_mostar = edges || matches!(index, IndexKind::Mostar | IndexKind::All);
    let mostar_value = if needs_mostar {
        match mostar(&g) {
            Ok(v) => Some(v),
            Err(GraphError::Disconnected) => {
                eprintln!("error: graph is disconnected; the index is undefined");
                return ExitCode::from(EXIT_DISCONNECTED);
            }
            Err(e) => return usage_error(e),
        }
    } else {
        None
    };
    let table: Option<Vec<EdgeContribution>> = if edges {
        Some(edge_contribution_table(&g).expect("connectivity checked above"))
    } else {
        None
    };

    let mut scalars: Vec<(&str, u64)> = Vec::new();
    match index {
        IndexKind::Mostar => scalars.push(("mostar", mostar_value.unwrap())),
        IndexKind::Irr => scalars.push(("irr", albertson_irregularity(&g))),
        IndexKind::IrrT => scalars.push(("irr-t", total_irregularity(&g))),
        IndexKind::All => {
            scalars.push(("mostar", mostar_value.unwrap()));
            scalars.push(("irr", albertson_irregularity(&g)));
            scalars.push(("irr-t", total_irregularity(&g)));
        }
    }

    match format {
        Format::Text => {
            if scalars.len() == 1 && !edges {
                println!("{}", scalars[0].1);
            } else {
                for (name, v) in &scalars {
                    println!("{name} {v}");
                }
            }
            if let Some(rows) = &table {
                for r in rows {
                    println!(
                        "{} {} {} {} {}",
                        r.edge.0, r.edge.1, r.n_u, r.n_v, r.contribution
                    );
                }
            }
        }
        Format::Json => {
            let mut doc = serde_json::Map::new();
            doc.insert("order".into(), g.order().into());
            doc.insert("size".into(), g.size().into());
            for (name, v) in &scalars {
                doc.insert((*name).into(), (*v).into());
            }
            if let Some(rows) = &table {
                let rows: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "u": r.edge.0, "v": r.edge.1,
                            "n_u": r.n_u, "n_v": r.n_v,
                            "contribution": r.contribution,
                        })
                    })
                    .collect();
                doc.insert("edges".into(), rows.into());
            }
            println!("{}", serde_json::Value::Object(doc));
        }
        Format::Csv => {
            if let Some(rows) = &table {
                println!("u,v,n_u,n_v,contribution");
                for r in rows {
                    println!(
                        "{},{},{},{},{}",
                        r.edge.0, r.edge.1, r.n_u, r.n_v, r.contribution
                    );
                }
            } else {
                println!("index,value");
                for (name, v) in &scalars {
                    println!("{name},{v}");
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn parse_params(list: &str) -> Result<Vec<u32>, ExitCode> {
    list.split(',')
        .map(|tok| {
            tok.trim().parse::<u32>().map_err(|_| {
                usage_error(format_args!(
                    "bad parameter {tok:?} (expected a positive integer)"
                ))
            })
        })
        .collect()
}

fn generate_cmd(family: &str, params: &str, out: Option<&Path>) -> ExitCode {
    let family = match Family::from_str(family) {
        Ok(f) => f,
        Err(e) => return usage_error(e),
    };
    let params = match parse_params(params) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let g = match generate(&FamilySpec::new(family, params)) {
        Ok(g) => g,
        Err(e) => return usage_error(e),
    };
    if g.order() > MAX_ORDER {
        return usage_error(format_args!(
            "generated order {} exceeds the CLI cap of {MAX_ORDER}",
            g.order()
        ));
    }
    write_graph(&g, out)
}

fn product(
    op: &str,
    lhs: &Path,
    rhs: Option<&Path>,
    third: Option<&Path>,
    out: Option<&Path>,
) -> ExitCode {
    let g1 = match read_graph(lhs) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let rhs = match rhs.map(read_graph).transpose() {
        Ok(g) => g,
        Err(code) => return code,
    };
    let third = match third.map(read_graph).transpose() {
        Ok(g) => g,
        Err(code) => return code,
    };

    let binary = |name: &str, rhs: &Option<Graph>| -> Result<(), ExitCode> {
        if rhs.is_none() {
            return Err(usage_error(format_args!("{name} needs --rhs")));
        }
        if third.is_some() && name != "sve" {
            return Err(usage_error(format_args!("{name} does not take --third")));
        }
        Ok(())
    };

    let result = match op {
        "corona" => {
            if let Err(code) = binary("corona", &rhs) {
                return code;
            }
            operators::corona(&g1, rhs.as_ref().unwrap())
        }
        "cartesian" => {
            if let Err(code) = binary("cartesian", &rhs) {
                return code;
            }
            operators::cartesian(&g1, rhs.as_ref().unwrap())
        }
        "join" => {
            if let Err(code) = binary("join", &rhs) {
                return code;
            }
            operators::join(&g1, rhs.as_ref().unwrap())
        }
        "lexicographic" => {
            if let Err(code) = binary("lexicographic", &rhs) {
                return code;
            }
            operators::lexicographic(&g1, rhs.as_ref().unwrap())
        }
        "indu-bala" => {
            if let Err(code) = binary("indu-bala", &rhs) {
                return code;
            }
            operators::indu_bala(&g1, rhs.as_ref().unwrap())
        }
        "subdivision" => {
            if rhs.is_some() || third.is_some() {
                return usage_error("subdivision takes only --lhs");
            }
            operators::subdivision(&g1)
        }
        "sve" => operators::sve_join(&g1, rhs.as_ref(), third.as_ref()),
        other => {
            return usage_error(format_args!(
                "unknown op {other:?} (expected corona, cartesian, join, lexicographic, indu-bala, subdivision, or sve)"
            ))
        }
    };
    if result.order() > MAX_ORDER {
        return usage_error(format_args!(
            "product order {} exceeds the CLI cap of {MAX_ORDER}",
            result.order()
        ));
    }
    write_graph(&result, out)
}

fn verify(suite: &str, max_n: u32, seed: u64, report_path: Option<&Path>) -> ExitCode {
    let suite = match SuiteSelect::from_str(suite) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    if max_n < 2 {
        return usage_error("--max-n must be at least 2");
    }
    let report = run_suite(suite, max_n, seed);

    // human summary on stderr so stdout stays machine-readable
    eprintln!(
        "suite {} over corpus(max_n={}, seed={}): {} graphs",
        suite, max_n, seed, report.corpus.graph_count
    );
    let mut gate_violated = 0u64;
    for (id, t) in &report.summary {
        if t.total() == 0 {
            continue;
        }
        let gate = formulas::claim(id).gate;
        if t.violated > 0 {
            eprintln!(
                "  {id}: VIOLATED {} (exact {}, tight {}, holds {}, skipped {}){}",
                t.violated,
                t.exact,
                t.tight,
                t.holds,
                t.skipped,
                if gate { "" } else { " [reported only]" }
            );
            if gate {
                gate_violated += t.violated;
            }
        }
    }
    eprintln!(
        "proven-claim violations: {gate_violated}; worked-example mismatches are reported in the ledger"
    );

    let json = report.to_json();
    match report_path {
        Some(path) => {
            if let Err(e) = fs::write(path, &json) {
                return usage_error(format_args!("{}: {e}", path.display()));
            }
        }
        None => println!("{json}"),
    }
    if gate_violated > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

/// Closed-form value for the benchmarked family, where one is registered.
fn bench_formula(family: Family, params: &[u32]) -> Option<u64> {
    let p: Vec<u64> = params.iter().map(|&x| u64::from(x)).collect();
    let fv = match family {
        Family::Path => formulas::prop1(formulas::Prop1Family::Path, p[0]).ok()?,
        Family::Cycle => formulas::prop1(formulas::Prop1Family::Cycle, p[0]).ok()?,
        Family::Complete => formulas::prop1(formulas::Prop1Family::Complete, p[0]).ok()?,
        Family::Grid => formulas::ex_grid(p[0], p[1]).ok()?,
        Family::Ladder => formulas::ex_ladder(p[0]).ok()?,
        Family::Hypercube => formulas::ex_hypercube(p[0]).ok()?,
        Family::Hamming => formulas::ex_hamming(&p).ok()?,
        Family::Star => formulas::ex_star(p[0]),
        Family::Wheel => formulas::ex_wheel(p[0]).ok()?,
        Family::Cone => formulas::ex_cone_regular(p[0], p[1]),
        Family::Friendship => formulas::cor_join_regular(1, 0, 2 * p[0], 1),
        _ => return None,
    };
    Some(fv.value)
}

fn bench(family: &str, sizes: &str) -> ExitCode {
    let family = match Family::from_str(family) {
        Ok(f) => f,
        Err(e) => return usage_error(e),
    };
    let sizes = match parse_params(sizes) {
        Ok(s) => s,
        Err(code) => return code,
    };
    for s in sizes {
        let params = match family {
            Family::CompleteBipartite | Family::Grid | Family::Cone | Family::BridgeCycle => {
                vec![s, s]
            }
            Family::Hamming => vec![s, s],
            _ => vec![s],
        };
        let g = match generate(&FamilySpec::new(family, params.clone())) {
            Ok(g) => g,
            Err(e) => return usage_error(e),
        };
        if g.order() > MAX_ORDER {
            return usage_error(format_args!(
                "order {} exceeds the CLI cap of {MAX_ORDER}",
                g.order()
            ));
        }
        let t0 = Instant::now();
        let oracle = match mostar(&g) {
            Ok(v) => v,
            Err(e) => return usage_error(format_args!("{family} size {s}: {e}")),
        };
        let oracle_ms = t0.elapsed().as_secs_f64() * 1e3;

        let mut line = format!(
            "family={family} size={s} order={} edges={} mostar={oracle} oracle_ms={oracle_ms:.3}",
            g.order(),
            g.size()
        );
        let t0 = Instant::now();
        if let Some(formula) = bench_formula(family, &params) {
            let formula_ms = t0.elapsed().as_secs_f64() * 1e3;
            line.push_str(&format!(" formula={formula} formula_ms={formula_ms:.6}"));
        }
        println!("{line}");
    }
    ExitCode::SUCCESS
}
