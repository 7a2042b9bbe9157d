//! Command-line front end for the treemetric toolkit.
//!
//! Every subcommand reads one input (stdin by default, or `--input FILE`),
//! writes deterministic text to stdout, and reports errors on stderr with
//! exit status 1 for malformed input, 2 for domain errors (bad ids, levels,
//! non-metrics), and 3 when the hyperbolicity check fails.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use treemetric::contour::{build_merge, ContourError};
use treemetric::excursion::{decode, encode, random_excursion, ExcursionError};
use treemetric::io::{
    self, excursion_string, format_number, matrix_string, parse_edge_list, parse_excursion,
    parse_field, parse_matrix, parse_paths,
};
use treemetric::metric::{four_point_check_with, FourPointOptions, MetricError, TreeMetricIndex};
use treemetric::path_forest::PathError;
use treemetric::tree::RootedTree;

const FORMATS_HELP: &str = "\
Input formats (stdin, or --input FILE):
  tree    first line `n root`, then n-1 lines `parent child`;
          `#` comments allowed
  exc     whitespace-separated integer heights of an excursion
  field   first line `n m`, then n lines `vertex value`,
          then m lines `u v`; `#` comments allowed
  paths   one path per line, whitespace-separated tokens;
          a blank line is the empty path
  matrix  first line `n`, then n rows of n numbers

Exit status: 0 ok, 1 bad input, 2 domain error, 3 hyperbolicity violated.";

#[derive(Parser)]
#[command(
    name = "treemetric",
    version,
    about = "Tree codecs, tree metrics, contour trees, and path forests",
    after_help = FORMATS_HELP
)]
struct Cli {
    /// Read input from FILE instead of standard input
    #[arg(short, long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a tree (tree format) as an excursion
    Encode,
    /// Decode an excursion (exc format) to canonical Newick
    Decode,
    /// Excursion distance between time indices M and N (exc format)
    Excdist { m: usize, n: usize },
    /// Tree distance between vertices A and B (tree format)
    Dist { a: usize, b: usize },
    /// Four-point zero-hyperbolicity check (matrix format)
    Hyperbolic {
        /// Comparison tolerance for validation and the four-point test
        #[arg(long, default_value_t = 0.0)]
        tolerance: f64,
    },
    /// Contour (merge) tree of a scalar field (field format)
    ContourTree {
        /// Output: newick, dot, or the contour distance matrix
        #[arg(long, value_enum, default_value_t = TreeFormat::Newick)]
        format: TreeFormat,
    },
    /// Merge level of vertices Y and Z (field format)
    Lambda { y: usize, z: usize },
    /// Trie of a path list (paths format)
    PathTree {
        /// Output: newick, dot, or the path distance matrix
        #[arg(long, value_enum, default_value_t = TreeFormat::Newick)]
        format: TreeFormat,
    },
    /// Separation distance between input lines I and J (paths format)
    PathDist { i: usize, j: usize },
    /// Uniformly random excursion with EDGES edges
    RandomExc {
        edges: usize,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Newick,
    Dot,
    Matrix,
}

enum AppError {
    /// Exit 1: the input text does not describe a valid object.
    Input(String),
    /// Exit 2: valid input, invalid operation on it.
    Domain(String),
}

impl From<io::ParseError> for AppError {
    fn from(e: io::ParseError) -> Self {
        AppError::Input(e.to_string())
    }
}

impl From<MetricError> for AppError {
    fn from(e: MetricError) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<ExcursionError> for AppError {
    fn from(e: ExcursionError) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<ContourError> for AppError {
    fn from(e: ContourError) -> Self {
        AppError::Domain(e.to_string())
    }
}

impl From<PathError> for AppError {
    fn from(e: PathError) -> Self {
        AppError::Domain(e.to_string())
    }
}

struct Output {
    text: String,
    status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

fn tree_dot(tree: &RootedTree) -> String {
    let mut out = String::from("graph path_tree {\n");
    for v in 0..tree.len() {
        out.push_str(&format!(
            "  v{} [label=\"{}\"];\n",
            v,
            tree.label(v).unwrap_or("")
        ));
    }
    let mut edges: Vec<(usize, usize)> = (0..tree.len())
        .filter(|&v| v != tree.root())
        .map(|v| (tree.parent(v), v))
        .collect();
    edges.sort_unstable();
    for (p, c) in edges {
        out.push_str(&format!("  v{p} -- v{c};\n"));
    }
    out.push_str("}\n");
    out
}

fn execute(command: &Command, input: &str) -> Result<Output, AppError> {
    match command {
        Command::Encode => {
            let tree = parse_edge_list(input)?;
            Ok(Output::ok(excursion_string(&encode(&tree))))
        }
        Command::Decode => {
            let exc = parse_excursion(input)?;
            let tree = decode(&exc);
            Ok(Output::ok(format!("{}\n", tree.canonical_newick())))
        }
        Command::Excdist { m, n } => {
            let exc = parse_excursion(input)?;
            let d = exc.distance(*m, *n)?;
            Ok(Output::ok(format!("{d}\n")))
        }
        Command::Dist { a, b } => {
            let tree = parse_edge_list(input)?;
            let index = TreeMetricIndex::build(&tree);
            let d = index.dist(*a, *b)?;
            Ok(Output::ok(format!("{d}\n")))
        }
        Command::Hyperbolic { tolerance } => {
            let matrix = parse_matrix(input)?;
            let opts = FourPointOptions {
                tolerance: *tolerance,
                ..FourPointOptions::default()
            };
            let report = four_point_check_with(&matrix, &opts)?;
            let mut text = format!(
                "worst_violation {}\n",
                format_number(report.worst_violation)
            );
            let status = if report.is_zero_hyperbolic {
                0
            } else {
                if let Some([i, j, k, l]) = report.witness {
                    text.push_str(&format!("witness {i} {j} {k} {l}\n"));
                }
                3
            };
            Ok(Output { text, status })
        }
        Command::ContourTree { format } => {
            let field = parse_field(input)?;
            let merge = build_merge(&field);
            let text = match format {
                TreeFormat::Newick => format!("{}\n", merge.quotient_tree().to_newick()),
                TreeFormat::Dot => merge.quotient_tree().to_dot(),
                TreeFormat::Matrix => {
                    let n = field.len();
                    let rows: Vec<Vec<f64>> = (0..n)
                        .map(|x| {
                            (0..n)
                                .map(|y| merge.distance(x, y).expect("ids in range"))
                                .collect()
                        })
                        .collect();
                    matrix_string(&rows)
                }
            };
            Ok(Output::ok(text))
        }
        Command::Lambda { y, z } => {
            let field = parse_field(input)?;
            let merge = build_merge(&field);
            let l = merge.lambda(*y, *z)?;
            Ok(Output::ok(format!("{}\n", format_number(l))))
        }
        Command::PathTree { format } => {
            let (forest, _) = parse_paths(input)?;
            let text = match format {
                TreeFormat::Newick => {
                    let (tree, _) = forest.to_tree();
                    format!("{}\n", tree.canonical_newick())
                }
                TreeFormat::Dot => {
                    let (tree, _) = forest.to_tree();
                    tree_dot(&tree)
                }
                TreeFormat::Matrix => {
                    let n = forest.path_count();
                    let rows: Vec<Vec<f64>> = (0..n)
                        .map(|p| {
                            (0..n)
                                .map(|q| forest.distance(p, q).expect("ids in range") as f64)
                                .collect()
                        })
                        .collect();
                    matrix_string(&rows)
                }
            };
            Ok(Output::ok(text))
        }
        Command::PathDist { i, j } => {
            let (forest, line_ids) = parse_paths(input)?;
            let get = |k: usize| {
                line_ids.get(k).copied().ok_or_else(|| {
                    AppError::Domain(format!(
                        "line index {k} out of range for {} input lines",
                        line_ids.len()
                    ))
                })
            };
            let d = forest.distance(get(*i)?, get(*j)?)?;
            Ok(Output::ok(format!("{d}\n")))
        }
        Command::RandomExc { edges, seed } => Ok(Output::ok(excursion_string(&random_excursion(
            *edges, *seed,
        )))),
    }
}

fn read_input(command: &Command, path: Option<&PathBuf>) -> Result<String, AppError> {
    if matches!(command, Command::RandomExc { .. }) {
        return Ok(String::new());
    }
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| AppError::Input(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| AppError::Input(format!("cannot read stdin: {e}")))?;
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                // usage errors print the synopsis and count as bad input
                eprint!("{e}");
                return ExitCode::from(1);
            }
            // --help / --version
            e.exit()
        }
    };

    let result = read_input(&cli.command, cli.input.as_ref())
        .and_then(|input| execute(&cli.command, &input));
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.status)
        }
        Err(AppError::Input(msg)) => {
            eprintln!("treemetric: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Domain(msg)) => {
            eprintln!("treemetric: {msg}");
            ExitCode::from(2)
        }
    }
}
