//! `hypercode`: build CSS quantum codes from hypermaps, surface grids and
//! fixtures, and compute their `[n, k, d]` parameters exactly.
//!
//! Exit codes: 0 success, 1 failed check, 2 usage or parse error,
//! 3 invalid hypermap, 4 I/O failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use hypercode::alist::write_alist;
use hypercode::doc::{print_document, DocError, HypermapDocument};
use hypercode::report::Report;
use hypercode_core::css::{CssCode, DEFAULT_BUDGET};
use hypercode_core::f2::BinaryMatrix;
use hypercode_core::families::{
    fixture, gen_grid_hypermap, gen_honeycomb_hypermap, gen_planar, gen_toric, Fixture,
    FixtureValue, HoleSpec,
};
use hypercode_core::homology::{homology_dimensions, hypermap_code, SpecialBasis};
use hypercode_core::Hypermap;

const BUDGET_ENV: &str = "HYPERCODE_BUDGET";

#[derive(Parser)]
#[command(
    name = "hypercode",
    version,
    about = "CSS codes from F2 chain complexes, surface maps, and hypermap homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute [n,k,d], genus, cells and a distance witness of a hypermap code
    Params {
        /// Hypermap document (.hm)
        input: PathBuf,
        /// Special darts overriding the document and the default rule (1-based, comma-separated)
        #[arg(long, value_delimiter = ',')]
        special: Option<Vec<usize>>,
        /// Enumeration cap for the distance search (default 2^28, env HYPERCODE_BUDGET)
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads for the distance search (default: available parallelism)
        #[arg(long)]
        threads: Option<usize>,
        /// Emit a JSON report instead of text
        #[arg(long)]
        json: bool,
    },
    /// Generate a code family or fixture as files
    #[command(subcommand)]
    Gen(GenCommand),
    /// Export check matrices as alist or dense text
    Export {
        /// Hypermap document, or the H_X half of a dense matrix pair
        input: PathBuf,
        /// H_Z dense matrix (when exporting from a matrix pair)
        hz: Option<PathBuf>,
        /// Special darts overriding the document and the default rule
        #[arg(long, value_delimiter = ',')]
        special: Option<Vec<usize>>,
        #[arg(long, value_enum)]
        format: ExportFormat,
        /// Output path prefix; files get .hx/.hz suffixes
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the validation battery on a hypermap or matrix pair
    Check {
        /// Hypermap document, or the H_X half of a dense matrix pair
        input: PathBuf,
        /// H_Z dense matrix (when checking a matrix pair)
        hz: Option<PathBuf>,
        /// Special darts overriding the document and the default rule
        #[arg(long, value_delimiter = ',')]
        special: Option<Vec<usize>>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Toric code of the m x m torus grid: a [2m^2, 2, m] code
    Toric {
        #[arg(long)]
        m: usize,
        /// Output prefix; writes <out>.hx.txt and <out>.hz.txt
        #[arg(long)]
        out: PathBuf,
    },
    /// Planar grid code with rectangular holes; k equals the hole count
    Planar {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        /// Hole as row,col,height,width in 1-based face coordinates (repeatable)
        #[arg(long = "hole")]
        holes: Vec<String>,
        /// Output prefix; writes <out>.hx.txt and <out>.hz.txt
        #[arg(long)]
        out: PathBuf,
    },
    /// Even m x m square-grid hypermap on the torus: a [(3/2)m^2, 2, m] code
    GridHypermap {
        #[arg(long)]
        m: usize,
        /// Output path for the hypermap document
        #[arg(long)]
        out: PathBuf,
    },
    /// Honeycomb hypermap with p*q hexagons on the torus
    Honeycomb {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Output path for the hypermap document
        #[arg(long)]
        out: PathBuf,
    },
    /// Named fixture: steane, torus8, octagon-square, dlcube
    Fixture {
        #[arg(long)]
        name: String,
        /// Output path (hypermap document) or prefix (steane matrix pair)
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Alist,
    DenseText,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    FailedCheck(String),
    #[error("{path}: {source}")]
    Doc {
        path: PathBuf,
        #[source]
        source: DocError,
    },
    #[error("{path}: line {line}, column {col}: {message}")]
    MatrixParse {
        path: PathBuf,
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::MatrixParse { .. } => 2,
            CliError::FailedCheck(_) => 1,
            CliError::Doc { source, .. } => match source {
                DocError::Parse { .. } => 2,
                DocError::InvalidHypermap(_) => 3,
            },
            CliError::Io { .. } => 4,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Params {
            input,
            special,
            budget,
            threads,
            json,
        } => cmd_params(&input, special, budget, threads, json),
        Command::Gen(gen) => cmd_gen(gen),
        Command::Export {
            input,
            hz,
            special,
            format,
            out,
        } => cmd_export(&input, hz.as_deref(), special, format, &out),
        Command::Check { input, hz, special } => cmd_check(&input, hz.as_deref(), special),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    println!("wrote {}", path.display());
    Ok(())
}

fn load_document(path: &Path) -> Result<HypermapDocument, CliError> {
    let text = read_file(path)?;
    HypermapDocument::parse(&text).map_err(|source| CliError::Doc {
        path: path.to_path_buf(),
        source,
    })
}

fn realize_with_override(
    path: &Path,
    doc: &HypermapDocument,
    special: Option<Vec<usize>>,
) -> Result<(Hypermap, SpecialBasis), CliError> {
    let mut doc = doc.clone();
    if let Some(darts) = special {
        for &d in &darts {
            if d == 0 || d > doc.darts {
                return Err(CliError::Usage(format!(
                    "--special dart {d} out of range 1..={}",
                    doc.darts
                )));
            }
        }
        doc.special = Some(darts.iter().map(|d| d - 1).collect());
    }
    doc.realize().map_err(|source| CliError::Doc {
        path: path.to_path_buf(),
        source,
    })
}

fn resolve_budget(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(b) = flag {
        if b == 0 {
            return Err(CliError::Usage("--budget must be positive".into()));
        }
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(text) => text
            .parse::<u64>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| CliError::Usage(format!("invalid {BUDGET_ENV}={text:?}"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn resolve_threads(flag: Option<usize>) -> usize {
    flag.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}

fn cmd_params(
    input: &Path,
    special: Option<Vec<usize>>,
    budget: Option<u64>,
    threads: Option<usize>,
    json: bool,
) -> Result<(), CliError> {
    let doc = load_document(input)?;
    let (map, basis) = realize_with_override(input, &doc, special)?;
    let code = hypermap_code(&map, &basis);
    let budget = resolve_budget(budget)?;
    let threads = resolve_threads(threads);
    let distance = if code.k() > 0 {
        Some(
            code.min_distance_with_threads(budget, threads)
                .expect("budget checked and k > 0")
                .clone(),
        )
    } else {
        None
    };
    let report = Report::new(&map, &code, distance.as_ref());
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(())
}

fn parse_hole(text: &str) -> Result<HoleSpec, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let values: Option<Vec<usize>> = parts.iter().map(|p| p.trim().parse().ok()).collect();
    match values.as_deref() {
        Some([row, col, height, width]) => Ok(HoleSpec {
            row: *row,
            col: *col,
            height: *height,
            width: *width,
        }),
        _ => Err(CliError::Usage(format!(
            "invalid --hole {text:?}; expected row,col,height,width"
        ))),
    }
}

fn write_matrix_pair(out: &Path, hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<(), CliError> {
    let path_for = |suffix: &str| {
        let mut name = out.file_name().map(|s| s.to_os_string()).unwrap_or_default();
        name.push(suffix);
        out.with_file_name(name)
    };
    write_file(&path_for(".hx.txt"), &format!("{hx}\n"))?;
    write_file(&path_for(".hz.txt"), &format!("{hz}\n"))?;
    Ok(())
}

fn cmd_gen(gen: GenCommand) -> Result<(), CliError> {
    match gen {
        GenCommand::Toric { m, out } => {
            let code = gen_toric(m).map_err(|e| CliError::Usage(e.to_string()))?;
            write_matrix_pair(&out, code.hx(), code.hz())
        }
        GenCommand::Planar {
            rows,
            cols,
            holes,
            out,
        } => {
            let holes: Vec<HoleSpec> = holes
                .iter()
                .map(|h| parse_hole(h))
                .collect::<Result<_, _>>()?;
            let code =
                gen_planar(rows, cols, &holes).map_err(|e| CliError::Usage(e.to_string()))?;
            write_matrix_pair(&out, code.hx(), code.hz())
        }
        GenCommand::GridHypermap { m, out } => {
            let (map, basis) =
                gen_grid_hypermap(m).map_err(|e| CliError::Usage(e.to_string()))?;
            let name = format!("grid-hypermap m={m}");
            write_file(
                &out,
                &print_document(Some(&name), &map, Some(basis.special_darts())),
            )
        }
        GenCommand::Honeycomb { p, q, out } => {
            let (map, basis) =
                gen_honeycomb_hypermap(p, q).map_err(|e| CliError::Usage(e.to_string()))?;
            let name = format!("honeycomb p={p} q={q}");
            write_file(
                &out,
                &print_document(Some(&name), &map, Some(basis.special_darts())),
            )
        }
        GenCommand::Fixture { name, out } => {
            let which = Fixture::from_name(&name).map_err(|e| CliError::Usage(e.to_string()))?;
            match fixture(which) {
                FixtureValue::Code(code) => write_matrix_pair(&out, code.hx(), code.hz()),
                FixtureValue::Map(map) => {
                    write_file(&out, &print_document(Some(which.name()), &map, None))
                }
            }
        }
    }
}

fn load_matrix(path: &Path) -> Result<BinaryMatrix, CliError> {
    let text = read_file(path)?;
    text.parse().map_err(|e: hypercode_core::f2::BitTextError| CliError::MatrixParse {
        path: path.to_path_buf(),
        line: e.line,
        col: e.col,
        message: e.to_string(),
    })
}

fn cmd_export(
    input: &Path,
    hz: Option<&Path>,
    special: Option<Vec<usize>>,
    format: ExportFormat,
    out: &Path,
) -> Result<(), CliError> {
    let (hx, hz) = match hz {
        Some(hz_path) => {
            if special.is_some() {
                return Err(CliError::Usage(
                    "--special applies only to hypermap documents".into(),
                ));
            }
            (load_matrix(input)?, load_matrix(hz_path)?)
        }
        None => {
            let doc = load_document(input)?;
            let (map, basis) = realize_with_override(input, &doc, special)?;
            let code = hypermap_code(&map, &basis);
            (code.hx().clone(), code.hz().clone())
        }
    };
    let path_for = |suffix: &str| {
        let mut name = out.file_name().map(|s| s.to_os_string()).unwrap_or_default();
        name.push(suffix);
        out.with_file_name(name)
    };
    match format {
        ExportFormat::Alist => {
            write_file(&path_for(".hx.alist"), &write_alist(&hx))?;
            write_file(&path_for(".hz.alist"), &write_alist(&hz))?;
        }
        ExportFormat::DenseText => {
            write_file(&path_for(".hx.txt"), &format!("{hx}\n"))?;
            write_file(&path_for(".hz.txt"), &format!("{hz}\n"))?;
        }
    }
    Ok(())
}

fn cmd_check(input: &Path, hz: Option<&Path>, special: Option<Vec<usize>>) -> Result<(), CliError> {
    let mut failures: Vec<String> = Vec::new();
    let mut record = |name: &str, outcome: Result<(), String>| match outcome {
        Ok(()) => println!("{name}: pass"),
        Err(detail) => {
            println!("{name}: FAIL ({detail})");
            failures.push(name.to_string());
        }
    };

    match hz {
        Some(hz_path) => {
            let hx = load_matrix(input)?;
            let hz = load_matrix(hz_path)?;
            record(
                "orthogonality H_X H_Z^T = 0",
                match CssCode::new(hx, hz) {
                    Ok(_) => Ok(()),
                    Err(e) => Err(e.to_string()),
                },
            );
        }
        None => {
            let doc = load_document(input)?;
            // transitivity is checked by realization; report it as a named check
            let realized = realize_with_override(input, &doc, special);
            match realized {
                Err(CliError::Doc {
                    source: DocError::InvalidHypermap(detail),
                    ..
                }) => {
                    record("transitivity", Err(detail));
                }
                Err(other) => return Err(other),
                Ok((map, basis)) => {
                    record("transitivity", Ok(()));
                    let code = hypermap_code(&map, &basis);
                    record(
                        "orthogonality H_X H_Z^T = 0",
                        if code
                            .hx()
                            .mul(&code.hz().transpose())
                            .expect("shapes agree")
                            .is_zero()
                        {
                            Ok(())
                        } else {
                            Err("nonzero product".into())
                        },
                    );
                    let dims = homology_dimensions(&map);
                    let expected = (1, 2 * map.genus(), 1);
                    record(
                        "homology dimensions (1, 2g, 1)",
                        if dims == expected {
                            Ok(())
                        } else {
                            Err(format!("got {dims:?}, expected {expected:?}"))
                        },
                    );
                    record(
                        "k = 2g",
                        if code.k() == 2 * map.genus() {
                            Ok(())
                        } else {
                            Err(format!("k = {}, 2g = {}", code.k(), 2 * map.genus()))
                        },
                    );
                }
            }
        }
    }

    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::FailedCheck(format!(
            "{} check(s) failed: {}",
            failures.len(),
            failures.join(", ")
        )))
    }
}
