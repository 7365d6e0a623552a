mod cache;
mod extend;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use octarep::{build_restriction_matrix, parking_decomposition, verify, Budget, ParkingSpec, Space};
use serde_json::{Map, Value};

use crate::cache::{TableCache, TableFile};
use crate::extend::{ExtendOptions, ExtendReport, Strategy};

#[derive(Parser, Debug)]
#[command(name = "octarep", version, about = "Signed symmetric group actions on (Z/mZ)^n and their extensions")]
struct Cli {
    /// Directory for cached character tables.
    #[arg(long, global = true, env = "OCTAREP_CACHE")]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Suppress warnings; `extend` also suppresses its report and answers
    /// through the exit status alone.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    B,
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Multiplicity,
    Character,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Self {
        match s {
            SpaceArg::Multiplicity => Space::Multiplicity,
            SpaceArg::Character => Space::Character,
        }
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Branch-and-bound node limit per solve.
    #[arg(long, default_value_t = Budget::default().max_nodes)]
    max_nodes: u64,

    /// Wall-clock limit per solve in milliseconds; 0 disables it.
    #[arg(long, default_value_t = 120_000)]
    time_limit_ms: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        let time_limit = (self.time_limit_ms > 0).then(|| Duration::from_millis(self.time_limit_ms));
        Budget { max_nodes: self.max_nodes, time_limit }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose C[(Z/mZ)^n] into irreducibles of B_n.
    Decompose {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Print the character table of B_n or S_n.
    CharacterTable {
        #[arg(value_enum, ignore_case = true)]
        group: Group,
        n: usize,
    },
    /// Print the restriction matrix between the support and its first-row extension.
    RestrictionMatrix {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Find a B_(n+1) representation restricting to C[(Z/mZ)^n].
    Extend {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        #[arg(long, value_enum, default_value_t = SpaceArg::Multiplicity)]
        space: SpaceArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run `extend` over a grid of (n, m) and write a CSV summary.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m_max: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = SpaceArg::Multiplicity)]
        space: SpaceArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the acceptance checks and print one line per check.
    VerifyPaper {
        /// Run only these checks (1 to 9); may be repeated.
        #[arg(long = "criterion", value_parser = clap::value_parser!(u64).range(1..=9))]
        criteria: Vec<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let cache = TableCache::new(cli.cache_dir.clone(), cli.quiet);
    match &cli.command {
        Command::Decompose { n, m } => {
            let d = parking_decomposition(&ParkingSpec::new(*n as usize, *m)?);
            match cli.format {
                Format::Json => println!("{}", render::multiplicities_json(&d)),
                Format::Text => print!("{}", render::multiplicities_text(&d)),
            }
            Ok(0)
        }
        Command::CharacterTable { group, n } => {
            let file = match group {
                Group::B => TableFile::from_hyp(&cache.hyp(*n)),
                Group::S => TableFile::from_sym(&cache.sym(*n)),
            };
            match cli.format {
                Format::Json => println!("{}", render::json(&file)),
                Format::Text => {
                    println!("{}_{} character table (rows: irreducibles, columns: classes)", file.group, file.n);
                    print!("{}", render::grid(&file.labels, &file.classes, &file.values));
                }
            }
            Ok(0)
        }
        Command::RestrictionMatrix { n, m } => {
            let r = build_restriction_matrix(*n as usize, *m)?;
            match cli.format {
                Format::Json => println!("{}", render::json(&render::restriction_matrix_value(&r))),
                Format::Text => {
                    println!("rows: support for n = {n}, m = {m}; columns: first-row extensions");
                    print!("{}", render::grid(&r.rows, &r.columns, &r.entries));
                }
            }
            Ok(0)
        }
        Command::Extend { n, m, strategy, space, budget } => {
            let opts = ExtendOptions { strategy: *strategy, space: (*space).into(), budget: budget.budget(), cache: &cache };
            let report = extend::extend(*n as usize, *m, &opts)?;
            if !cli.quiet {
                print_report(&report, cli.format);
            }
            Ok(report.exit_code())
        }
        Command::Sweep { n_max, m_max, jobs, out, space, budget } => {
            // Fail on an unwritable destination before doing any work.
            let dir = match out.parent() {
                Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
                _ => PathBuf::from("."),
            };
            let tmp = tempfile::NamedTempFile::new_in(&dir)
                .with_context(|| format!("cannot write to {}", out.display()))?;
            if out.is_dir() {
                bail!("{} is a directory", out.display());
            }
            let jobs = jobs.map_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()), |j| j as usize);
            let opts = ExtendOptions { strategy: Strategy::Auto, space: (*space).into(), budget: budget.budget(), cache: &cache };
            let records = extend::sweep(*n_max as usize, *m_max, jobs, &opts)?;
            extend::write_csv(tmp.as_file(), &records)?;
            tmp.persist(out).with_context(|| format!("cannot write to {}", out.display()))?;
            if !cli.quiet {
                match cli.format {
                    Format::Json => println!("{}", render::json(&records)),
                    Format::Text => {
                        for r in &records {
                            println!("n={} m={} {} via {} ({} nodes)", r.n, r.m, r.status, r.method, r.nodes);
                        }
                        println!("wrote {} rows to {}", records.len(), out.display());
                    }
                }
            }
            Ok(0)
        }
        Command::VerifyPaper { criteria } => {
            let ids: Vec<usize> = if criteria.is_empty() {
                (1..=verify::CRITERIA.len()).collect()
            } else {
                criteria.iter().map(|&c| c as usize).collect()
            };
            let mut reports = Vec::new();
            for id in ids {
                let r = verify::run(id).expect("id validated by the parser");
                if cli.format == Format::Text {
                    println!("{r}");
                }
                reports.push(r);
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            match cli.format {
                Format::Text => {
                    println!(
                        "note: the type B parking space BP_n is read as OP_(n,n) = C[(Z/(2n+1)Z)^n]; \
                         n <= 4 falls inside the sweep check, n = 5..7 can be run with `extend` and explicit budgets"
                    );
                    println!("{} of {} checks passed", reports.len() - failed, reports.len());
                }
                Format::Json => {
                    let rows: Vec<Value> = reports
                        .iter()
                        .map(|r| {
                            let mut o = Map::new();
                            o.insert("criterion".into(), r.id.into());
                            o.insert("title".into(), r.title.into());
                            o.insert("passed".into(), r.passed.into());
                            o.insert("detail".into(), r.detail.clone().into());
                            o.insert("elapsed_ms".into(), (r.elapsed.as_millis() as u64).into());
                            Value::Object(o)
                        })
                        .collect();
                    println!("{}", render::json(&rows));
                }
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn print_report(r: &ExtendReport, format: Format) {
    match format {
        Format::Json => {
            let mut o = Map::new();
            o.insert("n".into(), r.n.into());
            o.insert("m".into(), r.m.into());
            o.insert("status".into(), r.status.as_str().into());
            o.insert("method".into(), r.method.as_str().into());
            o.insert("witness".into(), r.witness.as_ref().map_or(Value::Null, |w| render::multiplicities_value(&w.entries)));
            o.insert("witness_digest".into(), r.witness_digest().map_or(Value::Null, Value::from));
            o.insert("nodes".into(), r.nodes.into());
            o.insert("wall_ms".into(), (r.elapsed.as_millis() as u64).into());
            o.insert("note".into(), r.note.clone().into());
            println!("{}", render::json(&Value::Object(o)));
        }
        Format::Text => {
            println!("status: {}", r.status);
            println!("method: {}", r.method);
            if let Some(w) = &r.witness {
                println!("witness (verified by restriction):");
                for line in render::multiplicities_text(&w.entries).lines() {
                    println!("  {line}");
                }
            }
            println!("nodes: {}", r.nodes);
            println!("note: {}", r.note);
        }
    }
}
