use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use wielandt_verify::golden::GoldenTable;
use wielandt_verify::runner::{all_ok, render, run_plan, select_cases, strip_timings, Format, Registry};
use wielandt_verify::scenario::{Params, RunContext};

#[derive(Parser)]
#[command(name = "wielandt", about = "Run half-transitivity verification scenarios")]
struct Cli {
    /// Golden file to compare against instead of the shipped one.
    #[arg(long, global = true)]
    golden: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List scenarios and the claim each one checks.
    List,
    /// Run one scenario, optionally restricted to given parameters.
    Run {
        scenario: String,
        #[arg(long)]
        q: Option<i64>,
        /// Extra parameter as key=value; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        no_timings: bool,
    },
    /// Run every registered case.
    RunAll {
        #[arg(long)]
        skip_slow: bool,
        /// Restrict to these scenario ids; repeatable.
        #[arg(long)]
        only: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run every registered case and write a report.
    Report {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        skip_slow: bool,
        /// Restrict to these scenario ids; repeatable.
        #[arg(long)]
        only: Vec<String>,
        /// Omit runtimes so that repeated reports are byte-identical.
        #[arg(long)]
        no_timings: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Regenerate the golden file from fresh results (overwrites PATH).
    Golden {
        #[arg(long, required = true)]
        write: bool,
        #[arg(long, default_value = "crates/verify/golden/golden.json")]
        path: PathBuf,
        #[arg(long)]
        skip_slow: bool,
        /// Restrict to these scenario ids; repeatable.
        #[arg(long)]
        only: Vec<String>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn load_golden(path: &Option<PathBuf>) -> Result<GoldenTable, String> {
    match path {
        Some(p) => GoldenTable::load(p).map_err(|e| e.to_string()),
        None => Ok(GoldenTable::shipped()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let registry = Registry::standard();
    let golden = match load_golden(&cli.golden) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    match cli.command {
        Command::List => {
            for s in registry.all() {
                let cases = s.cases();
                let slow = cases.iter().filter(|c| c.slow).count();
                println!("{:<22} {} case(s), {} slow  {}", s.id(), cases.len(), slow, s.claim());
            }
            ExitCode::SUCCESS
        }
        Command::Run {
            scenario,
            q,
            params,
            seed,
            jobs,
            format,
            no_timings,
        } => {
            let Some(s) = registry.find(&scenario) else {
                eprintln!("unknown scenario {scenario:?}; see `wielandt list`");
                return ExitCode::from(2);
            };
            let mut overrides = Params::new();
            if let Some(q) = q {
                overrides = overrides.with("q", q);
            }
            for a in &params {
                if let Err(e) = overrides.parse_assignment(a) {
                    eprintln!("{e}");
                    return ExitCode::from(2);
                }
            }
            let plan: Vec<_> = select_cases(s, &overrides).into_iter().map(|p| (s, p)).collect();
            let mut results = run_plan(&plan, &RunContext { seed }, &golden, jobs);
            if no_timings {
                strip_timings(&mut results);
            }
            print!("{}", render(&results, format));
            exit_for(all_ok(&results))
        }
        Command::RunAll {
            skip_slow,
            only,
            seed,
            jobs,
        } => {
            if let Err(code) = check_ids(&registry, &only) {
                return code;
            }
            let results = run_plan(&registry.plan(skip_slow, &only), &RunContext { seed }, &golden, jobs);
            print!("{}", render(&results, Format::Text));
            exit_for(all_ok(&results))
        }
        Command::Report {
            format,
            out,
            skip_slow,
            only,
            no_timings,
            seed,
            jobs,
        } => {
            if let Err(code) = check_ids(&registry, &only) {
                return code;
            }
            let mut results = run_plan(&registry.plan(skip_slow, &only), &RunContext { seed }, &golden, jobs);
            if no_timings {
                strip_timings(&mut results);
            }
            if let Err(e) = std::fs::write(&out, render(&results, format)) {
                eprintln!("cannot write {}: {e}", out.display());
                return ExitCode::from(2);
            }
            exit_for(all_ok(&results))
        }
        Command::Golden {
            write: _,
            path,
            skip_slow,
            only,
            jobs,
        } => {
            if let Err(code) = check_ids(&registry, &only) {
                return code;
            }
            let results = run_plan(&registry.plan(skip_slow, &only), &RunContext::default(), &golden, jobs);
            let errors: Vec<_> = results.iter().filter(|r| r.observations.is_empty()).collect();
            for r in &errors {
                eprintln!("{} [{}] produced no observations: {:?}", r.id, r.params, r.mismatches);
            }
            let mut table = golden;
            table.absorb(&results);
            if let Err(e) = std::fs::write(&path, table.to_json()) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
            eprintln!("wrote {} entries to {}", table.entries.len(), path.display());
            exit_for(errors.is_empty())
        }
    }
}

fn check_ids(registry: &Registry, ids: &[String]) -> Result<(), ExitCode> {
    match ids.iter().find(|id| registry.find(id).is_none()) {
        Some(id) => {
            eprintln!("unknown scenario {id:?}; see `wielandt list`");
            Err(ExitCode::from(2))
        }
        None => Ok(()),
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
