use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use invlfp::io::{parse_certificate, parse_document, parse_rational_list, serialize_document, Document, RunReport};
use invlfp::reductions::{self, CnfFormula};
use invlfp::{decide, evaluate_fixed_parameter, verify_certificate, Error, Scenario, Solver, SolveOptions, Verdict};
use rand::SeedableRng;

#[derive(Parser)]
#[command(name = "invlfp", version, about = "Exact inverse LP feasibility")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScenarioArg {
    #[value(alias = "optimistic")]
    Opt,
    #[value(alias = "pessimistic")]
    Pess,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    Auto,
    Exhaustive,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    Rhs,
    Basis,
    OnevarRhs,
    OnevarOf,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide an instance file; prints a JSON run report.
    Decide {
        file: String,
        #[arg(long)]
        scenario: Option<ScenarioArg>,
        #[arg(long, value_enum, default_value = "auto")]
        solver: SolverArg,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build an instance file from a DIMACS CNF file or a seeded random formula.
    Generate {
        #[arg(value_enum)]
        reduction: Reduction,
        cnf: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 4)]
        clauses: usize,
        #[arg(long)]
        scenario: Option<ScenarioArg>,
    },
    /// Check a certificate (or the certificate inside a run report).
    Verify {
        instance: String,
        certificate: String,
        #[arg(long)]
        scenario: Option<ScenarioArg>,
    },
    /// Evaluate the scenario condition at a fixed parameter.
    Eval {
        instance: String,
        /// Comma-separated rationals, e.g. "-1,1/2".
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        scenario: Option<ScenarioArg>,
    },
}

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
}

fn scenario_of(flag: Option<ScenarioArg>, doc: &Document) -> Result<Scenario, Error> {
    match flag {
        Some(ScenarioArg::Opt) => Ok(Scenario::Optimistic),
        Some(ScenarioArg::Pess) => Ok(Scenario::Pessimistic),
        None => doc.scenario.ok_or_else(|| Error::Unsupported("no scenario in the file or on the command line".into())),
    }
}

fn verdict_code(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Decide { file, scenario, solver, budget, format: Format::Json } => {
            let doc = parse_document(&read(&file)?)?;
            let scenario = scenario_of(scenario, &doc)?;
            let mut opts = SolveOptions::default();
            if let Some(b) = budget {
                opts.budget = b;
            }
            let solver = match solver {
                SolverArg::Auto => Solver::Auto,
                SolverArg::Exhaustive => Solver::Exhaustive,
            };
            let start = Instant::now();
            let routed = decide(&doc.instance, &doc.target, scenario, solver, &opts)?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            println!("{}", RunReport::new(&routed.decision, routed.path, ms).to_json());
            Ok(verdict_code(routed.decision.is_yes()))
        }
        Cmd::Generate { reduction, cnf, seed, vars, clauses, scenario } => {
            let phi = match (cnf, seed) {
                (Some(path), _) => reductions::parse_dimacs(&read(&path)?)?,
                (None, Some(seed)) => {
                    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                    CnfFormula::random(&mut rng, vars.max(1), clauses)
                }
                (None, None) => return Err(Error::Unsupported("give a DIMACS file or --seed".into())),
            };
            let out = match reduction {
                Reduction::Rhs => reductions::reduce_sat_rhs(&phi),
                Reduction::Basis => reductions::reduce_sat_basis(&phi),
                Reduction::OnevarRhs => reductions::reduce_sat_onevar_rhs(&phi),
                Reduction::OnevarOf => reductions::reduce_sat_onevar_of(&phi),
            };
            let scenario = match scenario {
                Some(ScenarioArg::Opt) => Scenario::Optimistic,
                Some(ScenarioArg::Pess) => Scenario::Pessimistic,
                None => out.scenarios[0],
            };
            let doc = Document { instance: out.instance, target: out.target, scenario: Some(scenario), permutation: None };
            println!("{}", serialize_document(&doc));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { instance, certificate, scenario } => {
            let doc = parse_document(&read(&instance)?)?;
            let scenario = scenario_of(scenario, &doc)?;
            let cert = parse_certificate(&read(&certificate)?)?;
            let v = verify_certificate(&doc.instance, &doc.target, scenario, &cert, &SolveOptions::default())?;
            match &v {
                invlfp::Verification::Accept { witness_x } => {
                    let xs: Vec<String> = witness_x.iter().map(|r| format!("\"{r}\"")).collect();
                    println!("{{\"result\": \"accept\", \"witness_x\": [{}]}}", xs.join(", "));
                }
                invlfp::Verification::Reject(reason) => {
                    println!("{}", serde_json::json!({ "result": "reject", "reason": format!("{reason:?}") }));
                }
            }
            Ok(verdict_code(v.is_accept()))
        }
        Cmd::Eval { instance, x, scenario } => {
            let doc = parse_document(&read(&instance)?)?;
            let scenario = scenario_of(scenario, &doc)?;
            let x = parse_rational_list(&x)?;
            let v = evaluate_fixed_parameter(&doc.instance, &doc.target, scenario, &x)?;
            println!("{}", serde_json::json!({ "verdict": v }));
            Ok(verdict_code(v == Verdict::Yes))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
