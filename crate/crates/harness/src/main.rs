use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use trigroup::config::SceneJson;
use trigroup_harness::campaign::{run_campaign, CampaignSpec, Theorem};
use trigroup_harness::expr::{eval_expression, Mode};
use trigroup_harness::figure::{emit_figure, FigureName};
use trigroup_harness::show::{parse_shown, show_element, show_scene, Shown};
use trigroup_harness::{HarnessError, EXIT_FAIL, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "trigroup", version, about = "Exact checks of generalized Desargues, Pappus and Pascal theorems and the group of triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded verification campaign.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Base seed; the TG_SEED environment variable takes precedence.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Print the full JSON report instead of a summary line.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate triangle arithmetic: `#` pre-sum, `+` sum, unary `-`, `half(..)`.
    Eval {
        expr: String,
        /// JSON object of named elements; read from stdin when omitted.
        #[arg(long)]
        inputs: Option<PathBuf>,
        /// Evaluate `#` through the geometric construction.
        #[arg(long)]
        geometric: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write one of the figures as SVG.
    Figure {
        #[arg(value_enum)]
        name: FigureName,
        /// Scene JSON for figures drawn from a scene.
        #[arg(long)]
        scene: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pretty-print an element or a scene given as JSON (file or `-`).
    Show {
        #[arg(default_value = "-")]
        input: String,
        /// Re-emit canonical JSON.
        #[arg(long)]
        json: bool,
    },
}

fn read_json(path: Option<&std::path::Path>) -> Result<Value, HarnessError> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    Ok(serde_json::from_str(&text)?)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), HarnessError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn env_seed(default: u64) -> Result<u64, HarnessError> {
    match std::env::var("TG_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| HarnessError::Usage(format!("TG_SEED is not an integer: {v:?}"))),
        Err(_) => Ok(default),
    }
}

fn run(cli: Cli) -> Result<i32, HarnessError> {
    match cli.command {
        Command::Verify { theorem, trials, seed, jobs, json, out } => {
            let spec = CampaignSpec { theorem, trials, seed: env_seed(seed)?, jobs };
            let report = run_campaign(&spec)?;
            if json {
                print!("{}", report.to_json());
            } else {
                println!("{}", report.summary());
                if let Some(f) = &report.first_failure {
                    println!("first failure: trial {} (seed {}): {}", f.index, f.seed, f.reason);
                }
            }
            if let Some(p) = out {
                std::fs::write(p, report.to_json())?;
            }
            Ok(report.exit_code())
        }
        Command::Eval { expr, inputs, geometric, json, out } => {
            let inputs = read_json(inputs.as_deref())?;
            let mode = if geometric { Mode::Geometric } else { Mode::Coordinates };
            let result = eval_expression(&expr, &inputs, mode)?;
            let text = if json {
                serde_json::to_string_pretty(&serde_json::json!({ "expr": expr, "result": result }))? + "\n"
            } else {
                serde_json::to_string(&result)? + "\n"
            };
            emit(&text, out.as_ref())?;
            Ok(0)
        }
        Command::Figure { name, scene, out } => {
            let scene: Option<SceneJson> = match scene {
                Some(p) => Some(serde_json::from_value(read_json(Some(&p))?)?),
                None => None,
            };
            let fig = emit_figure(name, scene.as_ref())?;
            emit(&fig.svg, out.as_ref())?;
            for w in &fig.warnings {
                eprintln!("warning: {w}");
            }
            Ok(if fig.warnings.is_empty() { 0 } else { EXIT_FAIL })
        }
        Command::Show { input, json } => {
            let path = PathBuf::from(&input);
            let v = read_json(Some(&path))?;
            let text = match parse_shown(&v)? {
                Shown::Element(x) if json => serde_json::to_string_pretty(&x)? + "\n",
                Shown::Element(x) => show_element(&x),
                Shown::Scene(s) if json => {
                    let canonical = match s.to_scene()? {
                        trigroup::config::Scene::Central(c) => c.to_json(),
                        trigroup::config::Scene::Axis(a) => a.to_json(),
                    };
                    serde_json::to_string_pretty(&canonical)? + "\n"
                }
                Shown::Scene(s) => show_scene(&s)?,
            };
            print!("{text}");
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let code = e.exit_code();
            ExitCode::from(if code == 0 { EXIT_USAGE } else { code } as u8)
        }
    }
}
