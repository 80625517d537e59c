use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lffc::{run, Backend, Check, EpsilonMode, OutputFormat, RunConfig, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "lffc", version, about = "Exact L-functions and epsilon factors over F_q(t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// json or table
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Comma-separated subset of funceq,rh,modulus,degree (or all, none)
    #[arg(long, global = true, default_value = "all")]
    checks: String,
    /// Multiply out every Euler factor up to degree n instead of using the functional equation
    #[arg(long, global = true)]
    full_product: bool,
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, default_value_t = 1e-8)]
    rh_tol: f64,
    /// auto, table, compute, or an exact value
    #[arg(long, global = true, default_value = "auto", allow_hyphen_values = true)]
    epsilon: String,
    /// List places up to this degree in the report
    #[arg(long, global = true)]
    list_degree: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Zeta function of F_q(t) or of u^2 = f(t)
    Zeta {
        #[arg(long)]
        q: String,
        #[arg(long, conflicts_with = "rational", required_unless_present = "rational")]
        hyperelliptic: Option<String>,
        #[arg(long)]
        rational: bool,
    },
    /// L-function of an elliptic curve over F_q(t)
    Ell {
        #[arg(long)]
        q: String,
        #[arg(long, default_value = "0")]
        a1: String,
        #[arg(long, default_value = "0")]
        a2: String,
        #[arg(long, default_value = "0")]
        a3: String,
        #[arg(long, default_value = "0")]
        a4: String,
        #[arg(long, default_value = "0")]
        a6: String,
    },
    /// L-function of a Dirichlet character of F_q[t]
    Dirichlet {
        #[arg(long)]
        q: String,
        /// P:base:zeta<m>^<e>, repeatable
        #[arg(long = "component", required = true)]
        components: Vec<String>,
    },
    /// A stratification read from a JSON file
    Generic {
        #[arg(long)]
        input: PathBuf,
    },
}

fn config(cli: Cli) -> Result<RunConfig, String> {
    let backend = match cli.command {
        Command::Zeta { q, hyperelliptic, .. } => Backend::Zeta { q, hyperelliptic },
        Command::Ell { q, a1, a2, a3, a4, a6 } => Backend::Ell {
            q,
            a: [a1, a2, a3, a4, a6],
        },
        Command::Dirichlet { q, components } => Backend::Dirichlet { q, components },
        Command::Generic { input } => {
            let text = std::fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            let input = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", input.display()))?;
            Backend::Generic { input }
        }
    };
    let c = cli.common;
    let mut cfg = RunConfig::new(backend);
    cfg.format = c.format.parse::<OutputFormat>().map_err(|e| e.to_string())?;
    cfg.checks = Check::parse_list(&c.checks).map_err(|e| e.to_string())?;
    cfg.epsilon = c.epsilon.parse::<EpsilonMode>().map_err(|e| e.to_string())?;
    cfg.full_product = c.full_product;
    cfg.workers = c.workers;
    cfg.rh_tol = c.rh_tol;
    cfg.list_degree = c.list_degree;
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // usage errors are input errors; 2 is reserved for failed checks
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT as u8 } else { 0 });
        }
    };
    let cfg = match config(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let out = run(&cfg);
    print!("{}", out.text);
    if let Some(e) = out.error {
        eprintln!("{e}");
    }
    ExitCode::from(out.exit_code as u8)
}
