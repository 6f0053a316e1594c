use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use zchelp::chartab::{fixtures, parse_table};
use zchelp::engine::{
    enumerate_admissible, multiplicity, tower_doc, usable_brauer_primes, verify_group, OrderStatus, Report, TowerDoc,
    VerifyOptions, INCONSISTENT, VERIFIED,
};
use zchelp::oracle::mu_group_element_audit;
use zchelp::psl2::{build_with_block, generate_brauer_defining, generate_symmetric_powers, Psl2Parameters};
use zchelp::CharacterTable;

#[derive(Parser)]
#[command(
    name = "zchelp",
    version,
    about = "Partial augmentation checks for torsion units of integral group rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan unit orders and decide the Zassenhaus conjecture for the table.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Comma separated orders to scan (default: every divisor of the exponent)
        #[arg(long, value_delimiter = ',')]
        orders: Option<Vec<u64>>,
        /// Only use ordinary characters
        #[arg(long)]
        no_brauer: bool,
        /// Solve on one thread
        #[arg(long)]
        sequential: bool,
        /// Also write the JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, hide = true)]
        audit: bool,
    },
    /// Write the character table of PSL(2, p^f).
    #[command(name = "gen-psl2")]
    GenPsl2 {
        p: u64,
        #[arg(default_value_t = 1)]
        f: u32,
        /// Add the Brauer characters in the defining characteristic (f = 1)
        #[arg(long)]
        brauer: bool,
        /// Add the symmetric powers of the natural module as a partial Brauer block
        #[arg(long, conflicts_with = "brauer")]
        symmetric_powers: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// List the admissible towers of one order with their multiplicities.
    Tuples {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        no_brauer: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check that a table parses and passes all consistency checks.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long, hide = true)]
        audit: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Table file in JSON, `-` for stdin
    #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
    path: Option<PathBuf>,
    /// Use a bundled table instead
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(fixtures::NAMES))]
    fixture: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Style {
    color: bool,
}

impl Style {
    fn detect() -> Self {
        Self {
            color: std::env::var_os("HELP_NO_COLOR").is_none() && io::stdout().is_terminal(),
        }
    }

    fn paint(&self, code: &str, text: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{text}\x1b[0m")
        } else {
            text.to_string()
        }
    }

    fn status(&self, status: OrderStatus) -> String {
        let code = match status {
            OrderStatus::Infeasible | OrderStatus::TrivialOnly => "32",
            OrderStatus::Undecided => "33",
        };
        self.paint(code, status.as_str())
    }

    fn verdict(&self, verdict: &str) -> String {
        let code = match verdict {
            VERIFIED => "1;32",
            INCONSISTENT => "1;31",
            _ => "1;33",
        };
        self.paint(code, verdict)
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => r.context("writing stdout"),
    }
}

fn plural(k: usize, word: &str) -> String {
    if k == 1 {
        format!("{k} {word}")
    } else {
        format!("{k} {word}s")
    }
}

fn load(input: &Input) -> Result<CharacterTable> {
    if let Some(name) = &input.fixture {
        return fixtures::by_name(name).with_context(|| format!("no fixture named {name}"));
    }
    let path = input.path.as_deref().expect("clap requires a path or a fixture");
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_table(&text).with_context(|| format!("invalid table {}", path.display()))
}

fn audit(table: &CharacterTable) -> Result<()> {
    let report = mu_group_element_audit(table)?;
    eprintln!("audit: {} (character, class) pairs checked", report.checked);
    if !report.passed() {
        for f in &report.failures {
            eprintln!("audit: {} at {}: {}", f.character, f.class, f.detail);
        }
        bail!("audit found {} failures", report.failures.len());
    }
    Ok(())
}

fn tower_line(doc: &TowerDoc) -> String {
    doc.iter()
        .rev()
        .map(|(m, tuple)| {
            let entries: Vec<String> = tuple.iter().map(|(c, e)| format!("{c}={e}")).collect();
            format!("[{m}] {}", entries.join(" "))
        })
        .collect::<Vec<_>>()
        .join("  ")
}

fn render_report(report: &Report, style: &Style) -> String {
    let mut out = format!("group {}\n", report.group);
    for o in &report.orders {
        out += &format!(
            "order {:>3}: {} ({}, {} trivial)\n",
            o.n,
            style.status(o.status),
            plural(o.towers.len(), "tower"),
            o.trivial_count
        );
        if o.status == OrderStatus::Undecided {
            for t in &o.towers {
                out += &format!("    {}\n", tower_line(t));
            }
        }
    }
    out += &format!("verdict: {}\n", style.verdict(&report.verdict));
    out
}

fn cmd_verify(
    input: &Input,
    orders: Option<Vec<u64>>,
    no_brauer: bool,
    sequential: bool,
    report_path: Option<&Path>,
    format: Format,
    run_audit: bool,
) -> Result<ExitCode> {
    let table = load(input)?;
    if run_audit {
        audit(&table)?;
    }
    let options = VerifyOptions {
        use_brauer: !no_brauer,
        orders,
        parallel: !sequential && VerifyOptions::default().parallel,
    };
    let report = verify_group(&table, &options)?;
    let json = serde_json::to_string_pretty(&report)?;
    if let Some(path) = report_path {
        fs::write(path, format!("{json}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    match format {
        Format::Json => emit(&format!("{json}\n"))?,
        Format::Text => emit(&render_report(&report, &Style::detect()))?,
    }
    Ok(match report.verdict.as_str() {
        VERIFIED => ExitCode::SUCCESS,
        INCONSISTENT => ExitCode::from(1),
        _ => ExitCode::from(2),
    })
}

fn cmd_gen_psl2(p: u64, f: u32, brauer: bool, symmetric_powers: bool, output: Option<&Path>) -> Result<ExitCode> {
    let par = Psl2Parameters::new(p, f)?;
    if brauer && f != 1 {
        bail!(
            "--brauer needs q = p: the Brauer characters of PSL(2, {}) in characteristic {p} are not generated",
            par.q
        );
    }
    let block = if brauer {
        Some(generate_brauer_defining(&par)?)
    } else if symmetric_powers {
        Some(generate_symmetric_powers(&par)?)
    } else {
        None
    };
    let table = build_with_block(&par, block)?;
    let json = table.to_json()?;
    match output {
        Some(path) => fs::write(path, format!("{json}\n")).with_context(|| format!("writing {}", path.display()))?,
        None => emit(&format!("{json}\n"))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn mu_json(value: &impl std::fmt::Display) -> Value {
    match value.to_string().parse::<i64>() {
        Ok(k) => json!(k),
        Err(_) => json!(value.to_string()),
    }
}

fn cmd_tuples(input: &Input, n: u64, no_brauer: bool, format: Format) -> Result<ExitCode> {
    let table = load(input)?;
    let divides = n > 1 && table.exponent % n == 0;
    let towers = if n > 1 {
        enumerate_admissible(&table, n, !no_brauer)?
    } else {
        Vec::new()
    };
    if towers.is_empty() {
        match format {
            Format::Json => emit(&format!(
                "{}\n",
                json!({ "order": n, "status": "infeasible", "towers": [] })
            ))?,
            Format::Text => emit(&format!("order {n}: infeasible\n"))?,
        }
        if !divides {
            eprintln!("error: {n} is not a divisor > 1 of the exponent {}", table.exponent);
            return Ok(ExitCode::from(1));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let primes = if no_brauer {
        Default::default()
    } else {
        usable_brauer_primes(&table, n)
    };
    let characters: Vec<_> = table
        .ordinary
        .iter()
        .chain(
            table
                .brauer
                .iter()
                .filter(|b| primes.contains(&b.prime))
                .flat_map(|b| &b.characters),
        )
        .collect();
    let mut docs = Vec::new();
    let mut text = String::new();
    for (i, tower) in towers.iter().enumerate() {
        let mut mus = serde_json::Map::new();
        text += &format!(
            "tower {}{}: {}\n",
            i + 1,
            if tower.is_trivial() { " (trivial)" } else { "" },
            tower_line(&tower_doc(&table, tower))
        );
        for psi in &characters {
            let values = (0..n)
                .map(|t| multiplicity(&table, psi, tower, t))
                .collect::<zchelp::Result<Vec<_>>>()?;
            let label = match psi.brauer_prime() {
                Some(p) => format!("{} (mod {p})", psi.name),
                None => psi.name.clone(),
            };
            let shown: Vec<String> = values.iter().map(ToString::to_string).collect();
            text += &format!("    mu {label:<12} {}\n", shown.join(" "));
            mus.insert(label, Value::Array(values.iter().map(mu_json).collect()));
        }
        docs.push(json!({
            "tuples": tower_doc(&table, tower),
            "trivial": tower.is_trivial(),
            "multiplicities": mus,
        }));
    }
    match format {
        Format::Json => emit(&format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({ "order": n, "towers": docs }))?
        ))?,
        Format::Text => emit(&format!(
            "order {n}: {}\n{text}",
            plural(towers.len(), "admissible tower")
        ))?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_validate(input: &Input, run_audit: bool) -> Result<ExitCode> {
    let table = load(input)?;
    let mut out = format!(
        "{}: order {}, exponent {}, {} classes, {} ordinary characters\n",
        table.name,
        table.order,
        table.exponent,
        table.classes.len(),
        table.ordinary.len()
    );
    for block in &table.brauer {
        let note = match table.validate_decomposition(block) {
            Ok(r) if r.passed() => "decomposition matrix checked".to_string(),
            Ok(r) => bail!(
                "decomposition matrix mod {} fails at {} entries",
                block.prime,
                r.failures.len()
            ),
            Err(zchelp::Error::MissingDecomposition(_)) => "no decomposition matrix".to_string(),
            Err(e) => return Err(e.into()),
        };
        out += &format!(
            "  mod {}: {} Brauer characters, {note}\n",
            block.prime,
            block.characters.len()
        );
    }
    if run_audit {
        audit(&table)?;
    }
    emit(&(out + "ok\n"))?;
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            input,
            orders,
            no_brauer,
            sequential,
            report,
            format,
            audit,
        } => cmd_verify(&input, orders, no_brauer, sequential, report.as_deref(), format, audit),
        Command::GenPsl2 {
            p,
            f,
            brauer,
            symmetric_powers,
            output,
        } => cmd_gen_psl2(p, f, brauer, symmetric_powers, output.as_deref()),
        Command::Tuples {
            input,
            order,
            no_brauer,
            format,
        } => cmd_tuples(&input, order, no_brauer, format),
        Command::Validate { input, audit } => cmd_validate(&input, audit),
    }
}

fn main() -> ExitCode {
    // exit code 2 means undecided, so usage errors get 1
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(1)
    })
}
