use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};

use univoque::commands::{envelope, run, Command};

#[derive(Parser, Debug)]
#[command(name = "univoque", version, about = "Expansions in non-integer bases")]
struct Cli {
    /// Print a JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Read one command per line from FILE ('-' for stdin).
    #[arg(long, value_name = "FILE")]
    batch: Option<String>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Parser, Debug)]
#[command(no_binary_name = true)]
struct Line {
    #[command(subcommand)]
    command: Command,
}

/// Runs one command and prints it; returns the exit code.
fn execute(cmd: &Command, json: bool) -> u8 {
    let r = run(cmd);
    let mut out = std::io::stdout().lock();
    if json {
        let _ = writeln!(out, "{}", envelope(cmd.name(), &r));
    }
    match r {
        Ok(o) => {
            if !json {
                let _ = writeln!(out, "{}", o.text);
            }
            0
        }
        Err(e) => {
            if !json {
                eprintln!("error[{}]: {}", e.error().code(), e.error());
            }
            e.exit_code() as u8
        }
    }
}

fn batch(path: &str, json: bool) -> u8 {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error[Io]: {path}: {e}");
            return 2;
        }
    };
    let mut worst = 0;
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let code = match shlex::split(line).map(Line::try_parse_from) {
            Some(Ok(l)) => execute(&l.command, json),
            Some(Err(e)) => {
                report_usage(json, n + 1, &e.to_string());
                2
            }
            None => {
                report_usage(json, n + 1, "unbalanced quotes");
                2
            }
        };
        worst = worst.max(code);
    }
    worst
}

fn report_usage(json: bool, line: usize, msg: &str) {
    let msg = msg.trim();
    if json {
        let v = serde_json::json!({
            "status": "error",
            "command": null,
            "error": {"code": "Usage", "kind": "parse", "message": format!("line {line}: {msg}")},
        });
        println!("{v}");
    } else {
        eprintln!("error[Usage]: line {line}: {msg}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match (&cli.batch, &cli.command) {
        (Some(_), Some(_)) => {
            eprintln!("error[Usage]: --batch cannot be combined with a subcommand");
            2
        }
        (Some(path), None) => batch(path, cli.json),
        (None, Some(cmd)) => execute(cmd, cli.json),
        (None, None) => {
            let _ = Cli::command().print_help();
            2
        }
    };
    ExitCode::from(code)
}
