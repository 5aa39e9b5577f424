use std::process::ExitCode;

use clap::Parser;
use congruent6_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.doc).expect("report is plain data"));
            } else {
                println!("{}", out.text);
            }
            for f in &out.doc.failures {
                eprintln!("failed: {f}");
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
