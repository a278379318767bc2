//! The `sumbasis` command-line tool: sumset profiles, spectra, extremal
//! searches, separation checks, verified constructions, and reference-table
//! regeneration, over a persistent validated result cache.

pub mod args;
pub mod cache;
pub mod commands;
pub mod render;
pub mod tables;

use clap::Parser;

/// Parse arguments, run, and map the outcome to the stable exit-code set.
pub fn run() -> i32 {
    let cli = args::Cli::parse();
    match commands::execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
