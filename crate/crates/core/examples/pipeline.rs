//! End-to-end run: load a problem file, rank the plans and print a report.

use std::path::Path;

use greyrank::{execute, Input, RunOptions};

fn main() -> greyrank::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/table1.json").to_string());
    let report = execute(Input::load(Path::new(&path))?, &RunOptions::default())?;
    print!("{}", report.to_text());
    for warning in &report.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(())
}
