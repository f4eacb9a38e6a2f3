// Render one census as a table, CSV and JSON.

use graph_census::report::{run, Format, RunConfig};
use graph_census::Mode;

pub fn run_example() -> graph_census::Result<()> {
    for format in [Format::Table, Format::Csv, Format::Json] {
        let mut cfg = RunConfig::new(5, Mode::Sc);
        cfg.format = format;
        cfg.workers = 2;
        let out = run(&cfg)?;
        println!("--- {format}");
        print!("{}", out.text);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
