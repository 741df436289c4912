//! Reading an instance document, deciding it and emitting a run report.

use std::time::Instant;

use invlfp::io::{parse_document, RunReport};
use invlfp::{decide, Scenario, Solver, SolveOptions};

const DOC: &str = r#"{
  "form": "natural",
  "A": [["1"], ["-1"]],
  "B": [["1"], ["0"]],
  "b": ["0", "0"],
  "c": ["-1"],
  "X": {"D": [["1"], ["-1"]], "d": ["1", "0"]},
  "target": {"kind": "polyhedron", "S": [["1"], ["-1"]], "t": ["1/4", "-1/4"]},
  "scenario": "pessimistic"
}"#;

fn main() -> invlfp::Result<()> {
    let doc = parse_document(DOC)?;
    let scenario = doc.scenario.unwrap_or(Scenario::Optimistic);
    let start = Instant::now();
    let routed = decide(&doc.instance, &doc.target, scenario, Solver::Auto, &SolveOptions::default())?;
    let ms = start.elapsed().as_secs_f64() * 1e3;
    println!("{}", RunReport::new(&routed.decision, routed.path, ms).to_json());
    Ok(())
}
