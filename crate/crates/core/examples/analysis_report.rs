//! The report behind `bgpoly analyze`, built from the library.

use bgpoly::cli::{analyze, verify, AnalyzeOptions, VerifyLevel};
use bgpoly::graphs::parse_edge_list;
use bgpoly::Limits;

fn main() -> bgpoly::Result<()> {
    let limits = Limits::default();
    let g = parse_edge_list("# 1-2-3-4 path\n4\n1 2\n2 3\n3 4\n")?;
    let report = analyze(&g, &AnalyzeOptions::default(), &limits)?;
    print!("{}", report.to_text());
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    print!("{}", verify(&g, VerifyLevel::Full, 3, &limits)?.to_text());
    Ok(())
}
