//! Run the full check registry and print the summary plus any failures.
//! Pass `--json` to print the whole report instead.

use strange_duality::verify::Verifier;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let report = Verifier::new().run_all();
    if std::env::args().any(|a| a == "--json") {
        println!("{}", report.to_json());
        return Ok(());
    }
    let s = report.summary;
    println!("{} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
    for f in report.failures() {
        println!("FAIL {} {}: {}", f.check_id, f.subject, f.details);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
