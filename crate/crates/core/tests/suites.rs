use frobquartic::suites::{run_suite, Status, Suite, SuiteConfig};

#[test]
fn every_suite_passes_at_the_default_configuration() {
    let report = run_suite(Suite::All, &SuiteConfig::default()).unwrap();
    let failed: Vec<_> = report.checks.iter().filter(|c| c.status == Status::Fail).collect();
    println!("{}", report.to_text());
    assert!(failed.is_empty(), "{failed:#?}");
}
