use brauer_core::report::{CheckRecord, VerificationReport, Verdict};
use brauer_core::suites::{run_suite, SuiteOptions};
use proptest::prelude::*;

fn record() -> impl Strategy<Value = CheckRecord> {
    ("[a-z.]{1,12}", "[ -~]{0,30}", prop::option::of("[ -~]{0,20}"), 0u8..3, prop::collection::btree_map("[a-z]{1,4}", "[0-9/]{1,5}", 0..3))
        .prop_map(|(id, statement, witness, v, params)| {
            let mut r = CheckRecord::new(&id, &statement);
            r.parameters = params;
            r.witness = witness;
            r.verdict = match v {
                0 => Verdict::Pass,
                1 => Verdict::Fail,
                _ => Verdict::Skipped("needs --big".into()),
            };
            r
        })
}

proptest! {
    #[test]
    fn json_round_trip(checks in prop::collection::vec(record(), 0..6), seed in any::<u64>()) {
        let mut report = VerificationReport::new("prop", seed);
        report.checks = checks;
        let back = VerificationReport::from_json(&report.to_json()).unwrap();
        prop_assert_eq!(&back, &report);
        let (p, f, s) = report.counts();
        prop_assert_eq!(p + f + s, report.checks.len());
        prop_assert_eq!(report.passed(), f == 0);
    }
}

#[test]
fn skipped_checks_carry_a_reason() {
    let opts = SuiteOptions { n: 5, ..SuiteOptions::default() };
    let report = run_suite("positivity", &opts).unwrap();
    let skipped: Vec<_> = report.checks.iter().filter(|c| matches!(c.verdict, Verdict::Skipped(_))).collect();
    assert_eq!(skipped.len(), 1);
    assert_eq!(skipped[0].id, "positivity.gram.5");
    assert!(report.passed());
    assert!(report.to_json().contains("\"reason\": \"n = 5 needs --big\""));
}

#[test]
fn exceptional_suite_reports_the_discrepancy() {
    let report = run_suite("exceptional", &SuiteOptions::default()).unwrap();
    assert!(!report.passed());
    let s_star = report.checks.iter().find(|c| c.id == "exceptional.s_star").unwrap();
    assert!(s_star.witness.as_deref().unwrap().contains("{-2,0,1,2,3,4}"));
}
