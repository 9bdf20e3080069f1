use specfun::selftest;

fn check(rep: selftest::SuiteReport) {
    println!(
        "{}: {} cases, max error {:.2e} (tol {:.0e}), {} failures",
        rep.name,
        rep.cases,
        rep.max_error,
        rep.tolerance,
        rep.failures.len()
    );
    for f in rep.failures.iter().take(10) {
        println!("  {f}");
    }
    assert!(rep.passed(), "{} failed", rep.name);
}

#[test]
fn laguerre_recurrence() {
    check(selftest::laguerre_recurrence_suite());
}

#[test]
fn j_integral() {
    check(selftest::j_integral_suite());
}

#[test]
fn y_integral() {
    check(selftest::y_integral_suite());
}

#[test]
fn k_integral() {
    check(selftest::k_integral_suite());
}

#[test]
fn i_integral() {
    check(selftest::i_integral_suite());
}

#[test]
fn kummer_transform() {
    check(selftest::kummer_transform_suite());
}

#[test]
fn kummer_ratio() {
    check(selftest::kummer_ratio_suite());
}

#[test]
fn cut_exponential_integral() {
    check(selftest::cut_exponential_integral_suite());
}
