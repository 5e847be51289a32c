//! Internal consistency of the peak-specific-entropy table.

use qlimits::counting::{cavity_peak, table1_cases, DEFAULT_CEILING_FACTOR};

#[test]
fn estimate_brackets_numeric_and_bounds_hold() {
    for case in table1_cases() {
        let p = cavity_peak(&case.cavity, DEFAULT_CEILING_FACTOR).unwrap();
        let name = format!("{} {} {}", case.field, case.cavity_name, case.boundary);
        let est = p.zeta4_quarter.unwrap();
        assert!(p.h_over_e_max < est, "{name}: {} !< {est}", p.h_over_e_max);
        assert!(
            est < 1.10 * p.h_over_e_max,
            "{name}: estimate {est} too far above {}",
            p.h_over_e_max
        );
        assert!(p.violations.is_empty(), "{name}: {:?}", p.violations);
        assert!(est < p.rigorous_bound.unwrap(), "{name}");
        assert!(p.h_over_e_max < p.geometric_bound.unwrap(), "{name}");
    }
}

#[test]
fn sphere_rows_match_the_reference_peaks() {
    let reference = [0.454, 0.701, 0.716];
    for (case, want) in table1_cases().into_iter().zip(reference) {
        let p = cavity_peak(&case.cavity, DEFAULT_CEILING_FACTOR).unwrap();
        assert!(
            (p.h_over_e_max / want - 1.0).abs() < 0.02,
            "{}: {}",
            case.boundary,
            p.h_over_e_max
        );
    }
}
