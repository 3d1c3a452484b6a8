use qsp4_web::{ladder_json_native, pyramid_text_native, spectrum_json_native};
use serde_json::Value;

#[test]
fn pyramid_matches_core_renderer() {
    let p = pyramid_text_native("triple-max", "even", 4).unwrap();
    assert!(p.contains("|0,3,0>"));
    assert_eq!(p.lines().count(), 6);
    assert!(pyramid_text_native("triple-min", "odd", 3).is_err());
    assert!(pyramid_text_native("pair", "sideways", 3).is_err());
}

#[test]
fn l2_spectrum_at_one() {
    let v: Value = serde_json::from_str(&spectrum_json_native("L2", 6, 1.0).unwrap()).unwrap();
    let rows = v["rows"].as_array().unwrap();
    // nu(nu+2)/2 at q = 1
    for (nu, want) in [(0, 0.0), (2, 4.0), (4, 12.0)] {
        let got = rows[nu]["value"].as_f64().unwrap();
        assert!((got - want).abs() < 1e-12, "nu={nu}: {got}");
    }
}

#[test]
fn series_table_by_name() {
    let v: Value = serde_json::from_str(&spectrum_json_native("alpha+even", 8, 0.7).unwrap()).unwrap();
    assert_eq!(v["rows"][0]["label"], "1/4");
    assert!(spectrum_json_native("nope", 8, 0.7).is_err());
    assert!(spectrum_json_native("L2", 40, 0.7).is_err());
}

#[test]
fn ladder_walk_ends_at_factorial() {
    // (L_-1)^2 |2,0> = [2]! |0,2>: normalized amplitude [2] at the end.
    let v: Value = serde_json::from_str(&ladder_json_native(2, 0, -1, 1.3).unwrap()).unwrap();
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 3);
    assert_eq!(steps[2]["state"], serde_json::json!([0, 2]));
    let two = 1.3 + 1.0 / 1.3;
    assert!((steps[2]["amplitude"].as_f64().unwrap() - two).abs() < 1e-12);
    assert!(ladder_json_native(0, 0, 1, 1.0).is_err());
}
