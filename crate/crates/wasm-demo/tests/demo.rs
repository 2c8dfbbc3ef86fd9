use hyperd::{f_norm, EquationParams, C64};
use hyperd_wasm::{curve_points, relation_list, relation_residuals, theorem_gap_values, value};

#[test]
fn curve_matches_library() {
    let pts = curve_points("0f1", "F", [0.5, 0.0, 0.0, 0.0], C64::new(-2.0, 0.0), C64::new(2.0, 0.0), 9).unwrap();
    assert_eq!(pts.len(), 27);
    let want = f_norm(&EquationParams::f0(0.5), C64::new(1.0, 0.0)).unwrap().value;
    assert_eq!((pts[18], pts[19]), (want.re, want.im));
}

#[test]
fn failed_points_become_gaps() {
    // 𝔇 needs z ≠ 0 at m = 1
    let pts = curve_points("0f1", "D", [1.0, 0.0, 0.0, 0.0], C64::new(-1.0, 0.0), C64::new(1.0, 0.0), 3).unwrap();
    assert!(pts[3].is_nan() && pts[0].is_finite());
    assert!(curve_points("0f1", "Q", [0.0; 4], C64::new(0.1, 0.0), C64::new(1.0, 0.0), 3).is_err());
    assert!(curve_points("3f2", "F", [0.0; 4], C64::new(0.1, 0.0), C64::new(1.0, 0.0), 3).is_err());
}

#[test]
fn theorem_gap_is_small() {
    for (eq, z) in [("0f1", C64::new(0.7, 0.2)), ("1f1", C64::new(1.1, -0.4)), ("2f1", C64::new(-0.4, 0.1))] {
        let g = theorem_gap_values(eq, 1, 0.3, 0.3, 0.2, z).unwrap();
        assert!(g[4] < 1e-6, "{eq}: {g:?}");
    }
}

#[test]
fn relation_explorer() {
    let list = relation_list();
    assert_eq!(list.lines().count(), 62);
    assert!(list.lines().any(|l| l.starts_with("q.sasa3 2f1")));
    let r = relation_residuals("f1.contiguity.theta2", 25).unwrap();
    assert_eq!(r.len(), 75);
    assert!(r.chunks(3).all(|c| c[2] < 1e-8));
    assert!(relation_residuals("nope", 5).is_err());
    assert!(value("2f1", "U", 0.0, 0.0, 0.3, 0.2, C64::new(-0.4, 0.0)).is_ok());
}
