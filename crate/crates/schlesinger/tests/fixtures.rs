use painleve_core::{rf, Matrix, RatFunc};
use painleve_picard_fuchs::FuchsianSystem;
use painleve_schlesinger::*;
use proptest::prelude::*;

fn row_three() -> PVIData {
    PVIData::new(
        [rf("c-1/2"), rf("a+c-1"), rf("c-1/2"), rf("a+c-1")],
        rf("-b"),
        rf("(-a-2*c+2)/(2*b)"),
        rf("b^2"),
    )
    .unwrap()
}

fn row_four() -> PVIData {
    PVIData::new(
        [rf("a-1/2"), rf("3*a-3/2"), rf("a-1/2"), rf("a-1/2")],
        rf("(-2*b-1)/b^2"),
        rf("-(3*a-2)*b^2*(b+2)/(3*(b+1)^2)"),
        rf("(2*b+1)/(b^4+2*b^3)"),
    )
    .unwrap()
}

fn residue(q11: &str, q12: &str, q21: &str, q22: &str) -> Matrix {
    Matrix::from_rows(vec![vec![rf(q11), rf(q12)], vec![rf(q21), rf(q22)]]).unwrap()
}

#[test]
fn row_three_residues() {
    let s = build_from_pvi(&row_three()).unwrap();
    let q11 = [
        "(b*a+a+2*b*c-3*b-1)*(a+2*c-2)/(4*b*(a+c-2))",
        "(-b^2+2*b-1)*(a+2*c-2)*(a-1)/(4*b*(a+c-2))",
        "(b*a+a-b+2*c-3)*(a+2*c-2)/(4*(a+c-2))",
    ];
    let q12 = ["1/(b*(b-1))", "1/b", "-1/(b-1)"];
    let q21 = [
        "(b-1)*(b*a+a-2*b+2*c-2)*(-b*a-a-2*b*c+3*b+1)*(a+2*c-2)*(a-1)/(16*b*(a+c-2)^2)",
        "(b-1)^2*((2-a-2*c)*(a-1)*(b^2+1)+(-2*a^2-4*a*c+6*a-4*c^2+8*c-4)*b)*(a+2*c-2)*(a-1)/(16*b*(a+c-2)^2)",
        "(b-1)*(b*a+a-b+2*c-3)*(b*a+a+2*b*c-2*b-2)*(a+2*c-2)*(a-1)/(16*(a+c-2)^2)",
    ];
    let theta = ["c-1/2", "a+c-1", "c-1/2"];
    for i in 0..3 {
        let q22 = format!("-({}) + {}", q11[i], theta[i]);
        assert_eq!(s.residue(i), &residue(q11[i], q12[i], q21[i], &q22), "Q{}", i + 1);
    }
    assert_eq!(s.residue_at_infinity(), Matrix::diag(&[rf("-(a+2*c-2)"), rf("-c")]));
}

#[test]
fn row_three_second_apparent_point() {
    let d = extract_pvi(&build_from_pvi(&row_three()).unwrap()).unwrap();
    let expected = rf("-b + (-2*a-2*c+4)*(b+1)^2*b/((a-2)*(a+2*c-3)*(b^2+1) + 2*(a^2+2*c*a-5*a+2*c^2-6*c+6)*b)");
    assert_eq!(d.lambda_second, Some(expected));
}

#[test]
fn row_four_residues() {
    let s = build_from_pvi(&row_four()).unwrap();
    let q11 = [
        "(18*a^2*b^2+18*a^2*b+18*a^2-3*a*b^3-30*a*b^2-48*a*b-36*a+2*b^3+12*b^2+24*b+16)/(18*a*b+18*a-27*b-27)",
        "(3*a-2)*(b^2+(-6*a+7)*b+1)*(b-1)^2/(18*a*b^2-27*b^2)",
        "(18*a^2*b^3+18*a^2*b^2+18*a^2*b-36*a*b^3-48*a*b^2-30*a*b-3*a+16*b^3+24*b^2+12*b+2)/(18*a*b^3+18*a*b^2-27*b^3-27*b^2)",
    ];
    let q12 = ["(-b^4-2*b^3)/(b^2-1)", "b^2+2*b", "(b^2+2*b)/(b^2-1)"];
    let theta = ["a-1/2", "3*a-3/2", "a-1/2"];
    for i in 0..3 {
        let q22 = format!("{} - ({})", theta[i], q11[i]);
        let q21 = format!("({}) * ({}) / ({})", q11[i], q22, q12[i]);
        assert_eq!(s.residue(i), &residue(q11[i], q12[i], &q21, &q22), "Q{}", i + 1);
    }
    assert_eq!(s.residue_at_infinity(), Matrix::diag(&[rf("-3*a+2"), rf("-2*a+1/2")]));
}

#[test]
fn residues_have_eigenvalues_zero_and_theta() {
    for d in [row_three(), row_four()] {
        let s = build_from_pvi(&d).unwrap();
        for i in 0..3 {
            assert_eq!(s.traces()[i], d.theta[i]);
            assert!(s.determinants()[i].is_zero());
        }
        let alpha = &d.alpha;
        let second = &(alpha + &d.theta[3]) - &rf("1");
        assert_eq!(s.residue_at_infinity(), Matrix::diag(&[alpha.clone(), second]));
    }
}

#[test]
fn extraction_inverts_construction() {
    for d in [row_three(), row_four()] {
        let s = build_from_pvi(&d).unwrap();
        let back = extract_pvi(&s).unwrap();
        assert_eq!((&back.theta, &back.lambda, &back.mu, &back.t, &back.nu), (&d.theta, &d.lambda, &d.mu, &d.t, &d.nu));
        assert_eq!(build_from_pvi(&back).unwrap(), s);
    }
}

#[test]
fn swap_reflects_theta_four() {
    let s = build_from_pvi(&row_three()).unwrap();
    let d = extract_pvi(&s).unwrap();
    let swapped = extract_pvi(&swap_coordinates(&s)).unwrap();
    assert_eq!(swapped.theta[3], &rf("2") - &d.theta[3]);
    assert_eq!(&swapped.theta[..3], &d.theta[..3]);
    assert_eq!(Some(swapped.lambda), d.lambda_second);
}

#[test]
fn residue_extraction_from_a_matrix() {
    let s = build_from_pvi(&row_three()).unwrap();
    let unnormalized = SchlesingerSystem::new([rf("-b"), rf("0"), rf("-1/b")], s.residues().clone()).unwrap();
    let fuchsian = unnormalized.to_fuchsian().unwrap();
    let back = to_schlesinger(&fuchsian).unwrap();
    assert_eq!(back, unnormalized);
    let normalized = normalize_moebius(&back).unwrap();
    assert_eq!(normalized, s);
    assert_eq!(unnormalized.apparent_point(1).unwrap(), Some(rf("1")));
    assert_eq!(normalized.apparent_point(1).unwrap(), Some(rf("-b")));
}

#[test]
fn double_pole_is_rejected() {
    let m = Matrix::parse(&[&["1/z^2", "0"], &["0", "1/(z-1)"]]).unwrap();
    let sys = FuchsianSystem::new(m, "z", vec![rf("0"), rf("1"), rf("t")]).unwrap();
    assert!(matches!(to_schlesinger(&sys), Err(Error::HigherOrderPole { order: 2, .. })));
    let m = Matrix::parse(&[&["z", "0"], &["0", "1/(z-1)"]]).unwrap();
    let sys = FuchsianSystem::new(m, "z", vec![rf("0"), rf("1"), rf("t")]).unwrap();
    assert_eq!(to_schlesinger(&sys), Err(Error::PolynomialPart));
}

#[test]
fn diagonalization_restores_the_normal_form() {
    let s = build_from_pvi(&row_three()).unwrap();
    let p = Matrix::parse(&[&["1", "2"], &["a", "3"]]).unwrap();
    let mixed = SchlesingerSystem::new(
        s.points().clone(),
        s.residues().clone().map(|q| q.conjugate(&p).unwrap()),
    )
    .unwrap();
    assert!(!mixed.is_normalized());
    let back = diagonalize_infinity(&mixed, Some(&rf("a+c-1"))).unwrap();
    assert!(back.is_normalized());
    let d = extract_pvi(&back).unwrap();
    assert_eq!((d.lambda, d.mu), (rf("-b"), rf("(-a-2*c+2)/(2*b)")));
    assert_eq!(diagonalize_infinity(&mixed, Some(&rf("1"))), Err(Error::ThetaFourIsOne));
}

#[test]
fn json_round_trip() {
    let s = build_from_pvi(&row_four()).unwrap();
    let text = to_json(&s).unwrap();
    let (back, d) = from_json(&text).unwrap();
    assert_eq!(back, s);
    assert_eq!(d.mu, row_four().mu);
    let tampered = text.replace(&row_four().mu.to_string(), "0");
    assert!(from_json(&tampered).is_err());
}

fn small_rational() -> impl Strategy<Value = RatFunc> {
    (-12i64..12, 1i64..6).prop_map(|(n, d)| rf(&format!("{n}/{d}")))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn build_extract_round_trip(
        th in prop::array::uniform4(small_rational()),
        mu in small_rational(),
        k in 2i64..7,
    ) {
        prop_assume!(!th[3].is_one());
        let t = rf(&format!("b^{k}"));
        let lambda = rf("a*b + c");
        let d = PVIData::new(th, lambda, &mu + &rf("b"), t).unwrap();
        let s = build_from_pvi(&d).unwrap();
        for i in 0..3 {
            prop_assert!(s.determinants()[i].is_zero());
        }
        let back = extract_pvi(&s).unwrap();
        prop_assert_eq!(&back.mu, &d.mu);
        prop_assert_eq!(&back.theta, &d.theta);
        prop_assert_eq!(build_from_pvi(&back).unwrap(), s);
    }
}
