use painleve_convolution::*;
use painleve_core::{rf, Matrix, RatFunc};
use painleve_schlesinger::*;

fn pvi(theta: [&str; 4], lambda: &str, mu: &str, t: &str) -> PVIData {
    PVIData::new(theta.map(rf), rf(lambda), rf(mu), rf(t)).unwrap()
}

fn row_three() -> PVIData {
    pvi(["c-1/2", "a+c-1", "c-1/2", "a+c-1"], "-b", "(-a-2*c+2)/(2*b)", "b^2")
}

fn row_four() -> PVIData {
    pvi(
        ["a-1/2", "3*a-3/2", "a-1/2", "a-1/2"],
        "(-2*b-1)/b^2",
        "-(3*a-2)*b^2*(b+2)/(3*(b+1)^2)",
        "(2*b+1)/(b^4+2*b^3)",
    )
}

fn row_five() -> PVIData {
    pvi(
        ["a-1/2", "1/2", "a-1/2", "a-1/2"],
        "(b^3+b^2+3*b+3)/(b^3+b^2-5*b+3)",
        "(3*a-2)*(b-1)^2*(b+3)/(24*(b+1))",
        "(b^4-6*b^2-8*b-3)/(b^4-6*b^2+8*b-3)",
    )
}

fn row_six() -> PVIData {
    pvi(
        ["a-1/2", "1/3", "a-1/2", "2*a-1"],
        "(-2*b^2-4)/(b^4-6*b^2)",
        "(-3*a+2)*b^2*(b^2+2)*(b^2-6)/(12*(b^2-2)^2)",
        "(-12*b^2+8)/(b^6-6*b^4)",
    )
}

fn convolve(s: &SchlesingerSystem, mu_c: &str) -> ConvolutionResult {
    middle_convolution(s.points(), s.residues(), &rf(mu_c)).unwrap()
}

fn m(rows: [[&str; 2]; 2], scale: &str) -> Matrix {
    Matrix::parse(&[&rows[0], &rows[1]]).unwrap().scale(&rf(scale))
}

fn dihedral() -> SchlesingerSystem {
    let s = build_from_pvi(&row_three()).unwrap();
    let r = convolve(&s, "-c");
    mc_to_schlesinger(&r, &[rf("-c"), rf("c+a-2")]).unwrap()
}

#[test]
fn okubo_matrix_for_row_three() {
    let s = build_from_pvi(&row_three()).unwrap();
    let o = okubo_build(s.points(), s.residues(), &rf("-c")).unwrap();
    let q = s.residues();
    let shift = Matrix::scalar(2, &rf("-c"));
    for i in 0..3 {
        for j in 0..3 {
            let expected = if i == j { &q[j] + &shift } else { q[j].clone() };
            assert_eq!(o.b.block(2 * i, 2 * j, 2, 2), expected);
        }
    }
    let t = ["b^2", "b^2", "0", "0", "1", "1"].map(rf);
    assert_eq!(o.t, Matrix::diag(&t));
    let sub = invariant_subspaces(&o);
    assert_eq!((sub.k.len(), sub.l.len()), (3, 1));
    assert_eq!(sub.l[0], ["0", "1", "0", "1", "0", "1"].map(rf).to_vec());
}

#[test]
fn dihedral_residues() {
    let s = dihedral();
    assert_eq!(s.points(), &[rf("b^2"), rf("0"), rf("1")]);
    let a1 = m([["-a*b-a-2*b*c+b+1", "a*b+a+2*b*c-3*b-1"], ["-a*b-a-2*b*c+b+1", "a*b+a+2*b*c-3*b-1"]], "1/(4*b)");
    let a2 = m([["a*b^2+2*a*b+a-b^2-2*b-1", "a*b^2-a-b^2+1"], ["-a*b^2+a+b^2-1", "-a*b^2+2*a*b-a+b^2-2*b+1"]], "1/(4*b)");
    let a3 = m([["-a*b-a+b-2*c+1", "-a*b-a+b-2*c+3"], ["a*b+a-b+2*c-1", "a*b+a-b+2*c-3"]], "1/4");
    assert_eq!(s.residues(), &[a1, a2, a3]);
    assert_eq!(s.residue_at_infinity(), Matrix::diag(&[rf("c"), rf("-(a+c-2)")]));
}

#[test]
fn dihedral_entries() {
    let a = dihedral().matrix();
    let den = "(4*z*(z-1)*(z-b^2))";
    let expected = [
        ["-4*c*z^2+((1-a+2*c)*(b^2+1)+2*(1-a)*b)*z+(a-1)*(b+1)^2*b", "(b^2-1)*((a+2*c-3)*z+b*(a-1))"],
        ["(b^2-1)*((1-a-2*c)*z+(b-a*b))", "4*(a+c-2)*z^2+((5-3*a-2*c)*(b^2+1)+2*(a-1)*b)*z+(1-a)*(b-1)^2*b"],
    ];
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(a.get(i, j), &rf(&format!("({})/{den}", expected[i][j])), "A{}{}", i + 1, j + 1);
        }
    }
}

#[test]
fn dihedral_parameters_follow_the_law() {
    let d = extract_pvi(&dihedral()).unwrap();
    let src = row_three();
    let (theta, alpha) = mc_parameters(&src.theta, &src.alpha, &rf("-c"));
    assert_eq!(d.theta, theta);
    assert_eq!(d.alpha, alpha);
    assert_eq!(d.theta, ["-1/2", "a-1", "-1/2", "-(a+2*c-3)"].map(rf));
    assert_eq!(d.lambda, rf("(-a+1)/(a+2*c-3)*b"));
    assert_eq!(d.lambda_second, Some(rf("(-a+1)/(a+2*c-1)*b")));
}

#[test]
fn dihedral_relations() {
    let d = extract_pvi(&dihedral()).unwrap();
    let (th2, th4) = (&d.theta[1], &d.theta[3]);
    let lhs = &(&(th4 * th4) * &d.lambda) * &d.lambda;
    assert_eq!(lhs, &(&d.t * th2) * th2);
    let l2 = d.lambda_second.unwrap();
    let s = &rf("2") - th4;
    assert_eq!(&(&(&s * &s) * &l2) * &l2, &(&d.t * th2) * th2);
}

#[test]
fn twisted_dihedral_momentum() {
    let s = dihedral();
    let twisted = scalar_twist(&s, &[(Some(rf("b^2")), rf("1/2")), (Some(rf("1")), rf("1/2"))]).unwrap();
    assert_eq!(twisted.traces(), [rf("1/2"), rf("a-1"), rf("1/2")]);
    assert!(twisted.determinants().iter().all(|d| d.is_zero()));
    assert_eq!(twisted.apparent_point(1).unwrap(), s.apparent_point(1).unwrap());
    let d = extract_pvi(&diagonalize_infinity(&twisted, None).unwrap()).unwrap();
    assert_eq!(d.theta, ["1/2", "a-1", "1/2", "-(a+2*c-3)"].map(rf));
    assert_eq!(d.mu, rf("(-a-2*c+3)/(2*b)"));
}

#[test]
fn dimension_audit() {
    for (s, mu_c) in [(build_from_pvi(&row_three()).unwrap(), "-c"), (build_from_pvi(&row_four()).unwrap(), "-(3*a-2)")] {
        let r = convolve(&s, mu_c);
        assert_eq!((r.dim_k, r.dim_l), (3, 1));
        assert_eq!(r.dimension(), 6 - r.dim_k - r.dim_l);
    }
}

fn row_four_convolved() -> SchlesingerSystem {
    let s = build_from_pvi(&row_four()).unwrap();
    let r = convolve(&s, "-(3*a-2)");
    mc_to_schlesinger(&r, &[rf("-(3*a-2)"), rf("-(a-3/2)")]).unwrap()
}

#[test]
fn row_four_convolution() {
    let s = row_four_convolved();
    assert_eq!(s.residue_at_infinity(), Matrix::diag(&[rf("3*a-2"), rf("a-3/2")]));
    let q11 = [
        "(3*a-2)*(b+(-6*a+2))*(b+2)^2/(9*(4*a-1)*(b+1))",
        "(-3*a+2)*(b^2+(-6*a+4)*b+1)*(b^2+b+1)/(9*(4*a-1)*b^2)",
        "(3*a-2)*((-6*a+2)*b+1)*(2*b+1)^2/(9*(4*a-1)*b^2*(b+1))",
    ];
    let q12 = [
        "(b+2)/((72*a-18)*(b+1))",
        "-(b^2+b+1)/(18*(4*a-1)*b^2)",
        "(2*b+1)/(18*(4*a-1)*b^2*(b+1))",
    ];
    let q21 = [
        "(3*a-2)*((6*a-4)*b^3+(-36*a^2+60*a-24)*b^2+(24*a-21)*b-5)*(-b+(6*a-2))*(b+2)/(9*(4*a-1)*(b+1))",
        "((4-6*a)*b^4+(36*a^2-54*a+20)*b^3+(36*a^2-96*a+33)*b^2+(36*a^2-54*a+20)*b+4-6*a)/(9*(4*a-1)*b^2)*(3*a-2)*(-b^2+(6*a-4)*b-1)",
        "(3*a-2)*(-5*b^3+(24*a-21)*b^2+(-36*a^2+60*a-24)*b+(6*a-4))*((6*a-2)*b-1)*(2*b+1)/(9*(4*a-1)*b^2*(b+1))",
    ];
    let theta = ["-2*a+3/2", "1/2", "-2*a+3/2"];
    let printed: Vec<Matrix> = (0..3)
        .map(|i| {
            let q22 = format!("{} - ({})", theta[i], q11[i]);
            Matrix::from_rows(vec![vec![rf(q11[i]), rf(q12[i])], vec![rf(q21[i]), rf(&q22)]]).unwrap()
        })
        .collect();
    let gauge = s.residue(0).get(0, 1).checked_div(printed[0].get(0, 1)).unwrap().inv().unwrap();
    println!("diagonal gauge: {gauge}");
    assert!(!gauge.contains_var(painleve_core::var_index("z")));
    let gauged = s.diagonal_gauge(&gauge).unwrap();
    assert_eq!(gauged.residues().to_vec(), printed);

    let d = extract_pvi(&s).unwrap();
    let src = row_four();
    assert_eq!(d.theta, mc_parameters(&src.theta, &src.alpha, &rf("-(3*a-2)")).0);
    assert_eq!(d.theta, ["-2*a+3/2", "1/2", "-2*a+3/2", "-2*a+3/2"].map(rf));
    assert_eq!(d.lambda, rf("(b^2+b+1)/(b^3+2*b^2)"));
}

fn quartic(lambda: &RatFunc, t: &RatFunc) -> RatFunc {
    let rel = rf("x^4-2*t*x^3-2*x^3+6*t*x^2-2*t^2*x-2*t*x+t^3-t^2+t");
    rel.subs(&[("x", lambda), ("t", t)]).unwrap()
}

#[test]
fn quartic_relation() {
    let d = extract_pvi(&row_four_convolved()).unwrap();
    assert!(quartic(&d.lambda, &d.t).is_zero());
    let five = row_five();
    assert!(quartic(&five.lambda, &five.t).is_zero());
}

fn three_dimensional(data: PVIData, twist: &str) -> ConvolutionResult {
    let s = build_from_pvi(&data).unwrap();
    let inverted = invert_coordinate(&s).unwrap();
    let twisted = scalar_twist(&inverted, &[(Some(rf("0")), rf(twist))]).unwrap();
    convolve(&twisted, "-(a-1)")
}

fn spectra(r: &ConvolutionResult) -> Vec<Matrix> {
    let mut ms = r.residues.clone();
    ms.push(r.residue_at_infinity());
    ms
}

fn tuples(list: &[&[&str]]) -> Vec<Vec<RatFunc>> {
    list.iter().map(|t| t.iter().map(|e| rf(e)).collect()).collect()
}

#[test]
fn twisted_inversions_have_printed_pairs() {
    for (data, twist, pairs) in [
        (row_five(), "(3*a-2)/2", [["a-1/2", "0"], ["a-3/2", "0"], ["a-1/2", "0"], ["-(3*a-3)/2", "-(3*a-2)/2"]]),
        (row_six(), "2/3", [["a-1/2", "0"], ["-2*a+2", "0"], ["a-1/2", "0"], ["-1/3", "-2/3"]]),
    ] {
        let s = build_from_pvi(&data).unwrap();
        let t = scalar_twist(&invert_coordinate(&s).unwrap(), &[(Some(rf("0")), rf(twist))]).unwrap();
        let mut ms = t.residues().to_vec();
        ms.push(t.residue_at_infinity());
        let cands: Vec<Vec<RatFunc>> = pairs.iter().map(|p| p.iter().map(|e| rf(e)).collect()).collect();
        assert!(residue_spectra(&ms, &cands).unwrap());
    }
}

#[test]
fn three_dimensional_convolutions() {
    let five = three_dimensional(row_five(), "(3*a-2)/2");
    assert_eq!(five.dimension(), 3);
    let expected = tuples(&[
        &["1/2", "0", "0"],
        &["-1/2", "0", "0"],
        &["1/2", "0", "0"],
        &["-(a-1)/2", "-a/2", "a-1"],
    ]);
    assert!(residue_spectra(&spectra(&five), &expected).unwrap());

    let six = three_dimensional(row_six(), "2/3");
    assert_eq!(six.dimension(), 3);
    let expected = tuples(&[
        &["1/2", "0", "0"],
        &["-3*a+3", "0", "0"],
        &["1/2", "0", "0"],
        &["-1/3+a-1", "-2/3+a-1", "a-1"],
    ]);
    assert!(residue_spectra(&spectra(&six), &expected).unwrap());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = RatFunc> {
        (-15i64..15, 1i64..8).prop_map(|(p, q)| rf(&format!("{p}/{q}")))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn specialized_row_three_follows_the_law(a in rational(), c in rational()) {
            let d = row_three();
            let theta = d.theta.clone().map(|x| x.subs(&[("a", &a), ("c", &c)]).unwrap());
            let bad = ["c", "a-1", "a+c-2", "a+2*c-1", "a+2*c-2", "a+2*c-3"]
                .iter()
                .any(|e| rf(e).subs(&[("a", &a), ("c", &c)]).unwrap().is_zero());
            prop_assume!(!bad && theta.iter().all(|x| !x.is_zero()));
            let special = PVIData::new(
                theta,
                d.lambda.clone(),
                d.mu.subs(&[("a", &a), ("c", &c)]).unwrap(),
                d.t.clone(),
            ).unwrap();
            let s = build_from_pvi(&special).unwrap();
            let mu_c = c.neg();
            let r = middle_convolution(s.points(), s.residues(), &mu_c).unwrap();
            prop_assert_eq!(r.dimension(), 2);
            let (theta, alpha) = mc_parameters(&special.theta, &special.alpha, &mu_c);
            let second = &(&alpha + &theta[3]) - &rf("1");
            let out = mc_to_schlesinger(&r, &[alpha.neg(), second.neg()]).unwrap();
            let e = extract_pvi(&out).unwrap();
            prop_assert_eq!(e.theta, theta);
            prop_assert_eq!(e.alpha, alpha);
        }
    }
}
